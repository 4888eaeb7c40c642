//! Sparse Laurent polynomials with unbounded integer coefficients.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors, so iteration is in
//! lexicographic exponent order and the leading term is the last entry.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::matrix::{self, RingElement};

pub type Exponent = SmallVec<[i32; 6]>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    nvars: usize,
    terms: BTreeMap<Exponent, BigInt>,
}

/// Arithmetic selector for [`lp_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// How exponent vectors are compared when looking for the dominant term.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DominanceMode {
    /// Sort entries decreasingly, then compare by total degree and lex.
    Plain,
    /// As `Plain`, but the last sorted entry is replaced by its absolute
    /// value first (even orthogonal groups).
    TypeD,
}

impl LaurentPolynomial {
    pub fn zero(nvars: usize) -> Self {
        LaurentPolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(Exponent::from_elem(0, nvars), c)
    }

    pub fn monomial(exponent: impl Into<Exponent>, c: impl Into<BigInt>) -> Self {
        let exponent = exponent.into();
        let mut p = Self::zero(exponent.len());
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(exponent, c);
        }
        p
    }

    /// `x_i` (zero-based index).
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = Exponent::from_elem(0, nvars);
        e[i] = 1;
        Self::monomial(e, 1)
    }

    /// Collects terms, merging repeated exponents and dropping zeros.
    pub fn from_terms<I, E, C>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (E, C)>,
        E: Into<Exponent>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            let e = e.into();
            if e.len() != nvars {
                return Err(Error::VariableMismatch(nvars, e.len()));
            }
            p.add_term(e, c.into());
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponent: &[i32]) -> BigInt {
        self.terms.get(exponent).cloned().unwrap_or_default()
    }

    /// Leading term in lexicographic exponent order.
    pub fn leading_term(&self) -> Option<(&Exponent, &BigInt)> {
        self.terms.last_key_value()
    }

    fn add_term(&mut self, e: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            Err(Error::VariableMismatch(self.nvars, other.nvars))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let mut acc: HashMap<Exponent, BigInt> = HashMap::with_capacity(self.len() * other.len() / 2 + 1);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponent = ea.iter().zip(eb.iter()).map(|(a, b)| a + b).collect();
                let prod = ca * cb;
                match acc.get_mut(&e) {
                    Some(c) => *c += prod,
                    None => {
                        acc.insert(e, prod);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(LaurentPolynomial { nvars: self.nvars, terms })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect();
        LaurentPolynomial { nvars: self.nvars, terms }
    }

    /// Multiplies by `c · x^e`.
    pub fn mul_monomial(&self, e: &[i32], c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| (k.iter().zip(e).map(|(a, b)| a + b).collect(), v * c))
            .collect();
        LaurentPolynomial { nvars: self.nvars, terms }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Value at `x_1 = … = x_n = 1`.
    pub fn value_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Applies `f` to every exponent vector, merging collisions.
    pub fn map_exponents(&self, nvars: usize, mut f: impl FnMut(&[i32]) -> Exponent) -> Self {
        let mut out = Self::zero(nvars);
        for (e, c) in &self.terms {
            let image = f(e);
            debug_assert_eq!(image.len(), nvars);
            out.add_term(image, c.clone());
        }
        out
    }

    /// Exact quotient `self / den` in the Laurent ring.
    ///
    /// Runs the division algorithm in lexicographic order. Every quotient
    /// exponent must lie in the box spanned by the per-variable degree
    /// ranges of numerator and denominator; leaving that box, or a
    /// coefficient that does not divide, means the division is inexact.
    pub fn exact_divide(&self, den: &Self) -> Result<Self> {
        self.check_vars(den)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let (num_lo, num_hi) = self.degree_box();
        let (den_lo, den_hi) = den.degree_box();
        let lo: Vec<i32> = num_lo.iter().zip(&den_lo).map(|(a, b)| a - b).collect();
        let hi: Vec<i32> = num_hi.iter().zip(&den_hi).map(|(a, b)| a - b).collect();
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return Err(Error::InexactDivision);
        }
        let (den_lead_e, den_lead_c) = den.leading_term().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quotient = Self::zero(self.nvars);
        while let Some((e, c)) = rem.leading_term() {
            let qe: Exponent = e.iter().zip(&den_lead_e).map(|(a, b)| a - b).collect();
            if qe.iter().zip(lo.iter().zip(&hi)).any(|(q, (l, h))| q < l || q > h) {
                return Err(Error::InexactDivision);
            }
            if !(c % &den_lead_c).is_zero() {
                return Err(Error::InexactDivision);
            }
            let qc = c / &den_lead_c;
            for (de, dc) in &den.terms {
                let shifted: Exponent = de.iter().zip(&qe).map(|(a, b)| a + b).collect();
                rem.add_term(shifted, -(dc * &qc));
            }
            quotient.add_term(qe, qc);
        }
        Ok(quotient)
    }

    /// Per-variable minimum and maximum exponents.
    fn degree_box(&self) -> (Vec<i32>, Vec<i32>) {
        let mut lo = vec![i32::MAX; self.nvars];
        let mut hi = vec![i32::MIN; self.nvars];
        for e in self.terms.keys() {
            for (i, &x) in e.iter().enumerate() {
                lo[i] = lo[i].min(x);
                hi[i] = hi[i].max(x);
            }
        }
        (lo, hi)
    }

    /// Composition `self(args_1, …, args_M)`. `self` must have nonnegative
    /// exponents; all arguments must share one variable count.
    pub fn substitute(&self, args: &[LaurentPolynomial]) -> Result<Self> {
        if args.len() != self.nvars {
            return Err(Error::ArityMismatch { expected: self.nvars, found: args.len() });
        }
        let target = args.first().map_or(0, |a| a.nvars);
        if let Some(bad) = args.iter().find(|a| a.nvars != target) {
            return Err(Error::VariableMismatch(target, bad.nvars));
        }
        if self.terms.keys().any(|e| e.iter().any(|&x| x < 0)) {
            return Err(Error::InvalidParameters("substitution needs nonnegative exponents".into()));
        }
        let mut powers: Vec<Vec<LaurentPolynomial>> = args.iter().map(|a| vec![Self::one(a.nvars)]).collect();
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                let k = k as usize;
                while powers[i].len() <= k {
                    let next = powers[i].last().unwrap() * &args[i];
                    powers[i].push(next);
                }
                if k > 0 {
                    term = &term * &powers[i][k];
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// The term whose exponent is largest after sorting it decreasingly
    /// (and, in [`DominanceMode::TypeD`], taking the absolute value of the
    /// last sorted entry), compared by total degree and then
    /// lexicographically. Ties go to the lexicographically largest original
    /// exponent.
    pub fn dominant_term(&self, mode: DominanceMode) -> Option<(Exponent, BigInt)> {
        let key = |e: &Exponent| {
            let mut sorted = e.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            if mode == DominanceMode::TypeD {
                if let Some(last) = sorted.last_mut() {
                    *last = last.abs();
                }
            }
            let degree: i64 = sorted.iter().map(|&x| x as i64).sum();
            (degree, sorted)
        };
        self.terms
            .iter()
            .map(|(e, c)| (key(e), e, c))
            .max_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(b.1)))
            .map(|(_, e, c)| (e.clone(), c.clone()))
    }

    /// Swaps variables according to `perm` (new variable `i` is old
    /// variable `perm[i]`).
    pub fn permute_variables(&self, perm: &[usize]) -> Self {
        self.map_exponents(self.nvars, |e| perm.iter().map(|&p| e[p]).collect())
    }

    /// Replaces `x_i` by `x_i^{-1}`.
    pub fn invert_variable(&self, i: usize) -> Self {
        self.map_exponents(self.nvars, |e| {
            let mut e: Exponent = e.into();
            e[i] = -e[i];
            e
        })
    }
}

/// `a op b` for the ring operations.
pub fn lp_arith(a: &LaurentPolynomial, b: &LaurentPolynomial, op: ArithOp) -> Result<LaurentPolynomial> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
    }
}

/// Determinant of a square matrix of Laurent polynomials in `nvars`
/// variables.
pub fn lp_determinant(nvars: usize, matrix: &[Vec<LaurentPolynomial>]) -> Result<LaurentPolynomial> {
    if let Some(bad) = matrix.iter().flatten().find(|p| p.nvars != nvars) {
        return Err(Error::VariableMismatch(nvars, bad.nvars));
    }
    matrix::determinant(matrix, &LaurentPolynomial::one(nvars))
}

impl RingElement for LaurentPolynomial {
    fn zero_like(&self) -> Self {
        Self::zero(self.nvars)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

// The operator impls panic on a variable-count mismatch; use the `try_*`
// methods when the operands come from unchecked input.
impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: Self) -> LaurentPolynomial {
        self.try_add(rhs).expect("variable count mismatch")
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: Self) -> LaurentPolynomial {
        self.try_sub(rhs).expect("variable count mismatch")
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: Self) -> LaurentPolynomial {
        self.try_mul(rhs).expect("variable count mismatch")
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        LaurentPolynomial { nvars: self.nvars, terms }
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Renders as `3*x1^2*x2^-1 - x1 + 2`, highest exponent first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, &x)| if x == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, x) })
                .collect();
            if factors.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{magnitude}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial[{}]({self})", self.nvars)
    }
}
