//! The ring of symmetric functions as polynomials in the complete
//! homogeneous generators `h_1, h_2, …`, the three determinantal Schur
//! families, and the structure constants relating them.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::characters::{power_character, PowerKind};
use crate::error::{Error, Result};
use crate::group::GroupId;
use crate::laurent::LaurentPolynomial;
use crate::matrix::{determinant, RingElement};
use crate::partition::{partitions_of, Partition};

/// A monomial in the `h_r`, stored as its weakly decreasing index list.
pub type HMonomial = SmallVec<[u32; 8]>;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct HPolynomial {
    terms: BTreeMap<HMonomial, BigInt>,
}

impl HPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut out = Self::zero();
        out.add_term(HMonomial::new(), c.into());
        out
    }

    /// `h_r`, with `h_0 = 1` and `h_r = 0` for `r < 0`.
    pub fn h(r: i64) -> Self {
        match r {
            _ if r < 0 => Self::zero(),
            0 => Self::one(),
            _ => {
                let mut out = Self::zero();
                out.add_term(HMonomial::from_slice(&[r as u32]), BigInt::one());
                out
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&HMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, indices: &[u32]) -> BigInt {
        let mut key = HMonomial::from_slice(indices);
        key.sort_unstable_by(|a, b| b.cmp(a));
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, m: HMonomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    /// Divides every coefficient by two, failing if one is odd.
    fn halve(&self) -> Result<Self> {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            if !(v % 2u32).is_zero() {
                return Err(Error::Internal("symplectic Schur determinant is not even".into()));
            }
            out.add_term(m.clone(), v / 2u32);
        }
        Ok(out)
    }

    /// Image under `h_r ↦ H_r`, the character of `S^r(V)` of `g`.
    pub fn specialize(&self, g: GroupId) -> Result<LaurentPolynomial> {
        let n = g.nvars();
        let mut products: HashMap<HMonomial, LaurentPolynomial> = HashMap::new();
        products.insert(HMonomial::new(), LaurentPolynomial::one(n));
        let mut out = LaurentPolynomial::zero(n);
        for (m, c) in &self.terms {
            let value = monomial_value(m, g, &mut products)?;
            out = &out + &value.scale(c);
        }
        Ok(out)
    }
}

// Products of H_r, reusing shorter prefixes.
fn monomial_value(
    m: &[u32],
    g: GroupId,
    cache: &mut HashMap<HMonomial, LaurentPolynomial>,
) -> Result<LaurentPolynomial> {
    if let Some(v) = cache.get(m) {
        return Ok(v.clone());
    }
    let (last, prefix) = m.split_last().expect("empty monomial is cached");
    let value = &monomial_value(prefix, g, cache)? * &power_character(g, PowerKind::Sym, *last)?;
    cache.insert(HMonomial::from_slice(m), value.clone());
    Ok(value)
}

impl RingElement for HPolynomial {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
    fn sub_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut m: HMonomial = ma.iter().chain(mb.iter()).copied().collect();
                m.sort_unstable_by(|a, b| b.cmp(a));
                out.add_term(m, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for HPolynomial {
    /// Highest degree first, then more factors first, e.g.
    /// `h2^2 - h3*h1 - h1^2 + h2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.len().cmp(&a.0.len())).then_with(|| a.0.cmp(b.0))
        });
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            let mut i = 0;
            while i < m.len() {
                let run = m[i..].iter().take_while(|&&x| x == m[i]).count();
                factors.push(if run == 1 { format!("h{}", m[i]) } else { format!("h{}^{}", m[i], run) });
                i += run;
            }
            let mag = c.abs();
            match (factors.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{}", factors.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", factors.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HPolynomial({self})")
    }
}

fn schur_determinant(label: &Partition, entry: impl Fn(i64, i64) -> HPolynomial) -> HPolynomial {
    let l = label.len();
    let matrix: Vec<Vec<HPolynomial>> = (1..=l as i64)
        .map(|i| (1..=l as i64).map(|j| entry(label.part(i as usize - 1) as i64 - i, j)).collect())
        .collect();
    determinant(&matrix, &HPolynomial::one()).expect("square by construction")
}

/// `s_λ = det(h_{λ_i - i + j})`.
pub fn h_jacobi_trudi(label: &Partition) -> HPolynomial {
    schur_determinant(label, |a, j| HPolynomial::h(a + j))
}

/// The universal symplectic Schur function
/// `s_⟨λ⟩ = ½ det(h_{λ_i - i + j} + h_{λ_i - i - j + 2})`.
pub fn sp_schur_h(label: &Partition) -> Result<HPolynomial> {
    if label.is_empty() {
        return Ok(HPolynomial::one());
    }
    schur_determinant(label, |a, j| HPolynomial::h(a + j).add_ref(&HPolynomial::h(a - j + 2))).halve()
}

/// The universal orthogonal Schur function
/// `s_[λ] = det(h_{λ_i - i + j} - h_{λ_i - i - j})`.
pub fn o_schur_h(label: &Partition) -> HPolynomial {
    schur_determinant(label, |a, j| HPolynomial::h(a + j).sub_ref(&HPolynomial::h(a - j)))
}

thread_local! {
    static LR: RefCell<HashMap<(Partition, Partition, Partition), u64>> = RefCell::new(HashMap::new());
    static NL: RefCell<HashMap<(Partition, Partition, Partition), u64>> = RefCell::new(HashMap::new());
}

/// The Littlewood–Richardson coefficient `c^λ_{μν}`: the number of
/// semistandard fillings of `λ/μ` with content `ν` whose reverse reading
/// word is a lattice word.
pub fn lr_coefficient(mu: &Partition, nu: &Partition, lambda: &Partition) -> u64 {
    if mu.size() + nu.size() != lambda.size() || !mu.is_contained_in(lambda) || !nu.is_contained_in(lambda) {
        return 0;
    }
    if nu.is_empty() {
        return u64::from(mu == lambda);
    }
    let key = (mu.clone(), nu.clone(), lambda.clone());
    if let Some(v) = LR.with(|c| c.borrow().get(&key).copied()) {
        return v;
    }
    let v = count_lr_fillings(mu, nu, lambda);
    LR.with(|c| c.borrow_mut().insert(key, v));
    v
}

struct Filling<'a> {
    mu: &'a Partition,
    lambda: &'a Partition,
    content: &'a [u32],
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<u32>>,
    used: Vec<u32>,
}

fn count_lr_fillings(mu: &Partition, nu: &Partition, lambda: &Partition) -> u64 {
    // reading order: rows top to bottom, each row right to left
    let cells = (0..lambda.len())
        .flat_map(|r| (mu.part(r) as usize..lambda.part(r) as usize).rev().map(move |c| (r, c)))
        .collect();
    let mut state = Filling {
        mu,
        lambda,
        content: nu.parts(),
        cells,
        grid: (0..lambda.len()).map(|r| vec![0; lambda.part(r) as usize]).collect(),
        used: vec![0; nu.len()],
    };
    state.count(0)
}

impl Filling<'_> {
    fn count(&mut self, idx: usize) -> u64 {
        if idx == self.cells.len() {
            return 1;
        }
        let (r, c) = self.cells[idx];
        // letters are 1-based; rows weakly increase, columns strictly increase
        let hi = if c + 1 < self.lambda.part(r) as usize { self.grid[r][c + 1] } else { self.content.len() as u32 };
        let lo = if r > 0 && c >= self.mu.part(r - 1) as usize { self.grid[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for letter in lo..=hi {
            let k = letter as usize - 1;
            if self.used[k] == self.content[k] || (k > 0 && self.used[k] == self.used[k - 1]) {
                continue;
            }
            self.used[k] += 1;
            self.grid[r][c] = letter;
            total += self.count(idx + 1);
            self.used[k] -= 1;
        }
        self.grid[r][c] = 0;
        total
    }
}

/// Partitions `ξ ⊆ outer` of the given size.
fn sub_partitions(outer: &Partition, size: u32) -> impl Iterator<Item = Partition> + '_ {
    partitions_of(size).into_iter().filter(move |p| p.is_contained_in(outer))
}

/// The Newell–Littlewood coefficient
/// `Σ_{τ,ξ,η} c^μ_{τξ} c^ν_{τη} c^λ_{ξη}`.
pub fn nl_coefficient(mu: &Partition, nu: &Partition, lambda: &Partition) -> u64 {
    let total = mu.size() + nu.size();
    if lambda.size() > total || (total - lambda.size()) % 2 == 1 {
        return 0;
    }
    let key = (mu.clone(), nu.clone(), lambda.clone());
    if let Some(v) = NL.with(|c| c.borrow().get(&key).copied()) {
        return v;
    }
    let tau_size = (total - lambda.size()) / 2;
    let mut sum = 0;
    if tau_size <= mu.size().min(nu.size()) {
        for tau in partitions_of(tau_size) {
            if !tau.is_contained_in(mu) || !tau.is_contained_in(nu) {
                continue;
            }
            for xi in sub_partitions(mu, mu.size() - tau_size) {
                let a = lr_coefficient(&tau, &xi, mu);
                if a == 0 {
                    continue;
                }
                for eta in sub_partitions(nu, nu.size() - tau_size) {
                    let b = lr_coefficient(&tau, &eta, nu);
                    if b == 0 {
                        continue;
                    }
                    sum += a * b * lr_coefficient(&xi, &eta, lambda);
                }
            }
        }
    }
    NL.with(|c| c.borrow_mut().insert(key, sum));
    sum
}

/// Branching family for [`branching_coefficient`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BranchingKind {
    /// `κ` ranges over partitions with all columns of even length.
    Sp,
    /// `κ` ranges over partitions with all rows of even length.
    O,
}

/// `Σ_κ c^λ_{κμ}` over the even partitions `κ` of size `|λ| - |μ|`: the
/// multiplicity of `s_⟨μ⟩` (resp. `s_[μ]`) in `s_λ`.
pub fn branching_coefficient(kind: BranchingKind, lambda: &Partition, mu: &Partition) -> u64 {
    if mu.size() > lambda.size() || !mu.is_contained_in(lambda) {
        return 0;
    }
    sub_partitions(lambda, lambda.size() - mu.size())
        .filter(|kappa| match kind {
            BranchingKind::Sp => kappa.conjugate().parts().iter().all(|p| p % 2 == 0),
            BranchingKind::O => kappa.parts().iter().all(|p| p % 2 == 0),
        })
        .map(|kappa| lr_coefficient(&kappa, mu, lambda))
        .sum()
}
