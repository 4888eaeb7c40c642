//! Characters of `GL_N`, `Sp_2n`, `SO_{2n+1}` and `SO_2n` as Laurent
//! polynomials in the torus variables, and the inverse operation of writing
//! a symmetric Laurent polynomial in the character basis.
//!
//! Irreducible characters are Weyl determinant ratios. For `SO_{2n+1}` the
//! half-integer exponents are avoided by working in `y = x^{1/2}` and halving
//! at the end. For `SO_2n` with `l(λ) = n` the character computed is the sum
//! of the two irreducibles labelled `λ` and its sign flip; this is the basis
//! used throughout for that family.
//!
//! Results are cached per thread.

use std::cell::RefCell;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::group::{Family, GroupId, RepRingElement};
use crate::laurent::{lp_determinant, DominanceMode, Exponent, LaurentPolynomial};
use crate::partition::{enumerate_partitions, Constraint, Partition};

/// Root system selector for the one-variable entries of the Weyl matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootType {
    B,
    C,
    D,
}

/// Which representation to tensor with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum PowerKind {
    /// `S^r(V)`
    Sym,
    /// `∧^r(V)`
    Ext,
    /// The irreducible labelled by the one-row partition `(r)`.
    Row,
}

thread_local! {
    static IRREDUCIBLES: RefCell<HashMap<(GroupId, Partition), LaurentPolynomial>> = RefCell::new(HashMap::new());
    static POWERS: RefCell<HashMap<(GroupId, PowerKind, u32), LaurentPolynomial>> = RefCell::new(HashMap::new());
    static RESTRICTED: RefCell<HashMap<(GroupId, Partition), LaurentPolynomial>> = RefCell::new(HashMap::new());
}

/// The entry `f_r` in one variable. Type B uses the doubled variable, so
/// `f^B_r = y^{2r+1} - y^{-2r-1}`.
pub fn f_poly(kind: RootType, r: i64) -> LaurentPolynomial {
    f_in_variable(kind, r, 1, 0)
}

fn f_in_variable(kind: RootType, r: i64, nvars: usize, var: usize) -> LaurentPolynomial {
    let mono = |e: i64| {
        let mut exp = Exponent::from_elem(0, nvars);
        exp[var] = e as i32;
        LaurentPolynomial::monomial(exp, 1)
    };
    if r < 0 {
        return LaurentPolynomial::zero(nvars);
    }
    match kind {
        RootType::C => &mono(r + 1) - &mono(-r - 1),
        RootType::B => &mono(2 * r + 1) - &mono(-2 * r - 1),
        RootType::D if r == 0 => LaurentPolynomial::one(nvars),
        RootType::D => &mono(r) + &mono(-r),
    }
}

/// The torus eigenvalues of the defining representation.
pub fn eigenvalues(g: GroupId) -> Result<Vec<LaurentPolynomial>> {
    let n = g.nvars();
    let var = |i| LaurentPolynomial::variable(n, i);
    let inv = |i| {
        let mut e = Exponent::from_elem(0, n);
        e[i] = -1;
        LaurentPolynomial::monomial(e, 1)
    };
    match g.family {
        Family::GL => Ok((0..n).map(var).collect()),
        Family::Sp | Family::SOeven => Ok((0..n).map(var).chain((0..n).map(inv)).collect()),
        Family::SOodd => {
            let mut v: Vec<_> = (0..n).map(var).chain((0..n).map(inv)).collect();
            v.push(LaurentPolynomial::one(n));
            Ok(v)
        }
        Family::O => Err(Error::Unsupported("O_N is disconnected and has no torus character model".into())),
    }
}

/// The irreducible character `S_⟨λ⟩`, `S_[λ]` or `s_λ` of a connected group.
pub fn irreducible_character(g: GroupId, label: &Partition) -> Result<LaurentPolynomial> {
    if !g.is_connected() {
        return Err(Error::Unsupported(format!("no torus characters for {g}")));
    }
    g.check_label(label)?;
    let key = (g, label.clone());
    if let Some(hit) = IRREDUCIBLES.with(|c| c.borrow().get(&key).cloned()) {
        return Ok(hit);
    }
    let value = compute_irreducible(g, label)?;
    IRREDUCIBLES.with(|c| c.borrow_mut().insert(key, value.clone()));
    Ok(value)
}

fn compute_irreducible(g: GroupId, label: &Partition) -> Result<LaurentPolynomial> {
    let n = g.nvars();
    if g.family == Family::GL {
        let matrix = |shift: &dyn Fn(usize) -> i64| -> Vec<Vec<LaurentPolynomial>> {
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let mut e = Exponent::from_elem(0, n);
                            e[i] = shift(j) as i32;
                            LaurentPolynomial::monomial(e, 1)
                        })
                        .collect()
                })
                .collect()
        };
        let num = lp_determinant(n, &matrix(&|j| label.part(j) as i64 + (n - 1 - j) as i64))?;
        let den = lp_determinant(n, &matrix(&|j| (n - 1 - j) as i64))?;
        return num.exact_divide(&den).map_err(|e| Error::Internal(format!("bialternant for {label}: {e}")));
    }
    let kind = match g.family {
        Family::Sp => RootType::C,
        Family::SOodd => RootType::B,
        _ => RootType::D,
    };
    let weyl_matrix = |lab: &Partition| -> Vec<Vec<LaurentPolynomial>> {
        (0..n)
            .map(|i| (0..n).map(|j| f_in_variable(kind, lab.part(j) as i64 + (n - 1 - j) as i64, n, i)).collect())
            .collect()
    };
    let num = lp_determinant(n, &weyl_matrix(label))?;
    let den = lp_determinant(n, &weyl_matrix(&Partition::empty()))?;
    let ratio = num.exact_divide(&den).map_err(|e| Error::Internal(format!("Weyl ratio for {label} on {g}: {e}")))?;
    if kind != RootType::B {
        return Ok(ratio);
    }
    if ratio.terms().any(|(e, _)| e.iter().any(|x| x % 2 != 0)) {
        return Err(Error::Internal(format!("odd exponent in the type B ratio for {label}")));
    }
    Ok(ratio.map_exponents(n, |e| e.iter().map(|x| x / 2).collect()))
}

/// `H_r` (symmetric power), `E_r` (exterior power) or the one-row
/// irreducible, as a character of a connected group.
pub fn power_character(g: GroupId, kind: PowerKind, r: u32) -> Result<LaurentPolynomial> {
    if kind == PowerKind::Row {
        return irreducible_character(g, &Partition::row(r));
    }
    let key = (g, kind, r);
    if let Some(hit) = POWERS.with(|c| c.borrow().get(&key).cloned()) {
        return Ok(hit);
    }
    let eigs = eigenvalues(g)?;
    let n = g.nvars();
    let r = r as usize;
    // table[k] holds h_k (or e_k) of the eigenvalues processed so far
    let mut table = vec![LaurentPolynomial::zero(n); r + 1];
    table[0] = LaurentPolynomial::one(n);
    for e in &eigs {
        if kind == PowerKind::Sym {
            for k in 1..=r {
                table[k] = &table[k] + &(e * &table[k - 1]);
            }
        } else {
            for k in (1..=r).rev() {
                table[k] = &table[k] + &(e * &table[k - 1]);
            }
        }
    }
    let value = table.swap_remove(r);
    POWERS.with(|c| c.borrow_mut().insert(key, value.clone()));
    Ok(value)
}

/// The character of a representation-ring element of a connected group.
pub fn character_of(elem: &RepRingElement) -> Result<LaurentPolynomial> {
    let g = elem.group();
    let mut out = LaurentPolynomial::zero(g.nvars());
    for (label, c) in elem.terms() {
        out = &out + &irreducible_character(g, label)?.scale(c);
    }
    Ok(out)
}

/// Writes `p` as an integer combination of the basis characters of `g` by
/// repeatedly subtracting the character attached to the dominant term.
pub fn decompose_character(g: GroupId, p: &LaurentPolynomial) -> Result<RepRingElement> {
    if !g.is_connected() {
        return Err(Error::Unsupported(format!("no torus characters for {g}")));
    }
    let n = g.nvars();
    if p.nvars() != n {
        return Err(Error::VariableMismatch(n, p.nvars()));
    }
    let mode = if g.family == Family::SOeven { DominanceMode::TypeD } else { DominanceMode::Plain };
    let mut out = RepRingElement::zero(g);
    let mut rest = p.clone();
    // Each subtraction strictly lowers the dominant key, and keys that are
    // subtracted are labels of bounded size, so this many steps suffice.
    let max_degree: i64 = p.terms().map(|(e, _)| e.iter().map(|&x| x.abs() as i64).sum::<i64>()).max().unwrap_or(0);
    let cap = enumerate_partitions(max_degree as u32, Constraint::MaxLength(n as u32)).count() + 1;
    for _ in 0..cap {
        let Some((exp, c)) = rest.dominant_term(mode) else {
            return Ok(out);
        };
        let entries: Option<Vec<u32>> = exp.iter().map(|&x| x.to_u32()).collect();
        let label = entries
            .filter(|v| v.windows(2).all(|w| w[0] >= w[1]))
            .and_then(|v| Partition::new(v).ok())
            .ok_or_else(|| Error::NotInSpan(format!("dominant term x^{exp:?} is not a partition label")))?;
        let chi = irreducible_character(g, &label)?;
        rest = &rest - &chi.scale(&c);
        out.add_term(label, c)?;
    }
    if rest.is_zero() {
        Ok(out)
    } else {
        Err(Error::NotInSpan(format!("no termination after {cap} subtractions")))
    }
}

/// `s_λ` of `GL_M` evaluated on the eigenvalues of `g`, where `M` is the
/// dimension of the defining representation of `g`.
pub fn restrict_gl_character(label: &Partition, g: GroupId) -> Result<LaurentPolynomial> {
    let eigs = eigenvalues(g)?;
    let m = eigs.len() as u32;
    if label.len() > m as usize {
        return Err(Error::LabelOutOfRange { label: label.clone(), group: GroupId::gl(m).to_string() });
    }
    let key = (g, label.clone());
    if let Some(hit) = RESTRICTED.with(|c| c.borrow().get(&key).cloned()) {
        return Ok(hit);
    }
    let value = irreducible_character(GroupId::gl(m), label)?.substitute(&eigs)?;
    RESTRICTED.with(|c| c.borrow_mut().insert(key, value.clone()));
    Ok(value)
}

/// The label of the restriction of `V_[λ]` from `O_N` to `SO_N` in the
/// basis used here: `λ` itself when it is short enough, else `λ^♯`.
pub fn o_label_on_so(label: &Partition, big_n: u32) -> Result<Partition> {
    if label.len() <= (big_n / 2) as usize {
        Ok(label.clone())
    } else {
        label.sharp(big_n)
    }
}

/// Dimension of a virtual representation.
pub fn dimension(elem: &RepRingElement) -> Result<BigInt> {
    let g = elem.group();
    let mut total = BigInt::zero();
    for (label, c) in elem.terms() {
        let dim = match g.family {
            Family::O if g.rank == 1 => BigInt::from(1),
            Family::O => {
                let so = GroupId::so(g.rank)?;
                irreducible_character(so, &o_label_on_so(label, g.rank)?)?.value_at_one()
            }
            _ => irreducible_character(g, label)?.value_at_one(),
        };
        total += dim * c;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn poly(nvars: usize, terms: &[(&[i32], i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(nvars, terms.iter().map(|&(e, c)| (e.to_vec(), c))).unwrap()
    }

    fn elem(g: GroupId, terms: &[(&str, i64)]) -> RepRingElement {
        let mut e = RepRingElement::zero(g);
        for &(l, c) in terms {
            e.add_term(p(l), c).unwrap();
        }
        e
    }

    #[test]
    fn f_examples() {
        assert_eq!(f_poly(RootType::C, 0), poly(1, &[(&[1], 1), (&[-1], -1)]));
        assert_eq!(f_poly(RootType::D, 0), LaurentPolynomial::one(1));
        assert!(f_poly(RootType::C, -3).is_zero());
        assert_eq!(f_poly(RootType::B, 1), poly(1, &[(&[3], 1), (&[-3], -1)]));
    }

    #[test]
    fn character_examples() {
        let x = |e: i32| (vec![e], 1i64);
        let sp1 = irreducible_character(GroupId::sp(1), &p("[1]")).unwrap();
        assert_eq!(sp1, LaurentPolynomial::from_terms(1, [x(1), x(-1)]).unwrap());
        let so3 = irreducible_character(GroupId::so_odd(1), &p("[1]")).unwrap();
        assert_eq!(so3, LaurentPolynomial::from_terms(1, [x(1), x(0), x(-1)]).unwrap());
        let sp4 = irreducible_character(GroupId::sp(2), &p("[1,1]")).unwrap();
        let expected = poly(2, &[(&[1, 1], 1), (&[1, -1], 1), (&[-1, 1], 1), (&[-1, -1], 1), (&[0, 0], 1)]);
        assert_eq!(sp4, expected);
        assert_eq!(sp4.value_at_one(), BigInt::from(5));
        assert!(irreducible_character(GroupId::sp(1), &p("[1,1]")).is_err());
        assert!(irreducible_character(GroupId::o(3), &p("[1]")).is_err());
    }

    #[test]
    fn gl_characters_are_schur_polynomials() {
        // s_(2,1)(x1,x2) = x1^2 x2 + x1 x2^2
        let s = irreducible_character(GroupId::gl(2), &p("[2,1]")).unwrap();
        assert_eq!(s, poly(2, &[(&[2, 1], 1), (&[1, 2], 1)]));
        assert_eq!(irreducible_character(GroupId::gl(3), &p("[2,1]")).unwrap().value_at_one(), BigInt::from(8));
    }

    #[test]
    fn power_examples() {
        let sp1 = GroupId::sp(1);
        assert_eq!(power_character(sp1, PowerKind::Ext, 2).unwrap(), LaurentPolynomial::one(1));
        assert_eq!(
            power_character(GroupId::so_odd(1), PowerKind::Ext, 1).unwrap(),
            poly(1, &[(&[1], 1), (&[0], 1), (&[-1], 1)])
        );
        assert_eq!(power_character(sp1, PowerKind::Sym, 2).unwrap(), poly(1, &[(&[2], 1), (&[0], 1), (&[-2], 1)]));
        assert!(power_character(sp1, PowerKind::Ext, 3).unwrap().is_zero());
    }

    #[test]
    fn decompose_examples() {
        let sp1 = GroupId::sp(1);
        let v = irreducible_character(sp1, &p("[1]")).unwrap();
        assert_eq!(decompose_character(sp1, &(&v * &v)).unwrap(), elem(sp1, &[("[2]", 1), ("[]", 1)]));
        let so2 = GroupId::so_even(1);
        let w = irreducible_character(so2, &p("[1]")).unwrap();
        assert_eq!(w, v);
        assert_eq!(decompose_character(so2, &(&w * &w)).unwrap(), elem(so2, &[("[2]", 1), ("[]", 2)]));
    }

    #[test]
    fn decompose_rejects_non_members() {
        let sp1 = GroupId::sp(1);
        let x = LaurentPolynomial::variable(1, 0);
        assert!(matches!(decompose_character(sp1, &x), Err(Error::NotInSpan(_))));
        // x1 x2^-1 + x1^-1 x2 is W(D_2)-invariant but not a combination of S_[λ]
        let so4 = GroupId::so_even(2);
        let q = poly(2, &[(&[1, -1], 1), (&[-1, 1], 1)]);
        assert!(matches!(decompose_character(so4, &q), Err(Error::NotInSpan(_))));
        let r = poly(2, &[(&[1, 1], 1), (&[-1, -1], 1)]);
        assert!(matches!(decompose_character(so4, &r), Err(Error::NotInSpan(_))));
    }

    #[test]
    fn restriction_examples() {
        let sp1 = GroupId::sp(1);
        assert_eq!(restrict_gl_character(&p("[1]"), sp1).unwrap(), irreducible_character(sp1, &p("[1]")).unwrap());
        assert_eq!(restrict_gl_character(&p("[1,1]"), sp1).unwrap(), LaurentPolynomial::one(1));
        assert_eq!(restrict_gl_character(&p("[2]"), sp1).unwrap(), poly(1, &[(&[2], 1), (&[0], 1), (&[-2], 1)]));
        assert!(restrict_gl_character(&p("[1,1,1]"), sp1).is_err());
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dimension(&elem(GroupId::sp(1), &[("[1]", 1)])).unwrap(), BigInt::from(2));
        assert_eq!(dimension(&elem(GroupId::so_odd(1), &[("[1]", 1)])).unwrap(), BigInt::from(3));
        assert_eq!(dimension(&elem(GroupId::sp(2), &[("[1,1]", 1)])).unwrap(), BigInt::from(5));
        // O_3: the sign-twisted trivial and the twisted standard
        assert_eq!(dimension(&elem(GroupId::o(3), &[("[1,1,1]", 1), ("[1,1]", 1)])).unwrap(), BigInt::from(4));
        assert_eq!(dimension(&elem(GroupId::o(1), &[("[1]", 1), ("[]", 1)])).unwrap(), BigInt::from(2));
    }

    #[test]
    fn sp_symmetric_powers_are_irreducible() {
        for n in 1..=3 {
            for r in 0..=6 {
                let g = GroupId::sp(n);
                assert_eq!(
                    power_character(g, PowerKind::Sym, r).unwrap(),
                    irreducible_character(g, &Partition::row(r)).unwrap(),
                    "n={n} r={r}"
                );
            }
        }
    }

    #[test]
    fn so_odd_exterior_powers_are_irreducible() {
        for n in 1..=3 {
            for r in 0..=n {
                let g = GroupId::so_odd(n);
                assert_eq!(
                    power_character(g, PowerKind::Ext, r).unwrap(),
                    irreducible_character(g, &Partition::column(r)).unwrap()
                );
            }
        }
    }

    #[test]
    fn so_odd_symmetric_powers_split_into_rows() {
        for n in 1..=3 {
            let g = GroupId::so_odd(n);
            for r in 0..=2 * n {
                let mut sum = LaurentPolynomial::zero(n as usize);
                for s in 0..=r / 2 {
                    sum = &sum + &irreducible_character(g, &Partition::row(r - 2 * s)).unwrap();
                }
                assert_eq!(sum, power_character(g, PowerKind::Sym, r).unwrap(), "n={n} r={r}");
            }
        }
    }
}
