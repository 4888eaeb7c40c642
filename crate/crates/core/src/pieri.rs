//! Closed-form Pieri and dual Pieri multiplicities for the classical groups,
//! and drivers that expand whole tensor products with them.
//!
//! Every multiplicity is a count of intermediate partitions `ξ`. For the
//! Pieri rules `ξ` sits inside both `μ` and `λ` with horizontal strips in
//! between; for the dual rules `ξ` contains both with vertical strips.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::characters::PowerKind;
use crate::error::{Error, Result};
use crate::group::{Family, GroupId, RepRingElement};
use crate::modification::formal_nl_product;
use crate::partition::{
    horizontal_strips_added, horizontal_strips_removed, is_horizontal_strip, is_vertical_strip, vertical_strips_added,
    vertical_strips_removed, Partition,
};

/// The intermediate partitions witnessing a multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieriWitnessSet {
    pub mu: Partition,
    pub lambda: Partition,
    pub r: u32,
    /// Length bound on the witnesses, when the rule has one.
    pub max_len: Option<u32>,
    pub witnesses: Vec<Partition>,
}

impl PieriWitnessSet {
    pub fn len(&self) -> usize {
        self.witnesses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// All `ξ` with `μ/ξ`, `λ/ξ` horizontal strips and `|μ/ξ| + |λ/ξ| = r`.
pub fn pieri_set(mu: &Partition, lambda: &Partition, r: u32) -> PieriWitnessSet {
    let witnesses = if (mu.size() + lambda.size()) % 2 != r % 2 || mu.size() + lambda.size() < r {
        Vec::new()
    } else {
        let target = (mu.size() + lambda.size() - r) / 2;
        let mut v: Vec<_> = horizontal_strips_removed(mu)
            .into_iter()
            .filter(|xi| xi.size() == target && is_horizontal_strip(xi, lambda))
            .collect();
        v.sort();
        v
    };
    PieriWitnessSet { mu: mu.clone(), lambda: lambda.clone(), r, max_len: None, witnesses }
}

/// Side condition for the orthogonal Pieri rule. Only constrains `ξ` when
/// `μ'_1 + μ'_2 = N` and `λ` shares the first two column lengths of `μ`.
pub fn o_condition_iii(mu: &Partition, xi: &Partition, lambda: &Partition, big_n: u32) -> bool {
    let (m1, m2) = (mu.column_length(1), mu.column_length(2));
    let triggered = m1 + m2 == big_n && lambda.column_length(1) == m1 && lambda.column_length(2) == m2;
    if !triggered {
        return true;
    }
    let l = mu.len();
    if xi.len() == l {
        let last = xi.part(l - 1);
        last == mu.part(l - 1) || last == lambda.part(l - 1)
    } else {
        xi.len() < l && xi.column_length(2) < m2
    }
}

fn check(g: GroupId, labels: &[&Partition]) -> Result<()> {
    labels.iter().try_for_each(|l| g.check_label(l))
}

/// Multiplicity of `V_⟨λ⟩` in `V_⟨μ⟩ ⊗ S^r(V)` for `Sp_2n`.
pub fn sp_pieri_mult(mu: &Partition, lambda: &Partition, r: u32, n: u32) -> Result<u64> {
    check(GroupId::new(Family::Sp, n)?, &[mu, lambda])?;
    Ok(pieri_set(mu, lambda, r).len() as u64)
}

/// Multiplicity of `V_[λ]` in `V_[μ] ⊗ V_[(r)]` for `O_N`.
pub fn o_pieri_mult(mu: &Partition, lambda: &Partition, r: u32, big_n: u32) -> Result<u64> {
    check(GroupId::new(Family::O, big_n)?, &[mu, lambda])?;
    Ok(pieri_set(mu, lambda, r).witnesses.iter().filter(|xi| o_condition_iii(mu, xi, lambda, big_n)).count() as u64)
}

/// Multiplicity of `V_[λ]` in `V_[μ] ⊗ S^r(V)` for `O_N`, using
/// `S^r(V) = ⊕_s V_[(r-2s)]`.
pub fn o_sym_power_mult(mu: &Partition, lambda: &Partition, r: u32, big_n: u32) -> Result<u64> {
    (0..=r / 2).map(|s| o_pieri_mult(mu, lambda, r - 2 * s, big_n)).sum()
}

/// Multiplicity of `V_[λ]` in `V_[μ] ⊗ V_[(r)]` for `SO_{2n+1}`.
pub fn so_odd_pieri_mult(mu: &Partition, lambda: &Partition, r: u32, n: u32) -> Result<u64> {
    check(GroupId::new(Family::SOodd, n)?, &[mu, lambda])?;
    let mut count = pieri_set(mu, lambda, r).len() as u64;
    if r >= 1 && mu.len() == n as usize {
        count += pieri_set(mu, lambda, r - 1).witnesses.iter().filter(|xi| xi.len() == n as usize).count() as u64;
    }
    Ok(count)
}

/// `m(λ, μ, n)`: 2 when `l(μ) = n` and `l(λ) < n`, else 1.
pub fn so_even_factor(lambda: &Partition, mu: &Partition, n: u32) -> u64 {
    if mu.len() == n as usize && lambda.len() < n as usize {
        2
    } else {
        1
    }
}

/// Coefficient of `S_[λ]` in `S_[μ] · S_[(r)]` for `SO_2n`.
pub fn so_even_pieri_coeff(mu: &Partition, lambda: &Partition, r: u32, n: u32) -> Result<u64> {
    check(GroupId::new(Family::SOeven, n)?, &[mu, lambda])?;
    let count =
        pieri_set(mu, lambda, r).witnesses.iter().filter(|xi| o_condition_iii(mu, xi, lambda, 2 * n)).count() as u64;
    Ok(so_even_factor(lambda, mu, n) * count)
}

/// All `ξ` with `l(ξ) ≤ n`, `ξ/μ`, `ξ/λ` vertical strips and
/// `|ξ/μ| + |ξ/λ| = r`.
pub fn dual_pieri_set(mu: &Partition, lambda: &Partition, r: u32, n: u32) -> PieriWitnessSet {
    let total = r + mu.size() + lambda.size();
    let witnesses = if !total.is_multiple_of(2) {
        Vec::new()
    } else {
        let target = total / 2;
        if target < mu.size() {
            Vec::new()
        } else {
            let mut v: Vec<_> = vertical_strips_added(mu, target - mu.size(), n as usize)
                .into_iter()
                .filter(|xi| is_vertical_strip(lambda, xi))
                .collect();
            v.sort();
            v
        }
    };
    PieriWitnessSet { mu: mu.clone(), lambda: lambda.clone(), r, max_len: Some(n), witnesses }
}

/// Multiplicity of `V_⟨λ⟩` in `V_⟨μ⟩ ⊗ ∧^r(V)` for `Sp_2n`.
pub fn sp_dual_pieri_mult(mu: &Partition, lambda: &Partition, r: u32, n: u32) -> Result<u64> {
    check(GroupId::new(Family::Sp, n)?, &[mu, lambda])?;
    Ok(dual_pieri_set(mu, lambda, r, n).len() as u64)
}

/// Side condition of the odd orthogonal dual rule for a witness `ξ` with
/// `|ξ/μ| + |ξ/λ| = total`. Vacuous when `l(μ) = n`.
pub fn so_odd_dual_condition(mu: &Partition, xi: &Partition, lambda: &Partition, r: u32, total: u32, n: u32) -> bool {
    let n = n as usize;
    if mu.len() >= n {
        return true;
    }
    let exact = total == r && ((xi.len() == mu.len() && mu.len() > lambda.len()) || xi.len() == lambda.len());
    exact || (total + 1 == r && xi.len() == n)
}

/// Side condition of the even orthogonal dual rule:
/// `l(ξ) ∈ {n, l(μ), l(λ)}`.
pub fn so_even_dual_condition(mu: &Partition, xi: &Partition, lambda: &Partition, n: u32) -> bool {
    [n as usize, mu.len(), lambda.len()].contains(&xi.len())
}

/// Multiplicity of `V_[λ]` in `V_[μ] ⊗ ∧^r(V)` for `SO_{2n+1}`.
pub fn so_odd_dual_pieri_mult(mu: &Partition, lambda: &Partition, r: u32, n: u32) -> Result<u64> {
    check(GroupId::new(Family::SOodd, n)?, &[mu, lambda])?;
    let mut count = 0;
    for total in [Some(r), r.checked_sub(1)].into_iter().flatten() {
        count += dual_pieri_set(mu, lambda, total, n)
            .witnesses
            .iter()
            .filter(|xi| so_odd_dual_condition(mu, xi, lambda, r, total, n))
            .count();
    }
    Ok(count as u64)
}

/// Coefficient of `S_[λ]` in `S_[μ] · E_r` for `SO_2n`.
pub fn so_even_dual_pieri_coeff(mu: &Partition, lambda: &Partition, r: u32, n: u32) -> Result<u64> {
    check(GroupId::new(Family::SOeven, n)?, &[mu, lambda])?;
    let count =
        dual_pieri_set(mu, lambda, r, n).witnesses.iter().filter(|xi| so_even_dual_condition(mu, xi, lambda, n)).count();
    Ok(so_even_factor(lambda, mu, n) * count as u64)
}

/// `V_μ ⊗ V` for the defining representation `V`, by adding or removing
/// one cell.
pub fn standard_pieri(g: GroupId, mu: &Partition) -> Result<RepRingElement> {
    g.check_label(mu)?;
    let mut out = RepRingElement::zero(g);
    let removed = if g.family == Family::GL { Vec::new() } else { mu.remove_one_cell() };
    let neighbours = mu.add_one_cell().into_iter().chain(removed);
    for lambda in neighbours.filter(|l| g.admits(l)) {
        let c = match g.family {
            Family::SOeven => so_even_factor(&lambda, mu, g.rank),
            _ => 1,
        };
        out.add_term(lambda, c)?;
    }
    if g.family == Family::SOodd && mu.len() == g.rank as usize {
        out.add_term(mu.clone(), 1)?;
    }
    Ok(out)
}

/// Family selector for [`rest_mult`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RestrictionFamily {
    /// `GL_2n ↓ Sp_2n`; rank is `n`.
    Sp,
    /// `GL_N ↓ O_N`; rank is `N`.
    O,
}

/// Multiplicity (0 or 1) in the restriction of the `GL` irreducible `λ` of
/// the one-row irreducible `(m)` of `Sp_2n`, which is `[c(λ) = m]`, or of the
/// one-column irreducible `(1^m)` of `O_N`, which is `[r(λ) = m]`.
pub fn rest_mult(family: RestrictionFamily, lambda: &Partition, m: u32, rank: u32) -> Result<u64> {
    let (bound, hit) = match family {
        RestrictionFamily::Sp => (2 * rank, lambda.odd_column_count() == m),
        RestrictionFamily::O => (rank, lambda.odd_row_count() == m),
    };
    if lambda.len() > bound as usize {
        return Err(Error::LabelOutOfRange { label: lambda.clone(), group: format!("GL_{bound}") });
    }
    Ok(u64::from(hit))
}

thread_local! {
    static TENSOR: RefCell<HashMap<(GroupId, Partition, PowerKind, u32), RepRingElement>> = RefCell::new(HashMap::new());
}

/// `V_μ ⊗ W` expanded into irreducibles, where `W` is `S^r(V)`, `∧^r(V)`
/// or the one-row irreducible `(r)`, using the closed-form rules.
///
/// For `O_N` with exterior powers no closed form is used: `∧^r(V)` is the
/// irreducible `(1^r)` and the product is computed through the universal
/// ring. Exterior powers beyond the dimension of `V` are zero.
pub fn tensor_decomposition(g: GroupId, mu: &Partition, kind: PowerKind, r: u32) -> Result<RepRingElement> {
    g.check_label(mu)?;
    let key = (g, mu.clone(), kind, r);
    if let Some(hit) = TENSOR.with(|c| c.borrow().get(&key).cloned()) {
        return Ok(hit);
    }
    let value = compute_tensor(g, mu, kind, r)?;
    TENSOR.with(|c| c.borrow_mut().insert(key, value.clone()));
    Ok(value)
}

fn compute_tensor(g: GroupId, mu: &Partition, kind: PowerKind, r: u32) -> Result<RepRingElement> {
    let n = g.rank;
    let mut out = RepRingElement::zero(g);
    if kind == PowerKind::Ext && r > g.defining_dim() {
        return Ok(out);
    }
    if g.family == Family::O && kind == PowerKind::Ext {
        return formal_nl_product(g, mu, &Partition::column(r));
    }
    if matches!(g.family, Family::SOodd | Family::SOeven) && kind == PowerKind::Sym {
        for s in 0..=r / 2 {
            out.add(&tensor_decomposition(g, mu, PowerKind::Row, r - 2 * s)?)?;
        }
        return Ok(out);
    }
    let max_len = n as usize;
    let candidates: BTreeSet<Partition> = if kind == PowerKind::Ext {
        dual_candidates(mu, r, max_len)
    } else {
        let sizes: Vec<u32> = match (g.family, kind) {
            (Family::O, PowerKind::Sym) => (0..=r / 2).map(|s| r - 2 * s).collect(),
            (Family::SOodd, _) if r > 0 => vec![r, r - 1],
            _ => vec![r],
        };
        sizes.into_iter().flat_map(|t| pieri_candidates(mu, t, max_len)).collect()
    };
    for lambda in candidates.into_iter().filter(|l| g.admits(l)) {
        let c = match (g.family, kind) {
            (Family::GL, PowerKind::Ext) => u64::from(is_vertical_strip(mu, &lambda) && lambda.size() == mu.size() + r),
            (Family::GL, _) => u64::from(is_horizontal_strip(mu, &lambda) && lambda.size() == mu.size() + r),
            (Family::Sp, PowerKind::Ext) => sp_dual_pieri_mult(mu, &lambda, r, n)?,
            (Family::Sp, _) => sp_pieri_mult(mu, &lambda, r, n)?,
            (Family::O, PowerKind::Sym) => o_sym_power_mult(mu, &lambda, r, n)?,
            (Family::O, _) => o_pieri_mult(mu, &lambda, r, n)?,
            (Family::SOodd, PowerKind::Ext) => so_odd_dual_pieri_mult(mu, &lambda, r, n)?,
            (Family::SOodd, _) => so_odd_pieri_mult(mu, &lambda, r, n)?,
            (Family::SOeven, PowerKind::Ext) => so_even_dual_pieri_coeff(mu, &lambda, r, n)?,
            (Family::SOeven, _) => so_even_pieri_coeff(mu, &lambda, r, n)?,
        };
        out.add_term(lambda, BigInt::from(c))?;
    }
    Ok(out)
}

// λ with λ/ξ a horizontal strip for some ξ obtained from μ by removing a
// horizontal strip, with |μ/ξ| + |λ/ξ| = t.
fn pieri_candidates(mu: &Partition, t: u32, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for xi in horizontal_strips_removed(mu) {
        let removed = mu.size() - xi.size();
        if removed <= t {
            out.extend(horizontal_strips_added(&xi, t - removed, max_len));
        }
    }
    out
}

// λ obtained from some ξ ⊇ μ (vertical strip, l(ξ) ≤ max_len) by removing a
// vertical strip, with |ξ/μ| + |ξ/λ| ∈ {r, r-1}.
fn dual_candidates(mu: &Partition, r: u32, max_len: usize) -> BTreeSet<Partition> {
    let mut out = BTreeSet::new();
    for added in 0..=r {
        for xi in vertical_strips_added(mu, added, max_len) {
            for lambda in vertical_strips_removed(&xi) {
                let t = added + xi.size() - lambda.size();
                if t == r || t + 1 == r {
                    out.insert(lambda);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{decompose_character, irreducible_character, power_character};
    use crate::partition::{enumerate_partitions, Constraint};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn elem(g: GroupId, terms: &[(&str, i64)]) -> RepRingElement {
        let mut e = RepRingElement::zero(g);
        for &(l, c) in terms {
            e.add_term(p(l), c).unwrap();
        }
        e
    }

    #[test]
    fn witness_examples() {
        assert_eq!(pieri_set(&p("[1]"), &p("[2]"), 1).witnesses, vec![p("[1]")]);
        assert_eq!(pieri_set(&p("[1]"), &p("[1]"), 2).witnesses, vec![p("[]")]);
        assert_eq!(pieri_set(&p("[2,1]"), &p("[3,2]"), 2).witnesses, vec![p("[2,1]")]);
        assert!(pieri_set(&p("[1]"), &p("[1]"), 1).is_empty());
        let mut dual = dual_pieri_set(&p("[1]"), &p("[1]"), 2, 2).witnesses;
        dual.sort();
        assert_eq!(dual, vec![p("[1,1]"), p("[2]")]);
        assert_eq!(dual_pieri_set(&p("[1]"), &p("[]"), 1, 1).witnesses, vec![p("[1]")]);
        assert_eq!(dual_pieri_set(&p("[1]"), &p("[2]"), 1, 1).witnesses, vec![p("[2]")]);
    }

    #[test]
    fn condition_iii_examples() {
        assert!(!o_condition_iii(&p("[1,1]"), &p("[1]"), &p("[1,1]"), 2));
        assert!(o_condition_iii(&p("[1,1]"), &p("[1,1]"), &p("[1,1]"), 2));
        assert!(o_condition_iii(&p("[1]"), &p("[]"), &p("[1]"), 3));
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(sp_pieri_mult(&p("[1]"), &p("[1]"), 2, 1).unwrap(), 1);
        assert_eq!(sp_pieri_mult(&p("[1]"), &p("[2]"), 1, 1).unwrap(), 1);
        assert_eq!(sp_pieri_mult(&p("[1]"), &p("[1]"), 1, 1).unwrap(), 0);
        assert!(sp_pieri_mult(&p("[1,1]"), &p("[1]"), 1, 1).is_err());
        assert_eq!(o_pieri_mult(&p("[1,1]"), &p("[1,1]"), 2, 2).unwrap(), 0);
        assert_eq!(o_pieri_mult(&p("[1,1]"), &p("[1,1]"), 0, 2).unwrap(), 1);
        assert_eq!(o_pieri_mult(&p("[1]"), &p("[2]"), 1, 3).unwrap(), 1);
        assert_eq!(o_sym_power_mult(&p("[]"), &p("[]"), 2, 3).unwrap(), 1);
        assert_eq!(o_sym_power_mult(&p("[]"), &p("[2]"), 2, 3).unwrap(), 1);
        assert_eq!(so_odd_pieri_mult(&p("[1]"), &p("[1]"), 1, 1).unwrap(), 1);
        assert_eq!(so_odd_pieri_mult(&p("[1]"), &p("[2]"), 1, 1).unwrap(), 1);
        assert_eq!(so_odd_pieri_mult(&p("[1]"), &p("[]"), 1, 2).unwrap(), 1);
        assert_eq!(so_even_pieri_coeff(&p("[1]"), &p("[]"), 1, 1).unwrap(), 2);
        assert_eq!(so_even_pieri_coeff(&p("[1]"), &p("[2]"), 1, 1).unwrap(), 1);
        assert_eq!(so_even_factor(&p("[]"), &p("[1]"), 1), 2);
    }

    #[test]
    fn dual_multiplicity_examples() {
        assert_eq!(sp_dual_pieri_mult(&p("[1]"), &p("[]"), 1, 1).unwrap(), 1);
        assert_eq!(sp_dual_pieri_mult(&p("[1]"), &p("[2]"), 1, 1).unwrap(), 1);
        assert_eq!(sp_dual_pieri_mult(&p("[]"), &p("[]"), 1, 1).unwrap(), 0);
        assert_eq!(so_odd_dual_pieri_mult(&p("[1]"), &p("[1]"), 1, 1).unwrap(), 1);
        assert_eq!(so_odd_dual_pieri_mult(&p("[1]"), &p("[]"), 1, 1).unwrap(), 1);
        assert_eq!(so_even_dual_pieri_coeff(&p("[1]"), &p("[]"), 1, 1).unwrap(), 2);
        assert_eq!(so_even_dual_pieri_coeff(&p("[1]"), &p("[2]"), 1, 1).unwrap(), 1);
    }

    // Boundary values settled by decomposing the tensor product characters.
    #[test]
    fn boundary_values_agree_with_characters() {
        assert_eq!(so_odd_dual_pieri_mult(&p("[]"), &p("[]"), 1, 1).unwrap(), 0);
        let so3 = GroupId::so_odd(1);
        let e1 = power_character(so3, PowerKind::Ext, 1).unwrap();
        assert_eq!(decompose_character(so3, &e1).unwrap().coefficient(&p("[]")), BigInt::from(0));

        assert_eq!(so_even_dual_pieri_coeff(&p("[2,1]"), &p("[2,1]"), 2, 3).unwrap(), 3);
        let so6 = GroupId::so_even(3);
        let prod = &irreducible_character(so6, &p("[2,1]")).unwrap() * &power_character(so6, PowerKind::Ext, 2).unwrap();
        assert_eq!(decompose_character(so6, &prod).unwrap().coefficient(&p("[2,1]")), BigInt::from(3));
    }

    #[test]
    fn standard_examples() {
        let sp2 = GroupId::sp(2);
        assert_eq!(standard_pieri(sp2, &p("[1]")).unwrap(), elem(sp2, &[("[]", 1), ("[2]", 1), ("[1,1]", 1)]));
        let so3 = GroupId::so_odd(1);
        assert_eq!(standard_pieri(so3, &p("[1]")).unwrap(), elem(so3, &[("[]", 1), ("[2]", 1), ("[1]", 1)]));
        let sp1 = GroupId::sp(1);
        assert_eq!(standard_pieri(sp1, &p("[1]")).unwrap(), elem(sp1, &[("[]", 1), ("[2]", 1)]));
    }

    #[test]
    fn restriction_indicator_examples() {
        assert_eq!(rest_mult(RestrictionFamily::Sp, &p("[1,1]"), 0, 1).unwrap(), 1);
        assert_eq!(rest_mult(RestrictionFamily::Sp, &p("[2]"), 2, 1).unwrap(), 1);
        assert_eq!(rest_mult(RestrictionFamily::O, &p("[2]"), 0, 3).unwrap(), 1);
        assert!(rest_mult(RestrictionFamily::Sp, &p("[1,1,1]"), 1, 1).is_err());
    }

    #[test]
    fn tensor_examples() {
        let sp1 = GroupId::sp(1);
        assert_eq!(
            tensor_decomposition(sp1, &p("[1]"), PowerKind::Sym, 2).unwrap(),
            elem(sp1, &[("[3]", 1), ("[1]", 1)])
        );
        let so2 = GroupId::so_even(1);
        assert_eq!(
            tensor_decomposition(so2, &p("[1]"), PowerKind::Ext, 1).unwrap(),
            elem(so2, &[("[2]", 1), ("[]", 2)])
        );
        for g in [GroupId::sp(2), GroupId::o(3), GroupId::so_odd(2), GroupId::so_even(2), GroupId::gl(3)] {
            for kind in [PowerKind::Sym, PowerKind::Ext, PowerKind::Row] {
                for mu in enumerate_partitions(4, Constraint::None).filter(|m| g.admits(m)) {
                    let t = tensor_decomposition(g, &mu, kind, 0).unwrap();
                    assert_eq!(t, RepRingElement::basis(g, mu).unwrap());
                }
            }
        }
    }

    #[test]
    fn witness_sets_are_symmetric() {
        for mu in enumerate_partitions(6, Constraint::None) {
            for lambda in enumerate_partitions(6, Constraint::None) {
                for r in 0..=4 {
                    assert_eq!(pieri_set(&mu, &lambda, r).witnesses, pieri_set(&lambda, &mu, r).witnesses);
                    for n in 1..=3 {
                        assert_eq!(
                            dual_pieri_set(&mu, &lambda, r, n).witnesses,
                            dual_pieri_set(&lambda, &mu, r, n).witnesses
                        );
                    }
                }
            }
        }
    }
}
