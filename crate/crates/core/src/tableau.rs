//! Tableaux as chains of partitions, and the two sides of the
//! equinumeration theorems that compare them.
//!
//! A column-strict (row-strict) tableau of weight `α` is a chain
//! `∅ ⊂ λ¹ ⊂ … ⊂ λᵏ` whose i-th step is a horizontal (vertical) strip of
//! `α_i` cells. Down-up and up-down tableaux alternate between removing and
//! adding strips. Oscillating tableaux add or remove one cell per step.
//!
//! Counting is done by dynamic programming over the current partition;
//! explicit enumeration is also available for small cases and for output.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::characters::PowerKind;
use crate::error::{Error, Result};
use crate::group::{GroupId, RepRingElement};
use crate::partition::{
    horizontal_strips_added, horizontal_strips_removed, vertical_strips_added, vertical_strips_removed, Partition,
};
use crate::pieri::{o_condition_iii, so_even_dual_condition, so_odd_dual_condition, standard_pieri, tensor_decomposition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChainKind {
    Increasing,
    DownUp,
    UpDown,
    Oscillating,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StripType {
    Horizontal,
    Vertical,
    SingleCell,
}

/// Column-strict or row-strict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strictness {
    Column,
    Row,
}

impl Strictness {
    fn strip(self) -> StripType {
        match self {
            Strictness::Column => StripType::Horizontal,
            Strictness::Row => StripType::Vertical,
        }
    }
}

/// A sequence of partitions starting at `∅`. Serializes as the bare list
/// of partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionChain {
    pub kind: ChainKind,
    pub strip: StripType,
    pub steps: Vec<Partition>,
}

impl PartitionChain {
    pub fn last(&self) -> &Partition {
        self.steps.last().expect("chains start at the empty partition")
    }
}

impl Serialize for PartitionChain {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.steps.serialize(serializer)
    }
}

fn strips_added(strip: StripType, xi: &Partition, size: u32, max_len: usize) -> Vec<Partition> {
    match strip {
        StripType::Horizontal => horizontal_strips_added(xi, size, max_len),
        StripType::Vertical => vertical_strips_added(xi, size, max_len),
        StripType::SingleCell if size == 1 => xi.add_one_cell().into_iter().filter(|p| p.len() <= max_len).collect(),
        StripType::SingleCell if size == 0 => vec![xi.clone()],
        StripType::SingleCell => Vec::new(),
    }
}

fn strips_removed(strip: StripType, mu: &Partition) -> Vec<Partition> {
    match strip {
        StripType::Horizontal => horizontal_strips_removed(mu),
        StripType::Vertical => vertical_strips_removed(mu),
        StripType::SingleCell => {
            let mut v = mu.remove_one_cell();
            v.push(mu.clone());
            v
        }
    }
}

/// Final shapes of strict tableaux of weight `alpha` with at most `max_len`
/// rows, with the number of tableaux of each shape.
pub fn strict_tableaux_by_shape(kind: Strictness, alpha: &[u32], max_len: usize) -> BTreeMap<Partition, u64> {
    let mut current = BTreeMap::from([(Partition::empty(), 1u64)]);
    for &a in alpha {
        let mut next = BTreeMap::new();
        for (shape, count) in &current {
            for grown in strips_added(kind.strip(), shape, a, max_len) {
                *next.entry(grown).or_insert(0) += count;
            }
        }
        current = next;
    }
    current
}

/// Number of strict tableaux of weight `alpha` whose shape has at most
/// `max_len` rows and passes `accept`.
pub fn count_strict_tableaux(kind: Strictness, alpha: &[u32], max_len: usize, accept: impl Fn(&Partition) -> bool) -> u64 {
    strict_tableaux_by_shape(kind, alpha, max_len).into_iter().filter(|(s, _)| accept(s)).map(|(_, c)| c).sum()
}

/// All strict tableaux of weight `alpha` with at most `max_len` rows, as
/// chains.
pub fn enumerate_strict_tableaux(kind: Strictness, alpha: &[u32], max_len: usize) -> Vec<PartitionChain> {
    let mut chains = vec![vec![Partition::empty()]];
    for &a in alpha {
        chains = chains
            .into_iter()
            .flat_map(|c| {
                let last = c.last().unwrap().clone();
                strips_added(kind.strip(), &last, a, max_len).into_iter().map(move |p| {
                    let mut c = c.clone();
                    c.push(p);
                    c
                })
            })
            .collect();
    }
    chains.into_iter().map(|steps| PartitionChain { kind: ChainKind::Increasing, strip: kind.strip(), steps }).collect()
}

/// Side condition on a step `(μ, ξ, λ)` of an alternating chain, given the
/// step's nominal size `α_i` and its actual size.
pub type TripleFilter<'a> = dyn Fn(&Partition, &Partition, &Partition, u32, u32) -> bool + 'a;

/// Membership test for the partitions of a chain.
pub type Admits<'a> = dyn Fn(&Partition) -> bool + 'a;

/// Configuration of an alternating (down-up or up-down) chain.
pub struct AlternatingSpec<'a> {
    pub kind: ChainKind,
    pub final_shape: Partition,
    pub strip: StripType,
    /// Nominal size `α_i` of each step.
    pub alpha: Vec<u32>,
    /// Admissible values of `|skew| + |skew|` for each step.
    pub step_sizes: Vec<Vec<u32>>,
    /// Length bound used while generating partitions.
    pub max_len: usize,
    /// Membership test applied to every partition in the chain.
    pub admits: &'a Admits<'a>,
    pub triple: Option<&'a TripleFilter<'a>>,
}

impl AlternatingSpec<'_> {
    /// `(ξ, λ)` pairs reachable from `mu` at step `i`.
    fn successors(&self, i: usize, mu: &Partition) -> Vec<(Partition, Partition)> {
        let sizes = &self.step_sizes[i];
        let mut out = Vec::new();
        let ok = |xi: &Partition, lambda: &Partition, total: u32| {
            (self.admits)(lambda) && self.triple.is_none_or(|t| t(mu, xi, lambda, self.alpha[i], total))
        };
        match self.kind {
            ChainKind::DownUp => {
                for xi in strips_removed(self.strip, mu).into_iter().filter(|x| (self.admits)(x)) {
                    let down = mu.size() - xi.size();
                    for &total in sizes.iter().filter(|&&t| t >= down) {
                        for lambda in strips_added(self.strip, &xi, total - down, self.max_len) {
                            if ok(&xi, &lambda, total) {
                                out.push((xi.clone(), lambda));
                            }
                        }
                    }
                }
            }
            ChainKind::UpDown => {
                let largest = sizes.iter().copied().max().unwrap_or(0);
                for up in 0..=largest {
                    for xi in strips_added(self.strip, mu, up, self.max_len).into_iter().filter(|x| (self.admits)(x)) {
                        for lambda in strips_removed(self.strip, &xi) {
                            let total = up + xi.size() - lambda.size();
                            if sizes.contains(&total) && ok(&xi, &lambda, total) {
                                out.push((xi.clone(), lambda));
                            }
                        }
                    }
                }
            }
            _ => unreachable!("alternating chains are down-up or up-down"),
        }
        out
    }

    fn steps(&self) -> usize {
        self.step_sizes.len()
    }
}

/// Every chain described by `spec`, ending at its final shape.
pub fn enumerate_alternating(spec: &AlternatingSpec<'_>) -> Vec<PartitionChain> {
    let mut out = Vec::new();
    let mut path = vec![Partition::empty()];
    fn go(spec: &AlternatingSpec<'_>, path: &mut Vec<Partition>, out: &mut Vec<PartitionChain>) {
        let i = path.len() / 2;
        if i == spec.steps() {
            if path.last() == Some(&spec.final_shape) {
                out.push(PartitionChain { kind: spec.kind, strip: spec.strip, steps: path.clone() });
            }
            return;
        }
        for (xi, lambda) in spec.successors(i, path.last().unwrap()) {
            path.push(xi);
            path.push(lambda);
            go(spec, path, out);
            path.pop();
            path.pop();
        }
    }
    if (spec.admits)(&Partition::empty()) {
        go(spec, &mut path, &mut out);
    }
    out
}

/// `Σ weight` over the chains of `spec`, where the weight is a product of
/// per-step factors `step_weight(λ^{(2i-2)}, λ^{(2i)})`.
pub fn count_alternating(spec: &AlternatingSpec<'_>, step_weight: impl Fn(&Partition, &Partition) -> u64) -> u64 {
    if !(spec.admits)(&Partition::empty()) {
        return 0;
    }
    let mut current = BTreeMap::from([(Partition::empty(), 1u64)]);
    for i in 0..spec.steps() {
        let mut next = BTreeMap::new();
        for (mu, count) in &current {
            for (_, lambda) in spec.successors(i, mu) {
                let w = step_weight(mu, &lambda);
                *next.entry(lambda).or_insert(0) += count * w;
            }
        }
        current = next;
    }
    current.get(&spec.final_shape).copied().unwrap_or(0)
}

/// Oscillating tableaux of `k` steps from `∅` to `final_shape` where every
/// partition passes `admits`. When `stay` accepts a partition, the chain
/// may also repeat it.
pub fn enumerate_oscillating(
    k: usize,
    final_shape: &Partition,
    admits: &dyn Fn(&Partition) -> bool,
    stay: &dyn Fn(&Partition) -> bool,
) -> Vec<PartitionChain> {
    let mut chains = vec![vec![Partition::empty()]];
    if !admits(&Partition::empty()) {
        return Vec::new();
    }
    for _ in 0..k {
        chains = chains
            .into_iter()
            .flat_map(|c| {
                let last = c.last().unwrap().clone();
                oscillating_successors(&last, admits, stay).into_iter().map(move |p| {
                    let mut c = c.clone();
                    c.push(p);
                    c
                })
            })
            .collect();
    }
    chains
        .into_iter()
        .filter(|c| c.last() == Some(final_shape))
        .map(|steps| PartitionChain { kind: ChainKind::Oscillating, strip: StripType::SingleCell, steps })
        .collect()
}

fn oscillating_successors(
    p: &Partition,
    admits: &dyn Fn(&Partition) -> bool,
    stay: &dyn Fn(&Partition) -> bool,
) -> Vec<Partition> {
    let mut out: Vec<_> = p.add_one_cell().into_iter().chain(p.remove_one_cell()).filter(|q| admits(q)).collect();
    if stay(p) {
        out.push(p.clone());
    }
    out
}

/// Weighted count of oscillating tableaux; see [`enumerate_oscillating`].
pub fn count_oscillating(
    k: usize,
    final_shape: &Partition,
    admits: &dyn Fn(&Partition) -> bool,
    stay: &dyn Fn(&Partition) -> bool,
    step_weight: &dyn Fn(&Partition, &Partition) -> u64,
) -> u64 {
    if !admits(&Partition::empty()) {
        return 0;
    }
    let mut current = BTreeMap::from([(Partition::empty(), 1u64)]);
    for _ in 0..k {
        let mut next = BTreeMap::new();
        for (p, count) in &current {
            for q in oscillating_successors(p, admits, stay) {
                let w = step_weight(p, &q);
                *next.entry(q).or_insert(0) += count * w;
            }
        }
        current = next;
    }
    current.get(final_shape).copied().unwrap_or(0)
}

/// Number of steps at which the length drops from `n` to below `n`. For
/// up-down chains the comparison is between consecutive even positions;
/// for oscillating chains between consecutive positions.
pub fn statistic_d(chain: &PartitionChain, n: u32) -> Result<u32> {
    let n = n as usize;
    let stride = match chain.kind {
        ChainKind::UpDown => 2,
        ChainKind::Oscillating => 1,
        other => return Err(Error::InvalidParameters(format!("statistic d is not defined for {other:?} chains"))),
    };
    let drops = chain.steps.iter().step_by(stride).collect::<Vec<_>>();
    Ok(drops.windows(2).filter(|w| w[0].len() == n && w[1].len() < n).count() as u32)
}

fn drop_weight(n: u32) -> impl Fn(&Partition, &Partition) -> u64 {
    move |a, b| if a.len() == n as usize && b.len() < n as usize { 2 } else { 1 }
}

/// Which side of an equinumeration identity to count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, serde::Deserialize)]
pub enum Side {
    A,
    B,
}

fn check_variant(variant: u8, max: u8) -> Result<()> {
    if (1..=max).contains(&variant) {
        Ok(())
    } else {
        Err(Error::InvalidParameters(format!("variant must be between 1 and {max}, got {variant}")))
    }
}

fn check_short_column(m: u32, n: u32) -> Result<()> {
    if m > n {
        return Err(Error::InvalidParameters(format!("the shape (1^{m}) needs m <= n = {n}")));
    }
    Ok(())
}

/// The alternating-chain side of the equinumeration for `variant`.
pub fn main2_spec<'a>(
    variant: u8,
    alpha: &[u32],
    rank: u32,
    m: u32,
    admits: &'a Admits<'a>,
    triple: Option<&'a TripleFilter<'a>>,
) -> AlternatingSpec<'a> {
    let (kind, strip, shape) = match variant {
        1 => (ChainKind::DownUp, StripType::Horizontal, Partition::row(m)),
        2 => (ChainKind::UpDown, StripType::Vertical, Partition::row(m)),
        3 => (ChainKind::DownUp, StripType::Horizontal, Partition::column(m)),
        _ => (ChainKind::UpDown, StripType::Vertical, Partition::column(m)),
    };
    let step_sizes = alpha
        .iter()
        .map(|&a| match variant {
            3 => (0..=a / 2).map(|s| a - 2 * s).collect(),
            4 => [Some(a), a.checked_sub(1)].into_iter().flatten().collect(),
            _ => vec![a],
        })
        .collect();
    AlternatingSpec {
        kind,
        final_shape: shape,
        strip,
        alpha: alpha.to_vec(),
        step_sizes,
        max_len: rank as usize,
        admits,
        triple,
    }
}

/// One side of the equinumeration between alternating chains and strict
/// tableaux of weight `alpha`. `rank` is `N` for variant 3 and `n`
/// otherwise.
///
/// | variant | side (a) | side (b) |
/// |---|---|---|
/// | 1 | down-up, horizontal, shape `(m)`, `l ≤ n` | column-strict, `l ≤ 2n`, `c(λ) = m` |
/// | 2 | up-down, vertical, shape `(m)`, `l ≤ n` | row-strict, `l ≤ 2n`, `c(λ) = m` |
/// | 3 | down-up, horizontal, shape `(1^m)`, two-column bound `N` | column-strict, `l ≤ N`, `r(λ) = m` |
/// | 4 | up-down, vertical, shape `(1^m)`, `l ≤ n`, sizes `α_i` or `α_i - 1` | row-strict, `l ≤ 2n+1`, `r(λ) ∈ {m, 2n+1-m}` |
/// | 5 | as 4 with sizes `α_i`, weighted by `2^d` | row-strict, `l ≤ 2n`, `r(λ) ∈ {m, 2n-m}` |
pub fn main2_count(variant: u8, side: Side, alpha: &[u32], rank: u32, m: u32) -> Result<u64> {
    check_variant(variant, 5)?;
    if variant >= 4 {
        check_short_column(m, rank)?;
    }
    let n = rank;
    if side == Side::B {
        let count = match variant {
            1 => count_strict_tableaux(Strictness::Column, alpha, 2 * n as usize, |l| l.odd_column_count() == m),
            2 => count_strict_tableaux(Strictness::Row, alpha, 2 * n as usize, |l| l.odd_column_count() == m),
            3 => count_strict_tableaux(Strictness::Column, alpha, n as usize, |l| l.odd_row_count() == m),
            4 => count_strict_tableaux(Strictness::Row, alpha, 2 * n as usize + 1, |l| {
                l.odd_row_count() == m || l.odd_row_count() == 2 * n + 1 - m
            }),
            _ => count_strict_tableaux(Strictness::Row, alpha, 2 * n as usize, |l| {
                l.odd_row_count() == m || l.odd_row_count() == 2 * n - m
            }),
        };
        return Ok(count);
    }
    let by_length = move |p: &Partition| p.len() <= n as usize;
    let two_column = move |p: &Partition| p.in_par_o(n);
    let cond_iii = move |mu: &Partition, xi: &Partition, la: &Partition, _: u32, _: u32| o_condition_iii(mu, xi, la, n);
    let cond_odd =
        move |mu: &Partition, xi: &Partition, la: &Partition, r: u32, t: u32| so_odd_dual_condition(mu, xi, la, r, t, n);
    let cond_even = move |mu: &Partition, xi: &Partition, la: &Partition, _: u32, _: u32| so_even_dual_condition(mu, xi, la, n);
    let (admits, triple): (&Admits<'_>, Option<&TripleFilter<'_>>) = match variant {
        3 => (&two_column, Some(&cond_iii)),
        4 => (&by_length, Some(&cond_odd)),
        5 => (&by_length, Some(&cond_even)),
        _ => (&by_length, None),
    };
    let mut spec = main2_spec(variant, alpha, rank, m, admits, triple);
    if variant == 3 {
        // the two-column bound allows up to N rows
        spec.max_len = n as usize;
    }
    Ok(if variant == 5 { count_alternating(&spec, drop_weight(n)) } else { count_alternating(&spec, |_, _| 1) })
}

/// One side of the equinumeration between oscillating-type chains of `k`
/// steps and standard tableaux of size `k`. `rank` is `N` for variant 2 and
/// `n` otherwise.
///
/// | variant | side (a) | side (b) |
/// |---|---|---|
/// | 1 | shape `(m)`, `l ≤ n` | `l ≤ 2n`, `c(λ) = m` |
/// | 2 | shape `(1^m)`, two-column bound `N` | `l ≤ N`, `r(λ) = m` |
/// | 3 | shape `(1^m)`, `l ≤ n`, may stay put at length `n` | `l ≤ 2n+1`, `r(λ) ∈ {m, 2n+1-m}` |
/// | 4 | shape `(1^m)`, `l ≤ n`, weighted by `2^d` | `l ≤ 2n`, `r(λ) ∈ {m, 2n-m}` |
pub fn burrill_count(variant: u8, side: Side, k: u32, rank: u32, m: u32) -> Result<u64> {
    check_variant(variant, 4)?;
    if variant >= 3 {
        check_short_column(m, rank)?;
    }
    let n = rank;
    if side == Side::B {
        let ones = vec![1; k as usize];
        let col = Strictness::Column;
        let count = match variant {
            1 => count_strict_tableaux(col, &ones, 2 * n as usize, |l| l.odd_column_count() == m),
            2 => count_strict_tableaux(col, &ones, n as usize, |l| l.odd_row_count() == m),
            3 => count_strict_tableaux(col, &ones, 2 * n as usize + 1, |l| {
                l.odd_row_count() == m || l.odd_row_count() == 2 * n + 1 - m
            }),
            _ => count_strict_tableaux(col, &ones, 2 * n as usize, |l| {
                l.odd_row_count() == m || l.odd_row_count() == 2 * n - m
            }),
        };
        return Ok(count);
    }
    let by_length = move |p: &Partition| p.len() <= n as usize;
    let two_column = move |p: &Partition| p.in_par_o(n);
    let never = |_: &Partition| false;
    let full = move |p: &Partition| p.len() == n as usize;
    let one = |_: &Partition, _: &Partition| 1;
    let k = k as usize;
    Ok(match variant {
        1 => count_oscillating(k, &Partition::row(m), &by_length, &never, &one),
        2 => count_oscillating(k, &Partition::column(m), &two_column, &never, &one),
        3 => count_oscillating(k, &Partition::column(m), &by_length, &full, &one),
        _ => count_oscillating(k, &Partition::column(m), &by_length, &never, &drop_weight(n)),
    })
}

/// The group, power and target label whose multiplicity side (a) of
/// [`main2_count`] computes.
pub fn main2_target(variant: u8, rank: u32, m: u32) -> Result<(GroupId, PowerKind, Partition)> {
    check_variant(variant, 5)?;
    Ok(match variant {
        1 => (GroupId::new(crate::Family::Sp, rank)?, PowerKind::Sym, Partition::row(m)),
        2 => (GroupId::new(crate::Family::Sp, rank)?, PowerKind::Ext, Partition::row(m)),
        3 => (GroupId::new(crate::Family::O, rank)?, PowerKind::Sym, Partition::column(m)),
        4 => (GroupId::new(crate::Family::SOodd, rank)?, PowerKind::Ext, Partition::column(m)),
        _ => (GroupId::new(crate::Family::SOeven, rank)?, PowerKind::Ext, Partition::column(m)),
    })
}

/// Coefficient of `target` in `W_{α_1} ⊗ … ⊗ W_{α_k}`, computed by applying
/// the Pieri drivers one factor at a time starting from the trivial
/// representation.
pub fn iterated_pieri_multiplicity(g: GroupId, kind: PowerKind, alpha: &[u32], target: &Partition) -> Result<BigInt> {
    let mut current = RepRingElement::basis(g, Partition::empty())?;
    for &a in alpha {
        let mut next = RepRingElement::zero(g);
        for (label, c) in current.terms() {
            next.add(&tensor_decomposition(g, label, kind, a)?.scale(c))?;
        }
        current = next;
    }
    Ok(current.coefficient(target))
}

/// As [`iterated_pieri_multiplicity`] with every factor the defining
/// representation, using the one-cell rule.
pub fn iterated_standard_multiplicity(g: GroupId, k: u32, target: &Partition) -> Result<BigInt> {
    let mut current = RepRingElement::basis(g, Partition::empty())?;
    for _ in 0..k {
        let mut next = RepRingElement::zero(g);
        for (label, c) in current.terms() {
            next.add(&standard_pieri(g, label)?.scale(c))?;
        }
        current = next;
    }
    Ok(current.coefficient(target))
}

/// Converts a count to `u64`, for comparing with multiplicities.
pub fn as_count(c: &BigInt) -> Option<u64> {
    c.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{enumerate_partitions, Constraint};
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn strict_examples() {
        assert_eq!(count_strict_tableaux(Strictness::Column, &[1, 1, 1], 9, |l| *l == p("[2,1]")), 2);
        for k in 0..5 {
            assert_eq!(count_strict_tableaux(Strictness::Column, &[k], 9, |l| *l == Partition::row(k)), 1);
        }
        assert_eq!(count_strict_tableaux(Strictness::Row, &[2], 9, |l| *l == p("[2]")), 0);
        assert_eq!(enumerate_strict_tableaux(Strictness::Column, &[1, 1, 1], 9).len(), 4);
    }

    #[test]
    fn oscillating_examples() {
        let short = |q: &Partition| q.len() <= 1;
        let any = |_: &Partition| true;
        let never = |_: &Partition| false;
        let two = enumerate_oscillating(2, &p("[]"), &short, &never);
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].steps, vec![p("[]"), p("[1]"), p("[]")]);
        let three = enumerate_oscillating(3, &p("[1]"), &short, &never);
        let mut got: Vec<_> = three.iter().map(|c| c.steps.clone()).collect();
        got.sort();
        let mut expected = vec![vec![p("[]"), p("[1]"), p("[2]"), p("[1]")], vec![p("[]"), p("[1]"), p("[]"), p("[1]")]];
        expected.sort();
        assert_eq!(got, expected);
        assert!(enumerate_oscillating(1, &p("[2]"), &any, &never).is_empty());
    }

    #[test]
    fn d_statistic_examples() {
        let chain = |kind, steps: &[&str]| PartitionChain {
            kind,
            strip: StripType::SingleCell,
            steps: steps.iter().map(|s| p(s)).collect(),
        };
        assert_eq!(statistic_d(&chain(ChainKind::Oscillating, &["[]", "[1]", "[]"]), 1).unwrap(), 1);
        assert_eq!(statistic_d(&chain(ChainKind::Oscillating, &["[]", "[1]", "[2]", "[1]"]), 1).unwrap(), 0);
        assert_eq!(statistic_d(&chain(ChainKind::Oscillating, &["[]", "[1]", "[]"]), 2).unwrap(), 0);
        assert!(statistic_d(&chain(ChainKind::DownUp, &["[]"]), 1).is_err());
    }

    #[test]
    fn alternating_examples() {
        let short = |q: &Partition| q.len() <= 1;
        // one step reaching (m) needs α_1 = m
        for a in 0..4 {
            let spec = main2_spec(1, &[a], 1, 2, &short, None);
            assert_eq!(enumerate_alternating(&spec).len(), usize::from(a == 2));
        }
        // the odd orthogonal dual condition forbids the trivial step of size 0
        let cond = |mu: &Partition, xi: &Partition, la: &Partition, r: u32, t: u32| so_odd_dual_condition(mu, xi, la, r, t, 1);
        let spec = main2_spec(4, &[1], 1, 0, &short, Some(&cond));
        assert!(enumerate_alternating(&spec).is_empty());
        assert_eq!(crate::pieri::so_odd_dual_pieri_mult(&p("[]"), &p("[]"), 1, 1).unwrap(), 0);
        // three single steps down-up to (1) match the oscillating count
        let spec = main2_spec(1, &[1, 1, 1], 1, 1, &short, None);
        assert_eq!(enumerate_alternating(&spec).len(), 2);
        let spec = main2_spec(1, &[1, 1], 1, 1, &short, None);
        assert!(enumerate_alternating(&spec).is_empty());
    }

    #[test]
    fn count_examples() {
        assert_eq!(main2_count(1, Side::A, &[1, 1, 1], 1, 1).unwrap(), 2);
        assert_eq!(main2_count(1, Side::B, &[1, 1, 1], 1, 1).unwrap(), 2);
        for n in 0..3 {
            assert_eq!(main2_count(1, Side::B, &[], n, 0).unwrap(), 1);
        }
        assert_eq!(main2_count(5, Side::A, &[1, 1], 1, 0).unwrap(), 2);
        assert_eq!(main2_count(5, Side::B, &[1, 1], 1, 0).unwrap(), 2);
        assert_eq!(burrill_count(1, Side::A, 3, 1, 1).unwrap(), 2);
        assert_eq!(burrill_count(1, Side::B, 3, 1, 1).unwrap(), 2);
        assert_eq!(burrill_count(4, Side::A, 2, 1, 0).unwrap(), 2);
        assert_eq!(burrill_count(4, Side::B, 2, 1, 0).unwrap(), 2);
        assert!(main2_count(6, Side::A, &[1], 1, 0).is_err());
        assert!(main2_count(4, Side::A, &[1], 1, 2).is_err());
    }

    #[test]
    fn enumeration_agrees_with_counting() {
        for n in 1..=2u32 {
            let short = move |q: &Partition| q.len() <= n as usize;
            for alpha in [vec![1, 2], vec![2, 1, 1], vec![3, 0, 2]] {
                for m in 0..=3 {
                    for variant in [1u8, 2] {
                        let spec = main2_spec(variant, &alpha, n, m, &short, None);
                        assert_eq!(enumerate_alternating(&spec).len() as u64, main2_count(variant, Side::A, &alpha, n, m).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn weight_permutations_preserve_totals() {
        let comps: [&[u32]; 4] = [&[3, 2, 1], &[1, 2, 3], &[2, 3, 1], &[0, 3, 0, 3]];
        for kind in [Strictness::Column, Strictness::Row] {
            for filter in [Constraint::MaxLength(2), Constraint::None] {
                let totals: Vec<u64> = comps[..3].iter().map(|a| count_strict_tableaux(kind, a, 9, |l| filter.admits(l))).collect();
                assert!(totals.windows(2).all(|w| w[0] == w[1]));
            }
            let by_shape = |a: &[u32]| strict_tableaux_by_shape(kind, a, 9);
            assert_eq!(by_shape(&[0, 3, 0, 3]), by_shape(&[3, 3]));
        }
        for lam in enumerate_partitions(6, Constraint::None) {
            let a = count_strict_tableaux(Strictness::Column, &[1, 2, 3], 9, |l| *l == lam);
            let b = count_strict_tableaux(Strictness::Column, &[3, 1, 2], 9, |l| *l == lam);
            assert_eq!(a, b, "{lam}");
        }
    }

    proptest! {
        #[test]
        fn permuting_the_weight_keeps_shape_counts(alpha in proptest::collection::vec(0u32..4, 0..4), seed in 0usize..24) {
            let mut permuted = alpha.clone();
            if !permuted.is_empty() {
                let len = permuted.len();
                permuted.rotate_left(seed % len);
                permuted.swap(0, (seed / 4) % len);
            }
            for kind in [Strictness::Column, Strictness::Row] {
                prop_assert_eq!(strict_tableaux_by_shape(kind, &alpha, 3), strict_tableaux_by_shape(kind, &permuted, 3));
            }
        }

        #[test]
        fn unit_weights_reduce_to_single_cells(k in 0u32..6, n in 1u32..3, m in 0u32..4) {
            let ones = vec![1; k as usize];
            prop_assert_eq!(main2_count(1, Side::A, &ones, n, m).unwrap(), burrill_count(1, Side::A, k, n, m).unwrap());
        }

        #[test]
        fn enumeration_matches_counting(alpha in proptest::collection::vec(0u32..3, 0..4), n in 1u32..3, m in 0u32..3) {
            let short = move |q: &Partition| q.len() <= n as usize;
            let cond = move |mu: &Partition, xi: &Partition, la: &Partition, r: u32, t: u32| so_odd_dual_condition(mu, xi, la, r, t, n);
            if m <= n {
                let spec = main2_spec(4, &alpha, n, m, &short, Some(&cond));
                prop_assert_eq!(enumerate_alternating(&spec).len() as u64, main2_count(4, Side::A, &alpha, n, m).unwrap());
            }
            let never = |_: &Partition| false;
            let weighted: u64 = enumerate_oscillating(alpha.len() + 2, &Partition::column(m.min(n)), &short, &never)
                .iter()
                .map(|c| 1u64 << statistic_d(c, n).unwrap())
                .sum();
            prop_assert_eq!(weighted, burrill_count(4, Side::A, alpha.len() as u32 + 2, n, m.min(n)).unwrap());
        }
    }
}
