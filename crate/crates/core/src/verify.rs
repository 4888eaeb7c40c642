//! Verification suites: each compares a closed-form rule against an
//! independent computation (characters, the universal ring, or a second
//! combinatorial count) over a grid of inputs, and reports every mismatch.

use std::collections::BTreeMap;
use std::fmt::{Debug, Display};
use std::time::Instant;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::{
    character_of, decompose_character, irreducible_character, o_label_on_so, power_character, restrict_gl_character, PowerKind,
};
use crate::error::{Error, Result};
use crate::group::{Family, GroupId, RepRingElement};
use crate::laurent::{lp_determinant, LaurentPolynomial};
use crate::modification::{formal_nl_product, o_modify, sp_modify, SignedIrrep};
use crate::partition::{
    enumerate_partitions, horizontal_strips_added, is_horizontal_strip, is_vertical_strip, partitions_of, Constraint,
    Partition,
};
use crate::pieri::{
    dual_pieri_set, o_pieri_mult, o_sym_power_mult, pieri_set, rest_mult, so_even_factor, standard_pieri,
    tensor_decomposition, RestrictionFamily,
};
use crate::schur::{branching_coefficient, lr_coefficient, nl_coefficient, o_schur_h, sp_schur_h, BranchingKind};
use crate::tableau::{
    burrill_count, count_strict_tableaux, iterated_pieri_multiplicity, iterated_standard_multiplicity, main2_count,
    main2_target, Side, Strictness,
};

/// One failed comparison.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mismatch {
    pub actual: String,
    pub case: String,
    pub expected: String,
}

/// Outcome of a suite. Fields are declared in alphabetical order so that
/// the JSON rendering has a canonical key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub cases: u64,
    pub grid: BTreeMap<String, u32>,
    pub mismatches: Vec<Mismatch>,
    pub passed: bool,
    pub suite: String,
    pub wall_time_ms: u64,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn summary(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        format!("{:<16} {status}  {} cases, {} mismatches, {} ms", self.suite, self.cases, self.mismatches.len(), self.wall_time_ms)
    }
}

/// Grid bounds. Unset fields take the defaults of each suite.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GridOverrides {
    /// Bound on the size of the starting label.
    pub max_size: Option<u32>,
    /// Bound on the power, or on the number of steps for chains.
    pub max_r: Option<u32>,
    /// Bound on the rank (`n`, or `N` for `O_N`).
    pub max_rank: Option<u32>,
}

struct Grid {
    size: u32,
    r: u32,
    rank: u32,
}

impl Grid {
    fn new(o: GridOverrides, size: u32, r: u32, rank: u32) -> Self {
        Grid { size: o.max_size.unwrap_or(size), r: o.max_r.unwrap_or(r), rank: o.max_rank.unwrap_or(rank) }
    }

    fn describe(&self) -> BTreeMap<String, u32> {
        BTreeMap::from([("max_r".into(), self.r), ("max_rank".into(), self.rank), ("max_size".into(), self.size)])
    }
}

/// Names accepted by [`run_suite`], in order. `"all"` runs every one, and
/// `"1"` to `"11"` are accepted as aliases.
pub const SUITES: [&str; 11] = [
    "sp-pieri",
    "o-pieri",
    "o-sym-power",
    "so-pieri",
    "dual-pieri",
    "standard",
    "modification",
    "branching",
    "universal-pieri",
    "equinumeration",
    "properties",
];

fn resolve(name: &str) -> Result<&'static str> {
    if let Ok(i) = name.parse::<usize>() {
        if (1..=SUITES.len()).contains(&i) {
            return Ok(SUITES[i - 1]);
        }
    }
    SUITES.iter().copied().find(|s| *s == name).ok_or_else(|| Error::InvalidParameters(format!("unknown suite '{name}'")))
}

/// Runs one suite by name.
pub fn run_suite(name: &str, overrides: GridOverrides) -> Result<SuiteReport> {
    let suite = resolve(name)?;
    let start = Instant::now();
    let (grid, (cases, mut mismatches)) = match suite {
        "sp-pieri" => with_grid(Grid::new(overrides, 6, 5, 3), sp_pieri_suite),
        "o-pieri" => with_grid(Grid::new(overrides, 6, 4, 5), o_pieri_suite),
        "o-sym-power" => with_grid(Grid::new(overrides, 6, 4, 5), o_sym_power_suite),
        "so-pieri" => with_grid(Grid::new(overrides, 6, 5, 3), so_pieri_suite),
        "dual-pieri" => with_grid(Grid::new(overrides, 6, 0, 3), dual_pieri_suite),
        "standard" => with_grid(Grid::new(overrides, 6, 1, 4), standard_suite),
        "modification" => with_grid(Grid::new(overrides, 8, 4, 3), modification_suite),
        "branching" => with_grid(Grid::new(overrides, 6, 0, 3), branching_suite),
        "universal-pieri" => with_grid(Grid::new(overrides, 6, 5, 0), universal_pieri_suite),
        "equinumeration" => with_grid(Grid::new(overrides, 6, 6, 3), equinumeration_suite),
        _ => with_grid(Grid::new(overrides, 6, 5, 3), property_suite),
    };
    mismatches.sort();
    Ok(SuiteReport {
        cases,
        grid,
        passed: mismatches.is_empty(),
        mismatches,
        suite: suite.to_string(),
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}

/// Runs every suite, or the one named.
pub fn run_suites(name: &str, overrides: GridOverrides) -> Result<Vec<SuiteReport>> {
    if name == "all" {
        SUITES.iter().map(|s| run_suite(s, overrides)).collect()
    } else {
        Ok(vec![run_suite(name, overrides)?])
    }
}

type Outcome = (u64, Vec<Mismatch>);

type Check = fn(&Grid) -> Outcome;

fn with_grid(grid: Grid, suite: Check) -> (BTreeMap<String, u32>, Outcome) {
    let outcome = suite(&grid);
    (grid.describe(), outcome)
}

/// Runs `check` on every case in parallel. A check returns the mismatches
/// it found; an error counts as a mismatch.
fn run_cases<C, F>(cases: Vec<C>, check: F) -> Outcome
where
    C: Debug + Sync,
    F: Fn(&C) -> Result<Vec<Mismatch>> + Sync,
{
    let total = cases.len() as u64;
    let mismatches = cases
        .par_iter()
        .flat_map_iter(|c| match check(c) {
            Ok(found) => found,
            Err(e) => vec![Mismatch { case: format!("{c:?}"), expected: "a value".into(), actual: format!("error: {e}") }],
        })
        .collect();
    (total, mismatches)
}

fn merge(parts: impl IntoIterator<Item = Outcome>) -> Outcome {
    parts.into_iter().fold((0, Vec::new()), |(n, mut all), (k, found)| {
        all.extend(found);
        (n + k, all)
    })
}

fn compare<T: PartialEq + Display>(case: impl Display, expected: T, actual: T) -> Vec<Mismatch> {
    if expected == actual {
        Vec::new()
    } else {
        vec![Mismatch { case: case.to_string(), expected: expected.to_string(), actual: actual.to_string() }]
    }
}

fn check(case: impl Display, holds: bool) -> Vec<Mismatch> {
    compare(case, true, holds)
}

fn labels(g: GroupId, max_size: u32) -> Vec<Partition> {
    enumerate_partitions(max_size, Constraint::None).filter(|l| g.admits(l)).collect()
}

fn product_character(g: GroupId, mu: &Partition, other: &LaurentPolynomial) -> Result<LaurentPolynomial> {
    irreducible_character(g, mu)?.try_mul(other)
}

/// `(g, μ, r)` triples over the given groups.
fn triples(groups: &[GroupId], max_size: u32, rs: impl Fn(GroupId) -> Vec<u32>) -> Vec<(GroupId, Partition, u32)> {
    let mut out = Vec::new();
    for &g in groups {
        for mu in labels(g, max_size) {
            for r in rs(g) {
                out.push((g, mu.clone(), r));
            }
        }
    }
    out
}

fn run_triples<F>(cases: Vec<(GroupId, Partition, u32)>, check: F) -> Outcome
where
    F: Fn(GroupId, &Partition, u32, &str) -> Result<Vec<Mismatch>> + Sync,
{
    run_cases(cases, |(g, mu, r)| check(*g, mu, *r, &format!("{g} mu={mu} r={r}")))
}

fn ranks(from: u32, to: u32) -> impl Iterator<Item = u32> {
    from..=to
}

fn sp_pieri_suite(grid: &Grid) -> Outcome {
    let groups: Vec<_> = ranks(1, grid.rank).map(GroupId::sp).collect();
    run_triples(triples(&groups, grid.size, |_| (0..=grid.r).collect()), |g, mu, r, case| {
        let rule = tensor_decomposition(g, mu, PowerKind::Sym, r)?;
        let universal = formal_nl_product(g, mu, &Partition::row(r))?;
        let chars = decompose_character(g, &product_character(g, mu, &power_character(g, PowerKind::Sym, r)?)?)?;
        let mut found = compare(format!("{case} rule vs universal"), &universal, &rule);
        found.extend(compare(format!("{case} rule vs characters"), &chars, &rule));
        Ok(found)
    })
}

fn o_pieri_suite(grid: &Grid) -> Outcome {
    let groups: Vec<_> = ranks(2, grid.rank).map(GroupId::o).collect();
    run_triples(triples(&groups, grid.size, |_| (0..=grid.r).collect()), |g, mu, r, case| {
        let universal = formal_nl_product(g, mu, &Partition::row(r))?;
        let mut found = compare(format!("{case} rule vs universal"), &universal, &tensor_decomposition(g, mu, PowerKind::Row, r)?);
        for lambda in labels(g, mu.size() + r) {
            let rule = BigInt::from(o_pieri_mult(mu, &lambda, r, g.rank)?);
            found.extend(compare(format!("{case} lambda={lambda}"), universal.coefficient(&lambda), rule));
        }
        Ok(found)
    })
}

fn o_sym_power_suite(grid: &Grid) -> Outcome {
    let groups: Vec<_> = ranks(2, grid.rank).map(GroupId::o).collect();
    run_triples(triples(&groups, grid.size, |_| (0..=grid.r).collect()), |g, mu, r, case| {
        let mut universal = RepRingElement::zero(g);
        for s in 0..=r / 2 {
            universal.add(&formal_nl_product(g, mu, &Partition::row(r - 2 * s))?)?;
        }
        let mut found = Vec::new();
        for lambda in labels(g, mu.size() + r) {
            let rule = BigInt::from(o_sym_power_mult(mu, &lambda, r, g.rank)?);
            found.extend(compare(format!("{case} lambda={lambda}"), universal.coefficient(&lambda), rule));
        }
        Ok(found)
    })
}

fn so_pieri_suite(grid: &Grid) -> Outcome {
    let groups: Vec<_> = ranks(1, grid.rank).flat_map(|n| [GroupId::so_odd(n), GroupId::so_even(n)]).collect();
    let cases = triples(&groups, grid.size, |_| (0..=grid.r).collect());
    // the factor 2 must actually be exercised
    let doubled = cases
        .iter()
        .filter(|(g, mu, _)| g.family == Family::SOeven && mu.len() == g.rank as usize)
        .count();
    let (n, mut found) = run_triples(cases, |g, mu, r, case| {
        let chars = decompose_character(g, &product_character(g, mu, &power_character(g, PowerKind::Row, r)?)?)?;
        Ok(compare(case, chars, tensor_decomposition(g, mu, PowerKind::Row, r)?))
    });
    found.extend(check("even orthogonal cases with l(mu) = n are present", doubled > 0));
    (n + 1, found)
}

fn dual_pieri_suite(grid: &Grid) -> Outcome {
    let groups: Vec<_> =
        ranks(1, grid.rank).flat_map(|n| [GroupId::sp(n), GroupId::so_odd(n), GroupId::so_even(n)]).collect();
    run_triples(triples(&groups, grid.size, |g| (0..=2 * g.rank).collect()), |g, mu, r, case| {
        let chars = decompose_character(g, &product_character(g, mu, &power_character(g, PowerKind::Ext, r)?)?)?;
        Ok(compare(case, chars, tensor_decomposition(g, mu, PowerKind::Ext, r)?))
    })
}

fn standard_suite(grid: &Grid) -> Outcome {
    let groups: Vec<_> = ranks(1, grid.rank)
        .flat_map(|n| [GroupId::gl(n), GroupId::sp(n), GroupId::so_odd(n), GroupId::so_even(n), GroupId::o(n)])
        .collect();
    run_triples(triples(&groups, grid.size, |_| vec![1]), |g, mu, _, case| {
        let one_cell = standard_pieri(g, mu)?;
        let mut found = compare(format!("{case} row"), tensor_decomposition(g, mu, PowerKind::Row, 1)?, one_cell.clone());
        found.extend(compare(format!("{case} sym"), tensor_decomposition(g, mu, PowerKind::Sym, 1)?, one_cell));
        Ok(found)
    })
}

fn signed_character(g: GroupId, m: &SignedIrrep) -> Result<LaurentPolynomial> {
    Ok(match m {
        SignedIrrep::Zero => LaurentPolynomial::zero(g.nvars()),
        SignedIrrep::Term { sign, label } => irreducible_character(g, label)?.scale(&BigInt::from(*sign)),
    })
}

// The image of an `O_N` signed label on `SO_N`.
fn on_special_orthogonal(m: SignedIrrep, big_n: u32) -> Result<SignedIrrep> {
    Ok(match m {
        SignedIrrep::Term { sign, label } => SignedIrrep::Term { sign, label: o_label_on_so(&label, big_n)? },
        zero => zero,
    })
}

fn modification_suite(grid: &Grid) -> Outcome {
    let mut cases = Vec::new();
    for n in ranks(1, grid.rank) {
        for lambda in enumerate_partitions(grid.size, Constraint::None).filter(|l| l.first() <= grid.r) {
            cases.push((n, lambda));
        }
    }
    run_cases(cases, |(n, lambda)| {
        let n = *n;
        let case = format!("n={n} lambda={lambda}");
        let sp = GroupId::sp(n);
        let so = GroupId::so_odd(n);
        let sp_lhs = sp_schur_h(lambda)?.specialize(sp)?;
        let o_lhs = o_schur_h(lambda).specialize(so)?;
        let o_rhs = signed_character(so, &on_special_orthogonal(o_modify(lambda, 2 * n + 1), 2 * n + 1)?)?;
        let mut found = compare(format!("Sp {case}"), signed_character(sp, &sp_modify(lambda, n))?, sp_lhs);
        found.extend(compare(format!("O_{} {case}", 2 * n + 1), o_rhs, o_lhs));
        Ok(found)
    })
}

fn branching_suite(grid: &Grid) -> Outcome {
    let mut sp_cases = Vec::new();
    for n in ranks(1, grid.rank) {
        for lambda in enumerate_partitions(grid.size, Constraint::MaxLength(2 * n)) {
            sp_cases.push((n, lambda));
        }
    }
    let sp = run_cases(sp_cases, |(n, lambda)| {
        let n = *n;
        let g = GroupId::sp(n);
        let restricted = restrict_gl_character(lambda, g)?;
        let mut littlewood = LaurentPolynomial::zero(g.nvars());
        for mu in enumerate_partitions(lambda.size(), Constraint::None) {
            let b = branching_coefficient(BranchingKind::Sp, lambda, &mu);
            if b > 0 {
                littlewood = littlewood.try_add(&signed_character(g, &sp_modify(&mu, n))?.scale(&BigInt::from(b)))?;
            }
        }
        let case = format!("GL_{} -> {g} lambda={lambda}", 2 * n);
        let mut found = compare(format!("{case} branching"), restricted.clone(), littlewood);
        let decomposed = decompose_character(g, &restricted)?;
        for m in 0..=lambda.size() {
            let rule = BigInt::from(rest_mult(RestrictionFamily::Sp, lambda, m, n)?);
            found.extend(compare(format!("{case} m={m}"), decomposed.coefficient(&Partition::row(m)), rule));
        }
        Ok(found)
    });
    let mut o_cases = Vec::new();
    for big_n in ranks(1, 5.max(grid.rank)) {
        for lambda in enumerate_partitions(grid.size, Constraint::MaxLength(big_n)) {
            o_cases.push((big_n, lambda));
        }
    }
    let o = run_cases(o_cases, |(big_n, lambda)| {
        let big_n = *big_n;
        let mut image = RepRingElement::zero(GroupId::o(big_n));
        for mu in enumerate_partitions(lambda.size(), Constraint::None) {
            let b = branching_coefficient(BranchingKind::O, lambda, &mu);
            if let (true, SignedIrrep::Term { sign, label }) = (b > 0, o_modify(&mu, big_n)) {
                image.add_term(label, BigInt::from(b) * sign)?;
            }
        }
        let mut found = Vec::new();
        for m in 0..=big_n {
            let rule = BigInt::from(rest_mult(RestrictionFamily::O, lambda, m, big_n)?);
            let case = format!("GL_{big_n} -> O_{big_n} lambda={lambda} m={m}");
            found.extend(compare(case, image.coefficient(&Partition::column(m)), rule));
        }
        Ok(found)
    });
    merge([sp, o])
}

fn universal_pieri_suite(grid: &Grid) -> Outcome {
    let mut cases = Vec::new();
    for mu in enumerate_partitions(grid.size, Constraint::None) {
        for r in 0..=grid.r {
            cases.push((mu.clone(), r));
        }
    }
    run_cases(cases, |(mu, r)| {
        let r = *r;
        let mut found = Vec::new();
        let top = mu.size() + r;
        let bottom = mu.size().abs_diff(r);
        for size in (bottom..=top).step_by(2) {
            for lambda in partitions_of(size) {
                let witnesses = pieri_set(mu, &lambda, r).len() as u64;
                let nl = nl_coefficient(mu, &Partition::row(r), &lambda);
                found.extend(compare(format!("mu={mu} r={r} lambda={lambda}"), nl, witnesses));
            }
        }
        Ok(found)
    })
}

/// Weak compositions with at most `max_parts` parts and sum at most
/// `max_sum`, including the empty one.
pub fn weak_compositions(max_parts: usize, max_sum: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_parts {
        let mut next = Vec::new();
        for c in &frontier {
            let used: u32 = c.iter().sum();
            for a in 0..=max_sum - used {
                let mut d = c.clone();
                d.push(a);
                next.push(d);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn equinumeration_suite(grid: &Grid) -> Outcome {
    let mut main_cases = Vec::new();
    for alpha in weak_compositions(4, grid.size) {
        for variant in 1..=5u8 {
            let top_rank = if variant == 3 { 5.max(grid.rank) } else { grid.rank };
            for rank in 1..=top_rank {
                let top_m = if variant >= 4 { rank.min(grid.r) } else { grid.r };
                for m in 0..=top_m {
                    main_cases.push((variant, alpha.clone(), rank, m));
                }
            }
        }
    }
    let main = run_cases(main_cases, |(variant, alpha, rank, m)| {
        let (variant, rank, m) = (*variant, *rank, *m);
        let a = main2_count(variant, Side::A, alpha, rank, m)?;
        let b = main2_count(variant, Side::B, alpha, rank, m)?;
        let (g, kind, target) = main2_target(variant, rank, m)?;
        let multiplicity = iterated_pieri_multiplicity(g, kind, alpha, &target)?;
        let case = format!("variant {variant} alpha={alpha:?} rank={rank} m={m}");
        let mut found = compare(format!("{case} sides"), a, b);
        found.extend(compare(format!("{case} multiplicity"), multiplicity, BigInt::from(a)));
        Ok(found)
    });
    let mut one_cases = Vec::new();
    for variant in 1..=4u8 {
        let top_rank = if variant == 2 { 5.max(grid.rank) } else { grid.rank };
        for rank in 1..=top_rank {
            let top_m = if variant >= 3 { rank.min(6) } else { 6 };
            for m in 0..=top_m {
                for k in 0..=grid.r {
                    one_cases.push((variant, k, rank, m));
                }
            }
        }
    }
    let single = run_cases(one_cases, |&(variant, k, rank, m)| {
        let a = burrill_count(variant, Side::A, k, rank, m)?;
        let b = burrill_count(variant, Side::B, k, rank, m)?;
        let (g, target) = match variant {
            1 => (GroupId::sp(rank), Partition::row(m)),
            2 => (GroupId::o(rank), Partition::column(m)),
            3 => (GroupId::so_odd(rank), Partition::column(m)),
            _ => (GroupId::so_even(rank), Partition::column(m)),
        };
        let multiplicity = iterated_standard_multiplicity(g, k, &target)?;
        let case = format!("single-cell variant {variant} k={k} rank={rank} m={m}");
        let mut found = compare(format!("{case} sides"), a, b);
        found.extend(compare(format!("{case} multiplicity"), multiplicity, BigInt::from(a)));
        if variant == 1 {
            let ones = vec![1; k as usize];
            found.extend(compare(format!("{case} unit weights"), a, main2_count(1, Side::A, &ones, rank, m)?));
        }
        Ok(found)
    });
    merge([main, single])
}

// Property checks that are not comparisons against a second computation.
fn property_suite(grid: &Grid) -> Outcome {
    let checks: Vec<(&str, Check)> = vec![
        ("partitions", partition_properties),
        ("laurent", laurent_properties),
        ("characters", character_properties),
        ("coefficients", coefficient_properties),
        ("modification", modification_properties),
        ("pieri", pieri_properties),
        ("tableaux", tableau_properties),
        ("reports", report_properties),
    ];
    merge(checks.into_par_iter().map(|(name, f)| {
        let (n, found) = f(grid);
        let found = found.into_iter().map(|m| Mismatch { case: format!("{name}: {}", m.case), ..m }).collect();
        (n, found)
    }).collect::<Vec<_>>())
}

fn partition_properties(_: &Grid) -> Outcome {
    let mut n = 0;
    let mut found = Vec::new();
    let all: Vec<_> = enumerate_partitions(8, Constraint::None).collect();
    for lambda in &all {
        n += 3;
        found.extend(compare(format!("conjugate twice {lambda}"), lambda.clone(), lambda.conjugate().conjugate()));
        found.extend(check(format!("parity of c {lambda}"), lambda.odd_column_count() % 2 == lambda.size() % 2));
        found.extend(check(format!("parity of r {lambda}"), lambda.odd_row_count() % 2 == lambda.size() % 2));
        for big_n in 1..=6 {
            if lambda.in_par_o(big_n) {
                n += 1;
                let twice = lambda.sharp(big_n).and_then(|s| s.sharp(big_n));
                found.extend(check(format!("sharp twice {lambda} N={big_n}"), twice.as_ref() == Ok(lambda)));
            }
        }
    }
    for mu in all.iter().filter(|m| m.size() <= 5) {
        for r in 0..=3 {
            for lambda in horizontal_strips_added(mu, r, 9) {
                n += 1;
                let dual = is_vertical_strip(&mu.conjugate(), &lambda.conjugate());
                found.extend(check(format!("strip duality {mu} {lambda}"), is_horizontal_strip(mu, &lambda) && dual));
            }
        }
        for lambda in all.iter().filter(|l| l.size() <= 6) {
            n += 1;
            let h = is_horizontal_strip(mu, lambda);
            let v = is_vertical_strip(&mu.conjugate(), &lambda.conjugate());
            found.extend(compare(format!("strip duality {mu} {lambda}"), h, v));
        }
    }
    let constraints = [Constraint::None, Constraint::MaxLength(2), Constraint::TwoColumnBound(3)];
    for c in constraints {
        n += 1;
        let got: Vec<_> = enumerate_partitions(7, c).collect();
        let filtered: Vec<_> = enumerate_partitions(7, Constraint::None).filter(|l| c.admits(l)).collect();
        let mut sorted = got.clone();
        sorted.sort();
        sorted.dedup();
        found.extend(check(format!("enumeration {c:?}"), sorted.len() == got.len() && got == filtered));
    }
    (n, found)
}

fn random_polynomial(rng: &mut StdRng, nvars: usize) -> LaurentPolynomial {
    let terms: Vec<(Vec<i32>, i64)> =
        (0..rng.gen_range(1..4)).map(|_| ((0..nvars).map(|_| rng.gen_range(-2..=2)).collect(), rng.gen_range(-3..=3))).collect();
    LaurentPolynomial::from_terms(nvars, terms).expect("arity matches")
}

fn laurent_properties(_: &Grid) -> Outcome {
    let mut rng = StdRng::seed_from_u64(7);
    let mut n = 0;
    let mut found = Vec::new();
    for trial in 0..200 {
        let nvars = 1 + trial % 3;
        let [a, b, c] = [0; 3].map(|_| random_polynomial(&mut rng, nvars));
        let case = |what: &str| format!("{what} a={a} b={b} c={c}");
        n += 5;
        found.extend(compare(case("associativity"), &(&a * &b) * &c, &a * &(&b * &c)));
        found.extend(compare(case("commutativity"), &a * &b, &b * &a));
        found.extend(compare(case("distributivity"), &a * &(&b + &c), &(&a * &b) + &(&a * &c)));
        if !b.is_zero() {
            let quotient = (&a * &b).exact_divide(&b);
            found.extend(check(case("exact division"), quotient.as_ref() == Ok(&a)));
        }
        let m = vec![vec![a.clone(), b.clone()], vec![c.clone(), a.clone()]];
        let swapped = vec![m[1].clone(), m[0].clone()];
        let k = BigInt::from(3);
        let scaled = vec![m[0].iter().map(|p| p.scale(&k)).collect(), m[1].clone()];
        let det = lp_determinant(nvars, &m).unwrap();
        found.extend(compare(case("row swap"), det.scale(&BigInt::from(-1)), lp_determinant(nvars, &swapped).unwrap()));
        found.extend(compare(case("row scaling"), det.scale(&k), lp_determinant(nvars, &scaled).unwrap()));
    }
    (n, found)
}

fn character_properties(grid: &Grid) -> Outcome {
    let mut groups = Vec::new();
    for n in 1..=grid.rank.min(3) {
        groups.extend([GroupId::sp(n), GroupId::so_odd(n), GroupId::so_even(n)]);
    }
    let cases = triples(&groups, 6, |_| vec![0]);
    let symmetry = run_triples(cases, |g, lambda, _, case| {
        let chi = irreducible_character(g, lambda)?;
        let n = g.nvars();
        let mut found = Vec::new();
        for i in 0..n {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.swap(0, i);
            found.extend(compare(format!("{case} swap 1,{}", i + 1), chi.clone(), chi.permute_variables(&perm)));
            // for the even orthogonal group S_[λ] is invariant under single inversions too
            found.extend(compare(format!("{case} invert {}", i + 1), chi.clone(), chi.invert_variable(i)));
        }
        Ok(found)
    });
    let mut rng = StdRng::seed_from_u64(11);
    let mut combos = Vec::new();
    for &g in &groups {
        let pool = labels(g, 4);
        for _ in 0..10 {
            let mut e = RepRingElement::zero(g);
            for _ in 0..3 {
                let label = pool[rng.gen_range(0..pool.len())].clone();
                e.add_term(label, rng.gen_range(-3..=3)).expect("label admitted");
            }
            combos.push(e);
        }
    }
    let round_trip = run_cases(combos, |e| {
        let chi = character_of(e)?;
        Ok(compare(format!("{} {e}", e.group()), e.clone(), decompose_character(e.group(), &chi)?))
    });
    let mut identities = Vec::new();
    for n in 1..=3 {
        for r in 0..=6 {
            identities.push(("sp", n, r));
        }
        for r in 0..=n {
            identities.push(("ext", n, r));
        }
        for r in 0..=2 * n {
            identities.push(("sym", n, r));
        }
    }
    let identities = run_cases(identities, |&(which, n, r)| {
        let case = format!("{which} n={n} r={r}");
        Ok(match which {
            "sp" => {
                let g = GroupId::sp(n);
                compare(&case, irreducible_character(g, &Partition::row(r))?, power_character(g, PowerKind::Sym, r)?)
            }
            "ext" => {
                let g = GroupId::so_odd(n);
                compare(&case, irreducible_character(g, &Partition::column(r))?, power_character(g, PowerKind::Ext, r)?)
            }
            _ => {
                let g = GroupId::so_odd(n);
                let mut sum = LaurentPolynomial::zero(n as usize);
                for s in 0..=r / 2 {
                    sum = sum.try_add(&irreducible_character(g, &Partition::row(r - 2 * s))?)?;
                }
                compare(&case, power_character(g, PowerKind::Sym, r)?, sum)
            }
        })
    });
    merge([symmetry, round_trip, identities])
}

fn coefficient_properties(_: &Grid) -> Outcome {
    let upto = |k| enumerate_partitions(k, Constraint::None).collect::<Vec<_>>();
    let small = upto(5);
    let lr = run_cases(upto(8), |lambda| {
        let mut found = Vec::new();
        for mu in enumerate_partitions(lambda.size(), Constraint::None) {
            for nu in enumerate_partitions(lambda.size(), Constraint::None) {
                let value = lr_coefficient(&mu, &nu, lambda);
                let case = format!("mu={mu} nu={nu} lambda={lambda}");
                found.extend(compare(format!("symmetry {case}"), value, lr_coefficient(&nu, &mu, lambda)));
                let support = mu.size() + nu.size() == lambda.size() && mu.is_contained_in(lambda) && nu.is_contained_in(lambda);
                found.extend(check(format!("vanishing {case}"), value == 0 || support));
            }
            let r = lambda.size().saturating_sub(mu.size());
            let row = u64::from(is_horizontal_strip(&mu, lambda) && mu.size() + r == lambda.size());
            let column = u64::from(is_vertical_strip(&mu, lambda) && mu.size() + r == lambda.size());
            found.extend(compare(format!("row rule mu={mu} lambda={lambda}"), row, lr_coefficient(&mu, &Partition::row(r), lambda)));
            found.extend(compare(format!("column rule mu={mu} lambda={lambda}"), column, lr_coefficient(&mu, &Partition::column(r), lambda)));
        }
        Ok(found)
    });
    let nl = run_cases(small.clone(), |mu| {
        let mut found = Vec::new();
        for nu in &small {
            for lambda in &small {
                let v = nl_coefficient(mu, nu, lambda);
                let case = format!("mu={mu} nu={nu} lambda={lambda}");
                if (mu.size() + nu.size() + lambda.size()) % 2 == 1 {
                    found.extend(compare(format!("parity {case}"), 0, v));
                }
                let others = [
                    nl_coefficient(nu, mu, lambda),
                    nl_coefficient(mu, lambda, nu),
                    nl_coefficient(lambda, nu, mu),
                    nl_coefficient(nu, lambda, mu),
                    nl_coefficient(lambda, mu, nu),
                ];
                found.extend(check(format!("symmetry {case}"), others.iter().all(|&o| o == v)));
            }
        }
        Ok(found)
    });
    // products of universal symplectic characters, pushed down to Sp_2n
    let mut sp_cases = Vec::new();
    for n in 1..=2u32 {
        for mu in upto(4) {
            for nu in upto(4) {
                sp_cases.push((GroupId::sp(n), mu.clone(), nu.clone()));
            }
        }
    }
    let sp_product = run_cases(sp_cases, |(g, mu, nu)| {
        let g = *g;
        let lhs = signed_character(g, &sp_modify(mu, g.rank))?.try_mul(&signed_character(g, &sp_modify(nu, g.rank))?)?;
        let mut rhs = LaurentPolynomial::zero(g.nvars());
        for lambda in upto(mu.size() + nu.size()) {
            let k = nl_coefficient(mu, nu, &lambda);
            if k > 0 {
                rhs = rhs.try_add(&signed_character(g, &sp_modify(&lambda, g.rank))?.scale(&BigInt::from(k)))?;
            }
        }
        Ok(compare(format!("{g} mu={mu} nu={nu}"), lhs, rhs))
    });
    merge([lr, nl, sp_product])
}

fn modification_properties(_: &Grid) -> Outcome {
    let mut n = 0;
    let mut found = Vec::new();
    for lambda in enumerate_partitions(9, Constraint::None) {
        for rank in 1..=4 {
            n += 1;
            if let SignedIrrep::Term { label, .. } = sp_modify(&lambda, rank) {
                let again = sp_modify(&label, rank);
                found.extend(compare(format!("sp fixed point {lambda} n={rank}"), SignedIrrep::Term { sign: 1, label }, again));
            }
            if lambda.len() == rank as usize + 1 {
                found.extend(compare(format!("sp vanishing {lambda} n={rank}"), SignedIrrep::Zero, sp_modify(&lambda, rank)));
            }
        }
        let c = |j| lambda.column_length(j);
        for big_n in 1..=6 {
            n += 1;
            if let SignedIrrep::Term { label, .. } = o_modify(&lambda, big_n) {
                let again = o_modify(&label, big_n);
                found.extend(compare(format!("o fixed point {lambda} N={big_n}"), SignedIrrep::Term { sign: 1, label }, again));
            }
            if c(1) + c(2) == big_n + 1 || c(1) + c(3) == big_n + 2 {
                found.extend(compare(format!("o vanishing {lambda} N={big_n}"), SignedIrrep::Zero, o_modify(&lambda, big_n)));
            }
        }
    }
    (n, found)
}

fn pieri_properties(grid: &Grid) -> Outcome {
    let mut n = 0;
    let mut found = Vec::new();
    let all: Vec<_> = enumerate_partitions(grid.size, Constraint::None).collect();
    for mu in &all {
        for lambda in &all {
            for r in 0..=4 {
                n += 2;
                let forward = pieri_set(mu, lambda, r).witnesses;
                found.extend(compare(format!("witness symmetry {mu} {lambda} {r}"), format!("{forward:?}"), format!("{:?}", pieri_set(lambda, mu, r).witnesses)));
                let rank = 3;
                let forward = dual_pieri_set(mu, lambda, r, rank).witnesses;
                let back = dual_pieri_set(lambda, mu, r, rank).witnesses;
                found.extend(compare(format!("dual witness symmetry {mu} {lambda} {r}"), format!("{forward:?}"), format!("{back:?}")));
            }
        }
    }
    for lambda in enumerate_partitions(4, Constraint::None) {
        for mu in enumerate_partitions(4, Constraint::None) {
            n += 1;
            let expected = if mu.len() == 2 && lambda.len() < 2 { 2 } else { 1 };
            found.extend(compare(format!("factor {lambda} {mu}"), expected, so_even_factor(&lambda, &mu, 2)));
        }
    }
    (n, found)
}

fn tableau_properties(_: &Grid) -> Outcome {
    let mut n = 0;
    let mut found = Vec::new();
    for alpha in weak_compositions(3, 6) {
        let mut permuted = alpha.clone();
        permuted.reverse();
        permuted.rotate_left(alpha.len().min(1));
        for kind in [Strictness::Column, Strictness::Row] {
            for bound in [2usize, 3, 9] {
                n += 1;
                let total = count_strict_tableaux(kind, &alpha, bound, |_| true);
                let other = count_strict_tableaux(kind, &permuted, bound, |_| true);
                found.extend(compare(format!("{kind:?} {alpha:?} vs {permuted:?} l<={bound}"), total, other));
            }
        }
    }
    (n, found)
}

fn report_properties(_: &Grid) -> Outcome {
    let report = SuiteReport {
        cases: 2,
        grid: BTreeMap::from([("max_size".into(), 3), ("max_r".into(), 1)]),
        mismatches: vec![Mismatch { actual: "1".into(), case: "x \"quoted\"".into(), expected: "2".into() }],
        passed: false,
        suite: "sample".into(),
        wall_time_ms: 5,
    };
    let text = report.to_json();
    let parsed: SuiteReport = serde_json::from_str(&text).expect("report parses");
    let via_value: serde_json::Value = serde_json::from_str(&text).expect("report parses");
    let again = serde_json::to_string_pretty(&via_value).unwrap();
    (2, [compare("typed round trip", text.clone(), parsed.to_json()), compare("untyped round trip", text, again)].concat())
}
