//! Integer partitions and the strip combinatorics built on them.
//!
//! A [`Partition`] stores its positive parts only, so `[3,1]` and `[3,1,0,0]`
//! are the same value. Cells are indexed from zero internally, while the
//! accessors that mirror the usual one-based notation say so in their name
//! (`column_length(1)` is the length of the first column).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from a weakly decreasing sequence. Trailing zeros
    /// are dropped.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::NotAPartition(parts.iter().map(|&p| p as i64).collect()));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from signed entries, rejecting negative or
    /// non-monotone input.
    pub fn from_signed(entries: &[i64]) -> Result<Self> {
        if entries.iter().any(|&e| e < 0 || e > u32::MAX as i64) {
            return Err(Error::NotAPartition(entries.to_vec()));
        }
        Partition::new(entries.iter().map(|&e| e as u32).collect::<Vec<_>>())
    }

    /// The one-row partition `(r)`.
    pub fn row(r: u32) -> Self {
        if r == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![r] }
        }
    }

    /// The one-column partition `(1^r)`.
    pub fn column(r: u32) -> Self {
        Partition { parts: vec![1; r as usize] }
    }

    /// Builds a partition from its column lengths.
    pub fn from_columns(columns: &[u32]) -> Result<Self> {
        Ok(Partition::new(columns.to_vec())?.conjugate())
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Part `i` counted from zero; zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Largest part (zero for the empty partition).
    pub fn first(&self) -> u32 {
        self.part(0)
    }

    /// Length of column `j`, counted from one as in `λ'_j`.
    pub fn column_length(&self, j: u32) -> u32 {
        if j == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= j).count() as u32
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.first()).map(|j| self.column_length(j)).collect();
        Partition { parts }
    }

    /// `self ⊆ other` as diagrams.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Number of columns of odd length, `c(λ)`.
    pub fn odd_column_count(&self) -> u32 {
        (1..=self.first()).filter(|&j| self.column_length(j) % 2 == 1).count() as u32
    }

    /// Number of rows of odd length, `r(λ)`.
    pub fn odd_row_count(&self) -> u32 {
        self.parts.iter().filter(|&&p| p % 2 == 1).count() as u32
    }

    /// Membership in `Par(Sp_2n)`: at most `n` rows.
    pub fn in_par_sp(&self, n: u32) -> bool {
        self.len() <= n as usize
    }

    /// Membership in `Par(O_N)`: the first two columns hold at most `N` cells.
    pub fn in_par_o(&self, big_n: u32) -> bool {
        self.column_length(1) + self.column_length(2) <= big_n
    }

    /// Replaces the first column (of length `λ'_1`) by a column of length
    /// `N - λ'_1`. This is the label of `V_[λ] ⊗ det` for `O_N`.
    pub fn sharp(&self, big_n: u32) -> Result<Partition> {
        if !self.in_par_o(big_n) {
            return Err(Error::LabelOutOfRange {
                label: self.clone(),
                group: format!("O_{big_n}"),
            });
        }
        let mut columns = self.conjugate().parts;
        let first = big_n - self.column_length(1);
        if columns.is_empty() {
            columns.push(first);
        } else {
            columns[0] = first;
        }
        Partition::from_columns(&columns)
    }

    /// Partitions obtained by adding one cell.
    pub fn add_one_cell(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            if i == 0 || self.part(i) < self.part(i - 1) {
                let mut parts = self.parts.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// Partitions obtained by removing one cell.
    pub fn remove_one_cell(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            if self.part(i) > self.part(i + 1) {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                out.push(Partition::new(parts).expect("removing a corner keeps monotonicity"));
            }
        }
        out
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.to_string() };
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| parse_err("expected brackets, e.g. [3,1] or []"))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| parse_err("parts must be nonnegative integers")))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|_| parse_err("parts must be weakly decreasing"))
    }
}

/// `outer/inner` has at most one cell in each column.
///
/// Returns `false` when `inner ⊄ outer`.
pub fn is_horizontal_strip(inner: &Partition, outer: &Partition) -> bool {
    if !inner.is_contained_in(outer) {
        return false;
    }
    // interlacing: outer_1 >= inner_1 >= outer_2 >= inner_2 >= ...
    (0..outer.len()).all(|i| inner.part(i) >= outer.part(i + 1))
}

/// `outer/inner` has at most one cell in each row.
///
/// Returns `false` when `inner ⊄ outer`.
pub fn is_vertical_strip(inner: &Partition, outer: &Partition) -> bool {
    inner.is_contained_in(outer) && (0..outer.len()).all(|i| outer.part(i) <= inner.part(i) + 1)
}

/// Constraint applied by [`enumerate_partitions`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constraint {
    None,
    /// `l(λ) ≤ n`
    MaxLength(u32),
    /// `λ'_1 + λ'_2 ≤ N`
    TwoColumnBound(u32),
}

impl Constraint {
    pub fn admits(&self, p: &Partition) -> bool {
        match *self {
            Constraint::None => true,
            Constraint::MaxLength(n) => p.in_par_sp(n),
            Constraint::TwoColumnBound(big_n) => p.in_par_o(big_n),
        }
    }
}

/// All partitions of `size`, in reverse lexicographic order.
pub fn partitions_of(size: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(size, size, &mut current, &mut out);
    out
}

fn fill_partitions(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        fill_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

/// Every partition of size at most `max_size` admitted by `constraint`,
/// ordered by size and then reverse-lexicographically within a size.
pub fn enumerate_partitions(max_size: u32, constraint: Constraint) -> impl Iterator<Item = Partition> {
    (0..=max_size).flat_map(partitions_of).filter(move |p| constraint.admits(p))
}

/// All `ξ ⊆ μ` with `μ/ξ` a horizontal strip.
pub fn horizontal_strips_removed(mu: &Partition) -> Vec<Partition> {
    let ranges: Vec<(u32, u32)> = (0..mu.len()).map(|i| (mu.part(i + 1), mu.part(i))).collect();
    product_of_ranges(&ranges)
}

/// All `λ ⊇ ξ` with `λ/ξ` a horizontal strip of exactly `size` cells and
/// `l(λ) ≤ max_len`.
pub fn horizontal_strips_added(xi: &Partition, size: u32, max_len: usize) -> Vec<Partition> {
    if xi.len() > max_len {
        return Vec::new();
    }
    let rows = (xi.len() + 1).min(max_len);
    let mut ranges = Vec::with_capacity(rows);
    for i in 0..rows {
        let lo = xi.part(i);
        let hi = if i == 0 { xi.part(0) + size } else { xi.part(i - 1) };
        ranges.push((lo, hi));
    }
    product_of_ranges(&ranges)
        .into_iter()
        .filter(|p| p.size() == xi.size() + size)
        .collect()
}

/// All `ξ ⊆ μ` with `μ/ξ` a vertical strip.
pub fn vertical_strips_removed(mu: &Partition) -> Vec<Partition> {
    let ranges: Vec<(u32, u32)> = (0..mu.len()).map(|i| (mu.part(i).saturating_sub(1), mu.part(i))).collect();
    product_of_ranges(&ranges)
}

/// All `λ ⊇ ξ` with `λ/ξ` a vertical strip of exactly `size` cells and
/// `l(λ) ≤ max_len`.
pub fn vertical_strips_added(xi: &Partition, size: u32, max_len: usize) -> Vec<Partition> {
    if xi.len() > max_len {
        return Vec::new();
    }
    let rows = (xi.len() + size as usize).min(max_len);
    let ranges: Vec<(u32, u32)> = (0..rows).map(|i| (xi.part(i), xi.part(i) + 1)).collect();
    product_of_ranges(&ranges)
        .into_iter()
        .filter(|p| p.size() == xi.size() + size)
        .collect()
}

// Every weakly decreasing sequence with entry i drawn from ranges[i].
fn product_of_ranges(ranges: &[(u32, u32)]) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(ranges.len());
    fn go(ranges: &[(u32, u32)], current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        let i = current.len();
        if i == ranges.len() {
            let mut parts = current.clone();
            while parts.last() == Some(&0) {
                parts.pop();
            }
            out.push(Partition { parts });
            return;
        }
        let (lo, mut hi) = ranges[i];
        if let Some(&prev) = current.last() {
            hi = hi.min(prev);
        }
        for v in (lo..=hi).rev() {
            current.push(v);
            go(ranges, current, out);
            current.pop();
        }
    }
    go(ranges, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("[3,1]").conjugate(), p("[2,1,1]"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("[2,2]").conjugate(), p("[2,2]"));
    }

    #[test]
    fn strip_examples() {
        assert!(is_horizontal_strip(&p("[2,1]"), &p("[3,1]")));
        assert!(!is_horizontal_strip(&p("[1]"), &p("[2,2]")));
        assert!(is_horizontal_strip(&p("[2,1]"), &p("[2,1]")));
        assert!(is_vertical_strip(&p("[1]"), &p("[1,1]")));
        assert!(!is_vertical_strip(&p("[1]"), &p("[3]")));
        assert!(is_vertical_strip(&p("[]"), &p("[1,1,1]")));
        // inner not contained in outer
        assert!(!is_horizontal_strip(&p("[3]"), &p("[2,1]")));
        assert!(!is_vertical_strip(&p("[1,1,1]"), &p("[2]")));
    }

    #[test]
    fn odd_counts() {
        assert_eq!(p("[2,1]").odd_column_count(), 1);
        assert_eq!(p("[1,1]").odd_column_count(), 0);
        assert_eq!(p("[3]").odd_column_count(), 3);
        assert_eq!(p("[3,1]").odd_row_count(), 2);
        assert_eq!(p("[2,2]").odd_row_count(), 0);
        assert_eq!(Partition::empty().odd_row_count(), 0);
    }

    #[test]
    fn sharp_examples() {
        assert_eq!(p("[1]").sharp(3).unwrap(), p("[1,1]"));
        assert_eq!(p("[2,2]").sharp(4).unwrap(), p("[2,2]"));
        assert_eq!(Partition::empty().sharp(5).unwrap(), Partition::column(5));
        assert!(p("[1,1,1]").sharp(2).is_err());
    }

    #[test]
    fn membership() {
        assert!(!p("[1,1,1]").in_par_sp(2));
        assert!(!p("[2,2]").in_par_o(2));
        assert!(p("[3,1]").in_par_o(4));
    }

    #[test]
    fn enumeration_examples() {
        let all: Vec<_> = enumerate_partitions(2, Constraint::None).collect();
        assert_eq!(all, vec![p("[]"), p("[1]"), p("[2]"), p("[1,1]")]);
        let rows: Vec<_> = enumerate_partitions(3, Constraint::MaxLength(1)).collect();
        assert_eq!(rows, vec![p("[]"), p("[1]"), p("[2]"), p("[3]")]);
        let o1: Vec<_> = enumerate_partitions(2, Constraint::TwoColumnBound(1)).collect();
        assert_eq!(o1, vec![p("[]"), p("[1]")]);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p(" [ 3 , 1 ] ").to_string(), "[3,1]");
        assert_eq!(p("[]").to_string(), "[]");
        assert_eq!(p("[2,0]"), p("[2]"));
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("3,1".parse::<Partition>().is_err());
        assert!("[a]".parse::<Partition>().is_err());
    }

    #[test]
    fn json_is_a_plain_array() {
        let json = serde_json::to_string(&p("[3,1]")).unwrap();
        assert_eq!(json, "[3,1]");
        let back: Partition = serde_json::from_str("[3,1,0]").unwrap();
        assert_eq!(back, p("[3,1]"));
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }

    #[test]
    fn one_cell_neighbours() {
        assert_eq!(p("[2,1]").add_one_cell(), vec![p("[3,1]"), p("[2,2]"), p("[2,1,1]")]);
        assert_eq!(p("[2,1]").remove_one_cell(), vec![p("[1,1]"), p("[2]")]);
        assert_eq!(Partition::empty().remove_one_cell(), vec![]);
    }

    #[test]
    fn strip_generators_match_predicates() {
        for mu in enumerate_partitions(7, Constraint::None) {
            let removed = horizontal_strips_removed(&mu);
            let expected: Vec<_> =
                enumerate_partitions(mu.size(), Constraint::None).filter(|x| is_horizontal_strip(x, &mu)).collect();
            assert_eq!(sorted(removed), sorted(expected), "{mu}");

            let removed = vertical_strips_removed(&mu);
            let expected: Vec<_> =
                enumerate_partitions(mu.size(), Constraint::None).filter(|x| is_vertical_strip(x, &mu)).collect();
            assert_eq!(sorted(removed), sorted(expected), "{mu}");

            for s in 0..4 {
                for max_len in [1usize, 2, 10] {
                    let big = crate::partition::partitions_of(mu.size() + s);
                    let added = horizontal_strips_added(&mu, s, max_len);
                    let expected: Vec<_> = big
                        .iter()
                        .filter(|l| l.len() <= max_len && is_horizontal_strip(&mu, l))
                        .cloned()
                        .collect();
                    assert_eq!(sorted(added), sorted(expected), "{mu} +h{s} len {max_len}");
                    let added = vertical_strips_added(&mu, s, max_len);
                    let expected: Vec<_> =
                        big.iter().filter(|l| l.len() <= max_len && is_vertical_strip(&mu, l)).cloned().collect();
                    assert_eq!(sorted(added), sorted(expected), "{mu} +v{s} len {max_len}");
                }
            }
        }
    }

    fn sorted(mut v: Vec<Partition>) -> Vec<Partition> {
        v.sort();
        v
    }
}
