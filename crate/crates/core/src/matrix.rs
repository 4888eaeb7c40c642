//! Determinants over commutative rings by cofactor expansion, memoized over
//! the set of columns still available. Cost is `O(2^n · n)` ring products,
//! which is fine for the small matrices that appear in character formulas.

use crate::error::{Error, Result};

/// The few ring operations the determinant needs.
pub trait RingElement: Clone {
    fn zero_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
}

/// Determinant of a square matrix. `one` is returned for the 0×0 matrix and
/// supplies the zero element otherwise.
pub fn determinant<R: RingElement>(matrix: &[Vec<R>], one: &R) -> Result<R> {
    let n = matrix.len();
    if matrix.iter().any(|row| row.len() != n) {
        return Err(Error::NonSquare);
    }
    if n == 0 {
        return Ok(one.clone());
    }
    if n > 20 {
        return Err(Error::Unsupported(format!("{n}x{n} determinant is too large for cofactor expansion")));
    }
    let mut memo: Vec<Option<R>> = vec![None; 1 << n];
    memo[0] = Some(one.clone());
    Ok(expand(matrix, (1u32 << n) - 1, &mut memo))
}

fn expand<R: RingElement>(matrix: &[Vec<R>], mask: u32, memo: &mut [Option<R>]) -> R {
    if let Some(v) = &memo[mask as usize] {
        return v.clone();
    }
    let n = matrix.len();
    let row = n - mask.count_ones() as usize;
    let mut acc: Option<R> = None;
    let mut position = 0;
    for col in 0..n {
        if mask & (1 << col) == 0 {
            continue;
        }
        let entry = &matrix[row][col];
        let negative = position % 2 == 1;
        position += 1;
        if entry.is_zero() {
            continue;
        }
        let minor = expand(matrix, mask & !(1 << col), memo);
        if minor.is_zero() {
            continue;
        }
        let term = entry.mul_ref(&minor);
        acc = Some(match acc {
            None if negative => term.zero_like().sub_ref(&term),
            None => term,
            Some(a) if negative => a.sub_ref(&term),
            Some(a) => a.add_ref(&term),
        });
    }
    let value = acc.unwrap_or_else(|| matrix[row][0].zero_like());
    memo[mask as usize] = Some(value.clone());
    value
}

#[cfg(test)]
mod tests {
    use super::*;

    impl RingElement for i64 {
        fn zero_like(&self) -> Self {
            0
        }
        fn is_zero(&self) -> bool {
            *self == 0
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

    // Leibniz formula, summing over all permutations.
    fn leibniz(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = 0;
        permute(&mut perm, 0, m, &mut total);
        total
    }

    fn permute(perm: &mut Vec<usize>, k: usize, m: &[Vec<i64>], total: &mut i64) {
        let n = perm.len();
        if k == n {
            let mut inversions = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if perm[i] > perm[j] {
                        inversions += 1;
                    }
                }
            }
            let prod: i64 = (0..n).map(|i| m[i][perm[i]]).product();
            *total += if inversions % 2 == 0 { prod } else { -prod };
            return;
        }
        for i in k..n {
            perm.swap(k, i);
            permute(perm, k + 1, m, total);
            perm.swap(k, i);
        }
    }

    #[test]
    fn matches_leibniz() {
        let mut seed = 17u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 7) as i64 - 3
        };
        for n in 0..6 {
            for _ in 0..20 {
                let m: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| next()).collect()).collect();
                assert_eq!(determinant(&m, &1).unwrap(), leibniz(&m));
            }
        }
    }

    #[test]
    fn rejects_ragged() {
        let m = vec![vec![1i64, 2], vec![3]];
        assert_eq!(determinant(&m, &1), Err(Error::NonSquare));
    }
}
