//! Modification rules: the images of universal symplectic and orthogonal
//! Schur functions in the representation rings of `Sp_2n` and `O_N`, each
//! either zero or a signed irreducible character.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Family, GroupId, RepRingElement};
use crate::partition::{partitions_of, Partition};
use crate::schur::nl_coefficient;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SignedIrrep {
    Zero,
    Term { sign: i8, label: Partition },
}

impl SignedIrrep {
    fn plus(label: Partition) -> Self {
        SignedIrrep::Term { sign: 1, label }
    }
}

impl std::fmt::Display for SignedIrrep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SignedIrrep::Zero => write!(f, "0"),
            SignedIrrep::Term { sign, label } => write!(f, "{}{label}", if *sign < 0 { "-" } else { "+" }),
        }
    }
}

// α_j = λ'_j - (j - 1) for j = 1..=λ_1.
fn alpha(label: &Partition) -> Vec<i64> {
    (1..=label.first()).map(|j| label.column_length(j) as i64 - (j as i64 - 1)).collect()
}

// Sorts β decreasingly, tracking the sign of the sorting permutation, and
// rebuilds μ from μ'_j = γ_j + j - 1. Repeated entries or a negative
// column length give zero.
fn rebuild(beta: Vec<i64>, sign: i8) -> SignedIrrep {
    let mut gamma = beta;
    let mut sign = sign;
    // insertion sort counts transpositions
    for i in 1..gamma.len() {
        let mut k = i;
        while k > 0 && gamma[k - 1] < gamma[k] {
            gamma.swap(k - 1, k);
            sign = -sign;
            k -= 1;
        }
    }
    if gamma.windows(2).any(|w| w[0] == w[1]) {
        return SignedIrrep::Zero;
    }
    let columns: Option<Vec<u32>> = gamma.iter().enumerate().map(|(j, &g)| u32::try_from(g + j as i64).ok()).collect();
    match columns.and_then(|c| Partition::from_columns(&c).ok()) {
        Some(label) => SignedIrrep::Term { sign, label },
        None => SignedIrrep::Zero,
    }
}

/// Image of `s_⟨λ⟩` in the representation ring of `Sp_2n`.
pub fn sp_modify(label: &Partition, n: u32) -> SignedIrrep {
    if label.len() <= n as usize {
        return SignedIrrep::plus(label.clone());
    }
    let r = label.first() as i64;
    let n = n as i64;
    let a = alpha(label);
    if a.iter().any(|&x| x >= 2 * n + r + 2) {
        return SignedIrrep::Zero;
    }
    for i in 0..a.len() {
        if a[i..].iter().any(|&y| a[i] + y == 2 * n + 2) {
            return SignedIrrep::Zero;
        }
    }
    let p = a.iter().filter(|&&x| x >= n + 2).count();
    let beta: Vec<i64> = a.iter().enumerate().map(|(i, &x)| if i < p { 2 * n + 2 - x } else { x }).collect();
    let result = rebuild(beta, if p % 2 == 0 { 1 } else { -1 });
    debug_assert!(matches!(&result, SignedIrrep::Term { label, .. } if label.len() <= n as usize) || result == SignedIrrep::Zero);
    result
}

/// Image of `s_[λ]` in the representation ring of `O_N`.
///
/// The vanishing test `α_i + α_j = N` is applied to pairs of distinct
/// indices. An entry with `2α_i = N` is handled by the reflection step.
pub fn o_modify(label: &Partition, big_n: u32) -> SignedIrrep {
    if label.in_par_o(big_n) {
        return SignedIrrep::plus(label.clone());
    }
    let r = label.first() as i64;
    let big_n = big_n as i64;
    let a = alpha(label);
    if a.iter().any(|&x| x >= big_n + r) {
        return SignedIrrep::Zero;
    }
    for i in 0..a.len() {
        if a[i + 1..].iter().any(|&y| a[i] + y == big_n) {
            return SignedIrrep::Zero;
        }
    }
    let p = a.iter().filter(|&&x| 2 * x > big_n).count();
    let reflected = if p % 2 == 0 {
        p
    } else {
        // past the end, α_{r+1} = λ'_{r+1} - r = -r
        let next = a.get(p).copied().unwrap_or(-r);
        if a[p - 1] + next > big_n {
            p + 1
        } else {
            p - 1
        }
    };
    let beta: Vec<i64> = a.iter().enumerate().map(|(i, &x)| if i < reflected { big_n - x } else { x }).collect();
    let result = rebuild(beta, 1);
    debug_assert!(matches!(&result, SignedIrrep::Term { label, .. } if label.in_par_o(big_n as u32)) || result == SignedIrrep::Zero);
    result
}

/// Applies the modification rule of `g` (`Sp` or `O`).
pub fn modify(g: GroupId, label: &Partition) -> Result<SignedIrrep> {
    match g.family {
        Family::Sp => Ok(sp_modify(label, g.rank)),
        Family::O => Ok(o_modify(label, g.rank)),
        _ => Err(Error::Unsupported(format!("no modification rule for {g}"))),
    }
}

/// `Σ_λ NL(μ,ν,λ) · modify(λ)`: the product `V_μ ⊗ V_ν` computed in the
/// universal ring and pushed down to `g`.
pub fn formal_nl_product(g: GroupId, mu: &Partition, nu: &Partition) -> Result<RepRingElement> {
    g.check_label(mu)?;
    g.check_label(nu)?;
    let mut out = RepRingElement::zero(g);
    let total = mu.size() + nu.size();
    let max_first = mu.first() + nu.first();
    let max_len = mu.len() + nu.len();
    for size in (0..=total).rev().step_by(2) {
        for lambda in partitions_of(size) {
            if lambda.first() > max_first || lambda.len() > max_len {
                continue;
            }
            let c = nl_coefficient(mu, nu, &lambda);
            if c == 0 {
                continue;
            }
            if let SignedIrrep::Term { sign, label } = modify(g, &lambda)? {
                out.add_term(label, BigInt::from(c) * sign)?;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{irreducible_character, o_label_on_so};
    use crate::laurent::LaurentPolynomial;
    use crate::partition::{enumerate_partitions, Constraint};
    use crate::schur::{o_schur_h, sp_schur_h};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn term(sign: i8, s: &str) -> SignedIrrep {
        SignedIrrep::Term { sign, label: p(s) }
    }

    #[test]
    fn sp_examples() {
        assert_eq!(sp_modify(&p("[3,1]"), 2), term(1, "[3,1]"));
        for n in 1..4 {
            assert_eq!(sp_modify(&Partition::column(n + 1), n), SignedIrrep::Zero);
        }
        assert_eq!(sp_modify(&p("[2,2]"), 1), SignedIrrep::Zero);
        // (1,1,1) with n = 1: α = (3), reflected to (1), so μ = (1)
        assert_eq!(sp_modify(&p("[1,1,1]"), 1), term(-1, "[1]"));
    }

    #[test]
    fn o_examples() {
        assert_eq!(o_modify(&p("[2,1]"), 3), term(1, "[2,1]"));
        assert_eq!(o_modify(&p("[1,1,1]"), 2), SignedIrrep::Zero);
        assert_eq!(o_modify(&p("[2,2]"), 2), term(-1, "[2]"));
    }

    #[test]
    fn product_examples() {
        let sp1 = GroupId::sp(1);
        let prod = formal_nl_product(sp1, &p("[1]"), &p("[1]")).unwrap();
        let mut expected = RepRingElement::zero(sp1);
        expected.add_term(p("[2]"), 1).unwrap();
        expected.add_term(p("[]"), 1).unwrap();
        assert_eq!(prod, expected);
        for g in [GroupId::sp(2), GroupId::o(3)] {
            for mu in enumerate_partitions(4, Constraint::None).filter(|m| g.admits(m)) {
                assert_eq!(formal_nl_product(g, &mu, &Partition::empty()).unwrap(), RepRingElement::basis(g, mu).unwrap());
            }
        }
        let o2 = formal_nl_product(GroupId::o(2), &p("[1,1]"), &p("[2]")).unwrap();
        assert_eq!(o2.coefficient(&p("[1,1]")), BigInt::from(0));
    }

    #[test]
    fn outputs_are_fixed_points() {
        for lambda in enumerate_partitions(9, Constraint::None) {
            for n in 1..=4 {
                if let SignedIrrep::Term { label, .. } = sp_modify(&lambda, n) {
                    assert_eq!(sp_modify(&label, n), SignedIrrep::plus(label.clone()));
                }
            }
            for big_n in 1..=6 {
                if let SignedIrrep::Term { label, .. } = o_modify(&lambda, big_n) {
                    assert_eq!(o_modify(&label, big_n), SignedIrrep::plus(label.clone()));
                }
            }
        }
    }

    #[test]
    fn vanishing_rows() {
        for lambda in enumerate_partitions(10, Constraint::None) {
            for n in 1..=4 {
                if lambda.len() == n as usize + 1 {
                    assert_eq!(sp_modify(&lambda, n), SignedIrrep::Zero, "{lambda}");
                }
            }
            let c = |j| lambda.column_length(j);
            for big_n in 1..=6 {
                if c(1) + c(2) == big_n + 1 || c(1) + c(3) == big_n + 2 {
                    assert_eq!(o_modify(&lambda, big_n), SignedIrrep::Zero, "{lambda} N={big_n}");
                }
            }
        }
    }

    fn signed_character(g: GroupId, m: &SignedIrrep) -> LaurentPolynomial {
        match m {
            SignedIrrep::Zero => LaurentPolynomial::zero(g.nvars()),
            SignedIrrep::Term { sign, label } => irreducible_character(g, label).unwrap().scale(&BigInt::from(*sign)),
        }
    }

    // The orthogonal rule for even N, checked through restriction to SO_2n:
    // a label of O_2n restricts to its SO_2n basis label (sharpened when long).
    #[test]
    fn o_rule_matches_even_orthogonal_characters() {
        for n in 1..=3u32 {
            let so = GroupId::so_even(n);
            for lambda in enumerate_partitions(7, Constraint::None).filter(|l| l.first() <= 4) {
                let lhs = o_schur_h(&lambda).specialize(so).unwrap();
                let rhs = match o_modify(&lambda, 2 * n) {
                    SignedIrrep::Zero => LaurentPolynomial::zero(n as usize),
                    SignedIrrep::Term { sign, label } => {
                        let on_so = o_label_on_so(&label, 2 * n).unwrap();
                        signed_character(so, &SignedIrrep::Term { sign, label: on_so })
                    }
                };
                assert_eq!(lhs, rhs, "{lambda} N={}", 2 * n);
            }
        }
    }

    #[test]
    fn sp_rule_matches_characters_small() {
        for n in 1..=2u32 {
            let sp = GroupId::sp(n);
            for lambda in enumerate_partitions(6, Constraint::None).filter(|l| l.first() <= 3) {
                let lhs = sp_schur_h(&lambda).unwrap().specialize(sp).unwrap();
                assert_eq!(lhs, signed_character(sp, &sp_modify(&lambda, n)), "{lambda} n={n}");
            }
        }
    }
}
