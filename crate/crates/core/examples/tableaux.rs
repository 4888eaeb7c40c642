//! Tableaux as partition chains, and both sides of the equinumerations
//! between alternating chains and strict tableaux.
//!
//! ```text
//! cargo run --example tableaux
//! ```

use classical_pieri::characters::PowerKind;
use classical_pieri::tableau::{
    burrill_count, enumerate_oscillating, iterated_pieri_multiplicity, main2_count, main2_target, statistic_d, Side,
};
use classical_pieri::Partition;

fn main() -> classical_pieri::Result<()> {
    // oscillating tableaux of length 4 ending at the empty shape, one row
    let one_row = |p: &Partition| p.len() <= 1;
    let never = |_: &Partition| false;
    for chain in enumerate_oscillating(4, &Partition::empty(), &one_row, &never) {
        let steps: Vec<String> = chain.steps.iter().map(|p| p.to_string()).collect();
        println!("{}  d = {}", steps.join(" -> "), statistic_d(&chain, 1)?);
    }

    let alpha = [2, 1, 2];
    for variant in 1..=5u8 {
        let m = 1;
        let a = main2_count(variant, Side::A, &alpha, 2, m)?;
        let b = main2_count(variant, Side::B, &alpha, 2, m)?;
        let (g, kind, target) = main2_target(variant, 2, m)?;
        let power = if kind == PowerKind::Sym { "S" } else { "E" };
        let mult = iterated_pieri_multiplicity(g, kind, &alpha, &target)?;
        println!("variant {variant}: alpha {alpha:?}, chains {a}, tableaux {b}, multiplicity of {target} in {power}^alpha(V) on {g} = {mult}");
    }

    for variant in 1..=4u8 {
        let (a, b) = (burrill_count(variant, Side::A, 5, 2, 1)?, burrill_count(variant, Side::B, 5, 2, 1)?);
        println!("single-cell variant {variant}, k = 5: {a} = {b}");
    }
    Ok(())
}
