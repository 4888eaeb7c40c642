//! Weyl characters as exact Laurent polynomials, and decomposition of a
//! symmetric Laurent polynomial back into irreducibles.
//!
//! ```text
//! cargo run --example characters
//! ```

use classical_pieri::characters::{decompose_character, dimension, irreducible_character, power_character, PowerKind};
use classical_pieri::{GroupId, Partition, RepRingElement};

fn main() -> classical_pieri::Result<()> {
    let sp4 = GroupId::sp(2);
    let adjoint = irreducible_character(sp4, &Partition::row(2))?;
    println!("{sp4} character of (2):\n  {adjoint}");
    println!("  dimension {}", adjoint.value_at_one());

    let so5 = GroupId::so_odd(2);
    let spinless = irreducible_character(so5, &"[1,1]".parse()?)?;
    println!("{so5} character of (1,1) has {} terms, dimension {}", spinless.len(), spinless.value_at_one());

    // S^3(V) for Sp_4 is irreducible; for SO_5 it splits
    for g in [sp4, so5] {
        let h3 = power_character(g, PowerKind::Sym, 3)?;
        println!("S^3(V) on {g} = {}", decompose_character(g, &h3)?);
    }

    // V (x) V on SO_6, including the doubled terms of the even orthogonal basis
    let so6 = GroupId::so_even(3);
    let v = irreducible_character(so6, &Partition::row(1))?;
    let square = decompose_character(so6, &(&v * &v))?;
    println!("V (x) V on {so6} = {square}, dimension {}", dimension(&square)?);

    let mut virtual_rep = RepRingElement::zero(sp4);
    virtual_rep.add_term(Partition::row(2), 1)?;
    virtual_rep.add_term(Partition::empty(), -1)?;
    println!("dim of {virtual_rep} on {sp4} = {}", dimension(&virtual_rep)?);
    Ok(())
}
