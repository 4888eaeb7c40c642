//! Structure constants of the universal character rings:
//! Littlewood-Richardson, Newell-Littlewood and branching coefficients,
//! and universal symplectic characters as polynomials in `h_r`.
//!
//! ```text
//! cargo run --example universal
//! ```

use classical_pieri::schur::{branching_coefficient, lr_coefficient, nl_coefficient, o_schur_h, sp_schur_h, BranchingKind};
use classical_pieri::{GroupId, Partition};

fn p(s: &str) -> Partition {
    s.parse().expect("valid partition")
}

fn main() -> classical_pieri::Result<()> {
    println!("c^(3,2,1)_(2,1),(2,1) = {}", lr_coefficient(&p("[2,1]"), &p("[2,1]"), &p("[3,2,1]")));
    println!("NL((1),(1),()) = {}", nl_coefficient(&p("[1]"), &p("[1]"), &p("[]")));
    println!("NL((2,1),(2,1),(2,1)) = {}", nl_coefficient(&p("[2,1]"), &p("[2,1]"), &p("[2,1]")));

    let label = p("[2,2]");
    let sp = sp_schur_h(&label)?;
    println!("symplectic (2,2) = {sp}");
    println!("orthogonal (2) = {}", o_schur_h(&p("[2]")));
    println!("on Sp_4 the symplectic (2,2) specializes to a polynomial with {} terms", sp.specialize(GroupId::sp(2))?.len());

    // s_(2,2) of GL_4 restricted to Sp_4 contains s<(2,2)>, s<(1,1)> and s<()>
    for mu in ["[2,2]", "[1,1]", "[]", "[2]"] {
        println!("  multiplicity of <{mu}> in s_(2,2): {}", branching_coefficient(BranchingKind::Sp, &label, &p(mu)));
    }
    Ok(())
}
