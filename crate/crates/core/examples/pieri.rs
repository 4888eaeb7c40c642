//! Pieri rules: `V_mu` tensored with symmetric powers of the defining
//! representation, for every classical family, with the witnesses behind
//! each multiplicity.
//!
//! ```text
//! cargo run --example pieri
//! ```

use classical_pieri::characters::PowerKind;
use classical_pieri::pieri::{o_condition_iii, pieri_set, so_even_pieri_coeff, standard_pieri, tensor_decomposition};
use classical_pieri::{GroupId, Partition};

fn main() -> classical_pieri::Result<()> {
    let mu: Partition = "[2,1]".parse()?;
    for g in [GroupId::sp(2), GroupId::o(4), GroupId::so_odd(2), GroupId::so_even(2)] {
        println!("{mu} (x) S^2(V) on {g}:\n  {}", tensor_decomposition(g, &mu, PowerKind::Sym, 2)?);
    }

    // a multiplicity is a count of intermediate partitions
    let lambda: Partition = "[2,1]".parse()?;
    let set = pieri_set(&mu, &lambda, 2);
    let shown: Vec<String> = set.witnesses.iter().map(|x| x.to_string()).collect();
    println!("witnesses for {lambda} in {mu} (x) (2): {}", shown.join(" "));
    for xi in &set.witnesses {
        println!("  {xi} allowed on O_4: {}", o_condition_iii(&mu, xi, &lambda, 4));
    }

    // on SO_4 a label of full length pairs with shorter ones twice
    let full: Partition = "[1,1]".parse()?;
    println!("coefficient of [1] in [1,1] (x) (1) on SO_4: {}", so_even_pieri_coeff(&full, &Partition::row(1), 1, 2)?);
    println!("[1,1] (x) V on SO_5 = {}", standard_pieri(GroupId::so_odd(2), &full)?);
    Ok(())
}
