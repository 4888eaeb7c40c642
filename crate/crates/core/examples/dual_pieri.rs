//! Dual Pieri rules: tensoring with exterior powers of the defining
//! representation.
//!
//! ```text
//! cargo run --example dual_pieri
//! ```

use classical_pieri::characters::PowerKind;
use classical_pieri::pieri::{dual_pieri_set, tensor_decomposition};
use classical_pieri::{GroupId, Partition};

fn main() -> classical_pieri::Result<()> {
    let mu: Partition = "[1]".parse()?;
    for g in [GroupId::sp(2), GroupId::so_odd(2), GroupId::so_even(2), GroupId::o(4)] {
        for r in 1..=3 {
            println!("{mu} (x) E^{r}(V) on {g}: {}", tensor_decomposition(g, &mu, PowerKind::Ext, r)?);
        }
    }
    let set = dual_pieri_set(&"[1,1]".parse()?, &"[1]".parse()?, 1, 2);
    let shown: Vec<String> = set.witnesses.iter().map(|x| x.to_string()).collect();
    println!("dual witnesses for [1] in [1,1] (x) E^1 with n = 2: {}", shown.join(" "));
    Ok(())
}
