//! Modification rules: labels outside the range of a group are sent to
//! zero or to a signed irreducible, and products in the universal ring
//! are pushed down to a fixed group.
//!
//! ```text
//! cargo run --example modification
//! ```

use classical_pieri::modification::{formal_nl_product, o_modify, sp_modify};
use classical_pieri::{GroupId, Partition};

fn main() -> classical_pieri::Result<()> {
    for label in ["[1,1]", "[1,1,1]", "[2,1,1]", "[2,2,2]", "[3,3,1,1]"] {
        let lambda: Partition = label.parse()?;
        println!("{label:>10} on Sp_2: {:>6}   on O_2: {:>6}", sp_modify(&lambda, 1).to_string(), o_modify(&lambda, 2).to_string());
    }

    let sp2 = GroupId::sp(1);
    let product = formal_nl_product(sp2, &"[2]".parse()?, &"[1]".parse()?)?;
    println!("(2) (x) (1) on {sp2} = {product}");

    let o3 = GroupId::o(3);
    let product = formal_nl_product(o3, &"[1,1]".parse()?, &"[1,1]".parse()?)?;
    println!("(1,1) (x) (1,1) on {o3} = {product}");
    Ok(())
}
