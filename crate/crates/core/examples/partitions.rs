//! Partitions, conjugates, strips and the labels of the classical groups.
//!
//! ```text
//! cargo run --example partitions
//! ```

use classical_pieri::partition::{enumerate_partitions, horizontal_strips_added, Constraint};
use classical_pieri::{GroupId, Partition};

fn main() -> classical_pieri::Result<()> {
    let lambda: Partition = "[4,2,1]".parse()?;
    println!("lambda = {lambda}, size {}, conjugate {}", lambda.size(), lambda.conjugate());
    println!("odd columns c = {}, odd rows r = {}", lambda.odd_column_count(), lambda.odd_row_count());

    // adding a horizontal strip of two cells, at most three rows
    let grown: Vec<String> = horizontal_strips_added(&lambda, 2, 3).iter().map(|p| p.to_string()).collect();
    println!("{lambda} + horizontal 2-strip: {}", grown.join(" "));

    // labels of O_3: first two columns together at most 3 cells
    let o3: Vec<String> = enumerate_partitions(4, Constraint::TwoColumnBound(3)).map(|p| p.to_string()).collect();
    println!("labels of O_3 up to size 4: {}", o3.join(" "));

    // the associated label swaps the first column length c for N - c
    let mu: Partition = "[2,1,1]".parse()?;
    println!("{mu} on O_5 is associated with {}", mu.sharp(5)?);

    for g in [GroupId::sp(2), GroupId::so_even(2), GroupId::o(4)] {
        println!("{g} admits {mu}: {}", g.admits(&mu));
    }
    Ok(())
}
