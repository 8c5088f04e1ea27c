//! Multi-hitting set: pick at most q elements so that set i is hit at least
//! l_i times. Prints the optimum, a witness and the table occupancy.
//!
//!     cargo run --example multi_hitting_set

use tss::mhs::{mhs_decide, mhs_minimize, min_hitting_size, DpTable, MhsInstance};

fn main() -> tss::error::Result<()> {
    let inst = MhsInstance::new(
        vec![10, 11, 12, 13, 14],
        vec![vec![10, 11, 12], vec![12, 13], vec![11, 13, 14]],
        vec![2, 1, 2],
        3,
    )?;
    let (size, stats) = min_hitting_size(&inst)?;
    println!(
        "minimum size {size:?}, {} cells filled",
        stats.cells_filled()
    );
    if let Some((k, witness)) = mhs_minimize(&inst)? {
        println!("witness of size {k}: {witness:?}");
    }
    println!("some solution within budget: {:?}", mhs_decide(&inst)?);

    let table = DpTable::build(&inst)?;
    println!("{} demand vectors per layer", table.cells_per_layer());
    for (j, count) in table.occupancy().iter().enumerate() {
        println!("  after {j} elements: {count} reachable");
    }

    // two hits from the one-element set {3} cannot happen
    let tight = MhsInstance::new(vec![1, 2, 3], vec![vec![1, 2], vec![3]], vec![2, 2], 3)?;
    println!("impossible demand: {:?}", min_hitting_size(&tight)?.0);
    Ok(())
}
