//! Subdividing every edge gives a bipartite instance with the same optimum.
//!
//!     cargo run --example subdivision

use tss::baseline::{brute_force_tss, DEFAULT_CAP};
use tss::instance::TssInstance;
use tss::reductions::subdivide_to_bipartite;

fn main() -> tss::error::Result<()> {
    let tri = TssInstance::new(4, &[(0, 1), (1, 2), (0, 2), (2, 3)], vec![2, 2, 2, 1])?;
    let sub = subdivide_to_bipartite(&tri);
    println!(
        "{} vertices / {} edges -> {} vertices / {} edges",
        tri.vertex_count(),
        tri.edge_count(),
        sub.vertex_count(),
        sub.edge_count()
    );
    let bip = sub.bipartition().expect("subdivision records its sides");
    println!("sides {} | {}", bip.left, bip.right);

    let before = brute_force_tss(&tri, DEFAULT_CAP)?;
    let after = brute_force_tss(&sub, DEFAULT_CAP)?;
    println!("optimum {} with {}", before.optimum_size, before.witness);
    println!(
        "optimum {} with {} after subdividing",
        after.optimum_size, after.witness
    );
    Ok(())
}
