//! Exact and approximate vertex covers, the parameter of the solver.
//!
//!     cargo run --release --example vertex_cover

use tss::cover::{
    approx_vertex_cover, exact_min_vertex_cover_limited, is_vertex_cover, CoverSearch,
};
use tss::generate::{generate_bounded_vc, ThresholdMode};

fn main() -> tss::error::Result<()> {
    let g = generate_bounded_vc(5, 60, 0.3, ThresholdMode::UniformRandom, 2)?;
    let approx = approx_vertex_cover(&g);
    println!("matching cover: {} vertices", approx.len());

    match exact_min_vertex_cover_limited(&g, approx.len(), 1 << 20) {
        CoverSearch::Found(c) => {
            assert!(is_vertex_cover(&g, &c));
            println!("minimum cover: {c}");
        }
        CoverSearch::ExceedsBudget => println!("no cover within {}", approx.len()),
        CoverSearch::NodeLimit => println!("search gave up, keeping the approximation"),
    }
    // a tiny node limit forces the fallback
    let starved = exact_min_vertex_cover_limited(&g, approx.len(), 3);
    println!("with 3 nodes: {starved:?}");
    Ok(())
}
