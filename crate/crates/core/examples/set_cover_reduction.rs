//! Set cover as bipartite target set selection, with greedy set cover and the
//! normalization that pushes any target set onto the subset side.
//!
//!     cargo run --example set_cover_reduction

use tss::baseline::{brute_force_setcover, brute_force_tss, DEFAULT_CAP};
use tss::generate::generate_setcover_nonempty;
use tss::instance::VertexSet;
use tss::io::{write_setcover, write_tss};
use tss::reductions::{greedy_set_cover, harmonic, normalize_bipartite_solution, setcover_to_tss};

fn main() -> tss::error::Result<()> {
    let sc = generate_setcover_nonempty(6, 5, 0.3, 4)?;
    print!("{}", write_setcover(&sc));

    let g = setcover_to_tss(&sc, true)?;
    print!("{}", write_tss(&g.instance));

    let (opt, chosen) = brute_force_setcover(&sc, DEFAULT_CAP)?;
    let tss_opt = brute_force_tss(&g.instance, DEFAULT_CAP)?;
    println!(
        "set cover optimum {opt} {chosen:?}, target set optimum {}",
        tss_opt.optimum_size
    );

    // element vertices in a target set get swapped for a subset containing them
    let all: VertexSet = g.instance.vertices();
    let normalized = normalize_bipartite_solution(&g.instance, &all)?;
    println!(
        "normalizing every vertex keeps subsets {:?}",
        g.subsets_of(&normalized)
    );
    let normalized = normalize_bipartite_solution(&g.instance, &tss_opt.witness)?;
    println!(
        "optimal witness normalizes to subsets {:?}",
        g.subsets_of(&normalized)
    );

    let greedy = greedy_set_cover(&sc)?;
    println!(
        "greedy picks {greedy:?}, bound {:.2}",
        harmonic(sc.ground_size()) * opt as f64
    );
    Ok(())
}
