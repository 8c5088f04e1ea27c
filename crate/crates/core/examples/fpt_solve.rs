//! Solves a generated instance with the cover-parameterized solver and checks
//! the answer against exhaustive search.
//!
//!     cargo run --release --example fpt_solve

use tss::baseline::{brute_force_tss, greedy_tss, DEFAULT_CAP};
use tss::cover::{best_cover, DEFAULT_NODE_LIMIT};
use tss::diffusion::is_target_set;
use tss::fpt::{reduce_forced, solve_decision, solve_optimal, DiscardRule, SolveOptions};
use tss::generate::{generate_bounded_vc, ThresholdMode};
use tss::io::write_result;

fn main() -> tss::error::Result<()> {
    let g = generate_bounded_vc(3, 16, 0.5, ThresholdMode::Majority, 11)?;
    let reduced = reduce_forced(&g);
    println!(
        "{} vertices, {} edges, {} forced, core of {} vertices",
        g.vertex_count(),
        g.edge_count(),
        reduced.forced.len(),
        reduced.core.vertex_count()
    );

    let result = solve_optimal(&g, &SolveOptions::default())?;
    print!("{}", write_result(&result));
    assert!(is_target_set(&g, &result.witness)?);

    let brute = brute_force_tss(&g, DEFAULT_CAP)?;
    println!("exhaustive optimum {}", brute.optimum_size);
    println!("greedy finds {}", greedy_tss(&g).len());

    // the strict discard rule can only lose solutions, never invent them
    let strict = SolveOptions {
        discard_rule: DiscardRule::Strict,
        ..SolveOptions::default()
    };
    println!(
        "strict rule gives {}",
        solve_optimal(&g, &strict)?.optimum_size
    );

    let cover = best_cover(&g, DEFAULT_NODE_LIMIT);
    for k in [result.optimum_size.saturating_sub(1), result.optimum_size] {
        let d = solve_decision(&g, &cover, k, &SolveOptions::default())?;
        println!(
            "size <= {k}: {}",
            if d.witness.is_some() { "yes" } else { "no" }
        );
    }
    Ok(())
}
