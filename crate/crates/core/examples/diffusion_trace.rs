//! Seeds one end of a path and watches activation spread round by round.
//!
//!     cargo run --example diffusion_trace

use tss::diffusion::ActivationTrace;
use tss::diffusion::{diffuse, influence, is_target_set};
use tss::instance::TssInstance;

fn show(trace: &ActivationTrace) {
    for (i, round) in trace.rounds().iter().enumerate() {
        println!("round {i}: {round}");
    }
}

fn main() -> tss::error::Result<()> {
    // 0 - 1 - 2 - 3, vertex 2 needs both neighbors
    let g = TssInstance::new(4, &[(0, 1), (1, 2), (2, 3)], vec![1, 1, 2, 1])?;

    let seed = [0].into();
    let trace = diffuse(&g, &seed)?;
    show(&trace);
    println!("seed {{0}} reaches {}", influence(&g, &seed)?);

    let seed = [0, 3].into();
    let trace = diffuse(&g, &seed)?;
    show(&trace);
    println!(
        "seed {{0, 3}} is a target set: {}",
        is_target_set(&g, &seed)?
    );
    for v in g.vertices().iter() {
        println!(
            "  vertex {v} active from round {}",
            trace.timestamp(v).unwrap()
        );
    }
    Ok(())
}
