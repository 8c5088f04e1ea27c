//! Sweeps `n` at fixed cover size and `t` at fixed `n`, printing timings.
//!
//!     cargo run --release --example benchmark_scaling

use std::time::Duration;

use tss::bench::{format_table, log_log_slope, run_bench, BenchSpec, Engine, Family};

fn main() -> tss::error::Result<()> {
    let by_n = BenchSpec {
        engines: vec![Engine::Fpt, Engine::Greedy],
        family: Family::ScalingN { t: 3 },
        grid: vec![100, 200, 400, 800, 1600],
        timeout: Duration::from_secs(60),
        ..BenchSpec::default()
    };
    let rows = run_bench(&by_n)?;
    print!("{}", format_table(&rows));
    let fpt: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.engine == Engine::Fpt && r.optimum.is_some())
        .map(|r| (r.n as f64, r.millis()))
        .collect();
    println!("log-log slope in n: {:.2}\n", log_log_slope(&fpt));

    let by_t = BenchSpec {
        engines: vec![Engine::Fpt],
        family: Family::ScalingT { n: 200 },
        grid: (1..=5).collect(),
        ..BenchSpec::default()
    };
    let rows = run_bench(&by_t)?;
    print!("{}", format_table(&rows));
    for r in &rows {
        let base = (2 * r.t + 1) as f64;
        println!(
            "t = {}: ms per guess-unit {:.6}",
            r.t,
            r.millis() / base.powi(r.t as i32)
        );
    }
    Ok(())
}
