//! Benchmark harness: engines × generated instance family × size grid.
//!
//! Rows are produced in grid order. Each run gets a wall-clock deadline;
//! a run that misses it is recorded as a timeout and the harness moves on.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::baseline::{brute_force_tss_until, greedy_tss};
use crate::error::Result;
use crate::fpt::{solve_optimal, SolveOptions};
use crate::generate::{generate_bounded_vc, ThresholdMode};
use crate::instance::TssInstance;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Fpt,
    Brute,
    Greedy,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Fpt => "fpt",
            Engine::Brute => "brute",
            Engine::Greedy => "greedy",
        }
    }
}

impl FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "fpt" => Ok(Engine::Fpt),
            "brute" => Ok(Engine::Brute),
            "greedy" => Ok(Engine::Greedy),
            _ => Err(format!("unknown engine `{s}` (fpt, brute, greedy)")),
        }
    }
}

/// Which parameter the size grid sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Cover size fixed, grid values are `n`.
    ScalingN { t: usize },
    /// Vertex count fixed, grid values are `t`.
    ScalingT { n: usize },
}

#[derive(Debug, Clone)]
pub struct BenchSpec {
    pub engines: Vec<Engine>,
    pub family: Family,
    pub grid: Vec<usize>,
    pub density: f64,
    pub mode: ThresholdMode,
    pub seed: u64,
    pub timeout: Duration,
    pub threads: usize,
    /// Largest `n` the brute-force engine is attempted on.
    pub brute_cap: usize,
}

impl Default for BenchSpec {
    fn default() -> Self {
        BenchSpec {
            engines: vec![Engine::Fpt],
            family: Family::ScalingN { t: 3 },
            grid: Vec::new(),
            density: 0.5,
            mode: ThresholdMode::UniformRandom,
            seed: 0,
            timeout: Duration::from_secs(60),
            threads: 0,
            brute_cap: 20,
        }
    }
}

impl BenchSpec {
    /// The `(t, n)` pairs of the grid, in order.
    pub fn points(&self) -> Vec<(usize, usize)> {
        self.grid
            .iter()
            .map(|&x| match self.family {
                Family::ScalingN { t } => (t, x),
                Family::ScalingT { n } => (x, n),
            })
            .collect()
    }

    pub fn instance(&self, t: usize, n: usize) -> Result<TssInstance> {
        generate_bounded_vc(t, n, self.density, self.mode, self.seed)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub engine: Engine,
    pub n: usize,
    pub m: usize,
    pub t: usize,
    /// `None` when the run timed out or was skipped.
    pub optimum: Option<usize>,
    pub elapsed: Duration,
    pub guesses: u64,
    pub cells: u64,
}

impl BenchRow {
    pub fn millis(&self) -> f64 {
        self.elapsed.as_secs_f64() * 1e3
    }

    /// `B <engine> <n> <m> <t> <opt|T/O> <ms> <guesses> <cells>`
    pub fn machine_line(&self) -> String {
        let opt = self
            .optimum
            .map_or_else(|| "T/O".to_string(), |o| o.to_string());
        format!(
            "B {} {} {} {} {} {:.3} {} {}",
            self.engine.name(),
            self.n,
            self.m,
            self.t,
            opt,
            self.millis(),
            self.guesses,
            self.cells
        )
    }
}

/// Runs one engine on one instance under a deadline.
pub fn run_engine(
    engine: Engine,
    instance: &TssInstance,
    t: usize,
    timeout: Duration,
    threads: usize,
    brute_cap: usize,
) -> BenchRow {
    let start = Instant::now();
    let deadline = Some(start + timeout);
    let mut row = BenchRow {
        engine,
        n: instance.vertex_count(),
        m: instance.edge_count(),
        t,
        optimum: None,
        elapsed: Duration::ZERO,
        guesses: 0,
        cells: 0,
    };
    match engine {
        Engine::Fpt => {
            let opts = SolveOptions {
                deadline,
                threads,
                ..SolveOptions::default()
            };
            if let Ok(r) = solve_optimal(instance, &opts) {
                row.optimum = Some(r.optimum_size);
                row.guesses = r.stat("guesses");
                row.cells = r.stat("cells");
            }
        }
        Engine::Brute => {
            // over the cap counts as not run
            if let Ok(r) = brute_force_tss_until(instance, brute_cap, deadline) {
                row.optimum = Some(r.optimum_size);
            }
        }
        Engine::Greedy => row.optimum = Some(greedy_tss(instance).len()),
    }
    row.elapsed = start.elapsed();
    row
}

pub fn run_bench(spec: &BenchSpec) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for (t, n) in spec.points() {
        let instance = spec.instance(t, n)?;
        for &engine in &spec.engines {
            rows.push(run_engine(
                engine,
                &instance,
                t,
                spec.timeout,
                spec.threads,
                spec.brute_cap,
            ));
        }
    }
    Ok(rows)
}

/// Human-readable table with aligned columns.
pub fn format_table(rows: &[BenchRow]) -> String {
    let mut out = String::new();
    if rows.is_empty() {
        return out;
    }
    let _ = writeln!(
        out,
        "{:<7} {:>6} {:>8} {:>3} {:>6} {:>11} {:>10} {:>12}",
        "engine", "n", "m", "t", "opt", "ms", "guesses", "cells"
    );
    for r in rows {
        let opt = r.optimum.map_or_else(|| "T/O".into(), |o| o.to_string());
        let _ = writeln!(
            out,
            "{:<7} {:>6} {:>8} {:>3} {:>6} {:>11.3} {:>10} {:>12}",
            r.engine.name(),
            r.n,
            r.m,
            r.t,
            opt,
            r.millis(),
            r.guesses,
            r.cells
        );
    }
    out
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let k = points.len() as f64;
    let xs: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let num: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    num / den
}
