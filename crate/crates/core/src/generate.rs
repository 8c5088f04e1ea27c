//! Seeded instance generators.

use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::instance::{SetCoverInstance, TssInstance};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdMode {
    /// Uniform in `1..=deg(v)`.
    UniformRandom,
    /// `min(c, deg(v))`, at least 1.
    Constant(usize),
    /// `⌊deg(v) / 2⌋ + 1`, strictly more than half the neighbors.
    Majority,
}

impl FromStr for ThresholdMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "uniform" => Ok(ThresholdMode::UniformRandom),
            "majority" => Ok(ThresholdMode::Majority),
            _ => s
                .strip_prefix("const:")
                .and_then(|c| c.parse().ok())
                .map(ThresholdMode::Constant)
                .ok_or_else(|| {
                    format!("unknown threshold mode `{s}` (uniform, majority, const:<c>)")
                }),
        }
    }
}

fn threshold_for(mode: ThresholdMode, degree: usize, rng: &mut impl Rng) -> usize {
    if degree == 0 {
        return 1;
    }
    match mode {
        ThresholdMode::UniformRandom => rng.gen_range(1..=degree),
        ThresholdMode::Constant(c) => c.min(degree).max(1),
        ThresholdMode::Majority => degree / 2 + 1,
    }
}

fn check_density(density: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::Generator(format!(
            "density {density} outside [0, 1]"
        )));
    }
    Ok(())
}

/// A graph on `n` vertices where vertices `0..t` form a vertex cover and
/// `t..n` an independent set. Each cover-cover and cover-independent pair is
/// an edge with probability `density`; every independent vertex gets at least
/// one edge when `t > 0`.
pub fn generate_bounded_vc(
    t: usize,
    n: usize,
    density: f64,
    mode: ThresholdMode,
    seed: u64,
) -> Result<TssInstance> {
    if t > n {
        return Err(Error::Generator(format!("cover size {t} exceeds n = {n}")));
    }
    check_density(density)?;
    if mode == ThresholdMode::Constant(0) {
        return Err(Error::Generator(
            "constant threshold must be at least 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..t {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    if t > 0 {
        let mut has_edge = vec![false; n];
        for &(_, v) in &edges {
            has_edge[v] = true;
        }
        let lonely: Vec<usize> = (t..n).filter(|&v| !has_edge[v]).collect();
        for v in lonely {
            edges.push((rng.gen_range(0..t), v));
        }
    }
    let mut degree = vec![0; n];
    for &(u, v) in &edges {
        degree[u] += 1;
        degree[v] += 1;
    }
    let thresholds = degree
        .iter()
        .map(|&d| threshold_for(mode, d, &mut rng))
        .collect();
    TssInstance::new(n, &edges, thresholds)
}

/// Erdős–Rényi graph with thresholds uniform in `1..=deg(v) + 1`, so some
/// vertices may exceed their degree.
pub fn random_instance(n: usize, p: f64, seed: u64) -> Result<TssInstance> {
    check_density(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let g = TssInstance::new(n, &edges, vec![1; n])?;
    let thresholds = (0..n).map(|v| rng.gen_range(1..=g.degree(v) + 1)).collect();
    TssInstance::new(n, &edges, thresholds)
}

/// Each element joins each subset with probability `density`; elements left
/// uncovered are added to a uniformly random subset.
pub fn generate_setcover(n: usize, m: usize, density: f64, seed: u64) -> Result<SetCoverInstance> {
    check_density(density)?;
    if n > 0 && m == 0 {
        return Err(Error::Generator(format!("{n} elements but no subsets")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut subsets = vec![Vec::new(); m];
    for e in 0..n {
        let mut placed = false;
        for s in subsets.iter_mut() {
            if rng.gen_bool(density) {
                s.push(e);
                placed = true;
            }
        }
        if !placed {
            subsets[rng.gen_range(0..m)].push(e);
        }
    }
    SetCoverInstance::new(n, subsets)
}

/// Like [`generate_setcover`] but every subset is non-empty, which keeps the
/// bipartite construction free of isolated vertices.
pub fn generate_setcover_nonempty(
    n: usize,
    m: usize,
    density: f64,
    seed: u64,
) -> Result<SetCoverInstance> {
    if m > 0 && n == 0 {
        return Err(Error::Generator("non-empty subsets need elements".into()));
    }
    let base = generate_setcover(n, m, density, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let subsets = base
        .subsets()
        .iter()
        .map(|s| {
            let mut s = s.clone();
            if s.is_empty() {
                s.push(rng.gen_range(0..n));
            }
            s
        })
        .collect();
    SetCoverInstance::new(n, subsets)
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn is_connected(n: usize, adj: &[u32]) -> bool {
    if n == 0 {
        return true;
    }
    let mut seen = 1u32;
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        let mut fresh = adj[v] & !seen;
        seen |= fresh;
        while fresh != 0 {
            stack.push(fresh.trailing_zeros() as usize);
            fresh &= fresh - 1;
        }
    }
    seen.count_ones() as usize == n
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        heap(k - 1, p, out);
        for i in 0..k - 1 {
            let j = if k.is_multiple_of(2) { i } else { 0 };
            p.swap(j, k - 1);
            heap(k - 1, p, out);
        }
    }
    heap(n, &mut p, &mut out);
    debug_assert_eq!(out.len(), (1..=n).product::<usize>());
    out
}

/// One representative edge list per isomorphism class of connected graphs on
/// `n` vertices. The representative is the lexicographically smallest edge
/// bitmask over all vertex relabellings. Practical up to `n = 7`.
pub fn all_connected_graphs(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs = pairs(n);
    let mut index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    let perms = all_permutations(n);
    let mut out = Vec::new();
    'mask: for mask in 0u64..1 << pairs.len() {
        let mut adj = vec![0u32; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        if !is_connected(n, &adj) {
            continue;
        }
        for p in &perms {
            let mut image = 0u64;
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    image |= 1 << index[p[u]][p[v]];
                }
            }
            if image < mask {
                continue 'mask;
            }
        }
        out.push(
            pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect(),
        );
    }
    out
}

/// Thresholds uniform in `1..=deg(v) + 1` for a fixed edge list.
pub fn random_thresholds(n: usize, edges: &[(usize, usize)], seed: u64) -> Result<TssInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = TssInstance::new(n, edges, vec![1; n])?;
    let thresholds = (0..n).map(|v| rng.gen_range(1..=g.degree(v) + 1)).collect();
    TssInstance::new(n, edges, thresholds)
}

/// A uniformly random subset of `0..n` of size `k`.
pub fn random_subset(n: usize, k: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut all: Vec<usize> = (0..n).collect();
    all.shuffle(rng);
    all.truncate(k);
    all.sort_unstable();
    all
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::is_vertex_cover;

    #[test]
    fn zero_cover_is_edgeless() {
        let g = generate_bounded_vc(0, 5, 0.5, ThresholdMode::UniformRandom, 1).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.thresholds(), &[1; 5]);
    }

    #[test]
    fn generation_is_deterministic() {
        let a = generate_bounded_vc(2, 6, 0.5, ThresholdMode::UniformRandom, 7).unwrap();
        let b = generate_bounded_vc(2, 6, 0.5, ThresholdMode::UniformRandom, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            generate_setcover(5, 4, 0.3, 9).unwrap(),
            generate_setcover(5, 4, 0.3, 9).unwrap()
        );
    }

    #[test]
    fn designated_side_is_a_cover() {
        for seed in 0..20 {
            for mode in [
                ThresholdMode::UniformRandom,
                ThresholdMode::Majority,
                ThresholdMode::Constant(2),
            ] {
                let g = generate_bounded_vc(3, 12, 0.4, mode, seed).unwrap();
                assert!(is_vertex_cover(&g, &[0, 1, 2].into()));
                for v in 3..12 {
                    assert!(g.degree(v) >= 1);
                    assert!((1..=g.degree(v)).contains(&g.threshold(v)));
                }
            }
        }
    }

    #[test]
    fn generator_rejects_bad_parameters() {
        assert!(generate_bounded_vc(4, 3, 0.5, ThresholdMode::Majority, 0).is_err());
        assert!(generate_bounded_vc(1, 3, 1.5, ThresholdMode::Majority, 0).is_err());
        assert!(generate_bounded_vc(1, 3, 0.5, ThresholdMode::Constant(0), 0).is_err());
        assert!(generate_setcover(3, 0, 0.5, 0).is_err());
    }

    #[test]
    fn set_cover_generation_covers_everything() {
        assert_eq!(generate_setcover(0, 0, 0.5, 1).unwrap().ground_size(), 0);
        for seed in 0..20 {
            assert!(generate_setcover(8, 5, 0.1, seed).unwrap().is_feasible());
            let sc = generate_setcover_nonempty(8, 8, 0.05, seed).unwrap();
            assert!(sc.is_feasible() && sc.subsets().iter().all(|s| !s.is_empty()));
        }
    }

    #[test]
    fn connected_graph_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| all_connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn threshold_mode_parsing() {
        assert_eq!("majority".parse(), Ok(ThresholdMode::Majority));
        assert_eq!("const:3".parse(), Ok(ThresholdMode::Constant(3)));
        assert!("bogus".parse::<ThresholdMode>().is_err());
    }
}
