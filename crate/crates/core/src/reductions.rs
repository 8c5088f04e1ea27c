//! Instance transformations around bipartite target set selection.

use crate::diffusion::Simulator;
use crate::error::{Error, Result};
use crate::instance::{Bipartition, SetCoverInstance, TssInstance, VertexSet};

/// Bipartite TSS instance built from a set cover instance.
///
/// Element `x_i` becomes vertex `i`; subset `T_j` becomes vertex `n + j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoverGraph {
    pub instance: TssInstance,
    pub element_count: usize,
    /// Indices of empty subsets, which were given threshold 1.
    pub empty_subsets: Vec<usize>,
}

impl SetCoverGraph {
    pub fn subset_vertex(&self, j: usize) -> usize {
        self.element_count + j
    }

    /// Subset indices of the subset-side vertices in `set`.
    pub fn subsets_of(&self, set: &VertexSet) -> Vec<usize> {
        set.iter()
            .filter(|&v| v >= self.element_count)
            .map(|v| v - self.element_count)
            .collect()
    }
}

/// Element vertices get threshold 1, subset vertices the subset size, with an
/// edge `x_i T_j` whenever `x_i ∈ T_j`.
///
/// An empty subset would get threshold 0 on an isolated vertex. It is given
/// threshold 1 instead and reported in `empty_subsets`; with `strict` it is an
/// error.
pub fn setcover_to_tss(sc: &SetCoverInstance, strict: bool) -> Result<SetCoverGraph> {
    let n = sc.ground_size();
    let m = sc.subset_count();
    let mut edges = Vec::new();
    let mut thresholds = vec![1; n + m];
    let mut empty_subsets = Vec::new();
    for (j, subset) in sc.subsets().iter().enumerate() {
        if subset.is_empty() {
            if strict {
                return Err(Error::InvalidInstance(format!("subset {} is empty", j + 1)));
            }
            empty_subsets.push(j);
        }
        thresholds[n + j] = subset.len().max(1);
        edges.extend(subset.iter().map(|&e| (e, n + j)));
    }
    let instance = TssInstance::new(n + m, &edges, thresholds)?.with_bipartition(Bipartition {
        left: (0..n).collect(),
        right: (n..n + m).collect(),
    })?;
    Ok(SetCoverGraph {
        instance,
        element_count: n,
        empty_subsets,
    })
}

/// Rewrites a feasible target set of a bipartite instance with `τ = 1` on the
/// left side, `τ = deg` on the right side and no isolated vertices into one
/// that lies entirely on the right side, is no larger, and touches every
/// left vertex.
///
/// Right-side members are kept; each left-side member without a kept neighbor
/// is replaced by its lowest-id neighbor.
pub fn normalize_bipartite_solution(instance: &TssInstance, s: &VertexSet) -> Result<VertexSet> {
    let bip = instance
        .bipartition()
        .ok_or_else(|| Error::InvalidInstance("instance has no bipartition".into()))?;
    for v in 0..instance.vertex_count() {
        if instance.degree(v) == 0 {
            return Err(Error::InvalidInstance(format!("vertex {v} has degree 0")));
        }
    }
    if let Some(v) = bip.left.iter().find(|&v| instance.threshold(v) != 1) {
        return Err(Error::InvalidInstance(format!(
            "left vertex {v} has threshold {}, expected 1",
            instance.threshold(v)
        )));
    }
    if let Some(v) = bip
        .right
        .iter()
        .find(|&v| instance.threshold(v) != instance.degree(v))
    {
        return Err(Error::InvalidInstance(format!(
            "right vertex {v} has threshold {} but degree {}",
            instance.threshold(v),
            instance.degree(v)
        )));
    }
    s.check_range(instance.vertex_count())?;
    if !Simulator::new(instance).is_target_set(s.iter()) {
        return Err(Error::NotATargetSet);
    }

    let mut out: VertexSet = s.iter().filter(|&v| bip.right.contains(v)).collect();
    for u in s.iter().filter(|&v| bip.left.contains(v)) {
        let nbrs = instance.neighbors(u);
        if !nbrs.iter().any(|&w| out.contains(w)) {
            out.insert(nbrs[0]);
        }
    }
    Ok(out)
}

/// Replaces every edge `uv` by a path `u - w_uv - v` where `w_uv` has
/// threshold 1. The `e`-th edge in sorted order gets vertex `n + e`.
/// Original thresholds are kept. The result carries the bipartition
/// {original vertices, subdivision vertices}.
pub fn subdivide_to_bipartite(instance: &TssInstance) -> TssInstance {
    let n = instance.vertex_count();
    let m = instance.edge_count();
    let mut edges = Vec::with_capacity(2 * m);
    for (e, &(u, v)) in instance.edges().iter().enumerate() {
        edges.push((u, n + e));
        edges.push((v, n + e));
    }
    let mut thresholds = instance.thresholds().to_vec();
    thresholds.resize(n + m, 1);
    TssInstance::new(n + m, &edges, thresholds)
        .and_then(|g| {
            g.with_bipartition(Bipartition {
                left: (0..n).collect(),
                right: (n..n + m).collect(),
            })
        })
        .expect("subdivision of a simple graph is simple and bipartite")
}

/// Repeatedly takes the subset covering the most uncovered elements, lowest
/// index on ties. Returns 0-based subset indices in the order chosen.
pub fn greedy_set_cover(sc: &SetCoverInstance) -> Result<Vec<usize>> {
    sc.check_feasible()?;
    let mut covered = vec![false; sc.ground_size()];
    let mut remaining = sc.ground_size();
    let mut chosen = Vec::new();
    while remaining > 0 {
        let (best, gain) = sc
            .subsets()
            .iter()
            .enumerate()
            .map(|(j, s)| (j, s.iter().filter(|&&e| !covered[e]).count()))
            .fold((0, 0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
        debug_assert!(gain > 0);
        for &e in sc.subset(best) {
            covered[e] = true;
        }
        remaining -= gain;
        chosen.push(best);
    }
    Ok(chosen)
}

/// `H_n = 1 + 1/2 + … + 1/n`, with `H_0 = 0`.
pub fn harmonic(n: usize) -> f64 {
    (1..=n).map(|i| 1.0 / i as f64).sum()
}
