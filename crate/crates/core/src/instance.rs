//! Core data model: threshold graphs, vertex sets, set cover instances and
//! solver results.
//!
//! Vertex and element ids are 0-based everywhere in the library. The text
//! formats in [`crate::io`] use 1-based ids and convert at the boundary.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Largest member, if any.
    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn to_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for v in self.iter().filter(|&v| v < n) {
            mask[v] = true;
        }
        mask
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        VertexSet(
            mask.iter()
                .enumerate()
                .filter_map(|(v, &m)| m.then_some(v))
                .collect(),
        )
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.iter().filter(|&v| !other.contains(v)).collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    /// Checks that every member is below `n`.
    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.max() {
            Some(v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(arr: [usize; N]) -> Self {
        arr.into_iter().collect()
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Two-sided vertex labelling carried alongside bipartite instances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub left: VertexSet,
    pub right: VertexSet,
}

/// An undirected simple graph with an integer threshold on every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TssInstance {
    n: usize,
    edges: Vec<(usize, usize)>,
    thresholds: Vec<usize>,
    adjacency: Vec<Vec<usize>>,
    bipartition: Option<Bipartition>,
}

impl TssInstance {
    /// Builds an instance, rejecting self-loops, duplicate edges and ids out of
    /// range. Thresholds of 0 are allowed here; the text parser is stricter.
    pub fn new(n: usize, edges: &[(usize, usize)], thresholds: Vec<usize>) -> Result<Self> {
        if thresholds.len() != n {
            return Err(Error::InvalidInstance(format!(
                "expected {n} thresholds, got {}",
                thresholds.len()
            )));
        }
        let mut adjacency = vec![Vec::new(); n];
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::InvalidInstance(format!("self-loop on vertex {u}")));
            }
            normalized.push((u.min(v), u.max(v)));
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidInstance(format!(
                "duplicate edge {} {}",
                w[0].0, w[0].1
            )));
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(TssInstance {
            n,
            edges: normalized,
            thresholds,
            adjacency,
            bipartition: None,
        })
    }

    /// Attaches a bipartition label, checking that it partitions the vertex
    /// set and that every edge crosses it.
    pub fn with_bipartition(mut self, bipartition: Bipartition) -> Result<Self> {
        bipartition.left.check_range(self.n)?;
        bipartition.right.check_range(self.n)?;
        let mut side = vec![0u8; self.n];
        for v in bipartition.left.iter() {
            side[v] = 1;
        }
        for v in bipartition.right.iter() {
            if side[v] != 0 {
                return Err(Error::InvalidInstance(format!(
                    "vertex {v} is on both sides of the bipartition"
                )));
            }
            side[v] = 2;
        }
        if let Some(v) = side.iter().position(|&s| s == 0) {
            return Err(Error::InvalidInstance(format!(
                "vertex {v} is on neither side of the bipartition"
            )));
        }
        if let Some(&(u, v)) = self.edges.iter().find(|&&(u, v)| side[u] == side[v]) {
            return Err(Error::InvalidInstance(format!(
                "edge {u} {v} does not cross the bipartition"
            )));
        }
        self.bipartition = Some(bipartition);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn thresholds(&self) -> &[usize] {
        &self.thresholds
    }

    pub fn threshold(&self, v: usize) -> usize {
        self.thresholds[v]
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn bipartition(&self) -> Option<&Bipartition> {
        self.bipartition.as_ref()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet((0..self.n).collect())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }
}

/// A set cover instance over elements `0..ground_size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoverInstance {
    ground_size: usize,
    subsets: Vec<Vec<usize>>,
}

impl SetCoverInstance {
    /// Each subset is sorted and deduplicated; elements must be below
    /// `ground_size`. Empty subsets and repeated subsets are legal.
    pub fn new(ground_size: usize, subsets: Vec<Vec<usize>>) -> Result<Self> {
        let mut normalized = Vec::with_capacity(subsets.len());
        for mut s in subsets {
            s.sort_unstable();
            s.dedup();
            if let Some(&e) = s.last() {
                if e >= ground_size {
                    return Err(Error::InvalidInstance(format!(
                        "element {e} out of range for ground set of size {ground_size}"
                    )));
                }
            }
            normalized.push(s);
        }
        Ok(SetCoverInstance {
            ground_size,
            subsets: normalized,
        })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn subset_count(&self) -> usize {
        self.subsets.len()
    }

    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    pub fn subset(&self, j: usize) -> &[usize] {
        &self.subsets[j]
    }

    /// Elements that appear in no subset. Empty iff the instance is feasible.
    pub fn uncovered_elements(&self) -> Vec<usize> {
        let mut covered = vec![false; self.ground_size];
        for s in &self.subsets {
            for &e in s {
                covered[e] = true;
            }
        }
        (0..self.ground_size).filter(|&e| !covered[e]).collect()
    }

    pub fn is_feasible(&self) -> bool {
        self.uncovered_elements().is_empty()
    }

    pub fn check_feasible(&self) -> Result<()> {
        match self.uncovered_elements().first() {
            Some(&e) => Err(Error::Uncoverable(e)),
            None => Ok(()),
        }
    }

    /// True iff the chosen subsets cover the whole ground set.
    pub fn is_cover(&self, chosen: &[usize]) -> bool {
        let mut covered = vec![false; self.ground_size];
        for &j in chosen {
            for &e in &self.subsets[j] {
                covered[e] = true;
            }
        }
        covered.into_iter().all(|c| c)
    }
}

/// Outcome of an exact or heuristic solver run.
///
/// `stats` holds named counters. A `BTreeMap` keeps them in alphabetical
/// order, which is the order the result format writes them in.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveResult {
    pub optimum_size: usize,
    pub witness: VertexSet,
    pub stats: BTreeMap<String, u64>,
}

impl SolveResult {
    pub fn new(witness: VertexSet) -> Self {
        SolveResult {
            optimum_size: witness.len(),
            witness,
            stats: BTreeMap::new(),
        }
    }

    pub fn stat(&self, key: &str) -> u64 {
        self.stats.get(key).copied().unwrap_or(0)
    }

    pub fn set_stat(&mut self, key: &str, value: u64) {
        self.stats.insert(key.to_string(), value);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_set_is_sorted_and_deduplicated() {
        let s: VertexSet = vec![3, 1, 3, 2].into();
        assert_eq!(s.as_slice(), &[1, 2, 3]);
        assert!(s.contains(2));
        assert!(!s.contains(0));
        assert_eq!(VertexSet::from_mask(&s.to_mask(4)), s);
    }

    #[test]
    fn rejects_self_loop_and_duplicate_edge() {
        assert!(TssInstance::new(2, &[(0, 0)], vec![1, 1]).is_err());
        assert!(TssInstance::new(2, &[(0, 1), (1, 0)], vec![1, 1]).is_err());
        assert!(TssInstance::new(2, &[(0, 2)], vec![1, 1]).is_err());
        assert!(TssInstance::new(2, &[], vec![1]).is_err());
    }

    #[test]
    fn adjacency_is_symmetric() {
        let g = TssInstance::new(3, &[(2, 0), (1, 2)], vec![1, 1, 1]).unwrap();
        assert_eq!(g.neighbors(2), &[0, 1]);
        assert_eq!(g.edges(), &[(0, 2), (1, 2)]);
        assert!(g.has_edge(0, 2) && g.has_edge(2, 0) && !g.has_edge(0, 1));
    }

    #[test]
    fn bipartition_must_cross_every_edge() {
        let g = TssInstance::new(3, &[(0, 1), (1, 2)], vec![1, 1, 1]).unwrap();
        let ok = Bipartition {
            left: [0, 2].into(),
            right: [1].into(),
        };
        assert!(g.clone().with_bipartition(ok).is_ok());
        let bad = Bipartition {
            left: [0, 1].into(),
            right: [2].into(),
        };
        assert!(g.clone().with_bipartition(bad).is_err());
        let partial = Bipartition {
            left: [0].into(),
            right: [1].into(),
        };
        assert!(g.with_bipartition(partial).is_err());
    }

    #[test]
    fn set_cover_feasibility() {
        let sc = SetCoverInstance::new(2, vec![vec![0]]).unwrap();
        assert_eq!(sc.uncovered_elements(), vec![1]);
        assert!(SetCoverInstance::new(2, vec![vec![2]]).is_err());
        let empty = SetCoverInstance::new(0, vec![]).unwrap();
        assert!(empty.is_feasible() && empty.is_cover(&[]));
    }
}
