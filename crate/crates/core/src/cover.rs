//! Vertex covers for parameterizing the exact solver.

use crate::instance::{TssInstance, VertexSet};

/// Search-node budget used by [`best_cover`] before it settles for the
/// matching-based cover.
pub const DEFAULT_NODE_LIMIT: u64 = 1 << 24;

/// True iff every edge has an endpoint in `cover`.
pub fn is_vertex_cover(instance: &TssInstance, cover: &VertexSet) -> bool {
    let mask = cover.to_mask(instance.vertex_count());
    instance.edges().iter().all(|&(u, v)| mask[u] || mask[v])
}

/// Both endpoints of a greedy maximal matching, scanning edges in
/// lexicographic order. At most twice the minimum cover size.
pub fn approx_vertex_cover(instance: &TssInstance) -> VertexSet {
    let mut matched = vec![false; instance.vertex_count()];
    for &(u, v) in instance.edges() {
        if !matched[u] && !matched[v] {
            matched[u] = true;
            matched[v] = true;
        }
    }
    VertexSet::from_mask(&matched)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverSearch {
    Found(VertexSet),
    ExceedsBudget,
    NodeLimit,
}

struct Search<'a> {
    edges: &'a [(usize, usize)],
    in_cover: Vec<bool>,
    nodes: u64,
    node_limit: u64,
}

impl Search<'_> {
    /// Branches on the first uncovered edge: one endpoint or the other.
    /// `Some(true)` on success, `Some(false)` on exhausted budget, `None` on
    /// node limit.
    fn branch(&mut self, from: usize, k: usize) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return None;
        }
        let next = self.edges[from..]
            .iter()
            .position(|&(u, v)| !self.in_cover[u] && !self.in_cover[v])
            .map(|i| i + from);
        let Some(i) = next else {
            return Some(true);
        };
        if k == 0 {
            return Some(false);
        }
        let (u, v) = self.edges[i];
        for x in [u, v] {
            self.in_cover[x] = true;
            match self.branch(i + 1, k - 1) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            self.in_cover[x] = false;
        }
        Some(false)
    }
}

/// Minimum vertex cover by a bounded search tree, trying budgets 0, 1, ...
/// in turn so the first cover found is minimum.
pub fn exact_min_vertex_cover_limited(
    instance: &TssInstance,
    budget: usize,
    node_limit: u64,
) -> CoverSearch {
    let mut search = Search {
        edges: instance.edges(),
        in_cover: vec![false; instance.vertex_count()],
        nodes: 0,
        node_limit,
    };
    for k in 0..=budget {
        search.in_cover.iter_mut().for_each(|b| *b = false);
        match search.branch(0, k) {
            Some(true) => return CoverSearch::Found(VertexSet::from_mask(&search.in_cover)),
            Some(false) => {}
            None => return CoverSearch::NodeLimit,
        }
    }
    CoverSearch::ExceedsBudget
}

/// A minimum vertex cover if one of size at most `budget` exists.
pub fn exact_min_vertex_cover(instance: &TssInstance, budget: usize) -> Option<VertexSet> {
    match exact_min_vertex_cover_limited(instance, budget, u64::MAX) {
        CoverSearch::Found(c) => Some(c),
        _ => None,
    }
}

/// Exact minimum cover when the search stays under `node_limit`, otherwise
/// the matching-based approximation.
pub fn best_cover(instance: &TssInstance, node_limit: u64) -> VertexSet {
    let approx = approx_vertex_cover(instance);
    match exact_min_vertex_cover_limited(instance, approx.len(), node_limit) {
        CoverSearch::Found(c) => c,
        _ => approx,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> TssInstance {
        TssInstance::new(n, edges, vec![1; n]).unwrap()
    }

    fn path(n: usize) -> TssInstance {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        graph(n, &edges)
    }

    #[test]
    fn approx_examples() {
        assert!(approx_vertex_cover(&graph(3, &[])).is_empty());
        assert_eq!(approx_vertex_cover(&graph(2, &[(0, 1)])), [0, 1].into());
        let p5 = path(5);
        let approx = approx_vertex_cover(&p5);
        let exact = exact_min_vertex_cover(&p5, 5).unwrap();
        assert_eq!(exact.len(), 2);
        assert!(approx.len() <= 4 && is_vertex_cover(&p5, &approx));
    }

    #[test]
    fn exact_examples() {
        let tri = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        let c = exact_min_vertex_cover(&tri, 2).unwrap();
        assert_eq!(c.len(), 2);
        assert!(is_vertex_cover(&tri, &c));
        assert_eq!(exact_min_vertex_cover(&tri, 1), None);

        let star = graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert_eq!(exact_min_vertex_cover(&star, 1), Some([0].into()));
    }

    #[test]
    fn is_vertex_cover_examples() {
        let p = path(3);
        assert!(is_vertex_cover(&p, &p.vertices()));
        assert!(!is_vertex_cover(&graph(2, &[(0, 1)]), &VertexSet::new()));
        assert!(is_vertex_cover(&p, &[1].into()));
    }

    #[test]
    fn node_limit_falls_back_to_approx() {
        let tri = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(
            exact_min_vertex_cover_limited(&tri, 2, 1),
            CoverSearch::NodeLimit
        );
        let c = best_cover(&tri, 1);
        assert_eq!(c, approx_vertex_cover(&tri));
        assert_eq!(best_cover(&tri, DEFAULT_NODE_LIMIT).len(), 2);
    }
}
