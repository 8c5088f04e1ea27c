//! Synchronous threshold diffusion.
//!
//! Starting from a seed set, round `i` activates every inactive vertex with
//! at least `τ(u)` neighbors active after round `i - 1`. The process stops at
//! the first round that would activate nothing.
//!
//! The simulation keeps a per-vertex count of active neighbors and only
//! touches the neighborhoods of newly activated vertices, so a full run costs
//! O(n + m).

use crate::error::Result;
use crate::instance::{TssInstance, VertexSet};

/// Per-round activation sets of one diffusion run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActivationTrace {
    rounds: Vec<VertexSet>,
    timestamp: Vec<Option<usize>>,
}

impl ActivationTrace {
    /// `rounds()[0]` is the seed; `rounds()[i]` holds the vertices first
    /// activated in round `i`.
    pub fn rounds(&self) -> &[VertexSet] {
        &self.rounds
    }

    /// Number of rounds after the seed round.
    pub fn round_count(&self) -> usize {
        self.rounds.len() - 1
    }

    /// Activation round of `v`, or `None` if it never activates.
    pub fn timestamp(&self, v: usize) -> Option<usize> {
        self.timestamp[v]
    }

    pub fn timestamps(&self) -> &[Option<usize>] {
        &self.timestamp
    }

    /// All vertices active once the process has stopped.
    pub fn activated(&self) -> VertexSet {
        self.rounds.iter().flat_map(|r| r.iter()).collect()
    }

    /// Vertices active on or before round `i`.
    pub fn active_after(&self, i: usize) -> VertexSet {
        self.rounds
            .iter()
            .take(i + 1)
            .flat_map(|r| r.iter())
            .collect()
    }
}

/// Reusable scratch space for repeated diffusions on one instance.
pub struct Simulator<'a> {
    instance: &'a TssInstance,
    active: Vec<bool>,
    count: Vec<usize>,
    current: Vec<usize>,
    next: Vec<usize>,
    touched: Vec<usize>,
}

impl<'a> Simulator<'a> {
    pub fn new(instance: &'a TssInstance) -> Self {
        let n = instance.vertex_count();
        Simulator {
            instance,
            active: vec![false; n],
            count: vec![0; n],
            current: Vec::new(),
            next: Vec::new(),
            touched: Vec::new(),
        }
    }

    fn reset(&mut self) {
        for &v in &self.touched {
            self.active[v] = false;
            self.count[v] = 0;
        }
        self.touched.clear();
        self.current.clear();
        self.next.clear();
    }

    /// Runs the process and calls `on_round(i, vertices)` for every round,
    /// including the seed round 0. Returns the number of active vertices.
    ///
    /// Seeds must be in range; callers validate.
    fn run_with<F>(&mut self, seed: impl IntoIterator<Item = usize>, mut on_round: F) -> usize
    where
        F: FnMut(usize, &[usize]),
    {
        self.reset();
        let g = self.instance;
        for v in seed {
            if !self.active[v] {
                self.active[v] = true;
                self.touched.push(v);
                self.current.push(v);
            }
        }
        let mut total = self.current.len();
        on_round(0, &self.current);

        // Unseeded zero-threshold vertices are satisfied by the empty set.
        for v in 0..g.vertex_count() {
            if g.threshold(v) == 0 && !self.active[v] {
                self.next.push(v);
                self.touched.push(v);
            }
        }
        let mut round = 0;
        loop {
            for &v in &self.current {
                for &u in g.neighbors(v) {
                    if self.active[u] {
                        continue;
                    }
                    if self.count[u] == 0 {
                        self.touched.push(u);
                    }
                    self.count[u] += 1;
                    if self.count[u] == g.threshold(u) {
                        self.next.push(u);
                    }
                }
            }
            if self.next.is_empty() {
                break;
            }
            round += 1;
            for &u in &self.next {
                self.active[u] = true;
            }
            total += self.next.len();
            on_round(round, &self.next);
            std::mem::swap(&mut self.current, &mut self.next);
            self.next.clear();
        }
        total
    }

    /// Number of vertices active at the end of the process.
    pub fn influence_count(&mut self, seed: impl IntoIterator<Item = usize>) -> usize {
        self.run_with(seed, |_, _| {})
    }

    pub fn is_target_set(&mut self, seed: impl IntoIterator<Item = usize>) -> bool {
        self.influence_count(seed) == self.instance.vertex_count()
    }

    /// Active-vertex mask at the end of the process.
    pub fn influence_mask(&mut self, seed: impl IntoIterator<Item = usize>) -> Vec<bool> {
        self.run_with(seed, |_, _| {});
        self.active.clone()
    }

    pub fn trace(&mut self, seed: impl IntoIterator<Item = usize>) -> ActivationTrace {
        let n = self.instance.vertex_count();
        let mut rounds = Vec::new();
        let mut timestamp = vec![None; n];
        self.run_with(seed, |i, vs| {
            for &v in vs {
                timestamp[v] = Some(i);
            }
            rounds.push(vs.iter().copied().collect());
        });
        ActivationTrace { rounds, timestamp }
    }
}

/// Full round-by-round trace of the diffusion started from `seed`.
pub fn diffuse(instance: &TssInstance, seed: &VertexSet) -> Result<ActivationTrace> {
    seed.check_range(instance.vertex_count())?;
    Ok(Simulator::new(instance).trace(seed.iter()))
}

/// The set of vertices eventually activated from `seed`.
pub fn influence(instance: &TssInstance, seed: &VertexSet) -> Result<VertexSet> {
    seed.check_range(instance.vertex_count())?;
    let mask = Simulator::new(instance).influence_mask(seed.iter());
    Ok(VertexSet::from_mask(&mask))
}

/// True iff `seed` eventually activates every vertex.
pub fn is_target_set(instance: &TssInstance, seed: &VertexSet) -> Result<bool> {
    seed.check_range(instance.vertex_count())?;
    Ok(Simulator::new(instance).is_target_set(seed.iter()))
}
