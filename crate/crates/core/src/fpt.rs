//! Exact target set selection parameterized by a vertex cover `C`.
//!
//! 1. [`reduce_forced`] moves every vertex whose threshold exceeds its degree
//!    into the solution, deletes everything those vertices influence and
//!    lowers the survivors' thresholds, until a fixpoint with `τ <= deg`.
//! 2. Every cover vertex gets a guessed activation round in `0..=2t`
//!    ([`enumerate_guesses`]). Round 0 means the vertex is seeded.
//! 3. The rounds of the independent side `B = V \ C` follow from the guess.
//!    Each cover vertex then demands a number of seeded `B` neighbors among
//!    those that would otherwise activate too late ([`build_mhs`]).
//! 4. Each guess yields one Multi-Hitting Set instance over `B`. A hitting set
//!    plus the round-0 cover vertices is a target set.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::cover::{best_cover, is_vertex_cover, DEFAULT_NODE_LIMIT};
use crate::diffusion::Simulator;
use crate::error::{Error, Result};
use crate::instance::{SolveResult, TssInstance, VertexSet};
use crate::mhs::{mhs_decide, mhs_minimize, min_hitting_size, MhsInstance};

/// Result of forced-vertex preprocessing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedInstance {
    /// Surviving vertices, renumbered densely in original order.
    pub core: TssInstance,
    /// Original ids of vertices that belong to every target set.
    pub forced: VertexSet,
    /// Original id of each core vertex.
    pub core_to_original: Vec<usize>,
    /// Original id → number of deleted, already-influenced neighbors, for
    /// core vertices whose threshold was lowered.
    pub pre_activated_discount: BTreeMap<usize, usize>,
}

impl ReducedInstance {
    fn identity(instance: &TssInstance) -> Self {
        ReducedInstance {
            core: instance.clone(),
            forced: VertexSet::new(),
            core_to_original: (0..instance.vertex_count()).collect(),
            pre_activated_discount: BTreeMap::new(),
        }
    }

    pub fn to_original(&self, core_set: &VertexSet) -> VertexSet {
        core_set.iter().map(|v| self.core_to_original[v]).collect()
    }

    /// Core ids of the original vertices in `set` that survived reduction.
    pub fn to_core(&self, set: &VertexSet) -> VertexSet {
        self.core_to_original
            .iter()
            .enumerate()
            .filter_map(|(c, &o)| set.contains(o).then_some(c))
            .collect()
    }
}

/// Forced-vertex preprocessing, iterated to a fixpoint.
///
/// Vertices with `τ(v) > deg(v)` are forced; they and everything they
/// influence are deleted, and each survivor's threshold and degree drop by its
/// number of deleted neighbors. Zero-threshold vertices are influenced for
/// free and deleted the same way without being forced. The resulting core has
/// `1 <= τ(v) <= deg(v)` everywhere.
pub fn reduce_forced(instance: &TssInstance) -> ReducedInstance {
    let n = instance.vertex_count();
    let mut alive = vec![true; n];
    let mut tau: Vec<usize> = instance.thresholds().to_vec();
    let mut deg: Vec<usize> = (0..n).map(|v| instance.degree(v)).collect();
    let mut discount = vec![0usize; n];
    let mut forced = Vec::new();

    loop {
        let mut queue: Vec<usize> = Vec::new();
        let mut influenced = vec![false; n];
        for v in (0..n).filter(|&v| alive[v]) {
            if tau[v] > deg[v] {
                forced.push(v);
                influenced[v] = true;
                queue.push(v);
            } else if tau[v] == 0 {
                influenced[v] = true;
                queue.push(v);
            }
        }
        if queue.is_empty() {
            break;
        }
        // closure of the seeds on the alive subgraph
        let mut hits = vec![0usize; n];
        let mut removed = Vec::new();
        while let Some(v) = queue.pop() {
            removed.push(v);
            for &u in instance.neighbors(v) {
                if alive[u] && !influenced[u] {
                    hits[u] += 1;
                    if hits[u] >= tau[u] {
                        influenced[u] = true;
                        queue.push(u);
                    }
                }
            }
        }
        for &v in &removed {
            alive[v] = false;
        }
        for v in (0..n).filter(|&v| alive[v] && hits[v] > 0) {
            tau[v] -= hits[v];
            deg[v] -= hits[v];
            discount[v] += hits[v];
        }
    }

    let core_to_original: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let mut original_to_core = vec![usize::MAX; n];
    for (c, &o) in core_to_original.iter().enumerate() {
        original_to_core[o] = c;
    }
    let edges: Vec<(usize, usize)> = instance
        .edges()
        .iter()
        .filter(|&&(u, v)| alive[u] && alive[v])
        .map(|&(u, v)| (original_to_core[u], original_to_core[v]))
        .collect();
    let thresholds = core_to_original.iter().map(|&o| tau[o]).collect();
    let core = TssInstance::new(core_to_original.len(), &edges, thresholds)
        .expect("induced subgraph of a valid instance");
    let pre_activated_discount = core_to_original
        .iter()
        .filter(|&&o| discount[o] > 0)
        .map(|&o| (o, discount[o]))
        .collect();
    ReducedInstance {
        core,
        forced: forced.into_iter().collect(),
        core_to_original,
        pre_activated_discount,
    }
}

/// Guessed activation rounds of the cover vertices, in cover order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TimestampGuess(pub Vec<usize>);

impl TimestampGuess {
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// Decodes the `index`-th guess in lexicographic order over `0..=2t`.
    pub fn from_index(t: usize, mut index: u64) -> Self {
        let base = 2 * t as u64 + 1;
        let mut values = vec![0; t];
        for slot in values.iter_mut().rev() {
            *slot = (index % base) as usize;
            index /= base;
        }
        TimestampGuess(values)
    }
}

/// `(2t + 1)^t`, the number of timestamp guesses for a cover of size `t`.
pub fn guess_count(t: usize) -> u64 {
    (2 * t as u64 + 1).pow(t as u32)
}

/// All `(2t + 1)^t` guesses in lexicographic order. `t = 0` yields one empty
/// guess.
pub fn enumerate_guesses(t: usize) -> impl Iterator<Item = TimestampGuess> {
    (0..guess_count(t)).map(move |i| TimestampGuess::from_index(t, i))
}

/// Which instances [`build_mhs`] throws away.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum DiscardRule {
    /// Discard only guesses that cannot be satisfied: a demand larger than its
    /// candidate set or the budget, or a negative budget.
    #[default]
    Relaxed,
    /// Additionally discard any guess with a demand of at least `t`.
    Strict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiscardReason {
    NegativeBudget,
    DemandExceedsCandidates { cover_index: usize },
    DemandExceedsBudget { cover_index: usize },
    StrictDemandBound { cover_index: usize },
}

/// One guess turned into a Multi-Hitting Set instance over `B`.
#[derive(Debug, Clone)]
pub struct GuessInstance {
    pub mhs: MhsInstance,
    /// Cover vertices guessed at round 0 (core ids).
    pub seeded_cover: VertexSet,
    /// Derived activation round of every `B` vertex, `None` for never.
    pub b_rounds: Vec<(usize, Option<usize>)>,
}

#[derive(Debug, Clone)]
pub enum BuiltGuess {
    Instance(GuessInstance),
    Discard(DiscardReason),
}

/// Cover/independent-side split of a core instance with the adjacency data
/// every guess needs.
struct GuessContext<'a> {
    core: &'a TssInstance,
    cover: Vec<usize>,
    b: Vec<usize>,
    /// Cover positions adjacent to each `B` position.
    b_cover_nbrs: Vec<Vec<usize>>,
    /// Cover positions adjacent to each cover position.
    cover_cover_nbrs: Vec<Vec<usize>>,
    /// `B` positions adjacent to each cover position.
    cover_b_nbrs: Vec<Vec<usize>>,
}

const NEVER: usize = usize::MAX;

impl<'a> GuessContext<'a> {
    fn new(core: &'a TssInstance, cover: &VertexSet) -> Self {
        let n = core.vertex_count();
        let mut cover_pos = vec![None; n];
        for (i, v) in cover.iter().enumerate() {
            cover_pos[v] = Some(i);
        }
        let b: Vec<usize> = (0..n).filter(|&v| cover_pos[v].is_none()).collect();
        let mut b_pos = vec![None; n];
        for (p, &v) in b.iter().enumerate() {
            b_pos[v] = Some(p);
        }
        let b_cover_nbrs = b
            .iter()
            .map(|&u| {
                core.neighbors(u)
                    .iter()
                    .filter_map(|&w| cover_pos[w])
                    .collect()
            })
            .collect();
        let cover_cover_nbrs = cover
            .iter()
            .map(|v| {
                core.neighbors(v)
                    .iter()
                    .filter_map(|&w| cover_pos[w])
                    .collect()
            })
            .collect();
        let cover_b_nbrs = cover
            .iter()
            .map(|v| core.neighbors(v).iter().filter_map(|&w| b_pos[w]).collect())
            .collect();
        GuessContext {
            core,
            cover: cover.iter().collect(),
            b,
            b_cover_nbrs,
            cover_cover_nbrs,
            cover_b_nbrs,
        }
    }

    fn t(&self) -> usize {
        self.cover.len()
    }

    /// Round in which a non-seeded `B` vertex activates under `guess`: one
    /// after the `τ(u)`-th smallest guessed round among its neighbors.
    fn b_round(&self, p: usize, guess: &[usize], scratch: &mut Vec<usize>) -> usize {
        let tau = self.core.threshold(self.b[p]);
        if tau == 0 {
            return 1;
        }
        let nbrs = &self.b_cover_nbrs[p];
        if tau > nbrs.len() {
            return NEVER;
        }
        scratch.clear();
        scratch.extend(nbrs.iter().map(|&i| guess[i]));
        let (_, kth, _) = scratch.select_nth_unstable(tau - 1);
        *kth + 1
    }

    fn build(&self, guess: &[usize], k: usize, rule: DiscardRule) -> BuiltGuess {
        let t = self.t();
        let zeros = guess.iter().filter(|&&x| x == 0).count();
        if zeros > k {
            return BuiltGuess::Discard(DiscardReason::NegativeBudget);
        }
        let budget = k - zeros;

        let mut scratch = Vec::with_capacity(t);
        let b_round: Vec<usize> = (0..self.b.len())
            .map(|p| self.b_round(p, guess, &mut scratch))
            .collect();

        let mut demand_sets = Vec::with_capacity(t);
        let mut demands = Vec::with_capacity(t);
        let mut membership = vec![Vec::new(); self.b.len()];
        for i in 0..t {
            let round = guess[i];
            if round == 0 {
                // seeded: no neighbor needed
                demand_sets.push(Vec::new());
                demands.push(0);
                continue;
            }
            let early_cover = self.cover_cover_nbrs[i]
                .iter()
                .filter(|&&w| guess[w] < round)
                .count();
            let mut early_b = 0;
            let mut candidates = Vec::new();
            for &p in &self.cover_b_nbrs[i] {
                if b_round[p] < round {
                    early_b += 1;
                } else {
                    candidates.push(p);
                }
            }
            let tau = self.core.threshold(self.cover[i]);
            let demand = tau.saturating_sub(early_cover + early_b);
            // strict adds its bound on top of the relaxed checks
            if rule == DiscardRule::Strict && demand >= t {
                return BuiltGuess::Discard(DiscardReason::StrictDemandBound { cover_index: i });
            }
            if demand > candidates.len() {
                return BuiltGuess::Discard(DiscardReason::DemandExceedsCandidates {
                    cover_index: i,
                });
            }
            if demand > budget {
                return BuiltGuess::Discard(DiscardReason::DemandExceedsBudget { cover_index: i });
            }
            for &p in &candidates {
                membership[p].push(i);
            }
            demand_sets.push(candidates.iter().map(|&p| self.b[p]).collect());
            demands.push(demand);
        }

        let seeded_cover = (0..t)
            .filter(|&i| guess[i] == 0)
            .map(|i| self.cover[i])
            .collect();
        let b_rounds = self
            .b
            .iter()
            .zip(&b_round)
            .map(|(&u, &r)| (u, (r != NEVER).then_some(r)))
            .collect();
        BuiltGuess::Instance(GuessInstance {
            mhs: MhsInstance::new_unchecked(
                self.b.clone(),
                demand_sets,
                demands,
                budget,
                membership,
            ),
            seeded_cover,
            b_rounds,
        })
    }
}

/// Builds the Multi-Hitting Set instance for one guess, or the reason it was
/// discarded. `cover` must be a vertex cover of `core`; `guess` lists rounds in
/// ascending cover-vertex order.
pub fn build_mhs(
    core: &TssInstance,
    cover: &VertexSet,
    guess: &TimestampGuess,
    k: usize,
    rule: DiscardRule,
) -> Result<BuiltGuess> {
    cover.check_range(core.vertex_count())?;
    if !is_vertex_cover(core, cover) {
        return Err(Error::NotAVertexCover);
    }
    if guess.values().len() != cover.len() {
        return Err(Error::InvalidInstance(format!(
            "guess has {} rounds for a cover of size {}",
            guess.values().len(),
            cover.len()
        )));
    }
    let bound = 2 * cover.len();
    if let Some(&x) = guess.values().iter().find(|&&x| x > bound) {
        return Err(Error::InvalidInstance(format!(
            "guessed round {x} exceeds {bound}"
        )));
    }
    Ok(GuessContext::new(core, cover).build(guess.values(), k, rule))
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub discard_rule: DiscardRule,
    /// Skip forced-vertex preprocessing. The instance must then already
    /// satisfy `1 <= τ(v) <= deg(v)` everywhere.
    pub no_reduce: bool,
    /// Worker threads for guess enumeration; 0 uses the global pool.
    pub threads: usize,
    /// Externally supplied vertex cover of the input instance.
    pub cover: Option<VertexSet>,
    /// Stop at the first guess reaching the trivial lower bound.
    pub early_exit: bool,
    pub deadline: Option<Instant>,
    pub cover_node_limit: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            discard_rule: DiscardRule::Relaxed,
            no_reduce: false,
            threads: 0,
            cover: None,
            early_exit: false,
            deadline: None,
            cover_node_limit: DEFAULT_NODE_LIMIT,
        }
    }
}

fn prepare(instance: &TssInstance, options: &SolveOptions) -> Result<ReducedInstance> {
    if let Some(cover) = &options.cover {
        cover.check_range(instance.vertex_count())?;
        if !is_vertex_cover(instance, cover) {
            return Err(Error::NotAVertexCover);
        }
    }
    if options.no_reduce {
        let ok = (0..instance.vertex_count())
            .all(|v| instance.threshold(v) >= 1 && instance.threshold(v) <= instance.degree(v));
        if !ok {
            return Err(Error::ReductionRequired);
        }
        return Ok(ReducedInstance::identity(instance));
    }
    Ok(reduce_forced(instance))
}

fn core_cover(reduced: &ReducedInstance, options: &SolveOptions) -> VertexSet {
    match &options.cover {
        Some(c) => reduced.to_core(c),
        None => best_cover(&reduced.core, options.cover_node_limit),
    }
}

fn with_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    if threads == 0 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

fn check_deadline(deadline: Option<Instant>) -> Result<()> {
    match deadline {
        Some(d) if Instant::now() >= d => Err(Error::Timeout),
        _ => Ok(()),
    }
}

/// Per-guess outcome folded over the enumeration.
#[derive(Debug, Clone, Copy, Default)]
struct Tally {
    guesses: u64,
    built: u64,
    discarded: u64,
    cells: u64,
    /// (core solution size, guess index)
    best: Option<(usize, u64)>,
}

impl Tally {
    fn merge(self, other: Tally) -> Tally {
        let best = match (self.best, other.best) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        Tally {
            guesses: self.guesses + other.guesses,
            built: self.built + other.built,
            discarded: self.discarded + other.discarded,
            cells: self.cells + other.cells,
            best,
        }
    }
}

fn evaluate_guess(ctx: &GuessContext, index: u64, k: usize, rule: DiscardRule) -> Result<Tally> {
    let guess = TimestampGuess::from_index(ctx.t(), index);
    let mut tally = Tally {
        guesses: 1,
        ..Tally::default()
    };
    match ctx.build(guess.values(), k, rule) {
        BuiltGuess::Discard(_) => tally.discarded = 1,
        BuiltGuess::Instance(gi) => {
            tally.built = 1;
            let (size, stats) = min_hitting_size(&gi.mhs)?;
            tally.cells = stats.cells_filled();
            tally.best = size.map(|s| (s + gi.seeded_cover.len(), index));
        }
    }
    Ok(tally)
}

fn finish_witness(
    instance: &TssInstance,
    reduced: &ReducedInstance,
    core_witness: &VertexSet,
) -> Result<VertexSet> {
    let witness = reduced.to_original(core_witness).union(&reduced.forced);
    if !Simulator::new(instance).is_target_set(witness.iter()) {
        return Err(Error::NotATargetSet);
    }
    Ok(witness)
}

/// Minimum target set via one Multi-Hitting Set minimization per guess.
///
/// Each guess is solved with budget `|C|`, since the cover alone is already a
/// target set of the core. Ties on size go to the lexicographically smallest
/// guess, so the witness does not depend on the thread count.
pub fn solve_optimal(instance: &TssInstance, options: &SolveOptions) -> Result<SolveResult> {
    let reduced = prepare(instance, options)?;
    let cover = core_cover(&reduced, options);
    let ctx = GuessContext::new(&reduced.core, &cover);
    let t = ctx.t();
    let k = t;
    let total = guess_count(t);
    let rule = options.discard_rule;
    let lower_bound = usize::from(reduced.core.vertex_count() > 0);

    let tally = if options.early_exit {
        let mut acc = Tally::default();
        for index in 0..total {
            check_deadline(options.deadline)?;
            acc = acc.merge(evaluate_guess(&ctx, index, k, rule)?);
            if acc.best.is_some_and(|(s, _)| s <= lower_bound) {
                break;
            }
        }
        acc
    } else {
        with_pool(options.threads, || {
            (0..total)
                .into_par_iter()
                .map(|index| {
                    check_deadline(options.deadline)?;
                    evaluate_guess(&ctx, index, k, rule)
                })
                .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))
        })?
    };

    let (_, best_index) = tally
        .best
        .ok_or_else(|| Error::InvalidInstance("no guess admits a solution".into()))?;
    let guess = TimestampGuess::from_index(t, best_index);
    let BuiltGuess::Instance(gi) = ctx.build(guess.values(), k, rule) else {
        unreachable!("best guess was built before");
    };
    let (_, hitting) = mhs_minimize(&gi.mhs)?.expect("best guess is feasible");
    let core_witness = gi.seeded_cover.union(&hitting.into_iter().collect());
    let witness = finish_witness(instance, &reduced, &core_witness)?;

    let mut result = SolveResult::new(witness);
    result.set_stat("best_guess", best_index);
    result.set_stat("cells", tally.cells);
    result.set_stat("core_vertices", reduced.core.vertex_count() as u64);
    result.set_stat("cover_size", t as u64);
    result.set_stat("discarded", tally.discarded);
    result.set_stat("forced", reduced.forced.len() as u64);
    result.set_stat("guesses", tally.guesses);
    result.set_stat("mhs_built", tally.built);
    Ok(result)
}

/// Rebuilds the Multi-Hitting Set instance of guess `index` exactly as
/// [`solve_optimal`] saw it. `None` when that guess is discarded.
pub fn rebuild_guess(
    instance: &TssInstance,
    options: &SolveOptions,
    index: u64,
) -> Result<Option<GuessInstance>> {
    let reduced = prepare(instance, options)?;
    let cover = core_cover(&reduced, options);
    let ctx = GuessContext::new(&reduced.core, &cover);
    let t = ctx.t();
    if index >= guess_count(t) {
        return Err(Error::InvalidInstance(format!(
            "guess index {index} out of range"
        )));
    }
    let guess = TimestampGuess::from_index(t, index);
    Ok(match ctx.build(guess.values(), t, options.discard_rule) {
        BuiltGuess::Instance(gi) => Some(gi),
        BuiltGuess::Discard(_) => None,
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Decision {
    /// A target set of size at most `k`, or `None` for a NO answer.
    pub witness: Option<VertexSet>,
    pub stats: BTreeMap<String, u64>,
}

/// Decides whether a target set of size at most `k` exists, using `cover`
/// (a vertex cover of `instance`) as the parameter.
pub fn solve_decision(
    instance: &TssInstance,
    cover: &VertexSet,
    k: usize,
    options: &SolveOptions,
) -> Result<Decision> {
    let options = SolveOptions {
        cover: Some(cover.clone()),
        ..options.clone()
    };
    let reduced = prepare(instance, &options)?;
    let mut decision = Decision::default();
    decision
        .stats
        .insert("forced".into(), reduced.forced.len() as u64);
    let Some(k_core) = k.checked_sub(reduced.forced.len()) else {
        return Ok(decision);
    };
    let cover = core_cover(&reduced, &options);
    if k_core >= cover.len() {
        decision.witness = Some(finish_witness(instance, &reduced, &cover)?);
        return Ok(decision);
    }
    let ctx = GuessContext::new(&reduced.core, &cover);
    let t = ctx.t();
    let rule = options.discard_rule;
    let found = with_pool(options.threads, || {
        (0..guess_count(t))
            .into_par_iter()
            .map(|index| -> Result<Option<VertexSet>> {
                check_deadline(options.deadline)?;
                let guess = TimestampGuess::from_index(t, index);
                let BuiltGuess::Instance(gi) = ctx.build(guess.values(), k_core, rule) else {
                    return Ok(None);
                };
                Ok(mhs_decide(&gi.mhs)?.map(|h| gi.seeded_cover.union(&h.into_iter().collect())))
            })
            .find_map_first(|r| match r {
                Ok(None) => None,
                other => Some(other),
            })
    });
    decision.stats.insert("cover_size".into(), t as u64);
    decision.stats.insert("guesses".into(), guess_count(t));
    if let Some(found) = found {
        let core_witness = found?.expect("filtered to Some");
        decision.witness = Some(finish_witness(instance, &reduced, &core_witness)?);
    }
    Ok(decision)
}
