//! Multi-Hitting Set: pick at most `q` universe elements so that every demand
//! set `S_i` contains at least `l_i` of them.
//!
//! The dynamic program runs over the universe in order. Entry
//! `D_j(q', l'_1, …, l'_t)` records whether some subset of the first `j`
//! elements of size at most `q'` hits every `S_i` at least `l'_i` times:
//!
//! ```text
//! D_0(q', l') present  iff  l' = 0
//! D_j(q', l') present  iff  D_{j-1}(q', l') present
//!                       or  D_{j-1}(q' - 1, l' - [u_j ∈ S_i]) present
//! ```
//!
//! where the decrement saturates at zero. Presence is monotone in `q'`, so
//! each layer stores, per demand vector, the smallest `q'` at which the entry
//! is present. Query [`DpTable::entry`] for the boolean view.

use crate::error::{Error, Result};

/// Largest number of demand vectors a single table may index.
pub const MAX_CELLS: u128 = 1 << 24;

const ABSENT: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MhsInstance {
    universe: Vec<usize>,
    demand_sets: Vec<Vec<usize>>,
    demands: Vec<usize>,
    budget: usize,
    /// For each universe position, the indices of the demand sets containing it.
    membership: Vec<Vec<usize>>,
}

impl MhsInstance {
    /// Validates that every demand set is drawn from `universe` and that
    /// `l_i <= t` for every demand, where `t` is the number of demand sets.
    pub fn new(
        universe: Vec<usize>,
        demand_sets: Vec<Vec<usize>>,
        demands: Vec<usize>,
        budget: usize,
    ) -> Result<Self> {
        let t = demand_sets.len();
        if demands.len() != t {
            return Err(Error::InvalidMhs(format!(
                "{t} demand sets but {} demands",
                demands.len()
            )));
        }
        if let Some((i, &l)) = demands.iter().enumerate().find(|(_, &l)| l > t) {
            return Err(Error::InvalidMhs(format!(
                "demand l_{} = {l} exceeds the number of sets {t}",
                i + 1
            )));
        }
        let position: std::collections::HashMap<usize, usize> =
            universe.iter().enumerate().map(|(p, &e)| (e, p)).collect();
        if position.len() != universe.len() {
            return Err(Error::InvalidMhs("universe has repeated elements".into()));
        }
        let mut membership = vec![Vec::new(); universe.len()];
        let mut demand_sets = demand_sets;
        for (i, set) in demand_sets.iter_mut().enumerate() {
            set.sort_unstable();
            set.dedup();
            for e in set.iter() {
                let p = *position.get(e).ok_or_else(|| {
                    Error::InvalidMhs(format!("element {e} of S_{} not in universe", i + 1))
                })?;
                membership[p].push(i);
            }
        }
        Ok(MhsInstance {
            universe,
            demand_sets,
            demands,
            budget,
            membership,
        })
    }

    /// Builds an instance without the `l_i <= t` check. The dynamic program is
    /// correct for any demands; this is used by callers whose demands are
    /// bounded by other means.
    pub(crate) fn new_unchecked(
        universe: Vec<usize>,
        demand_sets: Vec<Vec<usize>>,
        demands: Vec<usize>,
        budget: usize,
        membership: Vec<Vec<usize>>,
    ) -> Self {
        MhsInstance {
            universe,
            demand_sets,
            demands,
            budget,
            membership,
        }
    }

    pub fn universe(&self) -> &[usize] {
        &self.universe
    }

    pub fn demand_sets(&self) -> &[Vec<usize>] {
        &self.demand_sets
    }

    pub fn demands(&self) -> &[usize] {
        &self.demands
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn set_count(&self) -> usize {
        self.demand_sets.len()
    }

    /// True iff `chosen` (element ids) respects the budget and meets every demand.
    pub fn is_solution(&self, chosen: &[usize]) -> bool {
        chosen.len() <= self.budget
            && self.demand_sets.iter().zip(&self.demands).all(|(set, &l)| {
                chosen
                    .iter()
                    .filter(|e| set.binary_search(e).is_ok())
                    .count()
                    >= l
            })
    }
}

/// Mixed-radix indexing of demand vectors `0 <= l'_i <= l_i`.
///
/// Only sets with a positive demand get a dimension; the others can never
/// constrain anything.
#[derive(Debug, Clone)]
struct Layout {
    /// Demand-set index of each dimension.
    dims: Vec<usize>,
    radix: Vec<usize>,
    stride: Vec<usize>,
    cells: usize,
    /// Bit `d` set iff digit `d` of the cell is positive.
    nonzero: Vec<u32>,
    /// Per universe position, the bitmask of dimensions it belongs to.
    element_mask: Vec<u32>,
}

impl Layout {
    fn new(instance: &MhsInstance) -> Result<Self> {
        let dims: Vec<usize> = (0..instance.set_count())
            .filter(|&i| instance.demands[i] > 0)
            .collect();
        let mut cells: u128 = 1;
        for &i in &dims {
            cells = cells.saturating_mul(instance.demands[i] as u128 + 1);
        }
        if cells > MAX_CELLS || dims.len() > 32 {
            return Err(Error::TableTooLarge(cells));
        }
        let radix: Vec<usize> = dims.iter().map(|&i| instance.demands[i] + 1).collect();
        let mut stride = vec![1; dims.len()];
        for d in 1..dims.len() {
            stride[d] = stride[d - 1] * radix[d - 1];
        }
        let cells = cells as usize;
        let nonzero = (0..cells)
            .map(|idx| {
                (0..dims.len()).fold(0u32, |acc, d| {
                    if !(idx / stride[d]).is_multiple_of(radix[d]) {
                        acc | (1 << d)
                    } else {
                        acc
                    }
                })
            })
            .collect();
        let mut dim_of = vec![None; instance.set_count()];
        for (d, &i) in dims.iter().enumerate() {
            dim_of[i] = Some(d);
        }
        let element_mask = instance
            .membership
            .iter()
            .map(|sets| {
                sets.iter()
                    .filter_map(|&i| dim_of[i])
                    .fold(0u32, |acc, d| acc | (1 << d))
            })
            .collect();
        Ok(Layout {
            dims,
            radix,
            stride,
            cells,
            nonzero,
            element_mask,
        })
    }

    /// Index of the cell reached by taking an element with dimension mask `mask`.
    #[inline]
    fn decremented(&self, idx: usize, mask: u32) -> usize {
        let mut bits = self.nonzero[idx] & mask;
        let mut out = idx;
        while bits != 0 {
            let d = bits.trailing_zeros() as usize;
            out -= self.stride[d];
            bits &= bits - 1;
        }
        out
    }

    fn index_of(&self, demands: &[usize]) -> Option<usize> {
        let mut idx = 0;
        for (d, &i) in self.dims.iter().enumerate() {
            let v = demands[i];
            if v >= self.radix[d] {
                return None;
            }
            idx += v * self.stride[d];
        }
        Some(idx)
    }

    fn full(&self) -> usize {
        self.cells - 1
    }

    fn base_layer(&self) -> Vec<u32> {
        let mut layer = vec![ABSENT; self.cells];
        layer[0] = 0;
        layer
    }

    /// Folds element `position` into `layer` in place. Cells are visited in
    /// decreasing index order, so every read sees the previous layer.
    fn step(&self, layer: &mut [u32], position: usize) {
        let mask = self.element_mask[position];
        if mask == 0 {
            return;
        }
        for idx in (0..self.cells).rev() {
            let from = layer[self.decremented(idx, mask)];
            if from != ABSENT && from + 1 < layer[idx] {
                layer[idx] = from + 1;
            }
        }
    }
}

/// Work counters of one dynamic program run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MhsStats {
    /// Demand vectors per layer.
    pub cells_per_layer: usize,
    /// Layers computed (excluding the base layer).
    pub layers: usize,
}

impl MhsStats {
    pub fn cells_filled(&self) -> u64 {
        self.cells_per_layer as u64 * self.layers as u64
    }

    /// Entries per layer in the `(q', l')` view of the table.
    pub fn entries_per_layer(&self, budget: usize) -> u64 {
        self.cells_per_layer as u64 * (budget as u64 + 1)
    }
}

/// Smallest hitting set size within the budget, computed with a single
/// in-place layer. Elements that belong to no positive-demand set are skipped.
pub fn min_hitting_size(instance: &MhsInstance) -> Result<(Option<usize>, MhsStats)> {
    let layout = Layout::new(instance)?;
    let mut layer = layout.base_layer();
    let mut stats = MhsStats {
        cells_per_layer: layout.cells,
        layers: 0,
    };
    for p in 0..instance.universe.len() {
        if layout.element_mask[p] != 0 {
            layout.step(&mut layer, p);
            stats.layers += 1;
        }
    }
    let best = layer[layout.full()];
    let size = (best != ABSENT && best as usize <= instance.budget).then_some(best as usize);
    Ok((size, stats))
}

/// The complete table, one layer per universe prefix `U_0 ⊆ U_1 ⊆ … ⊆ U`.
#[derive(Debug, Clone)]
pub struct DpTable {
    layout: Layout,
    layers: Vec<Vec<u32>>,
    budget: usize,
    universe: Vec<usize>,
}

impl DpTable {
    pub fn build(instance: &MhsInstance) -> Result<Self> {
        let layout = Layout::new(instance)?;
        let mut layers = Vec::with_capacity(instance.universe.len() + 1);
        let mut layer = layout.base_layer();
        layers.push(layer.clone());
        for p in 0..instance.universe.len() {
            layout.step(&mut layer, p);
            layers.push(layer.clone());
        }
        Ok(DpTable {
            layout,
            layers,
            budget: instance.budget,
            universe: instance.universe.clone(),
        })
    }

    pub fn layer_count(&self) -> usize {
        self.layers.len()
    }

    pub fn cells_per_layer(&self) -> usize {
        self.layout.cells
    }

    fn min_size(&self, j: usize, demands: &[usize]) -> Option<u32> {
        let idx = self.layout.index_of(demands)?;
        Some(self.layers[j][idx]).filter(|&m| m != ABSENT)
    }

    /// Whether `D_j(q', l')` is present. Out-of-range indices read as absent.
    pub fn entry(&self, j: usize, budget: usize, demands: &[usize]) -> bool {
        budget <= self.budget
            && self
                .min_size(j, demands)
                .is_some_and(|m| m as usize <= budget)
    }

    /// A witness for `D_j(q', l')`, following the recurrence backwards and
    /// preferring "element not taken" whenever that entry is present.
    pub fn witness(&self, j: usize, budget: usize, demands: &[usize]) -> Option<Vec<usize>> {
        if !self.entry(j, budget, demands) {
            return None;
        }
        let mut idx = self.layout.index_of(demands)?;
        let mut q = budget as u32;
        let mut chosen = Vec::new();
        for k in (1..=j).rev() {
            let prev = self.layers[k - 1][idx];
            if prev != ABSENT && prev <= q {
                continue;
            }
            chosen.push(self.universe[k - 1]);
            idx = self
                .layout
                .decremented(idx, self.layout.element_mask[k - 1]);
            q -= 1;
        }
        chosen.reverse();
        Some(chosen)
    }

    /// Number of present `(q', l')` entries in each layer.
    pub fn occupancy(&self) -> Vec<usize> {
        let q = self.budget as u32;
        self.layers
            .iter()
            .map(|layer| {
                layer
                    .iter()
                    .filter(|&&m| m <= q)
                    .map(|&m| (q - m + 1) as usize)
                    .sum()
            })
            .collect()
    }

    fn final_min(&self) -> Option<usize> {
        let m = *self.layers.last()?.get(self.layout.full())?;
        (m != ABSENT && m as usize <= self.budget).then_some(m as usize)
    }
}

/// Decides the instance; on success returns a hitting set within the budget.
pub fn mhs_decide(instance: &MhsInstance) -> Result<Option<Vec<usize>>> {
    let table = DpTable::build(instance)?;
    Ok(table.witness(table.layer_count() - 1, instance.budget, &instance.demands))
}

/// Minimum hitting set size within the budget together with a witness of
/// that size: the final layer read at the smallest present `q'`.
pub fn mhs_minimize(instance: &MhsInstance) -> Result<Option<(usize, Vec<usize>)>> {
    let table = DpTable::build(instance)?;
    let Some(size) = table.final_min() else {
        return Ok(None);
    };
    let witness = table
        .witness(table.layer_count() - 1, size, &instance.demands)
        .expect("present entry has a witness");
    Ok(Some((size, witness)))
}
