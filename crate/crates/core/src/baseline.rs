//! Exhaustive oracles and a greedy heuristic.

use std::time::Instant;

use crate::diffusion::Simulator;
use crate::error::{Error, Result};
use crate::instance::{SetCoverInstance, SolveResult, TssInstance, VertexSet};

pub const DEFAULT_CAP: usize = 20;

/// Advances `combo` to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let Some(i) = (0..k).rev().find(|&i| combo[i] < n - k + i) else {
        return false;
    };
    combo[i] += 1;
    for j in i + 1..k {
        combo[j] = combo[j - 1] + 1;
    }
    true
}

/// Visits every subset of `0..n` by increasing size, lexicographically within
/// a size, until `visit` returns true. Returns the accepted subset.
fn first_subset<F>(n: usize, deadline: Option<Instant>, mut visit: F) -> Result<Option<Vec<usize>>>
where
    F: FnMut(&[usize]) -> bool,
{
    let mut checked: u64 = 0;
    for k in 0..=n {
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            checked += 1;
            if checked.is_multiple_of(4096) {
                if let Some(d) = deadline {
                    if Instant::now() >= d {
                        return Err(Error::Timeout);
                    }
                }
            }
            if visit(&combo) {
                return Ok(Some(combo));
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    Ok(None)
}

/// Minimum target set by trying every seed set in order of size. The first
/// hit is optimal and lexicographically smallest among optimal sets.
pub fn brute_force_tss(instance: &TssInstance, cap: usize) -> Result<SolveResult> {
    brute_force_tss_until(instance, cap, None)
}

pub fn brute_force_tss_until(
    instance: &TssInstance,
    cap: usize,
    deadline: Option<Instant>,
) -> Result<SolveResult> {
    let n = instance.vertex_count();
    if n > cap {
        return Err(Error::CapExceeded { size: n, cap });
    }
    let mut sim = Simulator::new(instance);
    let mut checked = 0u64;
    let found = first_subset(n, deadline, |seed| {
        checked += 1;
        sim.is_target_set(seed.iter().copied())
    })?
    .expect("the full vertex set is a target set");
    let mut result = SolveResult::new(found.into_iter().collect());
    result.set_stat("subsets_checked", checked);
    Ok(result)
}

/// Minimum set cover by exhaustive search over sub-collections. Returns the
/// size and the chosen 0-based subset indices.
pub fn brute_force_setcover(sc: &SetCoverInstance, cap: usize) -> Result<(usize, Vec<usize>)> {
    let m = sc.subset_count();
    if m > cap {
        return Err(Error::CapExceeded { size: m, cap });
    }
    sc.check_feasible()?;
    let chosen = first_subset(m, None, |combo| sc.is_cover(combo))?
        .expect("a feasible instance is covered by all subsets");
    Ok((chosen.len(), chosen))
}

/// Seeds the highest-degree vertex not yet influenced (lowest id on ties) and
/// re-simulates until everything is active.
pub fn greedy_tss(instance: &TssInstance) -> VertexSet {
    let n = instance.vertex_count();
    let mut seeds = VertexSet::new();
    let mut sim = Simulator::new(instance);
    loop {
        let active = sim.influence_mask(seeds.iter());
        let pick = (0..n)
            .filter(|&v| !active[v])
            .max_by_key(|&v| (instance.degree(v), std::cmp::Reverse(v)));
        match pick {
            Some(v) => {
                seeds.insert(v);
            }
            None => return seeds,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffusion::is_target_set;

    #[test]
    fn combinations_are_lexicographic() {
        let mut c = vec![0, 1];
        let mut all = vec![c.clone()];
        while next_combination(&mut c, 4) {
            all.push(c.clone());
        }
        assert_eq!(all, vec![[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]);
    }

    #[test]
    fn brute_tss_examples() {
        let path = TssInstance::new(3, &[(0, 1), (1, 2)], vec![1, 1, 1]).unwrap();
        let r = brute_force_tss(&path, DEFAULT_CAP).unwrap();
        assert_eq!((r.optimum_size, r.witness), (1, [0].into()));

        let star = TssInstance::new(4, &[(0, 1), (0, 2), (0, 3)], vec![3, 1, 1, 1]).unwrap();
        let r = brute_force_tss(&star, DEFAULT_CAP).unwrap();
        assert_eq!((r.optimum_size, r.witness), (1, [0].into()));

        let edgeless = TssInstance::new(3, &[], vec![1, 1, 1]).unwrap();
        assert_eq!(
            brute_force_tss(&edgeless, DEFAULT_CAP)
                .unwrap()
                .optimum_size,
            3
        );

        assert!(matches!(
            brute_force_tss(&edgeless, 2),
            Err(Error::CapExceeded { size: 3, cap: 2 })
        ));
    }

    #[test]
    fn brute_tss_optimum_is_minimal() {
        let g = TssInstance::new(
            5,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)],
            vec![2, 1, 2, 1, 2],
        )
        .unwrap();
        let r = brute_force_tss(&g, DEFAULT_CAP).unwrap();
        assert!(is_target_set(&g, &r.witness).unwrap());
        let k = r.optimum_size - 1;
        let mut combo: Vec<usize> = (0..k).collect();
        loop {
            assert!(!is_target_set(&g, &combo.iter().copied().collect()).unwrap());
            if !next_combination(&mut combo, 5) {
                break;
            }
        }
    }

    #[test]
    fn brute_setcover_examples() {
        let one = SetCoverInstance::new(3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(
            brute_force_setcover(&one, DEFAULT_CAP).unwrap(),
            (1, vec![0])
        );
        let split = SetCoverInstance::new(2, vec![vec![0], vec![1]]).unwrap();
        assert_eq!(
            brute_force_setcover(&split, DEFAULT_CAP).unwrap(),
            (2, vec![0, 1])
        );
        let three = SetCoverInstance::new(3, vec![vec![0, 1], vec![1, 2], vec![2]]).unwrap();
        assert_eq!(
            brute_force_setcover(&three, DEFAULT_CAP).unwrap(),
            (2, vec![0, 1])
        );
        let bad = SetCoverInstance::new(2, vec![vec![0]]).unwrap();
        assert!(matches!(
            brute_force_setcover(&bad, DEFAULT_CAP),
            Err(Error::Uncoverable(1))
        ));
    }

    #[test]
    fn greedy_examples() {
        let star = TssInstance::new(4, &[(0, 1), (0, 2), (0, 3)], vec![3, 1, 1, 1]).unwrap();
        assert_eq!(greedy_tss(&star), [0].into());
        let edgeless = TssInstance::new(3, &[], vec![1, 1, 1]).unwrap();
        assert_eq!(greedy_tss(&edgeless), [0, 1, 2].into());
    }
}
