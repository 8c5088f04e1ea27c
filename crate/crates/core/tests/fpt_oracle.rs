use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tss::baseline::{brute_force_tss, greedy_tss, DEFAULT_CAP};
use tss::cover::{approx_vertex_cover, exact_min_vertex_cover, is_vertex_cover};
use tss::diffusion::{diffuse, influence, is_target_set};
use tss::fpt::{reduce_forced, solve_decision, solve_optimal, DiscardRule, SolveOptions};
use tss::generate::{
    all_connected_graphs, generate_bounded_vc, random_instance, random_thresholds, ThresholdMode,
};
use tss::instance::{TssInstance, VertexSet};

fn small_instances() -> Vec<TssInstance> {
    let mut out = Vec::new();
    for n in 1..=5 {
        for (i, edges) in all_connected_graphs(n).into_iter().enumerate() {
            for s in 0..3 {
                out.push(random_thresholds(n, &edges, (n * 1000 + i * 10 + s) as u64).unwrap());
            }
        }
    }
    for seed in 0..60 {
        let n = 4 + (seed as usize % 7);
        out.push(random_instance(n, 0.35, seed).unwrap());
    }
    out
}

#[test]
fn fpt_matches_brute_force() {
    let opts = SolveOptions::default();
    for g in small_instances() {
        let expected = brute_force_tss(&g, DEFAULT_CAP).unwrap().optimum_size;
        let got = solve_optimal(&g, &opts).unwrap();
        assert_eq!(got.optimum_size, expected, "{g:?}");
        assert!(is_target_set(&g, &got.witness).unwrap());
        assert!(got.stat("mhs_built") <= got.stat("guesses"));
    }
}

#[test]
fn strict_discard_keeps_the_optimum() {
    // a demand of t or more means a hitting set of size >= t, which never
    // beats seeding the whole cover, so the strict rule only drops losers
    let opts = SolveOptions {
        discard_rule: DiscardRule::Strict,
        ..SolveOptions::default()
    };
    let mut fewer_built = 0;
    for g in small_instances() {
        let expected = brute_force_tss(&g, DEFAULT_CAP).unwrap().optimum_size;
        let got = solve_optimal(&g, &opts).unwrap();
        let relaxed = solve_optimal(&g, &SolveOptions::default()).unwrap();
        assert!(is_target_set(&g, &got.witness).unwrap());
        assert_eq!(got.optimum_size, expected, "{g:?}");
        assert!(got.stat("mhs_built") <= relaxed.stat("mhs_built"));
        fewer_built += usize::from(got.stat("mhs_built") < relaxed.stat("mhs_built"));
    }
    assert!(
        fewer_built > 0,
        "strict rule never discarded anything extra"
    );
}

#[test]
fn decision_flips_at_the_optimum() {
    let opts = SolveOptions::default();
    for g in small_instances().into_iter().step_by(3) {
        let opt = brute_force_tss(&g, DEFAULT_CAP).unwrap().optimum_size;
        let cover = exact_min_vertex_cover(&g, g.vertex_count()).unwrap();
        let yes = solve_decision(&g, &cover, opt, &opts).unwrap();
        let w = yes.witness.expect("optimum size is achievable");
        assert!(w.len() <= opt && is_target_set(&g, &w).unwrap());
        if opt > 0 {
            let no = solve_decision(&g, &cover, opt - 1, &opts).unwrap();
            assert_eq!(no.witness, None, "{g:?}");
        }
    }
}

#[test]
fn reduction_preserves_the_optimum() {
    for g in small_instances() {
        let r = reduce_forced(&g);
        for v in 0..r.core.vertex_count() {
            assert!(r.core.threshold(v) >= 1);
            assert!(r.core.threshold(v) <= r.core.degree(v));
        }
        let core_opt = brute_force_tss(&r.core, DEFAULT_CAP).unwrap().optimum_size;
        let opt = brute_force_tss(&g, DEFAULT_CAP).unwrap().optimum_size;
        assert_eq!(opt, r.forced.len() + core_opt);
    }
}

#[test]
fn optimal_seed_timestamps_fit_the_guess_range() {
    for g in small_instances() {
        let opt = brute_force_tss(&g, DEFAULT_CAP).unwrap();
        let cover = exact_min_vertex_cover(&g, g.vertex_count()).unwrap();
        let trace = diffuse(&g, &opt.witness).unwrap();
        for v in cover.iter() {
            let ts = trace.timestamp(v).expect("target set activates everything");
            assert!(ts <= 2 * cover.len());
        }
    }
}

#[test]
fn cover_is_a_target_set_when_thresholds_fit_degrees() {
    for seed in 0..40 {
        let g = generate_bounded_vc(3, 10, 0.4, ThresholdMode::UniformRandom, seed).unwrap();
        // isolated vertices can never be reached, so they join the seed
        let stuck: VertexSet = (0..10).filter(|&v| g.threshold(v) > g.degree(v)).collect();
        for c in [
            approx_vertex_cover(&g),
            exact_min_vertex_cover(&g, 10).unwrap(),
        ] {
            assert!(is_vertex_cover(&g, &c));
            assert!(is_target_set(&g, &c.union(&stuck)).unwrap());
        }
    }
}

#[test]
fn external_cover_gives_same_optimum() {
    for seed in 0..20 {
        let g = generate_bounded_vc(3, 11, 0.5, ThresholdMode::Majority, seed).unwrap();
        let auto = solve_optimal(&g, &SolveOptions::default()).unwrap();
        let given = SolveOptions {
            cover: Some([0, 1, 2].into()),
            ..SolveOptions::default()
        };
        let with_cover = solve_optimal(&g, &given).unwrap();
        assert_eq!(auto.optimum_size, with_cover.optimum_size);
        assert!(is_target_set(&g, &with_cover.witness).unwrap());
    }
}

#[test]
fn greedy_never_beats_the_optimum() {
    for g in small_instances() {
        let opt = brute_force_tss(&g, DEFAULT_CAP).unwrap().optimum_size;
        let greedy = greedy_tss(&g);
        assert!(is_target_set(&g, &greedy).unwrap());
        assert!(greedy.len() >= opt);
    }
}

fn arb_instance() -> impl Strategy<Value = TssInstance> {
    (1usize..=9, 0.0f64..0.8, any::<u64>())
        .prop_map(|(n, p, seed)| random_instance(n, p, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn seed_monotonicity(g in arb_instance(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = g.vertex_count();
        let small: VertexSet = (0..n).filter(|_| rng.gen_bool(0.3)).collect();
        let large = small.union(&(0..n).filter(|_| rng.gen_bool(0.3)).collect());
        let a = influence(&g, &small).unwrap();
        let b = influence(&g, &large).unwrap();
        prop_assert!(a.is_subset(&b));
    }

    #[test]
    fn trace_is_well_formed(g in arb_instance(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = g.vertex_count();
        let s: VertexSet = (0..n).filter(|_| rng.gen_bool(0.3)).collect();
        let trace = diffuse(&g, &s).unwrap();
        prop_assert!(trace.rounds().len() <= n + 1);
        prop_assert_eq!(&trace.rounds()[0], &s);
        let mut seen = vec![false; n];
        for (i, round) in trace.rounds().iter().enumerate() {
            prop_assert!(i == 0 || !round.is_empty());
            for v in round.iter() {
                prop_assert!(!seen[v]);
                seen[v] = true;
                prop_assert_eq!(trace.timestamp(v), Some(i));
                // activation rule holds exactly at round i
                if i > 0 {
                    let before = trace.active_after(i - 1);
                    let hits = g.neighbors(v).iter().filter(|&&w| before.contains(w)).count();
                    prop_assert!(hits >= g.threshold(v));
                    if i > 1 {
                        let earlier = trace.active_after(i - 2);
                        let hits = g.neighbors(v).iter().filter(|&&w| earlier.contains(w)).count();
                        prop_assert!(hits < g.threshold(v));
                    }
                }
            }
        }
        // nothing left that could still activate
        let active = trace.activated();
        for v in (0..n).filter(|&v| !active.contains(v)) {
            let hits = g.neighbors(v).iter().filter(|&&w| active.contains(w)).count();
            prop_assert!(hits < g.threshold(v));
        }
    }

    #[test]
    fn round_count_respects_cover_bound(g in arb_instance(), v in any::<prop::sample::Index>()) {
        let t = exact_min_vertex_cover(&g, g.vertex_count()).unwrap().len();
        let seed: VertexSet = [v.index(g.vertex_count())].into();
        let trace = diffuse(&g, &seed).unwrap();
        prop_assert!(trace.round_count() <= 2 * t);
    }

    #[test]
    fn covers_are_valid_and_within_factor_two(g in arb_instance()) {
        let approx = approx_vertex_cover(&g);
        let exact = exact_min_vertex_cover(&g, approx.len()).unwrap();
        prop_assert!(is_vertex_cover(&g, &approx));
        prop_assert!(is_vertex_cover(&g, &exact));
        prop_assert!(approx.len() <= 2 * exact.len());
        // complement of a cover is independent
        let rest = g.vertices().difference(&exact);
        for &(u, w) in g.edges() {
            prop_assert!(!(rest.contains(u) && rest.contains(w)));
        }
    }
}
