mod common;

use pebbling_core::solve::odd_stack_rule_holds;
use pebbling_core::{
    apply_moves, complete_graph_solvable, execute_certificate, odd_stack_summary, solve,
    solve_bruteforce, verify_certificate, Configuration, Family, Outcome,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn odd_stack_criterion_matches_oracle_exhaustively() {
    for n in 2..=4 {
        let k = Family::Complete(n).generate().unwrap();
        for t in 0..=10 {
            for c in common::compositions(n, t) {
                let c = Configuration::new(c).unwrap();
                assert_eq!(
                    complete_graph_solvable(n, &c),
                    solve_bruteforce(&k, &c).unwrap(),
                    "{:?}",
                    c.pebbles()
                );
            }
        }
    }
}

#[test]
fn solver_matches_oracle_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..300 {
        let n = rng.random_range(1..=5);
        let extra = rng.random_range(0.0..0.6);
        let g = common::random_connected(&mut rng, n, extra);
        let t = rng.random_range(0..=10);
        let c = common::random_config(&mut rng, n, t);
        let r = solve(&g, &c).unwrap();
        let truth = solve_bruteforce(&g, &c).unwrap();
        assert_eq!(
            r.solvable(),
            Some(truth),
            "{:?} {:?}",
            g.edges(),
            c.pebbles()
        );
        if let Some(cert) = r.certificate() {
            assert!(verify_certificate(&g, &c, cert).unwrap());
            let seq = execute_certificate(&g, &c, cert).unwrap();
            assert!(apply_moves(&g, &c, &seq).unwrap().is_covering());
            assert!(cert.total_moves() <= c.total() - n as u64);
        }
    }
}

#[test]
fn solver_matches_oracle_on_disconnected_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..150 {
        let n = rng.random_range(2..=6);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(0.3) {
                    edges.push((u, v));
                }
            }
        }
        let g = pebbling_core::Graph::new(n, &edges).unwrap();
        let c = {
            let t = rng.random_range(0..=12);
            common::random_config(&mut rng, n, t)
        };
        let r = solve(&g, &c).unwrap();
        assert_eq!(r.solvable(), Some(solve_bruteforce(&g, &c).unwrap()));
        if let Some(cert) = r.certificate() {
            assert!(verify_certificate(&g, &c, cert).unwrap());
        }
    }
}

#[test]
fn named_families_match_oracle() {
    let families = [
        Family::Path(5),
        Family::Cycle(5),
        Family::Cube(2),
        Family::CompleteMultipartite(vec![3, 2]),
        Family::RandomTree { n: 6, seed: 3 },
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for fam in families {
        let g = fam.generate().unwrap();
        let n = g.vertex_count();
        for _ in 0..40 {
            let c = {
                let t = rng.random_range(n as u64..=14);
                common::random_config(&mut rng, n, t)
            };
            assert_eq!(
                solve(&g, &c).unwrap().solvable(),
                Some(solve_bruteforce(&g, &c).unwrap()),
                "{fam:?} {:?}",
                c.pebbles()
            );
        }
    }
}

#[test]
fn partial_executions_stay_solvable() {
    let mut rng = ChaCha8Rng::seed_from_u64(31337);
    let mut trials = 0;
    while trials < 200 {
        let n = rng.random_range(2..=5);
        let g = common::random_connected(&mut rng, n, 0.3);
        let c = {
            let t = rng.random_range(n as u64..=12);
            common::random_config(&mut rng, n, t)
        };
        let r = solve(&g, &c).unwrap();
        let Some(cert) = r.certificate() else {
            continue;
        };
        let seq = execute_certificate(&g, &c, cert).unwrap();
        // Random subsequence, then drop whatever is no longer legal.
        let picked: Vec<_> = seq
            .iter()
            .copied()
            .filter(|_| rng.random_bool(0.5))
            .collect();
        let mut legal = Vec::new();
        let mut cur = c.clone();
        for mv in picked {
            if let Ok(next) = apply_moves(&g, &cur, &[mv]) {
                cur = next;
                legal.push(mv);
            }
        }
        let residual = apply_moves(&g, &c, &legal).unwrap();
        assert_eq!(residual.total(), c.total() - legal.len() as u64);
        assert_eq!(solve(&g, &residual).unwrap().solvable(), Some(true));
        trials += 1;
    }
}

#[test]
fn more_pebbles_never_hurt() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let n = rng.random_range(2..=5);
        let g = common::random_connected(&mut rng, n, 0.3);
        let c = {
            let t = rng.random_range(n as u64..=10);
            common::random_config(&mut rng, n, t)
        };
        if solve(&g, &c).unwrap().solvable() != Some(true) {
            continue;
        }
        let extra = {
            let t = rng.random_range(1..=4);
            common::random_config(&mut rng, n, t)
        };
        let bigger: Vec<u64> = c
            .pebbles()
            .iter()
            .zip(extra.pebbles())
            .map(|(a, b)| a + b)
            .collect();
        let bigger = Configuration::new(bigger).unwrap();
        assert_eq!(solve(&g, &bigger).unwrap().solvable(), Some(true));
    }
}

#[test]
fn large_stack_on_long_path() {
    // Beyond the oracle's reach: a pile of exactly the cover number at one end.
    let g = Family::Path(12).generate().unwrap();
    let mut pile = vec![0u64; 12];
    pile[0] = (1 << 12) - 1;
    let c = Configuration::new(pile.clone()).unwrap();
    let r = solve(&g, &c).unwrap();
    let cert = r.certificate().unwrap();
    assert!(verify_certificate(&g, &c, cert).unwrap());
    pile[0] -= 1;
    let r = solve(&g, &Configuration::new(pile).unwrap()).unwrap();
    assert_eq!(r.outcome, Outcome::Unsolvable);
}

#[test]
fn budget_runs_out_honestly() {
    let g = Family::Cycle(8).generate().unwrap();
    let c = Configuration::new(vec![5, 0, 0, 5, 0, 0, 5, 0]).unwrap();
    let full = solve(&g, &c).unwrap();
    assert_eq!(full.path, pebbling_core::FastPath::Search);
    assert!(full.nodes > 1, "nodes = {}", full.nodes);
    let r = pebbling_core::solve_with_budget(&g, &c, 1).unwrap();
    assert_eq!(r.outcome, Outcome::Undecided);
}

/// `floor(sum_u C(u) 2^-dist(u, v) * 2^D)` for a common scale `2^D`.
fn scaled_weight(g: &pebbling_core::Graph, c: &[u64], v: usize) -> u128 {
    let scale = g.distances().max_finite();
    (0..c.len())
        .filter_map(|u| {
            g.distances()
                .get(u, v)
                .map(|d| (c[u] as u128) << (scale - d))
        })
        .sum()
}

proptest! {
    #[test]
    fn parity_of_odd_stacks(pebbles in prop::collection::vec(0u64..50, 1..30)) {
        let c = Configuration::new(pebbles).unwrap();
        let s = odd_stack_summary(&c);
        prop_assert_eq!(s.odd_count % 2, (s.total % 2) as usize);
        prop_assert_eq!(s.odd_count + s.even_count, c.len());
        prop_assert_eq!(s.histogram.values().sum::<usize>(), c.len());
        prop_assert_eq!(s.histogram.iter().map(|(&k, &v)| k * v as u64).sum::<u64>(), s.total);
        prop_assert_eq!(odd_stack_rule_holds(c.len(), s.odd_count, s.total), complete_graph_solvable(c.len(), &c));
    }

    #[test]
    fn weights_never_increase_under_moves(seed in any::<u64>(), n in 2usize..9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_connected(&mut rng, n, 0.2);
        let mut c = common::random_config(&mut rng, n, 30).into_pebbles();
        for _ in 0..10 {
            let sources: Vec<usize> = (0..n).filter(|&u| c[u] >= 2).collect();
            if sources.is_empty() {
                break;
            }
            let a = sources[rng.random_range(0..sources.len())];
            let nb = g.neighbors(a);
            let b = nb[rng.random_range(0..nb.len())];
            let before: Vec<u128> = (0..n).map(|v| scaled_weight(&g, &c, v)).collect();
            c[a] -= 2;
            c[b] += 1;
            for (v, &w) in before.iter().enumerate() {
                prop_assert!(scaled_weight(&g, &c, v) <= w);
            }
        }
    }
}
