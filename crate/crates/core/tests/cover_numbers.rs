mod common;

use num_bigint::BigUint;
use num_traits::One;
use pebbling_core::{cover_pebbling_number, solve_bruteforce, Configuration, Family};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn lambda(f: Family) -> BigUint {
    cover_pebbling_number(&f.generate().unwrap())
        .unwrap()
        .lambda
}

fn descending_partitions(total: usize, max_part: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max_part.min(total)).rev() {
        for mut rest in descending_partitions(total - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn complete_graphs() {
    for n in 1..=12 {
        assert_eq!(lambda(Family::Complete(n)), BigUint::from(2 * n - 1));
    }
}

#[test]
fn paths() {
    for n in 1..=16u32 {
        assert_eq!(
            lambda(Family::Path(n as usize)),
            (BigUint::one() << n) - 1u32
        );
    }
}

#[test]
fn cubes() {
    for d in 0..=8u32 {
        assert_eq!(lambda(Family::Cube(d)), BigUint::from(3u32).pow(d));
    }
}

#[test]
fn complete_multipartite() {
    let mut checked = 0;
    for total in 1..=10 {
        for parts in descending_partitions(total, total) {
            // A single part is an edgeless graph.
            if parts.len() < 2 {
                continue;
            }
            let g = Family::CompleteMultipartite(parts.clone())
                .generate()
                .unwrap();
            let pairs: usize = (0..parts.len())
                .flat_map(|i| (i + 1..parts.len()).map(move |j| (i, j)))
                .map(|(i, j)| parts[i] * parts[j])
                .sum();
            assert_eq!(g.edge_count(), pairs);
            let want = 4 * parts[0] + 2 * parts[1..].iter().sum::<usize>() - 3;
            assert_eq!(
                cover_pebbling_number(&g).unwrap().lambda,
                BigUint::from(want),
                "{parts:?}"
            );
            checked += 1;
        }
    }
    assert!(checked > 100);
}

#[test]
fn cube_edge_counts() {
    for d in 1..=8u32 {
        let g = Family::Cube(d).generate().unwrap();
        assert_eq!(g.edge_count(), d as usize * (1 << (d - 1)));
    }
}

#[test]
fn stacked_pile_is_tight() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut graphs = vec![
        Family::Path(4).generate().unwrap(),
        Family::Cycle(5).generate().unwrap(),
        Family::Complete(4).generate().unwrap(),
        Family::CompleteMultipartite(vec![2, 2]).generate().unwrap(),
    ];
    for _ in 0..12 {
        let n = 2 + (graphs.len() % 4);
        graphs.push(common::random_connected(&mut rng, n, 0.3));
    }
    for g in graphs {
        let r = cover_pebbling_number(&g).unwrap();
        let lam: u64 = r.lambda.clone().try_into().unwrap();
        let mut pile = vec![0u64; g.vertex_count()];
        pile[r.argmax] = lam;
        assert!(solve_bruteforce(&g, &Configuration::new(pile.clone()).unwrap()).unwrap());
        pile[r.argmax] = lam - 1;
        if g.vertex_count() > 1 {
            assert!(!solve_bruteforce(&g, &Configuration::new(pile).unwrap()).unwrap());
        }
    }
}

proptest! {
    #[test]
    fn invariant_under_relabeling(seed in any::<u64>(), n in 1usize..9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_connected(&mut rng, n, 0.25);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let h = g.relabel(&perm).unwrap();
        let a = cover_pebbling_number(&g).unwrap();
        let b = cover_pebbling_number(&h).unwrap();
        prop_assert_eq!(&a.lambda, &b.lambda);
        prop_assert_eq!(&a.weights[a.argmax], &b.weights[perm[a.argmax]]);
        prop_assert!(a.lambda >= BigUint::from(2 * n - 1));
    }

    #[test]
    fn build_is_order_and_duplicate_insensitive(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_connected(&mut rng, 7, 0.3);
        let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
        edges.extend(g.edges().iter().map(|&(u, v)| (v, u)));
        edges.shuffle(&mut rng);
        prop_assert_eq!(pebbling_core::Graph::new(7, &edges).unwrap(), g);
    }
}
