//! Randomized invariant checks for the structural layer: metric
//! axioms of the distance matrix, handshake identity, isomorphism
//! under relabeling, closure laws of the color-change rule, and
//! monotonicity of resolving sets.

use proptest::prelude::*;

use graphinv_core::families;
use graphinv_core::metric_dim::is_resolving;
use graphinv_core::zero_forcing::{forcing_closure, is_zero_forcing};
use graphinv_core::Graph;

/// Arbitrary graph on up to 8 vertices: a vertex count and a bitmask
/// over the vertex pairs.
fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=8).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |picks| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if picks[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn arb_connected_graph() -> impl Strategy<Value = Graph> {
    arb_graph().prop_filter("connected", |g| g.is_connected())
}

/// Closure computed in an arbitrary force order instead of the
/// deterministic lowest-index order.
fn closure_in_order(g: &Graph, start: &[usize], order: &[usize]) -> Vec<usize> {
    let n = g.n();
    let mut black = vec![false; n];
    for &v in start {
        black[v] = true;
    }
    loop {
        let mut fired = false;
        for &u in order {
            if !black[u] {
                continue;
            }
            let whites: Vec<usize> = g.neighbors(u).iter().copied().filter(|&w| !black[w]).collect();
            if let [w] = whites[..] {
                black[w] = true;
                fired = true;
                break;
            }
        }
        if !fired {
            break;
        }
    }
    (0..n).filter(|&v| black[v]).collect()
}

proptest! {
    #[test]
    fn distance_matrix_is_a_metric(g in arb_graph()) {
        let d = g.distance_matrix();
        let n = g.n();
        for u in 0..n {
            prop_assert_eq!(d.get(u, u), 0);
            for v in 0..n {
                prop_assert_eq!(d.get(u, v), d.get(v, u));
                if let Some(duv) = d.distance(u, v) {
                    // reachable pairs satisfy the triangle inequality
                    for w in 0..n {
                        if let (Some(duw), Some(dwv)) = (d.distance(u, w), d.distance(w, v)) {
                            prop_assert!(duv <= duw + dwv);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn handshake(g in arb_graph()) {
        let total: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * g.m());
    }

    #[test]
    fn isomorphic_to_relabeling(g in arb_graph(), seed in any::<u64>()) {
        prop_assert!(g.is_isomorphic(&g).unwrap());
        // permute labels by a seed-derived rotation and swap
        let n = g.n();
        let shift = (seed as usize) % n;
        let perm: Vec<usize> = (0..n).map(|v| (v + shift) % n).collect();
        let edges: Vec<(usize, usize)> =
            g.edges().iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        let h = Graph::new(n, &edges).unwrap();
        prop_assert!(g.is_isomorphic(&h).unwrap());
        prop_assert!(h.is_isomorphic(&g).unwrap());
    }

    #[test]
    fn closure_laws(g in arb_graph(), picks in proptest::collection::vec(any::<bool>(), 8)) {
        let start: Vec<usize> = (0..g.n()).filter(|&v| picks[v]).collect();
        let (state, trace) = forcing_closure(&g, &start);
        // extensive: the start set stays black
        for &v in &start {
            prop_assert!(state.contains(v));
        }
        // idempotent
        let (again, again_trace) = forcing_closure(&g, &state.black);
        prop_assert_eq!(&again.black, &state.black);
        prop_assert!(again_trace.events.is_empty());
        // monotone: enlarging the start enlarges the closure
        if g.n() > 0 {
            let mut bigger = start.clone();
            bigger.push(g.n() - 1);
            let (sup, _) = forcing_closure(&g, &bigger);
            for &v in &state.black {
                prop_assert!(sup.contains(v));
            }
        }
        prop_assert_eq!(trace.initial.len() + trace.events.len(), state.black.len());
    }

    #[test]
    fn closure_is_order_independent(
        g in arb_graph(),
        picks in proptest::collection::vec(any::<bool>(), 8),
        seed in any::<u64>(),
    ) {
        let start: Vec<usize> = (0..g.n()).filter(|&v| picks[v]).collect();
        let (state, _) = forcing_closure(&g, &start);
        let n = g.n();
        let shift = (seed as usize) % n.max(1);
        let order: Vec<usize> = (0..n).rev().map(|v| (v + shift) % n.max(1)).collect();
        prop_assert_eq!(closure_in_order(&g, &start, &order), state.black);
    }

    #[test]
    fn resolving_sets_are_monotone(g in arb_connected_graph(), picks in proptest::collection::vec(any::<bool>(), 8)) {
        let base: Vec<usize> = (0..g.n()).filter(|&v| picks[v]).collect();
        if base.is_empty() {
            return Ok(());
        }
        if is_resolving(&g, &base).unwrap() {
            for v in 0..g.n() {
                if base.contains(&v) {
                    continue;
                }
                let mut bigger = base.clone();
                bigger.push(v);
                prop_assert!(is_resolving(&g, &bigger).unwrap());
            }
        }
    }

    #[test]
    fn zfs_supersets_still_force(g in arb_connected_graph(), picks in proptest::collection::vec(any::<bool>(), 8)) {
        let base: Vec<usize> = (0..g.n()).filter(|&v| picks[v]).collect();
        if base.is_empty() || !is_zero_forcing(&g, &base) {
            return Ok(());
        }
        for v in 0..g.n() {
            if base.contains(&v) {
                continue;
            }
            let mut bigger = base.clone();
            bigger.push(v);
            prop_assert!(is_zero_forcing(&g, &bigger));
        }
    }

    #[test]
    fn random_trees_are_trees(n in 2usize..=16, seed in any::<u64>()) {
        let t = families::random_tree(n, seed).unwrap();
        prop_assert_eq!(t.n(), n);
        prop_assert_eq!(t.m(), n - 1);
        prop_assert!(t.is_connected());
        prop_assert!(t.is_tree());
        prop_assert_eq!(t, families::random_tree(n, seed).unwrap());
    }
}
