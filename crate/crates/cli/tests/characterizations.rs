//! Structure theorems checked by exhaustive enumeration: the Whitney
//! uniqueness of line graphs on small orders, and the three-family
//! characterization of graphs with metric dimension n - 2.

use graphinv::enumerate::labeled_connected_capped;
use graphinv_core::line_graph::line_graph;
use graphinv_core::metric_dim::metric_dimension;
use graphinv_core::{families, Graph};

/// Connected graphs with at least one edge, up to isomorphism.
fn iso_classes(max_n: usize) -> Vec<Graph> {
    let mut classes: Vec<Graph> = Vec::new();
    for n in 2..=max_n {
        for g in labeled_connected_capped(n, max_n).unwrap() {
            if !classes
                .iter()
                .any(|h| h.is_isomorphic(&g).unwrap_or(false))
            {
                classes.push(g);
            }
        }
    }
    classes
}

#[test]
fn whitney_uniqueness_to_order_4() {
    let classes = iso_classes(4);
    assert_eq!(classes.len(), 9);
    let k3 = families::complete(3).unwrap();
    let k13 = families::star(3).unwrap();
    for (i, a) in classes.iter().enumerate() {
        for b in &classes[i + 1..] {
            let la = line_graph(a).unwrap();
            let lb = line_graph(b).unwrap();
            if la.graph().is_isomorphic(lb.graph()).unwrap() {
                // the lone exception
                let exceptional = (a.is_isomorphic(&k3).unwrap()
                    && b.is_isomorphic(&k13).unwrap())
                    || (a.is_isomorphic(&k13).unwrap() && b.is_isomorphic(&k3).unwrap());
                assert!(
                    exceptional,
                    "unexpected line-graph collision: {:?} vs {:?}",
                    a.edges(),
                    b.edges()
                );
            }
        }
    }
}

/// `K_s` joined to an edgeless graph on `t` vertices.
fn complete_join_empty(s: usize, t: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..s {
        for v in u + 1..s {
            edges.push((u, v));
        }
        for v in 0..t {
            edges.push((u, s + v));
        }
    }
    Graph::new(s + t, &edges).unwrap()
}

/// `K_s` joined to the disjoint union of `K_1` and `K_t`.
fn complete_join_vertex_and_complete(s: usize, t: usize) -> Graph {
    let n = s + 1 + t;
    let mut edges = Vec::new();
    for u in 0..s {
        for v in u + 1..s {
            edges.push((u, v));
        }
        // the clique sees the isolated vertex s and all of K_t
        for v in s..n {
            edges.push((u, v));
        }
    }
    for u in s + 1..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn dim_n_minus_2_candidates(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for s in 1..n {
        let t = n - s;
        if s <= t {
            out.push(families::complete_bipartite(s, t).unwrap());
        }
        if t >= 2 {
            out.push(complete_join_empty(s, t));
        }
        if t >= 2 {
            // s >= 1, t' = t - 1 >= 1 with s + 1 + t' = n
            out.push(complete_join_vertex_and_complete(s, t - 1));
        }
    }
    // drop duplicates and the complete graph (dim n - 1, arises from
    // degenerate parameters)
    let kn = families::complete(n).unwrap();
    let mut classes: Vec<Graph> = Vec::new();
    for g in out {
        if g.is_isomorphic(&kn).unwrap() {
            continue;
        }
        if !classes.iter().any(|h| h.is_isomorphic(&g).unwrap()) {
            classes.push(g);
        }
    }
    classes
}

#[test]
fn dim_n_minus_2_characterization() {
    for n in 4..=6 {
        let candidates = dim_n_minus_2_candidates(n);
        assert!(!candidates.is_empty());
        for c in &candidates {
            assert_eq!(
                metric_dimension(c).unwrap().value,
                n - 2,
                "candidate edges {:?}",
                c.edges()
            );
        }
        let mut achievers = 0usize;
        for g in labeled_connected_capped(n, 6).unwrap() {
            if metric_dimension(&g).unwrap().value == n - 2 {
                achievers += 1;
                assert!(
                    candidates.iter().any(|c| c.is_isomorphic(&g).unwrap()),
                    "dim = n-2 outside the three families: edges {:?}",
                    g.edges()
                );
            }
        }
        assert!(achievers > 0, "no graphs of order {n} with dim = n-2");
    }
}
