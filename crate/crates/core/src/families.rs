//! Generators for the named graph families, with the labeling
//! conventions of wheels and bouquets exposed as index maps so witness
//! constructors can refer to hub/rim/circle positions directly.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Index map for a wheel `W_{1,n}`: the hub vertex and the rim cycle
/// in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WheelLabeling {
    pub hub: usize,
    pub rim: Vec<usize>,
}

/// Index map for a bouquet of circles: the cut-vertex and, per circle,
/// its interior vertices in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BouquetLabeling {
    pub cut_vertex: usize,
    pub circles: Vec<Vec<usize>>,
}

/// Path `P_n` on vertices `0..n` in order.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::BadParameter("path requires n >= 1"));
    }
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::new(n, &edges)
}

/// Cycle `C_n`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParameter("cycle requires n >= 3"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::BadParameter("complete graph requires n >= 1"));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges)
}

/// Complete bipartite graph `K_{s,t}`; parts are `0..s` and `s..s+t`.
pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph> {
    if s < 1 || t < 1 {
        return Err(Error::BadParameter("complete bipartite requires s,t >= 1"));
    }
    let mut edges = Vec::new();
    for u in 0..s {
        for v in 0..t {
            edges.push((u, s + v));
        }
    }
    Graph::new(s + t, &edges)
}

/// Star `K_{1,k}` with center 0.
pub fn star(k: usize) -> Result<Graph> {
    complete_bipartite(1, k)
}

/// Wheel `W_{1,n}` = `C_n` joined with one hub. Rim vertices are
/// `0..n`, the hub is `n`. Edge order fixes the line-graph labeling:
/// rim edge `{i, i+1 mod n}` has index `i`, spoke `{hub, i}` has
/// index `n + i`.
pub fn wheel(n: usize) -> Result<(Graph, WheelLabeling)> {
    if n < 3 {
        return Err(Error::BadParameter("wheel requires rim length n >= 3"));
    }
    let mut edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges.extend((0..n).map(|i| (n, i)));
    let g = Graph::new(n + 1, &edges)?;
    let labeling = WheelLabeling {
        hub: n,
        rim: (0..n).collect(),
    };
    Ok((g, labeling))
}

fn check_bouquet_params(ks: &[usize]) -> Result<()> {
    if ks.len() < 2 {
        return Err(Error::BadParameter("bouquet requires at least 2 circles"));
    }
    if ks.iter().any(|&k| k < 2) {
        return Err(Error::BadParameter("bouquet requires every k_i >= 2"));
    }
    if ks.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::BadParameter("bouquet requires nondecreasing k_i"));
    }
    Ok(())
}

/// Bouquet of circles sharing the cut-vertex 0. Circle `i` has `ks[i]`
/// interior vertices, so its cycle length is `ks[i] + 1`. Edges of
/// circle `i` appear consecutively, walked from the cut-vertex around
/// the circle and back; that order fixes the line-graph labeling.
pub fn bouquet(ks: &[usize]) -> Result<(Graph, BouquetLabeling)> {
    check_bouquet_params(ks)?;
    let mut edges = Vec::new();
    let mut circles = Vec::with_capacity(ks.len());
    let mut offset = 1;
    for &k in ks {
        let interior: Vec<usize> = (offset..offset + k).collect();
        edges.push((0, interior[0]));
        for j in 1..k {
            edges.push((interior[j - 1], interior[j]));
        }
        edges.push((interior[k - 1], 0));
        circles.push(interior);
        offset += k;
    }
    let n = 1 + ks.iter().sum::<usize>();
    let g = Graph::new(n, &edges)?;
    Ok((
        g,
        BouquetLabeling {
            cut_vertex: 0,
            circles,
        },
    ))
}

/// Number of even cycles in a bouquet: circles where `k_i + 1` is even.
pub fn even_cycle_count(ks: &[usize]) -> Result<usize> {
    check_bouquet_params(ks)?;
    Ok(ks.iter().filter(|&&k| (k + 1) % 2 == 0).count())
}

/// Uniformly random labeled tree via Prüfer decoding; deterministic
/// per seed.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::BadParameter("random tree requires n >= 2"));
    }
    if n == 2 {
        return Graph::new(2, &[(0, 1)]);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let prufer: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();

    let mut degree = vec![1usize; n];
    for &v in &prufer {
        degree[v] += 1;
    }
    let mut used = vec![false; n];
    let mut edges = Vec::with_capacity(n - 1);
    // repeatedly attach the smallest remaining leaf to the next code entry
    for &v in &prufer {
        let leaf = (0..n)
            .find(|&u| !used[u] && degree[u] == 1)
            .expect("prufer decoding always has a leaf");
        edges.push((leaf, v));
        used[leaf] = true;
        degree[v] -= 1;
    }
    let remaining: Vec<usize> = (0..n).filter(|&v| !used[v]).collect();
    edges.push((remaining[0], remaining[1]));
    Graph::new(n, &edges)
}

/// Identifies `k` copies of a rooted tree branch at a single central
/// vertex (vertex 0 of the output).
pub fn branch_tree(k: usize, branch: &Graph, root: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::BadParameter("branch count must be >= 1"));
    }
    if root >= branch.n() {
        return Err(Error::VertexOutOfRange {
            vertex: root,
            n: branch.n(),
        });
    }
    if !branch.is_tree() {
        return Err(Error::NotATree);
    }
    let per_copy = branch.n() - 1;
    let n = 1 + k * per_copy;
    let mut edges = Vec::with_capacity(k * branch.m());
    for copy in 0..k {
        let offset = 1 + copy * per_copy;
        // non-root vertices of the branch map to offset..offset+per_copy,
        // skipping over the root
        let map = |x: usize| {
            if x == root {
                0
            } else if x < root {
                offset + x
            } else {
                offset + x - 1
            }
        };
        for &(a, b) in branch.edges() {
            edges.push((map(a), map(b)));
        }
    }
    Graph::new(n, &edges)
}
