//! Immutable simple undirected graphs with stable vertex and edge
//! indices, plus the structural queries the solvers consume: BFS
//! distances, degree/end-vertex statistics, Hamiltonian-path and
//! clique tests, and a small-graph isomorphism check.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Default size cap for the Hamiltonian path bitmask DP.
pub const HAMILTONIAN_CAP: usize = 24;
/// Default size cap for the isomorphism backtracking search.
pub const ISOMORPHISM_CAP: usize = 10;

/// A finite simple undirected graph. Vertices are `0..n`; edge `i` is
/// always the `i`-th pair of the construction list, so edge indices
/// are stable and line-graph vertices can reuse them directly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops,
    /// duplicate edges, and out-of-range endpoints. Each pair is
    /// stored with its smaller endpoint first; list order is kept.
    pub fn new(n: usize, edge_pairs: &[(usize, usize)]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::BadParameter("graph order must be at least 1"));
        }
        let mut edges = Vec::with_capacity(edge_pairs.len());
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edge_pairs {
            if a >= n {
                return Err(Error::VertexOutOfRange { vertex: a, n });
            }
            if b >= n {
                return Err(Error::VertexOutOfRange { vertex: b, n });
            }
            if a == b {
                return Err(Error::SelfLoop { vertex: a });
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if adj[u].contains(&v) {
                return Err(Error::DuplicateEdge { u, v });
            }
            adj[u].push(v);
            adj[v].push(u);
            edges.push((u, v));
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edge list in construction order, each pair as `(min, max)`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of the edge `{u,v}`, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.iter().position(|&e| e == key)
    }

    /// Per-vertex neighbor bitmasks; requires `n <= 64`.
    pub fn neighbor_masks(&self) -> Result<Vec<u64>> {
        if self.n > 64 {
            return Err(Error::TooLarge { n: self.n, cap: 64 });
        }
        let mut masks = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
        }
        Ok(masks)
    }

    /// The graph with edge `idx` removed (edge indices above `idx`
    /// shift down by one).
    pub fn delete_edge(&self, idx: usize) -> Graph {
        let mut edges = self.edges.clone();
        edges.remove(idx);
        Graph::new(self.n, &edges).expect("deletion preserves validity")
    }

    /// The graph with vertex `v` removed; vertices above `v` shift
    /// down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        if self.n == 1 {
            return Err(Error::BadParameter("cannot delete the only vertex"));
        }
        let relabel = |x: usize| if x > v { x - 1 } else { x };
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (relabel(a), relabel(b)))
            .collect();
        Graph::new(self.n - 1, &edges)
    }

    /// BFS hop distances between all pairs.
    pub fn distance_matrix(&self) -> DistanceMatrix {
        let mut dist = vec![vec![DistanceMatrix::UNREACHABLE; self.n]; self.n];
        let mut queue = VecDeque::new();
        for (src, row) in dist.iter_mut().enumerate() {
            row[src] = 0;
            queue.clear();
            queue.push_back(src);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for &w in &self.adj[u] {
                    if row[w] == DistanceMatrix::UNREACHABLE {
                        row[w] = du + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        DistanceMatrix { n: self.n, dist }
    }

    /// True iff a BFS from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.m() == self.n - 1 && self.is_connected()
    }

    /// Degrees, end-vertices, and exterior major vertices. A major
    /// vertex has degree at least 3; an end-vertex is terminal to the
    /// major vertex strictly nearest to it; a major vertex with at
    /// least one terminal vertex is exterior major.
    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let min_degree = degrees.iter().copied().min().unwrap_or(0);
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        let end_vertices: Vec<usize> = (0..self.n).filter(|&v| degrees[v] == 1).collect();
        let majors: Vec<usize> = (0..self.n).filter(|&v| degrees[v] >= 3).collect();

        let mut terminal_degree = vec![0usize; self.n];
        if !majors.is_empty() && !end_vertices.is_empty() {
            let dm = self.distance_matrix();
            for &u in &end_vertices {
                // u is terminal to v iff d(u,v) < d(u,w) for every other major w
                let mut nearest: Option<usize> = None;
                let mut unique = true;
                for &v in &majors {
                    match nearest {
                        None => nearest = Some(v),
                        Some(best) => {
                            if dm.dist[u][v] < dm.dist[u][best] {
                                nearest = Some(v);
                                unique = true;
                            } else if dm.dist[u][v] == dm.dist[u][best] {
                                unique = false;
                            }
                        }
                    }
                }
                if let Some(v) = nearest {
                    if unique && dm.dist[u][v] != DistanceMatrix::UNREACHABLE {
                        terminal_degree[v] += 1;
                    }
                }
            }
        }
        let exterior_major_vertices: Vec<usize> = majors
            .iter()
            .copied()
            .filter(|&v| terminal_degree[v] > 0)
            .collect();

        DegreeProfile {
            degrees,
            min_degree,
            max_degree,
            end_vertices,
            exterior_major_vertices,
            terminal_degree,
        }
    }

    /// True iff the graph has a spanning simple path. Bitmask DP over
    /// vertex subsets; errors with `TooLarge` above the cap.
    pub fn has_hamiltonian_path(&self) -> Result<bool> {
        self.has_hamiltonian_path_capped(HAMILTONIAN_CAP)
    }

    pub fn has_hamiltonian_path_capped(&self, cap: usize) -> Result<bool> {
        if self.n > cap || self.n > 63 {
            return Err(Error::TooLarge {
                n: self.n,
                cap: cap.min(63),
            });
        }
        if self.n == 1 {
            return Ok(true);
        }
        if !self.is_connected() {
            return Ok(false);
        }
        let masks = self.neighbor_masks()?;
        let full: u64 = (1 << self.n) - 1;
        // ends[mask] = endpoints v such that some simple path covers
        // exactly `mask` and ends at v
        let mut ends = vec![0u64; 1 << self.n];
        for v in 0..self.n {
            ends[1 << v] = 1 << v;
        }
        for mask in 1..=full {
            let e = ends[mask as usize];
            if e == 0 {
                continue;
            }
            if mask == full {
                return Ok(true);
            }
            let mut rest = e;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let mut ext = masks[v] & !mask;
                while ext != 0 {
                    let w = ext.trailing_zeros() as usize;
                    ext &= ext - 1;
                    ends[(mask | (1 << w)) as usize] |= 1 << w;
                }
            }
        }
        Ok(false)
    }

    /// True iff the graph contains a clique on `m` vertices.
    pub fn max_clique_at_least(&self, m: usize) -> bool {
        if m <= 1 {
            return m == 0 || self.n >= 1;
        }
        if m > self.n {
            return false;
        }
        // candidates ordered by index; extend with higher-indexed
        // common neighbors only
        fn extend(g: &Graph, size: usize, goal: usize, cand: &[usize]) -> bool {
            if size >= goal {
                return true;
            }
            if size + cand.len() < goal {
                return false;
            }
            for (i, &v) in cand.iter().enumerate() {
                let next: Vec<usize> = cand[i + 1..]
                    .iter()
                    .copied()
                    .filter(|&w| g.has_edge(v, w))
                    .collect();
                if extend(g, size + 1, goal, &next) {
                    return true;
                }
            }
            false
        }
        let all: Vec<usize> = (0..self.n).collect();
        extend(self, 0, m, &all)
    }

    /// Size of a maximum clique.
    pub fn max_clique_size(&self) -> usize {
        let mut best = if self.n == 0 { 0 } else { 1 };
        while best < self.n && self.max_clique_at_least(best + 1) {
            best += 1;
        }
        best
    }

    /// Degree-refined backtracking isomorphism test for small graphs.
    pub fn is_isomorphic(&self, other: &Graph) -> Result<bool> {
        self.is_isomorphic_capped(other, ISOMORPHISM_CAP)
    }

    pub fn is_isomorphic_capped(&self, other: &Graph, cap: usize) -> Result<bool> {
        if self.n > cap || other.n > cap {
            return Err(Error::TooLarge {
                n: self.n.max(other.n),
                cap,
            });
        }
        if self.n != other.n || self.m() != other.m() {
            return Ok(false);
        }
        let mut dg: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut dh: Vec<usize> = (0..other.n).map(|v| other.degree(v)).collect();
        dg.sort_unstable();
        dh.sort_unstable();
        if dg != dh {
            return Ok(false);
        }

        // map vertices of self in decreasing-degree order
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (core::cmp::Reverse(self.degree(v)), v));

        fn assign(
            g: &Graph,
            h: &Graph,
            order: &[usize],
            depth: usize,
            map: &mut [usize],
            used: &mut [bool],
        ) -> bool {
            if depth == order.len() {
                return true;
            }
            let v = order[depth];
            for w in 0..h.n() {
                if used[w] || g.degree(v) != h.degree(w) {
                    continue;
                }
                let consistent = order[..depth].iter().all(|&p| {
                    g.has_edge(v, p) == h.has_edge(w, map[p])
                });
                if !consistent {
                    continue;
                }
                map[v] = w;
                used[w] = true;
                if assign(g, h, order, depth + 1, map, used) {
                    return true;
                }
                used[w] = false;
            }
            false
        }

        let mut map = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        Ok(assign(self, other, &order, 0, &mut map, &mut used))
    }
}

/// All-pairs hop distances; `UNREACHABLE` marks cross-component pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<Vec<u32>>,
}

impl DistanceMatrix {
    pub const UNREACHABLE: u32 = u32::MAX;

    pub fn n(&self) -> usize {
        self.n
    }

    /// Raw entry; `UNREACHABLE` across components.
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u][v]
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        let d = self.dist[u][v];
        (d != Self::UNREACHABLE).then_some(d as usize)
    }

    /// Largest finite entry; `None` for a disconnected graph.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0u32;
        for row in &self.dist {
            for &d in row {
                if d == Self::UNREACHABLE {
                    return None;
                }
                best = best.max(d);
            }
        }
        Some(best as usize)
    }
}

/// Per-vertex degrees plus the end-vertex and exterior-major counts
/// used by the tree formulas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
    pub end_vertices: Vec<usize>,
    pub exterior_major_vertices: Vec<usize>,
    pub terminal_degree: Vec<usize>,
}

impl DegreeProfile {
    /// Number of end-vertices, usually written sigma.
    pub fn end_vertex_count(&self) -> usize {
        self.end_vertices.len()
    }

    /// Number of exterior major vertices, usually written ex.
    pub fn exterior_major_count(&self) -> usize {
        self.exterior_major_vertices.len()
    }
}
