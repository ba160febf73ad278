//! Line-graph construction with the explicit edge-to-vertex
//! correspondence, and the wheel/bouquet labelings that the witness
//! constructors refer to.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::families;
use crate::graph::Graph;

/// A line graph together with its correspondence back to the source:
/// line-vertex `i` is source edge `i` (identity indexing), so forcing
/// and resolving sets transfer between edge-space of the source and
/// vertex-space of the line graph without translation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineGraphResult {
    lg: Graph,
    source_edges: Vec<(usize, usize)>,
}

impl LineGraphResult {
    pub fn graph(&self) -> &Graph {
        &self.lg
    }

    pub fn into_graph(self) -> Graph {
        self.lg
    }

    /// Source edge index of a line-graph vertex.
    pub fn edge_of_vertex(&self, line_vertex: usize) -> usize {
        debug_assert!(line_vertex < self.lg.n());
        line_vertex
    }

    /// Line-graph vertex of a source edge index.
    pub fn vertex_of_edge(&self, edge: usize) -> usize {
        debug_assert!(edge < self.source_edges.len());
        edge
    }

    /// Endpoint pair of the source edge behind a line-graph vertex.
    pub fn source_edge(&self, line_vertex: usize) -> (usize, usize) {
        self.source_edges[line_vertex]
    }
}

/// Constructs `L(g)`: one vertex per edge of `g`, adjacent iff the
/// edges share an endpoint.
pub fn line_graph(g: &Graph) -> Result<LineGraphResult> {
    let m = g.m();
    if m == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    let edges = g.edges();
    let mut lg_edges = Vec::new();
    for i in 0..m {
        let (a, b) = edges[i];
        for (jrel, &(c, d)) in edges[i + 1..].iter().enumerate() {
            if a == c || a == d || b == c || b == d {
                lg_edges.push((i, i + 1 + jrel));
            }
        }
    }
    Ok(LineGraphResult {
        lg: Graph::new(m, &lg_edges)?,
        source_edges: edges.to_vec(),
    })
}

/// Labeling of `L(W_{1,n})`: `spokes[i]` is the line-vertex of the
/// spoke edge at rim position `i` (these form `K_n`); `rims[i]` is the
/// line-vertex of the rim edge `{w_i, w_{i+1}}` (these form `C_n`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WheelLineLabeling {
    pub spokes: Vec<usize>,
    pub rims: Vec<usize>,
}

/// Labeling of `L(B_n)`: `circles[i][j]` is the line-vertex of the
/// `j`-th edge of circle `i`, walked from the cut-vertex around the
/// circle; the first and last entries of each row are the two edges
/// incident to the cut-vertex, and together those `2n` line-vertices
/// induce `K_{2n}`. Each row induces a cycle of length `k_i + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BouquetLineLabeling {
    pub circles: Vec<Vec<usize>>,
}

/// `L(W_{1,n})` with its spoke/rim labeling. Follows directly from the
/// edge order fixed by [`families::wheel`].
pub fn wheel_line_labeling(n: usize) -> Result<(LineGraphResult, WheelLineLabeling)> {
    let (g, _) = families::wheel(n)?;
    let lg = line_graph(&g)?;
    let labeling = WheelLineLabeling {
        spokes: (n..2 * n).collect(),
        rims: (0..n).collect(),
    };
    Ok((lg, labeling))
}

/// `L(B_n)` with its per-circle labeling. Follows from the edge order
/// fixed by [`families::bouquet`].
pub fn bouquet_line_labeling(ks: &[usize]) -> Result<(LineGraphResult, BouquetLineLabeling)> {
    let (g, _) = families::bouquet(ks)?;
    let lg = line_graph(&g)?;
    let mut circles = Vec::with_capacity(ks.len());
    let mut offset = 0;
    for &k in ks {
        circles.push((offset..offset + k + 1).collect());
        offset += k + 1;
    }
    Ok((lg, BouquetLineLabeling { circles }))
}
