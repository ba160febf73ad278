//! Vertex and edge zero forcing: closures with replayable traces,
//! exact solvers for the forcing numbers, the path cover number, the
//! structural bounds on forcing numbers of line graphs, and the
//! explicit forcing-set witnesses for wheels and bouquets.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::line_graph::{self, LineGraphResult};

/// Default node budget for the subset search.
pub const DEFAULT_BUDGET: u64 = 50_000_000;
/// Default order cap for the path cover solver.
pub const PATH_COVER_CAP: usize = 14;
/// Order cap for the forcing solvers (bitmask representation).
pub const FORCING_ORDER_CAP: usize = 64;

/// Whether a color state lives on vertices or on edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColorMode {
    Vertex,
    Edge,
}

/// The black set after a closure, as sorted indices (vertex indices,
/// or edge indices in edge mode).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorState {
    pub black: Vec<usize>,
    pub mode: ColorMode,
}

impl ColorState {
    pub fn contains(&self, i: usize) -> bool {
        self.black.binary_search(&i).is_ok()
    }
}

/// The ordered forcing chain that produced a closure: each event is
/// `(forcer, forced)`, applied lowest-index-eligible-forcer first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcingTrace {
    pub initial: Vec<usize>,
    pub events: Vec<(usize, usize)>,
    pub final_black: Vec<usize>,
}

impl ForcingTrace {
    /// Line-oriented text: one `k: forcer -> forced` per event.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (k, (forcer, forced)) in self.events.iter().enumerate() {
            let _ = writeln!(out, "{k}: {forcer} -> {forced}");
        }
        out
    }
}

/// Outcome of an exact forcing-number solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZResult {
    pub value: usize,
    pub witness: Vec<usize>,
    pub trace: ForcingTrace,
    pub nodes_explored: u64,
}

fn closure_on_adjacency<'g>(
    adj: impl Fn(usize) -> &'g [usize],
    n: usize,
    start: &[usize],
) -> ForcingTrace {
    let mut black = vec![false; n];
    let mut initial: Vec<usize> = start.to_vec();
    initial.sort_unstable();
    initial.dedup();
    for &v in &initial {
        black[v] = true;
    }
    let mut events = Vec::new();
    // lowest-index eligible forcer first, rescan after each force
    loop {
        let mut fired = false;
        'scan: for u in 0..n {
            if !black[u] {
                continue;
            }
            let mut white = None;
            for &w in adj(u) {
                if !black[w] {
                    if white.is_some() {
                        continue 'scan;
                    }
                    white = Some(w);
                }
            }
            if let Some(w) = white {
                black[w] = true;
                events.push((u, w));
                fired = true;
                break;
            }
        }
        if !fired {
            break;
        }
    }
    let final_black: Vec<usize> = (0..n).filter(|&v| black[v]).collect();
    ForcingTrace {
        initial,
        events,
        final_black,
    }
}

/// Runs the color-change rule to its fixed point from the black set
/// `start`, returning the final state and the forcing chain.
pub fn forcing_closure(g: &Graph, start: &[usize]) -> (ColorState, ForcingTrace) {
    let trace = closure_on_adjacency(|u| g.neighbors(u), g.n(), start);
    (
        ColorState {
            black: trace.final_black.clone(),
            mode: ColorMode::Vertex,
        },
        trace,
    )
}

/// True iff the closure of `start` covers every vertex.
pub fn is_zero_forcing(g: &Graph, start: &[usize]) -> bool {
    let (state, _) = forcing_closure(g, start);
    state.black.len() == g.n()
}

/// Edge color-change rule: a black edge with exactly one white
/// adjacent edge forces it. `start` holds edge indices.
pub fn edge_forcing_closure(g: &Graph, start: &[usize]) -> (ColorState, ForcingTrace) {
    if g.m() == 0 {
        let trace = ForcingTrace {
            initial: Vec::new(),
            events: Vec::new(),
            final_black: Vec::new(),
        };
        return (
            ColorState {
                black: Vec::new(),
                mode: ColorMode::Edge,
            },
            trace,
        );
    }
    let lg = line_graph::line_graph(g).expect("nonempty edge set");
    let trace = closure_on_adjacency(|u| lg.graph().neighbors(u), lg.graph().n(), start);
    (
        ColorState {
            black: trace.final_black.clone(),
            mode: ColorMode::Edge,
        },
        trace,
    )
}

/// Mask-only closure used by the solvers' inner loops.
fn closure_mask(masks: &[u64], mut black: u64) -> u64 {
    loop {
        let mut changed = false;
        let mut scan = black;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let white = masks[v] & !black;
            if white.count_ones() == 1 {
                black |= white;
                changed = true;
            }
        }
        if !changed {
            return black;
        }
    }
}

struct SubsetSearch<'a> {
    masks: &'a [u64],
    full: u64,
    nodes: u64,
    budget: u64,
}

impl SubsetSearch<'_> {
    /// First k-subset (in lexicographic index order) whose closure is
    /// all-black, or `None` after exhausting all of them.
    fn find(&mut self, k: usize) -> Result<Option<Vec<usize>>> {
        let n = self.masks.len();
        if k > n {
            return Ok(None);
        }
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded {
                    lower: 0,
                    upper: None,
                });
            }
            let black = idx.iter().fold(0u64, |m, &v| m | 1 << v);
            if closure_mask(self.masks, black) == self.full {
                return Ok(Some(idx));
            }
            // next combination
            let mut i = k;
            loop {
                if i == 0 {
                    return Ok(None);
                }
                i -= 1;
                if idx[i] != i + n - k {
                    break;
                }
            }
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
}

/// Exact zero forcing number with the default budget.
pub fn zero_forcing_number(g: &Graph) -> Result<ZResult> {
    zero_forcing_number_with(g, DEFAULT_BUDGET, 0)
}

/// Exact zero forcing number. Searches sizes ascending from the best
/// structural lower bound (minimum degree, clique bound, plus the
/// caller-supplied `extra_lower_bound` for line graphs of traceable
/// sources); minimality is certified by exhaustive failure below the
/// found size, never by the bounds alone.
pub fn zero_forcing_number_with(g: &Graph, budget: u64, extra_lower_bound: usize) -> Result<ZResult> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.n();
    if n == 1 {
        // the lone vertex must start black
        return Ok(ZResult {
            value: 1,
            witness: vec![0],
            trace: forcing_closure(g, &[0]).1,
            nodes_explored: 0,
        });
    }
    if n > FORCING_ORDER_CAP {
        return Err(Error::TooLarge {
            n,
            cap: FORCING_ORDER_CAP,
        });
    }
    let masks = g.neighbor_masks()?;
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };

    let delta = g.degree_profile().min_degree;
    let clique_bound = g.max_clique_size().saturating_sub(1);
    let lb = delta.max(clique_bound).max(extra_lower_bound).max(1);

    let mut search = SubsetSearch {
        masks: &masks,
        full,
        nodes: 0,
        budget,
    };
    for k in lb..=n {
        match search.find(k) {
            Ok(Some(witness)) => {
                if k == lb && k > 1 {
                    // first tried size succeeded; certify minimality
                    let below = search.find(k - 1).map_err(|_| Error::BudgetExceeded {
                        lower: k - 1,
                        upper: Some(k),
                    })?;
                    debug_assert!(below.is_none(), "structural lower bound violated");
                }
                let trace = forcing_closure(g, &witness).1;
                return Ok(ZResult {
                    value: k,
                    witness,
                    trace,
                    nodes_explored: search.nodes,
                });
            }
            Ok(None) => {}
            Err(_) => {
                return Err(Error::BudgetExceeded {
                    lower: k,
                    upper: None,
                })
            }
        }
    }
    unreachable!("the full vertex set is always a forcing set")
}

/// Exact edge zero forcing number: the vertex solver on the line
/// graph, with witness and trace reported as edge indices (line-vertex
/// index equals source edge index).
pub fn edge_zero_forcing_number(g: &Graph) -> Result<ZResult> {
    edge_zero_forcing_number_with(g, DEFAULT_BUDGET)
}

pub fn edge_zero_forcing_number_with(g: &Graph, budget: u64) -> Result<ZResult> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let lg = line_graph::line_graph(g)?;
    // witness and trace indices are already edge indices: line-vertex
    // index equals source edge index
    zero_forcing_number_with(lg.graph(), budget, 0)
}

/// Exact path cover number: minimum number of vertex-disjoint induced
/// paths covering all vertices, by exhaustive branch and bound.
pub fn path_cover_number(g: &Graph) -> Result<usize> {
    path_cover_number_capped(g, PATH_COVER_CAP)
}

pub fn path_cover_number_capped(g: &Graph, cap: usize) -> Result<usize> {
    let n = g.n();
    if n > cap || n > 64 {
        return Err(Error::TooLarge { n, cap: cap.min(64) });
    }
    let masks = g.neighbor_masks()?;
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };

    // all induced paths through v inside `avail`, as vertex masks; the
    // vertex set of an induced path determines the path up to reversal
    fn paths_through(v: usize, avail: u64, masks: &[u64]) -> Vec<u64> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![(1u64 << v, v, v)];
        seen.insert(1u64 << v);
        while let Some((mask, front, back)) = stack.pop() {
            for (endpoint, other_end) in [(back, front), (front, back)] {
                let mut ext = masks[endpoint] & avail & !mask;
                while ext != 0 {
                    let w = ext.trailing_zeros() as usize;
                    ext &= ext - 1;
                    // induced: w may touch only the endpoint it extends
                    if masks[w] & mask == 1 << endpoint {
                        let next = mask | 1 << w;
                        if seen.insert(next) {
                            if endpoint == back {
                                stack.push((next, other_end, w));
                            } else {
                                stack.push((next, w, other_end));
                            }
                        }
                    }
                }
            }
        }
        let mut out: Vec<u64> = seen.into_iter().collect();
        // longer paths first: a good first cover tightens the bound
        out.sort_by_key(|m| core::cmp::Reverse(m.count_ones()));
        out
    }

    fn cover(covered: u64, count: usize, best: &mut usize, full: u64, masks: &[u64]) {
        if covered == full {
            *best = (*best).min(count);
            return;
        }
        if count + 1 >= *best {
            return;
        }
        let v = (!covered & full).trailing_zeros() as usize;
        for pmask in paths_through(v, !covered & full, masks) {
            cover(covered | pmask, count + 1, best, full, masks);
        }
    }

    let mut best = n;
    cover(0, 0, &mut best, full, &masks);
    Ok(best)
}

/// The structural bracket `(max_degree - 1, m - (min_degree - 1))` for
/// the forcing number of the line graph of `g`.
pub fn z_line_bounds(g: &Graph) -> Result<(usize, usize)> {
    if g.n() < 2 {
        return Err(Error::BadParameter("bounds require order >= 2"));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let profile = g.degree_profile();
    let lower = profile.max_degree - 1;
    let upper = g.m() - (profile.min_degree - 1);
    Ok((lower, upper))
}

/// An edge zero forcing set of size `m - (min_degree - 1)`: all edges
/// except `min_degree - 1` of the edges at one minimum-degree vertex.
/// For `min_degree <= 2` the bound is trivial and the full edge set is
/// returned.
pub fn edge_zfs_upper_witness(g: &Graph) -> Vec<usize> {
    let profile = g.degree_profile();
    let all: Vec<usize> = (0..g.m()).collect();
    if profile.min_degree <= 2 {
        return all;
    }
    let v0 = (0..g.n())
        .find(|&v| g.degree(v) == profile.min_degree)
        .expect("minimum degree vertex exists");
    // keep the edge to the first neighbor, drop the others
    let dropped: Vec<usize> = g.neighbors(v0)[1..]
        .iter()
        .map(|&w| g.edge_index(v0, w).expect("incident edge exists"))
        .collect();
    all.into_iter().filter(|e| !dropped.contains(e)).collect()
}

/// `{hub, w_1, w_n}`: a minimum zero forcing set of the wheel.
pub fn wheel_zfs_witness(n: usize) -> Result<Vec<usize>> {
    if n < 3 {
        return Err(Error::BadParameter("wheel requires n >= 3"));
    }
    // rim vertices are 0..n, hub is n; w_1 = rim[0], w_n = rim[n-1]
    Ok(vec![0, n - 1, n])
}

/// `{l_0, l_1} ∪ {u_1..u_{n-1}}`: a minimum zero forcing set of
/// `L(W_{1,n})`, size `n + 1`.
pub fn wheel_line_zfs_witness(n: usize) -> Result<Vec<usize>> {
    if n < 3 {
        return Err(Error::BadParameter("wheel requires n >= 3"));
    }
    let mut set = vec![0, 1];
    set.extend(n + 1..2 * n);
    Ok(set)
}

/// First two edges of every circle but the last, plus the first edge
/// of the last circle: a minimum zero forcing set of `L(B_n)`, size
/// `2n - 1`.
pub fn bouquet_line_zfs_witness(ks: &[usize]) -> Result<Vec<usize>> {
    let (_, lab) = line_graph::bouquet_line_labeling(ks)?;
    let n = ks.len();
    let mut set = Vec::with_capacity(2 * n - 1);
    for (i, circle) in lab.circles.iter().enumerate() {
        set.push(circle[0]);
        if i + 1 < n {
            set.push(circle[1]);
        }
    }
    set.sort_unstable();
    Ok(set)
}

fn lmod(i: isize, n: usize) -> usize {
    i.rem_euclid(n as isize) as usize
}

/// A zero forcing set of size `n` for `L(W_{1,n})` minus the edge
/// `{a, b}`, built from the per-case constructions (spoke-rim,
/// rim-rim, adjacent and non-adjacent spoke-spoke), rotated and
/// reflected to the deleted edge's position. Vertex labels follow
/// [`line_graph::wheel_line_labeling`]: rim `l_i = i`, spoke
/// `u_i = n + i`.
pub fn wheel_line_edge_deletion_witness(n: usize, a: usize, b: usize) -> Result<Vec<usize>> {
    if n < 3 {
        return Err(Error::BadParameter("wheel requires n >= 3"));
    }
    if a >= 2 * n || b >= 2 * n || a == b {
        return Err(Error::BadParameter("not a vertex pair of L(W_{1,n})"));
    }
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    let l = |i: isize| lmod(i, n);
    let u = |i: isize| n + lmod(i, n);
    // base case: deleting l_r u_r
    let spoke_rim_case = |r: isize| -> Vec<usize> {
        let mut s = vec![l(r), l(r - 1)];
        s.extend((1..=n as isize - 2).map(|j| u(r + j)));
        s
    };
    // the reflection w_t -> w_{-t} of the wheel induces l_t -> l_{-1-t},
    // u_t -> u_{-t} on the line graph
    let reflect = |x: usize| -> usize {
        if x < n {
            l(-1 - x as isize)
        } else {
            u(-((x - n) as isize))
        }
    };

    let mut set = if b < n {
        // rim-rim: l_r l_{r+1}
        let r = if b - a == 1 { a } else { b } as isize;
        let mut s = vec![l(r + 1)];
        s.extend((1..n as isize).map(|j| u(r + j)));
        s
    } else if a < n {
        // spoke-rim: l_a u_i shares w_a (i = a) or w_{a+1} (i = a + 1)
        let i = b - n;
        if i == a {
            spoke_rim_case(a as isize)
        } else if i == (a + 1) % n {
            spoke_rim_case(-1 - a as isize)
                .into_iter()
                .map(reflect)
                .collect()
        } else {
            return Err(Error::BadParameter("not an edge of L(W_{1,n})"));
        }
    } else {
        // spoke-spoke: u_i u_j
        let (i, j) = (a - n, b - n);
        let gap = j - i;
        if gap == 1 || gap == n - 1 {
            let r = if gap == 1 { i } else { j } as isize;
            let mut s = vec![l(r), l(r + 1)];
            s.extend((1..=n as isize - 2).map(|t| u(r + t)));
            s
        } else {
            let mut s = vec![l(i as isize), l(i as isize - 1)];
            s.extend((0..n).map(|t| n + t).filter(|&x| x != u(i as isize + 1) && x != b));
            s
        }
    };
    set.sort_unstable();
    set.dedup();
    debug_assert_eq!(set.len(), n);
    Ok(set)
}

/// Checks that deleting any single edge of `L(W_{1,n})` drops its
/// forcing number to exactly `n`: the per-case witness certifies the
/// upper bound, and an exhaustive pass over all `(n-1)`-subsets
/// confirms the lower bound.
pub fn wheel_line_edge_criticality(n: usize) -> Result<bool> {
    if !(3..=8).contains(&n) {
        return Err(Error::TooLarge { n, cap: 8 });
    }
    let (lg, _) = line_graph::wheel_line_labeling(n)?;
    let g = lg.graph();
    for idx in 0..g.m() {
        let (a, b) = g.edges()[idx];
        let h = g.delete_edge(idx);
        let witness = wheel_line_edge_deletion_witness(n, a, b)?;
        if witness.len() != n || !is_zero_forcing(&h, &witness) {
            return Ok(false);
        }
        let masks = h.neighbor_masks()?;
        let full = (1u64 << h.n()) - 1;
        let mut search = SubsetSearch {
            masks: &masks,
            full,
            nodes: 0,
            budget: u64::MAX,
        };
        if search.find(n - 1)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks that removing any single vertex or edge (skipping removals
/// that disconnect) changes the forcing number by at most one.
pub fn removal_stability_check(g: &Graph) -> Result<bool> {
    let z = zero_forcing_number(g)?.value;
    for v in 0..g.n() {
        if g.n() == 1 {
            break;
        }
        let h = g.delete_vertex(v)?;
        if !h.is_connected() {
            continue;
        }
        let zv = zero_forcing_number(&h)?.value;
        if zv + 1 < z || zv > z + 1 {
            return Ok(false);
        }
    }
    for e in 0..g.m() {
        let h = g.delete_edge(e);
        if !h.is_connected() {
            continue;
        }
        let ze = zero_forcing_number(&h)?.value;
        if ze + 1 < z || ze > z + 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Convenience: the forcing number of the line graph of `g`, seeding
/// the solver with the derived bound `m - (n - 2)` when `g` has a
/// Hamiltonian path.
pub fn line_graph_zero_forcing_number(g: &Graph) -> Result<ZResult> {
    line_graph_zero_forcing_number_with(g, DEFAULT_BUDGET)
}

pub fn line_graph_zero_forcing_number_with(g: &Graph, budget: u64) -> Result<ZResult> {
    let lg = line_graph::line_graph(g)?;
    let extra = match g.has_hamiltonian_path() {
        Ok(true) if g.n() >= 2 => g.m().saturating_sub(g.n() - 2),
        _ => 0,
    };
    zero_forcing_number_with(lg.graph(), budget, extra)
}

/// The line graph paired with its forcing solve, for callers that need
/// both.
pub fn line_graph_with_z(g: &Graph) -> Result<(LineGraphResult, ZResult)> {
    let lg = line_graph::line_graph(g)?;
    let z = line_graph_zero_forcing_number(g)?;
    Ok((lg, z))
}
