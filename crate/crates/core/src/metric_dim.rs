//! Metric codes, resolving-set verification, an exact metric dimension
//! solver, the known dimension bounds and closed forms, and the
//! explicit resolving-set witnesses for line graphs of wheels and
//! bouquets.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::line_graph;

/// Default node budget for the subset search.
pub const DEFAULT_BUDGET: u64 = 50_000_000;
/// Default order cap for the exact solver.
pub const DIM_ORDER_CAP: usize = 24;

/// Metric codes of every vertex with respect to an ordered landmark
/// set. The landmark set resolves the graph iff all rows differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeTable {
    pub landmarks: Vec<usize>,
    pub codes: Vec<Vec<u32>>,
}

impl CodeTable {
    /// True iff all code rows are pairwise distinct.
    pub fn is_resolving(&self) -> bool {
        let mut rows = self.codes.clone();
        rows.sort_unstable();
        rows.windows(2).all(|w| w[0] != w[1])
    }
}

/// Outcome of the exact solver: the dimension, one minimum resolving
/// set, and the number of search nodes visited. Minimality is
/// certified by an exhaustive failure pass at `value - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimResult {
    pub value: usize,
    pub witness: Vec<usize>,
    pub nodes_explored: u64,
}

fn check_landmarks(g: &Graph, landmarks: &[usize]) -> Result<()> {
    if landmarks.is_empty() {
        return Err(Error::BadLandmarks);
    }
    for (i, &w) in landmarks.iter().enumerate() {
        if w >= g.n() || landmarks[i + 1..].contains(&w) {
            return Err(Error::BadLandmarks);
        }
    }
    Ok(())
}

/// Metric codes of all vertices with respect to `landmarks`.
pub fn code_table(g: &Graph, landmarks: &[usize]) -> Result<CodeTable> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    check_landmarks(g, landmarks)?;
    let dm = g.distance_matrix();
    let codes = (0..g.n())
        .map(|v| landmarks.iter().map(|&w| dm.get(v, w)).collect())
        .collect();
    Ok(CodeTable {
        landmarks: landmarks.to_vec(),
        codes,
    })
}

/// True iff `landmarks` resolves `g`.
pub fn is_resolving(g: &Graph, landmarks: &[usize]) -> Result<bool> {
    Ok(code_table(g, landmarks)?.is_resolving())
}

/// The least positive `k` with `k + d^k >= n`, the classical lower
/// bound for the dimension of a graph of order `n` and diameter `d`.
pub fn lower_bound_f(n: usize, d: usize) -> usize {
    let (n, d) = (n as u128, d.max(1) as u128);
    let mut k = 1u128;
    loop {
        let pow = d.checked_pow(k as u32).unwrap_or(u128::MAX);
        if k.saturating_add(pow) >= n {
            return k as usize;
        }
        k += 1;
    }
}

/// Evaluates `n <= (floor(2d/3)+1)^k + k * sum_{i=1}^{ceil(d/3)}
/// (2i-1)^(k-1)` in exact integer arithmetic (order `n`, diameter
/// `d >= 2`, dimension `k >= 1`).
pub fn hernando_bound_holds(n: usize, d: usize, k: usize) -> bool {
    let base = (2 * d / 3 + 1) as u128;
    let lead = base.checked_pow(k as u32).unwrap_or(u128::MAX);
    let mut sum: u128 = 0;
    for i in 1..=d.div_ceil(3) {
        let term = ((2 * i - 1) as u128)
            .checked_pow((k - 1) as u32)
            .unwrap_or(u128::MAX);
        sum = sum.saturating_add(term);
    }
    let rhs = lead.saturating_add((k as u128).saturating_mul(sum));
    (n as u128) <= rhs
}

/// Checks `f(n,d) <= dim <= n - d` for a connected graph of order at
/// least 2, and when `line_source` is given with order at least 5,
/// additionally `ceil(log2 max_degree) <= dim <= n_source - 2`.
pub fn dim_bounds_check(g: &Graph, dim: usize, line_source: Option<&Graph>) -> bool {
    let n = g.n();
    if n >= 2 {
        let d = match g.distance_matrix().diameter() {
            Some(d) => d,
            None => return false,
        };
        if dim < lower_bound_f(n, d) || dim > n - d {
            return false;
        }
    }
    if let Some(src) = line_source {
        if src.n() >= 5 {
            let delta = src.degree_profile().max_degree;
            if dim < ceil_log2(delta) || dim > src.n() - 2 {
                return false;
            }
        }
    }
    true
}

fn ceil_log2(x: usize) -> usize {
    if x <= 1 {
        0
    } else {
        (usize::BITS - (x - 1).leading_zeros()) as usize
    }
}

/// Families with a known closed form for the metric dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DimFamily {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { s: usize, t: usize },
    Wheel { n: usize },
    Bouquet { ks: Vec<usize> },
    /// A tree that is not a path, by its end-vertex and exterior-major
    /// counts.
    Tree { sigma: usize, ex: usize },
    LineTree { sigma: usize, ex: usize },
    LineComplete { n: usize },
    LineBipartite { s: usize, t: usize },
    LineWheel { n: usize },
    LineBouquet { n: usize },
}

/// Closed-form metric dimension of a named family.
pub fn dim_formula(family: &DimFamily) -> Result<usize> {
    match family {
        DimFamily::Path { n } => match n {
            0 => Err(Error::BadParameter("path requires n >= 1")),
            1 => Ok(0),
            _ => Ok(1),
        },
        DimFamily::Cycle { n } => {
            if *n < 3 {
                return Err(Error::BadParameter("cycle requires n >= 3"));
            }
            Ok(2)
        }
        DimFamily::Complete { n } => match n {
            0 => Err(Error::BadParameter("complete graph requires n >= 1")),
            _ => Ok(n.saturating_sub(1)),
        },
        DimFamily::CompleteBipartite { s, t } => {
            if *s < 1 || *t < 1 || s + t < 3 {
                return Err(Error::BadParameter("requires s,t >= 1 and s+t >= 3"));
            }
            Ok(s + t - 2)
        }
        DimFamily::Wheel { n } => {
            if *n < 3 {
                return Err(Error::BadParameter("wheel requires n >= 3"));
            }
            if *n == 3 || *n == 6 {
                Ok(3)
            } else {
                Ok((2 * n + 2) / 5)
            }
        }
        DimFamily::Bouquet { ks } => {
            let x = crate::families::even_cycle_count(ks)?;
            let n = ks.len();
            Ok(if x == 0 { n } else { n + x - 1 })
        }
        DimFamily::Tree { sigma, ex } | DimFamily::LineTree { sigma, ex } => {
            if *ex < 1 || sigma < ex {
                return Err(Error::BadParameter("tree formula requires 1 <= ex <= sigma"));
            }
            Ok(sigma - ex)
        }
        DimFamily::LineComplete { n } => {
            if *n < 6 {
                return Err(Error::BadParameter("line of complete requires n >= 6"));
            }
            Ok((2 * n).div_ceil(3))
        }
        DimFamily::LineBipartite { s, t } => {
            if *s < 2 || t < s {
                return Err(Error::BadParameter("line of bipartite requires 2 <= s <= t"));
            }
            if *t < 2 * s {
                Ok(2 * (s + t - 1) / 3)
            } else {
                Ok(t - 1)
            }
        }
        DimFamily::LineWheel { n } => match n {
            0..=2 => Err(Error::BadParameter("wheel requires n >= 3")),
            3 | 4 => Ok(3),
            5 => Ok(4),
            _ => Ok(n - n.div_ceil(3)),
        },
        DimFamily::LineBouquet { n } => {
            if *n < 2 {
                return Err(Error::BadParameter("bouquet requires n >= 2"));
            }
            Ok(2 * n - 1)
        }
    }
}

/// The mod-3 rim construction: a minimum resolving set for
/// `L(W_{1,n})`, `n >= 6`, of size `n - ceil(n/3)`, given as
/// line-vertex indices of [`line_graph::wheel_line_labeling`].
pub fn wheel_line_resolving_witness(n: usize) -> Result<Vec<usize>> {
    if n < 6 {
        return Err(Error::BadParameter("witness construction requires n >= 6"));
    }
    // rim line-vertex l_i has index i
    let set: Vec<usize> = match n % 3 {
        0 | 1 => (0..n).filter(|i| i % 3 == 1 || i % 3 == 2).collect(),
        _ => {
            let k = (n - 2) / 3;
            let mut s: Vec<usize> = (0..3 * k).filter(|i| i % 3 == 1 || i % 3 == 2).collect();
            s.push(3 * k);
            s
        }
    };
    debug_assert_eq!(set.len(), n - n.div_ceil(3));
    Ok(set)
}

/// A minimum resolving set for `L(B_n)` of size `2n - 1`: the first
/// cut-vertex edge plus the opposite-side edge of every circle but the
/// last, and the opposite-side edge of the last circle. Indices follow
/// [`line_graph::bouquet_line_labeling`].
pub fn bouquet_line_resolving_witness(ks: &[usize]) -> Result<Vec<usize>> {
    let (_, lab) = line_graph::bouquet_line_labeling(ks)?;
    let n = ks.len();
    let mut set = Vec::with_capacity(2 * n - 1);
    for (i, (&k, circle)) in ks.iter().zip(&lab.circles).enumerate() {
        // middle edge of the k + 1 edges, off-center for even cycles
        let mid = (k + 2) / 2;
        if i + 1 < n {
            set.push(circle[0]);
        }
        set.push(circle[mid]);
    }
    set.sort_unstable();
    Ok(set)
}

const BITS: usize = 64;

#[derive(Clone, PartialEq, Eq)]
struct PairSet {
    blocks: Vec<u64>,
}

impl PairSet {
    fn empty(len: usize) -> PairSet {
        PairSet {
            blocks: vec![0; len.div_ceil(BITS)],
        }
    }

    fn set(&mut self, i: usize) {
        self.blocks[i / BITS] |= 1 << (i % BITS);
    }

    fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    fn count(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    fn subtract(&self, other: &PairSet) -> PairSet {
        PairSet {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    fn union_with(&mut self, other: &PairSet) {
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    fn is_subset_of(&self, other: &PairSet) -> bool {
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & !b == 0)
    }
}

struct DimSearch<'a> {
    candidates: Vec<usize>,
    coverage: &'a [PairSet],
    suffix_union: Vec<PairSet>,
    nodes: u64,
    budget: u64,
}

impl DimSearch<'_> {
    /// Finds a resolving set of size exactly `k`, or proves none
    /// exists. Candidates are tried in fixed coverage-descending
    /// order; a branch is cut when the suffix of remaining candidates
    /// cannot cover the still-unresolved pairs.
    fn find(&mut self, k: usize, uncovered: &PairSet) -> Result<Option<Vec<usize>>> {
        let mut chosen = Vec::with_capacity(k);
        self.dfs(0, k, uncovered, &mut chosen)
    }

    fn dfs(
        &mut self,
        idx: usize,
        picks_left: usize,
        uncovered: &PairSet,
        chosen: &mut Vec<usize>,
    ) -> Result<Option<Vec<usize>>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded {
                lower: 0,
                upper: None,
            });
        }
        if uncovered.is_empty() && picks_left == 0 {
            return Ok(Some(chosen.clone()));
        }
        if picks_left == 0 || idx >= self.candidates.len() {
            return Ok(None);
        }
        if !uncovered.is_subset_of(&self.suffix_union[idx]) {
            return Ok(None);
        }
        let v = self.candidates[idx];
        chosen.push(v);
        let rest = uncovered.subtract(&self.coverage[v]);
        if let Some(found) = self.dfs(idx + 1, picks_left - 1, &rest, chosen)? {
            return Ok(Some(found));
        }
        chosen.pop();
        self.dfs(idx + 1, picks_left, uncovered, chosen)
    }
}

/// Exact metric dimension with the default node budget.
pub fn metric_dimension(g: &Graph) -> Result<DimResult> {
    metric_dimension_with(g, DEFAULT_BUDGET, DIM_ORDER_CAP)
}

/// Exact metric dimension. Searches target sizes ascending from the
/// `f(n,d)` lower bound; the first size admitting a resolving set is
/// the dimension, certified minimal by the exhaustive failure of the
/// pass below it.
pub fn metric_dimension_with(g: &Graph, cap_nodes: u64, order_cap: usize) -> Result<DimResult> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = g.n();
    if n > order_cap {
        return Err(Error::TooLarge { n, cap: order_cap });
    }
    if n == 1 {
        return Ok(DimResult {
            value: 0,
            witness: Vec::new(),
            nodes_explored: 0,
        });
    }
    let dm = g.distance_matrix();
    let diam = dm.diameter().expect("connected graph has finite diameter");

    // pair p = (u, v) is covered by x iff d(u,x) != d(v,x)
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    let coverage: Vec<PairSet> = (0..n)
        .map(|x| {
            let mut set = PairSet::empty(pairs.len());
            for (p, &(u, v)) in pairs.iter().enumerate() {
                if dm.get(u, x) != dm.get(v, x) {
                    set.set(p);
                }
            }
            set
        })
        .collect();

    let mut candidates: Vec<usize> = (0..n).collect();
    candidates.sort_by_key(|&v| (core::cmp::Reverse(coverage[v].count()), v));

    let mut suffix_union = vec![PairSet::empty(pairs.len()); n + 1];
    for i in (0..n).rev() {
        let mut u = suffix_union[i + 1].clone();
        u.union_with(&coverage[candidates[i]]);
        suffix_union[i] = u;
    }

    let mut all = PairSet::empty(pairs.len());
    for p in 0..pairs.len() {
        all.set(p);
    }

    let mut search = DimSearch {
        candidates,
        coverage: &coverage,
        suffix_union,
        nodes: 0,
        budget: cap_nodes,
    };

    let start = lower_bound_f(n, diam);
    let mut k = start;
    loop {
        match search.find(k, &all) {
            Ok(Some(mut witness)) => {
                // when the first tried size succeeds, certify
                // minimality by exhausting size k - 1
                if k == start && k > 1 {
                    let below = search.find(k - 1, &all).map_err(|_| budget_err(k, Some(k)))?;
                    debug_assert!(below.is_none(), "lower bound violated");
                }
                witness.sort_unstable();
                return Ok(DimResult {
                    value: k,
                    witness,
                    nodes_explored: search.nodes,
                });
            }
            Ok(None) => k += 1,
            Err(_) => return Err(budget_err(k, None)),
        }
        if k >= n {
            // the whole vertex set always resolves; n - 1 vertices do too
            unreachable!("resolving set of size n - 1 always exists");
        }
    }
}

fn budget_err(lower: usize, upper: Option<usize>) -> Error {
    Error::BudgetExceeded { lower, upper }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::Graph;
    use crate::line_graph::{bouquet_line_labeling, line_graph, wheel_line_labeling};

    #[test]
    fn code_tables() {
        let p3 = families::path(3).unwrap();
        let t = code_table(&p3, &[0]).unwrap();
        assert_eq!(t.codes, alloc::vec![alloc::vec![0], alloc::vec![1], alloc::vec![2]]);
        assert!(t.is_resolving());

        let k3 = families::complete(3).unwrap();
        assert!(!is_resolving(&k3, &[0]).unwrap());

        let c6 = families::cycle(6).unwrap();
        assert!(is_resolving(&c6, &[0, 1]).unwrap());

        assert_eq!(code_table(&p3, &[]).unwrap_err(), Error::BadLandmarks);
        assert_eq!(code_table(&p3, &[0, 0]).unwrap_err(), Error::BadLandmarks);
        let disc = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(code_table(&disc, &[0]).unwrap_err(), Error::NotConnected);
    }

    #[test]
    fn full_vertex_set_resolves() {
        for g in [families::cycle(5).unwrap(), families::complete(4).unwrap()] {
            let all: Vec<usize> = (0..g.n()).collect();
            assert!(is_resolving(&g, &all).unwrap());
        }
    }

    #[test]
    fn lower_bound_f_values() {
        assert_eq!(lower_bound_f(8, 2), 3);
        assert_eq!(lower_bound_f(5, 1), 4);
        assert_eq!(lower_bound_f(4, 3), 1);
        assert_eq!(lower_bound_f(2, 1), 1);
    }

    #[test]
    fn hernando_values() {
        assert!(!hernando_bound_holds(100, 2, 2));
        assert!(hernando_bound_holds(3, 2, 1));
    }

    #[test]
    fn solver_paths_and_completes() {
        for n in 2..=8 {
            let r = metric_dimension(&families::path(n).unwrap()).unwrap();
            assert_eq!(r.value, 1, "dim(P_{n})");
            assert!(is_resolving(&families::path(n).unwrap(), &r.witness).unwrap());
        }
        for n in 2..=7 {
            let r = metric_dimension(&families::complete(n).unwrap()).unwrap();
            assert_eq!(r.value, n - 1, "dim(K_{n})");
        }
    }

    #[test]
    fn solver_wheels() {
        let (w6, _) = families::wheel(6).unwrap();
        assert_eq!(metric_dimension(&w6).unwrap().value, 3);
        let (w7, _) = families::wheel(7).unwrap();
        assert_eq!(metric_dimension(&w7).unwrap().value, 3);
    }

    #[test]
    fn solver_line_complete_6() {
        let lk6 = line_graph(&families::complete(6).unwrap()).unwrap();
        assert_eq!(metric_dimension(lk6.graph()).unwrap().value, 4);
        assert_eq!(
            dim_formula(&DimFamily::LineComplete { n: 6 }).unwrap(),
            4
        );
    }

    #[test]
    fn solver_bouquet() {
        let (b4, _) = families::bouquet(&[2, 3, 4, 5]).unwrap();
        assert_eq!(metric_dimension(&b4).unwrap().value, 5);
        assert_eq!(
            dim_formula(&DimFamily::Bouquet { ks: alloc::vec![2, 3, 4, 5] }).unwrap(),
            5
        );
    }

    #[test]
    fn formulas() {
        assert_eq!(dim_formula(&DimFamily::LineWheel { n: 5 }).unwrap(), 4);
        assert_eq!(dim_formula(&DimFamily::LineBouquet { n: 4 }).unwrap(), 7);
        assert_eq!(
            dim_formula(&DimFamily::LineBipartite { s: 2, t: 3 }).unwrap(),
            2
        );
        assert_eq!(
            dim_formula(&DimFamily::Tree { sigma: 5, ex: 1 }).unwrap(),
            4
        );
        assert_eq!(dim_formula(&DimFamily::Wheel { n: 7 }).unwrap(), 3);
        assert_eq!(dim_formula(&DimFamily::Wheel { n: 6 }).unwrap(), 3);
        assert!(dim_formula(&DimFamily::LineComplete { n: 5 }).is_err());
    }

    #[test]
    fn wheel_witnesses_resolve() {
        for n in 6..=10 {
            let (lg, _) = wheel_line_labeling(n).unwrap();
            let w = wheel_line_resolving_witness(n).unwrap();
            assert_eq!(w.len(), n - n.div_ceil(3));
            assert!(is_resolving(lg.graph(), &w).unwrap(), "n={n}");
        }
        assert!(wheel_line_resolving_witness(5).is_err());
    }

    #[test]
    fn wheel_line_small_dims() {
        // no 3-subset of L(W_{1,6}) resolves; the witness of size 4 does
        let (lg, _) = wheel_line_labeling(6).unwrap();
        let r = metric_dimension(lg.graph()).unwrap();
        assert_eq!(r.value, 4);
    }

    #[test]
    fn bouquet_witnesses_resolve() {
        for ks in [
            &[2usize, 2][..],
            &[2, 3],
            &[3, 3],
            &[2, 2, 2],
            &[2, 3, 4],
            &[2, 3, 4, 5],
            &[4, 4],
        ] {
            let (lg, _) = bouquet_line_labeling(ks).unwrap();
            let w = bouquet_line_resolving_witness(ks).unwrap();
            assert_eq!(w.len(), 2 * ks.len() - 1, "ks={ks:?}");
            assert!(is_resolving(lg.graph(), &w).unwrap(), "ks={ks:?}");
        }
    }

    #[test]
    fn bounds_check() {
        let p5 = families::path(5).unwrap();
        assert!(dim_bounds_check(&p5, 1, None));
        let k4 = families::complete(4).unwrap();
        assert!(dim_bounds_check(&k4, 3, None));
        let (lg, _) = wheel_line_labeling(6).unwrap();
        let (w6, _) = families::wheel(6).unwrap();
        assert!(dim_bounds_check(lg.graph(), 4, Some(&w6)));
    }

    #[test]
    fn budget_exceeded_reports() {
        let (b, _) = families::bouquet(&[2, 3, 4, 5]).unwrap();
        match metric_dimension_with(&b, 10, DIM_ORDER_CAP) {
            Err(Error::BudgetExceeded { .. }) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }
}
