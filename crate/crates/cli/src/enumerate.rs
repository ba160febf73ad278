//! Exhaustive enumeration of labeled connected graphs on small orders:
//! every subset of the vertex pairs, streamed and filtered to the
//! connected ones. Labeled (not isomorphism-reduced) on purpose; the
//! redundancy is harmless for universally quantified checks.

use anyhow::{bail, Result};
use graphinv_core::Graph;

/// Default order cap; `2^C(6,2) = 32768` masks is the last cheap size.
pub const ENUMERATION_CAP: usize = 6;

/// All labeled connected graphs on `n` vertices, streamed.
pub fn labeled_connected(n: usize) -> Result<impl Iterator<Item = Graph>> {
    labeled_connected_capped(n, ENUMERATION_CAP)
}

pub fn labeled_connected_capped(n: usize, cap: usize) -> Result<impl Iterator<Item = Graph>> {
    if n < 1 || n > cap || cap > 8 {
        bail!("enumeration supports 1 <= n <= {} here", cap.min(8));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total: u64 = 1 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, &edges).expect("pair subsets are simple graphs");
        g.is_connected().then_some(g)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        assert_eq!(labeled_connected(1).unwrap().count(), 1);
        assert_eq!(labeled_connected(2).unwrap().count(), 1);
        assert_eq!(labeled_connected(3).unwrap().count(), 4);
        assert_eq!(labeled_connected(4).unwrap().count(), 38);
        assert_eq!(labeled_connected(5).unwrap().count(), 728);
    }

    #[test]
    fn cap_enforced() {
        assert!(labeled_connected(7).is_err());
        assert!(labeled_connected_capped(7, 7).is_ok());
        assert!(labeled_connected_capped(9, 9).is_err());
    }
}
