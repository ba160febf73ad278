//! IO, enumeration, and sweep harness on top of `graphinv-core`: the
//! edge-list and DOT formats, exhaustive small-graph enumeration, and
//! the conjecture/table/witness report machinery behind the `graphinv`
//! binary.

pub mod enumerate;
pub mod format;
pub mod sweep;
