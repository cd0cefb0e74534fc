//! Turán numbers for odd-ballooning of bipartite graphs.
//!
//! * [`graph`]: bitset graphs, invariants, canonical labeling, subgraph search
//!   and graph6 I/O.
//! * [`ballooning`]: `H(t)`, vertex division, 2-decomposition families and the
//!   extremal profile `(q̃, k, B̃)`.
//! * [`extremal`]: constructions `F(n,q)` and `𝓕(n,q,k,𝓛)`, the two-sided
//!   bound and closed forms for stars, paths, even cycles and trees.
//! * [`oracle`]: exhaustive enumeration of non-isomorphic graphs and exact
//!   Turán numbers at small order.

pub mod ballooning;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod oracle;

pub use error::{Error, Result};
pub use graph::Graph;
