//! Extremal constructions, the two-sided bound and closed forms.

pub mod bounds;
pub mod construction;
pub mod corollary;
pub mod phi;

pub use bounds::{theorem_bounds, theorem_bounds_from_profile, BoundsDoc, BoundsReport, REGIME_TAG};
pub use construction::{build_family, recipes_for, ConstructionRecipe, RecipeDoc, Side};
pub use corollary::{check_corollary, corollary_value, CorollaryCheck, CorollaryKind, CorollaryValue};
pub use phi::{phi, union_shape_maximum, UnionShape};

use crate::error::Result;
use crate::graph::Graph;
use crate::oracle::{turan_oracle, TuranResult, MAX_ORDER};

/// `e(T_p(n))`.
pub fn turan_edges(p: usize, n: usize) -> usize {
    assert!(p >= 1, "Turán graph needs at least one part");
    let (q, r) = (n / p, n % p);
    // Sum over pairs of parts of the product of their sizes.
    let sq = r * (q + 1) * (q + 1) + (p - r) * q * q;
    (n * n - sq) / 2
}

/// `f(n, q) = e(I_{q−1} ∨ T₂(n−q+1))`.
pub fn f_value(n: usize, q: usize) -> usize {
    assert!(q >= 1 && n >= q, "f(n, q) needs 1 <= q <= n");
    let m = n - q + 1;
    turan_edges(2, m) + (q - 1) * m
}

pub(crate) fn binomial2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `ex(order, family)` with every extremal graph.
///
/// When no member fits in `order` vertices the answer is `K_order` and no
/// search is done; otherwise the oracle enumerates.
pub fn ex_small(order: usize, family: &[Graph]) -> Result<TuranResult> {
    if order <= MAX_ORDER && family.iter().all(|f| f.without_isolated().order() > order) {
        return turan_oracle(order, &[]);
    }
    turan_oracle(order, family)
}
