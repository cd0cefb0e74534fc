//! Two-sided bound on `ex(n, H(t))` from the extremal profile.

use serde::{Deserialize, Serialize};

use super::construction::{recipes_for, ConstructionRecipe, RecipeDoc};
use super::{binomial2, ex_small, f_value};
use crate::ballooning::{decomposition_family, profile, BallooningSpec, ExtremalProfile, SpecDoc, MIN_THEOREM_T};
use crate::error::{Error, Result};
use crate::graph::{canonical_key, io, make_named, Graph, NamedGraph};

/// Attached to every report: the bounds are asserted for sufficiently large
/// `n` only, and no threshold is known.
pub const REGIME_TAG: &str = "asymptotic (holds for sufficiently large n)";

#[derive(Debug, Clone)]
pub struct BoundsReport {
    pub spec: BallooningSpec,
    pub n: usize,
    pub q_tilde: usize,
    pub k: usize,
    pub b_tilde: Vec<Graph>,
    /// `ex(q̃ − 1, B̃)`.
    pub ex_inner: usize,
    pub lower: usize,
    pub upper: usize,
    pub tight: bool,
    /// The exact value of `ex(n, H(t))` when the bounds meet.
    pub exact: Option<usize>,
    /// `𝓕(n, q̃, 0, B̃)`, each with `lower` edges.
    pub lower_recipes: Vec<ConstructionRecipe>,
    /// `𝓕(n, q̃, k − 1, B̃)`, each with `upper` edges.
    pub recipes: Vec<ConstructionRecipe>,
}

pub fn theorem_bounds(spec: &BallooningSpec, n: usize) -> Result<BoundsReport> {
    if spec.t() < MIN_THEOREM_T {
        return Err(Error::OutOfScope(format!(
            "bounds need t >= {MIN_THEOREM_T}, got t = {}",
            spec.t()
        )));
    }
    let family = decomposition_family(spec)?;
    let prof = profile(&family)?;
    theorem_bounds_from_profile(spec, &prof, n)
}

pub fn theorem_bounds_from_profile(spec: &BallooningSpec, prof: &ExtremalProfile, n: usize) -> Result<BoundsReport> {
    if spec.t() < MIN_THEOREM_T {
        return Err(Error::OutOfScope(format!(
            "bounds need t >= {MIN_THEOREM_T}, got t = {}",
            spec.t()
        )));
    }
    let q = prof.q_tilde;
    let k = prof.k;
    if k == 0 {
        return Err(Error::InvalidParameter("profile has k = 0".into()));
    }
    if n < q + 1 + 2 * (k - 1) {
        return Err(Error::InvalidParameter(format!(
            "n = {n} is too small for the constructions (needs n >= {})",
            q + 1 + 2 * (k - 1)
        )));
    }
    let (ex_inner, inner_graphs) = inner_extremal(q, &prof.b_tilde)?;
    let lower = f_value(n, q) + ex_inner;
    let upper = lower + (k - 1) * (k - 1);
    let tight = k == 1;
    let lower_recipes = recipes_for(n, q, 0, &inner_graphs)?;
    let recipes = recipes_for(n, q, k - 1, &inner_graphs)?;
    debug_assert!(lower_recipes.iter().all(|r| r.expected_edges() == lower));
    debug_assert!(recipes.iter().all(|r| r.expected_edges() == upper));
    Ok(BoundsReport {
        spec: spec.clone(),
        n,
        q_tilde: q,
        k,
        b_tilde: prof.b_tilde.clone(),
        ex_inner,
        lower,
        upper,
        tight,
        exact: tight.then_some(lower),
        lower_recipes,
        recipes,
    })
}

/// `ex(q − 1, B̃)` and its extremal graphs. `B̃ = {K_q}` needs no search.
fn inner_extremal(q: usize, b_tilde: &[Graph]) -> Result<(usize, Vec<Graph>)> {
    let order = q - 1;
    let complete_q = make_named(NamedGraph::Complete(q))?;
    if b_tilde.len() == 1 && canonical_key(&b_tilde[0]) == canonical_key(&complete_q) {
        let g = if order == 0 {
            Graph::empty(0)?
        } else {
            make_named(NamedGraph::Complete(order))?
        };
        return Ok((binomial2(order), vec![g]));
    }
    let r = ex_small(order, b_tilde)?;
    Ok((r.max_edges, r.extremal))
}

impl BoundsReport {
    pub fn to_doc(&self) -> BoundsDoc {
        BoundsDoc {
            spec: self.spec.to_json(),
            n: self.n,
            q_tilde: self.q_tilde,
            k: self.k,
            b_tilde: self.b_tilde.iter().map(io::to_graph6).collect(),
            ex_inner: self.ex_inner,
            lower: self.lower,
            upper: self.upper,
            tight: self.tight,
            exact: self.exact,
            regime: REGIME_TAG.to_string(),
            lower_recipes: self.lower_recipes.iter().map(|r| r.to_doc()).collect(),
            recipes: self.recipes.iter().map(|r| r.to_doc()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsDoc {
    pub spec: SpecDoc,
    pub n: usize,
    pub q_tilde: usize,
    pub k: usize,
    pub b_tilde: Vec<String>,
    pub ex_inner: usize,
    pub lower: usize,
    pub upper: usize,
    pub tight: bool,
    pub exact: Option<usize>,
    pub regime: String,
    pub lower_recipes: Vec<RecipeDoc>,
    pub recipes: Vec<RecipeDoc>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::build_family;

    fn spec(base: &str) -> BallooningSpec {
        BallooningSpec::new(make_named(base.parse().unwrap()).unwrap(), 5).unwrap()
    }

    #[test]
    fn star_two() {
        let r = theorem_bounds(&spec("star:2"), 20).unwrap();
        assert_eq!((r.lower, r.upper, r.tight), (100, 101, false));
        assert_eq!(r.recipes.len(), 1);
        assert_eq!(build_family(&r.recipes[0]).unwrap().size(), 101);
    }

    #[test]
    fn path_four_is_tight() {
        let r = theorem_bounds(&spec("path:4"), 15).unwrap();
        assert_eq!((r.lower, r.upper, r.tight, r.exact), (63, 63, true, Some(63)));
        assert_eq!(r.recipes, r.lower_recipes);
    }

    #[test]
    fn path_five() {
        let r = theorem_bounds(&spec("path:5"), 16).unwrap();
        assert_eq!(r.lower, f_value(16, 2));
        assert_eq!((r.lower, r.upper), (71, 72));
        assert_eq!(r.ex_inner, 0);
        for rec in &r.recipes {
            assert_eq!(build_family(rec).unwrap().size(), r.upper);
        }
    }

    #[test]
    fn gap_is_square() {
        for (base, n) in [("star:3", 20), ("cycle:4", 16), ("path:3", 12), ("kbip:2,3", 20)] {
            let r = theorem_bounds(&spec(base), n).unwrap();
            assert!(r.lower <= r.upper);
            assert_eq!(r.upper - r.lower, (r.k - 1) * (r.k - 1));
            assert_eq!(r.tight, r.k == 1);
        }
    }

    #[test]
    fn scope_and_size() {
        let s3 = BallooningSpec::new(make_named(NamedGraph::Path(4)).unwrap(), 3).unwrap();
        assert!(matches!(theorem_bounds(&s3, 15), Err(Error::OutOfScope(_))));
        assert!(matches!(theorem_bounds(&spec("star:3"), 5), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn doc_serializes() {
        let r = theorem_bounds(&spec("cycle:4"), 16).unwrap();
        let doc = r.to_doc();
        let back: BoundsDoc = serde_json::from_str(&serde_json::to_string(&doc).unwrap()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(doc.regime, REGIME_TAG);
    }
}
