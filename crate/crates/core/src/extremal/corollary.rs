//! Closed forms for stars, paths, even cycles and trees.

use serde::{Deserialize, Serialize};

use super::bounds::{theorem_bounds_from_profile, BoundsReport};
use super::construction::{ConstructionRecipe, RecipeDoc, Side};
use super::{binomial2, ex_small, f_value, turan_edges};
use crate::ballooning::{decomposition_family, profile, BallooningSpec, MIN_THEOREM_T};
use crate::error::{Error, Result};
use crate::graph::{bipartition, components, io, make_named, Graph, NamedGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorollaryKind {
    /// `S_a`, the star with `a` edges.
    Star { a: usize },
    /// `P_{m+1}`, the path with `m` edges.
    Path { m: usize },
    /// `C_m` with `m` even.
    EvenCycle { m: usize },
    /// A tree whose smaller class `A` contains a leaf.
    GoodTree { tree: Graph },
}

impl CorollaryKind {
    pub fn name(&self) -> &'static str {
        match self {
            CorollaryKind::Star { .. } => "star",
            CorollaryKind::Path { .. } => "path",
            CorollaryKind::EvenCycle { .. } => "even-cycle",
            CorollaryKind::GoodTree { .. } => "good-tree",
        }
    }

    pub fn base(&self) -> Result<Graph> {
        match self {
            CorollaryKind::Star { a } => make_named(NamedGraph::Star(*a)),
            CorollaryKind::Path { m } => make_named(NamedGraph::Path(m + 1)),
            CorollaryKind::EvenCycle { m } => make_named(NamedGraph::Cycle(*m)),
            CorollaryKind::GoodTree { tree } => Ok(tree.clone()),
        }
    }

    /// Whether the closed form equals the upper bound (rather than a value
    /// where both bounds coincide).
    fn attains_upper(&self) -> bool {
        match self {
            CorollaryKind::Star { .. } | CorollaryKind::EvenCycle { .. } => true,
            CorollaryKind::Path { m } => m % 2 == 0,
            CorollaryKind::GoodTree { .. } => false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CorollaryValue {
    pub kind: CorollaryKind,
    pub n: usize,
    pub t: usize,
    pub edges: usize,
    pub recipe: ConstructionRecipe,
}

impl CorollaryValue {
    pub fn to_doc(&self) -> CorollaryDoc {
        CorollaryDoc {
            kind: self.kind.name().to_string(),
            base: io::to_graph6(&self.kind.base().expect("validated")),
            n: self.n,
            t: self.t,
            edges: self.edges,
            recipe: self.recipe.to_doc(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryDoc {
    pub kind: String,
    pub base: String,
    pub n: usize,
    pub t: usize,
    pub edges: usize,
    pub recipe: RecipeDoc,
}

fn complete_or_empty(q: usize) -> Result<Graph> {
    if q == 0 {
        Graph::empty(0)
    } else {
        make_named(NamedGraph::Complete(q))
    }
}

fn check_t(t: usize) -> Result<()> {
    if t < MIN_THEOREM_T {
        return Err(Error::OutOfScope(format!("closed forms need t >= {MIN_THEOREM_T}, got t = {t}")));
    }
    if t.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("t must be odd, got {t}")));
    }
    Ok(())
}

/// Smaller class of a good tree, after checking the preconditions.
fn good_tree_class(tree: &Graph) -> Result<Vec<usize>> {
    if tree.order() < 2 || tree.size() + 1 != tree.order() || components(tree) != 1 {
        return Err(Error::InvalidParameter("not a tree with at least one edge".into()));
    }
    let bp = bipartition(tree)?;
    let a = bp.a_vertices();
    if !a.iter().any(|&v| tree.degree(v) == 1) {
        return Err(Error::InvalidParameter("the smaller class contains no leaf".into()));
    }
    Ok(a)
}

pub fn corollary_value(kind: &CorollaryKind, t: usize, n: usize) -> Result<CorollaryValue> {
    check_t(t)?;
    let (edges, recipe) = match kind {
        CorollaryKind::Star { a } => {
            if *a == 0 {
                return Err(Error::InvalidParameter("star needs a >= 1".into()));
            }
            let r = ConstructionRecipe::new(n, 1, a - 1, Graph::empty(0)?, Side::Larger)?;
            (turan_edges(2, n) + (a - 1) * (a - 1), r)
        }
        CorollaryKind::Path { m } => {
            if *m == 0 {
                return Err(Error::InvalidParameter("path needs m >= 1 edges".into()));
            }
            let (d, k) = if m.is_multiple_of(2) { (m / 2, 1) } else { (m.div_ceil(2), 0) };
            let r = ConstructionRecipe::new(n, d, k, complete_or_empty(d - 1)?, Side::Larger)?;
            (f_value(n, d) + binomial2(d - 1) + k, r)
        }
        CorollaryKind::EvenCycle { m } => {
            if *m < 4 || m % 2 == 1 {
                return Err(Error::InvalidParameter(format!("even cycle needs even m >= 4, got {m}")));
            }
            let d = m / 2;
            let r = ConstructionRecipe::new(n, d, 1, complete_or_empty(d - 1)?, Side::Larger)?;
            (f_value(n, d) + binomial2(d - 1) + 1, r)
        }
        CorollaryKind::GoodTree { tree } => {
            let a = good_tree_class(tree)?.len();
            let spec = BallooningSpec::new(tree.clone(), t)?;
            let prof = profile(&decomposition_family(&spec)?)?;
            let inner = ex_small(a - 1, &prof.b_tilde)?;
            let r = ConstructionRecipe::new(n, a, 0, inner.extremal[0].clone(), Side::Larger)?;
            (f_value(n, a) + inner.max_edges, r)
        }
    };
    debug_assert_eq!(recipe.expected_edges(), edges);
    Ok(CorollaryValue {
        kind: kind.clone(),
        n,
        t,
        edges,
        recipe,
    })
}

/// A closed form next to the bounds computed from the decomposition family.
#[derive(Debug, Clone)]
pub struct CorollaryCheck {
    pub value: CorollaryValue,
    pub bounds: BoundsReport,
    /// The bound the closed form should equal.
    pub attained: usize,
    pub consistent: bool,
}

pub fn check_corollary(kind: &CorollaryKind, t: usize, n: usize) -> Result<CorollaryCheck> {
    let value = corollary_value(kind, t, n)?;
    let spec = BallooningSpec::new(kind.base()?, t)?;
    let prof = profile(&decomposition_family(&spec)?)?;
    let bounds = theorem_bounds_from_profile(&spec, &prof, n)?;
    let (attained, consistent) = if kind.attains_upper() {
        (bounds.upper, value.edges == bounds.upper)
    } else {
        (bounds.lower, bounds.tight && value.edges == bounds.lower)
    };
    Ok(CorollaryCheck {
        value,
        bounds,
        attained,
        consistent,
    })
}
