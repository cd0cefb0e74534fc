//! The bound `φ(α′, Δ)` on edges given matching number and maximum degree.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{disjoint_union, make_named, Graph, NamedGraph};

/// `φ(α, Δ) = αΔ + ⌊Δ/2⌋·⌊α/⌈Δ/2⌉⌋`, with `φ(α, 0) = 0`.
pub fn phi(alpha: usize, delta: usize) -> usize {
    if delta == 0 {
        return 0;
    }
    alpha * delta + (delta / 2) * (alpha / delta.div_ceil(2))
}

/// Component of a graph with maximum degree at most 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Component {
    /// Path on the given number of vertices (at least 2).
    Path(usize),
    /// Cycle on the given number of vertices (at least 3).
    Cycle(usize),
}

impl Component {
    pub fn vertices(self) -> usize {
        match self {
            Component::Path(j) | Component::Cycle(j) => j,
        }
    }

    pub fn edges(self) -> usize {
        match self {
            Component::Path(j) => j - 1,
            Component::Cycle(j) => j,
        }
    }

    pub fn matching(self) -> usize {
        self.vertices() / 2
    }

    fn graph(self) -> Result<Graph> {
        match self {
            Component::Path(j) => make_named(NamedGraph::Path(j)),
            Component::Cycle(j) => make_named(NamedGraph::Cycle(j)),
        }
    }
}

/// A disjoint union of paths and cycles, components in nondecreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnionShape {
    pub components: Vec<Component>,
}

impl UnionShape {
    pub fn edges(&self) -> usize {
        self.components.iter().map(|c| c.edges()).sum()
    }

    pub fn matching(&self) -> usize {
        self.components.iter().map(|c| c.matching()).sum()
    }

    pub fn graph(&self) -> Result<Graph> {
        let mut g = Graph::empty(0)?;
        for c in &self.components {
            g = disjoint_union(&g, &c.graph()?)?;
        }
        Ok(g)
    }
}

/// Largest edge count over disjoint unions of paths and cycles with matching
/// number at most `alpha` and at most `2φ(alpha, 2)` vertices, with every
/// shape attaining it.
pub fn union_shape_maximum(alpha: usize) -> Result<(usize, Vec<UnionShape>)> {
    if alpha > 8 {
        return Err(Error::Capacity(format!("union shapes limited to matching number 8, got {alpha}")));
    }
    let budget = 2 * phi(alpha, 2);
    let mut kinds = Vec::new();
    for j in 2..=budget {
        kinds.push(Component::Path(j));
        if j >= 3 {
            kinds.push(Component::Cycle(j));
        }
    }
    kinds.sort();
    let mut best = (0, Vec::new());
    let mut current = Vec::new();
    shapes(&kinds, 0, alpha, budget, &mut current, &mut best);
    Ok(best)
}

fn shapes(
    kinds: &[Component],
    from: usize,
    alpha: usize,
    budget: usize,
    current: &mut Vec<Component>,
    best: &mut (usize, Vec<UnionShape>),
) {
    let shape = UnionShape { components: current.clone() };
    let e = shape.edges();
    if e > best.0 {
        *best = (e, Vec::new());
    }
    if e == best.0 {
        best.1.push(shape);
    }
    for (i, &c) in kinds.iter().enumerate().skip(from) {
        if c.matching() <= alpha && c.vertices() <= budget {
            current.push(c);
            shapes(kinds, i, alpha - c.matching(), budget - c.vertices(), current, best);
            current.pop();
        }
    }
}
