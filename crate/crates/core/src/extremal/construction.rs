//! The graphs `𝓕(n, q, k, 𝓛)`.
//!
//! Vertex layout of [`build_family`]: the `q − 1` vertices of `Q` come first,
//! then the larger class of `T₂(n−q+1)`, then the smaller one. `K_{k,k}`
//! occupies the first `2k` vertices of the chosen class, split into two runs
//! of `k`.

use serde::{Deserialize, Serialize};

use super::{f_value, turan_edges};
use crate::error::{Error, Result};
use crate::graph::{io, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Larger,
    Smaller,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionRecipe {
    pub n: usize,
    pub q: usize,
    pub k: usize,
    /// Placed inside `I_{q−1}`; has exactly `q − 1` vertices.
    pub q_graph: Graph,
    pub side: Side,
}

impl ConstructionRecipe {
    pub fn new(n: usize, q: usize, k: usize, q_graph: Graph, side: Side) -> Result<Self> {
        let r = ConstructionRecipe { n, q, k, q_graph, side };
        r.validate()?;
        Ok(r)
    }

    /// Sizes of the larger and smaller Turán classes.
    pub fn class_sizes(&self) -> (usize, usize) {
        let m = self.n + 1 - self.q;
        (m.div_ceil(2), m / 2)
    }

    pub fn host_class_size(&self) -> usize {
        let (big, small) = self.class_sizes();
        match self.side {
            Side::Larger => big,
            Side::Smaller => small,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.q == 0 {
            return Err(Error::InvalidParameter("q must be at least 1".into()));
        }
        if self.q_graph.order() != self.q - 1 {
            return Err(Error::InvalidParameter(format!(
                "Q must have q - 1 = {} vertices, got {}",
                self.q - 1,
                self.q_graph.order()
            )));
        }
        if self.n < self.q + 1 + 2 * self.k {
            return Err(Error::InvalidParameter(format!(
                "n = {} is below q + 1 + 2k = {}",
                self.n,
                self.q + 1 + 2 * self.k
            )));
        }
        if self.host_class_size() < 2 * self.k {
            return Err(Error::InvalidParameter(format!(
                "{:?} class has {} vertices, K_{{{k},{k}}} needs {}",
                self.side,
                self.host_class_size(),
                2 * self.k,
                k = self.k
            )));
        }
        if self.n > crate::graph::MAX_VERTICES {
            return Err(Error::Capacity(format!("order {} exceeds {}", self.n, crate::graph::MAX_VERTICES)));
        }
        Ok(())
    }

    /// `f(n, q) + e(Q) + k²`.
    pub fn expected_edges(&self) -> usize {
        f_value(self.n, self.q) + self.q_graph.size() + self.k * self.k
    }

    pub fn to_doc(&self) -> RecipeDoc {
        RecipeDoc {
            n: self.n,
            q: self.q,
            k: self.k,
            q_graph: io::to_graph6(&self.q_graph),
            side: self.side,
            edges: self.expected_edges(),
        }
    }

    pub fn from_doc(doc: &RecipeDoc) -> Result<Self> {
        Self::new(doc.n, doc.q, doc.k, io::from_graph6(&doc.q_graph)?, doc.side)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecipeDoc {
    pub n: usize,
    pub q: usize,
    pub k: usize,
    pub q_graph: String,
    pub side: Side,
    pub edges: usize,
}

pub fn build_family(recipe: &ConstructionRecipe) -> Result<Graph> {
    recipe.validate()?;
    let n = recipe.n;
    let i = recipe.q - 1;
    let (big, small) = recipe.class_sizes();
    let mut g = Graph::empty(n)?;
    for (u, v) in recipe.q_graph.edges() {
        g.add_edge(u, v)?;
    }
    for u in 0..i {
        for v in i..n {
            g.add_edge(u, v)?;
        }
    }
    let (a0, b0) = (i, i + big);
    for u in a0..b0 {
        for v in b0..b0 + small {
            g.add_edge(u, v)?;
        }
    }
    let start = match recipe.side {
        Side::Larger => a0,
        Side::Smaller => b0,
    };
    let k = recipe.k;
    for u in start..start + k {
        for v in start + k..start + 2 * k {
            g.add_edge(u, v)?;
        }
    }
    debug_assert_eq!(g.size(), turan_edges(2, big + small) + i * (big + small) + recipe.q_graph.size() + k * k);
    Ok(g)
}

/// Every valid recipe for `𝓕(n, q, k, ·)` over the given `Q` graphs. Both
/// classes are offered when they differ in size and `k > 0`; a class too
/// small for `K_{k,k}` is skipped.
pub fn recipes_for(n: usize, q: usize, k: usize, q_graphs: &[Graph]) -> Result<Vec<ConstructionRecipe>> {
    let m = (n + 1).checked_sub(q).ok_or_else(|| {
        Error::InvalidParameter(format!("n = {n} is smaller than q = {q}"))
    })?;
    let sides: &[Side] = if k > 0 && m % 2 == 1 {
        &[Side::Larger, Side::Smaller]
    } else {
        &[Side::Larger]
    };
    let mut out = Vec::new();
    let mut last_err = None;
    for qg in q_graphs {
        for &side in sides {
            match ConstructionRecipe::new(n, q, k, qg.clone(), side) {
                Ok(r) => out.push(r),
                Err(e) => last_err = Some(e),
            }
        }
    }
    match (out.is_empty(), last_err) {
        (true, Some(e)) => Err(e),
        _ => Ok(out),
    }
}
