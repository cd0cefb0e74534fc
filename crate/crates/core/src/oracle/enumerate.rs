//! Orderly generation of non-isomorphic graphs.
//!
//! A graph `C` of order `n` is generated from the canonical representative of
//! `C − w`, where `w` is the vertex placed last by the canonical labeling.
//! Children of a parent `P` are all extensions of `P` by one vertex with an
//! arbitrary neighbourhood; a child with new vertex `x` is accepted when
//! `C − x ≅ C − w`. Every class then has exactly one parent class, and the
//! isomorphic children of a single parent are merged by canonical key.
//!
//! The canonical labeling always places a vertex of maximum degree last, and
//! `C − x ≅ C − w` forces `d(x) = d(w)`, so only neighbourhoods that make the
//! new vertex one of maximum degree are tried.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::bits::{bit, count, members, VertexSet};
use crate::graph::{canonical_key, canonical_labeling, components, io, is_bipartite, CanonicalKey, Graph};

/// Largest order enumerated without a degree bound.
pub const MAX_ORDER: usize = 9;
/// Largest order enumerated with `Δ ≤ 2`.
pub const MAX_ORDER_DEGREE_TWO: usize = 12;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraints {
    pub max_degree: Option<usize>,
    pub bipartite: bool,
    pub min_edges: Option<usize>,
    pub max_edges: Option<usize>,
    pub connected: bool,
    pub no_isolated: bool,
}

impl Constraints {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn max_degree(mut self, d: usize) -> Self {
        self.max_degree = Some(d);
        self
    }

    pub fn bipartite(mut self) -> Self {
        self.bipartite = true;
        self
    }

    pub fn edges(mut self, min: usize, max: usize) -> Self {
        self.min_edges = Some(min);
        self.max_edges = Some(max);
        self
    }

    pub fn connected(mut self) -> Self {
        self.connected = true;
        self
    }

    pub fn no_isolated(mut self) -> Self {
        self.no_isolated = true;
        self
    }

    pub fn order_limit(&self) -> usize {
        match self.max_degree {
            Some(d) if d <= 2 => MAX_ORDER_DEGREE_TWO,
            _ => MAX_ORDER,
        }
    }

    fn hereditary_ok(&self, g: &Graph) -> bool {
        self.max_degree.is_none_or(|d| g.max_degree() <= d) && (!self.bipartite || is_bipartite(g))
    }

    fn output_ok(&self, g: &Graph) -> bool {
        self.min_edges.is_none_or(|m| g.size() >= m)
            && self.max_edges.is_none_or(|m| g.size() <= m)
            && (!self.connected || g.order() == 0 || components(g) == 1)
            && (!self.no_isolated || g.isolated_vertices() == 0)
    }
}

/// Canonical representatives of one order, sorted by canonical key.
#[derive(Debug, Clone)]
pub struct EnumerationStream {
    order: usize,
    constraints: Constraints,
    graphs: std::vec::IntoIter<Graph>,
}

impl EnumerationStream {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn constraints(&self) -> &Constraints {
        &self.constraints
    }

    /// Writes the remaining graphs as graph6 lines.
    pub fn spill(self, path: &Path) -> Result<usize> {
        let mut f = fs::File::create(path)?;
        let mut k = 0;
        for g in self {
            writeln!(f, "{}", io::to_graph6(&g))?;
            k += 1;
        }
        Ok(k)
    }
}

impl Iterator for EnumerationStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.graphs.next()
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.graphs.size_hint()
    }
}

impl ExactSizeIterator for EnumerationStream {}

pub fn enumerate_graphs(order: usize, constraints: &Constraints) -> Result<EnumerationStream> {
    let limit = constraints.order_limit();
    if order > limit {
        return Err(Error::Capacity(format!(
            "enumeration limited to order {limit} under these constraints, got {order}"
        )));
    }
    let max_new = constraints.max_degree.unwrap_or(usize::MAX);
    let level = generate(order, max_new, &|g| constraints.hereditary_ok(g));
    let graphs: Vec<Graph> = level
        .into_iter()
        .map(|(_, g)| g)
        .filter(|g| constraints.output_ok(g))
        .collect();
    Ok(EnumerationStream {
        order,
        constraints: constraints.clone(),
        graphs: graphs.into_iter(),
    })
}

/// All classes of the given order whose every induced subgraph satisfies
/// `keep`, as `(key, canonical form)` sorted by key. `keep` must be closed
/// under taking induced subgraphs.
/// `max_new` bounds the degree of each added vertex and may be used when
/// `keep` implies such a bound.
pub(crate) fn generate<F>(order: usize, max_new: usize, keep: &F) -> Vec<(CanonicalKey, Graph)>
where
    F: Fn(&Graph) -> bool + Sync,
{
    let empty = Graph::empty(0).expect("order 0");
    let mut level = vec![(canonical_key(&empty), empty)];
    for _ in 0..order {
        level = next_level(&level, max_new, keep);
    }
    level
}

pub(crate) fn next_level<F>(
    parents: &[(CanonicalKey, Graph)],
    max_new: usize,
    keep: &F,
) -> Vec<(CanonicalKey, Graph)>
where
    F: Fn(&Graph) -> bool + Sync,
{
    let mut out: Vec<(CanonicalKey, Graph)> = parents
        .par_iter()
        .flat_map_iter(|(key, p)| children(p, key, 0..=max_new, keep).into_iter())
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Accepted children of `p` whose new vertex has degree in `degrees`.
pub(crate) fn children<F>(
    p: &Graph,
    p_key: &CanonicalKey,
    degrees: std::ops::RangeInclusive<usize>,
    keep: &F,
) -> Vec<(CanonicalKey, Graph)>
where
    F: Fn(&Graph) -> bool,
{
    let n = p.order();
    let mut found: BTreeMap<CanonicalKey, Graph> = BTreeMap::new();
    let pmax = p.max_degree();
    for s in 0u64..(1u64 << n) {
        let s = s as VertexSet;
        let d = count(s);
        if !degrees.contains(&d) || d < pmax {
            continue;
        }
        let child_max = members(p.vertex_set())
            .map(|v| p.degree(v) + (s >> v & 1) as usize)
            .max()
            .unwrap_or(0);
        if d < child_max {
            continue;
        }
        let mut rows: Vec<VertexSet> = p.rows().to_vec();
        for v in members(s) {
            rows[v] |= bit(n);
        }
        rows.push(s);
        let c = Graph::from_rows(rows).expect("valid extension");
        if !keep(&c) {
            continue;
        }
        let (perm, key) = canonical_labeling(&c);
        let w = perm.iter().position(|&pos| pos == n).expect("permutation");
        if w != n && canonical_key(&c.remove_vertices(bit(w))) != *p_key {
            continue;
        }
        found.entry(key).or_insert_with(|| c.permuted(&perm));
    }
    found.into_iter().collect()
}
