//! Exact `ex(n, 𝓛)` at small order.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::enumerate::{children, generate, MAX_ORDER};
use crate::error::{Error, Result};
use crate::graph::{canonical_key, find_subgraph, io, make_named, CanonicalKey, Graph, NamedGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuranResult {
    pub order: usize,
    pub max_edges: usize,
    /// Canonical forms sorted by canonical key.
    pub extremal: Vec<Graph>,
}

impl TuranResult {
    pub fn to_doc(&self) -> TuranDoc {
        TuranDoc {
            order: self.order,
            max_edges: self.max_edges,
            extremal: self.extremal.iter().map(io::to_graph6).collect(),
        }
    }

    pub fn from_doc(doc: &TuranDoc) -> Result<Self> {
        Ok(TuranResult {
            order: doc.order,
            max_edges: doc.max_edges,
            extremal: doc
                .extremal
                .iter()
                .map(|s| io::from_graph6(s))
                .collect::<Result<_>>()?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TuranDoc {
    pub order: usize,
    pub max_edges: usize,
    pub extremal: Vec<String>,
}

fn is_free(g: &Graph, family: &[Graph]) -> bool {
    family
        .iter()
        .all(|f| f.order() > g.order() || find_subgraph(g, f).is_none())
}

/// Patterns that matter at `order`, without isolated vertices, deduplicated.
fn effective_family(order: usize, family: &[Graph]) -> Vec<Graph> {
    let mut seen: BTreeMap<CanonicalKey, Graph> = BTreeMap::new();
    for f in family {
        if f.order() > order {
            continue;
        }
        let core = f.without_isolated();
        seen.entry(canonical_key(&core)).or_insert(core);
    }
    seen.into_values().collect()
}

/// `ex(order, family)` and every extremal graph.
///
/// Graphs of order `order − 1` free of the family are generated first; every
/// extremal graph arises from one of them by adding a vertex of maximum
/// degree. Parents are taken by decreasing edge count, and a parent is
/// skipped once even a dominating new vertex cannot reach the best value.
pub fn turan_oracle(order: usize, family: &[Graph]) -> Result<TuranResult> {
    if order > MAX_ORDER {
        return Err(Error::Capacity(format!(
            "exact Turán numbers limited to order {MAX_ORDER}, got {order}"
        )));
    }
    let fam = effective_family(order, family);
    if fam.iter().any(|f| f.size() == 0) {
        // An edgeless pattern on at most `order` vertices embeds in every
        // graph of that order.
        return Err(Error::InvalidParameter(
            "family contains an edgeless graph that every host contains".into(),
        ));
    }
    if fam.is_empty() {
        let k = make_named(NamedGraph::Complete(order))?;
        return Ok(TuranResult {
            order,
            max_edges: k.size(),
            extremal: vec![k],
        });
    }
    if order == 0 {
        return Ok(TuranResult {
            order,
            max_edges: 0,
            extremal: vec![Graph::empty(0)?],
        });
    }
    let mut parents = generate(order - 1, usize::MAX, &|g| is_free(g, &fam));
    parents.sort_by(|a, b| b.1.size().cmp(&a.1.size()).then(a.0.cmp(&b.0)));

    let best = AtomicUsize::new(0);
    let found: Vec<(CanonicalKey, Graph)> = parents
        .par_iter()
        .flat_map_iter(|(key, p)| {
            let floor = best.load(Ordering::Relaxed);
            if p.size() + p.order() < floor {
                return Vec::new().into_iter();
            }
            let min_new = floor.saturating_sub(p.size());
            let kids: Vec<(CanonicalKey, Graph)> = children(p, key, min_new..=p.order(), &|c| {
                c.size() >= best.load(Ordering::Relaxed) && is_free(c, &fam)
            });
            let top = kids.iter().map(|(_, c)| c.size()).max().unwrap_or(0);
            best.fetch_max(top, Ordering::Relaxed);
            let floor = best.load(Ordering::Relaxed);
            kids.into_iter()
                .filter(|(_, c)| c.size() >= floor)
                .collect::<Vec<_>>()
                .into_iter()
        })
        .collect();
    let max_edges = found.iter().map(|(_, g)| g.size()).max().unwrap_or(0);
    let extremal: BTreeMap<CanonicalKey, Graph> = found
        .into_iter()
        .filter(|(_, g)| g.size() == max_edges)
        .collect();
    Ok(TuranResult {
        order,
        max_edges,
        extremal: extremal.into_values().collect(),
    })
}
