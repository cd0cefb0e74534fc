//! Vertex division and the family `𝓓(H)`.
//!
//! Dividing `v` partitions the edges at `v` into one nonempty main block and
//! `m ≥ 1` singleton blocks; each block becomes its own vertex. Divisions of
//! several vertices are applied simultaneously: every original edge joins the
//! blocks that contain it at its two endpoints. In particular an edge that is
//! a singleton at both ends becomes an isolated edge.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{canonical_labeling, CanonicalKey, Graph};

/// Singleton edges chosen at each divided vertex. Edges are given as
/// endpoint pairs in either order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DivisionPlan {
    singletons: BTreeMap<usize, BTreeSet<(usize, usize)>>,
}

impl DivisionPlan {
    pub fn new() -> Self {
        Self::default()
    }

    /// Detaches edge `{v, w}` from `v` as a singleton block.
    pub fn detach(mut self, v: usize, w: usize) -> Self {
        self.singletons
            .entry(v)
            .or_default()
            .insert((v.min(w), v.max(w)));
        self
    }

    pub fn is_empty(&self) -> bool {
        self.singletons.values().all(|s| s.is_empty())
    }

    fn validate(&self, g: &Graph) -> Result<()> {
        for (&v, edges) in &self.singletons {
            if v >= g.order() {
                return Err(Error::InvalidParameter(format!("vertex {v} not in graph")));
            }
            for &(a, b) in edges {
                if (a != v && b != v) || !g.has_edge(a, b) {
                    return Err(Error::InvalidParameter(format!(
                        "block {{{a},{b}}} is not an edge at {v}"
                    )));
                }
            }
            if !edges.is_empty() && edges.len() >= g.degree(v) {
                return Err(Error::InvalidParameter(format!(
                    "main block at {v} would be empty"
                )));
            }
        }
        Ok(())
    }
}

/// Applies `plan` to `g`. Each divided vertex keeps its id for the main
/// block; singleton blocks get new ids after `ν(g)`, in plan order.
pub fn divide(g: &Graph, plan: &DivisionPlan) -> Result<Graph> {
    plan.validate(g)?;
    let extra: usize = plan.singletons.values().map(|s| s.len()).sum();
    let mut out = Graph::empty(g.order() + extra)?;
    let mut endpoint: BTreeMap<(usize, (usize, usize)), usize> = BTreeMap::new();
    let mut next = g.order();
    for (&v, edges) in &plan.singletons {
        for &e in edges {
            endpoint.insert((v, e), next);
            next += 1;
        }
    }
    for (a, b) in g.edges() {
        let at = |v: usize| *endpoint.get(&(v, (a, b))).unwrap_or(&v);
        out.add_edge(at(a), at(b))?;
    }
    Ok(out)
}

/// Largest number of division plans enumerated by [`division_family`].
pub const MAX_PLANS: u64 = 1 << 24;
pub const MAX_BASE_ORDER: usize = 12;

/// All graphs obtainable from `h` by dividing any set of vertices, with
/// isolated vertices removed, as canonical forms sorted by canonical key.
pub fn division_family(h: &Graph) -> Result<Vec<(CanonicalKey, Graph)>> {
    if h.order() > MAX_BASE_ORDER {
        return Err(Error::Capacity(format!(
            "division family limited to {MAX_BASE_ORDER} vertices, got {}",
            h.order()
        )));
    }
    // Per dividable vertex: its incident edges; a choice is a proper subset.
    let slots: Vec<(usize, Vec<(usize, usize)>)> = (0..h.order())
        .filter(|&v| h.degree(v) >= 2)
        .map(|v| {
            let edges = h.neighbors(v).map(|w| (v.min(w), v.max(w))).collect();
            (v, edges)
        })
        .collect();
    let radices: Vec<u64> = slots.iter().map(|(_, e)| (1u64 << e.len()) - 1).collect();
    let total = radices
        .iter()
        .try_fold(1u64, |acc, &r| acc.checked_mul(r).filter(|&x| x <= MAX_PLANS))
        .ok_or_else(|| Error::Capacity(format!("more than {MAX_PLANS} division plans")))?;

    let found: BTreeMap<CanonicalKey, Graph> = (0..total)
        .into_par_iter()
        .map(|mut idx| {
            let mut plan = DivisionPlan::new();
            for ((v, edges), &r) in slots.iter().zip(&radices) {
                let subset = idx % r;
                idx /= r;
                for (i, &(a, b)) in edges.iter().enumerate() {
                    if subset >> i & 1 == 1 {
                        plan = plan.detach(*v, if a == *v { b } else { a });
                    }
                }
            }
            let g = divide(h, &plan).expect("enumerated plans are valid").without_isolated();
            let (perm, key) = canonical_labeling(&g);
            (key, g.permuted(&perm))
        })
        .fold(BTreeMap::new, |mut m, (k, g)| {
            m.entry(k).or_insert(g);
            m
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, g) in b {
                a.entry(k).or_insert(g);
            }
            a
        });
    Ok(found.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_key, copies, disjoint_union, make_named};

    fn named(s: &str) -> Graph {
        make_named(s.parse().unwrap()).unwrap()
    }

    fn key_of(gs: &[&str]) -> CanonicalKey {
        let mut g = Graph::empty(0).unwrap();
        for s in gs {
            g = disjoint_union(&g, &named(s)).unwrap();
        }
        canonical_key(&g)
    }

    #[test]
    fn path_internal_vertex() {
        let p4 = named("path:4");
        let g = divide(&p4, &DivisionPlan::new().detach(1, 0)).unwrap();
        assert_eq!(canonical_key(&g), key_of(&["path:2", "path:3"]));
        assert_eq!(g.size(), 3);
    }

    #[test]
    fn empty_plan_is_identity() {
        let g = named("cycle:5");
        assert_eq!(divide(&g, &DivisionPlan::new()).unwrap(), g);
    }

    #[test]
    fn adjacent_divisions_isolate_shared_edge() {
        // C4 = 0-1-2-3-0; detach edge {0,1} at both ends.
        let c4 = named("cycle:4");
        let plan = DivisionPlan::new().detach(0, 1).detach(1, 0);
        let g = divide(&c4, &plan).unwrap();
        assert_eq!(canonical_key(&g), key_of(&["path:2", "path:4"]));
    }

    #[test]
    fn invalid_plans() {
        let p3 = named("path:3");
        assert!(divide(&p3, &DivisionPlan::new().detach(0, 1)).is_err());
        assert!(divide(&p3, &DivisionPlan::new().detach(1, 0).detach(1, 2)).is_err());
        assert!(divide(&p3, &DivisionPlan::new().detach(1, 1)).is_err());
        assert!(divide(&named("path:4"), &DivisionPlan::new().detach(1, 3)).is_err());
    }

    #[test]
    fn star_family() {
        let fam: Vec<_> = division_family(&named("star:3")).unwrap();
        let keys: BTreeSet<_> = fam.iter().map(|(k, _)| k.clone()).collect();
        let expect: BTreeSet<_> = [
            key_of(&["star:3"]),
            key_of(&["star:2", "path:2"]),
            canonical_key(&copies(&named("path:2"), 3).unwrap()),
        ]
        .into();
        assert_eq!(keys, expect);
    }

    #[test]
    fn path_family() {
        let fam = division_family(&named("path:4")).unwrap();
        let keys: BTreeSet<_> = fam.iter().map(|(k, _)| k.clone()).collect();
        let expect: BTreeSet<_> = [
            key_of(&["path:4"]),
            key_of(&["path:2", "path:3"]),
            key_of(&["path:2", "path:2", "path:2"]),
        ]
        .into();
        assert_eq!(keys, expect);
    }

    #[test]
    fn cycle_family_contains_expected() {
        let fam = division_family(&named("cycle:4")).unwrap();
        let keys: BTreeSet<_> = fam.iter().map(|(k, _)| k.clone()).collect();
        for parts in [
            vec!["cycle:4"],
            vec!["path:5"],
            vec!["path:3", "path:3"],
            vec!["path:2", "path:4"],
            vec!["path:2", "path:2", "path:3"],
            vec!["path:2", "path:2", "path:2", "path:2"],
        ] {
            assert!(keys.contains(&key_of(&parts)), "{parts:?}");
        }
        for (_, g) in &fam {
            assert_eq!(g.size(), 4);
        }
    }

    #[test]
    fn base_order_limit() {
        assert!(matches!(
            division_family(&named("path:13")),
            Err(Error::Capacity(_))
        ));
    }
}
