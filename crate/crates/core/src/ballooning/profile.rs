//! `q̃(H)`, `S̃(H)`, `k(H)` and `B̃(H)` of a decomposition family.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::DecompositionFamily;
use crate::error::{Error, Result};
use crate::graph::bits::{members, to_vec, VertexSet};
use crate::graph::{canonical_labeling, covers_below, io, make_named, Graph, NamedGraph};

#[derive(Debug, Clone)]
pub struct ExtremalProfile {
    pub q_tilde: usize,
    /// `(member index, covering)` for every minimum independent covering of
    /// every member with `γ = q̃`.
    pub s_tilde: Vec<(usize, VertexSet)>,
    pub k: usize,
    /// Canonical forms, sorted by canonical key.
    pub b_tilde: Vec<Graph>,
    /// `true` when no member has a cover smaller than `q̃`, so that
    /// `B̃ = {K_q̃}`.
    pub b_tilde_is_complete: bool,
}

pub fn profile(family: &DecompositionFamily) -> Result<ExtremalProfile> {
    if family.members.is_empty() {
        return Err(Error::InvalidParameter("empty decomposition family".into()));
    }
    let q_tilde = family.members.iter().map(|m| m.gamma).min().unwrap();
    let s_tilde: Vec<(usize, VertexSet)> = family
        .members
        .iter()
        .enumerate()
        .filter(|(_, m)| m.gamma == q_tilde)
        .flat_map(|(i, m)| m.coverings.iter().map(move |&c| (i, c)))
        .collect();
    let k = s_tilde
        .iter()
        .flat_map(|&(i, c)| members(c).map(move |x| family.members[i].graph.degree(x)))
        .min()
        .unwrap_or(0);

    let mut induced: BTreeMap<_, Graph> = BTreeMap::new();
    for m in &family.members {
        for cover in covers_below(&m.graph, q_tilde) {
            let sub = m.graph.induced(&to_vec(cover));
            let (perm, key) = canonical_labeling(&sub);
            induced.entry(key).or_insert_with(|| sub.permuted(&perm));
        }
    }
    let b_tilde_is_complete = induced.is_empty();
    let b_tilde = if b_tilde_is_complete {
        vec![make_named(NamedGraph::Complete(q_tilde))?]
    } else {
        induced.into_values().collect()
    };
    Ok(ExtremalProfile {
        q_tilde,
        s_tilde,
        k,
        b_tilde,
        b_tilde_is_complete,
    })
}

impl ExtremalProfile {
    pub fn to_doc(&self) -> ProfileDoc {
        ProfileDoc {
            q_tilde: self.q_tilde,
            k: self.k,
            s_tilde: self
                .s_tilde
                .iter()
                .map(|&(member, c)| CoveringDoc {
                    member,
                    vertices: to_vec(c),
                })
                .collect(),
            b_tilde: self.b_tilde.iter().map(io::to_graph6).collect(),
            b_tilde_is_complete: self.b_tilde_is_complete,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileDoc {
    pub q_tilde: usize,
    pub k: usize,
    pub s_tilde: Vec<CoveringDoc>,
    pub b_tilde: Vec<String>,
    pub b_tilde_is_complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringDoc {
    pub member: usize,
    pub vertices: Vec<usize>,
}
