//! Odd-ballooning `H(t)` and its 2-decomposition family.

pub mod division;
pub mod family;
pub mod profile;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{io, Graph, MAX_VERTICES};

pub use division::{divide, division_family, DivisionPlan};
pub use family::{
    decomposition_family, decomposition_family_with, decomposition_host, is_decomposition_member,
    is_decomposition_member_with, structural_checks, witness_is_valid, DecompositionFamily,
    FamilyDoc, Member, MemberDoc, MembershipEngine, StructuralChecks, Witness, MIN_THEOREM_T,
};
pub use profile::{profile, ExtremalProfile};

/// Base graph, odd `t ≥ 3`, and one odd cycle length `≥ t` per base edge
/// (indexed by edge id, see [`Graph::edges`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallooningSpec {
    base: Graph,
    t: usize,
    lengths: Vec<usize>,
}

impl BallooningSpec {
    /// Every edge becomes a cycle of length exactly `t`.
    pub fn new(base: Graph, t: usize) -> Result<Self> {
        let lengths = vec![t; base.size()];
        Self::with_lengths(base, t, lengths)
    }

    pub fn with_lengths(base: Graph, t: usize, lengths: Vec<usize>) -> Result<Self> {
        if t < 3 || t.is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!(
                "t must be an odd integer at least 3, got {t}"
            )));
        }
        if base.size() == 0 {
            return Err(Error::InvalidParameter("base graph has no edges".into()));
        }
        if lengths.len() != base.size() {
            return Err(Error::InvalidParameter(format!(
                "{} lengths given for {} edges",
                lengths.len(),
                base.size()
            )));
        }
        if let Some(&l) = lengths.iter().find(|&&l| l % 2 == 0 || l < t) {
            return Err(Error::InvalidParameter(format!(
                "cycle length {l} must be odd and at least t = {t}"
            )));
        }
        let spec = BallooningSpec { base, t, lengths };
        let order = spec.ballooned_order();
        if order > MAX_VERTICES {
            return Err(Error::Capacity(format!(
                "H(t) would have {order} vertices"
            )));
        }
        Ok(spec)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// `ν(H) + Σ (len − 2)`.
    pub fn ballooned_order(&self) -> usize {
        self.base.order() + self.lengths.iter().map(|l| l - 2).sum::<usize>()
    }

    pub fn ballooned_size(&self) -> usize {
        self.lengths.iter().sum()
    }

    pub fn to_json(&self) -> SpecDoc {
        SpecDoc {
            base: io::to_graph6(&self.base),
            t: self.t,
            lengths: self.lengths.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecDoc {
    pub base: String,
    pub t: usize,
    pub lengths: Vec<usize>,
}

/// `H(t)` together with its cycles.
#[derive(Debug, Clone)]
pub struct Ballooned {
    pub graph: Graph,
    /// For base edge `i = (u, v)`: `[u, v, w_1, …, w_{len−2}]`, traversed
    /// `u → v → w_1 → … → w_{len−2} → u`.
    pub cycles: Vec<Vec<usize>>,
}

/// Builds `H(t)`. Base vertices keep their ids; the internal vertices of the
/// cycle for edge `i` follow those of edge `i − 1`.
pub fn balloon(spec: &BallooningSpec) -> Result<Graph> {
    Ok(balloon_with_cycles(spec)?.graph)
}

pub fn balloon_with_cycles(spec: &BallooningSpec) -> Result<Ballooned> {
    let mut g = Graph::empty(spec.ballooned_order())?;
    let mut next = spec.base.order();
    let mut cycles = Vec::with_capacity(spec.lengths.len());
    for ((u, v), &len) in spec.base.edges().into_iter().zip(&spec.lengths) {
        let mut cycle = vec![u, v];
        cycle.extend(next..next + len - 2);
        next += len - 2;
        for i in 0..cycle.len() {
            g.add_edge(cycle[i], cycle[(i + 1) % cycle.len()])?;
        }
        cycles.push(cycle);
    }
    Ok(Ballooned { graph: g, cycles })
}
