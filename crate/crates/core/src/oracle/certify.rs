//! Freeness certificates.

use serde::{Deserialize, Serialize};

use crate::graph::{io, Graph, SearchStats, SubgraphSearch};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Free,
    Contains,
}

/// Outcome of a containment search with enough context to audit it: the
/// inputs, the embedding when one exists, and the search statistics
/// (including the rule that settled the question, if any) otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub verdict: Verdict,
    pub host: String,
    pub pattern: String,
    pub host_order: usize,
    pub host_size: usize,
    pub pattern_order: usize,
    pub pattern_size: usize,
    pub embedding: Option<Vec<usize>>,
    pub stats: SearchStats,
}

impl Certificate {
    pub fn is_free(&self) -> bool {
        self.verdict == Verdict::Free
    }
}

pub fn certify_free(g: &Graph, pattern: &Graph) -> Certificate {
    let (emb, stats) = SubgraphSearch::new(g, pattern).run();
    if let Some(e) = &emb {
        debug_assert!(e.is_valid(pattern, g));
    }
    Certificate {
        verdict: if emb.is_some() {
            Verdict::Contains
        } else {
            Verdict::Free
        },
        host: io::to_graph6(g),
        pattern: io::to_graph6(pattern),
        host_order: g.order(),
        host_size: g.size(),
        pattern_order: pattern.order(),
        pattern_size: pattern.size(),
        embedding: emb.map(|e| e.map),
        stats,
    }
}
