//! Small simple graphs stored as bit rows.
//!
//! Every object in the pipeline has at most [`MAX_VERTICES`] vertices, so
//! each adjacency row fits in a single `u128`.

pub mod bits;
pub mod canon;
pub mod invariants;
pub mod io;
pub mod named;
pub mod subgraph;

use std::fmt;

use crate::error::{Error, Result};
use bits::{bit, members, VertexSet};

pub use canon::{canonical_form, canonical_key, canonical_labeling, CanonicalKey};
pub use invariants::{
    bipartition, component_sets, components, covers_below, independent_covering, is_bipartite,
    matching_number, two_coloring, vertex_cover_number, Bipartition, IndependentCovering,
};
pub use named::{make_named, NamedGraph};
pub use subgraph::{find_subgraph, Embedding, SearchStats, SubgraphSearch};

pub const MAX_VERTICES: usize = 128;

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph `I_n`.
    pub fn empty(n: usize) -> Result<Graph> {
        check_order(n)?;
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw rows, validating symmetry and irreflexivity.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Graph> {
        let n = rows.len();
        check_order(n)?;
        let mask = bits::full(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::InvalidParameter(format!("row {v} out of range")));
            }
            if row & bit(v) != 0 {
                return Err(Error::InvalidParameter(format!("self-loop at {v}")));
            }
            for u in members(row) {
                if rows[u] & bit(v) == 0 {
                    return Err(Error::InvalidParameter(format!(
                        "asymmetric adjacency {v}-{u}"
                    )));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    /// ν(G).
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// e(G).
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn row(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn vertex_set(&self) -> VertexSet {
        bits::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        members(self.adj[v])
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Δ(G); zero for the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// δ(G); zero for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n)
            .filter(|&v| self.adj[v] == 0)
            .fold(0, |acc, v| acc | bit(v))
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidParameter(format!(
                "edge {u}-{v} outside 0..{}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidParameter(format!("self-loop at {u}")));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.adj[u] &= !bit(v);
            self.adj[v] &= !bit(u);
        }
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order. The position
    /// of an edge in this list is its edge id.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in members(self.adj[u] >> (u + 1)) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    /// Subgraph induced by `vs`; vertex `vs[i]` becomes `i`.
    pub fn induced(&self, vs: &[usize]) -> Graph {
        let mut adj = vec![0; vs.len()];
        for (i, &a) in vs.iter().enumerate() {
            for (j, &b) in vs.iter().enumerate() {
                if self.has_edge(a, b) {
                    adj[i] |= bit(j);
                }
            }
        }
        Graph { n: vs.len(), adj }
    }

    /// `G − U`, keeping the remaining vertices in increasing order.
    pub fn remove_vertices(&self, set: VertexSet) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&v| set & bit(v) == 0).collect();
        self.induced(&keep)
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut adj = vec![0; self.n];
        for v in 0..self.n {
            let mut row = 0;
            for u in members(self.adj[v]) {
                row |= bit(perm[u]);
            }
            adj[perm[v]] = row;
        }
        Graph { n: self.n, adj }
    }

    /// Drops isolated vertices.
    pub fn without_isolated(&self) -> Graph {
        self.remove_vertices(self.isolated_vertices())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::Capacity(format!(
            "{n} vertices exceeds the {MAX_VERTICES}-vertex limit"
        )))
    } else {
        Ok(())
    }
}

/// `G ∨ H`: vertex ids of `g` come first.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let mut out = disjoint_union(g, h)?;
    let gs = bits::full(g.n);
    let hs = bits::full(g.n + h.n) & !gs;
    for v in 0..g.n {
        out.adj[v] |= hs;
    }
    for v in g.n..g.n + h.n {
        out.adj[v] |= gs;
    }
    Ok(out)
}

/// `G ∪ H` on disjoint vertex sets; vertex ids of `g` come first.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    check_order(g.n + h.n)?;
    let mut adj = g.adj.clone();
    adj.extend(h.adj.iter().map(|&r| r << g.n));
    Ok(Graph {
        n: g.n + h.n,
        adj,
    })
}

/// `k` disjoint copies of `g`.
pub fn copies(g: &Graph, k: usize) -> Result<Graph> {
    let mut out = Graph::empty(0)?;
    for _ in 0..k {
        out = disjoint_union(&out, g)?;
    }
    Ok(out)
}
