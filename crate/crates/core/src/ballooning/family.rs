//! The 2-decomposition family `M₂(H(t))`.
//!
//! `M` belongs to the family when `H(t)` embeds in `(M ∪ I_{m₀}) ∨ I_{m₀}`
//! with `m₀ = ν(H(t))`. Host vertex ids are laid out as `M` first, then the
//! independent set `Y₁` joined only to `Y₂`, then `Y₂`, which is joined to
//! everything else.
//!
//! Deleting the `M`-edges leaves a bipartite host with sides `V(M) ∪ Y₁` and
//! `Y₂`, so every odd cycle of an embedding uses an odd number of `M`-edges.
//! The cycles are edge-disjoint, hence `e(M) ≥ e(H)`, and when equality holds
//! every cycle uses exactly one `M`-edge and every `M`-edge is used. The
//! structured engine searches that case directly: it assigns each base vertex
//! an image (a vertex of `M`, a fresh `Y₁` vertex or a fresh `Y₂` vertex) and
//! then assigns every base edge a distinct `M`-edge its cycle can route
//! through. Cycle lengths only matter in one place: a cycle whose base edge
//! uses a `Y₂` vertex and whose `M`-edge avoids the other image needs length
//! at least 5.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{balloon_with_cycles, division_family, BallooningSpec, SpecDoc};
use crate::error::{Error, Result};
use crate::graph::bits::{bit, count, members, VertexSet};
use crate::graph::{
    disjoint_union, find_subgraph, independent_covering, io, is_bipartite,
    join, vertex_cover_number, CanonicalKey, Embedding, Graph,
};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum MembershipEngine {
    #[default]
    Structured,
    /// Plain subgraph search on the explicit host. Exponential; intended as
    /// a cross-check on small inputs.
    Generic,
}

/// An embedding of `H(t)` into the test host, plus the `M`-edge each cycle
/// passes through.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub m0: usize,
    pub embedding: Embedding,
    pub sigma: Vec<(usize, usize)>,
}

/// Proposition-style sanity checks on a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralChecks {
    pub edge_count_matches: bool,
    pub one_m_edge_per_cycle: bool,
    pub covers_m: bool,
    pub shared_vertices_are_base: bool,
}

impl StructuralChecks {
    pub fn all(&self) -> bool {
        self.edge_count_matches
            && self.one_m_edge_per_cycle
            && self.covers_m
            && self.shared_vertices_are_base
    }
}

/// Builds `(M ∪ I_{m₀}) ∨ I_{m₀}` explicitly.
pub fn decomposition_host(m: &Graph, m0: usize) -> Result<Graph> {
    join(&disjoint_union(m, &Graph::empty(m0)?)?, &Graph::empty(m0)?)
}

fn host_adjacent(m: &Graph, m0: usize, a: usize, b: usize) -> bool {
    let side = |x: usize| {
        if x < m.order() {
            0
        } else if x < m.order() + m0 {
            1
        } else {
            2
        }
    };
    match (side(a), side(b)) {
        (0, 0) => m.has_edge(a, b),
        (2, 2) => false,
        (2, _) | (_, 2) => true,
        _ => false,
    }
}

pub fn is_decomposition_member(m: &Graph, spec: &BallooningSpec) -> Result<Option<Witness>> {
    is_decomposition_member_with(m, spec, MembershipEngine::Structured)
}

pub fn is_decomposition_member_with(
    m: &Graph,
    spec: &BallooningSpec,
    engine: MembershipEngine,
) -> Result<Option<Witness>> {
    if m.size() < spec.base().size() {
        return Ok(None);
    }
    let m0 = spec.ballooned_order();
    if engine == MembershipEngine::Generic || m.size() > spec.base().size() {
        return generic(m, spec, m0);
    }
    Ok(Structured::new(m, spec).run())
}

fn generic(m: &Graph, spec: &BallooningSpec, m0: usize) -> Result<Option<Witness>> {
    let host = decomposition_host(m, m0)?;
    let b = balloon_with_cycles(spec)?;
    let Some(embedding) = find_subgraph(&host, &b.graph) else {
        return Ok(None);
    };
    let sigma = b
        .cycles
        .iter()
        .map(|c| {
            (0..c.len())
                .map(|i| (embedding.map[c[i]], embedding.map[c[(i + 1) % c.len()]]))
                .find(|&(x, y)| x < m.order() && y < m.order())
                .map(|(x, y)| (x.min(y), x.max(y)))
                .expect("an odd cycle needs an edge inside M")
        })
        .collect();
    Ok(Some(Witness {
        m0,
        embedding,
        sigma,
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Img {
    M(usize),
    Y1,
    Y2,
}

#[derive(Debug, Clone, Copy)]
struct EdgeOption {
    edge: usize,
    consumes: VertexSet,
}

struct Structured<'a> {
    m: &'a Graph,
    base: &'a Graph,
    lengths: &'a [usize],
    base_edges: Vec<(usize, usize)>,
    m_edges: Vec<(usize, usize)>,
    order: Vec<usize>,
    heavy: VertexSet,
    imgs: Vec<Option<Img>>,
    m0: usize,
}

impl<'a> Structured<'a> {
    fn new(m: &'a Graph, spec: &'a BallooningSpec) -> Self {
        let base = spec.base();
        let heavy = (0..m.order())
            .filter(|&x| m.degree(x) >= 2)
            .fold(0, |s, x| s | bit(x));
        Structured {
            m,
            base,
            lengths: spec.lengths(),
            base_edges: base.edges(),
            m_edges: m.edges(),
            order: vertex_order(base),
            heavy,
            imgs: vec![None; base.order()],
            m0: spec.ballooned_order(),
        }
    }

    fn run(mut self) -> Option<Witness> {
        let mut sigma = None;
        if self.assign(0, 0, &mut sigma) {
            let sigma = sigma.expect("set on success");
            Some(self.route(&sigma))
        } else {
            None
        }
    }

    fn compatible(&self, v: usize, iv: Img, w: usize, iw: Img) -> bool {
        if self.base.has_edge(v, w) {
            match (iv, iw) {
                (Img::M(x), Img::M(y)) => self.m.has_edge(x, y),
                (Img::Y2, Img::Y2) => false,
                (Img::Y2, _) | (_, Img::Y2) => true,
                _ => false,
            }
        } else {
            match (iv, iw) {
                (Img::M(x), Img::M(y)) => !self.m.has_edge(x, y),
                _ => true,
            }
        }
    }

    fn assign(&mut self, depth: usize, used: VertexSet, sigma: &mut Option<Vec<usize>>) -> bool {
        if depth == self.order.len() {
            if self.heavy & !used != 0 {
                return false;
            }
            return match self.assign_edges(used) {
                Some(s) => {
                    *sigma = Some(s);
                    true
                }
                None => false,
            };
        }
        let v = self.order[depth];
        let mut options: Vec<Img> = Vec::new();
        if self.base.degree(v) > 0 {
            options.extend(
                (0..self.m.order())
                    .filter(|&x| used & bit(x) == 0 && self.m.degree(x) <= self.base.degree(v))
                    .map(Img::M),
            );
            options.push(Img::Y2);
        }
        options.push(Img::Y1);
        let remaining = self.order.len() - depth - 1;
        for img in options {
            let used_next = match img {
                Img::M(x) => used | bit(x),
                _ => used,
            };
            if count(self.heavy & !used_next) > remaining {
                continue;
            }
            let ok = self.order[..depth].iter().all(|&w| {
                let iw = self.imgs[w].expect("assigned");
                self.compatible(v, img, w, iw)
            });
            if !ok {
                continue;
            }
            self.imgs[v] = Some(img);
            if self.assign(depth + 1, used_next, sigma) {
                return true;
            }
            self.imgs[v] = None;
        }
        false
    }

    fn edge_options(&self, e: usize, free: VertexSet) -> Vec<EdgeOption> {
        let (u, v) = self.base_edges[e];
        let long = self.lengths[e] >= 5;
        let (iu, iv) = (self.imgs[u].unwrap(), self.imgs[v].unwrap());
        let mut out = Vec::new();
        let both_free = |out: &mut Vec<EdgeOption>| {
            for (i, &(x, y)) in self.m_edges.iter().enumerate() {
                if free & bit(x) != 0 && free & bit(y) != 0 {
                    out.push(EdgeOption {
                        edge: i,
                        consumes: bit(x) | bit(y),
                    });
                }
            }
        };
        match (iu, iv) {
            (Img::M(x), Img::M(y)) => {
                let key = (x.min(y), x.max(y));
                let i = self.m_edges.binary_search(&key).expect("adjacent images");
                out.push(EdgeOption {
                    edge: i,
                    consumes: 0,
                });
            }
            (Img::M(a), Img::Y2) | (Img::Y2, Img::M(a)) => {
                for (i, &(x, y)) in self.m_edges.iter().enumerate() {
                    let other = if x == a {
                        y
                    } else if y == a {
                        x
                    } else {
                        continue;
                    };
                    if free & bit(other) != 0 {
                        out.push(EdgeOption {
                            edge: i,
                            consumes: bit(other),
                        });
                    }
                }
                if long {
                    both_free(&mut out);
                }
            }
            (Img::Y1, Img::Y2) | (Img::Y2, Img::Y1) if long => both_free(&mut out),
            _ => {}
        }
        out
    }

    /// Distinct `M`-edges for all base edges, free vertices consumed at most
    /// once. Returns the edge index chosen per base edge.
    fn assign_edges(&self, used: VertexSet) -> Option<Vec<usize>> {
        let free = self.m.vertex_set() & !used;
        let options: Vec<Vec<EdgeOption>> = (0..self.base_edges.len())
            .map(|e| self.edge_options(e, free))
            .collect();
        if options.iter().any(|o| o.is_empty()) {
            return None;
        }
        let mut order: Vec<usize> = (0..options.len()).collect();
        order.sort_by_key(|&e| (options[e].len(), e));
        let mut chosen = vec![usize::MAX; options.len()];
        let mut taken = vec![false; self.m_edges.len()];
        fn rec(
            i: usize,
            order: &[usize],
            options: &[Vec<EdgeOption>],
            taken: &mut [bool],
            consumed: VertexSet,
            chosen: &mut [usize],
        ) -> bool {
            let Some(&e) = order.get(i) else {
                return true;
            };
            for opt in &options[e] {
                if taken[opt.edge] || consumed & opt.consumes != 0 {
                    continue;
                }
                taken[opt.edge] = true;
                chosen[e] = opt.edge;
                if rec(i + 1, order, options, taken, consumed | opt.consumes, chosen) {
                    return true;
                }
                taken[opt.edge] = false;
            }
            false
        }
        rec(0, &order, &options, &mut taken, 0, &mut chosen).then_some(chosen)
    }

    /// Lays out the explicit embedding for a successful assignment.
    fn route(&self, sigma: &[usize]) -> Witness {
        let nm = self.m.order();
        let m0 = self.m0;
        let (mut next_y1, mut next_y2) = (nm, nm + m0);
        let mut fresh = |y2: bool| {
            let c = if y2 { &mut next_y2 } else { &mut next_y1 };
            *c += 1;
            *c - 1
        };
        let mut map: Vec<usize> = self
            .imgs
            .iter()
            .map(|img| match img.unwrap() {
                Img::M(x) => x,
                Img::Y1 => fresh(false),
                Img::Y2 => fresh(true),
            })
            .collect();
        for (e, &(u, v)) in self.base_edges.iter().enumerate() {
            let len = self.lengths[e];
            let (x, y) = self.m_edges[sigma[e]];
            let path: Vec<usize> = match (self.imgs[u].unwrap(), self.imgs[v].unwrap()) {
                (Img::M(_), Img::M(_)) => {
                    let mut p = vec![map[v]];
                    for i in 0..len - 2 {
                        p.push(fresh(i % 2 == 0));
                    }
                    p.push(map[u]);
                    p
                }
                (iu, _) => {
                    let (a_vertex, b_vertex) = if iu == Img::Y2 { (v, u) } else { (u, v) };
                    let a = map[a_vertex];
                    let mut p = vec![a];
                    let far = if a == x {
                        y
                    } else if a == y {
                        x
                    } else {
                        p.push(fresh(true));
                        p.push(x);
                        y
                    };
                    p.push(far);
                    while p.len() < len - 1 {
                        p.push(fresh(true));
                        p.push(fresh(false));
                    }
                    p.push(map[b_vertex]);
                    debug_assert_eq!(p.len(), len);
                    if a_vertex == v {
                        p
                    } else {
                        p.reverse();
                        p
                    }
                }
            };
            map.extend_from_slice(&path[1..path.len() - 1]);
        }
        Witness {
            m0,
            embedding: Embedding { map },
            sigma: sigma.iter().map(|&i| self.m_edges[i]).collect(),
        }
    }
}

/// Base vertices ordered so that each vertex has as many earlier neighbours
/// as possible; isolated vertices go last.
fn vertex_order(g: &Graph) -> Vec<usize> {
    let mut placed: VertexSet = 0;
    let mut order = Vec::with_capacity(g.order());
    while order.len() < g.order() {
        let v = (0..g.order())
            .filter(|&v| placed & bit(v) == 0)
            .max_by_key(|&v| {
                (
                    count(g.row(v) & placed),
                    g.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        placed |= bit(v);
        order.push(v);
    }
    order
}

/// Whether `witness` is an embedding of `balloon(spec)` into the test host
/// of `m`.
pub fn witness_is_valid(m: &Graph, spec: &BallooningSpec, witness: &Witness) -> bool {
    let Ok(b) = balloon_with_cycles(spec) else {
        return false;
    };
    let map = &witness.embedding.map;
    let host_order = m.order() + 2 * witness.m0;
    if map.len() != b.graph.order() || map.iter().any(|&x| x >= host_order) {
        return false;
    }
    let mut seen = std::collections::BTreeSet::new();
    if !map.iter().all(|&x| seen.insert(x)) {
        return false;
    }
    b.graph
        .edges()
        .iter()
        .all(|&(u, v)| host_adjacent(m, witness.m0, map[u], map[v]))
}

pub fn structural_checks(m: &Graph, spec: &BallooningSpec, witness: &Witness) -> StructuralChecks {
    let b = balloon_with_cycles(spec).expect("spec was validated");
    let map = &witness.embedding.map;
    let in_m = |x: usize| x < m.order();
    let mut per_cycle: Vec<VertexSet> = Vec::new();
    let mut one_edge = true;
    for c in &b.cycles {
        let mut m_edges = 0;
        let mut verts: VertexSet = 0;
        for i in 0..c.len() {
            let (x, y) = (map[c[i]], map[c[(i + 1) % c.len()]]);
            if in_m(x) && in_m(y) {
                m_edges += 1;
            }
            if in_m(x) {
                verts |= bit(x);
            }
        }
        one_edge &= m_edges == 1;
        per_cycle.push(verts);
    }
    let image: VertexSet = map.iter().filter(|&&x| in_m(x)).fold(0, |s, &x| s | bit(x));
    let base_images: VertexSet = map[..spec.base().order()]
        .iter()
        .filter(|&&x| in_m(x))
        .fold(0, |s, &x| s | bit(x));
    let shared = members(m.vertex_set())
        .filter(|&x| per_cycle.iter().filter(|&&s| s & bit(x) != 0).count() >= 2)
        .all(|x| base_images & bit(x) != 0);
    StructuralChecks {
        edge_count_matches: m.size() == spec.base().size(),
        one_m_edge_per_cycle: one_edge,
        covers_m: m.vertex_set() & !m.isolated_vertices() & !image == 0,
        shared_vertices_are_base: shared,
    }
}

/// One member of `M₂(H(t))` in canonical form.
#[derive(Debug, Clone)]
pub struct Member {
    pub key: CanonicalKey,
    pub graph: Graph,
    pub witness: Witness,
    pub gamma: usize,
    pub beta: usize,
    pub coverings: Vec<VertexSet>,
}

#[derive(Debug, Clone)]
pub struct DecompositionFamily {
    pub spec: BallooningSpec,
    pub members: Vec<Member>,
}

/// Smallest `t` accepted by [`decomposition_family`].
pub const MIN_THEOREM_T: usize = 5;

pub fn decomposition_family(spec: &BallooningSpec) -> Result<DecompositionFamily> {
    decomposition_family_with(spec, MembershipEngine::Structured)
}

pub fn decomposition_family_with(
    spec: &BallooningSpec,
    engine: MembershipEngine,
) -> Result<DecompositionFamily> {
    if spec.t() < MIN_THEOREM_T {
        return Err(Error::OutOfScope(format!(
            "t = {} is out of theorem scope (requires t >= {MIN_THEOREM_T})",
            spec.t()
        )));
    }
    if !is_bipartite(spec.base()) {
        return Err(Error::NotBipartite);
    }
    let candidates = division_family(spec.base())?;
    let results: Vec<Result<Option<Member>>> = candidates
        .into_par_iter()
        .map(|(key, graph)| {
            let Some(witness) = is_decomposition_member_with(&graph, spec, engine)? else {
                return Ok(None);
            };
            let mut smaller = graph.clone();
            let (a, b) = graph.edges()[0];
            smaller.remove_edge(a, b);
            assert!(
                is_decomposition_member_with(&smaller, spec, engine)?.is_none(),
                "member {} is not minimal",
                key.to_hex()
            );
            let cov = independent_covering(&graph)?;
            Ok(Some(Member {
                beta: vertex_cover_number(&graph),
                gamma: cov.gamma,
                coverings: cov.coverings,
                key,
                graph,
                witness,
            }))
        })
        .collect();
    let mut members = Vec::new();
    for r in results {
        if let Some(m) = r? {
            members.push(m);
        }
    }
    members.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(DecompositionFamily {
        spec: spec.clone(),
        members,
    })
}

impl DecompositionFamily {
    pub fn keys(&self) -> Vec<CanonicalKey> {
        self.members.iter().map(|m| m.key.clone()).collect()
    }

    pub fn to_doc(&self) -> FamilyDoc {
        FamilyDoc {
            spec: self.spec.to_json(),
            members: self
                .members
                .iter()
                .map(|m| MemberDoc {
                    graph6: io::to_graph6(&m.graph),
                    order: m.graph.order(),
                    size: m.graph.size(),
                    gamma: m.gamma,
                    beta: m.beta,
                    coverings: m.coverings.iter().map(|&c| members(c).collect()).collect(),
                    witness: m.witness.embedding.map.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDoc {
    pub spec: SpecDoc,
    pub members: Vec<MemberDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemberDoc {
    pub graph6: String,
    pub order: usize,
    pub size: usize,
    pub gamma: usize,
    pub beta: usize,
    pub coverings: Vec<Vec<usize>>,
    pub witness: Vec<usize>,
}
