//! Backtracking subgraph (monomorphism) search.
//!
//! Pattern vertices are matched in a fixed order that favours vertices with
//! many already-matched neighbours, so cycles close early. Candidates are
//! filtered by degree, by adjacency to the images of matched neighbours and
//! by the number of free host neighbours. Unmatched neighbours of the vertex
//! just placed are forward-checked.
//!
//! Two odd-cycle counting rules prune dense non-bipartite hosts:
//!
//! * Fix any 2-coloring of the host. Every odd closed walk crosses an odd
//!   number of monochromatic ("defect") edges. An edge-disjoint family of odd
//!   closed walks in the pattern therefore needs that many distinct defect
//!   edges in the host.
//! * If `X` is an odd cycle transversal of the host, a vertex-disjoint family
//!   of odd closed walks in the pattern needs that many distinct vertices of
//!   `X`.
//!
//! Both are checked at the root and at every node of the search.
//!
//! Host vertices with the same open or the same closed neighbourhood are
//! twins: swapping two unused twins is a host automorphism fixing the partial
//! map, so only one member of each twin class is tried per node.

use serde::{Deserialize, Serialize};

use super::bits::{self, bit, count, members, VertexSet};
use super::invariants::is_bipartite;
use super::Graph;

/// Injective map from pattern vertices to host vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// Checks injectivity and that every pattern edge lands on a host edge.
    pub fn is_valid(&self, pattern: &Graph, host: &Graph) -> bool {
        if self.map.len() != pattern.order() {
            return false;
        }
        let mut used: VertexSet = 0;
        for &h in &self.map {
            if h >= host.order() || used & bit(h) != 0 {
                return false;
            }
            used |= bit(h);
        }
        pattern
            .edges()
            .iter()
            .all(|&(u, v)| host.has_edge(self.map[u], self.map[v]))
    }
}

/// Pruning rules that can settle or cut the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    Order,
    Size,
    DegreeSequence,
    BipartiteParity,
    DefectEdges,
    OddCycleTransversal,
    ForwardCheck,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Partial maps visited.
    pub nodes: u64,
    /// Rule that answered before any branching, if one did.
    pub settled_by: Option<Rule>,
    pub defect_edge_cuts: u64,
    pub transversal_cuts: u64,
    pub forward_check_cuts: u64,
    /// Candidates skipped because a twin was already tried at that node.
    pub twin_skips: u64,
    /// Edge-disjoint odd closed walks found in the pattern.
    pub pattern_odd_walks_edge_disjoint: usize,
    /// Vertex-disjoint odd closed walks found in the pattern.
    pub pattern_odd_walks_vertex_disjoint: usize,
    /// Monochromatic edges of the host coloring used for pruning.
    pub host_defect_edges: usize,
    /// Size of the odd cycle transversal used for pruning, if one was found.
    pub host_transversal: Option<usize>,
}

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    pub odd_cycle_rules: bool,
    /// Largest number of subsets examined when looking for a small odd cycle
    /// transversal.
    pub transversal_budget: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            odd_cycle_rules: true,
            transversal_budget: 200_000,
        }
    }
}

/// Returns an embedding of `pattern` into `host`, if one exists.
pub fn find_subgraph(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    SubgraphSearch::new(host, pattern).run().0
}

pub struct SubgraphSearch<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    options: SearchOptions,
}

struct OddWalk {
    vertices: VertexSet,
    edges: Vec<(usize, usize)>,
}

struct State<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    /// Host vertices with degree at least `d`, indexed by `d`.
    deg_mask: Vec<VertexSet>,
    /// Smallest member of each host vertex's twin class.
    twin: Vec<usize>,
    map: Vec<usize>,
    used: VertexSet,
    placed: VertexSet,
    edge_walks: Vec<OddWalk>,
    defects: Vec<(usize, usize)>,
    vertex_walks: Vec<OddWalk>,
    transversal: VertexSet,
    stats: SearchStats,
}

impl<'a> SubgraphSearch<'a> {
    pub fn new(host: &'a Graph, pattern: &'a Graph) -> Self {
        SubgraphSearch {
            host,
            pattern,
            options: SearchOptions::default(),
        }
    }

    pub fn with_options(mut self, options: SearchOptions) -> Self {
        self.options = options;
        self
    }

    pub fn run(&self) -> (Option<Embedding>, SearchStats) {
        let (host, pattern) = (self.host, self.pattern);
        let mut stats = SearchStats::default();
        let settle = |mut stats: SearchStats, rule| {
            stats.settled_by = Some(rule);
            (None, stats)
        };
        if pattern.order() > host.order() {
            return settle(stats, Rule::Order);
        }
        if pattern.size() > host.size() {
            return settle(stats, Rule::Size);
        }
        let mut pd = pattern.degrees();
        let mut hd = host.degrees();
        pd.sort_unstable_by(|a, b| b.cmp(a));
        hd.sort_unstable_by(|a, b| b.cmp(a));
        if pd.iter().zip(&hd).any(|(p, h)| p > h) {
            return settle(stats, Rule::DegreeSequence);
        }
        let pattern_bipartite = is_bipartite(pattern);
        if !pattern_bipartite && is_bipartite(host) {
            return settle(stats, Rule::BipartiteParity);
        }

        let mut edge_walks = Vec::new();
        let mut vertex_walks = Vec::new();
        let mut defects = Vec::new();
        let mut transversal = 0;
        if self.options.odd_cycle_rules && !pattern_bipartite {
            edge_walks = odd_walk_packing(pattern, false);
            vertex_walks = odd_walk_packing(pattern, true);
            defects = defect_edges(host);
            stats.pattern_odd_walks_edge_disjoint = edge_walks.len();
            stats.pattern_odd_walks_vertex_disjoint = vertex_walks.len();
            stats.host_defect_edges = defects.len();
            if edge_walks.len() > defects.len() {
                return settle(stats, Rule::DefectEdges);
            }
            match small_transversal(host, vertex_walks.len(), self.options.transversal_budget) {
                Some(x) => {
                    stats.host_transversal = Some(count(x));
                    if count(x) < vertex_walks.len() {
                        return settle(stats, Rule::OddCycleTransversal);
                    }
                    transversal = x;
                }
                None => vertex_walks.clear(),
            }
        }

        let mut deg_mask = vec![0; pattern.max_degree() + 2];
        for (d, m) in deg_mask.iter_mut().enumerate() {
            *m = (0..host.order())
                .filter(|&v| host.degree(v) >= d)
                .fold(0, |acc, v| acc | bit(v));
        }
        let mut st = State {
            host,
            pattern,
            order: match_order(pattern),
            deg_mask,
            twin: twin_classes(host),
            map: vec![usize::MAX; pattern.order()],
            used: 0,
            placed: 0,
            edge_walks,
            defects,
            vertex_walks,
            transversal,
            stats,
        };
        let found = st.extend(0);
        let emb = found.then(|| Embedding { map: st.map.clone() });
        (emb, st.stats)
    }
}

impl State<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        self.stats.nodes += 1;
        if depth == self.order.len() {
            return true;
        }
        if !self.counting_rules_hold() {
            return false;
        }
        let p = self.order[depth];
        let prow = self.pattern.row(p);
        let placed_nbrs = prow & self.placed;
        let mut cand = self.deg_mask[self.pattern.degree(p)] & !self.used;
        for q in members(placed_nbrs) {
            cand &= self.host.row(self.map[q]);
        }
        let open = count(prow & !self.placed);
        let mut tried: VertexSet = 0;
        for h in members(cand) {
            if tried & bit(self.twin[h]) != 0 {
                self.stats.twin_skips += 1;
                continue;
            }
            tried |= bit(self.twin[h]);
            if count(self.host.row(h) & !self.used) < open {
                continue;
            }
            self.map[p] = h;
            self.used |= bit(h);
            self.placed |= bit(p);
            if self.forward_check(p) && self.extend(depth + 1) {
                return true;
            }
            self.placed &= !bit(p);
            self.used &= !bit(h);
            self.map[p] = usize::MAX;
        }
        false
    }

    /// Every unplaced neighbour of `p` still has a candidate.
    fn forward_check(&mut self, p: usize) -> bool {
        for r in members(self.pattern.row(p) & !self.placed) {
            let mut cand = self.deg_mask[self.pattern.degree(r)] & !self.used;
            for q in members(self.pattern.row(r) & self.placed) {
                cand &= self.host.row(self.map[q]);
            }
            if cand == 0 {
                self.stats.forward_check_cuts += 1;
                return false;
            }
        }
        true
    }

    fn counting_rules_hold(&mut self) -> bool {
        if !self.edge_walks.is_empty() {
            let host = self.host;
            let map = &self.map;
            let placed = self.placed;
            let need = self
                .edge_walks
                .iter()
                .filter(|w| {
                    !w.edges.iter().any(|&(a, b)| {
                        placed & bit(a) != 0
                            && placed & bit(b) != 0
                            && is_defect(host, &self.defects, map[a], map[b])
                    })
                })
                .count();
            let avail = self
                .defects
                .iter()
                .filter(|&&(x, y)| self.used & bit(x) == 0 || self.used & bit(y) == 0)
                .count();
            if need > avail {
                self.stats.defect_edge_cuts += 1;
                return false;
            }
        }
        if !self.vertex_walks.is_empty() {
            let hit = self.placed_into(self.transversal);
            let need = self
                .vertex_walks
                .iter()
                .filter(|w| w.vertices & hit == 0)
                .count();
            if need > count(self.transversal & !self.used) {
                self.stats.transversal_cuts += 1;
                return false;
            }
        }
        true
    }

    /// Pattern vertices currently mapped into `set`.
    fn placed_into(&self, set: VertexSet) -> VertexSet {
        members(self.placed)
            .filter(|&p| set & bit(self.map[p]) != 0)
            .fold(0, |acc, p| acc | bit(p))
    }
}

fn twin_classes(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut rep: Vec<usize> = (0..n).collect();
    for v in 0..n {
        for u in 0..v {
            let open = g.row(u) == g.row(v);
            let closed = g.row(u) | bit(u) == g.row(v) | bit(v);
            if open || closed {
                rep[v] = rep[u];
                break;
            }
        }
    }
    rep
}

fn is_defect(host: &Graph, defects: &[(usize, usize)], x: usize, y: usize) -> bool {
    let (a, b) = if x < y { (x, y) } else { (y, x) };
    host.has_edge(a, b) && defects.binary_search(&(a, b)).is_ok()
}

/// Matching order: most placed neighbours, then adjacency to the most
/// recently placed vertex, then degree, then id.
fn match_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.order();
    let mut order = Vec::with_capacity(n);
    let mut placed: VertexSet = 0;
    let mut stamp = vec![0usize; n];
    while order.len() < n {
        let best = (0..n)
            .filter(|&v| placed & bit(v) == 0)
            .max_by_key(|&v| {
                let nb = pattern.row(v) & placed;
                let recent = members(nb).map(|u| stamp[u]).max().unwrap_or(0);
                (count(nb), recent, pattern.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        order.push(best);
        placed |= bit(best);
        stamp[best] = order.len();
    }
    order
}

/// Greedy packing of shortest odd closed walks, vertex- or edge-disjoint.
fn odd_walk_packing(g: &Graph, vertex_disjoint: bool) -> Vec<OddWalk> {
    let mut work = g.clone();
    let mut out = Vec::new();
    while let Some(w) = shortest_odd_walk(&work) {
        if vertex_disjoint {
            for v in members(w.vertices) {
                for u in members(work.row(v)) {
                    work.remove_edge(u, v);
                }
            }
        } else {
            for &(a, b) in &w.edges {
                work.remove_edge(a, b);
            }
        }
        out.push(w);
    }
    out
}

fn shortest_odd_walk(g: &Graph) -> Option<OddWalk> {
    let n = g.order();
    let mut best: Option<(usize, OddWalk)> = None;
    for s in 0..n {
        if g.row(s) == 0 {
            continue;
        }
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if best.as_ref().is_some_and(|(len, _)| 2 * dist[u] + 1 >= *len) {
                break;
            }
            for v in members(g.row(u)) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if dist[v] == dist[u] && u < v {
                    let len = 2 * dist[u] + 1;
                    if best.as_ref().is_none_or(|(l, _)| len < *l) {
                        let mut edges = vec![(u.min(v), u.max(v))];
                        let mut vertices = bit(u) | bit(v);
                        for mut x in [u, v] {
                            while x != s {
                                let p = parent[x];
                                edges.push((x.min(p), x.max(p)));
                                vertices |= bit(p);
                                x = p;
                            }
                        }
                        best = Some((len, OddWalk { vertices, edges }));
                    }
                }
            }
        }
    }
    best.map(|(_, w)| w)
}

/// Monochromatic edges of a locally optimal 2-coloring, sorted.
fn defect_edges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut color: VertexSet = 0;
    let mut seen: VertexSet = 0;
    for s in 0..n {
        if seen & bit(s) != 0 {
            continue;
        }
        let mut frontier = bit(s);
        seen |= frontier;
        let mut odd = false;
        while frontier != 0 {
            if odd {
                color |= frontier;
            }
            let mut next = 0;
            for v in members(frontier) {
                next |= g.row(v);
            }
            frontier = next & !seen;
            seen |= frontier;
            odd = !odd;
        }
    }
    loop {
        let mut improved = false;
        for v in 0..n {
            let same = if color & bit(v) != 0 { color } else { !color };
            let s = count(g.row(v) & same);
            let d = g.degree(v) - s;
            if s > d {
                color ^= bit(v);
                improved = true;
            }
        }
        if !improved {
            break;
        }
    }
    g.edges()
        .into_iter()
        .filter(|&(u, v)| (color >> u & 1) == (color >> v & 1))
        .collect()
}

/// Smallest odd cycle transversal of size at most `limit`, searched by
/// increasing size within `budget` subset checks. A larger transversal is
/// still useful for node-level pruning, so sizes up to `limit + 2` are tried.
fn small_transversal(g: &Graph, limit: usize, budget: u64) -> Option<VertexSet> {
    if limit == 0 {
        return None;
    }
    let candidates: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) >= 2).collect();
    let mut spent = 0u64;
    for size in 0..=limit + 2 {
        let total = binomial(candidates.len() as u64, size as u64);
        if spent + total > budget {
            return None;
        }
        spent += total;
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let set = idx.iter().fold(0, |acc, &i| acc | bit(candidates[i]));
            if is_bipartite(&g.remove_vertices_keep_ids(set)) {
                return Some(set);
            }
            if !next_combination(&mut idx, candidates.len()) {
                break;
            }
        }
    }
    None
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

impl Graph {
    /// Deletes all edges at `set` without renumbering vertices.
    pub(crate) fn remove_vertices_keep_ids(&self, set: VertexSet) -> Graph {
        let keep = bits::full(self.order()) & !set;
        let rows = (0..self.order())
            .map(|v| if set & bit(v) != 0 { 0 } else { self.row(v) & keep })
            .collect();
        Graph::from_rows(rows).expect("subgraph of a valid graph")
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::graph::{copies, disjoint_union, join, make_named};

    fn named(s: &str) -> Graph {
        make_named(s.parse().unwrap()).unwrap()
    }

    /// Tries every injective map.
    pub(crate) fn brute_force_contains(host: &Graph, pattern: &Graph) -> bool {
        fn rec(host: &Graph, pattern: &Graph, map: &mut Vec<usize>, used: VertexSet) -> bool {
            let p = map.len();
            if p == pattern.order() {
                return true;
            }
            for h in 0..host.order() {
                if used & bit(h) != 0 {
                    continue;
                }
                if (0..p).all(|q| !pattern.has_edge(p, q) || host.has_edge(h, map[q])) {
                    map.push(h);
                    if rec(host, pattern, map, used | bit(h)) {
                        return true;
                    }
                    map.pop();
                }
            }
            false
        }
        rec(host, pattern, &mut Vec::new(), 0)
    }

    #[test]
    fn hamiltonian_cycle_in_k5() {
        let e = find_subgraph(&named("complete:5"), &named("cycle:5")).unwrap();
        assert!(e.is_valid(&named("cycle:5"), &named("complete:5")));
    }

    #[test]
    fn no_odd_cycle_in_bipartite_host() {
        let (emb, stats) = SubgraphSearch::new(&named("kbip:3,3"), &named("cycle:5")).run();
        assert!(emb.is_none());
        assert_eq!(stats.settled_by, Some(Rule::BipartiteParity));
    }

    #[test]
    fn defect_rule_two_triangles_sharing_a_vertex() {
        // T2(8) plus one edge inside a class has one defect edge; the
        // bowtie needs two.
        let mut host = named("turan:2,8");
        host.add_edge(0, 1).unwrap();
        let bowtie =
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let (emb, stats) = SubgraphSearch::new(&host, &bowtie).run();
        assert!(emb.is_none());
        assert_eq!(stats.settled_by, Some(Rule::DefectEdges));
        assert!(!brute_force_contains(&host, &bowtie));
    }

    #[test]
    fn transversal_rule_two_disjoint_triangles() {
        let host = join(&Graph::empty(1).unwrap(), &named("turan:2,8")).unwrap();
        let two = copies(&named("cycle:3"), 2).unwrap();
        let (emb, stats) = SubgraphSearch::new(&host, &two).run();
        assert!(emb.is_none());
        assert_eq!(stats.settled_by, Some(Rule::OddCycleTransversal));
        let one = named("cycle:3");
        assert!(find_subgraph(&host, &one).is_some());
    }

    #[test]
    fn rules_agree_with_plain_search() {
        let plain = SearchOptions {
            odd_cycle_rules: false,
            ..SearchOptions::default()
        };
        let mut host = join(&Graph::empty(1).unwrap(), &named("turan:2,7")).unwrap();
        host.add_edge(1, 2).unwrap();
        let patterns = [
            copies(&named("cycle:3"), 2).unwrap(),
            disjoint_union(&named("cycle:5"), &named("cycle:3")).unwrap(),
            named("cycle:5"),
            named("cycle:7"),
            named("complete:4"),
        ];
        for p in &patterns {
            let fast = SubgraphSearch::new(&host, p).run().0;
            let slow = SubgraphSearch::new(&host, p).with_options(plain).run().0;
            assert_eq!(fast.is_some(), slow.is_some(), "{p:?}");
            if let Some(e) = fast {
                assert!(e.is_valid(p, &host));
            }
        }
    }

    #[test]
    fn empty_pattern_embeds() {
        let e = find_subgraph(&named("path:3"), &Graph::empty(0).unwrap()).unwrap();
        assert!(e.map.is_empty());
        assert!(find_subgraph(&named("path:3"), &Graph::empty(3).unwrap()).is_some());
        assert!(find_subgraph(&named("path:3"), &Graph::empty(4).unwrap()).is_none());
    }

    #[test]
    fn deterministic() {
        let host = named("complete:7");
        let p = named("path:4");
        assert_eq!(find_subgraph(&host, &p), find_subgraph(&host, &p));
    }

    #[test]
    fn odd_walk_packing_of_bowtie() {
        let bowtie =
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(odd_walk_packing(&bowtie, false).len(), 2);
        assert_eq!(odd_walk_packing(&bowtie, true).len(), 1);
    }
}
