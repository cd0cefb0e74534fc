//! Classical invariants, all computed exactly by exponential search.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::bits::{self, bit, count, members, VertexSet};
use super::Graph;
use crate::error::{Error, Result};

/// Vertex sets of the connected components, ordered by smallest vertex.
pub fn component_sets(g: &Graph) -> Vec<VertexSet> {
    let mut seen: VertexSet = 0;
    let mut out = Vec::new();
    for s in 0..g.order() {
        if seen & bit(s) != 0 {
            continue;
        }
        let mut comp = bit(s);
        let mut frontier = bit(s);
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= g.row(v);
            }
            frontier = next & !comp;
            comp |= next;
        }
        seen |= comp;
        out.push(comp);
    }
    out
}

/// c(G).
pub fn components(g: &Graph) -> usize {
    component_sets(g).len()
}

/// Proper 2-coloring of each component as `(class of smallest vertex, other
/// class)`, or `None` when the graph has an odd cycle.
pub fn two_coloring(g: &Graph) -> Option<Vec<(VertexSet, VertexSet)>> {
    let mut out = Vec::new();
    for comp in component_sets(g) {
        let root = bits::first(comp).expect("components are nonempty");
        let mut sides = [bit(root), 0];
        let mut frontier = bit(root);
        let mut side = 0;
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= g.row(v);
            }
            if next & sides[side] != 0 {
                return None;
            }
            side ^= 1;
            frontier = next & !sides[side];
            sides[side] |= next;
            if sides[0] & sides[1] != 0 {
                return None;
            }
        }
        out.push((sides[0], sides[1]));
    }
    Some(out)
}

pub fn is_bipartite(g: &Graph) -> bool {
    two_coloring(g).is_some()
}

/// α′(G), by memoized branching on the lowest non-isolated vertex.
pub fn matching_number(g: &Graph) -> usize {
    let mut memo = HashMap::new();
    matching_in(g, g.vertex_set(), &mut memo)
}

pub(crate) fn matching_in(
    g: &Graph,
    alive: VertexSet,
    memo: &mut HashMap<VertexSet, usize>,
) -> usize {
    // Drop vertices without neighbours; they never matter.
    let mut live = 0;
    for v in members(alive) {
        if g.row(v) & alive != 0 {
            live |= bit(v);
        }
    }
    if live == 0 {
        return 0;
    }
    if let Some(&m) = memo.get(&live) {
        return m;
    }
    // A degree-one vertex can always be matched to its neighbour.
    let leaf = members(live).find(|&v| count(g.row(v) & live) == 1);
    let best = if let Some(v) = leaf {
        let u = bits::first(g.row(v) & live).unwrap();
        1 + matching_in(g, live & !bit(v) & !bit(u), memo)
    } else {
        let v = bits::first(live).unwrap();
        let mut best = matching_in(g, live & !bit(v), memo);
        for u in members(g.row(v) & live) {
            if best * 2 + 2 > count(live) {
                break;
            }
            best = best.max(1 + matching_in(g, live & !bit(v) & !bit(u), memo));
        }
        best
    };
    memo.insert(live, best);
    best
}

/// β(G): minimum vertex cover size.
pub fn vertex_cover_number(g: &Graph) -> usize {
    let mut best = count(g.vertex_set() & !g.isolated_vertices());
    cover_search(g, g.vertex_set(), 0, &mut best);
    best
}

fn cover_search(g: &Graph, alive: VertexSet, used: usize, best: &mut usize) {
    if used >= *best {
        return;
    }
    let mut pick = None;
    let mut pick_deg = 0;
    for v in members(alive) {
        let d = count(g.row(v) & alive);
        if d > pick_deg {
            pick_deg = d;
            pick = Some(v);
        }
    }
    let Some(v) = pick else {
        *best = used;
        return;
    };
    let nb = g.row(v) & alive;
    cover_search(g, alive & !bit(v), used + 1, best);
    cover_search(g, alive & !nb & !bit(v), used + count(nb), best);
}

/// Every vertex cover (not only minimal ones) of size strictly below `bound`.
/// Output is sorted by set value.
pub fn covers_below(g: &Graph, bound: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if bound == 0 {
        return out;
    }
    covers_rec(g, 0, 0, 0, bound, &mut out);
    out.sort_unstable();
    out
}

fn covers_rec(
    g: &Graph,
    v: usize,
    chosen: VertexSet,
    excluded: VertexSet,
    bound: usize,
    out: &mut Vec<VertexSet>,
) {
    // Vertices forced in by an excluded neighbour but not yet decided.
    let pending = (0..g.order())
        .skip(v)
        .filter(|&u| g.row(u) & excluded != 0)
        .count();
    if count(chosen) + pending >= bound {
        return;
    }
    if v == g.order() {
        out.push(chosen);
        return;
    }
    let forced = g.row(v) & excluded != 0;
    covers_rec(g, v + 1, chosen | bit(v), excluded, bound, out);
    if !forced {
        covers_rec(g, v + 1, chosen, excluded | bit(v), bound, out);
    }
}

/// γ(G) together with every independent covering of that size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependentCovering {
    pub gamma: usize,
    pub coverings: Vec<VertexSet>,
}

/// Minimum independent coverings of a bipartite graph.
///
/// An independent covering meets each edge exactly once, so fixing one vertex
/// of a component propagates to the whole component: each non-trivial
/// component contributes one of its two color classes, and isolated vertices
/// are never needed.
pub fn independent_covering(g: &Graph) -> Result<IndependentCovering> {
    let coloring = two_coloring(g).ok_or(Error::NotBipartite)?;
    let mut options: Vec<Vec<VertexSet>> = Vec::new();
    let mut gamma = 0;
    for (x, y) in coloring {
        if count(x | y) == 1 {
            continue;
        }
        let (cx, cy) = (count(x), count(y));
        gamma += cx.min(cy);
        options.push(match cx.cmp(&cy) {
            std::cmp::Ordering::Less => vec![x],
            std::cmp::Ordering::Greater => vec![y],
            std::cmp::Ordering::Equal => vec![x, y],
        });
    }
    let mut coverings = vec![0];
    for opts in options {
        coverings = coverings
            .iter()
            .flat_map(|&c| opts.iter().map(move |&o| c | o))
            .collect();
    }
    coverings.sort_unstable();
    Ok(IndependentCovering { gamma, coverings })
}

/// The bipartition `V = A ∪ B` with `|A|` minimal and, subject to that,
/// `min{d(x) : x ∈ A}` minimal. Remaining ties go to the lexicographically
/// smallest `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub a: VertexSet,
    pub b: VertexSet,
}

impl Bipartition {
    pub fn a_vertices(&self) -> Vec<usize> {
        bits::to_vec(self.a)
    }

    pub fn b_vertices(&self) -> Vec<usize> {
        bits::to_vec(self.b)
    }

    /// `min{d(x) : x ∈ A}`, or `None` when `A` is empty.
    pub fn min_degree_in_a(&self, g: &Graph) -> Option<usize> {
        members(self.a).map(|v| g.degree(v)).min()
    }
}

pub fn bipartition(g: &Graph) -> Result<Bipartition> {
    let coloring = two_coloring(g).ok_or(Error::NotBipartite)?;
    let all = g.vertex_set();
    let mut fixed: VertexSet = 0;
    let mut ties: Vec<(VertexSet, VertexSet)> = Vec::new();
    for (x, y) in coloring {
        match count(x).cmp(&count(y)) {
            std::cmp::Ordering::Less => fixed |= x,
            std::cmp::Ordering::Greater => fixed |= y,
            std::cmp::Ordering::Equal => ties.push((x, y)),
        }
    }
    let min_deg = |s: VertexSet| members(s).map(|v| g.degree(v)).min().unwrap_or(usize::MAX);
    // Exhaustive over the orientation of equal-sized components.
    let mut best: Option<(usize, Vec<usize>, VertexSet)> = None;
    let mut choose = |a: VertexSet| {
        let key = (min_deg(a), bits::to_vec(a));
        let better = match &best {
            None => true,
            Some((d, v, _)) => (key.0, &key.1) < (*d, v),
        };
        if better {
            best = Some((key.0, key.1, a));
        }
    };
    if ties.len() > 24 {
        return Err(Error::Capacity(format!(
            "{} equal-sized components in bipartition search",
            ties.len()
        )));
    }
    for mask in 0u32..(1u32 << ties.len()) {
        let mut a = fixed;
        for (i, &(x, y)) in ties.iter().enumerate() {
            a |= if mask & (1 << i) == 0 { x } else { y };
        }
        choose(a);
    }
    let a = best.map(|b| b.2).unwrap_or(fixed);
    Ok(Bipartition { a, b: all & !a })
}
