//! Canonical labeling by individualization and refinement.
//!
//! The ordered partition is refined to an equitable one by splitting cells on
//! neighbour counts into every other cell. When refinement stalls, each vertex
//! of the first non-singleton cell is individualized in turn. Every leaf of the
//! search tree is a discrete partition, i.e. a relabeling; the canonical form
//! is the relabeled adjacency matrix that is lexicographically smallest over
//! all leaves. A leaf that reproduces the first or the best certificate
//! yields an automorphism mapping that earlier leaf's path onto the current
//! one, so the search backtracks to the level where the two paths diverge.
//! Stored automorphisms also prune sibling subtrees lying in the same orbit
//! of the stabilizer of the current prefix.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::bits::{bit, members, VertexSet};
use super::Graph;

/// Byte string identifying an isomorphism class.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.to_hex())
    }
}

const MAX_STORED_AUTOMORPHISMS: usize = 256;

type Cells = Vec<Vec<usize>>;

struct Leaf {
    cert: Vec<VertexSet>,
    order: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

/// Returns `(perm, key)` where `perm[v]` is the canonical position of `v`.
pub fn canonical_labeling(g: &Graph) -> (Vec<usize>, CanonicalKey) {
    let n = g.order();
    if n == 0 {
        return (Vec::new(), CanonicalKey(vec![0]));
    }
    let mut s = Search {
        g,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    let root = initial_partition(g);
    let mut prefix = Vec::new();
    s.search(root, &mut prefix);

    let best = s.best.expect("search reaches at least one leaf");
    let mut perm = vec![0; n];
    for (pos, &v) in best.order.iter().enumerate() {
        perm[v] = pos;
    }
    (perm, encode(n, &best.cert))
}

pub fn canonical_key(g: &Graph) -> CanonicalKey {
    canonical_labeling(g).1
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    let (perm, _) = canonical_labeling(g);
    g.permuted(&perm)
}

fn encode(n: usize, cert: &[VertexSet]) -> CanonicalKey {
    let width = n.div_ceil(8);
    let mut out = Vec::with_capacity(1 + n * width);
    out.push(n as u8);
    for row in cert {
        out.extend_from_slice(&row.to_le_bytes()[..width]);
    }
    CanonicalKey(out)
}

/// Cells by degree, ascending.
fn initial_partition(g: &Graph) -> Cells {
    let mut vs: Vec<usize> = (0..g.order()).collect();
    vs.sort_by_key(|&v| (g.degree(v), v));
    let mut cells: Cells = Vec::new();
    let mut last = None;
    for v in vs {
        let d = g.degree(v);
        if last == Some(d) {
            cells.last_mut().unwrap().push(v);
        } else {
            cells.push(vec![v]);
            last = Some(d);
        }
    }
    cells
}

fn compare_profiles(g: &Graph, masks: &[VertexSet], a: usize, b: usize) -> Ordering {
    let (ra, rb) = (g.row(a), g.row(b));
    for &m in masks {
        let c = (ra & m).count_ones().cmp(&(rb & m).count_ones());
        if c != Ordering::Equal {
            return c;
        }
    }
    Ordering::Equal
}

/// Refines to the coarsest equitable partition finer than `cells`.
fn refine(g: &Graph, mut cells: Cells) -> Cells {
    loop {
        let masks: Vec<VertexSet> = cells
            .iter()
            .map(|c| c.iter().fold(0, |m, &v| m | bit(v)))
            .collect();
        let mut next: Cells = Vec::with_capacity(cells.len());
        for mut cell in cells {
            if cell.len() == 1 {
                next.push(cell);
                continue;
            }
            cell.sort_by(|&a, &b| compare_profiles(g, &masks, a, b).then(a.cmp(&b)));
            let mut start = 0;
            for i in 1..=cell.len() {
                if i == cell.len()
                    || compare_profiles(g, &masks, cell[i - 1], cell[i]) != Ordering::Equal
                {
                    next.push(cell[start..i].to_vec());
                    start = i;
                }
            }
        }
        let split = next.len() != masks.len();
        cells = next;
        if !split {
            return cells;
        }
    }
}

impl Search<'_> {
    /// Returns `Some(d)` to abandon every node deeper than `d`.
    fn search(&mut self, cells: Cells, prefix: &mut Vec<usize>) -> Option<usize> {
        let cells = refine(self.g, cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&cells, prefix);
        };
        let candidates = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &candidates {
            if !explored.is_empty() && self.same_orbit_as_explored(prefix, v, &explored) {
                continue;
            }
            let mut child: Cells = Vec::with_capacity(cells.len() + 1);
            child.extend(cells[..target].iter().cloned());
            child.push(vec![v]);
            child.push(candidates.iter().copied().filter(|&u| u != v).collect());
            child.extend(cells[target + 1..].iter().cloned());
            prefix.push(v);
            let jump = self.search(child, prefix);
            prefix.pop();
            explored.push(v);
            if let Some(d) = jump {
                if d < prefix.len() {
                    return Some(d);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &Cells, prefix: &[usize]) -> Option<usize> {
        let n = self.g.order();
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let cert: Vec<VertexSet> = order
            .iter()
            .map(|&v| members(self.g.row(v)).fold(0, |r, u| r | bit(pos[u])))
            .collect();
        let leaf = Leaf {
            cert,
            order,
            path: prefix.to_vec(),
        };
        let Some(first) = &self.first else {
            self.first = Some(Leaf {
                cert: leaf.cert.clone(),
                order: leaf.order.clone(),
                path: leaf.path.clone(),
            });
            self.best = Some(leaf);
            return None;
        };
        if leaf.cert == first.cert {
            let gamma = automorphism(&first.order, &leaf.order);
            let jump = jump_depth(&gamma, &first.path, prefix);
            self.record(gamma);
            return jump;
        }
        let best = self.best.as_ref().expect("set with first");
        match leaf.cert.cmp(&best.cert) {
            Ordering::Less => {
                self.best = Some(leaf);
                None
            }
            Ordering::Equal => {
                let gamma = automorphism(&best.order, &leaf.order);
                let jump = jump_depth(&gamma, &best.path, prefix);
                self.record(gamma);
                jump
            }
            Ordering::Greater => None,
        }
    }

    fn record(&mut self, gamma: Vec<usize>) {
        if self.autos.len() < MAX_STORED_AUTOMORPHISMS
            && gamma.iter().enumerate().any(|(i, &x)| i != x)
        {
            self.autos.push(gamma);
        }
    }

    /// Whether `v` shares an orbit with an explored sibling under the known
    /// automorphisms that fix `prefix` pointwise.
    fn same_orbit_as_explored(&self, prefix: &[usize], v: usize, explored: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.autos {
            if prefix.iter().any(|&x| gamma[x] != x) {
                continue;
            }
            any = true;
            for (x, &y) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == rv)
    }
}

/// When `gamma` carries the earlier leaf's path onto `path`, the subtree
/// below the first differing vertex is the image of one already explored.
fn jump_depth(gamma: &[usize], earlier: &[usize], path: &[usize]) -> Option<usize> {
    if earlier.len() != path.len() || earlier.iter().zip(path).any(|(&a, &b)| gamma[a] != b) {
        return None;
    }
    Some(earlier.iter().zip(path).take_while(|(x, y)| x == y).count())
}

/// The permutation sending `from[i]` to `to[i]`.
fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut gamma = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        gamma[a] = b;
    }
    gamma
}
