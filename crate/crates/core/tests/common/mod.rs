#![allow(dead_code)]

use oddballoon::graph::{make_named, Graph};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn named(s: &str) -> Graph {
    make_named(s.parse().unwrap()).unwrap()
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Injective edge-preserving maps by plain backtracking, no pruning.
pub fn brute_force_contains(host: &Graph, pattern: &Graph) -> bool {
    fn extend(host: &Graph, pattern: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let v = map.len();
        if v == pattern.order() {
            return true;
        }
        for x in 0..host.order() {
            if used[x] {
                continue;
            }
            if (0..v).any(|u| pattern.has_edge(u, v) && !host.has_edge(map[u], x)) {
                continue;
            }
            used[x] = true;
            map.push(x);
            if extend(host, pattern, map, used) {
                return true;
            }
            map.pop();
            used[x] = false;
        }
        false
    }
    pattern.order() <= host.order()
        && extend(host, pattern, &mut Vec::new(), &mut vec![false; host.order()])
}
