//! Named graph families with fixed vertex labelings.
//!
//! Labelings:
//! * `Path(n)`: `0 - 1 - … - n-1`.
//! * `Cycle(n)`: the path plus the edge `n-1 - 0`.
//! * `Star(a)`: center `0`, leaves `1..=a` (order `a + 1`).
//! * `Complete(n)`: all pairs.
//! * `CompleteBipartite(a, b)`: class `0..a` and class `a..a+b`.
//! * `CompleteMultipartite(parts)`: consecutive blocks in the given order.
//! * `Independent(n)`: no edges.
//! * `Turan { parts, n }`: complete multipartite with `n mod parts` leading
//!   parts of size `⌈n/parts⌉` followed by parts of size `⌊n/parts⌋`.

use std::fmt;
use std::str::FromStr;

use super::{bits, Graph};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedGraph {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    CompleteMultipartite(Vec<usize>),
    Independent(usize),
    Turan { parts: usize, n: usize },
}

pub fn make_named(kind: NamedGraph) -> Result<Graph> {
    match kind {
        NamedGraph::Path(n) => {
            positive("path order", n)?;
            let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            Graph::from_edges(n, &edges)
        }
        NamedGraph::Cycle(n) => {
            if n < 3 {
                return Err(Error::InvalidParameter(format!(
                    "cycle order must be at least 3, got {n}"
                )));
            }
            let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            edges.push((n - 1, 0));
            Graph::from_edges(n, &edges)
        }
        NamedGraph::Star(a) => {
            positive("star size", a)?;
            let edges: Vec<_> = (1..=a).map(|v| (0, v)).collect();
            Graph::from_edges(a + 1, &edges)
        }
        NamedGraph::Complete(n) => {
            positive("complete order", n)?;
            multipartite(&vec![1; n])
        }
        NamedGraph::CompleteBipartite(a, b) => {
            positive("class size", a)?;
            positive("class size", b)?;
            multipartite(&[a, b])
        }
        NamedGraph::CompleteMultipartite(parts) => {
            if parts.is_empty() {
                return Err(Error::InvalidParameter("no parts given".into()));
            }
            for &p in &parts {
                positive("part size", p)?;
            }
            multipartite(&parts)
        }
        NamedGraph::Independent(n) => Graph::empty(n),
        NamedGraph::Turan { parts, n } => {
            positive("number of parts", parts)?;
            multipartite(&turan_parts(parts, n))
        }
    }
}

/// Part sizes of `T_p(n)`, larger parts first.
pub fn turan_parts(p: usize, n: usize) -> Vec<usize> {
    let (q, r) = (n / p, n % p);
    (0..p).map(|i| if i < r { q + 1 } else { q }).collect()
}

fn multipartite(parts: &[usize]) -> Result<Graph> {
    let n: usize = parts.iter().sum();
    let mut g = Graph::empty(n)?;
    let all = bits::full(n);
    let mut start = 0;
    for &p in parts {
        let block = bits::full(start + p) & !bits::full(start);
        for v in start..start + p {
            g.adj[v] = all & !block;
        }
        start += p;
    }
    Ok(g)
}

fn positive(what: &str, x: usize) -> Result<()> {
    if x == 0 {
        Err(Error::InvalidParameter(format!("{what} must be positive")))
    } else {
        Ok(())
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    /// Parses `kind:p1,p2,…`, e.g. `star:3`, `path:5`, `cycle:4`, `kbip:2,3`,
    /// `complete:4`, `multi:2,2,2`, `empty:4`, `turan:2,7`. `triangle` is
    /// accepted as an alias for `complete:3`.
    fn from_str(s: &str) -> Result<NamedGraph> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("triangle") {
            return Ok(NamedGraph::Complete(3));
        }
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected kind:params, got {s:?}")))?;
        let params = rest
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad integer {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<usize>>>()?;
        let one = |name: &str| -> Result<usize> {
            match params.as_slice() {
                [x] => Ok(*x),
                _ => Err(Error::InvalidParameter(format!(
                    "{name} takes exactly one parameter"
                ))),
            }
        };
        let two = |name: &str| -> Result<(usize, usize)> {
            match params.as_slice() {
                [x, y] => Ok((*x, *y)),
                _ => Err(Error::InvalidParameter(format!(
                    "{name} takes exactly two parameters"
                ))),
            }
        };
        Ok(match kind.to_ascii_lowercase().as_str() {
            "path" => NamedGraph::Path(one("path")?),
            "cycle" => NamedGraph::Cycle(one("cycle")?),
            "star" => NamedGraph::Star(one("star")?),
            "complete" | "k" => NamedGraph::Complete(one("complete")?),
            "kbip" | "complete_bipartite" => {
                let (a, b) = two("kbip")?;
                NamedGraph::CompleteBipartite(a, b)
            }
            "multi" | "complete_multipartite" => NamedGraph::CompleteMultipartite(params),
            "empty" | "independent" => NamedGraph::Independent(one("independent")?),
            "turan" => {
                let (parts, n) = two("turan")?;
                NamedGraph::Turan { parts, n }
            }
            other => return Err(Error::Parse(format!("unknown graph kind {other:?}"))),
        })
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Path(n) => write!(f, "path:{n}"),
            NamedGraph::Cycle(n) => write!(f, "cycle:{n}"),
            NamedGraph::Star(a) => write!(f, "star:{a}"),
            NamedGraph::Complete(n) => write!(f, "complete:{n}"),
            NamedGraph::CompleteBipartite(a, b) => write!(f, "kbip:{a},{b}"),
            NamedGraph::CompleteMultipartite(p) => {
                let s: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                write!(f, "multi:{}", s.join(","))
            }
            NamedGraph::Independent(n) => write!(f, "empty:{n}"),
            NamedGraph::Turan { parts, n } => write!(f, "turan:{parts},{n}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_three() {
        let s = make_named(NamedGraph::Star(3)).unwrap();
        assert_eq!((s.order(), s.size()), (4, 3));
        assert_eq!(s.degrees().iter().filter(|&&d| d == 3).count(), 1);
    }

    #[test]
    fn turan_two_five_is_k23() {
        let t = make_named(NamedGraph::Turan { parts: 2, n: 5 }).unwrap();
        assert_eq!(t.size(), 6);
        let k = make_named(NamedGraph::CompleteBipartite(3, 2)).unwrap();
        assert_eq!(t, k);
    }

    #[test]
    fn octahedron() {
        let g = make_named(NamedGraph::CompleteMultipartite(vec![2, 2, 2])).unwrap();
        assert_eq!(g.size(), 12);
        assert_eq!(g, make_named(NamedGraph::Turan { parts: 3, n: 6 }).unwrap());
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(make_named(NamedGraph::Cycle(2)).is_err());
        assert!(make_named(NamedGraph::Path(0)).is_err());
        assert!(make_named(NamedGraph::CompleteMultipartite(vec![])).is_err());
        assert!(make_named(NamedGraph::CompleteMultipartite(vec![2, 0])).is_err());
        assert!(make_named(NamedGraph::Complete(129)).is_err());
        assert!("path:1,2".parse::<NamedGraph>().is_err());
        assert!("blob:3".parse::<NamedGraph>().is_err());
        assert!("star".parse::<NamedGraph>().is_err());
    }

    #[test]
    fn parse_round_trip() {
        for s in ["star:3", "path:5", "cycle:4", "kbip:2,3", "multi:2,2,2", "turan:2,7", "empty:4"] {
            let k: NamedGraph = s.parse().unwrap();
            assert_eq!(k.to_string(), s);
        }
        assert_eq!("triangle".parse::<NamedGraph>().unwrap(), NamedGraph::Complete(3));
    }
}
