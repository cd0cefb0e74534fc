use std::fs;
use std::path::Path;

use oddballoon::ballooning::BallooningSpec;
use oddballoon::graph::{io, make_named, Graph, NamedGraph};
use oddballoon::Result;

/// Named constructor, then file, then graph6.
pub fn parse_graph(text: &str) -> Result<Graph> {
    match text.parse::<NamedGraph>() {
        Ok(kind) => return make_named(kind),
        Err(e) if text.contains(':') => return Err(e),
        Err(_) => {}
    }
    let path = Path::new(text);
    if path.is_file() {
        let body = fs::read_to_string(path)?;
        return match body.trim() {
            line if !line.contains(char::is_whitespace) && !line.is_empty() => io::from_graph6(line),
            _ => io::from_edge_list(&body),
        };
    }
    io::from_graph6(text)
}

pub fn spec(graph: &str, t: usize, lengths: Option<&[usize]>) -> Result<BallooningSpec> {
    let base = parse_graph(graph)?;
    match lengths {
        Some(ls) => BallooningSpec::with_lengths(base, t, ls.to_vec()),
        None => BallooningSpec::new(base, t),
    }
}
