use oddballoon::graph::{io, Graph};
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "oddballoon.report/1";

/// Everything a command produces, before formatting.
pub struct Outcome {
    pub command: &'static str,
    pub inputs: Value,
    pub output: Value,
    pub text: String,
    /// Graphs available to the graph6 and DOT exporters.
    pub graphs: Vec<(String, Graph)>,
    /// False when a check the command performs did not pass.
    pub passed: bool,
}

#[derive(Debug, Serialize)]
pub struct Report<'a> {
    pub schema: &'static str,
    pub version: &'static str,
    pub command: &'a str,
    pub inputs: &'a Value,
    pub output: &'a Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl Outcome {
    pub fn json(&self, timing_ms: Option<u128>) -> String {
        let report = Report {
            schema: SCHEMA,
            version: env!("CARGO_PKG_VERSION"),
            command: self.command,
            inputs: &self.inputs,
            output: &self.output,
            timing_ms,
        };
        let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn graph6(&self) -> Option<String> {
        if self.graphs.is_empty() {
            return None;
        }
        Some(self.graphs.iter().map(|(_, g)| io::to_graph6(g) + "\n").collect())
    }

    pub fn dot(&self) -> Option<String> {
        if self.graphs.is_empty() {
            return None;
        }
        Some(self.graphs.iter().map(|(name, g)| io::to_dot(g, name)).collect())
    }
}
