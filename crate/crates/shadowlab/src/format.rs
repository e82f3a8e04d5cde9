//! Hypergraph file formats.
//!
//! Text: optional '#' comment lines, a "k n m" header, then m lines of k
//! space-separated increasing vertex ids. JSON mirror:
//! {"k":.., "n":.., "edges":[[..],..]}. Both round-trip bit-exactly.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub fn to_text(h: &Hypergraph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {} {}", h.k(), h.n(), h.len()).unwrap();
    for e in h.edges() {
        let vs: Vec<String> = e.vertices().iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", vs.join(" ")).unwrap();
    }
    out
}

pub fn from_text(input: &str) -> Result<Hypergraph> {
    let mut header: Option<(u32, u32, usize)> = None;
    let mut edges: Vec<Vec<u32>> = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        match header {
            None => {
                if fields.len() != 3 {
                    return Err(Error::Parse {
                        line,
                        msg: format!("expected header \"k n m\", got {content:?}"),
                    });
                }
                let parse = |s: &str, what: &str| {
                    s.parse::<u64>().map_err(|_| Error::Parse {
                        line,
                        msg: format!("bad {what} {s:?}"),
                    })
                };
                let k = parse(fields[0], "uniformity")? as u32;
                let n = parse(fields[1], "universe size")? as u32;
                let m = parse(fields[2], "edge count")? as usize;
                header = Some((k, n, m));
            }
            Some((k, _, _)) => {
                if fields.len() != k as usize {
                    return Err(Error::Parse {
                        line,
                        msg: format!("expected {k} vertices, got {}", fields.len()),
                    });
                }
                let mut vs = Vec::with_capacity(fields.len());
                for f in fields {
                    vs.push(f.parse::<u32>().map_err(|_| Error::Parse {
                        line,
                        msg: format!("bad vertex id {f:?}"),
                    })?);
                }
                edges.push(vs);
            }
        }
    }
    let (k, n, m) = header.ok_or(Error::Parse { line: 0, msg: "missing header".into() })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: 0,
            msg: format!("header promises {m} edges, found {}", edges.len()),
        });
    }
    Hypergraph::from_edge_lists(k, n, &edges)
}

#[derive(Serialize, Deserialize)]
struct HypergraphJson {
    k: u32,
    n: u32,
    edges: Vec<Vec<u32>>,
}

pub fn to_json(h: &Hypergraph) -> String {
    let mirror = HypergraphJson {
        k: h.k(),
        n: h.n(),
        edges: h.edges().iter().map(|e| e.vertices()).collect(),
    };
    serde_json::to_string(&mirror).expect("hypergraph serializes")
}

pub fn from_json(input: &str) -> Result<Hypergraph> {
    let mirror: HypergraphJson = serde_json::from_str(input)?;
    Hypergraph::from_edge_lists(mirror.k, mirror.n, &mirror.edges)
}
