//! Text formats: DIMACS edge lists and JSON for graphs, set systems, spaces, measures
//! and decompositions.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::blowup::{BlowupDecomposition, ObstructionCertificate};
use crate::convexity::{explicit_space, mis_space, subcube_space, ConvexitySpace, Measure};
use crate::budget::SearchBudget;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::rational::parse_rational;
use crate::setsystem::SetSystem;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SetSystemJson {
    ground: usize,
    sets: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
enum SpaceJson {
    Graph { graph: GraphJson },
    Subcube { n: usize },
    Explicit { ground: usize, sets: Vec<Vec<usize>> },
}

#[derive(Deserialize)]
#[serde(untagged)]
enum MeasureJson {
    Wrapped { weights: Vec<String> },
    Bare(Vec<String>),
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    }
}

fn graph_from_parsed(g: GraphJson) -> Result<Graph> {
    for &(u, v) in &g.edges {
        if u == v {
            return Err(Error::SelfLoop { line: 0, vertex: u });
        }
        if u >= g.n || v >= g.n {
            return Err(Error::Invalid(format!("edge ({u}, {v}) outside 0..{}", g.n)));
        }
    }
    Graph::from_edges(g.n, &g.edges)
}

pub fn graph_to_value(g: &Graph) -> Value {
    json!({"n": g.n(), "edges": g.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>()})
}

pub fn graph_from_value(v: &Value) -> Result<Graph> {
    graph_from_parsed(GraphJson::deserialize(v).map_err(json_err)?)
}

/// `{"n": n, "edges": [[u, v], …]}` with 0-indexed vertices.
pub fn graph_to_json(g: &Graph) -> String {
    graph_to_value(g).to_string()
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    graph_from_parsed(serde_json::from_str(text).map_err(json_err)?)
}

/// DIMACS edge format with 1-indexed vertices.
pub fn graph_to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

pub fn graph_from_dimacs(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let parse_err = |msg: String| Error::Parse { line, msg };
        let toks: Vec<&str> = raw.split_whitespace().collect();
        match toks.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if n.is_some() {
                    return Err(parse_err("second problem line".into()));
                }
                if toks.len() != 4 || !matches!(toks[1], "edge" | "col") {
                    return Err(parse_err(format!("expected `p edge <n> <m>`, found `{}`", raw.trim())));
                }
                n = Some(toks[2].parse().map_err(|_| parse_err(format!("bad vertex count `{}`", toks[2])))?);
                toks[3].parse::<usize>().map_err(|_| parse_err(format!("bad edge count `{}`", toks[3])))?;
            }
            Some("e") => {
                if toks.len() != 3 {
                    return Err(parse_err(format!("expected `e <u> <v>`, found `{}`", raw.trim())));
                }
                let mut ends = [0usize; 2];
                for (k, t) in toks[1..].iter().enumerate() {
                    ends[k] = t.parse().map_err(|_| parse_err(format!("bad vertex `{t}`")))?;
                    if ends[k] == 0 {
                        return Err(parse_err("vertices are numbered from 1".into()));
                    }
                }
                if ends[0] == ends[1] {
                    return Err(Error::SelfLoop {
                        line,
                        vertex: ends[0] - 1,
                    });
                }
                let Some(n) = n else {
                    return Err(parse_err("edge before the problem line".into()));
                };
                if ends[0] > n || ends[1] > n {
                    return Err(parse_err(format!("edge ({}, {}) outside 1..={n}", ends[0], ends[1])));
                }
                edges.push((ends[0] - 1, ends[1] - 1));
            }
            Some(other) => return Err(parse_err(format!("unknown line type `{other}`"))),
        }
    }
    let n = n.ok_or(Error::Parse {
        line: text.lines().count(),
        msg: "missing `p edge` line".into(),
    })?;
    Graph::from_edges(n, &edges)
}

/// Either format, recognised by a leading `{`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        graph_from_json(text)
    } else {
        graph_from_dimacs(text)
    }
}

pub fn set_system_to_value(f: &SetSystem) -> Value {
    serde_json::to_value(SetSystemJson {
        ground: f.ground_size(),
        sets: f.sets().iter().map(|s| s.to_vec()).collect(),
        labels: f.labels().map(<[String]>::to_vec),
    })
    .expect("set systems serialise")
}

/// `{"ground": m, "sets": [[…], …], "labels": [...]?}`.
pub fn set_system_from_json(text: &str) -> Result<SetSystem> {
    let raw: SetSystemJson = serde_json::from_str(text).map_err(json_err)?;
    SetSystem::new(raw.ground, raw.sets.into_iter().map(VertexSet::new).collect(), raw.labels)
}

/// `{"kind": "graph", "graph": {…}}`, `{"kind": "subcube", "n": k}` or
/// `{"kind": "explicit", "ground": m, "sets": [[…], …]}`.
pub fn space_from_json(text: &str, budget: SearchBudget) -> Result<ConvexitySpace> {
    match serde_json::from_str::<SpaceJson>(text).map_err(json_err)? {
        SpaceJson::Graph { graph } => mis_space(&graph_from_parsed(graph)?, budget),
        SpaceJson::Subcube { n } => subcube_space(n),
        SpaceJson::Explicit { ground, sets } => Ok(explicit_space(SetSystem::new(
            ground,
            sets.into_iter().map(VertexSet::new).collect(),
            None,
        )?)),
    }
}

/// `{"weights": ["P/Q", …]}` or a bare array of `P/Q` strings.
pub fn measure_from_json(text: &str) -> Result<Measure> {
    let weights = match serde_json::from_str::<MeasureJson>(text).map_err(json_err)? {
        MeasureJson::Wrapped { weights } | MeasureJson::Bare(weights) => weights,
    };
    Measure::new(weights.iter().map(|w| parse_rational(w)).collect::<Result<_>>()?)
}

/// `{"parts": [[…], …], "quotient": graph-json, "origin": […]}`.
pub fn decomposition_to_value(d: &BlowupDecomposition) -> Value {
    json!({
        "parts": d.parts,
        "quotient": graph_to_value(&d.quotient),
        "origin": d.origin,
    })
}

pub fn decomposition_from_value(v: &Value, g: &Graph) -> Result<BlowupDecomposition> {
    let origin: Vec<Vertex> = v
        .get("origin")
        .cloned()
        .map(serde_json::from_value)
        .transpose()
        .map_err(json_err)?
        .ok_or_else(|| Error::Invalid("decomposition has no origin".into()))?;
    let d = BlowupDecomposition::from_origin(g, origin)?;
    if let Some(q) = v.get("quotient") {
        if graph_from_value(q)? != d.quotient {
            return Err(Error::Invalid("quotient does not match the origin map".into()));
        }
    }
    Ok(d)
}

pub fn obstruction_to_value(c: &ObstructionCertificate) -> Value {
    json!({
        "core": c.core,
        "links": c.links.iter().map(|(&(u, v), &(y, z))| json!({"u": u, "v": v, "path": [u, y, z, v]})).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cycle, path};

    #[test]
    fn dimacs_examples() {
        assert_eq!(parse_graph("p edge 3 2\ne 1 2\ne 2 3\n").unwrap(), path(3));
        assert_eq!(parse_graph("c hi\np edge 3 3\ne 1 2\ne 2 1\ne 2 3\n").unwrap(), path(3));
        assert_eq!(parse_graph("e 1 1"), Err(Error::SelfLoop { line: 1, vertex: 0 }));
        assert!(matches!(parse_graph("p edge 2 1\ne 1 3"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn json_examples() {
        let c5 = parse_graph(r#"{"n":5,"edges":[[0,1],[1,2],[2,3],[3,4],[4,0]]}"#).unwrap();
        assert_eq!(c5, cycle(5));
        assert!(matches!(parse_graph(r#"{"n":2,"edges":[[1,1]]}"#), Err(Error::SelfLoop { .. })));
    }

    #[test]
    fn round_trips() {
        let g = cycle(7);
        assert_eq!(graph_from_json(&graph_to_json(&g)).unwrap(), g);
        assert_eq!(graph_from_dimacs(&graph_to_dimacs(&g)).unwrap(), g);
        let f = crate::setsystem::neighborhood_system(&g);
        let back = set_system_from_json(&set_system_to_value(&f).to_string()).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn spaces_and_measures() {
        let s = space_from_json(r#"{"kind":"subcube","n":2}"#, SearchBudget::UNLIMITED).unwrap();
        assert_eq!(s.ground_len(), 4);
        let m = measure_from_json(r#"{"weights":["1/2","1/4","1/4"]}"#).unwrap();
        assert_eq!(m.weights().len(), 3);
        assert!(measure_from_json(r#"["1/2"]"#).is_err());
    }
}
