//! File formats: DIMACS `.col` graphs with a JSON sidecar for labels and
//! provenance, a single-file JSON graph format, and JSON encodings of set
//! systems and colorings.
//!
//! Exports are canonical byte-for-byte: re-importing and re-exporting any
//! file produced here reproduces it exactly.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::IoError;
use crate::families::SetSystem;
use crate::graph::{Graph, Provenance};
use crate::solve::Coloring;

/// Graph serialization format selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    /// DIMACS `.col` plus a JSON sidecar next to it.
    Dimacs,
    /// Single JSON file with vertices, edges, labels, provenance.
    Json,
}

impl std::str::FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "dimacs" => Ok(GraphFormat::Dimacs),
            "json" => Ok(GraphFormat::Json),
            other => Err(format!("unknown format {other:?} (expected dimacs or json)")),
        }
    }
}

/// Renders the graph in DIMACS `.col` form: a `p edge n m` line followed by
/// one-based `e u v` lines in lexicographic order.
pub fn to_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "p edge {} {}\n",
        g.vertex_count(),
        g.edge_count()
    ));
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct Sidecar {
    labels: Vec<String>,
    provenance: Provenance,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertex_count: usize,
    labels: Vec<String>,
    /// One-based endpoint pairs, lexicographic.
    edges: Vec<(usize, usize)>,
    provenance: Provenance,
}

fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|v| v.to_string()).collect()
}

/// Parses DIMACS `.col` text. Comment lines are tolerated; loops are not.
/// Labels default to the one-based vertex numbers unless a sidecar is read
/// separately.
pub fn from_dimacs(text: &str) -> Result<Graph, IoError> {
    let mut n: Option<usize> = None;
    let mut declared_edges = 0usize;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("p") => {
                if n.is_some() {
                    return Err(IoError::Format(format!(
                        "line {}: repeated problem line",
                        lineno + 1
                    )));
                }
                let kind = parts.next().unwrap_or("");
                if kind != "edge" && kind != "col" {
                    return Err(IoError::Format(format!(
                        "line {}: expected 'p edge', got 'p {kind}'",
                        lineno + 1
                    )));
                }
                let nv = parse_field(parts.next(), lineno)?;
                declared_edges = parse_field(parts.next(), lineno)?;
                n = Some(nv);
            }
            Some("e") => {
                let u: usize = parse_field(parts.next(), lineno)?;
                let v: usize = parse_field(parts.next(), lineno)?;
                let n = n.ok_or_else(|| {
                    IoError::Format(format!("line {}: edge before problem line", lineno + 1))
                })?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(IoError::Format(format!(
                        "line {}: endpoint outside 1..={n}",
                        lineno + 1
                    )));
                }
                if u == v {
                    return Err(IoError::Format(format!(
                        "line {}: loop at vertex {u}",
                        lineno + 1
                    )));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(IoError::Format(format!(
                    "line {}: unknown record {other:?}",
                    lineno + 1
                )));
            }
            None => {}
        }
    }
    let n = n.ok_or_else(|| IoError::Format("missing problem line".into()))?;
    let g = Graph::from_edges(default_labels(n), &edges, Provenance::new("imported"))?;
    if g.edge_count() != declared_edges {
        return Err(IoError::Format(format!(
            "problem line declares {declared_edges} edges but file defines {}",
            g.edge_count()
        )));
    }
    Ok(g)
}

fn parse_field(field: Option<&str>, lineno: usize) -> Result<usize, IoError> {
    field
        .and_then(|f| f.parse().ok())
        .ok_or_else(|| IoError::Format(format!("line {}: malformed number", lineno + 1)))
}

/// Sidecar path convention: the graph path with its extension replaced by
/// `json`.
pub fn sidecar_path(path: &Path) -> PathBuf {
    path.with_extension("json")
}

/// Writes the graph at `path` in the chosen format. DIMACS writes the `.col`
/// file plus the sidecar carrying labels and provenance.
pub fn export_graph(g: &Graph, path: &Path, format: GraphFormat) -> Result<(), IoError> {
    match format {
        GraphFormat::Dimacs => {
            fs::write(path, to_dimacs(g))?;
            let sidecar = Sidecar {
                labels: g.labels().to_vec(),
                provenance: g.provenance().clone(),
            };
            let mut json = serde_json::to_string_pretty(&sidecar)?;
            json.push('\n');
            fs::write(sidecar_path(path), json)?;
        }
        GraphFormat::Json => {
            let body = GraphJson {
                vertex_count: g.vertex_count(),
                labels: g.labels().to_vec(),
                edges: g.edges().iter().map(|&(u, v)| (u + 1, v + 1)).collect(),
                provenance: g.provenance().clone(),
            };
            let mut json = serde_json::to_string_pretty(&body)?;
            json.push('\n');
            fs::write(path, json)?;
        }
    }
    Ok(())
}

fn rebuild(labels: Vec<String>, edges: &[(usize, usize)], prov: Provenance) -> Result<Graph, IoError> {
    Ok(Graph::from_edges(labels, edges, prov)?)
}

/// Reads a graph written by [`export_graph`]. For DIMACS the sidecar is
/// applied when present and consistent.
pub fn import_graph(path: &Path, format: GraphFormat) -> Result<Graph, IoError> {
    match format {
        GraphFormat::Dimacs => {
            let g = from_dimacs(&fs::read_to_string(path)?)?;
            let sidecar = sidecar_path(path);
            if sidecar.exists() {
                let parsed: Sidecar = serde_json::from_str(&fs::read_to_string(sidecar)?)?;
                if parsed.labels.len() != g.vertex_count() {
                    return Err(IoError::Format(format!(
                        "sidecar has {} labels for {} vertices",
                        parsed.labels.len(),
                        g.vertex_count()
                    )));
                }
                return rebuild(parsed.labels, &g.edges(), parsed.provenance);
            }
            Ok(g)
        }
        GraphFormat::Json => {
            let body: GraphJson = serde_json::from_str(&fs::read_to_string(path)?)?;
            if body.labels.len() != body.vertex_count {
                return Err(IoError::Format(format!(
                    "{} labels for {} vertices",
                    body.labels.len(),
                    body.vertex_count
                )));
            }
            let edges: Vec<(usize, usize)> = body
                .edges
                .iter()
                .map(|&(u, v)| {
                    if u == 0 || v == 0 || u > body.vertex_count || v > body.vertex_count {
                        Err(IoError::Format(format!("edge ({u},{v}) out of range")))
                    } else {
                        Ok((u - 1, v - 1))
                    }
                })
                .collect::<Result<_, _>>()?;
            rebuild(body.labels, &edges, body.provenance)
        }
    }
}

/// Detects the format from the file extension: `.json` means the JSON graph
/// format, anything else DIMACS.
pub fn detect_format(path: &Path) -> GraphFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some("json") => GraphFormat::Json,
        _ => GraphFormat::Dimacs,
    }
}

#[derive(Serialize, Deserialize)]
struct SetSystemJson {
    ground: usize,
    sets: Vec<Vec<usize>>,
}

/// Renders a set system as `{"ground": n, "sets": [[...], ...]}` with
/// one-based elements.
pub fn set_system_to_json(system: &SetSystem) -> String {
    let body = SetSystemJson {
        ground: system.ground_size(),
        sets: (0..system.len())
            .map(|i| system.member_elements(i))
            .collect(),
    };
    let mut json = serde_json::to_string_pretty(&body).expect("plain data serializes");
    json.push('\n');
    json
}

pub fn set_system_from_json(text: &str) -> Result<SetSystem, IoError> {
    let body: SetSystemJson = serde_json::from_str(text)?;
    Ok(SetSystem::from_sets(body.ground, &body.sets)?)
}

pub fn read_set_system(path: &Path) -> Result<SetSystem, IoError> {
    set_system_from_json(&fs::read_to_string(path)?)
}

pub fn coloring_to_json(c: &Coloring) -> String {
    let mut json = serde_json::to_string_pretty(c).expect("coloring serializes");
    json.push('\n');
    json
}

pub fn coloring_from_json(text: &str) -> Result<Coloring, IoError> {
    Ok(serde_json::from_str(text)?)
}

pub fn read_coloring(path: &Path) -> Result<Coloring, IoError> {
    coloring_from_json(&fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_kneser, build_rational_complete};

    #[test]
    fn dimacs_of_a_single_edge() {
        let g = build_kneser(2, 1).unwrap();
        assert_eq!(to_dimacs(&g), "p edge 2 1\ne 1 2\n");
    }

    #[test]
    fn dimacs_of_edgeless_graph() {
        let g = Graph::new(
            vec!["a".into(), "b".into(), "c".into()],
            Provenance::new("edgeless"),
        )
        .unwrap();
        assert_eq!(to_dimacs(&g), "p edge 3 0\n");
    }

    #[test]
    fn petersen_has_fifteen_sorted_edge_lines() {
        let g = build_kneser(5, 2).unwrap();
        let text = to_dimacs(&g);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 16);
        assert_eq!(lines[0], "p edge 10 15");
        let pairs: Vec<(usize, usize)> = lines[1..]
            .iter()
            .map(|l| {
                let mut it = l.split_whitespace().skip(1);
                (
                    it.next().unwrap().parse().unwrap(),
                    it.next().unwrap().parse().unwrap(),
                )
            })
            .collect();
        let mut sorted = pairs.clone();
        sorted.sort_unstable();
        assert_eq!(pairs, sorted);
    }

    #[test]
    fn dimacs_text_round_trip() {
        let g = build_rational_complete(7, 2).unwrap();
        let text = to_dimacs(&g);
        let h = from_dimacs(&text).unwrap();
        assert_eq!(to_dimacs(&h), text);
        assert_eq!(h.edge_count(), g.edge_count());
    }

    #[test]
    fn dimacs_rejects_malformed_input() {
        assert!(from_dimacs("e 1 2\n").is_err());
        assert!(from_dimacs("p edge 2 1\ne 1 1\n").is_err());
        assert!(from_dimacs("p edge 2 1\ne 1 3\n").is_err());
        assert!(from_dimacs("p edge 2 2\ne 1 2\n").is_err());
        assert!(from_dimacs("q edge 2 1\n").is_err());
    }

    #[test]
    fn file_round_trip_is_byte_identical() {
        let dir = tempfile::tempdir().unwrap();
        let g = build_kneser(5, 2).unwrap();

        let col = dir.path().join("g.col");
        export_graph(&g, &col, GraphFormat::Dimacs).unwrap();
        let first = fs::read(&col).unwrap();
        let first_sidecar = fs::read(sidecar_path(&col)).unwrap();
        let imported = import_graph(&col, GraphFormat::Dimacs).unwrap();
        assert_eq!(imported, g);
        assert_eq!(imported.provenance(), g.provenance());
        export_graph(&imported, &col, GraphFormat::Dimacs).unwrap();
        assert_eq!(fs::read(&col).unwrap(), first);
        assert_eq!(fs::read(sidecar_path(&col)).unwrap(), first_sidecar);

        let json = dir.path().join("g.json");
        export_graph(&g, &json, GraphFormat::Json).unwrap();
        let first = fs::read(&json).unwrap();
        let imported = import_graph(&json, GraphFormat::Json).unwrap();
        assert_eq!(imported, g);
        export_graph(&imported, &json, GraphFormat::Json).unwrap();
        assert_eq!(fs::read(&json).unwrap(), first);
    }

    #[test]
    fn set_system_json_round_trip() {
        let f = SetSystem::from_sets(5, &[vec![1, 2], vec![3, 4], vec![2, 5]]).unwrap();
        let json = set_system_to_json(&f);
        let g = set_system_from_json(&json).unwrap();
        assert_eq!(f, g);
        assert!(json.contains("\"ground\": 5"));
    }

    #[test]
    fn coloring_json_round_trip() {
        let c = Coloring::new(3, vec![1, 2, 3, 1]).unwrap();
        let json = coloring_to_json(&c);
        assert_eq!(coloring_from_json(&json).unwrap(), c);
        assert!(coloring_from_json("{\"palette\":2,\"colors\":[3]}").is_err());
    }
}
