//! wasm-bindgen bindings behind `www/index.html`.
//!
//! Every export takes graphs and orderings in the text formats of
//! `cocomp_core::format` and returns a JSON string. Vertex indices in the
//! JSON are 0-based ids into `labels`.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use cocomp_core::format::{format_ordering, parse_graph, parse_ordering, write_graph};
use cocomp_core::generators::{generate, GenSpec};
use cocomp_core::longest_path::{longest_path, DpOptions};
use cocomp_core::search::{ldfs_plus, min_path_cover};
use cocomp_core::{Graph, VertexOrdering};

/// Largest instance the page will run the table on.
pub const MAX_N: usize = 120;

#[derive(Serialize)]
struct Instance {
    labels: Vec<String>,
    edges: Vec<(usize, usize)>,
    ordering: Vec<usize>,
    graph_text: String,
    ordering_text: String,
}

#[derive(Serialize)]
struct CoverResult {
    sigma: Vec<usize>,
    paths: Vec<Vec<usize>>,
}

#[derive(Serialize)]
struct LongestResult {
    sigma: Vec<usize>,
    path: Vec<usize>,
    length: usize,
}

fn json<T: Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

fn load(graph_text: &str, ordering_text: &str) -> Result<(Graph, VertexOrdering), String> {
    let g = parse_graph(graph_text).map_err(|e| format!("graph: {e}"))?;
    let o = parse_ordering(&g, ordering_text).map_err(|e| format!("ordering: {e}"))?;
    Ok((g, o))
}

fn explain(g: &Graph, e: cocomp_core::Error) -> String {
    match e {
        cocomp_core::Error::Precondition(w) => format!("ordering rejected: {}", w.describe(g)),
        other => other.to_string(),
    }
}

pub fn generate_json(family: &str, n: usize, p: f64, seed: u64) -> Result<String, String> {
    if n > MAX_N {
        return Err(format!("n is capped at {MAX_N} in the browser"));
    }
    let family = family.parse().map_err(|e: cocomp_core::Error| e.to_string())?;
    let (g, o) = generate(&GenSpec::new(family, n, p, seed)).map_err(|e| e.to_string())?;
    json(&Instance {
        labels: g.labels().to_vec(),
        edges: g.edges().collect(),
        ordering: o.sequence().to_vec(),
        graph_text: write_graph(&g),
        ordering_text: format_ordering(&g, &o),
    })
}

/// Same shape as [`generate_json`], for hand-edited text.
pub fn parse_json(graph_text: &str, ordering_text: &str) -> Result<String, String> {
    let (g, o) = load(graph_text, ordering_text)?;
    json(&Instance {
        labels: g.labels().to_vec(),
        edges: g.edges().collect(),
        ordering: o.sequence().to_vec(),
        graph_text: graph_text.to_string(),
        ordering_text: ordering_text.to_string(),
    })
}

pub fn min_path_cover_json(graph_text: &str, ordering_text: &str) -> Result<String, String> {
    let (g, pi) = load(graph_text, ordering_text)?;
    let cover = min_path_cover(&g, &pi).map_err(|e| explain(&g, e))?;
    cover.check(&g).map_err(|v| v.to_string())?;
    let sigma = ldfs_plus(&g, &pi).map_err(|e| e.to_string())?;
    json(&CoverResult {
        sigma: sigma.into_sequence(),
        paths: cover.paths().iter().map(|p| p.vertices().to_vec()).collect(),
    })
}

pub fn longest_path_json(graph_text: &str, ordering_text: &str) -> Result<String, String> {
    let (g, pi) = load(graph_text, ordering_text)?;
    if g.n() > MAX_N {
        return Err(format!("n is capped at {MAX_N} in the browser"));
    }
    let r = longest_path(&g, &pi, &DpOptions::default()).map_err(|e| explain(&g, e))?;
    r.path.check(&g).map_err(|v| v.to_string())?;
    json(&LongestResult {
        length: r.path.len(),
        sigma: r.sigma.into_sequence(),
        path: r.path.into_vertices(),
    })
}

#[wasm_bindgen(js_name = generateInstance)]
pub fn generate_instance(family: &str, n: usize, p: f64, seed: u64) -> Result<String, JsError> {
    generate_json(family, n, p, seed).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = parseInstance)]
pub fn parse_instance(graph_text: &str, ordering_text: &str) -> Result<String, JsError> {
    parse_json(graph_text, ordering_text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = minPathCover)]
pub fn min_path_cover_js(graph_text: &str, ordering_text: &str) -> Result<String, JsError> {
    min_path_cover_json(graph_text, ordering_text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = longestPath)]
pub fn longest_path_js(graph_text: &str, ordering_text: &str) -> Result<String, JsError> {
    longest_path_json(graph_text, ordering_text).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    #[test]
    fn generate_round_trips_through_text() {
        let v: Value = serde_json::from_str(&generate_json("interval", 9, 0.4, 3).unwrap()).unwrap();
        let g = parse_graph(v["graph_text"].as_str().unwrap()).unwrap();
        assert_eq!(g.n(), 9);
        assert_eq!(g.edge_count(), v["edges"].as_array().unwrap().len());
        assert_eq!(v["ordering"].as_array().unwrap().len(), 9);
    }

    #[test]
    fn parse_keeps_labels() {
        let v: Value = serde_json::from_str(&parse_json("x y\ny z\n", "z y x").unwrap()).unwrap();
        assert_eq!(v["labels"], serde_json::json!(["x", "y", "z"]));
        assert_eq!(v["edges"], serde_json::json!([[0, 1], [1, 2]]));
        assert_eq!(v["ordering"], serde_json::json!([2, 1, 0]));
    }

    #[test]
    fn cover_and_longest_on_p4() {
        let g = "p 4 3\ne 1 2\ne 2 3\ne 3 4\n";
        let c: Value = serde_json::from_str(&min_path_cover_json(g, "1 2 3 4").unwrap()).unwrap();
        assert_eq!(c["paths"].as_array().unwrap().len(), 1);
        let l: Value = serde_json::from_str(&longest_path_json(g, "1 2 3 4").unwrap()).unwrap();
        assert_eq!(l["length"], 4);
        assert_eq!(l["sigma"], serde_json::json!([3, 2, 1, 0]));
    }

    #[test]
    fn errors_are_messages() {
        let e = longest_path_json("p 3 1\ne 1 3\n", "1 2 3").unwrap_err();
        assert!(e.contains("umbrella"), "{e}");
        assert!(generate_json("chordal", 3, 0.5, 0).is_err());
        assert!(generate_json("interval", MAX_N + 1, 0.5, 0).is_err());
        assert!(min_path_cover_json("p 2 0\n", "1").is_err());
    }
}
