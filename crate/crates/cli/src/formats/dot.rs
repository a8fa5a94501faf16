use std::fmt::Write;

use optimal1p::embedding::Color;
use optimal1p::{DynamicGraph, EmbeddedGraph, VertexId};

/// DOT for a graph. With an embedding, crossed edges are red; `poles` are
/// drawn as double circles.
pub fn write(g: &DynamicGraph, emb: Option<&EmbeddedGraph>, poles: &[VertexId]) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in g.vertices() {
        if poles.contains(&v) {
            writeln!(out, "  {v} [shape=doublecircle, label=\"{v} (pole)\"];").unwrap();
        } else {
            writeln!(out, "  {v};").unwrap();
        }
    }
    for e in g.sorted_edges() {
        let color = match emb.and_then(|m| m.color(e.lo(), e.hi())) {
            Some(Color::Red) => "red",
            _ => "black",
        };
        writeln!(out, "  {} -- {} [color={color}];", e.lo(), e.hi()).unwrap();
    }
    out.push_str("}\n");
    out
}
