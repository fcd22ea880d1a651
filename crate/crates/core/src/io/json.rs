//! JSON emission. Vectors are arrays of exact rationals written `"n"` or
//! `"n/d"`.

use serde::Serialize;

use crate::knit::{ComponentGraph, VertexKind};
use crate::vector::Rat;
use num_bigint::BigInt;

#[derive(Serialize)]
struct JsonGraph<'a> {
    flavor: String,
    p: u32,
    points: &'a [String],
    status: String,
    max_sections: usize,
    sections: &'a [Vec<usize>],
    vertices: Vec<JsonVertex>,
    arrows: Vec<JsonArrow>,
}

#[derive(Serialize)]
struct JsonVertex {
    id: usize,
    section: usize,
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    projective_of: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    injective_of: Option<String>,
    label: &'static str,
    #[serde(rename = "udimF")]
    udim_f: Vec<String>,
    udim: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cd: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    vdim: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tau: Option<usize>,
}

#[derive(Serialize)]
struct JsonArrow {
    src: usize,
    dst: usize,
    a: u32,
    b: u32,
}

fn ints(v: &[BigInt]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn rats(v: &[Rat]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn document(graph: &ComponentGraph) -> JsonGraph<'_> {
    let name = |x: usize| graph.point_names[x].clone();
    let vertices = graph
        .vertices
        .iter()
        .map(|v| {
            let (projective_of, injective_of) = match v.kind {
                VertexKind::Projective(i) => (Some(name(i)), None),
                VertexKind::Injective(i) => (None, Some(name(i))),
                VertexKind::ProjectiveInjective(i, j) => (Some(name(i)), Some(name(j))),
                VertexKind::Regular => (None, None),
            };
            JsonVertex {
                id: v.id,
                section: v.section,
                kind: v.kind.name(),
                projective_of,
                injective_of,
                label: if v.label == crate::Label::Weak {
                    "Weak"
                } else {
                    "Strong"
                },
                udim_f: ints(&v.udim_f),
                udim: rats(&v.udim),
                cd: v.cd.as_deref().map(rats),
                vdim: v.vdim.as_deref().map(ints),
                tau: v.tau,
            }
        })
        .collect();
    let arrows = graph
        .arrows
        .iter()
        .map(|a| JsonArrow {
            src: a.src,
            dst: a.dst,
            a: a.a,
            b: a.b,
        })
        .collect();
    JsonGraph {
        flavor: graph.flavor.to_string(),
        p: graph.p,
        points: &graph.point_names,
        status: graph.status.to_string(),
        max_sections: graph.max_sections,
        sections: &graph.sections,
        vertices,
        arrows,
    }
}

pub fn to_json_value(graph: &ComponentGraph) -> serde_json::Value {
    serde_json::to_value(document(graph)).expect("plain data serializes")
}

/// Pretty JSON with keys in schema order.
pub fn to_json(graph: &ComponentGraph) -> String {
    let mut s = serde_json::to_string_pretty(&document(graph)).expect("plain data serializes");
    s.push('\n');
    s
}
