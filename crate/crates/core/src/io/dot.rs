//! Graphviz emission: one rank per section, vertices labelled
//! `id: (udimF) L`, arrows labelled with their valuation.

use std::fmt::Write;

use crate::knit::ComponentGraph;
use crate::vector::format_vec;

pub fn to_dot(graph: &ComponentGraph) -> String {
    let mut out = String::new();
    writeln!(out, "digraph component {{").unwrap();
    writeln!(out, "  rankdir=LR;").unwrap();
    writeln!(
        out,
        "  label=\"flavor {} p={} {}\";",
        graph.flavor, graph.p, graph.status
    )
    .unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for (s, ids) in graph.sections.iter().enumerate() {
        writeln!(out, "  subgraph section_{} {{", s + 1).unwrap();
        writeln!(out, "    rank=same;").unwrap();
        for &id in ids {
            let v = &graph.vertices[id];
            writeln!(
                out,
                "    v{id} [label=\"{id}: {} {}\", kind=\"{}\"];",
                format_vec(&v.udim_f),
                v.label.short(),
                v.kind.name()
            )
            .unwrap();
        }
        writeln!(out, "  }}").unwrap();
    }
    for a in &graph.arrows {
        writeln!(
            out,
            "  v{} -> v{} [label=\"({},{})\"];",
            a.src, a.dst, a.a, a.b
        )
        .unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}
