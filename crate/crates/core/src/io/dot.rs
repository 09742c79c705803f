//! Graphviz output. Cycle arcs are directed; opposite arc pairs are drawn
//! as single undirected edges.

use std::fmt::Write;

use crate::catalog::LabelTable;
use crate::graph::Digraph;
use crate::separator::SeparatorDigraph;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn write_arcs(out: &mut String, d: &Digraph, name: impl Fn(u32) -> String) {
    for (u, v) in d.arcs() {
        if d.has_arc(v, u) {
            if u < v {
                let _ = writeln!(
                    out,
                    "  {} -> {} [dir=none, style=dashed];",
                    name(u),
                    name(v)
                );
            }
        } else {
            let _ = writeln!(out, "  {} -> {};", name(u), name(v));
        }
    }
}

pub fn digraph_dot(d: &Digraph, title: &str) -> String {
    let mut out = format!("digraph {} {{\n", quote(title));
    if d.order() > 0 {
        out.push_str("  node [shape=circle];\n");
        for v in 0..d.order() as u32 {
            let _ = writeln!(out, "  {v};");
        }
        write_arcs(&mut out, d, |v| v.to_string());
    }
    out.push_str("}\n");
    out
}

pub fn separator_dot(s: &SeparatorDigraph, labels: &LabelTable, title: &str) -> String {
    let d = s.digraph();
    let mut out = format!("digraph {} {{\n", quote(title));
    if s.order() > 0 {
        out.push_str("  node [shape=box, fontsize=10];\n");
        for v in 0..s.order() as u32 {
            let _ = writeln!(out, "  {v} [label={}];", quote(&s.label(v, labels)));
        }
        write_arcs(&mut out, &d, |v| v.to_string());
    }
    out.push_str("}\n");
    out
}
