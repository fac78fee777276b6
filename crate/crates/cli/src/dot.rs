//! Graphviz output. Nodes are `n0, n1, ...` in index order, edges point
//! upwards, and the same document always yields the same text.

use std::fmt::Write;

use clap::ValueEnum;
use ordloc::duality::opens_of_space;
use ordloc::frame::frame_of_opens;
use ordloc::{FinSpace, Flavour, OrderedLocale, Preorder, Side};

use crate::doc::{Document, Names};
use crate::error::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum View {
    /// Hasse diagram of the order or lattice.
    Hasse,
    /// Localic cones of every open, on top of the frame's Hasse diagram.
    Cones,
    /// Opens ordered by inclusion.
    Topology,
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

type Edges = Vec<(usize, usize)>;

/// Cover edges between equivalence classes, drawn from each class's first
/// member, plus the pairs inside each class.
fn hasse_edges(p: &Preorder) -> (Edges, Edges) {
    let n = p.size();
    let rep: Vec<usize> = (0..n)
        .map(|x| (0..n).find(|&y| p.leq(x, y) && p.leq(y, x)).expect("x is equivalent to itself"))
        .collect();
    let strict = |x: usize, y: usize| p.leq(x, y) && !p.leq(y, x);
    let mut covers = Vec::new();
    let mut cycles = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if rep[x] == x && rep[y] == y && strict(x, y) && !(0..n).any(|z| strict(x, z) && strict(z, y)) {
                covers.push((x, y));
            }
            if x < y && rep[x] == rep[y] {
                cycles.push((x, y));
            }
        }
    }
    (covers, cycles)
}

struct Graph {
    out: String,
}

impl Graph {
    fn new() -> Self {
        let mut out = String::from("digraph G {\n  rankdir=BT;\n");
        out.push_str("  node [shape=plaintext];\n");
        Graph { out }
    }

    fn nodes(&mut self, names: &Names) {
        for i in 0..names.len() {
            let _ = writeln!(self.out, "  n{i} [label={}];", quote(names.name(i)));
        }
    }

    fn order(&mut self, p: &Preorder, extra: &str) {
        let (covers, cycles) = hasse_edges(p);
        for (x, y) in covers {
            let _ = writeln!(self.out, "  n{x} -> n{y}{extra};");
        }
        for (x, y) in cycles {
            let _ = writeln!(self.out, "  n{x} -> n{y} [dir=both, style=dashed];");
        }
    }

    fn finish(mut self) -> String {
        self.out.push_str("}\n");
        self.out
    }
}

fn open_names(names: &Names, space: &FinSpace) -> Names {
    Names::labelled(space.opens().iter().map(|u| names.set_label(u)).collect())
}

fn cones(names: &Names, x: &OrderedLocale) -> String {
    let mut g = Graph::new();
    g.nodes(names);
    g.order(x.frame().order(), " [color=gray]");
    for u in 0..x.size() {
        for (side, mark) in [(Side::Upper, "⇑"), (Side::Lower, "⇓")] {
            let _ = writeln!(
                g.out,
                "  n{u} -> n{} [label={}, style=dotted, constraint=false];",
                x.cone(u, side),
                quote(mark)
            );
        }
    }
    g.finish()
}

fn topology(names: &Names, space: &FinSpace) -> String {
    let mut g = Graph::new();
    g.nodes(&open_names(names, space));
    g.order(frame_of_opens(space).order(), "");
    g.finish()
}

pub fn render(doc: &Document, view: View, flavour: Flavour) -> CliResult<String> {
    let unsupported = || {
        CliError::Usage(format!(
            "no {} view for {} documents",
            match view {
                View::Hasse => "hasse",
                View::Cones => "cones",
                View::Topology => "topology",
            },
            doc.kind()
        ))
    };
    match (view, doc) {
        (View::Hasse, Document::Space(d)) => Ok(hasse(&d.names, &d.value.specialisation_preorder())),
        (View::Hasse, Document::OrderedSpace(d)) => Ok(hasse(&d.names, d.value.order())),
        (View::Hasse, Document::Frame(d)) => Ok(hasse(&d.names, d.value.order())),
        (View::Hasse, Document::Heyting(d)) => Ok(hasse(&d.names, d.value.lattice().order())),
        (View::Hasse, Document::OrderedLocale(d)) => Ok(hasse(&d.names, d.value.frame().order())),
        (View::Cones, Document::OrderedLocale(d)) => Ok(cones(&d.names, &d.value)),
        (View::Cones, Document::OrderedSpace(d)) => Ok(cones(
            &open_names(&d.names, d.value.space()),
            &opens_of_space(&d.value, flavour),
        )),
        (View::Topology, Document::Space(d)) => Ok(topology(&d.names, &d.value)),
        (View::Topology, Document::OrderedSpace(d)) => Ok(topology(&d.names, d.value.space())),
        _ => Err(unsupported()),
    }
}

fn hasse(names: &Names, p: &Preorder) -> String {
    let mut g = Graph::new();
    g.nodes(names);
    g.order(p, "");
    g.finish()
}
