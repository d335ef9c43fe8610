//! Graphviz export of colour graphs.
//!
//! Opposite arcs `(u, v)`, `(v, u)` of the same colour are drawn as one
//! undirected edge; all other arcs keep their arrowheads. Loops are omitted.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::group::{Group, GroupElement};
use crate::schur::SchurPartition;

/// Colour of layer `i` is `PALETTE[i % 12]`.
pub const PALETTE: [&str; 12] = [
    "red",
    "blue",
    "green",
    "black",
    "orange",
    "purple",
    "brown",
    "cyan",
    "magenta",
    "gold",
    "gray",
    "darkgreen",
];

/// The colour graph of a partition: one colour per basic set other than `{1}`,
/// the first non-identity set taking `PALETTE[0]`.
pub fn export_colour_graph(partition: &SchurPartition) -> String {
    let group = partition.group();
    let layers: Vec<Vec<GroupElement>> = partition
        .sets()
        .iter()
        .map(|s| {
            s.iter()
                .copied()
                .filter(|g| !g.is_identity())
                .collect::<Vec<_>>()
        })
        .filter(|s| !s.is_empty())
        .collect();
    render(group, &layers)
}

/// The Cayley colour graph of `Cay(group, s)`: element `s[i]` gets
/// `PALETTE[i % 12]`, in the order given.
pub fn export_cayley_colour_graph(group: Group, s: &[GroupElement]) -> Result<String> {
    if s.is_empty() {
        return Err(Error::InvalidInput("empty connecting set".into()));
    }
    let mut layers: Vec<Vec<GroupElement>> = Vec::new();
    for &g in s {
        group.check(&g)?;
        if g.is_identity() {
            return Err(Error::InvalidInput(
                "the identity cannot belong to a connecting set".into(),
            ));
        }
        if layers.iter().any(|l| l[0] == g) {
            return Err(Error::InvalidInput(format!("{g} is listed twice")));
        }
        layers.push(vec![g]);
    }
    Ok(render(group, &layers))
}

fn render(group: Group, layers: &[Vec<GroupElement>]) -> String {
    let n = group.order();
    let mut colour = vec![None; n * n];
    for (i, layer) in layers.iter().enumerate() {
        for u in group.elements() {
            for &s in layer {
                colour[u.index() * n + (u * s).index()] = Some(i);
            }
        }
    }
    let undirected = |u: usize, v: usize| colour[u * n + v] == colour[v * n + u];
    let all_undirected =
        (0..n).all(|u| (0..n).all(|v| colour[u * n + v].is_none() || undirected(u, v)));
    let (kind, arrow) = if all_undirected {
        ("graph", "--")
    } else {
        ("digraph", "->")
    };

    let mut out = String::new();
    writeln!(out, "{kind} \"{group}\" {{").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for g in group.elements() {
        writeln!(out, "  \"{g}\";").unwrap();
    }
    for (i, layer) in layers.iter().enumerate() {
        let name = PALETTE[i % PALETTE.len()];
        for u in group.elements() {
            for &s in layer {
                let v = u * s;
                let (ui, vi) = (u.index(), v.index());
                if ui == vi {
                    continue;
                }
                if undirected(ui, vi) {
                    if ui < vi {
                        let dir = if all_undirected { "" } else { ", dir=none" };
                        writeln!(out, "  \"{u}\" {arrow} \"{v}\" [color={name}{dir}];").unwrap();
                    }
                } else {
                    writeln!(out, "  \"{u}\" {arrow} \"{v}\" [color={name}];").unwrap();
                }
            }
        }
    }
    out.push_str("}\n");
    out
}
