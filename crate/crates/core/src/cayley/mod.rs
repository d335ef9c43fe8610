//! Cayley (di)graphs, colour graphs of Schur rings, and GRR certification.

mod dot;
mod grr;
mod oracle;

use crate::error::{Error, Result};
use crate::group::{Group, GroupElement};
use crate::schur::SchurPartition;

pub use dot::{export_cayley_colour_graph, export_colour_graph, PALETTE};
pub use grr::{is_grr, AutOrder, GrrCertificate, Method};
pub use oracle::{
    automorphism_order, automorphism_order_coloured, AutomorphismGroup, OracleConfig,
};

/// `Cay(G, S)`: vertices are the group elements, with an arc `u -> us` for
/// every `s` in `S`. Vertex `i` is `group.element(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyGraph {
    group: Group,
    connection: Vec<GroupElement>,
    out: Vec<Vec<usize>>,
    undirected: bool,
}

/// Builds `Cay(group, s)`. The identity is never allowed in `s`; unless
/// `allow_nongenerating` is set, `s` must also generate the group.
pub fn cayley_graph(
    group: Group,
    s: &[GroupElement],
    allow_nongenerating: bool,
) -> Result<CayleyGraph> {
    let mut connection = s.to_vec();
    for g in &connection {
        group.check(g)?;
        if g.is_identity() {
            return Err(Error::InvalidInput(
                "the identity cannot belong to a connecting set".into(),
            ));
        }
    }
    connection.sort();
    connection.dedup();
    if !allow_nongenerating {
        let reached = group.generated_order(&connection);
        if reached != group.order() {
            return Err(Error::InvalidInput(format!(
                "connecting set generates a proper subgroup of order {reached} in {group} (order {})",
                group.order()
            )));
        }
    }
    let out = group
        .elements()
        .map(|u| connection.iter().map(|&s| (u * s).index()).collect())
        .collect();
    let undirected = connection
        .iter()
        .all(|g| connection.binary_search(&g.inv()).is_ok());
    Ok(CayleyGraph {
        group,
        connection,
        out,
        undirected,
    })
}

impl CayleyGraph {
    pub fn group(&self) -> Group {
        self.group
    }

    /// The connecting set, sorted.
    pub fn connection(&self) -> &[GroupElement] {
        &self.connection
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn out_neighbours(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(&v)
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// True when the connecting set is closed under inverses.
    pub fn is_undirected(&self) -> bool {
        self.undirected
    }

    /// Whether `perm` (vertex `v` to `perm[v]`) maps arcs onto arcs.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        perm.len() == self.vertex_count()
            && is_permutation(perm)
            && (0..self.vertex_count())
                .all(|u| self.out[u].iter().all(|&v| self.has_arc(perm[u], perm[v])))
    }

    /// The left translation `u -> g u` as a vertex permutation.
    pub fn left_translation(&self, g: GroupElement) -> Vec<usize> {
        self.group.elements().map(|u| (g * u).index()).collect()
    }

    /// Whether every left translation is an automorphism.
    pub fn left_regular_embeds(&self) -> bool {
        self.group
            .elements()
            .all(|g| self.is_automorphism(&self.left_translation(g)))
    }
}

pub(crate) fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    perm.iter()
        .all(|&p| p < seen.len() && !std::mem::replace(&mut seen[p], true))
}

/// The basic Cayley graphs of a partition superimposed on one vertex set:
/// the arc `(u, v)` gets the index of the basic set containing `u^{-1} v`.
/// Index 0 is the identity set, i.e. the loops.
#[derive(Debug, Clone)]
pub struct ColouredCayleyGraph {
    group: Group,
    layers: Vec<(usize, CayleyGraph)>,
    colour: Vec<u32>,
}

impl ColouredCayleyGraph {
    /// One layer per basic set other than the one containing the identity.
    pub fn from_partition(partition: &SchurPartition) -> Self {
        let group = partition.group();
        let n = group.order();
        let mut colour = vec![0u32; n * n];
        let mut layers = Vec::new();
        for (i, set) in partition.sets().iter().enumerate() {
            let members: Vec<_> = set.iter().copied().filter(|g| !g.is_identity()).collect();
            if members.is_empty() {
                continue;
            }
            let layer = cayley_graph(group, &members, true).expect("identity-free basic set");
            for u in 0..n {
                for &v in layer.out_neighbours(u) {
                    colour[u * n + v] = i as u32;
                }
            }
            layers.push((i, layer));
        }
        let id_class = partition.class_of(&group.identity()) as u32;
        for u in 0..n {
            colour[u * n + u] = id_class;
        }
        ColouredCayleyGraph {
            group,
            layers,
            colour,
        }
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn layers(&self) -> &[(usize, CayleyGraph)] {
        &self.layers
    }

    pub fn vertex_count(&self) -> usize {
        self.group.order()
    }

    /// Colour of the arc `(u, v)`; `(v, v)` carries the identity colour.
    pub fn colour(&self, u: usize, v: usize) -> usize {
        self.colour[u * self.vertex_count() + v] as usize
    }

    pub(crate) fn colour_matrix(&self) -> &[u32] {
        &self.colour
    }

    /// Number of colours in use, the identity colour included.
    pub fn colour_count(&self) -> usize {
        self.colour.iter().max().map_or(0, |&m| m as usize + 1)
    }

    /// Counts two-step walks `a -> x -> b` with the first step coloured `i`
    /// and the second `j`, for an arc `(a, b)` of colour `k`. The count is
    /// taken over every colour-`k` arc and must be the same for all of them.
    pub fn walk_count(&self, i: usize, j: usize, k: usize) -> Result<u64> {
        let colours = self.colour_count();
        if i >= colours || j >= colours || k >= colours {
            return Err(Error::InvalidInput(format!(
                "colour index out of range: ({i}, {j}, {k}) with {colours} colours"
            )));
        }
        let n = self.vertex_count();
        let mut seen: Option<u64> = None;
        for a in 0..n {
            for b in 0..n {
                if self.colour(a, b) != k {
                    continue;
                }
                let count = (0..n)
                    .filter(|&x| self.colour(a, x) == i && self.colour(x, b) == j)
                    .count() as u64;
                match seen {
                    None => seen = Some(count),
                    Some(c) if c != count => {
                        return Err(Error::Invariant(format!(
                            "walk counts for colours ({i}, {j}) differ across arcs of colour {k}: \
                             {c} vs {count}; the partition is not a Schur ring"
                        )))
                    }
                    Some(_) => {}
                }
            }
        }
        seen.ok_or_else(|| Error::InvalidInput(format!("colour {k} has no arcs")))
    }
}
