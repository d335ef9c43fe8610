//! Brute-force automorphism groups of small arc-coloured digraphs.
//!
//! This deliberately shares nothing with the Schur-ring code: it sees only a
//! dense arc-colour matrix. The group order is computed along a stabiliser
//! chain. At each level the first non-singleton cell of the equitable
//! partition supplies a base point `v`, and for every `w` in that cell a
//! backtracking search (individualise, refine, branch) decides whether some
//! automorphism fixing the earlier base points sends `v` to `w`. The product
//! of the orbit sizes is `|Aut|`.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

use super::{is_permutation, CayleyGraph, ColouredCayleyGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest vertex count the oracle accepts.
    pub vertex_limit: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { vertex_limit: 64 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismGroup {
    pub order: BigUint,
    /// Generators as vertex images: vertex `v` goes to `perm[v]`. Each one
    /// has been checked against the graph.
    pub generators: Vec<Vec<usize>>,
}

/// `|Aut(graph)|` together with a generating set.
pub fn automorphism_order(graph: &CayleyGraph, config: &OracleConfig) -> Result<AutomorphismGroup> {
    let n = graph.vertex_count();
    let mut colour = vec![0u32; n * n];
    for u in 0..n {
        for &v in graph.out_neighbours(u) {
            colour[u * n + v] = 1;
        }
    }
    let result = ArcColouring::new(n, colour, config)?.automorphisms();
    debug_assert!(result.generators.iter().all(|p| graph.is_automorphism(p)));
    Ok(result)
}

/// Automorphisms preserving every colour of a colour graph, i.e. the
/// intersection of the automorphism groups of its basic Cayley graphs.
pub fn automorphism_order_coloured(
    graph: &ColouredCayleyGraph,
    config: &OracleConfig,
) -> Result<AutomorphismGroup> {
    let colour = graph.colour_matrix().to_vec();
    Ok(ArcColouring::new(graph.vertex_count(), colour, config)?.automorphisms())
}

struct ArcColouring {
    n: usize,
    /// `colour[u * n + v]`; 0 means no arc when off the diagonal.
    colour: Vec<u32>,
    out: Vec<Vec<(u32, usize)>>,
    inc: Vec<Vec<(u32, usize)>>,
}

type Cells = Vec<u32>;

impl ArcColouring {
    fn new(n: usize, colour: Vec<u32>, config: &OracleConfig) -> Result<Self> {
        if n > config.vertex_limit {
            return Err(Error::ResourceLimit {
                vertices: n,
                limit: config.vertex_limit,
            });
        }
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        for u in 0..n {
            for v in 0..n {
                let c = colour[u * n + v];
                if u != v && c != 0 {
                    out[u].push((c, v));
                    inc[v].push((c, u));
                }
            }
        }
        Ok(ArcColouring {
            n,
            colour,
            out,
            inc,
        })
    }

    fn is_automorphism(&self, perm: &[usize]) -> bool {
        let n = self.n;
        is_permutation(perm)
            && (0..n).all(|u| {
                (0..n).all(|v| self.colour[u * n + v] == self.colour[perm[u] * n + perm[v]])
            })
    }

    fn initial_cells(&self) -> Cells {
        (0..self.n).map(|v| self.colour[v * self.n + v]).collect()
    }

    /// Refines both colourings jointly to equitable partitions, naming the
    /// cells identically on both sides. Returns false when the two sides
    /// stop matching, in which case no automorphism can map one onto the other.
    fn refine_pair(&self, left: &mut Cells, right: &mut Cells) -> bool {
        let mut cell_count = distinct(left);
        loop {
            let sig_left: Vec<Vec<u64>> = (0..self.n).map(|v| self.signature(left, v)).collect();
            let sig_right: Vec<Vec<u64>> = (0..self.n).map(|v| self.signature(right, v)).collect();
            let mut names: Vec<&Vec<u64>> = sig_left.iter().chain(&sig_right).collect();
            names.sort();
            names.dedup();
            let name = |s: &Vec<u64>| names.binary_search(&s).expect("present") as u32;
            for v in 0..self.n {
                left[v] = name(&sig_left[v]);
                right[v] = name(&sig_right[v]);
            }
            let mut l = left.clone();
            let mut r = right.clone();
            l.sort_unstable();
            r.sort_unstable();
            if l != r {
                return false;
            }
            let new_count = distinct(left);
            if new_count == cell_count {
                return true;
            }
            cell_count = new_count;
        }
    }

    fn signature(&self, cells: &Cells, v: usize) -> Vec<u64> {
        let mut sig = Vec::with_capacity(1 + self.out[v].len() + self.inc[v].len());
        sig.push(cells[v] as u64);
        let mut nbrs: Vec<u64> = self.out[v]
            .iter()
            .map(|&(c, u)| (c as u64) << 32 | cells[u] as u64)
            .chain(
                self.inc[v]
                    .iter()
                    .map(|&(c, u)| 1 << 63 | (c as u64) << 32 | cells[u] as u64),
            )
            .collect();
        nbrs.sort_unstable();
        sig.extend(nbrs);
        sig
    }

    fn automorphisms(&self) -> AutomorphismGroup {
        let mut order = BigUint::one();
        let mut generators = Vec::new();
        let mut fixed: Vec<(usize, usize)> = Vec::new();
        loop {
            let mut cells = self.individualised(&fixed, false);
            let mut copy = cells.clone();
            let ok = self.refine_pair(&mut cells, &mut copy);
            debug_assert!(ok);
            let Some(v) = first_nonsingleton(&cells) else {
                break;
            };
            let cell: Vec<usize> = (0..self.n).filter(|&w| cells[w] == cells[v]).collect();
            let mut level_gens: Vec<Vec<usize>> = Vec::new();
            let mut orbit = vec![v];
            for &w in &cell {
                if orbit.contains(&w) {
                    continue;
                }
                let mut target = fixed.clone();
                target.push((v, w));
                if let Some(perm) = self.find_extension(&target) {
                    level_gens.push(perm);
                    orbit = orbit_of(v, &level_gens);
                }
            }
            order *= orbit.len();
            generators.extend(level_gens);
            fixed.push((v, v));
        }
        AutomorphismGroup { order, generators }
    }

    fn individualised(&self, pairs: &[(usize, usize)], right_side: bool) -> Cells {
        let mut cells = self.initial_cells();
        let fresh = self.n as u32 + 1;
        for (k, &(v, w)) in pairs.iter().enumerate() {
            cells[if right_side { w } else { v }] = fresh + k as u32;
        }
        cells
    }

    /// An automorphism sending `v -> w` for every pair, if one exists.
    fn find_extension(&self, pairs: &[(usize, usize)]) -> Option<Vec<usize>> {
        let left = self.individualised(pairs, false);
        let right = self.individualised(pairs, true);
        self.search(left, right)
    }

    fn search(&self, mut left: Cells, mut right: Cells) -> Option<Vec<usize>> {
        if !self.refine_pair(&mut left, &mut right) {
            return None;
        }
        match first_nonsingleton(&left) {
            None => {
                let mut perm = vec![0; self.n];
                for v in 0..self.n {
                    perm[v] = right.iter().position(|&c| c == left[v])?;
                }
                self.is_automorphism(&perm).then_some(perm)
            }
            Some(v) => {
                let fresh = self.n as u32 + 1;
                (0..self.n).filter(|&w| right[w] == left[v]).find_map(|w| {
                    let mut l = left.clone();
                    let mut r = right.clone();
                    l[v] = fresh;
                    r[w] = fresh;
                    self.search(l, r)
                })
            }
        }
    }
}

fn distinct(cells: &Cells) -> usize {
    let mut c = cells.clone();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Smallest vertex lying in the first (lowest-named) cell with two or more members.
fn first_nonsingleton(cells: &Cells) -> Option<usize> {
    let mut sizes = std::collections::BTreeMap::new();
    for &c in cells {
        *sizes.entry(c).or_insert(0usize) += 1;
    }
    let (&target, _) = sizes.iter().find(|(_, &size)| size > 1)?;
    cells.iter().position(|&c| c == target)
}

fn orbit_of(v: usize, gens: &[Vec<usize>]) -> Vec<usize> {
    let mut orbit = vec![v];
    let mut cursor = 0;
    while cursor < orbit.len() {
        let x = orbit[cursor];
        cursor += 1;
        for g in gens {
            if !orbit.contains(&g[x]) {
                orbit.push(g[x]);
            }
        }
    }
    orbit
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::cayley_graph;
    use crate::group::Group;

    fn aut(group: Group, set: &str) -> AutomorphismGroup {
        let s = group.parse_elements(set).unwrap();
        let g = cayley_graph(group, &s, true).unwrap();
        let a = automorphism_order(&g, &OracleConfig::default()).unwrap();
        assert!(a.generators.iter().all(|p| g.is_automorphism(p)));
        a
    }

    #[test]
    fn complete_graph_k4() {
        let z4 = Group::cyclic(4).unwrap();
        assert_eq!(aut(z4, "g,g^2,g^3").order, BigUint::from(24u32));
    }

    #[test]
    fn cycles_and_matchings() {
        // C8: dihedral of order 16
        let z8 = Group::cyclic(8).unwrap();
        assert_eq!(aut(z8, "g,g^7").order, BigUint::from(16u32));
        // directed 8-cycle: only rotations
        assert_eq!(aut(z8, "g").order, BigUint::from(8u32));
        // perfect matching on 8 vertices: 2^4 * 4!
        assert_eq!(aut(z8, "g^4").order, BigUint::from(384u32));
        // empty graph on 5 vertices: 5!
        let z5 = Group::cyclic(5).unwrap();
        let g = cayley_graph(z5, &[], true).unwrap();
        let a = automorphism_order(&g, &OracleConfig::default()).unwrap();
        assert_eq!(a.order, BigUint::from(120u32));
    }

    #[test]
    fn pentagonal_prism() {
        // Cay(D5, {a, b, b^4}) is the 5-prism, |Aut| = |D5 x Z2| = 20
        let d5 = Group::dihedral(5).unwrap();
        assert_eq!(aut(d5, "a,b,b^4").order, BigUint::from(20u32));
    }

    #[test]
    fn known_grrs() {
        let d7 = Group::dihedral(7).unwrap();
        assert_eq!(aut(d7, "a,ab,ab^3,b,b^6").order, BigUint::from(14u32));
        let d11 = Group::dihedral(11).unwrap();
        assert_eq!(aut(d11, "ab,ab^3,ab^4").order, BigUint::from(22u32));
    }

    #[test]
    fn disconnected_copies_of_k33() {
        // Cay(D9, {a, ab^3, ab^6}) is three disjoint K_{3,3}: (2 * 3! * 3!)^3 * 3!
        let d9 = Group::dihedral(9).unwrap();
        assert_eq!(
            aut(d9, "a,ab^3,ab^6").order,
            BigUint::from(72u64 * 72 * 72 * 6)
        );
    }

    #[test]
    fn limit_is_enforced() {
        let d40 = Group::dihedral(40).unwrap();
        let g = cayley_graph(d40, &d40.parse_elements("a,ab,ab^3").unwrap(), false).unwrap();
        let err = automorphism_order(&g, &OracleConfig::default()).unwrap_err();
        assert!(matches!(
            err,
            Error::ResourceLimit {
                vertices: 80,
                limit: 64
            }
        ));
        assert!(automorphism_order(&g, &OracleConfig { vertex_limit: 80 }).is_ok());
    }
}
