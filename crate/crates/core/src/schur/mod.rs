//! Schur rings over dihedral and cyclic groups, represented by their
//! partitions into basic sets.

mod closure;
mod orbit;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Group, GroupElement, GroupTable};

pub use closure::{closure, closure_of_sets};
pub use orbit::{orbit_schur_ring, GroupAutomorphism};

/// An ordered partition of a group into nonempty basic sets `B_0, .., B_{r-1}`.
///
/// Construction only checks that the sets partition the group; whether the
/// partition spans a Schur ring is decided by [`SchurPartition::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurPartition {
    group: Group,
    sets: Vec<Vec<GroupElement>>,
    class_of: Vec<usize>,
}

impl SchurPartition {
    /// Each set is stored sorted; the order of the sets is kept as given.
    pub fn new(group: Group, sets: Vec<Vec<GroupElement>>) -> Result<Self> {
        const UNSET: usize = usize::MAX;
        let mut class_of = vec![UNSET; group.order()];
        let mut sets = sets;
        for (i, set) in sets.iter_mut().enumerate() {
            if set.is_empty() {
                return Err(Error::InvalidInput(format!("basic set {i} is empty")));
            }
            set.sort();
            for g in set.iter() {
                group.check(g)?;
                if class_of[g.index()] != UNSET {
                    return Err(Error::InvalidInput(format!(
                        "element {g} appears in basic sets {} and {i}",
                        class_of[g.index()]
                    )));
                }
                class_of[g.index()] = i;
            }
        }
        if let Some(missing) = class_of.iter().position(|&c| c == UNSET) {
            return Err(Error::InvalidInput(format!(
                "element {} is not covered by any basic set",
                group.element(missing)
            )));
        }
        Ok(SchurPartition {
            group,
            sets,
            class_of,
        })
    }

    /// Parses sets written as `;`-separated lists of `,`-separated elements.
    pub fn parse(group: Group, text: &str) -> Result<Self> {
        let sets = text
            .split(';')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| group.parse_elements(s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, sets)
    }

    /// The partition into singletons, in element order.
    pub fn trivial(group: Group) -> Self {
        Self::new(group, group.elements().map(|g| vec![g]).collect()).expect("singletons")
    }

    /// The rank-2 partition `{1}, G - {1}` (rank 1 for the trivial group).
    pub fn coarsest(group: Group) -> Self {
        let rest: Vec<_> = group.elements().skip(1).collect();
        let mut sets = vec![vec![group.identity()]];
        if !rest.is_empty() {
            sets.push(rest);
        }
        Self::new(group, sets).expect("cover")
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn rank(&self) -> usize {
        self.sets.len()
    }

    pub fn sets(&self) -> &[Vec<GroupElement>] {
        &self.sets
    }

    pub fn set(&self, i: usize) -> &[GroupElement] {
        &self.sets[i]
    }

    /// Index of the basic set containing `g`.
    pub fn class_of(&self, g: &GroupElement) -> usize {
        self.class_of[g.index()]
    }

    /// All singletons.
    pub fn is_trivial(&self) -> bool {
        self.rank() == self.group.order()
    }

    /// Whether every set of `self` lies inside a set of `coarser`.
    pub fn refines(&self, coarser: &SchurPartition) -> bool {
        self.group == coarser.group
            && self.sets.iter().all(|set| {
                let c = coarser.class_of(&set[0]);
                set.iter().all(|g| coarser.class_of(g) == c)
            })
    }

    /// Whether `elements` is a union of basic sets.
    pub fn is_union_of_sets(&self, elements: &[GroupElement]) -> bool {
        let mut inside = vec![false; self.group.order()];
        for g in elements {
            inside[g.index()] = true;
        }
        self.sets.iter().all(|set| {
            let first = inside[set[0].index()];
            set.iter().all(|g| inside[g.index()] == first)
        })
    }

    /// Index of the set equal to `B_i^{-1}`, if there is one.
    pub fn inverse_set(&self, i: usize) -> Option<usize> {
        let j = self.class_of(&self.sets[i][0].inv());
        let mut inv: Vec<_> = self.sets[i].iter().map(|g| g.inv()).collect();
        inv.sort();
        (inv == self.sets[j]).then_some(j)
    }

    /// Element names of each set, `B_0` first.
    pub fn to_names(&self) -> Vec<Vec<String>> {
        self.sets
            .iter()
            .map(|s| s.iter().map(ToString::to_string).collect())
            .collect()
    }

    /// Checks the Schur-ring axioms in order: closure under multiplication,
    /// `B_0 = {1}`, and closure under inversion.
    pub fn validate(&self) -> std::result::Result<(), SchurViolation> {
        let table = self.group.table();
        let idx = self.index_sets();
        let mut counts = vec![0u64; self.group.order()];
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                class_product(&table, &idx[i], &idx[j], &mut counts);
                if let Some((k, x, y)) = self.first_nonconstant(&counts) {
                    return Err(SchurViolation::ProductNotClosed {
                        left: i,
                        right: j,
                        set: k,
                        witness: (x, y),
                    });
                }
            }
        }
        if self.sets[0] != [self.group.identity()] {
            return Err(SchurViolation::IdentityNotFirst {
                found: self.sets[0].clone(),
            });
        }
        for i in 0..self.rank() {
            if self.inverse_set(i).is_none() {
                return Err(SchurViolation::InverseNotBasic { set: i });
            }
        }
        Ok(())
    }

    /// Structure constants `beta[i][j][k]` with `B_i B_j = sum_k beta B_k`.
    pub fn structure_constants(&self) -> Result<StructureConstants> {
        self.validate()
            .map_err(|v| Error::InvalidInput(format!("not a Schur ring: {v}")))?;
        let table = self.group.table();
        let idx = self.index_sets();
        let r = self.rank();
        let mut counts = vec![0u64; self.group.order()];
        let mut beta = vec![0u64; r * r * r];
        for i in 0..r {
            for j in 0..r {
                class_product(&table, &idx[i], &idx[j], &mut counts);
                for k in 0..r {
                    beta[(i * r + j) * r + k] = counts[idx[k][0]];
                }
            }
        }
        Ok(StructureConstants { rank: r, beta })
    }

    fn index_sets(&self) -> Vec<Vec<usize>> {
        self.sets
            .iter()
            .map(|s| s.iter().map(|g| g.index()).collect())
            .collect()
    }

    /// First basic set on which `counts` is not constant, with two witnesses.
    fn first_nonconstant(&self, counts: &[u64]) -> Option<(usize, GroupElement, GroupElement)> {
        self.sets.iter().enumerate().find_map(|(k, set)| {
            let c0 = counts[set[0].index()];
            set.iter()
                .find(|g| counts[g.index()] != c0)
                .map(|g| (k, set[0], *g))
        })
    }
}

impl fmt::Display for SchurPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, set) in self.sets.iter().enumerate() {
            let names: Vec<_> = set.iter().map(ToString::to_string).collect();
            writeln!(f, "B{i} = {{{}}}", names.join(", "))?;
        }
        Ok(())
    }
}

/// Writes the class-sum product `B_i B_j` into `counts`, indexed by element.
pub(crate) fn class_product(
    table: &GroupTable,
    left: &[usize],
    right: &[usize],
    counts: &mut [u64],
) {
    counts.iter_mut().for_each(|c| *c = 0);
    for &u in left {
        for &v in right {
            counts[table.mul(u, v)] += 1;
        }
    }
}

/// The first Schur-ring axiom a partition fails.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum SchurViolation {
    #[error(
        "product B{left}*B{right} is not a combination of basic sets: \
         its coefficients differ on {} and {} inside B{set}", witness.0, witness.1
    )]
    ProductNotClosed {
        left: usize,
        right: usize,
        set: usize,
        witness: (GroupElement, GroupElement),
    },
    #[error("B0 must be {{1}}, found {found:?}")]
    IdentityNotFirst { found: Vec<GroupElement> },
    #[error("the inverse of B{set} is not a basic set")]
    InverseNotBasic { set: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureConstants {
    rank: usize,
    beta: Vec<u64>,
}

impl StructureConstants {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `beta_{i,j}^k`.
    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        let r = self.rank;
        self.beta[(i * r + j) * r + k]
    }
}
