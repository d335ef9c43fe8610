//! The `<<C>>` closure engine.
//!
//! Starting from `{1}, C, C^{-1} - C, rest`, the working partition is refined
//! until it is a fixpoint of two moves:
//!
//! * inverse split: two elements stay together only if their inverses do;
//! * product split: for each ordered pair of classes, every class is cut
//!   along the level sets of the product of the two class sums.
//!
//! Every cut is forced by the Schur-Wielandt principle, so the fixpoint is
//! the coarsest Schur ring in which `C` is a union of basic sets.

use crate::error::{Error, Result};
use crate::group::{Group, GroupElement, GroupTable};

use super::{class_product, SchurPartition};

/// `<<C>>`: the coarsest Schur ring over `group` containing the simple
/// quantity of `c`. `c` must be nonempty and must not contain the identity.
pub fn closure(group: Group, c: &[GroupElement]) -> Result<SchurPartition> {
    closure_of_sets(group, &[c])
}

/// The coarsest Schur ring in which each of `sets` is a union of basic sets.
pub fn closure_of_sets(group: Group, sets: &[&[GroupElement]]) -> Result<SchurPartition> {
    if sets.is_empty() || sets.iter().any(|s| s.is_empty()) {
        return Err(Error::InvalidInput("closure of an empty set".into()));
    }
    for g in sets.iter().flat_map(|s| s.iter()) {
        group.check(g)?;
        if g.is_identity() {
            return Err(Error::InvalidInput(
                "the identity cannot belong to a connecting set".into(),
            ));
        }
    }
    let table = group.table();
    let mut refiner = Refiner::new(&table);
    for set in sets {
        let mut member = vec![false; group.order()];
        for g in set.iter() {
            member[g.index()] = true;
        }
        let inverse_only: Vec<bool> = (0..group.order())
            .map(|x| !member[x] && member[table.inv(x)])
            .collect();
        refiner.split_by(|x| (member[x], inverse_only[x]));
    }
    refiner.run()?;
    Ok(refiner.into_partition(group))
}

struct Refiner<'a> {
    table: &'a GroupTable,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
    counts: Vec<u64>,
}

impl<'a> Refiner<'a> {
    fn new(table: &'a GroupTable) -> Self {
        let order = table.order();
        let mut refiner = Refiner {
            table,
            class_of: vec![0; order],
            classes: vec![(0..order).collect()],
            counts: vec![0; order],
        };
        refiner.split_by(|x| x == 0);
        refiner
    }

    fn rank(&self) -> usize {
        self.classes.len()
    }

    fn is_discrete(&self) -> bool {
        self.rank() == self.table.order()
    }

    /// Splits every class by `key`. The part holding a class's first element
    /// keeps its index; further parts are appended in first-seen order.
    /// Returns whether anything split.
    fn split_by<K: PartialEq>(&mut self, key: impl Fn(usize) -> K) -> bool {
        let mut split = false;
        let mut parts: Vec<(K, Vec<usize>)> = Vec::new();
        for c in 0..self.classes.len() {
            if self.classes[c].len() < 2 {
                continue;
            }
            let first = key(self.classes[c][0]);
            if self.classes[c].iter().all(|&x| key(x) == first) {
                continue;
            }
            parts.clear();
            for &x in &self.classes[c] {
                let k = key(x);
                match parts.iter_mut().find(|(pk, _)| *pk == k) {
                    Some((_, members)) => members.push(x),
                    None => parts.push((k, vec![x])),
                }
            }
            split = true;
            let mut drained = parts.drain(..);
            self.classes[c] = drained.next().expect("nonempty class").1;
            for (_, members) in drained {
                let id = self.classes.len();
                for &x in &members {
                    self.class_of[x] = id;
                }
                self.classes.push(members);
            }
        }
        split
    }

    fn inverse_split(&mut self) -> bool {
        let class_of = self.class_of.clone();
        let table = self.table;
        self.split_by(|x| class_of[table.inv(x)])
    }

    fn product_split(&mut self, i: usize, j: usize) -> bool {
        let mut counts = std::mem::take(&mut self.counts);
        class_product(self.table, &self.classes[i], &self.classes[j], &mut counts);
        let split = self.split_by(|x| counts[x]);
        self.counts = counts;
        split
    }

    fn run(&mut self) -> Result<()> {
        let order = self.table.order();
        let mut productive = 0;
        while !self.is_discrete() {
            let mut changed = self.inverse_split();
            let mut i = 0;
            'pairs: while i < self.rank() {
                let mut j = 0;
                while j < self.rank() {
                    changed |= self.product_split(i, j);
                    if self.is_discrete() {
                        break 'pairs;
                    }
                    j += 1;
                }
                i += 1;
            }
            if !changed {
                break;
            }
            productive += 1;
            if productive > order.saturating_sub(1) {
                return Err(Error::Invariant(format!(
                    "closure refinement exceeded {} productive passes",
                    order - 1
                )));
            }
        }
        log::debug!(
            "closure converged after {productive} productive passes, rank {}",
            self.rank()
        );
        Ok(())
    }

    /// Basic sets sorted by their least element, so `{1}` comes first.
    fn into_partition(self, group: Group) -> SchurPartition {
        let mut classes = self.classes;
        for class in &mut classes {
            class.sort_unstable();
        }
        classes.sort_by_key(|class| class[0]);
        let sets = classes
            .into_iter()
            .map(|class| class.into_iter().map(|x| group.element(x)).collect())
            .collect();
        SchurPartition::new(group, sets).expect("refinement preserves the cover")
    }
}
