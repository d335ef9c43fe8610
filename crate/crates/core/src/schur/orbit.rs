use crate::error::{Error, Result};
use crate::group::{Group, GroupElement, GroupKind};

use super::SchurPartition;

/// A group automorphism given by the images of the canonical generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupAutomorphism {
    group: Group,
    a_image: Option<GroupElement>,
    b_image: GroupElement,
}

impl GroupAutomorphism {
    /// `a_image` must be given exactly for dihedral groups. The images are
    /// checked to define a bijective homomorphism.
    pub fn new(group: Group, a_image: Option<GroupElement>, b_image: GroupElement) -> Result<Self> {
        match (group.kind(), a_image) {
            (GroupKind::Dihedral, None) => {
                return Err(Error::InvalidInput(
                    "dihedral automorphisms need an image of a".into(),
                ))
            }
            (GroupKind::Cyclic, Some(_)) => {
                return Err(Error::InvalidInput(
                    "cyclic groups have no generator a".into(),
                ))
            }
            _ => {}
        }
        group.check(&b_image)?;
        if let Some(a) = a_image {
            group.check(&a)?;
        }
        let phi = GroupAutomorphism {
            group,
            a_image,
            b_image,
        };
        phi.verify()?;
        Ok(phi)
    }

    pub fn identity(group: Group) -> Self {
        GroupAutomorphism {
            group,
            a_image: group.a(),
            b_image: group.b(),
        }
    }

    /// The inner automorphism `x -> g x g^{-1}`.
    pub fn conjugation(g: GroupElement) -> Self {
        let group = g.group();
        let conj = |x: GroupElement| g * x * g.inv();
        GroupAutomorphism {
            group,
            a_image: group.a().map(conj),
            b_image: conj(group.b()),
        }
    }

    pub fn apply(&self, g: GroupElement) -> GroupElement {
        let rot = self.b_image.pow(g.rot() as u64);
        match (g.flip(), self.a_image) {
            (true, Some(a)) => a * rot,
            _ => rot,
        }
    }

    fn verify(&self) -> Result<()> {
        let g = self.group;
        let mut hit = vec![false; g.order()];
        for x in g.elements() {
            let y = self.apply(x);
            if std::mem::replace(&mut hit[y.index()], true) {
                return Err(Error::InvalidInput(format!(
                    "generator images a -> {:?}, b -> {} are not injective: {y} is hit twice",
                    self.a_image.map(|a| a.to_string()),
                    self.b_image
                )));
            }
        }
        for x in g.elements() {
            for y in g.elements() {
                if self.apply(x * y) != self.apply(x) * self.apply(y) {
                    return Err(Error::InvalidInput(format!(
                        "generator images do not define a homomorphism: witness pair ({x}, {y})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// The Schur ring whose basic sets are the orbits of the group generated by
/// `automorphisms`.
pub fn orbit_schur_ring(
    group: Group,
    automorphisms: &[GroupAutomorphism],
) -> Result<SchurPartition> {
    for phi in automorphisms {
        if phi.group != group {
            return Err(Error::InvalidInput(format!(
                "automorphism of {} supplied for {group}",
                phi.group
            )));
        }
    }
    let order = group.order();
    let mut orbit_of = vec![usize::MAX; order];
    let mut orbits: Vec<Vec<GroupElement>> = Vec::new();
    for start in group.elements() {
        if orbit_of[start.index()] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        orbit_of[start.index()] = id;
        let mut orbit = vec![start];
        let mut cursor = 0;
        while cursor < orbit.len() {
            let x = orbit[cursor];
            cursor += 1;
            for phi in automorphisms {
                let y = phi.apply(x);
                if orbit_of[y.index()] == usize::MAX {
                    orbit_of[y.index()] = id;
                    orbit.push(y);
                }
            }
        }
        orbits.push(orbit);
    }
    SchurPartition::new(group, orbits)
}
