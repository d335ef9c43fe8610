//! Dihedral and cyclic groups in the canonical encoding `a^e b^k`.
//!
//! `D_n = <a, b : a^2 = b^n = abab = 1>` has order `2n`; the cyclic group
//! `Z_n` reuses the same element type with the flip bit pinned to zero, its
//! generator playing the role of `b`.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Dihedral,
    Cyclic,
}

/// A dihedral group `D_n` or a cyclic group `Z_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Group {
    kind: GroupKind,
    n: u32,
}

impl Group {
    pub fn new(kind: GroupKind, n: u32) -> Result<Self> {
        match kind {
            GroupKind::Dihedral if n < 3 => Err(Error::InvalidParameter(format!(
                "dihedral groups need n >= 3, got {n}"
            ))),
            GroupKind::Cyclic if n < 1 => Err(Error::InvalidParameter(
                "cyclic groups need n >= 1".to_string(),
            )),
            // Element indices are stored as u32 and products tabulated densely.
            _ if n > 1 << 15 => Err(Error::InvalidParameter(format!(
                "n = {n} is too large for dense group tables"
            ))),
            _ => Ok(Group { kind, n }),
        }
    }

    pub fn dihedral(n: u32) -> Result<Self> {
        Self::new(GroupKind::Dihedral, n)
    }

    pub fn cyclic(n: u32) -> Result<Self> {
        Self::new(GroupKind::Cyclic, n)
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    /// Order of the rotation subgroup.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> usize {
        match self.kind {
            GroupKind::Dihedral => 2 * self.n as usize,
            GroupKind::Cyclic => self.n as usize,
        }
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            group: *self,
            flip: false,
            rot: 0,
        }
    }

    /// The rotation generator `b` (or `g` for cyclic groups).
    pub fn b(&self) -> GroupElement {
        self.rotation(1)
    }

    /// The reflection generator `a`. `None` for cyclic groups.
    pub fn a(&self) -> Option<GroupElement> {
        self.reflection(0)
    }

    /// `b^k`, with `k` reduced modulo `n`.
    pub fn rotation(&self, k: i64) -> GroupElement {
        GroupElement {
            group: *self,
            flip: false,
            rot: k.rem_euclid(self.n as i64) as u32,
        }
    }

    /// `a b^k`, with `k` reduced modulo `n`. `None` for cyclic groups.
    pub fn reflection(&self, k: i64) -> Option<GroupElement> {
        match self.kind {
            GroupKind::Cyclic => None,
            GroupKind::Dihedral => Some(GroupElement {
                group: *self,
                flip: true,
                rot: k.rem_euclid(self.n as i64) as u32,
            }),
        }
    }

    /// Element with dense index `idx`; rotations come first, then reflections.
    pub fn element(&self, idx: usize) -> GroupElement {
        assert!(
            idx < self.order(),
            "element index {idx} out of range for {self}"
        );
        let n = self.n as usize;
        GroupElement {
            group: *self,
            flip: idx >= n,
            rot: (idx % n) as u32,
        }
    }

    /// Iterates the elements in `(flip, rot)` order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(move |i| self.element(i))
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.group == *self
    }

    pub(crate) fn check(&self, g: &GroupElement) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::DomainMismatch {
                left: *g,
                left_group: g.group,
                right: self.identity(),
                right_group: *self,
            })
        }
    }

    /// Parses an element token: `1`, `a`, `ab`, `a*b`, `ab^K`, `a*b^K`, `b`,
    /// `b^K`, and `g`, `g^K` for cyclic groups. Exponents are reduced mod `n`.
    pub fn parse_element(&self, token: &str) -> Result<GroupElement> {
        let tok: String = token.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::InvalidInput(format!("cannot parse group element {token:?}"));
        if tok == "1" || tok == "e" {
            return Ok(self.identity());
        }
        let (flip, rest) = match tok.strip_prefix('a') {
            Some(rest) => (true, rest.strip_prefix('*').unwrap_or(rest)),
            None => (false, tok.as_str()),
        };
        let exponent = if rest.is_empty() {
            if !flip {
                return Err(bad());
            }
            0
        } else {
            let after_gen = match (rest.strip_prefix('b'), rest.strip_prefix('g')) {
                (Some(r), _) => r,
                (None, Some(r)) if self.kind == GroupKind::Cyclic && !flip => r,
                _ => return Err(bad()),
            };
            if after_gen.is_empty() {
                1
            } else {
                let digits = after_gen.strip_prefix('^').ok_or_else(bad)?;
                digits.parse::<i64>().map_err(|_| bad())?
            }
        };
        if flip {
            self.reflection(exponent).ok_or_else(|| {
                Error::InvalidInput(format!("{token:?} is a reflection but {self} is cyclic"))
            })
        } else {
            Ok(self.rotation(exponent))
        }
    }

    /// Parses a comma-separated list of element tokens.
    pub fn parse_elements(&self, list: &str) -> Result<Vec<GroupElement>> {
        list.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| self.parse_element(t))
            .collect()
    }

    /// Dense multiplication and inversion tables.
    pub fn table(&self) -> GroupTable {
        let order = self.order();
        let mut prod = Vec::with_capacity(order * order);
        for g in self.elements() {
            for h in self.elements() {
                prod.push((g * h).index() as u32);
            }
        }
        let inv = self.elements().map(|g| g.inv().index() as u32).collect();
        GroupTable {
            group: *self,
            prod,
            inv,
        }
    }

    /// Order of the subgroup generated by `gens`.
    pub fn generated_order(&self, gens: &[GroupElement]) -> usize {
        let mut seen = vec![false; self.order()];
        let mut stack = vec![self.identity()];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &s in gens {
                let y = x * s;
                if !seen[y.index()] {
                    seen[y.index()] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GroupKind::Dihedral => write!(f, "D{}", self.n),
            GroupKind::Cyclic => write!(f, "Z{}", self.n),
        }
    }
}

/// An element `a^flip b^rot` of a [`Group`], `0 <= rot < n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    group: Group,
    flip: bool,
    rot: u32,
}

impl GroupElement {
    pub fn group(&self) -> Group {
        self.group
    }

    pub fn flip(&self) -> bool {
        self.flip
    }

    pub fn rot(&self) -> u32 {
        self.rot
    }

    pub fn is_identity(&self) -> bool {
        !self.flip && self.rot == 0
    }

    pub fn is_reflection(&self) -> bool {
        self.flip
    }

    /// Dense index: `flip * n + rot`.
    pub fn index(&self) -> usize {
        self.flip as usize * self.group.n as usize + self.rot as usize
    }

    /// `(a^e1 b^k1)(a^e2 b^k2) = a^(e1 xor e2) b^((-1)^e2 k1 + k2)`.
    pub fn try_mul(self, rhs: GroupElement) -> Result<GroupElement> {
        if self.group != rhs.group {
            return Err(Error::DomainMismatch {
                left: self,
                left_group: self.group,
                right: rhs,
                right_group: rhs.group,
            });
        }
        let n = self.group.n;
        let k1 = if rhs.flip {
            (n - self.rot) % n
        } else {
            self.rot
        };
        Ok(GroupElement {
            group: self.group,
            flip: self.flip ^ rhs.flip,
            rot: (k1 + rhs.rot) % n,
        })
    }

    pub fn inv(self) -> GroupElement {
        if self.flip {
            self
        } else {
            GroupElement {
                rot: (self.group.n - self.rot) % self.group.n,
                ..self
            }
        }
    }

    pub fn pow(self, mut e: u64) -> GroupElement {
        let mut base = self;
        let mut acc = self.group.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Least `m >= 1` with `g^m = 1`.
    pub fn order(&self) -> u64 {
        if self.flip {
            2
        } else {
            let n = self.group.n as u64;
            n / n.gcd(&(self.rot as u64))
        }
    }
}

impl std::ops::Mul for GroupElement {
    type Output = GroupElement;

    /// Panics on operands from different groups; see [`GroupElement::try_mul`].
    fn mul(self, rhs: GroupElement) -> GroupElement {
        match self.try_mul(rhs) {
            Ok(g) => g,
            Err(e) => panic!("{e}"),
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.flip, self.rot) {
            (false, 0) => f.write_str("1"),
            (false, 1) => f.write_str("b"),
            (false, k) => write!(f, "b^{k}"),
            (true, 0) => f.write_str("a"),
            (true, 1) => f.write_str("a*b"),
            (true, k) => write!(f, "a*b^{k}"),
        }
    }
}

/// Precomputed Cayley table of a group, indexed by [`GroupElement::index`].
#[derive(Debug, Clone)]
pub struct GroupTable {
    group: Group,
    prod: Vec<u32>,
    inv: Vec<u32>,
}

impl GroupTable {
    pub fn group(&self) -> Group {
        self.group
    }

    pub fn order(&self) -> usize {
        self.inv.len()
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.prod[g * self.inv.len() + h] as usize
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inv[g] as usize
    }
}
