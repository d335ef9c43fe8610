//! The integer group ring `Z[G]`.
//!
//! Elements are stored densely, one arbitrary-precision coefficient per group
//! element, so equality is plain vector equality and there are no stored
//! zero terms to normalise away.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::group::{Group, GroupElement};

/// An integer linear combination `sum z_g g` over a [`Group`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElement {
    group: Group,
    coeffs: Vec<BigInt>,
}

impl RingElement {
    pub fn zero(group: Group) -> Self {
        RingElement {
            group,
            coeffs: vec![BigInt::zero(); group.order()],
        }
    }

    pub fn unit(group: Group) -> Self {
        Self::from_element(group.identity())
    }

    pub fn from_element(g: GroupElement) -> Self {
        let mut x = Self::zero(g.group());
        x.coeffs[g.index()] = BigInt::one();
        x
    }

    /// The simple quantity of `set`: coefficient 1 on each member.
    pub fn simple_quantity(group: Group, set: &[GroupElement]) -> Result<Self> {
        if set.is_empty() {
            return Err(Error::InvalidInput(
                "simple quantity of an empty set".into(),
            ));
        }
        let mut x = Self::zero(group);
        for g in set {
            group.check(g)?;
            x.coeffs[g.index()] = BigInt::one();
        }
        Ok(x)
    }

    /// Builds an element from `(coefficient, element)` terms; repeated
    /// elements accumulate.
    pub fn from_terms<I, C>(group: Group, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (C, GroupElement)>,
        C: Into<BigInt>,
    {
        let mut x = Self::zero(group);
        for (c, g) in terms {
            group.check(&g)?;
            x.coeffs[g.index()] += c.into();
        }
        Ok(x)
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn coeff(&self, g: &GroupElement) -> &BigInt {
        &self.coeffs[g.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Elements with a nonzero coefficient, in `(flip, rot)` order.
    pub fn support(&self) -> Vec<GroupElement> {
        self.terms().map(|(_, g)| g).collect()
    }

    /// Nonzero terms in `(flip, rot)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&BigInt, GroupElement)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c, self.group.element(i)))
    }

    /// Sum of all coefficients (the augmentation).
    pub fn total(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    fn same_group(&self, other: &RingElement) -> Result<()> {
        if self.group == other.group {
            Ok(())
        } else {
            Err(Error::DomainMismatch {
                left: self.group.identity(),
                left_group: self.group,
                right: other.group.identity(),
                right_group: other.group,
            })
        }
    }

    pub fn add(&self, other: &RingElement) -> Result<RingElement> {
        self.same_group(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(x, y)| x + y)
            .collect();
        Ok(RingElement {
            group: self.group,
            coeffs,
        })
    }

    pub fn sub(&self, other: &RingElement) -> Result<RingElement> {
        self.same_group(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(x, y)| x - y)
            .collect();
        Ok(RingElement {
            group: self.group,
            coeffs,
        })
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> RingElement {
        let c = c.into();
        RingElement {
            group: self.group,
            coeffs: self.coeffs.iter().map(|x| x * &c).collect(),
        }
    }

    /// Convolution: the coefficient of `g` is `sum_{uv = g} x(u) y(v)`.
    pub fn mul(&self, other: &RingElement) -> Result<RingElement> {
        self.same_group(other)?;
        let mut out = RingElement::zero(self.group);
        let rhs: Vec<_> = other.terms().collect();
        for (cx, u) in self.terms() {
            for &(cy, v) in &rhs {
                out.coeffs[(u * v).index()] += cx * cy;
            }
        }
        Ok(out)
    }

    /// `x^m` by repeated squaring; `x^0` is the unit.
    pub fn pow(&self, mut m: u64) -> RingElement {
        let mut acc = RingElement::unit(self.group);
        let mut base = self.clone();
        while m > 0 {
            if m & 1 == 1 {
                acc = acc.mul(&base).expect("same group");
            }
            m >>= 1;
            if m > 0 {
                base = base.mul(&base).expect("same group");
            }
        }
        acc
    }

    /// The image under `g -> g^{-1}`: coefficient of `g` becomes that of `g^{-1}`.
    pub fn inverse_image(&self) -> RingElement {
        let mut out = RingElement::zero(self.group);
        for (c, g) in self.terms() {
            out.coeffs[g.inv().index()] = c.clone();
        }
        out
    }

    /// Partitions the support by coefficient value.
    pub fn level_sets(&self) -> BTreeMap<BigInt, Vec<GroupElement>> {
        let mut levels: BTreeMap<BigInt, Vec<GroupElement>> = BTreeMap::new();
        for (c, g) in self.terms() {
            levels.entry(c.clone()).or_default().push(g);
        }
        levels
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, g) in self.terms() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (mag.is_one(), g.is_identity()) {
                (true, _) => write!(f, "{g}")?,
                (false, true) => write!(f, "{mag}")?,
                (false, false) => write!(f, "{mag}*{g}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
