//! Cubic GRRs `Cay(D_n, {ab^r, ab^s, ab^t})` from congruence conditions on
//! `(r, s, t)`.
//!
//! Two rules are supported: `3r - 2s = t (mod n)` and `3r + s = 4t (mod n)`.
//! Either one, with `n` odd and greater than 5 and all pairwise differences
//! of `r, s, t` coprime to `n`, yields a GRR. [`table_row`] gives one
//! solution of the first rule for every prime, and [`inherit`] transfers a
//! solution to larger primes when its defining integer combination needs no
//! modular reduction.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::cayley::{is_grr, GrrCertificate, Method, OracleConfig};
use crate::error::{Error, Result};
use crate::group::{Group, GroupElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    /// `3r - 2s = t (mod n)`
    #[serde(rename = "3r-2s")]
    ThreeRTwoS,
    /// `3r + s = 4t (mod n)`
    #[serde(rename = "3r+s")]
    ThreeRPlusS,
}

impl Rule {
    /// `(alpha, beta, gamma)` with the rule reading `alpha r - beta s = gamma t`.
    pub fn coefficients(self) -> (i64, i64, i64) {
        match self {
            Rule::ThreeRTwoS => (3, 2, 1),
            Rule::ThreeRPlusS => (3, -1, 4),
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::ThreeRTwoS => "3r-2s",
            Rule::ThreeRPlusS => "3r+s",
        })
    }
}

impl std::str::FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace(' ', "").as_str() {
            "3r-2s" | "3r-2s=t" => Ok(Rule::ThreeRTwoS),
            "3r+s" | "3r+s=4t" => Ok(Rule::ThreeRPlusS),
            other => Err(Error::InvalidInput(format!(
                "unknown rule {other:?}; expected 3r-2s or 3r+s"
            ))),
        }
    }
}

/// A checked parameter set `(n, r, s, t)` for one of the rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConnectingSpec {
    pub n: u32,
    pub r: u32,
    pub s: u32,
    pub t: u32,
    pub rule: Rule,
}

/// The first hypothesis a parameter set fails.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum SpecViolation {
    #[error("n = {0} must be odd")]
    EvenModulus(u32),
    #[error("n = {0} must be greater than 5")]
    ModulusTooSmall(u32),
    #[error("{name} = {value} must lie in [0, {n})")]
    OutOfRange { name: char, value: u32, n: u32 },
    #[error("r, s, t must be pairwise distinct")]
    NotDistinct,
    #[error("gcd(|{first} - {second}|, {n}) = {gcd}: the difference is not coprime to n")]
    DifferenceNotCoprime {
        first: char,
        second: char,
        n: u32,
        gcd: u64,
    },
    #[error("{rule} congruence fails: residue {residue} mod {n}")]
    CongruenceFails { rule: Rule, residue: i64, n: u32 },
}

/// Validates oddness, `n > 5`, range, distinctness, coprime differences and
/// the rule congruence, in that order.
pub fn check_spec(
    n: u32,
    r: u32,
    s: u32,
    t: u32,
    rule: Rule,
) -> std::result::Result<ConnectingSpec, SpecViolation> {
    if n.is_multiple_of(2) {
        return Err(SpecViolation::EvenModulus(n));
    }
    if n <= 5 {
        return Err(SpecViolation::ModulusTooSmall(n));
    }
    for (name, value) in [('r', r), ('s', s), ('t', t)] {
        if value >= n {
            return Err(SpecViolation::OutOfRange { name, value, n });
        }
    }
    if r == s || s == t || r == t {
        return Err(SpecViolation::NotDistinct);
    }
    for (first, x, second, y) in [('r', r, 's', s), ('s', s, 't', t), ('r', r, 't', t)] {
        let gcd = (x.abs_diff(y) as u64).gcd(&(n as u64));
        if gcd != 1 {
            return Err(SpecViolation::DifferenceNotCoprime {
                first,
                second,
                n,
                gcd,
            });
        }
    }
    let spec = ConnectingSpec { n, r, s, t, rule };
    let residue = spec.residue();
    if residue != 0 {
        return Err(SpecViolation::CongruenceFails { rule, residue, n });
    }
    Ok(spec)
}

impl ConnectingSpec {
    pub fn group(&self) -> Group {
        Group::dihedral(self.n).expect("n > 5")
    }

    /// `alpha r - beta s - gamma t` reduced into `[0, n)`.
    fn residue(&self) -> i64 {
        let (alpha, beta, gamma) = self.rule.coefficients();
        (alpha * self.r as i64 - beta * self.s as i64 - gamma * self.t as i64)
            .rem_euclid(self.n as i64)
    }

    /// `alpha r - beta s` evaluated over the integers.
    pub fn combination(&self) -> i64 {
        let (alpha, beta, _) = self.rule.coefficients();
        alpha * self.r as i64 - beta * self.s as i64
    }

    /// No one of `r, s, t` is the average of the other two modulo `n`.
    pub fn avoids_midpoints(&self) -> bool {
        let n = self.n as i64;
        let [r, s, t] = [self.r, self.s, self.t].map(i64::from);
        [(r, t, s), (r, s, t), (s, t, r)]
            .iter()
            .all(|&(x, y, mid)| (x + y - 2 * mid).rem_euclid(n) != 0)
    }

    /// `{ab^r, ab^s, ab^t}` in `D_n`.
    pub fn connecting_set(&self) -> Vec<GroupElement> {
        let g = self.group();
        [self.r, self.s, self.t]
            .map(|k| g.reflection(k as i64).expect("dihedral"))
            .to_vec()
    }
}

impl fmt::Display for ConnectingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<_> = self
            .connecting_set()
            .iter()
            .map(ToString::to_string)
            .collect();
        write!(
            f,
            "D{} (r, s, t) = ({}, {}, {}) [{}]: {{{}}}",
            self.n,
            self.r,
            self.s,
            self.t,
            self.rule,
            names.join(", ")
        )
    }
}

pub fn is_prime(p: u32) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// The tabulated solution of `3r - 2s = t` for a prime `p >= 7`:
/// `r = floor(p / 3)`, then `t = 0, s = 3r / 2` when `p = 1 (mod 3)` and
/// `t = 1, s = (3r - 1) / 2` when `p = 2 (mod 3)`.
pub fn table_row(p: u32) -> Result<ConnectingSpec> {
    if p < 7 || !is_prime(p) {
        return Err(Error::InvalidInput(format!(
            "table rows need a prime p >= 7, got {p}"
        )));
    }
    let r = p / 3;
    let (s, t) = if p % 3 == 1 {
        (3 * r / 2, 0)
    } else {
        ((3 * r - 1) / 2, 1)
    };
    check_spec(p, r, s, t, Rule::ThreeRTwoS)
        .map_err(|v| Error::Invariant(format!("table row for p = {p} is invalid: {v}")))
}

/// The primes `7 <= p <= max`.
pub fn table_primes(max: u32) -> Vec<u32> {
    (7..=max).filter(|&p| is_prime(p)).collect()
}

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum InheritError {
    #[error("target modulus {target} must be a prime larger than {source_modulus}")]
    BadTarget { source_modulus: u32, target: u32 },
    #[error(
        "alpha r - beta s = {value} lies outside [0, {source_modulus}]; \
         inheritance is not guaranteed"
    )]
    Precondition { value: i64, source_modulus: u32 },
    #[error("revalidation at the target modulus failed: {0}")]
    Revalidation(SpecViolation),
}

/// Reuses `spec`'s `(r, s, t)` for the larger prime `target`.
pub fn inherit(
    spec: &ConnectingSpec,
    target: u32,
) -> std::result::Result<ConnectingSpec, InheritError> {
    if target <= spec.n || !is_prime(target) {
        return Err(InheritError::BadTarget {
            source_modulus: spec.n,
            target,
        });
    }
    let value = spec.combination();
    if !(0..=spec.n as i64).contains(&value) {
        return Err(InheritError::Precondition {
            value,
            source_modulus: spec.n,
        });
    }
    check_spec(target, spec.r, spec.s, spec.t, spec.rule).map_err(InheritError::Revalidation)
}

/// A parameter set together with its GRR certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionCertificate {
    #[serde(flatten)]
    pub spec: ConnectingSpec,
    pub connecting_set: Vec<String>,
    #[serde(flatten)]
    pub certificate: GrrCertificate,
}

pub fn certify(
    spec: &ConnectingSpec,
    method: Method,
    config: &OracleConfig,
) -> Result<ConstructionCertificate> {
    let set = spec.connecting_set();
    let certificate = is_grr(spec.group(), &set, method, config)?;
    Ok(ConstructionCertificate {
        spec: *spec,
        connecting_set: set.iter().map(ToString::to_string).collect(),
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_spec_examples() {
        let spec = check_spec(11, 3, 4, 1, Rule::ThreeRTwoS).unwrap();
        assert_eq!(spec.combination(), 1);
        assert!(spec.avoids_midpoints());
        assert!(check_spec(7, 2, 3, 0, Rule::ThreeRTwoS).is_ok());
        assert_eq!(
            check_spec(9, 0, 3, 6, Rule::ThreeRTwoS),
            Err(SpecViolation::DifferenceNotCoprime {
                first: 'r',
                second: 's',
                n: 9,
                gcd: 3
            })
        );
    }

    #[test]
    fn check_spec_failure_order() {
        use SpecViolation::*;
        assert_eq!(
            check_spec(10, 1, 2, 3, Rule::ThreeRTwoS),
            Err(EvenModulus(10))
        );
        assert_eq!(
            check_spec(5, 1, 2, 3, Rule::ThreeRTwoS),
            Err(ModulusTooSmall(5))
        );
        assert!(matches!(
            check_spec(7, 7, 2, 3, Rule::ThreeRTwoS),
            Err(OutOfRange { name: 'r', .. })
        ));
        assert_eq!(check_spec(7, 2, 2, 3, Rule::ThreeRTwoS), Err(NotDistinct));
        assert!(matches!(
            check_spec(7, 1, 2, 3, Rule::ThreeRTwoS),
            Err(CongruenceFails { residue: 3, .. })
        ));
        assert!(check_spec(13, 4, 0, 3, Rule::ThreeRPlusS).is_ok());
        assert!(check_spec(13, 4, 0, 3, Rule::ThreeRTwoS).is_err());
    }

    #[test]
    fn connecting_sets() {
        let d11 = Group::dihedral(11).unwrap();
        let set = check_spec(11, 3, 4, 1, Rule::ThreeRTwoS)
            .unwrap()
            .connecting_set();
        assert_eq!(set, d11.parse_elements("ab^3,ab^4,ab").unwrap());
        let d13 = Group::dihedral(13).unwrap();
        let set = check_spec(13, 3, 4, 1, Rule::ThreeRTwoS)
            .unwrap()
            .connecting_set();
        assert_eq!(set, d13.parse_elements("ab^3,ab^4,ab").unwrap());
        let d7 = Group::dihedral(7).unwrap();
        let set = check_spec(7, 2, 3, 0, Rule::ThreeRTwoS)
            .unwrap()
            .connecting_set();
        assert_eq!(set, d7.parse_elements("ab^2,ab^3,a").unwrap());
        assert!(set.iter().all(|g| g.order() == 2));
        assert_eq!(d7.generated_order(&set), 14);
    }

    #[test]
    fn table_rows() {
        let row = |p| {
            let s = table_row(p).unwrap();
            (s.r, s.s, s.t)
        };
        assert_eq!(row(7), (2, 3, 0));
        assert_eq!(row(29), (9, 13, 1));
        assert_eq!(row(97), (32, 48, 0));
        assert_eq!(row(67), (22, 33, 0));
        assert!(table_row(9).is_err());
        assert!(table_row(5).is_err());
        for p in table_primes(500) {
            let spec = table_row(p).unwrap();
            assert!((0..p as i64).contains(&spec.combination()));
        }
    }

    #[test]
    fn primes() {
        assert_eq!(table_primes(31), vec![7, 11, 13, 17, 19, 23, 29, 31]);
        assert!(!is_prime(1) && is_prime(2) && !is_prime(91) && is_prime(97));
    }

    #[test]
    fn inheritance() {
        let d11 = check_spec(11, 3, 4, 1, Rule::ThreeRTwoS).unwrap();
        let d13 = inherit(&d11, 13).unwrap();
        assert_eq!((d13.n, d13.r, d13.s, d13.t), (13, 3, 4, 1));
        assert_eq!(
            inherit(&d11, 11),
            Err(InheritError::BadTarget {
                source_modulus: 11,
                target: 11
            })
        );
        assert!(matches!(
            inherit(&d11, 15),
            Err(InheritError::BadTarget { .. })
        ));
        let d7 = check_spec(7, 2, 3, 0, Rule::ThreeRTwoS).unwrap();
        for p in table_primes(97).into_iter().filter(|&p| p > 7) {
            let spec = inherit(&d7, p).unwrap();
            assert_eq!((spec.r, spec.s, spec.t), (2, 3, 0));
        }
        // 3*1 - 2*5 = -7 needs a wrap-around modulo 7
        let wrapped = check_spec(7, 1, 5, 0, Rule::ThreeRTwoS).unwrap();
        assert_eq!(
            inherit(&wrapped, 11),
            Err(InheritError::Precondition {
                value: -7,
                source_modulus: 7
            })
        );
    }

    #[test]
    fn certify_small_cases() {
        let cfg = OracleConfig::default();
        let c = certify(
            &check_spec(11, 3, 4, 1, Rule::ThreeRTwoS).unwrap(),
            Method::Both,
            &cfg,
        )
        .unwrap();
        assert!(c.certificate.is_grr);
        assert_eq!(c.certificate.aut_order.as_ref().unwrap().to_string(), "22");
        let c = certify(
            &check_spec(13, 4, 6, 0, Rule::ThreeRTwoS).unwrap(),
            Method::Closure,
            &cfg,
        )
        .unwrap();
        assert_eq!(c.certificate.trivial_closure, Some(true));
        let json = serde_json::to_string(&c).unwrap();
        assert!(json.starts_with(
            r#"{"n":13,"r":4,"s":6,"t":0,"rule":"3r-2s","connecting_set":["a*b^4","a*b^6","a"]"#
        ));
        let back: ConstructionCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
    }
}
