use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::{Group, GroupElement};
use crate::schur::closure;

use super::{automorphism_order, cayley_graph, OracleConfig};

/// How a GRR claim is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// `<<S>>` is trivial.
    Closure,
    /// Exact `|Aut(Cay(G, S))|` by backtracking.
    Oracle,
    Both,
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closure" => Ok(Method::Closure),
            "oracle" => Ok(Method::Oracle),
            "both" => Ok(Method::Both),
            other => Err(Error::InvalidInput(format!("unknown method {other:?}"))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Closure => "closure",
            Method::Oracle => "oracle",
            Method::Both => "both",
        })
    }
}

/// An automorphism group order. Serialised as a JSON integer when it fits
/// in 64 bits and as a decimal string otherwise.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AutOrder(pub BigUint);

impl fmt::Display for AutOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for AutOrder {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_u64() {
            Some(v) => s.serialize_u64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for AutOrder {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(u64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Int(v) => Ok(AutOrder(BigUint::from(v))),
            Repr::Text(t) => t.parse().map(AutOrder).map_err(serde::de::Error::custom),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrrCertificate {
    pub method: Method,
    /// `None` when the closure was not computed.
    pub trivial_closure: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aut_order: Option<AutOrder>,
    /// Automorphism generators as vertex image lists, vertex `i` being the
    /// `i`-th element in `(flip, rot)` order.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<usize>>>,
    pub is_grr: bool,
}

/// Decides whether `Cay(group, s)` is a GRR of `group`.
///
/// `s` must be identity-free, inverse-closed and generating. With
/// [`Method::Both`] a trivial closure that the oracle contradicts is an
/// error; the converse disagreement is only logged.
pub fn is_grr(
    group: Group,
    s: &[GroupElement],
    method: Method,
    config: &OracleConfig,
) -> Result<GrrCertificate> {
    let graph = cayley_graph(group, s, false)?;
    if !graph.is_undirected() {
        return Err(Error::InvalidInput(
            "connecting set must be closed under inverses".into(),
        ));
    }
    let trivial_closure = match method {
        Method::Closure | Method::Both => Some(closure(group, s)?.is_trivial()),
        Method::Oracle => None,
    };
    let aut = match method {
        Method::Oracle | Method::Both => Some(automorphism_order(&graph, config)?),
        Method::Closure => None,
    };
    let oracle_grr = aut
        .as_ref()
        .map(|a| a.order == BigUint::from(group.order()) && graph.left_regular_embeds());
    let is_grr = match (trivial_closure, oracle_grr) {
        (Some(true), Some(false)) => {
            return Err(Error::Invariant(format!(
                "closure of {} in {group} is trivial but |Aut| = {}",
                render(s),
                aut.map(|a| a.order.to_string()).unwrap_or_default()
            )))
        }
        (Some(false), Some(true)) => {
            log::warn!(
                "closure of {} in {group} is not trivial, yet the oracle finds a GRR",
                render(s)
            );
            true
        }
        (_, Some(v)) | (Some(v), None) => v,
        (None, None) => unreachable!("some method always runs"),
    };
    Ok(GrrCertificate {
        method,
        trivial_closure,
        aut_order: aut.as_ref().map(|a| AutOrder(a.order.clone())),
        generators: aut.map(|a| a.generators),
        is_grr,
    })
}

fn render(s: &[GroupElement]) -> String {
    let names: Vec<_> = s.iter().map(ToString::to_string).collect();
    format!("{{{}}}", names.join(", "))
}
