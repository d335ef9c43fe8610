use crate::group::{Group, GroupElement};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("domain mismatch: {left} belongs to {left_group}, {right} belongs to {right_group}")]
    DomainMismatch {
        left: GroupElement,
        left_group: Group,
        right: GroupElement,
        right_group: Group,
    },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(
        "graph has {vertices} vertices, above the automorphism oracle limit of {limit}; \
         certify via the closure method instead"
    )]
    ResourceLimit { vertices: usize, limit: usize },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
