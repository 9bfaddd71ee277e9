use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),

    #[error("{what} cap exceeded: {actual} > {limit}")]
    CapExceeded {
        what: &'static str,
        limit: u128,
        actual: u128,
    },

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: u32, degree: usize },

    #[error("point set is not invariant under the group")]
    NotInvariant,

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("group is not transitive")]
    NotTransitive,

    #[error("not a p-group: {0}")]
    NotPGroup(String),

    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),

    #[error("element is not in the image of the homomorphism")]
    NotInImage,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph error: {0}")]
    Graph(String),

    #[error("pair is not arc-transitive: {0}")]
    NotArcTransitive(String),

    #[error("{0:?} is not an edge")]
    NotAnEdge((u32, u32)),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
