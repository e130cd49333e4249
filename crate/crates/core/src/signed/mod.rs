//! Sign vectors, orderings, hypergraphs and alternation certificates.

mod certificate;
mod hypergraph;
pub(crate) mod kernel;
mod order;
pub mod property;
mod vector;

use serde::{Deserialize, Serialize};

pub use certificate::{
    alt_min, alt_sigma, certificate_bound, certify, salt_sigma, sigma_value, AltCertificate, Strategy,
    DEFAULT_FACTORIAL_CAP,
};
pub use hypergraph::{contains_edge, Hypergraph, KERNEL_VERTEX_CAP};
pub use order::{concat_order, LinearOrder};
pub use property::{alt_property, SignedProperty};
pub use vector::{alt, signed_split, SignVector, SignedPair};

/// Which side condition a certificate uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Kind {
    /// Neither side may contain a hyperedge; bound `|V| - k`.
    Alt,
    /// At most one side may contain a hyperedge; bound `|V| + 1 - k`.
    Salt,
}

/// How `alt_σ` / `salt_σ` are evaluated for a fixed ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Mode {
    Exhaustive,
    BranchAndBound,
}

/// How the certificate's ordering and value were obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Method {
    Exhaustive,
    BranchAndBound,
    HeuristicOrderSearch,
}

impl From<Mode> for Method {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Exhaustive => Method::Exhaustive,
            Mode::BranchAndBound => Method::BranchAndBound,
        }
    }
}
