//! Alternation-number certificates for chromatic numbers of general Kneser
//! graphs.
//!
//! The crate is organized around five areas:
//!
//! * [`signed`]: sign vectors, orderings, hypergraphs and the alternation
//!   kernel computing `alt_σ` / `salt_σ` and the lower-bound certificates
//!   derived from them.
//! * [`constructions`]: Kneser and Schrijver families, Mycielskians,
//!   blow-ups, categorical products, explicit Kneser representations and box
//!   complexes.
//! * [`coloring`]: exact oracles (chromatic number, multicolorings,
//!   homomorphisms, clique number) every certificate is checked against.
//! * [`gale`]: moment-curve point configurations on spheres and their
//!   sampled and exact verification.
//! * [`verify`]: reproducible verification suites and their reports.

pub mod coloring;
pub mod constructions;
pub mod error;
pub mod gale;
pub mod graph;
pub mod io;
pub mod signed;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
pub use signed::{
    alt, AltCertificate, Hypergraph, Kind, LinearOrder, Method, Mode, SignVector, SignedPair,
};

/// Version string embedded in every certificate and report.
pub const TOOL_VERSION: &str = concat!("altermatic ", env!("CARGO_PKG_VERSION"));
