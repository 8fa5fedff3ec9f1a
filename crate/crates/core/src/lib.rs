//! Repeated-root cyclic codes over prime fields and their symbol-pair
//! distances.
//!
//! [`cyclic::CodeSpec`] describes a code of length `n = l·p` by its
//! factored generator. [`distsearch::analyze`] computes the exact minimum
//! Hamming distance and minimum symbol-pair distance with witnesses and
//! classifies the code as MDS, AMDS or neither. [`catalog`] builds the
//! known families and holds the expected-results registry.

pub mod catalog;
pub mod cyclic;
pub mod distsearch;
mod error;
pub mod gfp;
pub mod linalg;
pub mod pairmetric;
pub mod poly;

pub use cyclic::{BuildMode, CodeSpec, CodeSpecInput, Codeword, FactorKind, FactorSpec};
pub use distsearch::{
    analyze, classify, full_enum, Classification, DistanceReport, Method, MethodChoice, SearchConfig,
};
pub use error::{Error, Result};
pub use gfp::{FieldElement, PrimeField};
pub use pairmetric::{pair_distance, pair_read, pair_weight, support_pair_weight, SupportSet};
pub use poly::Polynomial;
