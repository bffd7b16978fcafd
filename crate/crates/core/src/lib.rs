//! Exact computation in coefficient-free cluster algebras of affine type.
//!
//! The crate has three layers:
//!
//! * an exact mutation engine: seeds of multivariate Laurent polynomials with
//!   big-integer coefficients, exchange-matrix mutation, denominator vectors,
//!   and breadth-first enumeration of the (infinite) exchange graph with
//!   canonical deduplication;
//! * a combinatorial model of the cluster category of the underlying tame
//!   hereditary algebra: the transjective component in τ-coordinates, the
//!   exceptional tubes found from the root lattice, Hom and Ext dimensions,
//!   wings, bricks and cluster-tilting detection, plus a random-representation
//!   oracle over a prime field that recomputes Hom dimensions from scratch;
//! * a verifier that tracks cluster-tilting objects along mutation paths,
//!   re-bases the seed at an arbitrary cluster and checks that every observed
//!   denominator matches the Hom-dimension prediction, with its two reduction
//!   variants reported side by side.
//!
//! Everything is deterministic: fixed seeds give byte-identical reports for any
//! worker count.

pub mod category;
pub mod denominator;
pub mod error;
pub mod laurent;
pub mod oracle;
pub mod quiver;
pub mod root_data;
pub mod seed;
pub mod verify;
pub mod worked_example;

pub use category::{ClusterCategory, IndObject, TubeData};
pub use denominator::{
    compatibility_check, has_reduced_t_denominator, has_t_denominator, predict, Compatibility,
    PredictedDenominator, TiltingSeed, Variant,
};
pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use oracle::{oracle_hom_h, OracleConfig};
pub use quiver::Quiver;
pub use root_data::{classify_affine, AffineType, DimVector, EulerData};
pub use seed::{
    denominator_vector, distinct_variables, enumerate_seeds, DenomVector, ExchangeMatrix, Seed,
    DEFAULT_NODE_CAP,
};
pub use verify::{
    find_path_to_objects, track_mutations, verify_denominators, TrackedSeed, VerificationReport,
    VerifyConfig,
};
