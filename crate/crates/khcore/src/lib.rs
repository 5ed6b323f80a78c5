//! Exact-arithmetic engine for Khovanov cohomology of knots and links.
//!
//! The pipeline: parse a planar diagram (PD code), enumerate its cube of
//! resolutions, assemble the signed bigraded chain complex over the rank-2
//! Frobenius algebra, and compute integer homology through sparse Smith
//! normal form. On top of that sit the skein mapping-cone machinery, a
//! filtered-complex spectral-sequence module, and executable checkers for
//! the unknot certificate and the determinant / Alexander rank bounds.

pub mod cube;
pub mod diagram;
pub mod error;
pub mod homalg;
pub mod invariants;
pub mod khcomplex;
pub mod spectral;
pub mod table;
pub mod tqft;

#[doc(hidden)]
pub mod gen;

pub use diagram::PlanarDiagram;
pub use error::KhError;
pub use homalg::{BigradedHomology, SnfResult, SparseIntMatrix};
pub use khcomplex::{BigradedComplex, Direction, Ring, SignRule, Variant};
