//! Exact decision procedures for the stability of pairs of weighted vectors
//! under a torus action.
//!
//! A pair `(v, w)` is described frame by frame through its weight supports
//! `A(v)`, `A(w)`, the degree `q = deg(V)` and the weight polytope `N(I)` of
//! the identity. The [`stability`] module decides K-semistability,
//! K-stability and uniform K-stability (with the least constant `m`) using
//! exact rational polytope computations, and returns integral
//! one-parameter subgroups as certificates.

pub mod corpus;
pub mod degeneration;
pub mod error;
pub mod exact;
pub mod instance;
pub mod lattice;
pub mod lp;
pub mod numeric;
pub mod polytope;
pub mod stability;

pub use error::{Error, Result};
pub use lattice::{LatticeContext, OneParamSubgroup, Weight};
pub use polytope::RationalPolytope;
pub use stability::{FrameFamily, PairInstance, StabilityVerdict, WeightSupport};
