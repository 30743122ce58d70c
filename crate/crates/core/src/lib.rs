//! Exact-arithmetic machinery for symmetrizing polytopes under the type-A
//! reflection group.
//!
//! The library works in the quotient space `W = R^d / 1` of linear functionals
//! modulo the all-one direction and in affine slices `U = { x : [1, x] = s }`.
//! All arithmetic is exact rational; there is no floating point anywhere.
//!
//! The main pipeline:
//!
//! * [`kernel`] — rationals, vectors, and polyhedral cones with a double
//!   description engine;
//! * [`polytope`] — V-representation polytopes, face lattices, normal fans;
//! * [`typea`] — the symmetric group as a reflection group, ordered set
//!   partitions, and the fundamental chamber;
//! * [`ffan`] — fundamental and refined fundamental fans of a placed,
//!   appropriate polytope;
//! * [`posets`] — finite posets, chamber-tagged posets and their group
//!   symmetrization, isomorphism search;
//! * [`symmetrize`] — orbit hulls and the cross-checks between the fan route
//!   and the brute-force hull route;
//! * [`realize`] — decorated ordered set partitions and the realization
//!   recipe that symmetrizes a transported simplex.

pub mod error;
pub mod ffan;
pub mod kernel;
pub mod polytope;
pub mod posets;
pub mod realize;
pub mod symmetrize;
pub mod typea;

pub use error::{Error, Result};
pub use kernel::cone::{Cone, Halfspace, Location, Sense};
pub use kernel::rat::Rat;
pub use kernel::spaces::{pairing, UPoint, WVector};
