//! Exact rational scalars, small linear algebra, and homogeneous polyhedral
//! cones backed by a double description engine.

pub mod cone;
pub mod linalg;
pub mod rat;
pub mod spaces;
