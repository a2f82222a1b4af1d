//! Exact symbolic and numeric verification of continuum-defect geometry.

pub mod cli;
pub mod defects;
pub mod exterior;
pub mod field;
pub mod geometry;
pub mod irreducible;
pub mod random;
pub mod transport;
