//! Theta lifts of nilpotent orbits for the stable-range dual pairs
//! (O(p,q), Sp(2n,R)), (U(p,q), U(m,n)) and (Sp(p,q), O*(2n)).
//!
//! The crate covers signed Young diagrams and their lifts, root data and Weyl
//! dimensions, graded decompositions of coordinate rings of lifted orbit closures,
//! exact moment-map geometry over the Gaussian rationals, and projective degrees.

pub mod combinatorics;
pub mod degree;
pub mod error;
pub mod geometry;
pub mod repdecomp;
pub mod rootdata;

pub use error::{Error, Result};
