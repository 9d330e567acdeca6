//! Exact-arithmetic constructions of highest weight vectors for
//! `GL_r x GL_s` acting on tuples of `r x s` matrices, their pullbacks to
//! `n x n` matrices and the nilpotent cone, and the combinatorial and
//! linear-algebra machinery needed to verify the constructions at desk
//! scale: Young tableaux, pictures between skew diagrams, Specht modules
//! over the rational group algebra of the symmetric group, sparse
//! multivariate polynomials over exact rationals, and independent
//! dimension oracles (symmetric group characters, Kronecker coefficients,
//! charge / Kostka-Foulkes polynomials).
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere in this crate.

pub mod charge;
pub mod config;
pub mod error;
pub mod hwv;
pub mod linalg;
pub mod oracle;
pub mod partition;
pub mod perm;
pub mod pictures;
pub mod polyring;
pub mod skew;
pub mod specht;
pub mod tableau;

pub use error::{CoreError, Result};
pub use partition::{GLWeight, Partition};
pub use skew::{Cell, SkewDiagram};
pub use tableau::{Flavor, Tableau};
