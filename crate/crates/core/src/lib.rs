//! Exact rational computations in rational homotopy theory.
//!
//! The crate builds Sullivan models of finite commutative differential graded
//! algebras and of wedges of spheres, decides whether attaching a cell along a
//! homotopy class is rationally inert, and checks the structural identities
//! that accompany an inert attachment (fibre cohomology, free Lie quotients,
//! asphericity of one-relator complexes). All arithmetic is over `Q` with
//! arbitrary precision; every result is certified up to explicit degree and
//! length caps.

pub mod attach;
pub mod caps;
pub mod cli;
pub mod error;
pub mod gca;
pub mod lie;
pub mod linalg;
pub mod onerel;
pub mod rational;
pub mod sullivan;

pub use caps::Caps;
pub use error::{Error, Result};
pub use rational::Q;
