//! Quantum Reed-Muller codes on the m-cube, their Gray-code layouts, and
//! distillation-factory analysis.
//!
//! Modules, from the bottom up:
//!
//! - [`f2core`]: packed GF(2) vectors and matrices (rank, echelon form, kernels).
//! - [`cube`]: vertices, subcubes, products of affine literals, Gray orders.
//! - [`qrm`]: RM and QRM codes, the Plotkin recursion, puncturing, the big unfolded code.
//! - [`bases`]: the explicit layout bases and the translated-square machinery.
//! - [`logic`]: transversal S/T actions on subcubes and the logical CZ/CCZ circuits.
//! - [`distance`]: minimum-weight words via affine subspaces and brute-force oracles.
//! - [`factory`]: leading-order and exact truncated error rates, Monte Carlo.
//! - [`layout`]: grid coordinates, generator footprints, JSON/SVG export.
//! - [`appendix`]: row/rank tables of QRM_4(1,1) before and after puncturing.
//! - [`registry`]: the fixed table of code labels shared by the CLI and tests.

pub mod appendix;
pub mod bases;
pub mod cube;
pub mod distance;
pub mod error;
pub mod factory;
pub mod f2core;
pub mod layout;
pub mod logic;
pub mod qrm;
pub mod registry;

pub use error::{Error, Result};
