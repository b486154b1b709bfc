//! Computational toolkit for finite semigroups and groups viewed as
//! relational structures.
//!
//! The layers, bottom up:
//!
//! - [`algebra`]: Cayley tables, groups, Rees matrix semigroups, kernels,
//!   and the coordinatization of finite simple semigroups.
//! - [`relational`]: predicatization (operation graphs as relations),
//!   equation systems, word-equation compilation, and an exact solver.
//! - [`power`]: finite direct powers, projections, product-form solving,
//!   consistency analysis, bucket decomposition, the finite-subsystem
//!   reducer, and the non-Noetherian counterexample chain.
//! - [`classify`]: quasi-identity checks, the simple/hard classification,
//!   exhaustive enumeration of small semigroups, and survey runs.
//! - [`io`]: text formats for tables and Rees specifications.

pub mod algebra;
pub mod classify;
pub mod error;
pub mod io;
pub mod power;
pub mod relational;

pub use error::{Error, Result};
