//! Exact character tables and p-block invariants of finite permutation groups.
//!
//! The crate is organised bottom-up:
//!
//! * [`perm`]: permutations, stabilizer chains, conjugacy classes, Sylow subgroups
//!   and quotients by normal subgroups.
//! * [`cyclo`]: exact arithmetic in cyclotomic fields and reduction modulo a
//!   prime ideal above `p`.
//! * [`chartab`]: Dixon–Schneider character tables and their JSON format.
//! * [`blocks`]: p-block decomposition and block invariants (`k`, `k0`, `l`, defect).
//! * [`normal`]: block theory relative to a normal subgroup.
//! * [`families`]: constructors for the standard families of small groups.

pub mod arith;
pub mod blocks;
pub mod chartab;
pub mod cyclo;
mod error;
pub mod families;
pub mod io;
pub mod normal;
pub mod perm;

pub use error::{Error, Result};
