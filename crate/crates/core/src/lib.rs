//! Exact computer algebra for the noncommutative Connes-Kreimer Hopf algebra
//! on plane forests and its dual.
//!
//! The crate covers plane forests and their codes ([`combinat`]), exact
//! coefficient rings ([`polyring`]), the Tamari order on forests
//! ([`tamari`]), the Hopf structures in the `Y`/`X`/`C` bases
//! ([`nck_hopf`]), noncommutative and quasi-symmetric functions
//! ([`ncsf_qsym`]), the Birkhoff factorization producing the
//! multiparameter Catalan idempotents ([`birkhoff`]), classical Lie
//! idempotents of the descent algebra ([`idempotents`]) and noncommutative
//! Ehrhart polynomials of forest posets ([`ehrhart`]).

pub mod birkhoff;
pub mod combinat;
pub mod ehrhart;
pub mod error;
pub mod idempotents;
pub mod json;
pub mod linalg;
pub mod lincomb;
pub mod nck_hopf;
pub mod ncsf_qsym;
pub mod polyring;
pub mod ring;
pub mod tamari;
pub mod verify;

pub use error::{Error, Result};
pub use lincomb::LinComb;
pub use ring::Ring;
