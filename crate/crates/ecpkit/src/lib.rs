//! Exact linear algebra and coding theory over small finite fields.
//!
//! The crate is organized bottom-up: [`field`] provides GF(p^e) arithmetic,
//! [`linalg`] exact matrix computations over such fields, [`codes`] linear
//! codes with star-product and square-code operations, [`families`] concrete
//! code constructions (generalized Reed-Solomon, alternant, Goppa, random),
//! [`ecp`] error-correcting pairs and the pair-based decoder, [`distinguish`]
//! square-code and bilinear-system distinguishers with Monte Carlo harnesses,
//! and [`pkc`] toy McEliece / Niederreiter encryption built on top.
//!
//! All randomized entry points take explicit 64-bit seeds; identical seeds
//! reproduce identical outputs, bit for bit, on every platform.

pub mod codes;
pub mod distinguish;
pub mod ecp;
pub mod error;
pub mod families;
pub mod field;
pub mod io;
pub mod linalg;
pub mod pkc;
pub mod rng;
pub mod trials;

pub use error::{Error, Result};
