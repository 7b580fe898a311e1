//! Degree modules, image ideals and canonical factorizations for locally
//! nilpotent derivations of affine domains over Q.

mod error;

pub mod degmod;
pub mod factor;
pub mod groebner;
pub mod lnd;
pub mod oracle;
pub mod poly;
pub mod problem;
pub mod subalg;

pub use error::{Error, Result};
