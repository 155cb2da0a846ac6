pub mod chars;
pub mod composite;
pub mod error;
pub mod exactring;
pub mod lmov;
pub mod memo;
pub mod parallel;
pub mod partitions;
pub mod reference;
pub mod selftest;
pub mod skein;
pub mod symfun;

pub use error::{Error, Result};
