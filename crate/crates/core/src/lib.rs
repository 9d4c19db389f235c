pub mod catalog;
pub mod config;
pub mod error;
pub mod exactalg;
pub mod folocal;
pub mod gallery;
pub mod localring;
pub mod projplane;
pub mod puiseux;

pub use config::Limits;
pub use error::{Error, Result};
