pub mod catalog;
pub mod elliptic;
pub mod error;
pub mod gamma;
pub mod lauricella;
pub mod quadrature;
pub mod roberts;

pub use error::{Error, Result};
