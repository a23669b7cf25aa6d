pub mod constants;
pub mod error;
pub mod foxwright;
pub mod gamma;
pub mod jets;
pub mod mathieu;
pub mod quadrature;
pub mod series;
pub mod sum;
pub mod zeta;

pub use error::{Error, Result};
