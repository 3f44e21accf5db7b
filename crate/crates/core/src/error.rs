use thiserror::Error;

use crate::oracle::BisectError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parameter `{name}` = {value} is outside its domain: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("unsupported model variant: {0}")]
    UnsupportedVariant(String),

    #[error("price {0} is outside [0, 1]")]
    PriceOutOfRange(f64),

    #[error("invalid sweep specification: {0}")]
    InvalidSpec(String),

    #[error(transparent)]
    Bisect(#[from] BisectError),
}
