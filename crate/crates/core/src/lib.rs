//! Conditional transformer VAE that assembles motion sequences from a
//! learnable atomic-action codebook, together with the synthetic
//! compositional-motion benchmark and evaluation metrics used to measure it.

pub mod error;

pub use error::{Error, Result};
