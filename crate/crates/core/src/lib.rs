pub mod algebra;
pub mod binary_forms;
pub mod builder;
pub mod classifier;
pub mod error;
pub mod experiment;
pub mod sampler;
pub mod tensor;

pub use error::{Error, Result};
