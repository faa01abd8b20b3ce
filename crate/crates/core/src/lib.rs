pub mod cli;
pub mod error;
pub mod freealg;
pub mod ihoe;
pub mod linalg;
pub mod pbw;
pub mod presentation;
pub mod rewrite;
pub mod words;

pub use error::{Error, Result};
