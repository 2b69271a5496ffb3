//! Command-line front end for `mvf-rmf-core`: JSON documents, a persistent
//! basis cache and plain-text tables.

pub mod cache;
pub mod cli;
pub mod error;
pub mod formats;
pub mod render;

pub use cache::{BasisCache, CACHE_DIR_ENV};
pub use cli::run;
pub use error::{CliError, Result};
