//! Library surface of the `nnhier` binary, split out so the command
//! implementations, formats and data generators are testable directly.

pub mod args;
pub mod commands;
pub mod datagen;
pub mod error;
pub mod export;
pub mod input;

pub use error::CliError;
