//! Command line and HTTP session service for the rootloop engine.

pub mod args;
pub mod commands;
pub mod error;
pub mod input;
pub mod service;

pub use commands::{execute, run, Output, Report};
pub use error::CliError;
