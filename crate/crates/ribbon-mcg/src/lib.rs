pub mod action;
pub mod cli;
pub mod error;
pub mod graph;
pub mod group;
pub mod hopf;
pub mod verify;

pub use error::{Error, Result};
