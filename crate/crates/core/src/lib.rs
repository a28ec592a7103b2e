//! Executable checks for C*-simplicity of discrete groups.

pub mod boundary;
pub mod coxeter;
pub mod error;
pub mod group;
pub mod report;
pub mod spectral;

pub use error::{Error, Result};
pub use group::{Ball, Element, Group, GroupSpec, Order};
