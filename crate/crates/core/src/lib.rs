pub mod catalog;
pub mod cycles;
pub mod error;
pub mod graph;
pub mod io;
pub mod orient;
pub mod perm;
pub mod report;
pub mod separator;
pub mod surface;

pub use error::{Error, Result};
