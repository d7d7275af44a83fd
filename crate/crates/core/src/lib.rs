pub mod error;
pub mod exact;
pub mod format;
pub mod gen;
pub mod global;
pub mod hull;
pub mod local;
pub mod report;
pub mod surface;

pub use error::{Error, Result};
