pub mod arrangement;
pub mod cover;
pub mod error;
pub mod graph;
pub mod io;
pub mod groupoid;
pub mod ktheory;
pub mod linalg;
pub mod random;
pub mod verify;

pub use error::{Error, Result};
