//! One-way road networks: connectivity, exact collision simulation,
//! collision-free subset selection, the subset-hardness construction and
//! turn-bounded shortest paths.

pub mod connectivity;
pub mod error;
pub mod io;
pub mod kinematics;
pub mod model;
pub mod reduction;
pub mod shortest_path;
pub mod solver;

pub use error::{Error, Result};
