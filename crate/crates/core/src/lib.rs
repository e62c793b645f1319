//! Toolkit for signless-Laplacian (Q-index) spectral extremal graph theory.

pub mod error;
pub mod graph;
pub mod linalg;
pub mod spectral;
pub mod subgraph;
pub mod chromatic;
pub mod families;
pub mod bounds;
pub mod descent;
pub mod search;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{DegreeProfile, Graph};
