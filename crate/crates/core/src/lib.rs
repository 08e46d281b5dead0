//! Friends-and-strangers graphs `FS(X, Y)`.
//!
//! Vertices of `FS(X, Y)` are bijections from the vertices of `X` (chairs)
//! to the vertices of `Y` (people); two arrangements are adjacent when they
//! differ by swapping the occupants of an `X`-edge who are adjacent in `Y`.
//!
//! Internally every vertex label is 0-based. Text, JSON and DOT output use
//! 1-based labels.

pub mod coxeter;
pub mod cyclespace;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod io;
pub mod fs;
pub mod gf2;
pub mod perm;
pub mod theorems;
pub mod verify;

pub use enumerate::{canonical_form, enumerate_small_graphs};
pub use error::{Error, Result};
pub use graph::{make_family, FamilySpec, Graph};
pub use perm::Permutation;
pub use fs::{fs_components, fs_is_connected, ComponentCensus, EdgeLabel};
