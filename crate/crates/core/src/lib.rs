//! Exact Grundy numbers and the structural machinery around them: twin-vertex
//! bounds, a linear cubic classifier, t-atoms, constructive families and a
//! verification harness.

pub mod atoms;
pub mod families;
pub mod graph;
pub mod harness;
pub mod solver;
pub mod twins;
