//! Containment testing: generic subgraph isomorphism, a specialized
//! detector for intersecting even cycles, simple-path and disjoint-path
//! machinery, and a toy-scale minor checker.

mod cycles;
mod minor;
mod paths;
mod vf2;

pub use cycles::{contains_intersecting_even_cycles, CycleWitness};
pub use minor::contains_minor;
pub use paths::{find_disjoint_path_system, has_path_on, restrict_to_u_uw, PathSystem};
pub use vf2::contains_subgraph;
