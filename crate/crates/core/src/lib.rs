//! Combinatorics of balanced sutured Heegaard diagrams.
//!
//! Parse and validate a diagram ([`diagram`]), compute its periodic domains
//! ([`lattice`]), decide admissibility with an exact area certificate
//! ([`admissibility`]), enumerate generators ([`generators`]), assemble the
//! full-tangle bound ([`tangle`]), and compute sutured Floer ranks of nice
//! diagrams ([`floer`]).

mod ids;

pub mod admissibility;
pub mod builders;
pub mod corpus;
pub mod diagram;
pub mod floer;
pub mod generators;
pub mod lattice;
pub mod report;
pub mod selftest;
pub mod linalg;
pub mod simplex;
pub mod tangle;

pub use diagram::{parse_diagram, serialize, validate, SuturedDiagram};
pub use lattice::DomainVector;
