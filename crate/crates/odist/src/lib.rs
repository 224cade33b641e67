//! Exact solvers for the distinguishing number, distinguishing index and
//! their proper-colouring variants on oriented graphs, plus min/max scans
//! over all orientations of a base graph and constructive certificates
//! (rigid orientations, biclique word sets, Latin-square arc colourings).

pub mod automorphism;
pub mod config;
pub mod distinguishing;
pub mod error;
pub mod graph;
pub mod constructions;
pub mod labelling;
pub mod tables;
pub mod words;

pub use automorphism::{
    automorphisms, is_distinguishing, is_rigid, undirected_automorphisms, AutomorphismList,
    LabelTarget, Permutation,
};
pub use distinguishing::{
    classical_bounds, distinguishing_exists, dprime_biclique_formula, extremal, parameter_value,
    undirected_parameter_value, DPrimeBiclique, Direction, ExtremalResult, ParamKind,
};
pub use error::{Error, Result};
pub use graph::{
    build_family, enumerate_orientations, orient, read_edge_list, reverse, Family,
    OrientationMask, OrientedGraph, UndirectedGraph,
};
pub use labelling::Labelling;
