//! Symmetry breaking in graph products.
//!
//! Exact distinguishing numbers and indices, Kronecker and Cartesian
//! products, Boolean squares and Cartesian skeletons, closed-form values for
//! standard product families, and a harness that checks the closed forms
//! against brute-force computation on small instances.

pub mod bitset;
pub mod distinguishing;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod products;
pub mod skeleton;
pub mod symmetry;
pub mod verify;

pub use distinguishing::{
    count_distinguishing, count_inequivalent_distinguishing, distinguishing_index,
    distinguishing_number, lift_kronecker_edge_labeling, DistinguishingResult, LabelKind,
    Labeling, SearchBudget,
};
pub use error::{Error, Result};
pub use families::{FormulaResult, MultipartiteSpec};
pub use graph::{are_isomorphic, Bipartition, Graph, Partition};
pub use products::{bipartite_split, cartesian, kronecker, product_power, ProductKind};
pub use skeleton::{boolean_square, cartesian_skeleton, is_dispensable, BooleanSquare};
pub use symmetry::{
    automorphism_group, AutomorphismGroup, EdgeLabeling, Permutation, VertexLabeling,
};
