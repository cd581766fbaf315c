//! Exact signless-Laplacian (Q) polynomials, semi-edge walk generating
//! functions and Q-coronals of graphs, with closed forms for graphs built by
//! complement, join, corona, edge corona and complete multipartite
//! constructions.
//!
//! ```
//! use qwalk_core::graph::complete;
//! use qwalk_core::walks::q_generating_function;
//!
//! // K3 is 2-regular: W_Q(t) = 3 / (1 - 4t).
//! let w = q_generating_function(&complete(3));
//! let series = w.series(3).unwrap();
//! assert_eq!(series.to_strings(), ["3", "12", "48", "192"]);
//! ```

pub mod algebra;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod matrix;
pub mod population;
pub mod spectral;
pub mod verify;
pub mod walks;

pub use algebra::{
    char_poly, compose_poly_ratfun, poly_affine_substitute, ratfun_arith, series_expand,
    squarefree_decomposition, sum_adjugate_ratio, ArithOp, Polynomial, PowerSeries, Rational,
    RationalFunction, SquarefreeDecomposition,
};
pub use error::{Error, Result};
pub use formulas::RegularGraphStats;
pub use graph::{Family, Graph};
pub use matrix::IntMatrix;
pub use spectral::{MultiplicityReport, SpectralDecomposition};
pub use walks::WalkCounts;
