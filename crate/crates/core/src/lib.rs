//! Exact Kauffman bracket polynomials for 3-tangle shadow diagrams.
//!
//! The bracket of a 3-tangle is a 5-tuple over `Z[x]` in the basis of the
//! three-strand diagram monoid. Powers of a tangle are computed through its
//! states matrix, closures through fixed loop weights, and whole families
//! through rational generating functions. A brute-force state-sum engine
//! over explicit diagrams serves as the independent check.

pub mod bfile;
pub mod bracket;
pub mod error;
pub mod generators;
pub mod oracle;
pub mod poly;
pub mod reference;
pub mod series;
pub mod tl3;
pub mod verify;

pub use bracket::{
    charpoly, closed_form_bracket, closure, compose, power, pq_invariants, states_matrix,
    BracketVector, PqInvariants, RsConvention, StatesMatrix,
};
pub use error::{BracketError, DiagramError, ParseError, SeriesError};
pub use generators::Generator;
pub use oracle::{compile_word, enumerate_states, ShadowDiagram, StateSum, TangleWord};
pub use poly::{BivariatePoly, Polynomial};
pub use series::{coefficient_table, gf_from_tuple, CoefficientTriangle, RationalGf};
pub use tl3::{ScaledTl, TlElement};
