//! Graded Betti tables of graph curves.
//!
//! A graph curve is a union of lines in projective space, one per vertex of a
//! graph, meeting at one point per edge. This crate computes the quadratic and
//! cubic strands of their Betti tables from closed formulas and, independently,
//! from Koszul homology of an explicit line arrangement over a prime field.

pub mod arrangement;
pub mod cli;
pub mod error;
pub mod field;
pub mod formula;
pub mod graph;
pub mod harness;
pub mod linalg;
pub mod oracle;
pub mod table;

pub use error::{ArrangementError, FormulaError, GraphError, HarnessError, OracleError};
pub use field::{PrimeField, DEFAULT_PRIME};
pub use graph::{graph_stats, Graph, GraphStats};
pub use table::{BettiTable, Strand};
pub use arrangement::{build_arrangement, FieldConfig, LineArrangement};
pub use oracle::{betti_table_oracle, build_model, oracle_for_graph, strand_betti, EvaluationModel, Method, OracleOptions};
