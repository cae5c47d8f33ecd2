//! Exact arithmetic over polynomial charts: rationals, multivariate
//! polynomials, vector fields and polynomial maps.

mod chart;
mod chart_map;
mod monomial;
mod parse;
mod poly;
mod vector_field;

pub use chart::{is_identifier, Chart};
pub use chart_map::ChartMap;
pub use monomial::Monomial;
pub use parse::{parse_rational, GrammarError};
pub use poly::Poly;
pub use vector_field::VectorField;

/// Exact coefficient field.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("chart mismatch: {left} vs {right}")]
    ChartMismatch { left: String, right: String },
    #[error("unknown coordinate '{0}'")]
    UnknownCoordinate(String),
    #[error("invalid coordinate name '{0}'")]
    BadCoordinateName(String),
    #[error("duplicate coordinate '{0}'")]
    DuplicateCoordinate(String),
    #[error("expected {expected} entries, found {found}")]
    ArityMismatch { expected: usize, found: usize },
}
