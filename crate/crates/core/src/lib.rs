//! Finite categories read as partial vector spaces.
//!
//! The non-identity arrows of a finite category, together with a zero vector,
//! form a space where composition plays the role of a partial,
//! noncommutative addition. Arrows that are not composites of other arrows
//! form a basis, and the norm of an arrow is the length of its shortest
//! factorization into basis arrows. On top of that the crate provides inner,
//! outer and geometric products of arrows, a Clifford-condition check, an
//! exact real-line variant, and JSON/DOT/3-D layout I/O.
//!
//! ```
//! use catgeo_core::{document, geometry::CatAlgebra};
//!
//! let doc = document::builtin_example("po6").unwrap();
//! let algebra = CatAlgebra::new(doc.build().unwrap()).unwrap();
//! let f = algebra.vector_named("a0->a4").unwrap();
//! assert_eq!(algebra.norms().norm(f), 2);
//! assert!(algebra.clifford_report().holds());
//! ```

pub mod category;
pub mod document;
pub mod dot;
pub mod embed;
pub mod geometry;
pub mod multivector;
pub mod real_line;
pub mod vector;

pub use category::{ArrowIx, CategoryError, Edge, FiniteCategory, Mode, ObjectIx, Violation};
pub use document::{load_category, parse_document, CategoryDocument, ParseError};
pub use geometry::{CatAlgebra, CliffordReport, NormedSpace};
pub use multivector::{Blade2, Multivector};
pub use real_line::{IntervalArrow, Rational, RealLineError};
pub use vector::{Basis, NormTable, Vector, VectorError};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error(transparent)]
    Vector(#[from] VectorError),
    #[error(transparent)]
    RealLine(#[from] RealLineError),
}
