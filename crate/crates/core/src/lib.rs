//! Computational relative homological algebra over finite-dimensional
//! algebras: lower/upper extension groups, Tor over a full additive
//! subcategory, stable-category Homs, and Verdier-quotient Homs of bounded
//! homotopy categories, with independent cross-checking routes.

pub mod algebra;
pub mod approx;
pub mod bar;
pub mod catmod;
pub mod error;
pub mod ext;
pub mod fixtures;
pub mod homology;
pub mod komplex;
pub mod linalg;
pub mod registry;
pub mod report;
pub mod suite;

pub use algebra::{AlgebraPresentation, FdModule, ModuleHom};
pub use approx::{Approximation, XCoresolution, XResolution, XSubcategory};
pub use error::{Error, Result};
pub use ext::{ExtResult, ExtRoute, StableHom};
pub use komplex::{BoundedComplex, ChainMap, QuotientHomResult};
pub use linalg::{FieldSpec, Mat};
pub use report::{InvariantReport, Query};
pub use registry::{ObjectRegistry, ValidationReport};
