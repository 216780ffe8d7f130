//! Exact-arithmetic engine for weighted domino tilings of Aztec-type domains,
//! nonintersecting Delannoy path systems and binomial (KKS-type) determinants.
//!
//! Every quantity is an exact rational. Determinants come in two flavours
//! (fraction-free Bareiss and multi-modular CRT), tilings and path systems
//! have brute-force enumerators, and the product formulas are evaluated
//! through integer-difference Gamma pairings.

pub mod arith;
pub mod bijection;
pub mod error;
pub mod formulas;
pub mod kks;
pub mod linalg;
pub mod paths;
pub mod render;
pub mod series;
pub mod shapes;
pub mod tilings;
pub mod verify;

pub use arith::{binomial, gamma_ratio_product, rising_factorial, BigInt, GammaArg, Rational};
pub use error::{Error, Result};
pub use formulas::{Catalog, ProductFormula};
pub use kks::KksParams;
pub use linalg::ExactMatrix;
pub use paths::{PathFamilyParams, PathKind, PathSystem, Step};
pub use shapes::{AztecDomain, BoundarySymbol, Cell, CellColor, DomainKind, Partition};
pub use tilings::{Domino, DominoType, Tiling, WeightTriple};
pub use verify::{CheckReport, CheckStatus};
