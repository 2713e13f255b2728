//! Finite-model workbench for quantum B-algebras, residuated
//! ∨-semilattices and pseudo-hoops.
//!
//! Algebras are small (at most 64 elements) and fully tabulated. On top of
//! [`FiniteAlgebra`] the crate provides
//!
//! * structure-class checks with counterexample witnesses ([`classes`]),
//! * the quantale `U(A)` of upper sets and its residuals ([`quantale`]),
//! * filters, generated filters and the `μ_F` conucleus ([`filters`]),
//! * polars, the polar-product embedding and `ν_F` for pseudo-hoops ([`hoops`]),
//! * prime filter classification and maximal-filter search ([`primes`]),
//! * a catalog, exhaustive enumerators and counterexample search ([`forge`]),
//! * the JSON algebra file format ([`format`]).

pub mod algebra;
pub mod bitset;
pub mod classes;
pub mod error;
pub mod filters;
pub mod forge;
pub mod format;
pub mod hoops;
pub mod order;
pub mod primes;
pub mod quantale;
pub mod report;

pub use algebra::{AlgebraParts, Elem, FiniteAlgebra};
pub use bitset::Set;
pub use error::{Error, Result};
pub use filters::{Filter, FilterLattice};
pub use forge::catalog::catalog;
pub use order::{validate_poset, Poset};
pub use quantale::{Quantale, UpperSet};
pub use report::{ClassReport, Violation, Witness};
