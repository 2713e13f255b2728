//! Test-bed generation: named algebras, exhaustive enumerators, isomorphism
//! dedup, and predicate-driven counterexample search.

pub mod canon;
pub mod catalog;
pub mod posets;
pub mod predicate;
pub mod search;
pub mod sweep;

pub use catalog::{catalog, SHIPPED};
pub use posets::enumerate_posets;
pub use predicate::Predicate;
pub use search::{enumerate_algebras, find_counterexamples, SearchSpec, TargetClass};
pub use sweep::{run_sweep, SweepReport};
