//! Shared fixtures for the benchmarks in `benches/`.

use qbforge::forge::{enumerate_algebras, SearchSpec, TargetClass};
use qbforge::FiniteAlgebra;

/// One representative per isomorphism class of `target` up to `max_size`.
pub fn algebras(target: TargetClass, max_size: usize) -> Vec<FiniteAlgebra> {
    enumerate_algebras(&SearchSpec::new(target, max_size)).expect("size within the class cap")
}
