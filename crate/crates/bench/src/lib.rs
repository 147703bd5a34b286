//! Shared helpers for the benchmark targets.

use orbitgames_core::catalog::{fixture, CatalogInstance};

/// A fixture the benches lean on; panics only on a broken build.
pub fn bench_fixture(name: &str) -> CatalogInstance {
    fixture(name).expect("bundled fixture")
}
