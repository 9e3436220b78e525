//! Per-point parallelism for grid sweeps.
//!
//! All grid work runs on one lazily built thread pool. `ZETA_FORGE_THREADS`
//! (an integer ≥ 1) caps its size; unset or unparsable values fall back to
//! rayon's default. Dispatch stays deterministic — results come back in
//! point order regardless of pool size.

use std::sync::OnceLock;

use rayon::prelude::*;

fn pool() -> &'static rayon::ThreadPool {
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(n) = configured_threads() {
            builder = builder.num_threads(n);
        }
        builder.build().expect("build worker pool")
    })
}

/// The thread cap requested via `ZETA_FORGE_THREADS`, if any.
pub(crate) fn configured_threads() -> Option<usize> {
    std::env::var("ZETA_FORGE_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n >= 1)
}

/// Map `f` over grid points, in parallel, preserving order.
pub(crate) fn map_grid<T: Send>(points: &[f64], f: impl Fn(f64) -> T + Sync) -> Vec<T> {
    pool().install(|| points.par_iter().map(|&x| f(x)).collect())
}
