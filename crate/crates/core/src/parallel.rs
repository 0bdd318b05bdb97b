//! Worker-pool sizing.
//!
//! Results never depend on the thread count; this only caps resource use.

use rayon::ThreadPoolBuilder;

use crate::error::{Error, Result};

pub const THREADS_VAR: &str = "GIRTHLAB_THREADS";

/// Reads `GIRTHLAB_THREADS`. Unset, empty or 0 means automatic.
pub fn threads_from_env() -> Result<usize> {
    match std::env::var(THREADS_VAR) {
        Ok(v) if v.trim().is_empty() => Ok(0),
        Ok(v) => v.trim().parse().map_err(|_| {
            Error::InvalidConfig(format!("{THREADS_VAR}={v:?} is not a thread count"))
        }),
        Err(_) => Ok(0),
    }
}

/// Runs `f` on a dedicated pool of `threads` workers (0 = rayon's default).
pub fn install<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidConfig(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}
