//! Trial execution for the Monte Carlo harnesses.
//!
//! With the default `parallel` feature, [`map_trials`] fans trials out over
//! the rayon thread pool; without it, the same call runs sequentially.
//! Results are always collected in trial-index order, and each trial derives
//! its randomness from its own index, so both paths return identical output
//! for the same seed. [`map_trials_seq`] is always sequential, kept public so
//! benchmarks can compare the two schedules directly.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub fn map_trials<T: Send>(trials: usize, f: impl Fn(u64) -> T + Send + Sync) -> Vec<T> {
    #[cfg(feature = "parallel")]
    {
        (0..trials as u64).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..trials as u64).map(f).collect()
    }
}

pub fn map_trials_seq<T>(trials: usize, f: impl Fn(u64) -> T) -> Vec<T> {
    (0..trials as u64).map(f).collect()
}
