//! Batch evaluation of independent checks.
//!
//! The verification sweeps are embarrassingly parallel: hundreds of exact
//! matrix pipelines with no shared state. With the `parallel` feature (on by
//! default) they spread across the rayon pool; without it the same sweeps
//! run as a plain sequential scan. Both paths report the same first failure.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Index of the first item failing `check`, scanning sequentially.
pub fn first_failure_seq<T, F>(items: &[T], check: F) -> Option<usize>
where
    F: Fn(&T) -> bool,
{
    items.iter().position(|item| !check(item))
}

/// Index of the first item failing `check`, scanned on the rayon pool.
/// `position_first` makes the answer identical to the sequential scan.
#[cfg(feature = "parallel")]
pub fn first_failure_par<T, F>(items: &[T], check: F) -> Option<usize>
where
    T: Sync,
    F: Fn(&T) -> bool + Sync,
{
    items.par_iter().position_first(|item| !check(item))
}

/// Feature-dispatched batch check used by the verification suites.
pub fn first_failure<T, F>(items: &[T], check: F) -> Option<usize>
where
    T: Sync,
    F: Fn(&T) -> bool + Sync,
{
    #[cfg(feature = "parallel")]
    {
        first_failure_par(items, check)
    }
    #[cfg(not(feature = "parallel"))]
    {
        first_failure_seq(items, check)
    }
}
