//! Data-parallel sweeps over independent evaluation points.
//!
//! With the `parallel` feature (default) the work fans out over a rayon
//! pool; without it the same API runs sequentially. Output order always
//! matches input order, so results are deterministic either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `f` over the points, in parallel when the `parallel` feature is
/// enabled. Results are returned in input order.
pub fn map_points<P, T, F>(points: &[P], f: F) -> Vec<T>
where
    P: Sync,
    T: Send,
    F: Fn(&P) -> T + Send + Sync,
{
    #[cfg(feature = "parallel")]
    {
        points.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        points.iter().map(f).collect()
    }
}

/// Always-sequential twin of [`map_points`], kept available for
/// benchmarking the parallel speedup.
pub fn map_points_seq<P, T, F>(points: &[P], f: F) -> Vec<T>
where
    F: Fn(&P) -> T,
{
    points.iter().map(f).collect()
}
