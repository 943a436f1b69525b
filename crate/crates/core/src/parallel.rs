//! Data-parallel map with a sequential fallback.
//!
//! With the `parallel` feature enabled (the default), work is distributed
//! over a rayon pool; `jobs == 1` or a build without the feature runs the
//! plain sequential loop. Results always come back in input order, and all
//! arithmetic is exact, so output is identical for every `jobs` value.

/// Number of worker threads to use. `Default` follows the rayon global pool
/// (or the `PLANEPART_JOBS` environment variable when the caller wired it in).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Jobs {
    #[default]
    Default,
    Count(usize),
}

impl Jobs {
    pub fn from_count(n: usize) -> Self {
        if n == 0 {
            Jobs::Default
        } else {
            Jobs::Count(n)
        }
    }
}

/// Runs `f` inside a worker pool of the requested size; `Jobs::Count(1)` is
/// a one-thread pool, i.e. sequential execution. On a build without the
/// `parallel` feature `f` runs directly on the calling thread.
pub fn with_jobs<R: Send>(jobs: Jobs, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    {
        match jobs {
            Jobs::Count(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .expect("failed to build thread pool")
                .install(f),
            Jobs::Default => f(),
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = jobs;
        f()
    }
}

/// Applies `f` to every item and collects the results in input order, using
/// the ambient worker pool (see [`with_jobs`]). Exact arithmetic plus ordered
/// collection make the result independent of scheduling.
pub fn map_ordered<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.into_iter().map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let items: Vec<i64> = (0..100).collect();
        let seq = with_jobs(Jobs::Count(1), || map_ordered(items.clone(), |x| x * x));
        let par = with_jobs(Jobs::Count(4), || map_ordered(items, |x| x * x));
        assert_eq!(seq, par);
        assert_eq!(seq[10], 100);
    }
}
