//! Ordered first-hit search over index ranges, parallel when the `parallel`
//! feature is enabled and more than one worker is requested.

/// Worker configuration. `jobs == Some(1)` forces the sequential path.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Workers {
    pub jobs: Option<usize>,
}

impl Workers {
    pub fn sequential() -> Self {
        Workers { jobs: Some(1) }
    }

    pub fn with_jobs(jobs: usize) -> Self {
        Workers { jobs: Some(jobs.max(1)) }
    }

    pub fn is_sequential(&self) -> bool {
        !cfg!(feature = "parallel") || self.jobs == Some(1)
    }

    pub fn count(&self) -> usize {
        match self.jobs {
            Some(j) => j,
            None => std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
        }
    }

    /// Runs `f` inside a pool of the requested size.
    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        #[cfg(feature = "parallel")]
        if let (Some(j), false) = (self.jobs, self.is_sequential()) {
            if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(j).build() {
                return pool.install(f);
            }
        }
        f()
    }

    /// The smallest `i < len` with `f(i)` returning `Some`, together with
    /// that value. Independent of worker count.
    pub fn find_first<T: Send>(&self, len: usize, f: impl Fn(usize) -> Option<T> + Sync + Send) -> Option<(usize, T)> {
        if self.is_sequential() {
            return (0..len).find_map(|i| f(i).map(|t| (i, t)));
        }
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            (0..len).into_par_iter().find_map_first(|i| f(i).map(|t| (i, t)))
        }
        #[cfg(not(feature = "parallel"))]
        unreachable!()
    }
}
