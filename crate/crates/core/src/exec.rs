//! Serial / parallel execution of independent work units.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How data-parallel loops are executed.
///
/// Results are always collected in input order, so any reduction done by the
/// caller over the returned vector is independent of the mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    #[default]
    Serial,
    /// Run on a dedicated rayon pool. `threads == 0` uses rayon's default
    /// (all cores); callers must opt into that explicitly.
    Parallel { threads: usize },
}

impl Execution {
    pub fn with_threads(threads: usize) -> Self {
        if threads == 1 {
            Execution::Serial
        } else {
            Execution::Parallel { threads }
        }
    }

    pub fn is_parallel(&self) -> bool {
        cfg!(feature = "parallel") && matches!(self, Execution::Parallel { .. })
    }

    /// Map `f` over `items`, preserving order.
    pub fn map<T, U, F>(&self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        match self {
            Execution::Serial => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel { threads } => {
                let run = || items.par_iter().map(&f).collect();
                with_pool(*threads, run)
            }
            #[cfg(not(feature = "parallel"))]
            Execution::Parallel { .. } => items.iter().map(f).collect(),
        }
    }

    /// Map `f` over `0..n`, preserving order.
    pub fn map_range<U, F>(&self, n: usize, f: F) -> Vec<U>
    where
        U: Send,
        F: Fn(usize) -> U + Sync + Send,
    {
        match self {
            Execution::Serial => (0..n).map(f).collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel { threads } => {
                let run = || (0..n).into_par_iter().map(&f).collect();
                with_pool(*threads, run)
            }
            #[cfg(not(feature = "parallel"))]
            Execution::Parallel { .. } => (0..n).map(f).collect(),
        }
    }
}

#[cfg(feature = "parallel")]
fn with_pool<R: Send>(threads: usize, run: impl FnOnce() -> R + Send) -> R {
    if rayon::current_thread_index().is_some() {
        // Already inside a pool (nested parallel call): reuse it.
        return run();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_preserves_order_in_both_modes() {
        let items: Vec<u64> = (0..1000).collect();
        let serial = Execution::Serial.map(&items, |x| x * x);
        let parallel = Execution::Parallel { threads: 3 }.map(&items, |x| x * x);
        assert_eq!(serial, parallel);
        assert_eq!(serial[999], 999 * 999);
    }

    #[test]
    fn with_threads_one_is_serial() {
        assert_eq!(Execution::with_threads(1), Execution::Serial);
        assert_eq!(
            Execution::with_threads(4),
            Execution::Parallel { threads: 4 }
        );
    }
}
