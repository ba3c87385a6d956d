//! Parallel drivers over `braidcat`: the conjecture search, coset and
//! obstruction scans, oracle fuzzing, and the JSON instance format.

pub mod fuzz;
pub mod instance;
pub mod scans;
pub mod search;

/// Runs `f` on a pool of `jobs` workers (`0` means the rayon default).
pub fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool")
        .install(f)
}
