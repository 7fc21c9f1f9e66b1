//! Deterministic fan-out over scoped worker threads.
//!
//! Enumerations split into a fixed number of shards chosen from the problem
//! size alone, never from the thread count.  Workers claim shard indices
//! from an atomic counter, and the caller folds shard results in index
//! order, so the final value is bit-identical for every thread count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

/// Shards per parallel enumeration: `2^SHARD_BITS` when the index space is
/// large enough to be worth splitting.
pub const SHARD_BITS: u32 = 6;

/// Number of index bits to fix per shard for a walk over `2^total_bits`
/// states.  Zero means a single shard.
pub fn plan_shard_bits(total_bits: u32) -> u32 {
    if total_bits >= SHARD_BITS + 6 {
        SHARD_BITS
    } else {
        0
    }
}

/// A pool of up to `threads` OS threads for one enumeration at a time.
#[derive(Debug, Clone, Copy)]
pub struct WorkerPool {
    threads: usize,
}

impl WorkerPool {
    pub fn new(threads: usize) -> Self {
        WorkerPool {
            threads: threads.max(1),
        }
    }

    pub fn serial() -> Self {
        WorkerPool { threads: 1 }
    }

    pub fn threads(&self) -> usize {
        self.threads
    }

    /// Runs `job(i)` for `i` in `0..jobs` and returns results in job order.
    /// Jobs may run on any thread in any order; the output order is fixed.
    pub fn run_indexed<T, F>(&self, jobs: usize, job: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync,
    {
        if jobs == 0 {
            return Vec::new();
        }
        if self.threads == 1 || jobs == 1 {
            return (0..jobs).map(job).collect();
        }
        let next = AtomicUsize::new(0);
        let slots: Vec<Mutex<Option<T>>> = (0..jobs).map(|_| Mutex::new(None)).collect();
        std::thread::scope(|scope| {
            for _ in 0..self.threads.min(jobs) {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= jobs {
                        break;
                    }
                    let out = job(i);
                    *slots[i].lock().unwrap() = Some(out);
                });
            }
        });
        slots
            .into_iter()
            .map(|slot| slot.into_inner().unwrap().expect("job produced no result"))
            .collect()
    }

    /// Splits `data` into runs of `chunk` elements and processes batches of
    /// runs in parallel.  `chunk` must divide `data.len()`.
    pub fn run_chunks<T, F>(&self, data: &mut [T], chunk: usize, work: F)
    where
        T: Send,
        F: Fn(usize, &mut [T]) + Sync,
    {
        debug_assert_eq!(data.len() % chunk, 0);
        let runs = data.len() / chunk;
        if self.threads == 1 || runs <= 1 {
            for (i, piece) in data.chunks_mut(chunk).enumerate() {
                work(i, piece);
            }
            return;
        }
        // Group runs into at most threads*4 batches to amortize dispatch.
        let batches = runs.min(self.threads * 4);
        let runs_per_batch = runs.div_ceil(batches);
        let next = AtomicUsize::new(0);
        let pieces: Vec<Mutex<(usize, &mut [T])>> = data
            .chunks_mut(chunk * runs_per_batch)
            .enumerate()
            .map(|(b, piece)| Mutex::new((b * runs_per_batch, piece)))
            .collect();
        std::thread::scope(|scope| {
            for _ in 0..self.threads.min(pieces.len()) {
                scope.spawn(|| loop {
                    let b = next.fetch_add(1, Ordering::Relaxed);
                    if b >= pieces.len() {
                        break;
                    }
                    let mut guard = pieces[b].lock().unwrap();
                    let (first_run, piece) = &mut *guard;
                    for (j, run) in piece.chunks_mut(chunk).enumerate() {
                        work(*first_run + j, run);
                    }
                });
            }
        });
    }
}

impl Default for WorkerPool {
    fn default() -> Self {
        WorkerPool::serial()
    }
}
