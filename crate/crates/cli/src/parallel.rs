//! Multi-threaded drivers. Results are identical to the single-threaded
//! versions in `runforge_core` for every worker count.

use rayon::prelude::*;
use runforge_core::anneal::{anneal_restart, merge_restarts, AnnealConfig, SearchResult};
use runforge_core::extremal::{search_block, Mode, Partial, SearchSpace, TauRecord};
use runforge_core::{Alphabet, Result};

/// Blocks handed out per worker; more blocks smooth out uneven block cost.
const BLOCKS_PER_WORKER: usize = 16;

fn pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool")
}

/// Exhaustive extremal search split over `jobs` workers.
pub fn tau_exhaustive(n: usize, alphabet: Alphabet, mode: Mode, jobs: usize) -> Result<TauRecord> {
    let space = SearchSpace::new(n, alphabet)?;
    let blocks = space.blocks(jobs.max(1) * BLOCKS_PER_WORKER);
    let partial = pool(jobs).install(|| {
        blocks
            .into_par_iter()
            .map(|range| search_block(&space, mode, range))
            .reduce(Partial::empty, |a, b| a.merge(b, mode))
    });
    Ok(TauRecord::from_partial(&space, mode, partial))
}

/// Annealing with restarts spread over `jobs` workers.
pub fn anneal_max_trl(config: &AnnealConfig, jobs: usize) -> Result<SearchResult> {
    config.validate()?;
    let outcomes = pool(jobs).install(|| {
        (0..config.restarts)
            .into_par_iter()
            .map(|r| anneal_restart(config, r))
            .collect()
    });
    Ok(merge_restarts(config, outcomes))
}

/// Worker count from `RUNFORGE_JOBS`-style input, defaulting to available
/// parallelism.
pub fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}
