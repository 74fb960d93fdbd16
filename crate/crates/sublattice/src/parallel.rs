//! Multi-threaded drivers for the exhaustive search.
//!
//! Tasks run on a dedicated pool and their outcomes are merged in task order,
//! so results and witnesses do not depend on the number of workers.

use std::time::Instant;

use rayon::prelude::*;
use sublattice_core::verifier::{FreePolygonSearch, SearchBox, TaskOutcome, VerificationReport};
use sublattice_core::{IntVec, Polygon, Sublattice};

use crate::Error;

fn pool(jobs: usize) -> Result<rayon::ThreadPool, Error> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Input(format!("thread pool: {e}")))
}

/// Runs every task of `search` on `jobs` workers.
pub fn run_tasks(
    search: &FreePolygonSearch,
    min_vertices: usize,
    jobs: usize,
) -> Result<TaskOutcome, Error> {
    let tasks = search.tasks();
    let outcomes: Vec<TaskOutcome> = pool(jobs)?.install(|| {
        tasks
            .par_iter()
            .map(|&t| search.run_task(t, min_vertices, |_| {}))
            .collect()
    });
    Ok(TaskOutcome::merge(outcomes))
}

/// Exhaustive check of the vertex threshold with timing.
pub fn verify(
    lattice: &Sublattice,
    search_box: SearchBox,
    jobs: usize,
) -> Result<VerificationReport, Error> {
    if !lattice.is_proper() {
        return Err(Error::Input("lattice must be a proper sublattice".into()));
    }
    let start = Instant::now();
    let search = FreePolygonSearch::new(lattice, search_box);
    let outcome = run_tasks(&search, 3, jobs)?;
    Ok(VerificationReport::from_outcome(
        &search,
        outcome,
        Some(start.elapsed()),
    )?)
}

/// Every free polygon with at least `min_vertices` vertices, in task order.
pub fn enumerate(
    search: &FreePolygonSearch,
    min_vertices: usize,
    jobs: usize,
) -> Result<Vec<Polygon>, Error> {
    let tasks = search.tasks();
    let chunks: Vec<Vec<Vec<IntVec>>> = pool(jobs)?.install(|| {
        tasks
            .par_iter()
            .map(|&t| {
                let mut found = Vec::new();
                search.run_task(t, min_vertices, |vs| found.push(vs.to_vec()));
                found
            })
            .collect()
    });
    let polygons = chunks
        .into_iter()
        .flatten()
        .map(Polygon::new)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(polygons)
}
