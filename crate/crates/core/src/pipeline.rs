//! End-to-end hardness pipeline: graph -> band functor -> stable rank,
//! cross-checked against the direct min-rank solver.

use std::time::Instant;

use crate::band::{band_functor, BandSpec};
use crate::contour::Contour;
use crate::error::{Error, Result};
use crate::graph::{graph_to_minrank, Graph};
use crate::minrank::{minrank_solve, reduce_to_minrank};
use crate::noise::shift;
use crate::rational::Rational;
use crate::stablerank::stable_rank_bruteforce;

#[derive(Clone, Debug)]
pub struct PipelineReport {
    pub vertices: usize,
    pub stable_rank: Option<usize>,
    pub minrank: Option<usize>,
    pub agree: Option<bool>,
    pub time_brute_ms: u128,
    pub time_minrank_ms: u128,
    pub budget_hit_brute: bool,
    pub budget_hit_minrank: bool,
    pub shifted_rank0: usize,
}

impl PipelineReport {
    pub fn budget_flag(&self) -> &'static str {
        match (self.budget_hit_brute, self.budget_hit_minrank) {
            (false, false) => "none",
            (true, false) => "brute",
            (false, true) => "minrank",
            (true, true) => "both",
        }
    }
}

/// Run both routes on the band functor of a graph: the generic stable-rank
/// search at tau = n - 1 under the diagonal standard contour, and the
/// min-rank solver on the reduced instance at u = (n-1, n-1). Budget
/// exhaustion is recorded, not fatal.
pub fn hardness_pipeline(graph: &Graph, modulus: u64, budget: u128) -> Result<PipelineReport> {
    let n = graph.vertex_count();
    if n == 0 {
        return Err(Error::Precondition("pipeline needs at least one vertex".into()));
    }
    let m = n - 1;
    let instance = graph_to_minrank(graph, modulus)?;
    let band = band_functor(&BandSpec::new(m, modulus, instance.subspaces.clone())?)?;
    let contour = Contour::standard(vec![Rational::one(), Rational::one()]);
    let tau = Rational::from_integer(m as u64);

    let shifted_rank0 = shift(&band, &contour, &tau)?.rank0()?;

    let start = Instant::now();
    let (stable_rank, budget_hit_brute) =
        match stable_rank_bruteforce(&band, &contour, &tau, budget) {
            Ok(v) => (Some(v), false),
            Err(Error::BudgetExceeded { .. }) => (None, true),
            Err(e) => return Err(e),
        };
    let time_brute_ms = start.elapsed().as_millis();

    let meeting = vec![Rational::from_integer(m as u64), Rational::from_integer(m as u64)];
    let reduced = reduce_to_minrank(&band, &contour, &tau, Some(meeting))?;
    let start = Instant::now();
    let (minrank, budget_hit_minrank) = match minrank_solve(&reduced, budget) {
        Ok(v) => (Some(v), false),
        Err(Error::BudgetExceeded { .. }) => (None, true),
        Err(e) => return Err(e),
    };
    let time_minrank_ms = start.elapsed().as_millis();

    let agree = match (stable_rank, minrank) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    Ok(PipelineReport {
        vertices: n,
        stable_rank,
        minrank,
        agree,
        time_brute_ms,
        time_minrank_ms,
        budget_hit_brute,
        budget_hit_minrank,
        shifted_rank0,
    })
}
