//! The stabilized rank invariant: the smallest number of generators among
//! modules within a given noise distance.
//!
//! For one parameter the invariant has a closed form through the bar
//! decomposition. In general it is computed by a finite search over
//! subframes squeezed between the shift and the module, which is the
//! reformulation that makes the problem a min-rank search.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;

use crate::contour::Contour;
use crate::error::{Error, Result};
use crate::field::{inv_mod, neg_mod};
use crate::grid::{leq, meet};
use crate::noise::shift;
use crate::rational::Rational;
use crate::stepfn::StepFunction;
use crate::tame::TameModule;

/// The stabilized rank as a non-increasing step function of the noise
/// magnitude.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StableRankFunction(pub StepFunction);

impl StableRankFunction {
    pub fn eval(&self, tau: &Rational) -> u64 {
        self.0.eval(tau)
    }

    pub fn step(&self) -> &StepFunction {
        &self.0
    }
}

/// Noise-entry threshold of a single bar: the magnitude at which the bar
/// joins the noise system of the contour, `None` when it never does.
fn bar_entry_time(
    birth: &Rational,
    death: Option<&Rational>,
    direction: &Rational,
    corners: &[&[Rational]],
) -> Option<Rational> {
    // a bar [v, x) is in the noise at tau iff v + tau*w >= min(x, corners);
    // an infinite bar iff v + tau*w >= min(corners)
    let mut threshold: Option<Rational> = death.copied();
    for corner in corners {
        let c = corner[0];
        threshold = Some(match threshold {
            Some(t) => t.min(c),
            None => c,
        });
    }
    let threshold = threshold?;
    if *birth >= threshold {
        return Some(Rational::zero());
    }
    if direction.is_zero() {
        return None;
    }
    Some((threshold.checked_sub(birth).expect("threshold above birth")) / *direction)
}

/// Closed form of the stabilized rank for one-parameter modules: count the
/// bars that have not yet entered the noise.
pub fn stable_rank_r1(module: &TameModule, contour: &Contour) -> Result<StableRankFunction> {
    if module.r() != 1 || contour.r() != 1 {
        return Err(Error::Precondition(format!(
            "closed-form stable rank needs one parameter, got r = {}",
            module.r()
        )));
    }
    let code = module.barcode()?;
    let direction = contour.direction()[0];
    let corners = contour.corners();
    let mut entries: Vec<(Option<Rational>, u64)> = Vec::new();
    for (&(birth, death), &mult) in &code.finite {
        entries.push((bar_entry_time(&birth, Some(&death), &direction, &corners), mult));
    }
    for (&birth, &mult) in &code.infinite {
        entries.push((bar_entry_time(&birth, None, &direction, &corners), mult));
    }
    // breakpoints: zero plus every finite positive entry time
    let mut cuts: BTreeSet<Rational> = BTreeSet::new();
    cuts.insert(Rational::zero());
    for (time, _) in &entries {
        if let Some(t) = time {
            if !t.is_zero() {
                cuts.insert(*t);
            }
        }
    }
    let count_at = |tau: &Rational| -> u64 {
        entries
            .iter()
            .filter(|(time, _)| match time {
                None => true,
                Some(t) => t > tau,
            })
            .map(|(_, m)| m)
            .sum()
    };
    let breakpoints: Vec<Rational> = cuts.into_iter().collect();
    let values: Vec<u64> = breakpoints.iter().map(count_at).collect();
    Ok(StableRankFunction(StepFunction::new(breakpoints, values)?.normalized()))
}

/// Table of stabilized ranks of a one-parameter module under the standard
/// contour truncated at u, sampled on the given (tau, u) grid: the number
/// of bars of length above tau*w born before u - tau*w.
pub fn fingerprint_r1(
    module: &TameModule,
    direction: &Rational,
    grid: &[(Rational, Rational)],
) -> Result<Vec<(Rational, Rational, u64)>> {
    if module.r() != 1 {
        return Err(Error::Precondition(format!(
            "fingerprint needs one parameter, got r = {}",
            module.r()
        )));
    }
    if direction.is_zero() {
        return Err(Error::Precondition("fingerprint direction must be positive".into()));
    }
    let code = module.barcode()?;
    let mut out = Vec::with_capacity(grid.len());
    for (tau, u) in grid {
        let step = *tau * *direction;
        let mut count = 0u64;
        for (&(birth, death), &mult) in &code.finite {
            if birth + step < death && birth + step < *u {
                count += mult;
            }
        }
        for (&birth, &mult) in &code.infinite {
            if birth + step < *u {
                count += mult;
            }
        }
        out.push((*tau, *u, count));
    }
    Ok(out)
}

/// CSV rows "tau,u,value" with a header.
pub fn fingerprint_csv(table: &[(Rational, Rational, u64)]) -> String {
    let mut out = String::from("tau,u,value\n");
    for (tau, u, value) in table {
        out.push_str(&format!("{tau},{u},{value}\n"));
    }
    out
}

struct SearchCandidate {
    /// Image in each target value, `None` when the candidate coordinate is
    /// not below that target.
    images: Vec<Option<Vec<u64>>>,
}

/// The generic stabilized rank at a single magnitude, by exhaustive search:
/// the smallest k such that k elements of the module, placed at meets of
/// the shifted generator coordinates, generate a subframe containing the
/// shift. Candidate sets are scanned in lexicographic order; every tested
/// set costs one unit of budget.
pub fn stable_rank_bruteforce(
    module: &TameModule,
    contour: &Contour,
    tau: &Rational,
    budget: u128,
) -> Result<usize> {
    let shifted = shift(module, contour, tau)?;
    let ambient = &shifted.ambient;
    let p = ambient.modulus();
    let targets: Vec<(Vec<usize>, Vec<u64>)> =
        shifted.pushed.iter().flatten().cloned().collect();
    let shifted_rank = shifted.sub.frame.rank0()?;
    if shifted_rank == 0 {
        return Ok(0);
    }

    // Coordinates for the search: the meet closure of the target
    // coordinates. Any admissible generating set can be pushed onto these
    // points without changing its size or breaking containment.
    let mut coords: BTreeSet<Vec<usize>> = targets.iter().map(|(c, _)| c.clone()).collect();
    loop {
        let snapshot: Vec<Vec<usize>> = coords.iter().cloned().collect();
        let before = coords.len();
        for i in 0..snapshot.len() {
            for j in i + 1..snapshot.len() {
                coords.insert(meet(&snapshot[i], &snapshot[j]));
            }
        }
        if coords.len() == before {
            break;
        }
    }

    let mut candidates: Vec<SearchCandidate> = Vec::new();
    let mut seen_signatures: BTreeSet<Vec<Option<Vec<u64>>>> = BTreeSet::new();
    for coord in &coords {
        let dim = ambient.frame().dim_at(coord);
        if dim == 0 {
            continue;
        }
        let step_maps: Vec<Option<crate::matrix::PrimeFieldMatrix>> = targets
            .iter()
            .map(|(t, _)| {
                if leq(coord, t) {
                    Some(ambient.frame().map(coord, t).expect("comparable"))
                } else {
                    None
                }
            })
            .collect();
        for vector in projective_vectors(dim, p) {
            let images: Vec<Option<Vec<u64>>> = step_maps
                .iter()
                .map(|m| m.as_ref().map(|m| m.apply(&vector).expect("shape")))
                .collect();
            // candidates acting identically on every target are
            // interchangeable; keep one representative
            if seen_signatures.insert(images.clone()) {
                candidates.push(SearchCandidate { images });
            }
        }
    }

    let mut used: u128 = 0;
    for k in 0..=shifted_rank {
        if k == shifted_rank {
            // the shift itself is generated by that many elements at
            // admissible coordinates, so the search cannot do worse
            return Ok(k);
        }
        let level = binomial_u128(candidates.len(), k);
        let remaining = budget.saturating_sub(used);
        if remaining == 0 {
            return Err(Error::BudgetExceeded { needed: used + level, budget });
        }
        let limit = level.min(remaining);
        let accepted = scan_level(&candidates, &targets, k, limit, p);
        if accepted {
            return Ok(k);
        }
        if level > remaining {
            return Err(Error::BudgetExceeded { needed: used + level, budget });
        }
        used += level;
    }
    unreachable!("the shift generators always accept");
}

/// Scan the first `limit` k-subsets of the candidates in lexicographic
/// order, in parallel over the leading element; true when some subset
/// generates a subframe containing every target vector.
fn scan_level(
    candidates: &[SearchCandidate],
    targets: &[(Vec<usize>, Vec<u64>)],
    k: usize,
    limit: u128,
    p: u64,
) -> bool {
    let n = candidates.len();
    if k == 0 {
        return limit > 0 && accepts(candidates, targets, &[], p);
    }
    if k > n {
        return false;
    }
    // lex-contiguous blocks by leading element
    let mut blocks = Vec::new();
    let mut offset: u128 = 0;
    for a in 0..=n - k {
        let size = binomial_u128(n - 1 - a, k - 1);
        if offset >= limit {
            break;
        }
        blocks.push((a, (limit - offset).min(size)));
        offset += size;
    }
    let stop = AtomicBool::new(false);
    blocks
        .into_par_iter()
        .map(|(a, block_limit)| {
            let mut combo: Vec<usize> = (0..k).collect();
            combo[0] = a;
            for (i, slot) in combo.iter_mut().enumerate().skip(1) {
                *slot = a + i;
            }
            let mut tested: u128 = 0;
            loop {
                if tested >= block_limit || stop.load(Ordering::Relaxed) {
                    return false;
                }
                if accepts(candidates, targets, &combo, p) {
                    stop.store(true, Ordering::Relaxed);
                    return true;
                }
                tested += 1;
                // advance the suffix (the leading element stays fixed)
                let mut i = k;
                loop {
                    if i == 1 {
                        return false;
                    }
                    i -= 1;
                    if combo[i] < n - (k - i) {
                        combo[i] += 1;
                        for j in i + 1..k {
                            combo[j] = combo[j - 1] + 1;
                        }
                        break;
                    }
                }
            }
        })
        .any(|found| found)
}

/// Whether the subframe generated by the chosen candidates contains every
/// pushed generator: at each target, the pushed vector must lie in the
/// span of the candidate images.
fn accepts(
    candidates: &[SearchCandidate],
    targets: &[(Vec<usize>, Vec<u64>)],
    combo: &[usize],
    p: u64,
) -> bool {
    for (s, (_, wanted)) in targets.iter().enumerate() {
        if wanted.iter().all(|&x| x == 0) {
            continue;
        }
        let rows: Vec<&[u64]> = combo
            .iter()
            .filter_map(|&c| candidates[c].images[s].as_deref())
            .collect();
        if !span_contains(&rows, wanted, p) {
            return false;
        }
    }
    true
}

/// In-place Gaussian test: is `target` in the row span?
fn span_contains(rows: &[&[u64]], target: &[u64], p: u64) -> bool {
    let width = target.len();
    let mut basis: Vec<Vec<u64>> = Vec::with_capacity(rows.len());
    let reduce = |mut v: Vec<u64>, basis: &[Vec<u64>]| -> Vec<u64> {
        for b in basis {
            let lead = b.iter().position(|&x| x != 0).expect("basis rows nonzero");
            let factor = v[lead];
            if factor != 0 {
                for (x, &bv) in v.iter_mut().zip(b) {
                    *x = (*x + neg_mod(factor * bv % p, p)) % p;
                }
            }
        }
        v
    };
    for row in rows {
        let mut v = reduce(row.to_vec(), &basis);
        if let Some(lead) = v.iter().position(|&x| x != 0) {
            let inv = inv_mod(v[lead], p);
            for x in v.iter_mut() {
                *x = *x * inv % p;
            }
            basis.push(v);
        }
        if basis.len() == width {
            return true;
        }
    }
    let v = reduce(target.to_vec(), &basis);
    v.iter().all(|&x| x == 0)
}

fn projective_vectors(dim: usize, p: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for lead in 0..dim {
        let tail = dim - lead - 1;
        let combos = (p as u128).pow(tail as u32);
        for mut idx in 0..combos {
            let mut v = vec![0u64; dim];
            v[lead] = 1;
            for slot in v.iter_mut().skip(lead + 1) {
                *slot = (idx % p as u128) as u64;
                idx /= p as u128;
            }
            out.push(v);
        }
    }
    out
}

fn binomial_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}
