//! Non-increasing step functions Q>=0 -> N.
//!
//! These carry stabilized invariants: the value at tau is attained on
//! [b_i, b_{i+1}) for consecutive breakpoints and persists to infinity past
//! the last breakpoint.

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StepFunction {
    breakpoints: Vec<Rational>,
    values: Vec<u64>,
}

impl StepFunction {
    pub fn new(breakpoints: Vec<Rational>, values: Vec<u64>) -> Result<Self> {
        if breakpoints.is_empty() || breakpoints.len() != values.len() {
            return Err(Error::Precondition(
                "step function needs matching, non-empty breakpoint and value lists".into(),
            ));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Precondition("step function breakpoints must strictly increase".into()));
        }
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition("step function values must be non-increasing".into()));
        }
        Ok(StepFunction { breakpoints, values })
    }

    pub fn constant(value: u64) -> Self {
        StepFunction { breakpoints: vec![Rational::zero()], values: vec![value] }
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// Value of the last breakpoint <= tau; below the first breakpoint the
    /// first value is used.
    pub fn eval(&self, tau: &Rational) -> u64 {
        match self.breakpoints.partition_point(|b| b <= tau) {
            0 => self.values[0],
            k => self.values[k - 1],
        }
    }

    pub fn tail_value(&self) -> u64 {
        *self.values.last().expect("non-empty")
    }

    /// Collapse repeated values.
    pub fn normalized(&self) -> StepFunction {
        let mut bs = vec![self.breakpoints[0]];
        let mut vs = vec![self.values[0]];
        for i in 1..self.values.len() {
            if self.values[i] != *vs.last().unwrap() {
                bs.push(self.breakpoints[i]);
                vs.push(self.values[i]);
            }
        }
        StepFunction { breakpoints: bs, values: vs }
    }

    /// CSV rows "tau,value", one per breakpoint, with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("tau,value\n");
        for (b, v) in self.breakpoints.iter().zip(&self.values) {
            out.push_str(&format!("{b},{v}\n"));
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<StepFunction> {
        let mut breakpoints = Vec::new();
        let mut values = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line == "tau,value" {
                continue;
            }
            let (b, v) = line
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("bad step csv line {line:?}")))?;
            breakpoints.push(b.trim().parse()?);
            values.push(
                v.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad value in {line:?}")))?,
            );
        }
        StepFunction::new(breakpoints, values)
    }
}

/// Minimum of `value` over candidates with distance <= tau, as a function of
/// tau. The candidate list must cover the whole disc structure around the
/// stabilization center, including distance zero.
pub fn stabilize(candidates: &[(u64, Rational)]) -> Result<StepFunction> {
    if candidates.is_empty() {
        return Err(Error::Precondition("stabilize needs a non-empty candidate list".into()));
    }
    let mut sorted: Vec<(Rational, u64)> =
        candidates.iter().map(|&(v, ref d)| (*d, v)).collect();
    sorted.sort();
    let mut breakpoints = Vec::new();
    let mut values: Vec<u64> = Vec::new();
    let mut current = u64::MAX;
    for (d, v) in sorted {
        if v < current {
            current = v;
            if breakpoints.last() == Some(&d) {
                *values.last_mut().unwrap() = v;
            } else {
                breakpoints.push(d);
                values.push(v);
            }
        }
    }
    StepFunction::new(breakpoints, values)
}

/// Feasibility of eps for the interleaving of two non-increasing step
/// functions: `g(t) >= f(t + eps)` and `f(t) >= g(t + eps)` for all t >= 0.
pub fn step_is_close(f: &StepFunction, g: &StepFunction, eps: &Rational) -> bool {
    let dominates = |a: &StepFunction, b: &StepFunction| {
        // a(t) >= b(t + eps) for all t; check at t = 0, at breakpoints of a,
        // and at preimages of b's breakpoints.
        let mut probes = vec![Rational::zero()];
        probes.extend_from_slice(a.breakpoints());
        for bp in b.breakpoints() {
            if let Some(t) = bp.checked_sub(eps) {
                probes.push(t);
            }
        }
        probes.into_iter().all(|t| a.eval(&t) >= b.eval(&(t + *eps)))
    };
    dominates(g, f) && dominates(f, g)
}

/// Interleaving distance between non-increasing step functions; `None`
/// means infinite, which happens exactly when the tail values differ.
pub fn step_interleaving_distance(f: &StepFunction, g: &StepFunction) -> Option<Rational> {
    let mut candidates = vec![Rational::zero()];
    for a in f.breakpoints() {
        candidates.push(*a);
        for b in g.breakpoints() {
            candidates.push(*b);
            candidates.push(a.abs_diff(b));
        }
    }
    for b in g.breakpoints() {
        candidates.push(*b);
    }
    candidates.sort();
    candidates.dedup();
    candidates.into_iter().find(|eps| step_is_close(f, g, eps))
}
