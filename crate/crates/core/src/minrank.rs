//! The minimum-subspace problem: given target vectors x_s and subspaces
//! L_s of GF(p)^n, find the smallest dimension of a subspace L with
//! x_s in L + L_s for every s. Solved by exhaustive enumeration of
//! subspaces in increasing dimension.

use crate::contour::{Contour, ContourPoint};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::subspace::{enumerate_subspaces, gaussian_binomial, kernel, sum_contains, Subspace};
use crate::tame::TameModule;

#[derive(Clone, Debug)]
pub struct MinRankInstance {
    pub ambient: usize,
    pub modulus: u64,
    pub targets: Vec<Vec<u64>>,
    pub subspaces: Vec<Subspace>,
}

impl MinRankInstance {
    pub fn new(
        ambient: usize,
        modulus: u64,
        targets: Vec<Vec<u64>>,
        subspaces: Vec<Subspace>,
    ) -> Result<Self> {
        if targets.len() != subspaces.len() {
            return Err(Error::ParameterMismatch(
                "need as many targets as subspaces".into(),
            ));
        }
        for x in &targets {
            if x.len() != ambient {
                return Err(Error::DimensionMismatch("target vector of wrong length".into()));
            }
        }
        for l in &subspaces {
            if l.ambient_dim() != ambient {
                return Err(Error::DimensionMismatch("subspace of wrong ambient dimension".into()));
            }
        }
        Ok(MinRankInstance { ambient, modulus, targets, subspaces })
    }

    fn admits(&self, l: &Subspace) -> Result<bool> {
        for (x, l_s) in self.targets.iter().zip(&self.subspaces) {
            if !sum_contains(l, l_s, x)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Smallest dimension of an admissible subspace; enumeration cost is
/// charged per subspace against the budget.
pub fn minrank_solve(instance: &MinRankInstance, budget: u128) -> Result<usize> {
    let mut used: u128 = 0;
    for d in 0..=instance.ambient {
        let level = gaussian_binomial(instance.ambient, d, instance.modulus)?;
        if used + level > budget {
            return Err(Error::BudgetExceeded { needed: used + level, budget });
        }
        for l in enumerate_subspaces(instance.ambient, d, instance.modulus, budget)? {
            if instance.admits(&l)? {
                return Ok(d);
            }
        }
        used += level;
    }
    unreachable!("the full space is always admissible")
}

/// Reduce the stable-rank computation of a tame module at tau to a
/// min-rank instance at a meeting point u with v_s <= u <= C(v_s, tau) for
/// every minimal generator coordinate v_s. When `meeting_point` is `None`
/// the componentwise maximum of the generator coordinates is used.
pub fn reduce_to_minrank(
    module: &TameModule,
    contour: &Contour,
    tau: &Rational,
    meeting_point: Option<Vec<Rational>>,
) -> Result<MinRankInstance> {
    let generators = module.minimal_generators()?;
    if generators.is_empty() {
        return MinRankInstance::new(0, module.modulus(), Vec::new(), Vec::new());
    }
    let u = match meeting_point {
        Some(u) => u,
        None => {
            let mut acc = generators[0].0.clone();
            for (coord, _) in &generators[1..] {
                for (a, c) in acc.iter_mut().zip(coord) {
                    *a = (*a).max(*c);
                }
            }
            acc
        }
    };
    // align both u and the contour offsets with the grid
    let mut factor = crate::noise::refinement_factor(module, contour, tau)?;
    for c in &u {
        factor = num::integer::lcm(factor as u64, c.refinement_against(module.alpha())?) as usize;
    }
    let refined = module.refine(factor)?;
    let u_point = ContourPoint::Finite(u.clone());
    let mut targets = Vec::with_capacity(generators.len());
    let mut subspaces = Vec::with_capacity(generators.len());
    for (s, (coord, vector)) in generators.iter().enumerate() {
        let source = ContourPoint::Finite(coord.clone());
        let pushed = contour.eval_finite(coord, tau)?;
        if !source.leq(&u_point) || !u_point.leq(&pushed) {
            return Err(Error::Precondition(format!(
                "generator {s} at {coord:?} violates v_s <= u <= C(v_s, tau) for u = {u:?}"
            )));
        }
        targets.push(refined.map(coord, &u)?.apply(vector)?);
        let l_s = match pushed {
            ContourPoint::Infinity => Subspace::full(refined.evaluate(&u)?, refined.modulus())?,
            ContourPoint::Finite(target) => kernel(&refined.map(&u, &target)?),
        };
        subspaces.push(l_s);
    }
    MinRankInstance::new(refined.evaluate(&u)?, refined.modulus(), targets, subspaces)
}
