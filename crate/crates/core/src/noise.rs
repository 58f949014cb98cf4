//! Shifts of tame modules along a contour and membership in the induced
//! simple noise system.
//!
//! The shift of a module is the subfunctor generated by the images of its
//! minimal generators pushed forward to their contour targets; a module
//! belongs to the noise at eps precisely when every structure map across
//! the contour step vanishes, equivalently when its shift is zero.

use crate::contour::{Contour, ContourPoint};
use crate::error::{Error, Result};
use crate::frame::Subframe;
use crate::grid::box_points;
use crate::rational::{lcm_all, Rational};
use crate::tame::TameModule;

/// A computed shift: the refined ambient module, the generated subframe
/// with its inclusions, and the bookkeeping of where each minimal
/// generator went.
#[derive(Clone, Debug)]
pub struct ShiftResult {
    /// The input module, refined so that every target is grid-aligned.
    pub ambient: TameModule,
    /// The shift as a subframe of the refined ambient.
    pub sub: Subframe,
    /// Per minimal generator: rational source coordinate and target
    /// coordinate, `None` when the contour sends the source to infinity.
    pub generators: Vec<(Vec<Rational>, Option<Vec<Rational>>)>,
    /// Pushed generator vectors on the refined grid, aligned with
    /// `generators`.
    pub pushed: Vec<Option<(Vec<usize>, Vec<u64>)>>,
}

impl ShiftResult {
    pub fn shifted_module(&self) -> Result<TameModule> {
        TameModule::new(self.sub.frame.clone(), *self.ambient.alpha())
    }

    pub fn rank0(&self) -> Result<usize> {
        self.sub.frame.rank0()
    }
}

/// Refinement factor aligning all contour offsets `eps * w_i` with the
/// grid of resolution alpha.
pub fn refinement_factor(module: &TameModule, contour: &Contour, eps: &Rational) -> Result<usize> {
    let alpha = module.alpha();
    let denominators: Result<Vec<u64>> = contour
        .direction()
        .iter()
        .map(|w| (*eps * *w).refinement_against(alpha))
        .collect();
    let k = lcm_all(denominators?);
    let refined_points: u128 = module
        .frame()
        .bounds()
        .iter()
        .map(|&b| (b as u128) * (k as u128) + 2)
        .product();
    if refined_points > 5_000_000 {
        return Err(Error::BudgetExceeded { needed: refined_points, budget: 5_000_000 });
    }
    Ok(k as usize)
}

fn check_arity(module: &TameModule, contour: &Contour) -> Result<()> {
    if contour.r() != module.r() {
        return Err(Error::ParameterMismatch(format!(
            "contour has {} parameters, module has {}",
            contour.r(),
            module.r()
        )));
    }
    Ok(())
}

/// The shift of `module` by `tau`: the subfunctor generated by the pushed
/// minimal generators.
pub fn shift(module: &TameModule, contour: &Contour, tau: &Rational) -> Result<ShiftResult> {
    check_arity(module, contour)?;
    let generators = module.minimal_generators()?;
    let refined = module.refine(refinement_factor(module, contour, tau)?)?;
    let mut generator_log = Vec::with_capacity(generators.len());
    let mut pushed = Vec::with_capacity(generators.len());
    let mut elements = Vec::new();
    for (source, vector) in &generators {
        let target = contour.eval_finite(source, tau)?;
        match target {
            ContourPoint::Infinity => {
                generator_log.push((source.clone(), None));
                pushed.push(None);
            }
            ContourPoint::Finite(coords) => {
                let grid = refined.grid_of(&coords)?;
                for (c, &g) in coords.iter().zip(&grid) {
                    let snapped = Rational::from_integer(g as u64) * *refined.alpha();
                    if *c != snapped {
                        return Err(Error::Precondition(format!(
                            "shift target {c} is not grid-aligned at resolution {}",
                            refined.alpha()
                        )));
                    }
                }
                if grid.iter().zip(refined.frame().bounds()).any(|(&g, &b)| g > b) {
                    return Err(Error::Precondition(format!(
                        "shifted coordinate {coords:?} exceeds the box of the module"
                    )));
                }
                let moved = refined.map(source, &coords)?.apply(vector)?;
                generator_log.push((source.clone(), Some(coords.clone())));
                pushed.push(Some((grid.clone(), moved.clone())));
                elements.push((grid, moved));
            }
        }
    }
    let sub = refined.frame().submodule_generated(&elements)?;
    Ok(ShiftResult { ambient: refined, sub, generators: generator_log, pushed })
}

/// The domain variant: keep the minimal generators whose contour target is
/// finite, at their original coordinates, without pushing them forward.
pub fn domain_shift(module: &TameModule, contour: &Contour, tau: &Rational) -> Result<ShiftResult> {
    check_arity(module, contour)?;
    let generators = module.minimal_generators()?;
    let ambient = module.clone();
    let mut generator_log = Vec::with_capacity(generators.len());
    let mut pushed = Vec::with_capacity(generators.len());
    let mut elements = Vec::new();
    for (source, vector) in &generators {
        match contour.eval_finite(source, tau)? {
            ContourPoint::Infinity => {
                generator_log.push((source.clone(), None));
                pushed.push(None);
            }
            ContourPoint::Finite(_) => {
                let grid = ambient.grid_of(source)?;
                generator_log.push((source.clone(), Some(source.clone())));
                pushed.push(Some((grid.clone(), vector.clone())));
                elements.push((grid, vector.clone()));
            }
        }
    }
    let sub = ambient.frame().submodule_generated(&elements)?;
    Ok(ShiftResult { ambient, sub, generators: generator_log, pushed })
}

/// Whether the module belongs to the noise component at `eps`: all
/// structure maps across the contour step vanish wherever the contour is
/// finite. Scanning grid-aligned points one step past the box suffices
/// because values are constant on refined cubes and stabilize past the box.
pub fn noise_contains(module: &TameModule, contour: &Contour, eps: &Rational) -> Result<bool> {
    check_arity(module, contour)?;
    let refined = module.refine(refinement_factor(module, contour, eps)?)?;
    let scan_bound: Vec<usize> = refined.frame().bounds().iter().map(|&b| b + 1).collect();
    for v in box_points(&scan_bound) {
        let source = refined.point_of(&v);
        let ContourPoint::Finite(target) = contour.eval_finite(&source, eps)? else {
            continue;
        };
        let m = refined.map(&source, &target)?;
        if !m.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
