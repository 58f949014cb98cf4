//! Tame functors Q^r -> Vect_K presented by a frame and a resolution.
//!
//! The module is constant on right-open alpha-cubes: evaluation at a
//! rational point reads the frame at the floor of the coordinates divided
//! by alpha.

use std::collections::BTreeMap;

use crate::barcode::{bar_decomposition, Barcode};
use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::grid::box_points;
use crate::koszul::betti_diagram;
use crate::matrix::PrimeFieldMatrix;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TameModule {
    frame: Frame,
    alpha: Rational,
}

impl TameModule {
    pub fn new(frame: Frame, alpha: Rational) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::Precondition("tame resolution must be positive".into()));
        }
        Ok(TameModule { frame, alpha })
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn r(&self) -> usize {
        self.frame.r()
    }

    pub fn modulus(&self) -> u64 {
        self.frame.modulus()
    }

    /// Grid point of the alpha-cube containing v.
    pub fn grid_of(&self, v: &[Rational]) -> Result<Vec<usize>> {
        v.iter().map(|x| x.floor_div(&self.alpha).map(|k| k as usize)).collect()
    }

    /// Rational coordinates of a grid point.
    pub fn point_of(&self, v: &[usize]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x as u64) * self.alpha).collect()
    }

    pub fn evaluate(&self, v: &[Rational]) -> Result<usize> {
        Ok(self.frame.dim_at(&self.grid_of(v)?))
    }

    pub fn map(&self, from: &[Rational], to: &[Rational]) -> Result<PrimeFieldMatrix> {
        if from.iter().zip(to).any(|(a, b)| a > b) {
            return Err(Error::Precondition(format!(
                "structure map requested for non-comparable points {from:?} and {to:?}"
            )));
        }
        self.frame.map(&self.grid_of(from)?, &self.grid_of(to)?)
    }

    /// The same module on a grid refined by an integer factor.
    pub fn refine(&self, factor: usize) -> Result<TameModule> {
        if factor == 0 {
            return Err(Error::Precondition("refinement factor must be positive".into()));
        }
        if factor == 1 {
            return Ok(self.clone());
        }
        let coarse = &self.frame;
        let bounds: Vec<usize> = coarse.bounds().iter().map(|&b| b * factor).collect();
        let frame = Frame::from_fns(
            coarse.r(),
            coarse.modulus(),
            bounds,
            |v| {
                let down: Vec<usize> = v.iter().map(|&x| x / factor).collect();
                coarse.dim_at(&down)
            },
            |axis, v| {
                let down: Vec<usize> = v.iter().map(|&x| x / factor).collect();
                let mut up = v.to_vec();
                up[axis] += 1;
                let down_up: Vec<usize> = up.iter().map(|&x| x / factor).collect();
                coarse.map(&down, &down_up)
            },
        )?;
        let alpha = self.alpha / Rational::from_integer(factor as u64);
        TameModule::new(frame, alpha)
    }

    /// Minimal generators with rational coordinates.
    pub fn minimal_generators(&self) -> Result<Vec<(Vec<Rational>, Vec<u64>)>> {
        Ok(self
            .frame
            .minimal_generators()?
            .into_iter()
            .map(|(v, g)| (self.point_of(&v), g))
            .collect())
    }

    pub fn rank0(&self) -> Result<usize> {
        self.frame.rank0()
    }

    /// The n-th Betti diagram with coordinates scaled by the resolution.
    pub fn betti_diagram(&self, n: usize) -> Result<BTreeMap<Vec<Rational>, usize>> {
        Ok(betti_diagram(&self.frame, n)?
            .entries
            .into_iter()
            .map(|(v, d)| (self.point_of(&v), d))
            .collect())
    }

    /// Bar decomposition in rational coordinates (one-parameter only).
    pub fn barcode(&self) -> Result<Barcode> {
        Ok(bar_decomposition(&self.frame)?.scale(&self.alpha))
    }

    /// Pointwise dimensions over a rational bound grid, for comparisons.
    pub fn dims_on_refined_grid(&self, bound: &[usize]) -> Vec<usize> {
        box_points(bound).iter().map(|v| self.frame.dim_at(v)).collect()
    }
}
