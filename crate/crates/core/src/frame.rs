//! Functors N^r -> Vect_K stored on a finite grid.
//!
//! A frame keeps, for every grid point v inside its box, an exact dimension
//! and per-axis structure maps. Outside the box the functor is constant:
//! evaluation clamps to the box and the missing maps are identities. The box
//! is expected to contain all generators and relations.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::check_prime;
use crate::grid::{add_unit, box_points, clamp, join, leq};
use crate::matrix::PrimeFieldMatrix;
use crate::subspace::{quotient_projection, Subspace};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Frame {
    r: usize,
    modulus: u64,
    bounds: Vec<usize>,
    sizes: Vec<usize>,
    strides: Vec<usize>,
    dims: Vec<usize>,
    /// maps[axis][flat(v)] is the step map F(v) -> F(v + e_axis), present
    /// exactly when v[axis] < bounds[axis].
    maps: Vec<Vec<Option<PrimeFieldMatrix>>>,
}

/// A subfunctor presented inside an ambient frame: its own frame together
/// with, per grid point, the inclusion matrix whose columns are the chosen
/// basis of the subspace inside the ambient value.
#[derive(Clone, Debug)]
pub struct Subframe {
    pub frame: Frame,
    pub inclusions: Vec<PrimeFieldMatrix>,
}

impl Frame {
    pub fn from_parts(
        r: usize,
        modulus: u64,
        bounds: Vec<usize>,
        dims: Vec<usize>,
        maps: Vec<Vec<Option<PrimeFieldMatrix>>>,
    ) -> Result<Frame> {
        check_prime(modulus)?;
        if r == 0 || bounds.len() != r {
            return Err(Error::ParameterMismatch(format!(
                "frame needs r >= 1 and a box of length r, got r={r} box of length {}",
                bounds.len()
            )));
        }
        let sizes: Vec<usize> = bounds.iter().map(|&b| b + 1).collect();
        let total: usize = sizes.iter().product();
        let mut strides = vec![1usize; r];
        for i in (0..r.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * sizes[i + 1];
        }
        if dims.len() != total || maps.len() != r || maps.iter().any(|m| m.len() != total) {
            return Err(Error::DimensionMismatch("frame data does not match its box".into()));
        }
        let frame = Frame { r, modulus, bounds, sizes, strides, dims, maps };
        frame.validate()?;
        Ok(frame)
    }

    pub fn from_fns(
        r: usize,
        modulus: u64,
        bounds: Vec<usize>,
        dims_fn: impl Fn(&[usize]) -> usize,
        map_fn: impl Fn(usize, &[usize]) -> Result<PrimeFieldMatrix>,
    ) -> Result<Frame> {
        let points = box_points(&bounds);
        let dims: Vec<usize> = points.iter().map(|v| dims_fn(v)).collect();
        let mut maps = vec![Vec::with_capacity(points.len()); r];
        for (axis, axis_maps) in maps.iter_mut().enumerate() {
            for v in &points {
                if v[axis] < bounds[axis] {
                    axis_maps.push(Some(map_fn(axis, v)?));
                } else {
                    axis_maps.push(None);
                }
            }
        }
        Frame::from_parts(r, modulus, bounds, dims, maps)
    }

    fn validate(&self) -> Result<()> {
        for v in self.points() {
            let d = self.dims[self.flat(&v)];
            for axis in 0..self.r {
                if v[axis] >= self.bounds[axis] {
                    continue;
                }
                let m = self.step(axis, &v);
                let target = self.dims[self.flat(&add_unit(&v, axis))];
                if m.rows() != target || m.cols() != d || m.modulus() != self.modulus {
                    return Err(Error::DimensionMismatch(format!(
                        "step map at {v:?} along axis {axis} has shape {}x{}, expected {target}x{d}",
                        m.rows(),
                        m.cols()
                    )));
                }
            }
            for a in 0..self.r {
                for b in a + 1..self.r {
                    if v[a] >= self.bounds[a] || v[b] >= self.bounds[b] {
                        continue;
                    }
                    let via_a = self.step(b, &add_unit(&v, a)).mul(self.step(a, &v))?;
                    let via_b = self.step(a, &add_unit(&v, b)).mul(self.step(b, &v))?;
                    if via_a != via_b {
                        return Err(Error::Precondition(format!(
                            "structure maps fail to commute at {v:?} on axes {a},{b}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn bounds(&self) -> &[usize] {
        &self.bounds
    }

    pub fn points(&self) -> Vec<Vec<usize>> {
        box_points(&self.bounds)
    }

    fn flat(&self, v: &[usize]) -> usize {
        v.iter().zip(&self.strides).map(|(&x, &s)| x * s).sum()
    }

    /// Dimension at v, clamped to the box.
    pub fn dim_at(&self, v: &[usize]) -> usize {
        self.dims[self.flat(&clamp(v, &self.bounds))]
    }

    /// The step map F(v) -> F(v + e_axis); requires v[axis] < bounds[axis].
    pub fn step(&self, axis: usize, v: &[usize]) -> &PrimeFieldMatrix {
        self.maps[axis][self.flat(v)].as_ref().expect("step map inside box")
    }

    /// Composite structure map F(from) -> F(to) for from <= to, with both
    /// endpoints clamped to the box.
    pub fn map(&self, from: &[usize], to: &[usize]) -> Result<PrimeFieldMatrix> {
        if !leq(from, to) {
            return Err(Error::Precondition(format!(
                "structure map requested for non-comparable points {from:?} and {to:?}"
            )));
        }
        let mut current = clamp(from, &self.bounds);
        let target = clamp(to, &self.bounds);
        let mut acc = PrimeFieldMatrix::identity(self.dim_at(&current), self.modulus)?;
        for axis in 0..self.r {
            while current[axis] < target[axis] {
                acc = self.step(axis, &current).mul(&acc)?;
                current[axis] += 1;
            }
        }
        Ok(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn zero(r: usize, modulus: u64) -> Result<Frame> {
        Frame::from_fns(r, modulus, vec![0; r], |_| 0, |_, _| PrimeFieldMatrix::zero(0, 0, modulus))
    }

    /// Direct sum of free functors on the given generators (with
    /// multiplicities); the box is the join of the generator coordinates.
    pub fn free_module(
        modulus: u64,
        r: usize,
        generators: &[(Vec<usize>, usize)],
    ) -> Result<Frame> {
        for (coord, _) in generators {
            if coord.len() != r {
                return Err(Error::ParameterMismatch("generator coordinate of wrong arity".into()));
            }
        }
        let mut slots: Vec<Vec<usize>> = Vec::new();
        for (coord, mult) in generators {
            for _ in 0..*mult {
                slots.push(coord.clone());
            }
        }
        let bounds = slots.iter().fold(vec![0; r], |acc, c| join(&acc, c));
        let alive =
            |v: &[usize]| -> Vec<usize> { (0..slots.len()).filter(|&i| leq(&slots[i], v)).collect() };
        Frame::from_fns(
            r,
            modulus,
            bounds,
            |v| alive(v).len(),
            |axis, v| {
                let src = alive(v);
                let dst = alive(&add_unit(v, axis));
                let mut m = PrimeFieldMatrix::zero(dst.len(), src.len(), modulus)?;
                for (j, slot) in src.iter().enumerate() {
                    let i = dst.iter().position(|s| s == slot).expect("slot persists upward");
                    m.set(i, j, 1);
                }
                Ok(m)
            },
        )
    }

    /// The bar supported on `{v : a <= v, b not <= v}`.
    pub fn bar_module(modulus: u64, a: &[usize], b: &[usize]) -> Result<Frame> {
        if !leq(a, b) || a == b {
            return Err(Error::Precondition(format!(
                "bar endpoints need a <= b and a != b, got {a:?}, {b:?}"
            )));
        }
        let r = a.len();
        let inside = |v: &[usize]| leq(a, v) && !leq(b, v);
        Frame::from_fns(
            r,
            modulus,
            b.to_vec(),
            |v| inside(v) as usize,
            |axis, v| {
                let w = add_unit(v, axis);
                if inside(v) && inside(&w) {
                    PrimeFieldMatrix::identity(1, modulus)
                } else {
                    PrimeFieldMatrix::zero(inside(&w) as usize, inside(v) as usize, modulus)
                }
            },
        )
    }

    /// The simple functor with value K at exactly w.
    pub fn simple_module(modulus: u64, w: &[usize]) -> Result<Frame> {
        let bounds: Vec<usize> = w.iter().map(|&x| x + 1).collect();
        Frame::from_fns(
            w.len(),
            modulus,
            bounds,
            |v| (v == w) as usize,
            |axis, v| {
                let u = add_unit(v, axis);
                PrimeFieldMatrix::zero((u == w) as usize, (v == w) as usize, modulus)
            },
        )
    }

    pub fn direct_sum(&self, other: &Frame) -> Result<Frame> {
        if self.r != other.r {
            return Err(Error::ParameterMismatch(format!(
                "direct sum of frames with {} and {} parameters",
                self.r, other.r
            )));
        }
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus, other.modulus));
        }
        let bounds = join(&self.bounds, &other.bounds);
        Frame::from_fns(
            self.r,
            self.modulus,
            bounds,
            |v| self.dim_at(v) + other.dim_at(v),
            |axis, v| {
                let w = add_unit(v, axis);
                block_diag(&self.map(v, &w)?, &other.map(v, &w)?)
            },
        )
    }

    /// Images of the incoming step maps at v, as a subspace of F(v).
    pub fn incoming_image(&self, v: &[usize]) -> Result<Subspace> {
        let d = self.dim_at(v);
        let mut rows: Vec<Vec<u64>> = Vec::new();
        for axis in 0..self.r {
            if v[axis] == 0 {
                continue;
            }
            let mut below = v.to_vec();
            below[axis] -= 1;
            let m = self.step(axis, &below);
            for j in 0..m.cols() {
                rows.push(m.column(j));
            }
        }
        Subspace::from_rows(&rows, d, self.modulus)
    }

    /// A minimal generating set: at each grid point the standard coset
    /// representatives of the cokernel of the incoming maps, in
    /// lexicographic grid order.
    pub fn minimal_generators(&self) -> Result<Vec<(Vec<usize>, Vec<u64>)>> {
        let mut out = Vec::new();
        for v in self.points() {
            let d = self.dims[self.flat(&v)];
            if d == 0 {
                continue;
            }
            let incoming = self.incoming_image(&v)?;
            let (_, pivots) = incoming.basis().rref();
            for j in 0..d {
                if !pivots.contains(&j) {
                    let mut g = vec![0u64; d];
                    g[j] = 1;
                    out.push((v.clone(), g));
                }
            }
        }
        Ok(out)
    }

    /// The minimal number of generators.
    pub fn rank0(&self) -> Result<usize> {
        Ok(self.minimal_generators()?.len())
    }

    /// Subfunctor generated by the given elements, with inclusion data.
    pub fn submodule_generated(&self, elements: &[(Vec<usize>, Vec<u64>)]) -> Result<Subframe> {
        for (coord, vector) in elements {
            if coord.len() != self.r || !leq(coord, &self.bounds) {
                return Err(Error::Precondition(format!(
                    "generator coordinate {coord:?} outside the box {:?}",
                    self.bounds
                )));
            }
            if vector.len() != self.dim_at(coord) {
                return Err(Error::DimensionMismatch(format!(
                    "generator vector of length {} at {coord:?} where the value has dimension {}",
                    vector.len(),
                    self.dim_at(coord)
                )));
            }
        }
        let points = self.points();
        let mut bases: Vec<Subspace> = Vec::with_capacity(points.len());
        for w in &points {
            let mut rows = Vec::new();
            for (coord, vector) in elements {
                if leq(coord, w) {
                    rows.push(self.map(coord, w)?.apply(vector)?);
                }
            }
            bases.push(Subspace::from_rows(&rows, self.dim_at(w), self.modulus)?);
        }
        let lookup = |w: &[usize]| -> usize { self.flat(w) };
        let sub_frame = Frame::from_fns(
            self.r,
            self.modulus,
            self.bounds.clone(),
            |v| bases[lookup(v)].dim(),
            |axis, v| {
                let w = add_unit(v, axis);
                let src = &bases[lookup(v)];
                let dst = &bases[lookup(&w)];
                let step = self.step(axis, v);
                let images: Vec<Vec<u64>> =
                    (0..src.dim()).map(|i| step.apply(src.basis().row(i)).unwrap()).collect();
                dst.express_columns(&images)?.ok_or_else(|| {
                     Error::Precondition("generated subspaces are not closed under the maps".into())
                })
            },
        )?;
        let inclusions: Vec<PrimeFieldMatrix> = (0..points.len())
            .map(|i| bases[i].basis().transpose())
            .collect();
        Ok(Subframe { frame: sub_frame, inclusions })
    }

    /// Quotient of this frame by a subfunctor presented inside it.
    pub fn quotient_by(&self, sub: &Subframe) -> Result<Frame> {
        if sub.frame.bounds != self.bounds || sub.frame.modulus != self.modulus {
            return Err(Error::ParameterMismatch(
                "quotient requires a subframe presented on the same grid".into(),
            ));
        }
        let points = self.points();
        let mut projections = Vec::with_capacity(points.len());
        let mut sections = Vec::with_capacity(points.len());
        for w in &points {
            let incl = &sub.inclusions[self.flat(w)];
            let (q, section) = quotient_projection(&Subspace::from_row_space(&incl.transpose()))?;
            projections.push(q);
            sections.push(section);
        }
        Frame::from_fns(
            self.r,
            self.modulus,
            self.bounds.clone(),
            |v| projections[self.flat(v)].rows(),
            |axis, v| {
                let w = add_unit(v, axis);
                projections[self.flat(&w)].mul(self.step(axis, v))?.mul(&sections[self.flat(v)])
            },
        )
    }

    /// True when the subframe's value contains the other subframe's value at
    /// every grid point; both must be presented inside this frame.
    pub fn subframe_contains(&self, outer: &Subframe, inner: &Subframe) -> Result<bool> {
        for w in self.points() {
            let i = self.flat(&w);
            let big = Subspace::from_row_space(&outer.inclusions[i].transpose());
            let small = Subspace::from_row_space(&inner.inclusions[i].transpose());
            if !big.contains(&small)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Pointwise dimensions over an arbitrary bound, clamped; handy for
    /// comparing frames with different boxes.
    pub fn dims_table(&self, bound: &[usize]) -> BTreeMap<Vec<usize>, usize> {
        box_points(bound).into_iter().map(|v| (v.clone(), self.dim_at(&v))).collect()
    }

    /// The same functor re-presented on a larger box.
    pub fn padded_to(&self, bounds: &[usize]) -> Result<Frame> {
        if bounds.len() != self.r || !leq(&self.bounds, bounds) {
            return Err(Error::Precondition(format!(
                "padding bounds {bounds:?} must dominate the box {:?}",
                self.bounds
            )));
        }
        Frame::from_fns(
            self.r,
            self.modulus,
            bounds.to_vec(),
            |v| self.dim_at(v),
            |axis, v| self.map(v, &add_unit(v, axis)),
        )
    }
}

pub(crate) fn block_diag(a: &PrimeFieldMatrix, b: &PrimeFieldMatrix) -> Result<PrimeFieldMatrix> {
    let mut out = PrimeFieldMatrix::zero(a.rows() + b.rows(), a.cols() + b.cols(), a.modulus())?;
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            out.set(i, j, a.get(i, j));
        }
    }
    for i in 0..b.rows() {
        for j in 0..b.cols() {
            out.set(a.rows() + i, a.cols() + j, b.get(i, j));
        }
    }
    Ok(out)
}
