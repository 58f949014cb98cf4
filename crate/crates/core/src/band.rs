//! Band functors: the two-parameter modules whose anti-diagonal values are
//! quotients by prescribed subspaces. They are the gadget that carries a
//! min-rank instance into a stable-rank computation.

use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::matrix::PrimeFieldMatrix;
use crate::rational::Rational;
use crate::subspace::{quotient_projection, Subspace};
use crate::tame::TameModule;

/// Parameter n and the n + 1 subspaces of GF(p)^(n+1) placed along the
/// anti-diagonal a + b = 3n.
#[derive(Clone, Debug)]
pub struct BandSpec {
    pub n: usize,
    pub modulus: u64,
    pub subspaces: Vec<Subspace>,
}

impl BandSpec {
    pub fn new(n: usize, modulus: u64, subspaces: Vec<Subspace>) -> Result<Self> {
        if subspaces.len() != n + 1 {
            return Err(Error::ParameterMismatch(format!(
                "band parameter {n} needs {} subspaces, got {}",
                n + 1,
                subspaces.len()
            )));
        }
        for l in &subspaces {
            if l.ambient_dim() != n + 1 {
                return Err(Error::DimensionMismatch(format!(
                    "band subspaces live in dimension {}, got {}",
                    n + 1,
                    l.ambient_dim()
                )));
            }
        }
        Ok(BandSpec { n, modulus, subspaces })
    }
}

/// Values of the underlying free cover: generator s sits at (n - s, s).
fn alive_slots(n: usize, a: usize, b: usize) -> Vec<usize> {
    (0..=n).filter(|&s| n - s <= a && s <= b).collect()
}

/// Build the band functor as a 1-tame module on the box (3n, 3n): below the
/// anti-diagonal a + b = 3n it agrees with the free cover, on it the value
/// is the quotient by the prescribed subspace, above it everything is zero.
pub fn band_functor(spec: &BandSpec) -> Result<TameModule> {
    let n = spec.n;
    let p = spec.modulus;
    let big = 3 * n;
    let projections: Vec<(PrimeFieldMatrix, usize)> = spec
        .subspaces
        .iter()
        .map(|l| quotient_projection(l).map(|(q, _)| (q.clone(), q.rows())))
        .collect::<Result<_>>()?;

    // classify a grid point
    #[derive(Clone, Copy, PartialEq)]
    enum Cell {
        Free,
        Quotient(usize),
        Zero,
    }
    let classify = |a: usize, b: usize| -> Cell {
        if a <= 2 * n && b <= 2 * n && a + b < 3 * n {
            Cell::Free
        } else if a <= 2 * n && (n..=2 * n).contains(&b) && a + b == 3 * n {
            Cell::Quotient(b - n)
        } else {
            Cell::Zero
        }
    };
    let dims = |a: usize, b: usize| -> usize {
        match classify(a, b) {
            Cell::Free => alive_slots(n, a, b).len(),
            Cell::Quotient(t) => projections[t].1,
            Cell::Zero => 0,
        }
    };
    // inclusion of the alive slots into the full space K^(n+1)
    let embed = |a: usize, b: usize| -> Result<PrimeFieldMatrix> {
        let slots = alive_slots(n, a, b);
        let mut m = PrimeFieldMatrix::zero(n + 1, slots.len(), p)?;
        for (j, &s) in slots.iter().enumerate() {
            m.set(s, j, 1);
        }
        Ok(m)
    };
    let frame = Frame::from_fns(
        2,
        p,
        vec![big, big],
        |v| dims(v[0], v[1]),
        |axis, v| {
            let (a, b) = (v[0], v[1]);
            let (a2, b2) = if axis == 0 { (a + 1, b) } else { (a, b + 1) };
            match (classify(a, b), classify(a2, b2)) {
                (Cell::Free, Cell::Free) => {
                    let src = alive_slots(n, a, b);
                    let dst = alive_slots(n, a2, b2);
                    let mut m = PrimeFieldMatrix::zero(dst.len(), src.len(), p)?;
                    for (j, s) in src.iter().enumerate() {
                        let i = dst.iter().position(|x| x == s).expect("slots persist");
                        m.set(i, j, 1);
                    }
                    Ok(m)
                }
                (Cell::Free, Cell::Quotient(t)) => {
                    projections[t].0.mul(&embed(a, b)?)
                }
                (_, Cell::Zero) => PrimeFieldMatrix::zero(0, dims(a, b), p),
                (Cell::Zero, other) => {
                    let d = match other {
                        Cell::Free => alive_slots(n, a2, b2).len(),
                        Cell::Quotient(t) => projections[t].1,
                        Cell::Zero => 0,
                    };
                    PrimeFieldMatrix::zero(d, 0, p)
                }
                (Cell::Quotient(_), _) => unreachable!("the anti-diagonal is one cell thick"),
            }
        },
    )?;
    TameModule::new(frame, Rational::one())
}
