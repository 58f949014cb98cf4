//! Koszul complexes of frames and the homological invariants they compute:
//! Betti diagrams, Betti numbers and the Euler characteristic.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::neg_mod;
use crate::frame::Frame;
use crate::grid::{box_points, subsets_of_size, sub_subset};
use crate::matrix::PrimeFieldMatrix;

/// One homological degree of a Koszul complex: the direct sum of the frame
/// values at `v - e_S` over the listed subsets.
#[derive(Clone, Debug)]
pub struct KoszulTerm {
    pub subsets: Vec<Vec<usize>>,
    pub block_dims: Vec<usize>,
    pub total_dim: usize,
}

/// The Koszul complex of a frame at a grid point.
#[derive(Clone, Debug)]
pub struct KoszulComplexAt {
    pub point: Vec<usize>,
    pub terms: Vec<KoszulTerm>,
    /// differentials[i] maps terms[i + 1] into terms[i].
    pub differentials: Vec<PrimeFieldMatrix>,
}

impl KoszulComplexAt {
    /// Homology dimensions in degrees 0..=r.
    pub fn homology_dims(&self) -> Vec<usize> {
        let r = self.terms.len() - 1;
        let rank = |i: usize| -> usize {
            if i == 0 || i > r {
                0
            } else {
                self.differentials[i - 1].rank()
            }
        };
        (0..=r)
            .map(|i| {
                let dim = self.terms[i].total_dim;
                dim - rank(i) - rank(i + 1)
            })
            .collect()
    }
}

/// Build the Koszul complex of `f` at `v`. Values at points with a negative
/// coordinate are zero; values past the box use the stabilized frame.
pub fn koszul_complex_at(f: &Frame, v: &[usize]) -> Result<KoszulComplexAt> {
    let r = f.r();
    let p = f.modulus();
    let mut terms = Vec::with_capacity(r + 1);
    for i in 0..=r {
        let subsets = subsets_of_size(r, i);
        let block_dims: Vec<usize> = subsets
            .iter()
            .map(|s| sub_subset(v, s).map(|w| f.dim_at(&w)).unwrap_or(0))
            .collect();
        let total_dim = block_dims.iter().sum();
        terms.push(KoszulTerm { subsets, block_dims, total_dim });
    }
    let mut differentials = Vec::with_capacity(r);
    for i in 1..=r {
        let src = &terms[i];
        let dst = &terms[i - 1];
        let mut delta = PrimeFieldMatrix::zero(dst.total_dim, src.total_dim, p)?;
        let dst_offsets = offsets(&dst.block_dims);
        let src_offsets = offsets(&src.block_dims);
        for (sj, s) in src.subsets.iter().enumerate() {
            let Some(from) = sub_subset(v, s) else { continue };
            for (tj, t) in dst.subsets.iter().enumerate() {
                if !t.iter().all(|x| s.contains(x)) {
                    continue;
                }
                let missing = s.iter().find(|x| !t.contains(x)).expect("|S| = |T| + 1");
                // 1-based position of the missing element within S
                let order = s.iter().position(|x| x == missing).unwrap() + 1;
                let Some(to) = sub_subset(v, t) else { continue };
                let block = f.map(&from, &to)?;
                let sign_is_plus = order % 2 == 0;
                for bi in 0..block.rows() {
                    for bj in 0..block.cols() {
                        let val = block.get(bi, bj);
                        let signed = if sign_is_plus { val } else { neg_mod(val, p) };
                        delta.set(dst_offsets[tj] + bi, src_offsets[sj] + bj, signed);
                    }
                }
            }
        }
        differentials.push(delta);
    }
    for i in 1..differentials.len() {
        debug_assert!(
            differentials[i - 1].mul(&differentials[i])?.is_zero(),
            "koszul differentials must compose to zero"
        );
    }
    Ok(KoszulComplexAt { point: v.to_vec(), terms, differentials })
}

fn offsets(dims: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(dims.len());
    let mut acc = 0;
    for &d in dims {
        out.push(acc);
        acc += d;
    }
    out
}

/// A Betti diagram: the support of the n-th homology of the Koszul complex,
/// with dimensions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiDiagram {
    pub degree: usize,
    pub entries: BTreeMap<Vec<usize>, usize>,
}

impl BettiDiagram {
    pub fn rank(&self) -> usize {
        self.entries.values().sum()
    }
}

/// The n-th Betti diagram, scanning one step past the box on every axis.
pub fn betti_diagram(f: &Frame, n: usize) -> Result<BettiDiagram> {
    if n > f.r() {
        return Ok(BettiDiagram { degree: n, entries: BTreeMap::new() });
    }
    let scan_bound: Vec<usize> = f.bounds().iter().map(|&b| b + 1).collect();
    let mut entries = BTreeMap::new();
    for v in box_points(&scan_bound) {
        let complex = koszul_complex_at(f, &v)?;
        let h = complex.homology_dims()[n];
        if h > 0 {
            entries.insert(v, h);
        }
    }
    Ok(BettiDiagram { degree: n, entries })
}

/// The n-th Betti number.
pub fn betti_number(f: &Frame, n: usize) -> Result<usize> {
    Ok(betti_diagram(f, n)?.rank())
}

/// Alternating sum of the Betti numbers over degrees 0..=r.
pub fn euler_characteristic(f: &Frame) -> Result<i64> {
    let mut chi = 0i64;
    for n in 0..=f.r() {
        let rank = betti_number(f, n)? as i64;
        chi += if n % 2 == 0 { rank } else { -rank };
    }
    Ok(chi)
}

/// Check that the box is large enough: the zeroth and first Betti diagrams
/// must vanish on the outer scan face.
pub fn validate_support_within_box(f: &Frame) -> Result<()> {
    for n in [0usize, 1] {
        let diagram = betti_diagram(f, n)?;
        for v in diagram.entries.keys() {
            if v.iter().zip(f.bounds()).any(|(&x, &b)| x > b) {
                return Err(Error::Precondition(format!(
                    "Betti support at {v:?} in degree {n} escapes the box {:?}",
                    f.bounds()
                )));
            }
        }
    }
    Ok(())
}
