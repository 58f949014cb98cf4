//! Bar decompositions of one-parameter frames.
//!
//! The decomposition is computed by streaming matrix reduction: walk the
//! grid left to right carrying a basis labelled by live bars, reduce the
//! images oldest-bar-first, retire the bars whose columns die, and open a
//! new bar for every completion vector.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::frame::Frame;

use crate::rational::Rational;
use crate::subspace::Subspace;

/// A multiset of bars with rational endpoints. A finite bar `[a, b)` has
/// `a < b`; an infinite bar is recorded by its birth.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Barcode {
    pub finite: BTreeMap<(Rational, Rational), u64>,
    pub infinite: BTreeMap<Rational, u64>,
}

impl Barcode {
    pub fn new() -> Self {
        Barcode::default()
    }

    pub fn add_finite(&mut self, birth: Rational, death: Rational) {
        assert!(birth < death, "bar must have positive length");
        *self.finite.entry((birth, death)).or_insert(0) += 1;
    }

    pub fn add_infinite(&mut self, birth: Rational) {
        *self.infinite.entry(birth).or_insert(0) += 1;
    }

    pub fn bar_count(&self) -> u64 {
        self.finite.values().sum::<u64>() + self.infinite.values().sum::<u64>()
    }

    pub fn is_empty(&self) -> bool {
        self.finite.is_empty() && self.infinite.is_empty()
    }

    /// Scale all endpoints by a resolution.
    pub fn scale(&self, alpha: &Rational) -> Barcode {
        let mut out = Barcode::new();
        for (&(b, d), &m) in &self.finite {
            *out.finite.entry((b * *alpha, d * *alpha)).or_insert(0) += m;
        }
        for (&b, &m) in &self.infinite {
            *out.infinite.entry(b * *alpha).or_insert(0) += m;
        }
        out
    }

    /// Number of bars alive on the whole closed interval `[v, w]`.
    pub fn bars_containing(&self, v: &Rational, w: &Rational) -> u64 {
        let finite: u64 = self
            .finite
            .iter()
            .filter(|((birth, death), _)| birth <= v && w < death)
            .map(|(_, m)| m)
            .sum();
        let infinite: u64 = self.infinite.iter().filter(|(birth, _)| *birth <= v).map(|(_, m)| m).sum();
        finite + infinite
    }
}

struct LiveBar {
    birth: usize,
    id: usize,
    representative: Vec<u64>,
}

/// Decompose a one-parameter frame into bars; endpoints are returned in
/// grid coordinates.
pub fn bar_decomposition(f: &Frame) -> Result<Barcode> {
    if f.r() != 1 {
        return Err(Error::Precondition(format!(
            "bar decomposition needs a one-parameter frame, got r = {}",
            f.r()
        )));
    }
    let p = f.modulus();
    let top = f.bounds()[0];
    let mut barcode = Barcode::new();
    let mut live: Vec<LiveBar> = Vec::new();
    let mut next_id = 0usize;

    // open bars for a basis of F(0)
    spawn_new_bars(&mut live, &mut next_id, 0, &[], f.dim_at(&[0]), p)?;

    for v in 0..top {
        let step = f.step(0, &[v]);
        // push every representative forward, then reduce oldest-first
        let mut survivors: Vec<LiveBar> = Vec::new();
        let mut reduced_rows: Vec<Vec<u64>> = Vec::new();
        live.sort_by_key(|bar| (bar.birth, bar.id));
        for bar in live.drain(..) {
            let mut image = step.apply(&bar.representative)?;
            reduce_against(&mut image, &reduced_rows, p);
            if image.iter().all(|&x| x == 0) {
                // the bar dies entering v + 1
                barcode.add_finite(
                    Rational::from_integer(bar.birth as u64),
                    Rational::from_integer((v + 1) as u64),
                );
            } else {
                normalize_leading(&mut image, p);
                reduced_rows.push(image.clone());
                survivors.push(LiveBar { birth: bar.birth, id: bar.id, representative: image });
            }
        }
        live = survivors;
        // complete to a basis of F(v + 1): new bars born at v + 1
        let current: Vec<Vec<u64>> =
            live.iter().map(|b| b.representative.clone()).collect();
        spawn_new_bars(&mut live, &mut next_id, v + 1, &current, f.dim_at(&[v + 1]), p)?;
    }

    // past the box every map is an identity, so whatever is alive persists
    for bar in live {
        barcode.add_infinite(Rational::from_integer(bar.birth as u64));
    }
    Ok(barcode)
}

fn spawn_new_bars(
    live: &mut Vec<LiveBar>,
    next_id: &mut usize,
    birth: usize,
    current: &[Vec<u64>],
    dim: usize,
    p: u64,
) -> Result<()> {
    if dim == 0 {
        return Ok(());
    }
    let span = Subspace::from_rows(current, dim, p)?;
    let (_, pivots) = span.basis().rref();
    for j in 0..dim {
        if !pivots.contains(&j) {
            let mut rep = vec![0u64; dim];
            rep[j] = 1;
            live.push(LiveBar { birth, id: *next_id, representative: rep });
            *next_id += 1;
        }
    }
    Ok(())
}

/// Eliminate the leading entries of `v` against rows that each start with a
/// normalized leading one.
fn reduce_against(v: &mut [u64], rows: &[Vec<u64>], p: u64) {
    for row in rows {
        let lead = row.iter().position(|&x| x != 0).expect("reduced rows are nonzero");
        let factor = v[lead] % p;
        if factor == 0 {
            continue;
        }
        for (x, &r) in v.iter_mut().zip(row) {
            *x = (*x + crate::field::neg_mod(factor * r % p, p)) % p;
        }
    }
}

fn normalize_leading(v: &mut [u64], p: u64) {
    let lead = v.iter().position(|&x| x != 0).expect("nonzero vector");
    let inv = crate::field::inv_mod(v[lead], p);
    for x in v.iter_mut() {
        *x = *x * inv % p;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::PrimeFieldMatrix;

    fn q(n: u64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn explicit_direct_sum() {
        // [0,2) + K(1,-)
        let bar = Frame::bar_module(2, &[0], &[2]).unwrap();
        let free = Frame::free_module(2, 1, &[(vec![1], 1)]).unwrap();
        let f = bar.direct_sum(&free).unwrap();
        let code = bar_decomposition(&f).unwrap();
        assert_eq!(code.finite, BTreeMap::from([((q(0), q(2)), 1)]));
        assert_eq!(code.infinite, BTreeMap::from([(q(1), 1)]));
    }

    #[test]
    fn zero_frame_is_empty() {
        let code = bar_decomposition(&Frame::zero(1, 2).unwrap()).unwrap();
        assert!(code.is_empty());
    }

    #[test]
    fn elder_rule_is_respected() {
        // F(0)=K -> F(1)=K^2 -> F(2)=K with maps [1;0] and [1 1]: the young
        // bar dies, the old one persists
        let f = Frame::from_fns(
            1,
            2,
            vec![2],
            |v| [1usize, 2, 1][v[0]],
            |_, v| {
                if v[0] == 0 {
                    PrimeFieldMatrix::from_rows(&[vec![1], vec![0]], 1, 2)
                } else {
                    PrimeFieldMatrix::from_rows(&[vec![1, 1]], 2, 2)
                }
            },
        )
        .unwrap();
        let code = bar_decomposition(&f).unwrap();
        assert_eq!(code.finite, BTreeMap::from([((q(1), q(2)), 1)]));
        assert_eq!(code.infinite, BTreeMap::from([(q(0), 1)]));
        // oracle: the composite has rank 1, so one bar must span [0, 2]
        assert_eq!(f.map(&[0], &[2]).unwrap().rank(), 1);
        assert_eq!(code.bars_containing(&q(0), &q(2)), 1);
    }

    #[test]
    fn death_without_rebirth() {
        // F(0)=K -> F(1)=K^2 -> F(2)=K with maps [1;0] and [0 1]
        let f = Frame::from_fns(
            1,
            2,
            vec![2],
            |v| [1usize, 2, 1][v[0]],
            |_, v| {
                if v[0] == 0 {
                    PrimeFieldMatrix::from_rows(&[vec![1], vec![0]], 1, 2)
                } else {
                    PrimeFieldMatrix::from_rows(&[vec![0, 1]], 2, 2)
                }
            },
        )
        .unwrap();
        let code = bar_decomposition(&f).unwrap();
        assert_eq!(code.finite, BTreeMap::from([((q(0), q(2)), 1)]));
        assert_eq!(code.infinite, BTreeMap::from([(q(1), 1)]));
    }

    #[test]
    fn pointwise_dimensions_match_alive_bars() {
        let f = Frame::bar_module(3, &[1], &[4])
            .unwrap()
            .direct_sum(&Frame::bar_module(3, &[0], &[3]).unwrap())
            .unwrap()
            .direct_sum(&Frame::free_module(3, 1, &[(vec![2], 2)]).unwrap())
            .unwrap();
        let code = bar_decomposition(&f).unwrap();
        for v in 0..=4u64 {
            assert_eq!(
                code.bars_containing(&q(v), &q(v)) as usize,
                f.dim_at(&[v as usize]),
                "at {v}"
            );
        }
        for v in 0..=4u64 {
            for w in v..=4u64 {
                let rank = f.map(&[v as usize], &[w as usize]).unwrap().rank();
                assert_eq!(code.bars_containing(&q(v), &q(w)) as u64, rank as u64, "{v} {w}");
            }
        }
    }
}
