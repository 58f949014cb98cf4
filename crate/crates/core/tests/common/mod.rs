//! Shared generators for the integration suites. Everything is seeded so
//! failures reproduce.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stablerank_core::{Contour, Frame, Rational, RationalMultiset, TameModule};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: u64, d: u64) -> Rational {
    Rational::new(n, d).unwrap()
}

/// Random barcode on an integer grid: finite bars (birth, death) with
/// birth < death <= top, plus infinite births.
pub fn random_barcode(
    rng: &mut ChaCha8Rng,
    max_bars: usize,
    top: usize,
) -> (Vec<(usize, usize)>, Vec<usize>) {
    let total = rng.gen_range(1..=max_bars);
    let mut finite = Vec::new();
    let mut infinite = Vec::new();
    for _ in 0..total {
        if rng.gen_bool(0.25) {
            infinite.push(rng.gen_range(0..top));
        } else {
            let birth = rng.gen_range(0..top);
            let death = rng.gen_range(birth + 1..=top);
            finite.push((birth, death));
        }
    }
    (finite, infinite)
}

/// The direct sum of the bars of a barcode, padded so shifts have room.
pub fn barcode_module(
    p: u64,
    finite: &[(usize, usize)],
    infinite: &[usize],
    pad: usize,
) -> TameModule {
    let mut frame = Frame::zero(1, p).unwrap();
    let mut top = 1usize;
    for &(_, d) in finite {
        top = top.max(d);
    }
    for &b in infinite {
        top = top.max(b + 1);
    }
    for &(b, d) in finite {
        frame = frame.direct_sum(&Frame::bar_module(p, &[b], &[d]).unwrap()).unwrap();
    }
    for &b in infinite {
        frame = frame.direct_sum(&Frame::free_module(p, 1, &[(vec![b], 1)]).unwrap()).unwrap();
    }
    let frame = frame.padded_to(&[top + pad]).unwrap();
    TameModule::new(frame, Rational::one()).unwrap()
}

/// Fully arbitrary one-parameter frame: any dims and any matrices form a
/// valid functor when r = 1.
pub fn random_r1_frame(rng: &mut ChaCha8Rng, p: u64, max_dim: usize, top: usize) -> Frame {
    let dims: Vec<usize> = (0..=top).map(|_| rng.gen_range(0..=max_dim)).collect();
    let matrices: Vec<Vec<Vec<u64>>> = (0..top)
        .map(|v| {
            (0..dims[v + 1])
                .map(|_| (0..dims[v]).map(|_| rng.gen_range(0..p)).collect())
                .collect()
        })
        .collect();
    Frame::from_fns(
        1,
        p,
        vec![top],
        |v| dims[v[0]],
        |_, v| {
            stablerank_core::PrimeFieldMatrix::from_rows(&matrices[v[0]], dims[v[0]], p)
        },
    )
    .unwrap()
}

/// Random finitely generated two-parameter module: a random quotient of a
/// random free module, padded so shifts have room.
pub fn random_r2_module(rng: &mut ChaCha8Rng, p: u64, pad: usize) -> TameModule {
    let gen_count = rng.gen_range(1..=3);
    let gens: Vec<(Vec<usize>, usize)> = (0..gen_count)
        .map(|_| (vec![rng.gen_range(0..=2), rng.gen_range(0..=2)], 1))
        .collect();
    let free = Frame::free_module(p, 2, &gens).unwrap().padded_to(&[4, 4]).unwrap();
    let rel_count = rng.gen_range(0..=3);
    let mut relations = Vec::new();
    for _ in 0..rel_count {
        let coord = vec![rng.gen_range(0..=4), rng.gen_range(0..=4)];
        let d = free.dim_at(&coord);
        relations.push((coord, (0..d).map(|_| rng.gen_range(0..p)).collect::<Vec<u64>>()));
    }
    let sub = free.submodule_generated(&relations).unwrap();
    let quotient = free.quotient_by(&sub).unwrap();
    let frame = quotient.padded_to(&[4 + pad, 4 + pad]).unwrap();
    TameModule::new(frame, Rational::one()).unwrap()
}

/// A contour from the implemented family with small rational data.
pub fn random_contour(rng: &mut ChaCha8Rng, r: usize, allow_truncation: bool) -> Contour {
    let options = [q(1, 2), q(1, 1), q(3, 2), q(2, 1)];
    let direction: Vec<Rational> = (0..r)
        .map(|_| {
            if rng.gen_bool(0.1) {
                Rational::zero()
            } else {
                options[rng.gen_range(0..options.len())]
            }
        })
        .collect();
    let contour = Contour::standard(direction);
    if allow_truncation && rng.gen_bool(0.4) {
        let corner: Vec<Rational> =
            (0..r).map(|_| q(rng.gen_range(2..=6), rng.gen_range(1..=2))).collect();
        contour.truncated(corner).unwrap()
    } else {
        contour
    }
}

pub fn random_multiset(rng: &mut ChaCha8Rng, max_elements: usize) -> RationalMultiset {
    let count = rng.gen_range(0..=max_elements);
    RationalMultiset::from_pairs((0..count).map(|_| {
        (q(rng.gen_range(0..=8), rng.gen_range(1..=2)), rng.gen_range(1..=2))
    }))
}
