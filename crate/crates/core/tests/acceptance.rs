//! Acceptance suite: one test per criterion, each printing a pass line
//! with its runtime. Run with `cargo test --test acceptance -- --nocapture`
//! to see the per-criterion report.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::*;
use rand::seq::SliceRandom;
use rand::Rng;

use stablerank_core::error::SEARCH_BUDGET;
use stablerank_core::grid::subsets_of_size;
use stablerank_core::koszul::{betti_diagram, betti_number, euler_characteristic};
use stablerank_core::multiset::{distance_candidates, is_close};
use stablerank_core::stepfn::step_interleaving_distance;
use stablerank_core::{
    band_functor, bar_decomposition, fingerprint_r1, graph_to_minrank, hardness_pipeline,
    interleaving_distance, minrank_solve, noise_contains, shift, stable_rank_bruteforce,
    stable_rank_r1, BandSpec, Contour, Frame, Graph, PrimeFieldMatrix, Rational,
    RationalMultiset, Subspace, TameModule,
};

fn report(criterion: usize, what: &str, start: Instant, limit: Duration) {
    let elapsed = start.elapsed();
    println!(
        "criterion {criterion} ({what}): PASS in {:.1} ms (limit {:.0} ms)",
        elapsed.as_secs_f64() * 1e3,
        limit.as_secs_f64() * 1e3
    );
    assert!(
        elapsed < limit,
        "criterion {criterion} exceeded its time limit: {elapsed:?} >= {limit:?}"
    );
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[test]
fn criterion_1_closed_form_betti_suite() {
    let start = Instant::now();
    for r in 1..=3usize {
        for p in [2u64, 3] {
            let w = vec![1usize; r];
            // free module on one generator
            let free = Frame::free_module(p, r, &[(w.clone(), 1)]).unwrap();
            let b0 = betti_diagram(&free, 0).unwrap();
            assert_eq!(b0.entries.len(), 1);
            assert_eq!(b0.entries.get(&w), Some(&1));
            for n in 1..=r {
                assert_eq!(betti_number(&free, n).unwrap(), 0);
            }
            assert_eq!(euler_characteristic(&free).unwrap(), 1, "chi of free, r={r} p={p}");

            // bar [u, w)
            let a = vec![0usize; r];
            let b: Vec<usize> = (0..r).map(|i| 1 + (i == 0) as usize).collect();
            let bar = Frame::bar_module(p, &a, &b).unwrap();
            let b0 = betti_diagram(&bar, 0).unwrap();
            let b1 = betti_diagram(&bar, 1).unwrap();
            assert_eq!(b0.entries, std::collections::BTreeMap::from([(a.clone(), 1)]));
            assert_eq!(b1.entries, std::collections::BTreeMap::from([(b.clone(), 1)]));
            for n in 2..=r {
                assert_eq!(betti_number(&bar, n).unwrap(), 0);
            }
            assert_eq!(euler_characteristic(&bar).unwrap(), 0, "chi of bar, r={r} p={p}");

            // simple module
            let simple = Frame::simple_module(p, &w).unwrap();
            for n in 0..=r {
                let diagram = betti_diagram(&simple, n).unwrap();
                assert_eq!(diagram.rank(), binomial(r, n), "rank_n simple, r={r} p={p} n={n}");
                for s in subsets_of_size(r, n) {
                    let mut v = w.clone();
                    for axis in s {
                        v[axis] += 1;
                    }
                    assert_eq!(diagram.entries.get(&v), Some(&1));
                }
            }
            assert_eq!(euler_characteristic(&simple).unwrap(), 0, "chi of simple, r={r} p={p}");
        }
    }
    report(1, "closed-form Betti suite", start, Duration::from_secs(1));
}

#[test]
fn criterion_2_band_functor_tables() {
    let start = Instant::now();
    // rows are printed top to bottom for b = 3n .. 0, columns a = 0 .. 3n
    let tables: [(usize, &[&[&str]]); 3] = [
        (
            1,
            &[
                &["0", "0", "0", "0"],
                &["K", "K2/L1", "0", "0"],
                &["K", "K2", "K2/L0", "0"],
                &["0", "K", "K", "0"],
            ],
        ),
        (
            2,
            &[
                &["0", "0", "0", "0", "0", "0"],
                &["K", "K2", "K3/L2", "0", "0", "0"],
                &["K", "K2", "K3", "K3/L1", "0", "0"],
                &["K", "K2", "K3", "K3", "K3/L0", "0"],
                &["0", "K", "K2", "K2", "K2", "0"],
                &["0", "0", "K", "K", "K", "0"],
            ],
        ),
        (
            3,
            &[
                &["0", "0", "0", "0", "0", "0", "0", "0"],
                &["K", "K2", "K3", "K4/L3", "0", "0", "0", "0"],
                &["K", "K2", "K3", "K4", "K4/L2", "0", "0", "0"],
                &["K", "K2", "K3", "K4", "K4", "K4/L1", "0", "0"],
                &["K", "K2", "K3", "K4", "K4", "K4", "K4/L0", "0"],
                &["0", "K", "K2", "K3", "K3", "K3", "K3", "0"],
                &["0", "0", "K", "K2", "K2", "K2", "K2", "0"],
                &["0", "0", "0", "K", "K", "K", "K", "0"],
            ],
        ),
    ];
    let mut rng = rng(2024);
    for (n, table) in tables {
        for p in [2u64, 3] {
            // random subspaces of GF(p)^(n+1)
            let subspaces: Vec<Subspace> = (0..=n)
                .map(|_| {
                    let rows: Vec<Vec<u64>> = (0..rng.gen_range(0..=n + 1))
                        .map(|_| (0..=n).map(|_| rng.gen_range(0..p)).collect())
                        .collect();
                    Subspace::from_rows(&rows, n + 1, p).unwrap()
                })
                .collect();
            let band = band_functor(&BandSpec::new(n, p, subspaces.clone()).unwrap()).unwrap();
            // the printed window: rows top to bottom are b = rows-1 .. 0
            let window_rows = table.len();
            let window_cols = table[0].len();
            for (row, cells) in table.iter().enumerate() {
                let b = window_rows - 1 - row;
                for (a, cell) in cells.iter().enumerate() {
                    let expected = match *cell {
                        "0" => 0,
                        "K" => 1,
                        s if !s.contains('/') => s[1..].parse::<usize>().unwrap(),
                        s => {
                            let t: usize = s.split("/L").nth(1).unwrap().parse().unwrap();
                            (n + 1) - subspaces[t].dim()
                        }
                    };
                    assert_eq!(
                        band.frame().dim_at(&[a, b]),
                        expected,
                        "band n={n} p={p} cell ({a},{b})"
                    );
                }
            }
            // everything outside the printed window is zero
            for a in 0..=3 * n {
                for b in 0..=3 * n {
                    if a >= window_cols || b >= window_rows {
                        assert_eq!(band.frame().dim_at(&[a, b]), 0, "band n={n} outside ({a},{b})");
                    }
                }
            }
        }
    }
    report(2, "band-functor tables", start, Duration::from_secs(1));
}

#[test]
fn criterion_3_bar_decomposition_oracle() {
    let start = Instant::now();
    let mut rng = rng(3001);
    for case in 0..200 {
        let top = rng.gen_range(1..=6);
        let frame = random_r1_frame(&mut rng, 2, 4, top);
        let code = bar_decomposition(&frame).unwrap();
        for v in 0..=top {
            for w in v..=top {
                let rank = frame.map(&[v], &[w]).unwrap().rank();
                let alive = code.bars_containing(
                    &Rational::from_integer(v as u64),
                    &Rational::from_integer(w as u64),
                );
                assert_eq!(alive as usize, rank, "case {case}: map {v} -> {w}");
            }
        }
    }
    report(3, "bar-decomposition rank oracle", start, Duration::from_secs(30));
}

/// Independent bar-counting rule for the standard contour of direction one,
/// optionally truncated at u.
fn counting_rule(
    finite: &[(usize, usize)],
    infinite: &[usize],
    tau: &Rational,
    truncation: Option<&Rational>,
) -> u64 {
    let mut count = 0;
    for &(b, d) in finite {
        let birth = Rational::from_integer(b as u64);
        let death = Rational::from_integer(d as u64);
        let survives_length = birth + *tau < death;
        let survives_truncation = match truncation {
            Some(u) => birth + *tau < *u,
            None => true,
        };
        if survives_length && survives_truncation {
            count += 1;
        }
    }
    for &b in infinite {
        let birth = Rational::from_integer(b as u64);
        let survives_truncation = match truncation {
            Some(u) => birth + *tau < *u,
            None => true,
        };
        if survives_truncation {
            count += 1;
        }
    }
    count
}

#[test]
fn criterion_4_r1_stable_rank() {
    let start = Instant::now();
    let mut rng = rng(4242);
    let mut bruteforce_checked = 0usize;
    for case in 0..100 {
        let (finite, infinite) = random_barcode(&mut rng, 5, 8);
        let module = barcode_module(2, &finite, &infinite, 5);
        let truncation = if case % 2 == 0 { Some(q(rng.gen_range(1..=8), 1)) } else { None };
        let contour = match &truncation {
            Some(u) => Contour::standard(vec![Rational::one()]).truncated(vec![*u]).unwrap(),
            None => Contour::standard(vec![Rational::one()]),
        };
        let function = stable_rank_r1(&module, &contour).unwrap();
        // probe at every critical magnitude, at midpoints and past the end
        let mut probes: Vec<Rational> = vec![Rational::zero()];
        let breakpoints = function.step().breakpoints().to_vec();
        for pair in breakpoints.windows(2) {
            probes.push(pair[0]);
            probes.push((pair[0] + pair[1]) / q(2, 1));
        }
        if let Some(last) = breakpoints.last() {
            probes.push(*last);
            probes.push(*last + Rational::one());
        }
        // also probe the raw critical set derived from the bars themselves
        for &(b, d) in &finite {
            probes.push(q((d - b) as u64, 1));
        }
        for tau in &probes {
            let expected = counting_rule(&finite, &infinite, tau, truncation.as_ref());
            assert_eq!(function.eval(tau), expected, "case {case} tau {tau}");
        }
        // cross-check the generic search on the smaller instances
        if bruteforce_checked < 30 && finite.len() + infinite.len() <= 4 {
            bruteforce_checked += 1;
            for tau in [Rational::zero(), Rational::one(), q(2, 1), q(5, 2)] {
                let brute = stable_rank_bruteforce(&module, &contour, &tau, SEARCH_BUDGET).unwrap();
                assert_eq!(brute as u64, function.eval(&tau), "case {case} brute tau {tau}");
            }
        }
    }
    assert_eq!(bruteforce_checked, 30, "not enough small instances for the cross-check");
    report(4, "one-parameter stable rank", start, Duration::from_secs(60));
}

#[test]
fn criterion_5_shift_axioms() {
    let start = Instant::now();
    let mut rng = rng(5555);
    let taus = [Rational::zero(), q(1, 2), Rational::one(), q(2, 1)];
    for case in 0..100 {
        let r = 1 + (case % 2);
        let module = if r == 1 {
            let (finite, infinite) = random_barcode(&mut rng, 3, 4);
            barcode_module(2, &finite, &infinite, 5)
        } else {
            random_r2_module(&mut rng, 2, 5)
        };
        let contour = random_contour(&mut rng, r, true);
        let tau = taus[rng.gen_range(0..taus.len())];
        let result = shift(&module, &contour, &tau).unwrap();

        // (a) the quotient by the shift lies in the noise at tau
        let quotient = result.ambient.frame().quotient_by(&result.sub).unwrap();
        let quotient = TameModule::new(quotient, *result.ambient.alpha()).unwrap();
        assert!(
            noise_contains(&quotient, &contour, &tau).unwrap(),
            "case {case}: quotient escapes the noise (r={r} tau={tau})"
        );

        // (b) the shift needs no more generators than the module
        assert!(
            result.rank0().unwrap() <= module.rank0().unwrap(),
            "case {case}: shift rank grew"
        );

        // (c) shifting commutes with direct sums, pointwise in dimension
        let other = if r == 1 {
            let (finite, infinite) = random_barcode(&mut rng, 3, 4);
            barcode_module(2, &finite, &infinite, 5)
        } else {
            random_r2_module(&mut rng, 2, 5)
        };
        let sum = TameModule::new(
            module.frame().direct_sum(other.frame()).unwrap(),
            Rational::one(),
        )
        .unwrap();
        let sum_shift = shift(&sum, &contour, &tau).unwrap();
        let other_shift = shift(&other, &contour, &tau).unwrap();
        for v in sum_shift.sub.frame.points() {
            assert_eq!(
                sum_shift.sub.frame.dim_at(&v),
                result.sub.frame.dim_at(&v) + other_shift.sub.frame.dim_at(&v),
                "case {case}: additivity fails at {v:?}"
            );
        }
    }
    report(5, "shift axioms", start, Duration::from_secs(120));
}

#[test]
fn criterion_6_lipschitz() {
    let start = Instant::now();
    let mut rng = rng(6060);
    for case in 0..50 {
        let (finite, infinite) = random_barcode(&mut rng, 4, 5);
        let module = barcode_module(2, &finite, &infinite, 6);
        let contour = random_contour(&mut rng, 1, true);
        let eps = [q(1, 2), Rational::one(), q(3, 2), q(2, 1)][rng.gen_range(0..4)];
        let f_module = stable_rank_r1(&module, &contour).unwrap();
        let shifted = shift(&module, &contour, &eps).unwrap().shifted_module().unwrap();
        let f_shifted = stable_rank_r1(&shifted, &contour).unwrap();
        let distance = step_interleaving_distance(f_module.step(), f_shifted.step());
        match distance {
            Some(d) => assert!(
                d <= eps,
                "case {case}: distance {d} exceeds eps {eps} (contour {contour})"
            ),
            None => panic!("case {case}: stabilized ranks infinitely far apart (eps {eps})"),
        }
    }
    report(6, "Lipschitz stability", start, Duration::from_secs(60));
}

/// Exhaustive oracle: minimum rank over every matrix with unit diagonal and
/// zeros on the edges of the graph.
fn exhaustive_family_minrank(graph: &Graph, p: u64) -> usize {
    let n = graph.vertex_count();
    let mut free_positions = Vec::new();
    for s in 0..n {
        for t in 0..n {
            if s != t && !graph.adjacent(s, t) {
                free_positions.push((s, t));
            }
        }
    }
    let total = (p as u128).pow(free_positions.len() as u32);
    let mut best = n;
    for idx in 0..total {
        let mut m = PrimeFieldMatrix::identity(n, p).unwrap();
        let mut rest = idx;
        for &(s, t) in &free_positions {
            m.set(s, t, (rest % p as u128) as u64);
            rest /= p as u128;
        }
        best = best.min(m.rank());
        if best == 1 {
            break;
        }
    }
    best
}

fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|s| (s + 1..n).map(move |t| (s, t))).collect();
    (0..(1u64 << pairs.len()))
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::new(n, edges).unwrap()
        })
        .collect()
}

#[test]
fn criterion_7_hardness_oracle_equivalence() {
    let start = Instant::now();
    let mut rng = rng(7777);
    let mut checked = 0usize;
    for n in 1..=4usize {
        for graph in all_graphs(n) {
            let oracle = exhaustive_family_minrank(&graph, 2);
            let direct =
                minrank_solve(&graph_to_minrank(&graph, 2).unwrap(), SEARCH_BUDGET).unwrap();
            let pipeline = hardness_pipeline(&graph, 2, SEARCH_BUDGET).unwrap();
            assert_eq!(direct, oracle, "direct solver disagrees on n={n}");
            assert_eq!(pipeline.minrank, Some(oracle), "reduced solver disagrees on n={n}");
            assert_eq!(pipeline.stable_rank, Some(oracle), "band search disagrees on n={n}");
            assert_eq!(pipeline.agree, Some(true));
            checked += 1;
        }
    }
    assert_eq!(checked, 1 + 2 + 8 + 64);
    // analytic anchors
    for n in 2..=4 {
        let complete = hardness_pipeline(&Graph::complete(n), 2, SEARCH_BUDGET).unwrap();
        assert_eq!(complete.stable_rank, Some(n));
        let empty = hardness_pipeline(&Graph::empty(n), 2, SEARCH_BUDGET).unwrap();
        assert_eq!(empty.stable_rank, Some(1));
    }
    // ten random graphs on five vertices
    for case in 0..10 {
        let mut edges = Vec::new();
        for s in 0..5usize {
            for t in s + 1..5 {
                if rng.gen_bool(0.5) {
                    edges.push((s, t));
                }
            }
        }
        let graph = Graph::new(5, edges).unwrap();
        let oracle = exhaustive_family_minrank(&graph, 2);
        let pipeline = hardness_pipeline(&graph, 2, SEARCH_BUDGET).unwrap();
        assert_eq!(pipeline.minrank, Some(oracle), "n=5 case {case}");
        assert_eq!(pipeline.stable_rank, Some(oracle), "n=5 case {case}");
    }
    report(7, "hardness oracle equivalence", start, Duration::from_secs(600));
}

#[test]
fn criterion_7b_runtime_growth_trace() {
    // growth trace for the headline hardness claim: the generic search must
    // finish within budget up to n = 4 and slow down super-linearly beyond
    let start = Instant::now();
    let mut rng = rng(7007);
    let mut medians = Vec::new();
    for n in [2usize, 3, 4, 5] {
        let m = n - 1;
        let contour = Contour::standard(vec![Rational::one(), Rational::one()]);
        let tau = Rational::from_integer(m as u64);
        let mut times = Vec::new();
        for _ in 0..5 {
            let mut edges = Vec::new();
            for s in 0..n {
                for t in s + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((s, t));
                    }
                }
            }
            let graph = Graph::new(n, edges).unwrap();
            let instance = graph_to_minrank(&graph, 2).unwrap();
            let band = band_functor(&BandSpec::new(m, 2, instance.subspaces).unwrap()).unwrap();
            let clock = Instant::now();
            let outcome = stable_rank_bruteforce(&band, &contour, &tau, SEARCH_BUDGET);
            let micros = clock.elapsed().as_micros();
            assert!(
                n > 4 || outcome.is_ok(),
                "solver must complete within budget for n <= 4"
            );
            times.push(micros);
        }
        times.sort();
        medians.push((n, times[times.len() / 2]));
        println!("growth trace: n={n} median brute time {} us", times[times.len() / 2]);
    }
    for pair in medians.windows(2) {
        assert!(
            pair[1].1 >= pair[0].1,
            "median brute-force time decreased from n={} to n={}",
            pair[0].0,
            pair[1].0
        );
    }
    // super-linear signal at the top end
    let n3 = medians.iter().find(|(n, _)| *n == 3).unwrap().1.max(1);
    let n5 = medians.iter().find(|(n, _)| *n == 5).unwrap().1;
    assert!(
        n5 >= 4 * n3,
        "expected super-linear growth: median at n=5 is {n5} us vs {n3} us at n=3"
    );
    report(7, "runtime growth trace", start, Duration::from_secs(600));
}

#[test]
fn criterion_8_fingerprint_completeness() {
    let start = Instant::now();
    let mut rng = rng(8888);
    let one = Rational::one();
    for case in 0..50 {
        let (finite_a, infinite_a) = random_barcode(&mut rng, 4, 6);
        let module_a = barcode_module(2, &finite_a, &infinite_a, 3);
        // a genuinely different multiset of bars
        let (finite_b, infinite_b) = loop {
            let candidate = random_barcode(&mut rng, 4, 6);
            let mut a: Vec<_> = finite_a.clone();
            a.sort();
            let mut b: Vec<_> = candidate.0.clone();
            b.sort();
            let mut ia = infinite_a.clone();
            ia.sort();
            let mut ib = candidate.1.clone();
            ib.sort();
            if a != b || ia != ib {
                break candidate;
            }
        };
        let module_b = barcode_module(2, &finite_b, &infinite_b, 3);

        // critical grid: magnitudes from the lengths, onsets from the births
        let mut lengths: BTreeSet<Rational> = finite_a
            .iter()
            .chain(&finite_b)
            .map(|&(b, d)| q((d - b) as u64, 1))
            .collect();
        lengths.insert(q(7, 1));
        let mut taus: Vec<Rational> = vec![Rational::zero()];
        let sorted_lengths: Vec<Rational> = lengths.iter().copied().collect();
        for (i, l) in sorted_lengths.iter().enumerate() {
            taus.push(*l);
            let below = if i == 0 { Rational::zero() } else { sorted_lengths[i - 1] };
            taus.push((below + *l) / q(2, 1));
        }
        let mut births: BTreeSet<Rational> = finite_a
            .iter()
            .map(|&(b, _)| q(b as u64, 1))
            .chain(finite_b.iter().map(|&(b, _)| q(b as u64, 1)))
            .chain(infinite_a.iter().map(|&b| q(b as u64, 1)))
            .chain(infinite_b.iter().map(|&b| q(b as u64, 1)))
            .collect();
        births.insert(q(7, 1));
        let sorted_births: Vec<Rational> = births.iter().copied().collect();
        let mut onsets: Vec<Rational> = sorted_births.clone();
        for pair in sorted_births.windows(2) {
            onsets.push((pair[0] + pair[1]) / q(2, 1));
        }
        let grid: Vec<(Rational, Rational)> = taus
            .iter()
            .flat_map(|tau| onsets.iter().map(move |a| (*tau, *a + *tau)))
            .collect();

        let table_a = fingerprint_r1(&module_a, &one, &grid).unwrap();
        let table_b = fingerprint_r1(&module_b, &one, &grid).unwrap();
        assert_ne!(
            table_a, table_b,
            "case {case}: distinct barcodes share a fingerprint table"
        );

        // an isomorphic copy, assembled in shuffled order, agrees everywhere
        let mut shuffled: Vec<(usize, usize)> = finite_a.clone();
        shuffled.shuffle(&mut rng);
        let mut shuffled_inf = infinite_a.clone();
        shuffled_inf.shuffle(&mut rng);
        let module_c = barcode_module(2, &shuffled, &shuffled_inf, 3);
        let table_c = fingerprint_r1(&module_c, &one, &grid).unwrap();
        assert_eq!(table_a, table_c, "case {case}: shuffled copy disagrees");
    }
    report(8, "fingerprint completeness", start, Duration::from_secs(30));
}

/// Independent feasibility checker: counting functions compared directly at
/// every support point.
fn close_oracle(f: &RationalMultiset, g: &RationalMultiset, eps: &Rational) -> bool {
    let count = |m: &RationalMultiset, t: &Rational| -> u64 {
        m.support().filter(|(v, _)| *v <= t).map(|(_, c)| *c).sum()
    };
    let mut probes: Vec<Rational> = vec![Rational::zero()];
    probes.extend(f.support().map(|(v, _)| *v));
    probes.extend(g.support().map(|(v, _)| *v));
    probes.iter().all(|t| {
        count(f, t) <= count(g, &(*t + *eps)) && count(g, t) <= count(f, &(*t + *eps))
    })
}

#[test]
fn criterion_9_interleaving_metric_suite() {
    let start = Instant::now();
    let mut rng = rng(9999);
    for case in 0..100 {
        let f = random_multiset(&mut rng, 4);
        let g = random_multiset(&mut rng, 4);
        let h = random_multiset(&mut rng, 4);
        // reflexivity and symmetry
        assert_eq!(interleaving_distance(&f, &f), Some(Rational::zero()));
        assert_eq!(interleaving_distance(&f, &g), interleaving_distance(&g, &f));
        // triangle inequality with infinity absorbing
        let d_fg = interleaving_distance(&f, &g);
        let d_gh = interleaving_distance(&g, &h);
        let d_fh = interleaving_distance(&f, &h);
        if let (Some(a), Some(b)) = (d_fg, d_gh) {
            match d_fh {
                Some(c) => assert!(c <= a + b, "case {case}: triangle fails: {c} > {a} + {b}"),
                None => panic!("case {case}: finite legs but infinite direct distance"),
            }
        }
        // the returned infimum is feasible and minimal among candidates,
        // verified with the independent checker
        if let Some(d) = d_fg {
            assert!(close_oracle(&f, &g, &d), "case {case}: returned distance infeasible");
            assert!(is_close(&f, &g, &d));
            for eps in distance_candidates(&f, &g) {
                if eps < d {
                    assert!(
                        !close_oracle(&f, &g, &eps),
                        "case {case}: smaller candidate {eps} is feasible"
                    );
                }
            }
        } else {
            for eps in distance_candidates(&f, &g) {
                assert!(!close_oracle(&f, &g, &eps), "case {case}: miss at {eps}");
            }
        }
    }
    report(9, "interleaving-distance metric suite", start, Duration::from_secs(10));
}
