//! Finite multisets of non-negative rationals and their interleaving
//! distance.
//!
//! A multiset is compared through its counting function
//! `F(t) = #{elements <= t}`: two multisets are eps-close when each counting
//! function is dominated by the eps-advanced one of the other,
//! `F(t) <= G(t + eps)` and `G(t) <= F(t + eps)` for all t. The distance is
//! the least feasible eps; it is infinite exactly when the total
//! multiplicities differ.

use std::collections::BTreeMap;

use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RationalMultiset {
    support: BTreeMap<Rational, u64>,
}

impl RationalMultiset {
    pub fn new() -> Self {
        RationalMultiset { support: BTreeMap::new() }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Rational, u64)>) -> Self {
        let mut m = Self::new();
        for (value, mult) in pairs {
            m.insert(value, mult);
        }
        m
    }

    pub fn insert(&mut self, value: Rational, multiplicity: u64) {
        if multiplicity > 0 {
            *self.support.entry(value).or_insert(0) += multiplicity;
        }
    }

    pub fn multiplicity(&self, value: &Rational) -> u64 {
        self.support.get(value).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = (&Rational, &u64)> {
        self.support.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    /// Total multiplicity.
    pub fn rank(&self) -> u64 {
        self.support.values().sum()
    }

    /// Number of elements `<= t`.
    pub fn count_up_to(&self, t: &Rational) -> u64 {
        self.support.range(..=*t).map(|(_, m)| m).sum()
    }

    /// Elements in increasing order, repeated with multiplicity.
    pub fn sorted_elements(&self) -> Vec<Rational> {
        let mut out = Vec::new();
        for (v, &m) in &self.support {
            for _ in 0..m {
                out.push(*v);
            }
        }
        out
    }
}

/// Feasibility of one eps for the interleaving conditions. Both counting
/// functions are right-continuous non-decreasing steps, so it suffices to
/// test at the jump points.
pub fn is_close(f: &RationalMultiset, g: &RationalMultiset, eps: &Rational) -> bool {
    let side = |a: &RationalMultiset, b: &RationalMultiset| {
        a.support.keys().all(|s| a.count_up_to(s) <= b.count_up_to(&(*s + *eps)))
    };
    side(f, g) && side(g, f)
}

/// Candidate values at which feasibility can change: zero together with all
/// absolute differences of support points (zero included on both sides).
pub fn distance_candidates(f: &RationalMultiset, g: &RationalMultiset) -> Vec<Rational> {
    let mut left: Vec<Rational> = f.support.keys().copied().collect();
    left.push(Rational::zero());
    let mut right: Vec<Rational> = g.support.keys().copied().collect();
    right.push(Rational::zero());
    let mut out = vec![Rational::zero()];
    for s in &left {
        for t in &right {
            out.push(s.abs_diff(t));
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Interleaving distance between finite multisets; `None` means infinite.
/// Scans the candidate set in increasing order and returns the first
/// feasible value.
pub fn interleaving_distance(f: &RationalMultiset, g: &RationalMultiset) -> Option<Rational> {
    distance_candidates(f, g).into_iter().find(|eps| is_close(f, g, eps))
}
