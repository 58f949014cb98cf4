//! Points of the r-dimensional natural-number grid.

/// A point of N^r. `Ord` is the lexicographic order used for deterministic
/// iteration and map keys; the poset order of the grid is [`GridPoint::leq`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GridPoint(pub Vec<usize>);

impl GridPoint {
    pub fn origin(r: usize) -> Self {
        GridPoint(vec![0; r])
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[usize] {
        &self.0
    }

    /// Coordinatewise comparison in the grid poset.
    pub fn leq(&self, other: &GridPoint) -> bool {
        leq(&self.0, &other.0)
    }
}

pub fn leq(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn clamp(v: &[usize], bounds: &[usize]) -> Vec<usize> {
    v.iter().zip(bounds).map(|(&x, &b)| x.min(b)).collect()
}

pub fn join(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

pub fn meet(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().zip(b).map(|(&x, &y)| x.min(y)).collect()
}

pub fn add_unit(v: &[usize], axis: usize) -> Vec<usize> {
    let mut w = v.to_vec();
    w[axis] += 1;
    w
}

/// v - e_S, or `None` when a coordinate would become negative.
pub fn sub_subset(v: &[usize], subset: &[usize]) -> Option<Vec<usize>> {
    let mut w = v.to_vec();
    for &axis in subset {
        if w[axis] == 0 {
            return None;
        }
        w[axis] -= 1;
    }
    Some(w)
}

/// All points `0 <= v <= bound` in lexicographic order.
pub fn box_points(bound: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0usize; bound.len()];
    loop {
        out.push(current.clone());
        // odometer, last coordinate fastest
        let mut k = bound.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if current[k] < bound[k] {
                current[k] += 1;
                break;
            }
            current[k] = 0;
        }
    }
}

/// Subsets of {0, .., r-1} of the given size, each sorted, in lexicographic
/// order of their sorted element lists.
pub fn subsets_of_size(r: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..size).collect();
    if size > r {
        return out;
    }
    if size == 0 {
        out.push(Vec::new());
        return out;
    }
    loop {
        out.push(current.clone());
        // next combination
        let mut i = size;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] < r - (size - i) {
                current[i] += 1;
                for k in i + 1..size {
                    current[k] = current[k - 1] + 1;
                }
                break;
            }
        }
    }
}
