//! Text formats for frames, barcodes, graphs and band specifications.
//!
//! Frame format: a header line "r p box_1 .. box_r"; one line "v_1 .. v_r
//! dim" per grid point in lexicographic order; then for each axis, for
//! each grid point with room to step, the row-major entries of the step
//! matrix on one (possibly empty) line. Parsing is token-based, so the
//! exact line layout of the matrix block is not significant.

use crate::barcode::Barcode;
use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::graph::Graph;
use crate::grid::{add_unit, box_points};
use crate::matrix::PrimeFieldMatrix;
use crate::rational::Rational;
use crate::subspace::Subspace;

pub fn write_frame(frame: &Frame) -> String {
    let mut out = String::new();
    let bounds = frame.bounds();
    out.push_str(&format!("{} {}", frame.r(), frame.modulus()));
    for b in bounds {
        out.push_str(&format!(" {b}"));
    }
    out.push('\n');
    for v in frame.points() {
        for c in &v {
            out.push_str(&format!("{c} "));
        }
        out.push_str(&format!("{}\n", frame.dim_at(&v)));
    }
    for axis in 0..frame.r() {
        for v in frame.points() {
            if v[axis] >= bounds[axis] {
                continue;
            }
            let m = frame.step(axis, &v);
            let mut entries = Vec::with_capacity(m.rows() * m.cols());
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    entries.push(m.get(i, j).to_string());
                }
            }
            out.push_str(&entries.join(" "));
            out.push('\n');
        }
    }
    out
}

pub fn parse_frame(text: &str) -> Result<Frame> {
    let mut tokens = text.split_whitespace();
    let mut next_usize = |what: &str| -> Result<usize> {
        tokens
            .next()
            .ok_or_else(|| Error::Parse(format!("frame file ended while reading {what}")))?
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad {what} in frame file")))
    };
    let r = next_usize("parameter count")?;
    let p = next_usize("modulus")? as u64;
    let mut bounds = Vec::with_capacity(r);
    for _ in 0..r {
        bounds.push(next_usize("box bound")?);
    }
    let points = box_points(&bounds);
    let mut dims = Vec::with_capacity(points.len());
    for v in &points {
        for (i, &c) in v.iter().enumerate() {
            let read = next_usize("grid coordinate")?;
            if read != c {
                return Err(Error::Parse(format!(
                    "grid point out of order: coordinate {i} is {read}, expected {c}"
                )));
            }
        }
        dims.push(next_usize("dimension")?);
    }
    let flat = |v: &[usize]| -> usize {
        let mut idx = 0;
        for (i, &c) in v.iter().enumerate() {
            idx = idx * (bounds[i] + 1) + c;
        }
        idx
    };
    let mut maps: Vec<Vec<Option<PrimeFieldMatrix>>> = vec![vec![None; points.len()]; r];
    for (axis, axis_maps) in maps.iter_mut().enumerate() {
        for v in &points {
            if v[axis] >= bounds[axis] {
                continue;
            }
            let rows = dims[flat(&add_unit(v, axis))];
            let cols = dims[flat(v)];
            let mut m = PrimeFieldMatrix::zero(rows, cols, p)?;
            for i in 0..rows {
                for j in 0..cols {
                    m.set(i, j, next_usize("matrix entry")? as u64);
                }
            }
            axis_maps[flat(v)] = Some(m);
        }
    }
    if tokens.next().is_some() {
        return Err(Error::Parse("trailing tokens after frame data".into()));
    }
    Frame::from_parts(r, p, bounds, dims, maps)
}

/// Lines "birth death" for finite bars and "birth inf" for infinite ones.
pub fn write_barcode(code: &Barcode) -> String {
    let mut out = String::new();
    for (&(birth, death), &mult) in &code.finite {
        for _ in 0..mult {
            out.push_str(&format!("{birth} {death}\n"));
        }
    }
    for (&birth, &mult) in &code.infinite {
        for _ in 0..mult {
            out.push_str(&format!("{birth} inf\n"));
        }
    }
    out
}

pub fn parse_barcode(text: &str) -> Result<Barcode> {
    let mut code = Barcode::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let birth: Rational = parts
            .next()
            .ok_or_else(|| Error::Parse(format!("bad bar line {line:?}")))?
            .parse()?;
        let death = parts.next().ok_or_else(|| Error::Parse(format!("bad bar line {line:?}")))?;
        if parts.next().is_some() {
            return Err(Error::Parse(format!("bad bar line {line:?}")));
        }
        if death == "inf" {
            code.add_infinite(birth);
        } else {
            let death: Rational = death.parse()?;
            if birth >= death {
                return Err(Error::Parse(format!("bar {line:?} has non-positive length")));
            }
            code.add_finite(birth, death);
        }
    }
    Ok(code)
}

/// First line "n p", then one edge "s t" per line, 1-based.
pub fn write_graph(graph: &Graph, modulus: u64) -> String {
    let mut out = format!("{} {}\n", graph.vertex_count(), modulus);
    for &(s, t) in graph.edges() {
        out.push_str(&format!("{} {}\n", s + 1, t + 1));
    }
    out
}

pub fn parse_graph(text: &str) -> Result<(Graph, u64)> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty graph file".into()))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse("graph header must be \"n p\"".into()))?;
    let p: u64 = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse("graph header must be \"n p\"".into()))?;
    if parts.next().is_some() {
        return Err(Error::Parse("graph header must be \"n p\"".into()));
    }
    let mut edges = Vec::new();
    for line in lines {
        let mut parts = line.split_whitespace();
        let s: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad edge line {line:?}")))?;
        let t: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad edge line {line:?}")))?;
        if parts.next().is_some() {
            return Err(Error::Parse(format!("bad edge line {line:?}")));
        }
        if s == 0 || t == 0 {
            return Err(Error::Parse("graph vertices are 1-based".into()));
        }
        edges.push((s - 1, t - 1));
    }
    Ok((Graph::new(n, edges)?, p))
}

/// Band spec: header "n p", then n + 1 blocks, each a line "d" followed by
/// d basis rows of n + 1 entries.
pub fn write_band_spec(spec: &crate::band::BandSpec) -> String {
    let mut out = format!("{} {}\n", spec.n, spec.modulus);
    for l in &spec.subspaces {
        out.push_str(&format!("{}\n", l.dim()));
        for i in 0..l.dim() {
            let row: Vec<String> = l.basis().row(i).iter().map(|x| x.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}

pub fn parse_band_spec(text: &str) -> Result<crate::band::BandSpec> {
    let mut tokens = text.split_whitespace();
    let mut next = |what: &str| -> Result<u64> {
        tokens
            .next()
            .ok_or_else(|| Error::Parse(format!("band spec ended while reading {what}")))?
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("bad {what} in band spec")))
    };
    let n = next("band parameter")? as usize;
    let p = next("modulus")?;
    let mut subspaces = Vec::with_capacity(n + 1);
    for _ in 0..=n {
        let d = next("subspace dimension")? as usize;
        let mut rows = Vec::with_capacity(d);
        for _ in 0..d {
            let mut row = Vec::with_capacity(n + 1);
            for _ in 0..=n {
                row.push(next("basis entry")?);
            }
            rows.push(row);
        }
        subspaces.push(Subspace::from_rows(&rows, n + 1, p)?);
    }
    if tokens.next().is_some() {
        return Err(Error::Parse("trailing tokens after band spec".into()));
    }
    crate::band::BandSpec::new(n, p, subspaces)
}
