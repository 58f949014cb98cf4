//! Persistence contours: expanding, subadditively composing actions of a
//! noise magnitude on rational points. The family is closed under
//! truncation of a standard linear contour.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A point of Q^r with a top element adjoined.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ContourPoint {
    Finite(Vec<Rational>),
    Infinity,
}

impl ContourPoint {
    pub fn leq(&self, other: &ContourPoint) -> bool {
        match (self, other) {
            (_, ContourPoint::Infinity) => true,
            (ContourPoint::Infinity, _) => false,
            (ContourPoint::Finite(a), ContourPoint::Finite(b)) => {
                a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x <= y)
            }
        }
    }

    pub fn finite(&self) -> Option<&[Rational]> {
        match self {
            ContourPoint::Finite(v) => Some(v),
            ContourPoint::Infinity => None,
        }
    }
}

impl fmt::Display for ContourPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContourPoint::Infinity => write!(f, "inf"),
            ContourPoint::Finite(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    }
}

/// The contour family: the standard contour `v + eps * w` and truncations
/// that send everything above a corner to infinity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Contour {
    Standard { direction: Vec<Rational> },
    Truncated { inner: Box<Contour>, corner: Vec<Rational> },
}

impl Contour {
    pub fn standard(direction: Vec<Rational>) -> Contour {
        Contour::Standard { direction }
    }

    pub fn truncated(self, corner: Vec<Rational>) -> Result<Contour> {
        if corner.len() != self.r() {
            return Err(Error::ParameterMismatch("truncation corner of wrong arity".into()));
        }
        Ok(Contour::Truncated { inner: Box::new(self), corner })
    }

    pub fn r(&self) -> usize {
        match self {
            Contour::Standard { direction } => direction.len(),
            Contour::Truncated { inner, .. } => inner.r(),
        }
    }

    /// Direction of the innermost standard contour.
    pub fn direction(&self) -> &[Rational] {
        match self {
            Contour::Standard { direction } => direction,
            Contour::Truncated { inner, .. } => inner.direction(),
        }
    }

    /// All truncation corners, innermost first.
    pub fn corners(&self) -> Vec<&[Rational]> {
        match self {
            Contour::Standard { .. } => Vec::new(),
            Contour::Truncated { inner, corner } => {
                let mut out = inner.corners();
                out.push(corner);
                out
            }
        }
    }

    pub fn eval(&self, v: &ContourPoint, eps: &Rational) -> Result<ContourPoint> {
        match self {
            Contour::Standard { direction } => match v {
                ContourPoint::Infinity => Ok(ContourPoint::Infinity),
                ContourPoint::Finite(coords) => {
                    if coords.len() != direction.len() {
                        return Err(Error::ParameterMismatch(
                            "contour applied to a point of wrong arity".into(),
                        ));
                    }
                    Ok(ContourPoint::Finite(
                        coords.iter().zip(direction).map(|(x, w)| *x + *eps * *w).collect(),
                    ))
                }
            },
            Contour::Truncated { inner, corner } => {
                let value = inner.eval(v, eps)?;
                let corner_point = ContourPoint::Finite(corner.clone());
                if corner_point.leq(&value) {
                    Ok(ContourPoint::Infinity)
                } else {
                    Ok(value)
                }
            }
        }
    }

    pub fn eval_finite(&self, v: &[Rational], eps: &Rational) -> Result<ContourPoint> {
        self.eval(&ContourPoint::Finite(v.to_vec()), eps)
    }

    /// Parse "standard w1,..,wr" or "truncate u1,..,ur (inner)".
    pub fn parse(text: &str) -> Result<Contour> {
        let text = text.trim();
        if let Some(rest) = text.strip_prefix("standard") {
            let direction = parse_tuple(rest.trim())?;
            if direction.is_empty() {
                return Err(Error::Parse("standard contour needs a direction".into()));
            }
            return Ok(Contour::standard(direction));
        }
        if let Some(rest) = text.strip_prefix("truncate") {
            let rest = rest.trim();
            let open = rest
                .find('(')
                .ok_or_else(|| Error::Parse("truncate needs a parenthesized inner contour".into()))?;
            if !rest.ends_with(')') {
                return Err(Error::Parse("unbalanced parentheses in contour".into()));
            }
            let corner = parse_tuple(rest[..open].trim())?;
            let inner = Contour::parse(&rest[open + 1..rest.len() - 1])?;
            if corner.len() != inner.r() {
                return Err(Error::Parse("truncation corner arity differs from inner contour".into()));
            }
            return Ok(Contour::Truncated { inner: Box::new(inner), corner });
        }
        Err(Error::Parse(format!("unknown contour spec {text:?}")))
    }
}

fn parse_tuple(text: &str) -> Result<Vec<Rational>> {
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|tok| tok.trim().parse()).collect()
}

impl fmt::Display for Contour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Contour::Standard { direction } => {
                let parts: Vec<String> = direction.iter().map(|x| x.to_string()).collect();
                write!(f, "standard {}", parts.join(","))
            }
            Contour::Truncated { inner, corner } => {
                let parts: Vec<String> = corner.iter().map(|x| x.to_string()).collect();
                write!(f, "truncate {} ({})", parts.join(","), inner)
            }
        }
    }
}

/// Result of checking the contour axioms on a sample.
#[derive(Clone, Debug, Default)]
pub struct AxiomReport {
    pub checks: usize,
    pub violations: Vec<String>,
}

impl AxiomReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check expansion, monotonicity in both arguments and subadditive
/// composition on the given sample triple list.
pub fn verify_contour_axioms(
    contour: &Contour,
    samples: &[(Vec<Rational>, Rational, Rational)],
) -> Result<AxiomReport> {
    let mut report = AxiomReport::default();
    let mut check = |ok: bool, what: String| {
        report.checks += 1;
        if !ok {
            report.violations.push(what);
        }
    };
    for (v, eps, tau) in samples {
        let point = ContourPoint::Finite(v.clone());
        let at_eps = contour.eval(&point, eps)?;
        check(point.leq(&at_eps), format!("expansion fails at v={point} eps={eps}"));
        let larger = contour.eval(&point, &(*eps + *tau))?;
        check(
            at_eps.leq(&larger),
            format!("monotonicity in the magnitude fails at v={point} eps={eps} tau={tau}"),
        );
        let composed = contour.eval(&at_eps, tau)?;
        check(
            composed.leq(&larger),
            format!("subadditive composition fails at v={point} eps={eps} tau={tau}"),
        );
    }
    for (v, eps, _) in samples {
        for (w, delta, _) in samples {
            let vp = ContourPoint::Finite(v.clone());
            let wp = ContourPoint::Finite(w.clone());
            if vp.leq(&wp) && eps <= delta {
                let a = contour.eval(&vp, eps)?;
                let b = contour.eval(&wp, delta)?;
                check(
                    a.leq(&b),
                    format!("monotonicity in the point fails between {vp} and {wp}"),
                );
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: u64, d: u64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn qs(values: &[(u64, u64)]) -> Vec<Rational> {
        values.iter().map(|&(n, d)| q(n, d)).collect()
    }

    #[test]
    fn standard_eval() {
        // S_(1,1)((2,3), 2) = (4,5)
        let c = Contour::standard(qs(&[(1, 1), (1, 1)]));
        let out = c.eval_finite(&qs(&[(2, 1), (3, 1)]), &q(2, 1)).unwrap();
        assert_eq!(out, ContourPoint::Finite(qs(&[(4, 1), (5, 1)])));
        // infinity absorbs
        assert_eq!(c.eval(&ContourPoint::Infinity, &q(2, 1)).unwrap(), ContourPoint::Infinity);
    }

    #[test]
    fn truncation_eval() {
        // (S_(1,1)/(3,3))((2,3), 2) = infinity since (3,3) <= (4,5)
        let c = Contour::standard(qs(&[(1, 1), (1, 1)])).truncated(qs(&[(3, 1), (3, 1)])).unwrap();
        let out = c.eval_finite(&qs(&[(2, 1), (3, 1)]), &q(2, 1)).unwrap();
        assert_eq!(out, ContourPoint::Infinity);
        let small = c.eval_finite(&qs(&[(0, 1), (0, 1)]), &q(1, 2)).unwrap();
        assert_eq!(small, ContourPoint::Finite(qs(&[(1, 2), (1, 2)])));
    }

    #[test]
    fn axioms_hold_on_standard_and_truncated() {
        let samples: Vec<(Vec<Rational>, Rational, Rational)> = vec![
            (qs(&[(0, 1), (0, 1)]), q(1, 2), q(1, 3)),
            (qs(&[(1, 1), (2, 1)]), q(2, 1), q(1, 1)),
            (qs(&[(3, 2), (1, 2)]), q(0, 1), q(3, 1)),
            (qs(&[(2, 1), (2, 1)]), q(1, 1), q(2, 1)),
        ];
        let standard = Contour::standard(qs(&[(1, 1), (1, 2)]));
        let report = verify_contour_axioms(&standard, &samples).unwrap();
        assert!(report.ok(), "{:?}", report.violations);
        // the standard contour composes with equality
        for (v, eps, tau) in &samples {
            let once = standard.eval_finite(v, &(*eps + *tau)).unwrap();
            let stepped = standard.eval(&standard.eval_finite(v, eps).unwrap(), tau).unwrap();
            assert_eq!(once, stepped);
        }
        let truncated = standard.truncated(qs(&[(3, 1), (2, 1)])).unwrap();
        let report = verify_contour_axioms(&truncated, &samples).unwrap();
        assert!(report.ok(), "{:?}", report.violations);
        // zero direction: everything fixed
        let frozen = Contour::standard(qs(&[(0, 1), (0, 1)]));
        let report = verify_contour_axioms(&frozen, &samples).unwrap();
        assert!(report.ok());
        for (v, eps, _) in &samples {
            assert_eq!(
                frozen.eval_finite(v, eps).unwrap(),
                ContourPoint::Finite(v.clone())
            );
        }
    }

    #[test]
    fn parse_round_trip() {
        for text in [
            "standard 1,1",
            "standard 3/2,0,1",
            "truncate 3,3 (standard 1,1)",
            "truncate 2,5/2 (truncate 3,3 (standard 1,1))",
        ] {
            let c = Contour::parse(text).unwrap();
            let printed = c.to_string();
            let back = Contour::parse(&printed).unwrap();
            assert_eq!(c, back);
            assert_eq!(printed, text);
        }
        assert!(Contour::parse("spiral 1,1").is_err());
        assert!(Contour::parse("truncate 1 (standard 1,1)").is_err());
    }
}
