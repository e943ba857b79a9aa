//! Degree tuples, power sums, and the closed-form Chern numbers of a smooth
//! complete intersection threefold with ample canonical class.
//!
//! A tuple (d_1, ..., d_n) with d_i >= 1 encodes the threefold cut out by n
//! hypersurfaces of degrees d_i + 1 in P^{n+3}. In that normalization the
//! intersection-degree factor drops out of every ratio and sign statement, so
//! the Chern numbers below are polynomials in the power sums s_j = sum d_i^j.

use crate::error::{Error, Result};
use crate::rational::{fmt_q, qi, qu, Q};
use num::{One, Signed, Zero};

/// Canonical multiset of degrees: nondecreasing, every part >= 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeTuple {
    parts: Vec<u32>,
}

impl DegreeTuple {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() || parts.iter().any(|&d| d < 1) {
            return Err(Error::InvalidTuple);
        }
        parts.sort_unstable();
        Ok(DegreeTuple { parts })
    }

    pub fn ones(n: u32) -> Self {
        DegreeTuple {
            parts: vec![1; n as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Codimension: the number of parts.
    pub fn n(&self) -> u32 {
        self.parts.len() as u32
    }

    /// s1 = sum of the parts.
    pub fn s1(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The canonical class is ample iff s1 >= 5.
    pub fn is_ample(&self) -> bool {
        self.s1() >= 5
    }

    pub fn power_sums(&self) -> PowerSums {
        let mut s = [Q::zero(), Q::zero(), Q::zero()];
        for &d in &self.parts {
            let d1 = qu(d);
            let d2 = &d1 * &d1;
            s[0] += &d1;
            s[1] += &d2;
            s[2] += d2 * &d1;
        }
        let [s1, s2, s3] = s;
        PowerSums { s1, s2, s3 }
    }

    /// Compact display form: "1,2,2".
    pub fn label(&self) -> String {
        self.parts
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl std::fmt::Display for DegreeTuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.label())
    }
}

/// Power sums s_j = sum d_i^j for j = 1, 2, 3. Rational-valued so that
/// equal-degree instances with fractional d fit the same interface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSums {
    pub s1: Q,
    pub s2: Q,
    pub s3: Q,
}

impl PowerSums {
    /// Power sums of the equal-degree instance (n parts all equal to d):
    /// s_j = n * d^j.
    pub fn equal(n: u32, d: &Q) -> Self {
        let nq = qu(n);
        PowerSums {
            s1: &nq * d,
            s2: &nq * d * d,
            s3: &nq * d * d * d,
        }
    }
}

/// Exact ratio point (x, y) = (c1^3/(c1 c2), c3/(c1 c2)).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatioPoint {
    pub x: Q,
    pub y: Q,
}

impl RatioPoint {
    pub fn new(x: Q, y: Q) -> Self {
        RatioPoint { x, y }
    }
}

impl std::fmt::Display for RatioPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", fmt_q(&self.x), fmt_q(&self.y))
    }
}

/// The normalized Chern numbers and the induced ratio point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernData {
    pub c1: Q,
    pub c2: Q,
    pub c3: Q,
    pub c1_cubed: Q,
    pub c1c2: Q,
    pub x: Q,
    pub y: Q,
}

impl ChernData {
    pub fn point(&self) -> RatioPoint {
        RatioPoint {
            x: self.x.clone(),
            y: self.y.clone(),
        }
    }
}

/// c1 = 4 - s1,
/// c2 = (s1^2 + s2)/2 - 3(s1 - 2),
/// c3 = -(s1^3 + 3 s1 s2 + 2 s3)/6 + (s1^2 + s2) - 3 s1 + 4.
pub fn chern_numbers(s: &PowerSums) -> Result<ChernData> {
    let PowerSums { s1, s2, s3 } = s;
    let c1 = qi(4) - s1;
    let c2 = (s1 * s1 + s2) / qi(2) - qi(3) * (s1 - qi(2));
    let c3 = -(s1 * s1 * s1 + qi(3) * s1 * s2 + qi(2) * s3) / qi(6) + (s1 * s1 + s2) - qi(3) * s1
        + qi(4);
    let c1_cubed = &c1 * &c1 * &c1;
    let c1c2 = &c1 * &c2;
    if c1c2.is_zero() {
        return Err(Error::DivisionByZero("ratio point (c1c2 = 0)"));
    }
    let x = &c1_cubed / &c1c2;
    let y = &c3 / &c1c2;
    Ok(ChernData {
        c1,
        c2,
        c3,
        c1_cubed,
        c1c2,
        x,
        y,
    })
}

pub fn chern_of_tuple(t: &DegreeTuple) -> Result<ChernData> {
    chern_numbers(&t.power_sums())
}

/// Equal-degree instance: n parts all equal to the rational d >= 1.
pub fn chern_numbers_equal(n: u32, d: &Q) -> Result<ChernData> {
    chern_numbers(&PowerSums::equal(n, d))
}

/// Exact slope/intercept pair y = k x + b.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line {
    pub k: Q,
    pub b: Q,
}

impl Line {
    pub fn new(k: Q, b: Q) -> Self {
        Line { k, b }
    }

    /// The line through two points with distinct x-coordinates.
    pub fn through(p: &RatioPoint, r: &RatioPoint) -> Result<Self> {
        if p.x == r.x {
            return Err(Error::DivisionByZero("slope of a vertical line"));
        }
        let k = (&r.y - &p.y) / (&r.x - &p.x);
        let b = &p.y - &k * &p.x;
        Ok(Line { k, b })
    }

    pub fn eval(&self, x: &Q) -> Q {
        &self.k * x + &self.b
    }
}

impl std::fmt::Display for Line {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "y = {} x + {}", fmt_q(&self.k), fmt_q(&self.b))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Above,
    On,
    Below,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Side::Above => "Above",
            Side::On => "On",
            Side::Below => "Below",
        };
        write!(f, "{s}")
    }
}

/// Exact trichotomy of y versus k x + b.
pub fn side_of_line(p: &RatioPoint, line: &Line) -> Side {
    let diff = &p.y - line.eval(&p.x);
    if diff.is_zero() {
        Side::On
    } else if diff.is_positive() {
        Side::Above
    } else {
        Side::Below
    }
}

/// Yau-type sanity invariant for ample canonical class: 3 c1^3 - 8 c1c2 >= 0.
pub fn yau_holds(c: &ChernData) -> bool {
    let lhs = qi(3) * &c.c1_cubed - qi(8) * &c.c1c2;
    !lhs.is_negative()
}

/// Canonical-form check used by the property suite: denominator positive and
/// coprime to the numerator.
pub fn is_canonical(v: &Q) -> bool {
    use num::Integer;
    v.denom().is_positive()
        && (v.numer().is_zero() && v.denom().is_one() || v.numer().gcd(v.denom()).is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::parse_q;
    use crate::rational::q;

    fn t(parts: &[u32]) -> DegreeTuple {
        DegreeTuple::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn power_sums_examples() {
        let p = t(&[5]).power_sums();
        assert_eq!((p.s1, p.s2, p.s3), (qi(5), qi(25), qi(125)));
        let p = t(&[2, 3]).power_sums();
        assert_eq!((p.s1, p.s2, p.s3), (qi(5), qi(13), qi(35)));
        let p = t(&[1, 1, 1, 1, 1]).power_sums();
        assert_eq!((p.s1, p.s2, p.s3), (qi(5), qi(5), qi(5)));
    }

    #[test]
    fn tuple_validation_and_canonical_order() {
        assert!(DegreeTuple::new(vec![]).is_err());
        assert!(DegreeTuple::new(vec![1, 0, 2]).is_err());
        assert_eq!(t(&[3, 1, 2]).parts(), &[1, 2, 3]);
        assert!(t(&[1, 4]).is_ample());
        assert!(!t(&[1, 3]).is_ample());
    }

    #[test]
    fn chern_numbers_at_the_quintic_part() {
        let c = chern_of_tuple(&t(&[5])).unwrap();
        assert_eq!(c.c1, qi(-1));
        assert_eq!(c.c2, qi(16));
        assert_eq!(c.c3, qi(-86));
        assert_eq!(c.x, q(1, 16));
        assert_eq!(c.y, q(43, 8));
    }

    #[test]
    fn chern_numbers_more_corners() {
        let c = chern_of_tuple(&t(&[2, 3])).unwrap();
        assert_eq!((c.x, c.y), (q(1, 10), q(19, 5)));

        let c = chern_of_tuple(&t(&[2, 2, 2])).unwrap();
        assert_eq!(c.c1, qi(-2));
        assert_eq!(c.c2, qi(12));
        assert_eq!(c.c3, qi(-46));
        assert_eq!((c.x, c.y), (q(1, 3), q(23, 12)));

        let c = chern_of_tuple(&t(&[1, 2, 2])).unwrap();
        assert_eq!(c.c3, qi(-26));
        assert_eq!((c.x, c.y), (q(1, 8), q(13, 4)));

        let c = chern_of_tuple(&t(&[1, 4])).unwrap();
        assert_eq!((c.x, c.y), (q(1, 12), q(9, 2)));
    }

    #[test]
    fn equal_degree_consistency() {
        let a = chern_numbers_equal(1, &qi(5)).unwrap();
        let b = chern_of_tuple(&t(&[5])).unwrap();
        assert_eq!(a, b);

        let c = chern_numbers_equal(5, &qi(1)).unwrap();
        assert_eq!((c.x, c.y), (q(1, 6), q(8, 3)));

        let s = PowerSums::equal(2, &q(5, 2));
        assert_eq!((s.s1, s.s2, s.s3), (qi(5), q(25, 2), q(125, 4)));
    }

    #[test]
    fn ample_sign_pattern() {
        for parts in [
            vec![5],
            vec![1, 4],
            vec![2, 3],
            vec![1, 1, 3],
            vec![2, 2, 2],
        ] {
            let c = chern_of_tuple(&t(&parts)).unwrap();
            assert!(c.c1.is_negative());
            assert!(c.c2.is_positive());
            assert!(c.c1c2.is_negative());
            assert!(c.c3.is_negative());
            assert!(yau_holds(&c));
        }
    }

    #[test]
    fn side_of_line_trichotomy() {
        let l = Line::new(qi(-42), qi(8));
        assert_eq!(
            side_of_line(&RatioPoint::new(q(1, 16), q(43, 8)), &l),
            Side::On
        );
        assert_eq!(
            side_of_line(&RatioPoint::new(q(1, 6), q(8, 3)), &l),
            Side::Above
        );
        assert_eq!(
            side_of_line(&RatioPoint::new(q(1, 16), qi(5)), &l),
            Side::Below
        );
    }

    #[test]
    fn line_through_two_points() {
        let l = Line::through(
            &RatioPoint::new(q(1, 3), q(23, 12)),
            &RatioPoint::new(q(4, 9), q(14, 9)),
        )
        .unwrap();
        assert_eq!(l.k, q(-13, 4));
        assert_eq!(l.b, qi(3));
    }

    #[test]
    fn canonicality() {
        for s in ["-242/93", "4/8", "0", "515/93"] {
            assert!(is_canonical(&parse_q(s).unwrap()));
        }
    }
}
