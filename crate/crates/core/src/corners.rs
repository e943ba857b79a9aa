//! The corner chain p_1, p_2, ... , p_inf of the ratio-point region and the
//! supporting lines L_{p_m p_{m+1}}, with exact closed forms for the infinite
//! family.

use crate::chern::{DegreeTuple, Line, RatioPoint};
use crate::error::{Error, Result};
use crate::rational::{q, qi, qu, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CornerIndex {
    Finite(u32),
    Infinity,
}

impl std::fmt::Display for CornerIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CornerIndex::Finite(m) => write!(f, "p_{m}"),
            CornerIndex::Infinity => write!(f, "p_inf"),
        }
    }
}

/// Index into the supporting-line family: 0 is the upper line L_{p_1 p_inf},
/// m >= 1 is the lower-chain line L_{p_m p_{m+1}}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LineIndex {
    Finite(u32),
    Infinity,
}

impl std::fmt::Display for LineIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LineIndex::Finite(m) => write!(f, "L_{m}"),
            LineIndex::Infinity => write!(f, "L_inf"),
        }
    }
}

/// x-coordinate of the family corner Q(n; 1, ..., 1): 2(n-4)^2 / (n^2 - 5n + 12).
pub fn family_x(n: u32) -> Q {
    let n = qu(n);
    let num = qi(2) * (&n - qi(4)) * (&n - qi(4));
    let den = &n * &n - qi(5) * &n + qi(12);
    num / den
}

/// y-coordinate of the family corner: (n^3 - 3n^2 + 14n - 24) / (3(n-4)(n^2 - 5n + 12)).
pub fn family_y(n: u32) -> Q {
    let n = qu(n);
    let num = &n * &n * &n - qi(3) * &n * &n + qi(14) * &n - qi(24);
    let den = qi(3) * (&n - qi(4)) * (&n * &n - qi(5) * &n + qi(12));
    num / den
}

/// The corner p_m (or the limit p_inf). The first five corners are stored
/// exact pairs; for m >= 6 the family formula applies with n = m.
pub fn corner(i: CornerIndex) -> Result<RatioPoint> {
    match i {
        CornerIndex::Finite(0) => Err(Error::InvalidIndex(0)),
        CornerIndex::Finite(1) => Ok(RatioPoint::new(q(1, 16), q(43, 8))),
        CornerIndex::Finite(2) => Ok(RatioPoint::new(q(1, 10), q(19, 5))),
        CornerIndex::Finite(3) => Ok(RatioPoint::new(q(1, 8), q(13, 4))),
        CornerIndex::Finite(4) => Ok(RatioPoint::new(q(1, 6), q(8, 3))),
        CornerIndex::Finite(5) => Ok(RatioPoint::new(q(1, 3), q(23, 12))),
        CornerIndex::Finite(m) => Ok(RatioPoint::new(family_x(m), family_y(m))),
        CornerIndex::Infinity => Ok(RatioPoint::new(qi(2), q(1, 3))),
    }
}

/// The degree tuple whose ratio point realizes corner p_m.
pub fn corner_witness(i: CornerIndex) -> Result<DegreeTuple> {
    let parts = match i {
        CornerIndex::Finite(0) => return Err(Error::InvalidIndex(0)),
        CornerIndex::Finite(1) => vec![5],
        CornerIndex::Finite(2) => vec![2, 3],
        CornerIndex::Finite(3) => vec![1, 2, 2],
        CornerIndex::Finite(4) => vec![1, 1, 1, 1, 1],
        CornerIndex::Finite(5) => vec![2, 2, 2],
        CornerIndex::Finite(m) => return Ok(DegreeTuple::ones(m)),
        CornerIndex::Infinity => return Err(Error::InvalidIndex(u32::MAX)),
    };
    DegreeTuple::new(parts)
}

/// The smallest budget s1_max whose point cloud contains corner p_m.
pub fn corner_min_s1(i: CornerIndex) -> Result<u32> {
    Ok(match i {
        CornerIndex::Finite(0) => return Err(Error::InvalidIndex(0)),
        CornerIndex::Finite(1..=4) => 5,
        CornerIndex::Finite(5) => 6,
        CornerIndex::Finite(m) => m,
        CornerIndex::Infinity => return Err(Error::InvalidIndex(u32::MAX)),
    })
}

/// Numerator polynomial of the closed-form slope: K(m) = -m^4 + 4m^3 + m^2 - 28m.
pub fn slope_numerator(m: u32) -> Q {
    let m = qu(m);
    -(&m * &m * &m * &m) + qi(4) * &m * &m * &m + &m * &m - qi(28) * &m
}

/// Numerator polynomial of the closed-form intercept (times 3):
/// B(m) = 9m^4 - 50m^3 + 3m^2 + 254m - 120.
pub fn intercept_numerator(m: u32) -> Q {
    let m = qu(m);
    qi(9) * &m * &m * &m * &m - qi(50) * &m * &m * &m + qi(3) * &m * &m + qi(254) * &m - qi(120)
}

/// Shared denominator D(m) = 3m^4 - 26m^3 + 51m^2 + 80m - 240
/// = (m - 4)(m - 3)(3m^2 - 5m - 20), strictly positive for m >= 5.
pub fn line_denominator(m: u32) -> Q {
    let m = qu(m);
    qi(3) * &m * &m * &m * &m - qi(26) * &m * &m * &m + qi(51) * &m * &m + qi(80) * &m - qi(240)
}

/// The supporting line: L_0 = L_{p_1 p_inf} above the region, L_m (m >= 1)
/// = L_{p_m p_{m+1}} below it, and the limit line L_inf.
pub fn edge_line(i: LineIndex) -> Line {
    match i {
        LineIndex::Finite(0) => Line::new(q(-242, 93), q(515, 93)),
        LineIndex::Finite(1) => Line::new(qi(-42), qi(8)),
        LineIndex::Finite(2) => Line::new(qi(-22), qi(6)),
        LineIndex::Finite(3) => Line::new(qi(-14), qi(5)),
        LineIndex::Finite(4) => Line::new(q(-9, 2), q(41, 12)),
        // recomputed from p_5 and p_6; see `discrepancies` in the report module
        LineIndex::Finite(5) => Line::new(q(-13, 4), qi(3)),
        LineIndex::Finite(m) => {
            let d = line_denominator(m);
            Line::new(
                slope_numerator(m) / &d,
                intercept_numerator(m) / (qi(3) * &d),
            )
        }
        LineIndex::Infinity => Line::new(q(-1, 3), qi(1)),
    }
}

/// A printed constant that does not survive recomputation, kept verbatim so
/// reports can show both values side by side.
#[derive(Debug, Clone, serde::Serialize)]
pub struct Discrepancy {
    pub subject: String,
    pub stated: String,
    pub recomputed: String,
    pub note: String,
}

/// The two constants in the source table that recomputation overturns.
/// Coordinates are treated as authoritative; labels and slopes are not.
pub fn discrepancies() -> Vec<Discrepancy> {
    vec![
        Discrepancy {
            subject: "corner p_3 label".into(),
            stated: "Q(3;2,3,3)".into(),
            recomputed: "p_3 = (1/8, 13/4), the ratio point of the degree tuple (1,2,2)".into(),
            note: "the literal tuple (2,3,3) gives (16/25, 32/25); the stated label lists the \
                   hypersurface degrees d_i + 1 = (2,3,3) instead of the parts (1,2,2)"
                .into(),
        },
        Discrepancy {
            subject: "slope k_5".into(),
            stated: "-13/5".into(),
            recomputed: "-13/4".into(),
            note: "the line through p_5 = (1/3, 23/12) and p_6 = (4/9, 14/9) has slope -13/4; \
                   the stated intercept b_5 = 3 is correct"
                .into(),
        },
    ]
}
