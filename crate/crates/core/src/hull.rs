//! Exact 2-D convex hull (monotone chain over rational points) and the
//! comparison of its lower chain against the theoretical corner list.

use crate::chern::{side_of_line, DegreeTuple, Line, RatioPoint, Side};
use crate::corners::{corner, corner_min_s1, corner_witness, CornerIndex};
use crate::enumeration::PointCloud;
use crate::error::{Error, Result};
use crate::rational::Q;
use num::{Signed, Zero};

/// Exact hull: `vertices` is the full cycle counterclockwise; the two chains
/// keep both of their shared endpoints (leftmost and rightmost point).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hull {
    pub vertices: Vec<RatioPoint>,
    pub lower_chain: Vec<RatioPoint>,
    pub upper_chain: Vec<RatioPoint>,
}

/// Sign of the cross product (a - o) x (b - o): positive for a left turn.
fn cross(o: &RatioPoint, a: &RatioPoint, b: &RatioPoint) -> Q {
    (&a.x - &o.x) * (&b.y - &o.y) - (&a.y - &o.y) * (&b.x - &o.x)
}

/// Monotone chain with exact orientation tests. Duplicates are removed;
/// collinear boundary points never appear as vertices.
pub fn convex_hull(points: &[RatioPoint]) -> Hull {
    let mut pts: Vec<RatioPoint> = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() <= 2 {
        return Hull {
            vertices: pts.clone(),
            lower_chain: pts.clone(),
            upper_chain: pts.into_iter().rev().collect(),
        };
    }
    let chain = |iter: &mut dyn Iterator<Item = &RatioPoint>| {
        let mut h: Vec<RatioPoint> = Vec::new();
        for p in iter {
            while h.len() >= 2 && !cross(&h[h.len() - 2], &h[h.len() - 1], p).is_positive() {
                h.pop();
            }
            h.push(p.clone());
        }
        h
    };
    let lower = chain(&mut pts.iter());
    let upper = chain(&mut pts.iter().rev());
    let mut vertices = lower[..lower.len() - 1].to_vec();
    vertices.extend_from_slice(&upper[..upper.len() - 1]);
    Hull {
        vertices,
        lower_chain: lower,
        upper_chain: upper,
    }
}

impl Hull {
    /// Every input point must be inside or on the boundary: no directed hull
    /// edge may see a point strictly to its right. Each point is bracketed by
    /// x-coordinate in both monotone chains, so the cost is one orientation
    /// test per chain instead of one per edge.
    pub fn contains_all(&self, points: &[RatioPoint]) -> bool {
        if self.vertices.len() < 3 {
            return true;
        }
        let mut upper = self.upper_chain.clone();
        upper.reverse();
        points.iter().all(|p| {
            weakly_sided(&self.lower_chain, p, std::cmp::Ordering::Greater)
                && weakly_sided(&upper, p, std::cmp::Ordering::Less)
        })
    }
}

/// For an x-ascending chain: p is inside the x-range and the orientation of
/// its bracketing segment towards p is `good` or collinear.
fn weakly_sided(chain: &[RatioPoint], p: &RatioPoint, good: std::cmp::Ordering) -> bool {
    let last = chain.len() - 1;
    if p.x < chain[0].x || p.x > chain[last].x {
        return false;
    }
    let idx = chain.partition_point(|v| v.x <= p.x).min(last);
    let s = cross_sign(&chain[idx - 1], &chain[idx], p);
    s == good || s == std::cmp::Ordering::Equal
}

fn cross_sign(o: &RatioPoint, a: &RatioPoint, b: &RatioPoint) -> std::cmp::Ordering {
    cross_sign_i128(o, a, b).unwrap_or_else(|| {
        let c = cross(o, a, b);
        if c.is_zero() {
            std::cmp::Ordering::Equal
        } else if c.is_positive() {
            std::cmp::Ordering::Greater
        } else {
            std::cmp::Ordering::Less
        }
    })
}

/// Exact orientation in fixed-width integers; overflow (checked throughout)
/// bails out to the arbitrary-precision cross product.
fn cross_sign_i128(o: &RatioPoint, a: &RatioPoint, b: &RatioPoint) -> Option<std::cmp::Ordering> {
    use num::ToPrimitive;
    let pair = |v: &Q| -> Option<(i128, i128)> {
        let n = v.numer().to_i128()?;
        let d = v.denom().to_i128()?;
        (d > 0).then_some((n, d))
    };
    // reduced difference v - w as a fraction with positive denominator
    let diff = |v: &Q, w: &Q| -> Option<(i128, i128)> {
        let (vn, vd) = pair(v)?;
        let (wn, wd) = pair(w)?;
        let n = vn.checked_mul(wd)?.checked_sub(wn.checked_mul(vd)?)?;
        let d = vd.checked_mul(wd)?;
        let g = num::integer::gcd(n, d);
        Some(if g > 1 { (n / g, d / g) } else { (n, d) })
    };
    let (un, ud) = diff(&a.x, &o.x)?;
    let (vn, vd) = diff(&b.y, &o.y)?;
    let (sn, sd) = diff(&a.y, &o.y)?;
    let (tn, td) = diff(&b.x, &o.x)?;
    // sign of (u v - s t) with all denominators positive
    let lhs = un.checked_mul(vn)?.checked_mul(sd.checked_mul(td)?)?;
    let rhs = sn.checked_mul(tn)?.checked_mul(ud.checked_mul(vd)?)?;
    Some(lhs.cmp(&rhs))
}

/// Lower-chain comparison against the corners p_1..p_{m_max}.
#[derive(Debug, Clone)]
pub struct CornerReport {
    /// Corners found among the hull vertices, with realizing tuples.
    pub matched: Vec<(CornerIndex, DegreeTuple)>,
    /// Lower-chain vertices that are not theoretical corners (must be empty).
    pub extra_vertices: Vec<RatioPoint>,
    /// Corners within reach of the budget that the hull lacks.
    pub missing: Vec<CornerIndex>,
    /// Upper-chain vertices other than matched corners, strictly below the
    /// upper supporting line: artifacts of the finite budget, not failures.
    pub truncation_artifacts: Vec<RatioPoint>,
}

impl CornerReport {
    pub fn clean(&self) -> bool {
        self.extra_vertices.is_empty() && self.missing.is_empty()
    }
}

pub fn corner_report(h: &Hull, cloud: &PointCloud, m_max: u32) -> Result<CornerReport> {
    if cloud.s1_max < m_max {
        return Err(Error::BudgetMismatch {
            s1_max: cloud.s1_max,
            m_max,
        });
    }
    let mut corner_points = Vec::new();
    for m in 1..=m_max {
        let i = CornerIndex::Finite(m);
        if corner_min_s1(i)? <= cloud.s1_max {
            corner_points.push((i, corner(i)?));
        }
    }
    let mut matched = Vec::new();
    let mut missing = Vec::new();
    for (i, p) in &corner_points {
        if h.vertices.contains(p) {
            matched.push((*i, corner_witness(*i)?));
        } else {
            missing.push(*i);
        }
    }
    let is_corner = |p: &RatioPoint| corner_points.iter().any(|(_, c)| c == p);
    let extra_vertices = h
        .lower_chain
        .iter()
        .filter(|p| !is_corner(p))
        .cloned()
        .collect();
    let upper_line = crate::corners::edge_line(crate::corners::LineIndex::Finite(0));
    let truncation_artifacts = h
        .upper_chain
        .iter()
        .filter(|p| !is_corner(p) && side_of_line(p, &upper_line) == Side::Below)
        .cloned()
        .collect();
    Ok(CornerReport {
        matched,
        extra_vertices,
        missing,
        truncation_artifacts,
    })
}

/// Exact one-sided check of a whole cloud against a line, collecting the
/// tuples that land exactly on it.
#[derive(Debug, Clone)]
pub struct HalfplaneReport {
    pub ok: bool,
    pub on_line: Vec<DegreeTuple>,
    pub violations: Vec<(DegreeTuple, RatioPoint)>,
}

pub fn halfplane_check(cloud: &PointCloud, line: &Line, required: Side) -> HalfplaneReport {
    let fast = line_as_i128(line);
    let mut on_line = Vec::new();
    let mut violations = Vec::new();
    for (t, c) in &cloud.entries {
        let side = fast
            .and_then(|l| side_fast(&c.x, &c.y, l))
            .unwrap_or_else(|| side_of_line(&c.point(), line));
        match side {
            Side::On => on_line.push(t.clone()),
            s if s == required => {}
            _ => violations.push((t.clone(), c.point())),
        }
    }
    HalfplaneReport {
        ok: violations.is_empty(),
        on_line,
        violations,
    }
}

fn line_as_i128(line: &Line) -> Option<(i128, i128, i128, i128)> {
    use num::ToPrimitive;
    let l = (
        line.k.numer().to_i128()?,
        line.k.denom().to_i128()?,
        line.b.numer().to_i128()?,
        line.b.denom().to_i128()?,
    );
    (l.1 > 0 && l.3 > 0).then_some(l)
}

/// Exact side test in fixed-width integers; any overflow or an unexpected
/// denominator sign bails out to the arbitrary-precision path.
fn side_fast(x: &Q, y: &Q, (kn, kd, bn, bd): (i128, i128, i128, i128)) -> Option<Side> {
    use num::ToPrimitive;
    let (xn, xd) = (x.numer().to_i128()?, x.denom().to_i128()?);
    let (yn, yd) = (y.numer().to_i128()?, y.denom().to_i128()?);
    if xd <= 0 || yd <= 0 {
        return None;
    }
    // sign of y - (k x + b), cleared by the positive factor xd yd kd bd
    let t1 = yn.checked_mul(xd)?.checked_mul(kd)?.checked_mul(bd)?;
    let t2 = kn.checked_mul(xn)?.checked_mul(yd)?.checked_mul(bd)?;
    let t3 = bn.checked_mul(kd)?.checked_mul(xd)?.checked_mul(yd)?;
    let v = t1.checked_sub(t2)?.checked_sub(t3)?;
    Some(match v.cmp(&0) {
        std::cmp::Ordering::Greater => Side::Above,
        std::cmp::Ordering::Equal => Side::On,
        std::cmp::Ordering::Less => Side::Below,
    })
}
