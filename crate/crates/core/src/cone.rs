//! The dual cone of valid linear inequalities l1 c1^3 + l2 c1c2 + l3 c3 >= 0.
//!
//! A coefficient vector belongs to the cone exactly when the normalized
//! functional h = l1 x + l2 + l3 y is nonpositive on the closure of the ratio
//! region; the closure is generated by the corners p_1..p_5, the family
//! points p_n = Q(n; 1, ..., 1), and the limit p_inf, so membership reduces
//! to finitely many rational evaluations plus one polynomial sign
//! certificate along the family.

use crate::certs::{integer_positivity, Positivity};
use crate::chern::{ChernData, DegreeTuple, Line, RatioPoint};
use crate::corners::{corner, corner_witness, edge_line, CornerIndex, LineIndex};
use crate::enumeration::PointCloud;
use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rational::{q, qi, Q};
use num::{Signed, ToPrimitive, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeVector {
    pub l1: Q,
    pub l2: Q,
    pub l3: Q,
}

impl ConeVector {
    pub fn new(l1: Q, l2: Q, l3: Q) -> Self {
        ConeVector { l1, l2, l3 }
    }

    /// The functional on raw Chern numbers: l1 c1^3 + l2 c1c2 + l3 c3.
    pub fn apply(&self, c: &ChernData) -> Q {
        &self.l1 * &c.c1_cubed + &self.l2 * &c.c1c2 + &self.l3 * &c.c3
    }

    /// The normalized functional h = l1 x + l2 + l3 y; since c1c2 < 0 on the
    /// region, apply >= 0 is equivalent to h <= 0.
    pub fn at_point(&self, p: &RatioPoint) -> Q {
        &self.l1 * &p.x + &self.l2 + &self.l3 * &p.y
    }

    pub fn scale(&self, by: &Q) -> ConeVector {
        ConeVector::new(by * &self.l1, by * &self.l2, by * &self.l3)
    }

    pub fn add(&self, rhs: &ConeVector) -> ConeVector {
        ConeVector::new(&self.l1 + &rhs.l1, &self.l2 + &rhs.l2, &self.l3 + &rhs.l3)
    }
}

impl fmt::Display for ConeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::rational::fmt_q;
        write!(
            f,
            "({}, {}, {})",
            fmt_q(&self.l1),
            fmt_q(&self.l2),
            fmt_q(&self.l3)
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeIndex {
    E0,
    Finite(u32),
    Infinity,
}

impl fmt::Display for EdgeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeIndex::E0 => write!(f, "e_0"),
            EdgeIndex::Finite(m) => write!(f, "e_{m}"),
            EdgeIndex::Infinity => write!(f, "e_inf"),
        }
    }
}

/// e_0 = (-k_0, -b_0, 1), e_m = (k_m, b_m, -1), e_inf = (-1/3, 1, -1).
#[derive(Debug, Clone)]
pub struct EdgeSet {
    pub m_max: u32,
    e0: ConeVector,
    finite: Vec<ConeVector>,
    e_inf: ConeVector,
}

pub fn edges(m_max: u32) -> Result<EdgeSet> {
    if m_max < 1 {
        return Err(Error::InvalidIndex(m_max));
    }
    let from_line = |line: Line| ConeVector::new(line.k, line.b, qi(-1));
    let l0 = edge_line(LineIndex::Finite(0));
    let e0 = ConeVector::new(-l0.k, -l0.b, qi(1));
    let finite = (1..=m_max)
        .map(|m| from_line(edge_line(LineIndex::Finite(m))))
        .collect();
    let e_inf = from_line(edge_line(LineIndex::Infinity));
    Ok(EdgeSet {
        m_max,
        e0,
        finite,
        e_inf,
    })
}

impl EdgeSet {
    pub fn edge(&self, i: EdgeIndex) -> Result<&ConeVector> {
        match i {
            EdgeIndex::E0 => Ok(&self.e0),
            EdgeIndex::Finite(m) if (1..=self.m_max).contains(&m) => {
                Ok(&self.finite[(m - 1) as usize])
            }
            EdgeIndex::Finite(m) => Err(Error::InvalidIndex(m)),
            EdgeIndex::Infinity => Ok(&self.e_inf),
        }
    }
}

/// Sign analysis of h along the family p_n, n >= 5, after clearing the
/// positive denominator 3(n-4)(n^2 - 5n + 12).
#[derive(Debug, Clone)]
pub struct TailAnalysis {
    /// H(n) = 6 l1 (n-4)^3 + l2 (3n^3 - 27n^2 + 96n - 144) + l3 (n^3 - 3n^2 + 14n - 24).
    pub cleared: UniPoly,
    /// sup_n H(n) <= 0, i.e. h <= 0 along the whole family.
    pub bounded: bool,
    pub identically_zero: bool,
    /// n >= 5 with H(n) = 0 (exact equality on the family).
    pub equality_at: Vec<i64>,
    /// Some violating n with H(n) > 0, when unbounded.
    pub violation_at: Option<i64>,
    /// h(p_inf) = 2 l1 + l2 + l3/3.
    pub limit_value: Q,
}

#[derive(Debug, Clone)]
pub struct ConeCertificate {
    pub edges: [EdgeIndex; 3],
    pub weights: [Q; 3],
}

impl ConeCertificate {
    pub fn combination(&self, set: &EdgeSet) -> Result<ConeVector> {
        let mut acc = ConeVector::new(Q::zero(), Q::zero(), Q::zero());
        for (i, w) in self.edges.iter().zip(&self.weights) {
            acc = acc.add(&set.edge(*i)?.scale(w));
        }
        Ok(acc)
    }

    pub fn is_valid_for(&self, set: &EdgeSet, v: &ConeVector) -> bool {
        self.weights.iter().all(|w| !w.is_negative())
            && self.combination(set).is_ok_and(|c| c == *v)
    }
}

#[derive(Debug, Clone)]
pub struct MembershipVerdict {
    pub member: bool,
    /// h at the sporadic corners, indexed 1..=5.
    pub corner_values: Vec<(u32, Q)>,
    /// Tuples realizing h = 0 (sporadic corners and family points).
    pub equalities: Vec<DegreeTuple>,
    pub counterexample: Option<DegreeTuple>,
    pub certificate: Option<ConeCertificate>,
    pub tail: TailAnalysis,
}

pub struct Cone {
    pub edges: EdgeSet,
}

impl Cone {
    pub fn new(m_max: u32) -> Result<Cone> {
        Ok(Cone {
            edges: edges(m_max)?,
        })
    }

    pub fn contains(&self, v: &ConeVector) -> MembershipVerdict {
        let mut corner_values = Vec::new();
        let mut equalities = Vec::new();
        let mut counterexample = None;
        for i in 1..=5u32 {
            let idx = CornerIndex::Finite(i);
            let p = corner(idx).expect("sporadic corner index");
            let h = v.at_point(&p);
            if h.is_positive() && counterexample.is_none() {
                counterexample = Some(corner_witness(idx).expect("sporadic corner witness"));
            } else if h.is_zero() {
                equalities.push(corner_witness(idx).expect("sporadic corner witness"));
            }
            corner_values.push((i, h));
        }

        let tail = tail_analysis(v);
        if counterexample.is_none() {
            if let Some(n) = tail.violation_at {
                counterexample = Some(DegreeTuple::ones(n as u32));
            }
        }
        for n in &tail.equality_at {
            let t = DegreeTuple::ones(*n as u32);
            if !equalities.contains(&t) {
                equalities.push(t);
            }
        }

        let member = counterexample.is_none() && tail.bounded && !tail.limit_value.is_positive();
        let certificate = if member {
            self.certificate(v).ok()
        } else {
            None
        };
        MembershipVerdict {
            member,
            corner_values,
            equalities,
            counterexample,
            certificate,
            tail,
        }
    }

    /// Locate v in the fan of cells (e0, e_m, e_{m+1}) for m < m_max, falling
    /// back to the closing cell (e0, e_{m_max}, e_inf); Cramer's rule gives
    /// exact weights, accepted when all are nonnegative.
    pub fn certificate(&self, v: &ConeVector) -> Result<ConeCertificate> {
        let mut cells: Vec<[EdgeIndex; 3]> = (1..self.edges.m_max)
            .map(|m| {
                [
                    EdgeIndex::E0,
                    EdgeIndex::Finite(m),
                    EdgeIndex::Finite(m + 1),
                ]
            })
            .collect();
        cells.push([
            EdgeIndex::E0,
            EdgeIndex::Finite(self.edges.m_max),
            EdgeIndex::Infinity,
        ]);

        for cell in cells {
            let a = self.edges.edge(cell[0])?;
            let b = self.edges.edge(cell[1])?;
            let c = self.edges.edge(cell[2])?;
            let det = det3(a, b, c);
            if det.is_zero() {
                continue;
            }
            let weights = [
                det3(v, b, c) / &det,
                det3(a, v, c) / &det,
                det3(a, b, v) / &det,
            ];
            if weights.iter().all(|w| !w.is_negative()) {
                return Ok(ConeCertificate {
                    edges: cell,
                    weights,
                });
            }
        }
        Err(Error::NotRepresentable {
            m_max: self.edges.m_max,
        })
    }
}

fn det3(a: &ConeVector, b: &ConeVector, c: &ConeVector) -> Q {
    &a.l1 * (&b.l2 * &c.l3 - &b.l3 * &c.l2) - &b.l1 * (&a.l2 * &c.l3 - &a.l3 * &c.l2)
        + &c.l1 * (&a.l2 * &b.l3 - &a.l3 * &b.l2)
}

fn tail_analysis(v: &ConeVector) -> TailAnalysis {
    let cleared = UniPoly::from_ints(&[-384, 288, -72, 6])
        .scale(&v.l1)
        .add(&UniPoly::from_ints(&[-144, 96, -27, 3]).scale(&v.l2))
        .add(&UniPoly::from_ints(&[-24, 14, -3, 1]).scale(&v.l3));
    let limit_value = qi(2) * &v.l1 + &v.l2 + q(1, 3) * &v.l3;

    let (bounded, identically_zero, equality_at, violation_at) =
        match integer_positivity(&cleared.neg(), 5) {
            Ok(Positivity::Certified(cert)) => (true, false, cert.zeros(), None),
            Ok(Positivity::CounterexampleAt(n)) => (false, false, Vec::new(), Some(n)),
            Err(Error::ZeroPolynomial) => (true, true, Vec::new(), None),
            Err(Error::NegativeLeadingCoefficient) => {
                // H -> +infinity; exhibit the first integer violation
                let hi = cleared
                    .root_bound()
                    .and_then(|b| b.ceil().to_integer().to_i64())
                    .unwrap_or(5)
                    .max(5)
                    + 1;
                let at = (5..=hi).find(|&n| cleared.eval_int(n).is_positive());
                (false, false, Vec::new(), at)
            }
            Err(_) => unreachable!("integer_positivity on a fixed-degree polynomial"),
        };
    TailAnalysis {
        cleared,
        bounded,
        identically_zero,
        equality_at,
        violation_at,
        limit_value,
    }
}

#[derive(Debug, Clone)]
pub struct CorollaryReport {
    /// 744/229 e0 + 515/229 e_1 = (-86, 0, 1) exactly.
    pub identity1: bool,
    /// 93/422 e0 + 515/422 e_inf = (1/6, 0, -1) exactly.
    pub identity2: bool,
    pub cert1: ConeCertificate,
    pub cert2: ConeCertificate,
    /// c3 - 86 c1^3 >= 0 over the cloud.
    pub sextic_bound_ok: bool,
    pub sextic_equalities: Vec<DegreeTuple>,
    /// c1^3 - 6 c3 > 0 strictly over the cloud.
    pub sixth_strict: bool,
    /// c1^3 - 18 c3 > 0 strictly over the cloud (the failed-candidate bound).
    pub eighteenth_strict: bool,
    pub pass: bool,
}

pub fn corollary_check(cone: &Cone, cloud: &PointCloud) -> Result<CorollaryReport> {
    let v1 = ConeVector::new(qi(-86), qi(0), qi(1));
    let v2 = ConeVector::new(q(1, 6), qi(0), qi(-1));

    let e0 = cone.edges.edge(EdgeIndex::E0)?;
    let e1 = cone.edges.edge(EdgeIndex::Finite(1))?;
    let e_inf = cone.edges.edge(EdgeIndex::Infinity)?;
    let identity1 = e0.scale(&q(744, 229)).add(&e1.scale(&q(515, 229))) == v1;
    let identity2 = e0.scale(&q(93, 422)).add(&e_inf.scale(&q(515, 422))) == v2;

    let cert1 = cone.certificate(&v1)?;
    let cert2 = cone.certificate(&v2)?;
    let certs_sound = cert1.is_valid_for(&cone.edges, &v1) && cert2.is_valid_for(&cone.edges, &v2);

    let mut sextic_bound_ok = true;
    let mut sextic_equalities = Vec::new();
    let mut sixth_strict = true;
    let mut eighteenth_strict = true;
    for (t, c) in &cloud.entries {
        let i1 = &c.c3 - qi(86) * &c.c1_cubed;
        if i1.is_zero() {
            sextic_equalities.push(t.clone());
        } else if i1.is_negative() {
            sextic_bound_ok = false;
        }
        sixth_strict &= (&c.c1_cubed - qi(6) * &c.c3).is_positive();
        eighteenth_strict &= (&c.c1_cubed - qi(18) * &c.c3).is_positive();
    }

    let pass = identity1
        && identity2
        && certs_sound
        && sextic_bound_ok
        && sixth_strict
        && eighteenth_strict;
    Ok(CorollaryReport {
        identity1,
        identity2,
        cert1,
        cert2,
        sextic_bound_ok,
        sextic_equalities,
        sixth_strict,
        eighteenth_strict,
        pass,
    })
}
