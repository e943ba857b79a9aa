//! The three verification steps for the supporting-line inequalities.
//!
//! Step 1 bounds the cloud from above by L_0 via a quadratic-in-d endpoint
//! argument; step 2 bounds it from below by L_m (m >= 6) via vertex-value
//! cubics, certified per m and once more with m symbolic; step 3 settles the
//! finitely many lines L_1..L_5 by an exact sweep plus an x-range certificate.

use crate::certs::{integer_positivity, taylor_positivity, Positivity, TaylorOutcome};
use crate::chern::{side_of_line, DegreeTuple, RatioPoint, Side};
use crate::corners::{edge_line, family_x, family_y, LineIndex};
use crate::enumeration::{enumerate_points, PointCloud};
use crate::error::{Error, Result};
use crate::poly::{BiPoly, UniPoly};
use crate::rational::{q, qi, Q};
use num::{One, Signed, Zero};
use std::ops::RangeInclusive;

/// c1, c2, c3 as bivariate polynomials in (v1, v2) = (s1, d) under the
/// equal-degree substitution s2 = s1 d, s3 = s1 d^2.
pub fn chern_bipolys() -> (BiPoly, BiPoly, BiPoly) {
    let s1 = BiPoly::v1();
    let d = BiPoly::v2();
    let s2 = s1.mul(&d);
    let s3 = s1.mul(&d).mul(&d);
    let c1 = BiPoly::constant(qi(4)).sub(&s1);
    let c2 = s1
        .mul(&s1)
        .add(&s2)
        .scale(&q(1, 2))
        .sub(&s1.scale(&qi(3)))
        .add(&BiPoly::constant(qi(6)));
    let c3 = s1
        .mul(&s1)
        .mul(&s1)
        .add(&s1.mul(&s2).scale(&qi(3)))
        .add(&s3.scale(&qi(2)))
        .scale(&q(-1, 6))
        .add(&s1.mul(&s1))
        .add(&s2)
        .sub(&s1.scale(&qi(3)))
        .add(&BiPoly::constant(qi(4)));
    (c1, c2, c3)
}

/// The step-1 functional f(s1, d) = c3 - k_0 c1^3 - b_0 c1c2, which is
/// nonnegative exactly when the point lies below-or-on L_0. The symbolic
/// expansion is cross-checked coefficient-by-coefficient against
/// (1/93)(3500 - 2625 s1 - 937 d s1 - 31 d^2 s1 + 422 s1^2 + 211 d s1^2).
pub fn build_step1_poly() -> Result<BiPoly> {
    let (c1, c2, c3) = chern_bipolys();
    let l0 = edge_line(LineIndex::Finite(0));
    let c1_cubed = c1.mul(&c1).mul(&c1);
    let c1c2 = c1.mul(&c2);
    let f = c3.sub(&c1_cubed.scale(&l0.k)).sub(&c1c2.scale(&l0.b));

    let expected = BiPoly::new(vec![
        UniPoly::from_ints(&[3500, -2625, 422]).scale(&q(1, 93)),
        UniPoly::from_ints(&[0, -937, 211]).scale(&q(1, 93)),
        UniPoly::from_ints(&[0, -31]).scale(&q(1, 93)),
    ]);
    if f != expected {
        return Err(Error::ExpansionMismatch(format!(
            "got {}, expected {}",
            f.render("s1", "d"),
            expected.render("s1", "d")
        )));
    }
    Ok(f)
}

/// Endpoint values of a concave-in-d quadratic over [1, s1]: the minimum is
/// attained at one of the two endpoints.
#[derive(Debug, Clone)]
pub struct EndpointMin {
    pub at_one: Q,
    pub at_upper: Q,
    pub min: Q,
}

pub fn quad_endpoint_min(f: &BiPoly, s1: &Q) -> Result<EndpointMin> {
    let slice = f.eval_v1(s1);
    if slice.degree() > Some(2) {
        return Err(Error::WrongConcavity {
            lead: crate::rational::fmt_q(slice.leading().expect("degree > 2")),
        });
    }
    let lead = slice.coeff(2);
    if !lead.is_negative() {
        return Err(Error::WrongConcavity {
            lead: crate::rational::fmt_q(&lead),
        });
    }
    let at_one = slice.eval(&Q::one());
    let at_upper = slice.eval(s1);
    let min = at_one.clone().min(at_upper.clone());
    Ok(EndpointMin {
        at_one,
        at_upper,
        min,
    })
}

#[derive(Debug, Clone)]
pub struct Step1Report {
    /// 93 f(s1, 1) = 633 s1^2 - 3593 s1 + 3500, certified from s1 = 5.
    pub endpoint_d1: Positivity,
    /// (93/5) f(s1, s1) = 36 s1^3 - 103 s1^2 - 525 s1 + 700, certified from 5.
    pub endpoint_diag: Positivity,
    pub endpoint_polys_match: bool,
    /// Integers where the diagonal endpoint polynomial vanishes (the sextic).
    pub diag_equalities: Vec<i64>,
    pub min_at_5: EndpointMin,
    /// x >= 1/16 reduces (via s2 <= s1^2) to 3 s1^2 - 25 s1 + 50 >= 0.
    pub x_left_bound: Positivity,
    /// x < 2 reduces (via s2 >= s1) to 3 s1 - 4 > 0.
    pub x_right_bound: Positivity,
    pub pass: bool,
}

pub fn verify_step1() -> Result<Step1Report> {
    let f = build_step1_poly()?;

    let d1 = f.restrict_v2_one().scale(&qi(93));
    let diag = f.restrict_v2_diag().scale(&q(93, 5));
    let endpoint_polys_match = d1 == UniPoly::from_ints(&[3500, -3593, 633])
        && diag == UniPoly::from_ints(&[700, -525, -103, 36]);

    let endpoint_d1 = integer_positivity(&d1, 5)?;
    let endpoint_diag = integer_positivity(&diag, 5)?;
    let diag_equalities = endpoint_diag.cert().map(|c| c.zeros()).unwrap_or_default();
    let min_at_5 = quad_endpoint_min(&f, &qi(5))?;

    let x_left_bound = integer_positivity(&UniPoly::from_ints(&[50, -25, 3]), 5)?;
    let x_right_bound = integer_positivity(&UniPoly::from_ints(&[-4, 3]), 5)?;

    let pass = endpoint_polys_match
        && endpoint_d1.is_certified()
        && endpoint_diag.is_certified()
        && min_at_5.min.is_zero()
        && x_left_bound.is_certified()
        && x_right_bound.cert().is_some_and(|c| c.is_strict());
    Ok(Step1Report {
        endpoint_d1,
        endpoint_diag,
        endpoint_polys_match,
        diag_equalities,
        min_at_5,
        x_left_bound,
        x_right_bound,
        pass,
    })
}

/// Case-II boundary: the in-d vertex of the step-2 functional sits at
/// d* = (3/4)((b_m - 1) s1 - 4 b_m + 2); d* >= 1 exactly when s1 >= threshold(m).
pub fn vertex_d_star(m: u32, s1: &Q) -> Result<Q> {
    let b = edge_line_checked(m)?.b;
    Ok(q(3, 4) * ((&b - qi(1)) * s1 - qi(4) * &b + qi(2)))
}

/// threshold(m) = (12 b_m - 2) / (3 b_m - 3).
pub fn threshold(m: u32) -> Result<Q> {
    let b = edge_line_checked(m)?.b;
    let den = qi(3) * &b - qi(3);
    if den.is_zero() {
        return Err(Error::DivisionByZero("threshold denominator 3 b_m - 3"));
    }
    Ok((qi(12) * &b - qi(2)) / den)
}

fn edge_line_checked(m: u32) -> Result<crate::chern::Line> {
    if m < 6 {
        return Err(Error::InvalidIndex(m));
    }
    Ok(edge_line(LineIndex::Finite(m)))
}

/// The vertex-value cubic g(m, s1) = 12 D(m)^2 f(m, s1, d*), cleared of all
/// denominators: with f = C(s1) + B(s1) d + (s1/3) d^2,
/// g = 12 D^2 C - 9 D^2 B^2 / s1 (the division by s1 is exact).
pub fn build_g(m: u32) -> Result<UniPoly> {
    let line = edge_line_checked(m)?;
    let (c1, c2, c3) = chern_bipolys();
    let f = c1
        .mul(&c1)
        .mul(&c1)
        .scale(&line.k)
        .add(&c1.mul(&c2).scale(&line.b))
        .sub(&c3);
    debug_assert_eq!(f.col(2), UniPoly::var().scale(&q(1, 3)));
    let c_col = f.col(0);
    let b_col = f.col(1);
    let d2 = {
        let d = crate::corners::line_denominator(m);
        &d * &d
    };
    let g = c_col
        .scale(&(qi(12) * &d2))
        .sub(&b_col.mul(&b_col).div_var()?.scale(&(qi(9) * &d2)));
    match g.degree() {
        Some(3) => Ok(g),
        other => Err(Error::NotCubic {
            degree: other.unwrap_or(0),
        }),
    }
}

#[derive(Debug, Clone)]
pub struct Step2PerM {
    pub m: u32,
    pub threshold: Q,
    pub taylor_base: Q,
    pub taylor: TaylorOutcome,
    /// The d = 1 boundary: family points Q(s1; 1, ..., 1) for 5 <= s1 <= this
    /// bound all lie above-or-on L_m, covering the vertex-outside case.
    pub case1_checked_to: u32,
    pub case1_ok: bool,
}

#[derive(Debug, Clone)]
pub struct Step2Report {
    pub per_m: Vec<Step2PerM>,
    /// threshold(m) < 10 exactly, for every m in {6..9} within range.
    pub thresholds_below_10: bool,
    /// Every tuple with 5 <= s1 <= sweep budget lies above-or-on L_m, m in {6..9}.
    pub sweep_ok: bool,
    pub sweep_on_line: Vec<(u32, Vec<DegreeTuple>)>,
    pub pass: bool,
}

pub fn verify_step2(m_range: RangeInclusive<u32>, finite_sweep_s1_max: u32) -> Result<Step2Report> {
    let sweep_cloud = enumerate_points(finite_sweep_s1_max)?;
    let mut per_m = Vec::new();
    let mut thresholds_below_10 = true;
    let mut sweep_ok = true;
    let mut sweep_on_line = Vec::new();

    for m in m_range {
        if m < 6 {
            return Err(Error::InvalidIndex(m));
        }
        let t = threshold(m)?;
        let base = if m >= 10 { t.clone() } else { &t + qi(1) };
        if (6..=9).contains(&m) {
            thresholds_below_10 &= t < qi(10);
            let line = edge_line(LineIndex::Finite(m));
            let mut on = Vec::new();
            let mut ok = true;
            for (tuple, c) in &sweep_cloud.entries {
                match side_of_line(&c.point(), &line) {
                    Side::Above => {}
                    Side::On => on.push(tuple.clone()),
                    Side::Below => ok = false,
                }
            }
            sweep_ok &= ok;
            sweep_on_line.push((m, on));
        }
        let g = build_g(m)?;
        let taylor = taylor_positivity(&g, &base)?;

        let case1_checked_to = finite_sweep_s1_max.max(m + 1).max(ceil_u32(&t) + 1);
        let line = edge_line(LineIndex::Finite(m));
        let case1_ok = (5..=case1_checked_to).all(|s1| {
            let p = RatioPoint::new(family_x(s1), family_y(s1));
            side_of_line(&p, &line) != Side::Below
        });
        per_m.push(Step2PerM {
            m,
            threshold: t,
            taylor_base: base,
            taylor,
            case1_checked_to,
            case1_ok,
        });
    }
    let pass = thresholds_below_10
        && sweep_ok
        && per_m.iter().all(|p| p.taylor.is_certified() && p.case1_ok);
    Ok(Step2Report {
        per_m,
        thresholds_below_10,
        sweep_ok,
        sweep_on_line,
        pass,
    })
}

fn ceil_u32(v: &Q) -> u32 {
    use num::ToPrimitive;
    v.ceil().to_integer().to_u32().unwrap_or(u32::MAX)
}

/// Numerators T_n / T_d of threshold(m) as polynomials in m, cleared by the
/// shared line denominator: threshold = (2 B - D) / ((B - 3 D) / 2).
fn threshold_fraction() -> (UniPoly, UniPoly) {
    let b = UniPoly::from_ints(&[-120, 254, 3, -50, 9]);
    let d = UniPoly::from_ints(&[-240, 80, 51, -26, 3]);
    let tn = b.scale(&qi(2)).sub(&d);
    let td = b.sub(&d.scale(&qi(3))).scale(&q(1, 2));
    (tn, td)
}

/// g with m symbolic: a bivariate polynomial with v1 = m and v2 = s1, built
/// from the cleared functional 3 K c1^3 + B c1c2 - 3 D c3 so that every
/// coefficient is a polynomial in m.
fn g_symbolic() -> Result<BiPoly> {
    let (c1, c2, c3) = chern_bipolys();
    let c1_cubed = c1.mul(&c1).mul(&c1);
    let c1c2 = c1.mul(&c2);
    let k = UniPoly::from_ints(&[0, -28, 1, 4, -1]);
    let b = UniPoly::from_ints(&[-120, 254, 3, -50, 9]);
    let d = UniPoly::from_ints(&[-240, 80, 51, -26, 3]);

    // F_j(m, s1) = 3K [c1^3]_j + B [c1c2]_j - 3D [c3]_j, the d^j coefficient
    // of the functional scaled by 3D
    let f_col = |j: usize| -> BiPoly {
        BiPoly::outer(&k.scale(&qi(3)), &c1_cubed.col(j))
            .add(&BiPoly::outer(&b, &c1c2.col(j)))
            .sub(&BiPoly::outer(&d.scale(&qi(3)), &c3.col(j)))
    };
    let f0 = f_col(0);
    let f1 = f_col(1);
    debug_assert_eq!(f_col(2), BiPoly::outer(&d, &UniPoly::var()));

    // g = 4 D F0 - F1^2 / s1; the division is exact
    let d_bi = BiPoly::outer(&d, &UniPoly::constant(Q::one()));
    let g = d_bi.scale(&qi(4)).mul(&f0).sub(&f1.mul(&f1).div_v2()?);
    if g.v2_degree() != Some(3) {
        return Err(Error::NotCubic {
            degree: g.v2_degree().unwrap_or(0),
        });
    }
    Ok(g)
}

#[derive(Debug, Clone)]
pub struct SymbolicStep2Report {
    /// T_d(m) = 14 m^3 - 75 m^2 + 7 m + 300 > 0 for m >= 10.
    pub denominator_cert: Positivity,
    /// D(m) = (m-4)(m-3)(3m^2 - 5m - 20) > 0 for m >= 10.
    pub clearing_cert: Positivity,
    /// Cleared numerators of g, g', g'', g''' at s1 = threshold(m), each a
    /// polynomial in m required strictly positive from m = 10.
    pub value_certs: [Positivity; 4],
    pub pass: bool,
}

/// Certify step 2 for every m >= 10 at once: substitute s1 = T_n/T_d into
/// g(m, s1) and its s1-derivatives, clear powers of T_d (positive for
/// m >= 10), and certify the resulting polynomials in m from m = 10.
pub fn verify_step2_symbolic_m() -> Result<SymbolicStep2Report> {
    let g = g_symbolic()?;
    let (tn, td) = threshold_fraction();
    let d = UniPoly::from_ints(&[-240, 80, 51, -26, 3]);

    let denominator_cert = integer_positivity(&td, 10)?;
    if !denominator_cert.cert().is_some_and(|c| c.is_strict()) {
        return Err(Error::DenominatorSignChange(td.render("m")));
    }
    let clearing_cert = integer_positivity(&d, 10)?;
    if !clearing_cert.cert().is_some_and(|c| c.is_strict()) {
        return Err(Error::DenominatorSignChange(d.render("m")));
    }

    let g0 = g.col(0);
    let g1 = g.col(1);
    let g2 = g.col(2);
    let g3 = g.col(3);
    let td2 = td.mul(&td);
    let td3 = td2.mul(&td);
    let tn2 = tn.mul(&tn);
    let tn3 = tn2.mul(&tn);

    // g(m, t) = N0 / T_d^3, g'(m, t) = N1 / T_d^2, g''(m, t) = N2 / T_d,
    // g'''(m, t) = N3
    let n0 = g0
        .mul(&td3)
        .add(&g1.mul(&tn).mul(&td2))
        .add(&g2.mul(&tn2).mul(&td))
        .add(&g3.mul(&tn3));
    let n1 = g1
        .mul(&td2)
        .add(&g2.scale(&qi(2)).mul(&tn).mul(&td))
        .add(&g3.scale(&qi(3)).mul(&tn2));
    let n2 = g2.scale(&qi(2)).mul(&td).add(&g3.scale(&qi(6)).mul(&tn));
    let n3 = g3.scale(&qi(6));

    let value_certs = [
        integer_positivity(&n0, 10)?,
        integer_positivity(&n1, 10)?,
        integer_positivity(&n2, 10)?,
        integer_positivity(&n3, 10)?,
    ];
    let pass = value_certs
        .iter()
        .all(|p| p.cert().is_some_and(|c| c.is_strict()));
    Ok(SymbolicStep2Report {
        denominator_cert,
        clearing_cert,
        value_certs,
        pass,
    })
}

#[derive(Debug, Clone)]
pub struct Step3Report {
    /// 5 s1^2 - 60 s1 + 120 > 0 from s1 = 10: together with s2 <= s1^2 this
    /// forces x > 4/9 whenever s1 >= 10.
    pub tail_cert: Positivity,
    pub sweep_ok: bool,
    /// Exact-equality tuples per line index 1..=5.
    pub sweep_on_line: Vec<(u32, Vec<DegreeTuple>)>,
    /// Every cloud point with x <= 4/9 has s1 <= 9.
    pub coverage_ok: bool,
    /// Tuples sitting exactly on x = 4/9.
    pub x_boundary_witnesses: Vec<DegreeTuple>,
    pub pass: bool,
}

pub fn verify_step3(cloud: &PointCloud) -> Result<Step3Report> {
    let tail_cert = integer_positivity(&UniPoly::from_ints(&[120, -60, 5]), 10)?;

    let lines: Vec<_> = (1..=5)
        .map(|i| (i, edge_line(LineIndex::Finite(i))))
        .collect();
    let mut sweep_ok = true;
    let mut sweep_on_line: Vec<(u32, Vec<DegreeTuple>)> =
        lines.iter().map(|(i, _)| (*i, Vec::new())).collect();
    let four_ninths = q(4, 9);
    let mut coverage_ok = true;
    let mut x_boundary_witnesses = Vec::new();

    for (t, c) in &cloud.entries {
        if t.s1() <= 9 {
            let p = c.point();
            for ((_, line), (_, on)) in lines.iter().zip(sweep_on_line.iter_mut()) {
                match side_of_line(&p, line) {
                    Side::Above => {}
                    Side::On => on.push(t.clone()),
                    Side::Below => sweep_ok = false,
                }
            }
        } else if c.x <= four_ninths {
            coverage_ok = false;
        }
        if c.x == four_ninths {
            x_boundary_witnesses.push(t.clone());
        }
    }
    let pass = tail_cert.cert().is_some_and(|c| c.is_strict()) && sweep_ok && coverage_ok;
    Ok(Step3Report {
        tail_cert,
        sweep_ok,
        sweep_on_line,
        coverage_ok,
        x_boundary_witnesses,
        pass,
    })
}
