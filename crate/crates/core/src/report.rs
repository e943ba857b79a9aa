//! One-shot verification runs: corner and line reconstruction, the hull
//! reconciliation, proof steps 1-3 (plus the symbolic-m route), reduction
//! spot checks, cone membership, the corollary sweep, and cross-validating
//! halfplane passes, assembled into a schema-versioned report.

use crate::certs::positivity_digest;
use crate::chern::{chern_of_tuple, DegreeTuple, Line, RatioPoint, Side};
use crate::cone::{corollary_check, Cone, ConeVector};
use crate::corners::{
    corner, corner_witness, discrepancies, edge_line, family_x, family_y, CornerIndex, Discrepancy,
    LineIndex,
};
use crate::enumeration::{
    enumerate_points, eval_on_rational_tuple, reduction_check, sample_real_tuples, PointCloud,
    ReductionProblem,
};
use crate::error::{Error, Result};
use crate::hull::{convex_hull, corner_report, halfplane_check};
use crate::rational::{q, qi, Q};
use crate::steps::{verify_step1, verify_step2, verify_step2_symbolic_m, verify_step3};
use num::{Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub s1_max: u32,
    pub m_max: u32,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            s1_max: 40,
            m_max: 200,
            seed: 0,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.s1_max < 5 {
            return Err(Error::BudgetTooSmall {
                got: self.s1_max,
                min: 5,
            });
        }
        if self.m_max < 6 {
            return Err(Error::BudgetTooSmall {
                got: self.m_max,
                min: 6,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StepReport {
    pub name: String,
    pub pass: bool,
    pub details: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub config: RunConfig,
    pub steps: Vec<StepReport>,
    pub discrepancies: Vec<Discrepancy>,
    pub witnesses: Value,
}

impl VerificationReport {
    /// All mathematical checks green; discrepancies are informational.
    pub fn passed(&self) -> bool {
        self.steps.iter().all(|s| s.pass)
    }
}

fn labels(ts: &[DegreeTuple]) -> Vec<String> {
    ts.iter().map(|t| t.label()).collect()
}

fn corners_step(s1_max: u32) -> Result<StepReport> {
    let mut pass = true;
    for i in 1..=5u32 {
        let idx = CornerIndex::Finite(i);
        let w = corner_witness(idx)?;
        pass &= chern_of_tuple(&w)?.point() == corner(idx)?;
    }
    for n in 6..=s1_max {
        let p = chern_of_tuple(&DegreeTuple::ones(n))?.point();
        pass &= p == corner(CornerIndex::Finite(n))?;
    }
    // the family formula degenerates to p_4 at n = 5
    pass &= corner(CornerIndex::Finite(4))? == RatioPoint::new(family_x(5), family_y(5));
    Ok(StepReport {
        name: "corners".into(),
        pass,
        details: json!({ "sporadic": 5, "family_checked_to": s1_max }),
    })
}

fn lines_step(m_max: u32) -> Result<StepReport> {
    let mut pass = true;
    let l0 = edge_line(LineIndex::Finite(0));
    let p1 = corner(CornerIndex::Finite(1))?;
    let p_inf = corner(CornerIndex::Infinity)?;
    let through = Line::through(&p1, &p_inf)?;
    pass &= through.k == l0.k && through.b == l0.b;

    let k_inf = edge_line(LineIndex::Infinity).k;
    let mut prev: Option<Q> = None;
    for m in 1..=m_max {
        let line = edge_line(LineIndex::Finite(m));
        let a = corner(CornerIndex::Finite(m))?;
        let b = corner(CornerIndex::Finite(m + 1))?;
        let through = Line::through(&a, &b)?;
        pass &= through.k == line.k && through.b == line.b;
        if let Some(p) = &prev {
            pass &= *p < line.k;
        }
        pass &= line.k < k_inf;
        prev = Some(line.k);
    }
    Ok(StepReport {
        name: "lines".into(),
        pass,
        details: json!({
            "checked_to": m_max,
            "note": "m = 5 uses the recomputed slope -13/4",
        }),
    })
}

fn hull_step(cloud: &PointCloud, s1_max: u32) -> Result<StepReport> {
    let points = cloud.points();
    let h = convex_hull(&points);
    let rep = corner_report(&h, cloud, s1_max)?;
    let expected_corners = if s1_max == 5 { 4 } else { s1_max as usize };
    let pass = rep.clean() && h.contains_all(&points) && rep.matched.len() == expected_corners;
    Ok(StepReport {
        name: "hull".into(),
        pass,
        details: json!({
            "points": points.len(),
            "vertices": h.vertices.len(),
            "lower_chain": h.lower_chain.len(),
            "matched_corners": rep.matched.len(),
            "extra_lower_vertices": rep.extra_vertices.len(),
            "missing_corners": rep.missing.len(),
        }),
    })
}

fn reduction_step(seed: u64) -> Result<StepReport> {
    let set = crate::cone::edges(4)?;
    let mut triples = vec![set.edge(crate::cone::EdgeIndex::E0)?.clone()];
    for j in 1..=4 {
        triples.push(set.edge(crate::cone::EdgeIndex::Finite(j))?.clone());
    }
    let mut pass = true;
    let mut samples = 0usize;
    for m in 5..=10u32 {
        for v in &triples {
            let prob = ReductionProblem {
                m,
                lambda: v.l1.clone(),
                mu: v.l2.clone(),
                nu: v.l3.clone(),
            };
            let out = reduction_check(&prob)?;
            pass &= out.holds;
            for tuple in sample_real_tuples(m, 50, seed) {
                pass &= eval_on_rational_tuple(&prob, &tuple)? >= out.equal_degree_min;
                samples += 1;
            }
        }
    }
    Ok(StepReport {
        name: "reduction".into(),
        pass,
        details: json!({
            "m_range": [5, 10],
            "functionals": triples.len(),
            "random_samples": samples,
        }),
    })
}

fn cross_validation_step(cloud: &PointCloud, s1_max: u32) -> (StepReport, Vec<String>) {
    let l0 = halfplane_check(cloud, &edge_line(LineIndex::Finite(0)), Side::Below);
    let mut pass = l0.ok;
    for m in 1..=s1_max {
        pass &= halfplane_check(cloud, &edge_line(LineIndex::Finite(m)), Side::Above).ok;
    }
    let linf = halfplane_check(cloud, &edge_line(LineIndex::Infinity), Side::Above);
    pass &= linf.ok && linf.on_line.is_empty();
    let l0_on = labels(&l0.on_line);
    let step = StepReport {
        name: "cross_validation".into(),
        pass,
        details: json!({
            "lines_swept": s1_max + 2,
            "l0_on_line": l0_on,
        }),
    };
    (step, l0_on)
}

fn yau_step(cloud: &PointCloud) -> StepReport {
    let mut pass = true;
    for (_, c) in &cloud.entries {
        pass &= c.c1.is_negative()
            && c.c2.is_positive()
            && c.c1c2.is_negative()
            && c.c3.is_negative()
            && crate::chern::yau_holds(c);
    }
    StepReport {
        name: "yau".into(),
        pass,
        details: json!({ "checked": cloud.entries.len() }),
    }
}

pub fn full_verify(cfg: &RunConfig) -> Result<VerificationReport> {
    cfg.validate()?;
    let cloud = enumerate_points(cfg.s1_max)?;
    let mut steps = Vec::new();

    steps.push(corners_step(cfg.s1_max)?);
    steps.push(lines_step(cfg.m_max)?);
    steps.push(hull_step(&cloud, cfg.s1_max)?);

    let s1 = verify_step1()?;
    steps.push(StepReport {
        name: "step1".into(),
        pass: s1.pass,
        details: json!({
            "endpoint_d1": positivity_digest(&s1.endpoint_d1, "s1"),
            "endpoint_diag": positivity_digest(&s1.endpoint_diag, "s1"),
            "diag_equalities": s1.diag_equalities,
            "x_left_bound": positivity_digest(&s1.x_left_bound, "s1"),
            "x_right_bound": positivity_digest(&s1.x_right_bound, "s1"),
        }),
    });

    let s2 = verify_step2(6..=cfg.m_max, 10)?;
    let m6_on: Vec<String> = s2
        .sweep_on_line
        .iter()
        .find(|(m, _)| *m == 6)
        .map(|(_, on)| labels(on))
        .unwrap_or_default();
    steps.push(StepReport {
        name: "step2".into(),
        pass: s2.pass,
        details: json!({
            "m_range": [6, cfg.m_max],
            "finite_sweep_s1_max": 10,
            "thresholds_below_10": s2.thresholds_below_10,
            "l6_on_line": m6_on,
        }),
    });

    let s2s = verify_step2_symbolic_m()?;
    steps.push(StepReport {
        name: "step2_symbolic_m".into(),
        pass: s2s.pass,
        details: json!({
            "denominator": positivity_digest(&s2s.denominator_cert, "m"),
            "clearing": positivity_digest(&s2s.clearing_cert, "m"),
            "g_at_threshold": positivity_digest(&s2s.value_certs[0], "m"),
            "g_prime": positivity_digest(&s2s.value_certs[1], "m"),
            "g_second": positivity_digest(&s2s.value_certs[2], "m"),
            "g_third": positivity_digest(&s2s.value_certs[3], "m"),
        }),
    });

    let s3 = verify_step3(&cloud)?;
    let step3_on: Vec<(u32, Vec<String>)> = s3
        .sweep_on_line
        .iter()
        .map(|(i, on)| (*i, labels(on)))
        .collect();
    steps.push(StepReport {
        name: "step3".into(),
        pass: s3.pass,
        details: json!({
            "tail_cert": positivity_digest(&s3.tail_cert, "s1"),
            "coverage_ok": s3.coverage_ok,
            "x_boundary": labels(&s3.x_boundary_witnesses),
        }),
    });

    let (cv_step, l0_on) = cross_validation_step(&cloud, cfg.s1_max);
    steps.push(cv_step);
    steps.push(reduction_step(cfg.seed)?);

    let cone = Cone::new(cfg.m_max)?;
    let sextic = cone.contains(&ConeVector::new(qi(-86), qi(0), qi(1)));
    let sixth = cone.contains(&ConeVector::new(q(1, 6), qi(0), qi(-1)));
    let c3_only = cone.contains(&ConeVector::new(qi(0), qi(0), qi(1)));
    let cone_pass = sextic.member
        && labels(&sextic.equalities) == vec!["5".to_string()]
        && sextic.certificate.is_some()
        && sixth.member
        && sixth.tail.limit_value.is_zero()
        && !c3_only.member
        && c3_only
            .counterexample
            .as_ref()
            .is_some_and(|t| t.label() == "5");
    steps.push(StepReport {
        name: "cone".into(),
        pass: cone_pass,
        details: json!({
            "m_max": cfg.m_max,
            "sextic_member": sextic.member,
            "sixth_member": sixth.member,
            "c3_member": c3_only.member,
            "c3_counterexample": c3_only.counterexample.as_ref().map(|t| t.label()),
        }),
    });

    let cor = corollary_check(&cone, &cloud)?;
    steps.push(StepReport {
        name: "corollary".into(),
        pass: cor.pass,
        details: json!({
            "identity1": cor.identity1,
            "identity2": cor.identity2,
            "sextic_equalities": labels(&cor.sextic_equalities),
            "sixth_strict": cor.sixth_strict,
            "eighteenth_strict": cor.eighteenth_strict,
        }),
    });

    steps.push(yau_step(&cloud));

    let witnesses = json!({
        "l0_on_line": l0_on,
        "step2_l6_on_line": m6_on,
        "step3_on_line": step3_on,
        "x_boundary": labels(&s3.x_boundary_witnesses),
        "corollary_equalities": labels(&cor.sextic_equalities),
    });
    Ok(VerificationReport {
        schema_version: 1,
        config: cfg.clone(),
        steps,
        discrepancies: discrepancies(),
        witnesses,
    })
}
