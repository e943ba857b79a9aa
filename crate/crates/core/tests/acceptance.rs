//! End-to-end acceptance: ten criteria, one test and one printed verdict each.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sci_chern::*;
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::sync::LazyLock;

static CLOUD40: LazyLock<PointCloud> = LazyLock::new(|| enumerate_points(40).unwrap());
static HULL40: LazyLock<Hull> = LazyLock::new(|| convex_hull(&CLOUD40.points()));

fn criterion(n: u32, name: &str, body: impl FnOnce()) {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(()) => println!("criterion {n}: PASS - {name}"),
        Err(e) => {
            println!("criterion {n}: FAIL - {name}");
            resume_unwind(e);
        }
    }
}

fn labels(ts: &[DegreeTuple]) -> Vec<String> {
    ts.iter().map(|t| t.label()).collect()
}

fn point_of(parts: &[u32]) -> RatioPoint {
    chern_of_tuple(&DegreeTuple::new(parts.to_vec()).unwrap())
        .unwrap()
        .point()
}

#[test]
fn criterion_01_corner_reproduction() {
    criterion(1, "corner ratio points reproduce exactly", || {
        assert_eq!(point_of(&[5]), RatioPoint::new(q(1, 16), q(43, 8)));
        assert_eq!(point_of(&[2, 3]), RatioPoint::new(q(1, 10), q(19, 5)));
        assert_eq!(point_of(&[1, 2, 2]), RatioPoint::new(q(1, 8), q(13, 4)));
        assert_eq!(
            point_of(&[1, 1, 1, 1, 1]),
            RatioPoint::new(q(1, 6), q(8, 3))
        );
        assert_eq!(point_of(&[2, 2, 2]), RatioPoint::new(q(1, 3), q(23, 12)));
        for n in 6..=40 {
            let p = chern_of_tuple(&DegreeTuple::ones(n)).unwrap().point();
            assert_eq!(p, RatioPoint::new(family_x(n), family_y(n)), "n = {n}");
            assert_eq!(p, corner(CornerIndex::Finite(n)).unwrap(), "n = {n}");
        }
    });
}

#[test]
fn criterion_02_hull_agreement() {
    criterion(
        2,
        "lower hull vertices are exactly the corner chain",
        || {
            let mut expected: Vec<RatioPoint> = (1..=5)
                .chain(6..=40)
                .map(|i| corner(CornerIndex::Finite(i)).unwrap())
                .collect();
            expected.sort();
            let mut lower = HULL40.lower_chain.clone();
            lower.sort();
            assert_eq!(lower, expected);

            let rep = corner_report(&HULL40, &CLOUD40, 40).unwrap();
            assert!(rep.clean());
            assert_eq!(rep.matched.len(), 40);
            assert!(rep.extra_vertices.is_empty());
            assert!(rep.missing.is_empty());
        },
    );
}

#[test]
fn criterion_03_line_constants() {
    criterion(
        3,
        "line table, closed form, and the two discrepancies",
        || {
            let table = [
                (0u32, q(-242, 93), q(515, 93)),
                (1, qi(-42), qi(8)),
                (2, qi(-22), qi(6)),
                (3, qi(-14), qi(5)),
                (4, q(-9, 2), q(41, 12)),
            ];
            for (m, k, b) in table {
                let l = edge_line(LineIndex::Finite(m));
                assert_eq!((l.k, l.b), (k, b), "m = {m}");
            }
            let l5 = edge_line(LineIndex::Finite(5));
            assert_eq!((l5.k, l5.b), (q(-13, 4), qi(3)));
            let l6 = edge_line(LineIndex::Finite(6));
            assert_eq!((l6.k, l6.b), (q(-47, 29), q(66, 29)));

            let p1 = corner(CornerIndex::Finite(1)).unwrap();
            let p_inf = corner(CornerIndex::Infinity).unwrap();
            let chord = Line::through(&p1, &p_inf).unwrap();
            let l0 = edge_line(LineIndex::Finite(0));
            assert_eq!((chord.k, chord.b), (l0.k, l0.b));
            for m in 1..=200u32 {
                let a = corner(CornerIndex::Finite(m)).unwrap();
                let b = corner(CornerIndex::Finite(m + 1)).unwrap();
                let chord = Line::through(&a, &b).unwrap();
                let l = edge_line(LineIndex::Finite(m));
                assert_eq!((chord.k, chord.b), (l.k, l.b), "m = {m}");
            }

            let d = discrepancies();
            assert_eq!(d.len(), 2);
            assert!(d
                .iter()
                .any(|x| x.stated == "-13/5" && x.recomputed == "-13/4"));
            assert!(d.iter().any(|x| x.stated == "Q(3;2,3,3)"));
        },
    );
}

#[test]
fn criterion_04_step1() {
    criterion(
        4,
        "step 1 certificates and the upper supporting line",
        || {
            let r = verify_step1().unwrap();
            assert!(r.pass);
            assert!(r.endpoint_polys_match);
            assert!(r.endpoint_d1.cert().unwrap().is_strict());
            assert_eq!(r.diag_equalities, vec![5]);

            let hp = halfplane_check(&CLOUD40, &edge_line(LineIndex::Finite(0)), Side::Below);
            assert!(hp.ok);
            assert!(hp.violations.is_empty());
            assert_eq!(labels(&hp.on_line), vec!["5"]);
        },
    );
}

#[test]
fn criterion_05_step2() {
    criterion(5, "step 2 Taylor, threshold, symbolic-m, and sweep", || {
        let r = verify_step2(6..=200, 10).unwrap();
        assert!(r.pass);
        assert!(r.thresholds_below_10);
        assert!(r.sweep_ok);
        assert_eq!(r.per_m.len(), 195);
        for p in &r.per_m {
            assert!(p.taylor.is_certified(), "m = {}", p.m);
            assert!(p.case1_ok, "m = {}", p.m);
            if p.m >= 10 {
                assert_eq!(p.taylor_base, p.threshold, "m = {}", p.m);
            } else {
                assert_eq!(p.taylor_base, &p.threshold + qi(1), "m = {}", p.m);
            }
        }

        let s = verify_step2_symbolic_m().unwrap();
        assert!(s.pass);
        assert!(s.denominator_cert.cert().unwrap().is_strict());
        assert!(s.clearing_cert.cert().unwrap().is_strict());
        for c in &s.value_certs {
            assert!(c.cert().unwrap().is_strict());
        }
    });
}

#[test]
fn criterion_06_step3() {
    criterion(
        6,
        "step 3 sweep, equality sets, and the x > 4/9 tail",
        || {
            let r = verify_step3(&CLOUD40).unwrap();
            assert!(r.pass);
            assert!(r.sweep_ok);
            assert!(r.coverage_ok);
            assert!(r.tail_cert.cert().unwrap().is_strict());

            let want: [(u32, &[&str]); 5] = [
                (1, &["5", "1,4", "2,3"]),
                (2, &["2,3", "1,2,2"]),
                (3, &["1,2,2", "1,1,1,2", "1,1,1,1,1"]),
                (4, &["1,1,1,1,1", "2,2,2"]),
                (5, &["2,2,2", "1,1,2,2", "1,1,1,1,2", "1,1,1,1,1,1"]),
            ];
            assert_eq!(r.sweep_on_line.len(), want.len());
            for ((i, on), (wi, wl)) in r.sweep_on_line.iter().zip(&want) {
                assert_eq!(i, wi);
                assert_eq!(labels(on), *wl, "line {i}");
            }
            assert_eq!(labels(&r.x_boundary_witnesses), vec!["1,1,1,1,1,1"]);

            let bound = q(4, 9);
            for (t, c) in &CLOUD40.entries {
                if t.s1() >= 10 {
                    assert!(c.x > bound, "tuple {t}");
                }
            }
        },
    );
}

#[test]
fn criterion_07_cone_certificates() {
    criterion(7, "cone edge identities and membership verdicts", || {
        let cone = Cone::new(200).unwrap();
        let e0 = cone.edges.edge(EdgeIndex::E0).unwrap();
        let e1 = cone.edges.edge(EdgeIndex::Finite(1)).unwrap();
        let e_inf = cone.edges.edge(EdgeIndex::Infinity).unwrap();
        assert_eq!(
            e0.scale(&q(744, 229)).add(&e1.scale(&q(515, 229))),
            ConeVector::new(qi(-86), qi(0), qi(1))
        );
        assert_eq!(
            e0.scale(&q(93, 422)).add(&e_inf.scale(&q(515, 422))),
            ConeVector::new(q(1, 6), qi(0), qi(-1))
        );

        assert!(
            cone.contains(&ConeVector::new(qi(-86), qi(0), qi(1)))
                .member
        );
        assert!(
            cone.contains(&ConeVector::new(q(1, 6), qi(0), qi(-1)))
                .member
        );
        let v = cone.contains(&ConeVector::new(qi(0), qi(0), qi(1)));
        assert!(!v.member);
        assert_eq!(v.counterexample.unwrap().label(), "5");
    });
}

#[test]
fn criterion_08_corollary_sweep() {
    criterion(
        8,
        "corollary inequalities over the full enumeration",
        || {
            let cone = Cone::new(200).unwrap();
            let r = corollary_check(&cone, &CLOUD40).unwrap();
            assert!(r.pass);
            assert!(r.identity1 && r.identity2);
            assert!(r.sextic_bound_ok);
            assert_eq!(labels(&r.sextic_equalities), vec!["5"]);
            assert!(r.sixth_strict);
            assert!(r.eighteenth_strict);
        },
    );
}

#[test]
fn criterion_09_reduction_oracle() {
    criterion(9, "integer minima dominate equal-degree minima", || {
        let set = edges(12).unwrap();
        let mut triples = vec![set.edge(EdgeIndex::E0).unwrap().clone()];
        for j in 1..=12 {
            triples.push(set.edge(EdgeIndex::Finite(j)).unwrap().clone());
        }
        let mut sampled = 0usize;
        for m in 5..=30u32 {
            let mut mins = Vec::new();
            for v in &triples {
                let prob = ReductionProblem {
                    m,
                    lambda: v.l1.clone(),
                    mu: v.l2.clone(),
                    nu: v.l3.clone(),
                };
                let out = reduction_check(&prob).unwrap();
                assert!(out.holds, "m = {m}, functional {v}");
                mins.push((prob, out.equal_degree_min));
            }
            let count = if m == 5 { 400 } else { 384 };
            for tuple in sample_real_tuples(m, count, 0) {
                for (prob, min) in &mins {
                    let val = eval_on_rational_tuple(prob, &tuple).unwrap();
                    assert!(val >= *min, "m = {m}");
                }
                sampled += 1;
            }
        }
        assert_eq!(sampled, 10_000);
    });
}

#[test]
fn criterion_10_property_suites() {
    criterion(
        10,
        "hull invariances, revalidation, canonicality, Yau",
        || {
            // hull idempotence and permutation invariance, seeded
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            for round in 0..5 {
                let mut pts: Vec<RatioPoint> = (0..300)
                    .map(|_| {
                        RatioPoint::new(
                            q(rng.gen_range(-50..50), rng.gen_range(1..20)),
                            q(rng.gen_range(-50..50), rng.gen_range(1..20)),
                        )
                    })
                    .collect();
                let h = convex_hull(&pts);
                assert!(h.contains_all(&pts), "round {round}");
                assert_eq!(convex_hull(&h.vertices).vertices, h.vertices);
                pts.shuffle(&mut rng);
                assert_eq!(convex_hull(&pts).vertices, h.vertices);
            }
            assert_eq!(convex_hull(&HULL40.vertices).vertices, HULL40.vertices);

            // certificate re-validation at 100 fresh points each
            let s1 = verify_step1().unwrap();
            assert!(s1.endpoint_d1.cert().unwrap().revalidate(100, 11));
            assert!(s1.endpoint_diag.cert().unwrap().revalidate(100, 12));
            let s3 = verify_step3(&enumerate_points(10).unwrap()).unwrap();
            assert!(s3.tail_cert.cert().unwrap().revalidate(100, 13));
            let sym = verify_step2_symbolic_m().unwrap();
            for c in &sym.value_certs {
                assert!(c.cert().unwrap().revalidate(100, 14));
            }
            let g = build_g(25).unwrap();
            let taylor = taylor_positivity(&g, &threshold(25).unwrap()).unwrap();
            assert!(taylor.cert().unwrap().revalidate(100, 15));

            // canonical rationals out of every public constructor touched here
            for t in partitions(12) {
                let c = chern_of_tuple(&t).unwrap();
                for v in [&c.c1, &c.c2, &c.c3, &c.c1_cubed, &c.c1c2, &c.x, &c.y] {
                    assert!(is_canonical(v));
                }
            }
            for m in 1..=40 {
                let p = corner(CornerIndex::Finite(m)).unwrap();
                assert!(is_canonical(&p.x) && is_canonical(&p.y));
                let l = edge_line(LineIndex::Finite(m));
                assert!(is_canonical(&l.k) && is_canonical(&l.b));
            }
            for m in 6..=40 {
                assert!(is_canonical(&threshold(m).unwrap()));
            }

            // Yau inequality over the full enumeration
            for (t, c) in &CLOUD40.entries {
                assert!(yau_holds(c), "tuple {t}");
            }
        },
    );
}
