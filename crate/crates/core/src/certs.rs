//! Re-validatable positivity certificates: integer positivity on [N, inf)
//! via an exact root bound plus a finite sign scan, and cubic positivity on
//! a rational ray via Taylor data.

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rational::Q;
use num::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Proof that a polynomial is >= 0 at every integer >= `from`: the leading
/// coefficient is positive, `root_bound` dominates every real root magnitude,
/// and all integers in [from, ceil(root_bound)] were scanned with values >= 0.
#[derive(Debug, Clone)]
pub struct IntegerPositivityCert {
    pub poly: UniPoly,
    pub from: i64,
    pub root_bound: Q,
    pub scanned: Vec<(i64, Q)>,
    pub leading_sign: i8,
}

impl IntegerPositivityCert {
    /// Strict positivity on the scanned range (and hence on the whole ray,
    /// since beyond the root bound the positive leading term dominates).
    pub fn is_strict(&self) -> bool {
        self.scanned.iter().all(|(_, v)| v.is_positive())
    }

    /// Integers in the scanned range where the polynomial vanishes.
    pub fn zeros(&self) -> Vec<i64> {
        self.scanned
            .iter()
            .filter(|(_, v)| v.is_zero())
            .map(|(k, _)| *k)
            .collect()
    }

    /// Independent spot check: evaluate at `count` seeded integers >= from.
    pub fn revalidate(&self, count: usize, seed: u64) -> bool {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count).all(|_| {
            let k = self.from + rng.gen_range(0..10_000i64);
            !self.poly.eval_int(k).is_negative()
        })
    }
}

/// Outcome of the decision procedure: a certificate, or a concrete integer
/// where the polynomial goes negative.
#[derive(Debug, Clone)]
pub enum Positivity {
    Certified(IntegerPositivityCert),
    CounterexampleAt(i64),
}

impl Positivity {
    pub fn cert(&self) -> Option<&IntegerPositivityCert> {
        match self {
            Positivity::Certified(c) => Some(c),
            Positivity::CounterexampleAt(_) => None,
        }
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, Positivity::Certified(_))
    }
}

/// Decide whether poly(k) >= 0 for every integer k >= n.
///
/// A positive leading coefficient settles the sign beyond the root bound;
/// the finitely many integers up to the bound are scanned exactly.
pub fn integer_positivity(poly: &UniPoly, n: i64) -> Result<Positivity> {
    if poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let lead = poly.leading().expect("nonzero");
    if lead.is_negative() {
        return Err(Error::NegativeLeadingCoefficient);
    }
    let root_bound = poly.root_bound().expect("nonzero");
    let hi = ceil_to_i64(&root_bound);
    let mut scanned = Vec::new();
    for k in n..=hi.max(n - 1) {
        let v = poly.eval_int(k);
        if v.is_negative() {
            return Ok(Positivity::CounterexampleAt(k));
        }
        scanned.push((k, v));
    }
    Ok(Positivity::Certified(IntegerPositivityCert {
        poly: poly.clone(),
        from: n,
        root_bound,
        scanned,
        leading_sign: 1,
    }))
}

fn ceil_to_i64(v: &Q) -> i64 {
    v.ceil().to_integer().to_i64().unwrap_or(i64::MAX)
}

/// Taylor data certifying that a cubic with this expansion at `base` stays
/// strictly positive on [base, inf): value and all three derivatives > 0.
#[derive(Debug, Clone)]
pub struct TaylorPositivityCert {
    pub cubic: UniPoly,
    pub base: Q,
    /// value, first, second, third derivative at `base`.
    pub values: [Q; 4],
}

impl TaylorPositivityCert {
    /// Independent spot check: evaluate at `count` seeded rationals >= base.
    pub fn revalidate(&self, count: usize, seed: u64) -> bool {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count).all(|_| {
            let offset = Q::new(
                rng.gen_range(0..1 << 20).into(),
                rng.gen_range(1..1 << 10).into(),
            );
            self.cubic.eval(&(&self.base + offset)).is_positive()
        })
    }
}

#[derive(Debug, Clone)]
pub enum TaylorOutcome {
    Certified(TaylorPositivityCert),
    /// The four Taylor values, at least one of which is not strictly positive.
    Failure {
        values: [Q; 4],
    },
}

impl TaylorOutcome {
    pub fn cert(&self) -> Option<&TaylorPositivityCert> {
        match self {
            TaylorOutcome::Certified(c) => Some(c),
            TaylorOutcome::Failure { .. } => None,
        }
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, TaylorOutcome::Certified(_))
    }
}

/// For degree <= 3, positivity of p, p', p'', p''' at s0 certifies p > 0 on
/// [s0, inf): every Taylor coefficient at s0 is positive and the expansion
/// is exact.
pub fn taylor_positivity(cubic: &UniPoly, s0: &Q) -> Result<TaylorOutcome> {
    match cubic.degree() {
        Some(d) if d > 3 => return Err(Error::NotCubic { degree: d }),
        None => return Err(Error::ZeroPolynomial),
        _ => {}
    }
    let d1 = cubic.derivative();
    let d2 = d1.derivative();
    let d3 = d2.derivative();
    let values = [cubic.eval(s0), d1.eval(s0), d2.eval(s0), d3.eval(s0)];
    if values.iter().all(Signed::is_positive) {
        Ok(TaylorOutcome::Certified(TaylorPositivityCert {
            cubic: cubic.clone(),
            base: s0.clone(),
            values,
        }))
    } else {
        Ok(TaylorOutcome::Failure { values })
    }
}

/// Render a one-line digest of an integer-positivity outcome for reports.
pub fn positivity_digest(p: &Positivity, var: &str) -> String {
    match p {
        Positivity::Certified(c) => format!(
            "{} >= 0 for {} >= {} (root bound {}, scanned {} integers{})",
            c.poly.render(var),
            var,
            c.from,
            crate::rational::fmt_q(&c.root_bound),
            c.scanned.len(),
            if c.is_strict() {
                ", strictly positive".to_string()
            } else {
                format!(", zeros at {:?}", c.zeros())
            }
        ),
        Positivity::CounterexampleAt(k) => format!("counterexample at {var} = {k}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::rational::qi;

    #[test]
    fn step_one_quadratic_is_certified() {
        let p = UniPoly::from_ints(&[3500, -3593, 633]);
        let r = integer_positivity(&p, 5).unwrap();
        let c = r.cert().expect("certificate");
        assert!(c.is_strict());
        // both roots lie below 5: value at 5 is already positive
        assert_eq!(p.eval_int(5), qi(1360));
        assert!(c.revalidate(100, 1));
    }

    #[test]
    fn step_one_cubic_has_an_equality_witness() {
        let p = UniPoly::from_ints(&[700, -525, -103, 36]);
        let r = integer_positivity(&p, 5).unwrap();
        let c = r.cert().expect("certificate");
        assert!(!c.is_strict());
        assert_eq!(c.zeros(), vec![5]);
        assert!(c.revalidate(100, 2));
    }

    #[test]
    fn counterexamples_and_errors() {
        let p = UniPoly::from_ints(&[-10, 1]); // s - 10
        assert!(matches!(
            integer_positivity(&p, 5).unwrap(),
            Positivity::CounterexampleAt(5)
        ));
        assert!(matches!(
            integer_positivity(&UniPoly::from_ints(&[10, -1]), 0),
            Err(Error::NegativeLeadingCoefficient)
        ));
        assert!(matches!(
            integer_positivity(&UniPoly::zero(), 0),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn scan_covers_the_root_bound_range() {
        let p = UniPoly::from_ints(&[120, -60, 5]); // 5s^2 - 60s + 120, roots ~2.54, ~9.46
        match integer_positivity(&p, 10).unwrap() {
            Positivity::Certified(c) => {
                assert!(c.root_bound >= qi(9));
                let first = c.scanned.first().unwrap();
                assert_eq!(first.0, 10);
                assert_eq!(first.1, qi(20));
                assert!(c.is_strict());
            }
            Positivity::CounterexampleAt(k) => panic!("unexpected counterexample at {k}"),
        }
        // the same polynomial fails from 3
        assert!(matches!(
            integer_positivity(&p, 3).unwrap(),
            Positivity::CounterexampleAt(3)
        ));
    }

    #[test]
    fn taylor_certificates() {
        // (s - 1)^3 + 1 expanded: s^3 - 3s^2 + 3s
        let p = UniPoly::from_ints(&[0, 3, -3, 1]);
        let r = taylor_positivity(&p, &qi(2)).unwrap();
        let c = r.cert().expect("certificate");
        assert_eq!(c.values[0], qi(2));
        assert!(c.revalidate(100, 3));

        // s^3 - s at 0 fails (value 0 is not strictly positive)
        let p = UniPoly::from_ints(&[0, -1, 0, 1]);
        match taylor_positivity(&p, &qi(0)).unwrap() {
            TaylorOutcome::Failure { values } => assert_eq!(values[0], qi(0)),
            TaylorOutcome::Certified(_) => panic!("must fail"),
        }

        assert!(matches!(
            taylor_positivity(&UniPoly::from_ints(&[1, 0, 0, 0, 1]), &qi(0)),
            Err(Error::NotCubic { degree: 4 })
        ));
    }

    #[test]
    fn taylor_on_a_shifted_base() {
        let p = UniPoly::from_ints(&[700, -525, -103, 36]);
        // strictly positive from 6 onward
        assert!(taylor_positivity(&p, &qi(6)).unwrap().is_certified());
        // at the zero s = 5 the value vanishes
        assert!(!taylor_positivity(&p, &qi(5)).unwrap().is_certified());
        assert!(taylor_positivity(&p, &q(11, 2)).unwrap().is_certified());
    }
}
