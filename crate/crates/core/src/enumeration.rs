//! Enumeration of admissible degree tuples, the brute-force reduction oracle,
//! and seeded rational sampling on the simplex {d_i >= 1, sum d_i = m}.

use crate::chern::{
    chern_numbers, chern_numbers_equal, chern_of_tuple, ChernData, DegreeTuple, PowerSums,
    RatioPoint,
};
use crate::error::{Error, Result};
use crate::rational::{qi, qu, Q};
use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// All partitions of `n` into parts >= 1, emitted by part count and then in
/// ascending lexicographic order of the nondecreasing tuples:
/// 5 -> (5), (1,4), (2,3), (1,1,3), (1,2,2), (1,1,1,2), (1,1,1,1,1).
pub fn partitions(n: u32) -> PartitionIter {
    PartitionIter {
        n,
        k: 0,
        current: None,
    }
}

pub struct PartitionIter {
    n: u32,
    k: u32,
    current: Option<Vec<u32>>,
}

impl PartitionIter {
    /// First partition of n into exactly k parts: (1, ..., 1, n-k+1).
    fn first_of_k(n: u32, k: u32) -> Vec<u32> {
        let mut v = vec![1u32; k as usize];
        v[k as usize - 1] = n - k + 1;
        v
    }

    /// In-place successor among nondecreasing k-tuples with fixed sum;
    /// false when the current tuple is the last one.
    fn advance(n: u32, a: &mut [u32]) -> bool {
        let k = a.len();
        let mut prefix: u32 = a.iter().sum::<u32>() - a[k - 1];
        // find the rightmost position whose increment leaves room for a
        // nondecreasing completion
        for j in (0..k - 1).rev() {
            prefix -= a[j];
            let rem = n - prefix;
            let v = a[j] + 1;
            if rem >= v * (k - j) as u32 {
                for slot in a.iter_mut().take(k - 1).skip(j) {
                    *slot = v;
                }
                a[k - 1] = rem - v * (k - j - 1) as u32;
                return true;
            }
        }
        false
    }
}

impl Iterator for PartitionIter {
    type Item = DegreeTuple;

    fn next(&mut self) -> Option<DegreeTuple> {
        if self.n == 0 {
            return None;
        }
        loop {
            match &mut self.current {
                None => {
                    self.k += 1;
                    if self.k > self.n {
                        return None;
                    }
                    let v = Self::first_of_k(self.n, self.k);
                    self.current = Some(v.clone());
                    return Some(DegreeTuple::new(v).expect("parts >= 1 by construction"));
                }
                Some(a) => {
                    if Self::advance(self.n, a) {
                        let v = a.clone();
                        return Some(DegreeTuple::new(v).expect("parts >= 1 by construction"));
                    }
                    self.current = None;
                }
            }
        }
    }
}

/// Partition counter via the Euler pentagonal-number recurrence; an
/// independent cross-check for the iterator.
pub fn partition_count(n: u32) -> u64 {
    let n = n as usize;
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut acc = 0i64;
        let mut k = 1i64;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            let g2 = k * (3 * k + 1) / 2;
            if g1 as usize > m {
                break;
            }
            let sign = if k % 2 == 0 { -1 } else { 1 };
            acc += sign * p[m - g1 as usize];
            if g2 as usize <= m {
                acc += sign * p[m - g2 as usize];
            }
            k += 1;
        }
        p[m] = acc;
    }
    p[n] as u64
}

/// Every admissible tuple with 5 <= s1 <= s1_max, paired with its exact
/// Chern data, in deterministic order (s1 ascending, then partition order).
#[derive(Debug, Clone)]
pub struct PointCloud {
    pub s1_max: u32,
    pub entries: Vec<(DegreeTuple, ChernData)>,
}

impl PointCloud {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn points(&self) -> Vec<RatioPoint> {
        self.entries.iter().map(|(_, c)| c.point()).collect()
    }
}

pub fn enumerate_points(s1_max: u32) -> Result<PointCloud> {
    if s1_max < 5 {
        return Err(Error::BudgetTooSmall {
            got: s1_max,
            min: 5,
        });
    }
    let mut entries = Vec::new();
    for s1 in 5..=s1_max {
        for t in partitions(s1) {
            let c = chern_of_tuple(&t)?;
            entries.push((t, c));
        }
    }
    Ok(PointCloud { s1_max, entries })
}

/// Minimize lambda c1^3 + mu c1c2 + nu c3 over all integer tuples with
/// s1 = m, and compare against the equal-degree relaxation (n parts of
/// d = m/n for n = 1..m).
#[derive(Debug, Clone)]
pub struct ReductionProblem {
    pub m: u32,
    pub lambda: Q,
    pub mu: Q,
    pub nu: Q,
}

impl ReductionProblem {
    pub fn eval(&self, c: &ChernData) -> Q {
        &self.lambda * &c.c1_cubed + &self.mu * &c.c1c2 + &self.nu * &c.c3
    }
}

#[derive(Debug, Clone)]
pub struct ReductionOutcome {
    /// integer_min >= equal_degree_min, as the reduction argument predicts.
    pub holds: bool,
    pub integer_min: Q,
    pub equal_degree_min: Q,
    /// All integer tuples attaining integer_min.
    pub integer_witnesses: Vec<DegreeTuple>,
    /// All (n, d) pairs attaining equal_degree_min.
    pub equal_degree_witnesses: Vec<(u32, Q)>,
}

pub fn reduction_check(p: &ReductionProblem) -> Result<ReductionOutcome> {
    if p.m < 5 {
        return Err(Error::BudgetTooSmall { got: p.m, min: 5 });
    }
    let mut integer_min: Option<Q> = None;
    let mut integer_witnesses = Vec::new();
    for t in partitions(p.m) {
        let v = p.eval(&chern_of_tuple(&t)?);
        match &integer_min {
            Some(best) if v > *best => {}
            Some(best) if v == *best => integer_witnesses.push(t),
            _ => {
                integer_min = Some(v);
                integer_witnesses = vec![t];
            }
        }
    }
    let mut equal_min: Option<Q> = None;
    let mut equal_witnesses = Vec::new();
    for n in 1..=p.m {
        let d = qu(p.m) / qu(n);
        let v = p.eval(&chern_numbers_equal(n, &d)?);
        match &equal_min {
            Some(best) if v > *best => {}
            Some(best) if v == *best => equal_witnesses.push((n, d)),
            _ => {
                equal_min = Some(v);
                equal_witnesses = vec![(n, d)];
            }
        }
    }
    let integer_min = integer_min.expect("m >= 5 has partitions");
    let equal_degree_min = equal_min.expect("n = 1 always admissible");
    Ok(ReductionOutcome {
        holds: integer_min >= equal_degree_min,
        integer_min,
        equal_degree_min,
        integer_witnesses,
        equal_degree_witnesses: equal_witnesses,
    })
}

/// Deterministic dyadic-rational tuples on the simplex {d_i >= 1, sum = m}:
/// a seeded part count n in [1, m], then n - 1 sorted cuts of [0, 2^16]
/// splitting the excess m - n.
pub fn sample_real_tuples(m: u32, count: usize, seed: u64) -> Vec<Vec<Q>> {
    const SCALE: u64 = 1 << 16;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(m as u64);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let n = rng.gen_range(1..=m) as usize;
        let mut cuts: Vec<u64> = (0..n - 1).map(|_| rng.gen_range(0..=SCALE)).collect();
        cuts.sort_unstable();
        cuts.insert(0, 0);
        cuts.push(SCALE);
        let excess = qu(m) - qi(n as i64);
        let tuple: Vec<Q> = (0..n)
            .map(|i| qi(1) + &excess * qi((cuts[i + 1] - cuts[i]) as i64) / qi(SCALE as i64))
            .collect();
        debug_assert_eq!(tuple.iter().fold(Q::zero(), |a, b| a + b), qu(m));
        out.push(tuple);
    }
    out
}

/// Power sums of a rational-valued tuple, for functional evaluation on samples.
pub fn power_sums_of_rationals(tuple: &[Q]) -> PowerSums {
    let mut s1 = Q::zero();
    let mut s2 = Q::zero();
    let mut s3 = Q::zero();
    for d in tuple {
        s1 += d;
        s2 += d * d;
        s3 += d * d * d;
    }
    PowerSums { s1, s2, s3 }
}

/// Functional value of a reduction problem on a rational tuple.
pub fn eval_on_rational_tuple(p: &ReductionProblem, tuple: &[Q]) -> Result<Q> {
    Ok(p.eval(&chern_numbers(&power_sums_of_rationals(tuple))?))
}
