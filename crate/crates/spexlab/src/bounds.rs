//! Closed-form bound calculators, used as cross-checks on search
//! results and as a standalone bound-table generator. Rational inputs
//! are evaluated exactly; only square roots go through f64.

use crate::construct::CycleSpec;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Parameters for the average-degree containment condition: bipartite H
/// with sides a, b, max degree r on side B, host size n, host average
/// degree d.
#[derive(Clone, Debug)]
pub struct BoundQuery {
    pub a: u64,
    pub b: u64,
    pub r: u64,
    pub n: u64,
    pub d: f64,
}

impl BoundQuery {
    fn validate(&self) -> Result<()> {
        if self.a < 1 || self.b < 1 || self.r < 1 {
            return Err(Error::InvalidParameter("a, b, r must be >= 1".into()));
        }
        if !(0.0..=(self.n as f64 - 1.0)).contains(&self.d) {
            return Err(Error::InvalidParameter(format!(
                "average degree d = {} outside [0, n-1]",
                self.d
            )));
        }
        Ok(())
    }
}

fn binomial(n: u64, r: u64) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..r {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// True iff d^r / n^(r-1) - C(n,r) ((a+b-1)/n)^r > a - 1, evaluated in
/// exact rational arithmetic. True implies every n-vertex graph of
/// average degree d contains H.
pub fn alon_condition(q: &BoundQuery) -> Result<bool> {
    q.validate()?;
    let d = BigRational::from_float(q.d)
        .ok_or_else(|| Error::InvalidParameter("d must be finite".into()))?;
    let n = BigRational::from_integer(BigInt::from(q.n));
    let r = q.r as usize;
    let mut dr = BigRational::one();
    let mut nr1 = BigRational::one();
    for _ in 0..r {
        dr *= &d;
    }
    for _ in 0..r - 1 {
        nr1 *= &n;
    }
    let lhs1 = dr / nr1;
    let ratio = BigRational::from_integer(BigInt::from(q.a + q.b - 1)) / &n;
    let mut ratio_r = BigRational::one();
    for _ in 0..r {
        ratio_r *= &ratio;
    }
    let lhs2 = BigRational::from_integer(binomial(q.n, q.r)) * ratio_r;
    let rhs = BigRational::from_integer(BigInt::from(q.a - 1));
    Ok(lhs1 - lhs2 > rhs)
}

/// Upper bound on ex(n, C_{2k1,...,2kt}):
/// (1/2) (kappa + (2 kappa + t)^2 / 2)^(1/2) n^(3/2). The subtracted
/// O(1/n) term of the published bound carries no explicit constant and
/// is dropped, which only loosens the bound upward.
pub fn aks_bound(n: usize, spec: &CycleSpec) -> f64 {
    let kappa = spec.kappa() as f64;
    let t = spec.t() as f64;
    0.5 * (kappa + (2.0 * kappa + t).powi(2) / 2.0).sqrt() * (n as f64).powf(1.5)
}

/// Edge bound for graphs with no path on ell vertices: (ell-2) n / 2.
pub fn erdos_gallai_bound(n: usize, ell: usize) -> Result<f64> {
    if ell < 2 {
        return Err(Error::InvalidParameter("erdos_gallai_bound: need ell >= 2".into()));
    }
    Ok((ell as f64 - 2.0) * n as f64 / 2.0)
}

/// Strict upper bound on sum of squared degrees over free graphs:
/// (4 kappa + t)(n-1) n. Exact in u64.
pub fn degree_square_bound(n: usize, spec: &CycleSpec) -> u64 {
    (4 * spec.kappa() + spec.t()) as u64 * (n as u64).saturating_sub(1) * n as u64
}

/// Threshold on 2 e(U) + e(U, W) above which t disjoint paths with ends
/// in U must exist: (4 kappa + t - 2)(|U| + n) / 2.
pub fn bipartition_edge_bound(n_u: usize, n_total: usize, spec: &CycleSpec) -> Result<f64> {
    if n_u > n_total {
        return Err(Error::InvalidParameter(format!(
            "bipartition_edge_bound: |U| = {n_u} exceeds n = {n_total}"
        )));
    }
    Ok((4 * spec.kappa() + spec.t() - 2) as f64 * (n_u + n_total) as f64 / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alon_condition_worked_example() {
        // a=b=2, r=2, n=100, d=50: 2500/100 - 4950 (3/100)^2 = 20.545 > 1
        let q = BoundQuery { a: 2, b: 2, r: 2, n: 100, d: 50.0 };
        assert!(alon_condition(&q).unwrap());
    }

    #[test]
    fn alon_condition_zero_degree_false() {
        let q = BoundQuery { a: 2, b: 2, r: 2, n: 100, d: 0.0 };
        assert!(!alon_condition(&q).unwrap());
    }

    #[test]
    fn alon_condition_monotone_in_d() {
        let (a, b, r, n) = (2u64, 3u64, 2u64, 50u64);
        let mut last = false;
        for di in 0..=49 {
            let q = BoundQuery { a, b, r, n, d: di as f64 };
            let now = alon_condition(&q).unwrap();
            assert!(!(last && !now), "condition flipped back off at d = {di}");
            last = now;
        }
        assert!(last, "condition should hold at d = n-1");
    }

    #[test]
    fn aks_bound_examples() {
        let spec = CycleSpec::new(vec![2]).unwrap();
        let want = 0.5 * (1.0f64 + 9.0 / 2.0).sqrt() * 1000.0;
        assert!((aks_bound(100, &spec) - want).abs() < 1e-9);
        assert!(aks_bound(101, &spec) > aks_bound(100, &spec));
    }

    #[test]
    fn erdos_gallai_examples() {
        assert_eq!(erdos_gallai_bound(6, 4).unwrap(), 6.0);
        assert_eq!(erdos_gallai_bound(10, 3).unwrap(), 5.0);
        assert!(erdos_gallai_bound(10, 1).is_err());
    }

    #[test]
    fn degree_square_examples() {
        let spec = CycleSpec::new(vec![2]).unwrap();
        assert_eq!(degree_square_bound(7, &spec), 5 * 6 * 7);
        let spec = CycleSpec::new(vec![2, 2]).unwrap();
        assert_eq!(degree_square_bound(7, &spec), 420);
        // star is C4-free with sum d^2 = n(n-1) + (n-1) < 5(n-1)n
        for n in 2..20u64 {
            let star_sum = (n - 1) * (n - 1) + (n - 1);
            assert!(star_sum < 5 * (n - 1) * n);
        }
    }

    #[test]
    fn bipartition_bound_examples() {
        let spec = CycleSpec::new(vec![2]).unwrap();
        assert_eq!(bipartition_edge_bound(3, 10, &spec).unwrap(), 19.5);
        assert!(
            bipartition_edge_bound(4, 10, &spec).unwrap()
                > bipartition_edge_bound(3, 10, &spec).unwrap()
        );
        assert!(bipartition_edge_bound(11, 10, &spec).is_err());
    }
}
