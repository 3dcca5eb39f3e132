//! Exact integer/rational machinery: Faddeev-LeVerrier characteristic
//! polynomials, Sturm chains, and certified isolation of the largest
//! real root. Only used at tie-breaking scale (matrices up to 12x12).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense polynomial over the rationals, coefficients low-to-high.
/// Trailing zeros trimmed; the zero polynomial is an empty vec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly(pub Vec<BigRational>);

impl RatPoly {
    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        let mut p = RatPoly(
            coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        );
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> RatPoly {
        if self.0.len() <= 1 {
            return RatPoly(vec![]);
        }
        RatPoly(
            self.0[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i + 1)))
                .collect(),
        )
    }

    /// Quotient and remainder of self / d (d nonzero).
    fn divmod(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero());
        let mut r = self.0.clone();
        let dd = d.degree();
        let lead = &d.0[dd];
        let mut q = vec![BigRational::zero(); self.0.len().saturating_sub(dd)];
        while r.len() > dd {
            let rd = r.len() - 1;
            let factor = &r[rd] / lead;
            let shift = rd - dd;
            for (i, c) in d.0.iter().enumerate() {
                let v = &r[shift + i] - &factor * c;
                r[shift + i] = v;
            }
            q[shift] = factor;
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        let mut quot = RatPoly(q);
        quot.trim();
        let mut rem = RatPoly(r);
        rem.trim();
        (quot, rem)
    }

    /// Remainder of self / d (d nonzero).
    fn rem(&self, d: &RatPoly) -> RatPoly {
        self.divmod(d).1
    }

    /// Scales to integer coefficients with content 1 and positive
    /// leading coefficient preserved in sign. Positive scaling only, so
    /// Sturm sign data is unchanged.
    fn normalize_scale(&mut self) {
        if self.is_zero() {
            return;
        }
        let mut denom_lcm = BigInt::one();
        for c in &self.0 {
            denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
        }
        let ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|c| c.numer() * &denom_lcm / c.denom())
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = num_integer::gcd(content, c.abs());
        }
        if content.is_zero() {
            content = BigInt::one();
        }
        self.0 = ints
            .into_iter()
            .map(|c| BigRational::from_integer(c / &content))
            .collect();
    }

    /// Monic gcd with `other` (Euclid over the rationals).
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
            a.normalize_scale();
            b.normalize_scale();
        }
        a
    }

    /// Cauchy bound: every real root has |x| < bound.
    pub fn root_bound(&self) -> BigRational {
        assert!(!self.is_zero());
        let lead = self.0.last().unwrap().abs();
        let max = self
            .0
            .iter()
            .map(Signed::abs)
            .fold(BigRational::zero(), |a, b| if b > a { b } else { a });
        BigRational::one() + max / lead
    }
}

/// Sturm chain of a squarefree-or-not polynomial; counts distinct real
/// roots in half-open intervals.
pub struct SturmChain {
    polys: Vec<RatPoly>,
}

impl SturmChain {
    pub fn new(p: &RatPoly) -> Self {
        // multiple roots make the whole chain vanish at a root, which
        // breaks variation counts at bisection points landing on one;
        // the squarefree part has the same distinct roots
        let mut p = p.clone();
        if p.degree() >= 2 {
            let g = p.gcd(&p.derivative());
            if g.degree() >= 1 {
                p = p.divmod(&g).0;
            }
        }
        let mut polys = Vec::new();
        let mut a = p.clone();
        a.normalize_scale();
        let mut b = p.derivative();
        b.normalize_scale();
        polys.push(a.clone());
        while !b.is_zero() {
            let mut r = a.rem(&b);
            for c in r.0.iter_mut() {
                *c = -c.clone();
            }
            r.normalize_scale();
            polys.push(b.clone());
            a = b;
            b = r;
        }
        SturmChain { polys }
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut prev: i8 = 0;
        for p in &self.polys {
            let v = p.eval(x);
            let s: i8 = if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            };
            if s != 0 {
                if prev != 0 && s != prev {
                    count += 1;
                }
                prev = s;
            }
        }
        count
    }

    /// Number of distinct real roots in (a, b], a < b.
    pub fn count_roots(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a) - self.variations(b)
    }
}

/// Isolating interval (lo, hi] for the largest real root of `p`, or
/// None when p has no real root. `min_width` stops the bisection.
pub fn largest_root_interval(
    p: &RatPoly,
    min_width: &BigRational,
) -> Option<(BigRational, BigRational, SturmChain)> {
    let chain = SturmChain::new(p);
    let bound = p.root_bound();
    let mut lo = -bound.clone();
    let mut hi = bound;
    if chain.count_roots(&lo, &hi) == 0 {
        return None;
    }
    let two = BigRational::from_integer(BigInt::from(2));
    loop {
        let isolated = chain.count_roots(&lo, &hi) == 1;
        if isolated && (&hi - &lo) < *min_width {
            return Some((lo, hi, chain));
        }
        let mid = (&lo + &hi) / &two;
        if chain.count_roots(&mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

/// One bisection step keeping the largest root inside (lo, hi].
pub fn shrink_step(chain: &SturmChain, lo: &mut BigRational, hi: &mut BigRational) {
    let two = BigRational::from_integer(BigInt::from(2));
    let mid = (&*lo + &*hi) / two;
    if chain.count_roots(&mid, hi) >= 1 {
        *lo = mid;
    } else {
        *hi = mid;
    }
}

/// Integer characteristic polynomial det(xI - A) of an integer matrix,
/// by the Faddeev-LeVerrier recurrence (all divisions exact).
/// Returned monic, coefficients low-to-high, length n+1.
pub fn charpoly(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = a.len();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    if n == 0 {
        return coeffs;
    }
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    for k in 1..=n {
        // m <- A * m
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for l in 0..n {
                if a[i][l].is_zero() {
                    continue;
                }
                for j in 0..n {
                    let add = &a[i][l] * &m[l][j];
                    next[i][j] += add;
                }
            }
        }
        m = next;
        let trace: BigInt = (0..n).map(|i| m[i][i].clone()).sum();
        let c = -trace / BigInt::from(k);
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += &c;
        }
        coeffs[n - k] = c;
    }
    coeffs
}

/// Adjacency-matrix characteristic polynomial of a dense graph.
pub fn charpoly_adjacency(g: &crate::graph::Graph) -> crate::Result<Vec<BigInt>> {
    let rows = g.dense_rows()?;
    let n = g.n();
    let a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigInt::from((rows[i] >> j & 1) as u32))
                .collect()
        })
        .collect();
    Ok(charpoly(&a))
}

/// f64 -> exact rational (f64 values are dyadic rationals).
pub fn rational_from_f64(x: f64) -> Option<BigRational> {
    BigRational::from_float(x)
}
