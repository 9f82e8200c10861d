//! Real root counting and isolation with Sturm sequences.

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::univariate::{rat, UnivariatePolynomial};
use crate::error::{Error, Result};

/// Closed rational interval `[lo, hi]`; `lo == hi` marks an exact rational root.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RationalInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi);
        Self { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        Self { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / rat(2)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&BigRational::zero())
    }

    pub fn overlaps(&self, o: &Self) -> bool {
        self.lo <= o.hi && o.lo <= self.hi
    }

    pub fn intersect(&self, o: &Self) -> Option<Self> {
        let lo = (&self.lo).max(&o.lo).clone();
        let hi = (&self.hi).min(&o.hi).clone();
        (lo <= hi).then_some(Self { lo, hi })
    }

    pub fn midpoint_f64(&self) -> f64 {
        to_f64(&self.midpoint())
    }

    fn add(&self, o: &Self) -> Self {
        Self { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    fn mul(&self, o: &Self) -> Self {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Self { lo, hi }
    }

    /// `self / o`; `None` if `o` contains zero.
    pub fn div(&self, o: &Self) -> Option<Self> {
        if o.contains_zero() {
            return None;
        }
        let inv = Self::new_sorted(o.hi.recip(), o.lo.recip());
        Some(self.mul(&inv))
    }

    fn new_sorted(a: BigRational, b: BigRational) -> Self {
        if a <= b {
            Self { lo: a, hi: b }
        } else {
            Self { lo: b, hi: a }
        }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new_sorted(&self.lo * k, &self.hi * k)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }
}

impl Serialize for RationalInterval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq([self.lo.to_string(), self.hi.to_string()])
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

pub(crate) fn to_f64(x: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or_else(|| {
        // very large numerator/denominator: shift both down
        let n = x.numer().to_f64().unwrap_or(f64::NAN);
        let d = x.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Enclosure of `p` over `iv` by interval Horner evaluation.
pub fn eval_interval(p: &UnivariatePolynomial, iv: &RationalInterval) -> RationalInterval {
    if iv.is_point() {
        return RationalInterval::point(p.eval(&iv.lo));
    }
    let mut acc = RationalInterval::point(BigRational::zero());
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(iv).add(&RationalInterval::point(c.clone()));
    }
    acc
}

/// Sturm sequence of the square-free part of a nonzero polynomial.
#[derive(Debug, Clone)]
pub struct SturmSequence {
    chain: Vec<UnivariatePolynomial>,
}

impl SturmSequence {
    pub fn new(p: &UnivariatePolynomial) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::InvalidInput("Sturm sequence of the zero polynomial".into()));
        }
        let p0 = p.squarefree();
        let mut chain = vec![p0.clone(), p0.derivative()];
        while !chain.last().unwrap().is_zero() {
            let n = chain.len();
            let r = chain[n - 2].div_rem(&chain[n - 1]).1;
            chain.push(-&r);
        }
        chain.pop();
        Ok(Self { chain })
    }

    /// The square-free polynomial whose roots are counted.
    pub fn base(&self) -> &UnivariatePolynomial {
        &self.chain[0]
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        count_variations(self.chain.iter().map(|p| p.sign_at(x)))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        count_variations(self.chain.iter().map(|p| {
            let lc_sign = p.leading().map(|c| c.cmp(&BigRational::zero())).unwrap_or(Ordering::Equal);
            let odd = p.degree().unwrap_or(0) % 2 == 1;
            if positive || !odd {
                lc_sign
            } else {
                lc_sign.reverse()
            }
        }))
    }

    /// Distinct roots in the half-open interval `(a, b]`.
    pub fn count_half_open(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }

    /// Distinct roots in the open interval `(a, b)`.
    pub fn count_open(&self, a: &BigRational, b: &BigRational) -> usize {
        if a >= b {
            return 0;
        }
        let n = self.count_half_open(a, b);
        if self.base().eval(b).is_zero() {
            n - 1
        } else {
            n
        }
    }

    pub fn count_closed(&self, a: &BigRational, b: &BigRational) -> usize {
        if a > b {
            return 0;
        }
        if a == b {
            return usize::from(self.base().eval(a).is_zero());
        }
        self.count_half_open(a, b) + usize::from(self.base().eval(a).is_zero())
    }

    pub fn count_all(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }

    /// Pairwise disjoint isolating intervals for every root in `[a, b]`,
    /// in increasing order. Open intervals are reported by their closure;
    /// their endpoints are never roots unless the interval is a point.
    pub fn isolate(&self, a: &BigRational, b: &BigRational) -> Vec<RationalInterval> {
        let mut out = Vec::new();
        if a > b {
            return out;
        }
        if self.base().eval(a).is_zero() {
            out.push(RationalInterval::point(a.clone()));
        }
        if a < b {
            self.isolate_open(a.clone(), b.clone(), &mut out);
            if self.base().eval(b).is_zero() {
                out.push(RationalInterval::point(b.clone()));
            }
        }
        out
    }

    pub fn isolate_all(&self) -> Vec<RationalInterval> {
        let bound = self.base().root_bound();
        self.isolate(&-bound.clone(), &bound)
    }

    fn isolate_open(&self, l: BigRational, r: BigRational, out: &mut Vec<RationalInterval>) {
        match self.count_open(&l, &r) {
            0 => {}
            1 => out.push(self.shrink_to_nonroot_ends(l, r)),
            _ => {
                let m = (&l + &r) / rat(2);
                self.isolate_open(l, m.clone(), out);
                if self.base().eval(&m).is_zero() {
                    out.push(RationalInterval::point(m.clone()));
                }
                self.isolate_open(m, r, out);
            }
        }
    }

    /// For an open interval holding one root, returns a closed interval
    /// strictly inside it whose endpoints are not roots (or a point interval).
    fn shrink_to_nonroot_ends(&self, l0: BigRational, r0: BigRational) -> RationalInterval {
        let p = self.base();
        let (mut l, mut r) = (l0.clone(), r0.clone());
        while l == l0 || r == r0 || p.eval(&l).is_zero() || p.eval(&r).is_zero() {
            let m = (&l + &r) / rat(2);
            if p.eval(&m).is_zero() {
                return RationalInterval::point(m);
            }
            if self.count_open(&l, &m) == 1 {
                r = m;
            } else {
                l = m;
            }
        }
        RationalInterval::new(l, r)
    }

    /// Halves an isolating interval until its width is at most `width`.
    pub fn refine(&self, iv: &RationalInterval, width: &BigRational) -> RationalInterval {
        let mut iv = iv.clone();
        while !iv.is_point() && &iv.width() > width {
            iv = self.bisect(&iv);
        }
        iv
    }

    /// One bisection step on an isolating interval with non-root endpoints.
    pub fn bisect(&self, iv: &RationalInterval) -> RationalInterval {
        if iv.is_point() {
            return iv.clone();
        }
        let p = self.base();
        let m = iv.midpoint();
        match p.sign_at(&m) {
            Ordering::Equal => RationalInterval::point(m),
            s if s == p.sign_at(&iv.lo) => RationalInterval::new(m, iv.hi.clone()),
            _ => RationalInterval::new(iv.lo.clone(), m),
        }
    }
}

fn count_variations(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut n = 0;
    for s in signs.filter(|s| *s != Ordering::Equal) {
        if last != Ordering::Equal && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

/// Number of distinct real roots, optionally restricted to a closed
/// interval, with isolating intervals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealRootCount {
    pub count: usize,
    pub intervals: Vec<RationalInterval>,
}

pub fn count_real_roots(u: &UnivariatePolynomial, interval: Option<&RationalInterval>) -> Result<RealRootCount> {
    let s = SturmSequence::new(u)?;
    let intervals = match interval {
        Some(iv) => s.isolate(&iv.lo, &iv.hi),
        None => s.isolate_all(),
    };
    let count = match interval {
        Some(iv) => s.count_closed(&iv.lo, &iv.hi),
        None => s.count_all(),
    };
    debug_assert_eq!(count, intervals.len());
    Ok(RealRootCount { count, intervals })
}

impl RealRootCount {
    /// Isolating intervals narrowed below `width`.
    pub fn refined(&self, u: &UnivariatePolynomial, width: &BigRational) -> Result<Vec<RationalInterval>> {
        let s = SturmSequence::new(u)?;
        Ok(self.intervals.iter().map(|iv| s.refine(iv, width)).collect())
    }
}
