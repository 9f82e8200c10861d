use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::univariate::{rat, UnivariatePolynomial};
use crate::error::{Error, Result};
use crate::lattice::LatticePoint;
use crate::polygon::{hull_of, LatticePolygon};

/// Exponents above this are rejected.
pub const DEGREE_LIMIT: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
}

/// Polynomial in `x, y` stored as a map from exponent `(i, j)` to a
/// nonzero rational coefficient.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SparseBivariatePolynomial {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl SparseBivariatePolynomial {
    pub fn new(terms: impl IntoIterator<Item = ((u32, u32), BigRational)>) -> Result<Self> {
        let mut p = Self::default();
        for ((i, j), c) in terms {
            if i > DEGREE_LIMIT || j > DEGREE_LIMIT {
                return Err(Error::InvalidInput(format!("exponent ({i},{j}) exceeds the degree limit {DEGREE_LIMIT}")));
            }
            p.add_term(i, j, c);
        }
        Ok(p)
    }

    pub fn from_integer_terms(terms: &[((u32, u32), i64)]) -> Result<Self> {
        Self::new(terms.iter().map(|&(e, c)| (e, rat(c))))
    }

    fn add_term(&mut self, i: u32, j: u32, c: BigRational) {
        let slot = self.terms.entry((i, j)).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), BigRational> {
        &self.terms
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigRational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> Vec<LatticePoint> {
        self.terms.keys().map(|&(i, j)| LatticePoint::new(i as i64, j as i64)).collect()
    }

    /// Convex hull of the support; errors if it is not two-dimensional.
    pub fn newton_polygon(&self) -> Result<LatticePolygon> {
        hull_of(&self.support())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| if v == Var::X { i } else { j }).max()
    }

    pub fn eval(&self, x: &BigRational, y: &BigRational) -> BigRational {
        self.terms.iter().fold(BigRational::zero(), |acc, (&(i, j), c)| acc + c * pow(x, i) * pow(y, j))
    }

    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.terms.iter().map(|(&(i, j), c)| c.to_f64().unwrap_or(f64::NAN) * x.powi(i as i32) * y.powi(j as i32)).sum()
    }

    /// `p(y, x)`.
    pub fn swap_variables(&self) -> Self {
        Self { terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect() }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_zero() {
            return Self::default();
        }
        Self { terms: self.terms.iter().map(|(&e, c)| (e, c * k)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &o.terms {
            out.add_term(i, j, -c);
        }
        out
    }

    /// Coefficients of `y^0, y^1, ...` as polynomials in `t` after the
    /// substitution `x = t - shear * y`.
    pub fn in_y(&self, shear: i64) -> Vec<UnivariatePolynomial> {
        let ny = self.terms.keys().map(|&(i, j)| (j + if shear == 0 { 0 } else { i }) as usize).max().map_or(0, |d| d + 1);
        let mut table: Vec<Vec<BigRational>> = vec![Vec::new(); ny];
        let minus_shear = rat(-shear);
        for (&(i, j), c) in &self.terms {
            let i = i as usize;
            let kmax = if shear == 0 { 0 } else { i };
            let mut binom = BigRational::one();
            for k in 0..=kmax {
                // c * C(i,k) * (-shear)^k * t^(i-k) * y^(j+k)
                let term = c * &binom * pow(&minus_shear, k as u32);
                let row = &mut table[j as usize + k];
                if row.len() <= i - k {
                    row.resize(i - k + 1, BigRational::zero());
                }
                row[i - k] += term;
                binom = binom * rat((i - k) as i64) / rat(k as i64 + 1);
            }
        }
        let mut out: Vec<UnivariatePolynomial> = table.into_iter().map(UnivariatePolynomial::new).collect();
        while out.last().is_some_and(UnivariatePolynomial::is_zero) {
            out.pop();
        }
        out
    }
}

pub(crate) fn pow(x: &BigRational, e: u32) -> BigRational {
    num_traits::pow(x.clone(), e as usize)
}

impl fmt::Display for SparseBivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // graded order: constant term first
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(i, j)| (i + j, std::cmp::Reverse(i)));
        for (n, (i, j)) in keys.into_iter().enumerate() {
            let c = &self.terms[&(i, j)];
            let mag = c.abs();
            match (n, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut parts = Vec::new();
            if (i, j) == (0, 0) || !mag.is_one() {
                parts.push(mag.to_string());
            }
            for (name, e) in [("x", i), ("y", j)] {
                match e {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    _ => parts.push(format!("{name}^{e}")),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}
