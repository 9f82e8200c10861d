//! Sylvester resultants of polynomials in `y` with coefficients in `Q[t]`,
//! computed by evaluation at integer points and interpolation.

use num_rational::BigRational;
use num_traits::Zero;

use super::bivariate::{SparseBivariatePolynomial, Var};
use super::univariate::{rat, UnivariatePolynomial};
use crate::error::{Error, Result};

/// Polynomial in `y` whose coefficients (lowest first) are polynomials in `t`.
pub(crate) type PolyInY = [UnivariatePolynomial];

fn degree_t(p: &PolyInY) -> usize {
    p.iter().filter_map(UnivariatePolynomial::degree).max().unwrap_or(0)
}

fn eval_coeffs(p: &PolyInY, t: &BigRational) -> Vec<BigRational> {
    p.iter().map(|c| c.eval(t)).collect()
}

/// Determinant by fraction-exact Gaussian elimination.
pub(crate) fn determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = rat(1);
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        let (top, rest) = m.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in rest {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &p;
            for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &factor * y;
            }
        }
    }
    det
}

/// Rows are shifted copies of `a` (`rows_a` of them) then of `b`; column
/// `k` holds the coefficient of `y^(width - 1 - k)`.
fn sylvester_rows(a: &[BigRational], rows_a: usize, b: &[BigRational], rows_b: usize, width: usize) -> Vec<Vec<BigRational>> {
    let mut out = Vec::with_capacity(rows_a + rows_b);
    for (poly, rows) in [(a, rows_a), (b, rows_b)] {
        let deg = poly.len() - 1;
        for r in 0..rows {
            // y^(rows - 1 - r) * poly
            let shift = rows - 1 - r;
            let mut row = vec![BigRational::zero(); width];
            for (i, c) in poly.iter().enumerate() {
                let power = i + shift;
                row[width - 1 - power] = c.clone();
            }
            debug_assert!(deg + shift < width);
            out.push(row);
        }
    }
    out
}

fn sample_points(count: usize) -> Vec<BigRational> {
    // 0, 1, -1, 2, -2, ...
    (0..count as i64).map(|k| rat(if k % 2 == 1 { k / 2 + 1 } else { -(k / 2) })).collect()
}

/// `Res_y(f, g)` using the formal degrees `f.len() - 1` and `g.len() - 1`.
pub(crate) fn resultant_in_y(f: &PolyInY, g: &PolyInY) -> UnivariatePolynomial {
    let (n, m) = (f.len() - 1, g.len() - 1);
    if n + m == 0 {
        return UnivariatePolynomial::constant(rat(1));
    }
    let bound = m * degree_t(f) + n * degree_t(g);
    let xs = sample_points(bound + 1);
    let ys: Vec<BigRational> =
        xs.iter().map(|t| determinant(sylvester_rows(&eval_coeffs(f, t), m, &eval_coeffs(g, t), n, n + m))).collect();
    UnivariatePolynomial::interpolate(&xs, &ys)
}

/// Coefficients `(s11, s10)` of the first subresultant `s11(t) y + s10(t)`.
pub(crate) fn first_subresultant(f: &PolyInY, g: &PolyInY) -> (UnivariatePolynomial, UnivariatePolynomial) {
    let (n, m) = (f.len() - 1, g.len() - 1);
    if n == 1 {
        return (f[1].clone(), f[0].clone());
    }
    if m == 1 {
        return (g[1].clone(), g[0].clone());
    }
    let width = n + m - 1;
    let bound = (m - 1) * degree_t(f) + (n - 1) * degree_t(g);
    let xs = sample_points(bound + 1);
    let mut s1 = Vec::new();
    let mut s0 = Vec::new();
    for t in &xs {
        let rows = sylvester_rows(&eval_coeffs(f, t), m - 1, &eval_coeffs(g, t), n - 1, width);
        // keep columns y^(width-1) .. y^2, then y^1 or y^0
        for (target, col) in [(&mut s1, width - 2), (&mut s0, width - 1)] {
            let mat: Vec<Vec<BigRational>> =
                rows.iter().map(|r| r[..width - 2].iter().cloned().chain(std::iter::once(r[col].clone())).collect()).collect();
            target.push(determinant(mat));
        }
    }
    (UnivariatePolynomial::interpolate(&xs, &s1), UnivariatePolynomial::interpolate(&xs, &s0))
}

/// Sylvester resultant eliminating `var`; the result is a polynomial in the
/// other variable. Errors if the resultant vanishes identically.
pub fn eliminate(f: &SparseBivariatePolynomial, g: &SparseBivariatePolynomial, var: Var) -> Result<UnivariatePolynomial> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::InvalidInput("cannot eliminate with a zero polynomial".into()));
    }
    let (f, g) = match var {
        Var::Y => (f.clone(), g.clone()),
        Var::X => (f.swap_variables(), g.swap_variables()),
    };
    let r = resultant_in_y(&f.in_y(0), &g.in_y(0));
    if r.is_zero() {
        return Err(Error::NonGeneric(format!("resultant in {var:?} vanishes identically; the polynomials share a component")));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(terms: &[((u32, u32), i64)]) -> SparseBivariatePolynomial {
        SparseBivariatePolynomial::from_integer_terms(terms).unwrap()
    }

    #[test]
    fn substitution_example() {
        let f = bi(&[((0, 1), 1), ((1, 0), -1)]);
        let g = bi(&[((0, 2), 1), ((1, 0), -1)]);
        assert_eq!(eliminate(&f, &g, Var::Y).unwrap(), UnivariatePolynomial::from_integers(&[0, -1, 1]));
    }

    #[test]
    fn shared_component_is_non_generic() {
        let f = bi(&[((0, 0), 1), ((1, 1), 1), ((0, 2), 3)]);
        assert!(matches!(eliminate(&f, &f, Var::Y), Err(Error::NonGeneric(_))));
        assert!(matches!(eliminate(&f, &f, Var::X), Err(Error::NonGeneric(_))));
    }

    #[test]
    fn determinant_small() {
        let m = vec![vec![rat(0), rat(2)], vec![rat(3), rat(4)]];
        assert_eq!(determinant(m), rat(-6));
    }

    #[test]
    fn subresultant_recovers_common_root() {
        // (y - 2)(y - t) and (y - 2)(y + 1): common root y = 2 for t != -1, 2
        let f = [
            UnivariatePolynomial::from_integers(&[0, 2]),
            UnivariatePolynomial::from_integers(&[-2, -1]),
            UnivariatePolynomial::from_integers(&[1]),
        ];
        let g = [
            UnivariatePolynomial::from_integers(&[-2]),
            UnivariatePolynomial::from_integers(&[-1]),
            UnivariatePolynomial::from_integers(&[1]),
        ];
        assert!(resultant_in_y(&f, &g).is_zero());
        let (s11, s10) = first_subresultant(&f, &g);
        let t = rat(5);
        let y = -s10.eval(&t) / s11.eval(&t);
        assert_eq!(y, rat(2));
    }
}
