use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::bivariate::SparseBivariatePolynomial;
use super::resultant::{first_subresultant, resultant_in_y};
use super::sturm::{eval_interval, RationalInterval, SturmSequence};
use super::univariate::{rat, UnivariatePolynomial};
use super::WronskiSystem;

/// Largest shear `|λ|` tried when projecting along `x = t - λ y`.
pub const MAX_SHEAR: i64 = 8;

/// Isolating boxes are refined until both sides are at most `2^-BOX_PRECISION_BITS`.
pub const BOX_PRECISION_BITS: u32 = 40;

/// Rectangle containing exactly one real solution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolutionBox {
    pub x: RationalInterval,
    pub y: RationalInterval,
}

impl SolutionBox {
    pub fn center(&self) -> (f64, f64) {
        (self.x.midpoint_f64(), self.y.midpoint_f64())
    }

    pub fn overlaps(&self, o: &SolutionBox) -> bool {
        self.x.overlaps(&o.x) && self.y.overlaps(&o.y)
    }

    fn swapped(self) -> Self {
        Self { x: self.y, y: self.x }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveReport {
    pub kushnirenko_number: u128,
    /// Common roots in `(C*)^2`, with multiplicity.
    pub torus_solution_count: usize,
    pub distinct_torus_solution_count: usize,
    /// Common roots with a zero coordinate, with multiplicity.
    pub affine_non_torus_count: usize,
    pub distinct_real_solutions: Vec<SolutionBox>,
    pub real_count: usize,
    pub generic: bool,
    /// False when the counts could not be certified.
    pub reliable: bool,
    pub notes: Vec<String>,
}

/// Elimination of `y` after the shear `x = t - shear * y`.
#[derive(Debug, Clone)]
struct Projection {
    shear: i64,
    affine: UnivariatePolynomial,
    torus: UnivariatePolynomial,
    boxes: Vec<SolutionBox>,
    verified: bool,
}

enum Outcome {
    Solved(Projection),
    CommonComponent,
    Unseparated,
}

fn shears() -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..=MAX_SHEAR).flat_map(|k| [k, -k]))
}

fn without_roots_of(p: &UnivariatePolynomial, h: &UnivariatePolynomial) -> UnivariatePolynomial {
    if h.is_zero() {
        UnivariatePolynomial::constant(rat(1))
    } else {
        p.remove_roots_of(h)
    }
}

fn tolerance() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << BOX_PRECISION_BITS)
}

fn project(f: &SparseBivariatePolynomial, g: &SparseBivariatePolynomial) -> Outcome {
    for shear in shears() {
        let (fy, gy) = (f.in_y(shear), g.in_y(shear));
        if fy.len() < 2 || gy.len() < 2 || !fy.last().unwrap().is_constant() || !gy.last().unwrap().is_constant() {
            continue;
        }
        let affine = resultant_in_y(&fy, &gy);
        if affine.is_zero() {
            return Outcome::CommonComponent;
        }
        let (s11, s10) = first_subresultant(&fy, &gy);
        if !affine.squarefree().gcd(&s11).is_constant() {
            continue;
        }
        // x0 * s11(t0) = t0 * s11(t0) + shear * s10(t0) and y0 * s11(t0) = -s10(t0)
        let x_num = &(&UnivariatePolynomial::x() * &s11) + &s10.scale(&rat(shear));
        let torus = without_roots_of(&without_roots_of(&affine, &x_num), &s10);
        let (boxes, verified) = real_boxes(&torus, &s11, &s10, shear);
        return Outcome::Solved(Projection { shear, affine, torus, boxes, verified });
    }
    Outcome::Unseparated
}

fn real_boxes(
    torus: &UnivariatePolynomial,
    s11: &UnivariatePolynomial,
    s10: &UnivariatePolynomial,
    shear: i64,
) -> (Vec<SolutionBox>, bool) {
    if torus.is_constant() {
        return (Vec::new(), true);
    }
    let sturm = SturmSequence::new(torus).expect("nonzero");
    let tol = tolerance();
    let mut verified = true;
    let mut boxes = Vec::new();
    for mut iv in sturm.isolate_all() {
        if !iv.is_point() {
            let base = sturm.base();
            verified &= base.sign_at(&iv.lo) != base.sign_at(&iv.hi);
        }
        loop {
            let y = eval_interval(s10, &iv).scale(&rat(-1)).div(&eval_interval(s11, &iv));
            if let Some(y) = y {
                let x = iv.sub(&y.scale(&rat(shear)));
                if x.width() <= tol && y.width() <= tol {
                    boxes.push(SolutionBox { x, y });
                    break;
                }
            }
            iv = sturm.bisect(&iv);
        }
    }
    (boxes, verified)
}

fn boxes_match(a: &[SolutionBox], b: &[SolutionBox]) -> bool {
    a.len() == b.len()
        && a.iter().all(|p| b.iter().filter(|q| p.overlaps(q)).count() == 1)
        && b.iter().all(|q| a.iter().filter(|p| p.overlaps(q)).count() == 1)
}

/// Counts and isolates the common roots of `f` and `g`, eliminating each
/// variable in turn and cross-checking the two answers.
pub fn solve_polynomials(f: &SparseBivariatePolynomial, g: &SparseBivariatePolynomial, kushnirenko_number: u128) -> SolveReport {
    let mut report = SolveReport {
        kushnirenko_number,
        torus_solution_count: 0,
        distinct_torus_solution_count: 0,
        affine_non_torus_count: 0,
        distinct_real_solutions: Vec::new(),
        real_count: 0,
        generic: false,
        reliable: false,
        notes: Vec::new(),
    };
    if f.is_zero() || g.is_zero() {
        report.notes.push("zero polynomial in the system".into());
        return report;
    }
    let along_y = project(f, g);
    let along_x = project(&f.swap_variables(), &g.swap_variables());
    let (py, px) = match (along_y, along_x) {
        (Outcome::Solved(a), Outcome::Solved(b)) => (a, b),
        (Outcome::CommonComponent, _) | (_, Outcome::CommonComponent) => {
            report.notes.push("resultant vanishes identically: the system has a common component".into());
            return report;
        }
        _ => {
            report.notes.push(format!("no projection with shear up to {MAX_SHEAR} separates the solutions"));
            return report;
        }
    };
    let t_y = py.torus.degree().unwrap_or(0);
    let t_x = px.torus.degree().unwrap_or(0);
    report.torus_solution_count = t_y;
    report.distinct_torus_solution_count = py.torus.squarefree().degree().unwrap_or(0);
    report.affine_non_torus_count = py.affine.degree().unwrap_or(0) - t_y;
    let swapped: Vec<SolutionBox> = px.boxes.into_iter().map(SolutionBox::swapped).collect();
    report.reliable = true;
    if t_y != t_x {
        report.reliable = false;
        report.notes.push(format!("torus counts disagree between eliminations ({t_y} vs {t_x})"));
    }
    if !boxes_match(&py.boxes, &swapped) {
        report.reliable = false;
        report.notes.push("real solutions from the two eliminations do not match".into());
    }
    if !(py.verified && px.verified) {
        report.reliable = false;
        report.notes.push("an isolating interval failed the sign-change check".into());
    }
    if py.shear != 0 || px.shear != 0 {
        report.notes.push(format!("sheared projections used: x = t - {}y, y = t - {}x", py.shear, px.shear));
    }
    report.real_count = py.boxes.len();
    report.distinct_real_solutions = py.boxes;
    report.generic = report.reliable && t_y as u128 == kushnirenko_number;
    if report.reliable && !report.generic {
        report.notes.push(format!("torus count {t_y} differs from the Kushnirenko number {kushnirenko_number}"));
    }
    report
}

pub fn solve_system(s: &WronskiSystem) -> SolveReport {
    solve_polynomials(&s.f, &s.g, s.kushnirenko_number)
}
