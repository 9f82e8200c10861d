//! Wronski polynomials of foldable triangulations and exact solving of
//! bivariate systems.
//!
//! A Wronski polynomial assigns the coefficient `γ_c` to every lattice point
//! of color `c` under the canonical vertex 3-coloring. Two of them over the
//! same triangulation form a [`WronskiSystem`], whose common roots in the
//! complex torus are counted and isolated by [`solve_system`].

mod bivariate;
mod resultant;
mod solve;
mod sturm;
mod univariate;

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use bivariate::{SparseBivariatePolynomial, Var, DEGREE_LIMIT};
pub use resultant::eliminate;
pub use solve::{solve_polynomials, solve_system, SolutionBox, SolveReport, BOX_PRECISION_BITS, MAX_SHEAR};
pub use sturm::{count_real_roots, eval_interval, RationalInterval, RealRootCount, SturmSequence};
pub use univariate::UnivariatePolynomial;

use crate::error::{Error, Result};
use crate::polygon::LatticePolygon;
use crate::triangulation::{Triangulation, TriangulationFile};

/// Parses `"p/q"` or an integer string.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    BigRational::from_str(s.trim()).map_err(|e| Error::InvalidCoefficient(format!("{s:?}: {e}")))
}

/// Three nonzero rationals, attached to the coloring classes 1, 2, 3.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WronskiCoefficients([BigRational; 3]);

impl WronskiCoefficients {
    pub fn new(gamma: [BigRational; 3]) -> Result<Self> {
        if let Some(k) = gamma.iter().position(Zero::is_zero) {
            return Err(Error::InvalidCoefficient(format!("γ{} is zero", k + 1)));
        }
        Ok(Self(gamma))
    }

    pub fn from_integers(gamma: [i64; 3]) -> Result<Self> {
        Self::new(gamma.map(univariate::rat))
    }

    pub fn from_strings<S: AsRef<str>>(parts: &[S]) -> Result<Self> {
        if parts.len() != 3 {
            return Err(Error::InvalidCoefficient(format!("expected 3 coefficients, got {}", parts.len())));
        }
        Self::new([parse_rational(parts[0].as_ref())?, parse_rational(parts[1].as_ref())?, parse_rational(parts[2].as_ref())?])
    }

    /// Coefficient of color class `label` in `1..=3`.
    pub fn get(&self, label: u8) -> &BigRational {
        &self.0[label as usize - 1]
    }

    pub fn as_array(&self) -> &[BigRational; 3] {
        &self.0
    }
}

impl FromStr for WronskiCoefficients {
    type Err = Error;

    /// `"a,b,c"`.
    fn from_str(s: &str) -> Result<Self> {
        Self::from_strings(&s.split(',').collect::<Vec<_>>())
    }
}

impl fmt::Display for WronskiCoefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.0[0], self.0[1], self.0[2])
    }
}

impl Serialize for WronskiCoefficients {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(ToString::to_string))
    }
}

impl<'de> Deserialize<'de> for WronskiCoefficients {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<String>::deserialize(d)?;
        Self::from_strings(&parts).map_err(serde::de::Error::custom)
    }
}

/// `Σ γ_{c(i,j)} x^i y^j` over the points of a dense foldable triangulation.
pub fn build_wronski(t: &Triangulation, gamma: &WronskiCoefficients) -> Result<SparseBivariatePolynomial> {
    if let Some(p) = t.points().iter().find(|p| p.x < 0 || p.y < 0) {
        return Err(Error::InvalidInput(format!("point {p} has a negative coordinate; translate the triangulation first")));
    }
    let coloring = t.vertex_three_coloring()?;
    let mut terms = Vec::with_capacity(t.points().len());
    for (k, p) in t.points().iter().enumerate() {
        let (i, j) = (u32::try_from(p.x), u32::try_from(p.y));
        let (Ok(i), Ok(j)) = (i, j) else {
            return Err(Error::InvalidInput(format!("exponent of {p} out of range")));
        };
        terms.push(((i, j), gamma.get(coloring.label(k)).clone()));
    }
    SparseBivariatePolynomial::new(terms)
}

/// Generic number of common torus roots of two polynomials with Newton polygon `p`.
pub fn kushnirenko_number(p: &LatticePolygon) -> u128 {
    p.twice_area()
}

/// Two polynomials sharing a Newton polygon, usually Wronski polynomials
/// of one triangulation.
#[derive(Debug, Clone)]
pub struct WronskiSystem {
    pub triangulation: Option<Triangulation>,
    pub gamma_a: Option<WronskiCoefficients>,
    pub gamma_b: Option<WronskiCoefficients>,
    pub f: SparseBivariatePolynomial,
    pub g: SparseBivariatePolynomial,
    pub kushnirenko_number: u128,
}

impl WronskiSystem {
    pub fn new(t: &Triangulation, gamma_a: WronskiCoefficients, gamma_b: WronskiCoefficients) -> Result<Self> {
        let f = build_wronski(t, &gamma_a)?;
        let g = build_wronski(t, &gamma_b)?;
        Ok(Self {
            kushnirenko_number: kushnirenko_number(&t.hull()?),
            triangulation: Some(t.clone()),
            gamma_a: Some(gamma_a),
            gamma_b: Some(gamma_b),
            f,
            g,
        })
    }

    /// A system given by explicit polynomials with equal Newton polygons.
    pub fn from_polynomials(f: SparseBivariatePolynomial, g: SparseBivariatePolynomial) -> Result<Self> {
        let (pf, pg) = (f.newton_polygon()?, g.newton_polygon()?);
        if pf != pg {
            return Err(Error::InvalidInput("the two polynomials have different Newton polygons".into()));
        }
        Ok(Self { triangulation: None, gamma_a: None, gamma_b: None, f, g, kushnirenko_number: kushnirenko_number(&pf) })
    }

    pub fn solve(&self) -> SolveReport {
        solve_system(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub signature: usize,
    pub real_count: usize,
    /// `real_count >= signature`; meaningful only when `generic`.
    pub bound_holds: bool,
    pub generic: bool,
}

/// Solves the Wronski system of `t` and compares its real roots with the signature.
pub fn verify_bound(t: &Triangulation, gamma_a: &WronskiCoefficients, gamma_b: &WronskiCoefficients) -> Result<BoundCheck> {
    let signature = t.signature_via_triangles()?;
    let report = WronskiSystem::new(t, gamma_a.clone(), gamma_b.clone())?.solve();
    Ok(BoundCheck {
        signature,
        real_count: report.real_count,
        bound_holds: report.generic && report.real_count >= signature,
        generic: report.generic,
    })
}

/// Triangulation given inline or as a path to a triangulation file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TriangulationSource {
    Path(String),
    Inline(TriangulationFile),
}

/// On-disk form of a Wronski system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WronskiInput {
    pub triangulation: TriangulationSource,
    pub gamma_a: WronskiCoefficients,
    pub gamma_b: WronskiCoefficients,
}

impl WronskiInput {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidInput(format!("Wronski system JSON: {e}")))
    }
}
