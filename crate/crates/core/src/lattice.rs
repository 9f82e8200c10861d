//! Integer plane primitives.
//!
//! Points carry `i64` coordinates bounded by [`COORDINATE_LIMIT`]; every
//! product is formed in `i128`, so determinants never overflow.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest admissible absolute coordinate value.
pub const COORDINATE_LIMIT: i64 = i32::MAX as i64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    /// Like [`LatticePoint::new`] but enforces the coordinate limit.
    pub fn checked(x: i64, y: i64) -> Result<Self> {
        for c in [x, y] {
            if c.checked_abs().is_none_or(|a| a > COORDINATE_LIMIT) {
                return Err(Error::CoordinateLimit(c));
            }
        }
        Ok(Self { x, y })
    }

    pub fn within_limit(&self) -> bool {
        Self::checked(self.x, self.y).is_ok()
    }
}

impl From<[i64; 2]> for LatticePoint {
    fn from([x, y]: [i64; 2]) -> Self {
        Self { x, y }
    }
}

impl From<LatticePoint> for [i64; 2] {
    fn from(p: LatticePoint) -> Self {
        [p.x, p.y]
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from((x, y): (i64, i64)) -> Self {
        Self { x, y }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl Add for LatticePoint {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for LatticePoint {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for LatticePoint {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

/// Twice the signed area of `(a, b, c)`: positive for a counterclockwise turn.
pub fn orient(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> i128 {
    let (ux, uy) = (b.x as i128 - a.x as i128, b.y as i128 - a.y as i128);
    let (vx, vy) = (c.x as i128 - a.x as i128, c.y as i128 - a.y as i128);
    ux * vy - uy * vx
}

/// Parity class of a lattice segment's coordinate difference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SegmentType {
    /// odd, even
    X,
    /// even, odd
    Y,
    /// odd, odd
    XY,
    /// even, even; never an edge of a dense triangulation
    #[serde(rename = "EVEN")]
    Even,
}

impl SegmentType {
    /// The three classes that occur as edges of dense triangulations.
    pub const PRIMITIVE: [SegmentType; 3] = [SegmentType::X, SegmentType::Y, SegmentType::XY];

    fn of_difference(dx: i64, dy: i64) -> Self {
        match (dx.rem_euclid(2), dy.rem_euclid(2)) {
            (1, 0) => SegmentType::X,
            (0, 1) => SegmentType::Y,
            (1, 1) => SegmentType::XY,
            _ => SegmentType::Even,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            SegmentType::X => "X",
            SegmentType::Y => "Y",
            SegmentType::XY => "XY",
            SegmentType::Even => "EVEN",
        }
    }
}

impl fmt::Display for SegmentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for SegmentType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "X" => Ok(SegmentType::X),
            "Y" => Ok(SegmentType::Y),
            "XY" => Ok(SegmentType::XY),
            "EVEN" => Ok(SegmentType::Even),
            other => Err(Error::InvalidInput(format!("unknown segment type {other:?}"))),
        }
    }
}

/// Classifies the segment `[a, b]` by the parities of `a - b`.
pub fn segment_type(a: LatticePoint, b: LatticePoint) -> Result<SegmentType> {
    if a == b {
        return Err(Error::InvalidInput(format!("degenerate segment at {a}")));
    }
    Ok(SegmentType::of_difference(a.x - b.x, a.y - b.y))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticeSegment {
    a: LatticePoint,
    b: LatticePoint,
}

impl LatticeSegment {
    pub fn new(a: LatticePoint, b: LatticePoint) -> Result<Self> {
        if a == b {
            return Err(Error::InvalidInput(format!("degenerate segment at {a}")));
        }
        Ok(Self { a, b })
    }

    pub fn endpoints(&self) -> (LatticePoint, LatticePoint) {
        (self.a, self.b)
    }

    pub fn segment_type(&self) -> SegmentType {
        SegmentType::of_difference(self.a.x - self.b.x, self.a.y - self.b.y)
    }

    /// Number of lattice points on the closed segment minus one.
    pub fn lattice_length(&self) -> u64 {
        num_integer::gcd((self.a.x - self.b.x).unsigned_abs(), (self.a.y - self.b.y).unsigned_abs())
    }
}

/// A lattice triangle. Construction does not reject collinear vertices so
/// that [`LatticeTriangle::normalized_area`] can serve as a collinearity test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticeTriangle {
    pub vertices: [LatticePoint; 3],
}

impl LatticeTriangle {
    pub fn new(v0: LatticePoint, v1: LatticePoint, v2: LatticePoint) -> Self {
        Self { vertices: [v0, v1, v2] }
    }

    /// `|det(v1 - v0, v2 - v0)|`, i.e. twice the Euclidean area.
    pub fn normalized_area(&self) -> u128 {
        let [a, b, c] = self.vertices;
        orient(a, b, c).unsigned_abs()
    }

    pub fn is_degenerate(&self) -> bool {
        self.normalized_area() == 0
    }

    pub fn edges(&self) -> [(LatticePoint, LatticePoint); 3] {
        let [a, b, c] = self.vertices;
        [(a, b), (b, c), (c, a)]
    }

    pub fn edge_profile(&self) -> Result<EdgeProfile> {
        triangle_edge_profile(self)
    }
}

/// Edge-type census of a single triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EdgeProfile {
    pub count_x: u8,
    pub count_y: u8,
    pub count_xy: u8,
    pub count_even: u8,
    pub normalized_area: u128,
    /// Exactly one edge of each of X, Y, XY.
    pub lemma1_holds: bool,
    /// Area parity agrees with the parity of every type count.
    pub parity_ok: bool,
}

impl EdgeProfile {
    pub fn count(&self, t: SegmentType) -> u8 {
        match t {
            SegmentType::X => self.count_x,
            SegmentType::Y => self.count_y,
            SegmentType::XY => self.count_xy,
            SegmentType::Even => self.count_even,
        }
    }
}

pub fn triangle_edge_profile(t: &LatticeTriangle) -> Result<EdgeProfile> {
    let area = t.normalized_area();
    if area == 0 {
        return Err(Error::InvalidInput(format!("degenerate triangle {} {} {}", t.vertices[0], t.vertices[1], t.vertices[2])));
    }
    let mut counts = [0u8; 4];
    for (p, q) in t.edges() {
        let idx = match SegmentType::of_difference(p.x - q.x, p.y - q.y) {
            SegmentType::X => 0,
            SegmentType::Y => 1,
            SegmentType::XY => 2,
            SegmentType::Even => 3,
        };
        counts[idx] += 1;
    }
    let area_parity = (area % 2) as u8;
    Ok(EdgeProfile {
        count_x: counts[0],
        count_y: counts[1],
        count_xy: counts[2],
        count_even: counts[3],
        normalized_area: area,
        lemma1_holds: counts == [1, 1, 1, 0],
        parity_ok: counts[..3].iter().all(|c| c % 2 == area_parity),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    #[test]
    fn segment_type_examples() {
        assert_eq!(segment_type(p(0, 0), p(3, 0)).unwrap(), SegmentType::X);
        assert_eq!(segment_type(p(0, 1), p(3, 0)).unwrap(), SegmentType::XY);
        assert_eq!(segment_type(p(5, 0), p(5, 1)).unwrap(), SegmentType::Y);
        assert_eq!(segment_type(p(0, 0), p(2, 0)).unwrap(), SegmentType::Even);
        assert!(matches!(segment_type(p(1, 1), p(1, 1)), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn negative_coordinates_use_euclidean_parity() {
        assert_eq!(segment_type(p(-3, 0), p(0, -2)).unwrap(), SegmentType::X);
        assert_eq!(segment_type(p(-1, -1), p(0, 0)).unwrap(), SegmentType::XY);
    }

    #[test]
    fn normalized_area_examples() {
        assert_eq!(LatticeTriangle::new(p(0, 0), p(1, 0), p(0, 1)).normalized_area(), 1);
        assert_eq!(LatticeTriangle::new(p(0, 0), p(2, 0), p(0, 2)).normalized_area(), 4);
        assert_eq!(LatticeTriangle::new(p(0, 0), p(2, 0), p(4, 0)).normalized_area(), 0);
    }

    #[test]
    fn normalized_area_at_coordinate_limit() {
        let m = COORDINATE_LIMIT;
        let t = LatticeTriangle::new(p(-m, -m), p(m, -m), p(-m, m));
        assert_eq!(t.normalized_area(), (2 * m as u128) * (2 * m as u128));
    }

    #[test]
    fn checked_rejects_out_of_range() {
        assert!(LatticePoint::checked(COORDINATE_LIMIT, -COORDINATE_LIMIT).is_ok());
        assert_eq!(LatticePoint::checked(COORDINATE_LIMIT + 1, 0), Err(Error::CoordinateLimit(COORDINATE_LIMIT + 1)));
        assert!(LatticePoint::checked(0, i64::MIN).is_err());
    }

    #[test]
    fn edge_profile_examples() {
        let unit = triangle_edge_profile(&LatticeTriangle::new(p(0, 0), p(1, 0), p(0, 1))).unwrap();
        assert_eq!((unit.count_x, unit.count_y, unit.count_xy, unit.count_even), (1, 1, 1, 0));
        assert!(unit.lemma1_holds && unit.parity_ok);

        let t = triangle_edge_profile(&LatticeTriangle::new(p(0, 0), p(2, 0), p(1, 1))).unwrap();
        assert_eq!((t.count_x, t.count_y, t.count_xy, t.count_even), (0, 0, 2, 1));
        assert_eq!(t.normalized_area, 2);
        assert!(t.parity_ok && !t.lemma1_holds);

        let big = triangle_edge_profile(&LatticeTriangle::new(p(0, 0), p(2, 0), p(0, 2))).unwrap();
        assert_eq!(big.count_even, 3);
        assert!(big.parity_ok);
    }

    #[test]
    fn edge_profile_rejects_collinear() {
        let t = LatticeTriangle::new(p(0, 0), p(1, 1), p(2, 2));
        assert!(triangle_edge_profile(&t).is_err());
    }

    #[test]
    fn point_json_is_a_pair() {
        let s = serde_json::to_string(&p(3, -4)).unwrap();
        assert_eq!(s, "[3,-4]");
        assert_eq!(serde_json::from_str::<LatticePoint>("[3,-4]").unwrap(), p(3, -4));
    }
}
