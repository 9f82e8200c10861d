//! Convex lattice polygons and their lattice-point census.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{orient, LatticePoint, LatticeSegment};

/// A strictly convex lattice polygon, vertices counterclockwise starting at
/// the lexicographically smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePolygon {
    vertices: Vec<LatticePoint>,
}

/// Integer form of the area / interior / boundary data of a polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PickData {
    /// Twice the Euclidean area, which is also the normalized area.
    pub twice_area: u128,
    pub interior_count: u128,
    pub boundary_count: u128,
}

impl PickData {
    /// `2A = 2I + B - 2`.
    pub fn satisfies_pick(&self) -> bool {
        self.twice_area + 2 == 2 * self.interior_count + self.boundary_count
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeCensus {
    pub pick: PickData,
    /// Boundary lattice points in counterclockwise order from the first vertex.
    pub boundary: Vec<LatticePoint>,
    /// Interior lattice points in row-major (y, then x) order.
    pub interior: Vec<LatticePoint>,
}

impl LatticeCensus {
    /// All lattice points, sorted lexicographically.
    pub fn all_points(&self) -> Vec<LatticePoint> {
        let mut pts: Vec<_> = self.boundary.iter().chain(&self.interior).copied().collect();
        pts.sort();
        pts
    }

    pub fn point_count(&self) -> usize {
        self.boundary.len() + self.interior.len()
    }
}

/// Strictly convex hull in counterclockwise order, starting at the
/// lexicographic minimum.
pub fn hull_of(points: &[LatticePoint]) -> Result<LatticePolygon> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return Err(Error::Dimension(format!("{} distinct points", pts.len())));
    }

    // monotone chain; `<= 0` pops collinear points as well
    let mut lower: Vec<LatticePoint> = Vec::with_capacity(pts.len());
    for &p in &pts {
        while lower.len() >= 2 && orient(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<LatticePoint> = Vec::with_capacity(pts.len());
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && orient(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        return Err(Error::Dimension("all points are collinear".into()));
    }
    Ok(LatticePolygon { vertices: lower })
}

impl LatticePolygon {
    /// Accepts an explicit vertex cycle. The cycle must already be
    /// counterclockwise and strictly convex; it is rotated to the canonical start.
    pub fn from_vertices(vertices: Vec<LatticePoint>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::Dimension(format!("{n} vertices")));
        }
        for i in 0..n {
            let turn = orient(vertices[i], vertices[(i + 1) % n], vertices[(i + 2) % n]);
            if turn <= 0 {
                return Err(Error::InvalidInput(format!(
                    "vertex cycle is not strictly convex counterclockwise at {}",
                    vertices[(i + 1) % n]
                )));
            }
        }
        let hull = hull_of(&vertices)?;
        let start = vertices.iter().position(|&v| v == hull.vertices[0]);
        let same_cycle =
            hull.vertices.len() == n && start.is_some_and(|s| (0..n).all(|k| vertices[(s + k) % n] == hull.vertices[k]));
        if !same_cycle {
            // a self-overlapping star polygon also turns left everywhere
            return Err(Error::InvalidInput("vertex cycle winds more than once".into()));
        }
        Ok(hull)
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    /// Edges as counterclockwise vertex pairs.
    pub fn edges(&self) -> impl Iterator<Item = (LatticePoint, LatticePoint)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Shoelace formula.
    pub fn twice_area(&self) -> u128 {
        let origin = self.vertices[0];
        let mut s: i128 = 0;
        for w in self.vertices[1..].windows(2) {
            s += orient(origin, w[0], w[1]);
        }
        s as u128
    }

    /// Sum over edges of `gcd(|dx|, |dy|)`.
    pub fn boundary_count(&self) -> u128 {
        self.edges().map(|(a, b)| LatticeSegment::new(a, b).map(|s| s.lattice_length() as u128).unwrap_or(0)).sum()
    }

    /// Closed containment.
    pub fn contains(&self, p: LatticePoint) -> bool {
        self.edges().all(|(a, b)| orient(a, b, p) >= 0)
    }

    pub fn strictly_contains(&self, p: LatticePoint) -> bool {
        self.edges().all(|(a, b)| orient(a, b, p) > 0)
    }

    pub fn on_boundary(&self, p: LatticePoint) -> bool {
        self.contains(p) && !self.strictly_contains(p)
    }

    pub fn bounding_box(&self) -> (LatticePoint, LatticePoint) {
        let xs = self.vertices.iter().map(|p| p.x);
        let ys = self.vertices.iter().map(|p| p.y);
        (
            LatticePoint::new(xs.clone().min().unwrap(), ys.clone().min().unwrap()),
            LatticePoint::new(xs.max().unwrap(), ys.max().unwrap()),
        )
    }

    /// Enumerates boundary points along the edges and interior points by a
    /// bounding-box scan with strict half-plane tests.
    pub fn lattice_census(&self) -> LatticeCensus {
        let mut boundary = Vec::new();
        for (a, b) in self.edges() {
            let steps = LatticeSegment::new(a, b).expect("polygon edges are proper").lattice_length() as i64;
            let (dx, dy) = ((b.x - a.x) / steps, (b.y - a.y) / steps);
            for k in 0..steps {
                boundary.push(LatticePoint::new(a.x + k * dx, a.y + k * dy));
            }
        }

        let (lo, hi) = self.bounding_box();
        let mut interior = Vec::new();
        for y in lo.y..=hi.y {
            for x in lo.x..=hi.x {
                let p = LatticePoint::new(x, y);
                if self.strictly_contains(p) {
                    interior.push(p);
                }
            }
        }

        let pick = PickData {
            twice_area: self.twice_area(),
            interior_count: interior.len() as u128,
            boundary_count: boundary.len() as u128,
        };
        LatticeCensus { pick, boundary, interior }
    }

    /// `floor(B / 3)`, which equals `floor(2/3 (A - I + 1))` by Pick's identity.
    pub fn signature_upper_bound(&self) -> u128 {
        self.boundary_count() / 3
    }

    pub fn translate(&self, by: LatticePoint) -> Self {
        Self { vertices: self.vertices.iter().map(|&p| p + by).collect() }
    }

    pub fn dilate(&self, n: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidInput(format!("dilation factor {n}")));
        }
        Ok(Self { vertices: self.vertices.iter().map(|p| LatticePoint::new(p.x * n, p.y * n)).collect() })
    }
}

pub fn signature_upper_bound(p: &LatticePolygon) -> u128 {
    p.signature_upper_bound()
}

/// On-disk form: `{"points": [[x,y], ...]}`; the polygon is the hull.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonFile {
    pub points: Vec<LatticePoint>,
}

impl PolygonFile {
    pub fn to_polygon(&self) -> Result<LatticePolygon> {
        if let Some(bad) = self.points.iter().find(|p| !p.within_limit()) {
            return Err(Error::CoordinateLimit(bad.x.abs().max(bad.y.abs())));
        }
        hull_of(&self.points)
    }
}

impl From<&LatticePolygon> for PolygonFile {
    fn from(p: &LatticePolygon) -> Self {
        Self { points: p.vertices.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(i64, i64)]) -> Vec<LatticePoint> {
        v.iter().map(|&(x, y)| LatticePoint::new(x, y)).collect()
    }

    #[test]
    fn hull_removes_duplicates() {
        let h = hull_of(&pts(&[(0, 0), (1, 0), (0, 1), (0, 0)])).unwrap();
        assert_eq!(h.vertices(), pts(&[(0, 0), (1, 0), (0, 1)]).as_slice());
    }

    #[test]
    fn hull_drops_collinear_boundary_points() {
        let h = hull_of(&pts(&[(0, 0), (1, 0), (2, 0), (2, 1), (2, 2), (1, 1), (0, 2)])).unwrap();
        assert_eq!(h.vertices(), pts(&[(0, 0), (2, 0), (2, 2), (0, 2)]).as_slice());
    }

    #[test]
    fn hull_rejects_collinear_and_tiny_inputs() {
        assert!(matches!(hull_of(&pts(&[(0, 0), (2, 0), (1, 0)])), Err(Error::Dimension(_))));
        assert!(matches!(hull_of(&pts(&[(0, 0), (0, 0)])), Err(Error::Dimension(_))));
    }

    #[test]
    fn census_unit_triangle_and_square() {
        let tri = hull_of(&pts(&[(0, 0), (1, 0), (0, 1)])).unwrap().lattice_census();
        assert_eq!(tri.pick, PickData { twice_area: 1, interior_count: 0, boundary_count: 3 });
        assert!(tri.pick.satisfies_pick());

        let sq = hull_of(&pts(&[(0, 0), (1, 0), (1, 1), (0, 1)])).unwrap().lattice_census();
        assert_eq!(sq.pick, PickData { twice_area: 2, interior_count: 0, boundary_count: 4 });
    }

    #[test]
    fn bound_of_dilated_unit_triangle() {
        let base = hull_of(&pts(&[(0, 0), (1, 0), (0, 1)])).unwrap();
        for n in 1..=8 {
            assert_eq!(base.dilate(n).unwrap().signature_upper_bound(), n as u128);
        }
    }

    #[test]
    fn from_vertices_validates_orientation() {
        assert!(LatticePolygon::from_vertices(pts(&[(0, 0), (0, 1), (1, 0)])).is_err());
        let p = LatticePolygon::from_vertices(pts(&[(1, 0), (0, 1), (0, 0)])).unwrap();
        assert_eq!(p.vertices()[0], LatticePoint::new(0, 0));
        // pentagram: every turn is left but it winds twice
        let star = pts(&[(0, 0), (4, 0), (1, 3), (2, -2), (3, 3)]);
        assert!(LatticePolygon::from_vertices(star).is_err());
    }

    #[test]
    fn census_point_count_matches_pick() {
        let p = hull_of(&pts(&[(0, 0), (4, 1), (3, 5), (-1, 3)])).unwrap();
        let c = p.lattice_census();
        assert!(c.pick.satisfies_pick());
        assert_eq!(c.point_count() as u128, c.pick.boundary_count + c.pick.interior_count);
        for q in c.all_points() {
            assert!(p.contains(q));
        }
    }
}
