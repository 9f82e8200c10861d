//! Triangulations of lattice polygons, their colorings and signatures.

mod coloring;
mod signature;
mod validate;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{orient, LatticePoint, LatticeTriangle};
use crate::polygon::{hull_of, LatticePolygon};

pub use coloring::{Foldability, TriangleColor, TwoColoring, VertexColoring};
pub use signature::{BoundaryProfile, ColorCount};
pub use validate::{Diagnostics, Violation};

/// Indexed triangle mesh over lattice points.
///
/// Construction only guarantees in-range indices and non-degenerate,
/// counterclockwise triangles; [`Triangulation::validate`] checks the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    points: Vec<LatticePoint>,
    triangles: Vec<[usize; 3]>,
}

/// How to treat clockwise triangles when reading a file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OrientationPolicy {
    #[default]
    Reorient,
    Strict,
}

/// Unordered edge key.
pub type EdgeKey = (usize, usize);

pub(crate) fn edge_key(a: usize, b: usize) -> EdgeKey {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

impl Triangulation {
    pub fn new(points: Vec<LatticePoint>, triangles: Vec<[usize; 3]>) -> Result<Self> {
        Self::with_policy(points, triangles, OrientationPolicy::Strict).map(|(t, _)| t)
    }

    /// Builds a triangulation, reorienting clockwise triangles when the
    /// policy allows it. Returns the warnings produced by reorientation.
    pub fn with_policy(
        points: Vec<LatticePoint>,
        mut triangles: Vec<[usize; 3]>,
        policy: OrientationPolicy,
    ) -> Result<(Self, Vec<String>)> {
        if let Some(p) = points.iter().find(|p| !p.within_limit()) {
            return Err(Error::CoordinateLimit(p.x.abs().max(p.y.abs())));
        }
        let mut warnings = Vec::new();
        for (k, tri) in triangles.iter_mut().enumerate() {
            if let Some(&bad) = tri.iter().find(|&&i| i >= points.len()) {
                return Err(Error::InvalidInput(format!("triangle {k} references point {bad}, only {} points", points.len())));
            }
            let turn = orient(points[tri[0]], points[tri[1]], points[tri[2]]);
            if turn == 0 {
                return Err(Error::InvalidInput(format!("triangle {k} {tri:?} is degenerate")));
            }
            if turn < 0 {
                match policy {
                    OrientationPolicy::Strict => return Err(Error::InvalidInput(format!("triangle {k} {tri:?} is clockwise"))),
                    OrientationPolicy::Reorient => {
                        warnings.push(format!("triangle {k} {tri:?} was clockwise; reoriented"));
                        tri.swap(1, 2);
                    }
                }
            }
        }
        Ok((Self { points, triangles }, warnings))
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn triangle(&self, k: usize) -> LatticeTriangle {
        let [a, b, c] = self.triangles[k];
        LatticeTriangle::new(self.points[a], self.points[b], self.points[c])
    }

    pub fn hull(&self) -> Result<LatticePolygon> {
        hull_of(&self.points)
    }

    /// Map from each unordered edge to the triangles containing it, in
    /// triangle order.
    pub fn edge_incidence(&self) -> BTreeMap<EdgeKey, Vec<usize>> {
        let mut map: BTreeMap<EdgeKey, Vec<usize>> = BTreeMap::new();
        for (k, &[a, b, c]) in self.triangles.iter().enumerate() {
            for (u, v) in [(a, b), (b, c), (c, a)] {
                map.entry(edge_key(u, v)).or_default().push(k);
            }
        }
        map
    }

    /// Edges contained in exactly one triangle, as the directed pair
    /// taken from that (counterclockwise) triangle, plus the triangle index.
    pub fn boundary_edges(&self) -> Vec<((usize, usize), usize)> {
        let incidence = self.edge_incidence();
        let mut out = Vec::new();
        for (k, &[a, b, c]) in self.triangles.iter().enumerate() {
            for (u, v) in [(a, b), (b, c), (c, a)] {
                if incidence[&edge_key(u, v)].len() == 1 {
                    out.push(((u, v), k));
                }
            }
        }
        out
    }

    /// Index of the triangle whose lexicographically sorted vertex triple is
    /// smallest. Anchors both canonical colorings.
    pub fn anchor_triangle(&self) -> Option<usize> {
        (0..self.triangles.len()).min_by_key(|&k| self.sorted_vertices(k))
    }

    pub(crate) fn sorted_vertices(&self, k: usize) -> [LatticePoint; 3] {
        let mut v = self.triangles[k].map(|i| self.points[i]);
        v.sort();
        v
    }

    /// Index-free canonical form: sorted list of sorted vertex triples.
    pub fn canonical_form(&self) -> Vec<[LatticePoint; 3]> {
        let mut tris: Vec<_> = (0..self.triangles.len()).map(|k| self.sorted_vertices(k)).collect();
        tris.sort();
        tris
    }

    pub fn translate(&self, by: LatticePoint) -> Self {
        Self { points: self.points.iter().map(|&p| p + by).collect(), triangles: self.triangles.clone() }
    }

    pub fn to_file(&self) -> TriangulationFile {
        TriangulationFile { points: self.points.clone(), triangles: self.triangles.clone() }
    }
}

/// On-disk form: `{"points": [[x,y],...], "triangles": [[i,j,k],...]}`,
/// 0-based indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangulationFile {
    pub points: Vec<LatticePoint>,
    pub triangles: Vec<[usize; 3]>,
}

impl TriangulationFile {
    pub fn into_triangulation(self, policy: OrientationPolicy) -> Result<(Triangulation, Vec<String>)> {
        Triangulation::with_policy(self.points, self.triangles, policy)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::InvalidInput(format!("triangulation JSON: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("triangulation serializes")
    }
}
