use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use super::Triangulation;
use crate::lattice::{orient, LatticePoint};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    TooFewPoints,
    DuplicatePoint {
        point: LatticePoint,
    },
    UnusedPoint {
        index: usize,
    },
    DuplicateTriangle {
        first: usize,
        second: usize,
    },
    NonManifoldEdge {
        edge: (usize, usize),
        triangles: usize,
    },
    /// A point lies in the relative interior of an edge or the interior of a triangle.
    HangingPoint {
        index: usize,
        triangle: usize,
    },
    Overlap {
        first: usize,
        second: usize,
    },
    AreaMismatch {
        triangles: u128,
        hull: u128,
    },
    BoundaryEdgeInside {
        edge: (usize, usize),
    },
    DisconnectedDual,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooFewPoints => write!(f, "points do not span the plane"),
            Violation::DuplicatePoint { point } => write!(f, "point {point} appears more than once"),
            Violation::UnusedPoint { index } => write!(f, "point {index} is not a vertex of any triangle"),
            Violation::DuplicateTriangle { first, second } => {
                write!(f, "triangles {first} and {second} coincide")
            }
            Violation::NonManifoldEdge { edge, triangles } => {
                write!(f, "edge {edge:?} lies in {triangles} triangles")
            }
            Violation::HangingPoint { index, triangle } => {
                write!(f, "point {index} lies inside triangle {triangle} or on one of its edges")
            }
            Violation::Overlap { first, second } => write!(f, "triangles {first} and {second} overlap"),
            Violation::AreaMismatch { triangles, hull } => {
                write!(f, "triangles cover normalized area {triangles}, hull has {hull}")
            }
            Violation::BoundaryEdgeInside { edge } => {
                write!(f, "edge {edge:?} has one triangle but is not on the hull boundary")
            }
            Violation::DisconnectedDual => write!(f, "dual graph is disconnected"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostics {
    pub is_valid: bool,
    pub is_dense: bool,
    pub is_unimodular: bool,
    pub violations: Vec<Violation>,
}

impl Diagnostics {
    pub fn messages(&self) -> Vec<String> {
        self.violations.iter().map(ToString::to_string).collect()
    }
}

/// Closed triangle `t` and `s` have disjoint interiors iff some edge line
/// of either one weakly separates them.
fn interiors_disjoint(t: [LatticePoint; 3], s: [LatticePoint; 3]) -> bool {
    let separated_by_edge_of = |a: [LatticePoint; 3], b: [LatticePoint; 3]| {
        (0..3).any(|i| {
            let (p, q) = (a[i], a[(i + 1) % 3]);
            b.iter().all(|&v| orient(p, q, v) <= 0)
        })
    };
    separated_by_edge_of(t, s) || separated_by_edge_of(s, t)
}

/// True if `p` is in the closed triangle but is none of its vertices.
fn hangs_in(tri: [LatticePoint; 3], p: LatticePoint) -> bool {
    !tri.contains(&p) && (0..3).all(|i| orient(tri[i], tri[(i + 1) % 3], p) >= 0)
}

impl Triangulation {
    pub fn validate(&self) -> Diagnostics {
        let mut violations = Vec::new();
        let pts = &self.points;
        let tri_pts: Vec<[LatticePoint; 3]> = self.triangles.iter().map(|t| t.map(|i| pts[i])).collect();

        let mut seen = BTreeSet::new();
        for &p in pts {
            if !seen.insert(p) {
                violations.push(Violation::DuplicatePoint { point: p });
            }
        }

        let mut used = vec![false; pts.len()];
        for t in &self.triangles {
            for &i in t {
                used[i] = true;
            }
        }
        violations.extend(used.iter().enumerate().filter(|(_, u)| !**u).map(|(index, _)| Violation::UnusedPoint { index }));

        let mut first_with: std::collections::BTreeMap<[LatticePoint; 3], usize> = Default::default();
        for k in 0..self.triangles.len() {
            if let Some(&first) = first_with.get(&self.sorted_vertices(k)) {
                violations.push(Violation::DuplicateTriangle { first, second: k });
            } else {
                first_with.insert(self.sorted_vertices(k), k);
            }
        }

        let incidence = self.edge_incidence();
        for (&edge, tris) in &incidence {
            if tris.len() > 2 {
                violations.push(Violation::NonManifoldEdge { edge, triangles: tris.len() });
            }
        }

        for (index, &p) in pts.iter().enumerate() {
            if let Some(triangle) = tri_pts.iter().position(|&t| hangs_in(t, p)) {
                violations.push(Violation::HangingPoint { index, triangle });
            }
        }

        for i in 0..tri_pts.len() {
            for j in i + 1..tri_pts.len() {
                if !interiors_disjoint(tri_pts[i], tri_pts[j]) {
                    violations.push(Violation::Overlap { first: i, second: j });
                }
            }
        }

        match self.hull() {
            Err(_) => violations.push(Violation::TooFewPoints),
            Ok(hull) => {
                let covered: u128 = (0..self.triangles.len()).map(|k| self.triangle(k).normalized_area()).sum();
                let whole = hull.twice_area();
                if covered != whole {
                    violations.push(Violation::AreaMismatch { triangles: covered, hull: whole });
                }
                for (&(a, b), tris) in &incidence {
                    if tris.len() == 1 {
                        let on_hull_edge = hull.edges().any(|(u, v)| orient(u, v, pts[a]) == 0 && orient(u, v, pts[b]) == 0);
                        if !on_hull_edge {
                            violations.push(Violation::BoundaryEdgeInside { edge: (a, b) });
                        }
                    }
                }
            }
        }

        if !self.triangles.is_empty() && !self.dual_connected() {
            violations.push(Violation::DisconnectedDual);
        }

        let is_unimodular = (0..self.triangles.len()).all(|k| self.triangle(k).normalized_area() == 1);
        let is_dense = match self.hull() {
            Ok(hull) => {
                let census: BTreeSet<_> = hull.lattice_census().all_points().into_iter().collect();
                census == seen
            }
            Err(_) => false,
        };

        Diagnostics { is_valid: violations.is_empty(), is_dense, is_unimodular, violations }
    }

    fn dual_connected(&self) -> bool {
        let adj = self.dual_adjacency();
        let mut seen = vec![false; self.triangles.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &(v, _) in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub(crate) fn require_valid(&self) -> crate::Result<Diagnostics> {
        let d = self.validate();
        if d.is_valid {
            Ok(d)
        } else {
            Err(crate::Error::InvalidTriangulation(d.messages()))
        }
    }
}
