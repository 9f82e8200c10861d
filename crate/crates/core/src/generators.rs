//! Example triangulations and exhaustive enumeration of dense
//! triangulations of small lattice polygons.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::{orient, LatticePoint};
use crate::polygon::LatticePolygon;
use crate::triangulation::{Foldability, OrientationPolicy, Triangulation, TriangulationFile};

/// Default cap on the lattice-point count of polygons handed to the enumerator.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 12;

const HEXAGON_FIG1: &str = include_str!("../fixtures/hexagon_fig1.json");

/// Builds a triangulation over `points` (sorted lexicographically) from
/// triangles given by coordinates.
fn from_coordinate_triangles(mut points: Vec<LatticePoint>, tris: &[[LatticePoint; 3]]) -> Triangulation {
    points.sort();
    let index: HashMap<_, _> = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let triangles = tris
        .iter()
        .map(|t| {
            let mut idx = t.map(|p| index[&p]);
            if orient(t[0], t[1], t[2]) < 0 {
                idx.swap(1, 2);
            }
            idx
        })
        .collect();
    Triangulation::new(points, triangles).expect("generated triangles are non-degenerate")
}

/// Triangulation of `n * conv{(0,0),(1,0),(0,1)}` cut by the lines
/// `x = k`, `y = k`, `x + y = k`.
pub fn staircase(n: usize) -> Result<Triangulation> {
    if n == 0 {
        return Err(Error::InvalidInput("staircase size must be at least 1".into()));
    }
    let n = n as i64;
    let p = LatticePoint::new;
    let mut points = Vec::new();
    let mut tris = Vec::new();
    for i in 0..=n {
        for j in 0..=n - i {
            points.push(p(i, j));
            if i + j < n {
                tris.push([p(i, j), p(i + 1, j), p(i, j + 1)]);
            }
            if i + j < n - 1 {
                tris.push([p(i + 1, j), p(i + 1, j + 1), p(i, j + 1)]);
            }
        }
    }
    Ok(from_coordinate_triangles(points, &tris))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagonalPattern {
    /// Every unit cell split along `(i,j)-(i+1,j+1)`.
    Uniform,
    /// Diagonal direction alternates in a checkerboard.
    Alternating,
}

/// Dense triangulation of `[0,m] x [0,n]`.
pub fn rectangle_grid(m: usize, n: usize, pattern: DiagonalPattern) -> Result<Triangulation> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidInput("rectangle sides must be at least 1".into()));
    }
    let (m, n) = (m as i64, n as i64);
    let p = LatticePoint::new;
    let mut points = Vec::new();
    let mut tris = Vec::new();
    for i in 0..=m {
        for j in 0..=n {
            points.push(p(i, j));
            if i == m || j == n {
                continue;
            }
            let rising = match pattern {
                DiagonalPattern::Uniform => true,
                DiagonalPattern::Alternating => (i + j) % 2 == 0,
            };
            if rising {
                tris.push([p(i, j), p(i + 1, j), p(i + 1, j + 1)]);
                tris.push([p(i, j), p(i + 1, j + 1), p(i, j + 1)]);
            } else {
                tris.push([p(i, j), p(i + 1, j), p(i, j + 1)]);
                tris.push([p(i + 1, j), p(i + 1, j + 1), p(i, j + 1)]);
            }
        }
    }
    Ok(from_coordinate_triangles(points, &tris))
}

/// The 24-point, 33-triangle hexagon fixture.
pub fn hexagon_fig1() -> Triangulation {
    let (t, _) = TriangulationFile::from_json(HEXAGON_FIG1)
        .and_then(|f| f.into_triangulation(OrientationPolicy::Strict))
        .expect("bundled hexagon fixture parses");
    assert_eq!(t.points().len(), 24, "hexagon fixture point count");
    assert_eq!(t.triangles().len(), 33, "hexagon fixture triangle count");
    t
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationReport {
    pub polygon: Vec<LatticePoint>,
    pub total_dense_count: usize,
    pub foldable_count: usize,
    /// signature -> number of foldable triangulations with that signature
    #[serde(serialize_with = "histogram_pairs")]
    pub signature_histogram: BTreeMap<usize, usize>,
}

fn histogram_pairs<S: Serializer>(h: &BTreeMap<usize, usize>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(h.iter().map(|(&k, &v)| [k, v]))
}

#[derive(Debug, Clone, Copy)]
pub struct EnumerationOptions {
    pub foldable_only: bool,
    pub limit: usize,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        Self { foldable_only: false, limit: DEFAULT_ENUMERATION_LIMIT }
    }
}

/// Visits every dense triangulation of `polygon` once, in a deterministic
/// order. `visit` receives each triangulation and its foldability.
pub fn for_each_dense_triangulation<F>(
    polygon: &LatticePolygon,
    opts: EnumerationOptions,
    mut visit: F,
) -> Result<EnumerationReport>
where
    F: FnMut(&Triangulation, &Foldability),
{
    let census = polygon.lattice_census();
    if census.point_count() > opts.limit {
        return Err(Error::TooLarge { count: census.point_count(), limit: opts.limit });
    }
    let points = census.all_points();
    let index: HashMap<_, _> = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();

    let mut frontier = BTreeSet::new();
    let b = &census.boundary;
    for k in 0..b.len() {
        frontier.insert((index[&b[k]], index[&b[(k + 1) % b.len()]]));
    }

    let mut search =
        CoverSearch { points: &points, target: census.pick.twice_area as usize, placed: Vec::new(), seen: HashSet::new() };
    let mut report = EnumerationReport {
        polygon: polygon.vertices().to_vec(),
        total_dense_count: 0,
        foldable_count: 0,
        signature_histogram: BTreeMap::new(),
    };
    search.run(&mut frontier, &mut |tris| {
        let t = Triangulation::new(points.clone(), tris.to_vec()).expect("search emits proper triangles");
        report.total_dense_count += 1;
        let fold = t.bipartition();
        if let Foldability::Foldable(_) = fold {
            report.foldable_count += 1;
            let sig = t.signature_via_triangles().expect("foldable");
            *report.signature_histogram.entry(sig).or_default() += 1;
        } else if opts.foldable_only {
            return;
        }
        visit(&t, &fold);
    });
    Ok(report)
}

/// Collects every dense triangulation (or only the foldable ones).
pub fn enumerate_dense_triangulations(
    polygon: &LatticePolygon,
    opts: EnumerationOptions,
) -> Result<(Vec<Triangulation>, EnumerationReport)> {
    let mut out = Vec::new();
    let report = for_each_dense_triangulation(polygon, opts, |t, _| out.push(t.clone()))?;
    Ok((out, report))
}

/// Depth-first cover search. The frontier holds directed edges with the
/// uncovered part of the polygon on their left.
struct CoverSearch<'a> {
    points: &'a [LatticePoint],
    target: usize,
    placed: Vec<[usize; 3]>,
    seen: HashSet<Vec<[usize; 3]>>,
}

impl CoverSearch<'_> {
    fn run(&mut self, frontier: &mut BTreeSet<(usize, usize)>, emit: &mut dyn FnMut(&[[usize; 3]])) {
        let Some(&(a, b)) = frontier.first() else {
            if self.placed.len() == self.target {
                let mut key: Vec<[usize; 3]> = self
                    .placed
                    .iter()
                    .map(|t| {
                        let mut s = *t;
                        s.sort();
                        s
                    })
                    .collect();
                key.sort();
                if self.seen.insert(key) {
                    emit(&self.placed);
                }
            }
            return;
        };
        if self.placed.len() >= self.target {
            return;
        }
        let (pa, pb) = (self.points[a], self.points[b]);
        for c in 0..self.points.len() {
            if orient(pa, pb, self.points[c]) != 1 {
                continue;
            }
            let tri = [a, b, c];
            if !self.fits(tri) {
                continue;
            }
            // consumed edges are restored from `removed`, added ones from `added`
            let mut removed = vec![(a, b)];
            let mut added = Vec::new();
            frontier.remove(&(a, b));
            for (u, v) in [(b, c), (c, a)] {
                if frontier.remove(&(u, v)) {
                    removed.push((u, v));
                } else if frontier.insert((v, u)) {
                    added.push((v, u));
                }
            }
            self.placed.push(tri);
            self.run(frontier, emit);
            self.placed.pop();
            for e in added {
                frontier.remove(&e);
            }
            frontier.extend(removed);
        }
    }

    /// The candidate's interior misses every placed triangle.
    fn fits(&self, tri: [usize; 3]) -> bool {
        let t = tri.map(|i| self.points[i]);
        self.placed.iter().all(|s| {
            let s = s.map(|i| self.points[i]);
            separated(t, s) || separated(s, t)
        })
    }
}

fn separated(a: [LatticePoint; 3], b: [LatticePoint; 3]) -> bool {
    (0..3).any(|i| b.iter().all(|&v| orient(a[i], a[(i + 1) % 3], v) <= 0))
}
