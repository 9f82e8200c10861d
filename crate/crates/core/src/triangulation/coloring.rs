use std::collections::VecDeque;

use serde::Serialize;

use super::{EdgeKey, Triangulation};
use crate::error::{Error, Result};
use crate::lattice::LatticePoint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TriangleColor {
    Black,
    White,
}

impl TriangleColor {
    pub fn flip(self) -> Self {
        match self {
            TriangleColor::Black => TriangleColor::White,
            TriangleColor::White => TriangleColor::Black,
        }
    }
}

/// Proper 2-coloring of the dual graph; the anchor triangle is black.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoColoring {
    pub colors: Vec<TriangleColor>,
}

impl TwoColoring {
    pub fn color(&self, triangle: usize) -> TriangleColor {
        self.colors[triangle]
    }

    pub fn black_count(&self) -> usize {
        self.colors.iter().filter(|&&c| c == TriangleColor::Black).count()
    }

    pub fn white_count(&self) -> usize {
        self.colors.len() - self.black_count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Foldability {
    Foldable(TwoColoring),
    /// Triangle indices forming an odd closed walk in the dual graph.
    OddCycle(Vec<usize>),
}

impl Foldability {
    pub fn is_foldable(&self) -> bool {
        matches!(self, Foldability::Foldable(_))
    }
}

/// Labels in {1, 2, 3} per point index; the anchor triangle's vertices in
/// lexicographic order carry 1, 2, 3.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexColoring {
    pub labels: Vec<u8>,
}

impl VertexColoring {
    pub fn label(&self, point: usize) -> u8 {
        self.labels[point]
    }

    /// Same partition of the points up to permuting the labels.
    pub fn is_relabeling_of(&self, other: &VertexColoring) -> bool {
        if self.labels.len() != other.labels.len() {
            return false;
        }
        let mut map = [0u8; 4];
        let mut used = [false; 4];
        for (&a, &b) in self.labels.iter().zip(&other.labels) {
            let a = a as usize;
            if map[a] == 0 {
                if used[b as usize] {
                    return false;
                }
                map[a] = b;
                used[b as usize] = true;
            } else if map[a] != b {
                return false;
            }
        }
        true
    }
}

impl Triangulation {
    /// Dual graph: for each triangle, its neighbours and the shared edge.
    pub fn dual_adjacency(&self) -> Vec<Vec<(usize, EdgeKey)>> {
        let mut adj = vec![Vec::new(); self.triangles.len()];
        for (edge, tris) in self.edge_incidence() {
            if let [s, t] = tris[..] {
                adj[s].push((t, edge));
                adj[t].push((s, edge));
            }
        }
        adj
    }

    /// Bipartition of the dual graph by breadth-first search from the anchor.
    pub fn is_foldable(&self) -> Result<Foldability> {
        self.require_valid()?;
        Ok(self.bipartition())
    }

    pub(crate) fn bipartition(&self) -> Foldability {
        let n = self.triangles.len();
        let adj = self.dual_adjacency();
        let root = self.anchor_triangle().expect("valid triangulations are non-empty");
        let mut color: Vec<Option<TriangleColor>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        color[root] = Some(TriangleColor::Black);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &(v, _) in &adj[u] {
                match color[v] {
                    None => {
                        color[v] = Some(cu.flip());
                        parent[v] = u;
                        depth[v] = depth[u] + 1;
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return Foldability::OddCycle(odd_cycle(&parent, &depth, u, v)),
                    Some(_) => {}
                }
            }
        }
        Foldability::Foldable(TwoColoring { colors: color.into_iter().map(|c| c.unwrap()).collect() })
    }

    pub fn two_coloring(&self) -> Result<TwoColoring> {
        match self.is_foldable()? {
            Foldability::Foldable(c) => Ok(c),
            Foldability::OddCycle(w) => Err(Error::NotFoldable(w)),
        }
    }

    /// Number of distinct edges at each point.
    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.points.len()];
        for &(a, b) in self.edge_incidence().keys() {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// Points that are not endpoints of any boundary edge.
    pub fn interior_vertices(&self) -> Vec<usize> {
        let mut on_boundary = vec![false; self.points.len()];
        for ((a, b), _) in self.boundary_edges() {
            on_boundary[a] = true;
            on_boundary[b] = true;
        }
        (0..self.points.len()).filter(|&i| !on_boundary[i]).collect()
    }

    /// Planar foldability criterion: every interior vertex has even degree.
    pub fn interior_degrees_even(&self) -> bool {
        let deg = self.vertex_degrees();
        self.interior_vertices().into_iter().all(|i| deg[i].is_multiple_of(2))
    }

    /// Canonical proper 3-coloring of the points, propagated across the
    /// dual graph. Requires a dense foldable triangulation.
    pub fn vertex_three_coloring(&self) -> Result<VertexColoring> {
        self.require_dense()?;
        self.two_coloring()?;
        self.propagate_labels(self.anchor_seed([1, 2, 3]))
    }

    /// The anchor triangle's points in lexicographic order, paired with `seed`.
    pub(crate) fn anchor_seed(&self, seed: [u8; 3]) -> [(usize, u8); 3] {
        let anchor = self.anchor_triangle().expect("non-empty");
        let mut idx = self.triangles[anchor];
        idx.sort_by_key(|&i| self.points[i]);
        [(idx[0], seed[0]), (idx[1], seed[1]), (idx[2], seed[2])]
    }

    /// Label propagation from a seeded anchor triangle. Errors on a conflict.
    pub fn propagate_labels(&self, seed: [(usize, u8); 3]) -> Result<VertexColoring> {
        let n = self.triangles.len();
        let mut labels = vec![0u8; self.points.len()];
        for (i, l) in seed {
            labels[i] = l;
        }
        let anchor = self
            .triangles
            .iter()
            .position(|t| {
                let mut a = *t;
                let mut b = seed.map(|(i, _)| i);
                a.sort();
                b.sort();
                a == b
            })
            .ok_or_else(|| Error::InvalidInput("seed is not a triangle".into()))?;
        let adj = self.dual_adjacency();
        let mut visited = vec![false; n];
        visited[anchor] = true;
        let mut queue = VecDeque::from([anchor]);
        while let Some(u) = queue.pop_front() {
            for &(v, (a, b)) in &adj[u] {
                let opposite = self.triangles[v].into_iter().find(|&i| i != a && i != b).unwrap();
                let want = 6 - labels[a] - labels[b];
                if labels[opposite] == 0 {
                    labels[opposite] = want;
                } else if labels[opposite] != want {
                    return Err(Error::NotFoldable(vec![u, v]));
                }
                if !visited[v] {
                    visited[v] = true;
                    queue.push_back(v);
                }
            }
        }
        Ok(VertexColoring { labels })
    }

    /// Label of the point at `p`, if present.
    pub fn point_index(&self, p: LatticePoint) -> Option<usize> {
        self.points.iter().position(|&q| q == p)
    }

    pub(crate) fn require_dense(&self) -> Result<()> {
        let d = self.require_valid()?;
        if !d.is_dense {
            return Err(Error::NotDense("vertex set is not the full lattice census of the hull".into()));
        }
        Ok(())
    }
}

/// Closed walk `v .. lca .. u` through the BFS tree plus the edge `u - v`.
fn odd_cycle(parent: &[usize], depth: &[usize], u: usize, v: usize) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}
