use serde::Serialize;

use super::{TriangleColor, Triangulation};
use crate::error::{Error, Result};
use crate::lattice::{segment_type, SegmentType};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ColorCount {
    pub black: usize,
    pub white: usize,
}

impl ColorCount {
    pub fn difference(&self) -> usize {
        self.black.abs_diff(self.white)
    }

    pub fn total(&self) -> usize {
        self.black + self.white
    }

    fn add(&mut self, c: TriangleColor) {
        match c {
            TriangleColor::Black => self.black += 1,
            TriangleColor::White => self.white += 1,
        }
    }
}

/// Boundary edges per type, colored by their unique containing triangle.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct BoundaryProfile {
    #[serde(rename = "X")]
    pub x: ColorCount,
    #[serde(rename = "Y")]
    pub y: ColorCount,
    #[serde(rename = "XY")]
    pub xy: ColorCount,
}

impl BoundaryProfile {
    pub fn get(&self, t: SegmentType) -> Option<ColorCount> {
        match t {
            SegmentType::X => Some(self.x),
            SegmentType::Y => Some(self.y),
            SegmentType::XY => Some(self.xy),
            SegmentType::Even => None,
        }
    }

    pub fn total(&self) -> usize {
        self.x.total() + self.y.total() + self.xy.total()
    }
}

impl Triangulation {
    /// `|black - white|` over triangles of odd normalized area.
    pub fn signature_via_triangles(&self) -> Result<usize> {
        let coloring = self.two_coloring()?;
        let mut count = ColorCount::default();
        for k in 0..self.triangles.len() {
            if self.triangle(k).normalized_area() % 2 == 1 {
                count.add(coloring.color(k));
            }
        }
        Ok(count.difference())
    }

    pub fn boundary_profile(&self) -> Result<BoundaryProfile> {
        self.require_dense()?;
        let coloring = self.two_coloring()?;
        let mut profile = BoundaryProfile::default();
        for ((a, b), k) in self.boundary_edges() {
            let slot = match segment_type(self.points[a], self.points[b])? {
                SegmentType::X => &mut profile.x,
                SegmentType::Y => &mut profile.y,
                SegmentType::XY => &mut profile.xy,
                SegmentType::Even => {
                    return Err(Error::NotDense(format!(
                        "boundary edge {}-{} has even coordinate differences",
                        self.points[a], self.points[b]
                    )))
                }
            };
            slot.add(coloring.color(k));
        }
        Ok(profile)
    }

    /// Signature from the boundary edges of one type.
    pub fn signature_via_boundary(&self, t: SegmentType) -> Result<usize> {
        let count = self
            .boundary_profile()?
            .get(t)
            .ok_or_else(|| Error::InvalidInput("boundary signature needs type X, Y or XY".into()))?;
        Ok(count.difference())
    }
}
