//! Signatures of foldable triangulations of lattice polygons and the
//! Wronski polynomial systems they define.
//!
//! The signature of a dense foldable triangulation is computed two ways:
//! from the 2-coloring of its triangles and from the coloring of its
//! boundary edges of a single parity type. The [`wronski`] module turns a
//! triangulation into a pair of sparse polynomials and counts their common
//! complex and real roots with exact rational arithmetic.

pub mod error;
pub mod generators;
pub mod lattice;
pub mod polygon;
pub mod triangulation;
pub mod wronski;

pub use error::{Error, Result};
pub use generators::{
    enumerate_dense_triangulations, for_each_dense_triangulation, hexagon_fig1, rectangle_grid, staircase, DiagonalPattern,
    EnumerationOptions, EnumerationReport, DEFAULT_ENUMERATION_LIMIT,
};
pub use lattice::{
    orient, segment_type, triangle_edge_profile, EdgeProfile, LatticePoint, LatticeSegment, LatticeTriangle, SegmentType,
    COORDINATE_LIMIT,
};
pub use polygon::{hull_of, signature_upper_bound, LatticeCensus, LatticePolygon, PickData, PolygonFile};
pub use triangulation::{
    BoundaryProfile, ColorCount, Diagnostics, Foldability, OrientationPolicy, TriangleColor, Triangulation, TriangulationFile,
    TwoColoring, VertexColoring, Violation,
};
pub use wronski::{
    build_wronski, count_real_roots, eliminate, kushnirenko_number, solve_system, verify_bound, BoundCheck, SolveReport,
    SparseBivariatePolynomial, UnivariatePolynomial, Var, WronskiCoefficients, WronskiInput, WronskiSystem,
};
