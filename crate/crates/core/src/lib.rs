//! Least-weight representatives of simple diagrams on a closed surface.
//!
//! A closed surface with one point removed is triangulated by ideal
//! triangles. A simple diagram on the punctured surface is recorded by its
//! normal coordinates, one intersection count per edge. Two such diagrams
//! represent the same diagram on the closed surface exactly when they are
//! related by sliding strands across the filled-in puncture. This crate
//! reduces a diagram to least weight by such handleslides, enumerates every
//! least-weight representative, and decides equivalence.

pub mod band;
pub mod coloring;
pub mod curve;
pub mod io;
pub mod oracle;
pub mod reduce;
pub mod render;
pub mod slide;
pub mod surface;

pub use band::{bands, classify, Band, BandClass, Bands};
pub use coloring::{
    check_admissible, corner_numbers, pushoff_coloring, strip_peripherals, weight, Admissibility,
    Coloring, ColoringError, CornerNumbers,
};
pub use curve::{coloring_of, components, trace, Component, CurveError, CurveSystem, Visit};
pub use slide::{all_slides, slide, SlideError, SlideResult};
pub use surface::{
    punctured_torus, standard_surface, Corner, LinkSide, Slot, Triangulation, TriangulationError,
    VertexLink,
};
pub use oracle::{bfs_closure, random_representative, torus_slope, TorusSlope};
pub use reduce::{
    compare_minimal_sets, equivalent, minimal_set, reduce, replay, unique_minimizer, Certificate,
    EquivalenceVerdict, MinimalSet, ReduceError, ReductionTrace, SlideStep, Uniqueness,
    UniquenessReason,
};
