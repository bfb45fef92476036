//! Ideal triangulations of a once-punctured oriented surface.
//!
//! A triangulation is a set of `T` triangles whose sides are glued in pairs.
//! Sides of each triangle are numbered `0, 1, 2` counterclockwise; side `s`
//! runs from vertex `P_s` to vertex `P_{s+1}`, and corner `i` sits at vertex
//! `P_{i+1}`, between sides `i` and `i + 1`. Every gluing identifies the
//! start of one side with the end of the other, so the surface inherits the
//! orientation of its triangles.
//!
//! Because there is a single puncture, all corners of all triangles meet at
//! one ideal vertex. Walking around it gives the [`VertexLink`]: a cyclic
//! sequence of `N = 3T` corners separated by `N` edge ends.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// One side of one triangle, before gluing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slot {
    pub triangle: usize,
    pub side: usize,
}

impl Slot {
    pub fn new(triangle: usize, side: usize) -> Self {
        Slot { triangle, side }
    }

    pub(crate) fn id(self) -> usize {
        3 * self.triangle + self.side
    }

    pub(crate) fn from_id(id: usize) -> Self {
        Slot::new(id / 3, id % 3)
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.triangle, self.side)
    }
}

/// Corner `corner` of `triangle`, lying between sides `corner` and `corner + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Corner {
    pub triangle: usize,
    pub corner: usize,
}

impl Corner {
    pub fn new(triangle: usize, corner: usize) -> Self {
        Corner { triangle, corner }
    }

    pub fn id(self) -> usize {
        3 * self.triangle + self.corner
    }

    pub fn from_id(id: usize) -> Self {
        Corner::new(id / 3, id % 3)
    }

    /// The two sides bounding this corner, in counterclockwise order.
    pub fn sides(self) -> (usize, usize) {
        (self.corner, (self.corner + 1) % 3)
    }

    /// Side of the triangle not touching this corner.
    pub fn opposite_side(self) -> usize {
        (self.corner + 2) % 3
    }
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.triangle, self.corner)
    }
}

/// Corner of a triangle bounded by two distinct sides.
pub(crate) fn corner_between(a: usize, b: usize) -> usize {
    debug_assert_ne!(a, b);
    if b == (a + 1) % 3 {
        a
    } else {
        b
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TriangulationError {
    #[error("no gluing pairs given")]
    Empty,
    #[error("slot {0} does not exist in a triangulation with {1} triangles")]
    SlotOutOfRange(Slot, usize),
    #[error("slot {0} appears in more than one gluing pair")]
    DuplicateSlot(Slot),
    #[error("slot {0} is glued to itself")]
    SelfGluing(Slot),
    #[error("slots {0} and {1} belong to the same triangle (folded triangle)")]
    FoldedTriangle(Slot, Slot),
    #[error("{triangles} triangles need {expected} gluing pairs, got {found}")]
    BadCount {
        triangles: usize,
        expected: usize,
        found: usize,
    },
    #[error("vertex link splits into {0} cycles; exactly one puncture is required")]
    MultiplePunctures(usize),
    #[error("genus must be at least 1, got {0}")]
    InvalidGenus(usize),
}

/// Which way around the puncture a pushoff closes up.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LinkSide {
    /// Link positions strictly after the first end and before the second.
    Ccw,
    /// The complementary arc, wrapping through position zero.
    Cw,
}

/// Cyclic order of corners and edge ends around the puncture.
///
/// Crossing `k` separates corner `k` from corner `k + 1`. Walking forward
/// across crossing `k` means leaving the triangle of corner `k` through
/// [`VertexLink::forward_slot`]`(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexLink {
    corners: Vec<Corner>,
    crossings: Vec<usize>,
    forward: Vec<Slot>,
    position_of_corner: Vec<usize>,
    // link position of the end at the start / end of each slot
    start_position: Vec<usize>,
    end_position: Vec<usize>,
    edge_ends: Vec<(usize, usize)>,
}

impl VertexLink {
    pub fn len(&self) -> usize {
        self.corners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }

    pub fn corners(&self) -> &[Corner] {
        &self.corners
    }

    /// Edge index of each crossing, in link order.
    pub fn crossings(&self) -> &[usize] {
        &self.crossings
    }

    pub fn corner(&self, position: usize) -> Corner {
        self.corners[position % self.len()]
    }

    pub fn crossing_edge(&self, position: usize) -> usize {
        self.crossings[position % self.len()]
    }

    pub fn position_of(&self, corner: Corner) -> usize {
        self.position_of_corner[corner.id()]
    }

    /// Slot crossed when moving from corner `k` to corner `k + 1`.
    pub fn forward_slot(&self, position: usize) -> Slot {
        self.forward[position % self.len()]
    }

    /// The two link positions of an edge's ends, smaller first.
    pub fn edge_ends(&self, edge: usize) -> (usize, usize) {
        self.edge_ends[edge]
    }

    /// Link position of the ideal end at the start of a slot.
    pub fn start_position(&self, slot: Slot) -> usize {
        self.start_position[slot.id()]
    }

    pub fn end_position(&self, slot: Slot) -> usize {
        self.end_position[slot.id()]
    }

    /// Cyclic distance between two link positions.
    pub fn distance(&self, a: usize, b: usize) -> usize {
        let n = self.len();
        let d = (a + n - b % n) % n;
        d.min(n - d)
    }

    /// Corners (or edge ends) at these positions are antipodal.
    pub fn antipodal_positions(&self, a: usize, b: usize) -> bool {
        2 * self.distance(a, b) == self.len()
    }

    pub fn antipodal_corners(&self, a: Corner, b: Corner) -> bool {
        self.antipodal_positions(self.position_of(a), self.position_of(b))
    }
}

/// A validated ideal triangulation with exactly one puncture.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    triangles: usize,
    gluing: Vec<Slot>,
    edges: Vec<(Slot, Slot)>,
    edge_of_slot: Vec<usize>,
    link: VertexLink,
}

impl Triangulation {
    /// Glue `triangles` triangles along the given slot pairs.
    ///
    /// Edge `e` is the `e`-th pair. Fails unless the pairs form a
    /// fixed-point-free involution on all `3T` slots with no folded triangle
    /// and a single cycle in the vertex link.
    pub fn build(triangles: usize, pairs: &[(Slot, Slot)]) -> Result<Self, TriangulationError> {
        if pairs.is_empty() || triangles == 0 {
            return Err(TriangulationError::Empty);
        }
        let slots = 3 * triangles;
        let mut gluing: Vec<Option<Slot>> = vec![None; slots];
        let mut edge_of_slot = vec![usize::MAX; slots];
        for (e, &(a, b)) in pairs.iter().enumerate() {
            for s in [a, b] {
                if s.triangle >= triangles || s.side >= 3 {
                    return Err(TriangulationError::SlotOutOfRange(s, triangles));
                }
            }
            if a == b {
                return Err(TriangulationError::SelfGluing(a));
            }
            for s in [a, b] {
                if gluing[s.id()].is_some() {
                    return Err(TriangulationError::DuplicateSlot(s));
                }
            }
            if a.triangle == b.triangle {
                return Err(TriangulationError::FoldedTriangle(a, b));
            }
            gluing[a.id()] = Some(b);
            gluing[b.id()] = Some(a);
            edge_of_slot[a.id()] = e;
            edge_of_slot[b.id()] = e;
        }
        if !triangles.is_multiple_of(2) || 2 * pairs.len() != slots {
            return Err(TriangulationError::BadCount {
                triangles,
                expected: slots / 2,
                found: pairs.len(),
            });
        }
        // With 3T/2 pairs and no duplicates every slot is glued.
        let gluing: Vec<Slot> = gluing.into_iter().map(|s| s.expect("all slots glued")).collect();

        let cycles = count_link_cycles(&gluing);
        if cycles != 1 {
            return Err(TriangulationError::MultiplePunctures(cycles));
        }
        let link = walk_link(&gluing, &edge_of_slot, pairs.len());
        Ok(Triangulation {
            triangles,
            gluing,
            edges: pairs.to_vec(),
            edge_of_slot,
            link,
        })
    }

    pub fn triangle_count(&self) -> usize {
        self.triangles
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Euler characteristic of the punctured surface, `-T/2`.
    pub fn euler_characteristic(&self) -> i64 {
        -(self.triangles as i64) / 2
    }

    /// Genus of the closed surface obtained by filling the puncture.
    pub fn genus(&self) -> usize {
        // chi(F) = 1 - 2g
        (self.triangles + 2) / 4
    }

    pub fn edges(&self) -> &[(Slot, Slot)] {
        &self.edges
    }

    pub fn glued(&self, slot: Slot) -> Slot {
        self.gluing[slot.id()]
    }

    pub fn edge_of(&self, slot: Slot) -> usize {
        self.edge_of_slot[slot.id()]
    }

    /// Edges on the three sides of a triangle.
    pub fn triangle_edges(&self, t: usize) -> [usize; 3] {
        [0, 1, 2].map(|s| self.edge_of(Slot::new(t, s)))
    }

    pub fn link(&self) -> &VertexLink {
        &self.link
    }

    /// Slot-pair list in edge order, suitable for rebuilding.
    pub fn gluing_pairs(&self) -> Vec<(Slot, Slot)> {
        self.edges.clone()
    }

    /// Edges whose two ends sit exactly half the link apart.
    pub fn antipodal_edges(&self) -> BTreeSet<usize> {
        (0..self.edge_count())
            .filter(|&e| {
                let (p, q) = self.link.edge_ends(e);
                self.link.antipodal_positions(p, q)
            })
            .collect()
    }

    /// Whether crossing points along `slot` are numbered from its start.
    ///
    /// Points on an edge are numbered from the end with the smaller link
    /// position, which is the start of exactly one of its two slots.
    pub(crate) fn numbered_from_start(&self, slot: Slot) -> bool {
        self.link.start_position(slot) < self.link.end_position(slot)
    }
}

fn count_link_cycles(gluing: &[Slot]) -> usize {
    let n = gluing.len();
    let mut seen = vec![false; n];
    let mut cycles = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut c = start;
        while !seen[c] {
            seen[c] = true;
            c = link_successor(gluing, Corner::from_id(c)).id();
        }
    }
    cycles
}

fn link_successor(gluing: &[Slot], c: Corner) -> Corner {
    let next = gluing[Slot::new(c.triangle, (c.corner + 1) % 3).id()];
    Corner::new(next.triangle, next.side)
}

fn walk_link(gluing: &[Slot], edge_of_slot: &[usize], edge_count: usize) -> VertexLink {
    let n = gluing.len();
    let mut corners = Vec::with_capacity(n);
    let mut crossings = Vec::with_capacity(n);
    let mut forward = Vec::with_capacity(n);
    let mut position_of_corner = vec![0; n];
    let mut start_position = vec![0; n];
    let mut end_position = vec![0; n];
    let mut ends: Vec<Vec<usize>> = vec![Vec::with_capacity(2); edge_count];

    let mut c = Corner::new(0, 0);
    for k in 0..n {
        corners.push(c);
        position_of_corner[c.id()] = k;
        let out = Slot::new(c.triangle, (c.corner + 1) % 3);
        let into = gluing[out.id()];
        forward.push(out);
        crossings.push(edge_of_slot[out.id()]);
        ends[edge_of_slot[out.id()]].push(k);
        // corner c sits at the start of `out` and at the end of `into`
        start_position[out.id()] = k;
        end_position[into.id()] = k;
        c = Corner::new(into.triangle, into.side);
    }
    let edge_ends = ends.into_iter().map(|v| (v[0], v[1])).collect();
    VertexLink {
        corners,
        crossings,
        forward,
        position_of_corner,
        start_position,
        end_position,
        edge_ends,
    }
}

/// Two triangles glued side-to-side: the once-punctured torus.
pub fn punctured_torus() -> Triangulation {
    let pairs: Vec<_> = (0..3).map(|s| (Slot::new(0, s), Slot::new(1, s))).collect();
    Triangulation::build(2, &pairs).expect("punctured torus is valid")
}

/// Once-punctured surface of the given genus.
///
/// Built from a `4g`-gon with boundary word `a1 b1 a1^-1 b1^-1 ...`, fan
/// triangulated from one polygon vertex: `4g - 2` triangles and `6g - 3`
/// edges. Polygon side pairs come first in edge order, then the diagonals.
pub fn standard_surface(genus: usize) -> Result<Triangulation, TriangulationError> {
    if genus == 0 {
        return Err(TriangulationError::InvalidGenus(genus));
    }
    let n = 4 * genus;
    let triangles = n - 2;
    // triangle r has vertices (v0, v_{r+1}, v_{r+2}); side 1 is polygon side r+1
    let polygon_side = |m: usize| -> Slot {
        if m == 0 {
            Slot::new(0, 0)
        } else if m == n - 1 {
            Slot::new(triangles - 1, 2)
        } else {
            Slot::new(m - 1, 1)
        }
    };
    let mut pairs = Vec::with_capacity(3 * triangles / 2);
    for h in 0..genus {
        let b = 4 * h;
        pairs.push((polygon_side(b), polygon_side(b + 2)));
        pairs.push((polygon_side(b + 1), polygon_side(b + 3)));
    }
    for r in 0..triangles - 1 {
        pairs.push((Slot::new(r, 2), Slot::new(r + 1, 0)));
    }
    Triangulation::build(triangles, &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt_pairs() -> Vec<(Slot, Slot)> {
        (0..3).map(|s| (Slot::new(0, s), Slot::new(1, s))).collect()
    }

    #[test]
    fn torus_link_by_hand() {
        let tri = punctured_torus();
        let link = tri.link();
        let expected: Vec<Corner> = [(0, 0), (1, 1), (0, 2), (1, 0), (0, 1), (1, 2)]
            .iter()
            .map(|&(t, c)| Corner::new(t, c))
            .collect();
        assert_eq!(link.corners(), expected.as_slice());
        // a = 0, b = 1, c = 2
        assert_eq!(link.crossings(), &[1, 2, 0, 1, 2, 0]);
        assert_eq!(link.edge_ends(0), (2, 5));
        assert_eq!(link.edge_ends(1), (0, 3));
        assert_eq!(link.edge_ends(2), (1, 4));
    }

    #[test]
    fn torus_edges_are_all_antipodal() {
        let tri = punctured_torus();
        assert_eq!(tri.antipodal_edges(), BTreeSet::from([0, 1, 2]));
        assert!(tri
            .link()
            .antipodal_corners(Corner::new(0, 0), Corner::new(1, 0)));
        assert!(!tri
            .link()
            .antipodal_corners(Corner::new(0, 0), Corner::new(1, 1)));
    }

    #[test]
    fn folded_triangle_rejected() {
        let mut pairs = pt_pairs();
        pairs[0] = (Slot::new(0, 0), Slot::new(0, 1));
        pairs[1] = (Slot::new(1, 0), Slot::new(1, 1));
        assert!(matches!(
            Triangulation::build(2, &pairs),
            Err(TriangulationError::FoldedTriangle(..))
        ));
    }

    #[test]
    fn build_errors() {
        let s = Slot::new;
        assert_eq!(Triangulation::build(2, &[]), Err(TriangulationError::Empty));
        assert_eq!(
            Triangulation::build(2, &[(s(0, 0), s(0, 0))]),
            Err(TriangulationError::SelfGluing(s(0, 0)))
        );
        assert_eq!(
            Triangulation::build(2, &[(s(0, 0), s(1, 0)), (s(0, 0), s(1, 1))]),
            Err(TriangulationError::DuplicateSlot(s(0, 0)))
        );
        assert_eq!(
            Triangulation::build(2, &[(s(0, 0), s(2, 0))]),
            Err(TriangulationError::SlotOutOfRange(s(2, 0), 2))
        );
        assert!(matches!(
            Triangulation::build(2, &[(s(0, 0), s(1, 0)), (s(0, 1), s(1, 1))]),
            Err(TriangulationError::BadCount { expected: 3, found: 2, .. })
        ));
    }

    #[test]
    fn three_punctured_sphere_rejected() {
        let s = Slot::new;
        let pairs = [(s(0, 0), s(1, 0)), (s(0, 1), s(1, 2)), (s(0, 2), s(1, 1))];
        assert!(matches!(
            Triangulation::build(2, &pairs),
            Err(TriangulationError::MultiplePunctures(3))
        ));
    }

    #[test]
    fn standard_surface_counts() {
        for (g, t, e) in [(1, 2, 3), (2, 6, 9), (3, 10, 15)] {
            let tri = standard_surface(g).unwrap();
            assert_eq!(tri.triangle_count(), t);
            assert_eq!(tri.edge_count(), e);
            assert_eq!(tri.link().len(), 3 * t);
            assert_eq!(tri.genus(), g);
        }
        assert_eq!(
            standard_surface(0),
            Err(TriangulationError::InvalidGenus(0))
        );
    }

    #[test]
    fn standard_surfaces_validate() {
        for g in 1..=5 {
            let tri = standard_surface(g).unwrap();
            let rebuilt = Triangulation::build(tri.triangle_count(), &tri.gluing_pairs()).unwrap();
            assert_eq!(rebuilt, tri);
            assert_eq!(tri.edge_count() - tri.triangle_count(), tri.triangle_count() / 2);
            assert_eq!(tri.euler_characteristic(), 1 - 2 * g as i64);
        }
    }

    #[test]
    fn link_successor_rule_holds() {
        let tri = standard_surface(2).unwrap();
        let link = tri.link();
        let n = link.len();
        let mut edge_hits = vec![0; tri.edge_count()];
        for k in 0..n {
            let c = link.corner(k);
            let out = Slot::new(c.triangle, (c.corner + 1) % 3);
            let next = tri.glued(out);
            assert_eq!(link.corner(k + 1), Corner::new(next.triangle, next.side));
            assert_eq!(link.crossing_edge(k), tri.edge_of(out));
            edge_hits[link.crossing_edge(k)] += 1;
        }
        assert!(edge_hits.iter().all(|&h| h == 2));
        let distinct: BTreeSet<_> = link.corners().iter().collect();
        assert_eq!(distinct.len(), n);
    }

    #[test]
    fn genus_two_antipodal_set_is_stable() {
        let a = standard_surface(2).unwrap().antipodal_edges();
        let b = standard_surface(2).unwrap().antipodal_edges();
        assert_eq!(a, b);
    }
}
