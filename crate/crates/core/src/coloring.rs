//! Admissible edge colorings (normal coordinates of simple diagrams).

use std::fmt;

use thiserror::Error;

use crate::surface::{Corner, LinkSide, Triangulation};

/// One nonnegative integer per edge, in edge-index order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Coloring(Vec<u64>);

impl Coloring {
    pub fn from_values(values: Vec<u64>) -> Self {
        Coloring(values)
    }

    pub fn zero(edges: usize) -> Self {
        Coloring(vec![0; edges])
    }

    /// Validate `values` against `tri`.
    pub fn admissible(tri: &Triangulation, values: Vec<u64>) -> Result<Self, ColoringError> {
        match check_admissible(tri, &values)? {
            Admissibility::Ok => Ok(Coloring(values)),
            verdict => Err(ColoringError::NotAdmissible(verdict)),
        }
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&v| v == 0)
    }

    pub fn get(&self, edge: usize) -> u64 {
        self.0[edge]
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Add `times` copies of the curve parallel to the puncture.
    pub fn with_peripherals(&self, times: u64) -> Coloring {
        Coloring(self.0.iter().map(|v| v + 2 * times).collect())
    }
}

impl std::ops::Add<&Coloring> for &Coloring {
    type Output = Coloring;

    fn add(self, rhs: &Coloring) -> Coloring {
        assert_eq!(self.len(), rhs.len(), "coloring length mismatch");
        Coloring(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Outcome of the admissibility check, naming the first offending item.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Admissibility {
    Ok,
    ParityViolation { triangle: usize },
    NegativeCorner { corner: Corner },
}

impl fmt::Display for Admissibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Admissibility::Ok => f.write_str("ok"),
            Admissibility::ParityViolation { triangle } => {
                write!(f, "parity_violation: triangle {triangle} has an odd side sum")
            }
            Admissibility::NegativeCorner { corner } => {
                write!(f, "negative_corner: corner {corner} violates the triangle inequality")
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring has {found} values but the triangulation has {expected} edges")]
    LengthMismatch { expected: usize, found: usize },
    #[error("coloring is not admissible: {0}")]
    NotAdmissible(Admissibility),
}

pub fn check_admissible(tri: &Triangulation, values: &[u64]) -> Result<Admissibility, ColoringError> {
    if values.len() != tri.edge_count() {
        return Err(ColoringError::LengthMismatch {
            expected: tri.edge_count(),
            found: values.len(),
        });
    }
    for t in 0..tri.triangle_count() {
        let f = tri.triangle_edges(t).map(|e| values[e] as i128);
        if (f[0] + f[1] + f[2]) % 2 != 0 {
            return Ok(Admissibility::ParityViolation { triangle: t });
        }
        for i in 0..3 {
            if f[i] + f[(i + 1) % 3] < f[(i + 2) % 3] {
                return Ok(Admissibility::NegativeCorner {
                    corner: Corner::new(t, i),
                });
            }
        }
    }
    Ok(Admissibility::Ok)
}

/// Corner numbers of an admissible coloring, indexed by [`Corner::id`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CornerNumbers(Vec<u64>);

impl CornerNumbers {
    pub fn at(&self, corner: Corner) -> u64 {
        self.0[corner.id()]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    /// Corner numbers read around the puncture in link order.
    pub fn in_link_order(&self, tri: &Triangulation) -> Vec<u64> {
        tri.link().corners().iter().map(|&c| self.at(c)).collect()
    }

    pub fn min(&self) -> u64 {
        self.0.iter().copied().min().unwrap_or(0)
    }
}

/// Strands cutting each corner: `(f(a) + f(b) - f(c)) / 2` for the corner
/// between sides `a` and `b` opposite `c`.
pub fn corner_numbers(tri: &Triangulation, f: &Coloring) -> CornerNumbers {
    let mut out = Vec::with_capacity(3 * tri.triangle_count());
    for t in 0..tri.triangle_count() {
        let v = tri.triangle_edges(t).map(|e| f.get(e));
        for i in 0..3 {
            let (a, b, c) = (v[i], v[(i + 1) % 3], v[(i + 2) % 3]);
            debug_assert!(a + b >= c && (a + b - c) % 2 == 0, "coloring not admissible");
            out.push((a + b - c) / 2);
        }
    }
    CornerNumbers(out)
}

pub fn weight(f: &Coloring) -> u64 {
    f.weight()
}

/// Remove curves parallel to the puncture.
///
/// Each such curve cuts every corner once, so the number removed is the
/// smallest corner number; the result has a gap or is empty.
pub fn strip_peripherals(tri: &Triangulation, f: &Coloring) -> (Coloring, u64) {
    let count = corner_numbers(tri, f).min();
    let stripped = Coloring(f.values().iter().map(|v| v - 2 * count).collect());
    (stripped, count)
}

/// Coloring of the closed curve obtained by running along `edge` and
/// closing it around the puncture on the chosen side.
///
/// Counts each edge end strictly between the two ends of `edge` on that side.
pub fn pushoff_coloring(tri: &Triangulation, edge: usize, side: LinkSide) -> Coloring {
    let link = tri.link();
    let n = link.len();
    let (p, q) = link.edge_ends(edge);
    let (from, to) = match side {
        LinkSide::Ccw => (p, q),
        LinkSide::Cw => (q, p + n),
    };
    let mut values = vec![0; tri.edge_count()];
    for pos in from + 1..to {
        values[link.crossing_edge(pos)] += 1;
    }
    Coloring(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{punctured_torus, standard_surface};

    fn col(v: &[u64]) -> Coloring {
        Coloring::from_values(v.to_vec())
    }

    #[test]
    fn admissibility_verdicts() {
        let pt = punctured_torus();
        assert_eq!(
            check_admissible(&pt, &[1, 1, 1]),
            Ok(Admissibility::ParityViolation { triangle: 0 })
        );
        assert!(matches!(
            check_admissible(&pt, &[4, 1, 1]),
            Ok(Admissibility::NegativeCorner { .. })
        ));
        assert_eq!(check_admissible(&pt, &[2, 1, 1]), Ok(Admissibility::Ok));
        assert_eq!(
            check_admissible(&pt, &[2, 1]),
            Err(ColoringError::LengthMismatch { expected: 3, found: 2 })
        );
    }

    #[test]
    fn torus_corner_numbers() {
        let pt = punctured_torus();
        let cn = corner_numbers(&pt, &col(&[2, 1, 1]));
        for t in 0..2 {
            assert_eq!(cn.at(Corner::new(t, 0)), 1);
            assert_eq!(cn.at(Corner::new(t, 1)), 0);
            assert_eq!(cn.at(Corner::new(t, 2)), 1);
        }
        assert!(corner_numbers(&pt, &col(&[0, 0, 0])).as_slice().iter().all(|&c| c == 0));
        assert!(corner_numbers(&pt, &col(&[2, 2, 2])).as_slice().iter().all(|&c| c == 1));
        assert_eq!(cn.in_link_order(&pt), vec![1, 0, 1, 1, 0, 1]);
    }

    #[test]
    fn weights() {
        assert_eq!(weight(&col(&[2, 1, 1])), 4);
        assert_eq!(weight(&col(&[0, 0, 0])), 0);
        let g2 = standard_surface(2).unwrap();
        assert_eq!(weight(&Coloring::from_values(vec![2; g2.edge_count()])), 18);
    }

    #[test]
    fn stripping() {
        let pt = punctured_torus();
        assert_eq!(strip_peripherals(&pt, &col(&[2, 2, 2])), (col(&[0, 0, 0]), 1));
        assert_eq!(strip_peripherals(&pt, &col(&[0, 1, 1])), (col(&[0, 1, 1]), 0));
        assert_eq!(strip_peripherals(&pt, &col(&[2, 3, 3])), (col(&[0, 1, 1]), 1));
        assert_eq!(strip_peripherals(&pt, &col(&[0, 0, 0])), (col(&[0, 0, 0]), 0));
    }

    #[test]
    fn torus_pushoffs() {
        let pt = punctured_torus();
        for side in [LinkSide::Ccw, LinkSide::Cw] {
            assert_eq!(pushoff_coloring(&pt, 0, side), col(&[0, 1, 1]));
            assert_eq!(pushoff_coloring(&pt, 1, side), col(&[1, 0, 1]));
            assert_eq!(pushoff_coloring(&pt, 2, side), col(&[1, 1, 0]));
        }
    }

    #[test]
    fn pushoff_weights_track_antipodality() {
        for g in 1..=3 {
            let tri = standard_surface(g).unwrap();
            let antipodal = tri.antipodal_edges();
            for e in 0..tri.edge_count() {
                let ccw = pushoff_coloring(&tri, e, LinkSide::Ccw).weight();
                let cw = pushoff_coloring(&tri, e, LinkSide::Cw).weight();
                assert_eq!(ccw + cw + 2, tri.link().len() as u64);
                assert_eq!(ccw == cw, antipodal.contains(&e));
            }
        }
    }

    #[test]
    fn adjacent_ends_give_empty_pushoff() {
        let tri = standard_surface(2).unwrap();
        let link = tri.link();
        let n = link.len();
        for e in 0..tri.edge_count() {
            let (p, q) = link.edge_ends(e);
            if q == p + 1 {
                assert!(pushoff_coloring(&tri, e, LinkSide::Ccw).is_zero());
            }
            if p == 0 && q == n - 1 {
                assert!(pushoff_coloring(&tri, e, LinkSide::Cw).is_zero());
            }
        }
    }
}
