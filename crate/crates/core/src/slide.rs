//! Handleslides of a band's innermost strand across the puncture.
//!
//! The innermost strand of a maximal band runs through the band's corners at
//! depth 1, entering across the edge end before the band and leaving across
//! the edge end after it. Filling in the puncture, that strand is homotopic
//! to the path running the other way around the puncture through the
//! complementary corners. A slide swaps one for the other in the component's
//! visit word and then removes any bigons the swap created.

use thiserror::Error;

use crate::band::{bands, Band, Bands};
use crate::coloring::{check_admissible, Admissibility, Coloring, ColoringError};
use crate::curve::{coloring_of, trace, CurveSystem};
use crate::surface::{Slot, Triangulation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlideResult {
    pub coloring: Coloring,
    /// Weight after minus weight before.
    pub delta: i64,
    /// Bigons removed while renormalizing.
    pub cascades: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SlideError {
    #[error("coloring has {found} values but the triangulation has {expected} edges")]
    LengthMismatch { expected: usize, found: usize },
    #[error("coloring is not admissible: {0}")]
    NotAdmissible(Admissibility),
    #[error("every corner is positive; strip peripheral curves before sliding")]
    PeripheralPresent,
    #[error("no maximal band of length {len} starts at link position {start}")]
    BandNotMaximal { start: usize, len: usize },
}

impl From<ColoringError> for SlideError {
    fn from(e: ColoringError) -> Self {
        match e {
            ColoringError::LengthMismatch { expected, found } => {
                SlideError::LengthMismatch { expected, found }
            }
            ColoringError::NotAdmissible(a) => SlideError::NotAdmissible(a),
        }
    }
}

fn validated_bands(tri: &Triangulation, f: &Coloring) -> Result<Vec<Band>, SlideError> {
    match check_admissible(tri, f.values())? {
        Admissibility::Ok => {}
        verdict => return Err(SlideError::NotAdmissible(verdict)),
    }
    match bands(tri, f) {
        Bands::NoGaps => Err(SlideError::PeripheralPresent),
        Bands::Maximal(b) => Ok(b),
    }
}

/// Slide the innermost strand of `band` across the puncture.
pub fn slide(tri: &Triangulation, f: &Coloring, band: Band) -> Result<SlideResult, SlideError> {
    let maximal = validated_bands(tri, f)?;
    if !maximal
        .iter()
        .any(|b| b.start == band.start && b.len == band.len)
    {
        return Err(SlideError::BandNotMaximal {
            start: band.start,
            len: band.len,
        });
    }
    let cs = trace(tri, f);
    Ok(slide_traced(tri, &cs, f.weight(), band))
}

/// Every maximal band of `f` with the result of sliding it, by band start.
pub fn all_slides(tri: &Triangulation, f: &Coloring) -> Result<Vec<(Band, SlideResult)>, SlideError> {
    let maximal = validated_bands(tri, f)?;
    Ok(slides_unchecked(tri, f, &maximal))
}

pub(crate) fn slides_unchecked(
    tri: &Triangulation,
    f: &Coloring,
    maximal: &[Band],
) -> Vec<(Band, SlideResult)> {
    if maximal.is_empty() {
        return Vec::new();
    }
    let cs = trace(tri, f);
    let weight = f.weight();
    maximal
        .iter()
        .map(|&b| (b, slide_traced(tri, &cs, weight, b)))
        .collect()
}

/// The rewritten, not yet normalized, system for a slide of `band`.
pub fn rewrite(tri: &Triangulation, cs: &CurveSystem, band: Band) -> CurveSystem {
    let link = tri.link();
    let n = link.len();
    let i = band.start;
    let k = band.len;
    let emb = cs
        .embedding()
        .expect("slides start from a traced curve system");
    let (comp, visit) = emb.corner_arcs[link.corner(i).id()][0];

    let mut word = cs.words()[comp].clone();
    let len = word.len();
    let mut v = visit;
    if word[v] != link.forward_slot(i) {
        word = reversed(tri, &word);
        v = len - 1 - v;
    }
    // strand: crossings at link ends i-1, i, ..., i+k-1, starting at word[v-1]
    let first = (v + len - 1) % len;
    debug_assert!((0..=k).all(|d| word[(first + d) % len] == link.forward_slot(i + n - 1 + d)));

    let mut replaced: Vec<Slot> = Vec::with_capacity(len + n - 2 * k - 2);
    for t in 0..n - k - 1 {
        let m = (i + 2 * n - 2 - t) % n;
        replaced.push(tri.glued(link.forward_slot(m)));
    }
    for t in 0..len - k - 1 {
        replaced.push(word[(v + k + t) % len]);
    }

    let mut words = cs.words().to_vec();
    words[comp] = replaced;
    CurveSystem::from_words(words)
}

/// Same curve traversed backwards.
fn reversed(tri: &Triangulation, word: &[Slot]) -> Vec<Slot> {
    let len = word.len();
    (0..len)
        .map(|r| tri.glued(word[(2 * len - 2 - r) % len]))
        .collect()
}

fn slide_traced(tri: &Triangulation, cs: &CurveSystem, weight: u64, band: Band) -> SlideResult {
    let rewritten = rewrite(tri, cs, band);
    let (normal, cascades) = rewritten.normalize_counting(tri);
    debug_assert_eq!(normal.component_count(), cs.component_count());
    let coloring = coloring_of(tri, &normal).expect("normalized system");
    SlideResult {
        delta: coloring.weight() as i64 - weight as i64,
        coloring,
        cascades,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::band::BandClass;
    use crate::curve::components;
    use crate::surface::punctured_torus;

    fn col(v: &[u64]) -> Coloring {
        Coloring::from_values(v.to_vec())
    }

    #[test]
    fn slope_zero_slide_returns_itself() {
        let pt = punctured_torus();
        let f = col(&[0, 1, 1]);
        let band = bands(&pt, &f).find(4).unwrap();
        let r = slide(&pt, &f, band).unwrap();
        assert_eq!(r.coloring, f);
        assert_eq!(r.delta, 0);
        // raw change N - 2k - 2 = 2, undone by one bigon on edge a
        assert_eq!(r.cascades, 1);
    }

    #[test]
    fn rewrite_before_normalizing() {
        let pt = punctured_torus();
        let f = col(&[0, 1, 1]);
        let cs = trace(&pt, &f);
        let band = bands(&pt, &f).find(4).unwrap();
        let raw = rewrite(&pt, &cs, band);
        assert_eq!(raw.crossing_count(), 4);
        assert!(!raw.is_normal(&pt));
        let edges: Vec<_> = raw.words()[0].iter().map(|&s| pt.edge_of(s)).collect();
        assert_eq!(edges, vec![0, 2, 1, 0]);
    }

    #[test]
    fn half_band_slide_on_torus() {
        let pt = punctured_torus();
        let f = col(&[2, 1, 1]);
        let all = all_slides(&pt, &f).unwrap();
        assert_eq!(all.len(), 2);
        for (band, r) in all {
            assert_eq!(band.class, BandClass::Half);
            assert_eq!(r.coloring, f);
            assert_eq!(r.delta, 0);
        }
    }

    #[test]
    fn slides_keep_component_count() {
        let pt = punctured_torus();
        let f = col(&[0, 2, 2]);
        for (_, r) in all_slides(&pt, &f).unwrap() {
            let comps = components(&pt, &trace(&pt, &r.coloring));
            assert_eq!(comps.len(), 2);
        }
    }

    #[test]
    fn slide_errors() {
        let pt = punctured_torus();
        let band = Band { start: 1, len: 1, class: BandClass::Short };
        assert!(matches!(
            slide(&pt, &col(&[2, 2, 2]), band),
            Err(SlideError::PeripheralPresent)
        ));
        assert!(matches!(
            slide(&pt, &col(&[0, 1, 1]), Band { start: 2, ..band }),
            Err(SlideError::BandNotMaximal { start: 2, len: 1 })
        ));
        assert!(matches!(
            slide(&pt, &col(&[0, 1]), band),
            Err(SlideError::LengthMismatch { .. })
        ));
        assert!(matches!(
            slide(&pt, &col(&[1, 1, 1]), band),
            Err(SlideError::NotAdmissible(_))
        ));
        assert!(all_slides(&pt, &col(&[0, 0, 0])).unwrap().is_empty());
    }
}
