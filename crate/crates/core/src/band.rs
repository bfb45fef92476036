//! Gaps and maximal bands around the puncture.

use std::fmt;

use crate::coloring::{corner_numbers, Coloring};
use crate::surface::Triangulation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BandClass {
    /// More than half of all corners.
    Long,
    /// Fewer than half, flanking gaps not antipodal.
    Short,
    /// Flanking gaps antipodal.
    Half,
    /// Exactly half of all corners.
    Equatorial,
}

impl fmt::Display for BandClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BandClass::Long => "long",
            BandClass::Short => "short",
            BandClass::Half => "half",
            BandClass::Equatorial => "equatorial",
        })
    }
}

/// A maximal cyclic run of corners with positive corner numbers.
///
/// Covers link positions `start, start + 1, ..., start + len - 1` (mod `N`);
/// the corners at `start - 1` and `start + len` are gaps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Band {
    pub start: usize,
    pub len: usize,
    pub class: BandClass,
}

impl Band {
    /// Link position of the last corner in the band.
    pub fn end(&self, n: usize) -> usize {
        (self.start + self.len - 1) % n
    }

    pub fn left_gap(&self, n: usize) -> usize {
        (self.start + n - 1) % n
    }

    pub fn right_gap(&self, n: usize) -> usize {
        (self.start + self.len) % n
    }

    pub fn contains(&self, position: usize, n: usize) -> bool {
        (position + n - self.start) % n < self.len
    }
}

impl fmt::Display for Band {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "band@{} len {} {}", self.start, self.len, self.class)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bands {
    /// Every corner is positive: a curve parallel to the puncture is present.
    NoGaps,
    Maximal(Vec<Band>),
}

impl Bands {
    /// The bands, or an empty slice when there are no gaps.
    pub fn as_slice(&self) -> &[Band] {
        match self {
            Bands::NoGaps => &[],
            Bands::Maximal(b) => b,
        }
    }

    pub fn find(&self, start: usize) -> Option<Band> {
        self.as_slice().iter().copied().find(|b| b.start == start)
    }
}

/// Class of a band of `len` corners in a link of `n` corners.
///
/// The flanking gaps of a maximal band sit `len + 1` apart on one side, so
/// they are antipodal exactly when `len + 1 = n / 2`.
pub fn classify(n: usize, len: usize) -> BandClass {
    if 2 * len > n {
        BandClass::Long
    } else if 2 * len == n {
        BandClass::Equatorial
    } else if 2 * (len + 1) == n {
        BandClass::Half
    } else {
        BandClass::Short
    }
}

/// Maximal bands of `f`, ordered by start position.
pub fn bands(tri: &Triangulation, f: &Coloring) -> Bands {
    let cn = corner_numbers(tri, f).in_link_order(tri);
    bands_of_cycle(&cn)
}

pub(crate) fn bands_of_cycle(cn: &[u64]) -> Bands {
    let n = cn.len();
    if cn.iter().all(|&c| c > 0) {
        return Bands::NoGaps;
    }
    let mut out = Vec::new();
    for gap in 0..n {
        let start = (gap + 1) % n;
        if cn[gap] != 0 || cn[start] == 0 {
            continue;
        }
        let len = (0..n).take_while(|&d| cn[(start + d) % n] > 0).count();
        out.push(Band {
            start,
            len,
            class: classify(n, len),
        });
    }
    out.sort();
    Bands::Maximal(out)
}
