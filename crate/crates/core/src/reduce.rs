//! Reduction to least weight, the set of least-weight representatives, and
//! the equivalence decision on the closed surface.
//!
//! Reduction is greedy: at every step the slide with the most negative
//! measured weight change is taken (ties go to the smallest band start).
//! When no slide lowers the weight, the coloring's plateau (everything
//! reachable by weight-preserving slides) is searched for a descent before
//! stopping. That closure is also the set of least-weight representatives.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use log::warn;
use thiserror::Error;

use crate::band::{bands, Band, BandClass, Bands};
use crate::coloring::{
    check_admissible, pushoff_coloring, strip_peripherals, Admissibility, Coloring, ColoringError,
};
use crate::curve::{components, trace};
use crate::slide::{slides_unchecked, SlideError};
use crate::surface::{LinkSide, Triangulation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReduceError {
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Slide(#[from] SlideError),
    #[error("weight cap {cap} is below the input weight {weight}")]
    CapTooSmall { cap: u64, weight: u64 },
    #[error("no maximal band starts at link position {0}")]
    UnknownBand(usize),
    #[error("slope oracle needs a two-triangle punctured torus")]
    NotTorusFixture,
    #[error("peripheral curves must be stripped first")]
    PeripheralPresent,
}

/// One applied slide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlideStep {
    pub band: Band,
    pub delta: i64,
    pub coloring: Coloring,
}

impl fmt::Display for SlideStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} delta {:+} -> {}", self.band, self.delta, self.coloring)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub initial: Coloring,
    /// Peripheral curves removed before sliding.
    pub peripheral_count: u64,
    pub stripped: Coloring,
    pub steps: Vec<SlideStep>,
    pub final_coloring: Coloring,
    /// Whether a descent had to be found by searching a plateau.
    pub plateau_used: bool,
}

impl ReductionTrace {
    pub fn band_starts(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.band.start).collect()
    }
}

/// All least-weight representatives reachable from the reduced coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalSet {
    pub weight: u64,
    pub peripheral_count: u64,
    pub reduction: ReductionTrace,
    /// Each member with a weight-preserving slide path from the reduced
    /// coloring.
    pub members: BTreeMap<Coloring, Vec<SlideStep>>,
}

impl MinimalSet {
    pub fn colorings(&self) -> impl Iterator<Item = &Coloring> {
        self.members.keys()
    }

    pub fn contains(&self, f: &Coloring) -> bool {
        self.members.contains_key(f)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Slide paths from each input to a shared least-weight coloring.
///
/// Each path starts after stripping peripherals and lists band start
/// positions in application order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub common: Coloring,
    pub from_first: Vec<SlideStep>,
    pub from_second: Vec<SlideStep>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceVerdict {
    pub equivalent: bool,
    pub peripheral_counts: (u64, u64),
    pub minimal_weights: (u64, u64),
    /// False when the two minimal sets meet without being equal.
    pub sets_agree: bool,
    pub certificate: Option<Certificate>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UniquenessReason {
    HalfBand { start: usize },
    AntipodalPushoff { edge: usize },
}

impl fmt::Display for UniquenessReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UniquenessReason::HalfBand { start } => write!(f, "half band at {start}"),
            UniquenessReason::AntipodalPushoff { edge } => {
                write!(f, "antipodal-pushoff component: edge {edge}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Uniqueness {
    GuaranteedUnique,
    /// The listed conditions allow, but do not force, several minimizers.
    NotGuaranteed(Vec<UniquenessReason>),
}

fn validate(tri: &Triangulation, f: &Coloring) -> Result<(), ReduceError> {
    match check_admissible(tri, f.values())? {
        Admissibility::Ok => Ok(()),
        verdict => Err(ColoringError::NotAdmissible(verdict).into()),
    }
}

/// Slides from a stripped coloring; colorings with no gap have none.
fn neighbours(tri: &Triangulation, f: &Coloring) -> Vec<(Band, crate::slide::SlideResult)> {
    match bands(tri, f) {
        Bands::NoGaps => Vec::new(),
        Bands::Maximal(b) => slides_unchecked(tri, f, &b),
    }
}

enum Plateau {
    /// Weight-preserving steps followed by one descending step.
    Descent(Vec<SlideStep>),
    /// The whole plateau with a path to each member.
    Closed(BTreeMap<Coloring, Vec<SlideStep>>),
}

fn explore_plateau(tri: &Triangulation, root: &Coloring) -> Plateau {
    let mut paths: BTreeMap<Coloring, Vec<SlideStep>> = BTreeMap::new();
    paths.insert(root.clone(), Vec::new());
    let mut queue = VecDeque::from([root.clone()]);
    while let Some(current) = queue.pop_front() {
        let slides = neighbours(tri, &current);
        let descent = slides
            .iter()
            .filter(|(_, r)| r.delta < 0)
            .min_by_key(|(b, r)| (r.delta, b.start));
        if let Some((band, r)) = descent {
            let mut path = paths.remove(&current).unwrap_or_default();
            path.push(SlideStep {
                band: *band,
                delta: r.delta,
                coloring: r.coloring.clone(),
            });
            return Plateau::Descent(path);
        }
        for (band, r) in slides {
            if r.delta == 0 && !paths.contains_key(&r.coloring) {
                let mut path = paths[&current].clone();
                path.push(SlideStep {
                    band,
                    delta: 0,
                    coloring: r.coloring.clone(),
                });
                paths.insert(r.coloring.clone(), path);
                queue.push_back(r.coloring);
            }
        }
    }
    Plateau::Closed(paths)
}

fn reduce_with_closure(
    tri: &Triangulation,
    f: &Coloring,
) -> Result<(ReductionTrace, BTreeMap<Coloring, Vec<SlideStep>>), ReduceError> {
    validate(tri, f)?;
    let (stripped, peripheral_count) = strip_peripherals(tri, f);
    let mut current = stripped.clone();
    let mut steps = Vec::new();
    let mut plateau_used = false;
    loop {
        let best = neighbours(tri, &current)
            .into_iter()
            .filter(|(_, r)| r.delta < 0)
            .min_by_key(|(b, r)| (r.delta, b.start));
        if let Some((band, r)) = best {
            current = r.coloring.clone();
            steps.push(SlideStep {
                band,
                delta: r.delta,
                coloring: r.coloring,
            });
            continue;
        }
        match explore_plateau(tri, &current) {
            Plateau::Descent(path) => {
                warn!(
                    "plateau search found a descent from {current} after {} level slides",
                    path.len() - 1
                );
                plateau_used = true;
                current = path.last().expect("descent path").coloring.clone();
                steps.extend(path);
            }
            Plateau::Closed(closure) => {
                let trace = ReductionTrace {
                    initial: f.clone(),
                    peripheral_count,
                    stripped,
                    steps,
                    final_coloring: current,
                    plateau_used,
                };
                return Ok((trace, closure));
            }
        }
    }
}

/// Reduce `f` to least weight by handleslides.
pub fn reduce(tri: &Triangulation, f: &Coloring) -> Result<ReductionTrace, ReduceError> {
    reduce_with_closure(tri, f).map(|(t, _)| t)
}

/// Every least-weight coloring representing the same diagram as `f`.
pub fn minimal_set(tri: &Triangulation, f: &Coloring) -> Result<MinimalSet, ReduceError> {
    let (reduction, members) = reduce_with_closure(tri, f)?;
    let weight = reduction.final_coloring.weight();
    debug_assert!(members.keys().all(|m| m.weight() == weight));
    Ok(MinimalSet {
        weight,
        peripheral_count: reduction.peripheral_count,
        reduction,
        members,
    })
}

/// Decide whether `f` and `g` represent the same diagram on the closed
/// surface.
pub fn equivalent(
    tri: &Triangulation,
    f: &Coloring,
    g: &Coloring,
) -> Result<EquivalenceVerdict, ReduceError> {
    let mf = minimal_set(tri, f)?;
    let mg = minimal_set(tri, g)?;
    Ok(compare_minimal_sets(&mf, &mg))
}

/// Equivalence verdict from two precomputed minimal sets.
pub fn compare_minimal_sets(mf: &MinimalSet, mg: &MinimalSet) -> EquivalenceVerdict {
    let common = mf.colorings().find(|c| mg.contains(c)).cloned();
    let same_count = mf.peripheral_count == mg.peripheral_count;
    let sets_agree = common.is_none() || mf.members.keys().eq(mg.members.keys());
    if !sets_agree {
        warn!("minimal sets intersect without being equal");
    }
    let certificate = common.filter(|_| same_count).map(|common| Certificate {
        from_first: certificate_path(mf, &common),
        from_second: certificate_path(mg, &common),
        common,
    });
    EquivalenceVerdict {
        equivalent: certificate.is_some(),
        peripheral_counts: (mf.peripheral_count, mg.peripheral_count),
        minimal_weights: (mf.weight, mg.weight),
        sets_agree,
        certificate,
    }
}

fn certificate_path(m: &MinimalSet, target: &Coloring) -> Vec<SlideStep> {
    let mut path = m.reduction.steps.clone();
    path.extend(m.members[target].iter().cloned());
    path
}

/// Apply slides named by band start position, after stripping peripherals.
pub fn replay(tri: &Triangulation, f: &Coloring, starts: &[usize]) -> Result<Coloring, ReduceError> {
    validate(tri, f)?;
    let (mut current, _) = strip_peripherals(tri, f);
    for &start in starts {
        let band = bands(tri, &current)
            .find(start)
            .ok_or(ReduceError::UnknownBand(start))?;
        current = crate::slide::slide(tri, &current, band)?.coloring;
    }
    Ok(current)
}

/// Report whether the least-weight representative is certainly unique.
///
/// Several minimizers need a half band in the reduced coloring or a
/// component isotopic to the pushoff of an antipodal edge; absent both the
/// minimizer is unique.
pub fn unique_minimizer(tri: &Triangulation, f: &Coloring) -> Result<Uniqueness, ReduceError> {
    let reduced = reduce(tri, f)?.final_coloring;
    let mut reasons: Vec<UniquenessReason> = bands(tri, &reduced)
        .as_slice()
        .iter()
        .filter(|b| b.class == BandClass::Half)
        .map(|b| UniquenessReason::HalfBand { start: b.start })
        .collect();

    let parts: BTreeSet<Coloring> = components(tri, &trace(tri, &reduced))
        .into_iter()
        .map(|c| c.coloring)
        .collect();
    for e in tri.antipodal_edges() {
        let hit = [LinkSide::Ccw, LinkSide::Cw]
            .iter()
            .any(|&side| parts.contains(&pushoff_coloring(tri, e, side)));
        if hit {
            reasons.push(UniquenessReason::AntipodalPushoff { edge: e });
        }
    }
    Ok(if reasons.is_empty() {
        Uniqueness::GuaranteedUnique
    } else {
        Uniqueness::NotGuaranteed(reasons)
    })
}
