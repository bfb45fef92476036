//! Independent checks on the reducer: brute-force slide closure, the
//! homology slope of torus curves, and a seeded generator of equivalent
//! representatives.

use std::collections::{BTreeSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::band::bands;
use crate::coloring::{check_admissible, strip_peripherals, Admissibility, Coloring, ColoringError};
use crate::curve::{components, trace};
use crate::reduce::ReduceError;
use crate::slide::{all_slides, slide};
use crate::surface::Triangulation;

fn validate(tri: &Triangulation, f: &Coloring) -> Result<(), ReduceError> {
    match check_admissible(tri, f.values())? {
        Admissibility::Ok => Ok(()),
        verdict => Err(ColoringError::NotAdmissible(verdict).into()),
    }
}

/// Every coloring reachable from stripped `f` by slides that never exceed
/// weight `cap`.
pub fn bfs_closure(
    tri: &Triangulation,
    f: &Coloring,
    cap: u64,
) -> Result<BTreeSet<Coloring>, ReduceError> {
    validate(tri, f)?;
    if cap < f.weight() {
        return Err(ReduceError::CapTooSmall {
            cap,
            weight: f.weight(),
        });
    }
    let (start, _) = strip_peripherals(tri, f);
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(current) = queue.pop_front() {
        for (_, r) in all_slides(tri, &current)? {
            if r.coloring.weight() <= cap && seen.insert(r.coloring.clone()) {
                queue.push_back(r.coloring);
            }
        }
    }
    Ok(seen)
}

/// Homology class of a multicurve on a two-triangle punctured torus.
///
/// `(p, q)` are algebraic intersection numbers of one component with edges
/// 0 and 1, signed so the first nonzero entry is positive. Every component
/// has the same class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorusSlope {
    pub p: i64,
    pub q: i64,
    pub multiplicity: usize,
}

pub fn torus_slope(tri: &Triangulation, f: &Coloring) -> Result<TorusSlope, ReduceError> {
    if tri.triangle_count() != 2 {
        return Err(ReduceError::NotTorusFixture);
    }
    validate(tri, f)?;
    if strip_peripherals(tri, f).1 > 0 {
        return Err(ReduceError::PeripheralPresent);
    }
    let edges = tri.edges();
    let mut slope = None;
    let comps = components(tri, &trace(tri, f));
    for comp in &comps {
        let mut sums = [0i64; 2];
        for v in &comp.visits {
            let out = v.exit_slot();
            for (e, sum) in sums.iter_mut().enumerate() {
                if out == edges[e].0 {
                    *sum += 1;
                } else if out == edges[e].1 {
                    *sum -= 1;
                }
            }
        }
        if sums[0] < 0 || (sums[0] == 0 && sums[1] < 0) {
            sums = [-sums[0], -sums[1]];
        }
        match slope {
            None => slope = Some(sums),
            Some(s) => assert_eq!(s, sums, "disjoint torus curves share a slope"),
        }
    }
    let [p, q] = slope.unwrap_or([0, 0]);
    Ok(TorusSlope {
        p,
        q,
        multiplicity: comps.len(),
    })
}

/// Apply `steps` slides at pseudo-randomly chosen bands.
///
/// Peripheral curves are set aside first and restored at the end; the
/// result represents the same diagram as `f`.
pub fn random_representative(
    tri: &Triangulation,
    f: &Coloring,
    steps: usize,
    seed: u64,
) -> Result<Coloring, ReduceError> {
    validate(tri, f)?;
    let (mut current, count) = strip_peripherals(tri, f);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..steps {
        let available = bands(tri, &current);
        let choices = available.as_slice();
        if choices.is_empty() {
            break;
        }
        let band = choices[rng.gen_range(0..choices.len())];
        current = slide(tri, &current, band)?.coloring;
    }
    Ok(current.with_peripherals(count))
}
