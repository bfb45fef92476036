//! Explicit multicurves traced from colorings.
//!
//! A component is stored as the cyclic sequence of triangles it visits. Visit
//! `m` enters its triangle through one side and leaves through another; the
//! side it leaves by is glued to the side visit `m + 1` enters by. A visit
//! that leaves through the side it came in by spans a bigon with that edge,
//! and [`CurveSystem::normalize`] removes those until none remain.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::coloring::{corner_numbers, Coloring};
use crate::surface::{corner_between, Corner, Slot, Triangulation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Visit {
    pub triangle: usize,
    pub entry: usize,
    pub exit: usize,
}

impl Visit {
    pub fn new(triangle: usize, entry: usize, exit: usize) -> Self {
        Visit { triangle, entry, exit }
    }

    pub fn exit_slot(self) -> Slot {
        Slot::new(self.triangle, self.exit)
    }

    pub fn entry_slot(self) -> Slot {
        Slot::new(self.triangle, self.entry)
    }

    pub fn is_return(self) -> bool {
        self.entry == self.exit
    }

    /// Corner cut by this visit; `None` for a same-side return.
    pub fn corner(self) -> Option<Corner> {
        (!self.is_return()).then(|| Corner::new(self.triangle, corner_between(self.entry, self.exit)))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("curve system has a visit entering and leaving through the same side")]
    NotNormal,
    #[error("visit {visit} of component {component} does not continue across its exit side")]
    Broken { component: usize, visit: usize },
}

/// Where each crossing point and corner arc of a traced system lives.
///
/// Only systems produced by [`trace`] carry one; rewriting a curve discards it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    /// Per edge, the visit whose exit crossing is the `k`-th point from the
    /// edge's canonical end, as `(component, visit)`.
    pub edge_points: Vec<Vec<(usize, usize)>>,
    /// Per corner id, the arcs at that corner from depth 1 (nearest the
    /// puncture) outward.
    pub corner_arcs: Vec<Vec<(usize, usize)>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveSystem {
    // exit slot of every visit, per component
    words: Vec<Vec<Slot>>,
    embedding: Option<Embedding>,
}

/// One closed component with its own crossing counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub visits: Vec<Visit>,
    pub coloring: Coloring,
    pub peripheral: bool,
}

impl CurveSystem {
    pub fn empty() -> Self {
        CurveSystem {
            words: Vec::new(),
            embedding: None,
        }
    }

    /// Assemble a system from explicit visit cycles, checking continuity.
    pub fn from_visits(tri: &Triangulation, components: Vec<Vec<Visit>>) -> Result<Self, CurveError> {
        for (c, visits) in components.iter().enumerate() {
            for (m, v) in visits.iter().enumerate() {
                let next = visits[(m + 1) % visits.len()];
                if tri.glued(v.exit_slot()) != next.entry_slot() {
                    return Err(CurveError::Broken { component: c, visit: m });
                }
            }
        }
        Ok(CurveSystem {
            words: components
                .into_iter()
                .filter(|v| !v.is_empty())
                .map(|v| v.into_iter().map(Visit::exit_slot).collect())
                .collect(),
            embedding: None,
        })
    }

    pub(crate) fn from_words(words: Vec<Vec<Slot>>) -> Self {
        CurveSystem {
            words,
            embedding: None,
        }
    }

    pub(crate) fn words(&self) -> &[Vec<Slot>] {
        &self.words
    }

    pub fn component_count(&self) -> usize {
        self.words.len()
    }

    pub fn embedding(&self) -> Option<&Embedding> {
        self.embedding.as_ref()
    }

    /// Visit cycle of one component.
    pub fn visits(&self, tri: &Triangulation, component: usize) -> Vec<Visit> {
        word_visits(tri, &self.words[component])
    }

    /// Total number of edge crossings.
    pub fn crossing_count(&self) -> usize {
        self.words.iter().map(Vec::len).sum()
    }

    pub fn is_normal(&self, tri: &Triangulation) -> bool {
        self.words.iter().all(|w| first_return(tri, w).is_none())
    }

    /// Remove every same-side return, splicing neighbours together.
    pub fn normalize(&self, tri: &Triangulation) -> CurveSystem {
        self.normalize_counting(tri).0
    }

    /// As [`normalize`](Self::normalize), also reporting how many returns
    /// were removed. Each removal deletes two crossings. Components that
    /// cancel completely are dropped.
    pub fn normalize_counting(&self, tri: &Triangulation) -> (CurveSystem, usize) {
        let mut removals = 0;
        let mut words = Vec::with_capacity(self.words.len());
        for w in &self.words {
            let (reduced, r) = cyclically_reduce(tri, w);
            removals += r;
            if !reduced.is_empty() {
                words.push(reduced);
            }
        }
        let unchanged = removals == 0 && words.len() == self.words.len();
        (
            CurveSystem {
                words,
                embedding: if unchanged { self.embedding.clone() } else { None },
            },
            removals,
        )
    }
}

fn word_visits(tri: &Triangulation, word: &[Slot]) -> Vec<Visit> {
    let len = word.len();
    (0..len)
        .map(|m| {
            let exit = word[m];
            let entry = tri.glued(word[(m + len - 1) % len]);
            debug_assert_eq!(entry.triangle, exit.triangle);
            Visit::new(exit.triangle, entry.side, exit.side)
        })
        .collect()
}

fn first_return(tri: &Triangulation, word: &[Slot]) -> Option<usize> {
    let len = word.len();
    (0..len).find(|&m| word[m] == tri.glued(word[(m + len - 1) % len]))
}

/// Cyclic free reduction of an exit-slot word.
///
/// Leaving through slot `s` and then immediately through `glued(s)` is a
/// return visit; the two crossings cancel. Reduction is confluent, so the
/// order of removals does not affect the result.
pub(crate) fn cyclically_reduce(tri: &Triangulation, word: &[Slot]) -> (Vec<Slot>, usize) {
    let mut removals = 0;
    let mut stack: Vec<Slot> = Vec::with_capacity(word.len());
    for &s in word {
        match stack.last() {
            Some(&top) if tri.glued(top) == s => {
                stack.pop();
                removals += 1;
            }
            _ => stack.push(s),
        }
    }
    let mut lo = 0;
    let mut hi = stack.len();
    while hi - lo >= 2 && stack[lo] == tri.glued(stack[hi - 1]) {
        lo += 1;
        hi -= 1;
        removals += 1;
    }
    (stack[lo..hi].to_vec(), removals)
}

/// Build the normal multicurve with coloring `f`.
///
/// Crossing points along each edge are numbered from the end with the
/// smaller link position. At every corner the arcs are nested with depth 1
/// nearest the puncture, and the `k`-th point of a side is matched with the
/// `k`-th point of the side glued to it, counted from the same end.
pub fn trace(tri: &Triangulation, f: &Coloring) -> CurveSystem {
    let cn = corner_numbers(tri, f);
    let corners = 3 * tri.triangle_count();

    // arcs are numbered by (triangle, corner, depth)
    let mut base = Vec::with_capacity(corners + 1);
    let mut total = 0usize;
    for c in 0..corners {
        base.push(total);
        total += cn.as_slice()[c] as usize;
    }
    base.push(total);
    let arc_corner = |arc: usize| -> (usize, usize) {
        // (corner id, depth)
        let c = base.partition_point(|&b| b <= arc) - 1;
        (c, arc - base[c] + 1)
    };

    let slot_len = |s: Slot| f.get(tri.edge_of(s)) as usize;
    let mut point_arc: Vec<Vec<usize>> = Vec::with_capacity(corners);
    for id in 0..corners {
        let s = Slot::from_id(id);
        let len = slot_len(s);
        let before = Corner::new(s.triangle, (s.side + 2) % 3);
        let after = Corner::new(s.triangle, s.side);
        let nb = cn.at(before) as usize;
        point_arc.push(
            (0..len)
                .map(|u| {
                    if u < nb {
                        base[before.id()] + u
                    } else {
                        base[after.id()] + (len - u) - 1
                    }
                })
                .collect(),
        );
    }

    let mut edge_points: Vec<Vec<(usize, usize)>> = (0..tri.edge_count())
        .map(|e| vec![(usize::MAX, usize::MAX); f.get(e) as usize])
        .collect();
    let mut corner_arcs: Vec<Vec<(usize, usize)>> = (0..corners)
        .map(|c| vec![(usize::MAX, usize::MAX); cn.as_slice()[c] as usize])
        .collect();
    let mut seen = vec![false; total];
    let mut words = Vec::new();

    for start in 0..total {
        if seen[start] {
            continue;
        }
        let comp = words.len();
        let mut word = Vec::new();
        let (c0, _) = arc_corner(start);
        let mut arc = start;
        let mut entry = (Corner::from_id(c0).corner + 1) % 3;
        loop {
            let (cid, depth) = arc_corner(arc);
            let corner = Corner::from_id(cid);
            let (lo, hi) = corner.sides();
            let exit = if entry == hi { lo } else { hi };
            seen[arc] = true;
            corner_arcs[cid][depth - 1] = (comp, word.len());

            let out = Slot::new(corner.triangle, exit);
            let len = slot_len(out);
            let u = if exit == lo { len - depth } else { depth - 1 };
            let k = if tri.numbered_from_start(out) { u } else { len - 1 - u };
            edge_points[tri.edge_of(out)][k] = (comp, word.len());
            word.push(out);

            let into = tri.glued(out);
            let next = point_arc[into.id()][len - 1 - u];
            entry = into.side;
            arc = next;
            if arc == start {
                break;
            }
        }
        words.push(word);
    }

    CurveSystem {
        words,
        embedding: Some(Embedding {
            edge_points,
            corner_arcs,
        }),
    }
}

/// Per-edge crossing counts of a normal system.
pub fn coloring_of(tri: &Triangulation, cs: &CurveSystem) -> Result<Coloring, CurveError> {
    if !cs.is_normal(tri) {
        return Err(CurveError::NotNormal);
    }
    let mut values = vec![0; tri.edge_count()];
    for w in &cs.words {
        for &s in w {
            values[tri.edge_of(s)] += 1;
        }
    }
    Ok(Coloring::from_values(values))
}

/// Split a system into its closed components.
///
/// A component is peripheral when it cuts every corner exactly once, i.e.
/// it runs once around the puncture.
pub fn components(tri: &Triangulation, cs: &CurveSystem) -> Vec<Component> {
    let n = tri.link().len();
    cs.words
        .iter()
        .map(|w| {
            let visits = word_visits(tri, w);
            let mut values = vec![0; tri.edge_count()];
            for &s in w {
                values[tri.edge_of(s)] += 1;
            }
            let corners: BTreeSet<_> = visits.iter().filter_map(|v| v.corner()).collect();
            let peripheral = visits.len() == n && corners.len() == n;
            Component {
                visits,
                coloring: Coloring::from_values(values),
                peripheral,
            }
        })
        .collect()
}
