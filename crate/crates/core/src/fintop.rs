//! Finite topological spaces and ordered spaces.
//!
//! Topologies are stored extensionally as a deduplicated family of opens in
//! canonical [`Subset`] order, so open number `0` is always the empty set and
//! the last open is the whole carrier. The frame of opens built by
//! [`crate::frame::frame_of_opens`] uses the same numbering.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::finord::{FnMap, Preorder};
use crate::frame::{self, lattice_tables};
use crate::subset::Subset;

#[derive(Clone)]
pub struct FinSpace {
    size: usize,
    opens: Vec<Subset>,
    index: HashMap<Subset, usize>,
    // smallest open neighbourhood of each point
    neighbourhoods: Vec<Subset>,
}

impl FinSpace {
    /// Validates an explicit open family. Duplicates are dropped; errors refer
    /// to positions in `opens` as given.
    pub fn new(size: usize, opens: Vec<Subset>) -> Result<Self> {
        for u in &opens {
            u.check_width(size)?;
        }
        let present: HashMap<&Subset, usize> =
            opens.iter().enumerate().map(|(i, u)| (u, i)).collect();
        if !present.contains_key(&Subset::empty(size)) {
            return Err(Error::EmptyOpenMissing);
        }
        if !present.contains_key(&Subset::full(size)) {
            return Err(Error::FullOpenMissing);
        }
        for (a, u) in opens.iter().enumerate() {
            for (b, v) in opens.iter().enumerate().skip(a + 1) {
                if !present.contains_key(&u.union(v)) {
                    return Err(Error::NotClosedUnderUnion { a, b });
                }
                if !present.contains_key(&u.intersection(v)) {
                    return Err(Error::NotClosedUnderIntersection { a, b });
                }
            }
        }
        Ok(Self::from_family_unchecked(size, opens))
    }

    /// The topology generated by `subbasis`: close under finite intersections
    /// and arbitrary unions, adding the empty set and the carrier.
    pub fn from_subbasis(size: usize, subbasis: Vec<Subset>) -> Result<Self> {
        for u in &subbasis {
            u.check_width(size)?;
        }
        // Every open is a union of minimal neighbourhoods, so the opens are
        // the sets containing the neighbourhood of each of their points.
        let neighbourhoods: Vec<Subset> = (0..size)
            .map(|x| {
                subbasis
                    .iter()
                    .filter(|u| u.contains(x))
                    .fold(Subset::full(size), |acc, u| acc.intersection(u))
            })
            .collect();
        let mut opens = Vec::new();
        let mut chosen = Subset::empty(size);
        let mut banned = Subset::empty(size);
        unions_of_neighbourhoods(&neighbourhoods, 0, &mut chosen, &mut banned, &mut opens);
        Ok(Self::from_family_unchecked(size, opens))
    }

    pub(crate) fn from_family_unchecked(size: usize, opens: Vec<Subset>) -> Self {
        let mut opens = opens;
        opens.sort();
        opens.dedup();
        let index = opens.iter().cloned().enumerate().map(|(i, u)| (u, i)).collect();
        let neighbourhoods = (0..size)
            .map(|x| {
                opens
                    .iter()
                    .filter(|u| u.contains(x))
                    .fold(Subset::full(size), |acc, u| acc.intersection(u))
            })
            .collect();
        FinSpace {
            size,
            opens,
            index,
            neighbourhoods,
        }
    }

    pub fn discrete(size: usize) -> Self {
        let singletons = (0..size).map(|x| Subset::singleton(size, x)).collect();
        Self::from_subbasis(size, singletons).expect("widths agree")
    }

    pub fn codiscrete(size: usize) -> Self {
        Self::from_family_unchecked(size, vec![Subset::empty(size), Subset::full(size)])
    }

    /// Points `{0, 1}` with opens `{}, {1}, {0, 1}`.
    pub fn sierpinski() -> Self {
        Self::from_family_unchecked(
            2,
            vec![Subset::empty(2), Subset::singleton(2, 1), Subset::full(2)],
        )
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn opens(&self) -> &[Subset] {
        &self.opens
    }

    pub fn open_index(&self, u: &Subset) -> Option<usize> {
        self.index.get(u).copied()
    }

    pub fn is_open(&self, u: &Subset) -> bool {
        self.index.contains_key(u)
    }

    pub fn is_closed(&self, c: &Subset) -> bool {
        self.is_open(&c.complement())
    }

    /// Complements of the opens, in the same numbering.
    pub fn closed_sets(&self) -> Vec<Subset> {
        self.opens.iter().map(Subset::complement).collect()
    }

    /// The smallest open set containing `x`.
    pub fn neighbourhood(&self, x: usize) -> &Subset {
        &self.neighbourhoods[x]
    }

    /// Largest open contained in `a`.
    pub fn interior(&self, a: &Subset) -> Result<Subset> {
        a.check_width(self.size)?;
        Ok(self.interior_of(a))
    }

    /// Smallest closed set containing `a`.
    pub fn closure(&self, a: &Subset) -> Result<Subset> {
        a.check_width(self.size)?;
        Ok(self.interior_of(&a.complement()).complement())
    }

    pub(crate) fn interior_of(&self, a: &Subset) -> Subset {
        let mut out = Subset::empty(self.size);
        for x in a.iter() {
            if self.neighbourhoods[x].is_subset(a) {
                out.insert(x);
            }
        }
        out
    }

    /// Distinct points `x`, `y` lying in exactly the same opens.
    pub fn t0_witness(&self) -> Option<(usize, usize)> {
        for x in 0..self.size {
            for y in x + 1..self.size {
                if self.opens.iter().all(|u| u.contains(x) == u.contains(y)) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn is_t0(&self) -> bool {
        self.t0_witness().is_none()
    }

    /// An irreducible closed set that does not have exactly one generic
    /// point, together with its generic points.
    pub fn sobriety_witness(&self) -> Option<(Subset, Vec<usize>)> {
        let closed = self.closed_sets();
        for c in &closed {
            if c.is_empty() {
                continue;
            }
            let reducible = closed.iter().any(|c1| {
                c1 != c
                    && c1.is_subset(c)
                    && closed
                        .iter()
                        .any(|c2| c2 != c && c2.is_subset(c) && c1.union(c2) == *c)
            });
            if reducible {
                continue;
            }
            let generic: Vec<usize> = c
                .iter()
                .filter(|&x| self.closure_of_point(x) == *c)
                .collect();
            if generic.len() != 1 {
                return Some((c.clone(), generic));
            }
        }
        None
    }

    /// Every irreducible closed set has a unique generic point.
    pub fn is_sober(&self) -> bool {
        self.sobriety_witness().is_none()
    }

    /// A completely prime filter of the frame of opens that is not the
    /// neighbourhood filter of any point, given by its generating open.
    pub fn enough_points_witness(&self) -> Option<usize> {
        let opens_frame = frame::frame_of_opens(self);
        frame::points_of_frame(&opens_frame)
            .into_iter()
            .map(|p| p.generator())
            .find(|&u| {
                let gen = &self.opens[u];
                !(0..self.size).any(|x| self.neighbourhoods[x] == *gen)
            })
    }

    /// The unit into the points of the frame of opens is surjective.
    pub fn has_enough_points(&self) -> bool {
        self.enough_points_witness().is_none()
    }

    fn closure_of_point(&self, x: usize) -> Subset {
        self.interior_of(&Subset::singleton(self.size, x).complement())
            .complement()
    }

    /// `x <= y` iff `x` lies in the closure of `{y}`.
    pub fn specialisation_preorder(&self) -> Preorder {
        let up = (0..self.size)
            .map(|x| {
                Subset::from_bools(
                    &(0..self.size)
                        .map(|y| self.closure_of_point(y).contains(x))
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        Preorder::from_rows_unchecked(up)
    }

    /// The preimage of some open under `g` that is not open, if any.
    pub fn continuity_witness(&self, target: &FinSpace, g: &FnMap) -> Result<Option<usize>> {
        if g.domain() != self.size || g.codomain() != target.size {
            return Err(Error::SizeMismatch {
                expected: self.size,
                found: g.domain(),
            });
        }
        Ok((0..target.opens.len()).find(|&v| !self.is_open(&g.preimage(&target.opens[v]))))
    }
}

impl std::fmt::Debug for FinSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FinSpace")
            .field("size", &self.size)
            .field("opens", &self.opens)
            .finish()
    }
}

impl PartialEq for FinSpace {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.opens == other.opens
    }
}

impl Eq for FinSpace {}

/// Depth-first over the points: a point goes in together with its
/// neighbourhood, or stays out together with every point whose
/// neighbourhood contains it.
fn unions_of_neighbourhoods(
    nbhd: &[Subset],
    x: usize,
    chosen: &mut Subset,
    banned: &mut Subset,
    out: &mut Vec<Subset>,
) {
    let n = nbhd.len();
    if x == n {
        out.push(chosen.clone());
        return;
    }
    if chosen.contains(x) || banned.contains(x) {
        unions_of_neighbourhoods(nbhd, x + 1, chosen, banned, out);
        return;
    }
    if nbhd[x].is_disjoint(banned) {
        let saved = chosen.clone();
        chosen.union_with(&nbhd[x]);
        unions_of_neighbourhoods(nbhd, x + 1, chosen, banned, out);
        *chosen = saved;
    }
    let below = Subset::from_bools(&(0..n).map(|y| nbhd[y].contains(x)).collect::<Vec<_>>());
    if below.is_disjoint(chosen) {
        let saved = banned.clone();
        banned.union_with(&below);
        unions_of_neighbourhoods(nbhd, x + 1, chosen, banned, out);
        *banned = saved;
    }
}

/// All upward-closed subsets of `p` as opens.
pub fn upper_topology(p: &Preorder) -> FinSpace {
    let n = p.size();
    let principal = (0..n).map(|x| p.principal_up(x).clone()).collect();
    FinSpace::from_subbasis(n, principal).expect("widths agree")
}

/// Unions of intervals `<x, z> = { y | x <= y <= z }` of a finite lattice.
pub fn interval_topology(p: &Preorder) -> Result<FinSpace> {
    lattice_tables(p)?;
    let n = p.size();
    let mut intervals = Vec::new();
    for (x, z) in p.pairs() {
        intervals.push(p.principal_up(x).intersection(p.principal_down(z)));
    }
    FinSpace::from_subbasis(n, intervals)
}

/// Which cone a check is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Upper,
    Lower,
}

/// A topological space with a preorder on the same points, unrelated a priori.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedSpace {
    space: FinSpace,
    order: Preorder,
}

/// Opens `u`, `v` for which one clause of the (∗) condition fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaViolation {
    pub u: usize,
    pub v: usize,
    pub side: Side,
}

/// A related pair `x <= y` and an open nbhd whose cone interior misses the
/// other point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InternalConeViolation {
    pub x: usize,
    pub y: usize,
    pub open: usize,
    pub side: Side,
}

impl OrderedSpace {
    pub fn new(space: FinSpace, order: Preorder) -> Result<Self> {
        if space.size() != order.size() {
            return Err(Error::SizeMismatch {
                expected: space.size(),
                found: order.size(),
            });
        }
        Ok(OrderedSpace { space, order })
    }

    pub fn space(&self) -> &FinSpace {
        &self.space
    }

    pub fn order(&self) -> &Preorder {
        &self.order
    }

    pub fn size(&self) -> usize {
        self.space.size()
    }

    pub fn opens(&self) -> &[Subset] {
        self.space.opens()
    }

    /// `(↑U)°`, the interior of the future of `u`.
    pub fn interior_up(&self, u: &Subset) -> Subset {
        self.space.interior_of(&self.order.up_of(u))
    }

    /// `(↓U)°`.
    pub fn interior_down(&self, u: &Subset) -> Subset {
        self.space.interior_of(&self.order.down_of(u))
    }

    fn cone(&self, u: &Subset, side: Side) -> Subset {
        match side {
            Side::Upper => self.order.up_of(u),
            Side::Lower => self.order.down_of(u),
        }
    }

    fn interior_cone(&self, u: &Subset, side: Side) -> Subset {
        self.space.interior_of(&self.cone(u, side))
    }

    /// Index of an open whose cone on `side` is not open.
    pub fn open_cone_witness(&self, side: Side) -> Option<usize> {
        (0..self.opens().len()).find(|&i| !self.space.is_open(&self.cone(&self.opens()[i], side)))
    }

    pub fn has_open_upper_cones(&self) -> bool {
        self.open_cone_witness(Side::Upper).is_none()
    }

    pub fn has_open_lower_cones(&self) -> bool {
        self.open_cone_witness(Side::Lower).is_none()
    }

    pub fn has_open_cones(&self) -> bool {
        self.has_open_upper_cones() && self.has_open_lower_cones()
    }

    /// Pointwise cone condition: for `x <= y`, every open nbhd `U` of `x`
    /// has `y` in `(↑U)°`, and every open nbhd `V` of `y` has `x` in `(↓V)°`.
    pub fn internal_cone_witness(&self, side: Side) -> Option<InternalConeViolation> {
        for (x, y) in self.order.pairs() {
            for (i, u) in self.opens().iter().enumerate() {
                let (anchor, probe) = match side {
                    Side::Upper => (x, y),
                    Side::Lower => (y, x),
                };
                if u.contains(anchor) && !self.interior_cone(u, side).contains(probe) {
                    return Some(InternalConeViolation {
                        x,
                        y,
                        open: i,
                        side,
                    });
                }
            }
        }
        None
    }

    pub fn satisfies_internal_cone_char(&self) -> bool {
        self.internal_cone_witness(Side::Upper).is_none()
            && self.internal_cone_witness(Side::Lower).is_none()
    }

    /// `U ∩ ↑V ⊆ ↑((↓U)° ∩ V)` (upper) or `U ∩ ↓V ⊆ ↓((↑U)° ∩ V)` (lower).
    pub fn lambda_witness(&self, side: Side) -> Option<LambdaViolation> {
        let opens = self.opens();
        let flip = match side {
            Side::Upper => Side::Lower,
            Side::Lower => Side::Upper,
        };
        let interiors: Vec<Subset> = opens.iter().map(|u| self.interior_cone(u, flip)).collect();
        for (i, u) in opens.iter().enumerate() {
            for (j, v) in opens.iter().enumerate() {
                let lhs = u.intersection(&self.cone(v, side));
                let rhs = self.cone(&interiors[i].intersection(v), side);
                if !lhs.is_subset(&rhs) {
                    return Some(LambdaViolation { u: i, v: j, side });
                }
            }
        }
        None
    }

    pub fn satisfies_lambda(&self) -> bool {
        self.lambda_witness(Side::Upper).is_none() && self.lambda_witness(Side::Lower).is_none()
    }

    /// An open `U` with `↑(↑U)° ⊄ (↑U)°` (or the lower dual).
    pub fn pushup_witness(&self, side: Side) -> Option<usize> {
        (0..self.opens().len()).find(|&i| {
            let inner = self.interior_cone(&self.opens()[i], side);
            !self.cone(&inner, side).is_subset(&inner)
        })
    }

    pub fn satisfies_pushup(&self) -> bool {
        self.pushup_witness(Side::Upper).is_none() && self.pushup_witness(Side::Lower).is_none()
    }

    fn separated_upper(&self, x: usize, y: usize) -> bool {
        self.opens()
            .iter()
            .any(|u| u.contains(x) && !self.order.up_of(u).contains(y))
    }

    fn separated_lower(&self, x: usize, y: usize) -> bool {
        self.opens()
            .iter()
            .any(|v| v.contains(y) && !self.order.down_of(v).contains(x))
    }

    /// A pair `x ≰ y` not separated as the ordered T0 axiom demands.
    pub fn t0_ordered_witness(&self) -> Option<(usize, usize)> {
        self.unrelated_pairs()
            .find(|&(x, y)| !self.separated_upper(x, y) && !self.separated_lower(x, y))
    }

    pub fn tu_ordered_witness(&self) -> Option<(usize, usize)> {
        self.unrelated_pairs().find(|&(x, y)| !self.separated_upper(x, y))
    }

    pub fn tl_ordered_witness(&self) -> Option<(usize, usize)> {
        self.unrelated_pairs().find(|&(x, y)| !self.separated_lower(x, y))
    }

    pub fn is_t0_ordered(&self) -> bool {
        self.t0_ordered_witness().is_none()
    }

    pub fn is_tu_ordered(&self) -> bool {
        self.tu_ordered_witness().is_none()
    }

    pub fn is_tl_ordered(&self) -> bool {
        self.tl_ordered_witness().is_none()
    }

    fn unrelated_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.size();
        (0..n)
            .flat_map(move |x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| !self.order.leq(x, y))
    }

    /// Whether the graph of the order is closed in the product topology.
    pub fn order_graph_is_closed(&self) -> bool {
        self.unrelated_pairs().all(|(x, y)| {
            let ux = self.space.neighbourhood(x);
            let vy = self.space.neighbourhood(y);
            !ux.iter().any(|a| vy.iter().any(|b| self.order.leq(a, b)))
        })
    }
}
