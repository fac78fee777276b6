//! Priestley and Esakia recognition, clopen upsets, prime filter spaces, and
//! the round trips between finite Heyting algebras and ordered spaces.
//!
//! Compactness is automatic for finite spaces. Clopen sets of a finite space
//! form a Boolean algebra of subsets; when they separate the points of a
//! partial order its atoms are singletons, so a finite Priestley space is
//! discrete. All four Esakia variants therefore coincide here.

use serde::Serialize;

use crate::duality::{unit, Flavour};
use crate::error::{Error, Result};
use crate::finord::{FnMap, Preorder};
use crate::fintop::{FinSpace, OrderedSpace};
use crate::frame::{locate_point, points_of_frame, FinFrame, PointFilter};
use crate::subset::Subset;

/// A finite distributive lattice with its implication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeytingAlg {
    lattice: FinFrame,
    implies: Vec<usize>,
}

impl HeytingAlg {
    pub fn new(lattice: FinFrame) -> Self {
        let n = lattice.size();
        let mut implies = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                implies[a * n + b] = lattice.implies(a, b);
            }
        }
        HeytingAlg { lattice, implies }
    }

    pub fn lattice(&self) -> &FinFrame {
        &self.lattice
    }

    pub fn size(&self) -> usize {
        self.lattice.size()
    }

    pub fn implies(&self, a: usize, b: usize) -> usize {
        self.implies[a * self.size() + b]
    }

    /// `(a, b, c)` with `c ⊑ a → b` not equivalent to `c ∧ a ⊑ b`.
    pub fn residuation_witness(&self) -> Option<(usize, usize, usize)> {
        let f = &self.lattice;
        let n = self.size();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if f.leq(c, self.implies(a, b)) != f.leq(f.meet(c, a), b) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }
}

/// Why an ordered space is not Priestley.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum PriestleyFailure {
    NotAntisymmetric { x: usize, y: usize },
    /// `x ≰ y` but no clopen upset contains `x` and misses `y`.
    Unseparated { x: usize, y: usize },
}

fn clopen_upsets_of(os: &OrderedSpace) -> Vec<Subset> {
    os.opens()
        .iter()
        .filter(|u| os.space().is_open(&u.complement()) && os.order().is_upset(u))
        .cloned()
        .collect()
}

pub fn priestley_witness(os: &OrderedSpace) -> Option<PriestleyFailure> {
    if let Some((x, y)) = os.order().antisymmetry_witness() {
        return Some(PriestleyFailure::NotAntisymmetric { x, y });
    }
    let clopen = clopen_upsets_of(os);
    let n = os.size();
    for x in 0..n {
        for y in 0..n {
            if !os.order().leq(x, y) && !clopen.iter().any(|u| u.contains(x) && !u.contains(y)) {
                return Some(PriestleyFailure::Unseparated { x, y });
            }
        }
    }
    None
}

pub fn is_priestley(os: &OrderedSpace) -> bool {
    priestley_witness(os).is_none()
}

/// Priestley with open lower cones.
pub fn is_esakia(os: &OrderedSpace) -> bool {
    is_priestley(os) && os.has_open_lower_cones()
}

/// Priestley with open upper cones.
pub fn is_co_esakia(os: &OrderedSpace) -> bool {
    is_priestley(os) && os.has_open_upper_cones()
}

pub fn is_bi_esakia(os: &OrderedSpace) -> bool {
    is_priestley(os) && os.has_open_cones()
}

/// The Heyting algebra of clopen upsets, with element `i` being `sets[i]`.
#[derive(Clone, Debug)]
pub struct ClopenUpsets {
    pub algebra: HeytingAlg,
    pub sets: Vec<Subset>,
}

pub fn clopen_upsets(os: &OrderedSpace) -> Result<ClopenUpsets> {
    if let Some(failure) = priestley_witness(os) {
        return Err(Error::Precondition(format!("not a Priestley space: {failure:?}")));
    }
    let sets = clopen_upsets_of(os);
    let rows = sets
        .iter()
        .map(|u| Subset::from_bools(&sets.iter().map(|v| u.is_subset(v)).collect::<Vec<_>>()))
        .collect();
    let lattice = FinFrame::new(Preorder::from_up_rows(rows)?)?;
    Ok(ClopenUpsets {
        algebra: HeytingAlg::new(lattice),
        sets,
    })
}

/// Prime filters ordered by inclusion, with the discrete topology.
#[derive(Clone, Debug)]
pub struct PrimeFilterSpace {
    pub space: OrderedSpace,
    pub filters: Vec<PointFilter>,
}

pub fn prime_filter_space(h: &HeytingAlg) -> PrimeFilterSpace {
    let filters = points_of_frame(h.lattice());
    let rows = filters
        .iter()
        .map(|f| {
            Subset::from_bools(
                &filters
                    .iter()
                    .map(|g| f.members().is_subset(g.members()))
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    let order = Preorder::from_up_rows(rows).expect("inclusion is a partial order");
    PrimeFilterSpace {
        space: OrderedSpace::new(FinSpace::discrete(filters.len()), order).expect("sizes agree"),
        filters,
    }
}

/// `h -> ClopUp(pf h)`, `a ↦ { F | a ∈ F }`.
#[derive(Clone, Debug)]
pub struct AlgebraRoundTrip {
    pub map: Vec<usize>,
    pub bijective: bool,
    pub order_iso: bool,
    pub preserves_implication: bool,
}

impl AlgebraRoundTrip {
    pub fn is_iso(&self) -> bool {
        self.bijective && self.order_iso && self.preserves_implication
    }
}

pub fn esakia_roundtrip(h: &HeytingAlg) -> Result<AlgebraRoundTrip> {
    let pf = prime_filter_space(h);
    let back = clopen_upsets(&pf.space)?;
    let map: Vec<usize> = (0..h.size())
        .map(|a| {
            let set = Subset::from_bools(&pf.filters.iter().map(|f| f.contains(a)).collect::<Vec<_>>());
            back.sets.iter().position(|u| *u == set).ok_or_else(|| {
                Error::Precondition(format!("element {a} does not land on a clopen upset"))
            })
        })
        .collect::<Result<_>>()?;
    let target = &back.algebra;
    let g = FnMap::new(map.clone(), target.size())?;
    let bijective = g.is_injective() && g.is_surjective();
    let n = h.size();
    let mut order_iso = true;
    let mut preserves_implication = true;
    for a in 0..n {
        for b in 0..n {
            if h.lattice().leq(a, b) != target.lattice().leq(map[a], map[b]) {
                order_iso = false;
            }
            if map[h.implies(a, b)] != target.implies(map[a], map[b]) {
                preserves_implication = false;
            }
        }
    }
    Ok(AlgebraRoundTrip {
        map,
        bijective,
        order_iso,
        preserves_implication,
    })
}

/// `S -> pf(ClopUp S)`, `x ↦ { U | x ∈ U }`.
#[derive(Clone, Debug)]
pub struct SpaceRoundTrip {
    pub map: FnMap,
    pub order_homeomorphism: bool,
}

pub fn esakia_roundtrip_space(os: &OrderedSpace) -> Result<SpaceRoundTrip> {
    let c = clopen_upsets(os)?;
    let pf = prime_filter_space(&c.algebra);
    let table = (0..os.size())
        .map(|x| {
            let members = Subset::from_bools(&c.sets.iter().map(|u| u.contains(x)).collect::<Vec<_>>());
            locate_point(&pf.filters, &members).ok_or_else(|| {
                Error::Precondition(format!("point {x} does not give a prime filter"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let map = FnMap::new(table, pf.filters.len())?;
    let order_homeomorphism = crate::duality::MapVerdicts::of(os, &pf.space, &map).is_order_homeomorphism();
    Ok(SpaceRoundTrip {
        map,
        order_homeomorphism,
    })
}

/// Whether the unit of each adjunction an Esakia variant belongs to is an
/// order-homeomorphism; `None` where the space is not of that variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EsakiaFixedPoints {
    pub esakia_lower: Option<bool>,
    pub co_esakia_upper: Option<bool>,
    pub bi_esakia_em: Option<bool>,
}

pub fn esakia_fixed_points(os: &OrderedSpace) -> EsakiaFixedPoints {
    let check = |holds: bool, flavour: Flavour| {
        holds.then(|| unit(os, flavour).verdicts.is_order_homeomorphism())
    };
    EsakiaFixedPoints {
        esakia_lower: check(is_esakia(os), Flavour::Lower),
        co_esakia_upper: check(is_co_esakia(os), Flavour::Upper),
        bi_esakia_em: check(is_bi_esakia(os), Flavour::EM),
    }
}
