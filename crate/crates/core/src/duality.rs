//! The opens functor from ordered spaces to ordered locales, the points
//! functor back, and the unit and counit between them.
//!
//! Each construction comes in three flavours. The Egli-Milner flavour uses
//! both cones; the upper and lower flavours keep one side only, both in the
//! order on opens and in the order on points.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finord::{monotonicity_witness, FnMap, Preorder};
use crate::fintop::{FinSpace, OrderedSpace, Side};
use crate::frame::{frame_of_opens, locate_point, points_of_frame, PointFilter};
use crate::ordloc::{satisfies_axiom_p_for, LocaleMap, OrderedLocale};
use crate::subset::Subset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavour {
    #[serde(rename = "em")]
    EM,
    Upper,
    Lower,
}

impl Flavour {
    pub const ALL: [Flavour; 3] = [Flavour::EM, Flavour::Upper, Flavour::Lower];

    pub fn sides(self) -> &'static [Side] {
        match self {
            Flavour::EM => &[Side::Upper, Side::Lower],
            Flavour::Upper => &[Side::Upper],
            Flavour::Lower => &[Side::Lower],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Flavour::EM => "em",
            Flavour::Upper => "upper",
            Flavour::Lower => "lower",
        }
    }

    pub fn parse(s: &str) -> Option<Flavour> {
        Flavour::ALL.into_iter().find(|f| f.name() == s)
    }
}

impl std::fmt::Display for Flavour {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Open cones on the sides `flavour` uses.
pub fn has_open_cones_for(os: &OrderedSpace, flavour: Flavour) -> bool {
    flavour
        .sides()
        .iter()
        .all(|&side| os.open_cone_witness(side).is_none())
}

/// The separation axiom matching `flavour`: T0-ordered, T_U or T_L.
pub fn is_t_ordered_for(os: &OrderedSpace, flavour: Flavour) -> bool {
    match flavour {
        Flavour::EM => os.is_t0_ordered(),
        Flavour::Upper => os.is_tu_ordered(),
        Flavour::Lower => os.is_tl_ordered(),
    }
}

/// The frame of opens of `os` ordered by `V ⊆ ↑U` (upper), `U ⊆ ↓V`
/// (lower), or both.
pub fn opens_of_space(os: &OrderedSpace, flavour: Flavour) -> OrderedLocale {
    let opens = os.opens();
    let ups: Vec<Subset> = opens.iter().map(|u| os.order().up_of(u)).collect();
    let downs: Vec<Subset> = opens.iter().map(|u| os.order().down_of(u)).collect();
    let rows = (0..opens.len())
        .map(|a| {
            Subset::from_bools(
                &(0..opens.len())
                    .map(|b| {
                        flavour.sides().iter().all(|side| match side {
                            Side::Upper => opens[b].is_subset(&ups[a]),
                            Side::Lower => opens[a].is_subset(&downs[b]),
                        })
                    })
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    let rel = Preorder::from_up_rows(rows).expect("cone inclusions form a preorder");
    OrderedLocale::new(frame_of_opens(os.space()), rel).expect("unions of cones are cones of unions")
}

/// `O g` together with whether it is monotone in the chosen flavour.
#[derive(Clone, Debug)]
pub struct OpensMap {
    pub source: OrderedLocale,
    pub target: OrderedLocale,
    pub map: LocaleMap,
    pub monotone: bool,
}

pub fn opens_of_map(
    s: &OrderedSpace,
    t: &OrderedSpace,
    g: &FnMap,
    flavour: Flavour,
) -> Result<OpensMap> {
    if g.domain() != s.size() || g.codomain() != t.size() {
        return Err(Error::SizeMismatch {
            expected: s.size(),
            found: g.domain(),
        });
    }
    if let Some(open) = s.space().continuity_witness(t.space(), g)? {
        return Err(Error::NotContinuous { open });
    }
    if let Some((x, y)) = monotonicity_witness(g, s.order(), t.order())? {
        return Err(Error::NotMonotone { x, y });
    }
    let table = t
        .opens()
        .iter()
        .map(|v| s.space().open_index(&g.preimage(v)).expect("continuous"))
        .collect();
    let source = opens_of_space(s, flavour);
    let target = opens_of_space(t, flavour);
    let map = LocaleMap::new(source.frame(), target.frame(), table)?;
    let monotone = map.is_monotone_for(&source, &target, flavour);
    Ok(OpensMap {
        source,
        target,
        map,
        monotone,
    })
}

/// A related pair `x <= y` of `t` whose probe map from the discrete two-point
/// chain has a non-monotone image under `O`.
pub fn two_point_probe_failure(t: &OrderedSpace, flavour: Flavour) -> Option<(usize, usize)> {
    let chain = OrderedSpace::new(FinSpace::discrete(2), Preorder::chain(2)).expect("sizes agree");
    t.order().pairs().find(|&(x, y)| {
        let g = FnMap::new(vec![x, y], t.size()).expect("in range");
        !opens_of_map(&chain, t, &g, flavour)
            .expect("probes are continuous and monotone")
            .monotone
    })
}

/// The order on points, via localic cones: `F ≤_U G` iff `⇑u ∈ G` for all
/// `u ∈ F`; `F ≤_L G` iff `⇓v ∈ F` for all `v ∈ G`; the Egli-Milner order
/// asks for both.
pub fn point_order(x: &OrderedLocale, points: &[PointFilter], flavour: Flavour) -> Preorder {
    let rows = points
        .iter()
        .map(|f| {
            Subset::from_bools(
                &points
                    .iter()
                    .map(|g| {
                        flavour.sides().iter().all(|side| match side {
                            Side::Upper => f.members().iter().all(|u| g.contains(x.up_cone(u))),
                            Side::Lower => g.members().iter().all(|v| f.contains(x.down_cone(v))),
                        })
                    })
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    Preorder::from_up_rows(rows).expect("orders on points are preorders")
}

/// The Egli-Milner order on points from its quantifier form: every member of
/// `F` precedes some member of `G`, and every member of `G` follows some
/// member of `F`.
pub fn point_order_by_definition(x: &OrderedLocale, points: &[PointFilter]) -> Preorder {
    let rows = points
        .iter()
        .map(|f| {
            Subset::from_bools(
                &points
                    .iter()
                    .map(|g| {
                        f.members()
                            .iter()
                            .all(|u| g.members().iter().any(|v| x.related(u, v)))
                            && g.members()
                                .iter()
                                .all(|v| f.members().iter().any(|u| x.related(u, v)))
                    })
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    Preorder::from_up_rows(rows).expect("orders on points are preorders")
}

/// The ordered space of points of an ordered locale.
#[derive(Clone, Debug)]
pub struct PtSpace {
    pub space: OrderedSpace,
    pub points: Vec<PointFilter>,
    /// For each frame element `u`, the index of the open `pt(u)`. Distinct
    /// elements may share an open when the locale is not spatial.
    pub opens_of: Vec<usize>,
}

impl PtSpace {
    /// The generating frame element of each point.
    pub fn generators(&self) -> Vec<usize> {
        self.points.iter().map(|p| p.generator()).collect()
    }

    pub fn is_spatial(&self) -> bool {
        let mut seen = self.opens_of.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == self.opens_of.len()
    }
}

pub fn points_of_locale(x: &OrderedLocale, flavour: Flavour) -> PtSpace {
    let points = points_of_frame(x.frame());
    let order = point_order(x, &points, flavour);
    let pts: Vec<Subset> = (0..x.size()).map(|u| x.points_containing(&points, u)).collect();
    let space = FinSpace::from_family_unchecked(points.len(), pts.clone());
    let opens_of = pts
        .iter()
        .map(|p| space.open_index(p).expect("image is the topology"))
        .collect();
    PtSpace {
        space: OrderedSpace::new(space, order).expect("sizes agree"),
        points,
        opens_of,
    }
}

/// `pt f` as a function between point sets, with re-checked verdicts.
#[derive(Clone, Debug)]
pub struct PtMap {
    pub source: PtSpace,
    pub target: PtSpace,
    pub map: FnMap,
    pub continuous: bool,
    pub monotone: bool,
}

pub fn points_of_map(
    x: &OrderedLocale,
    y: &OrderedLocale,
    f: &LocaleMap,
    flavour: Flavour,
) -> Result<PtMap> {
    if !f.is_monotone_for(x, y, flavour) {
        return Err(Error::LocaleMapNotMonotone(flavour.name()));
    }
    let source = points_of_locale(x, flavour);
    let target = points_of_locale(y, flavour);
    let table = source
        .points
        .iter()
        .map(|p| {
            let members = Subset::from_bools(
                &(0..y.size()).map(|v| p.contains(f.preimage(v))).collect::<Vec<_>>(),
            );
            locate_point(&target.points, &members).expect("frame maps send points to points")
        })
        .collect();
    let map = FnMap::new(table, target.points.len())?;
    let continuous = source
        .space
        .space()
        .continuity_witness(target.space.space(), &map)?
        .is_none();
    let monotone = monotonicity_witness(&map, source.space.order(), target.space.order())?.is_none();
    Ok(PtMap {
        source,
        target,
        map,
        continuous,
        monotone,
    })
}

/// Tablewise verdicts on a function between ordered spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MapVerdicts {
    pub continuous: bool,
    pub open: bool,
    pub monotone: bool,
    pub order_reflecting: bool,
    pub injective: bool,
    pub surjective: bool,
}

impl MapVerdicts {
    pub fn of(s: &OrderedSpace, t: &OrderedSpace, g: &FnMap) -> Self {
        let continuous = s
            .space()
            .continuity_witness(t.space(), g)
            .map(|w| w.is_none())
            .unwrap_or(false);
        let open = s.opens().iter().all(|u| t.space().is_open(&g.image(u)));
        let n = s.size();
        let mut monotone = true;
        let mut order_reflecting = true;
        for a in 0..n {
            for b in 0..n {
                let below = t.order().leq(g.apply(a), g.apply(b));
                if s.order().leq(a, b) && !below {
                    monotone = false;
                }
                if below && !s.order().leq(a, b) {
                    order_reflecting = false;
                }
            }
        }
        MapVerdicts {
            continuous,
            open,
            monotone,
            order_reflecting,
            injective: g.is_injective(),
            surjective: g.is_surjective(),
        }
    }

    /// Bijective, continuous and monotone both ways.
    pub fn is_order_homeomorphism(&self) -> bool {
        self.continuous
            && self.open
            && self.monotone
            && self.order_reflecting
            && self.injective
            && self.surjective
    }
}

/// `η_S: S -> pt(O S)`, `x ↦ {U | x ∈ U}`.
#[derive(Clone, Debug)]
pub struct Unit {
    pub locale: OrderedLocale,
    pub target: PtSpace,
    pub map: FnMap,
    pub verdicts: MapVerdicts,
}

pub fn unit(os: &OrderedSpace, flavour: Flavour) -> Unit {
    let locale = opens_of_space(os, flavour);
    let target = points_of_locale(&locale, flavour);
    let table = (0..os.size())
        .map(|x| {
            let members = Subset::from_bools(
                &os.opens().iter().map(|u| u.contains(x)).collect::<Vec<_>>(),
            );
            locate_point(&target.points, &members).expect("neighbourhood filters are points")
        })
        .collect();
    let map = FnMap::new(table, target.points.len()).expect("in range");
    let verdicts = MapVerdicts::of(os, &target.space, &map);
    Unit {
        locale,
        target,
        map,
        verdicts,
    }
}

/// `ε_X: O(pt X) -> X`, with frame map `u ↦ pt(u)`.
#[derive(Clone, Debug)]
pub struct Counit {
    pub points: PtSpace,
    /// `O(pt X)` in the same flavour.
    pub locale: OrderedLocale,
    pub map: LocaleMap,
    pub monotone: bool,
    pub spatial: bool,
    /// Monotonicity of the inverse locale map, when the frame map is a bijection.
    pub inverse_monotone: Option<bool>,
}

impl Counit {
    pub fn is_iso(&self) -> bool {
        self.spatial && self.monotone && self.inverse_monotone == Some(true)
    }
}

pub fn counit(x: &OrderedLocale, flavour: Flavour) -> Counit {
    let points = points_of_locale(x, flavour);
    let locale = opens_of_space(&points.space, flavour);
    let map = LocaleMap::new(locale.frame(), x.frame(), points.opens_of.clone())
        .expect("u ↦ pt(u) is a frame map");
    let monotone = map.is_monotone_for(&locale, x, flavour);
    let spatial = points.is_spatial();
    let inverse_monotone = spatial.then(|| {
        let mut inverse = vec![0; x.size()];
        for (u, &w) in points.opens_of.iter().enumerate() {
            inverse[w] = u;
        }
        let inv = LocaleMap::new(x.frame(), locale.frame(), inverse).expect("inverse of a frame iso");
        inv.is_monotone_for(x, &locale, flavour)
    });
    Counit {
        points,
        locale,
        map,
        monotone,
        spatial,
        inverse_monotone,
    }
}

/// Results of the two triangle identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Triangles {
    /// `ε_{O S} ∘ O(η_S)` is the identity on `O S`.
    pub opens_side: bool,
    /// `pt(ε_X) ∘ η_{pt X}` is the identity on `pt X`.
    pub points_side: bool,
}

pub fn check_triangle_identities(
    os: &OrderedSpace,
    x: &OrderedLocale,
    flavour: Flavour,
) -> Result<Triangles> {
    if !has_open_cones_for(os, flavour) {
        return Err(Error::Precondition(format!(
            "space lacks the open cones the {flavour} flavour needs"
        )));
    }
    if !satisfies_axiom_p_for(x, flavour) {
        return Err(Error::Precondition(format!(
            "locale fails the {flavour} form of axiom (P)"
        )));
    }

    let eta = unit(os, flavour);
    let o_eta = opens_of_map(os, &eta.target.space, &eta.map, flavour)?;
    let eps_os = counit(&eta.locale, flavour);
    let round = o_eta.map.then(&eps_os.map);
    let opens_side = round.table().iter().enumerate().all(|(i, &j)| i == j);

    let eps = counit(x, flavour);
    let eta_pt = unit(&eps.points.space, flavour);
    let pt_eps = points_of_map(&eps.locale, x, &eps.map, flavour)?;
    let round = pt_eps.map.after(&eta_pt.map);
    let points_side = round.is_identity();

    Ok(Triangles {
        opens_side,
        points_side,
    })
}

/// Everything bearing on whether an ordered space is fixed by `pt ∘ O`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpaceReport {
    pub flavour: Flavour,
    pub open_upper_cones: bool,
    pub open_lower_cones: bool,
    pub t0: bool,
    pub sober: bool,
    pub enough_points: bool,
    pub t0_ordered: bool,
    pub tu_ordered: bool,
    pub tl_ordered: bool,
    pub opens_satisfy_axiom_p: bool,
    pub unit: MapVerdicts,
    pub unit_order_homeomorphism: bool,
    /// Sober, separated and with open cones, all in the flavour's sense.
    pub fixed_point: bool,
    /// The fixed-point verdict agrees with the unit verdict.
    pub consistent: bool,
}

pub fn space_report(os: &OrderedSpace, flavour: Flavour) -> SpaceReport {
    let eta = unit(os, flavour);
    let sober = os.space().is_sober();
    let fixed_point = sober && has_open_cones_for(os, flavour) && is_t_ordered_for(os, flavour);
    let iso = eta.verdicts.is_order_homeomorphism();
    SpaceReport {
        flavour,
        open_upper_cones: os.has_open_upper_cones(),
        open_lower_cones: os.has_open_lower_cones(),
        t0: os.space().is_t0(),
        sober,
        enough_points: os.space().has_enough_points(),
        t0_ordered: os.is_t0_ordered(),
        tu_ordered: os.is_tu_ordered(),
        tl_ordered: os.is_tl_ordered(),
        opens_satisfy_axiom_p: satisfies_axiom_p_for(&eta.locale, flavour),
        unit: eta.verdicts,
        unit_order_homeomorphism: iso,
        fixed_point,
        consistent: fixed_point == iso,
    }
}

/// Everything bearing on whether an ordered locale is fixed by `O ∘ pt`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocaleReport {
    pub flavour: Flavour,
    pub points: usize,
    pub spatial: bool,
    pub axiom_p: bool,
    pub axiom_p_upper: bool,
    pub axiom_p_lower: bool,
    pub points_have_open_cones: bool,
    pub points_t_ordered: bool,
    pub counit_monotone: bool,
    pub counit_inverse_monotone: Option<bool>,
    pub counit_iso: bool,
    /// Spatial and satisfying the flavour's form of (P).
    pub fixed_point: bool,
    /// Points are separated, the counit is monotone, and under the flavour's
    /// (P) the point space has open cones and the counit is an iso exactly
    /// when the locale is spatial.
    pub consistent: bool,
}

pub fn locale_report(x: &OrderedLocale, flavour: Flavour) -> LocaleReport {
    let eps = counit(x, flavour);
    let axiom_p = satisfies_axiom_p_for(x, Flavour::EM);
    let axiom_p_upper = satisfies_axiom_p_for(x, Flavour::Upper);
    let axiom_p_lower = satisfies_axiom_p_for(x, Flavour::Lower);
    let in_domain = match flavour {
        Flavour::EM => axiom_p,
        Flavour::Upper => axiom_p_upper,
        Flavour::Lower => axiom_p_lower,
    };
    let points_have_open_cones = has_open_cones_for(&eps.points.space, flavour);
    let points_t_ordered = is_t_ordered_for(&eps.points.space, flavour);
    let iso = eps.is_iso();
    let consistent = points_t_ordered
        && eps.monotone
        && (!in_domain || (points_have_open_cones && eps.spatial == iso));
    LocaleReport {
        flavour,
        points: eps.points.points.len(),
        spatial: eps.spatial,
        axiom_p,
        axiom_p_upper,
        axiom_p_lower,
        points_have_open_cones,
        points_t_ordered,
        counit_monotone: eps.monotone,
        counit_inverse_monotone: eps.inverse_monotone,
        counit_iso: iso,
        fixed_point: eps.spatial && in_domain,
        consistent,
    }
}
