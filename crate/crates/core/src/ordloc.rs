//! Ordered locales: a finite frame with a preorder `⊴` on its elements that
//! is closed under joins of related pairs, together with locale maps and the
//! two ways of saying a locale map is monotone.
//!
//! Because every family in a finite frame is finite, closure of `⊴` under
//! arbitrary joins of related families reduces to closure under binary joins
//! plus `0 ⊴ 0`, and the latter is reflexivity.

use crate::duality::{point_order, point_order_by_definition, Flavour};
use crate::error::{Error, Result};
use crate::finord::Preorder;
use crate::frame::{nucleus_fixpoints, points_of_frame, FinFrame, FrameHom, Nucleus, Sublocale};
use crate::fintop::Side;
use crate::subset::Subset;

#[derive(Clone, PartialEq, Eq)]
pub struct OrderedLocale {
    frame: FinFrame,
    rel: Preorder,
    up_cones: Vec<usize>,
    down_cones: Vec<usize>,
}

/// Two related pairs whose joins are unrelated.
pub fn axiom_v_witness(frame: &FinFrame, rel: &Preorder) -> Option<(usize, usize, usize, usize)> {
    let pairs: Vec<(usize, usize)> = rel.pairs().collect();
    for (i, &(u, v)) in pairs.iter().enumerate() {
        for &(u2, v2) in &pairs[i + 1..] {
            if !rel.leq(frame.join(u, u2), frame.join(v, v2)) {
                return Some((u, v, u2, v2));
            }
        }
    }
    None
}

pub fn check_axiom_v(frame: &FinFrame, rel: &Preorder) -> bool {
    rel.size() == frame.size() && axiom_v_witness(frame, rel).is_none()
}

/// The frame ordered by its own `⊑`.
pub fn inclusion_ordered_locale(frame: &FinFrame) -> OrderedLocale {
    OrderedLocale::from_parts(frame.clone(), frame.order().clone())
}

impl OrderedLocale {
    pub fn new(frame: FinFrame, rel: Preorder) -> Result<Self> {
        if rel.size() != frame.size() {
            return Err(Error::SizeMismatch {
                expected: frame.size(),
                found: rel.size(),
            });
        }
        if let Some((u, v, u2, v2)) = axiom_v_witness(&frame, &rel) {
            return Err(Error::AxiomV { u, v, u2, v2 });
        }
        Ok(Self::from_parts(frame, rel))
    }

    pub(crate) fn from_parts(frame: FinFrame, rel: Preorder) -> Self {
        let n = frame.size();
        let up_cones = (0..n)
            .map(|u| frame.join_all(rel.principal_up(u).iter()))
            .collect();
        let down_cones = (0..n)
            .map(|u| frame.join_all(rel.principal_down(u).iter()))
            .collect();
        OrderedLocale {
            frame,
            rel,
            up_cones,
            down_cones,
        }
    }

    /// `⊴` is equality.
    pub fn equality(frame: &FinFrame) -> Self {
        Self::from_parts(frame.clone(), Preorder::discrete(frame.size()))
    }

    /// Everything is related to everything.
    pub fn total(frame: &FinFrame) -> Self {
        Self::from_parts(frame.clone(), Preorder::total(frame.size()))
    }

    /// The least valid order containing `pairs`: close under reflexivity,
    /// transitivity and binary joins until nothing changes.
    pub fn generated(frame: &FinFrame, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = frame.size();
        let mut rows: Vec<Subset> = (0..n).map(|u| Subset::singleton(n, u)).collect();
        for &(u, v) in pairs {
            if u >= n || v >= n {
                return Err(Error::IndexOutOfRange {
                    index: u.max(v),
                    size: n,
                });
            }
            rows[u].insert(v);
        }
        loop {
            let order = warshall(rows);
            let related: Vec<(usize, usize)> = order.pairs().collect();
            let mut next: Vec<Subset> = (0..n).map(|u| order.principal_up(u).clone()).collect();
            let mut grew = false;
            for (i, &(u, v)) in related.iter().enumerate() {
                for &(u2, v2) in &related[i + 1..] {
                    let (a, b) = (frame.join(u, u2), frame.join(v, v2));
                    if !next[a].contains(b) {
                        next[a].insert(b);
                        grew = true;
                    }
                }
            }
            if !grew {
                return Ok(Self::from_parts(frame.clone(), order));
            }
            rows = next;
        }
    }

    pub fn frame(&self) -> &FinFrame {
        &self.frame
    }

    pub fn rel(&self) -> &Preorder {
        &self.rel
    }

    pub fn size(&self) -> usize {
        self.frame.size()
    }

    /// `u ⊴ v`.
    pub fn related(&self, u: usize, v: usize) -> bool {
        self.rel.leq(u, v)
    }

    /// `⇑u`, the join of everything `u` precedes.
    pub fn up_cone(&self, u: usize) -> usize {
        self.up_cones[u]
    }

    /// `⇓u`, the join of everything preceding `u`.
    pub fn down_cone(&self, u: usize) -> usize {
        self.down_cones[u]
    }

    pub fn cone(&self, u: usize, side: Side) -> usize {
        match side {
            Side::Upper => self.up_cone(u),
            Side::Lower => self.down_cone(u),
        }
    }

    /// Points of the frame whose filters contain `u`, as a subset of
    /// [`points_of_frame`] indices.
    pub fn points_containing(&self, points: &[crate::frame::PointFilter], u: usize) -> Subset {
        Subset::from_bools(&points.iter().map(|p| p.contains(u)).collect::<Vec<_>>())
    }
}

impl std::fmt::Debug for OrderedLocale {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("OrderedLocale")
            .field("frame", &self.frame)
            .field("rel", &self.rel)
            .finish()
    }
}

fn warshall(mut rows: Vec<Subset>) -> Preorder {
    let n = rows.len();
    for k in 0..n {
        let row_k = rows[k].clone();
        for row in rows.iter_mut() {
            if row.contains(k) {
                row.union_with(&row_k);
            }
        }
    }
    Preorder::from_rows_unchecked(rows)
}

/// A locale map `f: X -> Y`, stored as its frame map `f⁻¹: O Y -> O X`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LocaleMap {
    preimage: FrameHom,
}

/// Data showing a failure of upper (or lower) monotonicity: `u ⊴ u2` and a
/// `v` related to the anchor by `R_f` with no matching partner.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonotoneViolation {
    pub u: usize,
    pub u2: usize,
    pub v: usize,
    pub side: Side,
}

impl LocaleMap {
    /// `table[v]` is `f⁻¹(v)`; rejected unless it is a frame homomorphism from
    /// `codomain` to `domain`.
    pub fn new(domain: &FinFrame, codomain: &FinFrame, table: Vec<usize>) -> Result<Self> {
        let hom = FrameHom::new(table);
        if let Some(clause) = hom.violation(codomain, domain)? {
            return Err(Error::NotFrameHom { clause });
        }
        Ok(LocaleMap { preimage: hom })
    }

    pub(crate) fn from_table_unchecked(table: Vec<usize>) -> Self {
        LocaleMap {
            preimage: FrameHom::new(table),
        }
    }

    pub fn identity(frame: &FinFrame) -> Self {
        LocaleMap {
            preimage: FrameHom::identity(frame.size()),
        }
    }

    pub fn preimage(&self, v: usize) -> usize {
        self.preimage.apply(v)
    }

    pub fn table(&self) -> &[usize] {
        self.preimage.table()
    }

    pub fn hom(&self) -> &FrameHom {
        &self.preimage
    }

    /// `g ∘ self`, with frame map `self⁻¹ ∘ g⁻¹`.
    pub fn then(&self, g: &LocaleMap) -> LocaleMap {
        LocaleMap {
            preimage: self.preimage.after(&g.preimage),
        }
    }

    /// `(u, v) ∈ R_f`, i.e. `u ⊑ f⁻¹(v)` in the domain.
    pub fn related(&self, domain: &OrderedLocale, u: usize, v: usize) -> bool {
        domain.frame().leq(u, self.preimage(v))
    }

    /// The relation `R_f` as rows over domain elements.
    pub fn relation(&self, domain: &OrderedLocale, codomain: &OrderedLocale) -> Vec<Subset> {
        (0..domain.size())
            .map(|u| {
                Subset::from_bools(
                    &(0..codomain.size())
                        .map(|v| self.related(domain, u, v))
                        .collect::<Vec<_>>(),
                )
            })
            .collect()
    }

    /// First failure of the quantified monotonicity condition on `side`.
    ///
    /// Upper: `u ⊴ u2` and `(u, v) ∈ R_f` need some `v ⊴ v2` with
    /// `(u2, v2) ∈ R_f`. Lower: `u ⊴ u2` and `(u2, v) ∈ R_f` need some
    /// `v1 ⊴ v` with `(u, v1) ∈ R_f`.
    pub fn monotone_witness(
        &self,
        domain: &OrderedLocale,
        codomain: &OrderedLocale,
        side: Side,
    ) -> Option<MonotoneViolation> {
        let (nx, ny) = (domain.size(), codomain.size());
        // partner[w * ny + v]: some codomain element on the far side of v is
        // R_f-related to w
        let mut partner = vec![false; nx * ny];
        for w in 0..nx {
            for v in 0..ny {
                let candidates = match side {
                    Side::Upper => codomain.rel().principal_up(v),
                    Side::Lower => codomain.rel().principal_down(v),
                };
                partner[w * ny + v] = candidates.iter().any(|c| self.related(domain, w, c));
            }
        }
        for (u, u2) in domain.rel().pairs() {
            let (anchor, other) = match side {
                Side::Upper => (u, u2),
                Side::Lower => (u2, u),
            };
            for v in 0..ny {
                if self.related(domain, anchor, v) && !partner[other * ny + v] {
                    return Some(MonotoneViolation { u, u2, v, side });
                }
            }
        }
        None
    }

    pub fn is_upper_monotone(&self, domain: &OrderedLocale, codomain: &OrderedLocale) -> bool {
        self.monotone_witness(domain, codomain, Side::Upper).is_none()
    }

    pub fn is_lower_monotone(&self, domain: &OrderedLocale, codomain: &OrderedLocale) -> bool {
        self.monotone_witness(domain, codomain, Side::Lower).is_none()
    }

    pub fn is_monotone(&self, domain: &OrderedLocale, codomain: &OrderedLocale) -> bool {
        self.is_upper_monotone(domain, codomain) && self.is_lower_monotone(domain, codomain)
    }

    /// A codomain element `v` with `⇑f⁻¹(v) ⋢ f⁻¹(⇑v)` (or the lower dual).
    pub fn cone_witness(
        &self,
        domain: &OrderedLocale,
        codomain: &OrderedLocale,
        side: Side,
    ) -> Option<usize> {
        (0..codomain.size()).find(|&v| {
            let lhs = domain.cone(self.preimage(v), side);
            let rhs = self.preimage(codomain.cone(v, side));
            !domain.frame().leq(lhs, rhs)
        })
    }

    pub fn is_monotone_via_cones(&self, domain: &OrderedLocale, codomain: &OrderedLocale) -> bool {
        self.cone_witness(domain, codomain, Side::Upper).is_none()
            && self.cone_witness(domain, codomain, Side::Lower).is_none()
    }

    /// Monotone in the sense matching `flavour`: upper, lower, or both.
    pub fn is_monotone_for(
        &self,
        domain: &OrderedLocale,
        codomain: &OrderedLocale,
        flavour: Flavour,
    ) -> bool {
        flavour
            .sides()
            .iter()
            .all(|&side| self.monotone_witness(domain, codomain, side).is_none())
    }
}

/// Opens `u ⊴ v` for which the point sets are not related as (P) demands,
/// using the order on points from its defining quantifier form.
///
/// For [`Flavour::EM`] both inclusions `pt(v) ⊆ ↑pt(u)` and
/// `pt(u) ⊆ ↓pt(v)` are required; the one-sided flavours keep one inclusion,
/// measured in the matching order on points.
pub fn axiom_p_witness(x: &OrderedLocale, flavour: Flavour) -> Option<(usize, usize)> {
    let points = points_of_frame(x.frame());
    let order = match flavour {
        Flavour::EM => point_order_by_definition(x, &points),
        _ => point_order(x, &points, flavour),
    };
    let pt: Vec<Subset> = (0..x.size()).map(|u| x.points_containing(&points, u)).collect();
    x.rel().pairs().find(|&(u, v)| {
        let upper_ok = pt[v].is_subset(&order.up_of(&pt[u]));
        let lower_ok = pt[u].is_subset(&order.down_of(&pt[v]));
        match flavour {
            Flavour::EM => !(upper_ok && lower_ok),
            Flavour::Upper => !upper_ok,
            Flavour::Lower => !lower_ok,
        }
    })
}

/// An element `u` with `↑pt(u) ≠ pt(⇑u)` or `↓pt(u) ≠ pt(⇓u)`, restricted
/// to the cones `flavour` cares about, and with cones of points taken in the
/// order on points for `flavour`.
pub fn axiom_p_cone_witness(x: &OrderedLocale, flavour: Flavour) -> Option<usize> {
    let points = points_of_frame(x.frame());
    let order = point_order(x, &points, flavour);
    (0..x.size()).find(|&u| {
        let pt_u = x.points_containing(&points, u);
        flavour.sides().iter().any(|&side| {
            let cone = match side {
                Side::Upper => order.up_of(&pt_u),
                Side::Lower => order.down_of(&pt_u),
            };
            cone != x.points_containing(&points, x.cone(u, side))
        })
    })
}

/// Axiom (P), checked directly.
pub fn satisfies_axiom_p(x: &OrderedLocale) -> bool {
    axiom_p_witness(x, Flavour::EM).is_none()
}

/// Axiom (P), checked as equality of point cones with points of localic cones.
pub fn satisfies_axiom_p_cones(x: &OrderedLocale) -> bool {
    axiom_p_cone_witness(x, Flavour::EM).is_none()
}

pub fn satisfies_axiom_p_for(x: &OrderedLocale, flavour: Flavour) -> bool {
    axiom_p_witness(x, flavour).is_none()
}

/// A sublocale with the largest order making its inclusion monotone.
#[derive(Clone, Debug)]
pub struct OrderedSublocale {
    pub sublocale: Sublocale,
    pub locale: OrderedLocale,
}

impl OrderedSublocale {
    /// The inclusion `j: Y -> X` as a locale map.
    pub fn inclusion(&self) -> LocaleMap {
        LocaleMap::from_table_unchecked(self.sublocale.quotient.clone())
    }
}

/// Orders the fixed points of `n` by `A ⊴_j B` iff every `U` with
/// `A ⊑ j(U)` has `B ⊑ j(⇑U)` and every `V` with `B ⊑ j(V)` has
/// `A ⊑ j(⇓V)`.
pub fn sublocale_order(x: &OrderedLocale, n: &Nucleus) -> Result<OrderedSublocale> {
    let sub = nucleus_fixpoints(x.frame(), n)?;
    let f = x.frame();
    let k = sub.embed.len();
    let reach: Vec<Subset> = sub
        .embed
        .iter()
        .map(|&a| Subset::from_bools(&(0..f.size()).map(|u| f.leq(a, n.apply(u))).collect::<Vec<_>>()))
        .collect();
    let up = (0..k)
        .map(|a| {
            Subset::from_bools(
                &(0..k)
                    .map(|b| {
                        reach[a].iter().all(|u| reach[b].contains(x.up_cone(u)))
                            && reach[b].iter().all(|v| reach[a].contains(x.down_cone(v)))
                    })
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    let rel = Preorder::from_up_rows(up)?;
    let locale = OrderedLocale::new(sub.frame.clone(), rel)?;
    Ok(OrderedSublocale {
        sublocale: sub,
        locale,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::{opens_of_space, Flavour};
    use crate::fintop::{FinSpace, OrderedSpace};

    fn boolean4_a_below_b() -> (FinFrame, Preorder) {
        let f = FinFrame::boolean(2);
        // elements: 0, a = 1, b = 2, 1 = 3
        let rel = Preorder::closure_of(4, [(1, 2)]).unwrap();
        (f, rel)
    }

    #[test]
    fn axiom_v_examples() {
        let f = FinFrame::chain(3);
        assert!(check_axiom_v(&f, f.order()));
        assert!(check_axiom_v(&f, &Preorder::total(3)));
        let (b, rel) = boolean4_a_below_b();
        assert!(!check_axiom_v(&b, &rel));
        assert!(matches!(OrderedLocale::new(b, rel), Err(Error::AxiomV { .. })));
    }

    #[test]
    fn cones_of_inclusion_and_equality() {
        let f = FinFrame::boolean(2);
        let inc = inclusion_ordered_locale(&f);
        let eq = OrderedLocale::equality(&f);
        for u in 0..4 {
            assert_eq!(inc.up_cone(u), f.top());
            assert_eq!(inc.down_cone(u), u);
            assert_eq!(eq.up_cone(u), u);
            assert_eq!(eq.down_cone(u), u);
        }
    }

    #[test]
    fn generated_order_satisfies_axiom_v() {
        let (b, rel) = boolean4_a_below_b();
        let pairs: Vec<_> = rel.strict_pairs().collect();
        let x = OrderedLocale::generated(&b, &pairs).unwrap();
        assert!(check_axiom_v(x.frame(), x.rel()));
        // a ⊴ b and b ⊴ b force a ∨ b = 1 ⊴ b
        assert!(x.related(3, 2));
    }

    #[test]
    fn relation_r_f_examples() {
        let f = FinFrame::chain(3);
        let x = inclusion_ordered_locale(&f);
        let id = LocaleMap::identity(&f);
        for u in 0..3 {
            for v in 0..3 {
                assert_eq!(id.related(&x, u, v), f.leq(u, v));
            }
            assert!(id.related(&x, id.preimage(u), u));
            assert!(id.related(&x, 0, u));
        }
    }

    #[test]
    fn identity_and_terminal_maps_are_monotone() {
        let f = FinFrame::boolean(2);
        for x in [
            inclusion_ordered_locale(&f),
            OrderedLocale::equality(&f),
            OrderedLocale::total(&f),
        ] {
            let id = LocaleMap::identity(&f);
            assert!(id.is_monotone(&x, &x));
            assert!(id.is_monotone_via_cones(&x, &x));
            // the point is terminal once its two opens are related both ways
            let one = FinFrame::chain(2);
            let point = OrderedLocale::total(&one);
            let to_point = LocaleMap::new(x.frame(), &one, vec![f.bottom(), f.top()]).unwrap();
            assert!(to_point.is_monotone(&x, &point));
            assert!(to_point.is_monotone_via_cones(&x, &point));
        }
    }

    #[test]
    fn inclusion_orders_make_every_map_cone_monotone() {
        let x = inclusion_ordered_locale(&FinFrame::chain(3));
        let y = inclusion_ordered_locale(&FinFrame::chain(2));
        let collapse = LocaleMap::new(x.frame(), y.frame(), vec![0, 2]).unwrap();
        assert!(collapse.is_monotone_via_cones(&x, &y));
        assert!(collapse.is_monotone(&x, &y));
    }

    #[test]
    fn frame_hom_is_checked_for_locale_maps() {
        let f = FinFrame::chain(3);
        assert!(matches!(
            LocaleMap::new(&f, &f, vec![2, 2, 2]),
            Err(Error::NotFrameHom { .. })
        ));
    }

    #[test]
    fn axiom_p_examples() {
        let trivial = OrderedLocale::total(&FinFrame::chain(1));
        assert!(satisfies_axiom_p(&trivial));
        assert!(satisfies_axiom_p_cones(&trivial));
        let eq = OrderedLocale::equality(&FinFrame::boolean(2));
        assert!(satisfies_axiom_p(&eq));
        let os = OrderedSpace::new(FinSpace::discrete(2), Preorder::chain(2)).unwrap();
        let o = opens_of_space(&os, Flavour::EM);
        assert!(satisfies_axiom_p(&o));
        assert!(satisfies_axiom_p_cones(&o));
    }

    #[test]
    fn sublocale_order_trivial_cases() {
        let f = FinFrame::chain(3);
        let x = inclusion_ordered_locale(&f);
        let same = sublocale_order(&x, &Nucleus::identity(&f)).unwrap();
        for (u, v) in x.rel().pairs() {
            assert!(same.locale.related(u, v));
        }
        assert!(same.inclusion().is_monotone(&same.locale, &x));
        let top = sublocale_order(&x, &Nucleus::constant_top(&f)).unwrap();
        assert_eq!(top.locale.size(), 1);
    }

    #[test]
    fn open_sublocale_order_matches_left_adjoint() {
        // 4-element Boolean frame with the EM order of the discrete 2-chain;
        // open sublocale at u = {1}
        let os = OrderedSpace::new(FinSpace::discrete(2), Preorder::chain(2)).unwrap();
        let x = opens_of_space(&os, Flavour::EM);
        let f = x.frame();
        for u in 0..f.size() {
            let sub = sublocale_order(&x, &Nucleus::open(f, u)).unwrap();
            let k = sub.sublocale.embed.len();
            for a in 0..k {
                for b in 0..k {
                    let lower_a = f.meet(sub.sublocale.embed[a], u);
                    let lower_b = f.meet(sub.sublocale.embed[b], u);
                    assert_eq!(sub.locale.related(a, b), x.related(lower_a, lower_b), "u={u} a={a} b={b}");
                }
            }
        }
    }
}
