//! Brute-force reference implementations.
//!
//! Everything here works straight from the definitions with nested loops and
//! shares no code with the main modules beyond the data types, so tests can
//! pit the two against each other.

use std::collections::BTreeSet;

use crate::finord::Preorder;
use crate::fintop::FinSpace;
use crate::frame::FinFrame;
use crate::subset::Subset;

/// `{ y | ∃x ∈ a. x ≤ y }`, by scanning all pairs.
pub fn up_set(p: &Preorder, a: &Subset) -> Subset {
    let n = p.size();
    let mut out = Subset::empty(n);
    for x in a.iter() {
        for y in 0..n {
            if p.leq(x, y) {
                out.insert(y);
            }
        }
    }
    out
}

/// `{ y | ∃x ∈ a. y ≤ x }`, by scanning all pairs.
pub fn down_set(p: &Preorder, a: &Subset) -> Subset {
    let n = p.size();
    let mut out = Subset::empty(n);
    for x in a.iter() {
        for y in 0..n {
            if p.leq(y, x) {
                out.insert(y);
            }
        }
    }
    out
}

/// Union of every open contained in `a`.
pub fn interior(space: &FinSpace, a: &Subset) -> Subset {
    let mut out = Subset::empty(space.size());
    for u in space.opens() {
        if u.is_subset(a) {
            out.union_with(u);
        }
    }
    out
}

/// The topology generated by `subbasis`, by closing under pairwise
/// intersections and then pairwise unions until nothing new appears.
pub fn generated_topology(size: usize, subbasis: &[Subset]) -> Vec<Subset> {
    let mut family: BTreeSet<Subset> = subbasis.iter().cloned().collect();
    family.insert(Subset::empty(size));
    family.insert(Subset::full(size));
    for op in [Subset::intersection as fn(&Subset, &Subset) -> Subset, Subset::union] {
        loop {
            let current: Vec<Subset> = family.iter().cloned().collect();
            let mut grew = false;
            for (i, u) in current.iter().enumerate() {
                for v in &current[i + 1..] {
                    grew |= family.insert(op(u, v));
                }
            }
            if !grew {
                break;
            }
        }
    }
    family.into_iter().collect()
}

/// Largest `c` with `c ∧ a ⊑ b`, found by trying every element.
pub fn implies(f: &FinFrame, a: usize, b: usize) -> usize {
    let candidates: Vec<usize> = (0..f.size()).filter(|&c| f.leq(f.meet(c, a), b)).collect();
    *candidates
        .iter()
        .find(|&&c| candidates.iter().all(|&d| f.leq(d, c)))
        .expect("a finite distributive lattice is Heyting")
}

/// Every completely prime filter of `f`, listed by enumerating all upsets.
///
/// In a finite frame complete primeness reduces to excluding the bottom and
/// binary primeness, so the check below is the definition verbatim.
pub fn completely_prime_filters(f: &FinFrame) -> Vec<Subset> {
    let n = f.size();
    // elements ordered so that everything strictly above x comes before x
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (0..n).filter(|&y| f.leq(x, y)).count());
    let mut found = Vec::new();
    let mut current = Subset::empty(n);
    enumerate_upsets(f, &order, 0, &mut current, &mut found);
    found.retain(|s| is_completely_prime_filter(f, s));
    found.sort();
    found
}

fn enumerate_upsets(f: &FinFrame, order: &[usize], i: usize, current: &mut Subset, out: &mut Vec<Subset>) {
    if i == order.len() {
        out.push(current.clone());
        return;
    }
    let x = order[i];
    enumerate_upsets(f, order, i + 1, current, out);
    let above_present = (0..f.size()).all(|y| !f.leq(x, y) || y == x || current.contains(y));
    if above_present {
        current.insert(x);
        enumerate_upsets(f, order, i + 1, current, out);
        current.remove(x);
    }
}

pub fn is_completely_prime_filter(f: &FinFrame, s: &Subset) -> bool {
    let n = f.size();
    if s.is_empty() || s.contains(f.bottom()) {
        return false;
    }
    for a in 0..n {
        for b in 0..n {
            if s.contains(a) && f.leq(a, b) && !s.contains(b) {
                return false;
            }
            if s.contains(a) && s.contains(b) && !s.contains(f.meet(a, b)) {
                return false;
            }
            if s.contains(f.join(a, b)) && !s.contains(a) && !s.contains(b) {
                return false;
            }
        }
    }
    true
}

/// Relational composite `s ∘ r`, rows indexed by the source of `r`.
pub fn compose(r: &[Subset], s: &[Subset]) -> Vec<Subset> {
    let width = s.first().map_or(0, Subset::len);
    r.iter()
        .map(|row| {
            let mut out = Subset::empty(width);
            for v in row.iter() {
                out.union_with(&s[v]);
            }
            out
        })
        .collect()
}

/// Both (∗) inclusions checked over every pair of opens, with cones and
/// interiors computed here from scratch.
pub fn lambda_holds(space: &FinSpace, p: &Preorder) -> bool {
    space.opens().iter().all(|u| {
        let up_int = interior(space, &up_set(p, u));
        let down_int = interior(space, &down_set(p, u));
        space.opens().iter().all(|v| {
            u.intersection(&up_set(p, v))
                .is_subset(&up_set(p, &down_int.intersection(v)))
                && u
                    .intersection(&down_set(p, v))
                    .is_subset(&down_set(p, &up_int.intersection(v)))
        })
    })
}

/// Whether `↑U` and `↓U` are open for every open `U`.
pub fn open_cones(space: &FinSpace, p: &Preorder) -> bool {
    space
        .opens()
        .iter()
        .all(|u| space.is_open(&up_set(p, u)) && space.is_open(&down_set(p, u)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_has_one_filter_per_nonbottom_element() {
        let f = FinFrame::chain(4);
        assert_eq!(completely_prime_filters(&f).len(), 3);
    }

    #[test]
    fn boolean_square_has_two_points() {
        let f = FinFrame::boolean(2);
        let pts = completely_prime_filters(&f);
        assert_eq!(pts.len(), 2);
        assert!(pts.iter().all(|p| p.count() == 2));
    }

    #[test]
    fn implication_on_a_chain() {
        let f = FinFrame::chain(3);
        assert_eq!(implies(&f, 2, 1), 1);
        assert_eq!(implies(&f, 1, 2), 2);
    }
}
