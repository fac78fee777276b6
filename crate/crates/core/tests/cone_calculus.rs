use ordloc::finord::is_monotone_fn;
use ordloc::gen::{all_preorders, seed_from_env, Gen};
use ordloc::{oracle, FnMap, Preorder, Subset};
use proptest::prelude::*;

fn all_subsets(n: usize) -> Vec<Subset> {
    (0..1u64 << n).map(|m| Subset::from_mask(n, m)).collect()
}

fn all_maps(n: usize, m: usize) -> Vec<FnMap> {
    if n > 0 && m == 0 {
        return Vec::new();
    }
    let count = m.pow(n as u32);
    (0..count)
        .map(|mut k| {
            let table = (0..n)
                .map(|_| {
                    let v = k % m;
                    k /= m;
                    v
                })
                .collect();
            FnMap::new(table, m).unwrap()
        })
        .collect()
}

fn check_cone_laws(p: &Preorder, a: &Subset, b: &Subset) {
    let up = |s: &Subset| p.up_set(s).unwrap();
    let down = |s: &Subset| p.down_set(s).unwrap();
    assert_eq!(up(a), oracle::up_set(p, a));
    assert_eq!(down(a), oracle::down_set(p, a));
    assert!(a.is_subset(&up(a)) && a.is_subset(&down(a)));
    assert_eq!(up(&up(a)), up(a));
    assert_eq!(down(&down(a)), down(a));
    if a.is_subset(b) {
        assert!(up(a).is_subset(&up(b)));
        assert!(down(a).is_subset(&down(b)));
    }
    assert_eq!(up(&a.union(b)), up(a).union(&up(b)));
    assert_eq!(down(&a.union(b)), down(a).union(&down(b)));
}

/// The three characterisations of monotonicity agree.
fn check_monotone_forms(g: &FnMap, p: &Preorder, q: &Preorder) {
    let direct = is_monotone_fn(g, p, q).unwrap();
    let subsets = all_subsets(q.size());
    let via_up = subsets
        .iter()
        .all(|b| p.up_set(&g.preimage(b)).unwrap().is_subset(&g.preimage(&q.up_set(b).unwrap())));
    let via_down = subsets
        .iter()
        .all(|b| p.down_set(&g.preimage(b)).unwrap().is_subset(&g.preimage(&q.down_set(b).unwrap())));
    let naive = p.pairs().all(|(x, y)| q.leq(g.apply(x), g.apply(y)));
    assert_eq!(direct, naive);
    assert_eq!(direct, via_up);
    assert_eq!(direct, via_down);
}

#[test]
fn cone_laws_exhaustive_up_to_three_points() {
    for n in 0..=3 {
        let subsets = all_subsets(n);
        for p in all_preorders(n) {
            for a in &subsets {
                for b in &subsets {
                    check_cone_laws(&p, a, b);
                }
            }
        }
    }
}

#[test]
fn empty_set_has_empty_cones() {
    for p in all_preorders(3) {
        let e = Subset::empty(3);
        assert!(p.up_set(&e).unwrap().is_empty());
        assert!(p.down_set(&e).unwrap().is_empty());
    }
}

#[test]
fn cones_of_large_families_are_unions() {
    let mut g = Gen::new(seed_from_env(11));
    for _ in 0..200 {
        let n = g.range(1, 6);
        let p = g.preorder(n, 0.3);
        let k = g.range(0, 5);
        let family: Vec<Subset> = (0..k)
            .map(|_| Subset::from_mask(n, g.range(0, (1 << n) - 1) as u64))
            .collect();
        let union = family.iter().fold(Subset::empty(n), |acc, s| acc.union(s));
        let pieces = family
            .iter()
            .fold(Subset::empty(n), |acc, s| acc.union(&p.up_set(s).unwrap()));
        assert_eq!(p.up_set(&union).unwrap(), pieces);
    }
}

#[test]
fn monotonicity_forms_agree_exhaustively() {
    for n in 0..=3 {
        for m in 0..=3 {
            let maps = all_maps(n, m);
            for p in all_preorders(n) {
                for q in all_preorders(m) {
                    for g in &maps {
                        check_monotone_forms(g, &p, &q);
                    }
                }
            }
        }
    }
}

#[test]
fn monotonicity_forms_agree_on_four_points() {
    let mut g = Gen::new(seed_from_env(12));
    let preorders = all_preorders(4);
    for _ in 0..3000 {
        let p = &preorders[g.range(0, preorders.len() - 1)];
        let q = &preorders[g.range(0, preorders.len() - 1)];
        let table = (0..4).map(|_| g.range(0, 3)).collect();
        check_monotone_forms(&FnMap::new(table, 4).unwrap(), p, q);
    }
}

proptest! {
    #[test]
    fn cone_laws_on_random_preorders(seed in any::<u64>(), n in 1usize..=6, ma in any::<u64>(), mb in any::<u64>()) {
        let mut g = Gen::new(seed);
        let p = g.preorder(n, 0.35);
        check_cone_laws(&p, &Subset::from_mask(n, ma), &Subset::from_mask(n, mb));
    }

    #[test]
    fn closure_is_a_preorder_containing_the_pairs(
        pairs in proptest::collection::vec((0usize..5, 0usize..5), 0..8)
    ) {
        let p = Preorder::closure_of(5, pairs.iter().copied()).unwrap();
        for &(x, y) in &pairs {
            prop_assert!(p.leq(x, y));
        }
        prop_assert!(Preorder::from_matrix(&p.to_matrix()).is_ok());
    }
}
