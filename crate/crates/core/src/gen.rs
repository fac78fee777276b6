//! Exhaustive enumerations, seeded random instances, and named fixtures.
//!
//! A finite topology is the same thing as a preorder: the opens are the
//! upsets of the specialisation order. [`all_topologies`] uses this, so the
//! topologies on `n` points come out in bijection with [`all_preorders`].

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::finord::{FnMap, Preorder};
use crate::fintop::{upper_topology, FinSpace, OrderedSpace};
use crate::frame::{frame_of_opens, FinFrame};
use crate::ordloc::{LocaleMap, OrderedLocale};
use crate::subset::Subset;

/// Environment variable overriding the seed of randomized suites.
pub const SEED_VAR: &str = "ORDLOC_SEED";

/// The seed from [`SEED_VAR`] if it parses, else `default`.
pub fn seed_from_env(default: u64) -> u64 {
    std::env::var(SEED_VAR)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(default)
}

/// Every preorder on `0..n`. Grows as `2^(n(n-1))`; meant for `n <= 4`.
pub fn all_preorders(n: usize) -> Vec<Preorder> {
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    assert!(off.len() < 32, "too many points to enumerate");
    let mut out = Vec::new();
    for mask in 0u32..(1 << off.len()) {
        let mut rows: Vec<Subset> = (0..n).map(|x| Subset::singleton(n, x)).collect();
        for (i, &(x, y)) in off.iter().enumerate() {
            if mask >> i & 1 == 1 {
                rows[x].insert(y);
            }
        }
        if let Ok(p) = Preorder::from_up_rows(rows) {
            out.push(p);
        }
    }
    out
}

/// Partial orders on `0..n` in which `x <= y` implies `x <= y` as numbers.
/// Every finite poset has such a labelling, so this covers all posets up to
/// isomorphism, with repeats.
pub fn all_posets(n: usize) -> Vec<Preorder> {
    let up: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .collect();
    assert!(up.len() < 32, "too many points to enumerate");
    let mut out = Vec::new();
    for mask in 0u32..(1 << up.len()) {
        let mut rows: Vec<Subset> = (0..n).map(|x| Subset::singleton(n, x)).collect();
        for (i, &(x, y)) in up.iter().enumerate() {
            if mask >> i & 1 == 1 {
                rows[x].insert(y);
            }
        }
        if let Ok(p) = Preorder::from_up_rows(rows) {
            out.push(p);
        }
    }
    out
}

/// Every topology on `0..n`, as the upsets of each preorder.
pub fn all_topologies(n: usize) -> Vec<FinSpace> {
    all_preorders(n).iter().map(upper_topology).collect()
}

/// Every pairing of a topology with a preorder on `0..n`.
pub fn all_ordered_spaces(n: usize) -> Vec<OrderedSpace> {
    let orders = all_preorders(n);
    let spaces: Vec<FinSpace> = orders.iter().map(upper_topology).collect();
    let mut out = Vec::with_capacity(orders.len() * spaces.len());
    for s in &spaces {
        for p in &orders {
            out.push(OrderedSpace::new(s.clone(), p.clone()).expect("sizes agree"));
        }
    }
    out
}

/// A seeded source of random finite structures.
pub struct Gen {
    rng: ChaCha8Rng,
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn range(&mut self, lo: usize, hi_inclusive: usize) -> usize {
        self.rng.random_range(lo..=hi_inclusive)
    }

    /// Closure of a random relation in which each off-diagonal pair is
    /// present with probability `density`.
    pub fn preorder(&mut self, n: usize, density: f64) -> Preorder {
        let mut pairs = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x != y && self.rng.random_bool(density) {
                    pairs.push((x, y));
                }
            }
        }
        Preorder::closure_of(n, pairs).expect("indices in range")
    }

    /// A random partial order: a random relation compatible with a random
    /// linear order, then closed.
    pub fn poset(&mut self, n: usize, density: f64) -> Preorder {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut self.rng);
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.rng.random_bool(density) {
                    pairs.push((perm[i], perm[j]));
                }
            }
        }
        Preorder::closure_of(n, pairs).expect("indices in range")
    }

    /// The topology generated by a few random subsets.
    pub fn space(&mut self, n: usize) -> FinSpace {
        let k = self.range(0, n + 2);
        let subbasis = (0..k)
            .map(|_| Subset::from_bools(&(0..n).map(|_| self.rng.random_bool(0.5)).collect::<Vec<_>>()))
            .collect();
        FinSpace::from_subbasis(n, subbasis).expect("widths agree")
    }

    /// A random space with a random preorder, biased towards instances with
    /// open cones by sometimes reusing the order's upsets or downsets.
    pub fn ordered_space(&mut self, n: usize) -> OrderedSpace {
        let density = self.rng.random_range(0.0..0.6);
        let order = self.preorder(n, density);
        let space = match self.range(0, 3) {
            0 => upper_topology(&order),
            1 => upper_topology(&order.opposite()),
            2 => FinSpace::discrete(n),
            _ => self.space(n),
        };
        OrderedSpace::new(space, order).expect("sizes agree")
    }

    /// The frame of opens of a random space on `1..=max_points` points.
    pub fn frame(&mut self, max_points: usize) -> (FinSpace, FinFrame) {
        let n = self.range(1, max_points);
        let s = self.space(n);
        let f = frame_of_opens(&s);
        (s, f)
    }

    /// A distributive lattice of upsets of a random poset.
    pub fn distributive_lattice(&mut self, max_points: usize) -> FinFrame {
        let n = self.range(0, max_points);
        let p = self.poset(n, 0.4);
        frame_of_opens(&upper_topology(&p))
    }

    /// A random ordered locale on the opens of a random space with at most
    /// `max_points` points, its order generated by a few random pairs.
    pub fn ordered_locale(&mut self, max_points: usize) -> (FinSpace, OrderedLocale) {
        let (s, f) = self.frame(max_points);
        let k = self.range(0, 3);
        let pairs: Vec<(usize, usize)> = (0..k)
            .map(|_| (self.range(0, f.size() - 1), self.range(0, f.size() - 1)))
            .collect();
        let x = OrderedLocale::generated(&f, &pairs).expect("indices in range");
        (s, x)
    }

    /// A continuous function `s -> t`, found by rejection sampling and
    /// falling back to a constant map.
    pub fn continuous_map(&mut self, s: &FinSpace, t: &FinSpace) -> FnMap {
        for _ in 0..50 {
            let table = (0..s.size()).map(|_| self.range(0, t.size() - 1)).collect();
            let g = FnMap::new(table, t.size()).expect("in range");
            if s.continuity_witness(t, &g).expect("sizes agree").is_none() {
                return g;
            }
        }
        let c = self.range(0, t.size() - 1);
        FnMap::new(vec![c; s.size()], t.size()).expect("in range")
    }

    /// The locale map `O g` of a random continuous `g` between the
    /// underlying spaces. Needs a nonempty `t`.
    pub fn locale_map(&mut self, s: &FinSpace, t: &FinSpace) -> LocaleMap {
        let g = self.continuous_map(s, t);
        let table = t
            .opens()
            .iter()
            .map(|v| s.open_index(&g.preimage(v)).expect("continuous"))
            .collect();
        LocaleMap::new(&frame_of_opens(s), &frame_of_opens(t), table).expect("preimages are frame maps")
    }
}

/// Componentwise order on a product of chains of the given lengths.
pub fn chain_product(lengths: &[usize]) -> FinFrame {
    let n: usize = lengths.iter().product();
    let coords = |mut i: usize| {
        lengths
            .iter()
            .map(|&l| {
                let c = i % l;
                i /= l;
                c
            })
            .collect::<Vec<_>>()
    };
    let rows = (0..n)
        .map(|a| {
            let ca = coords(a);
            Subset::from_bools(
                &(0..n)
                    .map(|b| ca.iter().zip(coords(b)).all(|(x, y)| *x <= y))
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    FinFrame::new(Preorder::from_up_rows(rows).expect("product order")).expect("distributive")
}

/// Named distributive lattices with at most `max_size` elements: chains,
/// Boolean algebras, products of chains, and upset lattices of every poset on
/// at most four points.
pub fn lattice_fixtures(max_size: usize) -> Vec<(String, FinFrame)> {
    let mut out = Vec::new();
    for n in 1..=max_size {
        out.push((format!("chain-{n}"), FinFrame::chain(n)));
    }
    for k in 0..=6 {
        if 1 << k <= max_size {
            out.push((format!("boolean-{k}"), FinFrame::boolean(k)));
        }
    }
    for a in 2..=max_size {
        for b in a..=max_size {
            if a * b <= max_size {
                out.push((format!("chains-{a}x{b}"), chain_product(&[a, b])));
            }
            for c in b..=max_size {
                if a * b * c <= max_size {
                    out.push((format!("chains-{a}x{b}x{c}"), chain_product(&[a, b, c])));
                }
            }
        }
    }
    for n in 0..=4 {
        for (i, p) in all_posets(n).into_iter().enumerate() {
            let f = frame_of_opens(&upper_topology(&p));
            if f.size() <= max_size {
                out.push((format!("upsets-{n}-{i}"), f));
            }
        }
    }
    out
}

/// The diamond `M3`: bottom 0, atoms 1..=3, top 4.
pub fn diamond() -> Preorder {
    Preorder::closure_of(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).expect("in range")
}

/// The pentagon `N5`: `0 < 1 < 2 < 4` and `0 < 3 < 4`.
pub fn pentagon() -> Preorder {
    Preorder::closure_of(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).expect("in range")
}

/// `0 < 1`, `0 < 2`.
pub fn vee() -> Preorder {
    Preorder::closure_of(3, [(0, 1), (0, 2)]).expect("in range")
}

/// A three point space that satisfies (∗) without having open cones.
///
/// Point `0` sits below point `1`, and every neighbourhood of `1` also
/// contains `0` and `2`. The opens are `{}, {0}, {2}, {0,2}` and everything,
/// so `{0}` is open but its future `{0,1}` is not.
pub fn lambda_without_open_cones() -> OrderedSpace {
    let opens = [vec![], vec![0], vec![2], vec![0, 2], vec![0, 1, 2]]
        .into_iter()
        .map(|m| Subset::from_indices(3, m).expect("in range"))
        .collect();
    let space = FinSpace::new(3, opens).expect("a topology");
    let order = Preorder::closure_of(3, [(0, 1)]).expect("in range");
    OrderedSpace::new(space, order).expect("same carrier")
}
