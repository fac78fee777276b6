//! Finite preorders and cone calculus on arbitrary subsets.
//!
//! Carriers are index sets `0..n`. A [`Preorder`] stores, for each element,
//! both its principal upset and its principal downset, so the cone of a subset
//! is a union of rows.

use crate::error::{Error, Result};
use crate::subset::Subset;

/// A reflexive and transitive relation on `0..size`.
///
/// Antisymmetry is not required; see [`Preorder::is_antisymmetric`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Preorder {
    size: usize,
    up: Vec<Subset>,
    down: Vec<Subset>,
}

impl Preorder {
    /// Equality on `0..size`.
    pub fn discrete(size: usize) -> Self {
        let up: Vec<Subset> = (0..size).map(|x| Subset::singleton(size, x)).collect();
        Preorder {
            size,
            down: up.clone(),
            up,
        }
    }

    /// Every pair related.
    pub fn total(size: usize) -> Self {
        let up = vec![Subset::full(size); size];
        Preorder {
            size,
            down: up.clone(),
            up,
        }
    }

    /// The chain `0 < 1 < ... < size-1`.
    pub fn chain(size: usize) -> Self {
        let pairs = (1..size).map(|i| (i - 1, i));
        Self::closure_of(size, pairs).expect("indices in range")
    }

    /// Validates a boolean matrix where `rel[x][y]` means `x <= y`.
    pub fn from_matrix(rel: &[Vec<bool>]) -> Result<Self> {
        let size = rel.len();
        let mut up = Vec::with_capacity(size);
        for row in rel {
            if row.len() != size {
                return Err(Error::SizeMismatch {
                    expected: size,
                    found: row.len(),
                });
            }
            up.push(Subset::from_bools(row));
        }
        Self::from_up_rows(up)
    }

    /// Validates rows `up[x] = { y | x <= y }`.
    pub fn from_up_rows(up: Vec<Subset>) -> Result<Self> {
        let size = up.len();
        for row in &up {
            row.check_width(size)?;
        }
        for x in 0..size {
            if !up[x].contains(x) {
                return Err(Error::NotReflexive { x });
            }
            for y in up[x].iter() {
                if let Some(z) = up[y].difference(&up[x]).first() {
                    return Err(Error::NotTransitive { x, y, z });
                }
            }
        }
        Ok(Self::from_rows_unchecked(up))
    }

    pub(crate) fn from_rows_unchecked(up: Vec<Subset>) -> Self {
        let size = up.len();
        let mut down = vec![Subset::empty(size); size];
        for (x, row) in up.iter().enumerate() {
            for y in row.iter() {
                down[y].insert(x);
            }
        }
        Preorder { size, up, down }
    }

    /// Smallest preorder on `0..size` containing `pairs`.
    pub fn closure_of<I>(size: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut up: Vec<Subset> = (0..size).map(|x| Subset::singleton(size, x)).collect();
        for (x, y) in pairs {
            for i in [x, y] {
                if i >= size {
                    return Err(Error::IndexOutOfRange { index: i, size });
                }
            }
            up[x].insert(y);
        }
        // Warshall over row bitsets.
        for k in 0..size {
            let row_k = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        Ok(Self::from_rows_unchecked(up))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    /// `x <= y` and not `y <= x`.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) && !self.leq(y, x)
    }

    pub fn principal_up(&self, x: usize) -> &Subset {
        &self.up[x]
    }

    pub fn principal_down(&self, x: usize) -> &Subset {
        &self.down[x]
    }

    /// `{ y | exists x in a: x <= y }`.
    pub fn up_set(&self, a: &Subset) -> Result<Subset> {
        a.check_width(self.size)?;
        Ok(self.up_of(a))
    }

    /// `{ x | exists y in a: x <= y }`.
    pub fn down_set(&self, a: &Subset) -> Result<Subset> {
        a.check_width(self.size)?;
        Ok(self.down_of(a))
    }

    pub(crate) fn up_of(&self, a: &Subset) -> Subset {
        let mut out = Subset::empty(self.size);
        for x in a.iter() {
            out.union_with(&self.up[x]);
        }
        out
    }

    pub(crate) fn down_of(&self, a: &Subset) -> Subset {
        let mut out = Subset::empty(self.size);
        for y in a.iter() {
            out.union_with(&self.down[y]);
        }
        out
    }

    pub fn is_upset(&self, a: &Subset) -> bool {
        self.up_of(a) == *a
    }

    pub fn is_downset(&self, a: &Subset) -> bool {
        self.down_of(a) == *a
    }

    /// First pair of distinct equivalent elements, if any.
    pub fn antisymmetry_witness(&self) -> Option<(usize, usize)> {
        (0..self.size).find_map(|x| {
            self.up[x]
                .intersection(&self.down[x])
                .iter()
                .find(|&y| y != x)
                .map(|y| (x, y))
        })
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.antisymmetry_witness().is_none()
    }

    /// All related pairs `(x, y)` with `x <= y`, in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.size).flat_map(move |x| self.up[x].iter().map(move |y| (x, y)))
    }

    /// Related pairs with `x != y`.
    pub fn strict_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs().filter(|(x, y)| x != y)
    }

    /// Pairs `x < y` with nothing strictly between, i.e. Hasse edges.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (x, y) in self.pairs() {
            if !self.lt(x, y) {
                continue;
            }
            let between = (0..self.size).any(|z| self.lt(x, z) && self.lt(z, y));
            if !between {
                out.push((x, y));
            }
        }
        out
    }

    pub fn opposite(&self) -> Preorder {
        Preorder {
            size: self.size,
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    pub fn to_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.size)
            .map(|x| (0..self.size).map(|y| self.leq(x, y)).collect())
            .collect()
    }
}

impl std::fmt::Debug for Preorder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Preorder")
            .field("size", &self.size)
            .field("strict", &self.strict_pairs().collect::<Vec<_>>())
            .finish()
    }
}

/// Smallest preorder containing `pairs`; ingestion helper.
pub fn transitive_reflexive_closure(pairs: &[(usize, usize)], size: usize) -> Result<Preorder> {
    Preorder::closure_of(size, pairs.iter().copied())
}

/// A total function `0..domain -> 0..codomain`, stored as a table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FnMap {
    codomain: usize,
    table: Vec<usize>,
}

impl FnMap {
    pub fn new(table: Vec<usize>, codomain: usize) -> Result<Self> {
        if let Some(&bad) = table.iter().find(|&&y| y >= codomain) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                size: codomain,
            });
        }
        Ok(FnMap { codomain, table })
    }

    pub fn identity(size: usize) -> Self {
        FnMap {
            codomain: size,
            table: (0..size).collect(),
        }
    }

    pub fn domain(&self) -> usize {
        self.table.len()
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// `g^{-1}(b)`.
    pub fn preimage(&self, b: &Subset) -> Subset {
        let mut out = Subset::empty(self.domain());
        for (x, &y) in self.table.iter().enumerate() {
            if b.contains(y) {
                out.insert(x);
            }
        }
        out
    }

    pub fn image(&self, a: &Subset) -> Subset {
        let mut out = Subset::empty(self.codomain);
        for x in a.iter() {
            out.insert(self.table[x]);
        }
        out
    }

    /// `self` after `first`.
    pub fn after(&self, first: &FnMap) -> FnMap {
        assert_eq!(first.codomain, self.domain());
        FnMap {
            codomain: self.codomain,
            table: first.table.iter().map(|&y| self.table[y]).collect(),
        }
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = Subset::empty(self.codomain);
        for &y in &self.table {
            if seen.contains(y) {
                return false;
            }
            seen.insert(y);
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        self.image(&Subset::full(self.domain())).is_full()
    }

    pub fn is_identity(&self) -> bool {
        self.codomain == self.domain() && self.table.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// The inverse table of a bijection.
    pub fn inverse(&self) -> Option<FnMap> {
        if self.codomain != self.domain() || !self.is_injective() {
            return None;
        }
        let mut inv = vec![0; self.codomain];
        for (x, &y) in self.table.iter().enumerate() {
            inv[y] = x;
        }
        Some(FnMap {
            codomain: self.domain(),
            table: inv,
        })
    }
}

/// A pair `x <= y` whose images are unrelated, if any.
pub fn monotonicity_witness(g: &FnMap, p: &Preorder, q: &Preorder) -> Result<Option<(usize, usize)>> {
    if g.domain() != p.size() {
        return Err(Error::SizeMismatch {
            expected: p.size(),
            found: g.domain(),
        });
    }
    if g.codomain() != q.size() {
        return Err(Error::SizeMismatch {
            expected: q.size(),
            found: g.codomain(),
        });
    }
    Ok(p.pairs().find(|&(x, y)| !q.leq(g.apply(x), g.apply(y))))
}

/// Whether `x <= y` implies `g(x) <= g(y)`.
pub fn is_monotone_fn(g: &FnMap, p: &Preorder, q: &Preorder) -> Result<bool> {
    Ok(monotonicity_witness(g, p, q)?.is_none())
}
