//! Finite frames, their homomorphisms, points and nuclei.
//!
//! A finite frame is the same thing as a finite distributive lattice: every
//! family is finite, so arbitrary joins reduce to the bottom element and
//! binary joins, and infinite distributivity reduces to the binary law.
//! Likewise a filter of a finite lattice is principal, and it is completely
//! prime exactly when its generator is join-prime, which in a distributive
//! lattice means join-irreducible.

use crate::error::{Error, HomClause, Result};
use crate::finord::Preorder;
use crate::fintop::FinSpace;
use crate::subset::Subset;

/// Binary meet and join tables of a finite lattice, row-major `a * n + b`.
///
/// Fails unless `p` is antisymmetric and every pair has a meet and a join.
pub fn lattice_tables(p: &Preorder) -> Result<(Vec<usize>, Vec<usize>)> {
    let n = p.size();
    if n == 0 {
        return Err(Error::EmptyLattice);
    }
    if let Some((x, y)) = p.antisymmetry_witness() {
        return Err(Error::NotAntisymmetric { x, y });
    }
    let mut meet = vec![0; n * n];
    let mut join = vec![0; n * n];
    for a in 0..n {
        for b in a..n {
            let lower = p.principal_down(a).intersection(p.principal_down(b));
            let m = lower
                .iter()
                .find(|&c| lower.is_subset(p.principal_down(c)))
                .ok_or(Error::MissingMeet { a, b })?;
            let upper = p.principal_up(a).intersection(p.principal_up(b));
            let j = upper
                .iter()
                .find(|&c| upper.is_subset(p.principal_up(c)))
                .ok_or(Error::MissingJoin { a, b })?;
            meet[a * n + b] = m;
            meet[b * n + a] = m;
            join[a * n + b] = j;
            join[b * n + a] = j;
        }
    }
    Ok((meet, join))
}

/// A finite distributive lattice, with `⊑` given by [`FinFrame::order`].
#[derive(Clone, PartialEq, Eq)]
pub struct FinFrame {
    order: Preorder,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl FinFrame {
    /// Validates partial order, lattice and distributivity.
    pub fn new(order: Preorder) -> Result<Self> {
        let (meet, join) = lattice_tables(&order)?;
        let n = order.size();
        for a in 0..n {
            for b in 0..n {
                for c in b + 1..n {
                    let lhs = meet[a * n + join[b * n + c]];
                    let rhs = join[meet[a * n + b] * n + meet[a * n + c]];
                    if lhs != rhs {
                        return Err(Error::NotDistributive { a, b, c });
                    }
                }
            }
        }
        Ok(Self::from_tables(order, meet, join))
    }

    fn from_tables(order: Preorder, meet: Vec<usize>, join: Vec<usize>) -> Self {
        let n = order.size();
        let bottom = (0..n).fold(0, |acc, x| meet[acc * n + x]);
        let top = (0..n).fold(0, |acc, x| join[acc * n + x]);
        FinFrame {
            order,
            meet,
            join,
            bottom,
            top,
        }
    }

    /// The chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Self {
        Self::new(Preorder::chain(n)).expect("chains are distributive")
    }

    /// Subsets of a `k`-element set; element `m` is the bitmask `m`.
    pub fn boolean(k: usize) -> Self {
        let n = 1usize << k;
        let up = (0..n)
            .map(|a| Subset::from_bools(&(0..n).map(|b| a & b == a).collect::<Vec<_>>()))
            .collect();
        Self::new(Preorder::from_rows_unchecked(up)).expect("boolean lattices are distributive")
    }

    pub fn size(&self) -> usize {
        self.order.size()
    }

    pub fn order(&self) -> &Preorder {
        &self.order
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order.leq(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size() + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size() + b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Join of a finite family; the empty join is the bottom.
    pub fn join_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// `↑a`, the principal filter of `a`.
    pub fn principal_filter(&self, a: usize) -> &Subset {
        self.order.principal_up(a)
    }

    /// Nonzero elements that are not the join of the elements strictly below.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&u| {
                u != self.bottom
                    && self.join_all(self.order.principal_down(u).iter().filter(|&w| w != u)) != u
            })
            .collect()
    }

    /// Heyting implication `a → b = ⋁{ c | c ∧ a ⊑ b }`.
    pub fn implies(&self, a: usize, b: usize) -> usize {
        self.join_all((0..self.size()).filter(|&c| self.leq(self.meet(c, a), b)))
    }

    /// Pseudo-complement `a → 0`.
    pub fn negation(&self, a: usize) -> usize {
        self.implies(a, self.bottom)
    }
}

impl std::fmt::Debug for FinFrame {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FinFrame")
            .field("size", &self.size())
            .field("covers", &self.order.covers())
            .finish()
    }
}

/// The frame of opens of `s`. Element `i` is `s.opens()[i]`.
pub fn frame_of_opens(s: &FinSpace) -> FinFrame {
    let opens = s.opens();
    let n = opens.len();
    let up = opens
        .iter()
        .map(|u| Subset::from_bools(&opens.iter().map(|v| u.is_subset(v)).collect::<Vec<_>>()))
        .collect();
    let order = Preorder::from_rows_unchecked(up);
    let mut meet = vec![0; n * n];
    let mut join = vec![0; n * n];
    for (a, u) in opens.iter().enumerate() {
        for (b, v) in opens.iter().enumerate() {
            meet[a * n + b] = s.open_index(&u.intersection(v)).expect("closed under ∩");
            join[a * n + b] = s.open_index(&u.union(v)).expect("closed under ∪");
        }
    }
    FinFrame::from_tables(order, meet, join)
}

/// Heyting implication in `f`.
pub fn heyting_implies(f: &FinFrame, a: usize, b: usize) -> usize {
    f.implies(a, b)
}

/// An element table `source -> target` claimed to preserve finite meets and
/// all joins.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FrameHom {
    table: Vec<usize>,
}

impl FrameHom {
    pub fn new(table: Vec<usize>) -> Self {
        FrameHom { table }
    }

    pub fn identity(n: usize) -> Self {
        FrameHom {
            table: (0..n).collect(),
        }
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, a: usize) -> usize {
        self.table[a]
    }

    /// The first failing preservation clause, if any.
    pub fn violation(&self, source: &FinFrame, target: &FinFrame) -> Result<Option<HomClause>> {
        if self.table.len() != source.size() {
            return Err(Error::SizeMismatch {
                expected: source.size(),
                found: self.table.len(),
            });
        }
        if let Some(a) = (0..self.table.len()).find(|&a| self.table[a] >= target.size()) {
            return Ok(Some(HomClause::Range { a }));
        }
        let h = |a: usize| self.table[a];
        if h(source.bottom()) != target.bottom() {
            return Ok(Some(HomClause::Bottom));
        }
        if h(source.top()) != target.top() {
            return Ok(Some(HomClause::Top));
        }
        for a in 0..source.size() {
            for b in a + 1..source.size() {
                if h(source.meet(a, b)) != target.meet(h(a), h(b)) {
                    return Ok(Some(HomClause::Meet { a, b }));
                }
                if h(source.join(a, b)) != target.join(h(a), h(b)) {
                    return Ok(Some(HomClause::Join { a, b }));
                }
            }
        }
        Ok(None)
    }

    pub fn is_frame_hom(&self, source: &FinFrame, target: &FinFrame) -> bool {
        matches!(self.violation(source, target), Ok(None))
    }

    /// `self` after `first`.
    pub fn after(&self, first: &FrameHom) -> FrameHom {
        FrameHom {
            table: first.table.iter().map(|&b| self.table[b]).collect(),
        }
    }
}

/// A completely prime filter, i.e. a point of the locale.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointFilter {
    members: Subset,
    generator: usize,
}

impl PointFilter {
    pub fn members(&self) -> &Subset {
        &self.members
    }

    /// The least member.
    pub fn generator(&self) -> usize {
        self.generator
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }
}

/// All points of `f`, one `↑u` per join-irreducible `u`, ordered by `u`.
pub fn points_of_frame(f: &FinFrame) -> Vec<PointFilter> {
    f.join_irreducibles()
        .into_iter()
        .map(|u| PointFilter {
            members: f.principal_filter(u).clone(),
            generator: u,
        })
        .collect()
}

/// Index into `points` of the filter with the given member set.
pub fn locate_point(points: &[PointFilter], members: &Subset) -> Option<usize> {
    points.iter().position(|p| p.members == *members)
}

/// An inflationary, idempotent, meet-preserving endomap of a frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nucleus {
    table: Vec<usize>,
}

impl Nucleus {
    pub fn new(f: &FinFrame, table: Vec<usize>) -> Result<Self> {
        if table.len() != f.size() {
            return Err(Error::SizeMismatch {
                expected: f.size(),
                found: table.len(),
            });
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= f.size()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                size: f.size(),
            });
        }
        let j = |a: usize| table[a];
        for a in 0..f.size() {
            if !f.leq(a, j(a)) {
                return Err(Error::NucleusLaw {
                    law: "inflationary",
                    a,
                    b: a,
                });
            }
            if j(j(a)) != j(a) {
                return Err(Error::NucleusLaw {
                    law: "idempotent",
                    a,
                    b: a,
                });
            }
            for b in 0..f.size() {
                if j(f.meet(a, b)) != f.meet(j(a), j(b)) {
                    return Err(Error::NucleusLaw {
                        law: "meet-preserving",
                        a,
                        b,
                    });
                }
            }
        }
        Ok(Nucleus { table })
    }

    pub fn identity(f: &FinFrame) -> Self {
        Nucleus {
            table: (0..f.size()).collect(),
        }
    }

    pub fn constant_top(f: &FinFrame) -> Self {
        Nucleus {
            table: vec![f.top(); f.size()],
        }
    }

    /// The open nucleus `a ↦ u → a`.
    pub fn open(f: &FinFrame, u: usize) -> Self {
        Nucleus {
            table: (0..f.size()).map(|a| f.implies(u, a)).collect(),
        }
    }

    pub fn apply(&self, a: usize) -> usize {
        self.table[a]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }
}

/// `a ↦ ¬¬a`.
pub fn double_negation_nucleus(f: &FinFrame) -> Nucleus {
    Nucleus {
        table: (0..f.size()).map(|a| f.negation(f.negation(a))).collect(),
    }
}

/// The sublocale of fixed points of a nucleus.
#[derive(Clone, Debug)]
pub struct Sublocale {
    pub frame: FinFrame,
    /// Fixed-point index to element of the ambient frame.
    pub embed: Vec<usize>,
    /// The frame surjection: ambient element to fixed-point index.
    pub quotient: Vec<usize>,
}

impl Sublocale {
    pub fn quotient_hom(&self) -> FrameHom {
        FrameHom::new(self.quotient.clone())
    }
}

/// Fixed points of `n` with the induced order; `n` itself is the surjection.
pub fn nucleus_fixpoints(f: &FinFrame, n: &Nucleus) -> Result<Sublocale> {
    let checked = Nucleus::new(f, n.table.clone())?;
    let embed: Vec<usize> = (0..f.size()).filter(|&a| checked.apply(a) == a).collect();
    let mut position = vec![usize::MAX; f.size()];
    for (i, &a) in embed.iter().enumerate() {
        position[a] = i;
    }
    let up = embed
        .iter()
        .map(|&a| Subset::from_bools(&embed.iter().map(|&b| f.leq(a, b)).collect::<Vec<_>>()))
        .collect();
    let frame = FinFrame::new(Preorder::from_rows_unchecked(up))?;
    let quotient = (0..f.size()).map(|a| position[checked.apply(a)]).collect();
    Ok(Sublocale {
        frame,
        embed,
        quotient,
    })
}
