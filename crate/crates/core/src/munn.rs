//! Rees matrix semigroups over a group with zero, and the numeric invariants
//! of their semigroup algebras.
//!
//! A semigroup here is determined by a finite group G and a nonzero p × q
//! sandwich matrix μ over G ∪ {0}. Elements are q × p matrices over G ∪ {0}
//! with at most one nonzero entry; the product is a·μ·b, so the sandwich is
//! woven into every multiplication. The semigroup algebra over a prime field
//! 𝕜 (with characteristic not dividing |G|) decomposes along the Wedderburn
//! components of 𝕜G, and each component k contributes a triple
//! (d_k, m_k, n_k): the field degree plus the row/column corank of the
//! sandwich over that component. Components where the sandwich has full rank
//! on both sides drop out; the surviving multiset of triples — the
//! [`TripleSet`] — is what the classification theorems consume.
//!
//! Mutually annihilating unions of such semigroups (all cross products zero)
//! aggregate per-part data into a [`UnionData`].

use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::group::FiniteGroup;
use crate::group_algebra::{AlgebraMatrix, ComponentNumbers, GroupAlgebra, WedderburnData};
use crate::irrep::ComponentRealization;
use crate::matrix::Matrix;

/// A Rees matrix semigroup: group G and a nonzero sandwich over G ∪ {0}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReesSemigroup {
    group: FiniteGroup,
    /// Sandwich row count p.
    rows: usize,
    /// Sandwich column count q.
    cols: usize,
    /// Row-major p × q grid; `None` is the zero of G⁰.
    entries: Vec<Option<usize>>,
}

/// An element: zero, or a single group entry at (row, col) of a q × p matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReesElement {
    Zero,
    /// row < q, col < p.
    Entry { row: usize, col: usize, g: usize },
}

impl ReesSemigroup {
    pub fn new(group: &FiniteGroup, sandwich: &[Vec<Option<usize>>]) -> Result<Self> {
        let rows = sandwich.len();
        let cols = sandwich.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidInput("sandwich must have positive shape".into()));
        }
        if sandwich.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch("ragged sandwich rows".into()));
        }
        let entries: Vec<Option<usize>> = sandwich.iter().flatten().copied().collect();
        if entries.iter().all(Option::is_none) {
            return Err(Error::InvalidInput("sandwich must be nonzero".into()));
        }
        if let Some(g) = entries.iter().flatten().find(|&&g| g >= group.order()) {
            return Err(Error::InvalidInput(format!(
                "sandwich entry g{g} outside group of order {}",
                group.order()
            )));
        }
        Ok(ReesSemigroup {
            group: group.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// Sandwich rows (p).
    pub fn sandwich_rows(&self) -> usize {
        self.rows
    }

    /// Sandwich columns (q).
    pub fn sandwich_cols(&self) -> usize {
        self.cols
    }

    pub fn sandwich_entry(&self, i: usize, j: usize) -> Option<usize> {
        self.entries[i * self.cols + j]
    }

    /// All elements: zero first, then entries in (row, col, g) lexicographic
    /// order.
    pub fn elements(&self) -> Vec<ReesElement> {
        let mut out = vec![ReesElement::Zero];
        for row in 0..self.cols {
            for col in 0..self.rows {
                for g in 0..self.group.order() {
                    out.push(ReesElement::Entry { row, col, g });
                }
            }
        }
        out
    }

    /// Semigroup product a·μ·b.
    pub fn mul(&self, a: ReesElement, b: ReesElement) -> ReesElement {
        let (ReesElement::Entry { row: i, col: j, g }, ReesElement::Entry { row: k, col: l, g: h }) =
            (a, b)
        else {
            return ReesElement::Zero;
        };
        match self.sandwich_entry(j, k) {
            None => ReesElement::Zero,
            Some(s) => ReesElement::Entry {
                row: i,
                col: l,
                g: self.group.mul(self.group.mul(g, s), h),
            },
        }
    }

    /// 0-simplicity: every sandwich row and every sandwich column carries a
    /// nonzero entry.
    pub fn is_zero_simple(&self) -> bool {
        let row_ok =
            (0..self.rows).all(|i| (0..self.cols).any(|j| self.sandwich_entry(i, j).is_some()));
        let col_ok =
            (0..self.cols).all(|j| (0..self.rows).any(|i| self.sandwich_entry(i, j).is_some()));
        row_ok && col_ok
    }

    /// The sandwich as a matrix over the group algebra 𝕜G.
    pub fn algebra_matrix(&self, field: &FiniteField) -> Result<AlgebraMatrix> {
        let algebra = GroupAlgebra::new(&self.group, field)?;
        let grid: Vec<Vec<Option<usize>>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.sandwich_entry(i, j)).collect())
            .collect();
        AlgebraMatrix::from_group_entries(&algebra, &grid)
    }

    /// Per-component invariants (d, c, u, r, m, n), in canonical component
    /// order, including components that drop out of the triple set.
    pub fn component_numbers(&self, data: &WedderburnData) -> Result<Vec<ComponentNumbers>> {
        if data.algebra().group() != &self.group {
            return Err(Error::InvalidInput("decomposition is for a different group".into()));
        }
        let mu = self.algebra_matrix(data.algebra().field())?;
        data.component_numbers(&mu)
    }

    /// The triple multiset over a given decomposition of 𝕜G.
    pub fn triples_with(&self, data: &WedderburnData) -> Result<TripleSet> {
        let numbers = self.component_numbers(data)?;
        let set = TripleSet::from_component_numbers(&numbers);
        // Every surviving difference m − n must equal (p − q)·c.
        let pq = self.rows as i64 - self.cols as i64;
        for (k, nums) in numbers.iter().enumerate() {
            if nums.m as i64 - nums.n as i64 != pq * nums.c as i64 {
                return Err(Error::InternalInvariantViolation(format!(
                    "component {k}: m − n = {} but (p − q)·c = {}",
                    nums.m as i64 - nums.n as i64,
                    pq * nums.c as i64
                )));
            }
        }
        Ok(set)
    }

    /// Convenience: decompose 𝕜G and extract triples in one step.
    pub fn triples(&self, field: &FiniteField, seed: u64) -> Result<TripleSet> {
        let data = WedderburnData::decompose(&self.group, field, seed)?;
        self.triples_with(&data)
    }

    /// Whether the semigroup algebra has an identity element: exactly when
    /// every component has full sandwich rank on both sides (empty triples).
    pub fn algebra_has_unit(&self, field: &FiniteField, seed: u64) -> Result<bool> {
        Ok(self.triples(field, seed)?.is_empty())
    }

    /// Rank normal form of the sandwich over component `comp`: invertible
    /// transforms over F_k exhibiting the component rank.
    pub fn normal_form(
        &self,
        data: &WedderburnData,
        comp: usize,
        seed: u64,
    ) -> Result<NormalForm> {
        if data.algebra().group() != &self.group {
            return Err(Error::InvalidInput("decomposition is for a different group".into()));
        }
        let realization = ComponentRealization::build(data, comp, seed)?;
        let mu = self.algebra_matrix(data.algebra().field())?;
        let mu_k = realization.sandwich_matrix(&mu)?;
        let nf = mu_k.rank_normal_form();
        // Cross-check against the representation-free rank extraction.
        let fast = data.component_rank(comp, &mu)?;
        if fast != nf.rank {
            return Err(Error::InternalInvariantViolation(format!(
                "component {comp}: normal-form rank {} vs isotypic-block rank {fast}",
                nf.rank
            )));
        }
        Ok(NormalForm {
            component: comp,
            rank: nf.rank,
            mu_k,
            row_transform: nf.left,
            col_transform: nf.right,
        })
    }
}

/// Rank normal form of a sandwich over one component field F_k:
/// `row_transform · mu_k · col_transform = [[I_rank, 0], [0, 0]]`.
#[derive(Clone, Debug)]
pub struct NormalForm {
    pub component: usize,
    pub rank: usize,
    /// The sandwich realized over F_k, shape (p·c) × (q·c).
    pub mu_k: Matrix,
    pub row_transform: Matrix,
    pub col_transform: Matrix,
}

impl NormalForm {
    /// The block-identity matrix the transforms produce.
    pub fn normal_matrix(&self) -> Matrix {
        self.row_transform.mul(&self.mu_k).mul(&self.col_transform)
    }

    /// A regularizing partner θ with μ_k · θ · μ_k = μ_k, recovered from the
    /// transforms as col · [[I_r, 0], [0, 0]]ᵀ · row.
    pub fn theta(&self) -> Matrix {
        let field = self.mu_k.field();
        let rows = self.mu_k.rows();
        let cols = self.mu_k.cols();
        let mut d_t = Matrix::zeros(field, cols, rows);
        let one = field.one();
        for i in 0..self.rank {
            d_t.set(i, i, &one);
        }
        self.col_transform.mul(&d_t).mul(&self.row_transform)
    }
}

/// One invariant triple (d, m, n) with d ≥ 1 and (m, n) ≠ (0, 0).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    pub d: usize,
    pub m: usize,
    pub n: usize,
}

impl Triple {
    pub fn new(d: usize, m: usize, n: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidInput("triple needs d ≥ 1".into()));
        }
        if m == 0 && n == 0 {
            return Err(Error::InvalidInput(
                "triple (d, 0, 0) is excluded by construction".into(),
            ));
        }
        Ok(Triple { d, m, n })
    }

    /// One-sided means shape (d, 1, 0) or (d, 0, 1).
    pub fn is_one_sided(&self) -> bool {
        (self.m, self.n) == (1, 0) || (self.m, self.n) == (0, 1)
    }
}

/// A multiset of triples, canonically sorted; optionally remembering which
/// decomposition component each came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleSet {
    entries: Vec<Triple>,
    /// Component index per entry, aligned with `entries`; `None` for raw or
    /// merged sets.
    origins: Option<Vec<usize>>,
}

impl TripleSet {
    /// From raw (d, m, n) values (validated).
    pub fn from_raw(raw: &[(usize, usize, usize)]) -> Result<Self> {
        let mut entries = raw
            .iter()
            .map(|&(d, m, n)| Triple::new(d, m, n))
            .collect::<Result<Vec<_>>>()?;
        entries.sort_unstable();
        Ok(TripleSet {
            entries,
            origins: None,
        })
    }

    pub fn empty() -> Self {
        TripleSet {
            entries: vec![],
            origins: None,
        }
    }

    /// From per-component invariants: components with (m, n) = (0, 0) drop
    /// out, the rest are sorted with their component of origin.
    pub fn from_component_numbers(numbers: &[ComponentNumbers]) -> Self {
        let mut tagged: Vec<(Triple, usize)> = numbers
            .iter()
            .enumerate()
            .filter(|(_, nums)| nums.m != 0 || nums.n != 0)
            .map(|(k, nums)| {
                (
                    Triple {
                        d: nums.d,
                        m: nums.m,
                        n: nums.n,
                    },
                    k,
                )
            })
            .collect();
        tagged.sort_unstable();
        TripleSet {
            entries: tagged.iter().map(|(t, _)| *t).collect(),
            origins: Some(tagged.iter().map(|(_, k)| *k).collect()),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Triple> {
        self.entries.iter()
    }

    pub fn entries(&self) -> &[Triple] {
        &self.entries
    }

    /// Component indices aligned with `entries`, when known.
    pub fn origins(&self) -> Option<&[usize]> {
        self.origins.as_deref()
    }

    /// Multiset equality (ignores origins).
    pub fn same_triples(&self, other: &Self) -> bool {
        self.entries == other.entries
    }

    /// The one-sided part: triples of shape (d, 1, 0) or (d, 0, 1).
    pub fn one_sided(&self) -> Vec<Triple> {
        self.entries.iter().filter(|t| t.is_one_sided()).copied().collect()
    }

    /// The complement of the one-sided part.
    pub fn two_sided(&self) -> Vec<Triple> {
        self.entries.iter().filter(|t| !t.is_one_sided()).copied().collect()
    }

    /// Σ d over triples (d, 1, 0).
    pub fn s_minus(&self) -> usize {
        self.entries
            .iter()
            .filter(|t| (t.m, t.n) == (1, 0))
            .map(|t| t.d)
            .sum()
    }

    /// Σ d over triples (d, 0, 1).
    pub fn s_plus(&self) -> usize {
        self.entries
            .iter()
            .filter(|t| (t.m, t.n) == (0, 1))
            .map(|t| t.d)
            .sum()
    }

    /// Multiset union (origins are dropped).
    pub fn union(&self, other: &Self) -> Self {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        entries.sort_unstable();
        TripleSet {
            entries,
            origins: None,
        }
    }
}

/// A mutually annihilating union of Rees matrix semigroups: all products
/// across parts are zero, so invariants aggregate part by part.
#[derive(Clone, Debug)]
pub struct ReesUnion {
    parts: Vec<ReesSemigroup>,
}

impl ReesUnion {
    pub fn new(parts: Vec<ReesSemigroup>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyUnion);
        }
        Ok(ReesUnion { parts })
    }

    pub fn parts(&self) -> &[ReesSemigroup] {
        &self.parts
    }

    /// Aggregate the per-part invariants over a common prime field.
    pub fn union_data(&self, field: &FiniteField, seed: u64) -> Result<UnionData> {
        let parts = self
            .parts
            .iter()
            .map(|s| {
                Ok(UnionPart {
                    group_order: s.group().order(),
                    sandwich_rows: s.sandwich_rows(),
                    sandwich_cols: s.sandwich_cols(),
                    triples: s.triples(field, seed)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(UnionData { parts })
    }
}

/// Invariants of one union part.
#[derive(Clone, Debug)]
pub struct UnionPart {
    pub group_order: usize,
    pub sandwich_rows: usize,
    pub sandwich_cols: usize,
    pub triples: TripleSet,
}

impl UnionPart {
    /// Sign of m − n across the part: positive iff p > q (every surviving
    /// triple of the part has m − n = (p − q)·c, all the same sign).
    pub fn side(&self) -> std::cmp::Ordering {
        self.sandwich_rows.cmp(&self.sandwich_cols)
    }
}

/// Aggregated union invariants for the union classification.
#[derive(Clone, Debug)]
pub struct UnionData {
    pub parts: Vec<UnionPart>,
}

impl UnionData {
    /// From raw per-part data (for synthetic inputs): (group order, p, q,
    /// triples).
    pub fn from_parts(parts: Vec<UnionPart>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyUnion);
        }
        for (i, part) in parts.iter().enumerate() {
            let pq = part.sandwich_rows as i64 - part.sandwich_cols as i64;
            for t in part.triples.iter() {
                let diff = t.m as i64 - t.n as i64;
                let consistent = match pq.cmp(&0) {
                    std::cmp::Ordering::Equal => diff == 0,
                    std::cmp::Ordering::Greater => diff > 0 && diff % pq == 0,
                    std::cmp::Ordering::Less => diff < 0 && diff % pq == 0,
                };
                if !consistent {
                    return Err(Error::InvalidInput(format!(
                        "part {i}: triple ({}, {}, {}) inconsistent with sandwich shape {}×{}",
                        t.d, t.m, t.n, part.sandwich_rows, part.sandwich_cols
                    )));
                }
            }
        }
        Ok(UnionData { parts })
    }

    /// Σ of group orders over parts with m > n (p > q).
    pub fn t_greater(&self) -> usize {
        self.parts
            .iter()
            .filter(|p| p.side() == std::cmp::Ordering::Greater)
            .map(|p| p.group_order)
            .sum()
    }

    /// Σ of group orders over parts with m < n (p < q).
    pub fn t_less(&self) -> usize {
        self.parts
            .iter()
            .filter(|p| p.side() == std::cmp::Ordering::Less)
            .map(|p| p.group_order)
            .sum()
    }

    /// Union of triples over parts with p ≠ q.
    pub fn unbalanced_triples(&self) -> TripleSet {
        self.parts
            .iter()
            .filter(|p| p.side() != std::cmp::Ordering::Equal)
            .fold(TripleSet::empty(), |acc, p| acc.union(&p.triples))
    }

    /// Union of triples over parts with p = q.
    pub fn balanced_triples(&self) -> TripleSet {
        self.parts
            .iter()
            .filter(|p| p.side() == std::cmp::Ordering::Equal)
            .fold(TripleSet::empty(), |acc, p| acc.union(&p.triples))
    }

    /// All triples across all parts.
    pub fn all_triples(&self) -> TripleSet {
        self.parts
            .iter()
            .fold(TripleSet::empty(), |acc, p| acc.union(&p.triples))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c1() -> FiniteGroup {
        FiniteGroup::cyclic(1).unwrap()
    }

    fn c2() -> FiniteGroup {
        FiniteGroup::cyclic(2).unwrap()
    }

    fn f5() -> FiniteField {
        FiniteField::prime(5).unwrap()
    }

    #[test]
    fn rejects_zero_sandwich() {
        let err = ReesSemigroup::new(&c1(), &[vec![None, None]]).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }

    #[test]
    fn rees_multiplication_examples() {
        // Trivial group, μ = [[e, 0], [0, 0]] (p = q = 2).
        let s = ReesSemigroup::new(&c1(), &[vec![Some(0), None], vec![None, None]]).unwrap();
        let a = ReesElement::Entry { row: 0, col: 0, g: 0 };
        // a·a goes through μ[0][0] = e.
        assert_eq!(s.mul(a, a), a);
        // Anything through μ[1][·] or μ[·][1] dies.
        let b = ReesElement::Entry { row: 0, col: 1, g: 0 };
        assert_eq!(s.mul(b, b), ReesElement::Zero);
        assert_eq!(s.mul(a, b), b);
        assert_eq!(s.mul(b, a), ReesElement::Zero);
        assert_eq!(s.mul(a, ReesElement::Zero), ReesElement::Zero);
    }

    #[test]
    fn rees_multiplication_is_associative_small() {
        // Exhaustive associativity for a couple of small semigroups.
        let cases = vec![
            ReesSemigroup::new(&c2(), &[vec![Some(0), Some(1)], vec![None, Some(0)]]).unwrap(),
            ReesSemigroup::new(&c1(), &[vec![Some(0), None], vec![None, None]]).unwrap(),
        ];
        for s in cases {
            let elems = s.elements();
            for &a in &elems {
                for &b in &elems {
                    for &c in &elems {
                        assert_eq!(s.mul(s.mul(a, b), c), s.mul(a, s.mul(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn zero_simplicity() {
        let s = ReesSemigroup::new(&c1(), &[vec![Some(0), None], vec![None, None]]).unwrap();
        assert!(!s.is_zero_simple());
        let s = ReesSemigroup::new(&c1(), &[vec![Some(0), None], vec![None, Some(0)]]).unwrap();
        assert!(s.is_zero_simple());
        let s = ReesSemigroup::new(&c2(), &[vec![Some(0), Some(1)]]).unwrap();
        assert!(s.is_zero_simple());
        let s = ReesSemigroup::new(&c2(), &[vec![None, Some(1)]]).unwrap();
        assert!(!s.is_zero_simple());
    }

    #[test]
    fn triples_identity_corner_sandwich() {
        // C_1, μ = [[e, 0], [0, 0]]: single component, r = 1, triple (1,1,1).
        let s = ReesSemigroup::new(&c1(), &[vec![Some(0), None], vec![None, None]]).unwrap();
        let t = s.triples(&f5(), 0).unwrap();
        assert_eq!(t.entries(), &[Triple { d: 1, m: 1, n: 1 }]);
        assert_eq!(t.origins(), Some(&[0usize][..]));
    }

    #[test]
    fn triples_c2_examples() {
        let s = ReesSemigroup::new(&c2(), &[vec![Some(0), Some(0)], vec![Some(0), Some(0)]])
            .unwrap();
        let t = s.triples(&f5(), 0).unwrap();
        assert_eq!(
            t.entries(),
            &[Triple { d: 1, m: 1, n: 1 }, Triple { d: 1, m: 1, n: 1 }]
        );
        // [[e, e], [e, g]] has an invertible sign component: it drops out.
        let s = ReesSemigroup::new(&c2(), &[vec![Some(0), Some(0)], vec![Some(0), Some(1)]])
            .unwrap();
        let t = s.triples(&f5(), 0).unwrap();
        assert_eq!(t.entries(), &[Triple { d: 1, m: 1, n: 1 }]);
    }

    #[test]
    fn invertible_sandwich_gives_unit() {
        let s = ReesSemigroup::new(&c1(), &[vec![Some(0)]]).unwrap();
        assert!(s.algebra_has_unit(&f5(), 0).unwrap());
        assert!(s.triples(&f5(), 0).unwrap().is_empty());
        let s = ReesSemigroup::new(&c1(), &[vec![Some(0), None], vec![None, None]]).unwrap();
        assert!(!s.algebra_has_unit(&f5(), 0).unwrap());
    }

    #[test]
    fn triple_validation() {
        assert!(Triple::new(0, 1, 1).is_err());
        assert!(Triple::new(1, 0, 0).is_err());
        assert!(Triple::new(2, 1, 0).is_ok());
        assert!(TripleSet::from_raw(&[(1, 1, 1), (1, 0, 0)]).is_err());
    }

    #[test]
    fn triple_set_is_canonically_sorted_multiset() {
        let a = TripleSet::from_raw(&[(2, 1, 1), (1, 2, 0), (1, 1, 1)]).unwrap();
        let b = TripleSet::from_raw(&[(1, 1, 1), (2, 1, 1), (1, 2, 0)]).unwrap();
        assert!(a.same_triples(&b));
        assert_eq!(a.entries(), b.entries());
    }

    #[test]
    fn side_sums() {
        let t = TripleSet::from_raw(&[(2, 1, 0), (3, 1, 0), (1, 0, 1), (1, 1, 1)]).unwrap();
        assert_eq!(t.s_minus(), 5);
        assert_eq!(t.s_plus(), 1);
        assert_eq!(t.one_sided().len(), 3);
        assert_eq!(t.two_sided(), vec![Triple { d: 1, m: 1, n: 1 }]);
    }

    #[test]
    fn normal_form_trivial_group() {
        // C_1, μ = [[e, e], [e, e]]: component matrix is the all-ones 2×2,
        // rank 1, and μθμ = μ for the recovered θ.
        let s = ReesSemigroup::new(&c1(), &[vec![Some(0), Some(0)], vec![Some(0), Some(0)]])
            .unwrap();
        let data = WedderburnData::decompose(&c1(), &f5(), 0).unwrap();
        let nf = s.normal_form(&data, 0, 0).unwrap();
        assert_eq!(nf.rank, 1);
        let normal = nf.normal_matrix();
        assert_eq!(normal.get(0, 0), f5().one());
        assert!(normal.get(1, 1).is_zero());
        let theta = nf.theta();
        assert_eq!(nf.mu_k.mul(&theta).mul(&nf.mu_k), nf.mu_k);
        assert!(nf.row_transform.is_invertible());
        assert!(nf.col_transform.is_invertible());
    }

    #[test]
    fn normal_form_nonsplit_component() {
        // C_3 over F_5, μ = [[g]]: the degree-2 component has an invertible
        // 1×1 sandwich there; rank 1.
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let s = ReesSemigroup::new(&c3, &[vec![Some(1)]]).unwrap();
        let data = WedderburnData::decompose(&c3, &f5(), 0).unwrap();
        for k in 0..2 {
            let nf = s.normal_form(&data, k, 0).unwrap();
            assert_eq!(nf.rank, 1, "component {k}");
            let theta = nf.theta();
            assert_eq!(nf.mu_k.mul(&theta).mul(&nf.mu_k), nf.mu_k);
        }
    }

    #[test]
    fn union_aggregation() {
        let s1 = ReesSemigroup::new(&c1(), &[vec![Some(0), None], vec![None, None]]).unwrap();
        let s2 = ReesSemigroup::new(&c1(), &[vec![Some(0)], vec![None]]).unwrap(); // p=2, q=1
        let union = ReesUnion::new(vec![s1, s2]).unwrap();
        let data = union.union_data(&f5(), 0).unwrap();
        assert_eq!(data.parts.len(), 2);
        assert_eq!(data.t_greater(), 1); // second part has p > q, group order 1
        assert_eq!(data.t_less(), 0);
        assert_eq!(data.balanced_triples().entries(), &[Triple { d: 1, m: 1, n: 1 }]);
        assert_eq!(data.unbalanced_triples().entries(), &[Triple { d: 1, m: 1, n: 0 }]);
        assert!(ReesUnion::new(vec![]).is_err());
    }

    #[test]
    fn elementary_transformations_preserve_triples() {
        // Permuting sandwich rows/columns and translating a row by a group
        // element are isomorphisms of the situation: triples must agree.
        let g = FiniteGroup::cyclic(4).unwrap();
        let f = FiniteField::prime(5).unwrap();
        let base = vec![vec![Some(0), Some(1), None], vec![Some(2), None, Some(3)]];
        let s = ReesSemigroup::new(&g, &base).unwrap();
        let t0 = s.triples(&f, 0).unwrap();
        // Swap the two rows.
        let swapped = vec![base[1].clone(), base[0].clone()];
        let t1 = ReesSemigroup::new(&g, &swapped).unwrap().triples(&f, 0).unwrap();
        assert!(t0.same_triples(&t1));
        // Left-translate row 0 by g1.
        let translated = vec![
            base[0]
                .iter()
                .map(|cell| cell.map(|x| g.mul(1, x)))
                .collect::<Vec<_>>(),
            base[1].clone(),
        ];
        let t2 = ReesSemigroup::new(&g, &translated).unwrap().triples(&f, 0).unwrap();
        assert!(t0.same_triples(&t2));
        // Permute two columns.
        let col_swapped: Vec<Vec<Option<usize>>> = base
            .iter()
            .map(|row| vec![row[1], row[0], row[2]])
            .collect();
        let t3 = ReesSemigroup::new(&g, &col_swapped).unwrap().triples(&f, 0).unwrap();
        assert!(t0.same_triples(&t3));
    }

    #[test]
    fn cross_characteristic_rank_stability() {
        // For C_2 with sandwich entries in {0, e, g} and shapes ≤ 3, all
        // component minors over the integers are too small to be divided by
        // 5 or 7, so the triples agree across those characteristics.
        let g = c2();
        let f5 = f5();
        let f7 = FiniteField::prime(7).unwrap();
        let grids = vec![
            vec![vec![Some(0), Some(1)], vec![Some(1), Some(0)]],
            vec![vec![Some(0), Some(1), None], vec![None, Some(0), Some(1)]],
            vec![vec![Some(1)], vec![Some(0)], vec![None]],
        ];
        for grid in grids {
            let s = ReesSemigroup::new(&g, &grid).unwrap();
            let a = s.triples(&f5, 0).unwrap();
            let b = s.triples(&f7, 0).unwrap();
            assert!(a.same_triples(&b), "{grid:?}");
        }
    }
}
