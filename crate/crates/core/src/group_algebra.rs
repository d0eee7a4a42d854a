//! Group algebras over prime fields and their Wedderburn decomposition.
//!
//! For a finite group G and prime p not dividing |G|, the algebra F_p[G] is
//! semisimple: a product of matrix rings Mat(c_k, F_k) over finite extension
//! fields F_k of degree d_k. This module computes that decomposition *without
//! ever constructing irreducible representations*: it splits the identity
//! into primitive central idempotents by factoring minimal polynomials of
//! central elements (conjugacy class sums first, then seeded random central
//! combinations), and reads the numeric invariants off dimension counts:
//!
//! * d_k = dim of the component's center slice e_k·Z(F_p[G]),
//! * c_k from dim e_k·F_p[G] = c_k² · d_k,
//! * u_k = c_k · d_k, the prime-field dimension of a column space.
//!
//! The per-component rank of a sandwich matrix over the algebra is likewise
//! extracted representation-free, from the prime-field rank of the isotypic
//! block matrix: that rank is always r_k · u_k for an integer r_k, and r_k is
//! exactly the rank the sandwich acquires over Mat(c_k, F_k). Everything is
//! deterministic for a fixed seed, and the component order is canonicalized
//! so downstream reports are stable.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::group::FiniteGroup;
use crate::matrix::Matrix;
use crate::poly::Polynomial;

/// The pair (group, prime field) an [`AlgebraElement`] lives over.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAlgebra {
    group: FiniteGroup,
    field: FiniteField,
}

impl GroupAlgebra {
    /// Group algebra over a *prime* field.
    pub fn new(group: &FiniteGroup, field: &FiniteField) -> Result<Self> {
        if !field.is_prime_field() {
            return Err(Error::InvalidInput(
                "group algebras are taken over prime fields".into(),
            ));
        }
        Ok(GroupAlgebra {
            group: group.clone(),
            field: field.clone(),
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.group.order()
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement {
            algebra: self.clone(),
            coeffs: vec![0; self.dim()],
        }
    }

    pub fn one(&self) -> AlgebraElement {
        self.basis_element(self.group.identity())
    }

    /// The group element g as an algebra element.
    pub fn basis_element(&self, g: usize) -> AlgebraElement {
        assert!(g < self.dim(), "group element out of range");
        let mut coeffs = vec![0; self.dim()];
        coeffs[g] = 1;
        AlgebraElement {
            algebra: self.clone(),
            coeffs,
        }
    }

    pub fn from_coeffs(&self, coeffs: Vec<u64>) -> AlgebraElement {
        assert_eq!(coeffs.len(), self.dim(), "coefficient length mismatch");
        let p = self.field.characteristic();
        AlgebraElement {
            algebra: self.clone(),
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        }
    }

    /// Sum over a conjugacy class; these span the center.
    pub fn class_sum(&self, class: &[usize]) -> AlgebraElement {
        let mut coeffs = vec![0; self.dim()];
        for &g in class {
            coeffs[g] = 1;
        }
        AlgebraElement {
            algebra: self.clone(),
            coeffs,
        }
    }
}

/// An element of a group algebra: coefficients indexed by group element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement {
    algebra: GroupAlgebra,
    coeffs: Vec<u64>,
}

impl AlgebraElement {
    pub fn algebra(&self) -> &GroupAlgebra {
        &self.algebra
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let p = self.algebra.field.characteristic();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        AlgebraElement {
            algebra: self.algebra.clone(),
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let p = self.algebra.field.characteristic();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + p - b) % p)
            .collect();
        AlgebraElement {
            algebra: self.algebra.clone(),
            coeffs,
        }
    }

    pub fn scale(&self, c: u64) -> Self {
        let p = self.algebra.field.characteristic();
        let c = c % p;
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| ((a as u128 * c as u128) % p as u128) as u64)
            .collect();
        AlgebraElement {
            algebra: self.algebra.clone(),
            coeffs,
        }
    }

    /// Convolution product through the group table.
    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let p = self.algebra.field.characteristic() as u128;
        let group = &self.algebra.group;
        let mut coeffs = vec![0u128; self.coeffs.len()];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let k = group.mul(i, j);
                coeffs[k] = (coeffs[k] + a as u128 * b as u128) % p;
            }
        }
        AlgebraElement {
            algebra: self.algebra.clone(),
            coeffs: coeffs.into_iter().map(|c| c as u64).collect(),
        }
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut acc = self.algebra.one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    pub fn is_central(&self) -> bool {
        (0..self.algebra.dim()).all(|g| {
            let b = self.algebra.basis_element(g);
            self.mul(&b) == b.mul(self)
        })
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self) == *self
    }

    /// Matrix of left multiplication by this element on the group basis.
    pub fn regular_matrix(&self) -> Matrix {
        let n = self.algebra.dim();
        let field = &self.algebra.field;
        let group = &self.algebra.group;
        let mut m = Matrix::zeros(field, n, n);
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let a_el = field.from_u64(a);
            for j in 0..n {
                let k = group.mul(i, j);
                let v = m.get(k, j).add(&a_el);
                m.set(k, j, &v);
            }
        }
        m
    }

    /// Coefficient column vector (for linear algebra over the prime field).
    pub fn to_column(&self) -> Matrix {
        let field = &self.algebra.field;
        Matrix::from_fn(field, self.coeffs.len(), 1, |i, _| field.from_u64(self.coeffs[i]))
    }

    fn check(&self, other: &Self) {
        assert!(self.algebra == other.algebra, "mixed-algebra arithmetic");
    }
}

/// One simple factor Mat(c, F) of a semisimple group algebra.
#[derive(Clone, Debug)]
pub struct WedderburnComponent {
    /// The primitive central idempotent cutting out this factor.
    pub idempotent: AlgebraElement,
    /// Degree of the component field F over the prime field.
    pub d: usize,
    /// Matrix size c of the factor Mat(c, F).
    pub c: usize,
    /// c·d — the prime-field dimension of one matrix column.
    pub u: usize,
}

/// Full Wedderburn decomposition of F_p[G].
#[derive(Clone, Debug)]
pub struct WedderburnData {
    algebra: GroupAlgebra,
    components: Vec<WedderburnComponent>,
}

/// Numeric invariants of one component relative to a sandwich matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComponentNumbers {
    pub d: usize,
    pub c: usize,
    pub u: usize,
    /// Rank of the sandwich over the component, measured over F_k.
    pub r: usize,
    /// m = rows·c − r.
    pub m: usize,
    /// n = cols·c − r.
    pub n: usize,
}

impl WedderburnData {
    /// Decompose F_p[G] into its simple components.
    ///
    /// Errors with [`Error::ModularCase`] when p divides |G|. Deterministic
    /// for a fixed seed; components are sorted by (d, c, idempotent
    /// coefficients), so equal inputs give identical output.
    pub fn decompose(group: &FiniteGroup, field: &FiniteField, seed: u64) -> Result<Self> {
        let algebra = GroupAlgebra::new(group, field)?;
        let p = field.characteristic();
        if group.order() as u64 % p == 0 {
            return Err(Error::ModularCase {
                characteristic: p,
                order: group.order(),
            });
        }
        let classes = group.conjugacy_classes();
        let class_sums: Vec<AlgebraElement> =
            classes.iter().map(|cl| algebra.class_sum(cl)).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);

        let mut queue = vec![algebra.one()];
        let mut primitive: Vec<(AlgebraElement, usize)> = Vec::new(); // (e_k, d_k)
        while let Some(f) = queue.pop() {
            let slice = CenterSlice::new(&algebra, &f, &class_sums)?;
            if slice.dim == 1 {
                primitive.push((f, 1));
                continue;
            }
            match slice.split_or_certify(&class_sums, &mut rng)? {
                SliceOutcome::Field { degree } => primitive.push((f, degree)),
                SliceOutcome::Split(parts) => queue.extend(parts),
            }
        }

        // Numeric invariants per component.
        let mut components = Vec::with_capacity(primitive.len());
        for (e, d) in primitive {
            let dim_block = e.regular_matrix().rank();
            if dim_block % d != 0 {
                return Err(Error::InternalInvariantViolation(format!(
                    "component dimension {dim_block} not divisible by field degree {d}"
                )));
            }
            let c2 = dim_block / d;
            let c = (c2 as f64).sqrt().round() as usize;
            if c * c != c2 {
                return Err(Error::InternalInvariantViolation(format!(
                    "component dimension {dim_block} over degree {d} is not a square multiple"
                )));
            }
            components.push(WedderburnComponent {
                idempotent: e,
                d,
                c,
                u: c * d,
            });
        }
        components.sort_by(|a, b| {
            (a.d, a.c, a.idempotent.coeffs()).cmp(&(b.d, b.c, b.idempotent.coeffs()))
        });

        let data = WedderburnData {
            algebra,
            components,
        };
        data.validate(classes.len())?;
        Ok(data)
    }

    /// Structural sanity: orthogonal idempotents summing to 1, Σ c²d = |G|,
    /// Σ d = number of conjugacy classes.
    fn validate(&self, class_count: usize) -> Result<()> {
        let n = self.algebra.dim();
        let mut sum = self.algebra.zero();
        for (i, a) in self.components.iter().enumerate() {
            if !a.idempotent.is_idempotent() {
                return Err(Error::InternalInvariantViolation(format!(
                    "component {i} idempotent fails e² = e"
                )));
            }
            sum = sum.add(&a.idempotent);
            for (j, b) in self.components.iter().enumerate() {
                if i != j && !a.idempotent.mul(&b.idempotent).is_zero() {
                    return Err(Error::InternalInvariantViolation(format!(
                        "idempotents {i} and {j} are not orthogonal"
                    )));
                }
            }
        }
        if sum != self.algebra.one() {
            return Err(Error::InternalInvariantViolation(
                "idempotents do not sum to 1".into(),
            ));
        }
        let total: usize = self.components.iter().map(|k| k.c * k.c * k.d).sum();
        if total != n {
            return Err(Error::InternalInvariantViolation(format!(
                "Σ c²d = {total} but |G| = {n}"
            )));
        }
        let center: usize = self.components.iter().map(|k| k.d).sum();
        if center != class_count {
            return Err(Error::InternalInvariantViolation(format!(
                "Σ d = {center} but the group has {class_count} conjugacy classes"
            )));
        }
        Ok(())
    }

    pub fn algebra(&self) -> &GroupAlgebra {
        &self.algebra
    }

    pub fn components(&self) -> &[WedderburnComponent] {
        &self.components
    }

    /// Prime-field rank of the isotypic block of a sandwich, divided by u_k.
    ///
    /// The block matrix of left multiplication by the sandwich on the k-th
    /// isotypic component has prime-field rank exactly r_k · u_k where r_k is
    /// the sandwich's rank over Mat(c_k, F_k); non-divisibility is an
    /// internal error.
    pub fn component_rank(&self, k: usize, mu: &AlgebraMatrix) -> Result<usize> {
        let comp = &self.components[k];
        let block = self.isotypic_block(k, mu);
        let rank = block.rank();
        if rank % comp.u != 0 {
            return Err(Error::InternalInvariantViolation(format!(
                "isotypic rank {rank} not divisible by u = {}",
                comp.u
            )));
        }
        Ok(rank / comp.u)
    }

    /// The (rows·|G|) × (cols·|G|) prime-field matrix with blocks
    /// Reg(e_k · μ_ij).
    fn isotypic_block(&self, k: usize, mu: &AlgebraMatrix) -> Matrix {
        let e = &self.components[k].idempotent;
        self.assemble_block(mu, |x| e.mul(x))
    }

    /// Rank of the full (un-projected) sandwich block matrix over the prime
    /// field; equals Σ_k r_k · u_k for semisimple algebras.
    pub fn global_rank(&self, mu: &AlgebraMatrix) -> usize {
        self.assemble_block(mu, |x| x.clone()).rank()
    }

    fn assemble_block(
        &self,
        mu: &AlgebraMatrix,
        project: impl Fn(&AlgebraElement) -> AlgebraElement,
    ) -> Matrix {
        let n = self.algebra.dim();
        let field = self.algebra.field();
        let mut big = Matrix::zeros(field, mu.rows * n, mu.cols * n);
        for i in 0..mu.rows {
            for j in 0..mu.cols {
                let entry = project(mu.entry(i, j));
                if entry.is_zero() {
                    continue;
                }
                big.paste(i * n, j * n, &entry.regular_matrix());
            }
        }
        big
    }

    /// Full per-component invariant table for a sandwich.
    pub fn component_numbers(&self, mu: &AlgebraMatrix) -> Result<Vec<ComponentNumbers>> {
        (0..self.components.len())
            .map(|k| {
                let comp = &self.components[k];
                let r = self.component_rank(k, mu)?;
                Ok(ComponentNumbers {
                    d: comp.d,
                    c: comp.c,
                    u: comp.u,
                    r,
                    m: mu.rows * comp.c - r,
                    n: mu.cols * comp.c - r,
                })
            })
            .collect()
    }
}

/// The center slice f·Z of the algebra for a central idempotent f.
struct CenterSlice {
    /// |G| × dim basis of f·Z over the prime field.
    basis: Matrix,
    basis_elements: Vec<AlgebraElement>,
    dim: usize,
    unit: AlgebraElement,
}

enum SliceOutcome {
    Field { degree: usize },
    Split(Vec<AlgebraElement>),
}

impl CenterSlice {
    fn new(
        algebra: &GroupAlgebra,
        f: &AlgebraElement,
        class_sums: &[AlgebraElement],
    ) -> Result<Self> {
        let n = algebra.dim();
        let field = algebra.field();
        let mut gen = Matrix::zeros(field, n, class_sums.len());
        let products: Vec<AlgebraElement> = class_sums.iter().map(|z| f.mul(z)).collect();
        for (j, fz) in products.iter().enumerate() {
            for (i, &c) in fz.coeffs().iter().enumerate() {
                gen.set(i, j, &field.from_u64(c));
            }
        }
        let basis = gen.column_space_basis();
        let dim = basis.cols();
        if dim == 0 {
            return Err(Error::InternalInvariantViolation(
                "central idempotent with empty center slice".into(),
            ));
        }
        let basis_elements = (0..dim)
            .map(|j| {
                let coeffs = (0..n).map(|i| basis.get(i, j).as_u64()).collect();
                algebra.from_coeffs(coeffs)
            })
            .collect();
        Ok(CenterSlice {
            basis,
            basis_elements,
            dim,
            unit: f.clone(),
        })
    }

    /// Matrix of multiplication by `w` in the slice basis.
    fn multiplication_matrix(&self, w: &AlgebraElement) -> Result<Matrix> {
        let field = self.basis.field().clone();
        let mut images = Matrix::zeros(&field, self.basis.rows(), self.dim);
        for (j, b) in self.basis_elements.iter().enumerate() {
            let wb = w.mul(b);
            for (i, &c) in wb.coeffs().iter().enumerate() {
                images.set(i, j, &field.from_u64(c));
            }
        }
        self.basis.solve(&images).ok_or_else(|| {
            Error::InternalInvariantViolation("center slice not closed under multiplication".into())
        })
    }

    /// Try to split the slice with central elements, or certify it is a
    /// field. Candidates: f·(class sums) in order, then seeded random central
    /// combinations. A commutative semisimple slice always yields one.
    fn split_or_certify(
        &self,
        class_sums: &[AlgebraElement],
        rng: &mut ChaCha8Rng,
    ) -> Result<SliceOutcome> {
        let p = self.unit.algebra().field().characteristic();
        let max_attempts = class_sums.len() + 200;
        for attempt in 0..max_attempts {
            let w = if attempt < class_sums.len() {
                self.unit.mul(&class_sums[attempt])
            } else {
                let mut acc = self.unit.algebra().zero();
                for z in class_sums {
                    acc = acc.add(&z.scale(rng.gen_range(0..p)));
                }
                self.unit.mul(&acc)
            };
            let mult = self.multiplication_matrix(&w)?;
            let m = mult.min_poly()?;
            let deg = m.degree().unwrap_or(0);
            if deg == self.dim && m.is_irreducible() {
                return Ok(SliceOutcome::Field { degree: deg });
            }
            let factorization = m.factor(0)?;
            if factorization.factors.len() < 2 {
                continue; // irreducible but too small, or a single repeated factor
            }
            if factorization.factors.iter().any(|(_, mult)| *mult > 1) {
                return Err(Error::InternalInvariantViolation(
                    "central element with non-squarefree minimal polynomial in semisimple slice"
                        .into(),
                ));
            }
            let parts = self.crt_idempotents(&w, &m, &factorization.factors)?;
            return Ok(SliceOutcome::Split(parts));
        }
        Err(Error::InternalInvariantViolation(
            "failed to split or certify a center slice".into(),
        ))
    }

    /// For m = Π g_i squarefree, produce the idempotents h_i(w) where
    /// h_i ≡ 1 mod g_i and h_i ≡ 0 mod m/g_i.
    fn crt_idempotents(
        &self,
        w: &AlgebraElement,
        m: &Polynomial,
        factors: &[(Polynomial, u32)],
    ) -> Result<Vec<AlgebraElement>> {
        let mut parts = Vec::with_capacity(factors.len());
        for (g, _) in factors {
            let rest = m.div_rem(g).0;
            let (gcd, _, t) = g.extended_gcd(&rest);
            if gcd.degree() != Some(0) {
                return Err(Error::InternalInvariantViolation(
                    "minimal polynomial factors are not coprime".into(),
                ));
            }
            // (s·g + t·rest = gcd) ⇒ h = t·rest/gcd ≡ 1 mod g, ≡ 0 mod rest.
            let scale = gcd.coeff(0).inv();
            let h = t.mul(&rest).scale(&scale).rem(m);
            parts.push(self.eval_at(&h, w));
        }
        // The pieces must recombine to the slice unit.
        let mut sum = self.unit.algebra().zero();
        for part in &parts {
            if !part.is_idempotent() {
                return Err(Error::InternalInvariantViolation(
                    "CRT piece is not idempotent".into(),
                ));
            }
            sum = sum.add(part);
        }
        if sum != self.unit {
            return Err(Error::InternalInvariantViolation(
                "CRT idempotents do not sum to the slice unit".into(),
            ));
        }
        Ok(parts)
    }

    /// Evaluate a polynomial at `w` inside the slice, whose unit is f (the
    /// constant term multiplies f, not the algebra identity).
    fn eval_at(&self, h: &Polynomial, w: &AlgebraElement) -> AlgebraElement {
        let algebra = self.unit.algebra().clone();
        let mut acc = algebra.zero();
        let mut power = self.unit.clone();
        for c in h.coeffs() {
            acc = acc.add(&power.scale(c.as_u64()));
            power = power.mul(w);
        }
        acc
    }
}

/// A rows × cols matrix with entries in a group algebra (a sandwich).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMatrix {
    algebra: GroupAlgebra,
    rows: usize,
    cols: usize,
    entries: Vec<AlgebraElement>,
}

impl AlgebraMatrix {
    pub fn new(algebra: &GroupAlgebra, rows: usize, cols: usize, entries: Vec<AlgebraElement>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidInput("sandwich must have positive shape".into()));
        }
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{}×{} sandwich needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        if entries.iter().any(|e| e.algebra() != algebra) {
            return Err(Error::InvalidInput("sandwich entry from a different algebra".into()));
        }
        Ok(AlgebraMatrix {
            algebra: algebra.clone(),
            rows,
            cols,
            entries,
        })
    }

    /// Sandwich from group-element-or-zero entries (the Rees case).
    pub fn from_group_entries(
        algebra: &GroupAlgebra,
        entries: &[Vec<Option<usize>>],
    ) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        if entries.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch("ragged sandwich rows".into()));
        }
        let elems = entries
            .iter()
            .flatten()
            .map(|cell| match cell {
                None => algebra.zero(),
                Some(g) => algebra.basis_element(*g),
            })
            .collect();
        Self::new(algebra, rows, cols, elems)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &AlgebraElement {
        &self.entries[i * self.cols + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(AlgebraElement::is_zero)
    }
}

/// Smallest prime not dividing the group order (semisimple but possibly
/// non-split characteristic).
pub fn smallest_semisimple_char(group: &FiniteGroup) -> u64 {
    let n = group.order() as u64;
    (2..).find(|&p| is_prime_u64(p) && n % p != 0).unwrap()
}

/// Smallest prime ≡ 1 mod exponent(G): every component field is then the
/// prime field itself (the algebra splits).
pub fn smallest_split_char(group: &FiniteGroup) -> u64 {
    let e = group.exponent() as u64;
    (2..).find(|&p| is_prime_u64(p) && p % e == 1).unwrap()
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut k = 3;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn decompose(spec: &str, p: u64) -> Result<WedderburnData> {
        let g = FiniteGroup::builtin(spec).unwrap();
        let f = FiniteField::prime(p).unwrap();
        WedderburnData::decompose(&g, &f, 0)
    }

    fn shape(data: &WedderburnData) -> Vec<(usize, usize)> {
        data.components().iter().map(|k| (k.d, k.c)).collect()
    }

    #[test]
    fn trivial_group_is_one_component() {
        let data = decompose("cyclic(1)", 5).unwrap();
        assert_eq!(shape(&data), vec![(1, 1)]);
    }

    #[test]
    fn cyclic3_over_f5_has_quadratic_component() {
        // x³−1 = (x−1)(x²+x+1) over F_5: one split line, one degree-2 field.
        let data = decompose("cyclic(3)", 5).unwrap();
        assert_eq!(shape(&data), vec![(1, 1), (2, 1)]);
    }

    #[test]
    fn cyclic3_over_f7_splits_completely() {
        // 7 ≡ 1 mod 3: three lines.
        let data = decompose("cyclic(3)", 7).unwrap();
        assert_eq!(shape(&data), vec![(1, 1), (1, 1), (1, 1)]);
    }

    #[test]
    fn symmetric3_over_f5() {
        // Trivial, sign, and the 2-dimensional simple module: Mat(2, F_5).
        let data = decompose("symmetric(3)", 5).unwrap();
        assert_eq!(shape(&data), vec![(1, 1), (1, 1), (1, 2)]);
    }

    #[test]
    fn modular_case_is_rejected() {
        assert!(matches!(
            decompose("symmetric(3)", 3),
            Err(Error::ModularCase { characteristic: 3, order: 6 })
        ));
        assert!(matches!(
            decompose("cyclic(4)", 2),
            Err(Error::ModularCase { .. })
        ));
    }

    #[test]
    fn decomposition_is_seed_independent_in_shape() {
        for seed in [0u64, 1, 42] {
            let g = FiniteGroup::builtin("dihedral(4)").unwrap();
            let f = FiniteField::prime(5).unwrap();
            let data = WedderburnData::decompose(&g, &f, seed).unwrap();
            // D4 over a split char: four lines and one 2×2 block.
            assert_eq!(shape(&data), vec![(1, 1), (1, 1), (1, 1), (1, 1), (1, 2)]);
        }
    }

    #[test]
    fn split_char_gives_prime_components() {
        for spec in ["cyclic(3)", "cyclic(4)", "symmetric(3)", "klein", "dihedral(4)"] {
            let g = FiniteGroup::builtin(spec).unwrap();
            let p = smallest_split_char(&g);
            let f = FiniteField::prime(p).unwrap();
            let data = WedderburnData::decompose(&g, &f, 0).unwrap();
            assert!(
                data.components().iter().all(|k| k.d == 1),
                "{spec} over F_{p} should split"
            );
        }
    }

    #[test]
    fn char_helpers() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        assert_eq!(smallest_semisimple_char(&c3), 2);
        assert_eq!(smallest_split_char(&c3), 7);
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(smallest_semisimple_char(&s3), 5);
        assert_eq!(smallest_split_char(&s3), 7);
    }

    #[test]
    fn component_rank_scalar_case() {
        // Trivial group, μ = [e]: one component, rank 1.
        let g = FiniteGroup::cyclic(1).unwrap();
        let f = FiniteField::prime(5).unwrap();
        let alg = GroupAlgebra::new(&g, &f).unwrap();
        let data = WedderburnData::decompose(&g, &f, 0).unwrap();
        let mu = AlgebraMatrix::from_group_entries(&alg, &[vec![Some(0)]]).unwrap();
        assert_eq!(data.component_rank(0, &mu).unwrap(), 1);
    }

    #[test]
    fn component_rank_c2_examples() {
        let g = FiniteGroup::cyclic(2).unwrap();
        let f = FiniteField::prime(5).unwrap();
        let alg = GroupAlgebra::new(&g, &f).unwrap();
        let data = WedderburnData::decompose(&g, &f, 0).unwrap();
        let e = Some(0);
        let gg = Some(1);
        // [[e, e], [e, e]]: rank 1 in both components.
        let mu = AlgebraMatrix::from_group_entries(&alg, &[vec![e, e], vec![e, e]]).unwrap();
        assert_eq!(data.component_rank(0, &mu).unwrap(), 1);
        assert_eq!(data.component_rank(1, &mu).unwrap(), 1);
        // [[e, e], [e, g]]: ranks 1 and 2 (order fixed by canonical sort).
        let mu = AlgebraMatrix::from_group_entries(&alg, &[vec![e, e], vec![e, gg]]).unwrap();
        let ranks: Vec<usize> = (0..2).map(|k| data.component_rank(k, &mu).unwrap()).collect();
        let mut sorted = ranks.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 2]);
        // Global rank = Σ r_k u_k.
        let total: usize = data
            .components()
            .iter()
            .zip(&ranks)
            .map(|(k, r)| k.u * r)
            .sum();
        assert_eq!(data.global_rank(&mu), total);
    }

    #[test]
    fn regular_matrix_of_identity() {
        let g = FiniteGroup::cyclic(3).unwrap();
        let f = FiniteField::prime(5).unwrap();
        let alg = GroupAlgebra::new(&g, &f).unwrap();
        assert_eq!(alg.one().regular_matrix(), Matrix::identity(&f, 3));
        // Regular matrix of a group element is a permutation matrix.
        let m = alg.basis_element(1).regular_matrix();
        assert_eq!(m.rank(), 3);
        assert_eq!(m.mul(&m).mul(&m), Matrix::identity(&f, 3));
    }

    #[test]
    fn class_sums_are_central() {
        let g = FiniteGroup::symmetric(3).unwrap();
        let f = FiniteField::prime(5).unwrap();
        let alg = GroupAlgebra::new(&g, &f).unwrap();
        for class in g.conjugacy_classes() {
            assert!(alg.class_sum(&class).is_central());
        }
    }
}
