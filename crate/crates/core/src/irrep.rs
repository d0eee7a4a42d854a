//! Concrete matrix realization of one Wedderburn component.
//!
//! [`WedderburnData`](crate::group_algebra::WedderburnData) deliberately
//! computes component invariants without representations; this module builds
//! the representation when one is genuinely needed — e.g. to put a sandwich
//! into rank normal form over the component field, or to cross-check the
//! representation-free rank extraction against an honest rank over
//! Mat(c_k, F_k).
//!
//! Construction: inside the isotypic block A = e_k·F_p[G] ≅ Mat(c, F), find a
//! primitive idempotent ε by repeatedly splitting with minimal polynomials of
//! elements of ε·A·ε (ε is primitive exactly when dim ε·A·ε = d, since that
//! corner is Mat(rank ε, F)). Then F ≅ ε·A·ε with a generator γ whose minimal
//! polynomial becomes the modulus of the concrete field, U = A·ε is a free
//! right F-module of rank c, and the left action of any algebra element on a
//! fixed F-basis of U gives its c × c matrix. All searches sweep canonical
//! bases first and seeded random combinations second, so the realization is
//! deterministic for a fixed seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::FiniteField;
use crate::group_algebra::{AlgebraElement, AlgebraMatrix, GroupAlgebra, WedderburnData};
use crate::matrix::Matrix;
use crate::poly::Polynomial;

/// The matrix realization of one component: everything needed to map algebra
/// elements to c × c matrices over the component field.
pub struct ComponentRealization {
    algebra: GroupAlgebra,
    /// The component field F_k, presented with the minimal polynomial of the
    /// chosen generator as modulus.
    field: FiniteField,
    c: usize,
    d: usize,
    /// Prime-field solver: columns are vec(u_i · γ^t), grouped by i.
    coord_matrix: Matrix,
    /// The chosen F-basis u_1..u_c of U = A·ε.
    u_basis: Vec<AlgebraElement>,
}

impl ComponentRealization {
    pub fn build(data: &WedderburnData, comp_index: usize, seed: u64) -> Result<Self> {
        let comp = &data.components()[comp_index];
        let algebra = data.algebra().clone();
        let prime = algebra.field().clone();
        let (c, d) = (comp.c, comp.d);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);

        // Basis of the isotypic block A = e_k · F_p[G].
        let block_basis = corner_basis(&algebra, &comp.idempotent, None)?;

        // Primitive idempotent: shrink ε until dim ε·A·ε = d.
        let mut epsilon = comp.idempotent.clone();
        loop {
            let corner = corner_basis(&algebra, &epsilon, Some(&block_basis))?;
            if corner.len() == d {
                break;
            }
            epsilon = split_idempotent(&algebra, &epsilon, &corner, &mut rng)?;
        }

        // The corner field F = ε·A·ε and a generator with full-degree
        // irreducible minimal polynomial.
        let corner = corner_basis(&algebra, &epsilon, Some(&block_basis))?;
        let (field, gamma) = present_corner_field(&algebra, &epsilon, &corner, d, &mut rng)?;
        let mut gamma_powers = Vec::with_capacity(d);
        let mut power = epsilon.clone();
        for _ in 0..d {
            gamma_powers.push(power.clone());
            power = power.mul(&gamma);
        }

        // U = A·ε as a free right F-module of rank c: greedy F-basis.
        let n = algebra.dim();
        let mut span = Matrix::zeros(&prime, n, 0);
        let mut u_basis: Vec<AlgebraElement> = Vec::with_capacity(c);
        for a in &block_basis {
            if u_basis.len() == c {
                break;
            }
            let candidate = a.mul(&epsilon);
            if candidate.is_zero() {
                continue;
            }
            if span.cols() > 0 && span.solve(&candidate.to_column()).is_some() {
                continue; // already in the F-span of chosen vectors
            }
            for gp in &gamma_powers {
                span = span.hstack(&candidate.mul(gp).to_column());
            }
            u_basis.push(candidate);
        }
        if u_basis.len() != c || span.rank() != c * d {
            return Err(Error::InternalInvariantViolation(format!(
                "component column module has F-rank {} (expected {c})",
                u_basis.len()
            )));
        }
        Ok(ComponentRealization {
            algebra,
            field,
            c,
            d,
            coord_matrix: span,
            u_basis,
        })
    }

    /// The component field F_k.
    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn matrix_size(&self) -> usize {
        self.c
    }

    /// The c × c matrix of left multiplication by `x` on the column module.
    /// Elements of other components map to zero.
    pub fn apply(&self, x: &AlgebraElement) -> Result<Matrix> {
        let prime = self.algebra.field();
        let n = self.algebra.dim();
        let mut images = Matrix::zeros(prime, n, self.c);
        for (j, u) in self.u_basis.iter().enumerate() {
            let xu = x.mul(u);
            images.paste(0, j, &xu.to_column());
        }
        let coords = self.coord_matrix.solve(&images).ok_or_else(|| {
            Error::InternalInvariantViolation("column module not invariant under left action".into())
        })?;
        let mut out = Matrix::zeros(&self.field, self.c, self.c);
        for i in 0..self.c {
            for j in 0..self.c {
                let window: Vec<u64> = (0..self.d)
                    .map(|t| coords.get(i * self.d + t, j).as_u64())
                    .collect();
                out.set(i, j, &self.field.element(&window));
            }
        }
        Ok(out)
    }

    /// Assemble the (rows·c) × (cols·c) matrix of a sandwich over F_k.
    pub fn sandwich_matrix(&self, mu: &AlgebraMatrix) -> Result<Matrix> {
        let mut out = Matrix::zeros(&self.field, mu.rows() * self.c, mu.cols() * self.c);
        for i in 0..mu.rows() {
            for j in 0..mu.cols() {
                let block = self.apply(mu.entry(i, j))?;
                out.paste(i * self.c, j * self.c, &block);
            }
        }
        Ok(out)
    }
}

/// Canonical basis (as elements) of ε·A·ε — or of ε·R·ε when `ambient` is
/// `None` (the two agree for central ε; passing the block basis just keeps
/// the sweep small).
fn corner_basis(
    algebra: &GroupAlgebra,
    epsilon: &AlgebraElement,
    ambient: Option<&[AlgebraElement]>,
) -> Result<Vec<AlgebraElement>> {
    let n = algebra.dim();
    let prime = algebra.field();
    let generators: Vec<AlgebraElement> = match ambient {
        Some(list) => list.iter().map(|a| epsilon.mul(a).mul(epsilon)).collect(),
        None => (0..n)
            .map(|g| epsilon.mul(&algebra.basis_element(g)).mul(epsilon))
            .collect(),
    };
    let mut gen_matrix = Matrix::zeros(prime, n, generators.len());
    for (j, el) in generators.iter().enumerate() {
        gen_matrix.paste(0, j, &el.to_column());
    }
    let basis = gen_matrix.column_space_basis();
    Ok((0..basis.cols())
        .map(|j| {
            let coeffs = (0..n).map(|i| basis.get(i, j).as_u64()).collect();
            algebra.from_coeffs(coeffs)
        })
        .collect())
}

/// Find a non-trivial idempotent below ε by factoring the minimal polynomial
/// of some element of the corner ε·A·ε.
fn split_idempotent(
    algebra: &GroupAlgebra,
    epsilon: &AlgebraElement,
    corner: &[AlgebraElement],
    rng: &mut ChaCha8Rng,
) -> Result<AlgebraElement> {
    let p = algebra.field().characteristic();
    let max_attempts = corner.len() + 200;
    for attempt in 0..max_attempts {
        let w = if attempt < corner.len() {
            corner[attempt].clone()
        } else {
            let mut acc = algebra.zero();
            for b in corner {
                acc = acc.add(&b.scale(rng.gen_range(0..p)));
            }
            acc
        };
        let m = element_min_poly(algebra, corner, &w)?;
        let factors = m.factor(0)?.factors;
        if factors.len() < 2 {
            continue;
        }
        // Prime-power CRT: h ≡ 1 mod g_0^{m_0}, ≡ 0 mod the rest. The result
        // h(w) is a nonzero idempotent strictly below ε.
        let f0 = power(&factors[0].0, factors[0].1);
        let rest = factors[1..]
            .iter()
            .fold(Polynomial::one(m.field()), |acc, (g, k)| acc.mul(&power(g, *k)));
        let (g, _, t) = f0.extended_gcd(&rest);
        if g.degree() != Some(0) {
            return Err(Error::InternalInvariantViolation(
                "prime-power factors not coprime".into(),
            ));
        }
        let h = t.mul(&rest).scale(&g.coeff(0).inv()).rem(&m);
        let candidate = eval_in_corner(algebra, epsilon, &w, &h);
        if candidate.is_zero() || candidate == *epsilon {
            return Err(Error::InternalInvariantViolation(
                "CRT produced a trivial idempotent".into(),
            ));
        }
        if !candidate.is_idempotent() {
            return Err(Error::InternalInvariantViolation(
                "CRT piece is not idempotent".into(),
            ));
        }
        return Ok(candidate);
    }
    Err(Error::InternalInvariantViolation(
        "failed to split a non-primitive idempotent".into(),
    ))
}

fn power(base: &Polynomial, exp: u32) -> Polynomial {
    let mut acc = Polynomial::one(base.field());
    for _ in 0..exp {
        acc = acc.mul(base);
    }
    acc
}

/// Minimal polynomial of w as an element of the corner algebra (= minimal
/// polynomial of left multiplication by w on the corner).
fn element_min_poly(
    algebra: &GroupAlgebra,
    corner: &[AlgebraElement],
    w: &AlgebraElement,
) -> Result<Polynomial> {
    let prime = algebra.field();
    let n = algebra.dim();
    let mut basis = Matrix::zeros(prime, n, corner.len());
    for (j, b) in corner.iter().enumerate() {
        basis.paste(0, j, &b.to_column());
    }
    let mut images = Matrix::zeros(prime, n, corner.len());
    for (j, b) in corner.iter().enumerate() {
        images.paste(0, j, &w.mul(b).to_column());
    }
    let mult = basis.solve(&images).ok_or_else(|| {
        Error::InternalInvariantViolation("corner not closed under multiplication".into())
    })?;
    mult.min_poly()
}

/// Evaluate h at w inside the corner with unit ε.
fn eval_in_corner(
    algebra: &GroupAlgebra,
    epsilon: &AlgebraElement,
    w: &AlgebraElement,
    h: &Polynomial,
) -> AlgebraElement {
    let mut acc = algebra.zero();
    let mut pw = epsilon.clone();
    for c in h.coeffs() {
        acc = acc.add(&pw.scale(c.as_u64()));
        pw = pw.mul(w);
    }
    acc
}

/// Present the corner field concretely: a generator γ with irreducible
/// degree-d minimal polynomial, and the field F_p[x]/(that polynomial).
fn present_corner_field(
    algebra: &GroupAlgebra,
    epsilon: &AlgebraElement,
    corner: &[AlgebraElement],
    d: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(FiniteField, AlgebraElement)> {
    let p = algebra.field().characteristic();
    if d == 1 {
        return Ok((algebra.field().clone(), epsilon.clone()));
    }
    let max_attempts = corner.len() + 200;
    for attempt in 0..max_attempts {
        let gamma = if attempt < corner.len() {
            corner[attempt].clone()
        } else {
            let mut acc = algebra.zero();
            for b in corner {
                acc = acc.add(&b.scale(rng.gen_range(0..p)));
            }
            acc
        };
        let m = element_min_poly(algebra, corner, &gamma)?;
        if m.degree() == Some(d) && m.is_irreducible() {
            let coeffs: Vec<u64> = m.coeffs().iter().map(|c| c.as_u64()).collect();
            let field = FiniteField::with_modulus(p, &coeffs)?;
            return Ok((field, gamma));
        }
    }
    Err(Error::InternalInvariantViolation(
        "no primitive element found for corner field".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    fn realize_all(spec: &str, p: u64) -> (WedderburnData, Vec<ComponentRealization>) {
        let g = FiniteGroup::builtin(spec).unwrap();
        let f = FiniteField::prime(p).unwrap();
        let data = WedderburnData::decompose(&g, &f, 0).unwrap();
        let reals = (0..data.components().len())
            .map(|k| ComponentRealization::build(&data, k, 0).unwrap())
            .collect();
        (data, reals)
    }

    #[test]
    fn s3_two_dimensional_component() {
        let (data, reals) = realize_all("symmetric(3)", 5);
        let k2 = data.components().iter().position(|k| k.c == 2).unwrap();
        let rho = &reals[k2];
        assert_eq!(rho.matrix_size(), 2);
        assert_eq!(rho.field().degree(), 1);
        // The idempotent maps to the identity, other idempotents to zero.
        let id = rho.apply(&data.components()[k2].idempotent).unwrap();
        assert_eq!(id, Matrix::identity(rho.field(), 2));
        for (l, comp) in data.components().iter().enumerate() {
            if l != k2 {
                assert!(rho.apply(&comp.idempotent).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn realization_is_multiplicative() {
        let (data, reals) = realize_all("symmetric(3)", 5);
        let algebra = data.algebra().clone();
        // Deterministic pseudo-random elements.
        let mut x_coeffs = vec![0u64; algebra.dim()];
        let mut y_coeffs = vec![0u64; algebra.dim()];
        for i in 0..algebra.dim() {
            x_coeffs[i] = (3 * i as u64 + 1) % 5;
            y_coeffs[i] = (2 * i as u64 + 4) % 5;
        }
        let x = algebra.from_coeffs(x_coeffs);
        let y = algebra.from_coeffs(y_coeffs);
        for rho in &reals {
            let lhs = rho.apply(&x.mul(&y)).unwrap();
            let rhs = rho.apply(&x).unwrap().mul(&rho.apply(&y).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn nonsplit_component_field_degree() {
        // C_3 over F_5: the non-trivial component is the field F_25.
        let (data, reals) = realize_all("cyclic(3)", 5);
        let k = data.components().iter().position(|c| c.d == 2).unwrap();
        assert_eq!(reals[k].field().order(), 25);
        assert_eq!(reals[k].matrix_size(), 1);
    }

    #[test]
    fn sandwich_rank_agrees_with_representation_free_route() {
        // Dual-route check on a group with a genuinely 2-dimensional
        // component: ranks over Mat(c, F_k) vs isotypic block ranks.
        let g = FiniteGroup::builtin("symmetric(3)").unwrap();
        let f = FiniteField::prime(5).unwrap();
        let data = WedderburnData::decompose(&g, &f, 0).unwrap();
        let algebra = data.algebra().clone();
        let cases: Vec<Vec<Vec<Option<usize>>>> = vec![
            vec![vec![Some(0)]],
            vec![vec![Some(0), Some(3)], vec![Some(1), None]],
            vec![vec![Some(2), Some(0)], vec![Some(4), Some(5)], vec![None, Some(1)]],
        ];
        for entries in cases {
            let mu = AlgebraMatrix::from_group_entries(&algebra, &entries).unwrap();
            for k in 0..data.components().len() {
                let rho = ComponentRealization::build(&data, k, 0).unwrap();
                let honest = rho.sandwich_matrix(&mu).unwrap().rank();
                let fast = data.component_rank(k, &mu).unwrap();
                assert_eq!(honest, fast, "component {k} of {entries:?}");
            }
        }
    }
}
