//! Modules over a Munn algebra with semisimple base, and their translation
//! into representations of the associated valued graph.
//!
//! A module is presented as a diagram: a space `V_0` over the prime field 𝕜,
//! one space `V_k` per component (an `F_k`-space), maps `α_{ki}: V_0 → V_k`
//! (one per radical generator on that side, `i < m_k`) and
//! `β_{kj}: V_k → V_0` (`j < n_k`), subject to every composite `α∘β = 0`.
//!
//! Internally everything is a matrix over 𝕜.  `V_k` is stored with its
//! 𝕜-dimension `w_k·d_k` and carries the canonical `F_k`-structure: the
//! distinguished generator of `F_k` acts as `I_{w_k} ⊗ C` with `C` the
//! companion matrix of the modulus of `F_k`.  `F_k`-linearity of morphism
//! components is a commutation constraint against that action; for maps in
//! and out of `V_0` no constraint is needed (every 𝕜-linear map qualifies
//! under the adjunction identifying `Hom_𝕜(V_0, V_k)` with
//! `Hom_{F_k}(F_k ⊗ V_0, V_k)`).
//!
//! The translation functors: `to_graph_rep` places `V_+ = Σ Im β` (with the
//! corestricted maps) and `V_− = V_0/V_+` (with the induced maps); its
//! section `from_graph_rep` rebuilds `V_0 = W_+ ⊕ W_−`.  Composites of
//! morphisms vanishing under the translation form the square-zero ideal
//! tested by `in_ideal_j`.  A brute-force endomorphism search provides an
//! indecomposability oracle and an exhaustive census over F_2/F_3.

use crate::error::{Error, Result};
use crate::field::{FieldElement, FiniteField};
use crate::matrix::Matrix;
use crate::munn::TripleSet;

/// A finite-dimensional module, presented as prime-field matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct MunnModule {
    field: FiniteField,
    triples: TripleSet,
    comp_fields: Vec<FiniteField>,
    v0: usize,
    /// `F_k`-dimension of each `V_k`.
    wk: Vec<usize>,
    /// Per component `k`: `m_k` matrices of shape `(w_k·d_k) × v0`.
    alphas: Vec<Vec<Matrix>>,
    /// Per component `k`: `n_k` matrices of shape `v0 × (w_k·d_k)`.
    betas: Vec<Vec<Matrix>>,
}

fn component_fields(field: &FiniteField, triples: &TripleSet) -> Result<Vec<FiniteField>> {
    triples
        .iter()
        .map(|t| {
            if t.d == 1 {
                Ok(field.clone())
            } else {
                FiniteField::extension(field.characteristic(), t.d)
            }
        })
        .collect()
}

impl MunnModule {
    pub fn make(
        field: &FiniteField,
        triples: &TripleSet,
        v0: usize,
        component_dims: &[usize],
        alphas: Vec<Vec<Matrix>>,
        betas: Vec<Vec<Matrix>>,
    ) -> Result<Self> {
        let comp_fields = component_fields(field, triples)?;
        Self::make_with_fields(field, triples, comp_fields, v0, component_dims, alphas, betas)
    }

    fn make_with_fields(
        field: &FiniteField,
        triples: &TripleSet,
        comp_fields: Vec<FiniteField>,
        v0: usize,
        component_dims: &[usize],
        alphas: Vec<Vec<Matrix>>,
        betas: Vec<Vec<Matrix>>,
    ) -> Result<Self> {
        if !field.is_prime_field() {
            return Err(Error::InvalidInput(
                "the ground field of a module must be a prime field".into(),
            ));
        }
        let nc = triples.len();
        if component_dims.len() != nc || alphas.len() != nc || betas.len() != nc {
            return Err(Error::ShapeMismatch(format!(
                "expected data for {} components, got dims/alphas/betas of lengths {}/{}/{}",
                nc,
                component_dims.len(),
                alphas.len(),
                betas.len()
            )));
        }
        for (k, t) in triples.iter().enumerate() {
            let kdim = component_dims[k] * t.d;
            if alphas[k].len() != t.m || betas[k].len() != t.n {
                return Err(Error::ShapeMismatch(format!(
                    "component {}: expected {} alpha and {} beta maps, got {} and {}",
                    k,
                    t.m,
                    t.n,
                    alphas[k].len(),
                    betas[k].len()
                )));
            }
            for a in &alphas[k] {
                if a.field() != field || a.rows() != kdim || a.cols() != v0 {
                    return Err(Error::ShapeMismatch(format!(
                        "component {}: alpha must be a {}x{} matrix over the ground field",
                        k, kdim, v0
                    )));
                }
            }
            for b in &betas[k] {
                if b.field() != field || b.rows() != v0 || b.cols() != kdim {
                    return Err(Error::ShapeMismatch(format!(
                        "component {}: beta must be a {}x{} matrix over the ground field",
                        k, v0, kdim
                    )));
                }
            }
        }
        // Every composite V_l -> V_0 -> V_k must vanish.
        for (k, als) in alphas.iter().enumerate() {
            for (i, a) in als.iter().enumerate() {
                for (l, bes) in betas.iter().enumerate() {
                    for (j, b) in bes.iter().enumerate() {
                        if !a.mul(b).is_zero() {
                            return Err(Error::RelationViolation(format!(
                                "alpha[{}][{}] ∘ beta[{}][{}] is nonzero",
                                k, i, l, j
                            )));
                        }
                    }
                }
            }
        }
        Ok(Self {
            field: field.clone(),
            triples: triples.clone(),
            comp_fields,
            v0,
            wk: component_dims.to_vec(),
            alphas,
            betas,
        })
    }

    /// The module with every dimension zero.
    pub fn zero(field: &FiniteField, triples: &TripleSet) -> Result<Self> {
        let wk = vec![0; triples.len()];
        let alphas = triples
            .iter()
            .map(|t| (0..t.m).map(|_| Matrix::zeros(field, 0, 0)).collect())
            .collect();
        let betas = triples
            .iter()
            .map(|t| (0..t.n).map(|_| Matrix::zeros(field, 0, 0)).collect())
            .collect();
        Self::make(field, triples, 0, &wk, alphas, betas)
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn triples(&self) -> &TripleSet {
        &self.triples
    }

    pub fn v0_dim(&self) -> usize {
        self.v0
    }

    /// `F_k`-dimensions of the component spaces.
    pub fn component_dims(&self) -> &[usize] {
        &self.wk
    }

    /// 𝕜-dimension of `V_k`.
    pub fn kdim(&self, k: usize) -> usize {
        self.wk[k] * self.triples.entries()[k].d
    }

    pub fn comp_field(&self, k: usize) -> &FiniteField {
        &self.comp_fields[k]
    }

    pub fn alphas(&self, k: usize) -> &[Matrix] {
        &self.alphas[k]
    }

    pub fn betas(&self, k: usize) -> &[Matrix] {
        &self.betas[k]
    }

    pub fn is_zero_module(&self) -> bool {
        self.v0 == 0 && self.wk.iter().all(|&w| w == 0)
    }

    /// Matrix of the distinguished `F_k`-generator acting on `V_k`
    /// (identity when `F_k` is the prime field itself).
    pub fn action_matrix(&self, k: usize) -> Matrix {
        action_matrix_for(&self.field, &self.comp_fields[k], self.wk[k])
    }

    /// Canonical basis (one column per vector) of `V_+ = Σ Im β`.
    pub fn v_plus_basis(&self) -> Matrix {
        let mut stack = Matrix::zeros(&self.field, self.v0, 0);
        for bes in &self.betas {
            for b in bes {
                stack = stack.hstack(b);
            }
        }
        stack.column_space_basis()
    }

    /// Canonical basis of `∩ Ker α` (all of `V_0` when there are no α maps).
    pub fn kernel_intersection(&self) -> Matrix {
        let mut stack = Matrix::zeros(&self.field, 0, self.v0);
        for als in &self.alphas {
            for a in als {
                stack = stack.vstack(a);
            }
        }
        stack.kernel().column_space_basis()
    }

    /// Exact test of `Σ Im β = ∩ Ker α`.  The inclusion ⊆ always holds
    /// (it is the α∘β = 0 relation), so this measures the gap.
    pub fn is_in_mod_plus(&self) -> bool {
        self.v_plus_basis() == self.kernel_intersection()
    }

    /// The translation into a graph representation: `V_+ = Σ Im β` with the
    /// corestricted β̃, `V_− = V_0/V_+` with the induced α̃ (well defined
    /// because α kills every β image).  With `strict`, inputs outside Mod⁺
    /// are rejected; otherwise the result simply fails `is_in_rep_plus`.
    pub fn to_graph_rep(&self, strict: bool) -> Result<GraphRep> {
        if strict && !self.is_in_mod_plus() {
            return Err(Error::NotInModPlus(format!(
                "sum of beta images has dimension {} but the kernel intersection has dimension {}",
                self.v_plus_basis().cols(),
                self.kernel_intersection().cols()
            )));
        }
        let s = self.v_plus_basis();
        let u = standard_complement(&self.field, self.v0, &pivot_rows(&s));
        let mut alphas = Vec::with_capacity(self.alphas.len());
        let mut betas = Vec::with_capacity(self.betas.len());
        for als in &self.alphas {
            alphas.push(als.iter().map(|a| a.mul(&u)).collect::<Vec<_>>());
        }
        for bes in &self.betas {
            let tilde: Result<Vec<_>> = bes
                .iter()
                .map(|b| {
                    s.solve(b).ok_or_else(|| {
                        Error::InternalInvariantViolation(
                            "a beta image escaped the span of all beta images".into(),
                        )
                    })
                })
                .collect();
            betas.push(tilde?);
        }
        GraphRep::make_with_fields(
            &self.field,
            &self.triples,
            self.comp_fields.clone(),
            s.cols(),
            self.v0 - s.cols(),
            &self.wk,
            alphas,
            betas,
        )
    }
}

/// A representation of the valued graph of a triple set: spaces `V_+`, `V_−`
/// over 𝕜 and `V_k` over `F_k`, with `m_k` maps `V_− → V_k` (the α̃ bundle)
/// and `n_k` maps `V_k → V_+` (the β̃ bundle), all stored over 𝕜.
#[derive(Clone, Debug, PartialEq)]
pub struct GraphRep {
    field: FiniteField,
    triples: TripleSet,
    comp_fields: Vec<FiniteField>,
    v_plus: usize,
    v_minus: usize,
    wk: Vec<usize>,
    /// Per component `k`: `m_k` matrices of shape `(w_k·d_k) × v_minus`.
    alphas: Vec<Vec<Matrix>>,
    /// Per component `k`: `n_k` matrices of shape `v_plus × (w_k·d_k)`.
    betas: Vec<Vec<Matrix>>,
}

impl GraphRep {
    pub fn make(
        field: &FiniteField,
        triples: &TripleSet,
        v_plus: usize,
        v_minus: usize,
        component_dims: &[usize],
        alphas: Vec<Vec<Matrix>>,
        betas: Vec<Vec<Matrix>>,
    ) -> Result<Self> {
        let comp_fields = component_fields(field, triples)?;
        Self::make_with_fields(
            field,
            triples,
            comp_fields,
            v_plus,
            v_minus,
            component_dims,
            alphas,
            betas,
        )
    }

    #[allow(clippy::too_many_arguments)]
    fn make_with_fields(
        field: &FiniteField,
        triples: &TripleSet,
        comp_fields: Vec<FiniteField>,
        v_plus: usize,
        v_minus: usize,
        component_dims: &[usize],
        alphas: Vec<Vec<Matrix>>,
        betas: Vec<Vec<Matrix>>,
    ) -> Result<Self> {
        if !field.is_prime_field() {
            return Err(Error::InvalidInput(
                "the ground field of a representation must be a prime field".into(),
            ));
        }
        let nc = triples.len();
        if component_dims.len() != nc || alphas.len() != nc || betas.len() != nc {
            return Err(Error::ShapeMismatch(format!(
                "expected data for {} components, got dims/alphas/betas of lengths {}/{}/{}",
                nc,
                component_dims.len(),
                alphas.len(),
                betas.len()
            )));
        }
        for (k, t) in triples.iter().enumerate() {
            let kdim = component_dims[k] * t.d;
            if alphas[k].len() != t.m || betas[k].len() != t.n {
                return Err(Error::ShapeMismatch(format!(
                    "component {}: expected {} alpha and {} beta maps, got {} and {}",
                    k,
                    t.m,
                    t.n,
                    alphas[k].len(),
                    betas[k].len()
                )));
            }
            for a in &alphas[k] {
                if a.field() != field || a.rows() != kdim || a.cols() != v_minus {
                    return Err(Error::ShapeMismatch(format!(
                        "component {}: alpha-tilde must be a {}x{} matrix over the ground field",
                        k, kdim, v_minus
                    )));
                }
            }
            for b in &betas[k] {
                if b.field() != field || b.rows() != v_plus || b.cols() != kdim {
                    return Err(Error::ShapeMismatch(format!(
                        "component {}: beta-tilde must be a {}x{} matrix over the ground field",
                        k, v_plus, kdim
                    )));
                }
            }
        }
        Ok(Self {
            field: field.clone(),
            triples: triples.clone(),
            comp_fields,
            v_plus,
            v_minus,
            wk: component_dims.to_vec(),
            alphas,
            betas,
        })
    }

    pub fn zero(field: &FiniteField, triples: &TripleSet) -> Result<Self> {
        let wk = vec![0; triples.len()];
        let alphas = triples
            .iter()
            .map(|t| (0..t.m).map(|_| Matrix::zeros(field, 0, 0)).collect())
            .collect();
        let betas = triples
            .iter()
            .map(|t| (0..t.n).map(|_| Matrix::zeros(field, 0, 0)).collect())
            .collect();
        Self::make(field, triples, 0, 0, &wk, alphas, betas)
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn triples(&self) -> &TripleSet {
        &self.triples
    }

    pub fn v_plus_dim(&self) -> usize {
        self.v_plus
    }

    pub fn v_minus_dim(&self) -> usize {
        self.v_minus
    }

    pub fn component_dims(&self) -> &[usize] {
        &self.wk
    }

    pub fn kdim(&self, k: usize) -> usize {
        self.wk[k] * self.triples.entries()[k].d
    }

    pub fn alphas(&self, k: usize) -> &[Matrix] {
        &self.alphas[k]
    }

    pub fn betas(&self, k: usize) -> &[Matrix] {
        &self.betas[k]
    }

    /// Dimension vector in graph vertex order: `+`, components, `−`,
    /// with `F_k`-dimensions at the component vertices.
    pub fn dimension_vector(&self) -> Vec<usize> {
        let mut v = Vec::with_capacity(self.wk.len() + 2);
        v.push(self.v_plus);
        v.extend_from_slice(&self.wk);
        v.push(self.v_minus);
        v
    }

    /// Membership in the image category: the β̃ fill all of `V_+` and the α̃
    /// have no common kernel in `V_−`.
    pub fn is_in_rep_plus(&self) -> bool {
        let mut bstack = Matrix::zeros(&self.field, self.v_plus, 0);
        for bes in &self.betas {
            for b in bes {
                bstack = bstack.hstack(b);
            }
        }
        if bstack.rank() != self.v_plus {
            return false;
        }
        let mut astack = Matrix::zeros(&self.field, 0, self.v_minus);
        for als in &self.alphas {
            for a in als {
                astack = astack.vstack(a);
            }
        }
        astack.rank() == self.v_minus
    }
}

/// The section of the translation: `V_0 = W_+ ⊕ W_−` (plus coordinates
/// first), α zero on the `W_+` summand, β landing in it.  The α∘β = 0
/// relation holds by construction, and the result lies in Mod⁺ exactly when
/// the input lies in Rep⁺.
pub fn from_graph_rep(w: &GraphRep) -> MunnModule {
    let v0 = w.v_plus + w.v_minus;
    let alphas = w
        .alphas
        .iter()
        .enumerate()
        .map(|(k, als)| {
            als.iter()
                .map(|a| Matrix::zeros(&w.field, w.kdim(k), w.v_plus).hstack(a))
                .collect()
        })
        .collect();
    let betas = w
        .betas
        .iter()
        .enumerate()
        .map(|(k, bes)| {
            bes.iter()
                .map(|b| b.vstack(&Matrix::zeros(&w.field, w.v_minus, w.kdim(k))))
                .collect()
        })
        .collect();
    MunnModule::make_with_fields(
        &w.field,
        &w.triples,
        w.comp_fields.clone(),
        v0,
        &w.wk,
        alphas,
        betas,
    )
    .expect("the section of the translation always builds a valid module")
}

/// A morphism tuple `(φ_0, {φ_k})` between two modules.
#[derive(Clone, Debug, PartialEq)]
pub struct HomTuple {
    pub phi0: Matrix,
    pub phik: Vec<Matrix>,
}

impl HomTuple {
    pub fn zero(from: &MunnModule, to: &MunnModule) -> Self {
        Self {
            phi0: Matrix::zeros(&from.field, to.v0, from.v0),
            phik: (0..from.triples.len())
                .map(|k| Matrix::zeros(&from.field, to.kdim(k), from.kdim(k)))
                .collect(),
        }
    }

    pub fn identity(v: &MunnModule) -> Self {
        Self {
            phi0: Matrix::identity(&v.field, v.v0),
            phik: (0..v.triples.len())
                .map(|k| Matrix::identity(&v.field, v.kdim(k)))
                .collect(),
        }
    }

    /// `self ∘ inner`, componentwise.
    pub fn compose(&self, inner: &Self) -> Self {
        Self {
            phi0: self.phi0.mul(&inner.phi0),
            phik: self
                .phik
                .iter()
                .zip(&inner.phik)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            phi0: self.phi0.add(&other.phi0),
            phik: self
                .phik
                .iter()
                .zip(&other.phik)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        Self {
            phi0: self.phi0.scale(c),
            phik: self.phik.iter().map(|m| m.scale(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.phi0.is_zero() && self.phik.iter().all(Matrix::is_zero)
    }

    /// A morphism is an isomorphism exactly when every component is.
    pub fn is_invertible(&self) -> bool {
        self.phi0.is_invertible() && self.phik.iter().all(Matrix::is_invertible)
    }

    pub fn is_identity(&self) -> bool {
        let id = |m: &Matrix| m.rows() == m.cols() && *m == Matrix::identity(m.field(), m.rows());
        id(&self.phi0) && self.phik.iter().all(|m| id(m))
    }
}

fn bump(m: &mut Matrix, r: usize, c: usize, v: &FieldElement) {
    let cur = m.get(r, c);
    let sum = cur.add(v);
    m.set(r, c, &sum);
}

/// Basis of the space of morphisms `from → to`: all tuples satisfying
/// `φ_k∘α_{ki} = α'_{ki}∘φ_0`, `φ_0∘β_{kj} = β'_{kj}∘φ_k`, and commutation
/// of each `φ_k` with the `F_k`-action.  Contains the identity when the two
/// modules coincide.
pub fn hom_space(from: &MunnModule, to: &MunnModule) -> Result<Vec<HomTuple>> {
    if from.field != to.field {
        return Err(Error::ShapeMismatch(
            "morphisms require a common ground field".into(),
        ));
    }
    if !from.triples.same_triples(&to.triples) {
        return Err(Error::ShapeMismatch(
            "morphisms require the same triple-set context".into(),
        ));
    }
    let nc = from.triples.len();
    let phi0_size = to.v0 * from.v0;
    let mut comp_off = Vec::with_capacity(nc);
    let mut total = phi0_size;
    for k in 0..nc {
        comp_off.push(total);
        total += to.kdim(k) * from.kdim(k);
    }
    let mut n_eq = 0;
    for (k, t) in from.triples.iter().enumerate() {
        if t.d >= 2 {
            n_eq += to.kdim(k) * from.kdim(k);
        }
        n_eq += t.m * to.kdim(k) * from.v0;
        n_eq += t.n * to.v0 * from.kdim(k);
    }
    let mut eqm = Matrix::zeros(&from.field, n_eq, total);
    let mut row = 0;
    for (k, t) in from.triples.iter().enumerate() {
        let df = from.kdim(k);
        let dt = to.kdim(k);
        if t.d >= 2 {
            let j_from = from.action_matrix(k);
            let j_to = to.action_matrix(k);
            for r in 0..dt {
                for c in 0..df {
                    for s in 0..df {
                        let v = j_from.get(s, c);
                        bump(&mut eqm, row, comp_off[k] + r * df + s, &v);
                    }
                    for s in 0..dt {
                        let v = j_to.get(r, s).neg();
                        bump(&mut eqm, row, comp_off[k] + s * df + c, &v);
                    }
                    row += 1;
                }
            }
        }
        for i in 0..t.m {
            let a = &from.alphas[k][i];
            let a2 = &to.alphas[k][i];
            for r in 0..dt {
                for c in 0..from.v0 {
                    for s in 0..df {
                        let v = a.get(s, c);
                        bump(&mut eqm, row, comp_off[k] + r * df + s, &v);
                    }
                    for s in 0..to.v0 {
                        let v = a2.get(r, s).neg();
                        bump(&mut eqm, row, s * from.v0 + c, &v);
                    }
                    row += 1;
                }
            }
        }
        for j in 0..t.n {
            let b = &from.betas[k][j];
            let b2 = &to.betas[k][j];
            for r in 0..to.v0 {
                for c in 0..df {
                    for s in 0..from.v0 {
                        let v = b.get(s, c);
                        bump(&mut eqm, row, r * from.v0 + s, &v);
                    }
                    for s in 0..dt {
                        let v = b2.get(r, s).neg();
                        bump(&mut eqm, row, comp_off[k] + s * df + c, &v);
                    }
                    row += 1;
                }
            }
        }
    }
    debug_assert_eq!(row, n_eq);
    let ker = eqm.kernel();
    let mut basis = Vec::with_capacity(ker.cols());
    for col in 0..ker.cols() {
        let phi0 = Matrix::from_fn(&from.field, to.v0, from.v0, |r, c| {
            ker.get(r * from.v0 + c, col)
        });
        let phik = (0..nc)
            .map(|k| {
                Matrix::from_fn(&from.field, to.kdim(k), from.kdim(k), |r, c| {
                    ker.get(comp_off[k] + r * from.kdim(k) + c, col)
                })
            })
            .collect();
        basis.push(HomTuple { phi0, phik });
    }
    Ok(basis)
}

/// Direct check that a tuple satisfies all morphism constraints.
pub fn is_morphism(phi: &HomTuple, from: &MunnModule, to: &MunnModule) -> bool {
    if phi.phi0.rows() != to.v0 || phi.phi0.cols() != from.v0 {
        return false;
    }
    if phi.phik.len() != from.triples.len() {
        return false;
    }
    for (k, t) in from.triples.iter().enumerate() {
        let pk = &phi.phik[k];
        if pk.rows() != to.kdim(k) || pk.cols() != from.kdim(k) {
            return false;
        }
        if t.d >= 2 && pk.mul(&from.action_matrix(k)) != to.action_matrix(k).mul(pk) {
            return false;
        }
        for i in 0..t.m {
            if pk.mul(&from.alphas[k][i]) != to.alphas[k][i].mul(&phi.phi0) {
                return false;
            }
        }
        for j in 0..t.n {
            if phi.phi0.mul(&from.betas[k][j]) != to.betas[k][j].mul(pk) {
                return false;
            }
        }
    }
    true
}

/// Membership in the ideal 𝔍: every component `φ_k` vanishes, `φ_0` kills
/// `V_+`, and the image of `φ_0` lands inside `V'_+`.
pub fn in_ideal_j(phi: &HomTuple, from: &MunnModule, to: &MunnModule) -> bool {
    if phi.phik.iter().any(|m| !m.is_zero()) {
        return false;
    }
    if !phi.phi0.mul(&from.v_plus_basis()).is_zero() {
        return false;
    }
    to.v_plus_basis().solve(&phi.phi0).is_some()
}

/// The image of a module morphism under the translation: the corestriction
/// to the plus spaces, the induced map on the minus quotients, and the
/// component maps unchanged.
#[derive(Clone, Debug, PartialEq)]
pub struct GraphMorphism {
    pub phi_plus: Matrix,
    pub phi_minus: Matrix,
    pub phik: Vec<Matrix>,
}

impl GraphMorphism {
    pub fn is_zero(&self) -> bool {
        self.phi_plus.is_zero() && self.phi_minus.is_zero() && self.phik.iter().all(Matrix::is_zero)
    }
}

pub fn graph_morphism(phi: &HomTuple, from: &MunnModule, to: &MunnModule) -> Result<GraphMorphism> {
    if !is_morphism(phi, from, to) {
        return Err(Error::InvalidInput(
            "the tuple is not a morphism between the given modules".into(),
        ));
    }
    let s = from.v_plus_basis();
    let s2 = to.v_plus_basis();
    // φ_0 maps Σ Im β into Σ Im β', so the corestriction exists.
    let phi_plus = s2.solve(&phi.phi0.mul(&s)).ok_or_else(|| {
        Error::InternalInvariantViolation("a morphism failed to preserve the beta span".into())
    })?;
    let u = standard_complement(&from.field, from.v0, &pivot_rows(&s));
    let u2 = standard_complement(&to.field, to.v0, &pivot_rows(&s2));
    let m2 = s2.hstack(&u2);
    let inv = m2.inverse().ok_or_else(|| {
        Error::InternalInvariantViolation("basis completion was not invertible".into())
    })?;
    let coords = inv.mul(&phi.phi0.mul(&u));
    let minus_rows: Vec<usize> = (s2.cols()..to.v0).collect();
    let all_cols: Vec<usize> = (0..coords.cols()).collect();
    let phi_minus = coords.submatrix(&minus_rows, &all_cols);
    Ok(GraphMorphism {
        phi_plus,
        phi_minus,
        phik: phi.phik.clone(),
    })
}

/// Round trip through the translation: returns the rebuilt module together
/// with an explicit isomorphism from it back onto `v` (`φ_0` the basis
/// completion `[S|U]`, component maps the identity).
pub fn mod_plus_round_trip(v: &MunnModule) -> Result<(MunnModule, HomTuple)> {
    let w = v.to_graph_rep(false)?;
    let back = from_graph_rep(&w);
    let s = v.v_plus_basis();
    let u = standard_complement(&v.field, v.v0, &pivot_rows(&s));
    let witness = HomTuple {
        phi0: s.hstack(&u),
        phik: (0..v.triples.len())
            .map(|k| Matrix::identity(&v.field, v.kdim(k)))
            .collect(),
    };
    if !is_morphism(&witness, &back, v) || !witness.is_invertible() {
        return Err(Error::InternalInvariantViolation(
            "the canonical round-trip witness failed to be an isomorphism".into(),
        ));
    }
    Ok((back, witness))
}

/// Rows holding the leading entry of each column of a canonical basis.
fn pivot_rows(basis: &Matrix) -> Vec<usize> {
    (0..basis.cols())
        .map(|j| {
            (0..basis.rows())
                .find(|&i| !basis.entry_is_zero(i, j))
                .expect("a basis column cannot vanish")
        })
        .collect()
}

/// Standard-basis columns at the rows *not* listed, giving a complement of
/// the span of a canonical basis with those pivot rows.
fn standard_complement(field: &FiniteField, n: usize, pivots: &[usize]) -> Matrix {
    let free: Vec<usize> = (0..n).filter(|r| !pivots.contains(r)).collect();
    let mut out = Matrix::zeros(field, n, free.len());
    let one = field.one();
    for (j, &r) in free.iter().enumerate() {
        out.set(r, j, &one);
    }
    out
}

fn action_matrix_for(field: &FiniteField, ext: &FiniteField, w: usize) -> Matrix {
    let d = ext.degree();
    if d == 1 {
        return Matrix::identity(field, w);
    }
    let modulus = ext.modulus();
    let companion = Matrix::from_fn(field, d, d, |i, j| {
        if j + 1 == d {
            field.from_u64(modulus[i]).neg()
        } else if i == j + 1 {
            field.one()
        } else {
            field.zero()
        }
    });
    let mut out = Matrix::zeros(field, w * d, w * d);
    for blk in 0..w {
        out.paste(blk * d, blk * d, &companion);
    }
    out
}

fn pow_saturating(base: u64, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}

/// Run `f` on every coefficient vector of length `t` over the field until it
/// returns true; reports whether any did.
fn any_combination(field: &FiniteField, t: usize, mut f: impl FnMut(&[FieldElement]) -> bool) -> bool {
    let elems: Vec<FieldElement> = field.elements().collect();
    let q = elems.len();
    let mut digits = vec![0usize; t];
    loop {
        let coeffs: Vec<FieldElement> = digits.iter().map(|&i| elems[i].clone()).collect();
        if f(&coeffs) {
            return true;
        }
        let mut pos = 0;
        while pos < t {
            digits[pos] += 1;
            if digits[pos] < q {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
        if pos == t {
            return false;
        }
    }
}

fn combine(basis: &[HomTuple], coeffs: &[FieldElement], from: &MunnModule, to: &MunnModule) -> HomTuple {
    let mut acc = HomTuple::zero(from, to);
    for (e, c) in basis.iter().zip(coeffs) {
        if !c.is_zero() {
            acc = acc.add(&e.scale(c));
        }
    }
    acc
}

const IDEMPOTENT_SEARCH_LIMIT: u128 = 1 << 16;

/// Brute-force oracle: a nonzero module is indecomposable exactly when its
/// endomorphism algebra contains no idempotent besides zero and the
/// identity.  `None` when the search space exceeds the exhaustive limit.
pub fn is_indecomposable(v: &MunnModule) -> Result<Option<bool>> {
    if v.is_zero_module() {
        return Ok(Some(false));
    }
    let basis = hom_space(v, v)?;
    if pow_saturating(v.field.order(), basis.len()) > IDEMPOTENT_SEARCH_LIMIT {
        return Ok(None);
    }
    let found = any_combination(&v.field, basis.len(), |coeffs| {
        let phi = combine(&basis, coeffs, v, v);
        !phi.is_zero() && !phi.is_identity() && phi.compose(&phi) == phi
    });
    Ok(Some(!found))
}

/// Isomorphism test via an exhaustive search for an invertible morphism.
/// `None` when the Hom space is too large to sweep.
pub fn are_isomorphic(a: &MunnModule, b: &MunnModule) -> Result<Option<bool>> {
    if a.v0 != b.v0 || a.wk != b.wk {
        return Ok(Some(false));
    }
    let basis = hom_space(a, b)?;
    if pow_saturating(a.field.order(), basis.len()) > IDEMPOTENT_SEARCH_LIMIT {
        return Ok(None);
    }
    let found = any_combination(&a.field, basis.len(), |coeffs| {
        combine(&basis, coeffs, a, b).is_invertible()
    });
    Ok(Some(found))
}

/// Caps for the exhaustive census.
#[derive(Clone, Copy, Debug)]
pub struct EnumerationCaps {
    /// Largest `V_0` dimension.
    pub v0_max: usize,
    /// Largest `F_k`-dimension of any component space.
    pub wk_max: usize,
    /// Largest number of matrices materialized over the whole run.
    pub budget: u64,
}

impl Default for EnumerationCaps {
    fn default() -> Self {
        Self {
            v0_max: 3,
            wk_max: 2,
            budget: 10_000_000,
        }
    }
}

/// Result of the exhaustive census: one representative per isomorphism
/// class of indecomposables within the caps.
#[derive(Clone, Debug)]
pub struct Census {
    pub caps: EnumerationCaps,
    pub representatives: Vec<MunnModule>,
}

impl Census {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }

    /// `(V_0 dimension, component dimensions)` per class.
    pub fn dimension_summary(&self) -> Vec<(usize, Vec<usize>)> {
        self.representatives
            .iter()
            .map(|v| (v.v0, v.wk.clone()))
            .collect()
    }
}

/// Exhaustive enumeration of valid modules within the caps over F_2 or F_3,
/// deduplicated by isomorphism and filtered to indecomposables.  The
/// dimension grid is partitioned across worker threads; classes never span
/// two grid cells (isomorphic modules share dimensions), so the merge is a
/// concatenation in grid order.
pub fn enumerate_indecomposables(
    field: &FiniteField,
    triples: &TripleSet,
    caps: &EnumerationCaps,
) -> Result<Census> {
    if !field.is_prime_field() || field.order() > 3 {
        return Err(Error::InvalidInput(
            "the census sweep supports F_2 and F_3 only".into(),
        ));
    }
    let comp_fields = component_fields(field, triples)?;
    let cells = dimension_cells(triples.len(), caps);
    let q = field.order();
    let mut cost: u128 = 0;
    for (v0, wk) in &cells {
        let mut entries = 0usize;
        let mut maps = 0usize;
        for (k, t) in triples.iter().enumerate() {
            let kdim = wk[k] * t.d;
            entries += t.m * kdim * v0 + t.n * v0 * kdim;
            maps += t.m + t.n;
        }
        let tuples = pow_saturating(q, entries);
        cost = cost.saturating_add(tuples.saturating_mul(maps.max(1) as u128));
    }
    if cost > caps.budget as u128 {
        return Err(Error::BudgetExceeded(format!(
            "census would materialize about {} matrices, over the budget of {}",
            cost, caps.budget
        )));
    }
    let workers = cells.len().min(8).max(1);
    let mut slots: Vec<Option<Result<Vec<MunnModule>>>> = Vec::new();
    slots.resize_with(cells.len(), || None);
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for w in 0..workers {
            let cells = &cells;
            let comp_fields = &comp_fields;
            handles.push(scope.spawn(move || {
                let mut out = Vec::new();
                for idx in (w..cells.len()).step_by(workers) {
                    let (v0, wk) = &cells[idx];
                    out.push((idx, census_cell(field, triples, comp_fields, *v0, wk)));
                }
                out
            }));
        }
        for h in handles {
            for (idx, res) in h.join().expect("census worker panicked") {
                slots[idx] = Some(res);
            }
        }
    });
    let mut representatives = Vec::new();
    for slot in slots {
        let found = slot.expect("every grid cell is assigned to a worker")?;
        representatives.extend(found);
    }
    Ok(Census {
        caps: *caps,
        representatives,
    })
}

fn dimension_cells(nc: usize, caps: &EnumerationCaps) -> Vec<(usize, Vec<usize>)> {
    let mut cells = Vec::new();
    for v0 in 0..=caps.v0_max {
        let mut wk = vec![0usize; nc];
        loop {
            cells.push((v0, wk.clone()));
            let mut pos = 0;
            while pos < nc {
                wk[pos] += 1;
                if wk[pos] <= caps.wk_max {
                    break;
                }
                wk[pos] = 0;
                pos += 1;
            }
            if pos == nc {
                break;
            }
        }
    }
    cells
}

fn census_cell(
    field: &FiniteField,
    triples: &TripleSet,
    comp_fields: &[FiniteField],
    v0: usize,
    wk: &[usize],
) -> Result<Vec<MunnModule>> {
    // All map shapes in a fixed order: alphas component-major, then betas.
    let mut shapes: Vec<(usize, usize)> = Vec::new();
    for (k, t) in triples.iter().enumerate() {
        let kdim = wk[k] * t.d;
        for _ in 0..t.m {
            shapes.push((kdim, v0));
        }
    }
    let alpha_count = shapes.len();
    for (k, t) in triples.iter().enumerate() {
        let kdim = wk[k] * t.d;
        for _ in 0..t.n {
            shapes.push((v0, kdim));
        }
    }
    let total_entries: usize = shapes.iter().map(|(r, c)| r * c).sum();
    let q = field.order();
    let mut digits = vec![0u64; total_entries];
    let mut found: Vec<(ClassKey, MunnModule)> = Vec::new();
    loop {
        let mut mats = Vec::with_capacity(shapes.len());
        let mut base = 0usize;
        for &(r, c) in &shapes {
            mats.push(Matrix::from_fn(field, r, c, |i, j| {
                field.from_u64(digits[base + i * c + j])
            }));
            base += r * c;
        }
        let betas_flat = mats.split_off(alpha_count);
        let alphas = regroup(mats, triples.iter().map(|t| t.m));
        let betas = regroup(betas_flat, triples.iter().map(|t| t.n));
        match MunnModule::make_with_fields(
            field,
            triples,
            comp_fields.to_vec(),
            v0,
            wk,
            alphas,
            betas,
        ) {
            Err(Error::RelationViolation(_)) => {}
            Err(e) => return Err(e),
            Ok(v) => match is_indecomposable(&v)? {
                None => {
                    return Err(Error::BudgetExceeded(
                        "an endomorphism algebra grew past the exhaustive search limit".into(),
                    ))
                }
                Some(false) => {}
                Some(true) => {
                    let key = class_key(&v);
                    let mut known = false;
                    for (other_key, other) in &found {
                        if *other_key != key {
                            continue;
                        }
                        match are_isomorphic(&v, other)? {
                            None => {
                                return Err(Error::BudgetExceeded(
                                    "an isomorphism search grew past the exhaustive limit".into(),
                                ))
                            }
                            Some(true) => {
                                known = true;
                                break;
                            }
                            Some(false) => {}
                        }
                    }
                    if !known {
                        found.push((key, v));
                    }
                }
            },
        }
        let mut pos = 0;
        while pos < total_entries {
            digits[pos] += 1;
            if digits[pos] < q {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
        if pos == total_entries {
            break;
        }
    }
    Ok(found.into_iter().map(|(_, v)| v).collect())
}

fn regroup(flat: Vec<Matrix>, counts: impl Iterator<Item = usize>) -> Vec<Vec<Matrix>> {
    let mut it = flat.into_iter();
    counts
        .map(|n| (&mut it).take(n).collect::<Vec<_>>())
        .collect()
}

/// Cheap isomorphism invariants used to prune the search: the rank of every
/// map (order matters — morphisms match maps by index), the stacked ranks,
/// and Mod⁺ membership.
type ClassKey = (Vec<usize>, usize, usize, bool);

fn class_key(v: &MunnModule) -> ClassKey {
    let mut ranks = Vec::new();
    for k in 0..v.triples.len() {
        for a in v.alphas(k) {
            ranks.push(a.rank());
        }
        for b in v.betas(k) {
            ranks.push(b.rank());
        }
    }
    let plus = v.v_plus_basis().cols();
    let ker = v.kernel_intersection().cols();
    (ranks, plus, ker, v.is_in_mod_plus())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f2() -> FiniteField {
        FiniteField::prime(2).unwrap()
    }

    fn standard_triples() -> TripleSet {
        TripleSet::from_raw(&[(1, 1, 1)]).unwrap()
    }

    /// V_0 = 𝕜², V_1 = 𝕜, β the first coordinate, α the second.
    fn worked_example(field: &FiniteField) -> MunnModule {
        MunnModule::make(
            field,
            &standard_triples(),
            2,
            &[1],
            vec![vec![Matrix::from_scalar_rows(field, &[vec![0, 1]])]],
            vec![vec![Matrix::from_scalar_rows(field, &[vec![1], vec![0]])]],
        )
        .unwrap()
    }

    fn zero_multiplication(field: &FiniteField) -> MunnModule {
        MunnModule::make(
            field,
            &standard_triples(),
            1,
            &[0],
            vec![vec![Matrix::zeros(field, 0, 1)]],
            vec![vec![Matrix::zeros(field, 1, 0)]],
        )
        .unwrap()
    }

    fn component_simple(field: &FiniteField) -> MunnModule {
        MunnModule::make(
            field,
            &standard_triples(),
            0,
            &[1],
            vec![vec![Matrix::zeros(field, 1, 0)]],
            vec![vec![Matrix::zeros(field, 0, 1)]],
        )
        .unwrap()
    }

    #[test]
    fn make_validates_the_worked_example() {
        let f = f2();
        let v = worked_example(&f);
        assert_eq!(v.v0_dim(), 2);
        assert_eq!(v.component_dims(), &[1]);
        assert!(v.is_in_mod_plus());
    }

    #[test]
    fn relation_violation_is_detected() {
        let f = f2();
        let err = MunnModule::make(
            &f,
            &standard_triples(),
            2,
            &[1],
            vec![vec![Matrix::from_scalar_rows(&f, &[vec![1, 0]])]],
            vec![vec![Matrix::from_scalar_rows(&f, &[vec![1], vec![0]])]],
        )
        .unwrap_err();
        assert!(matches!(err, Error::RelationViolation(_)));
    }

    #[test]
    fn shape_mismatch_is_detected() {
        let f = f2();
        let err = MunnModule::make(
            &f,
            &standard_triples(),
            2,
            &[1],
            vec![vec![Matrix::zeros(&f, 2, 2)]],
            vec![vec![Matrix::zeros(&f, 2, 1)]],
        )
        .unwrap_err();
        assert!(matches!(err, Error::ShapeMismatch(_)));
        let err = MunnModule::make(&f, &standard_triples(), 2, &[1], vec![vec![]], vec![vec![]])
            .unwrap_err();
        assert!(matches!(err, Error::ShapeMismatch(_)));
    }

    #[test]
    fn zero_module_is_valid_and_in_mod_plus() {
        let f = f2();
        let z = MunnModule::zero(&f, &standard_triples()).unwrap();
        assert!(z.is_zero_module());
        assert!(z.is_in_mod_plus());
    }

    #[test]
    fn mod_plus_membership_examples() {
        let f = f2();
        assert!(worked_example(&f).is_in_mod_plus());
        // One-dimensional V_0 with zero maps: 0 = Σ Im β ≠ ∩ Ker α = V_0.
        assert!(!zero_multiplication(&f).is_in_mod_plus());
    }

    #[test]
    fn to_graph_rep_of_the_worked_example() {
        let f = f2();
        let w = worked_example(&f).to_graph_rep(true).unwrap();
        assert_eq!(w.dimension_vector(), vec![1, 1, 1]);
        assert_eq!(w.alphas(0)[0], Matrix::identity(&f, 1));
        assert_eq!(w.betas(0)[0], Matrix::identity(&f, 1));
        assert!(w.is_in_rep_plus());
    }

    #[test]
    fn strict_mode_rejects_zero_multiplication() {
        let f = f2();
        let v = zero_multiplication(&f);
        assert!(matches!(v.to_graph_rep(true), Err(Error::NotInModPlus(_))));
        let w = v.to_graph_rep(false).unwrap();
        assert_eq!(w.v_plus_dim(), 0);
        assert_eq!(w.v_minus_dim(), 1);
        assert!(!w.is_in_rep_plus());
    }

    #[test]
    fn from_graph_rep_identity_maps_give_the_worked_example() {
        let f = f2();
        let w = GraphRep::make(
            &f,
            &standard_triples(),
            1,
            1,
            &[1],
            vec![vec![Matrix::identity(&f, 1)]],
            vec![vec![Matrix::identity(&f, 1)]],
        )
        .unwrap();
        assert_eq!(from_graph_rep(&w), worked_example(&f));
    }

    #[test]
    fn plus_only_point_rebuilds_as_zero_multiplication() {
        let f = f2();
        let w = GraphRep::make(
            &f,
            &standard_triples(),
            1,
            0,
            &[0],
            vec![vec![Matrix::zeros(&f, 0, 0)]],
            vec![vec![Matrix::zeros(&f, 1, 0)]],
        )
        .unwrap();
        let v = from_graph_rep(&w);
        assert_eq!(v.v0_dim(), 1);
        assert!(!v.is_in_mod_plus());
        assert_eq!(v, zero_multiplication(&f));
    }

    #[test]
    fn phi_psi_is_the_identity_on_rep_plus() {
        let f = f2();
        let w1 = GraphRep::make(
            &f,
            &standard_triples(),
            1,
            1,
            &[1],
            vec![vec![Matrix::identity(&f, 1)]],
            vec![vec![Matrix::identity(&f, 1)]],
        )
        .unwrap();
        let w2 = GraphRep::make(
            &f,
            &standard_triples(),
            1,
            1,
            &[2],
            vec![vec![Matrix::from_scalar_rows(&f, &[vec![0], vec![1]])]],
            vec![vec![Matrix::from_scalar_rows(&f, &[vec![1, 0]])]],
        )
        .unwrap();
        for w in [w1, w2] {
            assert!(w.is_in_rep_plus());
            let back = from_graph_rep(&w).to_graph_rep(true).unwrap();
            assert_eq!(back, w);
        }
    }

    #[test]
    fn psi_phi_round_trip_has_invertible_witness() {
        let f = f2();
        for v in [worked_example(&f), zero_multiplication(&f), component_simple(&f)] {
            let (back, witness) = mod_plus_round_trip(&v).unwrap();
            assert!(is_morphism(&witness, &back, &v));
            assert!(witness.is_invertible());
        }
    }

    #[test]
    fn end_of_the_worked_example_has_dimension_two() {
        let f = f2();
        let v = worked_example(&f);
        let basis = hom_space(&v, &v).unwrap();
        assert_eq!(basis.len(), 2);
        assert!(is_morphism(&HomTuple::identity(&v), &v, &v));
        for e in &basis {
            assert!(is_morphism(e, &v, &v));
        }
    }

    #[test]
    fn hom_between_disjoint_simples_is_zero() {
        let f = f2();
        let s0 = zero_multiplication(&f);
        let s1 = component_simple(&f);
        assert!(hom_space(&s0, &s1).unwrap().is_empty());
        assert!(hom_space(&s1, &s0).unwrap().is_empty());
    }

    #[test]
    fn ideal_membership_examples() {
        let f = f2();
        let v = worked_example(&f);
        assert!(!in_ideal_j(&HomTuple::identity(&v), &v, &v));
        assert!(in_ideal_j(&HomTuple::zero(&v, &v), &v, &v));
        // The End basis splits as scalars plus the map sending V_0 onto V_+
        // through the quotient; the latter generates the ideal part.
        let basis = hom_space(&v, &v).unwrap();
        let nil: Vec<&HomTuple> = basis.iter().filter(|e| e.phik[0].is_zero()).collect();
        assert_eq!(nil.len(), 1);
        assert!(in_ideal_j(nil[0], &v, &v));
        assert!(nil[0].compose(nil[0]).is_zero());
    }

    #[test]
    fn translation_kills_exactly_the_ideal() {
        let f = f2();
        let v = worked_example(&f);
        let basis = hom_space(&v, &v).unwrap();
        let checked = !any_combination(&f, basis.len(), |coeffs| {
            let phi = combine(&basis, coeffs, &v, &v);
            let image = graph_morphism(&phi, &v, &v).unwrap();
            image.is_zero() != in_ideal_j(&phi, &v, &v)
        });
        assert!(checked);
    }

    #[test]
    fn indecomposability_examples() {
        let f = f2();
        assert_eq!(is_indecomposable(&component_simple(&f)).unwrap(), Some(true));
        assert_eq!(is_indecomposable(&worked_example(&f)).unwrap(), Some(true));
        // V_0 = 𝕜 and V_1 = 𝕜 with zero maps splits into two simples.
        let split = MunnModule::make(
            &f,
            &standard_triples(),
            1,
            &[1],
            vec![vec![Matrix::zeros(&f, 1, 1)]],
            vec![vec![Matrix::zeros(&f, 1, 1)]],
        )
        .unwrap();
        assert_eq!(is_indecomposable(&split).unwrap(), Some(false));
    }

    #[test]
    fn census_for_the_standard_triple_finds_five_classes() {
        let f = f2();
        let caps = EnumerationCaps {
            v0_max: 3,
            wk_max: 2,
            ..Default::default()
        };
        let census = enumerate_indecomposables(&f, &standard_triples(), &caps).unwrap();
        assert_eq!(census.count(), 5);
        let mut dims = census.dimension_summary();
        dims.sort();
        assert_eq!(
            dims,
            vec![
                (0, vec![1]),
                (1, vec![0]),
                (1, vec![1]),
                (1, vec![1]),
                (2, vec![1])
            ]
        );
    }

    #[test]
    fn census_for_the_one_sided_triple_finds_three_classes() {
        let f = f2();
        let triples = TripleSet::from_raw(&[(1, 1, 0)]).unwrap();
        let caps = EnumerationCaps {
            v0_max: 2,
            wk_max: 2,
            ..Default::default()
        };
        let census = enumerate_indecomposables(&f, &triples, &caps).unwrap();
        assert_eq!(census.count(), 3);
    }

    #[test]
    fn empty_caps_leave_an_empty_census() {
        let f = f2();
        let caps = EnumerationCaps {
            v0_max: 0,
            wk_max: 0,
            ..Default::default()
        };
        let census = enumerate_indecomposables(&f, &standard_triples(), &caps).unwrap();
        assert_eq!(census.count(), 0);
    }

    #[test]
    fn census_budget_is_enforced() {
        let f = f2();
        let caps = EnumerationCaps {
            v0_max: 3,
            wk_max: 2,
            budget: 5,
        };
        let err = enumerate_indecomposables(&f, &standard_triples(), &caps).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded(_)));
    }

    #[test]
    fn census_requires_a_tiny_prime_field() {
        let f = FiniteField::prime(5).unwrap();
        let err =
            enumerate_indecomposables(&f, &standard_triples(), &EnumerationCaps::default())
                .unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }

    #[test]
    fn nonsplit_component_end_is_one_dimensional() {
        // One component with a quadratic division part: V_1 is a line over
        // F_4, stored as a 2-dimensional 𝕜-space with the companion action.
        let f = f2();
        let triples = TripleSet::from_raw(&[(2, 1, 1)]).unwrap();
        let v = MunnModule::make(
            &f,
            &triples,
            1,
            &[1],
            vec![vec![Matrix::from_scalar_rows(&f, &[vec![1], vec![0]])]],
            vec![vec![Matrix::zeros(&f, 1, 2)]],
        )
        .unwrap();
        assert!(v.is_in_mod_plus());
        let basis = hom_space(&v, &v).unwrap();
        assert_eq!(basis.len(), 1);
        assert_eq!(is_indecomposable(&v).unwrap(), Some(true));
        let (back, witness) = mod_plus_round_trip(&v).unwrap();
        assert!(is_morphism(&witness, &back, &v));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn translation_round_trips_random_representations(
            v_plus in 0usize..3,
            v_minus in 0usize..3,
            w in 0usize..3,
            bits in prop::collection::vec(0u64..2, 18),
        ) {
            let f = f2();
            let triples = standard_triples();
            let alpha = Matrix::from_fn(&f, w, v_minus, |i, j| f.from_u64(bits[i * 3 + j]));
            let beta = Matrix::from_fn(&f, v_plus, w, |i, j| f.from_u64(bits[9 + i * 3 + j]));
            let rep = GraphRep::make(&f, &triples, v_plus, v_minus, &[w],
                vec![vec![alpha]], vec![vec![beta]]).unwrap();
            let v = from_graph_rep(&rep);
            prop_assert_eq!(v.is_in_mod_plus(), rep.is_in_rep_plus());
            let (back, witness) = mod_plus_round_trip(&v).unwrap();
            prop_assert!(is_morphism(&witness, &back, &v));
            prop_assert!(witness.is_invertible());
            if rep.is_in_rep_plus() {
                let again = v.to_graph_rep(true).unwrap();
                prop_assert_eq!(again, rep);
            }
        }
    }
}
