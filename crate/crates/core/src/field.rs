//! Finite fields `F_{p^d}` with exact arithmetic.
//!
//! A field is described by its characteristic `p` (a prime), its degree `d`
//! over the prime field, and a monic irreducible modulus of degree `d` with
//! coefficients in `F_p`. Elements are coefficient vectors of length `d`
//! (ascending powers of the generator), reduced mod `p`.
//!
//! Construction is deterministic: [`FiniteField::extension`] scans monic
//! polynomials in lexicographic coefficient order (constant coefficient
//! varying fastest is *not* used; see the function docs) and takes the first
//! irreducible one, so the same `(p, d)` always yields the same field. Degree
//! one always uses the modulus `x`, making the prime field canonical.
//!
//! Scalars fit in `u64`; everything here is desk-scale exact arithmetic, no
//! asymptotics heroics.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Shared immutable field description.
#[derive(Debug, PartialEq, Eq)]
struct FieldData {
    characteristic: u64,
    degree: usize,
    /// Monic modulus, ascending coefficients, length `degree + 1`,
    /// `modulus[degree] == 1`.
    modulus: Vec<u64>,
}

/// A finite field `F_{p^d}`, cheap to clone and compare.
#[derive(Clone)]
pub struct FiniteField {
    data: Arc<FieldData>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data) || self.data == other.data
    }
}
impl Eq for FiniteField {}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.order_string())
    }
}

/// Deterministic trial-division primality (inputs are desk-scale).
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut k = 3u64;
    while k.checked_mul(k).map_or(false, |sq| sq <= n) {
        if n % k == 0 {
            return false;
        }
        k += 2;
    }
    true
}

impl FiniteField {
    /// The prime field `F_p`. Its modulus is the polynomial `x`, so that the
    /// degree-1 case is canonical.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        Ok(FiniteField {
            data: Arc::new(FieldData {
                characteristic: p,
                degree: 1,
                modulus: vec![0, 1],
            }),
        })
    }

    /// `F_{p^d}` with the lexicographically first monic irreducible modulus.
    ///
    /// The scan orders monic `x^d + c_{d-1} x^{d-1} + ... + c_0` by the tuple
    /// `(c_{d-1}, ..., c_0)` ascending from all zeros. For `d == 1` the first
    /// candidate is `x` itself, which is irreducible, so this agrees with
    /// [`FiniteField::prime`].
    pub fn extension(p: u64, d: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        if d == 0 {
            return Err(Error::InvalidInput("extension degree must be positive".into()));
        }
        if d == 1 {
            return Self::prime(p);
        }
        let count = (p as u128).checked_pow(d as u32).ok_or_else(|| {
            Error::InvalidInput(format!("field order {p}^{d} out of range"))
        })?;
        for index in 0..count {
            // Decode `index` base p, least significant digit = c_0, so the
            // scan runs through monic polynomials in ascending value and the
            // canonical modulus is the numerically smallest irreducible one.
            let mut coeffs = vec![0u64; d + 1];
            coeffs[d] = 1;
            let mut rest = index;
            for slot in 0..d {
                let digit = (rest % p as u128) as u64;
                rest /= p as u128;
                coeffs[slot] = digit;
            }
            let candidate = FiniteField {
                data: Arc::new(FieldData {
                    characteristic: p,
                    degree: d,
                    modulus: coeffs.clone(),
                }),
            };
            // Irreducibility is tested over the prime field.
            let prime = Self::prime(p)?;
            let poly = crate::poly::Polynomial::from_scalar_coeffs(&prime, &coeffs);
            if poly.is_irreducible() {
                return Ok(candidate);
            }
        }
        Err(Error::InternalInvariantViolation(format!(
            "no irreducible monic polynomial of degree {d} over F_{p}"
        )))
    }

    /// `F_p[x]/(modulus)` for a caller-supplied monic irreducible modulus
    /// (ascending coefficients). Used when a field arises with a natural
    /// generator whose minimal polynomial is not the canonical one.
    pub fn with_modulus(p: u64, modulus: &[u64]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        if modulus.len() < 2 {
            return Err(Error::InvalidInput("modulus must have positive degree".into()));
        }
        let d = modulus.len() - 1;
        let reduced: Vec<u64> = modulus.iter().map(|c| c % p).collect();
        if reduced[d] != 1 {
            return Err(Error::InvalidInput("modulus must be monic".into()));
        }
        let prime = Self::prime(p)?;
        let poly = crate::poly::Polynomial::from_scalar_coeffs(&prime, &reduced);
        if !poly.is_irreducible() {
            return Err(Error::InvalidInput("modulus is reducible".into()));
        }
        Ok(FiniteField {
            data: Arc::new(FieldData {
                characteristic: p,
                degree: d,
                modulus: reduced,
            }),
        })
    }

    pub fn characteristic(&self) -> u64 {
        self.data.characteristic
    }

    pub fn degree(&self) -> usize {
        self.data.degree
    }

    /// Field order `p^d` (desk-scale inputs; panics on overflow).
    pub fn order(&self) -> u64 {
        let mut n = 1u64;
        for _ in 0..self.data.degree {
            n = n.checked_mul(self.data.characteristic).expect("field order overflow");
        }
        n
    }

    fn order_string(&self) -> String {
        if self.data.degree == 1 {
            format!("{}", self.data.characteristic)
        } else {
            format!("{}^{}", self.data.characteristic, self.data.degree)
        }
    }

    /// Monic modulus, ascending coefficients (length `degree + 1`).
    pub fn modulus(&self) -> &[u64] {
        &self.data.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.data.degree == 1
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            coeffs: vec![0; self.data.degree],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_u64(1)
    }

    /// Embed an integer scalar (the image of `n · 1`).
    pub fn from_u64(&self, n: u64) -> FieldElement {
        let mut coeffs = vec![0; self.data.degree];
        coeffs[0] = n % self.data.characteristic;
        FieldElement {
            field: self.clone(),
            coeffs,
        }
    }

    /// The class of `x` mod the modulus: a generator of the extension over
    /// the prime field. For the prime field itself (modulus `x`) this is 0.
    pub fn generator(&self) -> FieldElement {
        let mut coeffs = vec![0; self.data.degree];
        if self.data.degree > 1 {
            coeffs[1] = 1;
        }
        FieldElement {
            field: self.clone(),
            coeffs,
        }
    }

    /// Element from ascending coefficients over the prime field
    /// (length at most `degree`; shorter vectors are zero-padded).
    pub fn element(&self, coeffs: &[u64]) -> FieldElement {
        assert!(coeffs.len() <= self.data.degree, "too many coefficients");
        let mut c = vec![0; self.data.degree];
        for (i, v) in coeffs.iter().enumerate() {
            c[i] = v % self.data.characteristic;
        }
        FieldElement {
            field: self.clone(),
            coeffs: c,
        }
    }

    /// Iterate all field elements in lexicographic coefficient order
    /// (constant coefficient fastest). Deterministic; used by exhaustive
    /// enumerations.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let p = self.data.characteristic;
        let d = self.data.degree;
        let total = self.order();
        (0..total).map(move |idx| {
            let mut coeffs = vec![0u64; d];
            let mut rest = idx;
            for slot in coeffs.iter_mut() {
                *slot = rest % p;
                rest /= p;
            }
            FieldElement {
                field: self.clone(),
                coeffs,
            }
        })
    }

    // ----- packed coefficient-slice arithmetic -------------------------------
    //
    // Matrices store elements as contiguous `degree`-long windows of u64.
    // These helpers operate on such windows without constructing
    // `FieldElement` values in hot loops.

    pub(crate) fn slice_is_zero(a: &[u64]) -> bool {
        a.iter().all(|&c| c == 0)
    }

    pub(crate) fn slice_add_assign(&self, a: &mut [u64], b: &[u64]) {
        let p = self.data.characteristic;
        for (x, y) in a.iter_mut().zip(b) {
            *x = (*x + *y) % p;
        }
    }

    /// a += λ·b
    pub(crate) fn slice_axpy(&self, a: &mut [u64], lambda: &[u64], b: &[u64]) {
        let tmp = self.slice_mul(lambda, b);
        self.slice_add_assign(a, &tmp);
    }

    pub(crate) fn slice_neg(&self, a: &[u64]) -> Vec<u64> {
        let p = self.data.characteristic;
        a.iter().map(|&c| (p - c) % p).collect()
    }

    pub(crate) fn slice_mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let p = self.data.characteristic as u128;
        let d = self.data.degree;
        if d == 1 {
            return vec![((a[0] as u128 * b[0] as u128) % p) as u64];
        }
        // Polynomial product then reduction by the monic modulus.
        let mut prod = vec![0u128; 2 * d - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u128 * y as u128) % p;
            }
        }
        let modulus = &self.data.modulus;
        for k in (d..2 * d - 1).rev() {
            let lead = prod[k];
            if lead == 0 {
                continue;
            }
            prod[k] = 0;
            // x^k ≡ x^{k-d} · (x^d mod modulus); subtract lead · modulus · x^{k-d}.
            for (j, &mc) in modulus.iter().enumerate().take(d) {
                let idx = k - d + j;
                let sub = (lead * mc as u128) % p;
                prod[idx] = (prod[idx] + p - sub) % p;
            }
        }
        prod.into_iter().take(d).map(|c| c as u64).collect()
    }

    /// Multiplicative inverse via extended Euclid in `F_p[x]` (or Fermat for
    /// the prime field). Panics on zero — callers check first.
    pub(crate) fn slice_inv(&self, a: &[u64]) -> Vec<u64> {
        assert!(!Self::slice_is_zero(a), "inverse of zero");
        let p = self.data.characteristic;
        if self.data.degree == 1 {
            return vec![mod_inverse(a[0], p)];
        }
        // Extended gcd of the element (as a polynomial) and the modulus.
        let mut r0: Vec<u64> = self.data.modulus.clone();
        let mut r1: Vec<u64> = trim(a.to_vec());
        let mut s0: Vec<u64> = vec![];
        let mut s1: Vec<u64> = vec![1];
        while !r1.is_empty() {
            let (q, rem) = poly_divrem_scalar(&r0, &r1, p);
            let s_new = poly_sub_scalar(&s0, &poly_mul_scalar(&q, &s1, p), p);
            r0 = r1;
            r1 = rem;
            s0 = s1;
            s1 = s_new;
        }
        // r0 = gcd, a unit scalar since the modulus is irreducible.
        assert_eq!(r0.len(), 1, "element not invertible mod irreducible modulus");
        let scale = mod_inverse(r0[0], p);
        let mut out = vec![0u64; self.data.degree];
        for (i, &c) in s0.iter().enumerate() {
            out[i] = (c as u128 * scale as u128 % p as u128) as u64;
        }
        out
    }
}

/// Inverse mod a prime via Fermat's little theorem.
fn mod_inverse(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of zero");
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u128;
    let mut b = base as u128 % p as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p as u128;
        }
        b = b * b % p as u128;
        exp >>= 1;
    }
    acc as u64
}

// Scalar polynomial helpers over F_p used only by the inversion routine.

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_mul_scalar(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u128 * y as u128) % p as u128;
        }
    }
    trim(out.into_iter().map(|c| c as u64).collect())
}

fn poly_sub_scalar(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = (x + p - y) % p;
    }
    trim(out)
}

fn poly_divrem_scalar(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = mod_inverse(b[db], p);
    if rem.len() < b.len() {
        return (vec![], trim(rem));
    }
    let mut quot = vec![0u64; rem.len() - db];
    while trim(rem.clone()).len() >= b.len() {
        rem = trim(rem);
        let dr = rem.len() - 1;
        let coeff = (rem[dr] as u128 * lead_inv as u128 % p as u128) as u64;
        let shift = dr - db;
        quot[shift] = coeff;
        for (j, &bc) in b.iter().enumerate() {
            let sub = (coeff as u128 * bc as u128 % p as u128) as u64;
            rem[shift + j] = (rem[shift + j] + p - sub) % p;
        }
    }
    (trim(quot), trim(rem))
}

/// An element of a [`FiniteField`]: coefficients over the prime field,
/// ascending powers of the generator, always reduced.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: FiniteField,
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        FiniteField::slice_is_zero(&self.coeffs)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    /// For prime-field elements, the scalar value.
    pub fn as_u64(&self) -> u64 {
        assert!(self.field.is_prime_field(), "as_u64 on extension element");
        self.coeffs[0]
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        self.check_same(other);
        let mut coeffs = self.coeffs.clone();
        self.field.slice_add_assign(&mut coeffs, &other.coeffs);
        FieldElement {
            field: self.field.clone(),
            coeffs,
        }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coeffs: self.field.slice_neg(&self.coeffs),
        }
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        self.check_same(other);
        FieldElement {
            field: self.field.clone(),
            coeffs: self.field.slice_mul(&self.coeffs, &other.coeffs),
        }
    }

    pub fn inv(&self) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coeffs: self.field.slice_inv(&self.coeffs),
        }
    }

    pub fn pow(&self, mut exp: u64) -> FieldElement {
        let mut acc = self.field.one();
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

    fn check_same(&self, other: &FieldElement) {
        assert!(self.field == other.field, "mixed-field arithmetic");
    }
}

impl fmt::Display for FieldElement {
    /// Prime-field elements print as integers, extension elements as
    /// polynomials in `a`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.is_prime_field() {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut terms: Vec<String> = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let t = match i {
                0 => format!("{c}"),
                1 if c == 1 => "a".to_string(),
                1 => format!("{c}a"),
                _ if c == 1 => format!("a^{i}"),
                _ => format!("{c}a^{i}"),
            };
            terms.push(t);
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
