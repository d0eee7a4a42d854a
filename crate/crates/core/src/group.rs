//! Finite groups as validated multiplication tables.
//!
//! A group is an `n × n` table over element indices `0..n`, checked for
//! closure, identity, inverses and associativity on construction; validation
//! failures carry the first offending witness. Elements are referred to by
//! index everywhere downstream, with index 0 always the identity for the
//! built-in constructors.
//!
//! Built-ins cover the catalog the classification suites sweep: cyclic,
//! dihedral and symmetric groups plus direct products, each with a canonical
//! element order so that results are reproducible run to run.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug)]
struct GroupData {
    order: usize,
    /// Row-major: table[a * order + b] = a·b.
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    name: String,
}

/// A finite group, cheap to clone.
#[derive(Clone)]
pub struct FiniteGroup {
    data: Arc<GroupData>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
            || (self.data.order == other.data.order && self.data.table == other.data.table)
    }
}
impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(order {})", self.data.name, self.data.order)
    }
}

impl FiniteGroup {
    /// Validate a multiplication table and wrap it as a group.
    pub fn from_table(table: &[Vec<usize>], name: impl Into<String>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if let Some((i, row)) = table.iter().enumerate().find(|(_, row)| row.len() != n) {
            return Err(Error::InvalidGroup(format!(
                "row {i} has length {} in a {n}-element table",
                row.len()
            )));
        }
        let flat: Vec<usize> = table.iter().flatten().copied().collect();
        if let Some(pos) = flat.iter().position(|&v| v >= n) {
            return Err(Error::InvalidGroup(format!(
                "entry at ({}, {}) is {} but only {n} elements exist",
                pos / n,
                pos % n,
                flat[pos]
            )));
        }
        let mul = |a: usize, b: usize| flat[a * n + b];
        // Identity: two-sided.
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mul(e, x) == x && mul(x, e) == x))
            .ok_or_else(|| Error::InvalidGroup("no two-sided identity".into()))?;
        // Inverses.
        let mut inverse = vec![0usize; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| mul(a, b) == identity && mul(b, a) == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))?;
        }
        // Associativity, with witness.
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails at ({a}, {b}, {c}): ({a}·{b})·{c} = {} but {a}·({b}·{c}) = {}",
                            mul(mul(a, b), c),
                            mul(a, mul(b, c))
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            data: Arc::new(GroupData {
                order: n,
                table: flat,
                identity,
                inverse,
                name: name.into(),
            }),
        })
    }

    /// Cyclic group of order n; element i is g^i.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("cyclic group order must be positive".into()));
        }
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table(&table, format!("C{n}"))
    }

    /// Dihedral group of order 2n: elements 0..n are rotations r^i, elements
    /// n..2n are reflections s·r^i, with s·r^i·s = r^{-i}.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("dihedral parameter must be positive".into()));
        }
        let order = 2 * n;
        let mut table = vec![vec![0usize; order]; order];
        // Encode a = (flip, rot): index = flip*n + rot.
        // (f1, r1)·(f2, r2) = (f1 xor f2, r2 + (-1)^{f2} r1)  for s r^i s = r^{-i}:
        // (s^{f1} r^{r1})(s^{f2} r^{r2}) = s^{f1+f2} r^{r2 + (-1)^{f2} r1}.
        for f1 in 0..2 {
            for r1 in 0..n {
                for f2 in 0..2 {
                    for r2 in 0..n {
                        let f = (f1 + f2) % 2;
                        let signed = if f2 == 1 { (n - r1) % n } else { r1 };
                        let r = (r2 + signed) % n;
                        table[f1 * n + r1][f2 * n + r2] = f * n + r;
                    }
                }
            }
        }
        Self::from_table(&table, format!("D{n}"))
    }

    /// Symmetric group on n letters, elements ordered lexicographically by
    /// one-line notation; composition (σ·τ)(x) = σ(τ(x)).
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 5 {
            return Err(Error::InvalidInput(
                "symmetric group supported for 1 ≤ n ≤ 5".into(),
            ));
        }
        let perms = permutations(n);
        let index_of = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let order = perms.len();
        let mut table = vec![vec![0usize; order]; order];
        for (i, s) in perms.iter().enumerate() {
            for (j, t) in perms.iter().enumerate() {
                let composed: Vec<usize> = (0..n).map(|x| s[t[x]]).collect();
                table[i][j] = index_of(&composed);
            }
        }
        Self::from_table(&table, format!("S{n}"))
    }

    /// Direct product with pair indices (a, b) ↦ a·|B| + b.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<Self> {
        let na = a.order();
        let nb = b.order();
        let order = na * nb;
        let mut table = vec![vec![0usize; order]; order];
        for a1 in 0..na {
            for b1 in 0..nb {
                for a2 in 0..na {
                    for b2 in 0..nb {
                        let i = a1 * nb + b1;
                        let j = a2 * nb + b2;
                        table[i][j] = a.mul(a1, a2) * nb + b.mul(b1, b2);
                    }
                }
            }
        }
        Self::from_table(&table, format!("{}x{}", a.name(), b.name()))
    }

    /// Parse a builtin description: `cyclic(n)`, `dihedral(n)`,
    /// `symmetric(n)`, `klein`, or products joined with `x`, e.g.
    /// `cyclic(2) x cyclic(4)`.
    pub fn builtin(spec: &str) -> Result<Self> {
        let parts: Vec<&str> = spec.split('x').map(str::trim).collect();
        if parts.len() > 1 {
            let mut acc = Self::builtin(parts[0])?;
            for part in &parts[1..] {
                acc = Self::direct_product(&acc, &Self::builtin(part)?)?;
            }
            return Ok(acc);
        }
        let s = spec.trim();
        if s == "klein" {
            let c2 = Self::cyclic(2)?;
            return Self::direct_product(&c2, &c2);
        }
        let (kind, arg) = s
            .strip_suffix(')')
            .and_then(|rest| rest.split_once('('))
            .ok_or_else(|| Error::InvalidInput(format!("unrecognized group spec '{spec}'")))?;
        let n: usize = arg
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad group parameter in '{spec}'")))?;
        match kind.trim() {
            "cyclic" => Self::cyclic(n),
            "dihedral" => Self::dihedral(n),
            "symmetric" => Self::symmetric(n),
            other => Err(Error::InvalidInput(format!("unknown group kind '{other}'"))),
        }
    }

    pub fn order(&self) -> usize {
        self.data.order
    }

    pub fn name(&self) -> &str {
        &self.data.name
    }

    pub fn identity(&self) -> usize {
        self.data.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.data.table[a * self.data.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.data.inverse[a]
    }

    /// Element label for display and sandwich parsing: identity is `e`,
    /// element k is `gk`.
    pub fn label(&self, i: usize) -> String {
        if i == self.data.identity {
            "e".into()
        } else {
            format!("g{i}")
        }
    }

    /// Inverse of [`FiniteGroup::label`], also accepting plain `g` for
    /// element 1 of a nontrivial group.
    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        let l = label.trim();
        if l == "e" {
            return Some(self.data.identity);
        }
        if l == "g" && self.order() > 1 {
            return Some(if self.data.identity == 1 { 0 } else { 1 });
        }
        let idx: usize = l.strip_prefix('g')?.parse().ok()?;
        (idx < self.order()).then_some(idx)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1usize;
        while x != self.data.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Exponent: lcm of all element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order()).fold(1usize, |acc, a| lcm(acc, self.element_order(a)))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Conjugacy classes as sorted element lists, ordered by smallest member
    /// (so the identity's class comes first).
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for a in 0..n {
            if seen[a] {
                continue;
            }
            let mut class: Vec<usize> = (0..n)
                .map(|g| self.mul(self.mul(g, a), self.inv(g)))
                .collect();
            class.sort_unstable();
            class.dedup();
            for &x in &class {
                seen[x] = true;
            }
            classes.push(class);
        }
        classes
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in out {
            for x in 0..n {
                if !p.contains(&x) {
                    let mut q = p.clone();
                    q.push(x);
                    next.push(q);
                }
            }
        }
        out = next;
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_basics() {
        let c6 = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(c6.order(), 6);
        assert_eq!(c6.identity(), 0);
        assert_eq!(c6.exponent(), 6);
        assert_eq!(c6.conjugacy_classes().len(), 6);
        assert_eq!(c6.element_order(2), 3);
        assert!(c6.is_abelian());
    }

    #[test]
    fn symmetric_three() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.conjugacy_classes().len(), 3);
        assert_eq!(s3.exponent(), 6);
        assert!(!s3.is_abelian());
        // Class sizes 1, 3, 2.
        let mut sizes: Vec<usize> = s3.conjugacy_classes().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn dihedral_relations() {
        let d4 = FiniteGroup::dihedral(4).unwrap();
        assert_eq!(d4.order(), 8);
        assert_eq!(d4.conjugacy_classes().len(), 5);
        let r = 1; // rotation
        let s = 4; // first reflection
        // s r s = r^{-1}
        let srs = d4.mul(d4.mul(s, r), s);
        assert_eq!(srs, d4.inv(r));
    }

    #[test]
    fn dihedral_three_is_symmetric_three_sized() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        assert_eq!(d3.order(), 6);
        assert_eq!(d3.conjugacy_classes().len(), 3);
    }

    #[test]
    fn direct_product_klein() {
        let klein = FiniteGroup::builtin("klein").unwrap();
        assert_eq!(klein.order(), 4);
        assert_eq!(klein.exponent(), 2);
        assert_eq!(klein.conjugacy_classes().len(), 4);
    }

    #[test]
    fn builtin_parsing() {
        assert_eq!(FiniteGroup::builtin("cyclic(3)").unwrap().order(), 3);
        assert_eq!(FiniteGroup::builtin("symmetric(3)").unwrap().order(), 6);
        assert_eq!(FiniteGroup::builtin("cyclic(2) x cyclic(4)").unwrap().order(), 8);
        assert!(FiniteGroup::builtin("sporadic(1)").is_err());
        assert!(FiniteGroup::builtin("cyclic(0)").is_err());
    }

    #[test]
    fn validation_witnesses() {
        // Left-zero "multiplication" is associative but has no identity.
        let t = vec![vec![0, 0], vec![1, 1]];
        let err = FiniteGroup::from_table(&t, "bad").unwrap_err();
        assert!(matches!(err, Error::InvalidGroup(ref m) if m.contains("identity")));
        // Rock-paper-scissors-like table breaks associativity.
        let t = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 1, 0]];
        let err = FiniteGroup::from_table(&t, "bad").unwrap_err();
        assert!(matches!(err, Error::InvalidGroup(ref m) if m.contains("associativity") || m.contains("inverse")));
    }

    #[test]
    fn labels_round_trip() {
        let c3 = FiniteGroup::cyclic(3).unwrap();
        assert_eq!(c3.label(0), "e");
        assert_eq!(c3.label(2), "g2");
        assert_eq!(c3.element_by_label("e"), Some(0));
        assert_eq!(c3.element_by_label("g"), Some(1));
        assert_eq!(c3.element_by_label("g2"), Some(2));
        assert_eq!(c3.element_by_label("g9"), None);
    }

    #[test]
    fn exponent_divides_order() {
        for spec in ["cyclic(8)", "dihedral(5)", "symmetric(4)", "klein"] {
            let g = FiniteGroup::builtin(spec).unwrap();
            assert_eq!(g.order() % g.exponent(), 0, "{spec}");
        }
    }
}
