//! The valued graph attached to a triple multiset, and its classification by
//! the associated integral quadratic form.
//!
//! For triples {(d_k, m_k, n_k)} the graph has one vertex per triple plus two
//! distinguished vertices `+` and `−`. Triple k contributes an edge between
//! its vertex and `+` valued (m_k, m_k·d_k) when m_k > 0, and an edge between
//! `−` and its vertex valued (n_k·d_k, n_k) when n_k > 0. The weights
//! f_+ = f_− = 1, f_k = d_k symmetrize the Cartan matrix, giving an integral
//! quadratic form computed exactly over the integers. Connected components
//! split into positive definite (Dynkin), corank-one semidefinite
//! (Euclidean), and indefinite shapes; positive real roots are enumerated by
//! reflection closure.

use crate::error::{Error, Result};
use crate::munn::{Triple, TripleSet};
use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

/// A graph vertex: the two distinguished poles, or the vertex of triple k.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Vertex {
    Plus,
    Minus,
    /// Index into the originating triple set.
    Comp(usize),
}

/// Shape class of one connected component of the graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum GraphClass {
    Dynkin,
    Euclidean,
    Indefinite,
}

/// A valued graph with symmetrizing weights.
#[derive(Clone, Debug)]
pub struct ValuedGraph {
    triples: Vec<Triple>,
    n: usize,
    /// Row-major n × n value table d_ij (0 = no edge).
    value: Vec<usize>,
    /// Symmetrizer weights f_i.
    f: Vec<usize>,
}

impl ValuedGraph {
    /// Vertex order: `+` first, then one vertex per triple in canonical
    /// order, then `−`.
    pub fn from_triples(triples: &TripleSet) -> Result<Self> {
        let t = triples.len();
        let n = t + 2;
        let mut value = vec![0usize; n * n];
        let mut f = vec![1usize; n];
        for (idx, tr) in triples.iter().enumerate() {
            let k = idx + 1;
            f[k] = tr.d;
            if tr.m > 0 {
                value[k * n] = tr.m;
                value[k] = tr.m * tr.d;
            }
            if tr.n > 0 {
                value[(n - 1) * n + k] = tr.n * tr.d;
                value[k * n + (n - 1)] = tr.n;
            }
        }
        let graph = ValuedGraph {
            triples: triples.iter().copied().collect(),
            n,
            value,
            f,
        };
        for i in 0..n {
            for j in 0..n {
                let vij = graph.value(i, j);
                let vji = graph.value(j, i);
                if (vij == 0) != (vji == 0) || graph.f[i] * vij != graph.f[j] * vji {
                    return Err(Error::SymmetryViolation(format!(
                        "f_{i}·d_{i}{j} = {} but f_{j}·d_{j}{i} = {}",
                        graph.f[i] * vij,
                        graph.f[j] * vji
                    )));
                }
            }
        }
        Ok(graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn vertex(&self, i: usize) -> Vertex {
        if i == 0 {
            Vertex::Plus
        } else if i == self.n - 1 {
            Vertex::Minus
        } else {
            Vertex::Comp(i - 1)
        }
    }

    pub fn label(&self, i: usize) -> String {
        match self.vertex(i) {
            Vertex::Plus => "+".into(),
            Vertex::Minus => "-".into(),
            Vertex::Comp(k) => format!("k{}", k + 1),
        }
    }

    /// Edge value d_ij (0 when i and j are not adjacent).
    pub fn value(&self, i: usize, j: usize) -> usize {
        self.value[i * self.n + j]
    }

    /// Symmetrizer weights; also the form values on unit vectors.
    pub fn weights(&self) -> &[usize] {
        &self.f
    }

    pub fn triples(&self) -> &[Triple] {
        &self.triples
    }

    /// Cartan matrix: 2 on the diagonal, −d_ij offit.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        if i == j {
                            2
                        } else {
                            -(self.value(i, j) as i64)
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// The symmetrized matrix diag(f)·C — twice the form's Gram matrix.
    pub fn symmetrized_matrix(&self) -> Vec<Vec<i64>> {
        let c = self.cartan_matrix();
        (0..self.n)
            .map(|i| c[i].iter().map(|&x| self.f[i] as i64 * x).collect())
            .collect()
    }

    /// The integral quadratic form q(x) = ½·xᵀ·diag(f)·C·x, evaluated
    /// exactly. q(e_i) = f_i.
    pub fn tits_form(&self, x: &[i64]) -> Result<i64> {
        if x.len() != self.n {
            return Err(Error::ShapeMismatch(format!(
                "form on {} vertices applied to length-{} vector",
                self.n,
                x.len()
            )));
        }
        let s = self.symmetrized_matrix();
        let mut total = 0i64;
        for i in 0..self.n {
            for j in 0..self.n {
                total += s[i][j] * x[i] * x[j];
            }
        }
        if total % 2 != 0 {
            return Err(Error::InternalInvariantViolation(
                "symmetrized form value came out odd".into(),
            ));
        }
        Ok(total / 2)
    }

    fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for w in 0..self.n {
                    if !seen[w] && self.value(v, w) != 0 {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Classify every connected component by its quadratic form.
    pub fn classify_components(&self) -> Result<GraphClassification> {
        let s = self.symmetrized_matrix();
        let mut components = Vec::new();
        for verts in self.connected_components() {
            let sub: Vec<Vec<i128>> = verts
                .iter()
                .map(|&i| verts.iter().map(|&j| s[i][j] as i128).collect())
                .collect();
            let (class, null_root) = classify_form(&sub)?;
            let null_root = null_root.map(|local| {
                let mut full = vec![0i64; self.n];
                for (slot, &v) in verts.iter().enumerate() {
                    full[v] = local[slot];
                }
                full
            });
            let name = self.component_name(class, &verts);
            components.push(ComponentClassification {
                vertices: verts,
                class,
                name,
                null_root,
            });
        }
        Ok(GraphClassification { components })
    }

    /// Positive real roots by reflection closure from the unit vectors,
    /// stopping (with a marker) once `cap` roots have been collected.
    pub fn positive_real_roots(&self, cap: usize) -> RootEnumeration {
        let c = self.cartan_matrix();
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        let mut truncated = false;
        for i in 0..self.n {
            let mut e = vec![0i64; self.n];
            e[i] = 1;
            if seen.len() >= cap {
                truncated = true;
                break;
            }
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(x) = queue.pop_front() {
            for i in 0..self.n {
                let coeff: i64 = (0..self.n).map(|j| c[i][j] * x[j]).sum();
                let mut y = x.clone();
                y[i] -= coeff;
                if y.iter().any(|&v| v < 0) || y == x || seen.contains(&y) {
                    continue;
                }
                if seen.len() >= cap {
                    truncated = true;
                    continue;
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
        let mut roots: Vec<Vec<i64>> = seen.into_iter().collect();
        roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
        RootEnumeration { roots, truncated }
    }

    /// Deterministic DOT rendering: vertices in order, then edges (i < j)
    /// labeled with the value pair (d_ij, d_ji).
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph valued {\n");
        for i in 0..self.n {
            match self.vertex(i) {
                Vertex::Comp(k) => {
                    let _ = writeln!(
                        out,
                        "  v{i} [label=\"k{} (d={})\"];",
                        k + 1,
                        self.triples[k].d
                    );
                }
                _ => {
                    let _ = writeln!(out, "  v{i} [label=\"{}\"];", self.label(i));
                }
            }
        }
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.value(i, j) != 0 {
                    let _ = writeln!(
                        out,
                        "  v{i} -- v{j} [label=\"({},{})\"];",
                        self.value(i, j),
                        self.value(j, i)
                    );
                }
            }
        }
        out.push_str("}\n");
        out
    }

    fn component_name(&self, class: GraphClass, verts: &[usize]) -> String {
        let shape = ComponentShape::analyze(self, verts);
        match class {
            GraphClass::Dynkin => shape.dynkin_name(),
            GraphClass::Euclidean => shape.euclidean_name(),
            GraphClass::Indefinite => "unnamed".into(),
        }
    }
}

/// Classification of every connected component.
#[derive(Clone, Debug)]
pub struct GraphClassification {
    pub components: Vec<ComponentClassification>,
}

impl GraphClassification {
    pub fn all_dynkin(&self) -> bool {
        self.components.iter().all(|c| c.class == GraphClass::Dynkin)
    }

    pub fn has_euclidean(&self) -> bool {
        self.components.iter().any(|c| c.class == GraphClass::Euclidean)
    }

    pub fn has_indefinite(&self) -> bool {
        self.components.iter().any(|c| c.class == GraphClass::Indefinite)
    }
}

/// One classified connected component.
#[derive(Clone, Debug)]
pub struct ComponentClassification {
    /// Vertex indices, ascending.
    pub vertices: Vec<usize>,
    pub class: GraphClass,
    /// Best-effort shape name ("A3", "B2", "G2", "A~1", …), "unnamed" when
    /// not recognized.
    pub name: String,
    /// For Euclidean components: the primitive positive radical vector,
    /// embedded in full-length coordinates.
    pub null_root: Option<Vec<i64>>,
}

/// Result of root enumeration.
#[derive(Clone, Debug)]
pub struct RootEnumeration {
    /// Sorted by height, then lexicographically.
    pub roots: Vec<Vec<i64>>,
    /// True when the cap cut the closure short (the root system is then
    /// necessarily infinite as far as this search can tell).
    pub truncated: bool,
}

/// Classify one symmetric integer Gram matrix (already restricted to a
/// connected component): positive definite, corank-one semidefinite with its
/// radical generator, or indefinite.
fn classify_form(sub: &[Vec<i128>]) -> Result<(GraphClass, Option<Vec<i64>>)> {
    let n = sub.len();
    if is_positive_definite(sub) {
        return Ok((GraphClass::Dynkin, None));
    }
    if rank_int(sub.to_vec()) == n.saturating_sub(1) {
        // Every one-vertex deletion positive definite plus a zero eigenvalue
        // pins the form as semidefinite of corank one.
        let deletions_pd = (0..n).all(|skip| {
            let minor: Vec<Vec<i128>> = (0..n)
                .filter(|&i| i != skip)
                .map(|i| {
                    (0..n)
                        .filter(|&j| j != skip)
                        .map(|j| sub[i][j])
                        .collect()
                })
                .collect();
            is_positive_definite(&minor)
        });
        if deletions_pd {
            let root = radical_generator(sub)?;
            if root.iter().all(|&v| v > 0) {
                return Ok((GraphClass::Euclidean, Some(root)));
            }
        }
    }
    Ok((GraphClass::Indefinite, None))
}

/// Sylvester: a symmetric matrix is positive definite iff all leading
/// principal minors are positive.
fn is_positive_definite(m: &[Vec<i128>]) -> bool {
    (1..=m.len()).all(|k| {
        let lead: Vec<Vec<i128>> = (0..k).map(|i| m[i][..k].to_vec()).collect();
        det_int(lead) > 0
    })
}

/// Fraction-free determinant (Bareiss).
fn det_int(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(p) = ((k + 1)..n).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Fraction-free rank (Bareiss with column skips).
fn rank_int(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for i in (rank + 1)..rows {
            for j in (col + 1)..cols {
                m[i][j] = (m[i][j] * m[rank][col] - m[i][col] * m[rank][j]) / prev;
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Primitive generator of the radical of a corank-one symmetric matrix,
/// extracted from the adjugate (whose nonzero columns span the kernel),
/// normalized to positive leading sign.
fn radical_generator(m: &[Vec<i128>]) -> Result<Vec<i64>> {
    let n = m.len();
    for col in 0..n {
        let mut v = vec![0i128; n];
        for (row, slot) in v.iter_mut().enumerate() {
            // Cofactor expansion: adj(M)[row][col] is the signed minor with
            // row `col` and column `row` deleted.
            let minor: Vec<Vec<i128>> = (0..n)
                .filter(|&i| i != col)
                .map(|i| {
                    (0..n)
                        .filter(|&j| j != row)
                        .map(|j| m[i][j])
                        .collect()
                })
                .collect();
            let sign = if (row + col) % 2 == 0 { 1 } else { -1 };
            *slot = sign * det_int(minor);
        }
        if v.iter().all(|&x| x == 0) {
            continue;
        }
        let g = v.iter().fold(0i128, |acc, &x| gcd_i128(acc, x.abs()));
        let mut v: Vec<i64> = v.iter().map(|&x| (x / g) as i64).collect();
        if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
            for x in &mut v {
                *x = -*x;
            }
        }
        // Kernel membership is what the caller relies on; check it.
        for row in m {
            let dot: i128 = row.iter().zip(&v).map(|(&a, &b)| a * b as i128).sum();
            if dot != 0 {
                return Err(Error::InternalInvariantViolation(
                    "adjugate column is not in the kernel".into(),
                ));
            }
        }
        return Ok(v);
    }
    Err(Error::InternalInvariantViolation(
        "corank-one matrix with zero adjugate".into(),
    ))
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    if b == 0 { a } else { gcd_i128(b, a % b) }
}

/// Shape data of one component, for best-effort naming.
struct ComponentShape {
    n: usize,
    /// Edges as (local i, local j, d_ij, d_ji) with i < j.
    edges: Vec<(usize, usize, usize, usize)>,
    degree: Vec<usize>,
}

impl ComponentShape {
    fn analyze(graph: &ValuedGraph, verts: &[usize]) -> Self {
        let n = verts.len();
        let mut edges = Vec::new();
        let mut degree = vec![0usize; n];
        for a in 0..n {
            for b in (a + 1)..n {
                let dij = graph.value(verts[a], verts[b]);
                if dij != 0 {
                    edges.push((a, b, dij, graph.value(verts[b], verts[a])));
                    degree[a] += 1;
                    degree[b] += 1;
                }
            }
        }
        ComponentShape { n, edges, degree }
    }

    fn simply_laced(&self) -> bool {
        self.edges.iter().all(|&(_, _, a, b)| a == 1 && b == 1)
    }

    fn is_path(&self) -> bool {
        self.n == 1
            || (self.edges.len() == self.n - 1
                && self.degree.iter().all(|&d| d <= 2)
                && self.degree.iter().filter(|&&d| d == 1).count() == 2)
    }

    fn is_cycle(&self) -> bool {
        self.n >= 3 && self.edges.len() == self.n && self.degree.iter().all(|&d| d == 2)
    }

    fn valued_edges(&self) -> Vec<(usize, usize, usize, usize)> {
        self.edges
            .iter()
            .filter(|&&(_, _, a, b)| (a, b) != (1, 1))
            .copied()
            .collect()
    }

    /// Arm lengths (edge counts) from the unique degree-3 vertex, sorted.
    fn fork_arms(&self) -> Option<Vec<usize>> {
        let forks: Vec<usize> = (0..self.n).filter(|&v| self.degree[v] == 3).collect();
        let [fork] = forks[..] else { return None };
        if self.degree.iter().any(|&d| d > 3) || self.edges.len() != self.n - 1 {
            return None;
        }
        let mut arms = Vec::new();
        for start in self.neighbors(fork) {
            let mut len = 1;
            let mut prev = fork;
            let mut here = start;
            while self.degree[here] == 2 {
                let next = self
                    .neighbors(here)
                    .into_iter()
                    .find(|&w| w != prev)
                    .expect("degree-2 vertex has a second neighbor");
                prev = here;
                here = next;
                len += 1;
            }
            arms.push(len);
        }
        arms.sort_unstable();
        Some(arms)
    }

    fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b, _, _)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    fn dynkin_name(&self) -> String {
        if self.n == 1 {
            return "A1".into();
        }
        if self.is_path() {
            let valued = self.valued_edges();
            match valued[..] {
                [] => return format!("A{}", self.n),
                [(i, j, a, b)] => {
                    let (lo, hi) = sorted_pair(a, b);
                    if self.n == 2 {
                        return match (lo, hi) {
                            (1, 2) => "B2".into(),
                            (1, 3) => "G2".into(),
                            _ => "unnamed".into(),
                        };
                    }
                    if (lo, hi) == (1, 2) {
                        let ends = (self.degree[i] == 1, self.degree[j] == 1);
                        return match ends {
                            (true, _) if a == 2 => format!("B{}", self.n),
                            (true, _) => format!("C{}", self.n),
                            (_, true) if b == 2 => format!("B{}", self.n),
                            (_, true) => format!("C{}", self.n),
                            (false, false) if self.n == 4 => "F4".into(),
                            _ => "unnamed".into(),
                        };
                    }
                    return "unnamed".into();
                }
                _ => return "unnamed".into(),
            }
        }
        if self.simply_laced() {
            if let Some(arms) = self.fork_arms() {
                return match arms[..] {
                    [1, 1, _] => format!("D{}", self.n),
                    [1, 2, 2] => "E6".into(),
                    [1, 2, 3] => "E7".into(),
                    [1, 2, 4] => "E8".into(),
                    _ => "unnamed".into(),
                };
            }
        }
        "unnamed".into()
    }

    fn euclidean_name(&self) -> String {
        if self.n == 2 {
            let [(_, _, a, b)] = self.edges[..] else {
                return "unnamed".into();
            };
            if sorted_pair(a, b) == (2, 2) {
                return "A~1".into();
            }
            return "unnamed".into();
        }
        if self.is_cycle() && self.simply_laced() {
            return format!("A~{}", self.n - 1);
        }
        if self.is_path() {
            let valued = self.valued_edges();
            if valued.len() == 2
                && valued.iter().all(|&(i, j, a, b)| {
                    sorted_pair(a, b) == (1, 2) && (self.degree[i] == 1 || self.degree[j] == 1)
                })
            {
                return format!("C~{}", self.n - 1);
            }
            return "unnamed".into();
        }
        if self.simply_laced() {
            let forks: Vec<usize> = (0..self.n).filter(|&v| self.degree[v] == 3).collect();
            if forks.len() == 2 && self.degree.iter().all(|&d| d <= 3) && self.n >= 5 {
                let pendant_per_fork = forks.iter().all(|&fk| {
                    self.neighbors(fk)
                        .iter()
                        .filter(|&&w| self.degree[w] == 1)
                        .count()
                        == 2
                });
                if pendant_per_fork && self.edges.len() == self.n - 1 {
                    return format!("D~{}", self.n - 1);
                }
            }
        }
        "unnamed".into()
    }
}

fn sorted_pair(a: usize, b: usize) -> (usize, usize) {
    if a <= b { (a, b) } else { (b, a) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(raw: &[(usize, usize, usize)]) -> ValuedGraph {
        ValuedGraph::from_triples(&TripleSet::from_raw(raw).unwrap()).unwrap()
    }

    #[test]
    fn standard_triple_gives_a3() {
        let g = graph(&[(1, 1, 1)]);
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(
            g.cartan_matrix(),
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]
        );
        let cls = g.classify_components().unwrap();
        assert_eq!(cls.components.len(), 1);
        assert_eq!(cls.components[0].class, GraphClass::Dynkin);
        assert_eq!(cls.components[0].name, "A3");
        assert!(cls.all_dynkin());
        let roots = g.positive_real_roots(64);
        assert!(!roots.truncated);
        assert_eq!(roots.roots.len(), 6);
        // Highest root of the chain is all-ones.
        assert_eq!(roots.roots.last().unwrap(), &vec![1, 1, 1]);
    }

    #[test]
    fn tame_boundary_cartan_and_null_root() {
        let g = graph(&[(2, 1, 1)]);
        assert_eq!(
            g.cartan_matrix(),
            vec![vec![2, -2, 0], vec![-1, 2, -1], vec![0, -2, 2]]
        );
        let cls = g.classify_components().unwrap();
        assert_eq!(cls.components.len(), 1);
        assert_eq!(cls.components[0].class, GraphClass::Euclidean);
        assert_eq!(cls.components[0].name, "C~2");
        assert_eq!(cls.components[0].null_root, Some(vec![1, 1, 1]));
        assert_eq!(g.tits_form(&[1, 1, 1]).unwrap(), 0);
        assert!(g.positive_real_roots(40).truncated);
    }

    #[test]
    fn one_sided_double_weight_is_b2_plus_isolated() {
        let g = graph(&[(2, 1, 0)]);
        let cls = g.classify_components().unwrap();
        assert_eq!(cls.components.len(), 2);
        assert_eq!(cls.components[0].vertices, vec![0, 1]);
        assert_eq!(cls.components[0].class, GraphClass::Dynkin);
        assert_eq!(cls.components[0].name, "B2");
        assert_eq!(cls.components[1].vertices, vec![2]);
        assert_eq!(cls.components[1].name, "A1");
        assert!(cls.all_dynkin());
        let roots = g.positive_real_roots(64);
        assert!(!roots.truncated);
        assert_eq!(roots.roots.len(), 5);
    }

    #[test]
    fn double_edge_is_euclidean_kronecker() {
        let g = graph(&[(1, 2, 0)]);
        let cls = g.classify_components().unwrap();
        assert_eq!(cls.components[0].class, GraphClass::Euclidean);
        assert_eq!(cls.components[0].name, "A~1");
        assert_eq!(cls.components[0].null_root, Some(vec![1, 1, 0]));
        assert_eq!(cls.components[1].class, GraphClass::Dynkin);
        assert!(cls.has_euclidean());
        assert!(!cls.has_indefinite());
    }

    #[test]
    fn two_standard_triples_close_into_a_cycle() {
        let g = graph(&[(1, 1, 1), (1, 1, 1)]);
        let cls = g.classify_components().unwrap();
        assert_eq!(cls.components.len(), 1);
        assert_eq!(cls.components[0].class, GraphClass::Euclidean);
        assert_eq!(cls.components[0].name, "A~3");
        assert_eq!(cls.components[0].null_root, Some(vec![1, 1, 1, 1]));
        assert_eq!(g.tits_form(&[1, 1, 1, 1]).unwrap(), 0);
    }

    #[test]
    fn wild_shape_is_indefinite_and_truncates() {
        let g = graph(&[(1, 2, 2)]);
        let cls = g.classify_components().unwrap();
        assert_eq!(cls.components[0].class, GraphClass::Indefinite);
        assert!(cls.has_indefinite());
        assert!(g.positive_real_roots(40).truncated);
    }

    #[test]
    fn weight_three_edge_is_g2() {
        let g = graph(&[(3, 1, 0)]);
        let cls = g.classify_components().unwrap();
        assert_eq!(cls.components[0].name, "G2");
        assert_eq!(cls.components[0].class, GraphClass::Dynkin);
        // G2 has six positive roots; the isolated pole adds one.
        assert_eq!(g.positive_real_roots(64).roots.len(), 7);
    }

    #[test]
    fn form_values_on_unit_vectors_are_weights() {
        let g = graph(&[(2, 1, 1), (3, 1, 0), (1, 1, 2)]);
        for i in 0..g.vertex_count() {
            let mut e = vec![0i64; g.vertex_count()];
            e[i] = 1;
            assert_eq!(g.tits_form(&e).unwrap(), g.weights()[i] as i64);
        }
        // The symmetrized matrix really is symmetric.
        let s = g.symmetrized_matrix();
        for i in 0..g.vertex_count() {
            for j in 0..g.vertex_count() {
                assert_eq!(s[i][j], s[j][i]);
            }
        }
    }

    #[test]
    fn input_order_does_not_matter() {
        let a = graph(&[(2, 1, 1), (1, 1, 1), (1, 2, 0)]);
        let b = graph(&[(1, 2, 0), (2, 1, 1), (1, 1, 1)]);
        assert_eq!(a.cartan_matrix(), b.cartan_matrix());
        assert_eq!(a.to_dot(), b.to_dot());
    }

    #[test]
    fn isolated_pole_sides() {
        // No n-edges: the minus pole is isolated; no m-edges: plus is.
        let g = graph(&[(1, 1, 0), (1, 1, 0)]);
        let cls = g.classify_components().unwrap();
        assert_eq!(cls.components.len(), 2);
        assert_eq!(cls.components[0].name, "A3");
        assert_eq!(cls.components[1].vertices, vec![3]);
        assert_eq!(g.positive_real_roots(64).roots.len(), 7);
        let g = graph(&[(1, 0, 1)]);
        let cls = g.classify_components().unwrap();
        assert_eq!(cls.components[0].vertices, vec![0]);
        assert_eq!(cls.components[1].name, "A2");
        assert_eq!(g.positive_real_roots(64).roots.len(), 4);
    }

    #[test]
    fn dot_output_is_stable() {
        let g = graph(&[(2, 1, 0)]);
        let expected = "graph valued {\n  v0 [label=\"+\"];\n  v1 [label=\"k1 (d=2)\"];\n  v2 [label=\"-\"];\n  v0 -- v1 [label=\"(2,1)\"];\n}\n";
        assert_eq!(g.to_dot(), expected);
        assert_eq!(g.to_dot(), g.to_dot());
    }

    #[test]
    fn empty_triples_leave_two_isolated_poles() {
        let g = ValuedGraph::from_triples(&TripleSet::empty()).unwrap();
        assert_eq!(g.vertex_count(), 2);
        let cls = g.classify_components().unwrap();
        assert!(cls.all_dynkin());
        assert_eq!(cls.components.len(), 2);
    }
}
