//! Representation-type classification: the combinatorial case analyses over
//! triple multisets, and the independent quadratic-form route through the
//! valued graph.
//!
//! Three classifiers consume invariant triples directly — one for abstract
//! product algebras ([`classify_munn`]), one for a single Rees matrix
//! semigroup ([`classify_rees`], which also sees the group order), one for
//! mutually annihilating unions ([`classify_union`]). The fourth
//! ([`classify_by_graph`]) ignores the case analysis entirely and reads the
//! type off the valued graph: finite iff all components are Dynkin, tame iff
//! Dynkin/Euclidean with at least one Euclidean, wild otherwise. The case
//! analyses and the graph route must always agree; the test suites enforce
//! this exhaustively, and any mismatch is a bug in this crate, not a
//! judgment call.
//!
//! Verdict evidence strings like "2.3(1b)" or "3.4(2c)" are stable rule
//! labels naming the clause that fired; downstream consumers treat them as
//! opaque tokens.

use crate::error::Result;
use crate::munn::{Triple, TripleSet, UnionData};
use crate::valued_graph::{ComponentClassification, ValuedGraph};

/// The trichotomy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RepType {
    Finite,
    Tame,
    Wild,
}

impl std::fmt::Display for RepType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            RepType::Finite => "Finite",
            RepType::Tame => "Tame",
            RepType::Wild => "Wild",
        };
        f.write_str(s)
    }
}

/// A classification outcome with its justification.
#[derive(Clone, Debug)]
pub struct RepTypeVerdict {
    pub kind: RepType,
    /// The rule label that fired ("2.3(2a)", "3.3(1b)", "3.4(2d)", …),
    /// "graph" for the quadratic-form route, "semisimple" for an empty
    /// triple set on the semigroup route.
    pub evidence: String,
    /// Graph component classes, when the graph route produced the verdict.
    pub components: Option<Vec<ComponentClassification>>,
    pub notes: String,
}

impl RepTypeVerdict {
    fn plain(kind: RepType, evidence: &str, notes: String) -> Self {
        RepTypeVerdict {
            kind,
            evidence: evidence.into(),
            components: None,
            notes,
        }
    }
}

/// Side sums of the one-sided part of a triple set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitSums {
    /// Σ d over triples (d, 1, 0).
    pub s_minus: usize,
    /// Σ d over triples (d, 0, 1).
    pub s_plus: usize,
    /// s_minus + s_plus.
    pub s: usize,
}

pub fn split_sums(t: &TripleSet) -> SplitSums {
    let s_minus = t.s_minus();
    let s_plus = t.s_plus();
    SplitSums {
        s_minus,
        s_plus,
        s: s_minus + s_plus,
    }
}

fn entries_eq(entries: &[Triple], want: &[(usize, usize, usize)]) -> bool {
    entries.len() == want.len()
        && entries
            .iter()
            .zip(want)
            .all(|(t, &(d, m, n))| (t.d, t.m, t.n) == (d, m, n))
}

fn describe(entries: &[Triple]) -> String {
    if entries.is_empty() {
        return "{}".into();
    }
    let body: Vec<String> = entries
        .iter()
        .map(|t| format!("({},{},{})", t.d, t.m, t.n))
        .collect();
    format!("{{{}}}", body.join(", "))
}

/// Case analysis for a product algebra with invariant triples `t`.
pub fn classify_munn(t: &TripleSet) -> RepTypeVerdict {
    let sums = split_sums(t);
    let residual = t.two_sided();
    let residual_is_111 = entries_eq(&residual, &[(1, 1, 1)]);
    let notes = format!(
        "S- = {}, S+ = {}, residual = {}",
        sums.s_minus,
        sums.s_plus,
        describe(&residual)
    );
    if residual.is_empty() && sums.s_minus.max(sums.s_plus) <= 3 {
        return RepTypeVerdict::plain(RepType::Finite, "2.3(1a)", notes);
    }
    if residual_is_111 && sums.s <= 3 && sums.s_minus.max(sums.s_plus) <= 2 {
        return RepTypeVerdict::plain(RepType::Finite, "2.3(1b)", notes);
    }
    let tame_sets: [&[(usize, usize, usize)]; 4] = [
        &[(1, 1, 1), (1, 1, 1)],
        &[(2, 1, 1)],
        &[(1, 2, 0)],
        &[(1, 0, 2)],
    ];
    if t.one_sided().is_empty() && tame_sets.iter().any(|w| entries_eq(t.entries(), w)) {
        return RepTypeVerdict::plain(RepType::Tame, "2.3(2a)", notes);
    }
    if residual.is_empty() && sums.s_minus.max(sums.s_plus) == 4 {
        return RepTypeVerdict::plain(RepType::Tame, "2.3(2b)", notes);
    }
    if residual_is_111 && sums.s_minus == 2 && sums.s_plus == 2 {
        return RepTypeVerdict::plain(RepType::Tame, "2.3(2c)", notes);
    }
    // Completion of the published tame list: when no triple touches both
    // poles, the two pole stars are independent and the set is tame exactly
    // when each star is Dynkin or Euclidean and at least one is Euclidean.
    // The enumerated clauses above only cover the Euclidean star {(1,2)}
    // (one double arm) with an *empty* opposite pole; combinations such as
    // {(1,2,0), (2,0,1)} fall through to here.
    if t.iter().all(|tr| tr.m == 0 || tr.n == 0) {
        let plus = star_class(t.iter().filter(|tr| tr.m > 0).map(|tr| (tr.d, tr.m)));
        let minus = star_class(t.iter().filter(|tr| tr.n > 0).map(|tr| (tr.d, tr.n)));
        if let (Some(p), Some(m)) = (plus, minus) {
            if p || m {
                return RepTypeVerdict::plain(RepType::Tame, "2.3(2*)", notes);
            }
        }
    }
    RepTypeVerdict::plain(RepType::Wild, "2.3(3)", notes)
}

/// Class of one pole star with the given (d, multiplicity) arms:
/// `Some(false)` Dynkin, `Some(true)` Euclidean, `None` otherwise.  A single
/// arm of valuation (w, w·d) is definite iff w²·d < 4 and semidefinite iff
/// w²·d = 4; with several arms only simple (w = 1) arms survive, by total
/// weight Σd ≤ 3 or = 4.
fn star_class(arms: impl Iterator<Item = (usize, usize)>) -> Option<bool> {
    let arms: Vec<(usize, usize)> = arms.collect();
    if arms.iter().all(|&(_, w)| w == 1) {
        let total: usize = arms.iter().map(|&(d, _)| d).sum();
        return match total {
            0..=3 => Some(false),
            4 => Some(true),
            _ => None,
        };
    }
    if arms.len() == 1 && arms[0].1 * arms[0].1 * arms[0].0 == 4 {
        return Some(true);
    }
    None
}

/// Whether every triple is (d, 1, 0), or every triple is (d, 0, 1), with at
/// least one triple present.
fn uniformly_one_sided(t: &TripleSet) -> bool {
    !t.is_empty()
        && (t.iter().all(|tr| (tr.m, tr.n) == (1, 0))
            || t.iter().all(|tr| (tr.m, tr.n) == (0, 1)))
}

/// Case analysis for a single Rees matrix semigroup with triples `t` over a
/// group of the given order.
pub fn classify_rees(t: &TripleSet, group_order: usize) -> RepTypeVerdict {
    let notes = format!("#(G) = {group_order}, triples = {}", describe(t.entries()));
    if t.is_empty() {
        // Invertible sandwich on every component: the algebra is semisimple
        // (it has a unit), hence representation finite regardless of the
        // group order. The case list below starts from nonempty triples.
        return RepTypeVerdict::plain(
            RepType::Finite,
            "semisimple",
            format!("{notes}; empty triple set, the algebra is semisimple"),
        );
    }
    if entries_eq(t.entries(), &[(1, 1, 1)]) {
        return RepTypeVerdict::plain(RepType::Finite, "3.3(1a)", notes);
    }
    if group_order <= 3 && uniformly_one_sided(t) {
        return RepTypeVerdict::plain(RepType::Finite, "3.3(1b)", notes);
    }
    if entries_eq(t.entries(), &[(1, 1, 1), (1, 1, 1)]) || entries_eq(t.entries(), &[(2, 1, 1)]) {
        return RepTypeVerdict::plain(RepType::Tame, "3.3(2a)", notes);
    }
    if group_order == 4 && uniformly_one_sided(t) {
        return RepTypeVerdict::plain(RepType::Tame, "3.3(2b)", notes);
    }
    if group_order == 1
        && (entries_eq(t.entries(), &[(1, 2, 0)]) || entries_eq(t.entries(), &[(1, 0, 2)]))
    {
        return RepTypeVerdict::plain(RepType::Tame, "3.3(2c)", notes);
    }
    RepTypeVerdict::plain(RepType::Wild, "3.3(3)", notes)
}

/// Case analysis for a mutually annihilating union, driven by the per-part
/// aggregates: T_> and T_< sum group orders over parts whose sandwich has
/// more rows than columns (resp. fewer), and the triples split by part shape
/// into the unbalanced part (rows ≠ columns) and the balanced part.
pub fn classify_union(u: &UnionData) -> RepTypeVerdict {
    let t0 = u.unbalanced_triples();
    let t1 = u.balanced_triples();
    let tg = u.t_greater();
    let tl = u.t_less();
    let t0_one_sided = t0.iter().all(Triple::is_one_sided);
    let t1_is_111 = entries_eq(t1.entries(), &[(1, 1, 1)]);
    let notes = format!(
        "T> = {tg}, T< = {tl}, unbalanced = {}, balanced = {}",
        describe(t0.entries()),
        describe(t1.entries())
    );
    if t1.is_empty() && tg.max(tl) <= 3 && t0_one_sided {
        return RepTypeVerdict::plain(RepType::Finite, "3.4(1a)", notes);
    }
    if t1_is_111 && tg + tl <= 3 && tg.max(tl) <= 2 && t0_one_sided {
        return RepTypeVerdict::plain(RepType::Finite, "3.4(1b)", notes);
    }
    if t1.is_empty() && tg.max(tl) == 4 && t0_one_sided {
        return RepTypeVerdict::plain(RepType::Tame, "3.4(2a)", notes);
    }
    if t1_is_111 && tg == 2 && tl == 2 && t0_one_sided {
        return RepTypeVerdict::plain(RepType::Tame, "3.4(2b)", notes);
    }
    if t0.is_empty()
        && (entries_eq(t1.entries(), &[(1, 1, 1), (1, 1, 1)])
            || entries_eq(t1.entries(), &[(2, 1, 1)]))
    {
        return RepTypeVerdict::plain(RepType::Tame, "3.4(2c)", notes);
    }
    if t1.is_empty()
        && (entries_eq(t0.entries(), &[(1, 2, 0)]) || entries_eq(t0.entries(), &[(1, 0, 2)]))
    {
        return RepTypeVerdict::plain(RepType::Tame, "3.4(2d)", notes);
    }
    RepTypeVerdict::plain(RepType::Wild, "3.4(3)", notes)
}

/// The quadratic-form route: classify the valued graph's components and read
/// the type off their classes. Independent of the case analyses above.
pub fn classify_by_graph(t: &TripleSet) -> Result<RepTypeVerdict> {
    let graph = ValuedGraph::from_triples(t)?;
    let cls = graph.classify_components()?;
    let kind = if cls.all_dynkin() {
        RepType::Finite
    } else if cls.has_euclidean() && !cls.has_indefinite() {
        RepType::Tame
    } else {
        RepType::Wild
    };
    let summary: Vec<String> = cls
        .components
        .iter()
        .map(|c| format!("{} ({:?})", c.name, c.class))
        .collect();
    Ok(RepTypeVerdict {
        kind,
        evidence: "graph".into(),
        notes: format!("components: {}", summary.join(", ")),
        components: Some(cls.components),
    })
}
