//! Representation type of Munn algebras over finite fields.
//!
//! Given a finite Rees matrix semigroup — or directly a Munn algebra
//! `M(R, m, n, μ)` with semisimple base — this crate computes the invariants
//! that control how hard its module category is: the Wedderburn components of
//! the base algebra, the rank of the sandwich matrix over each component, and
//! the resulting multiset of triples `(d_k, m_k, n_k)`.  From the triples it
//! builds a valued graph, classifies the graph against the Dynkin/Euclidean
//! lists through the associated quadratic form, and reports whether the
//! algebra is of finite, tame, or wild representation type — by the case
//! tables and, independently, by the graph route, so the two can be checked
//! against each other.
//!
//! The module category itself is available in small sizes: modules as matrix
//! diagrams, the translation to and from graph representations, Hom spaces,
//! and an exhaustive indecomposable census over F_2/F_3 whose counts can be
//! compared with the positive-root count of the graph.
//!
//! All linear algebra is exact: finite prime fields and their extensions for
//! the module side, fraction-free integer elimination for the quadratic-form
//! side.  Randomness only enters seeded (polynomial factorization and
//! idempotent splitting), so every result is reproducible.

pub mod error;
pub mod field;
pub mod group;
pub mod group_algebra;
pub mod irrep;
pub mod matrix;
pub mod module_cat;
pub mod munn;
pub mod poly;
pub mod rep_type;
pub mod valued_graph;

pub use error::{Error, Result};
pub use field::{FieldElement, FiniteField};
pub use group::FiniteGroup;
pub use group_algebra::{
    smallest_semisimple_char, smallest_split_char, AlgebraElement, AlgebraMatrix,
    ComponentNumbers, GroupAlgebra, WedderburnComponent, WedderburnData,
};
pub use irrep::ComponentRealization;
pub use matrix::{Matrix, RankNormalForm};
pub use module_cat::{
    are_isomorphic, enumerate_indecomposables, from_graph_rep, graph_morphism, hom_space,
    in_ideal_j, is_indecomposable, is_morphism, mod_plus_round_trip, Census, EnumerationCaps,
    GraphMorphism, GraphRep, HomTuple, MunnModule,
};
pub use munn::{
    NormalForm, ReesElement, ReesSemigroup, ReesUnion, Triple, TripleSet, UnionData, UnionPart,
};
pub use poly::Polynomial;
pub use rep_type::{
    classify_by_graph, classify_munn, classify_rees, classify_union, split_sums, RepType,
    RepTypeVerdict, SplitSums,
};
pub use valued_graph::{
    ComponentClassification, GraphClass, GraphClassification, RootEnumeration, ValuedGraph, Vertex,
};
