//! Decision procedures for partially commutative groups (right-angled Artin
//! groups): word algebra and conjugacy, finite balls of the extension graph,
//! embedding deciders and universal-equivalence deciders.

pub mod blocks;
pub mod classify;
pub mod embedding;
pub mod error;
pub mod extension;
pub mod graph;
pub mod iso;
pub mod universal;
pub mod word;

pub use blocks::{BlockDecomposition, CentralizerBasis};
pub use classify::{classify, classify_with, GraphReport, PathConvention};
pub use embedding::{
    coloured_block_graph, commutator_nontrivial_criterion, decide_ege, decide_embedding,
    iterated_commutator, Cause, DecideOptions, GeneratorMap, Outcome, Reason, Verdict, WitnessEntry,
};
pub use error::{Error, Result};
pub use extension::{theoretical_radius, Ball, Budget, ExtVertex};
pub use graph::{ColouredGraph, SimplicialGraph};
pub use iso::{brute_force_induced_embedding, find_induced_embedding, is_isomorphic};
pub use universal::{
    decide_universal_equivalence, deflation_triangle_sentence_holds, discriminating_retraction,
    EqOutcome, EqReason, EqVerdict,
};
pub use word::{Letter, PcGroup, Word};
