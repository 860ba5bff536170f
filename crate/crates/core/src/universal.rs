//! Universal equivalence of pc groups, decided by mutual embeddings of each
//! graph into the extension graph of an inflation of the other.

use std::collections::BTreeMap;

use serde_json::json;

use crate::classify::{is_atomic, is_triangle_built_with};
use crate::embedding::{decide_ege, DecideOptions, GeneratorMap, Outcome, Verdict};
use crate::error::{Error, Result};
use crate::graph::SimplicialGraph;
use crate::iso::is_isomorphic;
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EqOutcome {
    Equivalent,
    NotEquivalent,
    Inconclusive,
}

impl EqOutcome {
    pub fn tag(self) -> &'static str {
        match self {
            EqOutcome::Equivalent => "equivalent",
            EqOutcome::NotEquivalent => "not-equivalent",
            EqOutcome::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EqReason {
    /// Both graphs atomic: equivalent iff isomorphic.
    AtomicRigidity,
    /// Exactly one deflation is triangle-free, so the commuting-triple
    /// sentence separates the groups.
    DeflationSentence,
    /// Both deflations triangle-free; mutual extension-graph embeddings.
    TriangleFreeDeflation,
    /// A triangle-built graph; mutual extension-graph embeddings.
    TriangleBuilt,
    NoCoveredClass,
}

impl EqReason {
    pub fn tag(self) -> &'static str {
        match self {
            EqReason::AtomicRigidity => "atomic-rigidity",
            EqReason::DeflationSentence => "deflation-triangle-sentence",
            EqReason::TriangleFreeDeflation => "triangle-free-deflation",
            EqReason::TriangleBuilt => "triangle-built",
            EqReason::NoCoveredClass => "no-covered-class",
        }
    }
}

#[derive(Clone, Debug)]
pub struct EqVerdict {
    pub outcome: EqOutcome,
    pub reason: EqReason,
    /// `d` into the extension graph of `inflation(g, |V(d)|)`, then `g` into
    /// that of `inflation(d, |V(g)|)`.
    pub detail: Option<(Verdict, Verdict)>,
}

impl EqVerdict {
    pub fn to_json_value(&self) -> serde_json::Value {
        let detail = self.detail.as_ref().map(|(a, b)| {
            let tag = |v: &Verdict, dir: &str| {
                let mut j = v.to_json_value();
                j["direction"] = json!(dir);
                j
            };
            vec![
                tag(a, "delta_into_gamma_inflation"),
                tag(b, "gamma_into_delta_inflation"),
            ]
        });
        json!({
            "outcome": self.outcome.tag(),
            "reason": self.reason.tag(),
            "detail": detail,
        })
    }
}

/// No three pairwise-adjacent vertices have pairwise distinct closed stars.
pub fn deflation_triangle_sentence_holds(g: &SimplicialGraph) -> bool {
    let stars: Vec<_> = (0..g.len()).map(|v| g.closed_star(v)).collect();
    !g.edges().any(|(u, v)| {
        stars[u] != stars[v]
            && g.neighbors(u).iter().any(|&w| {
                w > v && g.has_edge(v, w) && stars[w] != stars[u] && stars[w] != stars[v]
            })
    })
}

pub fn decide_universal_equivalence(
    d: &SimplicialGraph,
    g: &SimplicialGraph,
    opts: &DecideOptions,
) -> Result<EqVerdict> {
    if d.is_empty() || g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if is_atomic(d) && is_atomic(g) {
        let outcome = if is_isomorphic(d, g) { EqOutcome::Equivalent } else { EqOutcome::NotEquivalent };
        return Ok(EqVerdict { outcome, reason: EqReason::AtomicRigidity, detail: None });
    }
    let (td, tg) = (
        deflation_triangle_sentence_holds(d),
        deflation_triangle_sentence_holds(g),
    );
    let reason = if td != tg {
        return Ok(EqVerdict {
            outcome: EqOutcome::NotEquivalent,
            reason: EqReason::DeflationSentence,
            detail: None,
        });
    } else if td {
        EqReason::TriangleFreeDeflation
    } else if is_triangle_built_with(d, opts.path_convention)
        || is_triangle_built_with(g, opts.path_convention)
    {
        EqReason::TriangleBuilt
    } else {
        return Ok(EqVerdict { outcome: EqOutcome::Inconclusive, reason: EqReason::NoCoveredClass, detail: None });
    };
    let g_infl = g.inflation(d.len())?;
    let d_infl = d.inflation(g.len())?;
    let (forward, backward) = rayon::join(
        || decide_ege(d, &g_infl, opts),
        || decide_ege(g, &d_infl, opts),
    );
    let (forward, backward) = (forward?, backward?);
    let outcome = match (forward.outcome, backward.outcome) {
        (Outcome::Yes, Outcome::Yes) => EqOutcome::Equivalent,
        (Outcome::No, _) | (_, Outcome::No) => EqOutcome::NotEquivalent,
        _ => EqOutcome::Inconclusive,
    };
    Ok(EqVerdict { outcome, reason, detail: Some((forward, backward)) })
}

/// Retraction of `inflation(d, m)` onto `d` sending copy `j` (from 1) of
/// vertex `v` to `v^s` with `s = exponents[(v, j)]`.
pub fn discriminating_retraction(
    d: &SimplicialGraph,
    m: usize,
    exponents: &BTreeMap<(usize, usize), i64>,
) -> Result<GeneratorMap> {
    let infl = d.inflation(m)?;
    let mut images = Vec::with_capacity(infl.len());
    for v in 0..d.len() {
        for copy in 1..=m {
            let s = *exponents
                .get(&(v, copy))
                .ok_or(Error::MissingExponent { vertex: v, copy })?;
            if s == 0 {
                return Err(Error::ZeroExponent { vertex: v, copy });
            }
            images.push(Word::generator_power(v, s));
        }
    }
    GeneratorMap::new(infl, d.clone(), images)
}
