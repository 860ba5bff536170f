//! Embedding deciders.
//!
//! [`decide_ege`] answers whether `delta` is an induced subgraph of the
//! extension graph of `gamma` by searching balls of growing radius up to the
//! theoretical bound. [`decide_embedding`] dispatches on the graph classes
//! for which group embeddings and extension-graph embeddings coincide.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::json;

use crate::classify::{is_clique, is_forest, is_join, is_triangle_built_with, is_triangle_free, PathConvention};
use crate::error::{Error, Result};
use crate::extension::{theoretical_radius, Ball, Budget, ExtVertex};
use crate::graph::{ColouredGraph, SimplicialGraph};
use crate::iso::find_induced_embedding;
use crate::word::{Letter, PcGroup, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Yes,
    No,
    Inconclusive,
}

impl Outcome {
    pub fn tag(self) -> &'static str {
        match self {
            Outcome::Yes => "yes",
            Outcome::No => "no",
            Outcome::Inconclusive => "inconclusive",
        }
    }
}

/// Which procedure produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reason {
    /// Plain ball search under the radius bound for extension-graph embeddings.
    ExtensionGraphSearch,
    /// Source is a clique: `Z^n` embeds iff the target has an `n`-clique.
    CliqueSource,
    /// Target is a clique: only cliques of at most its size embed.
    CliqueTarget,
    /// Source is a forest; embedding problems coincide.
    ForestSource,
    /// Source complement is a forest; embedding problems coincide.
    ComplementOfForestSource,
    /// Target is triangle-free; embedding problems coincide.
    TriangleFreeTarget,
    /// Target is triangle-built; embedding problems coincide.
    TriangleBuiltTarget,
    /// The general embedding problem is open.
    NotCovered,
}

impl Reason {
    pub fn tag(self) -> &'static str {
        match self {
            Reason::ExtensionGraphSearch => "extension-graph-search",
            Reason::CliqueSource => "clique-source",
            Reason::CliqueTarget => "clique-target",
            Reason::ForestSource => "forest-source",
            Reason::ComplementOfForestSource => "complement-of-forest-source",
            Reason::TriangleFreeTarget => "triangle-free-target",
            Reason::TriangleBuiltTarget => "triangle-built-target",
            Reason::NotCovered => "general-embedding-problem-not-covered",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Why the search stopped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cause {
    EmbeddingFound,
    /// Every radius up to the theoretical bound was searched.
    RadiusBoundExhausted,
    /// A growth step added no vertices: the ball is the whole extension graph.
    BallStable,
    /// Every assignment to join factors failed definitively.
    JoinFactorsExhausted,
    RadiusCap,
    BudgetExceeded,
    CliqueSize,
    OpenProblem,
}

impl Cause {
    pub fn tag(self) -> &'static str {
        match self {
            Cause::EmbeddingFound => "embedding-found",
            Cause::RadiusBoundExhausted => "radius-bound-exhausted",
            Cause::BallStable => "ball-stable",
            Cause::JoinFactorsExhausted => "join-factors-exhausted",
            Cause::RadiusCap => "radius-cap",
            Cause::BudgetExceeded => "budget-exceeded",
            Cause::CliqueSize => "clique-size",
            Cause::OpenProblem => "open-problem",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessEntry {
    pub pattern: usize,
    pub vertex: ExtVertex,
}

/// Answer of an embedding decider, carrying the pattern and target so that
/// the witness can be validated and printed on its own.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub outcome: Outcome,
    pub reason: Reason,
    pub cause: Cause,
    pub witness: Option<Vec<WitnessEntry>>,
    pub searched_radius: Option<u64>,
    pub theoretical_radius: Option<BigUint>,
    pub pattern: SimplicialGraph,
    pub target: PcGroup,
}

impl Verdict {
    fn without_search(
        outcome: Outcome,
        reason: Reason,
        cause: Cause,
        pattern: &SimplicialGraph,
        target: &SimplicialGraph,
    ) -> Self {
        Verdict {
            outcome,
            reason,
            cause,
            witness: None,
            searched_radius: None,
            theoretical_radius: None,
            pattern: pattern.clone(),
            target: PcGroup::new(target.clone()),
        }
    }

    pub fn is_yes(&self) -> bool {
        self.outcome == Outcome::Yes
    }

    /// Largest conjugator length used by the witness.
    pub fn witness_radius(&self) -> Option<u64> {
        self.witness
            .as_ref()
            .map(|w| w.iter().map(|e| e.vertex.conjugator.len() as u64).max().unwrap_or(0))
    }

    /// Re-checks a Yes witness from scratch: images are distinct, each is
    /// the conjugate its provenance claims, and commutation matches the
    /// pattern edges exactly. Non-Yes verdicts must carry no witness.
    pub fn validate(&self) -> bool {
        let Some(witness) = &self.witness else {
            return self.outcome != Outcome::Yes;
        };
        if self.outcome != Outcome::Yes || witness.len() != self.pattern.len() {
            return false;
        }
        let g = &self.target;
        let ok_entries = witness.iter().enumerate().all(|(i, e)| {
            e.pattern == i
                && g.normal_form(&Word::generator(e.vertex.base).conjugate_by(&e.vertex.conjugator))
                    .is_ok_and(|x| x == e.vertex.element)
        });
        if !ok_entries {
            return false;
        }
        for i in 0..witness.len() {
            for j in i + 1..witness.len() {
                let (a, b) = (&witness[i].vertex.element, &witness[j].vertex.element);
                if g.equal(a, b).unwrap_or(true) {
                    return false;
                }
                let commute = g.commutes(a, b).unwrap_or(false);
                if commute != self.pattern.has_edge(i, j) {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let witness = self.witness.as_ref().map(|w| {
            w.iter()
                .map(|e| {
                    json!({
                        "pattern": self.pattern.name(e.pattern),
                        "base": self.target.graph().name(e.vertex.base),
                        "conjugator": self.target.format_word(&e.vertex.conjugator),
                        "element": self.target.format_word(&e.vertex.element),
                    })
                })
                .collect::<Vec<_>>()
        });
        json!({
            "outcome": self.outcome.tag(),
            "reason": self.reason.tag(),
            "cause": self.cause.tag(),
            "witness": witness,
            "searched_radius": self.searched_radius,
        })
    }
}

#[derive(Clone, Debug)]
pub struct DecideOptions {
    /// Largest radius to search; `None` searches up to the theoretical bound.
    pub cap: Option<u64>,
    pub budget: Budget,
    /// Recurse into the factors of a join target before searching balls.
    pub split_joins: bool,
    pub path_convention: PathConvention,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions {
            cap: Some(3),
            budget: Budget::default(),
            split_joins: false,
            path_convention: PathConvention::Edges,
        }
    }
}

impl DecideOptions {
    pub fn with_cap(cap: u64) -> Self {
        DecideOptions { cap: Some(cap), ..Default::default() }
    }

    /// Search all the way to the theoretical radius.
    pub fn full() -> Self {
        DecideOptions { cap: None, ..Default::default() }
    }
}

/// Is `delta` an induced subgraph of the extension graph of `gamma`?
pub fn decide_ege(
    delta: &SimplicialGraph,
    gamma: &SimplicialGraph,
    opts: &DecideOptions,
) -> Result<Verdict> {
    let bound = theoretical_radius(delta, gamma)?;
    if opts.split_joins && gamma.len() > 1 && is_join(gamma) {
        return decide_ege_split(delta, gamma, opts, bound);
    }
    let mut v = search_balls(delta, gamma, opts, &bound);
    v.theoretical_radius = Some(bound);
    Ok(v)
}

fn search_balls(
    delta: &SimplicialGraph,
    gamma: &SimplicialGraph,
    opts: &DecideOptions,
    bound: &BigUint,
) -> Verdict {
    let bound_u64 = bound.to_u64().unwrap_or(u64::MAX);
    let limit = opts.cap.map_or(bound_u64, |c| c.min(bound_u64));
    let mut verdict = Verdict::without_search(
        Outcome::Inconclusive,
        Reason::ExtensionGraphSearch,
        Cause::RadiusCap,
        delta,
        gamma,
    );
    let mut ball = Ball::origin(gamma, opts.budget);
    loop {
        if let Some(f) = find_induced_embedding(delta, ball.graph()) {
            verdict.outcome = Outcome::Yes;
            verdict.cause = Cause::EmbeddingFound;
            verdict.witness = Some(
                f.into_iter()
                    .enumerate()
                    .map(|(p, h)| WitnessEntry { pattern: p, vertex: ball.vertex(h).clone() })
                    .collect(),
            );
            return verdict;
        }
        if ball.is_stable() {
            verdict.outcome = Outcome::No;
            verdict.cause = Cause::BallStable;
            return verdict;
        }
        if ball.radius() >= limit {
            if BigUint::from(ball.radius()) >= *bound {
                verdict.outcome = Outcome::No;
                verdict.cause = Cause::RadiusBoundExhausted;
            } else {
                verdict.searched_radius = Some(ball.radius());
            }
            return verdict;
        }
        let reached = ball.radius();
        ball = match ball.grow() {
            Ok(b) => b,
            Err(_) => {
                verdict.cause = Cause::BudgetExceeded;
                verdict.searched_radius = Some(reached);
                return verdict;
            }
        };
    }
}

/// The extension graph of a join is the join of the extension graphs of its
/// factors, so `delta` embeds iff its co-components can be distributed over
/// the factors with every share embedding into its factor.
fn decide_ege_split(
    delta: &SimplicialGraph,
    gamma: &SimplicialGraph,
    opts: &DecideOptions,
    bound: BigUint,
) -> Result<Verdict> {
    let factors: Vec<Vec<usize>> = gamma.complement().connected_components();
    let factor_graphs: Vec<SimplicialGraph> = factors
        .iter()
        .map(|f| gamma.induced_subgraph(f))
        .collect::<Result<_>>()?;
    let cocomponents = delta.complement().connected_components();
    let (k, c) = (factors.len(), cocomponents.len());
    let sub_opts = DecideOptions { split_joins: false, ..opts.clone() };

    let mut cache: HashMap<(usize, Vec<usize>), Verdict> = HashMap::new();
    let mut any_open = false;
    let mut budget_hit = false;
    let mut searched: Option<u64> = None;
    let mut assignment = vec![0usize; c];
    'assignments: loop {
        let mut shares: Vec<Vec<usize>> = vec![Vec::new(); k];
        for (comp, &f) in cocomponents.iter().zip(&assignment) {
            shares[f].extend(comp.iter().copied());
        }
        let mut all_yes = true;
        let mut definitive_no = false;
        for (f, share) in shares.iter_mut().enumerate() {
            if share.is_empty() {
                continue;
            }
            share.sort_unstable();
            let key = (f, share.clone());
            if !cache.contains_key(&key) {
                let part = delta.induced_subgraph(share)?;
                let sub_bound = theoretical_radius(&part, &factor_graphs[f])?;
                let v = search_balls(&part, &factor_graphs[f], &sub_opts, &sub_bound);
                cache.insert(key.clone(), v);
            }
            let v = &cache[&key];
            match v.outcome {
                Outcome::Yes => {}
                Outcome::No => {
                    definitive_no = true;
                    all_yes = false;
                }
                Outcome::Inconclusive => {
                    all_yes = false;
                    budget_hit |= v.cause == Cause::BudgetExceeded;
                    searched = Some(searched.map_or(v.searched_radius.unwrap_or(0), |s: u64| {
                        s.min(v.searched_radius.unwrap_or(0))
                    }));
                }
            }
        }
        if all_yes {
            let mut witness: Vec<Option<WitnessEntry>> = vec![None; delta.len()];
            for (f, share) in shares.iter().enumerate() {
                if share.is_empty() {
                    continue;
                }
                let sub = &cache[&(f, share.clone())];
                for e in sub.witness.as_ref().expect("yes carries a witness") {
                    let lift = |w: &Word| -> Word {
                        w.letters()
                            .iter()
                            .map(|l| Letter { generator: factors[f][l.generator], inverse: l.inverse })
                            .collect()
                    };
                    witness[share[e.pattern]] = Some(WitnessEntry {
                        pattern: share[e.pattern],
                        vertex: ExtVertex {
                            base: factors[f][e.vertex.base],
                            element: lift(&e.vertex.element),
                            conjugator: lift(&e.vertex.conjugator),
                        },
                    });
                }
            }
            let mut v = Verdict::without_search(
                Outcome::Yes,
                Reason::ExtensionGraphSearch,
                Cause::EmbeddingFound,
                delta,
                gamma,
            );
            v.witness = Some(witness.into_iter().map(|e| e.expect("every vertex placed")).collect());
            v.theoretical_radius = Some(bound);
            return Ok(v);
        }
        any_open |= !definitive_no;
        // next assignment in lexicographic order
        for slot in assignment.iter_mut().rev() {
            *slot += 1;
            if *slot < k {
                continue 'assignments;
            }
            *slot = 0;
        }
        break;
    }
    let mut v = Verdict::without_search(
        Outcome::No,
        Reason::ExtensionGraphSearch,
        Cause::JoinFactorsExhausted,
        delta,
        gamma,
    );
    if any_open {
        v.outcome = Outcome::Inconclusive;
        v.cause = if budget_hit { Cause::BudgetExceeded } else { Cause::RadiusCap };
        v.searched_radius = searched;
    }
    v.theoretical_radius = Some(bound);
    Ok(v)
}

/// Does `G(delta)` embed in `G(gamma)`? Answers only for the classes where
/// this reduces to cliques or to extension-graph embeddings.
pub fn decide_embedding(
    delta: &SimplicialGraph,
    gamma: &SimplicialGraph,
    opts: &DecideOptions,
) -> Result<Verdict> {
    if delta.is_empty() || gamma.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if is_clique(delta) {
        let mut v = Verdict::without_search(Outcome::No, Reason::CliqueSource, Cause::CliqueSize, delta, gamma);
        if let Some(f) = find_induced_embedding(delta, gamma) {
            v.outcome = Outcome::Yes;
            v.witness = Some(radius_zero_witness(&f));
        }
        return Ok(v);
    }
    if is_clique(gamma) {
        return Ok(Verdict::without_search(Outcome::No, Reason::CliqueTarget, Cause::CliqueSize, delta, gamma));
    }
    let reason = if is_forest(delta) {
        Reason::ForestSource
    } else if is_forest(&delta.complement()) {
        Reason::ComplementOfForestSource
    } else if is_triangle_free(gamma) {
        Reason::TriangleFreeTarget
    } else if is_triangle_built_with(gamma, opts.path_convention) {
        Reason::TriangleBuiltTarget
    } else {
        return Ok(Verdict::without_search(
            Outcome::Inconclusive,
            Reason::NotCovered,
            Cause::OpenProblem,
            delta,
            gamma,
        ));
    };
    let mut v = decide_ege(delta, gamma, opts)?;
    v.reason = reason;
    Ok(v)
}

fn radius_zero_witness(f: &[usize]) -> Vec<WitnessEntry> {
    f.iter()
        .enumerate()
        .map(|(p, &h)| WitnessEntry {
            pattern: p,
            vertex: ExtVertex {
                base: h,
                element: Word::generator(h),
                conjugator: Word::empty(),
            },
        })
        .collect()
}

/// An assignment of target words to source generators.
#[derive(Clone, Debug)]
pub struct GeneratorMap {
    source: SimplicialGraph,
    target: PcGroup,
    images: Vec<Word>,
}

impl GeneratorMap {
    pub fn new(source: SimplicialGraph, target: SimplicialGraph, images: Vec<Word>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(Error::LengthMismatch { expected: source.len(), got: images.len() });
        }
        let target = PcGroup::new(target);
        for w in &images {
            target.check_word(w)?;
        }
        Ok(GeneratorMap { source, target, images })
    }

    pub fn source(&self) -> &SimplicialGraph {
        &self.source
    }

    pub fn target(&self) -> &PcGroup {
        &self.target
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// The assignment respects every defining relation of the source.
    pub fn check_homomorphism(&self) -> bool {
        self.source
            .edges()
            .all(|(u, v)| self.target.commutes_unchecked(&self.images[u], &self.images[v]))
    }

    /// Image of a source word, in target normal form.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        let mut out: Vec<Letter> = Vec::new();
        for l in w.letters() {
            let img = self.images.get(l.generator).ok_or(Error::ForeignLetter(l.generator))?;
            if l.inverse {
                out.extend(img.inverse().letters());
            } else {
                out.extend(img.letters());
            }
        }
        Ok(self.target.nf(&out))
    }

    /// For each listed word, triviality in the source matches triviality of
    /// its image.
    pub fn is_injective_on(&self, words: &[Word]) -> Result<bool> {
        let source = PcGroup::new(self.source.clone());
        for w in words {
            if source.is_trivial(w)? != self.apply(w)?.is_empty() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &GeneratorMap) -> Result<GeneratorMap> {
        if next.source != *self.target.graph() {
            return Err(Error::MalformedGraph("maps are not composable".into()));
        }
        let images = self.images.iter().map(|w| next.apply(w)).collect::<Result<_>>()?;
        Ok(GeneratorMap {
            source: self.source.clone(),
            target: next.target.clone(),
            images,
        })
    }
}

/// Left-normed commutator `[x₁, …, x_k]` with `[x, y] = x⁻¹y⁻¹xy` and
/// `[x₁, …, x_k] = [x₁, …, x_{k-1}]⁻¹ x_k⁻¹ [x₁, …, x_{k-1}] x_k`. Unreduced.
pub fn iterated_commutator(vertices: &[usize]) -> Result<Word> {
    check_distinct(vertices)?;
    let mut c = Word::generator(vertices[0]);
    for &x in &vertices[1..] {
        let x = Word::generator(x);
        c = Word::product([&c.inverse(), &x.inverse(), &c, &x]);
    }
    Ok(c)
}

fn check_distinct(vertices: &[usize]) -> Result<()> {
    if vertices.len() < 2 {
        return Err(Error::CommutatorTooShort(vertices.len()));
    }
    for (i, v) in vertices.iter().enumerate() {
        if vertices[..i].contains(v) {
            return Err(Error::RepeatedVertex(*v));
        }
    }
    Ok(())
}

/// Every prefix `{x₁, x₂}, …, {x₁, …, x_k}` spans a connected subgraph of
/// the complement of `g`.
pub fn commutator_nontrivial_criterion(g: &SimplicialGraph, vertices: &[usize]) -> Result<bool> {
    check_distinct(vertices)?;
    for &v in vertices {
        g.check(v)?;
    }
    let co = g.complement();
    Ok((2..=vertices.len()).all(|k| co.components_within(&vertices[..k]).len() == 1))
}

/// One vertex per block of each tuple entry, coloured by entry (from 1).
/// Vertices are adjacent when their block elements commute; equal blocks in
/// different entries are kept apart and joined by an edge.
pub fn coloured_block_graph(gamma: &PcGroup, tuple: &[Word]) -> Result<ColouredGraph> {
    let mut names = Vec::new();
    let mut colours = Vec::new();
    let mut elements: Vec<Word> = Vec::new();
    for (i, w) in tuple.iter().enumerate() {
        if gamma.is_trivial(w)? {
            return Err(Error::TrivialElement);
        }
        let d = gamma.block_decomposition(w)?;
        for (j, b) in d.blocks.iter().enumerate() {
            let elt = b.root.pow(b.exponent as i64).conjugate_by(&d.conjugator);
            elements.push(gamma.normal_form(&elt)?);
            names.push(format!("g{}.{}", i + 1, j + 1));
            colours.push(i + 1);
        }
    }
    let mut edges = Vec::new();
    for i in 0..elements.len() {
        for j in i + 1..elements.len() {
            if elements[i] == elements[j] || gamma.commutes_unchecked(&elements[i], &elements[j]) {
                edges.push((i, j));
            }
        }
    }
    ColouredGraph::new(SimplicialGraph::from_index_edges(names, edges)?, colours)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> SimplicialGraph {
        SimplicialGraph::from_edges(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap()
    }

    fn star3() -> SimplicialGraph {
        SimplicialGraph::from_edges(
            &["x", "y1", "y2", "y3"],
            &[("x", "y1"), ("x", "y2"), ("x", "y3")],
        )
        .unwrap()
    }

    fn two_k2() -> SimplicialGraph {
        SimplicialGraph::from_edges(&["p", "q", "r", "s"], &[("p", "q"), ("r", "s")]).unwrap()
    }

    #[test]
    fn star_into_p3_extension_graph() {
        let v = decide_ege(&star3(), &p3(), &DecideOptions::default()).unwrap();
        assert_eq!(v.outcome, Outcome::Yes);
        assert!(v.validate());
        assert_eq!(v.witness_radius(), Some(1));
        let g = &v.target;
        let imgs: Vec<String> = v
            .witness
            .as_ref()
            .unwrap()
            .iter()
            .map(|e| g.format_word(&e.vertex.element))
            .collect();
        assert_eq!(imgs, ["b", "a", "c", "c a c^-1"]);
    }

    #[test]
    fn two_k2_is_inconclusive_at_cap() {
        let v = decide_ege(&two_k2(), &p3(), &DecideOptions::with_cap(3)).unwrap();
        assert_eq!(v.outcome, Outcome::Inconclusive);
        assert_eq!(v.searched_radius, Some(3));
        assert!(v.witness.is_none());
        assert_eq!(v.cause, Cause::RadiusCap);
    }

    #[test]
    fn split_joins_agrees_on_p3() {
        let opts = DecideOptions { split_joins: true, ..DecideOptions::with_cap(3) };
        let v = decide_ege(&star3(), &p3(), &opts).unwrap();
        assert_eq!(v.outcome, Outcome::Yes);
        assert!(v.validate());
        let v = decide_ege(&two_k2(), &p3(), &opts).unwrap();
        // 2K2 cannot use the central factor, and the free factor on {a, c}
        // has an edgeless extension graph: the ball is stable-free but the
        // {b} factor is abelian, so some assignments fail definitively.
        assert_ne!(v.outcome, Outcome::Yes);
    }

    #[test]
    fn clique_dispatch() {
        let k2 = SimplicialGraph::complete(2);
        let k3 = SimplicialGraph::complete(3);
        let v = decide_embedding(&k2, &k3, &DecideOptions::default()).unwrap();
        assert_eq!((v.outcome, v.reason), (Outcome::Yes, Reason::CliqueSource));
        assert!(v.validate());
        let v = decide_embedding(&k3, &k2, &DecideOptions::default()).unwrap();
        assert_eq!((v.outcome, v.reason), (Outcome::No, Reason::CliqueSource));
        let v = decide_embedding(&p3(), &k3, &DecideOptions::default()).unwrap();
        assert_eq!((v.outcome, v.reason), (Outcome::No, Reason::CliqueTarget));
    }

    #[test]
    fn class_dispatch() {
        let v = decide_embedding(&star3(), &p3(), &DecideOptions::default()).unwrap();
        assert_eq!((v.outcome, v.reason), (Outcome::Yes, Reason::ForestSource));
        let c4 = SimplicialGraph::cycle(4);
        let v = decide_embedding(&c4, &p3(), &DecideOptions::with_cap(3)).unwrap();
        assert_eq!(
            (v.outcome, v.reason, v.searched_radius),
            (Outcome::Inconclusive, Reason::ComplementOfForestSource, Some(3))
        );
        let c5 = SimplicialGraph::cycle(5);
        let v = decide_embedding(&c5, &c5, &DecideOptions::with_cap(0)).unwrap();
        assert_eq!((v.outcome, v.reason), (Outcome::Yes, Reason::TriangleFreeTarget));
    }

    #[test]
    fn abelian_target_gives_definitive_no() {
        let v = decide_ege(&p3(), &SimplicialGraph::complete(3), &DecideOptions::full()).unwrap();
        assert_eq!((v.outcome, v.cause), (Outcome::No, Cause::BallStable));
    }

    #[test]
    fn homomorphism_checks() {
        let g = PcGroup::new(p3());
        let w = |s: &str| g.parse_word(s).unwrap();
        let id = GeneratorMap::new(p3(), p3(), vec![w("a"), w("b"), w("c")]).unwrap();
        assert!(id.check_homomorphism());
        let x = w("c b a c^-1 a");
        assert_eq!(id.apply(&x).unwrap(), g.normal_form(&x).unwrap());
        let swap = GeneratorMap::new(p3(), p3(), vec![w("a"), w("c"), w("b")]).unwrap();
        assert!(!swap.check_homomorphism());
        let trivial = GeneratorMap::new(p3(), p3(), vec![Word::empty(); 3]).unwrap();
        assert!(trivial.check_homomorphism());
        assert!(trivial.apply(&x).unwrap().is_empty());
        assert!(GeneratorMap::new(p3(), p3(), vec![Word::empty(); 2]).is_err());
    }

    #[test]
    fn retraction_of_inflation() {
        let infl = p3().inflation(2).unwrap();
        let images = (0..6).map(|i| Word::generator(i / 2)).collect();
        let r = GeneratorMap::new(infl.clone(), p3(), images).unwrap();
        assert!(r.check_homomorphism());
        let src = PcGroup::new(infl);
        let x = src.parse_word("a#1 a#2").unwrap();
        assert_eq!(r.target().format_word(&r.apply(&x).unwrap()), "a a");
    }

    #[test]
    fn injectivity_checks() {
        let g = PcGroup::new(p3());
        let w = |s: &str| g.parse_word(s).unwrap();
        let words = [w("b"), w("a c a^-1 c^-1")];
        let id = GeneratorMap::new(p3(), p3(), vec![w("a"), w("b"), w("c")]).unwrap();
        assert!(id.is_injective_on(&words).unwrap());
        let trivial = GeneratorMap::new(p3(), p3(), vec![Word::empty(); 3]).unwrap();
        assert!(!trivial.is_injective_on(&[w("a")]).unwrap());
        let kill_b = GeneratorMap::new(p3(), p3(), vec![w("a"), Word::empty(), w("c")]).unwrap();
        assert!(!kill_b.is_injective_on(&words).unwrap());
    }

    #[test]
    fn commutator_examples() {
        let g = PcGroup::new(p3());
        let ac = iterated_commutator(&[0, 2]).unwrap();
        assert_eq!(g.format_word(&ac), "a^-1 c^-1 a c");
        assert!(g.is_trivial(&iterated_commutator(&[0, 1]).unwrap()).unwrap());
        assert!(g.is_trivial(&iterated_commutator(&[0, 2, 1]).unwrap()).unwrap());
        assert_eq!(iterated_commutator(&[0]), Err(Error::CommutatorTooShort(1)));
        assert_eq!(iterated_commutator(&[0, 2, 0]), Err(Error::RepeatedVertex(0)));
        assert!(commutator_nontrivial_criterion(&p3(), &[0, 2]).unwrap());
        assert!(!commutator_nontrivial_criterion(&p3(), &[0, 1]).unwrap());
        assert!(!commutator_nontrivial_criterion(&p3(), &[0, 2, 1]).unwrap());
        assert!(commutator_nontrivial_criterion(&p3(), &[0, 0]).is_err());
    }

    #[test]
    fn coloured_block_graph_examples() {
        let g = PcGroup::new(p3());
        let w = |s: &str| g.parse_word(s).unwrap();
        let cg = coloured_block_graph(&g, &[w("a"), w("a")]).unwrap();
        assert_eq!(cg.graph().len(), 2);
        assert_eq!(cg.colours(), &[1, 2]);
        assert!(cg.graph().has_edge(0, 1));
        let cg = coloured_block_graph(&g, &[w("a c"), w("b")]).unwrap();
        assert_eq!(cg.graph().len(), 2);
        assert!(cg.graph().has_edge(0, 1));
        let cg = coloured_block_graph(&g, &[w("a"), w("c")]).unwrap();
        assert_eq!(cg.graph().edge_count(), 0);
        let cg = coloured_block_graph(&g, &[w("a b"), w("c")]).unwrap();
        assert_eq!(cg.colours(), &[1, 1, 2]);
        assert_eq!(cg.graph().edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(coloured_block_graph(&g, &[Word::empty()]).unwrap_err(), Error::TrivialElement);
    }
}
