//! Finite balls of the extension graph.
//!
//! A vertex of the extension graph is a conjugate `v·y·v⁻¹` of a generator
//! `y`; two vertices are adjacent when they commute. The ball of radius `r`
//! holds the conjugates with `|v| <= r`.

use std::collections::HashMap;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::SimplicialGraph;
use crate::word::{Letter, PcGroup, Word};

/// A conjugate of a generator. `element` is the normal form of
/// `conjugator · base · conjugator⁻¹` and identifies the vertex;
/// `conjugator` is the unique shortest conjugator, in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtVertex {
    pub base: usize,
    pub element: Word,
    pub conjugator: Word,
}

/// Caps on ball construction. Exceeding either is reported as
/// [`Error::BudgetExceeded`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_vertices: usize,
    pub max_conjugates: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_vertices: 100_000,
            max_conjugates: 5_000_000,
        }
    }
}

impl PcGroup {
    /// The extension-graph vertex `v·base·v⁻¹`.
    ///
    /// Conjugators differing by an element of the centraliser of `base`,
    /// which is generated by the closed star of `base`, give the same vertex;
    /// the stored conjugator is `v` with every right divisor in that star
    /// stripped off.
    pub fn canonical_vertex(&self, base: usize, v: &Word) -> Result<ExtVertex> {
        self.graph().check(base)?;
        self.check_word(v)?;
        Ok(self.canonical_vertex_unchecked(base, v))
    }

    pub(crate) fn canonical_vertex_unchecked(&self, base: usize, v: &Word) -> ExtVertex {
        let mut conj = self.nf(v.letters()).letters().to_vec();
        let in_star = |g: usize| g == base || self.adjacent(g, base);
        // drop trailing occurrences that lie in the star and can move to the end
        loop {
            let strip = (0..conj.len()).rev().find(|&i| {
                let l = conj[i];
                in_star(l.generator)
                    && conj[i + 1..]
                        .iter()
                        .all(|e| e.generator != l.generator && self.adjacent(e.generator, l.generator))
            });
            match strip {
                Some(i) => {
                    conj.remove(i);
                }
                None => break,
            }
        }
        let conjugator = self.nf(&conj);
        let element = self.nf(Word::generator(base).conjugate_by(&conjugator).letters());
        ExtVertex { base, element, conjugator }
    }
}

/// `B(Γ^e, r)` together with the provenance of each vertex.
///
/// Vertices are ordered by conjugator length, then base generator, then
/// conjugator in shortlex order. Growing the ball appends vertices, so
/// indices stay valid across radii.
#[derive(Clone, Debug)]
pub struct Ball {
    group: PcGroup,
    radius: u64,
    vertices: Vec<ExtVertex>,
    graph: SimplicialGraph,
    index: HashMap<Word, usize>,
    frontier: usize,
    conjugates: u64,
    budget: Budget,
}

impl Ball {
    /// Radius-0 ball: the generators themselves.
    pub fn origin(source: &SimplicialGraph, budget: Budget) -> Self {
        let group = PcGroup::new(source.clone());
        let vertices: Vec<ExtVertex> = (0..source.len())
            .map(|y| ExtVertex {
                base: y,
                element: Word::generator(y),
                conjugator: Word::empty(),
            })
            .collect();
        let index = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.element.clone(), i))
            .collect();
        Ball {
            group,
            radius: 0,
            vertices,
            graph: source.clone(),
            index,
            frontier: 0,
            conjugates: 0,
            budget,
        }
    }

    pub fn new(source: &SimplicialGraph, radius: u64, budget: Budget) -> Result<Self> {
        let mut ball = Ball::origin(source, budget);
        while ball.radius < radius {
            ball = ball.grow()?;
        }
        Ok(ball)
    }

    /// The ball of radius one larger.
    pub fn grow(mut self) -> Result<Ball> {
        let target = self.radius + 1;
        let old = self.vertices.len();
        let letters: Vec<Letter> = (0..self.group.rank())
            .flat_map(|g| [Letter::pos(g), Letter::neg(g)])
            .collect();
        let mut fresh: Vec<ExtVertex> = Vec::new();
        let mut fresh_index: HashMap<Word, usize> = HashMap::new();
        for v in &self.vertices[self.frontier..] {
            for &x in &letters {
                self.conjugates += 1;
                if self.conjugates > self.budget.max_conjugates {
                    return Err(self.budget_error("conjugates", target));
                }
                let xw = Word::new(vec![x]);
                let element = self.group.nf(v.element.conjugate_by(&xw).letters());
                if self.index.contains_key(&element) || fresh_index.contains_key(&element) {
                    continue;
                }
                let conjugator = self.group.nf(xw.concat(&v.conjugator).letters());
                let cand = self.group.canonical_vertex_unchecked(v.base, &conjugator);
                debug_assert_eq!(cand.element, element);
                if cand.conjugator.len() as u64 != target {
                    continue;
                }
                fresh_index.insert(element, fresh.len());
                fresh.push(cand);
                if old + fresh.len() > self.budget.max_vertices {
                    return Err(self.budget_error("vertices", target));
                }
            }
        }
        fresh.sort_by(|a, b| {
            a.base
                .cmp(&b.base)
                .then_with(|| a.conjugator.shortlex_cmp(&b.conjugator))
        });
        for v in fresh {
            let name = self.group.format_word(&v.element);
            let id = self.graph.push_vertex(name)?;
            self.index.insert(v.element.clone(), id);
            self.vertices.push(v);
        }
        let group = &self.group;
        let vertices = &self.vertices;
        let new_edges: Vec<(usize, usize)> = (old..vertices.len())
            .into_par_iter()
            .flat_map_iter(|i| {
                (0..i)
                    .filter(move |&j| group.commutes_unchecked(&vertices[i].element, &vertices[j].element))
                    .map(move |j| (j, i))
            })
            .collect();
        for (u, v) in new_edges {
            self.graph.add_edge(u, v);
        }
        self.frontier = old;
        self.radius = target;
        Ok(self)
    }

    fn budget_error(&self, what: &'static str, radius: u64) -> Error {
        Error::BudgetExceeded {
            what,
            radius,
            reached: self.radius,
        }
    }

    pub fn radius(&self) -> u64 {
        self.radius
    }

    pub fn group(&self) -> &PcGroup {
        &self.group
    }

    pub fn source(&self) -> &SimplicialGraph {
        self.group.graph()
    }

    pub fn graph(&self) -> &SimplicialGraph {
        &self.graph
    }

    pub fn vertices(&self) -> &[ExtVertex] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &ExtVertex {
        &self.vertices[i]
    }

    /// Index of the vertex whose element has this normal form.
    pub fn find(&self, element: &Word) -> Option<usize> {
        self.index.get(element).copied()
    }

    /// True once the last growth step added nothing, i.e. the ball is the
    /// whole extension graph.
    pub fn is_stable(&self) -> bool {
        self.radius > 0 && self.frontier == self.vertices.len()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let mut v = self.graph.to_json_value();
        let provenance: Vec<serde_json::Value> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, x)| {
                json!({
                    "vertex": self.graph.name(i),
                    "base": self.source().name(x.base),
                    "conjugator": self.group.format_word(&x.conjugator),
                    "element": self.group.format_word(&x.element),
                })
            })
            .collect();
        v["provenance"] = json!(provenance);
        v["radius"] = json!(self.radius);
        v
    }
}

/// `n²M` for connected `delta`, otherwise `4Kn²M^(K+1)`, where `K` counts the
/// components of `delta`, `n = |V(delta)|` and `M = |V(gamma)|`.
pub fn theoretical_radius(delta: &SimplicialGraph, gamma: &SimplicialGraph) -> Result<BigUint> {
    if delta.is_empty() || gamma.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let k = delta.connected_components().len() as u32;
    let n = BigUint::from(delta.len());
    let m = BigUint::from(gamma.len());
    let n2 = &n * &n;
    if k == 1 {
        Ok(n2 * m)
    } else {
        Ok(BigUint::from(4u32) * BigUint::from(k) * n2 * m.pow(k + 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic;

    fn p3() -> SimplicialGraph {
        SimplicialGraph::from_edges(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap()
    }

    #[test]
    fn canonical_vertex_examples() {
        let g = PcGroup::new(p3());
        let w = |s: &str| g.parse_word(s).unwrap();
        let v = g.canonical_vertex(0, &w("b")).unwrap();
        assert_eq!(g.format_word(&v.element), "a");
        assert!(v.conjugator.is_empty());
        let v = g.canonical_vertex(0, &w("c")).unwrap();
        assert_eq!(g.format_word(&v.element), "c a c^-1");
        assert_eq!(g.format_word(&v.conjugator), "c");
        let v = g.canonical_vertex(2, &Word::empty()).unwrap();
        assert_eq!(g.format_word(&v.element), "c");
        let v = g.canonical_vertex(0, &w("c a b a c^-1 a")).unwrap();
        assert_eq!(g.format_word(&v.conjugator), "c a a c^-1");
        assert!(g.canonical_vertex(3, &Word::empty()).is_err());
    }

    #[test]
    fn radius_zero_is_source() {
        let b = Ball::new(&p3(), 0, Budget::default()).unwrap();
        assert_eq!(b.graph(), &p3());
    }

    #[test]
    fn p3_ball_of_radius_one() {
        let b = Ball::new(&p3(), 1, Budget::default()).unwrap();
        let names: Vec<&str> = b.graph().names().iter().map(String::as_str).collect();
        assert_eq!(names, ["a", "b", "c", "c a c^-1", "c^-1 a c", "a c a^-1", "a^-1 c a"]);
        // b is central; everything else is pairwise non-commuting
        for i in 0..b.graph().len() {
            for j in i + 1..b.graph().len() {
                assert_eq!(b.graph().has_edge(i, j), i == 1 || j == 1);
            }
        }
    }

    #[test]
    fn abelian_balls_do_not_grow() {
        let k3 = SimplicialGraph::complete(3);
        let b = Ball::new(&k3, 2, Budget::default()).unwrap();
        assert!(is_isomorphic(b.graph(), &k3));
        assert!(b.is_stable());
    }

    #[test]
    fn budget_trips_loudly() {
        let budget = Budget { max_vertices: 6, max_conjugates: 1000 };
        let err = Ball::new(&p3(), 1, budget).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { what: "vertices", radius: 1, reached: 0 }));
        let budget = Budget { max_vertices: 1000, max_conjugates: 5 };
        let err = Ball::new(&p3(), 1, budget).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { what: "conjugates", .. }));
    }

    #[test]
    fn radius_formula() {
        let p3 = p3();
        assert_eq!(theoretical_radius(&p3, &p3).unwrap(), BigUint::from(27u32));
        let two_k2 = SimplicialGraph::edgeless(2)
            .substitute(&[SimplicialGraph::complete(2), SimplicialGraph::complete(2)])
            .unwrap();
        assert_eq!(theoretical_radius(&two_k2, &p3).unwrap(), BigUint::from(3456u32));
        let k1 = SimplicialGraph::complete(1);
        assert_eq!(theoretical_radius(&k1, &k1).unwrap(), BigUint::from(1u32));
        assert_eq!(theoretical_radius(&SimplicialGraph::edgeless(0), &k1), Err(Error::EmptyGraph));
    }
}
