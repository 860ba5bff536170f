//! Slow, obviously-correct reference implementations used as test oracles,
//! plus seeded generators for graphs and words.
//!
//! Nothing here calls into the normal-form machinery of `pcgroup`; only the
//! plain data types are shared.

use std::collections::{HashMap, HashSet, VecDeque};

use itertools::Itertools;
use pcgroup::{Letter, SimplicialGraph, Word};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn adjacency(g: &SimplicialGraph) -> Vec<Vec<bool>> {
    let n = g.len();
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

/// Decides triviality by exhaustive rewriting: swap adjacent letters on
/// adjacent generators, cancel adjacent inverse pairs. A word is trivial iff
/// the empty word is reachable.
pub struct RewriteOracle {
    adj: Vec<Vec<bool>>,
    memo: HashMap<Vec<Letter>, bool>,
}

impl RewriteOracle {
    pub fn new(g: &SimplicialGraph) -> Self {
        RewriteOracle { adj: adjacency(g), memo: HashMap::new() }
    }

    fn swappable(&self, x: Letter, y: Letter) -> bool {
        x.generator != y.generator && self.adj[x.generator][y.generator]
    }

    /// All rearrangements reachable by commuting swaps.
    fn class(&self, w: &[Letter]) -> Vec<Vec<Letter>> {
        let mut seen: HashSet<Vec<Letter>> = HashSet::from([w.to_vec()]);
        let mut queue = VecDeque::from([w.to_vec()]);
        let mut out = Vec::new();
        while let Some(u) = queue.pop_front() {
            for i in 0..u.len().saturating_sub(1) {
                if self.swappable(u[i], u[i + 1]) {
                    let mut v = u.clone();
                    v.swap(i, i + 1);
                    if seen.insert(v.clone()) {
                        queue.push_back(v);
                    }
                }
            }
            out.push(u);
        }
        out
    }

    pub fn is_trivial_letters(&mut self, w: &[Letter]) -> bool {
        if w.is_empty() {
            return true;
        }
        if w.len() % 2 == 1 {
            return false;
        }
        if let Some(&r) = self.memo.get(w) {
            return r;
        }
        let class = self.class(w);
        let mut result = false;
        'search: for u in &class {
            for i in 0..u.len() - 1 {
                if u[i].inv() == u[i + 1] {
                    let mut v = u.clone();
                    v.drain(i..i + 2);
                    if self.is_trivial_letters(&v) {
                        result = true;
                        break 'search;
                    }
                }
            }
        }
        for u in class {
            self.memo.insert(u, result);
        }
        result
    }

    pub fn is_trivial(&mut self, w: &Word) -> bool {
        self.is_trivial_letters(w.letters())
    }

    pub fn equal(&mut self, a: &Word, b: &Word) -> bool {
        self.is_trivial(&a.concat(&b.inverse()))
    }

    pub fn commute(&mut self, a: &Word, b: &Word) -> bool {
        let c = Word::product([&a.inverse(), &b.inverse(), a, b]);
        self.is_trivial(&c)
    }

    /// Number of memoised words.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }
}

/// Conjugacy by exhaustive search over words reachable through commuting
/// swaps, adjacent cancellation and cyclic rotation. None of these moves
/// lengthens a word, so the search stays within the longer input's length.
/// Two words are conjugate iff their shortest reachable words meet.
pub fn conjugate_by_orbit(g: &SimplicialGraph, a: &Word, b: &Word) -> bool {
    let adj = adjacency(g);
    let shortest = |w: &Word| -> HashSet<Vec<Letter>> {
        let start = w.letters().to_vec();
        let mut seen: HashSet<Vec<Letter>> = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let mut next = Vec::new();
            for i in 0..u.len().saturating_sub(1) {
                let (x, y) = (u[i], u[i + 1]);
                if x.generator != y.generator && adj[x.generator][y.generator] {
                    let mut v = u.clone();
                    v.swap(i, i + 1);
                    next.push(v);
                }
                if x.inv() == y {
                    let mut v = u.clone();
                    v.drain(i..i + 2);
                    next.push(v);
                }
            }
            if !u.is_empty() {
                let mut v = u.clone();
                v.rotate_left(1);
                next.push(v);
            }
            for v in next {
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
        let min = seen.iter().map(Vec::len).min().unwrap_or(0);
        seen.into_iter().filter(|u| u.len() == min).collect()
    };
    let (sa, sb) = (shortest(a), shortest(b));
    sa.iter().any(|u| sb.contains(u))
}

/// Every letter sequence of the given length over `rank` generators.
pub fn all_words(rank: usize, len: usize) -> impl Iterator<Item = Word> {
    let letters: Vec<Letter> = (0..rank).flat_map(|v| [Letter::pos(v), Letter::neg(v)]).collect();
    (0..len)
        .map(move |_| letters.clone())
        .multi_cartesian_product()
        .map(Word::new)
}

/// Ball of the extension graph built from raw conjugator words: every
/// `v y v⁻¹` with `|v| ≤ radius`, deduplicated and joined by the rewriting
/// oracle. Returns the representatives (first occurrence) and the graph on
/// them.
pub fn brute_force_ball(g: &SimplicialGraph, radius: usize) -> (Vec<Word>, SimplicialGraph) {
    let mut oracle = RewriteOracle::new(g);
    let mut reps: Vec<Word> = Vec::new();
    for len in 0..=radius {
        for v in all_words(g.len(), len) {
            for y in 0..g.len() {
                let e = Word::generator(y).conjugate_by(&v);
                if !reps.iter().any(|r| oracle.equal(r, &e)) {
                    reps.push(e);
                }
            }
        }
    }
    let mut edges = Vec::new();
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            if oracle.commute(&reps[i], &reps[j]) {
                edges.push((i, j));
            }
        }
    }
    let names = (0..reps.len()).map(|i| i.to_string()).collect();
    let graph = SimplicialGraph::from_index_edges(names, edges).expect("valid edges");
    (reps, graph)
}

/// Edge bitmask over the pairs `(u, v)`, `u < v`, in lexicographic order.
fn graph_from_mask(n: usize, mask: u64) -> SimplicialGraph {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p);
    let names = (1..=n).map(|i| i.to_string()).collect();
    SimplicialGraph::from_index_edges(names, edges).expect("valid edges")
}

fn canonical_mask(n: usize, mask: u64) -> u64 {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    (0..n)
        .permutations(n)
        .map(|perm| {
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).fold(0u64, |acc, (_, &(u, v))| {
                let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
                acc | 1 << index[&(a, b)]
            })
        })
        .min()
        .unwrap_or(mask)
}

/// One graph per isomorphism class on exactly `n` vertices (`n ≤ 6`).
pub fn all_graphs(n: usize) -> Vec<SimplicialGraph> {
    assert!(n <= 6, "enumeration is exponential");
    let m = n * n.saturating_sub(1) / 2;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0..1u64 << m {
        if seen.insert(canonical_mask(n, mask)) {
            out.push(graph_from_mask(n, mask));
        }
    }
    out
}

/// One graph per isomorphism class on `1..=max_n` vertices.
pub fn all_graphs_up_to(max_n: usize) -> Vec<SimplicialGraph> {
    (1..=max_n).flat_map(all_graphs).collect()
}

/// Erdős-Rényi graph with vertices named `1..=n`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> SimplicialGraph {
    let edges: Vec<(usize, usize)> = (0..n).tuple_combinations().filter(|_| rng.gen_bool(p)).collect();
    let names = (1..=n).map(|i| i.to_string()).collect();
    SimplicialGraph::from_index_edges(names, edges).expect("valid edges")
}

/// Uniform letters, length uniform in `0..=max_len`.
pub fn random_word<R: Rng>(rng: &mut R, rank: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    random_word_of_len(rng, rank, len)
}

pub fn random_word_of_len<R: Rng>(rng: &mut R, rank: usize, len: usize) -> Word {
    (0..len)
        .map(|_| Letter { generator: rng.gen_range(0..rank), inverse: rng.gen_bool(0.5) })
        .collect()
}

/// Largest clique size, by exhaustive subset search.
pub fn clique_number(g: &SimplicialGraph) -> usize {
    (0..g.len())
        .powerset()
        .filter(|s| s.iter().tuple_combinations().all(|(&u, &v)| g.has_edge(u, v)))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_counts_match_known_sequence() {
        let counts: Vec<usize> = (1..=5).map(|n| all_graphs(n).len()).collect();
        assert_eq!(counts, [1, 2, 4, 11, 34]);
    }

    #[test]
    fn oracle_basics() {
        let p3 = SimplicialGraph::path(3);
        let mut o = RewriteOracle::new(&p3);
        let w = |s: &[(usize, bool)]| -> Word {
            s.iter().map(|&(g, i)| Letter { generator: g, inverse: i }).collect()
        };
        assert!(o.is_trivial(&w(&[(0, false), (1, false), (0, true), (1, true)])));
        assert!(!o.is_trivial(&w(&[(0, false), (2, false), (0, true), (2, true)])));
        assert!(conjugate_by_orbit(&p3, &w(&[(0, false)]), &w(&[(2, false), (0, false), (2, true)])));
        assert!(!conjugate_by_orbit(&p3, &w(&[(0, false)]), &w(&[(2, false)])));
    }

    #[test]
    fn word_enumeration_sizes() {
        assert_eq!(all_words(2, 0).count(), 1);
        assert_eq!(all_words(2, 3).count(), 64);
    }
}
