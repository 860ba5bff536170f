//! Induced subgraph embeddings.
//!
//! Both searches return the lexicographically least embedding, read as the
//! sequence of host vertices assigned to pattern vertices `0, 1, ..`.

use crate::graph::SimplicialGraph;

/// Backtracking search for an induced embedding of `pattern` into `host`.
///
/// Pattern vertices are assigned in order and host candidates are tried in
/// increasing order, so the first complete assignment is the least one. A
/// candidate must have at least the pattern degree, and when the pattern
/// vertex has an earlier neighbour the candidates are drawn from that
/// neighbour's image adjacency list.
pub fn find_induced_embedding(
    pattern: &SimplicialGraph,
    host: &SimplicialGraph,
) -> Option<Vec<usize>> {
    let p = pattern.len();
    if p > host.len() || pattern.edge_count() > host.edge_count() {
        return None;
    }
    // Earliest earlier neighbour of each pattern vertex, if any.
    let anchor: Vec<Option<usize>> = (0..p)
        .map(|i| pattern.neighbors(i).iter().copied().find(|&j| j < i))
        .collect();
    let mut image = Vec::with_capacity(p);
    let mut used = vec![false; host.len()];
    if extend(pattern, host, &anchor, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

fn extend(
    pattern: &SimplicialGraph,
    host: &SimplicialGraph,
    anchor: &[Option<usize>],
    image: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let i = image.len();
    if i == pattern.len() {
        return true;
    }
    let fits = |c: usize, image: &[usize]| {
        host.degree(c) >= pattern.degree(i)
            && image
                .iter()
                .enumerate()
                .all(|(k, &hk)| pattern.has_edge(i, k) == host.has_edge(c, hk))
    };
    let all: Vec<usize>;
    let candidates: &[usize] = match anchor[i] {
        Some(j) => host.neighbors(image[j]),
        None => {
            all = (0..host.len()).collect();
            &all
        }
    };
    for &c in candidates {
        if used[c] || !fits(c, image) {
            continue;
        }
        used[c] = true;
        image.push(c);
        if extend(pattern, host, anchor, image, used) {
            return true;
        }
        image.pop();
        used[c] = false;
    }
    false
}

/// Exhaustive reference search over all injections in lexicographic order.
/// Only meant for small patterns.
pub fn brute_force_induced_embedding(
    pattern: &SimplicialGraph,
    host: &SimplicialGraph,
) -> Option<Vec<usize>> {
    fn go(
        pattern: &SimplicialGraph,
        host: &SimplicialGraph,
        image: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        if image.len() == pattern.len() {
            let n = image.len();
            return (0..n).all(|u| {
                (u + 1..n).all(|v| pattern.has_edge(u, v) == host.has_edge(image[u], image[v]))
            });
        }
        for c in 0..host.len() {
            if used[c] {
                continue;
            }
            used[c] = true;
            image.push(c);
            if go(pattern, host, image, used) {
                return true;
            }
            image.pop();
            used[c] = false;
        }
        false
    }
    let mut image = Vec::new();
    let mut used = vec![false; host.len()];
    go(pattern, host, &mut image, &mut used).then_some(image)
}

pub fn is_isomorphic(g1: &SimplicialGraph, g2: &SimplicialGraph) -> bool {
    g1.len() == g2.len()
        && g1.edge_count() == g2.edge_count()
        && find_induced_embedding(g1, g2).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> SimplicialGraph {
        SimplicialGraph::from_edges(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap()
    }

    #[test]
    fn path_in_cycle() {
        let c5 = SimplicialGraph::cycle(5);
        let f = find_induced_embedding(&p3(), &c5).unwrap();
        assert_eq!(f, vec![0, 1, 2]);
        assert!(find_induced_embedding(&SimplicialGraph::complete(3), &c5).is_none());
    }

    #[test]
    fn brute_force_examples() {
        let k1 = SimplicialGraph::complete(1);
        assert_eq!(brute_force_induced_embedding(&k1, &p3()), Some(vec![0]));
        let k2 = SimplicialGraph::complete(2);
        assert!(brute_force_induced_embedding(&k2, &SimplicialGraph::edgeless(4)).is_none());
        let two_k2 = SimplicialGraph::edgeless(2)
            .substitute(&[k2.clone(), k2.clone()])
            .unwrap();
        let star = SimplicialGraph::from_index_edges(
            (0..5).map(|i| i.to_string()).collect(),
            [(0, 1), (0, 2), (0, 3), (0, 4)],
        )
        .unwrap();
        assert!(brute_force_induced_embedding(&two_k2, &star).is_none());
    }

    #[test]
    fn isomorphism_examples() {
        let c5 = SimplicialGraph::cycle(5);
        let renamed = SimplicialGraph::from_edges(
            &["q", "r", "s", "t", "u"],
            &[("q", "s"), ("s", "u"), ("u", "r"), ("r", "t"), ("t", "q")],
        )
        .unwrap();
        assert!(is_isomorphic(&c5, &renamed));
        assert!(!is_isomorphic(&c5, &SimplicialGraph::cycle(6)));
        assert!(!is_isomorphic(&p3(), &SimplicialGraph::complete(3)));
    }

    #[test]
    fn empty_pattern_embeds_everywhere() {
        let e = SimplicialGraph::edgeless(0);
        assert_eq!(find_induced_embedding(&e, &p3()), Some(vec![]));
        assert_eq!(find_induced_embedding(&e, &e), Some(vec![]));
    }
}
