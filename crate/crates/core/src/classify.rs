//! Graph predicates that select which decision procedure applies.

use serde::Serialize;

use crate::graph::SimplicialGraph;

/// How the `P_3` in "square and `P_3`-free" is measured.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PathConvention {
    /// `P_3` has three edges (four vertices).
    #[default]
    Edges,
    /// `P_3` has three vertices (two edges).
    Vertices,
}

impl PathConvention {
    fn edges_of_p3(self) -> usize {
        match self {
            PathConvention::Edges => 3,
            PathConvention::Vertices => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphReport {
    pub clique: bool,
    pub join: bool,
    pub connected: bool,
    pub forest: bool,
    pub triangle_free: bool,
    pub triangle_built: bool,
    pub complement_of_forest: bool,
    pub atomic: bool,
    pub weakly_chordal: bool,
}

pub fn classify(g: &SimplicialGraph) -> GraphReport {
    classify_with(g, PathConvention::default())
}

pub fn classify_with(g: &SimplicialGraph, convention: PathConvention) -> GraphReport {
    GraphReport {
        clique: is_clique(g),
        join: is_join(g),
        connected: g.is_connected(),
        forest: is_forest(g),
        triangle_free: is_triangle_free(g),
        triangle_built: is_triangle_built_with(g, convention),
        complement_of_forest: is_forest(&g.complement()),
        atomic: is_atomic(g),
        weakly_chordal: is_weakly_chordal(g),
    }
}

pub fn is_clique(g: &SimplicialGraph) -> bool {
    let n = g.len();
    g.edge_count() == n * n.saturating_sub(1) / 2
}

/// The vertex set splits into two non-empty parts that are fully joined.
pub fn is_join(g: &SimplicialGraph) -> bool {
    g.complement().connected_components().len() >= 2
}

pub fn is_forest(g: &SimplicialGraph) -> bool {
    g.edge_count() + g.connected_components().len() == g.len()
}

pub fn is_triangle_free(g: &SimplicialGraph) -> bool {
    !g.edges().any(|(u, v)| {
        g.neighbors(u)
            .iter()
            .any(|&w| w > v && g.has_edge(v, w))
    })
}

/// No induced 4-cycle and no induced `P_3` (three edges).
pub fn is_triangle_built(g: &SimplicialGraph) -> bool {
    is_triangle_built_with(g, PathConvention::Edges)
}

pub fn is_triangle_built_with(g: &SimplicialGraph, convention: PathConvention) -> bool {
    !has_induced_square(g) && !has_induced_path(g, convention.edges_of_p3())
}

/// Literal reading: no triangles and no induced path with more than three
/// edges. This is narrower than the usual notion of weak chordality.
pub fn is_weakly_chordal(g: &SimplicialGraph) -> bool {
    is_triangle_free(g) && !has_induced_path(g, 4)
}

/// Connected, minimum degree at least 2, girth at least 5 and no closed star
/// whose removal leaves two or more components.
pub fn is_atomic(g: &SimplicialGraph) -> bool {
    if g.is_empty() || !g.is_connected() {
        return false;
    }
    if (0..g.len()).any(|v| g.degree(v) < 2) {
        return false;
    }
    if girth(g).is_some_and(|c| c < 5) {
        return false;
    }
    (0..g.len()).all(|v| {
        let star = g.closed_star(v);
        let rest: Vec<usize> = (0..g.len()).filter(|u| !star.contains(u)).collect();
        rest.len() <= 1 || g.components_within(&rest).len() == 1
    })
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(g: &SimplicialGraph) -> Option<usize> {
    let n = g.len();
    let mut best: Option<usize> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

pub fn has_induced_square(g: &SimplicialGraph) -> bool {
    // a-b-c-d-a with a,c and b,d non-adjacent; a is the least vertex.
    for a in 0..g.len() {
        for &b in g.neighbors(a) {
            for &d in g.neighbors(a) {
                if b >= d || b < a || d < a || g.has_edge(b, d) {
                    continue;
                }
                let found = g.neighbors(b).iter().any(|&c| {
                    c > a && c != d && g.has_edge(c, d) && !g.has_edge(a, c)
                });
                if found {
                    return true;
                }
            }
        }
    }
    false
}

/// Whether `g` has an induced path with exactly `edges` edges.
pub fn has_induced_path(g: &SimplicialGraph, edges: usize) -> bool {
    fn grow(g: &SimplicialGraph, path: &mut Vec<usize>, edges: usize) -> bool {
        if path.len() == edges + 1 {
            return true;
        }
        let last = *path.last().expect("non-empty");
        for &w in g.neighbors(last) {
            let ok = path[..path.len() - 1]
                .iter()
                .all(|&u| u != w && !g.has_edge(u, w));
            if ok {
                path.push(w);
                if grow(g, path, edges) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    (0..g.len()).any(|v| grow(g, &mut vec![v], edges))
}
