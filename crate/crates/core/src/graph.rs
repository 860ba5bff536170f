//! Finite simplicial graphs and the constructions the deciders build on.
//!
//! Vertices are identified by their position in the vertex list, which is
//! fixed at construction (input order). Names are only used at the edges of
//! the API: parsing, printing and lookups.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite undirected graph without loops or multiple edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialGraph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<[String; 2]>,
}

impl SimplicialGraph {
    /// Edgeless graph on the given vertex names.
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(name.clone()));
            }
        }
        let adj = vec![Vec::new(); names.len()];
        Ok(SimplicialGraph { names, index, adj })
    }

    /// Builds a graph from names and an edge list given by name. Self-loops,
    /// duplicate edges and unknown names are rejected.
    pub fn from_edges<S: AsRef<str>>(names: &[S], edges: &[(S, S)]) -> Result<Self> {
        let mut g = Self::new(names.iter().map(|s| s.as_ref().to_string()))?;
        for (u, v) in edges {
            let (u, v) = (g.vertex(u.as_ref())?, g.vertex(v.as_ref())?);
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from names and index pairs; duplicate pairs are merged.
    pub fn from_index_edges<I>(names: Vec<String>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::new(names)?;
        for (u, v) in edges {
            g.check(u)?;
            g.check(v)?;
            if u == v {
                return Err(Error::SelfLoop(g.names[u].clone()));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(self.names[u].clone()));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(
                self.names[u].clone(),
                self.names[v].clone(),
            ));
        }
        self.add_edge(u, v);
        Ok(())
    }

    /// Inserts an edge, ignoring duplicates.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
        }
    }

    /// Appends an isolated vertex and returns its index.
    pub(crate) fn push_vertex(&mut self, name: String) -> Result<usize> {
        let i = self.names.len();
        if self.index.insert(name.clone(), i).is_some() {
            return Err(Error::DuplicateVertex(name));
        }
        self.names.push(name);
        self.adj.push(Vec::new());
        Ok(i)
    }

    /// Complete graph on vertices named `1..=n`.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::from_index_edges(numbered(n), edges).expect("well-formed")
    }

    /// Edgeless graph on vertices named `1..=n`.
    pub fn edgeless(n: usize) -> Self {
        Self::new(numbered(n)).expect("well-formed")
    }

    /// Path with `n` vertices named `1..=n`.
    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v));
        Self::from_index_edges(numbered(n), edges).expect("well-formed")
    }

    /// Cycle with `n >= 3` vertices named `1..=n`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        let edges = (0..n).map(|v| (v, (v + 1) % n));
        Self::from_index_edges(numbered(n), edges).expect("well-formed")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    /// Looks up a vertex by name.
    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub(crate) fn check(&self, v: usize) -> Result<usize> {
        if v < self.len() {
            Ok(v)
        } else {
            Err(Error::VertexOutOfRange(v))
        }
    }

    /// Sorted neighbour list.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// The graph spanned by `vertices`, listed in the ambient vertex order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Self> {
        let mut keep: Vec<usize> = Vec::with_capacity(vertices.len());
        for &v in vertices {
            keep.push(self.check(v)?);
        }
        keep.sort_unstable();
        keep.dedup();
        let mut pos = vec![usize::MAX; self.len()];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let names = keep.iter().map(|&v| self.names[v].clone()).collect();
        let edges: Vec<_> = self
            .edges()
            .filter(|&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
            .map(|(u, v)| (pos[u], pos[v]))
            .collect();
        Self::from_index_edges(names, edges)
    }

    /// Same as [`induced_subgraph`](Self::induced_subgraph) but selects by name.
    pub fn induced_by_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Self> {
        let vs = names
            .iter()
            .map(|n| self.vertex(n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        self.induced_subgraph(&vs)
    }

    pub fn complement(&self) -> Self {
        let n = self.len();
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v))
            .collect();
        Self::from_index_edges(self.names.clone(), edges).expect("well-formed")
    }

    /// Closed star: `v` together with its neighbours.
    pub fn star(&self, v: usize) -> Result<BTreeSet<usize>> {
        self.check(v)?;
        Ok(self.closed_star(v))
    }

    pub(crate) fn closed_star(&self, v: usize) -> BTreeSet<usize> {
        let mut s: BTreeSet<usize> = self.adj[v].iter().copied().collect();
        s.insert(v);
        s
    }

    /// Components as sorted vertex lists, ordered by least vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        self.components_within(&(0..self.len()).collect::<Vec<_>>())
    }

    /// Components of the subgraph spanned by `subset` (assumed in range).
    pub(crate) fn components_within(&self, subset: &[usize]) -> Vec<Vec<usize>> {
        let mut inside = vec![false; self.len()];
        for &v in subset {
            inside[v] = true;
        }
        let mut seen = vec![false; self.len()];
        let mut order: Vec<usize> = subset.to_vec();
        order.sort_unstable();
        let mut out = Vec::new();
        for &start in &order {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if inside[w] && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Class index of every vertex under equality of closed stars. Classes are
    /// numbered in the order of their least member.
    pub fn star_classes(&self) -> Vec<usize> {
        let mut class = vec![usize::MAX; self.len()];
        let mut reps: Vec<usize> = Vec::new();
        let stars: Vec<BTreeSet<usize>> = (0..self.len()).map(|v| self.closed_star(v)).collect();
        for v in 0..self.len() {
            if let Some(c) = reps.iter().position(|&r| stars[r] == stars[v]) {
                class[v] = c;
            } else {
                class[v] = reps.len();
                reps.push(v);
            }
        }
        class
    }

    /// Quotient by equal closed stars. Each class is represented (and named)
    /// by its least member, so the result is an induced subgraph.
    pub fn deflation(&self) -> Self {
        let class = self.star_classes();
        let reps: Vec<usize> = (0..self.len()).filter(|&v| class[..v].iter().all(|&c| c != class[v])).collect();
        self.induced_subgraph(&reps).expect("representatives are in range")
    }

    /// The `n`-inflation: each vertex `v` becomes a clique `v#1 .. v#n`, and
    /// copies of adjacent vertices are fully joined.
    pub fn inflation(&self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroInflation);
        }
        let parts = vec![Self::complete(n); self.len()];
        self.substitute(&parts)
    }

    /// Replaces vertex `i` of `self` by `parts[i]`, joining parts completely
    /// along the edges of `self`. Vertex `x` of part `i` is named
    /// `<name of i>#<name of x>`.
    pub fn substitute(&self, parts: &[SimplicialGraph]) -> Result<Self> {
        if parts.len() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: parts.len(),
            });
        }
        let mut offset = Vec::with_capacity(parts.len());
        let mut names = Vec::new();
        for (i, part) in parts.iter().enumerate() {
            offset.push(names.len());
            names.extend(part.names.iter().map(|x| format!("{}#{}", self.names[i], x)));
        }
        let mut edges = Vec::new();
        for (i, part) in parts.iter().enumerate() {
            edges.extend(part.edges().map(|(u, v)| (offset[i] + u, offset[i] + v)));
        }
        for (i, j) in self.edges() {
            for u in 0..parts[i].len() {
                for v in 0..parts[j].len() {
                    edges.push((offset[i] + u, offset[j] + v));
                }
            }
        }
        Self::from_index_edges(names, edges)
    }

    /// Parses the graph JSON interchange format.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: GraphJson =
            serde_json::from_str(text).map_err(|e| Error::MalformedGraph(e.to_string()))?;
        let mut g = Self::new(raw.vertices)?;
        for [u, v] in &raw.edges {
            let (u, v) = (g.vertex(u)?, g.vertex(v)?);
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let raw = GraphJson {
            vertices: self.names.clone(),
            edges: self
                .edges()
                .map(|(u, v)| [self.names[u].clone(), self.names[v].clone()])
                .collect(),
        };
        serde_json::to_value(raw).expect("serializable")
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }
}

fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// A graph with a colour index in `1..=k` on every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouredGraph {
    graph: SimplicialGraph,
    colours: Vec<usize>,
}

impl ColouredGraph {
    /// Fails unless there is one colour per vertex and the colours used form
    /// the range `1..=k`.
    pub fn new(graph: SimplicialGraph, colours: Vec<usize>) -> Result<Self> {
        if colours.len() != graph.len() {
            return Err(Error::LengthMismatch {
                expected: graph.len(),
                got: colours.len(),
            });
        }
        let used: BTreeSet<usize> = colours.iter().copied().collect();
        if !used.iter().copied().eq(1..=used.len()) {
            return Err(Error::MalformedGraph(format!(
                "colours {used:?} are not a contiguous range from 1"
            )));
        }
        Ok(ColouredGraph { graph, colours })
    }

    pub fn graph(&self) -> &SimplicialGraph {
        &self.graph
    }

    pub fn colour(&self, v: usize) -> usize {
        self.colours[v]
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    pub fn colour_count(&self) -> usize {
        self.colours.iter().copied().max().unwrap_or(0)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let mut v = self.graph.to_json_value();
        v["colours"] = serde_json::json!(self.colours);
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> SimplicialGraph {
        SimplicialGraph::from_edges(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap()
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn induced_examples() {
        let g = p3();
        let ac = g.induced_by_names(&["a", "c"]).unwrap();
        assert_eq!(ac.len(), 2);
        assert_eq!(ac.edge_count(), 0);
        assert_eq!(g.induced_subgraph(&[0, 1, 2]).unwrap(), g);
        let k4 = SimplicialGraph::complete(4);
        let k3 = k4.induced_subgraph(&[0, 2, 3]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert!(matches!(
            g.induced_by_names(&["a", "z"]),
            Err(Error::UnknownVertex(_))
        ));
        assert!(matches!(
            g.induced_subgraph(&[7]),
            Err(Error::VertexOutOfRange(7))
        ));
    }

    #[test]
    fn complement_examples() {
        let k3 = SimplicialGraph::complete(3);
        assert_eq!(k3.complement().edge_count(), 0);
        let c = p3().complement();
        assert_eq!(c.edges().collect::<Vec<_>>(), vec![(0, 2)]);
        assert_eq!(c.degree(1), 0);
        assert_eq!(c.complement(), p3());
    }

    #[test]
    fn star_examples() {
        assert_eq!(p3().star(1).unwrap(), set(&[0, 1, 2]));
        assert_eq!(SimplicialGraph::edgeless(3).star(2).unwrap(), set(&[2]));
        assert_eq!(SimplicialGraph::complete(3).star(0).unwrap(), set(&[0, 1, 2]));
        assert!(p3().star(3).is_err());
    }

    #[test]
    fn component_examples() {
        assert_eq!(p3().connected_components().len(), 1);
        let two_k2 = SimplicialGraph::from_index_edges(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            [(0, 2), (1, 3)],
        )
        .unwrap();
        assert_eq!(two_k2.connected_components(), vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(SimplicialGraph::edgeless(4).connected_components().len(), 4);
    }

    #[test]
    fn deflation_examples() {
        assert_eq!(SimplicialGraph::complete(3).deflation().len(), 1);
        assert_eq!(p3().deflation(), p3());
        // a and c share the star {a, b, c}
        let k3_minus = SimplicialGraph::from_edges(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        assert_eq!(k3_minus.deflation().names(), &["a".to_string()]);
    }

    #[test]
    fn inflation_examples() {
        let g = p3();
        let one = g.inflation(1).unwrap();
        assert_eq!(one.names(), &["a#1", "b#1", "c#1"]);
        assert_eq!(one.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        let k1 = SimplicialGraph::edgeless(1);
        assert_eq!(k1.inflation(2).unwrap().edge_count(), 1);
        let two = g.inflation(2).unwrap();
        assert_eq!(two.len(), 6);
        let copies: Vec<usize> = ["a#1", "b#1", "c#1"].iter().map(|n| two.vertex(n).unwrap()).collect();
        let back = two.induced_subgraph(&copies).unwrap();
        assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        assert_eq!(g.inflation(0), Err(Error::ZeroInflation));
    }

    #[test]
    fn substitution_examples() {
        let k2 = SimplicialGraph::complete(2);
        let k1 = SimplicialGraph::complete(1);
        let s = k2.substitute(&[k1.clone(), k1.clone()]).unwrap();
        assert_eq!((s.len(), s.edge_count()), (2, 1));
        let g = p3();
        let parts = vec![SimplicialGraph::complete(3); 3];
        assert_eq!(g.substitute(&parts).unwrap(), g.inflation(3).unwrap());
        let e2 = SimplicialGraph::edgeless(2);
        let s = e2.substitute(&[k2.clone(), k2.clone()]).unwrap();
        assert_eq!(s.connected_components().len(), 2);
        assert_eq!(s.edge_count(), 2);
        assert!(matches!(
            e2.substitute(&[k2]),
            Err(Error::LengthMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn json_parsing() {
        let g = SimplicialGraph::from_json(r#"{"vertices":["a","b","c"],"edges":[["b","a"],["b","c"]]}"#).unwrap();
        assert_eq!(g, p3());
        assert_eq!(g.to_json(), r#"{"edges":[["a","b"],["b","c"]],"vertices":["a","b","c"]}"#);
        assert!(matches!(
            SimplicialGraph::from_json(r#"{"vertices":["a"],"edges":[["a","a"]]}"#),
            Err(Error::SelfLoop(_))
        ));
        assert!(matches!(
            SimplicialGraph::from_json(r#"{"vertices":["a","b"],"edges":[["a","b"],["b","a"]]}"#),
            Err(Error::DuplicateEdge(..))
        ));
        assert!(matches!(
            SimplicialGraph::from_json(r#"{"vertices":["a","a"],"edges":[]}"#),
            Err(Error::DuplicateVertex(_))
        ));
        assert!(matches!(
            SimplicialGraph::from_json(r#"{"vertices":["a"],"edges":[["a","b"]]}"#),
            Err(Error::UnknownVertex(_))
        ));
        assert!(matches!(
            SimplicialGraph::from_json(r#"{"vertices":["a","b","c"],"edges":[["a","b","c"]]}"#),
            Err(Error::MalformedGraph(_))
        ));
    }

    #[test]
    fn coloured_graph_colours_must_be_contiguous() {
        let g = SimplicialGraph::edgeless(2);
        assert!(ColouredGraph::new(g.clone(), vec![1, 2]).is_ok());
        assert!(ColouredGraph::new(g.clone(), vec![1, 3]).is_err());
        assert!(ColouredGraph::new(g, vec![1]).is_err());
    }
}
