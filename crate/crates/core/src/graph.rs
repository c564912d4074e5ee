//! Small dense digraphs and graphs on `0..n`, with DOT export.

use std::collections::BTreeSet;
use std::fmt::Write;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    adj: Vec<Vec<bool>>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph {
            adj: vec![vec![false; n]; n],
        }
    }

    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut d = Digraph::new(n);
        for (a, b) in arcs {
            d.add_arc(a, b);
        }
        d
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn add_arc(&mut self, a: usize, b: usize) {
        assert_ne!(a, b, "loops are not allowed");
        self.adj[a][b] = true;
    }

    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        self.adj[a][b]
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|a| (0..n).filter(move |&b| self.adj[a][b]).map(move |b| (a, b)))
            .collect()
    }

    pub fn out_neighbors(&self, a: usize) -> Vec<usize> {
        (0..self.len()).filter(|&b| self.adj[a][b]).collect()
    }

    /// Topological order of the sub-digraph induced by `vertices`, by Kahn's
    /// algorithm taking the smallest available index first. `None` if the
    /// induced sub-digraph has a cycle.
    pub fn topological_order(&self, vertices: &[usize]) -> Option<Vec<usize>> {
        let vs: BTreeSet<usize> = vertices.iter().copied().collect();
        let mut indeg: Vec<usize> = vec![0; self.len()];
        for &a in &vs {
            for &b in &vs {
                if self.adj[a][b] {
                    indeg[b] += 1;
                }
            }
        }
        let mut ready: BTreeSet<usize> = vs.iter().copied().filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(vs.len());
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for &b in &vs {
                if self.adj[v][b] {
                    indeg[b] -= 1;
                    if indeg[b] == 0 {
                        ready.insert(b);
                    }
                }
            }
        }
        (order.len() == vs.len()).then_some(order)
    }

    pub fn induces_acyclic(&self, vertices: &[usize]) -> bool {
        self.topological_order(vertices).is_some()
    }

    pub fn is_acyclic(&self) -> bool {
        let all: Vec<usize> = (0..self.len()).collect();
        self.induces_acyclic(&all)
    }

    /// Vertices of `vertices` with no out-arc into `vertices`.
    pub fn sinks_within(&self, vertices: &[usize]) -> Vec<usize> {
        vertices
            .iter()
            .copied()
            .filter(|&a| vertices.iter().all(|&b| !self.adj[a][b]))
            .collect()
    }

    pub fn to_dot(&self, name: &str, labels: Option<&[String]>) -> String {
        let mut s = format!("digraph {name} {{\n");
        write_nodes(&mut s, self.len(), labels);
        for (a, b) in self.arcs() {
            writeln!(s, "  {a} -> {b};").unwrap();
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<bool>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![vec![false; n]; n],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Graph::new(n);
        for (a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert_ne!(a, b, "loops are not allowed");
        self.adj[a][b] = true;
        self.adj[b][a] = true;
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a][b]
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|a| {
                (a + 1..n)
                    .filter(move |&b| self.adj[a][b])
                    .map(move |b| (a, b))
            })
            .collect()
    }

    pub fn neighbors(&self, a: usize) -> Vec<usize> {
        (0..self.len()).filter(|&b| self.adj[a][b]).collect()
    }

    pub fn degree(&self, a: usize) -> usize {
        self.adj[a].iter().filter(|&&x| x).count()
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &a)| vertices[i + 1..].iter().all(|&b| !self.adj[a][b]))
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &a)| vertices[i + 1..].iter().all(|&b| a != b && self.adj[a][b]))
    }

    /// Whether `colors` assigns adjacent vertices different colors.
    pub fn is_proper_coloring(&self, colors: &[usize]) -> bool {
        colors.len() == self.len() && self.edges().iter().all(|&(a, b)| colors[a] != colors[b])
    }

    pub fn to_dot(&self, name: &str, labels: Option<&[String]>) -> String {
        let mut s = format!("graph {name} {{\n");
        write_nodes(&mut s, self.len(), labels);
        for (a, b) in self.edges() {
            writeln!(s, "  {a} -- {b};").unwrap();
        }
        s.push_str("}\n");
        s
    }
}

fn write_nodes(s: &mut String, n: usize, labels: Option<&[String]>) {
    for v in 0..n {
        match labels {
            Some(l) => writeln!(s, "  {v} [label=\"{}\"];", l[v].replace('"', "\\\"")).unwrap(),
            None => writeln!(s, "  {v};").unwrap(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kahn_prefers_small_indices() {
        let d = Digraph::from_arcs(4, [(3, 0), (2, 0)]);
        assert_eq!(d.topological_order(&[0, 1, 2, 3]), Some(vec![1, 2, 3, 0]));
        let c = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]);
        assert!(!c.is_acyclic());
        assert!(c.induces_acyclic(&[0, 1]));
        assert_eq!(c.sinks_within(&[0, 1]), vec![1]);
    }

    #[test]
    fn graph_predicates() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2)]);
        assert!(g.is_clique(&[0, 1, 2]));
        assert!(g.is_independent(&[0, 3]));
        assert!(g.is_proper_coloring(&[0, 1, 2, 0]));
        assert!(!g.is_proper_coloring(&[0, 0, 1, 0]));
        assert!(g.to_dot("G", None).contains("0 -- 1;"));
    }
}
