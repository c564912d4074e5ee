use crate::graph::Graph;

/// Default number of search nodes for [`chromatic_number`].
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringResult {
    pub chi_lower: usize,
    pub chi_upper: usize,
    /// Proper coloring with `chi_upper` colors; colors are numbered in order
    /// of first appearance.
    pub certificate: Vec<usize>,
    /// A clique; its size is a lower bound.
    pub clique: Vec<usize>,
    /// Whether the search finished, proving `chi_lower == chi_upper` even when
    /// the clique is smaller.
    pub exhaustive: bool,
    pub nodes: u64,
}

impl ColoringResult {
    pub fn is_exact(&self) -> bool {
        self.chi_lower == self.chi_upper
    }
}

/// Exact chromatic number by DSATUR branch and bound, or certified bounds if
/// the node budget runs out.
pub fn chromatic_number(g: &Graph, budget: u64) -> ColoringResult {
    let n = g.len();
    if n == 0 {
        return ColoringResult {
            chi_lower: 0,
            chi_upper: 0,
            certificate: Vec::new(),
            clique: Vec::new(),
            exhaustive: true,
            nodes: 0,
        };
    }
    let clique = greedy_clique(g);
    let mut search = Search::new(g, budget);
    let first = search.greedy();
    search.best = first.clone();
    search.upper = first.iter().max().map_or(0, |&c| c + 1);
    let mut exhaustive = true;
    if clique.len() < search.upper {
        search.lower = clique.len();
        exhaustive = search.run();
    }
    let chi_upper = search.upper;
    let chi_lower = if exhaustive { chi_upper } else { clique.len() };
    let certificate = canonical(&search.best);
    assert!(
        g.is_proper_coloring(&certificate),
        "coloring certificate must be proper"
    );
    assert!(g.is_clique(&clique), "clique certificate must be a clique");
    ColoringResult {
        chi_lower,
        chi_upper,
        certificate,
        clique,
        exhaustive,
        nodes: search.nodes,
    }
}

/// Relabels colors in order of first appearance.
fn canonical(colors: &[usize]) -> Vec<usize> {
    let mut map = vec![usize::MAX; colors.len() + 1];
    let mut next = 0;
    colors
        .iter()
        .map(|&c| {
            if map[c] == usize::MAX {
                map[c] = next;
                next += 1;
            }
            map[c]
        })
        .collect()
}

/// Largest clique found by growing greedily from each vertex.
fn greedy_clique(g: &Graph) -> Vec<usize> {
    let n = g.len();
    let mut best: Vec<usize> = Vec::new();
    for start in 0..n {
        let mut clique = vec![start];
        let mut cand: Vec<usize> = g.neighbors(start);
        while !cand.is_empty() {
            let &v = cand
                .iter()
                .max_by_key(|&&v| {
                    (
                        cand.iter().filter(|&&w| g.has_edge(v, w)).count(),
                        std::cmp::Reverse(v),
                    )
                })
                .unwrap();
            clique.push(v);
            cand.retain(|&w| w != v && g.has_edge(v, w));
        }
        if clique.len() > best.len() {
            clique.sort_unstable();
            best = clique;
        }
    }
    best
}

struct Search<'a> {
    g: &'a Graph,
    adj: Vec<Vec<usize>>,
    degree: Vec<usize>,
    colors: Vec<usize>,
    /// `neighbor_colors[v][c]`: colored neighbours of `v` with color `c`.
    neighbor_colors: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    best: Vec<usize>,
    upper: usize,
    lower: usize,
    nodes: u64,
    budget: u64,
}

const UNCOLORED: usize = usize::MAX;

impl<'a> Search<'a> {
    fn new(g: &'a Graph, budget: u64) -> Self {
        let n = g.len();
        let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v)).collect();
        let degree = adj.iter().map(Vec::len).collect();
        Search {
            g,
            adj,
            degree,
            colors: vec![UNCOLORED; n],
            neighbor_colors: vec![vec![0; n + 1]; n],
            saturation: vec![0; n],
            best: Vec::new(),
            upper: n,
            lower: 0,
            nodes: 0,
            budget,
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            if self.neighbor_colors[w][c] == 0 {
                self.saturation[w] += 1;
            }
            self.neighbor_colors[w][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = UNCOLORED;
        for i in 0..self.adj[v].len() {
            let w = self.adj[v][i];
            self.neighbor_colors[w][c] -= 1;
            if self.neighbor_colors[w][c] == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    /// Uncolored vertex of highest saturation, then highest degree, then
    /// lowest index.
    fn pick(&self) -> Option<usize> {
        (0..self.g.len())
            .filter(|&v| self.colors[v] == UNCOLORED)
            .max_by_key(|&v| (self.saturation[v], self.degree[v], std::cmp::Reverse(v)))
    }

    fn greedy(&mut self) -> Vec<usize> {
        while let Some(v) = self.pick() {
            let c = (0..).find(|&c| self.neighbor_colors[v][c] == 0).unwrap();
            self.assign(v, c);
        }
        let out = self.colors.clone();
        for v in 0..self.g.len() {
            self.unassign(v);
        }
        out
    }

    /// Returns whether the search space was exhausted within budget.
    fn run(&mut self) -> bool {
        self.branch(0)
    }

    fn branch(&mut self, used: usize) -> bool {
        if self.upper <= self.lower {
            return true;
        }
        if self.nodes >= self.budget {
            return false;
        }
        self.nodes += 1;
        let Some(v) = self.pick() else {
            self.upper = used;
            self.best = self.colors.clone();
            return true;
        };
        let limit = (used + 1).min(self.upper - 1);
        for c in 0..limit {
            if self.neighbor_colors[v][c] != 0 {
                continue;
            }
            if c >= self.upper - 1 {
                break;
            }
            self.assign(v, c);
            let done = self.branch(used.max(c + 1));
            self.unassign(v);
            if !done {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    #[test]
    fn odd_cycles_need_three() {
        let r = chromatic_number(&cycle(7), DEFAULT_NODE_BUDGET);
        assert_eq!((r.chi_lower, r.chi_upper), (3, 3));
        assert!(r.exhaustive);
        assert_eq!(r.clique.len(), 2);
        let r = chromatic_number(&cycle(8), DEFAULT_NODE_BUDGET);
        assert_eq!(r.chi_upper, 2);
    }

    #[test]
    fn petersen_and_complete() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
        let p = Graph::from_edges(10, outer.chain(spokes).chain(inner));
        assert_eq!(chromatic_number(&p, DEFAULT_NODE_BUDGET).chi_upper, 3);
        let k5 = Graph::from_edges(5, (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))));
        let r = chromatic_number(&k5, 10);
        assert_eq!((r.chi_lower, r.chi_upper), (5, 5));
        assert_eq!(r.certificate, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn tiny_budget_gives_bounds() {
        // Mycielski graph of a 5-cycle (Grötzsch): triangle-free, chromatic number 4
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        for i in 0..5 {
            edges.push((i + 5, (i + 1) % 5));
            edges.push((i + 5, (i + 4) % 5));
            edges.push((i + 5, 10));
        }
        let g = Graph::from_edges(11, edges);
        let r = chromatic_number(&g, DEFAULT_NODE_BUDGET);
        assert_eq!(r.chi_upper, 4);
        assert!(r.exhaustive);
        let r = chromatic_number(&g, 1);
        assert!(r.chi_lower <= 4 && r.chi_upper >= 4);
    }
}
