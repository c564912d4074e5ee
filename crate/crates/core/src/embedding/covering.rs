use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::rank2::RankTwoStructure;

/// Largest digraph handled by the exact covering search.
pub const EXACT_COVERING_LIMIT: usize = 12;

/// A partition of the hyperplanes into classes inducing acyclic sub-digraphs
/// of `D`, each listed in a topological order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcyclicCovering {
    classes: Vec<Vec<usize>>,
}

impl AcyclicCovering {
    /// Validates a covering whose classes are already topologically ordered.
    pub fn new(d: &Digraph, classes: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; d.len()];
        for class in &classes {
            if class.is_empty() {
                return Err(Error::InvalidCovering("empty class".into()));
            }
            for &h in class {
                if h >= d.len() || std::mem::replace(&mut seen[h], true) {
                    return Err(Error::InvalidCovering(format!(
                        "hyperplane {h} is out of range or repeated"
                    )));
                }
            }
            for (i, &a) in class.iter().enumerate() {
                for &b in &class[..i] {
                    if d.has_arc(a, b) {
                        return Err(Error::NotTopologicallySorted(a, b));
                    }
                }
            }
        }
        if let Some(h) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidCovering(format!(
                "hyperplane {h} is not covered"
            )));
        }
        Ok(AcyclicCovering { classes })
    }

    /// Orders each class topologically, then validates.
    pub fn from_classes(d: &Digraph, classes: &[Vec<usize>]) -> Result<Self> {
        let ordered = classes
            .iter()
            .map(|c| {
                d.topological_order(c)
                    .ok_or_else(|| Error::InvalidCovering(format!("class {c:?} induces a cycle")))
            })
            .collect::<Result<Vec<_>>>()?;
        AcyclicCovering::new(d, ordered)
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoveringStrategy {
    /// Color classes of a proper coloring of `G`; requires `Q` acyclic.
    FromColoring(Vec<usize>),
    /// Each hyperplane joins the first class that stays acyclic.
    Greedy,
    /// A covering of minimum size, by backtracking.
    Exact,
}

pub fn acyclic_covering<F>(
    s: &RankTwoStructure<F>,
    strategy: &CoveringStrategy,
) -> Result<AcyclicCovering> {
    let d = &s.d;
    let m = d.len();
    match strategy {
        CoveringStrategy::FromColoring(colors) => {
            if !s.q_acyclic {
                return Err(Error::QNotAcyclic);
            }
            if !s.g.is_proper_coloring(colors) {
                return Err(Error::InvalidCovering("not a proper coloring of G".into()));
            }
            let k = colors.iter().max().map_or(0, |&c| c + 1);
            let classes: Vec<Vec<usize>> = (0..k)
                .map(|c| (0..m).filter(|&h| colors[h] == c).collect::<Vec<_>>())
                .filter(|c| !c.is_empty())
                .collect();
            AcyclicCovering::from_classes(d, &classes)
        }
        CoveringStrategy::Greedy => {
            let mut classes: Vec<Vec<usize>> = Vec::new();
            for h in 0..m {
                let slot = classes.iter().position(|c| {
                    let mut t = c.clone();
                    t.push(h);
                    d.induces_acyclic(&t)
                });
                match slot {
                    Some(i) => classes[i].push(h),
                    None => classes.push(vec![h]),
                }
            }
            AcyclicCovering::from_classes(d, &classes)
        }
        CoveringStrategy::Exact => {
            if m > EXACT_COVERING_LIMIT {
                return Err(Error::BudgetExceeded);
            }
            for k in 1..=m {
                let mut classes: Vec<Vec<usize>> = Vec::new();
                if exact_search(d, 0, k, &mut classes) {
                    return AcyclicCovering::from_classes(d, &classes);
                }
            }
            unreachable!("singletons always form a covering")
        }
    }
}

fn exact_search(d: &Digraph, h: usize, k: usize, classes: &mut Vec<Vec<usize>>) -> bool {
    if h == d.len() {
        return true;
    }
    for i in 0..classes.len() {
        classes[i].push(h);
        if d.induces_acyclic(&classes[i]) && exact_search(d, h + 1, k, classes) {
            return true;
        }
        classes[i].pop();
    }
    if classes.len() < k {
        classes.push(vec![h]);
        if exact_search(d, h + 1, k, classes) {
            return true;
        }
        classes.pop();
    }
    false
}
