use num_rational::BigRational;

use super::{coxeter_digraph, coxeter_graph, root_system, CoxeterType, RootSystem};
use crate::error::{Error, Result};
use crate::rank2::rank_two_structure;

/// Color classes of positive roots together with their validity checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardColoring {
    /// Root indices per class, ascending.
    pub classes: Vec<Vec<usize>>,
    /// Every class is independent in `G`.
    pub independent: bool,
    /// Every class induces an acyclic sub-digraph of `D`.
    pub acyclic: bool,
    /// Whether `G` and `D` were computed from the arrangement (rather than by
    /// the inner-product rule).
    pub geometric: bool,
}

impl StandardColoring {
    pub fn is_valid(&self) -> bool {
        self.independent && self.acyclic
    }

    /// The color of each root.
    pub fn colors(&self, num_roots: usize) -> Vec<usize> {
        let mut c = vec![usize::MAX; num_roots];
        for (i, class) in self.classes.iter().enumerate() {
            for &r in class {
                c[r] = i;
            }
        }
        c
    }
}

fn index(rs: &RootSystem<BigRational>, label: String) -> usize {
    rs.index_of_label(&label)
        .unwrap_or_else(|| panic!("missing root {label}"))
}

/// The coloring by `J_i = {e_i - e_j : j < i}` in type A, by
/// `{e_i - e_j : j < i} ∪ {e_i} ∪ {e_k + e_i : i < k}` in type B, and by the
/// same without `e_i` in type D.
pub fn standard_coloring(kind: CoxeterType, n: usize) -> Result<StandardColoring> {
    let rs = root_system::<BigRational>(kind, n)?;
    let classes: Vec<Vec<usize>> = match kind {
        CoxeterType::A => (2..=n + 1)
            .map(|i| (1..i).map(|j| index(&rs, format!("e{i}-e{j}"))).collect())
            .collect(),
        CoxeterType::B | CoxeterType::D => (1..=n)
            .map(|i| {
                let mut class: Vec<usize> =
                    (1..i).map(|j| index(&rs, format!("e{i}-e{j}"))).collect();
                if kind == CoxeterType::B {
                    class.push(index(&rs, format!("e{i}")));
                }
                class.extend((i + 1..=n).map(|k| index(&rs, format!("e{k}+e{i}"))));
                class
            })
            .collect(),
        other => {
            return Err(Error::InvalidRank(format!(
                "no standard coloring for type {other}"
            )))
        }
    };
    certify(&rs, classes)
}

/// The type B coloring by the filtration `B_1 ⊂ B_2 ⊂ ...`: class `j` is
/// `{e_j} ∪ {e_j ± e_k : k < j}`.
pub fn b_filtration_coloring(n: usize) -> Result<StandardColoring> {
    let rs = root_system::<BigRational>(CoxeterType::B, n)?;
    let classes = (1..=n)
        .map(|j| {
            let mut class = vec![index(&rs, format!("e{j}"))];
            for k in 1..j {
                class.push(index(&rs, format!("e{j}-e{k}")));
                class.push(index(&rs, format!("e{j}+e{k}")));
            }
            class
        })
        .collect();
    certify(&rs, classes)
}

/// Checks the classes against `G` and `D`, from the arrangement at rank at
/// most 4 and by the inner-product rule above that.
fn certify(rs: &RootSystem<BigRational>, classes: Vec<Vec<usize>>) -> Result<StandardColoring> {
    let mut classes = classes;
    for c in classes.iter_mut() {
        c.sort_unstable();
    }
    let geometric = rs.rank() <= 4;
    let (g, d) = if geometric {
        let s = rank_two_structure(rs.arrangement())?;
        (s.g, s.d)
    } else {
        (coxeter_graph(rs)?, coxeter_digraph(rs)?)
    };
    let independent = classes.iter().all(|c| g.is_independent(c));
    let acyclic = classes.iter().all(|c| d.induces_acyclic(c));
    Ok(StandardColoring {
        classes,
        independent,
        acyclic,
        geometric,
    })
}
