//! Root systems, their arrangements and basic graphs, the standard colorings
//! of types A, B and D, and a signed-permutation model of the weak order.

mod coloring;
mod data;
mod weak;

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::geometry::linalg::{dot, scale, span_key, sub};
use crate::geometry::{Scalar, Sign};
use crate::graph::{Digraph, Graph};
use crate::rank2::rank_two_subarrangements;

pub use coloring::{b_filtration_coloring, standard_coloring, StandardColoring};
pub use weak::{type_a_eta, weak_order_model, SignedPermutation, WeakOrderModel, MAX_GROUP_ORDER};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoxeterType {
    A,
    B,
    D,
    /// Dihedral `I2(m)`; the parameter is `m`.
    I,
    H,
    F,
    E,
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            CoxeterType::A => "A",
            CoxeterType::B => "B",
            CoxeterType::D => "D",
            CoxeterType::I => "I",
            CoxeterType::H => "H",
            CoxeterType::F => "F",
            CoxeterType::E => "E",
        };
        f.write_str(c)
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(CoxeterType::A),
            "B" => Ok(CoxeterType::B),
            "D" => Ok(CoxeterType::D),
            "I" => Ok(CoxeterType::I),
            "H" => Ok(CoxeterType::H),
            "F" => Ok(CoxeterType::F),
            "E" => Ok(CoxeterType::E),
            other => Err(Error::InvalidRank(format!(
                "unknown Coxeter type {other:?}"
            ))),
        }
    }
}

impl CoxeterType {
    /// Whether the root data needs `sqrt 5`.
    pub fn needs_sqrt5(self) -> bool {
        self == CoxeterType::H
    }
}

/// A set of positive roots with the base region they determine.
#[derive(Clone, Debug)]
pub struct RootSystem<F> {
    kind: CoxeterType,
    param: usize,
    roots: Vec<Vec<F>>,
    labels: Vec<String>,
    arrangement: Arrangement<F>,
    simple: Vec<usize>,
    reflection_closed: bool,
}

impl<F: Scalar> RootSystem<F> {
    pub fn kind(&self) -> CoxeterType {
        self.kind
    }

    /// Rank for types A, B, D, E, F, H; `m` for `I2(m)`.
    pub fn param(&self) -> usize {
        self.param
    }

    pub fn name(&self) -> String {
        match self.kind {
            CoxeterType::I => format!("I2({})", self.param),
            k => format!("{k}{}", self.param),
        }
    }

    pub fn positive_roots(&self) -> &[Vec<F>] {
        &self.roots
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// The arrangement of root hyperplanes; hyperplane `k` has normal
    /// `positive_roots()[k]`.
    pub fn arrangement(&self) -> &Arrangement<F> {
        &self.arrangement
    }

    pub fn base_witness(&self) -> &[F] {
        self.arrangement.base_witness()
    }

    /// Indices of the simple roots.
    pub fn simple_roots(&self) -> &[usize] {
        &self.simple
    }

    pub fn rank(&self) -> usize {
        self.arrangement.rank()
    }

    /// False only for dihedral configurations realized by rational points on
    /// the circle, which have the right arrangement but are not closed under
    /// reflections.
    pub fn is_reflection_closed(&self) -> bool {
        self.reflection_closed
    }

    /// Index of a positive root.
    pub fn index_of(&self, root: &[F]) -> Option<usize> {
        self.roots.iter().position(|r| r.as_slice() == root)
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// Builds the positive roots of the given type and checks both root system
/// axioms, the minimal-inner-product property of basic pairs, and that the
/// base region has exactly `rank` facets.
pub fn root_system<F: Scalar>(kind: CoxeterType, n: usize) -> Result<RootSystem<F>> {
    let invalid = |msg: &str| Err(Error::InvalidRank(format!("{kind}{n}: {msg}")));
    let mut reflection_closed = true;
    let positive = match kind {
        CoxeterType::A if n >= 1 => data::type_a(n + 1),
        CoxeterType::B if n >= 2 => data::type_b(n),
        CoxeterType::D if n >= 3 => data::type_d(n),
        CoxeterType::I if n >= 3 => match n {
            3 => split_positive(data::a2_full())?,
            4 => split_positive(data::b2_full())?,
            6 => split_positive(data::g2_full())?,
            m => {
                reflection_closed = false;
                data::rational_dihedral(m)
            }
        },
        CoxeterType::E if (6..=8).contains(&n) => split_positive(match n {
            6 => data::e6(),
            7 => data::e7(),
            _ => data::e8(),
        })?,
        CoxeterType::F if n == 4 => split_positive(data::f4())?,
        CoxeterType::H if n == 3 || n == 4 => {
            let Some(r5) = F::sqrt5() else {
                return invalid("needs the field Q(sqrt5)");
            };
            let phi = (F::one() + r5) / F::from_int(2);
            split_positive(if n == 3 { data::h3(phi) } else { data::h4(phi) })?
        }
        CoxeterType::A => return invalid("rank must be at least 1"),
        CoxeterType::B => return invalid("rank must be at least 2"),
        CoxeterType::D => return invalid("rank must be at least 3"),
        CoxeterType::I => return invalid("m must be at least 3"),
        CoxeterType::E => return invalid("rank must be 6, 7 or 8"),
        CoxeterType::F => return invalid("rank must be 4"),
        CoxeterType::H => return invalid("rank must be 3 or 4"),
    };
    let data::Positive {
        roots,
        labels,
        base,
    } = positive;
    if let Some(k) = roots
        .iter()
        .position(|r| dot(r, &base).sign() != Sign::Negative)
    {
        return Err(Error::RootAxiomViolated(format!(
            "root {} is not negative on the base witness",
            labels[k]
        )));
    }
    let arrangement = Arrangement::new(roots.clone(), base).map_err(|e| match e {
        Error::DuplicateHyperplane(i, j) => Error::RootAxiomViolated(format!(
            "roots {} and {} are parallel",
            labels[i], labels[j]
        )),
        other => other,
    })?;
    if reflection_closed {
        check_reflection_closure(&roots)?;
    }
    check_scaling(&arrangement, &labels)?;
    let simple = arrangement.base_facets();
    if simple.len() != arrangement.rank() {
        return Err(Error::RootAxiomViolated(format!(
            "{} simple roots for rank {}",
            simple.len(),
            arrangement.rank()
        )));
    }
    Ok(RootSystem {
        kind,
        param: n,
        roots,
        labels,
        arrangement,
        simple,
        reflection_closed,
    })
}

/// Positive roots `{b : <rho, b> > 0}` for the first `rho = (1, k, k^2, ...)`,
/// `k = 2, 3, ...`, orthogonal to no root; the base witness is `-rho`.
fn split_positive<F: Scalar>(all: Vec<Vec<F>>) -> Result<data::Positive<F>> {
    let dim = all[0].len();
    for k in 2..64i64 {
        let mut rho = Vec::with_capacity(dim);
        let mut x = F::one();
        for _ in 0..dim {
            rho.push(x.clone());
            x = x * F::from_int(k);
        }
        let signs: Vec<Sign> = all.iter().map(|r| dot(r, &rho).sign()).collect();
        if signs.contains(&Sign::Zero) {
            continue;
        }
        let roots: Vec<Vec<F>> = all
            .iter()
            .zip(&signs)
            .filter(|(_, s)| **s == Sign::Positive)
            .map(|(r, _)| r.clone())
            .collect();
        let labels = roots.iter().map(|r| data::vector_label(r)).collect();
        let base = rho.into_iter().map(|x| -x).collect();
        return Ok(data::Positive {
            roots,
            labels,
            base,
        });
    }
    Err(Error::RootAxiomViolated(
        "no generic functional found".into(),
    ))
}

fn check_reflection_closure<F: Scalar>(positive: &[Vec<F>]) -> Result<()> {
    let all: Vec<Vec<F>> = positive
        .iter()
        .cloned()
        .chain(
            positive
                .iter()
                .map(|r| r.iter().map(|x| -x.clone()).collect()),
        )
        .collect();
    let set: HashSet<&Vec<F>> = all.iter().collect();
    let bad = positive.par_iter().find_map_any(|beta| {
        let two_over = F::from_int(2) / dot(beta, beta);
        all.iter().find_map(|alpha| {
            let c = dot(alpha, beta) * two_over.clone();
            let image = sub(alpha, &scale(beta, &c));
            (!set.contains(&image)).then(|| (beta.clone(), alpha.clone()))
        })
    });
    match bad {
        None => Ok(()),
        Some((beta, alpha)) => Err(Error::RootAxiomViolated(format!(
            "reflecting {} in {} leaves the root system",
            data::vector_label(&alpha),
            data::vector_label(&beta)
        ))),
    }
}

/// Groups of positive roots spanning a common plane, by exact span
/// comparison only.
fn planar_groups<F: Scalar>(roots: &[Vec<F>]) -> Vec<Vec<usize>> {
    let m = roots.len();
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .collect();
    let keys: Vec<Vec<Vec<F>>> = pairs
        .par_iter()
        .map(|&(i, j)| span_key(&[roots[i].clone(), roots[j].clone()]))
        .collect();
    let mut groups: HashMap<Vec<Vec<F>>, Vec<usize>> = HashMap::new();
    for (&(i, j), key) in pairs.iter().zip(keys) {
        let g = groups.entry(key).or_default();
        for x in [i, j] {
            if !g.contains(&x) {
                g.push(x);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = groups
        .into_values()
        .map(|mut g| {
            g.sort_unstable();
            g
        })
        .collect();
    out.sort();
    out
}

/// The unique pair of distinct roots with minimal inner product, if unique.
fn minimizing_pair<F: Scalar>(roots: &[Vec<F>], group: &[usize]) -> Option<(usize, usize)> {
    let mut best: Option<(F, (usize, usize))> = None;
    let mut unique = false;
    for (x, &a) in group.iter().enumerate() {
        for &b in &group[x + 1..] {
            let ip = dot(&roots[a], &roots[b]);
            match &best {
                Some((v, _)) if ip > *v => {}
                Some((v, _)) if ip == *v => unique = false,
                _ => {
                    best = Some((ip, (a, b)));
                    unique = true;
                }
            }
        }
    }
    best.filter(|_| unique).map(|(_, p)| p)
}

fn check_scaling<F: Scalar>(a: &Arrangement<F>, labels: &[String]) -> Result<()> {
    for sub in rank_two_subarrangements(a) {
        match minimizing_pair(a.normals(), &sub.members) {
            Some(p) if p == sub.basics => {}
            found => {
                return Err(Error::ScalingPropertyViolated(format!(
                    "basic pair {}, {} but minimal inner product at {:?}",
                    labels[sub.basics.0],
                    labels[sub.basics.1],
                    found.map(|(x, y)| (labels[x].clone(), labels[y].clone()))
                )))
            }
        }
    }
    Ok(())
}

/// Basic graph by the inner-product rule: in each rank-two subarrangement the
/// edge joins the unique pair of roots with minimal inner product.
pub fn coxeter_graph<F: Scalar>(rs: &RootSystem<F>) -> Result<Graph> {
    let (g, _) = inner_product_structure(rs)?;
    Ok(g)
}

/// Basic digraph by the inner-product rule: the minimizing pair of each
/// rank-two subarrangement points at every member of it.
pub fn coxeter_digraph<F: Scalar>(rs: &RootSystem<F>) -> Result<Digraph> {
    let (_, d) = inner_product_structure(rs)?;
    Ok(d)
}

fn inner_product_structure<F: Scalar>(rs: &RootSystem<F>) -> Result<(Graph, Digraph)> {
    let m = rs.len();
    let mut g = Graph::new(m);
    let mut d = Digraph::new(m);
    for group in planar_groups(&rs.roots) {
        let (a, b) = minimizing_pair(&rs.roots, &group).ok_or_else(|| {
            Error::ScalingPropertyViolated(format!("no unique minimizing pair among {group:?}"))
        })?;
        g.add_edge(a, b);
        for &k in &group {
            for basic in [a, b] {
                if k != basic {
                    d.add_arc(basic, k);
                }
            }
        }
    }
    Ok((g, d))
}
