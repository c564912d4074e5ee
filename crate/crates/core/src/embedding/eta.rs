use rayon::prelude::*;

use super::covering::AcyclicCovering;
use crate::arrangement::RegionPoset;
use crate::error::{Error, Result};
use crate::geometry::Scalar;
use crate::graph::Digraph;
use crate::irreducibles::{subcritical_direct, SubcriticalPair};

/// Reads the separating set of each region, restricted to `class`, as a binary
/// word whose first letter is the most significant bit. `class` must list its
/// hyperplanes in a topological order of the sub-digraph of `d` it induces.
pub fn eta_map<F: Scalar>(d: &Digraph, p: &RegionPoset<F>, class: &[usize]) -> Result<Vec<u64>> {
    assert!(class.len() < 64, "class too large for a 64-bit coordinate");
    for (i, &a) in class.iter().enumerate() {
        for &b in &class[..i] {
            if d.has_arc(a, b) {
                return Err(Error::NotTopologicallySorted(a, b));
            }
        }
    }
    let k = class.len();
    Ok(p.regions()
        .iter()
        .map(|r| {
            class
                .iter()
                .enumerate()
                .filter(|&(_, &h)| r.sep.contains(h))
                .map(|(i, _)| 1u64 << (k - 1 - i))
                .sum()
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub classes: Vec<Vec<usize>>,
    /// `coords[r][i]` is the `i`-th coordinate of region `r`.
    pub coords: Vec<Vec<u64>>,
    /// Upper bound `2^|I| - 1` of each coordinate.
    pub bounds: Vec<u64>,
}

pub fn build_embedding<F: Scalar>(
    d: &Digraph,
    p: &RegionPoset<F>,
    cov: &AcyclicCovering,
) -> Result<Embedding> {
    let maps = cov
        .classes()
        .iter()
        .map(|c| eta_map(d, p, c))
        .collect::<Result<Vec<_>>>()?;
    let coords = (0..p.len())
        .map(|r| maps.iter().map(|m| m[r]).collect())
        .collect();
    let bounds = cov
        .classes()
        .iter()
        .map(|c| (1u64 << c.len()) - 1)
        .collect();
    Ok(Embedding {
        classes: cov.classes().to_vec(),
        coords,
        bounds,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingReport {
    /// Result of the exhaustive pairwise test.
    pub is_embedding: bool,
    /// A pair `(r1, r2)` with `r1` not below `r2` but componentwise below it.
    pub violated_pair: Option<(usize, usize)>,
    /// Whether every subcritical pair is strictly reversed by some coordinate.
    pub reverses_all_subcritical: bool,
    pub unreversed_subcritical: Option<SubcriticalPair>,
    pub pairs_checked: usize,
}

impl EmbeddingReport {
    /// The two checks must agree for any order-preserving map.
    pub fn is_consistent(&self) -> bool {
        self.is_embedding == self.reverses_all_subcritical
    }
}

fn below(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Checks that `coords` (one row per region) is order-preserving, then tests
/// it exhaustively and through subcritical pairs.
pub fn verify_embedding<F: Scalar>(
    p: &RegionPoset<F>,
    coords: &[Vec<u64>],
) -> Result<EmbeddingReport> {
    assert_eq!(coords.len(), p.len());
    for &(a, b) in p.covers() {
        if !below(&coords[a], &coords[b]) {
            return Err(Error::NotOrderPreserving(a, b));
        }
    }
    let n = p.len();
    let violated_pair = (0..n).into_par_iter().find_map_first(|r1| {
        (0..n)
            .find(|&r2| !p.poset_leq(r1, r2) && below(&coords[r1], &coords[r2]))
            .map(|r2| (r1, r2))
    });
    let unreversed_subcritical = subcritical_direct(p)
        .into_iter()
        .find(|s| coords[s.j].iter().zip(&coords[s.m]).all(|(x, y)| x <= y));
    Ok(EmbeddingReport {
        is_embedding: violated_pair.is_none(),
        violated_pair,
        reverses_all_subcritical: unreversed_subcritical.is_none(),
        unreversed_subcritical,
        pairs_checked: n * n,
    })
}
