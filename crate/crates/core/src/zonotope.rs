//! Zonotopal embeddings `R ↦ Σ_{H ∈ S(R)} n_H` and their construction for
//! supersolvable arrangements.

use std::collections::BTreeSet;

use crate::arrangement::{enumerate_regions, Arrangement, RegionPoset};
use crate::embedding::AcyclicCovering;
use crate::error::{Error, Result};
use crate::geometry::linalg::{
    add, combine, dot, nullspace, rank_of, rref, scale, solve_coordinates, sub,
};
use crate::geometry::{Scalar, Sign};
use crate::graph::Digraph;
use crate::rank2::{basic_digraph, find_basics};
use crate::sets::HyperplaneSet;

/// Largest rank accepted by [`supersolvable_chain`].
pub const MAX_CHAIN_RANK: usize = 5;
/// Largest number of hyperplanes accepted by [`supersolvable_chain`].
pub const MAX_CHAIN_HYPERPLANES: usize = 20;

/// `ν(h)`: the out-neighbours of `h` in the basic digraph.
pub fn nu_set(d: &Digraph, h: usize) -> Vec<usize> {
    d.out_neighbors(h).to_vec()
}

/// Evaluation of `(n_H)_i > Σ_{H' ∈ ν(H)} (n_{H'})_i` for every coordinate `i`
/// and hyperplane `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SufficiencyTable {
    /// `holds[h][i]`.
    pub holds: Vec<Vec<bool>>,
    /// No normal has a negative coordinate, so every `Z_i` is order
    /// preserving.
    pub order_preserving: bool,
}

impl SufficiencyTable {
    /// Every `Z_i` is order preserving and every hyperplane satisfies the
    /// inequality in some coordinate, so every subcritical pair is reversed by
    /// some coordinate and `Z` is an embedding.
    pub fn is_sufficient(&self) -> bool {
        self.order_preserving && self.holds.iter().all(|row| row.iter().any(|&b| b))
    }

    /// Hyperplanes satisfying the inequality in no coordinate.
    pub fn failing(&self) -> Vec<usize> {
        (0..self.holds.len())
            .filter(|&h| !self.holds[h].iter().any(|&b| b))
            .collect()
    }
}

/// Coordinates of every normal in `basis`. The basis must be linearly
/// independent and span every normal.
pub fn basis_coordinates<F: Scalar>(normals: &[Vec<F>], basis: &[Vec<F>]) -> Result<Vec<Vec<F>>> {
    if rank_of(basis) != basis.len() {
        return Err(Error::SingularBasis);
    }
    normals
        .iter()
        .map(|n| solve_coordinates(basis, n).ok_or(Error::SingularBasis))
        .collect()
}

/// Evaluates the sufficiency inequality for the given normals (which may be
/// rescaled copies of the arrangement's) in the given basis.
pub fn check_sufficient<F: Scalar>(
    a: &Arrangement<F>,
    d: &Digraph,
    normals: &[Vec<F>],
    basis: &[Vec<F>],
) -> Result<SufficiencyTable> {
    if normals.len() != a.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            found: normals.len(),
        });
    }
    if let Some(b) = basis.iter().find(|b| b.len() != a.dim()) {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.len(),
        });
    }
    let coords = basis_coordinates(normals, basis)?;
    let holds = (0..a.len())
        .map(|h| {
            (0..basis.len())
                .map(|i| {
                    let rhs = d
                        .out_neighbors(h)
                        .iter()
                        .fold(F::zero(), |acc, &k| acc + coords[k][i].clone());
                    coords[h][i] > rhs
                })
                .collect()
        })
        .collect();
    let order_preserving = coords.iter().flatten().all(|x| x.sign() != Sign::Negative);
    Ok(SufficiencyTable {
        holds,
        order_preserving,
    })
}

/// `Z(R)` in basis coordinates for every region of `p`, given the normal
/// coordinates.
pub fn zonotope_coordinates<F: Scalar>(p: &RegionPoset<F>, coords: &[Vec<F>]) -> Vec<Vec<F>> {
    let k = coords.first().map_or(0, Vec::len);
    p.regions()
        .iter()
        .map(|r| {
            r.sep
                .iter()
                .fold(vec![F::zero(); k], |acc, h| add(&acc, &coords[h]))
        })
        .collect()
}

/// Pairs `(r1, r2)` with `Z(r1) <= Z(r2)` componentwise but `r1 ≰ r2`.
pub fn zonotope_violations<F: Scalar>(p: &RegionPoset<F>, z: &[Vec<F>]) -> Vec<(usize, usize)> {
    let n = p.len();
    let mut out = Vec::new();
    for r1 in 0..n {
        for r2 in 0..n {
            let below = z[r1].iter().zip(&z[r2]).all(|(x, y)| x <= y);
            if below != p.sep(r1).is_subset(p.sep(r2)) {
                out.push((r1, r2));
            }
        }
    }
    out
}

/// A decomposition `A_1 ⊂ A_2 ⊂ ⋯ ⊂ A_d` with `rank(A_i) = i`, each step
/// splitting as in the supersolvable characterization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupersolvableChain<F> {
    /// `levels[i]` is `A_{i+1} ∖ A_i`, ascending.
    pub levels: Vec<Vec<usize>>,
    /// `lines[i]` spans `Span(A_{i+1}) ∩ (∩ A_i)`, directed so that crossing
    /// the first hyperplane of the level goes from its negative to its
    /// positive side.
    pub lines: Vec<Vec<F>>,
    /// Each level in the order its hyperplanes meet `v + t·lines[i]`, `t`
    /// increasing, for `v` the base witness.
    pub level_order: Vec<Vec<usize>>,
}

impl<F: Scalar> SupersolvableChain<F> {
    pub fn rank(&self) -> usize {
        self.levels.len()
    }

    /// Hyperplanes of `A_k` (the first `k` levels).
    pub fn prefix(&self, k: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.levels[..k].iter().flatten().copied().collect();
        out.sort_unstable();
        out
    }

    /// Level index of every hyperplane.
    pub fn level_of(&self, m: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; m];
        for (i, l) in self.levels.iter().enumerate() {
            for &h in l {
                out[h] = i;
            }
        }
        out
    }

    /// Whether every line crosses its level from the negative to the positive
    /// side of every hyperplane, which holds exactly when the base region is
    /// an end of each path of regions.
    pub fn is_monotone(&self, a: &Arrangement<F>) -> bool {
        self.levels.iter().zip(&self.lines).all(|(l, b)| {
            l.iter()
                .all(|&h| dot(b, a.normal(h)).sign() == Sign::Positive)
        })
    }

    /// Whether each level induces an acyclic sub-digraph of `d` and its
    /// crossing order has every arc going forward.
    pub fn respects(&self, d: &Digraph) -> bool {
        self.level_order.iter().all(|order| {
            let pos = |h: usize| order.iter().position(|&x| x == h);
            order.iter().all(|&h| {
                d.out_neighbors(h).iter().all(|&k| match (pos(h), pos(k)) {
                    (Some(i), Some(j)) => i < j,
                    _ => true,
                })
            })
        })
    }

    /// The levels as an acyclic covering of `d`, in crossing order.
    pub fn covering(&self, d: &Digraph) -> Result<AcyclicCovering> {
        AcyclicCovering::new(d, self.level_order.clone())
    }
}

/// Searches for a supersolvable chain. `Ok(None)` means the arrangement is
/// not supersolvable.
pub fn supersolvable_chain<F: Scalar>(a: &Arrangement<F>) -> Result<Option<SupersolvableChain<F>>> {
    let rank = a.rank();
    if rank > MAX_CHAIN_RANK {
        return Err(Error::InvalidRank(format!(
            "chain search supports rank at most {MAX_CHAIN_RANK}, got {rank}"
        )));
    }
    if a.len() > MAX_CHAIN_HYPERPLANES {
        return Err(Error::TooManyHyperplanes {
            found: a.len(),
            limit: MAX_CHAIN_HYPERPLANES,
        });
    }
    let all: Vec<usize> = (0..a.len()).collect();
    let Some(mut levels) = split(a, &all, rank) else {
        return Ok(None);
    };
    levels.reverse();
    Ok(Some(orient(a, levels)?))
}

fn normals_of<F: Scalar>(a: &Arrangement<F>, hs: &[usize]) -> Vec<Vec<F>> {
    hs.iter().map(|&h| a.normal(h).to_vec()).collect()
}

fn in_span<F: Scalar>(span: &[Vec<F>], rank: usize, v: &[F]) -> bool {
    let mut vs = span.to_vec();
    vs.push(v.to_vec());
    rank_of(&vs) == rank
}

/// Levels of a chain on `hs` (of the given rank), top level first.
fn split<F: Scalar>(a: &Arrangement<F>, hs: &[usize], rank: usize) -> Option<Vec<Vec<usize>>> {
    match rank {
        0 => return Some(Vec::new()),
        1 => return Some(vec![hs.to_vec()]),
        2 => {
            // the bottom hyperplane must be basic, so the rest is a path
            let (b0, b1) = find_basics(a, hs);
            let h0 = b0.min(b1);
            return Some(vec![
                hs.iter().copied().filter(|&h| h != h0).collect(),
                vec![h0],
            ]);
        }
        _ => {}
    }
    for bottom in candidate_bottoms(a, hs, rank) {
        let top: Vec<usize> = hs.iter().copied().filter(|h| !bottom.contains(h)).collect();
        if !unique_meets(a, &bottom, &top) {
            continue;
        }
        if let Some(mut rest) = split(a, &bottom, rank - 1) {
            rest.insert(0, top);
            return Some(rest);
        }
    }
    None
}

/// Maximal subsets of `hs` containing a common line of `Span(hs)`, in
/// lexicographic order.
fn candidate_bottoms<F: Scalar>(a: &Arrangement<F>, hs: &[usize], rank: usize) -> Vec<Vec<usize>> {
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut subset = Vec::with_capacity(rank - 1);
    subsets(hs, rank - 1, 0, &mut subset, &mut |s| {
        let span = normals_of(a, s);
        if rank_of(&span) != rank - 1 {
            return;
        }
        let flat: Vec<usize> = hs
            .iter()
            .copied()
            .filter(|&h| in_span(&span, rank - 1, a.normal(h)))
            .collect();
        found.insert(flat);
    });
    found.into_iter().collect()
}

fn subsets(
    hs: &[usize],
    k: usize,
    from: usize,
    cur: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize]),
) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for i in from..hs.len() {
        if hs.len() - i < k - cur.len() {
            break;
        }
        cur.push(hs[i]);
        subsets(hs, k, i + 1, cur, f);
        cur.pop();
    }
}

/// For all distinct `h1, h2` in `top`, exactly one hyperplane of `bottom`
/// contains `h1 ∩ h2`.
fn unique_meets<F: Scalar>(a: &Arrangement<F>, bottom: &[usize], top: &[usize]) -> bool {
    top.iter().enumerate().all(|(i, &h1)| {
        top[i + 1..].iter().all(|&h2| {
            let span = normals_of(a, &[h1, h2]);
            bottom
                .iter()
                .filter(|&&h| in_span(&span, 2, a.normal(h)))
                .count()
                == 1
        })
    })
}

/// Computes lines and crossing orders for levels listed bottom first.
fn orient<F: Scalar>(a: &Arrangement<F>, levels: Vec<Vec<usize>>) -> Result<SupersolvableChain<F>> {
    let v = a.base_witness();
    let mut lines = Vec::with_capacity(levels.len());
    let mut level_order = Vec::with_capacity(levels.len());
    let mut below: Vec<usize> = Vec::new();
    for level in &levels {
        let mut upto = below.clone();
        upto.extend(level);
        let (span, _) = rref(&normals_of(a, &upto));
        // coefficients c with sum c_r span_r orthogonal to every lower normal
        let constraints: Vec<Vec<F>> = below
            .iter()
            .map(|&h| span.iter().map(|r| dot(r, a.normal(h))).collect())
            .collect();
        let kernel = if constraints.is_empty() {
            if span.len() == 1 {
                vec![vec![F::one()]]
            } else {
                Vec::new()
            }
        } else {
            nullspace(&constraints, span.len())
        };
        if kernel.len() != 1 {
            return Err(Error::ChainInvalid(format!(
                "level {level:?} does not determine a line"
            )));
        }
        let mut b = combine(&span, &kernel[0], a.dim());
        let first = dot(&b, a.normal(level[0]));
        if first.is_zero() {
            return Err(Error::ChainInvalid(format!(
                "hyperplane {} contains its level line",
                level[0]
            )));
        }
        if first.sign() == Sign::Negative {
            b = scale(&b, &-F::one());
        }
        let mut crossing: Vec<(F, usize)> = Vec::with_capacity(level.len());
        for &h in level {
            let rate = dot(&b, a.normal(h));
            if rate.is_zero() {
                return Err(Error::ChainInvalid(format!(
                    "hyperplane {h} contains its level line"
                )));
            }
            crossing.push((-dot(v, a.normal(h)) / rate, h));
        }
        crossing.sort();
        if crossing.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::ChainInvalid(
                "two hyperplanes of a level meet the line together".into(),
            ));
        }
        level_order.push(crossing.into_iter().map(|(_, h)| h).collect());
        lines.push(b);
        below = upto;
    }
    Ok(SupersolvableChain {
        levels,
        lines,
        level_order,
    })
}

/// The canonical base region, as an index into the region poset of `a` (with
/// its current base). The regions of `A_{k+1}` inside the chosen region of
/// `A_k` form a path; of its two ends, the one whose separating set
/// restricted to the new level is smaller as a bitset is kept.
pub fn canonical_base_region<F: Scalar>(
    a: &Arrangement<F>,
    chain: &SupersolvableChain<F>,
) -> Result<usize> {
    canonical_in(&enumerate_regions(a)?, chain)
}

fn canonical_in<F: Scalar>(p: &RegionPoset<F>, chain: &SupersolvableChain<F>) -> Result<usize> {
    if chain.rank() <= 2 {
        return Ok(p.bottom());
    }
    let mut chosen = HyperplaneSet::EMPTY;
    let mut below = HyperplaneSet::from_indices(chain.prefix(2));
    for level in &chain.levels[2..] {
        let new = HyperplaneSet::from_indices(level.iter().copied());
        let upto = below.union(new);
        let cells: BTreeSet<u64> = p
            .regions()
            .iter()
            .filter(|r| r.sep.intersection(below) == chosen)
            .map(|r| r.sep.intersection(upto).bits())
            .collect();
        let cells: Vec<HyperplaneSet> = cells.into_iter().map(HyperplaneSet).collect();
        if cells.len() != level.len() + 1 {
            return Err(Error::ChainInvalid(format!(
                "{} regions above a region of the lower level, expected {}",
                cells.len(),
                level.len() + 1
            )));
        }
        let degree = |c: HyperplaneSet| {
            cells
                .iter()
                .filter(|&&o| c.difference(o).union(o.difference(c)).len() == 1)
                .count()
        };
        let ends: Vec<HyperplaneSet> = cells.iter().copied().filter(|&c| degree(c) == 1).collect();
        if ends.len() != 2 || cells.iter().any(|&c| degree(c) > 2) {
            return Err(Error::ChainInvalid(
                "regions within a lower region do not form a path".into(),
            ));
        }
        chosen = ends
            .into_iter()
            .min_by_key(|c| c.intersection(new).bits())
            .unwrap();
        below = upto;
    }
    p.index_of(chosen)
        .ok_or_else(|| Error::ChainInvalid("canonical region not found".into()))
}

/// Rebases `a` at its canonical base region and recomputes the chain there.
pub fn canonical_arrangement<F: Scalar>(
    a: &Arrangement<F>,
    chain: &SupersolvableChain<F>,
) -> Result<(Arrangement<F>, SupersolvableChain<F>)> {
    let p = enumerate_regions(a)?;
    let r = canonical_in(&p, chain)?;
    let rebased = a.rebase(p.region(r).witness.clone())?;
    let again = orient(&rebased, chain.levels.clone())?;
    Ok((rebased, again))
}

/// A rescaling of the normals and a basis in which `Z` is checked to be an
/// order embedding.
#[derive(Clone, Debug)]
pub struct ZonotopalMap<F> {
    /// Positive factor applied to each normal.
    pub scales: Vec<F>,
    pub scaled_normals: Vec<Vec<F>>,
    pub basis: Vec<Vec<F>>,
    /// `Z(R)` in basis coordinates, indexed like the region poset.
    pub coordinates: Vec<Vec<F>>,
    pub sufficiency: SufficiencyTable,
    /// Ordered pairs of regions compared.
    pub pairs_checked: usize,
}

/// Builds a zonotopal embedding from a chain. The base of `a` must be
/// canonical for the chain (see [`canonical_arrangement`]).
pub fn zonotopal_embedding<F: Scalar>(
    a: &Arrangement<F>,
    chain: &SupersolvableChain<F>,
) -> Result<ZonotopalMap<F>> {
    if chain.rank() != a.rank() || chain.levels.iter().map(Vec::len).sum::<usize>() != a.len() {
        return Err(Error::ChainInvalid(
            "levels do not partition the arrangement".into(),
        ));
    }
    if !chain.is_monotone(a) {
        return Err(Error::ChainInvalid(
            "base region is not canonical for the chain".into(),
        ));
    }
    let d = basic_digraph(a);
    if !chain.respects(&d) {
        return Err(Error::ChainInvalid(
            "a level has an arc against its crossing order".into(),
        ));
    }
    let mut basis = chain.lines.clone();
    let mut coords = basis_coordinates(a.normals(), &basis)?;
    let level = chain.level_of(a.len());
    let mut scales = vec![F::zero(); a.len()];
    let two = F::from_int(2);
    let half = F::from_frac(1, 2);
    let holds = |scales: &[F], coords: &[Vec<F>], h: usize, i: usize| -> bool {
        let rhs = d.out_neighbors(h).iter().fold(F::zero(), |acc, &k| {
            acc + scales[k].clone() * coords[k][i].clone()
        });
        scales[h].clone() * coords[h][i].clone() > rhs
    };
    for (k, order) in chain.level_order.iter().enumerate() {
        // sinks first: every arc of the level points later in the order
        for &h in order.iter().rev() {
            scales[h] = F::one();
            while !holds(&scales, &coords, h, k) {
                scales[h] = scales[h].clone() * two.clone();
            }
        }
        // Shear lower coordinates by coordinate k so the new level has no
        // negative coordinate; coordinate k vanishes on lower levels.
        for i in 0..k {
            let shift = order
                .iter()
                .map(|&h| -coords[h][i].clone() / coords[h][k].clone())
                .fold(F::zero(), |m, x| if x > m { x } else { m });
            if shift.is_zero() {
                continue;
            }
            for c in coords.iter_mut() {
                c[i] = c[i].clone() + shift.clone() * c[k].clone();
            }
            basis[k] = sub(&basis[k], &scale(&basis[i], &shift));
        }
        let lower: Vec<usize> = (0..a.len()).filter(|&h| level[h] < k).collect();
        while !lower.iter().all(|&h| holds(&scales, &coords, h, level[h])) {
            for &h in order {
                scales[h] = scales[h].clone() * half.clone();
            }
        }
    }
    let scaled_normals: Vec<Vec<F>> = (0..a.len())
        .map(|h| scale(a.normal(h), &scales[h]))
        .collect();
    let sufficiency = check_sufficient(a, &d, &scaled_normals, &basis)?;
    if !sufficiency.is_sufficient() {
        return Err(Error::VerificationFailed(format!(
            "sufficiency fails for hyperplanes {:?}",
            sufficiency.failing()
        )));
    }
    let scaled_coords = basis_coordinates(&scaled_normals, &basis)?;
    let p = enumerate_regions(a)?;
    let coordinates = zonotope_coordinates(&p, &scaled_coords);
    if let Some(&(r1, r2)) = zonotope_violations(&p, &coordinates).first() {
        return Err(Error::VerificationFailed(format!(
            "regions {r1} and {r2} are compared incorrectly"
        )));
    }
    Ok(ZonotopalMap {
        scales,
        scaled_normals,
        basis,
        coordinates,
        sufficiency,
        pairs_checked: p.len() * p.len(),
    })
}
