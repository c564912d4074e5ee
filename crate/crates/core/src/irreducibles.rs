//! Join- and meet-irreducible regions and subcritical pairs, both by direct
//! scan and through shards.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::arrangement::RegionPoset;
use crate::geometry::Scalar;
use crate::rank2::Shard;

/// Regions covering exactly one region, paired with that region.
pub fn join_irreducibles<F: Scalar>(p: &RegionPoset<F>) -> Vec<(usize, usize)> {
    (0..p.len())
        .filter_map(|r| match p.lower_covers(r) {
            [only] => Some((r, *only)),
            _ => None,
        })
        .collect()
}

/// Regions covered by exactly one region, paired with that region.
pub fn meet_irreducibles<F: Scalar>(p: &RegionPoset<F>) -> Vec<(usize, usize)> {
    (0..p.len())
        .filter_map(|r| match p.upper_covers(r) {
            [only] => Some((r, *only)),
            _ => None,
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubcriticalPair {
    /// The hyperplane `H` with `S(j) \ S(j_*) = {H} = S(m^*) \ S(m)`.
    pub hyperplane: usize,
    pub j: usize,
    pub m: usize,
}

/// A subcritical pair found through a shard.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShardPair {
    pub pair: SubcriticalPair,
    /// Index into the shard list.
    pub shard: usize,
}

/// All pairs `(j, m)` with `j` not below `m`, every `x < j` below `m` and every
/// `x > m` above `j`, sorted. Both universal conditions are checked on covers,
/// which suffices since every `x < j` lies below some lower cover of `j`.
pub fn subcritical_direct<F: Scalar>(p: &RegionPoset<F>) -> Vec<SubcriticalPair> {
    let mut out: Vec<SubcriticalPair> = (0..p.len())
        .into_par_iter()
        .flat_map_iter(|j| {
            (0..p.len()).filter_map(move |m| {
                if p.poset_leq(j, m) {
                    return None;
                }
                if !p.lower_covers(j).iter().all(|&x| p.poset_leq(x, m)) {
                    return None;
                }
                if !p.upper_covers(m).iter().all(|&x| p.poset_leq(j, x)) {
                    return None;
                }
                let diff = p.sep(j).difference(p.sep(m));
                debug_assert_eq!(diff.len(), 1);
                Some(SubcriticalPair {
                    hyperplane: diff.first().expect("j is not below m"),
                    j,
                    m,
                })
            })
        })
        .collect();
    out.sort();
    out
}

/// Minimal elements of a set of regions.
fn minimal<F: Scalar>(p: &RegionPoset<F>, set: &[usize]) -> Vec<usize> {
    set.iter()
        .copied()
        .filter(|&x| !set.iter().any(|&y| y != x && p.poset_leq(y, x)))
        .collect()
}

fn maximal<F: Scalar>(p: &RegionPoset<F>, set: &[usize]) -> Vec<usize> {
    set.iter()
        .copied()
        .filter(|&x| !set.iter().any(|&y| y != x && p.poset_leq(x, y)))
        .collect()
}

/// Regions minimal in the upper regions of some shard.
pub fn shard_minimal_uppers<F: Scalar>(p: &RegionPoset<F>, shards: &[Shard<F>]) -> BTreeSet<usize> {
    shards.iter().flat_map(|s| minimal(p, &s.upper)).collect()
}

/// Regions maximal in the lower regions of some shard.
pub fn shard_maximal_lowers<F: Scalar>(p: &RegionPoset<F>, shards: &[Shard<F>]) -> BTreeSet<usize> {
    shards.iter().flat_map(|s| maximal(p, &s.lower)).collect()
}

/// Triples `(shard, J, M)` with `J` minimal among the upper regions, `M`
/// maximal among the lower regions, and `J_* <= M`, sorted by pair.
pub fn subcritical_with_shards<F: Scalar>(
    p: &RegionPoset<F>,
    shards: &[Shard<F>],
) -> Vec<ShardPair> {
    let mut out: Vec<ShardPair> = shards
        .par_iter()
        .enumerate()
        .flat_map_iter(|(s, shard)| {
            let h = shard.hyperplane;
            let maxes = maximal(p, &shard.lower);
            minimal(p, &shard.upper)
                .into_iter()
                .flat_map(move |j| {
                    let below = p
                        .index_of(p.sep(j).without(h))
                        .expect("upper region crosses its shard");
                    maxes
                        .clone()
                        .into_iter()
                        .filter(move |&m| p.poset_leq(below, m))
                        .map(move |m| ShardPair {
                            pair: SubcriticalPair {
                                hyperplane: h,
                                j,
                                m,
                            },
                            shard: s,
                        })
                })
                .collect::<Vec<_>>()
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// The pairs of [`subcritical_with_shards`] without shard labels.
pub fn subcritical_via_shards<F: Scalar>(
    p: &RegionPoset<F>,
    shards: &[Shard<F>],
) -> Vec<SubcriticalPair> {
    let mut out: Vec<SubcriticalPair> = subcritical_with_shards(p, shards)
        .into_iter()
        .map(|s| s.pair)
        .collect();
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{enumerate_regions, Arrangement};
    use crate::geometry::linalg::from_ints;
    use crate::rank2::shards;
    use num_rational::BigRational;

    type Q = BigRational;

    fn arr(normals: &[&[i64]], base: &[i64]) -> Arrangement<Q> {
        Arrangement::new(
            normals.iter().map(|n| from_ints(n)).collect(),
            from_ints(base),
        )
        .unwrap()
    }

    fn check(a: &Arrangement<Q>, joins: usize, pairs: usize) {
        let p = enumerate_regions(a).unwrap();
        let sh = shards(a, &p).unwrap();
        assert_eq!(join_irreducibles(&p).len(), joins);
        let direct = subcritical_direct(&p);
        assert_eq!(direct.len(), pairs);
        assert_eq!(direct, subcritical_via_shards(&p, &sh));
        let ji: BTreeSet<usize> = join_irreducibles(&p).into_iter().map(|x| x.0).collect();
        assert_eq!(ji, shard_minimal_uppers(&p, &sh));
        let mi: BTreeSet<usize> = meet_irreducibles(&p).into_iter().map(|x| x.0).collect();
        assert_eq!(mi, shard_maximal_lowers(&p, &sh));
    }

    #[test]
    fn chain_of_two() {
        let a = arr(&[&[1]], &[-1]);
        let p = enumerate_regions(&a).unwrap();
        assert_eq!(
            subcritical_direct(&p),
            vec![SubcriticalPair {
                hyperplane: 0,
                j: 1,
                m: 0
            }]
        );
        check(&a, 1, 1);
    }

    #[test]
    fn hexagon_and_octagon() {
        check(
            &arr(&[&[-1, 1, 0], &[0, -1, 1], &[-1, 0, 1]], &[3, 2, 1]),
            4,
            4,
        );
        check(
            &arr(&[&[1, 0], &[0, 1], &[-1, 1], &[1, 1]], &[-1, -2]),
            6,
            6,
        );
    }

    #[test]
    fn cuboctahedron_triangular_base() {
        let a = arr(
            &[&[1, 1, 1], &[1, -1, -1], &[-1, 1, -1], &[-1, -1, 1]],
            &[1, 1, 1],
        );
        let p = enumerate_regions(&a).unwrap();
        let sh = shards(&a, &p).unwrap();
        assert_eq!(subcritical_direct(&p), subcritical_via_shards(&p, &sh));
    }
}
