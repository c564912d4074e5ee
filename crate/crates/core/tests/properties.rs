mod common;

use std::collections::BTreeSet;

use hyperdim::coxeter::{root_system, CoxeterType};
use hyperdim::irreducibles::subcritical_direct;
use hyperdim::zonotope::{canonical_arrangement, supersolvable_chain};
use hyperdim::{enumerate_regions, HyperplaneSet, Rational};
use proptest::prelude::*;

use common::{arrangement, zaslavsky_rank, zaslavsky_regions, SepOrder};

fn normals_strategy() -> impl Strategy<Value = (Vec<Vec<i64>>, Vec<i64>)> {
    (
        prop::collection::vec(prop::collection::vec(-3i64..=3, 3), 2..=6),
        prop::collection::vec(-20i64..=20, 3),
    )
}

fn admissible(normals: &[Vec<i64>], base: &[i64]) -> bool {
    let zero = |v: &Vec<i64>| v.iter().all(|&x| x == 0);
    let dot = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>();
    let parallel =
        |a: &[i64], b: &[i64]| (0..3).all(|i| (0..3).all(|j| a[i] * b[j] == a[j] * b[i]));
    !normals.iter().any(zero)
        && normals
            .iter()
            .enumerate()
            .all(|(i, a)| normals[i + 1..].iter().all(|b| !parallel(a, b)))
        && normals.iter().all(|n| dot(n, base) != 0)
        && zaslavsky_rank(normals) >= 2
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn region_count_matches_intersection_lattice((normals, base) in normals_strategy()) {
        prop_assume!(admissible(&normals, &base));
        let p = enumerate_regions(&arrangement(&normals, &base)).unwrap();
        prop_assert_eq!(p.len(), zaslavsky_regions(&normals));
    }

    #[test]
    fn subcritical_pairs_match_definition((normals, base) in normals_strategy()) {
        prop_assume!(admissible(&normals, &base));
        let p = enumerate_regions(&arrangement(&normals, &base)).unwrap();
        let seps: Vec<HyperplaneSet> = p.regions().iter().map(|r| r.sep).collect();
        let found: BTreeSet<_> = subcritical_direct(&p).iter().map(|q| (q.hyperplane, q.j, q.m)).collect();
        prop_assert_eq!(found, SepOrder { seps: &seps }.subcritical());
    }

    #[test]
    fn antipodes_complement((normals, base) in normals_strategy()) {
        prop_assume!(admissible(&normals, &base));
        let p = enumerate_regions(&arrangement(&normals, &base)).unwrap();
        let all = HyperplaneSet::from_indices(0..normals.len());
        for r in 0..p.len() {
            let a = p.antipode(r).unwrap();
            prop_assert_eq!(p.sep(a), all.difference(p.sep(r)));
        }
    }
}

#[test]
fn coxeter_region_counts() {
    let cases = [
        (CoxeterType::A, 2, 6),
        (CoxeterType::A, 3, 24),
        (CoxeterType::A, 4, 120),
        (CoxeterType::B, 3, 48),
        (CoxeterType::D, 4, 192),
    ];
    for (kind, n, want) in cases {
        let rs = root_system::<Rational>(kind, n).unwrap();
        assert_eq!(
            enumerate_regions(rs.arrangement()).unwrap().len(),
            want,
            "{kind}{n}"
        );
    }
    for m in 3..=10 {
        let rs = root_system::<Rational>(CoxeterType::I, m).unwrap();
        assert_eq!(
            enumerate_regions(rs.arrangement()).unwrap().len(),
            2 * m,
            "I2({m})"
        );
    }
    let h3 = root_system::<hyperdim::Golden>(CoxeterType::H, 3).unwrap();
    assert_eq!(enumerate_regions(h3.arrangement()).unwrap().len(), 120);
}

/// At a canonical base, the regions of each next level lying inside the base
/// region of the previous levels form a chain starting at the base.
#[test]
fn canonical_base_is_an_end_of_every_level_path() {
    for (kind, n) in [
        (CoxeterType::A, 3),
        (CoxeterType::B, 3),
        (CoxeterType::A, 4),
    ] {
        let rs = root_system::<Rational>(kind, n).unwrap();
        let chain = supersolvable_chain(rs.arrangement()).unwrap().unwrap();
        let (a, chain) = canonical_arrangement(rs.arrangement(), &chain).unwrap();
        assert!(chain.is_monotone(&a), "{kind}{n}");
        let p = enumerate_regions(&a).unwrap();
        for k in 1..chain.rank() {
            let below = HyperplaneSet::from_indices(chain.prefix(k));
            let upto = HyperplaneSet::from_indices(chain.prefix(k + 1));
            let cells: BTreeSet<u64> = p
                .regions()
                .iter()
                .filter(|r| r.sep.intersection(below).is_empty())
                .map(|r| r.sep.intersection(upto).bits())
                .collect();
            let mut cells: Vec<HyperplaneSet> = cells.into_iter().map(HyperplaneSet).collect();
            cells.sort_by_key(|c| c.len());
            assert_eq!(
                cells.len(),
                chain.levels[k].len() + 1,
                "{kind}{n} level {k}"
            );
            assert!(cells[0].is_empty());
            for pair in cells.windows(2) {
                assert!(
                    pair[0].is_subset(pair[1]) && pair[0] != pair[1],
                    "{kind}{n} level {k}: not a chain"
                );
            }
        }
    }
}
