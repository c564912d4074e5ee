//! Rank-two subarrangements, the basic digraph `D`, basic graph `G`, cutting
//! digraph `Q`, and shards.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use crate::arrangement::{
    enumerate_cells, enumerate_regions, Arrangement, RegionPoset, MAX_REGIONS,
};
use crate::error::{Error, Result};
use crate::geometry::linalg::{combine, dot, nullspace, solve_coordinates, span_key};
use crate::geometry::{strict_cone_witness, ConeProblem, Scalar, Sign};
use crate::graph::{Digraph, Graph};
use crate::sets::HyperplaneSet;

/// All hyperplanes containing a fixed codimension-two subspace `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTwoSub<F> {
    /// Sorted hyperplane indices, at least two.
    pub members: Vec<usize>,
    /// The two hyperplanes bounding the subarrangement region containing the
    /// base region, smaller index first.
    pub basics: (usize, usize),
    /// Reduced echelon basis of the span of the member normals.
    pub normal_span: Vec<Vec<F>>,
    /// Basis of `L`.
    pub space: Vec<Vec<F>>,
}

impl<F> RankTwoSub<F> {
    pub fn is_basic(&self, h: usize) -> bool {
        self.basics.0 == h || self.basics.1 == h
    }

    pub fn contains(&self, h: usize) -> bool {
        self.members.binary_search(&h).is_ok()
    }
}

#[derive(Clone, Debug)]
pub struct RankTwoStructure<F> {
    pub subs: Vec<RankTwoSub<F>>,
    /// Basic digraph: `a -> b` when `a` is basic in the subarrangement of `a ∩ b`.
    pub d: Digraph,
    /// Basic graph: the two-cycles of `D`.
    pub g: Graph,
    /// Cutting digraph: `D` without its two-cycles.
    pub q: Digraph,
    pub q_acyclic: bool,
    pair_sub: Vec<Vec<usize>>,
}

impl<F> RankTwoStructure<F> {
    /// Index of the subarrangement containing hyperplanes `a != b`.
    pub fn sub_of(&self, a: usize, b: usize) -> &RankTwoSub<F> {
        &self.subs[self.pair_sub[a][b]]
    }

    /// Out-neighbours of `h` in `D`.
    pub fn nu(&self, h: usize) -> Vec<usize> {
        self.d.out_neighbors(h)
    }
}

/// Every rank-two subarrangement of `a`, ordered by member list. Empty when
/// `a` has fewer than two hyperplanes.
pub fn rank_two_subarrangements<F: Scalar>(a: &Arrangement<F>) -> Vec<RankTwoSub<F>> {
    let m = a.len();
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .collect();
    let keys: Vec<Vec<Vec<F>>> = pairs
        .par_iter()
        .map(|&(i, j)| span_key(&[a.normal(i).to_vec(), a.normal(j).to_vec()]))
        .collect();
    let mut groups: HashMap<Vec<Vec<F>>, BTreeSet<usize>> = HashMap::new();
    for (&(i, j), key) in pairs.iter().zip(keys) {
        let g = groups.entry(key).or_default();
        g.insert(i);
        g.insert(j);
    }
    let mut subs: Vec<RankTwoSub<F>> = groups
        .into_par_iter()
        .map(|(normal_span, members)| {
            let members: Vec<usize> = members.into_iter().collect();
            let basics = find_basics(a, &members);
            let space = nullspace(&normal_span, a.dim());
            RankTwoSub {
                members,
                basics,
                normal_span,
                space,
            }
        })
        .collect();
    subs.sort_by(|x, y| x.members.cmp(&y.members));
    subs
}

/// Members whose lone flip from the base sign vector is feasible, computed in
/// the plane coordinates `(<x, n_i>, <x, n_j>)` of the first two members.
pub(crate) fn find_basics<F: Scalar>(a: &Arrangement<F>, members: &[usize]) -> (usize, usize) {
    let basis = [a.normal(members[0]).to_vec(), a.normal(members[1]).to_vec()];
    let coords: Vec<Vec<F>> = members
        .iter()
        .map(|&k| solve_coordinates(&basis, a.normal(k)).expect("member lies in the span"))
        .collect();
    let basics: Vec<usize> = members
        .iter()
        .enumerate()
        .filter(|&(flip, _)| {
            let mut p = ConeProblem::new(2);
            for (k, c) in coords.iter().enumerate() {
                p.push(c.clone(), k == flip).expect("plane coordinates");
            }
            strict_cone_witness(&p).is_some()
        })
        .map(|(_, &h)| h)
        .collect();
    assert_eq!(
        basics.len(),
        2,
        "a rank-two subarrangement has exactly two basic hyperplanes"
    );
    (basics[0], basics[1])
}

fn digraphs<F>(m: usize, subs: &[RankTwoSub<F>]) -> (Digraph, Graph, Digraph, Vec<Vec<usize>>) {
    let mut d = Digraph::new(m);
    let mut g = Graph::new(m);
    let mut pair_sub = vec![vec![usize::MAX; m]; m];
    for (s, sub) in subs.iter().enumerate() {
        for &x in &sub.members {
            for &y in &sub.members {
                if x != y {
                    pair_sub[x][y] = s;
                }
            }
        }
        for b in [sub.basics.0, sub.basics.1] {
            for &k in &sub.members {
                if k != b {
                    d.add_arc(b, k);
                }
            }
        }
        g.add_edge(sub.basics.0, sub.basics.1);
    }
    let q = Digraph::from_arcs(m, d.arcs().into_iter().filter(|&(x, y)| !d.has_arc(y, x)));
    (d, g, q, pair_sub)
}

/// The basic digraph of `a` (no rank requirement).
pub fn basic_digraph<F: Scalar>(a: &Arrangement<F>) -> Digraph {
    digraphs(a.len(), &rank_two_subarrangements(a)).0
}

pub fn rank_two_structure<F: Scalar>(a: &Arrangement<F>) -> Result<RankTwoStructure<F>> {
    if a.rank() < 2 {
        return Err(Error::RankTooLow(a.rank()));
    }
    let subs = rank_two_subarrangements(a);
    let (d, g, q, pair_sub) = digraphs(a.len(), &subs);
    let q_acyclic = q.is_acyclic();
    Ok(RankTwoStructure {
        subs,
        d,
        g,
        q,
        q_acyclic,
        pair_sub,
    })
}

/// A cutting locus of a hyperplane, with the side the shard lies on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cut {
    /// Index into the subarrangement list.
    pub sub: usize,
    /// Lowest-index basic hyperplane of that subarrangement; its normal gives
    /// the sign functional of the cut.
    pub basic: usize,
    pub positive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shard<F> {
    pub hyperplane: usize,
    pub cuts: Vec<Cut>,
    /// A point of the shard lying on no other hyperplane.
    pub witness: Vec<F>,
    /// Regions meeting the shard in codimension one with the hyperplane in
    /// their separating set, ascending.
    pub upper: Vec<usize>,
    /// The same without the hyperplane in their separating set, ascending.
    pub lower: Vec<usize>,
}

/// Shards of `a` with respect to its base region, grouped by hyperplane.
pub fn shards<F: Scalar>(a: &Arrangement<F>, p: &RegionPoset<F>) -> Result<Vec<Shard<F>>> {
    let subs = rank_two_subarrangements(a);
    shards_with(a, p, &subs)
}

pub fn shards_with<F: Scalar>(
    a: &Arrangement<F>,
    p: &RegionPoset<F>,
    subs: &[RankTwoSub<F>],
) -> Result<Vec<Shard<F>>> {
    let per_hyperplane: Vec<Vec<Shard<F>>> = (0..a.len())
        .into_par_iter()
        .map(|h| shards_of_hyperplane(a, p, subs, h))
        .collect::<Result<_>>()?;
    Ok(per_hyperplane.into_iter().flatten().collect())
}

fn shards_of_hyperplane<F: Scalar>(
    a: &Arrangement<F>,
    p: &RegionPoset<F>,
    subs: &[RankTwoSub<F>],
    h: usize,
) -> Result<Vec<Shard<F>>> {
    let dim = a.dim();
    let cuts: Vec<(usize, usize)> = subs
        .iter()
        .enumerate()
        .filter(|(_, s)| s.contains(h) && !s.is_basic(h))
        .map(|(i, s)| (i, s.basics.0))
        .collect();
    // coordinates on H
    let kernel = nullspace(&[a.normal(h).to_vec()], dim);
    let restrict = |v: &[F]| -> Vec<F> { kernel.iter().map(|k| dot(k, v)).collect() };
    let functionals: Vec<Vec<F>> = cuts.iter().map(|&(_, b)| restrict(a.normal(b))).collect();
    let cells = enumerate_cells(kernel.len(), &functionals, None, MAX_REGIONS)?;
    let cell_of: HashMap<HyperplaneSet, usize> = cells
        .iter()
        .enumerate()
        .map(|(i, (s, _))| (*s, i))
        .collect();

    let mut out: Vec<Shard<F>> = cells
        .iter()
        .map(|(pattern, w)| Shard {
            hyperplane: h,
            cuts: cuts
                .iter()
                .enumerate()
                .map(|(c, &(sub, basic))| Cut {
                    sub,
                    basic,
                    positive: pattern.contains(c),
                })
                .collect(),
            witness: combine(&kernel, w, dim),
            upper: Vec::new(),
            lower: Vec::new(),
        })
        .collect();
    let mut located = vec![false; out.len()];

    for r in 0..p.len() {
        let sep = p.sep(r);
        if sep.contains(h) {
            continue;
        }
        let Some(above) = p.index_of(sep.with(h)) else {
            continue;
        };
        let mut cone = ConeProblem::new(kernel.len());
        for k in (0..a.len()).filter(|&k| k != h) {
            cone.push(restrict(a.normal(k)), sep.contains(k))?;
        }
        let y = strict_cone_witness(&cone).expect("adjacent regions share a facet");
        let pattern: HyperplaneSet = functionals
            .iter()
            .enumerate()
            .filter(|(_, g)| dot(&y, g).sign() == Sign::Positive)
            .map(|(c, _)| c)
            .collect();
        let s = cell_of[&pattern];
        out[s].lower.push(r);
        out[s].upper.push(above);
        if !located[s] {
            located[s] = true;
            out[s].witness = combine(&kernel, &y, dim);
        }
    }
    for s in out.iter_mut() {
        s.upper.sort_unstable();
    }
    debug_assert!(
        located.iter().all(|&l| l),
        "every shard meets a region in codimension one"
    );
    Ok(out)
}

/// Checks that deleting `h`, a sink of `D` restricted to `class`, leaves the
/// shards in the other hyperplanes of `class` unchanged. Shards are compared
/// geometrically: each is keyed by its hyperplane and, for every cut, the
/// cut's member set without `h` and the side of the shard relative to the
/// lowest-index other member.
pub fn delete_sink_check<F: Scalar>(a: &Arrangement<F>, class: &[usize], h: usize) -> Result<bool> {
    if !class.contains(&h) {
        return Err(Error::NotInClass(h));
    }
    let d = basic_digraph(a);
    if class.iter().any(|&k| k != h && d.has_arc(h, k)) {
        return Err(Error::NotASink(h));
    }
    let rest: BTreeSet<usize> = class.iter().copied().filter(|&k| k != h).collect();
    if rest.is_empty() {
        return Ok(true);
    }
    let before = shard_keys(a, &rest, |k| k, Some(h))?;
    let minus = a.delete(h)?;
    let to_original = |k: usize| if k < h { k } else { k + 1 };
    let rest_minus: BTreeSet<usize> = rest
        .iter()
        .map(|&k| if k < h { k } else { k - 1 })
        .collect();
    let after = shard_keys(&minus, &rest_minus, to_original, None)?;
    Ok(before == after)
}

type ShardKey = (usize, BTreeSet<(Vec<usize>, bool)>);

fn shard_keys<F: Scalar>(
    a: &Arrangement<F>,
    hyperplanes: &BTreeSet<usize>,
    relabel: impl Fn(usize) -> usize,
    deleted: Option<usize>,
) -> Result<BTreeSet<ShardKey>> {
    let p = enumerate_regions(a)?;
    let subs = rank_two_subarrangements(a);
    let all = shards_with(a, &p, &subs)?;
    Ok(all
        .iter()
        .filter(|s| hyperplanes.contains(&s.hyperplane))
        .map(|s| {
            let cuts = s
                .cuts
                .iter()
                .map(|c| {
                    let members = &subs[c.sub].members;
                    let survivors: Vec<usize> = members
                        .iter()
                        .copied()
                        .filter(|&k| Some(relabel(k)) != deleted)
                        .collect();
                    let labels: Vec<usize> = survivors.iter().map(|&k| relabel(k)).collect();
                    // the lowest surviving member other than the shard's own
                    // hyperplane is the same hyperplane before and after deletion
                    let reference = survivors
                        .iter()
                        .copied()
                        .filter(|&k| k != s.hyperplane)
                        .min_by_key(|&k| relabel(k))
                        .expect("a cut has other members");
                    let side = dot(&s.witness, a.normal(reference)).sign() == Sign::Positive;
                    (labels, side)
                })
                .collect();
            (relabel(s.hyperplane), cuts)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::linalg::from_ints;
    use num_rational::BigRational;

    type Q = BigRational;

    fn arr(normals: &[&[i64]], base: &[i64]) -> Arrangement<Q> {
        Arrangement::new(
            normals.iter().map(|n| from_ints(n)).collect(),
            from_ints(base),
        )
        .unwrap()
    }

    fn a2() -> Arrangement<Q> {
        arr(&[&[-1, 1, 0], &[0, -1, 1], &[-1, 0, 1]], &[3, 2, 1])
    }

    fn b2() -> Arrangement<Q> {
        // e1, e2, e2-e1, e2+e1
        arr(&[&[1, 0], &[0, 1], &[-1, 1], &[1, 1]], &[-1, -2])
    }

    fn cubo() -> Arrangement<Q> {
        arr(
            &[&[1, 1, 1], &[1, -1, -1], &[-1, 1, -1], &[-1, -1, 1]],
            &[1, 1, 1],
        )
    }

    #[test]
    fn a2_structure() {
        let s = rank_two_structure(&a2()).unwrap();
        assert_eq!(s.subs.len(), 1);
        assert_eq!(s.subs[0].members, vec![0, 1, 2]);
        assert_eq!(s.subs[0].basics, (0, 1));
        assert_eq!(s.d.arcs(), vec![(0, 1), (0, 2), (1, 0), (1, 2)]);
        assert_eq!(s.g.edges(), vec![(0, 1)]);
        assert_eq!(s.q.arcs(), vec![(0, 2), (1, 2)]);
        assert!(s.q_acyclic);
        assert_eq!(s.nu(2), Vec::<usize>::new());
    }

    #[test]
    fn b2_basics() {
        let s = rank_two_structure(&b2()).unwrap();
        assert_eq!(s.subs.len(), 1);
        assert_eq!(s.subs[0].basics, (0, 2));
    }

    #[test]
    fn cuboctahedron_is_three_generic() {
        let s = rank_two_structure(&cubo()).unwrap();
        assert_eq!(s.subs.len(), 6);
        assert!(s.subs.iter().all(|x| x.members.len() == 2));
        assert_eq!(s.d.arcs().len(), 12);
        assert_eq!(s.q.arcs().len(), 0);
    }

    #[test]
    fn rank_one_rejected() {
        let a = arr(&[&[1, 0]], &[-1, 1]);
        assert_eq!(rank_two_structure(&a).unwrap_err(), Error::RankTooLow(1));
    }

    #[test]
    fn shard_counts() {
        for (a, expected) in [(a2(), 4), (b2(), 6), (cubo(), 4)] {
            let p = enumerate_regions(&a).unwrap();
            let sh = shards(&a, &p).unwrap();
            assert_eq!(sh.len(), expected);
            for s in &sh {
                assert!(!s.upper.is_empty() && s.upper.len() == s.lower.len());
                assert_eq!(dot(&s.witness, a.normal(s.hyperplane)).sign(), Sign::Zero);
                for &u in &s.upper {
                    assert!(p.sep(u).contains(s.hyperplane));
                }
            }
        }
    }

    #[test]
    fn single_hyperplane_has_one_shard() {
        let a = arr(&[&[2]], &[-1]);
        let p = enumerate_regions(&a).unwrap();
        let sh = shards(&a, &p).unwrap();
        assert_eq!(sh.len(), 1);
        assert_eq!(
            (sh[0].lower.clone(), sh[0].upper.clone()),
            (vec![0], vec![1])
        );
    }

    #[test]
    fn sink_deletion() {
        let a = a2();
        assert!(delete_sink_check(&a, &[0, 2], 2).unwrap());
        assert_eq!(
            delete_sink_check(&a, &[0, 2], 0).unwrap_err(),
            Error::NotASink(0)
        );
        assert_eq!(
            delete_sink_check(&a, &[0, 2], 1).unwrap_err(),
            Error::NotInClass(1)
        );
    }
}
