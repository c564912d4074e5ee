//! Central arrangements with a base region, region enumeration and the poset
//! of regions.
//!
//! Normals are oriented so the base point evaluates strictly negative on every
//! one of them. With that convention the separating set of a region is the set
//! of hyperplanes whose normal is positive on its interior, the base region has
//! the empty separating set and its antipode has the full one.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::linalg::{dot, is_zero_vector, neg, rank_of};
use crate::geometry::{strict_cone_witness, ConeProblem, Scalar, Sign};
use crate::poset::PartialOrder;
use crate::sets::{HyperplaneSet, MAX_SET_BITS};

/// Largest arrangement whose regions will be enumerated.
pub const MAX_ENUMERATION_HYPERPLANES: usize = 24;
/// Largest number of regions that will be materialized.
pub const MAX_REGIONS: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement<F> {
    dim: usize,
    normals: Vec<Vec<F>>,
    base_witness: Vec<F>,
    rank: usize,
}

impl<F: Scalar> Arrangement<F> {
    /// Builds a central arrangement, flipping normals as needed so that
    /// `base_point` is strictly negative on each of them.
    pub fn new(normals: Vec<Vec<F>>, base_point: Vec<F>) -> Result<Self> {
        if normals.is_empty() {
            return Err(Error::EmptyArrangement);
        }
        let dim = base_point.len();
        let mut oriented = Vec::with_capacity(normals.len());
        for (i, n) in normals.into_iter().enumerate() {
            if n.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: n.len(),
                });
            }
            if is_zero_vector(&n) {
                return Err(Error::ZeroNormal(i));
            }
            match dot(&base_point, &n).sign() {
                Sign::Zero => return Err(Error::BasePointOnHyperplane(i)),
                Sign::Negative => oriented.push(n),
                Sign::Positive => oriented.push(neg(&n)),
            }
        }
        for i in 0..oriented.len() {
            for j in 0..i {
                if rank_of(&[oriented[j].clone(), oriented[i].clone()]) == 1 {
                    return Err(Error::DuplicateHyperplane(j, i));
                }
            }
        }
        let rank = rank_of(&oriented);
        Ok(Arrangement {
            dim,
            normals: oriented,
            base_witness: base_point,
            rank,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of hyperplanes.
    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn normals(&self) -> &[Vec<F>] {
        &self.normals
    }

    pub fn normal(&self, h: usize) -> &[F] {
        &self.normals[h]
    }

    pub fn base_witness(&self) -> &[F] {
        &self.base_witness
    }

    /// Separating set of the region containing `x`, or `None` if `x` lies on a
    /// hyperplane.
    pub fn separating_set_of(&self, x: &[F]) -> Option<HyperplaneSet> {
        assert!(self.len() <= MAX_SET_BITS);
        let mut s = HyperplaneSet::EMPTY;
        for (i, n) in self.normals.iter().enumerate() {
            match dot(x, n).sign() {
                Sign::Zero => return None,
                Sign::Positive => s = s.with(i),
                Sign::Negative => {}
            }
        }
        Some(s)
    }

    /// The open cone with separating set `sep`, restricted to the hyperplanes
    /// in `among`.
    pub fn cone(
        &self,
        sep: HyperplaneSet,
        among: impl IntoIterator<Item = usize>,
    ) -> ConeProblem<F> {
        let mut p = ConeProblem::new(self.dim);
        for i in among {
            p.push(self.normals[i].clone(), sep.contains(i))
                .expect("dimensions checked");
        }
        p
    }

    /// Whether `sep` is the separating set of some region.
    pub fn is_region(&self, sep: HyperplaneSet) -> bool {
        strict_cone_witness(&self.cone(sep, 0..self.len())).is_some()
    }

    /// Number of facets of the base region.
    pub fn base_facet_count(&self) -> usize {
        self.base_facets().len()
    }

    /// Hyperplanes supporting a facet of the base region.
    pub fn base_facets(&self) -> Vec<usize> {
        (0..self.len())
            .into_par_iter()
            .filter(|&h| {
                let mut p = ConeProblem::new(self.dim);
                for (k, n) in self.normals.iter().enumerate() {
                    p.push(n.clone(), k == h).expect("dimensions checked");
                }
                strict_cone_witness(&p).is_some()
            })
            .collect()
    }

    /// The arrangement with hyperplane `h` removed; the base point is kept, so
    /// the new base region is the one containing the old.
    pub fn delete(&self, h: usize) -> Result<Arrangement<F>> {
        let normals = self
            .normals
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != h)
            .map(|(_, n)| n.clone())
            .collect();
        Arrangement::new(normals, self.base_witness.clone())
    }

    /// The subarrangement on `indices` (in the given order).
    pub fn restrict(&self, indices: &[usize]) -> Result<Arrangement<F>> {
        let normals = indices.iter().map(|&i| self.normals[i].clone()).collect();
        Arrangement::new(normals, self.base_witness.clone())
    }

    /// Same hyperplanes with a different base point; normals are reoriented.
    pub fn rebase(&self, base_point: Vec<F>) -> Result<Arrangement<F>> {
        Arrangement::new(self.normals.clone(), base_point)
    }
}

/// Convenience wrapper for [`Arrangement::new`].
pub fn build_arrangement<F: Scalar>(
    normals: Vec<Vec<F>>,
    base_point: Vec<F>,
) -> Result<Arrangement<F>> {
    Arrangement::new(normals, base_point)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region<F> {
    pub sep: HyperplaneSet,
    pub witness: Vec<F>,
}

/// The poset of regions: regions sorted by separating-set value, ordered by
/// containment of separating sets.
#[derive(Clone, Debug)]
pub struct RegionPoset<F> {
    num_hyperplanes: usize,
    regions: Vec<Region<F>>,
    index: HashMap<HyperplaneSet, usize>,
    covers: Vec<(usize, usize)>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
}

impl<F: Scalar> RegionPoset<F> {
    /// Builds the poset from a complete list of regions. Cover relations are
    /// the pairs whose separating sets differ in one hyperplane.
    pub fn from_regions(num_hyperplanes: usize, mut regions: Vec<Region<F>>) -> Self {
        regions.sort_by_key(|r| r.sep);
        regions.dedup_by_key(|r| r.sep);
        let index: HashMap<HyperplaneSet, usize> = regions
            .iter()
            .enumerate()
            .map(|(i, r)| (r.sep, i))
            .collect();
        let n = regions.len();
        let mut covers = Vec::new();
        let mut lower = vec![Vec::new(); n];
        let mut upper = vec![Vec::new(); n];
        for (i, r) in regions.iter().enumerate() {
            for h in 0..num_hyperplanes {
                if r.sep.contains(h) {
                    continue;
                }
                if let Some(&j) = index.get(&r.sep.with(h)) {
                    covers.push((i, j));
                    upper[i].push(j);
                    lower[j].push(i);
                }
            }
        }
        covers.sort();
        for l in lower.iter_mut() {
            l.sort();
        }
        RegionPoset {
            num_hyperplanes,
            regions,
            index,
            covers,
            lower,
            upper,
        }
    }

    pub fn len(&self) -> usize {
        self.regions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.regions.is_empty()
    }

    pub fn num_hyperplanes(&self) -> usize {
        self.num_hyperplanes
    }

    pub fn regions(&self) -> &[Region<F>] {
        &self.regions
    }

    pub fn region(&self, i: usize) -> &Region<F> {
        &self.regions[i]
    }

    pub fn sep(&self, i: usize) -> HyperplaneSet {
        self.regions[i].sep
    }

    pub fn index_of(&self, sep: HyperplaneSet) -> Option<usize> {
        self.index.get(&sep).copied()
    }

    /// Index of the base region.
    pub fn bottom(&self) -> usize {
        self.index_of(HyperplaneSet::EMPTY)
            .expect("base region present")
    }

    /// Index of the antipode of the base region.
    pub fn top(&self) -> usize {
        self.index_of(HyperplaneSet::full(self.num_hyperplanes))
            .expect("antipodal region present")
    }

    /// Index of `-R`.
    pub fn antipode(&self, i: usize) -> Option<usize> {
        self.index_of(self.sep(i).complement(self.num_hyperplanes))
    }

    /// Cover pairs `(lower, upper)`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Regions covered by region `i`.
    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    /// Regions covering region `i`.
    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    /// Hyperplanes supporting a facet of region `i`.
    pub fn facets(&self, i: usize) -> HyperplaneSet {
        let s = self.sep(i);
        (0..self.num_hyperplanes)
            .filter(|&h| self.index.contains_key(&s.toggle(h)))
            .collect()
    }

    pub fn poset_leq(&self, r1: usize, r2: usize) -> bool {
        self.sep(r1).is_subset(self.sep(r2))
    }
}

impl<F: Scalar> PartialOrder for RegionPoset<F> {
    fn size(&self) -> usize {
        self.len()
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.poset_leq(a, b)
    }

    fn cover_pairs(&self) -> Vec<(usize, usize)> {
        self.covers.clone()
    }
}

/// Cells of the central arrangement of `functionals` in `F^dim`, as sign sets
/// (bit set = positive) with strictly interior witnesses. Hyperplanes are
/// inserted one at a time; a cell is split whenever both sides of the new
/// hyperplane are feasible. `seed` is used as the witness of the all-negative
/// cell when it is negative on every functional.
pub(crate) fn enumerate_cells<F: Scalar>(
    dim: usize,
    functionals: &[Vec<F>],
    seed: Option<&[F]>,
    limit: usize,
) -> Result<Vec<(HyperplaneSet, Vec<F>)>> {
    let start = seed
        .map(|s| s.to_vec())
        .unwrap_or_else(|| vec![F::zero(); dim]);
    let mut cells: Vec<(HyperplaneSet, Vec<F>)> = vec![(HyperplaneSet::EMPTY, start)];
    for (k, f) in functionals.iter().enumerate() {
        let split: Vec<Vec<(HyperplaneSet, Vec<F>)>> = cells
            .par_iter()
            .map(|(s, x)| {
                let side = |positive: bool| -> Option<Vec<F>> {
                    let mut p = ConeProblem::new(dim);
                    for (i, g) in functionals[..k].iter().enumerate() {
                        p.push(g.clone(), s.contains(i))
                            .expect("dimensions checked");
                    }
                    p.push(f.clone(), positive).expect("dimensions checked");
                    strict_cone_witness(&p)
                };
                let mut out = Vec::with_capacity(2);
                match dot(x, f).sign() {
                    Sign::Negative => {
                        out.push((*s, x.clone()));
                        if let Some(w) = side(true) {
                            out.push((s.with(k), w));
                        }
                    }
                    Sign::Positive => {
                        if let Some(w) = side(false) {
                            out.push((*s, w));
                        }
                        out.push((s.with(k), x.clone()));
                    }
                    Sign::Zero => {
                        out.extend(side(false).map(|w| (*s, w)));
                        out.extend(side(true).map(|w| (s.with(k), w)));
                    }
                }
                out
            })
            .collect();
        cells = split.into_iter().flatten().collect();
        if cells.len() > limit {
            return Err(Error::TooManyRegions(limit));
        }
    }
    cells.sort_by_key(|c| c.0);
    Ok(cells)
}

/// All regions of `a` with interior witnesses, and their poset.
pub fn enumerate_regions<F: Scalar>(a: &Arrangement<F>) -> Result<RegionPoset<F>> {
    if a.len() > MAX_ENUMERATION_HYPERPLANES {
        return Err(Error::TooManyHyperplanes {
            found: a.len(),
            limit: MAX_ENUMERATION_HYPERPLANES,
        });
    }
    let cells = enumerate_cells(a.dim(), a.normals(), Some(a.base_witness()), MAX_REGIONS)?;
    let regions = cells
        .into_iter()
        .map(|(sep, witness)| Region { sep, witness })
        .collect();
    Ok(RegionPoset::from_regions(a.len(), regions))
}

/// Number of facets of the base region.
pub fn base_facet_count<F: Scalar>(a: &Arrangement<F>) -> usize {
    a.base_facet_count()
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

    fn brute_force_regions(a: &Arrangement<Q>) -> Vec<HyperplaneSet> {
        (0..1u64 << a.len())
            .map(HyperplaneSet)
            .filter(|&s| a.is_region(s))
            .collect()
    }

    #[test]
    fn construction_errors() {
        let e = Arrangement::<Q>::new(vec![from_ints(&[1]), from_ints(&[-2])], from_ints(&[1]));
        assert_eq!(e.unwrap_err(), Error::DuplicateHyperplane(0, 1));
        let e = Arrangement::<Q>::new(vec![from_ints(&[0, 1])], from_ints(&[1, 0]));
        assert_eq!(e.unwrap_err(), Error::BasePointOnHyperplane(0));
        let e = Arrangement::<Q>::new(vec![from_ints(&[0, 0])], from_ints(&[1, 0]));
        assert_eq!(e.unwrap_err(), Error::ZeroNormal(0));
        assert_eq!(
            Arrangement::<Q>::new(vec![], from_ints(&[1])).unwrap_err(),
            Error::EmptyArrangement
        );
    }

    #[test]
    fn orientation_kept_when_already_negative() {
        let a = arr(&[&[1, 0], &[0, 1], &[1, 1]], &[-1, -1]);
        assert_eq!(a.normal(0), &from_ints::<Q>(&[1, 0])[..]);
        assert_eq!(a.normal(2), &from_ints::<Q>(&[1, 1])[..]);
        let b = arr(&[&[1, 0]], &[1, 0]);
        assert_eq!(b.normal(0), &from_ints::<Q>(&[-1, 0])[..]);
    }

    #[test]
    fn a2_has_six_regions() {
        let a = arr(&[&[-1, 1, 0], &[0, -1, 1], &[-1, 0, 1]], &[3, 2, 1]);
        let p = enumerate_regions(&a).unwrap();
        assert_eq!(p.len(), 6);
        let seps: Vec<_> = p.regions().iter().map(|r| r.sep).collect();
        assert_eq!(seps, brute_force_regions(&a));
        assert_eq!(p.covers().len(), 6);
        assert_eq!(a.base_facet_count(), 2);
    }

    #[test]
    fn planar_example_has_six_sectors() {
        let a = arr(&[&[1, 0], &[0, 1], &[1, 1]], &[-1, -1]);
        assert_eq!(enumerate_regions(&a).unwrap().len(), 6);
    }

    #[test]
    fn cuboctahedron_regions() {
        let a = arr(
            &[&[1, 1, 1], &[1, -1, -1], &[-1, 1, -1], &[-1, -1, 1]],
            &[1, 1, 1],
        );
        let p = enumerate_regions(&a).unwrap();
        assert_eq!(p.len(), 14);
        let facet_counts: Vec<usize> = (0..p.len()).map(|i| p.facets(i).len()).collect();
        assert_eq!(facet_counts.iter().filter(|&&c| c == 3).count(), 8);
        assert_eq!(facet_counts.iter().filter(|&&c| c == 4).count(), 6);
        assert_eq!(a.base_facet_count(), 3);
        let quad = a.rebase(from_ints(&[1, 0, 0])).unwrap();
        assert_eq!(quad.base_facet_count(), 4);
    }

    #[test]
    fn single_hyperplane() {
        let a = arr(&[&[1, 0]], &[-1, 0]);
        let p = enumerate_regions(&a).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.covers(), &[(0, 1)]);
        assert_eq!(a.base_facet_count(), 1);
        assert!(p.poset_leq(p.bottom(), p.top()));
    }

    #[test]
    fn witnesses_are_interior() {
        let a = arr(
            &[&[1, 2, 0], &[0, 1, -1], &[3, 0, 1], &[1, 1, 1], &[2, -1, 1]],
            &[-1, -2, -3],
        );
        let p = enumerate_regions(&a).unwrap();
        for r in p.regions() {
            assert_eq!(a.separating_set_of(&r.witness), Some(r.sep));
        }
        assert_eq!(
            p.regions().iter().map(|r| r.sep).collect::<Vec<_>>(),
            brute_force_regions(&a)
        );
    }

    #[test]
    fn too_many_hyperplanes_guard() {
        let normals: Vec<Vec<Q>> = (1..=25).map(|k| from_ints(&[1, k])).collect();
        let a = Arrangement::new(normals, from_ints(&[-1, 0])).unwrap();
        assert!(matches!(
            enumerate_regions(&a),
            Err(Error::TooManyHyperplanes { .. })
        ));
    }
}
