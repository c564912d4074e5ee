use num_rational::BigRational;

use super::{root_system, CoxeterType};
use crate::error::{Error, Result};
use crate::geometry::{dot, Scalar, Sign};
use crate::poset::PartialOrder;
use crate::sets::HyperplaneSet;

/// Largest group enumerated by [`weak_order_model`].
pub const MAX_GROUP_ORDER: u64 = 1_000_000;

/// A signed permutation in window notation: entry `i` is `±w(i)`, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation(Vec<i64>);

impl SignedPermutation {
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &w in &window {
            let a = w.unsigned_abs() as usize;
            if a == 0 || a > n || std::mem::replace(&mut seen[a], true) {
                return Err(Error::Parse(format!(
                    "{window:?} is not a signed permutation"
                )));
            }
        }
        Ok(SignedPermutation(window))
    }

    pub fn window(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn negatives(&self) -> usize {
        self.0.iter().filter(|&&w| w < 0).count()
    }

    pub fn is_unsigned(&self) -> bool {
        self.negatives() == 0
    }

    /// `(w x)_i = sign(w_i) x_{|w_i|}`.
    pub fn act<F: Scalar>(&self, x: &[F]) -> Vec<F> {
        self.0
            .iter()
            .map(|&w| {
                let v = x[w.unsigned_abs() as usize - 1].clone();
                if w < 0 {
                    -v
                } else {
                    v
                }
            })
            .collect()
    }
}

/// `sum over j < i with pi_j > pi_i of 2^(j-1)`, for a permutation `pi` and
/// `2 <= i <= n` (1-based).
pub fn type_a_eta(pi: &SignedPermutation, i: usize) -> u64 {
    assert!(pi.is_unsigned() && (2..=pi.len()).contains(&i));
    let w = pi.window();
    (1..i)
        .filter(|&j| w[j - 1] > w[i - 1])
        .map(|j| 1u64 << (j - 1))
        .sum()
}

/// Weak order realized by group elements and their inversion sets over the
/// positive roots of the matching root system.
#[derive(Clone, Debug)]
pub struct WeakOrderModel {
    pub kind: CoxeterType,
    pub n: usize,
    /// Sorted by inversion set.
    pub elements: Vec<SignedPermutation>,
    pub inversions: Vec<HyperplaneSet>,
}

impl PartialOrder for WeakOrderModel {
    fn size(&self) -> usize {
        self.elements.len()
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.inversions[a].is_subset(self.inversions[b])
    }
}

/// Enumerates the group (the symmetric group on `n` letters for type A, the
/// signed permutations of rank `n` for type B, those with an even number of
/// sign changes for type D) and records the inversion set of each element as
/// the roots positive on `w` applied to the base witness. Roots are indexed as
/// in `root_system(A, n - 1)`, `root_system(B, n)` or `root_system(D, n)`.
pub fn weak_order_model(kind: CoxeterType, n: usize) -> Result<WeakOrderModel> {
    let (rank, signs) = match kind {
        CoxeterType::A if n >= 2 => (n - 1, false),
        CoxeterType::B if n >= 2 => (n, true),
        CoxeterType::D if n >= 3 => (n, true),
        _ => {
            return Err(Error::InvalidRank(format!(
                "no weak order model for {kind}{n}"
            )))
        }
    };
    let factorial: u64 = (1..=n as u64)
        .try_fold(1u64, |acc, k| acc.checked_mul(k))
        .unwrap_or(u64::MAX);
    let order = match kind {
        CoxeterType::A => factorial,
        CoxeterType::B => factorial.saturating_mul(1 << n.min(63)),
        _ => factorial.saturating_mul(1 << (n - 1).min(63)),
    };
    if order > MAX_GROUP_ORDER {
        return Err(Error::GroupTooLarge(order.min(usize::MAX as u64) as usize));
    }
    let rs = root_system::<BigRational>(kind, rank)?;
    let base = rs.base_witness().to_vec();
    let mut elements = Vec::with_capacity(order as usize);
    for perm in permutations(n) {
        let masks = if signs { 0..1u32 << n } else { 0..1 };
        for mask in masks {
            if kind == CoxeterType::D && mask.count_ones() % 2 == 1 {
                continue;
            }
            let window: Vec<i64> = perm
                .iter()
                .enumerate()
                .map(|(i, &p)| {
                    if mask >> i & 1 == 1 {
                        -(p as i64)
                    } else {
                        p as i64
                    }
                })
                .collect();
            elements.push(SignedPermutation(window));
        }
    }
    let mut pairs: Vec<(HyperplaneSet, SignedPermutation)> = elements
        .into_iter()
        .map(|w| {
            let p = w.act(&base);
            let inv = rs
                .positive_roots()
                .iter()
                .enumerate()
                .filter(|(_, r)| dot(&p, r).sign() == Sign::Positive)
                .map(|(k, _)| k)
                .collect();
            (inv, w)
        })
        .collect();
    pairs.sort();
    let (inversions, elements) = pairs.into_iter().unzip();
    Ok(WeakOrderModel {
        kind,
        n,
        elements,
        inversions,
    })
}

/// All permutations of `1..=n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (1..=n).collect();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1))
            .rev()
            .find(|&i| current[i] < current[i + 1])
        else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::enumerate_regions;
    use crate::poset::find_isomorphism;

    #[test]
    fn group_sizes() {
        assert_eq!(
            weak_order_model(CoxeterType::A, 3).unwrap().elements.len(),
            6
        );
        assert_eq!(
            weak_order_model(CoxeterType::B, 2).unwrap().elements.len(),
            8
        );
        assert_eq!(
            weak_order_model(CoxeterType::D, 3).unwrap().elements.len(),
            24
        );
        assert!(matches!(
            weak_order_model(CoxeterType::A, 11),
            Err(Error::GroupTooLarge(_))
        ));
    }

    #[test]
    fn model_matches_regions() {
        for (k, n, rank) in [
            (CoxeterType::A, 4, 3),
            (CoxeterType::B, 3, 3),
            (CoxeterType::D, 4, 4),
        ] {
            let model = weak_order_model(k, n).unwrap();
            let rs = root_system::<BigRational>(k, rank).unwrap();
            let p = enumerate_regions(rs.arrangement()).unwrap();
            let seps: Vec<HyperplaneSet> = p.regions().iter().map(|r| r.sep).collect();
            assert_eq!(seps, model.inversions, "{k}{n}");
        }
    }

    #[test]
    fn d3_is_a3() {
        let d3 = weak_order_model(CoxeterType::D, 3).unwrap();
        let a3 = weak_order_model(CoxeterType::A, 4).unwrap();
        assert!(find_isomorphism(&d3, &a3).is_some());
    }

    #[test]
    fn eta_examples() {
        let id = SignedPermutation::new(vec![1, 2, 3]).unwrap();
        assert_eq!((type_a_eta(&id, 2), type_a_eta(&id, 3)), (0, 0));
        let rev = SignedPermutation::new(vec![3, 2, 1]).unwrap();
        assert_eq!((type_a_eta(&rev, 2), type_a_eta(&rev, 3)), (1, 3));
        assert!(SignedPermutation::new(vec![1, 1]).is_err());
    }
}
