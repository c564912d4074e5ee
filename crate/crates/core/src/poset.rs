//! Finite partial orders: a read-only view trait, an explicit relation-matrix
//! poset, and an isomorphism test.

/// Read-only access to a finite partial order on `0..size()`.
pub trait PartialOrder {
    fn size(&self) -> usize;

    fn leq(&self, a: usize, b: usize) -> bool;

    fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// Cover pairs `(lower, upper)` in lexicographic order.
    fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

/// A poset stored as a full relation matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    leq: Vec<Vec<bool>>,
}

impl FinitePoset {
    /// Builds a poset from a reflexive, antisymmetric and transitive relation.
    /// The relation is not checked; see [`FinitePoset::is_partial_order`].
    pub fn from_relation(n: usize, rel: impl Fn(usize, usize) -> bool) -> Self {
        let leq = (0..n)
            .map(|a| (0..n).map(|b| a == b || rel(a, b)).collect())
            .collect();
        FinitePoset { leq }
    }

    /// Copies any partial order view.
    pub fn from_order<P: PartialOrder + ?Sized>(p: &P) -> Self {
        FinitePoset::from_relation(p.size(), |a, b| p.leq(a, b))
    }

    /// The chain `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Self {
        FinitePoset::from_relation(n, |a, b| a <= b)
    }

    /// The reflexive-transitive closure of a set of relations `a < b`.
    pub fn from_relations(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in pairs {
            leq[a][b] = true;
        }
        for k in 0..n {
            let row_k = leq[k].clone();
            for row in leq.iter_mut() {
                if row[k] {
                    for (x, &y) in row.iter_mut().zip(&row_k) {
                        *x |= y;
                    }
                }
            }
        }
        FinitePoset { leq }
    }

    pub fn is_partial_order(&self) -> bool {
        let n = self.leq.len();
        (0..n).all(|a| self.leq[a][a])
            && (0..n).all(|a| (0..n).all(|b| a == b || !(self.leq[a][b] && self.leq[b][a])))
            && (0..n).all(|a| {
                (0..n).all(|b| !self.leq[a][b] || (0..n).all(|c| !self.leq[b][c] || self.leq[a][c]))
            })
    }
}

impl PartialOrder for FinitePoset {
    fn size(&self) -> usize {
        self.leq.len()
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }
}

/// Searches for an order isomorphism `p -> q`, returned as the image of each
/// element of `p`.
pub fn find_isomorphism<P, Q>(p: &P, q: &Q) -> Option<Vec<usize>>
where
    P: PartialOrder + ?Sized,
    Q: PartialOrder + ?Sized,
{
    let n = p.size();
    if n != q.size() {
        return None;
    }
    let profile = |leq: &dyn Fn(usize, usize) -> bool, x: usize| {
        let below = (0..n).filter(|&y| leq(y, x)).count();
        let above = (0..n).filter(|&y| leq(x, y)).count();
        (below, above)
    };
    let pp: Vec<_> = (0..n).map(|x| profile(&|a, b| p.leq(a, b), x)).collect();
    let qp: Vec<_> = (0..n).map(|x| profile(&|a, b| q.leq(a, b), x)).collect();
    let mut ps = pp.clone();
    let mut qs = qp.clone();
    ps.sort();
    qs.sort();
    if ps != qs {
        return None;
    }
    // assign elements with rarer profiles first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (pp.iter().filter(|&&o| o == pp[x]).count(), x));

    #[allow(clippy::too_many_arguments)]
    fn extend<P, Q>(
        p: &P,
        q: &Q,
        order: &[usize],
        pp: &[(usize, usize)],
        qp: &[(usize, usize)],
        image: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        depth: usize,
    ) -> bool
    where
        P: PartialOrder + ?Sized,
        Q: PartialOrder + ?Sized,
    {
        if depth == order.len() {
            return true;
        }
        let x = order[depth];
        for y in 0..q.size() {
            if used[y] || qp[y] != pp[x] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&a| {
                let b = image[a].unwrap();
                p.leq(a, x) == q.leq(b, y) && p.leq(x, a) == q.leq(y, b)
            });
            if !consistent {
                continue;
            }
            image[x] = Some(y);
            used[y] = true;
            if extend(p, q, order, pp, qp, image, used, depth + 1) {
                return true;
            }
            image[x] = None;
            used[y] = false;
        }
        false
    }

    let mut image = vec![None; n];
    let mut used = vec![false; n];
    extend(p, q, &order, &pp, &qp, &mut image, &mut used, 0)
        .then(|| image.into_iter().map(Option::unwrap).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boolean_lattice(k: usize) -> FinitePoset {
        FinitePoset::from_relation(1 << k, |a, b| a & !b == 0)
    }

    #[test]
    fn chain_covers() {
        let c = FinitePoset::chain(4);
        assert!(c.is_partial_order());
        assert_eq!(c.cover_pairs(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn closure_of_relations() {
        let p = FinitePoset::from_relations(3, &[(0, 1), (1, 2)]);
        assert!(p.leq(0, 2));
        assert!(p.is_partial_order());
    }

    #[test]
    fn isomorphism_detects_relabeling() {
        let b = boolean_lattice(3);
        // relabel by reversing bit order
        let rev = |x: usize| ((x & 1) << 2) | (x & 2) | ((x & 4) >> 2);
        let r = FinitePoset::from_relation(8, |a, c| b.leq(rev(a), rev(c)));
        let iso = find_isomorphism(&b, &r).unwrap();
        for a in 0..8 {
            for c in 0..8 {
                assert_eq!(b.leq(a, c), r.leq(iso[a], iso[c]));
            }
        }
        assert!(find_isomorphism(&b, &FinitePoset::chain(8)).is_none());
    }
}
