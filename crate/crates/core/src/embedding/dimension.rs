use crate::error::{Error, Result};
use crate::poset::PartialOrder;

/// Largest poset accepted by the dimension oracle.
pub const MAX_ORACLE_SIZE: usize = 24;

const ORACLE_NODE_BUDGET: u64 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dimension {
    Exact(usize),
    /// No realizer with at most the requested number of extensions was found
    /// (or the search budget ran out).
    Unknown,
}

/// Subcritical pairs `(j, m)` of an arbitrary finite poset.
pub fn subcritical_pairs_of<P: PartialOrder + ?Sized>(p: &P) -> Vec<(usize, usize)> {
    let n = p.size();
    let mut out = Vec::new();
    for j in 0..n {
        for m in 0..n {
            if p.leq(j, m) {
                continue;
            }
            let below = (0..n).all(|x| !p.lt(x, j) || p.leq(x, m));
            let above = (0..n).all(|x| !p.lt(m, x) || p.leq(j, x));
            if below && above {
                out.push((j, m));
            }
        }
    }
    out
}

/// One linear extension under construction: the transitive closure of the
/// poset plus the reversals assigned to it, as up-set bitmasks.
#[derive(Clone)]
struct Extension {
    up: Vec<u32>,
}

impl Extension {
    fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a] >> b & 1 == 1
    }

    /// Whether `m < j` can be added without creating a cycle.
    fn accepts(&self, j: usize, m: usize) -> bool {
        !self.leq(j, m)
    }

    fn add(&mut self, j: usize, m: usize) {
        let above_j = self.up[j];
        for x in 0..self.up.len() {
            if self.leq(x, m) {
                self.up[x] |= above_j;
            }
        }
    }
}

/// Least `d <= d_max` such that `p` is the intersection of `d` linear
/// extensions. Searches for an assignment of the incomparable subcritical
/// pairs to `d` extensions, each pair `(j, m)` forcing `m < j`; a set of pairs
/// is realizable by one extension exactly when the forced relations keep the
/// closure acyclic.
pub fn order_dimension_exact<P: PartialOrder + ?Sized>(p: &P, d_max: usize) -> Result<Dimension> {
    let n = p.size();
    if n > MAX_ORACLE_SIZE {
        return Err(Error::PosetTooLarge(n));
    }
    let pairs: Vec<(usize, usize)> = subcritical_pairs_of(p)
        .into_iter()
        .filter(|&(j, m)| !p.leq(m, j))
        .collect();
    if pairs.is_empty() {
        return Ok(if d_max >= 1 {
            Dimension::Exact(1)
        } else {
            Dimension::Unknown
        });
    }
    let base = Extension {
        up: (0..n)
            .map(|a| {
                (0..n)
                    .filter(|&b| p.leq(a, b))
                    .fold(0u32, |acc, b| acc | 1 << b)
            })
            .collect(),
    };
    let mut budget = ORACLE_NODE_BUDGET;
    for d in 2..=d_max {
        let mut exts = vec![base.clone(); d];
        let mut assigned = vec![false; pairs.len()];
        match search(&pairs, &mut exts, &mut assigned, 0, &mut budget) {
            Some(true) => return Ok(Dimension::Exact(d)),
            Some(false) => {}
            None => return Ok(Dimension::Unknown),
        }
    }
    Ok(Dimension::Unknown)
}

/// Assigns the remaining pairs, always branching on the pair with the fewest
/// compatible extensions. Extensions are symmetric, so a pair may open at most
/// one fresh (still unused) extension. `None` means the budget ran out.
fn search(
    pairs: &[(usize, usize)],
    exts: &mut Vec<Extension>,
    assigned: &mut [bool],
    used: usize,
    budget: &mut u64,
) -> Option<bool> {
    if *budget == 0 {
        return None;
    }
    *budget -= 1;
    let d = exts.len();
    let mut best: Option<(usize, Vec<usize>)> = None;
    for (i, &(j, m)) in pairs.iter().enumerate() {
        if assigned[i] {
            continue;
        }
        let options: Vec<usize> = (0..used.min(d))
            .filter(|&c| exts[c].accepts(j, m))
            .collect();
        let fresh = used < d;
        let count = options.len() + usize::from(fresh);
        if count == 0 {
            return Some(false);
        }
        if best.as_ref().is_none_or(|(_, o)| count < o.len()) {
            let mut opts = options;
            if fresh {
                opts.push(used);
            }
            best = Some((i, opts));
        }
    }
    let Some((i, options)) = best else {
        return Some(true);
    };
    let (j, m) = pairs[i];
    assigned[i] = true;
    for c in options {
        let saved = exts[c].clone();
        exts[c].add(j, m);
        let next_used = used.max(c + 1);
        match search(pairs, exts, assigned, next_used, budget) {
            Some(false) => {}
            other => return other,
        }
        exts[c] = saved;
    }
    assigned[i] = false;
    Some(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::FinitePoset;

    #[test]
    fn chain_and_antichain() {
        assert_eq!(
            order_dimension_exact(&FinitePoset::chain(5), 3).unwrap(),
            Dimension::Exact(1)
        );
        let anti = FinitePoset::from_relation(3, |_, _| false);
        assert_eq!(
            order_dimension_exact(&anti, 3).unwrap(),
            Dimension::Exact(2)
        );
    }

    #[test]
    fn standard_examples() {
        // subsets of [k] of size 1 or k-1
        for k in 3..=4usize {
            let elems: Vec<u32> = (0..k)
                .map(|i| 1 << i)
                .chain((0..k).map(|i| ((1 << k) - 1) & !(1 << i)))
                .collect();
            let p = FinitePoset::from_relation(elems.len(), |a, b| elems[a] & !elems[b] == 0);
            assert_eq!(order_dimension_exact(&p, k).unwrap(), Dimension::Exact(k));
            assert_eq!(
                order_dimension_exact(&p, k - 1).unwrap(),
                Dimension::Unknown
            );
        }
    }

    #[test]
    fn too_large() {
        let p = FinitePoset::chain(25);
        assert_eq!(
            order_dimension_exact(&p, 2).unwrap_err(),
            Error::PosetTooLarge(25)
        );
    }
}
