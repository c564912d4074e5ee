//! Strict feasibility of open polyhedral cones.
//!
//! A system `s_k <x, v_k> > 0` is decided by maximizing a common slack `t`
//! subject to `s_k <x, v_k> >= t`, `-1 <= x_i <= 1` and `t <= 1`. The origin is
//! feasible for this LP, so a single phase of the dense rational simplex method
//! suffices. Bland's rule keeps the method finite and the answer deterministic.

use super::linalg::dot;
use super::scalar::{Scalar, Sign};
use crate::error::{Error, Result};

/// One strict inequality `sign * <x, normal> > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictConstraint<F> {
    pub normal: Vec<F>,
    pub positive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeProblem<F> {
    dim: usize,
    constraints: Vec<StrictConstraint<F>>,
}

impl<F: Scalar> ConeProblem<F> {
    pub fn new(dim: usize) -> Self {
        ConeProblem {
            dim,
            constraints: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constraints(&self) -> &[StrictConstraint<F>] {
        &self.constraints
    }

    /// Adds `<x, normal> > 0` (`positive`) or `<x, normal> < 0`.
    pub fn push(&mut self, normal: Vec<F>, positive: bool) -> Result<()> {
        if normal.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: normal.len(),
            });
        }
        self.constraints.push(StrictConstraint { normal, positive });
        Ok(())
    }

    pub fn with(mut self, normal: Vec<F>, positive: bool) -> Result<Self> {
        self.push(normal, positive)?;
        Ok(self)
    }

    /// Checks a candidate point against every constraint.
    pub fn is_witness(&self, x: &[F]) -> bool {
        x.len() == self.dim
            && self.constraints.iter().all(|c| {
                let s = dot(x, &c.normal).sign();
                if c.positive {
                    s == Sign::Positive
                } else {
                    s == Sign::Negative
                }
            })
    }
}

/// Returns a point strictly satisfying every constraint, or `None` when the
/// open cone is empty.
pub fn strict_cone_witness<F: Scalar>(p: &ConeProblem<F>) -> Option<Vec<F>> {
    let d = p.dim;
    if p.constraints.is_empty() {
        return Some(vec![F::zero(); d]);
    }
    // variables: x+ (d), x- (d), t
    let nv = 2 * d + 1;
    let t_col = 2 * d;
    let mut rows: Vec<Vec<F>> = Vec::new();
    let mut rhs: Vec<F> = Vec::new();
    for c in &p.constraints {
        // t - s<x, v> <= 0
        let mut row = vec![F::zero(); nv];
        for i in 0..d {
            let v = if c.positive {
                c.normal[i].clone()
            } else {
                -c.normal[i].clone()
            };
            row[i] = -v.clone();
            row[d + i] = v;
        }
        row[t_col] = F::one();
        rows.push(row);
        rhs.push(F::zero());
    }
    for i in 0..d {
        let mut up = vec![F::zero(); nv];
        up[i] = F::one();
        up[d + i] = -F::one();
        let down: Vec<F> = up.iter().map(|x| -x.clone()).collect();
        rows.push(up);
        rhs.push(F::one());
        rows.push(down);
        rhs.push(F::one());
    }
    let mut cap = vec![F::zero(); nv];
    cap[t_col] = F::one();
    rows.push(cap);
    rhs.push(F::one());

    let mut objective = vec![F::zero(); nv];
    objective[t_col] = F::one();
    let sol = maximize(rows, rhs, objective);
    let t = sol[t_col].clone();
    if t.sign() != Sign::Positive {
        return None;
    }
    let x: Vec<F> = (0..d)
        .map(|i| sol[i].clone() - sol[d + i].clone())
        .collect();
    debug_assert!(p.is_witness(&x));
    Some(x)
}

/// Maximizes `c.z` subject to `A z <= b`, `z >= 0`, with `b >= 0` and a bounded
/// feasible region. Returns the optimal `z`.
fn maximize<F: Scalar>(a: Vec<Vec<F>>, b: Vec<F>, c: Vec<F>) -> Vec<F> {
    let m = a.len();
    let nv = c.len();
    let ncols = nv + m;
    let mut t: Vec<Vec<F>> = a
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.resize(ncols, F::zero());
            row[nv + i] = F::one();
            row
        })
        .collect();
    let mut rhs = b;
    let mut cost: Vec<F> = c;
    cost.resize(ncols, F::zero());
    let mut basis: Vec<usize> = (nv..ncols).collect();

    while let Some(enter) = (0..ncols).find(|&j| cost[j].sign() == Sign::Positive) {
        let mut leave: Option<(usize, F)> = None;
        for i in 0..m {
            if t[i][enter].sign() != Sign::Positive {
                continue;
            }
            let ratio = rhs[i].clone() / t[i][enter].clone();
            let better = match &leave {
                None => true,
                Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let (r, _) = leave.expect("LP is bounded by construction");

        let piv = t[r][enter].clone();
        if !piv.is_one() {
            let inv = F::one() / piv;
            for x in t[r].iter_mut() {
                if !x.is_zero() {
                    *x = x.clone() * inv.clone();
                }
            }
            rhs[r] = rhs[r].clone() * inv;
        }
        let pivot_row = t[r].clone();
        let pivot_rhs = rhs[r].clone();
        let nz: Vec<usize> = (0..ncols).filter(|&j| !pivot_row[j].is_zero()).collect();
        for i in 0..m {
            if i == r || t[i][enter].is_zero() {
                continue;
            }
            let f = t[i][enter].clone();
            for &j in &nz {
                t[i][j] = t[i][j].clone() - f.clone() * pivot_row[j].clone();
            }
            rhs[i] = rhs[i].clone() - f * pivot_rhs.clone();
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for &j in &nz {
                cost[j] = cost[j].clone() - f.clone() * pivot_row[j].clone();
            }
        }
        basis[r] = enter;
    }

    let mut z = vec![F::zero(); nv];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < nv {
            z[bv] = rhs[i].clone();
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::linalg::from_ints;
    use crate::geometry::scalar::QSqrt5;
    use num_rational::BigRational;
    use num_traits::One;

    type Q = BigRational;

    #[test]
    fn positive_quadrant() {
        let p = ConeProblem::<Q>::new(2)
            .with(from_ints(&[1, 0]), true)
            .unwrap()
            .with(from_ints(&[0, 1]), true)
            .unwrap();
        let x = strict_cone_witness(&p).unwrap();
        assert!(x[0].is_positive_exact() && x[1].is_positive_exact());
    }

    #[test]
    fn contradictory() {
        let p = ConeProblem::<Q>::new(2)
            .with(from_ints(&[1, 0]), true)
            .unwrap()
            .with(from_ints(&[-1, 0]), true)
            .unwrap();
        assert!(strict_cone_witness(&p).is_none());
    }

    #[test]
    fn a2_sign_vectors() {
        // normals e2-e1, e3-e2, e3-e1; x1>x2>x3-type chambers
        let normals = [
            from_ints::<Q>(&[-1, 1, 0]),
            from_ints(&[0, -1, 1]),
            from_ints(&[-1, 0, 1]),
        ];
        let mut feasible = 0;
        for mask in 0..8u32 {
            let mut p = ConeProblem::new(3);
            for (k, n) in normals.iter().enumerate() {
                p.push(n.clone(), mask >> k & 1 == 1).unwrap();
            }
            match strict_cone_witness(&p) {
                Some(x) => {
                    assert!(p.is_witness(&x));
                    feasible += 1;
                }
                None => {
                    // the two cyclic patterns: (+,+,-) and (-,-,+)
                    assert!(mask == 0b011 || mask == 0b100, "mask {mask:03b}");
                }
            }
        }
        assert_eq!(feasible, 6);
    }

    #[test]
    fn golden_field_cone() {
        let phi = QSqrt5::golden_ratio();
        let p = ConeProblem::<QSqrt5>::new(2)
            .with(vec![phi.clone(), -QSqrt5::one()], true)
            .unwrap()
            .with(vec![-QSqrt5::one(), phi.clone()], true)
            .unwrap();
        let x = strict_cone_witness(&p).unwrap();
        assert!(p.is_witness(&x));
    }

    #[test]
    fn degenerate_zero_normal_is_infeasible() {
        let p = ConeProblem::<Q>::new(2)
            .with(from_ints(&[0, 0]), true)
            .unwrap();
        assert!(strict_cone_witness(&p).is_none());
        let empty = ConeProblem::<Q>::new(3);
        assert_eq!(strict_cone_witness(&empty).unwrap().len(), 3);
    }
}
