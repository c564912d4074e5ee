//! Dense exact linear algebra on coordinate vectors.

use super::scalar::{Scalar, Sign};

pub fn dot<F: Scalar>(a: &[F], b: &[F]) -> F {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(F::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

pub fn dot_sign<F: Scalar>(a: &[F], b: &[F]) -> Sign {
    dot(a, b).sign()
}

pub fn is_zero_vector<F: Scalar>(v: &[F]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn scale<F: Scalar>(v: &[F], s: &F) -> Vec<F> {
    v.iter().map(|x| x.clone() * s.clone()).collect()
}

pub fn add<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() + y.clone())
        .collect()
}

pub fn sub<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() - y.clone())
        .collect()
}

pub fn neg<F: Scalar>(v: &[F]) -> Vec<F> {
    v.iter().map(|x| -x.clone()).collect()
}

pub fn from_ints<F: Scalar>(v: &[i64]) -> Vec<F> {
    v.iter().map(|&x| F::from_int(x)).collect()
}

/// `A x` for a matrix given by its columns.
pub fn combine<F: Scalar>(columns: &[Vec<F>], coeffs: &[F], dim: usize) -> Vec<F> {
    let mut out = vec![F::zero(); dim];
    for (col, c) in columns.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(col) {
            *o = o.clone() + x.clone() * c.clone();
        }
    }
    out
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref<F: Scalar>(rows: &[Vec<F>]) -> (Vec<Vec<F>>, Vec<usize>) {
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = F::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                    *x = x.clone() - p.clone() * f.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Dimension of the linear span of `vs`.
pub fn rank_of<F: Scalar>(vs: &[Vec<F>]) -> usize {
    if vs.is_empty() {
        return 0;
    }
    // forward elimination only
    let mut m: Vec<Vec<F>> = vs.to_vec();
    let ncols = m[0].len();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r].clone();
        for row in &mut m[r + 1..] {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone() / pivot[c].clone();
            for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x = x.clone() - p.clone() * f.clone();
            }
        }
        r += 1;
    }
    r
}

/// Canonical representative of the span of `vs` (its reduced row echelon form).
pub fn span_key<F: Scalar>(vs: &[Vec<F>]) -> Vec<Vec<F>> {
    rref(vs).0
}

/// Basis of `{x : <x, r> = 0 for every row r}` in `F^dim`.
pub fn nullspace<F: Scalar>(rows: &[Vec<F>], dim: usize) -> Vec<Vec<F>> {
    let (red, pivots) = rref(rows);
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![F::zero(); dim];
            v[fc] = F::one();
            for (row, &pc) in red.iter().zip(&pivots) {
                v[pc] = -row[fc].clone();
            }
            v
        })
        .collect()
}

/// Coefficients `c` with `sum c_i basis_i = v`, if `v` lies in the span and the
/// basis is linearly independent.
pub fn solve_coordinates<F: Scalar>(basis: &[Vec<F>], v: &[F]) -> Option<Vec<F>> {
    let k = basis.len();
    let dim = v.len();
    // augmented system: rows are coordinates, columns are basis vectors + rhs
    let rows: Vec<Vec<F>> = (0..dim)
        .map(|i| {
            let mut row: Vec<F> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(v[i].clone());
            row
        })
        .collect();
    let (red, pivots) = rref(&rows);
    if pivots.contains(&k) || pivots.len() != k {
        return None;
    }
    let mut c = vec![F::zero(); k];
    for (row, &pc) in red.iter().zip(&pivots) {
        c[pc] = row[k].clone();
    }
    Some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::Zero;

    type Q = BigRational;

    fn v(x: &[i64]) -> Vec<Q> {
        from_ints(x)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank_of(&[v(&[1, 0]), v(&[0, 1]), v(&[1, 1])]), 2);
        assert_eq!(rank_of::<Q>(&[]), 0);
        // positive roots of A2 in R^3
        assert_eq!(
            rank_of(&[v(&[-1, 1, 0]), v(&[0, -1, 1]), v(&[-1, 0, 1])]),
            2
        );
        assert_eq!(rank_of(&[v(&[0, 0, 0])]), 0);
    }

    #[test]
    fn nullspace_is_orthogonal() {
        let rows = vec![v(&[1, 2, 3, 4]), v(&[0, 1, 1, 0])];
        let ns = nullspace(&rows, 4);
        assert_eq!(ns.len(), 2);
        for n in &ns {
            for r in &rows {
                assert!(dot(n, r).is_zero());
            }
        }
        assert_eq!(rank_of(&ns), 2);
    }

    #[test]
    fn coordinates_in_basis() {
        let basis = vec![v(&[1, 1, 0]), v(&[0, 1, 1])];
        let c = solve_coordinates(&basis, &v(&[2, 5, 3])).unwrap();
        assert_eq!(c, v(&[2, 3]));
        assert!(solve_coordinates(&basis, &v(&[1, 0, 0])).is_none());
    }

    #[test]
    fn span_key_is_canonical() {
        let a = span_key(&[v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = span_key(&[v(&[1, 2, 1]), v(&[2, 1, -1])]);
        assert_eq!(a, b);
    }
}
