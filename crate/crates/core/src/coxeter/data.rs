//! Root lists. Constructive types come with their positive roots and a base
//! witness; the other types come as full root lists from which positives are
//! cut out by a generic linear functional.

use crate::geometry::Scalar;

pub(super) struct Positive<F> {
    pub roots: Vec<Vec<F>>,
    pub labels: Vec<String>,
    pub base: Vec<F>,
}

fn unit<F: Scalar>(dim: usize, i: usize, c: i64) -> Vec<F> {
    let mut v = vec![F::zero(); dim];
    v[i] = F::from_int(c);
    v
}

fn pair<F: Scalar>(dim: usize, i: usize, ci: i64, j: usize, cj: i64) -> Vec<F> {
    let mut v = unit(dim, i, ci);
    v[j] = F::from_int(cj);
    v
}

/// `e_i - e_j` for `1 <= j < i <= letters`.
pub(super) fn type_a<F: Scalar>(letters: usize) -> Positive<F> {
    let mut roots = Vec::new();
    let mut labels = Vec::new();
    for i in 1..letters {
        for j in 0..i {
            roots.push(pair(letters, i, 1, j, -1));
            labels.push(format!("e{}-e{}", i + 1, j + 1));
        }
    }
    let base = (0..letters)
        .map(|i| F::from_int((letters - i) as i64))
        .collect();
    Positive {
        roots,
        labels,
        base,
    }
}

/// For each `i`: `e_i - e_j (j < i)`, `e_i`, `e_i + e_j (j < i)`.
pub(super) fn type_b<F: Scalar>(n: usize) -> Positive<F> {
    let mut roots = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n {
        for j in 0..i {
            roots.push(pair(n, i, 1, j, -1));
            labels.push(format!("e{}-e{}", i + 1, j + 1));
        }
        roots.push(unit(n, i, 1));
        labels.push(format!("e{}", i + 1));
        for j in 0..i {
            roots.push(pair(n, i, 1, j, 1));
            labels.push(format!("e{}+e{}", i + 1, j + 1));
        }
    }
    Positive {
        roots,
        labels,
        base: decreasing_negative(n),
    }
}

/// For each `i`: `e_i - e_j (j < i)`, `e_i + e_j (j < i)`.
pub(super) fn type_d<F: Scalar>(n: usize) -> Positive<F> {
    let mut roots = Vec::new();
    let mut labels = Vec::new();
    for i in 1..n {
        for j in 0..i {
            roots.push(pair(n, i, 1, j, -1));
            labels.push(format!("e{}-e{}", i + 1, j + 1));
        }
        for j in 0..i {
            roots.push(pair(n, i, 1, j, 1));
            labels.push(format!("e{}+e{}", i + 1, j + 1));
        }
    }
    Positive {
        roots,
        labels,
        base: decreasing_negative(n),
    }
}

fn decreasing_negative<F: Scalar>(n: usize) -> Vec<F> {
    (0..n).map(|i| F::from_int(-(i as i64) - 1)).collect()
}

/// `±e_i ± e_j` for `i < j` in `F^dim`.
fn all_pm_pairs<F: Scalar>(dim: usize) -> Vec<Vec<F>> {
    let mut out = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                out.push(pair(dim, i, si, j, sj));
            }
        }
    }
    out
}

/// `1/2 (±1, ..., ±1)` in `F^dim`, optionally only with an even number of
/// minus signs.
fn half_signs<F: Scalar>(dim: usize, even_only: bool) -> Vec<Vec<F>> {
    (0..1u32 << dim)
        .filter(|mask| !even_only || mask.count_ones() % 2 == 0)
        .map(|mask| {
            (0..dim)
                .map(|i| F::from_frac(if mask >> i & 1 == 1 { -1 } else { 1 }, 2))
                .collect()
        })
        .collect()
}

pub(super) fn e8<F: Scalar>() -> Vec<Vec<F>> {
    let mut roots = all_pm_pairs(8);
    roots.extend(half_signs(8, true));
    roots
}

/// Roots of `E8` orthogonal to every vector in `perp`.
fn e8_perp<F: Scalar>(perp: &[Vec<F>]) -> Vec<Vec<F>> {
    e8::<F>()
        .into_iter()
        .filter(|r| perp.iter().all(|p| crate::geometry::dot(r, p).is_zero()))
        .collect()
}

pub(super) fn e7<F: Scalar>() -> Vec<Vec<F>> {
    e8_perp(&[pair(8, 6, 1, 7, 1)])
}

pub(super) fn e6<F: Scalar>() -> Vec<Vec<F>> {
    e8_perp(&[pair(8, 6, 1, 7, 1), pair(8, 5, 1, 6, -1)])
}

pub(super) fn f4<F: Scalar>() -> Vec<Vec<F>> {
    let mut roots = all_pm_pairs(4);
    for i in 0..4 {
        roots.push(unit(4, i, 1));
        roots.push(unit(4, i, -1));
    }
    roots.extend(half_signs(4, false));
    roots
}

/// Even permutations of `0..len`.
fn even_permutations(len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..len).collect();
    permute(&mut perm, 0, &mut out);
    out.retain(|p| {
        let inversions = (0..len)
            .flat_map(|i| (i + 1..len).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        inversions % 2 == 0
    });
    out.sort();
    out
}

fn permute(p: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == p.len() {
        out.push(p.clone());
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, out);
        p.swap(k, i);
    }
}

/// Even permutations of `1/2 (±a_0, ±a_1, ...)` with sign changes on the
/// nonzero entries.
fn signed_even_perms<F: Scalar>(entries: &[F]) -> Vec<Vec<F>> {
    let len = entries.len();
    let nonzero: Vec<usize> = (0..len).filter(|&i| !entries[i].is_zero()).collect();
    let half = F::from_frac(1, 2);
    let mut out = Vec::new();
    for perm in even_permutations(len) {
        for mask in 0..1u32 << nonzero.len() {
            let mut signed: Vec<F> = entries.to_vec();
            for (bit, &i) in nonzero.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    signed[i] = -signed[i].clone();
                }
            }
            out.push(
                (0..len)
                    .map(|k| signed[perm[k]].clone() * half.clone())
                    .collect(),
            );
        }
    }
    out.sort();
    out.dedup();
    out
}

fn plus_minus_units<F: Scalar>(dim: usize) -> Vec<Vec<F>> {
    (0..dim)
        .flat_map(|i| [unit(dim, i, 1), unit(dim, i, -1)])
        .collect()
}

pub(super) fn h3<F: Scalar>(phi: F) -> Vec<Vec<F>> {
    let inv = phi.clone() - F::one();
    let mut roots = plus_minus_units(3);
    roots.extend(signed_even_perms(&[F::one(), phi, inv]));
    roots
}

pub(super) fn h4<F: Scalar>(phi: F) -> Vec<Vec<F>> {
    let inv = phi.clone() - F::one();
    let mut roots = plus_minus_units(4);
    roots.extend(half_signs(4, false));
    roots.extend(signed_even_perms(&[phi, F::one(), inv, F::zero()]));
    roots
}

/// `±(e_i - e_j)` in `F^3`.
pub(super) fn a2_full<F: Scalar>() -> Vec<Vec<F>> {
    let mut out = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                out.push(pair(3, i, 1, j, -1));
            }
        }
    }
    out
}

/// `±e_i`, `±e_1 ± e_2` in `F^2`.
pub(super) fn b2_full<F: Scalar>() -> Vec<Vec<F>> {
    let mut out = plus_minus_units(2);
    out.extend(all_pm_pairs(2));
    out
}

/// `G2` in the plane `x_1 + x_2 + x_3 = 0`: short roots `±2(e_i - e_j)`, long
/// roots `±(2e_i - e_j - e_k)`. Doubling the short roots makes the simple pair
/// the unique minimizer of inner products.
pub(super) fn g2_full<F: Scalar>() -> Vec<Vec<F>> {
    let mut out: Vec<Vec<F>> = a2_full::<F>()
        .into_iter()
        .map(|r| r.into_iter().map(|x| x * F::from_int(2)).collect())
        .collect();
    for i in 0..3 {
        let long: Vec<F> = (0..3)
            .map(|k| F::from_int(if k == i { 2 } else { -1 }))
            .collect();
        out.push(long.iter().map(|x| -x.clone()).collect());
        out.push(long);
    }
    out
}

/// `m` unit normals with rational coordinates and strictly increasing angle in
/// `[0, pi)`: the images of `t_k = k / (m - k)` under the rational
/// parametrization of the circle.
pub(super) fn rational_dihedral<F: Scalar>(m: usize) -> Positive<F> {
    let roots: Vec<Vec<F>> = (0..m)
        .map(|k| {
            let t = F::from_frac(k as i64, (m - k) as i64);
            let t2 = t.clone() * t.clone();
            let den = F::one() + t2.clone();
            vec![(F::one() - t2) / den.clone(), F::from_int(2) * t / den]
        })
        .collect();
    let base =
        crate::geometry::linalg::neg(&crate::geometry::linalg::add(&roots[0], &roots[m - 1]));
    let labels = roots.iter().map(|r| vector_label(r)).collect();
    Positive {
        roots,
        labels,
        base,
    }
}

pub(super) fn vector_label<F: Scalar>(v: &[F]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_exact_string()).collect();
    format!("({})", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::QSqrt5;
    use num_rational::BigRational;

    #[test]
    fn root_counts() {
        assert_eq!(e8::<BigRational>().len(), 240);
        assert_eq!(e7::<BigRational>().len(), 126);
        assert_eq!(e6::<BigRational>().len(), 72);
        assert_eq!(f4::<BigRational>().len(), 48);
        assert_eq!(h3(QSqrt5::golden_ratio()).len(), 30);
        assert_eq!(h4(QSqrt5::golden_ratio()).len(), 120);
        assert_eq!(even_permutations(4).len(), 12);
    }
}
