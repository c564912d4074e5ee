//! Shared fixtures for the integration tests: a seeded corpus of random
//! central arrangements and brute-force oracles that use only integer
//! arithmetic and separating sets.

#![allow(dead_code)]

use std::collections::BTreeSet;

use hyperdim::geometry::linalg::from_ints;
use hyperdim::{build_arrangement, HyperplaneSet, Rational, RationalArrangement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CORPUS_SEED: u64 = 0x5eed_2024;
pub const CORPUS_SIZE: usize = 60;

#[derive(Clone, Debug)]
pub struct Sample {
    pub name: String,
    pub normals: Vec<Vec<i64>>,
    pub base: Vec<i64>,
    pub arrangement: RationalArrangement,
}

pub fn arrangement(normals: &[Vec<i64>], base: &[i64]) -> RationalArrangement {
    build_arrangement(
        normals.iter().map(|n| from_ints::<Rational>(n)).collect(),
        from_ints(base),
    )
    .unwrap()
}

fn sample(name: String, normals: Vec<Vec<i64>>, base: Vec<i64>) -> Sample {
    let arrangement = arrangement(&normals, &base);
    Sample {
        name,
        normals,
        base,
        arrangement,
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn cross(a: &[i64], b: &[i64]) -> [i64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn parallel(a: &[i64], b: &[i64]) -> bool {
    match a.len() {
        2 => a[0] * b[1] == a[1] * b[0],
        _ => cross(a, b) == [0, 0, 0],
    }
}

/// Random central arrangements of rank at most 3 with at most 7 hyperplanes,
/// in dimension 2 or 3, with small integer normals.
pub fn random_corpus(size: usize, seed: u64) -> Vec<Sample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(size);
    while out.len() < size {
        let dim = if rng.gen_bool(0.25) { 2 } else { 3 };
        let m = rng.gen_range(3..=if dim == 2 { 6 } else { 7 });
        let mut normals: Vec<Vec<i64>> = Vec::new();
        let mut attempts = 0;
        while normals.len() < m && attempts < 200 {
            attempts += 1;
            let n: Vec<i64> = (0..dim).map(|_| rng.gen_range(-2..=2)).collect();
            if n.iter().all(|&x| x == 0) || normals.iter().any(|o| parallel(o, &n)) {
                continue;
            }
            normals.push(n);
        }
        if normals.len() < m || zaslavsky_rank(&normals) < 2 {
            continue;
        }
        let base = loop {
            let b: Vec<i64> = (0..dim).map(|_| rng.gen_range(-9..=9)).collect();
            if normals.iter().all(|n| dot(n, &b) != 0) {
                break b;
            }
        };
        out.push(sample(format!("random#{}", out.len()), normals, base));
    }
    out
}

pub fn a3() -> Sample {
    let normals = vec![
        vec![-1, 1, 0, 0],
        vec![-1, 0, 1, 0],
        vec![0, -1, 1, 0],
        vec![-1, 0, 0, 1],
        vec![0, -1, 0, 1],
        vec![0, 0, -1, 1],
    ];
    sample("A3".into(), normals, vec![4, 3, 2, 1])
}

pub fn b3() -> Sample {
    let mut normals = Vec::new();
    for i in 0..3 {
        let mut e = vec![0; 3];
        e[i] = 1;
        normals.push(e);
        for j in 0..i {
            let mut minus = vec![0; 3];
            minus[i] = 1;
            minus[j] = -1;
            normals.push(minus);
            let mut plus = vec![0; 3];
            plus[i] = 1;
            plus[j] = 1;
            normals.push(plus);
        }
    }
    sample("B3".into(), normals, vec![-1, -2, -3])
}

pub fn d4() -> Sample {
    let mut normals = Vec::new();
    for i in 0..4 {
        for j in 0..i {
            for s in [-1, 1] {
                let mut n = vec![0; 4];
                n[i] = 1;
                n[j] = s;
                normals.push(n);
            }
        }
    }
    sample("D4".into(), normals, vec![-1, -2, -3, -5])
}

pub fn cuboctahedron() -> Sample {
    let normals = vec![
        vec![1, 1, 1],
        vec![1, -1, -1],
        vec![-1, 1, -1],
        vec![-1, -1, 1],
    ];
    sample("cuboctahedron".into(), normals, vec![1, 1, 1])
}

/// The random corpus plus A3, B3 and the cuboctahedron.
pub fn full_corpus() -> Vec<Sample> {
    let mut c = random_corpus(CORPUS_SIZE, CORPUS_SEED);
    c.extend([a3(), b3(), cuboctahedron()]);
    c
}

/// Rank of an integer vector configuration of dimension at most 4 whose
/// rank is at most 3.
pub fn zaslavsky_rank(normals: &[Vec<i64>]) -> usize {
    if normals.is_empty() {
        return 0;
    }
    let independent_pair = |a: &Vec<i64>, b: &Vec<i64>| {
        (0..a.len()).any(|i| (i + 1..a.len()).any(|j| a[i] * b[j] != a[j] * b[i]))
    };
    let two = normals
        .iter()
        .enumerate()
        .any(|(i, a)| normals[i + 1..].iter().any(|b| independent_pair(a, b)));
    if !two {
        return 1;
    }
    if normals[0].len() == 3 {
        let det = |a: &[i64], b: &[i64], c: &[i64]| dot(a, &cross(b, c));
        let three = (0..normals.len()).any(|i| {
            (i + 1..normals.len()).any(|j| {
                (j + 1..normals.len()).any(|k| det(&normals[i], &normals[j], &normals[k]) != 0)
            })
        });
        if three {
            return 3;
        }
    }
    2
}

fn primitive(v: [i64; 3]) -> [i64; 3] {
    let g = v.iter().fold(0i64, |g, &x| gcd(g, x.abs()));
    let mut w = v.map(|x| x / g);
    if w.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        w = w.map(|x| -x);
    }
    w
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Number of regions from the intersection lattice (Zaslavsky), for
/// arrangements in dimension 2 or 3: `2m` at rank 2, and
/// `2 + 2 Σ_X (m_X - 1)` over the lines `X` at rank 3.
pub fn zaslavsky_regions(normals: &[Vec<i64>]) -> usize {
    match zaslavsky_rank(normals) {
        1 => 2,
        2 => 2 * normals.len(),
        _ => {
            let mut lines: BTreeSet<[i64; 3]> = BTreeSet::new();
            for (i, a) in normals.iter().enumerate() {
                for b in &normals[i + 1..] {
                    lines.insert(primitive(cross(a, b)));
                }
            }
            let s: usize = lines
                .iter()
                .map(|l| normals.iter().filter(|n| dot(n, l) == 0).count() - 1)
                .sum();
            2 + 2 * s
        }
    }
}

/// The order of a poset of regions from its separating sets alone.
pub struct SepOrder<'a> {
    pub seps: &'a [HyperplaneSet],
}

impl SepOrder<'_> {
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.seps[a].is_subset(self.seps[b])
    }

    pub fn lower_covers(&self, r: usize) -> Vec<usize> {
        (0..self.seps.len())
            .filter(|&x| self.leq(x, r) && self.seps[r].difference(self.seps[x]).len() == 1)
            .collect()
    }

    pub fn upper_covers(&self, r: usize) -> Vec<usize> {
        (0..self.seps.len())
            .filter(|&x| self.leq(r, x) && self.seps[x].difference(self.seps[r]).len() == 1)
            .collect()
    }

    pub fn join_irreducibles(&self) -> BTreeSet<usize> {
        (0..self.seps.len())
            .filter(|&r| self.lower_covers(r).len() == 1)
            .collect()
    }

    pub fn meet_irreducibles(&self) -> BTreeSet<usize> {
        (0..self.seps.len())
            .filter(|&r| self.upper_covers(r).len() == 1)
            .collect()
    }

    /// Subcritical pairs `(hyperplane, j, m)` straight from the definition.
    pub fn subcritical(&self) -> BTreeSet<(usize, usize, usize)> {
        let n = self.seps.len();
        let mut out = BTreeSet::new();
        for j in 0..n {
            for m in 0..n {
                if self.leq(j, m) {
                    continue;
                }
                let below = (0..n).all(|x| x == j || !self.leq(x, j) || self.leq(x, m));
                let above = (0..n).all(|x| x == m || !self.leq(m, x) || self.leq(j, x));
                if below && above {
                    let diff = self.seps[j].difference(self.seps[m]);
                    assert_eq!(
                        diff.len(),
                        1,
                        "a subcritical pair differs in one hyperplane"
                    );
                    out.insert((diff.first().unwrap(), j, m));
                }
            }
        }
        out
    }
}
