//! Independent oracles shared by the integration tests. They use plain
//! integer arithmetic and never call into the library's decision procedures.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use tractvec::{FMatroid, FVector, GroundSet, Matrix, Morphism, Scalar, Tract};

pub fn ground(n: usize) -> Arc<GroundSet> {
    GroundSet::numbered(n).unwrap()
}

pub fn int_rows(rows: &[Vec<i64>]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect()
}

pub fn row_space(t: Tract, rows: &[Vec<i64>]) -> FMatroid {
    let n = rows[0].len();
    FMatroid::from_subspace(ground(n), &Matrix::parse(t, &int_rows(rows)).unwrap()).unwrap()
}

/// Every `F_p`-combination of the rows, computed with `u64` arithmetic.
pub fn fp_row_space(p: u64, rows: &[Vec<i64>]) -> BTreeSet<FVector> {
    let n = rows[0].len();
    let g = ground(n);
    let k = rows.len();
    let mut out = BTreeSet::new();
    for code in 0..p.pow(k as u32) {
        let mut c = code;
        let mut acc = vec![0u64; n];
        for row in rows {
            let lam = c % p;
            c /= p;
            for (a, &x) in acc.iter_mut().zip(row) {
                *a = (*a + lam * x.rem_euclid(p as i64) as u64) % p;
            }
        }
        let entries = acc.iter().map(|&a| Scalar::fp(p as u32, a as i64)).collect();
        out.insert(FVector::new(Tract::FieldFp(p as u32), g.clone(), entries).unwrap());
    }
    out
}

/// All `x` in `F_p^n` with `A x = 0`.
pub fn fp_kernel(p: u64, rows: &[Vec<i64>]) -> BTreeSet<FVector> {
    let n = rows[0].len();
    let g = ground(n);
    let mut out = BTreeSet::new();
    for code in 0..p.pow(n as u32) {
        let x: Vec<u64> = (0..n).map(|i| code / p.pow(i as u32) % p).collect();
        let ok = rows.iter().all(|r| {
            r.iter()
                .zip(&x)
                .map(|(&a, &b)| a.rem_euclid(p as i64) as u64 * b)
                .sum::<u64>()
                % p
                == 0
        });
        if ok {
            let entries = x.iter().map(|&a| Scalar::fp(p as u32, a as i64)).collect();
            out.insert(FVector::new(Tract::FieldFp(p as u32), g.clone(), entries).unwrap());
        }
    }
    out
}

pub fn sign_of(v: i64) -> Scalar {
    match v.signum() {
        1 => Scalar::plus(),
        -1 => Scalar::minus(),
        _ => Scalar::zero(Tract::Sign),
    }
}

pub fn sign_vector(g: &Arc<GroundSet>, v: &[i64]) -> FVector {
    FVector::new(Tract::Sign, g.clone(), v.iter().map(|&x| sign_of(x)).collect()).unwrap()
}

fn cross(a: [i64; 3], b: [i64; 3]) -> [i64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Covectors of the oriented matroid of a rank-3 integer matrix with `n`
/// columns. The faces of the central arrangement in the row space are pointed
/// cones spanned by the cocircuit rays, and the sum of the rays conforming to
/// a face lies in its relative interior. So a sign vector is a covector iff
/// the sum of the conforming rays has exactly that sign vector.
pub fn realizable_sign_covectors(rows: &[Vec<i64>]) -> BTreeSet<FVector> {
    assert_eq!(rows.len(), 3);
    let n = rows[0].len();
    let g = ground(n);
    let col = |j: usize| [rows[0][j], rows[1][j], rows[2][j]];
    let eval = |y: [i64; 3]| -> Vec<i64> { (0..n).map(|j| (0..3).map(|i| y[i] * col(j)[i]).sum()).collect() };
    let mut rays: Vec<Vec<i64>> = Vec::new();
    for j in 0..n {
        for k in j + 1..n {
            let y = cross(col(j), col(k));
            if y != [0, 0, 0] {
                let v = eval(y);
                rays.push(v.iter().map(|x| -x).collect());
                rays.push(v);
            }
        }
    }
    let mut out = BTreeSet::new();
    for code in 0..3usize.pow(n as u32) {
        let sigma: Vec<i64> = (0..n).map(|i| (code / 3usize.pow(i as u32) % 3) as i64 - 1).collect();
        let mut sum = vec![0i64; n];
        for r in &rays {
            if r.iter().zip(&sigma).all(|(&x, &s)| x == 0 || x.signum() == s) {
                for (a, b) in sum.iter_mut().zip(r) {
                    *a += b;
                }
            }
        }
        if sum.iter().map(|x| x.signum()).eq(sigma.iter().copied()) {
            out.insert(sign_vector(&g, &sigma));
        }
    }
    out
}

pub fn int_rank3(rows: &[Vec<i64>]) -> bool {
    let n = rows[0].len();
    let col = |j: usize| [rows[0][j], rows[1][j], rows[2][j]];
    (0..n).any(|a| {
        (a + 1..n).any(|b| {
            (b + 1..n).any(|c| {
                let x = cross(col(a), col(b));
                (0..3).map(|i| x[i] * col(c)[i]).sum::<i64>() != 0
            })
        })
    })
}

pub fn random_matrix(rng: &mut ChaCha8Rng, k: usize, n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    (0..k)
        .map(|_| (0..n).map(|_| rng.gen_range(lo..=hi)).collect())
        .collect()
}

pub fn sign_matroid(rows: &[Vec<i64>]) -> FMatroid {
    row_space(Tract::FieldQ, rows).pushforward(Morphism::SignMap).unwrap()
}

/// `0` is a positive combination of the nonzero integer vectors `ds` iff no
/// `w` has `w·d >= 0` for all `d` with strict inequality somewhere. Candidate
/// `w` are `±d`, the normals `±rot(d)` and their pairwise sums, which cover
/// the extreme rays and an interior point of every such cone.
pub fn zero_is_positive_combination(ds: &[(i64, i64)]) -> bool {
    if ds.is_empty() {
        return true;
    }
    let mut normals: Vec<(i64, i64)> = Vec::new();
    for &(x, y) in ds {
        normals.push((-y, x));
        normals.push((y, -x));
    }
    let mut cands = normals.clone();
    cands.extend(ds.iter().flat_map(|&(x, y)| [(x, y), (-x, -y)]));
    for a in &normals {
        for b in &normals {
            cands.push((a.0 + b.0, a.1 + b.1));
        }
    }
    !cands.iter().any(|&(wx, wy)| {
        let dots: Vec<i64> = ds.iter().map(|&(x, y)| wx * x + wy * y).collect();
        dots.iter().all(|&d| d >= 0) && dots.iter().any(|&d| d > 0)
    })
}

/// Triangle hyperfield: iterated interval arithmetic on `[|s - a|, s + a]`.
pub fn triangle_zero_by_intervals(mags: &[u32]) -> bool {
    let mut lo: i64 = 0;
    let mut hi: i64 = 0;
    for &a in mags {
        let a = a as i64;
        let new_lo = if a > hi {
            a - hi
        } else if a < lo {
            lo - a
        } else {
            0
        };
        hi += a;
        lo = new_lo;
    }
    lo == 0
}

pub fn fp_full_rank(p: u64, rows: &[Vec<i64>]) -> bool {
    fp_row_space(p, rows).len() as u64 == p.pow(rows.len() as u32)
}
