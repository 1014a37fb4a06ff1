//! Determinants of square matrices over Laurent polynomial rings.

use crate::laurent::LPoly;

/// Size from which [`det`] switches from cofactor expansion to elimination.
pub const BAREISS_FROM: usize = 8;

pub type Matrix<const N: usize> = Vec<Vec<LPoly<N>>>;

/// Determinant, by cofactor expansion below [`BAREISS_FROM`] and by
/// fraction-free elimination from there on.
pub fn det<const N: usize>(m: &[Vec<LPoly<N>>]) -> LPoly<N> {
    if m.len() < BAREISS_FROM {
        det_laplace(m)
    } else {
        det_bareiss(m)
    }
}

/// Cofactor expansion along the sparsest row.
pub fn det_laplace<const N: usize>(m: &[Vec<LPoly<N>>]) -> LPoly<N> {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    match n {
        0 => return LPoly::one(),
        1 => return m[0][0].clone(),
        _ => {}
    }
    let (row, _) = m
        .iter()
        .enumerate()
        .map(|(i, r)| (i, r.iter().filter(|e| !e.is_zero()).count()))
        .min_by_key(|&(_, nz)| nz)
        .expect("nonempty");
    let mut total = LPoly::zero();
    for (col, entry) in m[row].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let sub = minor(m, row, col);
        let term = entry * &det_laplace(&sub);
        if (row + col) % 2 == 0 {
            total += &term;
        } else {
            total -= &term;
        }
    }
    total
}

/// Bareiss fraction-free elimination. Every intermediate division is exact.
pub fn det_bareiss<const N: usize>(m: &[Vec<LPoly<N>>]) -> LPoly<N> {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return LPoly::one();
    }
    let mut a: Matrix<N> = m.to_vec();
    let mut prev = LPoly::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return LPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev).expect("Bareiss step divides exactly");
            }
            a[i][k] = LPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// The matrix with one row and one column removed.
pub fn minor<const N: usize>(m: &[Vec<LPoly<N>>], row: usize, col: usize) -> Matrix<N> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != row)
        .map(|(_, r)| {
            r.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, e)| e.clone()).collect()
        })
        .collect()
}
