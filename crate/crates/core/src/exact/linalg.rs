//! Fraction-free (Bareiss) elimination over integerized rows.
//!
//! Each rational row is scaled by the positive lcm of its denominators, so
//! signs of determinants and ranks are unchanged, and all intermediate
//! entries stay integral.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Scalar, Vector};

fn integerize(rows: &[Vector]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| {
            let lcm = r
                .coords()
                .iter()
                .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            r.coords()
                .iter()
                .map(|c| c.numer() * (&lcm / c.denom()))
                .collect()
        })
        .collect()
}

/// Row echelon form by Bareiss elimination. Returns the pivot columns and the
/// number of row swaps performed.
fn bareiss(m: &mut [Vec<BigInt>], ncols: usize) -> (Vec<usize>, usize) {
    let nrows = m.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            swaps += 1;
        }
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let num = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                m[i][j] = num / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    (pivots, swaps)
}

pub fn rank(rows: &[Vector]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let ncols = first.len();
    let mut m = integerize(rows);
    bareiss(&mut m, ncols).0.len()
}

/// Sign of the determinant of a square matrix given by rows.
pub fn det_sign(rows: &[Vector]) -> i8 {
    let n = rows.len();
    if n == 0 {
        return 1;
    }
    let mut m = integerize(rows);
    let (pivots, swaps) = bareiss(&mut m, n);
    if pivots.len() < n {
        return 0;
    }
    let s = if m[n - 1][n - 1].is_positive() { 1 } else { -1 };
    if swaps % 2 == 0 {
        s
    } else {
        -s
    }
}

/// Exact determinant of a square matrix.
pub fn det(rows: &[Vector]) -> Scalar {
    let n = rows.len();
    if n == 0 {
        return Scalar::one();
    }
    let scale = rows.iter().fold(BigInt::one(), |acc, r| {
        acc * r
            .coords()
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()))
    });
    let mut m = integerize(rows);
    let (pivots, swaps) = bareiss(&mut m, n);
    if pivots.len() < n {
        return Scalar::zero();
    }
    let d = Scalar::new(m[n - 1][n - 1].clone(), scale);
    if swaps % 2 == 0 {
        d
    } else {
        -d
    }
}

/// Basis of `{x : row · x = 0 for all rows}`, as primitive integer vectors,
/// one per free column (in column order).
pub fn nullspace(rows: &[Vector], ncols: usize) -> Vec<Vector> {
    let mut m = integerize(rows);
    let (pivots, _) = bareiss(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Scalar::zero(); ncols];
            x[f] = Scalar::one();
            for (k, &p) in pivots.iter().enumerate().rev() {
                let mut acc = Scalar::zero();
                for j in p + 1..ncols {
                    if !m[k][j].is_zero() {
                        acc += Scalar::from_integer(m[k][j].clone()) * &x[j];
                    }
                }
                x[p] = -acc / Scalar::from_integer(m[k][p].clone());
            }
            Vector::new(x).primitive()
        })
        .collect()
}

/// Reduced row echelon form of the row space (zero rows dropped).
pub fn rref(rows: &[Vector], ncols: usize) -> Vec<Vector> {
    let mut m: Vec<Vec<Scalar>> = rows.iter().map(|r| r.coords().to_vec()).collect();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = Scalar::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let delta = &f * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    m.into_iter().map(Vector::new).collect()
}

/// Coefficients `c` with `sum c_i basis_i = v`, if `v` is in the span.
pub fn coordinates(basis: &[Vector], v: &Vector) -> Option<Vec<Scalar>> {
    let k = basis.len();
    let n = v.len();
    // Augmented system, one row per ambient coordinate.
    let rows: Vec<Vector> = (0..n)
        .map(|i| {
            let mut r: Vec<Scalar> = basis.iter().map(|b| b[i].clone()).collect();
            r.push(v[i].clone());
            Vector::new(r)
        })
        .collect();
    let red = rref(&rows, k + 1);
    let mut c = vec![Scalar::zero(); k];
    for row in &red {
        let lead = (0..=k).find(|&j| !row[j].is_zero())?;
        if lead == k {
            return None;
        }
        c[lead] = row[k].clone();
    }
    Some(c)
}
