//! Exact phase-one simplex for `A x = b, x >= 0`, with Bland's rule so it
//! always terminates. Problem sizes here are tiny (a few dozen columns), so
//! a dense tableau is fine.

use num_traits::{Signed, Zero};

use super::{Scalar, Vector};

/// Returns a feasible `x`, or `None` when the system has no nonnegative
/// solution.
pub fn feasible(a: &[Vec<Scalar>], b: &[Scalar]) -> Option<Vec<Scalar>> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    if m == 0 {
        return Some(vec![Scalar::zero(); n]);
    }
    let width = n + m + 1;
    let rhs = n + m;
    let mut t: Vec<Vec<Scalar>> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row = vec![Scalar::zero(); width];
        for j in 0..n {
            row[j] = if flip { -&a[i][j] } else { a[i][j].clone() };
        }
        row[n + i] = Scalar::from_integer(1.into());
        row[rhs] = if flip { -&b[i] } else { b[i].clone() };
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    // Reduced costs of minimizing the sum of artificials.
    let mut obj = vec![Scalar::zero(); width];
    for row in &t {
        for j in 0..n {
            obj[j] -= &row[j];
        }
        obj[rhs] -= &row[rhs];
    }

    // Bland's rule: lowest-index entering column.
    while let Some(enter) = (0..n + m).find(|&j| obj[j].is_negative()) {
        let mut leave: Option<(usize, Scalar)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let q = &t[i][rhs] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lq)) => q < *lq || (q == *lq && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, q));
                }
            }
        }
        // Phase one is bounded below by zero, so a ratio always exists.
        let (r, _) = leave.expect("phase-one objective is bounded");
        let piv = t[r][enter].clone();
        for x in t[r].iter_mut() {
            *x /= &piv;
        }
        let pivot_row = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for (x, p) in obj.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        basis[r] = enter;
    }

    if !obj[rhs].is_zero() {
        return None;
    }
    let mut x = vec![Scalar::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = t[i][rhs].clone();
        }
    }
    Some(x)
}

fn columns_matrix(cols: &[&Vector], extra: &[Vector]) -> Vec<Vec<Scalar>> {
    let dim = cols
        .first()
        .map(|c| c.len())
        .or_else(|| extra.first().map(Vector::len))
        .unwrap_or(0);
    (0..dim)
        .map(|i| {
            cols.iter()
                .map(|c| c[i].clone())
                .chain(extra.iter().map(|c| c[i].clone()))
                .collect()
        })
        .collect()
}

/// Is `p` a nonnegative combination of `gens`?
pub fn in_cone(gens: &[&Vector], p: &Vector) -> bool {
    if gens.is_empty() {
        return p.is_zero();
    }
    feasible(&columns_matrix(gens, &[]), p.coords()).is_some()
}

/// Is `p` a strictly positive combination of `gens`? For a pointed cone this
/// is exactly membership in the relative interior.
pub fn in_relint_cone(gens: &[&Vector], p: &Vector) -> bool {
    if gens.is_empty() {
        return false;
    }
    // sum (1 + mu_i) g_i = s p  <=>  sum mu_i g_i - s p = -sum g_i
    let a = columns_matrix(gens, &[-p]);
    let dim = p.len();
    let total = Vector::sum(dim, gens.iter().copied());
    let b: Vec<Scalar> = (-&total).into_coords();
    match feasible(&a, &b) {
        Some(x) => x.last().is_some_and(Signed::is_positive),
        None => false,
    }
}

/// Does some linear functional take strictly positive values on all of
/// `vs`? Decided through the Gordan alternative.
pub fn open_halfspace_exists(vs: &[&Vector]) -> bool {
    if vs.is_empty() {
        return true;
    }
    let mut a = columns_matrix(vs, &[]);
    let dim = a.len();
    a.push(vec![Scalar::from_integer(1.into()); vs.len()]);
    let mut b = vec![Scalar::zero(); dim];
    b.push(Scalar::from_integer(1.into()));
    feasible(&a, &b).is_none()
}

/// Is there a functional vanishing on `apex` and strictly negative on every
/// vector of `others`?
pub fn strictly_separable(apex: &Vector, others: &[&Vector]) -> bool {
    if others.is_empty() {
        return true;
    }
    // Alternative: sum mu_j w_j + (g+ - g-) apex = 0, sum mu = 1, all >= 0.
    let mut a = columns_matrix(others, &[apex.clone(), -apex]);
    let dim = a.len();
    let mut last = vec![Scalar::from_integer(1.into()); others.len()];
    last.extend([Scalar::zero(), Scalar::zero()]);
    a.push(last);
    let mut b = vec![Scalar::zero(); dim];
    b.push(Scalar::from_integer(1.into()));
    feasible(&a, &b).is_none()
}

/// Is `p` in the convex hull of `pts`?
pub fn in_convex_hull(pts: &[&Vector], p: &Vector) -> bool {
    let one = Scalar::from_integer(1.into());
    let lifted: Vec<Vector> = pts.iter().map(|q| q.lifted(one.clone())).collect();
    let refs: Vec<&Vector> = lifted.iter().collect();
    in_cone(&refs, &p.lifted(one))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn v(c: &[i64]) -> Vector {
        Vector::from_ints(c)
    }

    #[test]
    fn simple_systems() {
        let a = vec![vec![int(1), int(1)]];
        assert!(feasible(&a, &[int(3)]).is_some());
        assert!(feasible(&a, &[int(-1)]).is_none());
        let x = feasible(&[vec![int(1), int(-1)]], &[int(-2)]).unwrap();
        assert_eq!(&x[0] - &x[1], int(-2));
    }

    #[test]
    fn cone_membership() {
        let (e1, e2) = (v(&[1, 0, 0]), v(&[0, 1, 0]));
        let gens = [&e1, &e2];
        assert!(in_cone(&gens, &v(&[2, 3, 0])));
        assert!(in_cone(&gens, &v(&[2, 0, 0])));
        assert!(!in_relint_cone(&gens, &v(&[2, 0, 0])));
        assert!(in_relint_cone(&gens, &v(&[2, 3, 0])));
        assert!(!in_cone(&gens, &v(&[-1, 1, 0])));
        assert!(!in_cone(&gens, &v(&[1, 1, 1])));
    }

    #[test]
    fn halfspace_and_separation() {
        let (a, b, c) = (v(&[1, 0]), v(&[0, 1]), v(&[-1, -1]));
        assert!(open_halfspace_exists(&[&a, &b]));
        assert!(!open_halfspace_exists(&[&a, &b, &c]));
        assert!(!open_halfspace_exists(&[&a, &(-&a)]));
        // apex e3 with others in the upper half of the xy-plane, lifted.
        let apex = v(&[0, 0, 1]);
        let w1 = v(&[1, 1, 1]);
        let w2 = v(&[-1, 1, 1]);
        assert!(strictly_separable(&apex, &[&w1, &w2]));
        let w3 = v(&[0, -1, 1]);
        assert!(!strictly_separable(&apex, &[&w1, &w2, &w3]));
    }

    #[test]
    fn hull_membership() {
        let pts = [v(&[0, 0]), v(&[2, 0]), v(&[0, 2])];
        let refs: Vec<&Vector> = pts.iter().collect();
        assert!(in_convex_hull(&refs, &v(&[1, 1])));
        assert!(!in_convex_hull(&refs, &v(&[2, 2])));
    }
}
