use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{linalg, lp, sign, Scalar, Vector};

use super::ConeWitness;

/// Great-circle arc from `start` to `end` passing through `via`, given by
/// rays of `R^{n+1}`. The arc is the union of the two sectors
/// `cone(start, via)` and `cone(via, end)`, each spanning less than a half
/// turn.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcCertificate {
    pub start: Vector,
    pub end: Vector,
    pub via: Vector,
}

impl ArcCertificate {
    pub fn is_point(&self) -> bool {
        linalg::rank(&[self.start.clone(), self.end.clone(), self.via.clone()]) == 1
    }

    /// Exact check that the whole arc avoids the open cone: no nonnegative
    /// combination within either sector is strictly inside every halfspace.
    pub fn verify(&self, w: &ConeWitness) -> bool {
        let funcs = w.cone_functionals();
        [&self.start, &self.end, &self.via]
            .iter()
            .all(|p| !w.in_open_cone(p))
            && sector_avoids(&funcs, &self.start, &self.via)
            && sector_avoids(&funcs, &self.via, &self.end)
    }
}

/// Is `{λa + μb : λ, μ >= 0}` disjoint from `{y : N_j · y < 0 for all j}`?
/// Feasibility of `N_j · (λa + μb) + s_j = -1`, with all variables
/// nonnegative, is exactly a point of the sector in the open cone.
fn sector_avoids(funcs: &[Vector], a: &Vector, b: &Vector) -> bool {
    let k = funcs.len();
    let rows: Vec<Vec<Scalar>> = funcs
        .iter()
        .enumerate()
        .map(|(j, n)| {
            let mut row = vec![n.dot(a), n.dot(b)];
            row.extend((0..k).map(|i| {
                if i == j {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            }));
            row
        })
        .collect();
    let rhs = vec![-Scalar::one(); k];
    lp::feasible(&rows, &rhs).is_none()
}

fn perp(c: &[Scalar; 2]) -> [Scalar; 2] {
    [-c[1].clone(), c[0].clone()]
}

fn strictly_inside(traces: &[[Scalar; 2]], t: &[Scalar; 2]) -> bool {
    traces
        .iter()
        .all(|c| sign(&(&c[0] * &t[0] + &c[1] * &t[1])) < 0)
}

/// A point of the open planar wedge cut out by `c · t < 0` for every trace,
/// if the wedge is nonempty.
fn wedge_representative(traces: &[[Scalar; 2]]) -> Option<[Scalar; 2]> {
    if traces.is_empty() {
        return Some([Scalar::one(), Scalar::zero()]);
    }
    let mut candidates: Vec<[Scalar; 2]> = Vec::new();
    for c in traces {
        let p = perp(c);
        candidates.push(p.clone());
        candidates.push([-p[0].clone(), -p[1].clone()]);
        candidates.push([-c[0].clone(), -c[1].clone()]);
    }
    let singles = candidates.len();
    for i in 0..singles {
        for j in i + 1..singles {
            let (a, b) = (&candidates[i], &candidates[j]);
            candidates.push([&a[0] + &b[0], &a[1] + &b[1]]);
        }
    }
    candidates.into_iter().find(|t| strictly_inside(traces, t))
}

/// Joins two points outside the open cone of a convex spherical set by an arc
/// that stays outside it. In the plane through both points the open cone
/// leaves a convex wedge of at most a half turn, and the arc is taken on the
/// side away from it.
pub fn a_convexity_probe(w: &ConeWitness, x: &Vector, x2: &Vector) -> Result<ArcCertificate> {
    if w.in_open_cone(x) || w.in_open_cone(x2) {
        return Err(Error::InputInsideS);
    }
    if x.is_zero() || x2.is_zero() {
        return Err(Error::ZeroVector);
    }
    let dim = x.len();
    let parallel = linalg::rank(&[x.clone(), x2.clone()]) == 1;
    let same_direction = parallel && sign(&x.dot(x2)) > 0;
    if same_direction {
        return Ok(ArcCertificate {
            start: x.clone(),
            end: x2.clone(),
            via: x.clone(),
        });
    }
    let v = if parallel {
        (0..dim)
            .map(|k| Vector::unit(dim, k))
            .find(|e| linalg::rank(&[x.clone(), e.clone()]) == 2)
            .expect("a nonzero vector misses some coordinate direction")
    } else {
        x2.clone()
    };
    let traces: Vec<[Scalar; 2]> = w
        .cone_functionals()
        .iter()
        .map(|n| [n.dot(x), n.dot(&v)])
        .collect();
    let rep = wedge_representative(&traces);
    let via = if parallel {
        // Half circle through +v or -v, away from the wedge.
        match rep {
            Some(t) if sign(&t[1]) > 0 => -&v,
            _ => v,
        }
    } else {
        let mid = x + x2;
        match rep {
            Some(t) if sign(&t[0]) > 0 && sign(&t[1]) > 0 => -&mid,
            _ => mid,
        }
    };
    let arc = ArcCertificate {
        start: x.clone(),
        end: x2.clone(),
        via,
    };
    if !arc.verify(w) {
        return Err(Error::InternalInconsistency(
            "probe arc meets the open cone".into(),
        ));
    }
    Ok(arc)
}
