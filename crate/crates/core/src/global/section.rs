use std::collections::{BTreeSet, HashMap};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{canonical_sph, linalg, lp, SphPoint, Vector};
use crate::surface::{combinations, Mode, PLSurface};

use super::ConeWitness;

/// Extreme rays of `cone(rays) ∩ {x : l · x = 0 for l in lin}`, found by
/// enumerating minimal supports of nonnegative combinations.
fn section_rays(rays: &[Vector], lin: &[Vector]) -> Vec<Vector> {
    let mut out: Vec<Vector> = Vec::new();
    for size in 1..=(lin.len() + 1).min(rays.len()) {
        for support in combinations(rays.len(), size) {
            let rows: Vec<Vector> = lin
                .iter()
                .map(|l| Vector::new(support.iter().map(|&i| l.dot(&rays[i])).collect()))
                .collect();
            let null = linalg::nullspace(&rows, size);
            if null.len() != 1 {
                continue;
            }
            let lambda = &null[0];
            let positive = lambda.coords().iter().all(|c| c.is_positive());
            let negative = lambda.coords().iter().all(|c| c.is_negative());
            if !(positive || negative) {
                continue;
            }
            let mut x = Vector::zeros(rays[0].len());
            for (k, &i) in support.iter().enumerate() {
                x = x.add_scaled(&lambda[k], &rays[i]);
            }
            if negative {
                x = -&x;
            }
            if !x.is_zero() {
                out.push(x);
            }
        }
    }
    out
}

/// Cross-section of the surface by the orthogonal complement of the
/// witness's lineality space, as a spherical surface in complement
/// coordinates `x ↦ (x · b_j)_j`.
pub fn generatrix_section(s: &PLSurface, w: &ConeWitness) -> Result<PLSurface> {
    let l = w.lineality.dim();
    if l >= s.ambient_dim {
        return Err(Error::DegenerateSection);
    }
    if l == 0 {
        return Ok(s.clone());
    }
    let dim = s.cone_dim();
    let lin: Vec<Vector> = match s.mode {
        Mode::Spherical => w.lineality.basis.clone(),
        Mode::Euclidean => w
            .lineality
            .basis
            .iter()
            .map(|b| b.lifted(Zero::zero()))
            .collect(),
    };
    let complement = linalg::nullspace(&lin, dim);
    let project = |v: &Vector| Vector::new(complement.iter().map(|b| b.dot(v)).collect());
    let target_rank = s.ambient_dim - l;

    let mut index: HashMap<SphPoint, usize> = HashMap::new();
    let mut verts: Vec<Vector> = Vec::new();
    let mut cells: BTreeSet<Vec<usize>> = BTreeSet::new();
    for facet in &s.facets {
        let rays = s.cone_vertices(facet);
        let mut dirs: Vec<SphPoint> = Vec::new();
        for x in section_rays(&rays, &lin) {
            let p = canonical_sph(&project(&x))?;
            if !dirs.contains(&p) {
                dirs.push(p);
            }
        }
        let extreme: Vec<SphPoint> = (0..dirs.len())
            .filter(|&i| {
                let others: Vec<&Vector> = (0..dirs.len())
                    .filter(|&j| j != i)
                    .map(|j| dirs[j].ray())
                    .collect();
                !lp::in_cone(&others, dirs[i].ray())
            })
            .map(|i| dirs[i].clone())
            .collect();
        let ext_rays: Vec<Vector> = extreme.iter().map(|p| p.ray().clone()).collect();
        if linalg::rank(&ext_rays) != target_rank {
            continue;
        }
        let mut cell: Vec<usize> = extreme
            .into_iter()
            .map(|p| {
                let next = verts.len();
                *index.entry(p.clone()).or_insert_with(|| {
                    verts.push(p.into_ray());
                    next
                })
            })
            .collect();
        cell.sort_unstable();
        cells.insert(cell);
    }
    PLSurface::new(
        target_rank,
        Mode::Spherical,
        verts,
        cells.into_iter().collect(),
        false,
    )
}
