use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{canonical_sph, int, linalg, lp, sign, SphPoint, Vector};

use super::{Mode, PLSurface};

/// Spherical complex of directions around a face.
///
/// Cell `j` is the trace of parent facet `cell_facet[j]`. Directions are
/// expressed in coordinates `x ↦ (x · b_i)_i` over a basis `b` of the
/// orthogonal complement of the face's cone span; this is a linear
/// isomorphism onto the link's ambient space, so all convexity and incidence
/// questions carry over unchanged.
#[derive(Clone, Debug)]
pub struct LinkComplex {
    pub face: Vec<usize>,
    pub surface: PLSurface,
    pub cell_facet: Vec<usize>,
    pub basis: Vec<Vector>,
}

impl LinkComplex {
    pub fn project(&self, v: &Vector) -> Vector {
        Vector::new(self.basis.iter().map(|b| b.dot(v)).collect())
    }

    /// Orients each link cell consistently with the oriented parent facet
    /// normals (cone coordinates).
    pub fn induced_normals(&self, parent_normals: &[Vector]) -> Result<Vec<Vector>> {
        let dim = self.surface.cone_dim();
        self.surface
            .facets
            .iter()
            .zip(&self.cell_facet)
            .map(|(cell, &g)| {
                let rays = self.surface.cone_vertices(cell);
                let plane = crate::exact::linear_hyperplane(&rays, dim)?;
                let probe = self.project(&parent_normals[g]);
                Ok(match sign(&plane.normal.dot(&probe)) {
                    1 => plane.normal,
                    -1 => -&plane.normal,
                    _ => {
                        return Err(Error::InternalInconsistency(
                            "parent normal projects into the link cell plane".into(),
                        ))
                    }
                })
            })
            .collect()
    }
}

pub fn face_link(s: &PLSurface, face: &[usize]) -> Result<LinkComplex> {
    let mut face = face.to_vec();
    face.sort_unstable();
    face.dedup();
    let star = s.star(&face);
    if star.is_empty() {
        return Err(Error::FaceNotFound(face));
    }
    let dim = s.cone_dim();
    let face_rays = s.cone_vertices(&face);
    let basis = if face_rays.is_empty() {
        (0..dim).map(|i| Vector::unit(dim, i)).collect()
    } else {
        linalg::nullspace(&face_rays, dim)
    };
    let m = basis.len();
    if m < 2 {
        return Err(Error::DegenerateStar {
            face,
            facet: star[0],
        });
    }
    let project = |v: &Vector| Vector::new(basis.iter().map(|b| b.dot(v)).collect());

    let mut index: HashMap<SphPoint, usize> = HashMap::new();
    let mut verts: Vec<Vector> = Vec::new();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for &g in &star {
        let mut dirs: Vec<SphPoint> = Vec::new();
        for &v in s.facets[g].iter().filter(|v| !face.contains(v)) {
            let p = project(&s.cone_vertex(v));
            let ray = canonical_sph(&p).map_err(|_| Error::DegenerateStar {
                face: face.clone(),
                facet: g,
            })?;
            if !dirs.contains(&ray) {
                dirs.push(ray);
            }
        }
        let dir_rays: Vec<Vector> = dirs.iter().map(|p| p.ray().clone()).collect();
        let independent = linalg::rank(&dir_rays) == dirs.len();
        let extreme: Vec<SphPoint> = (0..dirs.len())
            .filter(|&i| {
                if independent {
                    return true;
                }
                let others: Vec<&Vector> = (0..dirs.len())
                    .filter(|&j| j != i)
                    .map(|j| dirs[j].ray())
                    .collect();
                !lp::in_cone(&others, dirs[i].ray())
            })
            .map(|i| dirs[i].clone())
            .collect();
        let rays: Vec<Vector> = extreme.iter().map(|p| p.ray().clone()).collect();
        if linalg::rank(&rays) != m - 1 {
            return Err(Error::DegenerateStar {
                face: face.clone(),
                facet: g,
            });
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
        cells.push(cell);
    }
    let surface = PLSurface::new(m - 1, Mode::Spherical, verts, cells, s.allow_boundary)?;
    Ok(LinkComplex {
        face,
        surface,
        cell_facet: star,
        basis,
    })
}

/// Deterministic point in the relative interior of a facet's cone: a positive
/// combination of its rays with weights depending on `attempt` (all ones for
/// attempt 0, i.e. the centroid direction).
pub fn probe_in_facet(s: &PLSurface, facet: usize, attempt: usize) -> Vector {
    let rays = s.cone_vertices(&s.facets[facet]);
    let mut p = Vector::zeros(s.cone_dim());
    for (j, r) in rays.iter().enumerate() {
        let w = if attempt == 0 {
            1
        } else {
            1 + ((attempt * (2 * j + 3) + j * j) % 31) as i64
        };
        p = p.add_scaled(&int(w), r);
    }
    p
}

/// Number of facets (restricted to `within`, if given) whose cone contains
/// the probe ray. The probe must avoid every facet's relative boundary and
/// every transversal facet.
pub fn covering_multiplicity(
    s: &PLSurface,
    probe: &Vector,
    within: Option<&[usize]>,
) -> Result<usize> {
    let all: Vec<usize> = (0..s.facets.len()).collect();
    let candidates = within.unwrap_or(&all);
    let mut planes = Vec::new();
    let mut count = 0;
    for &g in candidates {
        let plane = s.facet_cone_plane(g)?;
        if !plane.eval(probe).is_zero() {
            continue;
        }
        let rays = s.cone_vertices(&s.facets[g]);
        let (inside, interior) = if rays.len() == s.ambient_dim {
            // Simplicial cone: read membership off the unique coordinates.
            match linalg::coordinates(&rays, probe) {
                Some(c) => (
                    c.iter().all(|x| sign(x) >= 0),
                    c.iter().all(|x| sign(x) > 0),
                ),
                None => (false, false),
            }
        } else {
            let refs: Vec<&Vector> = rays.iter().collect();
            let inside = lp::in_cone(&refs, probe);
            (inside, inside && lp::in_relint_cone(&refs, probe))
        };
        if !inside {
            continue;
        }
        if !interior {
            return Err(Error::NonGenericProbe { attempts: 1 });
        }
        planes.push(plane.canonical());
        count += 1;
    }
    if planes.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::NonGenericProbe { attempts: 1 });
    }
    Ok(count)
}

pub const PROBE_ATTEMPTS: usize = 64;

/// Covering multiplicity at a generic point of `facet`, resampling
/// deterministically until the probe is generic.
pub fn multiplicity(s: &PLSurface, facet: usize, within: Option<&[usize]>) -> Result<usize> {
    for attempt in 0..PROBE_ATTEMPTS {
        let probe = probe_in_facet(s, facet, attempt);
        match covering_multiplicity(s, &probe, within) {
            Err(Error::NonGenericProbe { .. }) => continue,
            other => return other,
        }
    }
    Err(Error::NonGenericProbe {
        attempts: PROBE_ATTEMPTS,
    })
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::{cube, great_sphere};
    use super::*;

    #[test]
    fn cube_corner_link() {
        let c = cube();
        let link = face_link(&c, &[0]).unwrap();
        assert_eq!(link.surface.ambient_dim, 2);
        assert_eq!(link.surface.vertices.len(), 3);
        assert_eq!(link.surface.facets.len(), 3);
        assert!(link.surface.facets.iter().all(|f| f.len() == 2));
        // vertex 0 is the origin, so the directions are e1, e2, e3.
        let mut dirs = link.surface.vertices.clone();
        dirs.sort();
        let mut expected: Vec<Vector> = (0..3).map(|i| Vector::unit(3, i)).collect();
        expected.sort();
        assert_eq!(dirs, expected);
        let v = link.surface.validate();
        assert!(v.closed && v.connected && v.pseudomanifold, "{v:?}");
    }

    #[test]
    fn cube_edge_link_has_two_points() {
        let c = cube();
        let link = face_link(&c, &[0, 1]).unwrap();
        assert_eq!(link.surface.ambient_dim, 1);
        assert_eq!(link.surface.vertices.len(), 2);
        assert_eq!(link.surface.facets.len(), 2);
    }

    #[test]
    fn link_of_missing_face() {
        let c = cube();
        assert!(matches!(
            face_link(&c, &[0, 7]),
            Err(Error::FaceNotFound(_))
        ));
    }

    #[test]
    fn octahedron_sphere_multiplicity() {
        let s = great_sphere();
        assert_eq!(multiplicity(&s, 0, None).unwrap(), 1);
        // A ray on a shared edge is not generic.
        let edge = Vector::from_ints(&[1, 1, 0, 0]);
        assert!(matches!(
            covering_multiplicity(&s, &edge, None),
            Err(Error::NonGenericProbe { .. })
        ));
    }
}
