//! Local convexity at ridges and vertices.
//!
//! Ridges are classified by dihedral signs under a co-orientation propagated
//! across the facet adjacency graph. Vertices are checked without reference
//! to that orientation: a star is accepted when every star facet supports the
//! star and the star wraps exactly once around the vertex. In ambient
//! dimension four and up, the vertex link is additionally checked as a
//! spherical surface in its own right.

use std::collections::{BTreeSet, VecDeque};

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{linalg, lp, sign, Hyperplane, Vector};
use crate::surface::{face_link, multiplicity, PLSurface, RidgeRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RidgeClass {
    StrictlyConvex,
    Flat,
    Reflex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RidgeVerdict {
    pub ridge: usize,
    pub class: RidgeClass,
    pub orientation_consistent: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexMethod {
    WitnessHull,
    RecursiveLink,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexVerdict {
    pub vertex: usize,
    pub convex: bool,
    pub method: VertexMethod,
}

/// The first face at which local convexity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    ReflexRidge {
        ridge: Vec<usize>,
        facets: [usize; 2],
    },
    Vertex {
        vertex: usize,
    },
    NonOrientable {
        ridge: Vec<usize>,
    },
}

impl Violation {
    pub fn face(&self) -> Vec<usize> {
        match self {
            Violation::ReflexRidge { ridge, .. } => ridge.clone(),
            Violation::Vertex { vertex } => vec![*vertex],
            Violation::NonOrientable { ridge } => ridge.clone(),
        }
    }
}

/// Oriented facet normals in cone coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coorientation {
    pub normals: Vec<Vector>,
}

impl Coorientation {
    /// Oriented facet hyperplane `{x : N · x <= 0}` in cone coordinates.
    pub fn cone_halfspace(&self, f: usize) -> Hyperplane {
        Hyperplane {
            normal: self.normals[f].clone(),
            offset: Zero::zero(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct LocalReport {
    pub ridges: Vec<RidgeVerdict>,
    pub vertices: Vec<VertexVerdict>,
    pub first_violation: Option<Violation>,
    pub orientation: Coorientation,
}

impl LocalReport {
    pub fn locally_convex(&self) -> bool {
        self.ridges.iter().all(|r| r.class != RidgeClass::Reflex)
            && self.vertices.iter().all(|v| v.convex)
    }

    pub fn violation_count(&self) -> usize {
        self.ridges
            .iter()
            .filter(|r| r.class == RidgeClass::Reflex)
            .count()
            + self.vertices.iter().filter(|v| !v.convex).count()
    }
}

/// Witness produced by [`star_hull_check`]: the supporting halfspaces of the
/// star at the face, in the surface's own coordinates (`a · x <= b`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarCheck {
    pub convex: bool,
    pub witness: Vec<Hyperplane>,
}

fn independent_rows(rays: &[Vector]) -> Vec<Vector> {
    let mut out: Vec<Vector> = Vec::new();
    for r in rays {
        out.push(r.clone());
        if linalg::rank(&out) < out.len() {
            out.pop();
        }
    }
    out
}

fn off_ridge_vertex(s: &PLSurface, f: usize, ridge: &[usize]) -> usize {
    *s.facets[f]
        .iter()
        .find(|v| !ridge.contains(v))
        .expect("a facet has a vertex off each of its ridges")
}

/// Do the normals `n1` of `f1` and `n2` of `f2` induce the same orientation
/// across the shared ridge? Compares the turning sense of (tangent, normal)
/// on both sides in the plane transverse to the ridge.
fn orientation_agrees(s: &PLSurface, r: &RidgeRecord, n1: &Vector, n2: &Vector) -> bool {
    let [f1, f2] = [r.incident_facets[0], r.incident_facets[1]];
    let basis = independent_rows(&s.cone_vertices(&r.ridge));
    let w1 = s.cone_vertex(off_ridge_vertex(s, f1, &r.ridge));
    let w2 = s.cone_vertex(off_ridge_vertex(s, f2, &r.ridge));
    let mut m1 = basis.clone();
    m1.extend([-&w1, n1.clone()]);
    let mut m2 = basis;
    m2.extend([w2, n2.clone()]);
    linalg::det_sign(&m1) == linalg::det_sign(&m2)
}

fn classify(s: &PLSurface, r: &RidgeRecord, n1: &Vector) -> RidgeClass {
    let f2 = r.incident_facets[1];
    let signs: Vec<i8> = s.facets[f2]
        .iter()
        .filter(|v| !r.ridge.contains(v))
        .map(|&v| sign(&n1.dot(&s.cone_vertex(v))))
        .collect();
    if signs.iter().all(|&x| x == 0) {
        RidgeClass::Flat
    } else if signs.iter().all(|&x| x <= 0) {
        RidgeClass::StrictlyConvex
    } else {
        RidgeClass::Reflex
    }
}

/// Topologically consistent co-orientation. Each adjacency component is
/// seeded by its first facet with the canonical normal (first nonzero entry
/// positive), then flipped as a whole if that makes more ridges strictly
/// convex than reflex.
pub(crate) fn coorient(s: &PLSurface, ridges: &[RidgeRecord]) -> Result<Coorientation> {
    let m = s.facets.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (i, r) in ridges.iter().enumerate() {
        if r.incident_facets.len() == 2 {
            adj[r.incident_facets[0]].push(i);
            adj[r.incident_facets[1]].push(i);
        }
    }
    let mut normals: Vec<Option<Vector>> = vec![None; m];
    let mut component = vec![usize::MAX; m];
    let mut n_comp = 0;
    for seed in 0..m {
        if normals[seed].is_some() {
            continue;
        }
        normals[seed] = Some(s.facet_cone_plane(seed)?.canonical().normal);
        component[seed] = n_comp;
        let mut queue = VecDeque::from([seed]);
        while let Some(f) = queue.pop_front() {
            for &ri in &adj[f] {
                let r = &ridges[ri];
                let g = r.incident_facets[0] + r.incident_facets[1] - f;
                if normals[g].is_some() {
                    continue;
                }
                let nf = normals[f].clone().expect("assigned before enqueue");
                let plane = s.facet_cone_plane(g)?.normal;
                let (n1, n2) = if r.incident_facets[0] == f {
                    (nf, plane.clone())
                } else {
                    (plane.clone(), nf)
                };
                let agrees = orientation_agrees(s, r, &n1, &n2);
                normals[g] = Some(if agrees { plane } else { -&plane });
                component[g] = n_comp;
                queue.push_back(g);
            }
        }
        n_comp += 1;
    }
    let mut normals: Vec<Vector> = normals.into_iter().map(Option::unwrap).collect();

    let mut balance = vec![0i64; n_comp];
    for (i, r) in ridges.iter().enumerate() {
        if r.incident_facets.len() != 2 {
            continue;
        }
        let [f1, f2] = [r.incident_facets[0], r.incident_facets[1]];
        if !orientation_agrees(s, r, &normals[f1], &normals[f2]) {
            return Err(Error::NonOrientableLocally { ridge: i });
        }
        match classify(s, r, &normals[f1]) {
            RidgeClass::StrictlyConvex => balance[component[f1]] += 1,
            RidgeClass::Reflex => balance[component[f1]] -= 1,
            RidgeClass::Flat => {}
        }
    }
    for (f, n) in normals.iter_mut().enumerate() {
        if balance[component[f]] < 0 {
            *n = -&*n;
        }
    }
    Ok(Coorientation { normals })
}

/// Consistent co-orientation under which no ridge is reflex. A reflex ridge,
/// or a ridge where no consistent choice exists, is reported by index.
pub fn propagate_coorientation(s: &PLSurface) -> Result<Coorientation> {
    let ridges = s.ridges()?;
    let c = coorient(s, &ridges)?;
    for (i, r) in ridges.iter().enumerate() {
        if r.incident_facets.len() == 2
            && classify(s, r, &c.normals[r.incident_facets[0]]) == RidgeClass::Reflex
        {
            return Err(Error::NonOrientableLocally { ridge: i });
        }
    }
    Ok(c)
}

/// Dihedral classification of ridge `index` under the given co-orientation.
pub fn ridge_convexity(
    s: &PLSurface,
    r: &RidgeRecord,
    index: usize,
    orientation: &Coorientation,
) -> Result<RidgeVerdict> {
    if r.incident_facets.len() != 2 {
        return Err(Error::BoundaryRidge(index));
    }
    let [f1, f2] = [r.incident_facets[0], r.incident_facets[1]];
    let n1 = &orientation.normals[f1];
    let consistent = orientation_agrees(s, r, n1, &orientation.normals[f2]);
    let class = if consistent {
        classify(s, r, n1)
    } else {
        RidgeClass::Reflex
    };
    Ok(RidgeVerdict {
        ridge: index,
        class,
        orientation_consistent: consistent && class != RidgeClass::Reflex,
    })
}

fn link_err(e: Error) -> Error {
    match e {
        Error::DegenerateStar { face, facet } => {
            Error::HullFailure(format!("star of {face:?} degenerates at facet {facet}"))
        }
        other => other,
    }
}

/// Checks that the star of `face` lies on the boundary of the convex hull of
/// its own vertices and covers a neighbourhood of the face there exactly
/// once.
pub fn star_hull_check(s: &PLSurface, face: &[usize]) -> Result<StarCheck> {
    let star = s.star(face);
    if star.is_empty() {
        return Err(Error::FaceNotFound(face.to_vec()));
    }
    let verts: BTreeSet<usize> = star
        .iter()
        .flat_map(|&g| s.facets[g].iter().copied())
        .collect();
    let rays: Vec<Vector> = verts.iter().map(|&v| s.cone_vertex(v)).collect();
    let mut planes: Vec<Hyperplane> = Vec::new();
    let mut convex = true;
    for &g in &star {
        let plane = s.facet_cone_plane(g)?;
        let signs: Vec<i8> = rays.iter().map(|r| sign(&plane.eval(r))).collect();
        let oriented = if signs.iter().all(|&x| x <= 0) {
            plane
        } else if signs.iter().all(|&x| x >= 0) {
            plane.flipped()
        } else {
            convex = false;
            continue;
        };
        let oriented = if signs.iter().all(|&x| x == 0) {
            oriented.canonical()
        } else {
            oriented
        };
        let native = s.to_native_hyperplane(&oriented).canonical_oriented();
        if !planes.contains(&native) {
            planes.push(native);
        }
    }
    planes.sort();
    if convex {
        let link = face_link(s, face).map_err(link_err)?;
        let v = link.surface.validate();
        convex = v.pseudomanifold
            && v.closed
            && v.connected
            && multiplicity(&link.surface, 0, None)? == 1;
    }
    Ok(StarCheck {
        convex,
        witness: planes,
    })
}

/// Local convexity at a vertex through its link. In ambient dimension four
/// and up the link is a closed spherical surface of dimension at least two,
/// which is convex exactly when it is locally convex, connected and wraps
/// once. Lower dimensions fall back to [`star_hull_check`].
pub fn recursive_link_check(s: &PLSurface, vertex: usize) -> Result<bool> {
    if s.ambient_dim < 4 {
        return Ok(star_hull_check(s, &[vertex])?.convex);
    }
    let link = face_link(s, &[vertex]).map_err(link_err)?;
    let v = link.surface.validate();
    if !(v.pseudomanifold && v.closed && v.connected) {
        return Ok(false);
    }
    Ok(link_locally_convex(&link.surface)? && multiplicity(&link.surface, 0, None)? == 1)
}

/// Local convexity of a closed link, stopping at the first failure. Link
/// vertices are checked by recursion alone.
fn link_locally_convex(s: &PLSurface) -> Result<bool> {
    let ridges = s.ridges()?;
    let orientation = match coorient(s, &ridges) {
        Ok(o) => o,
        Err(Error::NonOrientableLocally { .. }) => return Ok(false),
        Err(e) => return Err(e),
    };
    for (i, r) in ridges.iter().enumerate() {
        if ridge_convexity(s, r, i, &orientation)?.class == RidgeClass::Reflex {
            return Ok(false);
        }
    }
    for v in s.used_vertices() {
        if !recursive_link_check(s, v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Verdict at one vertex. In ambient dimension four and up both methods run
/// and must agree.
pub fn vertex_verdict(s: &PLSurface, vertex: usize) -> Result<VertexVerdict> {
    let hull = star_hull_check(s, &[vertex])?.convex;
    if s.ambient_dim < 4 {
        return Ok(VertexVerdict {
            vertex,
            convex: hull,
            method: VertexMethod::WitnessHull,
        });
    }
    let link = recursive_link_check(s, vertex)?;
    if link != hull {
        return Err(Error::InternalInconsistency(format!(
            "vertex {vertex}: star hull says {hull}, link recursion says {link}"
        )));
    }
    Ok(VertexVerdict {
        vertex,
        convex: hull,
        method: VertexMethod::Both,
    })
}

/// Local report over all interior ridges and all vertices not in `skip`.
pub(crate) fn local_report_with(
    s: &PLSurface,
    ridges: &[RidgeRecord],
    skip: &BTreeSet<usize>,
) -> Result<LocalReport> {
    let orientation = coorient(s, ridges)?;
    let ridge_verdicts: Vec<RidgeVerdict> = ridges
        .par_iter()
        .enumerate()
        .filter(|(_, r)| r.incident_facets.len() == 2)
        .map(|(i, r)| ridge_convexity(s, r, i, &orientation))
        .collect::<Result<_>>()?;
    let vertices: Vec<usize> = s
        .used_vertices()
        .into_iter()
        .filter(|v| !skip.contains(v))
        .collect();
    let vertex_verdicts: Vec<VertexVerdict> = vertices
        .par_iter()
        .map(|&v| vertex_verdict(s, v))
        .collect::<Result<_>>()?;
    let first_violation = ridge_verdicts
        .iter()
        .find(|r| r.class == RidgeClass::Reflex)
        .map(|r| {
            let rec = &ridges[r.ridge];
            Violation::ReflexRidge {
                ridge: rec.ridge.clone(),
                facets: [rec.incident_facets[0], rec.incident_facets[1]],
            }
        })
        .or_else(|| {
            vertex_verdicts
                .iter()
                .find(|v| !v.convex)
                .map(|v| Violation::Vertex { vertex: v.vertex })
        });
    Ok(LocalReport {
        ridges: ridge_verdicts,
        vertices: vertex_verdicts,
        first_violation,
        orientation,
    })
}

/// Local convexity at every ridge and vertex of a closed surface.
pub fn local_report(s: &PLSurface) -> Result<LocalReport> {
    let ridges = s.ridges()?;
    local_report_with(s, &ridges, &BTreeSet::new())
}

/// A vertex of a Euclidean surface that is also a vertex of the convex hull of
/// all surface vertices: the lexicographically largest one, confirmed by an
/// exact hull-membership test.
pub fn exposed_vertex(s: &PLSurface) -> Result<Option<usize>> {
    let used = s.used_vertices();
    let Some(&best) = used
        .iter()
        .max_by(|&&a, &&b| s.vertices[a].cmp(&s.vertices[b]))
    else {
        return Ok(None);
    };
    let others: Vec<&Vector> = used
        .iter()
        .filter(|&&v| s.vertices[v] != s.vertices[best])
        .map(|&v| &s.vertices[v])
        .collect();
    if lp::in_convex_hull(&others, &s.vertices[best]) {
        return Err(Error::InternalInconsistency(format!(
            "lexicographic maximum {best} is not a hull vertex"
        )));
    }
    Ok(Some(best))
}

/// Is the surface strictly convex at `vertex`: does some hyperplane through
/// it keep every other star vertex strictly on one side?
pub fn is_strict_vertex(s: &PLSurface, vertex: usize) -> bool {
    let star = s.star(&[vertex]);
    let apex = s.cone_vertex(vertex);
    let others: BTreeSet<usize> = star
        .iter()
        .flat_map(|&g| s.facets[g].iter().copied())
        .filter(|&v| v != vertex)
        .collect();
    let rays: Vec<Vector> = others.iter().map(|&v| s.cone_vertex(v)).collect();
    let refs: Vec<&Vector> = rays.iter().collect();
    !apex.is_zero() && lp::strictly_separable(&apex, &refs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};
    use crate::surface::fixtures::{cube, great_sphere};
    use crate::surface::Mode;

    /// Cube with vertex (1,1,1) moved to `p`, quads through it split into
    /// triangles.
    fn cube_with_moved_corner(p: Vector) -> PLSurface {
        let mut c = cube();
        c.vertices[7] = p;
        let mut facets = Vec::new();
        for f in &c.facets {
            if let Some(k) = f.iter().position(|&v| v == 7) {
                let q: Vec<usize> = (0..4).map(|i| f[(k + i) % 4]).collect();
                facets.push(vec![q[0], q[1], q[2]]);
                facets.push(vec![q[0], q[2], q[3]]);
            } else {
                facets.push(f.clone());
            }
        }
        PLSurface::new(3, Mode::Euclidean, c.vertices, facets, false).unwrap()
    }

    fn dented_cube() -> PLSurface {
        let h = ratio(1, 2);
        cube_with_moved_corner(Vector::new(vec![h.clone(), h.clone(), h]))
    }

    fn hypercube() -> PLSurface {
        let mut verts = Vec::new();
        for i in 0..16i64 {
            verts.push(Vector::from_ints(&[
                (i >> 3) & 1,
                (i >> 2) & 1,
                (i >> 1) & 1,
                i & 1,
            ]));
        }
        let mut facets = Vec::new();
        for axis in 0..4 {
            for val in 0..2 {
                facets.push(
                    (0..16usize)
                        .filter(|&i| ((i >> (3 - axis)) & 1) as i64 == val)
                        .collect(),
                );
            }
        }
        PLSurface::new(4, Mode::Euclidean, verts, facets, false).unwrap()
    }

    fn cross_polytope4() -> PLSurface {
        let mut verts = Vec::new();
        for i in 0..4 {
            for sgn in [1, -1] {
                let mut c = [0i64; 4];
                c[i] = sgn;
                verts.push(Vector::from_ints(&c));
            }
        }
        let mut facets = Vec::new();
        for mask in 0..16usize {
            facets.push((0..4).map(|i| 2 * i + ((mask >> i) & 1)).collect());
        }
        PLSurface::new(4, Mode::Euclidean, verts, facets, false).unwrap()
    }

    #[test]
    fn cube_ridges_are_strictly_convex_and_normals_outward() {
        let c = cube();
        let report = local_report(&c).unwrap();
        assert_eq!(report.ridges.len(), 12);
        assert!(report
            .ridges
            .iter()
            .all(|r| r.class == RidgeClass::StrictlyConvex));
        assert!(report.locally_convex());
        assert!(report.first_violation.is_none());
        // Outward: the centre (1/2,1/2,1/2,1) is on the negative side.
        let centre = Vector::new(vec![ratio(1, 2), ratio(1, 2), ratio(1, 2), int(1)]);
        let c2 = propagate_coorientation(&c).unwrap();
        assert!(c2.normals.iter().all(|n| sign(&n.dot(&centre)) < 0));
    }

    #[test]
    fn coplanar_triangles_are_flat() {
        // Square split into two triangles, closed up by a pyramid below.
        let verts = vec![
            Vector::from_ints(&[0, 0, 0]),
            Vector::from_ints(&[1, 0, 0]),
            Vector::from_ints(&[1, 1, 0]),
            Vector::from_ints(&[0, 1, 0]),
            Vector::from_ints(&[0, 0, -1]),
        ];
        let facets = vec![
            vec![0, 1, 2],
            vec![0, 2, 3],
            vec![0, 1, 4],
            vec![1, 2, 4],
            vec![2, 3, 4],
            vec![3, 0, 4],
        ];
        let s = PLSurface::new(3, Mode::Euclidean, verts, facets, false).unwrap();
        let ridges = s.ridges().unwrap();
        let report = local_report(&s).unwrap();
        let diag = ridges.iter().position(|r| r.ridge == vec![0, 2]).unwrap();
        let verdict = report.ridges.iter().find(|v| v.ridge == diag).unwrap();
        assert_eq!(verdict.class, RidgeClass::Flat);
        assert!(report.locally_convex());
    }

    #[test]
    fn dented_corner_is_rejected() {
        let s = dented_cube();
        // The moved point lies inside the hull of the other seven.
        let others: Vec<&Vector> = s.vertices[..7].iter().collect();
        assert!(lp::in_convex_hull(&others, &s.vertices[7]));
        let report = local_report(&s).unwrap();
        assert!(!report.locally_convex());
        assert!(report.ridges.iter().any(|r| r.class == RidgeClass::Reflex));
        assert!(!star_hull_check(&s, &[7]).unwrap().convex);
        let err = propagate_coorientation(&s).unwrap_err();
        let Error::NonOrientableLocally { ridge } = err else {
            panic!("{err:?}")
        };
        let ridges = s.ridges().unwrap();
        let ro = &ridges[ridge];
        assert!(
            ro.ridge.contains(&7) || ro.incident_facets.iter().any(|&f| s.facets[f].contains(&7))
        );
        assert!(matches!(
            report.first_violation,
            Some(Violation::ReflexRidge { .. })
        ));
    }

    #[test]
    fn ridge_classification_is_symmetric() {
        for s in [cube(), dented_cube()] {
            let ridges = s.ridges().unwrap();
            let o = coorient(&s, &ridges).unwrap();
            for (i, r) in ridges.iter().enumerate() {
                let swapped = RidgeRecord {
                    ridge: r.ridge.clone(),
                    incident_facets: vec![r.incident_facets[1], r.incident_facets[0]],
                };
                assert_eq!(
                    ridge_convexity(&s, r, i, &o).unwrap().class,
                    ridge_convexity(&s, &swapped, i, &o).unwrap().class
                );
            }
        }
    }

    #[test]
    fn cube_vertex_star() {
        let c = cube();
        let check = star_hull_check(&c, &[0]).unwrap();
        assert!(check.convex);
        assert_eq!(check.witness.len(), 3);
        assert!(recursive_link_check(&c, 0).unwrap());
    }

    #[test]
    fn flat_vertex_has_single_supporting_plane() {
        // Top face of a square pyramid subdivided around a centre vertex.
        let verts = vec![
            Vector::from_ints(&[0, 0, 0]),
            Vector::from_ints(&[2, 0, 0]),
            Vector::from_ints(&[2, 2, 0]),
            Vector::from_ints(&[0, 2, 0]),
            Vector::from_ints(&[1, 1, 0]),
            Vector::from_ints(&[1, 1, -1]),
        ];
        let facets = vec![
            vec![0, 1, 4],
            vec![1, 2, 4],
            vec![2, 3, 4],
            vec![3, 0, 4],
            vec![0, 1, 5],
            vec![1, 2, 5],
            vec![2, 3, 5],
            vec![3, 0, 5],
        ];
        let s = PLSurface::new(3, Mode::Euclidean, verts, facets, false).unwrap();
        let check = star_hull_check(&s, &[4]).unwrap();
        assert!(check.convex);
        assert_eq!(check.witness.len(), 1);
        assert!(local_report(&s).unwrap().locally_convex());
        assert!(!is_strict_vertex(&s, 4));
        assert!(is_strict_vertex(&s, 5));
    }

    #[test]
    fn hypercube_vertices_agree() {
        let s = hypercube();
        for v in [0, 5, 15] {
            assert!(star_hull_check(&s, &[v]).unwrap().convex);
            assert!(recursive_link_check(&s, v).unwrap());
        }
    }

    #[test]
    fn cross_polytope_vertices_agree() {
        let s = cross_polytope4();
        for v in [0, 3, 6] {
            assert!(star_hull_check(&s, &[v]).unwrap().convex);
            assert!(recursive_link_check(&s, v).unwrap());
        }
        assert!(local_report(&s).unwrap().locally_convex());
    }

    #[test]
    fn exposed_vertex_is_a_corner() {
        let c = cube();
        assert_eq!(exposed_vertex(&c).unwrap(), Some(7));
        // Subdivide the top facet x = 1 through its centre.
        let mut verts = c.vertices.clone();
        verts.push(Vector::new(vec![int(1), ratio(1, 2), ratio(1, 2)]));
        let mut facets: Vec<Vec<usize>> = c
            .facets
            .iter()
            .filter(|f| **f != vec![4, 5, 7, 6])
            .cloned()
            .collect();
        for (a, b) in [(4, 5), (5, 7), (7, 6), (6, 4)] {
            facets.push(vec![a, b, 8]);
        }
        let s = PLSurface::new(3, Mode::Euclidean, verts, facets, false).unwrap();
        let v = exposed_vertex(&s).unwrap().unwrap();
        assert!(v < 8);
        assert!(local_report(&s).unwrap().locally_convex());
    }

    #[test]
    fn great_sphere_is_locally_convex() {
        let s = great_sphere();
        let report = local_report(&s).unwrap();
        assert!(report.locally_convex());
        assert!(report.ridges.iter().all(|r| r.class == RidgeClass::Flat));
        assert!(!is_strict_vertex(&s, 0));
    }
}
