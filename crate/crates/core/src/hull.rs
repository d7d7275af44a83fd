//! Incremental (beneath-beyond) convex hull for points in general position.
//!
//! Used by the instance generators only. Inputs with `n + 1` points on a
//! common hyperplane are reported as degenerate rather than handled, since
//! the generators simply resample.

use std::collections::HashMap;

use crate::exact::{hyperplane_through, orientation, sign, Hyperplane, Vector};
use crate::surface::combinations;

/// Boundary of a simplicial polytope: the hull vertices (indices into the
/// input) and facets over those indices, each with its outward hyperplane.
#[derive(Clone, Debug)]
pub struct SimplicialHull {
    pub vertices: Vec<usize>,
    pub facets: Vec<Vec<usize>>,
    pub planes: Vec<Hyperplane>,
}

struct Facet {
    verts: Vec<usize>,
    plane: Hyperplane,
}

fn oriented_facet(points: &[Vector], verts: Vec<usize>, inside: &Vector) -> Option<Facet> {
    let pts: Vec<Vector> = verts.iter().map(|&i| points[i].clone()).collect();
    let plane = hyperplane_through(&pts).ok()?;
    let plane = match sign(&plane.eval(inside)) {
        -1 => plane,
        1 => plane.flipped(),
        _ => return None,
    };
    Some(Facet { verts, plane })
}

/// Hull of `points` in `R^n`, or `None` if the points are degenerate
/// (affinely dependent start, or a point on the plane of a facet).
pub fn simplicial_hull(points: &[Vector]) -> Option<SimplicialHull> {
    let n = points.first()?.len();
    if points.len() < n + 1 {
        return None;
    }
    let start: Vec<usize> = (0..=n).collect();
    let simplex: Vec<Vector> = start.iter().map(|&i| points[i].clone()).collect();
    if orientation(&simplex).ok()? == 0 {
        return None;
    }
    let inside = Vector::average(n, &simplex);
    let mut facets: Vec<Facet> = Vec::new();
    for skip in 0..=n {
        let verts: Vec<usize> = start.iter().copied().filter(|&i| i != skip).collect();
        facets.push(oriented_facet(points, verts, &inside)?);
    }
    for p in n + 1..points.len() {
        let mut visible = Vec::new();
        for (k, f) in facets.iter().enumerate() {
            match sign(&f.plane.eval(&points[p])) {
                1 => visible.push(k),
                0 => return None,
                _ => {}
            }
        }
        if visible.is_empty() {
            continue;
        }
        // Horizon ridges appear in exactly one visible facet.
        let mut count: HashMap<Vec<usize>, usize> = HashMap::new();
        for &k in &visible {
            let verts = &facets[k].verts;
            for combo in combinations(verts.len(), n - 1) {
                let mut ridge: Vec<usize> = combo.iter().map(|&i| verts[i]).collect();
                ridge.sort_unstable();
                *count.entry(ridge).or_default() += 1;
            }
        }
        let mut horizon: Vec<Vec<usize>> = count
            .into_iter()
            .filter(|(_, c)| *c == 1)
            .map(|(r, _)| r)
            .collect();
        horizon.sort();
        let mut keep: Vec<Facet> = facets
            .into_iter()
            .enumerate()
            .filter(|(k, _)| !visible.contains(k))
            .map(|(_, f)| f)
            .collect();
        for mut ridge in horizon {
            ridge.push(p);
            keep.push(oriented_facet(points, ridge, &inside)?);
        }
        facets = keep;
    }
    let mut used: Vec<usize> = facets
        .iter()
        .flat_map(|f| f.verts.iter().copied())
        .collect();
    used.sort_unstable();
    used.dedup();
    let index: HashMap<usize, usize> = used.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let mut out_facets = Vec::new();
    let mut planes = Vec::new();
    for f in facets {
        let mut verts: Vec<usize> = f.verts.iter().map(|v| index[v]).collect();
        verts.sort_unstable();
        out_facets.push(verts);
        planes.push(f.plane);
    }
    Some(SimplicialHull {
        vertices: used,
        facets: out_facets,
        planes,
    })
}
