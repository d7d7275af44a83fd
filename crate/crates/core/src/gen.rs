//! Seeded instance generators.
//!
//! Randomness comes from `ChaCha8Rng::seed_from_u64(seed)` (crate
//! `rand_chacha`), consumed in a fixed order, so a seed reproduces an
//! instance bit for bit on every platform.

use std::str::FromStr;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::{canonical_sph, int, linalg, lp, ratio, Scalar, Vector};
use crate::hull::simplicial_hull;
use crate::surface::{Mode, PLSurface};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Hull,
    PerturbedHull,
    SphCone,
    GreatSphere,
    DoubleCover,
    CylinderTruncated,
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "hull" => Kind::Hull,
            "perturbed-hull" => Kind::PerturbedHull,
            "sph-cone" => Kind::SphCone,
            "great-sphere" => Kind::GreatSphere,
            "double-cover" => Kind::DoubleCover,
            "cylinder-truncated" => Kind::CylinderTruncated,
            other => {
                return Err(Error::BadParams(format!(
                    "unknown generator kind {other:?}"
                )))
            }
        })
    }
}

/// Cross-section polygon of the truncated cylinder.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Polygon {
    /// Convex pentagon traversed with step two: turns the same way at every
    /// corner but winds twice.
    Pentagram,
    Convex,
    /// Quadrilateral with one reflex corner.
    Dart,
}

impl FromStr for Polygon {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "pentagram" => Polygon::Pentagram,
            "convex" => Polygon::Convex,
            "dart" => Polygon::Dart,
            other => return Err(Error::BadParams(format!("unknown polygon {other:?}"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenParams {
    /// Ambient dimension.
    pub n: usize,
    /// Number of random points.
    pub m: usize,
    /// Lineality dimension of the spherical cone.
    pub lineality: usize,
    pub polygon: Polygon,
    pub layers: usize,
    pub seed: u64,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            n: 3,
            m: 12,
            lineality: 1,
            polygon: Polygon::Pentagram,
            layers: 2,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Generated {
    pub surface: PLSurface,
    /// The moved vertex of a perturbed hull.
    pub marked_vertex: Option<usize>,
}

const MAX_TRIES: usize = 1000;
const SHELL: i64 = 40;

fn random_rational(rng: &mut ChaCha8Rng) -> Scalar {
    ratio(rng.gen_range(-SHELL..=SHELL), rng.gen_range(1..=4))
}

/// Random rational point with norm between `SHELL / 2` and `SHELL`.
fn shell_point(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    let lo = int(SHELL * SHELL / 4);
    let hi = int(SHELL * SHELL);
    loop {
        let p = Vector::new((0..n).map(|_| random_rational(rng)).collect());
        let r = p.dot(&p);
        if r >= lo && r <= hi {
            return p;
        }
    }
}

/// Boundary of the hull of `m` random points in `R^n` (only hull vertices
/// are kept), resampling until the points are in general position.
pub fn random_hull(
    rng: &mut ChaCha8Rng,
    n: usize,
    m: usize,
) -> Result<(Vec<Vector>, Vec<Vec<usize>>)> {
    if n < 2 || m < n + 1 {
        return Err(Error::BadParams(format!(
            "hull needs n >= 2 and m > n, got n={n}, m={m}"
        )));
    }
    for _ in 0..MAX_TRIES {
        let pts: Vec<Vector> = (0..m).map(|_| shell_point(rng, n)).collect();
        if let Some(h) = simplicial_hull(&pts) {
            let verts = h.vertices.iter().map(|&i| pts[i].clone()).collect();
            return Ok((verts, h.facets));
        }
    }
    Err(Error::BadParams("no general-position sample found".into()))
}

fn hull(p: &GenParams, rng: &mut ChaCha8Rng) -> Result<PLSurface> {
    let (verts, facets) = random_hull(rng, p.n, p.m)?;
    PLSurface::new(p.n, Mode::Euclidean, verts, facets, false)
}

/// A hull with one vertex pulled toward the centroid of the others until it
/// lies strictly inside their hull.
fn perturbed_hull(p: &GenParams, rng: &mut ChaCha8Rng) -> Result<Generated> {
    for _ in 0..MAX_TRIES {
        let mut s = hull(p, rng)?;
        let count = s.vertices.len();
        if count < p.n + 2 {
            continue;
        }
        let v = rng.gen_range(0..count);
        let others: Vec<Vector> = (0..count)
            .filter(|&i| i != v)
            .map(|i| s.vertices[i].clone())
            .collect();
        let lifted: Vec<Vector> = others.iter().map(|q| q.lifted(Scalar::one())).collect();
        let refs: Vec<&Vector> = lifted.iter().collect();
        let c = Vector::average(p.n, &others);
        let original = s.vertices[v].clone();
        let mut t = ratio(1, 2);
        for _ in 0..64 {
            let moved = c.add_scaled(&t, &(&original - &c));
            s.vertices[v] = moved.clone();
            let star_ok = s.star(&[v]).iter().all(|&f| s.facet_is_valid(f));
            if star_ok && lp::in_relint_cone(&refs, &moved.lifted(Scalar::one())) {
                return Ok(Generated {
                    surface: s,
                    marked_vertex: Some(v),
                });
            }
            t /= int(2);
        }
    }
    Err(Error::BadParams("could not push a vertex inside".into()))
}

fn random_invertible(rng: &mut ChaCha8Rng, k: usize) -> Vec<Vector> {
    loop {
        let rows: Vec<Vector> = (0..k)
            .map(|i| {
                Vector::new(
                    (0..k)
                        .map(|j| int(rng.gen_range(-2..=2) + if i == j { 4 } else { 0 }))
                        .collect(),
                )
            })
            .collect();
        if linalg::det_sign(&rows) > 0 {
            return rows;
        }
    }
}

/// Rational rotation `(I - S)(I + S)^{-1}` from a random skew-symmetric `S`.
fn cayley_rotation(rng: &mut ChaCha8Rng, k: usize) -> Vec<Vector> {
    let mut s = vec![vec![Scalar::zero(); k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let x = ratio(rng.gen_range(-3..=3), rng.gen_range(1..=3));
            s[i][j] = x.clone();
            s[j][i] = -x;
        }
    }
    let id = |i: usize, j: usize| {
        if i == j {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    };
    let plus: Vec<Vector> = (0..k)
        .map(|i| Vector::new((0..k).map(|j| id(i, j) + &s[i][j]).collect()))
        .collect();
    let minus: Vec<Vector> = (0..k)
        .map(|i| Vector::new((0..k).map(|j| id(i, j) - &s[i][j]).collect()))
        .collect();
    // Columns of (I + S)^{-1}, then (I - S) times each.
    let inv_cols: Vec<Vec<Scalar>> = (0..k)
        .map(|j| {
            let cols: Vec<Vector> = (0..k)
                .map(|c| Vector::new(plus.iter().map(|r| r[c].clone()).collect()))
                .collect();
            linalg::coordinates(&cols, &Vector::unit(k, j)).expect("I + S is invertible for skew S")
        })
        .collect();
    (0..k)
        .map(|i| {
            Vector::new(
                (0..k)
                    .map(|j| {
                        (0..k).fold(Scalar::zero(), |acc, m| {
                            acc + &minus[i][m] * &inv_cols[j][m]
                        })
                    })
                    .collect(),
            )
        })
        .collect()
}

fn apply(rows: &[Vector], v: &Vector) -> Vector {
    Vector::new(rows.iter().map(|r| r.dot(v)).collect())
}

/// Rays and facet ray-lists of the boundary of a pointed cone in `R^k`.
fn pointed_cone_boundary(
    rng: &mut ChaCha8Rng,
    k: usize,
    m: usize,
) -> Result<(Vec<Vector>, Vec<Vec<usize>>)> {
    match k {
        1 => Ok((Vec::new(), vec![Vec::new()])),
        2 => {
            let (a, b) = loop {
                let a = random_rational(rng);
                let b = random_rational(rng);
                if a != b {
                    break if a < b { (a, b) } else { (b, a) };
                }
            };
            let rays = vec![
                Vector::new(vec![a, Scalar::one()]),
                Vector::new(vec![b, Scalar::one()]),
            ];
            Ok((rays, vec![vec![0], vec![1]]))
        }
        _ => {
            let (pts, facets) = random_hull(rng, k - 1, m.max(k))?;
            Ok((
                pts.iter().map(|q| q.lifted(Scalar::one())).collect(),
                facets,
            ))
        }
    }
}

/// Triangulated `S^n ∩ ∂K` for `K = A (R^l ⊕ C0)`, `C0` pointed, `A` a
/// rotation times a block-diagonal map.
fn sph_cone(n: usize, l: usize, m: usize, rng: &mut ChaCha8Rng) -> Result<PLSurface> {
    if n < 2 || l > n {
        return Err(Error::BadParams(format!(
            "sph-cone needs 2 <= n and lineality <= n, got n={n}, l={l}"
        )));
    }
    let dim = n + 1;
    let k = dim - l;
    let (c0_rays, c0_facets) = pointed_cone_boundary(rng, k, m)?;
    let a1 = random_invertible(rng, l);
    let a2 = random_invertible(rng, k);
    let q = cayley_rotation(rng, dim);
    let embed = |head: Vector, tail: Vector| -> Vector {
        let mut c = apply(&a1, &head).into_coords();
        c.extend(apply(&a2, &tail).into_coords());
        apply(&q, &Vector::new(c))
    };
    let mut rays: Vec<Vector> = Vec::new();
    for i in 0..l {
        for s in [1, -1] {
            let head = Vector::unit(l, i).scale(&int(s));
            rays.push(embed(head, Vector::zeros(k)));
        }
    }
    for g in &c0_rays {
        rays.push(embed(Vector::zeros(l), g.clone()));
    }
    let mut facets = Vec::new();
    for orthant in 0..(1usize << l) {
        let head: Vec<usize> = (0..l).map(|i| 2 * i + ((orthant >> i) & 1)).collect();
        for f in &c0_facets {
            let mut cell = head.clone();
            cell.extend(f.iter().map(|&j| 2 * l + j));
            facets.push(cell);
        }
    }
    let rays = rays
        .iter()
        .map(|r| canonical_sph(r).map(|p| p.into_ray()))
        .collect::<Result<Vec<_>>>()?;
    PLSurface::new(n, Mode::Spherical, rays, facets, false)
}

/// Every facet duplicated over a fresh copy of the vertices.
pub fn double_cover(s: &PLSurface) -> PLSurface {
    let m = s.vertices.len();
    let mut vertices = s.vertices.clone();
    vertices.extend(s.vertices.iter().cloned());
    let mut facets = s.facets.clone();
    facets.extend(
        s.facets
            .iter()
            .map(|f| f.iter().map(|&i| i + m).collect::<Vec<_>>()),
    );
    PLSurface {
        vertices,
        facets,
        ..s.clone()
    }
}

fn polygon_points(kind: Polygon) -> Vec<Vector> {
    let pentagon = [[0, 10], [10, 3], [6, -8], [-6, -8], [-10, 3]];
    let pts: Vec<[i64; 2]> = match kind {
        Polygon::Pentagram => (0..5).map(|j| pentagon[(2 * j) % 5]).collect(),
        Polygon::Convex => pentagon.to_vec(),
        Polygon::Dart => vec![[0, 0], [6, 3], [0, 6], [2, 3]],
    };
    pts.iter().map(|p| Vector::from_ints(p)).collect()
}

/// Closed polygon times `[0, layers]`, as quadrilaterals, open at both ends.
fn cylinder(p: &GenParams) -> Result<PLSurface> {
    if p.layers == 0 {
        return Err(Error::BadParams("cylinder needs at least one layer".into()));
    }
    let poly = polygon_points(p.polygon);
    let k = poly.len();
    let mut verts = Vec::new();
    for z in 0..=p.layers {
        for q in &poly {
            let mut c = q.clone().into_coords();
            c.push(int(z as i64));
            verts.push(Vector::new(c));
        }
    }
    let mut facets = Vec::new();
    for z in 0..p.layers {
        for i in 0..k {
            let j = (i + 1) % k;
            facets.push(vec![z * k + i, z * k + j, (z + 1) * k + j, (z + 1) * k + i]);
        }
    }
    PLSurface::new(3, Mode::Euclidean, verts, facets, true)
}

pub fn generate(kind: Kind, p: &GenParams) -> Result<Generated> {
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let plain = |surface| {
        Ok(Generated {
            surface,
            marked_vertex: None,
        })
    };
    match kind {
        Kind::Hull => plain(hull(p, &mut rng)?),
        Kind::PerturbedHull => perturbed_hull(p, &mut rng),
        Kind::SphCone => plain(sph_cone(p.n, p.lineality, p.m, &mut rng)?),
        Kind::GreatSphere => plain(sph_cone(p.n, p.n, p.m, &mut rng)?),
        Kind::DoubleCover => plain(double_cover(&sph_cone(p.n, p.lineality, p.m, &mut rng)?)),
        Kind::CylinderTruncated => plain(cylinder(p)?),
    }
}
