//! Realized PL hypersurfaces and their combinatorial validation.
//!
//! A surface in `R^n` is handled through its cone lift: vertex `p` becomes the
//! ray `(p, 1)` in `R^{n+1}`, facets become pointed polyhedral cones, and
//! affine hyperplanes `a·x = b` become linear functionals `(a, -b)`. Spherical
//! surfaces already live in that form. Every predicate below therefore works
//! on linear cones only.

mod link;

pub use link::{covering_multiplicity, face_link, multiplicity, probe_in_facet, LinkComplex};

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{canonical_sph, linalg, lp, Hyperplane, Scalar, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Euclidean,
    Spherical,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Euclidean => "euclidean",
            Mode::Spherical => "spherical",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PLSurface {
    pub ambient_dim: usize,
    pub mode: Mode,
    /// Points of `R^n`, or primitive integer rays of `R^{n+1}` in spherical mode.
    pub vertices: Vec<Vector>,
    pub facets: Vec<Vec<usize>>,
    pub allow_boundary: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RidgeRecord {
    pub ridge: Vec<usize>,
    pub incident_facets: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub pseudomanifold: bool,
    pub connected: bool,
    pub closed: bool,
    pub components: usize,
    pub facet_defects: Vec<usize>,
    pub ridge_defects: Vec<Vec<usize>>,
    pub vertex_defects: Vec<usize>,
}

impl ValidationReport {
    pub fn passes(&self, allow_boundary: bool) -> bool {
        self.passes_with_components(allow_boundary) && self.connected
    }

    /// Everything but connectivity.
    pub fn passes_with_components(&self, allow_boundary: bool) -> bool {
        self.pseudomanifold
            && (self.closed || allow_boundary)
            && self.facet_defects.is_empty()
            && self.ridge_defects.is_empty()
            && self.vertex_defects.is_empty()
    }
}

impl PLSurface {
    pub fn new(
        ambient_dim: usize,
        mode: Mode,
        vertices: Vec<Vector>,
        facets: Vec<Vec<usize>>,
        allow_boundary: bool,
    ) -> Result<Self> {
        let len = match mode {
            Mode::Euclidean => ambient_dim,
            Mode::Spherical => ambient_dim + 1,
        };
        let mut verts = Vec::with_capacity(vertices.len());
        for v in vertices {
            v.check_len(len)?;
            verts.push(match mode {
                Mode::Euclidean => v,
                Mode::Spherical => canonical_sph(&v)?.into_ray(),
            });
        }
        for f in &facets {
            if let Some(&bad) = f.iter().find(|&&i| i >= verts.len()) {
                return Err(Error::BadIndex {
                    line: 0,
                    index: bad,
                });
            }
        }
        Ok(PLSurface {
            ambient_dim,
            mode,
            vertices: verts,
            facets,
            allow_boundary,
        })
    }

    /// Length of the lifted (cone) coordinates: `n + 1` in both modes.
    pub fn cone_dim(&self) -> usize {
        self.ambient_dim + 1
    }

    pub fn cone_vertex(&self, i: usize) -> Vector {
        match self.mode {
            Mode::Euclidean => self.vertices[i].lifted(Scalar::one()),
            Mode::Spherical => self.vertices[i].clone(),
        }
    }

    pub fn cone_vertices(&self, idx: &[usize]) -> Vec<Vector> {
        idx.iter().map(|&i| self.cone_vertex(i)).collect()
    }

    /// Unoriented linear hyperplane (in cone coordinates) spanned by a facet.
    pub fn facet_cone_plane(&self, f: usize) -> Result<Hyperplane> {
        let rays = self.cone_vertices(&self.facets[f]);
        crate::exact::linear_hyperplane(&rays, self.cone_dim())
    }

    /// Converts a cone-coordinate functional back to a hyperplane in the
    /// surface's own space.
    pub fn to_native_hyperplane(&self, h: &Hyperplane) -> Hyperplane {
        match self.mode {
            Mode::Spherical => h.clone(),
            Mode::Euclidean => {
                let mut c = h.normal.clone().into_coords();
                let last = c.pop().expect("cone functional has n + 1 entries");
                Hyperplane {
                    normal: Vector::new(c),
                    offset: -last,
                }
            }
        }
    }

    pub fn to_cone_functional(&self, h: &Hyperplane) -> Hyperplane {
        match self.mode {
            Mode::Spherical => h.clone(),
            Mode::Euclidean => Hyperplane {
                normal: h.normal.lifted(-&h.offset),
                offset: Scalar::zero(),
            },
        }
    }

    /// Checks a single facet: enough distinct vertices, correct dimension,
    /// convex position, and (spherical) containment in an open hemisphere.
    pub fn facet_is_valid(&self, f: usize) -> bool {
        let facet = &self.facets[f];
        let n = self.ambient_dim;
        let distinct: BTreeSet<usize> = facet.iter().copied().collect();
        if distinct.len() != facet.len() || facet.len() < n {
            return false;
        }
        let rays = self.cone_vertices(facet);
        if linalg::rank(&rays) != n {
            return false;
        }
        if facet.len() == n {
            // Independent rays: a simplex, pointed and in convex position.
            return true;
        }
        let refs: Vec<&Vector> = rays.iter().collect();
        if self.mode == Mode::Spherical && !lp::open_halfspace_exists(&refs) {
            return false;
        }
        (0..rays.len()).all(|i| {
            let others: Vec<&Vector> = (0..rays.len())
                .filter(|&j| j != i)
                .map(|j| &rays[j])
                .collect();
            !lp::in_cone(&others, &rays[i])
        })
    }

    /// The (n-2)-faces of a valid facet, as sorted vertex-index lists.
    pub fn facet_ridges(&self, f: usize) -> Result<Vec<Vec<usize>>> {
        let facet = &self.facets[f];
        let n = self.ambient_dim;
        if n == 1 {
            return Ok(vec![Vec::new()]);
        }
        if facet.len() == n {
            let mut sorted = facet.clone();
            sorted.sort_unstable();
            return Ok(combinations(n, n - 1)
                .into_iter()
                .map(|c| c.iter().map(|&i| sorted[i]).collect())
                .collect());
        }
        let dim = self.cone_dim();
        let rays = self.cone_vertices(facet);
        let plane = self.facet_cone_plane(f)?;
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        for combo in combinations(facet.len(), n - 1) {
            let mut span: Vec<Vector> = combo.iter().map(|&i| rays[i].clone()).collect();
            if linalg::rank(&span) != n - 1 {
                continue;
            }
            span.push(plane.normal.clone());
            let Ok(cut) = crate::exact::linear_hyperplane(&span, dim) else {
                continue;
            };
            let signs: Vec<i8> = rays
                .iter()
                .map(|r| crate::exact::sign(&cut.eval(r)))
                .collect();
            if signs.contains(&1) && signs.contains(&-1) {
                continue;
            }
            let mut face: Vec<usize> = (0..rays.len())
                .filter(|&i| signs[i] == 0)
                .map(|i| facet[i])
                .collect();
            face.sort_unstable();
            found.insert(face);
        }
        Ok(found.into_iter().collect())
    }

    fn ridge_map(&self, valid: &[usize]) -> Result<BTreeMap<Vec<usize>, Vec<usize>>> {
        let mut map: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for &f in valid {
            for r in self.facet_ridges(f)? {
                map.entry(r).or_default().push(f);
            }
        }
        Ok(map)
    }

    /// Connected components of the facet adjacency graph, as a component id
    /// per facet (ids numbered by first facet).
    pub fn facet_components(&self, ridges: &[RidgeRecord]) -> Vec<usize> {
        let m = self.facets.len();
        let mut parent: Vec<usize> = (0..m).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for r in ridges {
            for w in r.incident_facets.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut ids: HashMap<usize, usize> = HashMap::new();
        (0..m)
            .map(|f| {
                let root = find(&mut parent, f);
                let next = ids.len();
                *ids.entry(root).or_insert(next)
            })
            .collect()
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let valid: Vec<usize> = (0..self.facets.len())
            .filter(|&f| {
                let ok = self.facet_is_valid(f);
                if !ok {
                    report.facet_defects.push(f);
                }
                ok
            })
            .collect();
        let map = match self.ridge_map(&valid) {
            Ok(m) => m,
            Err(_) => {
                report.facet_defects = (0..self.facets.len()).collect();
                return report;
            }
        };
        report.pseudomanifold = true;
        report.closed = true;
        for (ridge, inc) in &map {
            match inc.len() {
                2 => {}
                1 => {
                    report.closed = false;
                    if !self.allow_boundary {
                        report.ridge_defects.push(ridge.clone());
                    }
                }
                _ => {
                    report.pseudomanifold = false;
                    report.ridge_defects.push(ridge.clone());
                }
            }
        }
        let records: Vec<RidgeRecord> = map
            .into_iter()
            .map(|(ridge, incident_facets)| RidgeRecord {
                ridge,
                incident_facets,
            })
            .collect();
        let comp = self.facet_components(&records);
        report.components = comp.iter().copied().max().map_or(0, |c| c + 1);
        report.connected = report.components == 1;

        // Unused vertices, and coincident vertices within one component.
        let mut vertex_comp: Vec<Option<usize>> = vec![None; self.vertices.len()];
        for (f, facet) in self.facets.iter().enumerate() {
            for &v in facet {
                vertex_comp[v] = Some(comp[f]);
            }
        }
        let mut seen: HashMap<(&Vector, usize), usize> = HashMap::new();
        for (v, c) in vertex_comp.iter().enumerate() {
            match c {
                None => report.vertex_defects.push(v),
                Some(c) => {
                    if seen.insert((&self.vertices[v], *c), v).is_some() {
                        report.vertex_defects.push(v);
                    }
                }
            }
        }
        report
    }

    /// Ridge records in lexicographic order of their vertex lists.
    pub fn ridges(&self) -> Result<Vec<RidgeRecord>> {
        let all: Vec<usize> = (0..self.facets.len()).collect();
        if all.iter().any(|&f| !self.facet_is_valid(f)) {
            return Err(Error::NotPseudomanifold);
        }
        let map = self.ridge_map(&all)?;
        if map.values().any(|inc| inc.len() > 2) {
            return Err(Error::NotPseudomanifold);
        }
        Ok(map
            .into_iter()
            .map(|(ridge, incident_facets)| RidgeRecord {
                ridge,
                incident_facets,
            })
            .collect())
    }

    /// Facets containing every vertex of `face`.
    pub fn star(&self, face: &[usize]) -> Vec<usize> {
        (0..self.facets.len())
            .filter(|&f| face.iter().all(|v| self.facets[f].contains(v)))
            .collect()
    }

    /// Vertices lying on a boundary ridge.
    pub fn boundary_vertices(&self, ridges: &[RidgeRecord]) -> BTreeSet<usize> {
        ridges
            .iter()
            .filter(|r| r.incident_facets.len() == 1)
            .flat_map(|r| r.ridge.iter().copied())
            .collect()
    }

    /// Vertices actually used by some facet, in index order.
    pub fn used_vertices(&self) -> Vec<usize> {
        let used: BTreeSet<usize> = self.facets.iter().flatten().copied().collect();
        used.into_iter().collect()
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 && idx[0] == n - k {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn cube() -> PLSurface {
        let mut verts = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    verts.push(Vector::from_ints(&[x, y, z]));
                }
            }
        }
        // index = 4x + 2y + z
        let facets = vec![
            vec![0, 1, 3, 2],
            vec![4, 5, 7, 6],
            vec![0, 1, 5, 4],
            vec![2, 3, 7, 6],
            vec![0, 2, 6, 4],
            vec![1, 3, 7, 5],
        ];
        PLSurface::new(3, Mode::Euclidean, verts, facets, false).unwrap()
    }

    /// Octahedral triangulation of the great 2-sphere `x4 = 0` in `S^3`.
    pub fn great_sphere() -> PLSurface {
        let mut verts = Vec::new();
        for i in 0..3 {
            for s in [1, -1] {
                let mut c = [0i64; 4];
                c[i] = s;
                verts.push(Vector::from_ints(&c));
            }
        }
        // index 2i is +e_i, 2i + 1 is -e_i
        let mut facets = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    facets.push(vec![a, 2 + b, 4 + c]);
                }
            }
        }
        PLSurface::new(3, Mode::Spherical, verts, facets, false).unwrap()
    }

    pub fn tetrahedron(offset: i64) -> (Vec<Vector>, Vec<Vec<usize>>) {
        let verts = vec![
            Vector::from_ints(&[offset, 0, 0]),
            Vector::from_ints(&[offset + 1, 0, 0]),
            Vector::from_ints(&[offset, 1, 0]),
            Vector::from_ints(&[offset, 0, 1]),
        ];
        let facets = vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]];
        (verts, facets)
    }
}
