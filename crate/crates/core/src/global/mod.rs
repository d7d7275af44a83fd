//! Global verdicts for closed, locally convex surfaces.
//!
//! A positive verdict is never taken on faith: the witness cone is assembled
//! from the oriented facet planes and then checked clause by clause against
//! the surface. A failed check after all local tests pass is reported as an
//! internal inconsistency.

mod probe;
mod section;

pub use probe::{a_convexity_probe, ArcCertificate};
pub use section::generatrix_section;

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{linalg, sign, Hyperplane, SubspaceBasis, Vector};
use crate::local::{exposed_vertex, is_strict_vertex, local_report_with, LocalReport, Violation};
use crate::surface::{multiplicity, Mode, PLSurface, RidgeRecord, ValidationReport};

/// Convex body (Euclidean) or convex cone (spherical) given by halfspaces
/// `a · x <= b`, in the surface's own coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeWitness {
    pub mode: Mode,
    pub halfspaces: Vec<Hyperplane>,
    pub lineality: SubspaceBasis,
    pub pointed_part_dim: usize,
}

impl ConeWitness {
    /// Builds a witness from halfspaces, canonicalizing, deduplicating and
    /// sorting them, and computing the lineality space.
    pub fn new(mode: Mode, halfspaces: impl IntoIterator<Item = Hyperplane>) -> Result<Self> {
        let set: BTreeSet<Hyperplane> = halfspaces
            .into_iter()
            .map(|h| h.canonical_oriented())
            .collect();
        let halfspaces: Vec<Hyperplane> = set.into_iter().collect();
        let dim = halfspaces
            .first()
            .map(|h| h.dim())
            .ok_or_else(|| Error::Degenerate("witness without halfspaces".into()))?;
        let normals: Vec<Vector> = halfspaces.iter().map(|h| h.normal.clone()).collect();
        let lineality = SubspaceBasis {
            basis: linalg::nullspace(&normals, dim),
            ambient_dim: dim,
        }
        .canonicalized();
        let pointed_part_dim = dim - lineality.dim();
        Ok(ConeWitness {
            mode,
            halfspaces,
            lineality,
            pointed_part_dim,
        })
    }

    /// Halfspaces as cone functionals `N · x <= 0` on lifted coordinates.
    pub fn cone_functionals(&self) -> Vec<Vector> {
        self.halfspaces
            .iter()
            .map(|h| match self.mode {
                Mode::Spherical => h.normal.clone(),
                Mode::Euclidean => h.normal.lifted(-&h.offset),
            })
            .collect()
    }

    /// Is `ray` (cone coordinates) in the interior of the cone?
    pub fn in_open_cone(&self, ray: &Vector) -> bool {
        self.cone_functionals()
            .iter()
            .all(|n| sign(&n.dot(ray)) < 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JNDecomposition {
    /// Dimension of the spherical directrix; `-1` when the cone is pointed.
    pub directrix_dim: i64,
    pub directrix: SubspaceBasis,
    pub generatrix: Option<PLSurface>,
    pub multiplicity: usize,
}

#[derive(Clone, Debug)]
pub enum Verdict {
    ConvexEmbedding {
        witness: ConeWitness,
    },
    ConvexConeBoundary {
        witness: ConeWitness,
        jn: JNDecomposition,
    },
    GreatSubsphere {
        witness: ConeWitness,
        jn: JNDecomposition,
    },
    GluedHemispheres {
        witness: ConeWitness,
        jn: JNDecomposition,
    },
    NotLocallyConvex {
        violation: Violation,
        report: Option<LocalReport>,
    },
    StructuralReject(ValidationReport),
    BoundaryPresentNoGlobalClaim(LocalReport),
}

impl Verdict {
    pub fn tag(&self) -> &'static str {
        match self {
            Verdict::ConvexEmbedding { .. } => "ConvexEmbedding",
            Verdict::ConvexConeBoundary { .. } => "ConvexConeBoundary",
            Verdict::GreatSubsphere { .. } => "GreatSubsphere",
            Verdict::GluedHemispheres { .. } => "GluedHemispheres",
            Verdict::NotLocallyConvex { .. } => "NotLocallyConvex",
            Verdict::StructuralReject(_) => "StructuralReject",
            Verdict::BoundaryPresentNoGlobalClaim(_) => "BoundaryPresentNoGlobalClaim",
        }
    }

    pub fn is_positive(&self) -> bool {
        self.witness().is_some()
    }

    pub fn witness(&self) -> Option<&ConeWitness> {
        match self {
            Verdict::ConvexEmbedding { witness }
            | Verdict::ConvexConeBoundary { witness, .. }
            | Verdict::GreatSubsphere { witness, .. }
            | Verdict::GluedHemispheres { witness, .. } => Some(witness),
            _ => None,
        }
    }

    pub fn jn(&self) -> Option<&JNDecomposition> {
        match self {
            Verdict::ConvexConeBoundary { jn, .. }
            | Verdict::GreatSubsphere { jn, .. }
            | Verdict::GluedHemispheres { jn, .. } => Some(jn),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Clause {
    /// A facet plane is missing from the witness.
    FacetPlane,
    /// A witness halfspace touches no facet.
    Untouched,
    /// A vertex violates a witness inequality.
    VertexOutside,
    /// A witness facet is not fully covered by surface cells.
    Coverage,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessFailure {
    pub clause: Clause,
    /// Facet, halfspace or vertex index, according to the clause.
    pub index: usize,
}

/// Checks that the surface's image is exactly the boundary of the witness.
pub fn verify_witness(s: &PLSurface, w: &ConeWitness) -> std::result::Result<(), WitnessFailure> {
    let funcs = w.cone_functionals();
    let planes: Vec<Hyperplane> = funcs
        .iter()
        .map(|n| {
            Hyperplane {
                normal: n.clone(),
                offset: Zero::zero(),
            }
            .canonical()
        })
        .collect();
    let facet_plane: Vec<Option<usize>> = (0..s.facets.len())
        .map(|f| {
            let p = s.facet_cone_plane(f).ok()?.canonical();
            planes.iter().position(|q| *q == p)
        })
        .collect();
    if let Some(f) = facet_plane.iter().position(Option::is_none) {
        return Err(WitnessFailure {
            clause: Clause::FacetPlane,
            index: f,
        });
    }
    let facet_plane: Vec<usize> = facet_plane.into_iter().map(Option::unwrap).collect();
    if let Some(h) = (0..planes.len()).find(|h| !facet_plane.contains(h)) {
        return Err(WitnessFailure {
            clause: Clause::Untouched,
            index: h,
        });
    }
    for v in s.used_vertices() {
        let x = s.cone_vertex(v);
        if funcs.iter().any(|n| sign(&n.dot(&x)) > 0) {
            return Err(WitnessFailure {
                clause: Clause::VertexOutside,
                index: v,
            });
        }
    }
    let ridges = s.ridges().map_err(|_| WitnessFailure {
        clause: Clause::Coverage,
        index: 0,
    })?;
    for r in &ridges {
        // A ridge bounding the cells of one witness plane must lie on
        // another witness plane, so the cells fill the whole face of K.
        for &f in &r.incident_facets {
            let h = facet_plane[f];
            let inside = r
                .incident_facets
                .iter()
                .filter(|&&g| facet_plane[g] == h)
                .count();
            if inside == 2 {
                continue;
            }
            let rays = s.cone_vertices(&r.ridge);
            let supported = funcs
                .iter()
                .enumerate()
                .any(|(j, n)| j != h && rays.iter().all(|x| n.dot(x).is_zero()));
            if !supported {
                return Err(WitnessFailure {
                    clause: Clause::Coverage,
                    index: h,
                });
            }
        }
    }
    Ok(())
}

/// Lineality space of the witness cone; its unit sphere is the spherical
/// directrix.
pub fn directrix_of_cone(w: &ConeWitness) -> SubspaceBasis {
    w.lineality.clone()
}

fn witness_from_facets(
    s: &PLSurface,
    report: &LocalReport,
    facets: &[usize],
) -> Result<ConeWitness> {
    let halfspaces: Vec<Hyperplane> = facets
        .iter()
        .map(|&f| s.to_native_hyperplane(&report.orientation.cone_halfspace(f)))
        .collect();
    ConeWitness::new(s.mode, halfspaces)
}

fn local_or_violation(
    s: &PLSurface,
    ridges: &[RidgeRecord],
    skip: &BTreeSet<usize>,
) -> Result<std::result::Result<LocalReport, Verdict>> {
    match local_report_with(s, ridges, skip) {
        Ok(report) => match report.first_violation.clone() {
            Some(violation) => Ok(Err(Verdict::NotLocallyConvex {
                violation,
                report: Some(report),
            })),
            None => Ok(Ok(report)),
        },
        Err(Error::NonOrientableLocally { ridge }) => Ok(Err(Verdict::NotLocallyConvex {
            violation: Violation::NonOrientable {
                ridge: ridges[ridge].ridge.clone(),
            },
            report: None,
        })),
        Err(e) => Err(e),
    }
}

fn require_dim(s: &PLSurface, mode: Mode) -> Result<()> {
    if s.ambient_dim < 3 {
        return Err(Error::Unsupported(format!(
            "ambient dimension {} is below 3",
            s.ambient_dim
        )));
    }
    if s.mode != mode {
        return Err(Error::Unsupported(format!(
            "expected a {} surface",
            mode.name()
        )));
    }
    Ok(())
}

fn inconsistent(what: &str, f: WitnessFailure) -> Error {
    Error::InternalInconsistency(format!(
        "{what}: witness rejected by clause {:?} at index {}",
        f.clause, f.index
    ))
}

pub fn check_euclidean_closed(s: &PLSurface) -> Result<Verdict> {
    require_dim(s, Mode::Euclidean)?;
    let v = s.validate();
    if !v.passes(false) {
        return Ok(Verdict::StructuralReject(v));
    }
    let ridges = s.ridges()?;
    let report = match local_or_violation(s, &ridges, &BTreeSet::new())? {
        Ok(r) => r,
        Err(verdict) => return Ok(verdict),
    };
    if exposed_vertex(s)?.is_none() {
        return Err(Error::InternalInconsistency(
            "no hull vertex on a closed surface".into(),
        ));
    }
    let all: Vec<usize> = (0..s.facets.len()).collect();
    let witness = witness_from_facets(s, &report, &all)?;
    verify_witness(s, &witness).map_err(|f| inconsistent("locally convex closed surface", f))?;
    Ok(Verdict::ConvexEmbedding { witness })
}

/// Closed spherical surfaces. Several connected components are accepted when
/// each one bounds the same cone, which is how covers of a convex surface by
/// disjoint copies present themselves; the multiplicity counts all of them.
pub fn check_spherical_closed(s: &PLSurface) -> Result<Verdict> {
    require_dim(s, Mode::Spherical)?;
    let v = s.validate();
    if !v.passes_with_components(false) {
        return Ok(Verdict::StructuralReject(v));
    }
    let ridges = s.ridges()?;
    let report = match local_or_violation(s, &ridges, &BTreeSet::new())? {
        Ok(r) => r,
        Err(verdict) => return Ok(verdict),
    };
    let comp = s.facet_components(&ridges);
    let mut witness: Option<ConeWitness> = None;
    for c in 0..v.components {
        let facets: Vec<usize> = (0..s.facets.len()).filter(|&f| comp[f] == c).collect();
        let w = witness_from_facets(s, &report, &facets)?;
        match &witness {
            None => witness = Some(w),
            Some(w0) if *w0 == w => {}
            Some(_) => return Ok(Verdict::StructuralReject(v)),
        }
        let mult = multiplicity(s, facets[0], Some(&facets))?;
        let used: BTreeSet<usize> = facets
            .iter()
            .flat_map(|&f| s.facets[f].iter().copied())
            .collect();
        if mult != 1 && used.iter().any(|&x| is_strict_vertex(s, x)) {
            return Err(Error::InternalInconsistency(format!(
                "component {c} has a strict vertex but multiplicity {mult}"
            )));
        }
    }
    let witness = witness.expect("a validated surface has a component");
    verify_witness(s, &witness).map_err(|f| inconsistent("locally convex spherical surface", f))?;
    let n = s.ambient_dim as i64;
    let lineality = directrix_of_cone(&witness);
    let d = lineality.dim() as i64 - 1;
    let mult = multiplicity(s, 0, None)?;
    let mut jn = JNDecomposition {
        directrix_dim: d,
        directrix: lineality,
        generatrix: None,
        multiplicity: mult,
    };
    if d == n - 1 {
        return Ok(Verdict::GreatSubsphere { witness, jn });
    }
    let section = generatrix_section(s, &witness)?;
    let cells = section.facets.len();
    jn.generatrix = Some(section);
    if d == n - 2 && cells == 2 {
        Ok(Verdict::GluedHemispheres { witness, jn })
    } else {
        Ok(Verdict::ConvexConeBoundary { witness, jn })
    }
}

/// Local checks on interior ridges and interior vertices only. Never makes a
/// global claim.
pub fn check_with_boundary(s: &PLSurface) -> Result<Verdict> {
    let v = s.validate();
    if !v.passes(true) {
        return Ok(Verdict::StructuralReject(v));
    }
    let ridges = s.ridges()?;
    let skip = s.boundary_vertices(&ridges);
    match local_or_violation(s, &ridges, &skip)? {
        Ok(report)
        | Err(Verdict::NotLocallyConvex {
            report: Some(report),
            ..
        }) => Ok(Verdict::BoundaryPresentNoGlobalClaim(report)),
        Err(verdict) => Ok(verdict),
    }
}

/// Dispatches on boundary flag and mode.
pub fn check(s: &PLSurface) -> Result<Verdict> {
    if s.ambient_dim < 3 {
        return Err(Error::Unsupported(format!(
            "ambient dimension {} is below 3",
            s.ambient_dim
        )));
    }
    if s.allow_boundary {
        return check_with_boundary(s);
    }
    match s.mode {
        Mode::Euclidean => check_euclidean_closed(s),
        Mode::Spherical => check_spherical_closed(s),
    }
}
