//! Machine and human readable reports of a verdict.
//!
//! Rationals are printed as `p/q` strings so that JSON output stays exact.
//! Object keys are sorted, so the same verdict always serializes to the
//! same bytes.

use std::time::Duration;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{format_rational, Hyperplane, SubspaceBasis, Vector};
use crate::global::{ConeWitness, JNDecomposition, Verdict};
use crate::local::{LocalReport, RidgeClass, Violation};
use crate::surface::{PLSurface, ValidationReport};

/// Named wall-clock phases, reported only on request.
pub type Timings = Vec<(&'static str, Duration)>;

fn vector_json(v: &Vector) -> Value {
    Value::Array(
        v.coords()
            .iter()
            .map(|x| Value::String(format_rational(x)))
            .collect(),
    )
}

fn halfspace_json(h: &Hyperplane) -> Value {
    let mut row: Vec<Value> = h
        .normal
        .coords()
        .iter()
        .map(|x| Value::String(format_rational(x)))
        .collect();
    row.push(Value::String(format_rational(&h.offset)));
    Value::Array(row)
}

fn basis_json(b: &SubspaceBasis) -> Value {
    Value::Array(b.basis.iter().map(vector_json).collect())
}

/// The witness block: halfspaces as `[normal..., offset]` meaning
/// `normal · x <= offset`, plus the lineality basis.
pub fn witness_json(w: &ConeWitness) -> Value {
    json!({
        "mode": w.mode.name(),
        "halfspaces": w.halfspaces.iter().map(halfspace_json).collect::<Vec<_>>(),
        "lineality": basis_json(&w.lineality),
        "pointed_part_dim": w.pointed_part_dim,
    })
}

fn jn_json(jn: &JNDecomposition) -> Value {
    let directrix = if jn.directrix_dim < 0 {
        json!("pointed")
    } else {
        basis_json(&jn.directrix)
    };
    json!({
        "directrix_dim": jn.directrix_dim,
        "directrix": directrix,
        "multiplicity": jn.multiplicity,
        "generatrix": jn.generatrix.as_ref().map(|g| json!({
            "ambient_dim": g.ambient_dim,
            "vertices": g.vertices.len(),
            "facets": g.facets.len(),
        })),
    })
}

fn validation_json(v: &ValidationReport) -> Value {
    json!({
        "pseudomanifold": v.pseudomanifold,
        "connected": v.connected,
        "closed": v.closed,
        "components": v.components,
        "facet_defects": v.facet_defects,
        "ridge_defects": v.ridge_defects,
        "vertex_defects": v.vertex_defects,
    })
}

fn violation_json(v: &Violation) -> Value {
    match v {
        Violation::ReflexRidge { ridge, facets } => {
            json!({ "kind": "reflex-ridge", "face": ridge, "facets": facets })
        }
        Violation::Vertex { vertex } => json!({ "kind": "vertex", "face": [vertex] }),
        Violation::NonOrientable { ridge } => json!({ "kind": "non-orientable", "face": ridge }),
    }
}

/// Every failing face of a local report, ridges first.
pub fn violations(s: &PLSurface, report: &LocalReport) -> Vec<Violation> {
    let ridges = s.ridges().unwrap_or_default();
    let mut out = Vec::new();
    for rv in report
        .ridges
        .iter()
        .filter(|r| r.class == RidgeClass::Reflex)
    {
        let Some(record) = ridges.get(rv.ridge) else {
            continue;
        };
        let facets = [
            record.incident_facets[0],
            *record
                .incident_facets
                .get(1)
                .unwrap_or(&record.incident_facets[0]),
        ];
        out.push(Violation::ReflexRidge {
            ridge: record.ridge.clone(),
            facets,
        });
    }
    for vv in report.vertices.iter().filter(|v| !v.convex) {
        out.push(Violation::Vertex { vertex: vv.vertex });
    }
    out
}

fn local_json(report: &LocalReport) -> Value {
    let count = |c: RidgeClass| report.ridges.iter().filter(|r| r.class == c).count();
    json!({
        "ridges": {
            "strictly_convex": count(RidgeClass::StrictlyConvex),
            "flat": count(RidgeClass::Flat),
            "reflex": count(RidgeClass::Reflex),
        },
        "vertices_checked": report.vertices.len(),
        "locally_convex": report.locally_convex(),
        "first_violation": report.first_violation.as_ref().map(violation_json),
    })
}

fn timings_json(t: &Timings) -> Value {
    Value::Object(
        t.iter()
            .map(|(k, d)| (format!("{k}_us"), json!(d.as_micros() as u64)))
            .collect(),
    )
}

/// Full JSON report. Timings (microseconds) are included only when given.
pub fn to_json(s: &PLSurface, verdict: &Verdict, timings: Option<&Timings>) -> Value {
    let (mut found, local) = match verdict {
        Verdict::NotLocallyConvex {
            violation,
            report: Some(r),
        } => {
            let mut all = violations(s, r);
            if !all.contains(violation) {
                all.push(violation.clone());
            }
            (all, Some(local_json(r)))
        }
        Verdict::NotLocallyConvex {
            violation,
            report: None,
        } => (vec![violation.clone()], None),
        Verdict::BoundaryPresentNoGlobalClaim(r) => (violations(s, r), Some(local_json(r))),
        _ => (Vec::new(), None),
    };
    found.sort_by_key(Violation::face);
    let validation = match verdict {
        Verdict::StructuralReject(v) => v.clone(),
        _ => s.validate(),
    };
    let mut out = json!({
        "verdict": verdict.tag(),
        "mode": s.mode.name(),
        "ambient_dim": s.ambient_dim,
        "witness": verdict.witness().map(witness_json),
        "jn": verdict.jn().map(jn_json),
        "violations": found.iter().map(violation_json).collect::<Vec<_>>(),
        "validation": validation_json(&validation),
    });
    let obj = out.as_object_mut().expect("object literal");
    if let Some(l) = local {
        obj.insert("local".into(), l);
    }
    if let Some(t) = timings {
        obj.insert("timings".into(), timings_json(t));
    }
    out
}

pub fn error_json(e: &Error) -> Value {
    json!({ "verdict": "Error", "error": format!("{e:?}").split([' ', '(', '{']).next().unwrap_or(""), "message": e.to_string() })
}

fn halfspace_text(h: &Hyperplane) -> String {
    let terms: Vec<String> = h.normal.coords().iter().map(format_rational).collect();
    format!(
        "[{}] . x <= {}",
        terms.join(" "),
        format_rational(&h.offset)
    )
}

fn violation_text(v: &Violation) -> String {
    match v {
        Violation::ReflexRidge { ridge, facets } => {
            format!(
                "reflex ridge {ridge:?} between facets {} and {}",
                facets[0], facets[1]
            )
        }
        Violation::Vertex { vertex } => format!("vertex {vertex} has a non-convex star"),
        Violation::NonOrientable { ridge } => {
            format!("no consistent co-orientation across ridge {ridge:?}")
        }
    }
}

/// Plain text report.
pub fn to_text(s: &PLSurface, verdict: &Verdict, timings: Option<&Timings>) -> String {
    let mut out = format!("verdict: {}\n", verdict.tag());
    if let Some(w) = verdict.witness() {
        out.push_str(&format!(
            "witness: {} halfspaces, lineality dimension {}\n",
            w.halfspaces.len(),
            w.lineality.dim()
        ));
        for h in &w.halfspaces {
            out.push_str(&format!("  {}\n", halfspace_text(h)));
        }
    }
    if let Some(jn) = verdict.jn() {
        let d = if jn.directrix_dim < 0 {
            "pointed".to_string()
        } else {
            jn.directrix_dim.to_string()
        };
        out.push_str(&format!(
            "directrix: {d}\nmultiplicity: {}\n",
            jn.multiplicity
        ));
        if let Some(g) = &jn.generatrix {
            out.push_str(&format!(
                "generatrix: {} vertices, {} facets in S^{}\n",
                g.vertices.len(),
                g.facets.len(),
                g.ambient_dim
            ));
        }
    }
    match verdict {
        Verdict::NotLocallyConvex { violation, .. } => {
            out.push_str(&format!("violation: {}\n", violation_text(violation)));
        }
        Verdict::StructuralReject(v) => {
            out.push_str(&format!(
                "validation: pseudomanifold={} closed={} connected={} components={}\n",
                v.pseudomanifold, v.closed, v.connected, v.components
            ));
            if !v.ridge_defects.is_empty() {
                out.push_str(&format!("  bad ridges: {:?}\n", v.ridge_defects));
            }
            if !v.vertex_defects.is_empty() {
                out.push_str(&format!("  bad vertex links: {:?}\n", v.vertex_defects));
            }
            if !v.facet_defects.is_empty() {
                out.push_str(&format!("  bad facets: {:?}\n", v.facet_defects));
            }
        }
        Verdict::BoundaryPresentNoGlobalClaim(r) => {
            let found = violations(s, r);
            out.push_str(&format!(
                "interior faces checked: {} ridges, {} vertices\n",
                r.ridges.len(),
                r.vertices.len()
            ));
            if found.is_empty() {
                out.push_str("locally convex at every interior face\n");
            }
            for v in found {
                out.push_str(&format!("violation: {}\n", violation_text(&v)));
            }
        }
        _ => {}
    }
    if let Some(t) = timings {
        for (k, d) in t {
            out.push_str(&format!("time {k}: {} us\n", d.as_micros()));
        }
    }
    out
}

/// Process exit status for a check outcome.
pub fn exit_code(outcome: &Result<Verdict>) -> i32 {
    match outcome {
        Ok(Verdict::NotLocallyConvex { .. }) => 1,
        Ok(Verdict::BoundaryPresentNoGlobalClaim(r)) => i32::from(!r.locally_convex()),
        Ok(Verdict::StructuralReject(_)) => 2,
        Ok(_) => 0,
        Err(Error::Unsupported(_)) => 3,
        Err(Error::InternalInconsistency(_)) => 4,
        Err(_) => 2,
    }
}
