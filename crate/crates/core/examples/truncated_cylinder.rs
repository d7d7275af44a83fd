//! A cylinder over a pentagram is locally convex at every interior face
//! yet does not bound a convex set, so no global claim is made.

use plconvex::gen::{generate, GenParams, Kind, Polygon};
use plconvex::global::{check, Verdict};

fn main() -> plconvex::Result<()> {
    for polygon in [Polygon::Pentagram, Polygon::Convex, Polygon::Dart] {
        let s = generate(
            Kind::CylinderTruncated,
            &GenParams {
                polygon,
                ..GenParams::default()
            },
        )?
        .surface;
        let Verdict::BoundaryPresentNoGlobalClaim(report) = check(&s)? else {
            unreachable!()
        };
        println!("{polygon:?}: locally convex = {}", report.locally_convex());
    }
    Ok(())
}
