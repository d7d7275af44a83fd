//! Random spherical cone boundaries with lineality 0 to 3 in S^3: the
//! verdict tag and the directrix dimension follow the lineality.

use plconvex::gen::{generate, GenParams, Kind};
use plconvex::global::check;

fn main() -> plconvex::Result<()> {
    for lineality in 0..=3 {
        let params = GenParams {
            n: 3,
            m: 6,
            lineality,
            seed: 11,
            ..GenParams::default()
        };
        let s = generate(Kind::SphCone, &params)?.surface;
        let verdict = check(&s)?;
        let jn = verdict.jn().expect("positive spherical verdict");
        println!(
            "lineality {lineality}: {} with directrix dimension {} and {} generatrix cells",
            verdict.tag(),
            jn.directrix_dim,
            jn.generatrix.as_ref().map_or(0, |g| g.facets.len()),
        );
    }
    Ok(())
}
