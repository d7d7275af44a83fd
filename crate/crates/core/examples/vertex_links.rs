//! Compares the two vertex tests, star hull and recursive link, on a
//! random polytope in R^4.

use plconvex::gen::{generate, GenParams, Kind};
use plconvex::local::{recursive_link_check, star_hull_check};

fn main() -> plconvex::Result<()> {
    let params = GenParams {
        n: 4,
        m: 9,
        seed: 5,
        ..GenParams::default()
    };
    let s = generate(Kind::Hull, &params)?.surface;
    for v in 0..s.vertices.len() {
        let hull = star_hull_check(&s, &[v])?;
        let link = recursive_link_check(&s, v)?;
        println!(
            "vertex {v}: star hull {} ({} planes), recursive {link}",
            hull.convex,
            hull.witness.len()
        );
        assert_eq!(hull.convex, link);
    }
    Ok(())
}
