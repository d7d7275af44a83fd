//! Pushes one vertex of a random 4-polytope inward and watches the check
//! find a reflex ridge next to it.

use plconvex::gen::{generate, GenParams, Kind};
use plconvex::global::{check, Verdict};

fn main() -> plconvex::Result<()> {
    let params = GenParams {
        n: 4,
        m: 10,
        seed: 7,
        ..GenParams::default()
    };
    let g = generate(Kind::PerturbedHull, &params)?;
    let marked = g.marked_vertex.expect("perturbed hulls mark their vertex");
    match check(&g.surface)? {
        Verdict::NotLocallyConvex { violation, .. } => {
            println!(
                "vertex {marked} was moved; first violation at face {:?}",
                violation.face()
            );
        }
        other => panic!("unexpected verdict {}", other.tag()),
    }
    Ok(())
}
