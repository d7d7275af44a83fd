//! A surface wrapped twice around the same convex cone keeps its witness
//! and reports multiplicity two.

use plconvex::gen::{double_cover, generate, GenParams, Kind};
use plconvex::global::check;
use plconvex::report::witness_json;

fn main() -> plconvex::Result<()> {
    let params = GenParams {
        n: 3,
        m: 5,
        lineality: 0,
        seed: 3,
        ..GenParams::default()
    };
    let single = generate(Kind::SphCone, &params)?.surface;
    let double = double_cover(&single);
    let (a, b) = (check(&single)?, check(&double)?);
    let (ja, jb) = (a.jn().unwrap(), b.jn().unwrap());
    println!("multiplicity {} -> {}", ja.multiplicity, jb.multiplicity);
    let same = witness_json(a.witness().unwrap()) == witness_json(b.witness().unwrap());
    println!("identical witness: {same}");
    Ok(())
}
