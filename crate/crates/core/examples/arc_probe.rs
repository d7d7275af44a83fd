//! Joins two points outside an open convex spherical region by a great
//! circle arc that avoids it, and verifies the arc exactly.

use plconvex::exact::{int, Hyperplane, Vector};
use plconvex::global::{a_convexity_probe, ConeWitness};
use plconvex::surface::Mode;

fn main() -> plconvex::Result<()> {
    // Open octant x, y, z > 0.
    let octant = ConeWitness::new(
        Mode::Spherical,
        (0..3).map(|i| Hyperplane {
            normal: -&Vector::unit(3, i),
            offset: int(0),
        }),
    )?;
    let x = Vector::from_ints(&[2, -1, 1]);
    let y = Vector::from_ints(&[-1, 2, 1]);
    let arc = a_convexity_probe(&octant, &x, &y)?;
    println!("arc {} -> {} via {}", arc.start, arc.end, arc.via);
    assert!(arc.verify(&octant));
    Ok(())
}
