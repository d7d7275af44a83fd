//! Checks the unit cube and prints its halfspace witness.

use plconvex::exact::Vector;
use plconvex::global::{check, verify_witness, Verdict};
use plconvex::surface::{Mode, PLSurface};

fn main() -> plconvex::Result<()> {
    // Vertex 4x + 2y + z sits at (x, y, z).
    let vertices = (0..8)
        .map(|i| Vector::from_ints(&[i >> 2 & 1, i >> 1 & 1, i & 1]))
        .collect();
    let facets = vec![
        vec![0, 1, 3, 2],
        vec![4, 5, 7, 6],
        vec![0, 1, 5, 4],
        vec![2, 3, 7, 6],
        vec![0, 2, 6, 4],
        vec![1, 3, 7, 5],
    ];
    let cube = PLSurface::new(3, Mode::Euclidean, vertices, facets, false)?;
    let verdict = check(&cube)?;
    let Verdict::ConvexEmbedding { witness } = &verdict else {
        panic!("expected a convex embedding, got {}", verdict.tag());
    };
    for h in &witness.halfspaces {
        println!("{} . x <= {}", h.normal, h.offset);
    }
    assert!(verify_witness(&cube, witness).is_ok());
    Ok(())
}
