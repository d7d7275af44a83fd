//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.
//!
//! Every expected value is computed here by an independent route (integer
//! cofactor hyperplanes, brute-force enumeration, sampled arc points), not
//! by calling back into the code under test.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use plconvex::exact::{Hyperplane, Vector};
use plconvex::gen::{double_cover, generate, GenParams, Kind, Polygon};
use plconvex::global::{a_convexity_probe, check, directrix_of_cone, ConeWitness, Verdict};
use plconvex::local::{recursive_link_check, star_hull_check, Violation};
use plconvex::report::witness_json;
use plconvex::surface::{Mode, PLSurface};

type Q = BigRational;
/// Halfspace `normal · x <= offset` as primitive integers.
type IntHalfspace = (Vec<BigInt>, BigInt);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: &[String], summary: String) -> Outcome {
    let detail = match failures.first() {
        None => summary,
        Some(first) => format!("{summary}; {} failures, first: {first}", failures.len()),
    };
    Outcome {
        pass: failures.is_empty(),
        detail,
    }
}

// ---------------------------------------------------------------------------
// Independent integer geometry for the oracles.

fn det(m: &[Vec<Q>]) -> Q {
    // Cofactor expansion; matrices here are at most 5 x 5.
    match m.len() {
        0 => Q::one(),
        1 => m[0][0].clone(),
        k => (0..k)
            .map(|j| {
                let minor: Vec<Vec<Q>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * det(&minor);
                if j % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .fold(Q::zero(), |a, b| a + b),
    }
}

fn primitive(mut coords: Vec<Q>) -> Vec<BigInt> {
    let lcm = coords.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    for x in &mut coords {
        *x = &*x * Q::from_integer(lcm.clone());
    }
    let ints: Vec<BigInt> = coords.iter().map(|x| x.to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    ints.into_iter().map(|x| x / &g).collect()
}

fn int_halfspace(h: &Hyperplane) -> IntHalfspace {
    let mut joint: Vec<Q> = h.normal.coords().to_vec();
    joint.push(h.offset.clone());
    let mut p = primitive(joint);
    let offset = p.pop().unwrap();
    (p, offset)
}

/// Every facet hyperplane of `conv(points)` by brute force: all n-subsets
/// whose cofactor normal is nonzero and leaves every point on one side.
fn brute_force_hull(points: &[Vector]) -> BTreeSet<IntHalfspace> {
    let n = points[0].len();
    let mut out = BTreeSet::new();
    for subset in subsets(points.len(), n) {
        let base = &points[subset[0]];
        let diffs: Vec<Vec<Q>> = subset[1..]
            .iter()
            .map(|&i| (&points[i] - base).coords().to_vec())
            .collect();
        let normal: Vec<Q> = (0..n)
            .map(|j| {
                let minor: Vec<Vec<Q>> = diffs
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let d = det(&minor);
                if j % 2 == 0 {
                    d
                } else {
                    -d
                }
            })
            .collect();
        if normal.iter().all(Zero::is_zero) {
            continue;
        }
        let eval = |p: &Vector| -> Q {
            normal
                .iter()
                .zip(p.coords())
                .map(|(a, b)| a * b)
                .fold(Q::zero(), |s, t| s + t)
        };
        let offset = eval(base);
        let sides: Vec<Q> = points.iter().map(|p| eval(p) - &offset).collect();
        let (normal, offset) = if sides.iter().all(|s| !s.is_positive()) {
            (normal, offset)
        } else if sides.iter().all(|s| !s.is_negative()) {
            (normal.into_iter().map(|x| -x).collect(), -offset)
        } else {
            continue;
        };
        let mut joint = normal;
        joint.push(offset);
        let mut p = primitive(joint);
        let off = p.pop().unwrap();
        out.insert((p, off));
    }
    out
}

fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            go(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    go(0, m, k, &mut cur, &mut out);
    out
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter()
        .zip(b)
        .map(|(x, y)| x * y)
        .fold(Q::zero(), |s, t| s + t)
}

/// Strictly inside every halfspace of the cone, checked directly.
fn in_open_cone(funcs: &[Vec<Q>], y: &[Q]) -> bool {
    funcs.iter().all(|n| dot(n, y).is_negative())
}

// ---------------------------------------------------------------------------

/// Vertex-wise comparison of the two local vertex tests.
fn compare_vertex_checks(s: &PLSurface) -> Result<usize, String> {
    for v in 0..s.vertices.len() {
        let hull = star_hull_check(s, &[v]).map_err(|e| format!("star hull at {v}: {e}"))?;
        let link = recursive_link_check(s, v).map_err(|e| format!("link at {v}: {e}"))?;
        if hull.convex != link {
            return Err(format!(
                "vertex {v}: star hull {} vs recursive {link}",
                hull.convex
            ));
        }
    }
    Ok(s.vertices.len())
}

fn hull_params(n: usize) -> usize {
    match n {
        3 => 24,
        4 => 12,
        _ => 10,
    }
}

fn criterion_1(pool: &mut Vec<PLSurface>) -> Outcome {
    let mut failures = Vec::new();
    let mut slowest = Duration::ZERO;
    let mut sizes = Vec::new();
    for n in 3..=5 {
        for i in 0..100u64 {
            let seed = 1000 * n as u64 + i;
            let params = GenParams {
                n,
                m: hull_params(n),
                seed,
                ..GenParams::default()
            };
            let s = match generate(Kind::Hull, &params) {
                Ok(g) => g.surface,
                Err(e) => {
                    failures.push(format!("n={n} seed={seed}: generator {e}"));
                    continue;
                }
            };
            sizes.push(s.vertices.len());
            let t = Instant::now();
            let verdict = check(&s);
            let elapsed = t.elapsed();
            slowest = slowest.max(elapsed);
            if elapsed >= Duration::from_secs(10) {
                failures.push(format!("n={n} seed={seed}: took {elapsed:?}"));
            }
            match verdict {
                Ok(Verdict::ConvexEmbedding { witness }) => {
                    let got: BTreeSet<IntHalfspace> =
                        witness.halfspaces.iter().map(int_halfspace).collect();
                    if got.len() != witness.halfspaces.len() || got != brute_force_hull(&s.vertices)
                    {
                        failures.push(format!(
                            "n={n} seed={seed}: witness differs from brute force"
                        ));
                    }
                }
                other => failures.push(format!("n={n} seed={seed}: {:?}", other.map(|v| v.tag()))),
            }
            pool.push(s);
        }
    }
    let max_v = sizes.iter().max().copied().unwrap_or(0);
    outcome(
        &failures,
        format!("300 hulls, up to {max_v} vertices, slowest check {slowest:.2?}"),
    )
}

fn incident(s: &PLSurface, violation: &Violation, v: usize) -> bool {
    match violation {
        Violation::ReflexRidge { ridge, facets } => {
            ridge.contains(&v) || facets.iter().any(|&f| s.facets[f].contains(&v))
        }
        Violation::Vertex { vertex } => *vertex == v,
        Violation::NonOrientable { ridge } => ridge.contains(&v),
    }
}

fn criterion_2(pool: &mut Vec<PLSurface>) -> Outcome {
    let mut failures = Vec::new();
    for n in 3..=4 {
        for i in 0..100u64 {
            let seed = 2000 * n as u64 + i;
            let params = GenParams {
                n,
                m: hull_params(n),
                seed,
                ..GenParams::default()
            };
            let g = match generate(Kind::PerturbedHull, &params) {
                Ok(g) => g,
                Err(e) => {
                    failures.push(format!("n={n} seed={seed}: generator {e}"));
                    continue;
                }
            };
            let marked = g.marked_vertex.unwrap();
            match check(&g.surface) {
                Ok(Verdict::NotLocallyConvex { violation, .. })
                    if incident(&g.surface, &violation, marked) => {}
                Ok(Verdict::NotLocallyConvex { violation, .. }) => failures.push(format!(
                    "n={n} seed={seed}: {violation:?} not incident to {marked}"
                )),
                other => failures.push(format!(
                    "n={n} seed={seed}: false accept {:?}",
                    other.map(|v| v.tag())
                )),
            }
            pool.push(g.surface);
        }
    }
    outcome(
        &failures,
        "200 perturbed hulls rejected at the moved vertex".into(),
    )
}

fn criterion_3(pool: &mut Vec<PLSurface>, positive: &mut Vec<(PLSurface, Verdict)>) -> Outcome {
    let mut failures = Vec::new();
    let mut tags = BTreeSet::new();
    for i in 0..50u64 {
        let lineality = (i % 4) as usize;
        let seed = 3000 + i;
        let params = GenParams {
            n: 3,
            m: 6,
            lineality,
            seed,
            ..GenParams::default()
        };
        let s = match generate(Kind::SphCone, &params) {
            Ok(g) => g.surface,
            Err(e) => {
                failures.push(format!("seed={seed}: generator {e}"));
                continue;
            }
        };
        let expected_tag = match lineality {
            3 => "GreatSubsphere",
            2 => "GluedHemispheres",
            _ => "ConvexConeBoundary",
        };
        match check(&s) {
            Ok(v) if v.is_positive() => {
                let w = v.witness().unwrap();
                let jn = v.jn().unwrap();
                if directrix_of_cone(w).dim() != lineality
                    || jn.directrix_dim != lineality as i64 - 1
                {
                    failures.push(format!(
                        "seed={seed}: lineality {lineality} recovered as {}",
                        jn.directrix_dim + 1
                    ));
                }
                if v.tag() != expected_tag {
                    failures.push(format!(
                        "seed={seed}: lineality {lineality} tagged {}",
                        v.tag()
                    ));
                }
                if lineality == 2 && jn.generatrix.as_ref().map(|g| g.facets.len()) != Some(2) {
                    failures.push(format!("seed={seed}: lineality 2 section is not two cells"));
                }
                tags.insert(v.tag());
                positive.push((s.clone(), v));
            }
            other => failures.push(format!("seed={seed}: {:?}", other.map(|v| v.tag()))),
        }
        pool.push(s);
    }
    outcome(&failures, format!("50 cones in S^3, tags seen {tags:?}"))
}

fn criterion_4(positive: &[(PLSurface, Verdict)]) -> Outcome {
    let mut failures = Vec::new();
    for (k, (s, single)) in positive.iter().enumerate() {
        let double = double_cover(s);
        match check(&double) {
            Ok(v) if v.is_positive() => {
                let m = v.jn().unwrap().multiplicity;
                if m != 2 {
                    failures.push(format!("instance {k}: multiplicity {m}"));
                }
                let a = serde_json::to_string(&witness_json(single.witness().unwrap())).unwrap();
                let b = serde_json::to_string(&witness_json(v.witness().unwrap())).unwrap();
                if a != b {
                    failures.push(format!("instance {k}: witness blocks differ"));
                }
            }
            other => failures.push(format!("instance {k}: {:?}", other.map(|v| v.tag()))),
        }
    }
    outcome(&failures, format!("{} double covers", positive.len()))
}

fn criterion_5(pool: &[PLSurface]) -> Outcome {
    let mut failures = Vec::new();
    let mut vertices = 0;
    let mut recursive = 0;
    for (k, s) in pool.iter().enumerate() {
        match compare_vertex_checks(s) {
            Ok(count) => {
                vertices += count;
                if s.ambient_dim >= 4 {
                    recursive += count;
                }
            }
            Err(e) => failures.push(format!("instance {k} (n={}): {e}", s.ambient_dim)),
        }
    }
    outcome(
        &failures,
        format!(
            "{} instances, {vertices} vertices, {recursive} through the n >= 4 recursion",
            pool.len()
        ),
    )
}

fn random_int_vector(rng: &mut ChaCha8Rng, len: usize, bound: i64) -> Vec<Q> {
    (0..len)
        .map(|_| Q::from_integer(rng.gen_range(-bound..=bound).into()))
        .collect()
}

fn to_vector(q: &[Q]) -> Vector {
    Vector::new(q.to_vec())
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    let mut arcs = 0;
    for i in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(6000 + i);
        let dim = if i % 2 == 0 { 3 } else { 4 };
        // A random open cone, made nonempty by orienting every halfspace
        // away from a random interior direction.
        let inside = loop {
            let p = random_int_vector(&mut rng, dim, 5);
            if p.iter().any(|x| !x.is_zero()) {
                break p;
            }
        };
        let k = rng.gen_range(1..=dim + 1);
        let mut funcs: Vec<Vec<Q>> = Vec::new();
        while funcs.len() < k {
            let n = random_int_vector(&mut rng, dim, 5);
            let d = dot(&n, &inside);
            if d.is_zero() {
                continue;
            }
            funcs.push(if d.is_positive() {
                n.into_iter().map(|x| -x).collect()
            } else {
                n
            });
        }
        let witness = match ConeWitness::new(
            Mode::Spherical,
            funcs.iter().map(|n| Hyperplane {
                normal: to_vector(n),
                offset: Q::zero(),
            }),
        ) {
            Ok(w) => w,
            Err(e) => {
                failures.push(format!("seed {i}: witness {e}"));
                continue;
            }
        };
        let outside = |rng: &mut ChaCha8Rng| loop {
            let x = random_int_vector(rng, dim, 6);
            if x.iter().any(|c| !c.is_zero()) && !in_open_cone(&funcs, &x) {
                break x;
            }
        };
        // Every tenth triple is antipodal; both points must avoid the cone.
        let antipodal = i % 10 == 3;
        let x = loop {
            let x = outside(&mut rng);
            let minus: Vec<Q> = x.iter().map(|c| -c).collect();
            if !antipodal || !in_open_cone(&funcs, &minus) {
                break x;
            }
        };
        let x2 = if antipodal {
            x.iter().map(|c| -c).collect()
        } else {
            outside(&mut rng)
        };
        let arc = match a_convexity_probe(&witness, &to_vector(&x), &to_vector(&x2)) {
            Ok(a) => a,
            Err(e) => {
                failures.push(format!("seed {i}: probe {e}"));
                continue;
            }
        };
        arcs += 1;
        let (start, end, via) = (
            arc.start.coords().to_vec(),
            arc.end.coords().to_vec(),
            arc.via.coords().to_vec(),
        );
        if start != x || end != x2 {
            failures.push(format!("seed {i}: endpoints changed"));
        }
        // Endpoints, midpoint and a sampling of each sector, by exact signs.
        let mut samples = vec![start.clone(), end.clone(), via.clone()];
        for (a, b) in [(&start, &via), (&via, &end)] {
            for t in 1..16i64 {
                let (l, m) = (Q::from_integer(t.into()), Q::from_integer((16 - t).into()));
                samples.push(
                    a.iter()
                        .zip(b.iter())
                        .map(|(p, q)| &l * p + &m * q)
                        .collect(),
                );
            }
        }
        if samples.iter().any(|y| in_open_cone(&funcs, y)) {
            failures.push(format!("seed {i}: arc meets the open cone"));
        }
        if !arc.verify(&witness) {
            failures.push(format!("seed {i}: certificate does not verify"));
        }
    }
    outcome(&failures, format!("{arcs} arcs in S^2 and S^3"))
}

fn criterion_7() -> Outcome {
    let params = GenParams {
        polygon: Polygon::Pentagram,
        ..GenParams::default()
    };
    let s = match generate(Kind::CylinderTruncated, &params) {
        Ok(g) => g.surface,
        Err(e) => {
            return Outcome {
                pass: false,
                detail: format!("generator {e}"),
            }
        }
    };
    // The cross-section winds twice around the origin, so the cylinder
    // overlaps itself. Winding number by signed crossings of the ray y = 0,
    // x > 0.
    let section: Vec<&Vector> = s
        .vertices
        .iter()
        .filter(|v| v.coords()[2].is_zero())
        .collect();
    let k = section.len();
    let mut winding = 0i64;
    for j in 0..k {
        let (a, b) = (section[j].coords(), section[(j + 1) % k].coords());
        let up = !a[1].is_positive() && b[1].is_positive();
        let down = a[1].is_positive() && !b[1].is_positive();
        if up || down {
            // x where the edge meets y = 0, compared with 0 without dividing.
            let num = &a[0] * &b[1] - &b[0] * &a[1];
            let den = &b[1] - &a[1];
            if (num * den).is_positive() {
                winding += if up { 1 } else { -1 };
            }
        }
    }
    match check(&s) {
        Ok(Verdict::BoundaryPresentNoGlobalClaim(report)) => {
            let all_interior_convex = report.locally_convex()
                && report.vertices.iter().all(|v| v.convex)
                && !report.ridges.is_empty();
            Outcome {
                pass: all_interior_convex && winding.abs() == 2,
                detail: format!(
                    "{} interior ridges and {} interior vertices convex, section winding number {winding}",
                    report.ridges.len(),
                    report.vertices.len()
                ),
            }
        }
        other => Outcome {
            pass: false,
            detail: format!("{:?}", other.map(|v| v.tag())),
        },
    }
}

fn scan_for_floats(dir: &Path, hits: &mut Vec<String>) {
    let Ok(entries) = std::fs::read_dir(dir) else {
        return;
    };
    for entry in entries.flatten() {
        let path = entry.path();
        if path.is_dir() {
            scan_for_floats(&path, hits);
        } else if path.extension().is_some_and(|e| e == "rs") {
            let text = std::fs::read_to_string(&path).unwrap_or_default();
            for (no, line) in text.lines().enumerate() {
                let words = line.split(|c: char| !c.is_alphanumeric() && c != '_');
                if words
                    .into_iter()
                    .any(|w| w == "f32" || w == "f64" || w == "as_secs_f64" || w == "as_secs_f32")
                {
                    hits.push(format!("{}:{}", path.display(), no + 1));
                }
            }
        }
    }
}

fn criterion_8() -> Outcome {
    let root = Path::new(env!("CARGO_MANIFEST_DIR"));
    let mut hits = Vec::new();
    scan_for_floats(&root.join("src"), &mut hits);
    scan_for_floats(&root.join("examples"), &mut hits);
    outcome(
        &hits,
        "no floating-point types in library, binary or examples".into(),
    )
}

fn main() -> ExitCode {
    let mut pool = Vec::new();
    let mut positive = Vec::new();
    let mut results: Vec<(usize, &str, Outcome)> = Vec::new();
    let run = |k: usize, name: &'static str, f: &mut dyn FnMut() -> Outcome| {
        let t = Instant::now();
        let o = f();
        eprintln!("criterion {k} finished in {:.1?}", t.elapsed());
        (k, name, o)
    };
    results.push(run(1, "hull soundness", &mut || criterion_1(&mut pool)));
    results.push(run(2, "rejection soundness", &mut || {
        criterion_2(&mut pool)
    }));
    results.push(run(3, "cone reconstruction", &mut || {
        criterion_3(&mut pool, &mut positive)
    }));
    results.push(run(4, "multiplicity law", &mut || criterion_4(&positive)));
    results.push(run(5, "vertex check equivalence", &mut || {
        criterion_5(&pool)
    }));
    results.push(run(6, "arc probe", &mut criterion_6));
    results.push(run(7, "truncated pentagram cylinder", &mut criterion_7));
    results.push(run(8, "exactness", &mut criterion_8));
    let mut all = true;
    for (k, name, o) in &results {
        all &= o.pass;
        println!(
            "{} criterion {k} ({name}): {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
