//! Exact rational geometry: vectors, spherical points, hyperplanes, subspaces
//! and the sign predicates everything else is built on.
//!
//! Nothing in here touches floating point. Determinants and ranks go through
//! fraction-free elimination on integerized rows (see [`linalg`]), and
//! feasibility questions go through the exact simplex in [`lp`].

pub mod linalg;
pub mod lp;

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar, always in reduced form with positive denominator.
pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn sign(s: &Scalar) -> i8 {
    if s.is_zero() {
        0
    } else if s.is_positive() {
        1
    } else {
        -1
    }
}

/// Parses the `p/q` literal syntax (`q` omitted when 1). Returns `None` on
/// malformed input or a zero denominator.
pub fn parse_rational(text: &str) -> Option<Scalar> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let valid = |s: &str| {
        let digits = s.strip_prefix('-').unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num) || !valid(den) || den.starts_with('-') {
        return None;
    }
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Scalar::new(n, d))
}

pub fn format_rational(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector(Vec<Scalar>);

impl Vector {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Vector(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn zeros(n: usize) -> Self {
        Vector(vec![Scalar::zero(); n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Scalar::one();
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, k: &Scalar) -> Vector {
        Vector(self.0.iter().map(|c| c * k).collect())
    }

    /// `self + k * other`
    pub fn add_scaled(&self, k: &Scalar, other: &Vector) -> Vector {
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + k * b)
                .collect(),
        )
    }

    pub fn check_len(&self, n: usize) -> Result<()> {
        if self.len() == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: n,
                found: self.len(),
            })
        }
    }

    /// Smallest integer vector that is a positive multiple of `self`.
    pub fn primitive(&self) -> Vector {
        if self.is_zero() {
            return self.clone();
        }
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let gcd = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        Vector(
            ints.into_iter()
                .map(|c| Scalar::from_integer(c / &gcd))
                .collect(),
        )
    }

    /// Sum of vectors; `n` is the length used for an empty iterator.
    pub fn sum<'a>(n: usize, vs: impl IntoIterator<Item = &'a Vector>) -> Vector {
        vs.into_iter().fold(Vector::zeros(n), |acc, v| &acc + v)
    }

    pub fn average<'a>(n: usize, vs: impl IntoIterator<Item = &'a Vector>) -> Vector {
        let vs: Vec<&Vector> = vs.into_iter().collect();
        let count = int(vs.len() as i64);
        Vector::sum(n, vs).scale(&(Scalar::one() / count))
    }

    /// Appends a homogenizing coordinate.
    pub fn lifted(&self, last: Scalar) -> Vector {
        let mut c = self.0.clone();
        c.push(last);
        Vector(c)
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl<'a> Add<&'a Vector> for &'a Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl<'a> Sub<&'a Vector> for &'a Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A point of the sphere, stored as the primitive integer representative of
/// its ray. Two points are equal iff their rays are positive multiples.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SphPoint(Vector);

impl SphPoint {
    pub fn ray(&self) -> &Vector {
        &self.0
    }

    pub fn into_ray(self) -> Vector {
        self.0
    }
}

pub fn canonical_sph(v: &Vector) -> Result<SphPoint> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(SphPoint(v.primitive()))
}

pub fn antipodal(p: &SphPoint, q: &SphPoint) -> bool {
    p.0 == -&q.0
}

/// `normal · x = offset`. Spherical hyperplanes have offset 0.
///
/// An oriented hyperplane doubles as the halfspace `normal · x <= offset`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hyperplane {
    pub normal: Vector,
    pub offset: Scalar,
}

impl Hyperplane {
    pub fn new(normal: Vector, offset: Scalar) -> Result<Self> {
        if normal.is_zero() {
            return Err(Error::Degenerate("zero hyperplane normal".into()));
        }
        Ok(Hyperplane { normal, offset })
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    pub fn eval(&self, p: &Vector) -> Scalar {
        self.normal.dot(p) - &self.offset
    }

    pub fn side(&self, p: &Vector) -> Result<i8> {
        p.check_len(self.dim())?;
        Ok(sign(&self.eval(p)))
    }

    pub fn contains(&self, p: &Vector) -> bool {
        self.eval(p).is_zero()
    }

    pub fn flipped(&self) -> Hyperplane {
        Hyperplane {
            normal: -&self.normal,
            offset: -&self.offset,
        }
    }

    /// Primitive integer scaling of `(normal, offset)` by a positive factor.
    /// Keeps the orientation.
    pub fn canonical_oriented(&self) -> Hyperplane {
        let joint = self.normal.lifted(self.offset.clone()).primitive();
        let mut coords = joint.into_coords();
        let offset = coords.pop().expect("non-empty");
        Hyperplane {
            normal: Vector(coords),
            offset,
        }
    }

    /// Orientation-free canonical form: first nonzero normal entry positive.
    pub fn canonical(&self) -> Hyperplane {
        let h = self.canonical_oriented();
        let first = h.normal.0.iter().find(|c| !c.is_zero()).map(sign);
        if first == Some(-1) {
            h.flipped()
        } else {
            h
        }
    }

    pub fn same_hyperplane(&self, other: &Hyperplane) -> bool {
        self.canonical() == other.canonical()
    }
}

/// Linearly independent spanning set of a linear subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    pub basis: Vec<Vector>,
    pub ambient_dim: usize,
}

impl SubspaceBasis {
    /// Keeps a maximal independent subset of `vectors`, in order.
    pub fn spanned_by(vectors: &[Vector], ambient_dim: usize) -> Result<Self> {
        let mut basis: Vec<Vector> = Vec::new();
        for v in vectors {
            v.check_len(ambient_dim)?;
            basis.push(v.clone());
            if linalg::rank(&basis) < basis.len() {
                basis.pop();
            }
        }
        Ok(SubspaceBasis { basis, ambient_dim })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &Vector) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.clone());
        linalg::rank(&rows) == self.dim()
    }

    /// Canonical representative: reduced row echelon form with primitive rows.
    pub fn canonicalized(&self) -> SubspaceBasis {
        SubspaceBasis {
            basis: linalg::rref(&self.basis, self.ambient_dim)
                .into_iter()
                .map(|r| r.primitive())
                .collect(),
            ambient_dim: self.ambient_dim,
        }
    }
}

/// Sign of `det[p1 - p0, ..., pn - p0]` for `n + 1` points of `R^n`.
pub fn orientation(pts: &[Vector]) -> Result<i8> {
    let n = pts.len().saturating_sub(1);
    for p in pts {
        p.check_len(n)?;
    }
    if pts.is_empty() {
        return Ok(1);
    }
    let rows: Vec<Vector> = pts[1..].iter().map(|p| p - &pts[0]).collect();
    Ok(linalg::det_sign(&rows))
}

/// The unique hyperplane through `n` affinely independent points of `R^n`,
/// in orientation-free canonical form.
pub fn hyperplane_through(pts: &[Vector]) -> Result<Hyperplane> {
    let n = pts.len();
    if n == 0 {
        return Err(Error::Degenerate("no points".into()));
    }
    for p in pts {
        p.check_len(n)?;
    }
    let diffs: Vec<Vector> = pts[1..].iter().map(|p| p - &pts[0]).collect();
    let kernel = linalg::nullspace(&diffs, n);
    if kernel.len() != 1 {
        return Err(Error::Degenerate("points are affinely dependent".into()));
    }
    let normal = kernel.into_iter().next().expect("one kernel vector");
    let offset = normal.dot(&pts[0]);
    Ok(Hyperplane { normal, offset }.canonical())
}

/// Hyperplane through the origin spanned by `vectors` (which must span a
/// subspace of codimension exactly one).
pub fn linear_hyperplane(vectors: &[Vector], ambient_dim: usize) -> Result<Hyperplane> {
    for v in vectors {
        v.check_len(ambient_dim)?;
    }
    let kernel = linalg::nullspace(vectors, ambient_dim);
    if kernel.len() != 1 {
        return Err(Error::Degenerate(format!(
            "vectors span codimension {}",
            kernel.len()
        )));
    }
    let normal = kernel.into_iter().next().expect("one kernel vector");
    Ok(Hyperplane {
        normal,
        offset: Scalar::zero(),
    }
    .canonical())
}

pub fn side(h: &Hyperplane, p: &Vector) -> Result<i8> {
    h.side(p)
}

pub fn rank(vectors: &[Vector]) -> Result<usize> {
    if let Some(first) = vectors.first() {
        for v in vectors {
            v.check_len(first.len())?;
        }
    }
    Ok(linalg::rank(vectors))
}

pub fn orthogonal_complement(b: &SubspaceBasis, ambient_dim: usize) -> Result<SubspaceBasis> {
    for v in &b.basis {
        v.check_len(ambient_dim)?;
    }
    Ok(SubspaceBasis {
        basis: linalg::nullspace(&b.basis, ambient_dim),
        ambient_dim,
    })
}
