//! Integer triangles, the double-angle condition `b² = a(a + c)`, and exact
//! cosine trigonometry.
//!
//! Side labels are positional: `a` is opposite angle A, `b` opposite B and
//! `c` opposite C. The double-angle condition singles out B = 2A, so
//! `(4, 6, 5)` and `(4, 5, 6)` are different triangles here.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::exactmath::{ExactError, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum TriangleError {
    #[error("side lengths must be positive")]
    ZeroSide,
    #[error("sides ({0}, {1}, {2}) violate a strict triangle inequality")]
    DegenerateTriangle(u64, u64, u64),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
}

impl From<ExactError> for TriangleError {
    fn from(_: ExactError) -> Self {
        TriangleError::Overflow
    }
}

/// Three positive integer side lengths.
///
/// Ordered by perimeter, then `a`, then `b` (then `c`, which is implied by the
/// first three).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Triangle {
    a: u64,
    b: u64,
    c: u64,
}

impl Triangle {
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self, TriangleError> {
        if a == 0 || b == 0 || c == 0 {
            return Err(TriangleError::ZeroSide);
        }
        Ok(Triangle { a, b, c })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn sides(&self) -> (u64, u64, u64) {
        (self.a, self.b, self.c)
    }

    pub fn perimeter(&self) -> u128 {
        u128::from(self.a) + u128::from(self.b) + u128::from(self.c)
    }

    pub fn sort_key(&self) -> (u128, u64, u64, u64) {
        (self.perimeter(), self.a, self.b, self.c)
    }

    /// Multiplies every side by `factor`.
    pub fn scaled(&self, factor: u64) -> Option<Triangle> {
        if factor == 0 {
            return None;
        }
        Some(Triangle {
            a: self.a.checked_mul(factor)?,
            b: self.b.checked_mul(factor)?,
            c: self.c.checked_mul(factor)?,
        })
    }
}

impl Ord for Triangle {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Triangle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// Shape of a triangle by its largest angle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AngleClass {
    Acute,
    RightAtA,
    RightAtB,
    RightAtC,
    ObtuseAtA,
    ObtuseAtB,
    ObtuseAtC,
}

impl AngleClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            AngleClass::Acute => "acute",
            AngleClass::RightAtA => "right-at-a",
            AngleClass::RightAtB => "right-at-b",
            AngleClass::RightAtC => "right-at-c",
            AngleClass::ObtuseAtA => "obtuse-at-a",
            AngleClass::ObtuseAtB => "obtuse-at-b",
            AngleClass::ObtuseAtC => "obtuse-at-c",
        }
    }

    pub fn is_right(&self) -> bool {
        matches!(
            self,
            AngleClass::RightAtA | AngleClass::RightAtB | AngleClass::RightAtC
        )
    }
}

impl fmt::Display for AngleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CosineTriple {
    pub cos_a: Rational,
    pub cos_b: Rational,
    pub cos_c: Rational,
}

fn sq(x: u64) -> u128 {
    u128::from(x) * u128::from(x)
}

pub fn satisfies_triangle_inequalities(t: &Triangle) -> bool {
    let (a, b, c) = (u128::from(t.a), u128::from(t.b), u128::from(t.c));
    a < b + c && b < a + c && c < a + b
}

/// `b² = a(a + c)` in exact integer arithmetic.
pub fn double_angle_condition(t: &Triangle) -> bool {
    let a = u128::from(t.a);
    let rhs = a.checked_mul(a + u128::from(t.c));
    rhs == Some(sq(t.b))
}

/// Given `b² = a(a + c)`, the sides close into a triangle iff `c ≤ a` or
/// `a < c < 3a`.
pub fn formable_given_condition(a: u64, c: u64) -> bool {
    let (a, c) = (u128::from(a), u128::from(c));
    c <= a || (a < c && c < 3 * a)
}

/// Angle B is exactly twice angle A.
pub fn is_double_angle_triangle(t: &Triangle) -> bool {
    double_angle_condition(t) && satisfies_triangle_inequalities(t)
}

fn require_valid(t: &Triangle) -> Result<(), TriangleError> {
    if satisfies_triangle_inequalities(t) {
        Ok(())
    } else {
        Err(TriangleError::DegenerateTriangle(t.a, t.b, t.c))
    }
}

/// Law of cosines for the angle opposite `opposite`, between `s1` and `s2`.
fn law_of_cosines(opposite: u64, s1: u64, s2: u64) -> Result<Rational, TriangleError> {
    let num = i128::try_from(sq(s1))
        .ok()
        .and_then(|x| x.checked_add(i128::try_from(sq(s2)).ok()?))
        .and_then(|x| x.checked_sub(i128::try_from(sq(opposite)).ok()?))
        .ok_or(TriangleError::Overflow)?;
    let den = i128::from(s1)
        .checked_mul(i128::from(s2))
        .and_then(|p| p.checked_mul(2))
        .ok_or(TriangleError::Overflow)?;
    Ok(Rational::new(num, den)?)
}

/// Exact cosines of all three angles.
pub fn cosines(t: &Triangle) -> Result<CosineTriple, TriangleError> {
    require_valid(t)?;
    Ok(CosineTriple {
        cos_a: law_of_cosines(t.a, t.b, t.c)?,
        cos_b: law_of_cosines(t.b, t.c, t.a)?,
        cos_c: law_of_cosines(t.c, t.a, t.b)?,
    })
}

/// Trigonometric confirmation of B = 2A: `cos B = 2cos²A − 1` and
/// `cos A = b/(2a)`, both from the law-of-cosines values.
pub fn verify_double_angle_exact(t: &Triangle) -> Result<bool, TriangleError> {
    let cos = cosines(t)?;
    let two_cos_sq_minus_one = cos
        .cos_a
        .checked_mul(&cos.cos_a)?
        .checked_mul_int(2)?
        .checked_sub(&Rational::ONE)?;
    let half_ratio = Rational::new(i128::from(t.b), 2 * i128::from(t.a))?;
    Ok(cos.cos_b == two_cos_sq_minus_one && cos.cos_a == half_ratio)
}

/// `c = a·cos B + b·cos A`, which holds for every triangle.
pub fn projection_identity_check(t: &Triangle) -> Result<bool, TriangleError> {
    let cos = cosines(t)?;
    let rhs = cos
        .cos_b
        .checked_mul_int(i128::from(t.a))?
        .checked_add(&cos.cos_a.checked_mul_int(i128::from(t.b))?)?;
    Ok(rhs == Rational::from(t.c))
}

/// Compares `x²` against `y² + z²`.
fn square_vs_sum(x: u64, y: u64, z: u64) -> Ordering {
    match sq(y).checked_add(sq(z)) {
        Some(sum) => sq(x).cmp(&sum),
        None => Ordering::Less,
    }
}

pub fn classify(t: &Triangle) -> Result<AngleClass, TriangleError> {
    require_valid(t)?;
    let at_a = square_vs_sum(t.a, t.b, t.c);
    let at_b = square_vs_sum(t.b, t.a, t.c);
    let at_c = square_vs_sum(t.c, t.a, t.b);
    // At most one angle can be right or obtuse.
    let class = match (at_a, at_b, at_c) {
        (Ordering::Greater, _, _) => AngleClass::ObtuseAtA,
        (_, Ordering::Greater, _) => AngleClass::ObtuseAtB,
        (_, _, Ordering::Greater) => AngleClass::ObtuseAtC,
        (Ordering::Equal, _, _) => AngleClass::RightAtA,
        (_, Ordering::Equal, _) => AngleClass::RightAtB,
        (_, _, Ordering::Equal) => AngleClass::RightAtC,
        _ => AngleClass::Acute,
    };
    Ok(class)
}
