//! The bisector BD of angle B, which meets side AC at D.
//!
//! For any triangle `|AD| = bc/(a+c)` and `|DC| = ab/(a+c)`. When B = 2A the
//! triangle ABD is isosceles with apex D, so the bisector length `|BD|`
//! equals `|AD|`.

use thiserror::Error;

use crate::exactmath::{ExactError, Rational};
use crate::triangle::{is_double_angle_triangle, satisfies_triangle_inequalities, Triangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum BisectorError {
    #[error("sides ({0}, {1}, {2}) violate a strict triangle inequality")]
    DegenerateTriangle(u64, u64, u64),
    #[error("triangle {0} does not have angle B twice angle A")]
    NotInFamily(Triangle),
    #[error("bisector length {0} is not an integer")]
    NotIntegral(Rational),
    #[error("sub-triangle needs an integral bisector, got {0}")]
    NotIntegralBisector(Rational),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
}

impl From<ExactError> for BisectorError {
    fn from(_: ExactError) -> Self {
        BisectorError::Overflow
    }
}

/// Segment lengths cut by the bisector of angle B.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BisectorData {
    /// `|AD|`
    pub ad: Rational,
    /// `|DC|`
    pub dc: Rational,
    /// `|BD|`, known only for triangles with B = 2A.
    pub r: Option<Rational>,
}

fn ratio(num: u128, den: u128) -> Result<Rational, BisectorError> {
    let num = i128::try_from(num).map_err(|_| BisectorError::Overflow)?;
    let den = i128::try_from(den).map_err(|_| BisectorError::Overflow)?;
    Ok(Rational::new(num, den)?)
}

/// `|AD| = bc/(a+c)` and `|DC| = ab/(a+c)`; `r` is left unset.
pub fn bisector_segments(t: &Triangle) -> Result<BisectorData, BisectorError> {
    if !satisfies_triangle_inequalities(t) {
        let (a, b, c) = t.sides();
        return Err(BisectorError::DegenerateTriangle(a, b, c));
    }
    let (a, b, c) = (u128::from(t.a()), u128::from(t.b()), u128::from(t.c()));
    Ok(BisectorData {
        ad: ratio(b * c, a + c)?,
        dc: ratio(a * b, a + c)?,
        r: None,
    })
}

fn require_family(t: &Triangle) -> Result<(), BisectorError> {
    if is_double_angle_triangle(t) {
        Ok(())
    } else {
        Err(BisectorError::NotInFamily(*t))
    }
}

/// Segments plus the bisector length `r = |AD|`.
pub fn family_bisector(t: &Triangle) -> Result<BisectorData, BisectorError> {
    require_family(t)?;
    let mut data = bisector_segments(t)?;
    data.r = Some(data.ad);
    Ok(data)
}

/// The bisector length as an integer, if `(a + c)` divides `bc`.
pub fn integral_bisector_length(t: &Triangle) -> Result<u64, BisectorError> {
    let data = family_bisector(t)?;
    let r = data.ad;
    r.to_integer()
        .and_then(|n| u64::try_from(n).ok())
        .ok_or(BisectorError::NotIntegral(r))
}

/// The triangle BDC relabelled so that its own double angle (at D) sits in
/// position B: `(|DC|, |BC|, |BD|)`.
pub fn sub_triangle(t: &Triangle) -> Result<Triangle, BisectorError> {
    let data = family_bisector(t)?;
    let r = data.ad;
    let as_side = |q: Rational| q.to_integer().and_then(|n| u64::try_from(n).ok());
    match (as_side(data.dc), as_side(r)) {
        (Some(dc), Some(r)) => {
            Ok(Triangle::new(dc, t.a(), r).expect("bisector segments of a triangle are positive"))
        }
        _ => Err(BisectorError::NotIntegralBisector(r)),
    }
}
