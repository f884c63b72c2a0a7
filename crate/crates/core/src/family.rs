//! Parametrization of the double-angle family.
//!
//! Every integral triangle with B = 2A is `(ℓk², ℓkm, ℓ(m² − k²))` for a
//! unique `(ℓ, k, m)` with `gcd(k, m) = 1` and `k < m < 2k`. Those whose
//! bisector of B is also integral are the ones with `m | ℓ`; writing
//! `ℓ = dm` gives `(dmk², dkm², dm(m² − k²))` with bisector `dk(m² − k²)` and
//! `|DC| = dk³`.
//!
//! The two-interval form `k² < m² < 2k²` or `2k² < m² < 4k²` collapses to the
//! single interval `k < m < 2k` because `m² = 2k²` has no integer solution.
//! The interval a member falls in survives as its [`Branch`].
//!
//! Perimeters are `ℓm(k + m)` and `dm²(k + m)`, which bound the enumerators.
//!
//! No member of the integral-bisector family is primitive: its side gcd is
//! `dm`, and `m > k ≥ 1` forces `m ≥ 2`.

use std::fmt;

use thiserror::Error;

use crate::bisector::BisectorData;
use crate::exactmath::{coprime_square_split, gcd, gcd3, Rational};
use crate::triangle::{is_double_angle_triangle, Triangle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameters: {0}")]
    InvalidParams(ParamViolation),
    #[error("triangle {0} does not have angle B twice angle A")]
    NotInFamily(Triangle),
    #[error("side lengths overflow 64 bits")]
    Overflow,
}

/// Which parameter constraints failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ParamViolation {
    pub zero_parameter: bool,
    /// `gcd(k, m)` when it is not one.
    pub common_factor: Option<u64>,
    pub out_of_range: bool,
}

impl ParamViolation {
    fn is_empty(&self) -> bool {
        !self.zero_parameter && self.common_factor.is_none() && !self.out_of_range
    }
}

impl fmt::Display for ParamViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.zero_parameter {
            parts.push("parameters must be positive".to_string());
        }
        if let Some(g) = self.common_factor {
            parts.push(format!("gcd(k, m) = {g}, expected 1"));
        }
        if self.out_of_range {
            parts.push("k < m < 2k does not hold".to_string());
        }
        f.write_str(&parts.join("; "))
    }
}

fn check_params(scale: u64, k: u64, m: u64) -> Result<(), FamilyError> {
    let mut v = ParamViolation::default();
    if scale == 0 || k == 0 || m == 0 {
        v.zero_parameter = true;
    } else {
        let g = gcd(k, m);
        if g != 1 {
            v.common_factor = Some(g);
        }
    }
    if !(k < m && u128::from(m) < 2 * u128::from(k)) {
        v.out_of_range = true;
    }
    if v.is_empty() {
        Ok(())
    } else {
        Err(FamilyError::InvalidParams(v))
    }
}

/// `(ℓ, k, m)` for `a = ℓk², b = ℓkm, c = ℓ(m² − k²)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamTriple {
    pub l: u64,
    pub k: u64,
    pub m: u64,
}

impl ParamTriple {
    pub fn new(l: u64, k: u64, m: u64) -> Result<Self, FamilyError> {
        check_params(l, k, m)?;
        Ok(ParamTriple { l, k, m })
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        check_params(self.l, self.k, self.m)
    }

    pub fn branch(&self) -> Branch {
        Branch::of(self.k, self.m)
    }

    /// The integral-bisector parameters, when `m` divides `ℓ`.
    pub fn bisector_params(&self) -> Option<BisectorParamTriple> {
        self.l.is_multiple_of(self.m).then(|| BisectorParamTriple {
            d: self.l / self.m,
            k: self.k,
            m: self.m,
        })
    }
}

impl fmt::Display for ParamTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "l={} k={} m={}", self.l, self.k, self.m)
    }
}

/// `(d, k, m)` for the integral-bisector family, where `ℓ = dm`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BisectorParamTriple {
    pub d: u64,
    pub k: u64,
    pub m: u64,
}

impl BisectorParamTriple {
    pub fn new(d: u64, k: u64, m: u64) -> Result<Self, FamilyError> {
        check_params(d, k, m)?;
        Ok(BisectorParamTriple { d, k, m })
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        check_params(self.d, self.k, self.m)
    }

    pub fn as_params(&self) -> Result<ParamTriple, FamilyError> {
        let l = self.d.checked_mul(self.m).ok_or(FamilyError::Overflow)?;
        ParamTriple::new(l, self.k, self.m)
    }
}

impl fmt::Display for BisectorParamTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={} k={} m={}", self.d, self.k, self.m)
    }
}

/// Which side of `m² = 2k²` the parameters fall on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `m² < 2k²`, equivalently `c < a`.
    CShorter,
    /// `m² > 2k²`, equivalently `c > a`.
    CLonger,
}

impl Branch {
    fn of(k: u64, m: u64) -> Branch {
        let (k, m) = (u128::from(k), u128::from(m));
        if m * m < 2 * k * k {
            Branch::CShorter
        } else {
            Branch::CLonger
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Branch::CShorter => "c-shorter",
            Branch::CLonger => "c-longer",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyMember {
    pub triangle: Triangle,
    pub params: ParamTriple,
    pub branch: Branch,
    pub bisector: Option<BisectorData>,
}

impl FamilyMember {
    pub fn perimeter(&self) -> u128 {
        self.triangle.perimeter()
    }
}

fn sides_from(l: u64, k: u64, m: u64) -> Option<Triangle> {
    let a = l.checked_mul(k.checked_mul(k)?)?;
    let b = l.checked_mul(k.checked_mul(m)?)?;
    let c = l.checked_mul(m.checked_mul(m)? - k * k)?;
    Triangle::new(a, b, c).ok()
}

/// `(ℓk², ℓkm, ℓ(m² − k²))`.
pub fn triangle_from_params(p: &ParamTriple) -> Result<Triangle, FamilyError> {
    p.validate()?;
    sides_from(p.l, p.k, p.m).ok_or(FamilyError::Overflow)
}

/// Builds the member with its five integer lengths: sides, `r = dk(m² − k²)`
/// and `|DC| = dk³`.
pub fn bisector_family_from_params(p: &BisectorParamTriple) -> Result<FamilyMember, FamilyError> {
    let params = p.as_params()?;
    let triangle = triangle_from_params(&params)?;
    let (d, k, m) = (p.d, p.k, p.m);
    let r = k
        .checked_mul(m * m - k * k)
        .and_then(|x| x.checked_mul(d))
        .ok_or(FamilyError::Overflow)?;
    let dc = k
        .checked_mul(k)
        .and_then(|x| x.checked_mul(k))
        .and_then(|x| x.checked_mul(d))
        .ok_or(FamilyError::Overflow)?;
    let r = Rational::from(r);
    Ok(FamilyMember {
        triangle,
        params,
        branch: params.branch(),
        bisector: Some(BisectorData {
            ad: r,
            dc: Rational::from(dc),
            r: Some(r),
        }),
    })
}

/// Recovers `(ℓ, k, m)`: `ℓ = gcd(a, c)`, then `a/ℓ = k²` and
/// `(a + c)/ℓ = m²`.
pub fn params_from_triangle(t: &Triangle) -> Result<ParamTriple, FamilyError> {
    if !is_double_angle_triangle(t) {
        return Err(FamilyError::NotInFamily(*t));
    }
    let (a, b, c) = t.sides();
    let l = gcd(a, c);
    let a1 = a / l;
    let a1_plus_c1 = (c / l).checked_add(a1).ok_or(FamilyError::Overflow)?;
    let (k, m) = coprime_square_split(a1, a1_plus_c1).map_err(|_| FamilyError::NotInFamily(*t))?;
    let params = ParamTriple::new(l, k, m).map_err(|_| FamilyError::NotInFamily(*t))?;
    if u128::from(l) * u128::from(k) * u128::from(m) != u128::from(b) {
        return Err(FamilyError::NotInFamily(*t));
    }
    Ok(params)
}

/// `gcd(a, b, c)`; equals `ℓ` for any family member.
pub fn family_gcd(t: &Triangle, p: &ParamTriple) -> u64 {
    debug_assert_eq!(triangle_from_params(p).ok(), Some(*t));
    let (a, b, c) = t.sides();
    gcd3(a, b, c)
}

pub fn is_primitive(t: &Triangle) -> bool {
    let (a, b, c) = t.sides();
    gcd3(a, b, c) == 1
}

/// Coprime pairs `k < m < 2k` with `m(k + m) ≤ limit`, in `(k, m)` order.
fn coprime_pairs(limit: u128) -> impl Iterator<Item = (u64, u64)> {
    (2u64..)
        .take_while(move |&k| u128::from(k + 1) * u128::from(2 * k + 1) <= limit)
        .flat_map(move |k| {
            (k + 1..2 * k)
                .take_while(move |&m| u128::from(m) * u128::from(k + m) <= limit)
                .filter(move |&m| gcd(k, m) == 1)
                .map(move |m| (k, m))
        })
}

fn finish(mut members: Vec<FamilyMember>) -> Vec<FamilyMember> {
    members.sort_by_key(|member| member.triangle.sort_key());
    debug_assert!(
        members.windows(2).all(|w| w[0].triangle != w[1].triangle),
        "distinct parameters produced the same triangle"
    );
    members
}

/// Every member with perimeter at most `max_perimeter`, sorted by
/// `(perimeter, a, b)`. `primitive_only` keeps `ℓ = 1`.
pub fn enumerate_family(max_perimeter: u64, primitive_only: bool) -> Vec<FamilyMember> {
    let limit = u128::from(max_perimeter);
    let mut members = Vec::new();
    for (k, m) in coprime_pairs(limit) {
        let base = u128::from(m) * u128::from(k + m);
        let max_l = if primitive_only {
            1
        } else {
            (limit / base) as u64
        };
        for l in 1..=max_l {
            let params = ParamTriple { l, k, m };
            let triangle = sides_from(l, k, m).expect("perimeter bound keeps sides in range");
            members.push(FamilyMember {
                triangle,
                params,
                branch: params.branch(),
                bisector: None,
            });
        }
    }
    finish(members)
}

/// Every integral-bisector member with perimeter at most `max_perimeter`,
/// sorted like [`enumerate_family`]. With `primitive_only` the result is
/// always empty (see the module docs).
pub fn enumerate_bisector_family(max_perimeter: u64, primitive_only: bool) -> Vec<FamilyMember> {
    if primitive_only {
        return Vec::new();
    }
    let limit = u128::from(max_perimeter);
    let mut members = Vec::new();
    for (k, m) in coprime_pairs(limit) {
        let base = u128::from(m) * u128::from(m) * u128::from(k + m);
        if base > limit {
            continue;
        }
        for d in 1..=(limit / base) as u64 {
            let member = bisector_family_from_params(&BisectorParamTriple { d, k, m })
                .expect("enumerated parameters are valid");
            members.push(member);
        }
    }
    finish(members)
}
