//! Integral triangles in which angle B is twice angle A.
//!
//! A triangle with sides `a`, `b`, `c` (opposite A, B, C) has B = 2A exactly
//! when `b² = a(a + c)` and the sides close up. The integral solutions are
//! `(ℓk², ℓkm, ℓ(m² − k²))` with `gcd(k, m) = 1` and `k < m < 2k`; the ones
//! whose bisector of B is integral additionally need `m | ℓ`.
//!
//! Modules:
//! - [`exactmath`]: gcd, square roots, coprime square splitting, rationals.
//! - [`triangle`]: the membership predicates, exact cosines, classification.
//! - [`bisector`]: segment lengths cut by the bisector of B.
//! - [`family`]: forward and inverse parametrization, enumeration.
//! - [`oracle`]: exhaustive search and the completeness comparison.
//!
//! All arithmetic is integer or exact rational. Sides are `u64`; pairwise
//! products are formed in `u128` and rationals use `i128`. Anything that
//! would overflow those widths returns an `Overflow` error rather than a
//! wrong value. The trigonometric checks square cosines, so they stay in
//! range for sides below about 2^20.

pub mod bisector;
pub mod exactmath;
pub mod family;
pub mod oracle;
pub mod triangle;

pub use bisector::{BisectorData, BisectorError};
pub use exactmath::{ExactError, Rational};
pub use family::{
    BisectorParamTriple, Branch, FamilyError, FamilyMember, ParamTriple, ParamViolation,
};
pub use oracle::{OracleReport, SearchMode, Which};
pub use triangle::{AngleClass, CosineTriple, Triangle, TriangleError};
