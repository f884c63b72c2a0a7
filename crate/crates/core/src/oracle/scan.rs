//! Exhaustive searches that know only the membership predicates.
//!
//! Nothing in this file may depend on the parametrization; these scans are the
//! independent side of every completeness check.

use crate::exactmath::as_perfect_square;
use crate::triangle::{is_double_angle_triangle, Triangle};

fn bisector_divides(t: &Triangle) -> bool {
    let (a, b, c) = (u128::from(t.a()), u128::from(t.b()), u128::from(t.c()));
    (b * c) % (a + c) == 0
}

/// Every `(a, c)` pair with `a + c < max_perimeter`, solving `b² = a(a + c)`
/// for `b` by a perfect-square test. Quadratic in the bound.
pub fn brute_force_family(max_perimeter: u64) -> Vec<Triangle> {
    let bound = u128::from(max_perimeter);
    let mut found = Vec::new();
    for a in 1..max_perimeter {
        for c in 1..max_perimeter - a {
            let (a_w, c_w) = (u128::from(a), u128::from(c));
            let Ok(b) = as_perfect_square(a_w * (a_w + c_w)) else {
                continue;
            };
            if a_w + b + c_w > bound {
                continue;
            }
            let t = Triangle::new(a, b as u64, c).expect("positive sides");
            if is_double_angle_triangle(&t) {
                found.push(t);
            }
        }
    }
    found.sort();
    found
}

pub fn brute_force_bisector_family(max_perimeter: u64) -> Vec<Triangle> {
    let mut found = brute_force_family(max_perimeter);
    found.retain(bisector_divides);
    found
}

/// Plain triple loop over every `(a, b, c)` with `a + b + c ≤ max_perimeter`.
/// Cubic; meant for bounds of a few hundred.
pub fn naive_family(max_perimeter: u64) -> Vec<Triangle> {
    let mut found = Vec::new();
    for a in 1..max_perimeter {
        for b in 1..max_perimeter - a {
            for c in 1..=max_perimeter - a - b {
                let t = Triangle::new(a, b, c).expect("positive sides");
                if is_double_angle_triangle(&t) {
                    found.push(t);
                }
            }
        }
    }
    found.sort();
    found
}

pub fn naive_bisector_family(max_perimeter: u64) -> Vec<Triangle> {
    let mut found = naive_family(max_perimeter);
    found.retain(bisector_divides);
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: u64, b: u64, c: u64) -> Triangle {
        Triangle::new(a, b, c).unwrap()
    }

    #[test]
    fn small_bounds() {
        assert_eq!(brute_force_family(15), vec![t(4, 6, 5)]);
        assert!(brute_force_family(14).is_empty());
        assert!(brute_force_family(3).is_empty());
        assert_eq!(
            brute_force_family(45),
            vec![
                t(4, 6, 5),
                t(9, 12, 7),
                t(8, 12, 10),
                t(9, 15, 16),
                t(12, 18, 15),
                t(16, 20, 9),
            ]
        );
    }

    #[test]
    fn bisector_small_bounds() {
        assert_eq!(brute_force_bisector_family(45), vec![t(12, 18, 15)]);
        assert!(brute_force_bisector_family(44).is_empty());
        assert_eq!(
            brute_force_bisector_family(90),
            vec![t(12, 18, 15), t(24, 36, 30)]
        );
    }

    #[test]
    fn naive_agrees_with_quadratic_scan() {
        for bound in [3, 15, 45, 120] {
            assert_eq!(naive_family(bound), brute_force_family(bound));
            assert_eq!(
                naive_bisector_family(bound),
                brute_force_bisector_family(bound)
            );
        }
    }
}
