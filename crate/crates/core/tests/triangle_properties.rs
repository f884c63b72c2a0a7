use std::cmp::Ordering;

use double_angle::bisector::bisector_segments;
use double_angle::triangle::{
    classify, cosines, double_angle_condition, formable_given_condition, is_double_angle_triangle,
    projection_identity_check, satisfies_triangle_inequalities, verify_double_angle_exact,
};
use double_angle::{Rational, Triangle};

const MAX_SIDE: u64 = 300;

fn all_triples(max_side: u64) -> impl Iterator<Item = Triangle> {
    (1..=max_side).flat_map(move |a| {
        (1..=max_side)
            .flat_map(move |b| (1..=max_side).map(move |c| Triangle::new(a, b, c).unwrap()))
    })
}

#[test]
fn membership_equals_condition_and_formability() {
    for t in all_triples(MAX_SIDE) {
        let expected = double_angle_condition(&t) && formable_given_condition(t.a(), t.c());
        assert_eq!(is_double_angle_triangle(&t), expected, "{t}");
    }
}

#[test]
fn trig_and_projection_over_valid_triples() {
    // Trig is the expensive path; sides up to 150 still cover every family
    // member with max side <= 150 and ~1.7M valid triangles.
    for t in all_triples(150).filter(satisfies_triangle_inequalities) {
        assert_eq!(
            double_angle_condition(&t),
            verify_double_angle_exact(&t).unwrap(),
            "{t}"
        );
        assert!(projection_identity_check(&t).unwrap(), "{t}");
        let cos = cosines(&t).unwrap();
        for v in [cos.cos_a, cos.cos_b, cos.cos_c] {
            assert_eq!(v.checked_cmp(&Rational::ONE), Some(Ordering::Less));
            assert_eq!(
                v.checked_cmp(&Rational::from_integer(-1)),
                Some(Ordering::Greater)
            );
        }
    }
}

#[test]
fn condition_forces_two_inequalities() {
    for a in 1..=MAX_SIDE {
        for c in 1..=MAX_SIDE {
            let n = u128::from(a) * u128::from(a + c);
            let b = n.isqrt();
            if b * b != n {
                continue;
            }
            let (aw, cw) = (u128::from(a), u128::from(c));
            assert!(aw < b + cw && b < aw + cw, "a={a} b={b} c={c}");
            let t = Triangle::new(a, b as u64, c).unwrap();
            assert_eq!(
                satisfies_triangle_inequalities(&t),
                formable_given_condition(a, c)
            );
        }
    }
}

#[test]
fn family_members_are_never_right_or_isosceles_in_a_c() {
    for t in all_triples(MAX_SIDE).filter(is_double_angle_triangle) {
        assert_ne!(t.a(), t.c(), "{t}");
        let class = classify(&t).unwrap();
        assert!(!class.is_right(), "{t} classified {class}");
    }
}

#[test]
fn bisector_sum_and_ratio() {
    for t in all_triples(120).filter(satisfies_triangle_inequalities) {
        let d = bisector_segments(&t).unwrap();
        assert_eq!(d.ad.checked_add(&d.dc).unwrap(), Rational::from(t.b()));
        assert_eq!(
            d.ad.checked_mul_int(t.a().into()).unwrap(),
            d.dc.checked_mul_int(t.c().into()).unwrap()
        );
    }
}
