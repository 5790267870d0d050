use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use proptest::prelude::*;

use logdeg::charclass::{twist, BundleClass};
use logdeg::geometry::Catalog;
use logdeg::logforms::{Form, Poly};
use logdeg::pushforward::eliminate;
use logdeg::ring::{rational, GradedClass, Monomial, RingSpec};

const NILP: u32 = 3;
const CAP: u32 = 4;

fn spec() -> Arc<RingSpec> {
    RingSpec::new(&["a", "b", "c"], &[NILP; 3], CAP).unwrap()
}

/// Every admissible monomial of the small ring, in a fixed order.
fn monomials(spec: &RingSpec) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in 0..NILP as u8 {
        for b in 0..NILP as u8 {
            for c in 0..NILP as u8 {
                let exps = [a, b, c];
                if spec.admits(&exps) {
                    out.push(Monomial::from_exponents(&exps));
                }
            }
        }
    }
    out
}

fn class(spec: &Arc<RingSpec>, coeffs: &[i64]) -> GradedClass {
    GradedClass::from_terms(
        spec,
        monomials(spec)
            .into_iter()
            .zip(coeffs.iter().map(|&c| rational(c))),
    )
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-5i64..=5, 27)
}

fn poly(nvars: usize, coeffs: &[i64]) -> Poly {
    let mut terms = Vec::new();
    let mut k = 0;
    for i in 0..nvars {
        for j in 0..nvars {
            terms.push((
                (0..nvars)
                    .map(|v| u32::from(v == i) + u32::from(v == j))
                    .collect(),
                rational(coeffs[k]),
            ));
            k += 1;
        }
        terms.push((
            (0..nvars).map(|v| u32::from(v == i)).collect(),
            rational(coeffs[k]),
        ));
        k += 1;
    }
    Poly::from_terms(nvars, terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn invert_unit_is_inverse(c in coeffs(), unit in prop::sample::select(vec![-3i64, -1, 1, 2, 5])) {
        let s = spec();
        let mut x = class(&s, &c).retain(|m| !m.is_unit());
        x = &x + &GradedClass::integer(&s, unit);
        let inv = x.invert_unit().unwrap();
        prop_assert_eq!(&x * &inv, GradedClass::one(&s));
    }

    #[test]
    fn graded_parts_sum_back(c in coeffs()) {
        let s = spec();
        let x = class(&s, &c);
        let mut acc = GradedClass::zero(&s);
        for k in 0..=i64::from(CAP) {
            let part = x.graded_part(k);
            prop_assert!(part.is_zero() || part.is_homogeneous_of(k as u32));
            acc = &acc + &part;
        }
        prop_assert_eq!(acc, x);
    }

    #[test]
    fn substitute_is_a_ring_homomorphism(
        c1 in coeffs(),
        c2 in coeffs(),
        perm in prop::sample::select(logdeg::logforms::S3.to_vec()),
        scales in prop::collection::vec(-3i64..=3, 3),
    ) {
        // scaled permutations of the generators respect the nilpotency relations
        let s = spec();
        let (x, y) = (class(&s, &c1), class(&s, &c2));
        let names = ["a", "b", "c"];
        let map: BTreeMap<String, GradedClass> = (0..3)
            .map(|k| (names[k].to_string(), GradedClass::generator(&s, names[perm[k]]).unwrap().scale_int(scales[k])))
            .collect();
        let sub = |z: &GradedClass| z.substitute(&map, &s).unwrap();
        prop_assert_eq!(sub(&(&x * &y)), &sub(&x) * &sub(&y));
        prop_assert_eq!(sub(&(&x + &y)), &sub(&x) + &sub(&y));
    }

    #[test]
    fn twist_round_trip(rank in 1u32..=3, c in coeffs(), t in prop::collection::vec(-3i64..=3, 3)) {
        let s = spec();
        let mut chern = GradedClass::one(&s);
        for k in 1..=i64::from(rank) {
            chern = &chern + &class(&s, &c).graded_part(k);
        }
        let b = BundleClass::new(rank, chern).unwrap();
        let mut tc = GradedClass::zero(&s);
        for (g, &k) in ["a", "b", "c"].iter().zip(&t) {
            tc = &tc + &GradedClass::generator(&s, g).unwrap().scale_int(k);
        }
        prop_assume!(!tc.is_zero());
        let back = twist(&twist(&b, &tc).unwrap(), &-&tc).unwrap();
        prop_assert_eq!(back.chern(), b.chern());
    }

    #[test]
    fn poly_div_rem_identity(a in prop::collection::vec(-4i64..=4, 12), d in prop::collection::vec(-4i64..=4, 3)) {
        let p = poly(3, &a);
        let lin = Poly::linear_int(&d);
        prop_assume!(!lin.is_zero());
        let (q, r) = p.div_rem(&lin);
        prop_assert_eq!(&(&q * &lin) + &r, p);
    }

    #[test]
    fn wedge_of_one_forms_anticommutes(a in prop::collection::vec(-4i64..=4, 12), b in prop::collection::vec(-4i64..=4, 12)) {
        let (p, q) = (poly(3, &a), poly(3, &b));
        let (dp, dq) = (Form::exact(&p), Form::exact(&q));
        prop_assert_eq!(dp.wedge(&dq), dq.wedge(&dp).scale(&-rational(1)));
        prop_assert!(dp.wedge(&dp).is_zero());
        prop_assert!(dp.d().is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn eliminate_is_linear(k1 in -4i64..=4, k2 in -4i64..=4, j in 1u32..=6, i in 1u32..=6) {
        let cat = Catalog::new(3).unwrap();
        let tower = cat.tower().unwrap();
        let h = cat.gen("h2").pow(2);
        let x = &h * &cat.gen("e1").pow(j);
        let y = &cat.gen("h1") * &cat.gen("e2").pow(i);
        let lhs = eliminate(&(&x.scale_int(k1) + &y.scale_int(k2)), &tower).unwrap();
        let rhs = &eliminate(&x, &tower).unwrap().scale_int(k1) + &eliminate(&y, &tower).unwrap().scale_int(k2);
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn one_is_multiplicative_identity() {
    let s = spec();
    let x = class(&s, &[1; 27]);
    assert_eq!(&x * &GradedClass::one(&s), x);
    assert!(GradedClass::one(&s).constant_term().is_one());
    assert!(GradedClass::zero(&s).constant_term().is_zero());
}
