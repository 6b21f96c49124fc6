use proptest::prelude::*;

use xprod::cayley_dickson::{commutator_cross, commutator_table, CDElement};
use xprod::identities::{
    basis_sum_eq13, basis_sum_eq7, basis_sum_eq8, basis_sum_eq9, check_axioms, check_eq12, check_eq5, ternary,
};
use xprod::iso::{find_signed_iso, verify_iso};
use xprod::{Entry, ProductTable, Rational, Vector};

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

fn vector(n: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(rational(), n).prop_map(|c| Vector::new(c).unwrap())
}

fn cd(level: u32) -> impl Strategy<Value = CDElement> {
    prop::collection::vec(rational(), 1 << level).prop_map(move |c| CDElement::new(level, c).unwrap())
}

fn imaginary_octonion() -> impl Strategy<Value = CDElement> {
    vector(7).prop_map(|v| CDElement::from_imaginary(3, &v).unwrap())
}

/// Random first-pair antisymmetric table in 4D with small integer constants.
fn arbitrary_table() -> impl Strategy<Value = ProductTable> {
    prop::collection::vec(-2i64..=2, 6 * 4).prop_map(|cs| {
        let mut entries = Vec::new();
        let mut it = cs.into_iter();
        for i in 1..=4 {
            for j in (i + 1)..=4 {
                for k in 1..=4 {
                    entries.push(Entry::new(i, j, k, it.next().unwrap()));
                }
            }
        }
        ProductTable::new(4, &entries).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dot_is_symmetric_and_bilinear(s in rational(), a in vector(5), b in vector(5), c in vector(5)) {
        prop_assert_eq!(a.dot(&b).unwrap(), b.dot(&a).unwrap());
        let lhs = a.axpy(&s, &b).unwrap().dot(&c).unwrap();
        let rhs = &s * &a.dot(&c).unwrap() + b.dot(&c).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn norm_zero_iff_zero_vector(a in vector(4)) {
        prop_assert_eq!(a.norm_sq().is_zero(), a.is_zero());
        prop_assert!(!a.norm_sq().is_negative());
    }

    #[test]
    fn rationals_stay_canonical(a in rational(), b in rational()) {
        for x in [&a + &b, &a * &b, &a - &b] {
            let back: Rational = x.to_string().parse().unwrap();
            prop_assert_eq!(&back, &x);
            prop_assert!(x.denom() > &0.into());
            prop_assert_eq!(num_integer::Integer::gcd(x.numer(), x.denom()) , if x.is_zero() { x.denom().clone() } else { 1.into() });
        }
    }

    #[test]
    fn any_table_is_anticommutative_and_bilinear(t in arbitrary_table(), s in rational(),
                                                 a in vector(4), a2 in vector(4), b in vector(4)) {
        prop_assert_eq!(t.cross(&a, &b).unwrap(), -&t.cross(&b, &a).unwrap());
        let lhs = t.cross(&a.axpy(&s, &a2).unwrap(), &b).unwrap();
        let rhs = t.cross(&a, &b).unwrap().axpy(&s, &t.cross(&a2, &b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn table_json_round_trips(t in arbitrary_table()) {
        let json = t.to_json();
        let back = ProductTable::from_json(&json).unwrap();
        prop_assert_eq!(&back, &t);
        prop_assert_eq!(back.to_json(), json);
    }

    #[test]
    fn cross7_axioms_and_identities(a in vector(7), b in vector(7), c in vector(7), d in vector(7)) {
        let t = ProductTable::cross7();
        for r in check_axioms(&t, &[(a.clone(), b.clone())]).unwrap() {
            prop_assert!(r.is_holds(), "{}", r);
        }
        prop_assert!(check_eq5(&t, &a, &b).unwrap().is_holds());
        prop_assert!(check_eq12(&t, &a, &b, &c, &d).unwrap().is_holds());
    }

    #[test]
    fn cross3_ternary_vanishes(a in vector(3), b in vector(3), c in vector(3), d in vector(3)) {
        let t = ProductTable::cross3();
        prop_assert!(ternary(&t, &a, &b, &c).unwrap().is_zero());
        prop_assert!(check_eq5(&t, &a, &b).unwrap().is_holds());
        prop_assert!(check_eq12(&t, &a, &b, &c, &d).unwrap().is_holds());
        let (l, r) = basis_sum_eq8(&t, &a, &b, &c, &d).unwrap();
        prop_assert!(l.is_zero());
        prop_assert_eq!(l, r);
        prop_assert_eq!(basis_sum_eq13(&t, &a, &b, &c).unwrap(), (0.into(), 0.into()));
    }

    #[test]
    fn ternary_is_alternating(a in vector(7), b in vector(7), c in vector(7)) {
        let t = ProductTable::cross7();
        let abc = ternary(&t, &a, &b, &c).unwrap();
        prop_assert_eq!(ternary(&t, &b, &a, &c).unwrap(), -&abc);
        prop_assert_eq!(ternary(&t, &a, &c, &b).unwrap(), -&abc);
        prop_assert_eq!(ternary(&t, &c, &b, &a).unwrap(), -&abc);
        prop_assert!(ternary(&t, &a, &a, &c).unwrap().is_zero());
        prop_assert!(ternary(&t, &a, &c, &a).unwrap().is_zero());
    }

    #[test]
    fn cross7_basis_sums(a in vector(7), b in vector(7), c in vector(7), d in vector(7)) {
        let t = ProductTable::cross7();
        let (l, r) = basis_sum_eq7(&t, &a, &b).unwrap();
        prop_assert_eq!(l, r);
        let (l, r) = basis_sum_eq8(&t, &a, &b, &c, &d).unwrap();
        prop_assert_eq!(l, r);
        let (l, r) = basis_sum_eq9(&t, &a, &b).unwrap();
        prop_assert_eq!(l, r);
        let (l, r) = basis_sum_eq13(&t, &a, &b, &c).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn cd_mul_is_bilinear(level in 0u32..=4, s in rational(), seed in any::<u64>()) {
        let mut sm = xprod::Sampler::new(seed);
        let x = CDElement::random(level, &mut sm);
        let x2 = CDElement::random(level, &mut sm);
        let y = CDElement::random(level, &mut sm);
        let lhs = x.scale(&s).add(&x2).unwrap().mul(&y).unwrap();
        let rhs = x.mul(&y).unwrap().scale(&s).add(&x2.mul(&y).unwrap()).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        let lhs = y.mul(&x.scale(&s).add(&x2).unwrap()).unwrap();
        let rhs = y.mul(&x).unwrap().scale(&s).add(&y.mul(&x2).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn norm_is_x_times_conjugate(x in cd(3)) {
        let n = x.mul(&x.conjugate()).unwrap();
        prop_assert_eq!(n, CDElement::unit(3).scale(&x.norm_sq()));
        prop_assert_eq!(x.norm_sq(), x.mul(&x.conjugate()).unwrap().real().clone());
    }

    #[test]
    fn quaternion_and_octonion_norms_multiply(x in cd(2), y in cd(2), p in cd(3), q in cd(3)) {
        prop_assert_eq!(x.mul(&y).unwrap().norm_sq(), x.norm_sq() * y.norm_sq());
        prop_assert_eq!(p.mul(&q).unwrap().norm_sq(), p.norm_sq() * q.norm_sq());
    }

    #[test]
    fn commutator_cross_satisfies_axioms(x in imaginary_octonion(), y in imaginary_octonion()) {
        let v = commutator_cross(&x, &y).unwrap();
        let (a, b) = (x.imaginary_part().unwrap(), y.imaginary_part().unwrap());
        prop_assert!(commutator_cross(&x, &x).unwrap().is_zero());
        prop_assert!(v.dot(&a).unwrap().is_zero());
        prop_assert!(v.dot(&b).unwrap().is_zero());
        prop_assert_eq!(v.norm_sq(), a.norm_sq() * b.norm_sq() - a.dot(&b).unwrap().square());
        prop_assert_eq!(v, xprod::cayley_dickson::derived_table().cross(&a, &b).unwrap());
    }
}

#[test]
fn quaternion_product_is_cross3_up_to_signed_permutation() {
    let q = commutator_table(2).unwrap();
    let s = find_signed_iso(&q, &ProductTable::cross3()).unwrap().expect("quaternions give the 3D product");
    assert_eq!(verify_iso(&q, &ProductTable::cross3(), &s).unwrap(), 3);
}

#[test]
fn complex_product_vanishes() {
    let t = commutator_table(1).unwrap();
    assert_eq!(t.nonzero_count(), 0);
}
