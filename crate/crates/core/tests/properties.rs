use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;

use hopf_qexp::linalg::{eval_at_matrix, minimal_polynomial, root_of_unity_order, squarefree_part, Matrix};
use hopf_qexp::{Cyclotomic, Field, Poly, Rational};

const CONDUCTORS: [u32; 6] = [1, 3, 4, 5, 8, 12];

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Rational::new(n, d))
}

fn cyclotomic_in(m: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec(rational(), m as usize).prop_map(move |cs| {
        let mut x = Cyclotomic::zero_in(m);
        for (k, c) in cs.iter().enumerate() {
            x += &Cyclotomic::root_of_unity(m, k as i64).scale(c);
        }
        x
    })
}

fn cyclotomic_triple() -> impl Strategy<Value = (u32, Cyclotomic, Cyclotomic, Cyclotomic)> {
    prop::sample::select(CONDUCTORS.to_vec())
        .prop_flat_map(|m| (Just(m), cyclotomic_in(m), cyclotomic_in(m), cyclotomic_in(m)))
}

fn rational_matrix(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(-3i64..=3, n * n)
        .prop_map(move |v| Matrix::from_vec(n, n, v.into_iter().map(Rational::from_integer).collect()).unwrap())
}

fn rational_poly() -> impl Strategy<Value = Poly<Rational>> {
    prop::collection::vec(-5i64..=5, 1..6).prop_map(|v| Poly::from_i64s(&v))
}

/// Number of linearly independent matrices among `I, A, …, A^k`.
fn power_rank(a: &Matrix<Rational>, k: usize) -> usize {
    let n = a.rows();
    let mut rows = Vec::new();
    let mut p = Matrix::identity(n);
    for _ in 0..=k {
        rows.extend(p.as_slice().iter().cloned());
        p = p.mul(a).unwrap();
    }
    Matrix::from_vec(k + 1, n * n, rows).unwrap().rank()
}

proptest! {
    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn cyclotomic_field_axioms((_m, a, b, c) in cyclotomic_triple()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
            prop_assert_eq!(&(&b * &a) / &a, b.clone());
        }
    }

    #[test]
    fn lift_is_a_ring_homomorphism((m, a, b, _c) in cyclotomic_triple(), k in 1u32..=3) {
        let t = m * k * 2;
        let (la, lb) = (a.lift(t).unwrap(), b.lift(t).unwrap());
        prop_assert_eq!(la.conductor(), t);
        prop_assert_eq!((&a + &b).lift(t).unwrap(), &la + &lb);
        prop_assert_eq!((&a * &b).lift(t).unwrap(), &la * &lb);
        prop_assert_eq!(la, a);
    }

    #[test]
    fn root_of_unity_orders(m in 1u32..=24, k in 0i64..48) {
        let z = Cyclotomic::root_of_unity(m, k);
        let order = u64::from(m) / (k as u64).gcd(&u64::from(m));
        prop_assert!(Field::pow(&z, order).is_one());
        for d in 1..order {
            prop_assert!(!Field::pow(&z, d).is_one());
        }
    }

    #[test]
    fn poly_division(a in rational_poly(), b in rational_poly()) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(q.mul(&b).add(&r), a.clone());
        prop_assert!(r.is_zero() || r.degree() < b.degree());
        let g = a.gcd(&b);
        prop_assert!(g.divides(&a) && g.divides(&b));
    }

    #[test]
    fn min_poly_annihilates_and_is_minimal(a in rational_matrix(3)) {
        let mu = minimal_polynomial(&a).unwrap();
        let d = mu.degree().unwrap();
        prop_assert!(mu.is_monic());
        prop_assert!(eval_at_matrix(&mu, &a).unwrap().is_zero());
        prop_assert_eq!(power_rank(&a, d - 1), d);
        prop_assert!(d <= 3);
    }

    #[test]
    fn squarefree_part_divides(a in rational_matrix(3), e in 1u32..=3) {
        let mu = minimal_polynomial(&a).unwrap();
        let f = mu.pow(e);
        let s = squarefree_part(&f);
        prop_assert!(s.divides(&f));
        prop_assert!(s.divides(&mu));
        prop_assert!(s.gcd(&s.derivative()).degree() == Some(0));
    }

    #[test]
    fn diagonal_roots_of_unity(m in prop::sample::select(vec![2u32, 3, 4, 6, 8, 12]), ks in prop::collection::vec(0i64..24, 1..5)) {
        let entries: Vec<Cyclotomic> = ks.iter().map(|&k| Cyclotomic::root_of_unity(m, k)).collect();
        let expected = ks
            .iter()
            .map(|&k| u64::from(m) / (k as u64).gcd(&u64::from(m)))
            .fold(1, |acc, o| acc.lcm(&o));
        let mu = minimal_polynomial(&Matrix::diagonal(entries)).unwrap();
        prop_assert_eq!(root_of_unity_order(&squarefree_part(&mu), 100), Some(expected));
    }
}
