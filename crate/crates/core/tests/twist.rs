use hopf_qexp::double::drinfeld_double;
use hopf_qexp::hopf::Tensor;
use hopf_qexp::presets::{self, FiniteGroup};
use hopf_qexp::qexp::{quasi_exponent, QexpOptions};
use hopf_qexp::twist::{
    bicharacter_twist, bicharacter_twist_table, is_twist, solve_twist_ansatz, sweedler_ansatz, twist_from_json,
    twist_to_json, twist_violations, TwistData,
};
use hopf_qexp::{Cyclotomic, Hopf};
use num_traits::One;

fn qexp(h: &Hopf) -> u64 {
    quasi_exponent(h, &QexpOptions::default()).unwrap().qexp
}

fn klein_twist() -> TwistData<Cyclotomic> {
    // β((a,b),(c,d)) = (−1)^{ad} on the generator exponents
    bicharacter_twist(&FiniteGroup::builtin("Z2xZ2").unwrap(), &[vec![0, 1], vec![0, 0]]).unwrap()
}

fn z3_twist() -> TwistData<Cyclotomic> {
    bicharacter_twist(&FiniteGroup::builtin("Z3").unwrap(), &[vec![1]]).unwrap()
}

fn z3xz3_twist() -> TwistData<Cyclotomic> {
    bicharacter_twist(&FiniteGroup::builtin("Z3xZ3").unwrap(), &[vec![0, 1], vec![2, 0]]).unwrap()
}

/// Checks shared by every constructed twist.
fn check_twist(t: &TwistData<Cyclotomic>) {
    let h = t.parent();
    let hj = t.twist_hopf().unwrap();
    let v = hj.validate();
    assert!(v.is_empty(), "{} fails: {v:?}", hj.name());
    assert!(t.q_ratio_comultiplication_holds().unwrap(), "Q-ratio identity on {}", h.name());
    let q = qexp(h);
    assert_eq!(qexp(&hj), q, "qexp changes under twisting {}", h.name());
    let n = q * h.s2_order(64).unwrap();
    let g = t.grouplike_from_twist(n).unwrap();
    assert!(hj.is_grouplike(&g));
    assert_eq!(q % hj.element_order(&g, 1000).unwrap(), 0);
    // twisting back by J⁻¹ recovers the original comultiplication
    let back = t.inverse_twist().unwrap().twist_hopf().unwrap();
    assert_eq!(back.to_data().comult, h.to_data().comult);
    assert_eq!(back.antipode_matrix(), h.antipode_matrix());
}

#[test]
fn trivial_twist() {
    let h = presets::sweedler();
    let one = h.tensor_one(2);
    assert!(is_twist(&h, &one));
    let t = TwistData::new(h.clone(), one).unwrap();
    let hj = t.twist_hopf().unwrap();
    assert_eq!(hj.to_data().comult, h.to_data().comult);
    assert_eq!(hj.antipode_matrix(), h.antipode_matrix());
    let (q, q_inv) = t.q_elements().unwrap();
    assert!(h.is_one(&q) && h.is_one(&q_inv));
    assert!(h.is_one(&t.grouplike_from_twist(2).unwrap()));
    let qt = drinfeld_double(&h).unwrap();
    assert_eq!(t.twisted_drinfeld_element(&qt).unwrap(), qt.drinfeld_element());
}

#[test]
fn constant_bicharacter_gives_trivial_twist() {
    let g = FiniteGroup::builtin("Z2xZ2").unwrap();
    let ones = vec![vec![Cyclotomic::one(); 4]; 4];
    let t = bicharacter_twist_table(&g, &ones).unwrap();
    assert_eq!(t.j(), &t.parent().tensor_one(2));
}

#[test]
fn bicharacter_twists_are_twists() {
    for t in [klein_twist(), z3_twist(), z3xz3_twist()] {
        assert!(is_twist(t.parent(), t.j()));
        assert_ne!(t.j(), &t.parent().tensor_one(2));
        let (q, q_inv) = t.q_elements().unwrap();
        assert!(t.parent().is_one(&t.parent().mul(&q, &q_inv).unwrap()));
        check_twist(&t);
    }
    assert_eq!(qexp(&z3_twist().twist_hopf().unwrap()), 3);
}

#[test]
fn non_cocycle_is_rejected() {
    // β(χ,ψ) = −1 off the trivial characters is not multiplicative
    let g = FiniteGroup::builtin("Z2xZ2").unwrap();
    let mut beta = vec![vec![Cyclotomic::one(); 4]; 4];
    beta[1][1] = Cyclotomic::from(-1);
    beta[1][2] = Cyclotomic::from(-1);
    let err = bicharacter_twist_table(&g, &beta).unwrap_err();
    assert!(err.to_string().contains("not a twist"), "{err}");
}

#[test]
fn non_invertible_element_is_rejected() {
    let h = presets::sweedler();
    let j = Tensor::basis(vec![2, 2]);
    let (v, inv) = twist_violations(&h, &j);
    assert!(inv.is_none());
    assert!(v.iter().any(|s| s.contains("invertible")));
    assert!(v.iter().any(|s| s.contains("ε")));
}

#[test]
fn twisted_drinfeld_element_has_the_same_power() {
    for t in [klein_twist(), z3_twist()] {
        let h = t.parent();
        let q = qexp(h);
        let qt = drinfeld_double(h).unwrap();
        let d = qt.algebra();
        let u = qt.drinfeld_element();
        let uj = t.twisted_drinfeld_element(&qt).unwrap();
        assert_eq!(d.pow(&u, q).unwrap(), d.pow(&uj, q).unwrap(), "{}", h.name());
    }
}

#[test]
fn sweedler_twists_from_ansatz() {
    let h = presets::sweedler();
    let family = solve_twist_ansatz(&h, &sweedler_ansatz()).unwrap();
    assert!(!family.directions.is_empty(), "expected nontrivial Sweedler twists");
    let params = [Cyclotomic::from(3), Cyclotomic::from(-1), Cyclotomic::from(5), Cyclotomic::from(7)];
    for (i, _) in family.directions.iter().enumerate() {
        let mut p = vec![Cyclotomic::from(0); family.directions.len()];
        p[i] = params[i % params.len()].clone();
        let j = family.member(&h, &p);
        let t = TwistData::new(h.clone(), j).unwrap();
        check_twist(&t);
        let qt = drinfeld_double(&h).unwrap();
        let d = qt.algebra();
        let uj = t.twisted_drinfeld_element(&qt).unwrap();
        assert_eq!(d.pow(&uj, 2).unwrap(), d.pow(&qt.drinfeld_element(), 2).unwrap());
    }
    if family.closed_under_sums {
        let j = family.member(&h, &params[..family.directions.len()]);
        assert!(is_twist(&h, &j));
    }
    // x⊗x with coefficient 1 on its own is not a twist
    let bad = h.tensor_one(2).add(&Tensor::basis(vec![2, 2]));
    if !family.directions.iter().any(|d| d == &Tensor::basis(vec![2, 2])) {
        assert!(!is_twist(&h, &bad));
    }
}

#[test]
fn twist_file_round_trip() {
    let t = klein_twist();
    let text = twist_to_json(&t).to_string();
    let back = twist_from_json(&text).unwrap();
    assert_eq!(back.j(), t.j());
    assert_eq!(back.j_inv(), t.j_inv());
    let mut v = twist_to_json(&t);
    v.as_object_mut().unwrap().remove("J_inv");
    let solved = twist_from_json(&v.to_string()).unwrap();
    assert_eq!(solved.j_inv(), t.j_inv());
    let by_name = serde_json::json!({"algebra": "sweedler", "J": [[["1"],["0"],["0"],["0"]],[["0"],["0"],["0"],["0"]],[["0"],["0"],["0"],["0"]],[["0"],["0"],["0"],["0"]]]});
    let trivial = twist_from_json(&by_name.to_string()).unwrap();
    assert_eq!(trivial.j(), &presets::sweedler().tensor_one(2));
    assert!(twist_from_json(r#"{"algebra": "sweedler"}"#).is_err());
}
