use hopf_qexp::double::{drinfeld_double, DoubleEngine};
use hopf_qexp::linalg::{minimal_polynomial, root_of_unity_order, squarefree_part};
use hopf_qexp::presets::{self, PresetDescriptor};
use hopf_qexp::{CycloMatrix, CycloPoly, Cyclotomic, Hopf};
use num_traits::One;

fn preset(name: &str) -> Hopf {
    PresetDescriptor::parse(name).unwrap().build().unwrap()
}

fn check_double(h: &Hopf) {
    let qt = drinfeld_double(h).unwrap();
    let d = qt.algebra();
    assert_eq!(d.dim(), h.dim() * h.dim());
    let v = d.validate();
    assert!(v.is_empty(), "D({}) fails: {v:?}", h.name());
    let bad = qt.check_quasitriangular();
    assert!(bad.is_empty(), "D({}) not quasitriangular: {bad:?}", h.name());
    let u = qt.drinfeld_element();
    assert!(d.counit(&u).unwrap().is_one());
    assert!(qt.verify_s2_conjugation(&u), "S² ≠ Ad u in D({})", h.name());
    let eng = DoubleEngine::new(h).unwrap();
    assert_eq!(eng.drinfeld_element().unwrap(), u, "u differs between formulas");
}

#[test]
fn double_of_trivial() {
    let qt = drinfeld_double(&Hopf::trivial()).unwrap();
    assert_eq!(qt.algebra().dim(), 1);
    let u = qt.drinfeld_element();
    assert!(qt.algebra().is_one(&u));
    assert!(qt.verify_s2_conjugation(&u));
}

#[test]
fn doubles_of_small_presets() {
    for name in ["sweedler", "group:builtin:Z2", "group:builtin:Z3", "dualgroup:builtin:Z2"] {
        check_double(&preset(name));
    }
}

#[test]
fn doubles_of_dim_up_to_nine() {
    for name in ["group:builtin:S3", "group:builtin:Z2xZ2", "taft:3", "uqb2:3", "dualgroup:builtin:S3"] {
        check_double(&preset(name));
    }
}

#[test]
fn drinfeld_element_of_z2_double_has_order_two() {
    let qt = drinfeld_double(&preset("group:builtin:Z2")).unwrap();
    let d = qt.algebra();
    let u = qt.drinfeld_element();
    assert_eq!(d.element_order(&u, 10).unwrap(), 2);
    // central, since S² = Id on a group double
    for k in 0..d.dim() {
        let b = d.basis_element(k);
        assert_eq!(d.mul(&u, &b).unwrap(), d.mul(&b, &u).unwrap());
    }
    // not grouplike: R₂₁R ≠ 1⊗1 in D(Z₂)
    assert!(!d.is_grouplike(&u));
}

#[test]
fn sweedler_double_min_poly() {
    let qt = drinfeld_double(&presets::sweedler()).unwrap();
    let d = qt.algebra();
    let u = qt.drinfeld_element();
    let mu = minimal_polynomial(&d.regular_representation(&u).unwrap()).unwrap();
    let sf = squarefree_part(&mu);
    assert_ne!(mu, sf, "min poly of u should not be squarefree");
    assert!(sf.divides(&CycloPoly::x_pow_minus_one(2)));
    assert_eq!(root_of_unity_order(&sf, 100), Some(2));
}

#[test]
fn z3_double_min_poly_divides_x3_minus_1() {
    let qt = drinfeld_double(&preset("group:builtin:Z3")).unwrap();
    let u = qt.drinfeld_element();
    let mu = minimal_polynomial(&qt.algebra().regular_representation(&u).unwrap()).unwrap();
    assert!(mu.divides(&CycloPoly::x_pow_minus_one(3)));
}

#[test]
fn corrupted_antipode_breaks_s2_conjugation() {
    let qt = drinfeld_double(&presets::sweedler()).unwrap();
    let u = qt.drinfeld_element();
    let d = qt.algebra().clone();
    let n = d.dim();
    let bad = d.with_antipode(CycloMatrix::identity(n).scale(&Cyclotomic::from(-1))).unwrap();
    let bad_qt = qt.with_algebra(bad);
    // S = -Id gives S² = Id, but u is not central in D(Sweedler).
    assert!(!bad_qt.verify_s2_conjugation(&u));
}

#[test]
fn engine_matches_tabulated_products() {
    let h = presets::taft(3).unwrap();
    let qt = drinfeld_double(&h).unwrap();
    let eng = DoubleEngine::new(&h).unwrap();
    let u = qt.drinfeld_element();
    assert_eq!(eng.left_multiplication(&u), qt.algebra().regular_representation(&u).unwrap());
}
