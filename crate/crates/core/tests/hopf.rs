use hopf_qexp::hopf::{Axiom, Tensor, Variant};
use hopf_qexp::presets::{self, FiniteGroup, PresetDescriptor};
use hopf_qexp::{Cyclotomic, Hopf};
use num_traits::{One, Zero};

fn c(n: i64) -> Cyclotomic {
    Cyclotomic::from(n)
}

fn preset(name: &str) -> Hopf {
    PresetDescriptor::parse(name).unwrap().build().unwrap()
}

fn assert_valid(h: &Hopf) {
    let v = h.validate();
    assert!(v.is_empty(), "{} fails: {:?}", h.name(), v);
}

#[test]
fn zoo_presets_validate() {
    for d in presets::zoo() {
        let h = d.build().unwrap();
        assert_eq!(h.dim(), d.dim(), "{d}");
        assert_valid(&h);
        if !h.declared_grouplikes().is_empty() {
            h.grouplike_group().unwrap();
        }
    }
}

#[test]
fn sweedler_relations() {
    let h = presets::sweedler();
    assert_eq!(h.basis_labels(), ["1", "g", "x", "gx"]);
    let (one, g, x, gx) = (h.basis_element(0), h.basis_element(1), h.basis_element(2), h.basis_element(3));
    assert_eq!(h.mul(&g, &g).unwrap(), one);
    assert!(h.mul(&x, &x).unwrap().iter().all(Zero::is_zero));
    assert_eq!(h.mul(&g, &x).unwrap(), gx);
    let xg = h.mul(&x, &g).unwrap();
    assert_eq!(xg, gx.iter().map(|v| -v.clone()).collect::<Vec<_>>());
    let expected = Tensor::from_elements(&[&x, &g]).add(&Tensor::from_elements(&[&one, &x]));
    assert_eq!(h.comul(&x).unwrap(), expected);
    let a: Vec<Cyclotomic> = vec![c(1), c(2), c(-3), c(5)];
    assert_eq!(h.antipode(&h.antipode_inv(&a).unwrap()).unwrap(), a);
    assert_eq!(h.mul(&one, &a).unwrap(), a);
}

#[test]
fn identity_antipode_is_rejected() {
    let mut data = presets::sweedler().to_data();
    data.antipode = hopf_qexp::CycloMatrix::identity(4);
    let h = Hopf::new(data).unwrap();
    let v = h.validate();
    assert!(v.iter().any(|v| v.axiom == Axiom::Antipode), "{v:?}");
}

#[test]
fn grouplikes_and_orders() {
    let h = presets::sweedler();
    assert!(h.is_grouplike(&h.one()));
    assert_eq!(h.element_order(&h.one(), 10).unwrap(), 1);
    assert_eq!(h.element_order(&h.basis_element(1), 10).unwrap(), 2);
    assert!(!h.is_grouplike(&h.basis_element(2)));
    assert_eq!(h.grouplike_group().unwrap().exponent(&h).unwrap(), 2);
    let s3 = preset("group:builtin:S3");
    assert_eq!(s3.grouplike_group().unwrap().exponent(&s3).unwrap(), 6);
    let t = Hopf::trivial();
    assert_eq!(t.grouplike_group().unwrap().exponent(&t).unwrap(), 1);
}

#[test]
fn s2_orders() {
    for g in ["Z2", "Z3", "S3", "Z2xZ2"] {
        assert_eq!(preset(&format!("group:builtin:{g}")).s2_order(10).unwrap(), 1);
    }
    assert_eq!(presets::sweedler().s2_order(10).unwrap(), 2);
    assert_eq!(presets::taft(3).unwrap().s2_order(10).unwrap(), 3);
    assert!(presets::taft(5).unwrap().s2_order(4).is_err());
}

#[test]
fn duals_and_variants() {
    for name in ["sweedler", "group:builtin:S3", "taft:3", "dualgroup:builtin:Z3"] {
        let h = preset(name);
        let d = h.dual();
        assert_valid(&d);
        let dd = d.dual();
        assert_eq!(dd.to_data().mult, h.to_data().mult);
        assert_eq!(dd.to_data().comult, h.to_data().comult);
        assert_eq!(dd.antipode_matrix(), h.antipode_matrix());
        for v in [Variant::Op, Variant::Cop, Variant::OpCop] {
            let w = h.variant(v).unwrap();
            assert_valid(&w);
        }
        let opop = h.variant(Variant::Op).unwrap().variant(Variant::Op).unwrap();
        assert_eq!(opop, h);
        assert_valid(&d.variant(Variant::Cop).unwrap());
    }
    let z3 = preset("group:builtin:Z3");
    assert_eq!(z3.variant(Variant::Cop).unwrap(), z3);
}

#[test]
fn tensor_products() {
    let sw = presets::sweedler();
    let z3 = preset("group:builtin:Z3");
    let t = sw.tensor_lifted(&z3).unwrap();
    assert_eq!(t.dim(), 12);
    assert_valid(&t);
    let triv = sw.tensor(&Hopf::trivial()).unwrap();
    let d1 = triv.to_data();
    let d2 = sw.to_data();
    assert_eq!(d1.mult, d2.mult);
    assert_eq!(d1.comult, d2.comult);
    assert_eq!(d1.antipode, d2.antipode);
    let mixed = presets::taft(3).unwrap().tensor_lifted(&presets::sweedler()).unwrap();
    assert_eq!(mixed.conductor(), 6);
    assert_valid(&mixed);
}

#[test]
fn subalgebra_closures() {
    let h = presets::sweedler();
    let one = h.subalgebra_closure(&[h.one()]).unwrap();
    assert_eq!(one.dim(), 1);
    assert_valid(&one);
    let g = h.subalgebra_closure(&[h.basis_element(1)]).unwrap();
    assert_eq!(g.dim(), 2);
    assert_valid(&g);
    assert_eq!(g.grouplike_group().unwrap().len(), 2);
    let x = h.subalgebra_closure(&[h.basis_element(2)]).unwrap();
    assert_eq!(x.dim(), 4);
    assert_valid(&x);
    let t = presets::taft(4).unwrap();
    let g2 = t.pow(&t.basis_element(1), 2).unwrap();
    let sub = t.subalgebra_closure(&[g2]).unwrap();
    assert_eq!(sub.dim(), 2);
    assert_valid(&sub);
    let h0 = t.degree_zero_part().unwrap();
    assert_eq!(h0.dim(), 4);
    assert_valid(&h0);
}

#[test]
fn regular_representation_is_multiplicative() {
    let h = presets::taft(3).unwrap();
    assert!(h.regular_representation(&h.one()).unwrap().is_identity());
    let a: Vec<Cyclotomic> = (0..9).map(|i| c(i - 4)).collect();
    let b: Vec<Cyclotomic> = (0..9).map(|i| Cyclotomic::root_of_unity(3, i)).collect();
    let lab = h.regular_representation(&h.mul(&a, &b).unwrap()).unwrap();
    let la = h.regular_representation(&a).unwrap();
    let lb = h.regular_representation(&b).unwrap();
    assert_eq!(lab, la.mul(&lb).unwrap());
}

#[test]
fn group_tables() {
    let s3 = FiniteGroup::s3();
    assert_eq!(s3.exponent(), 6);
    assert!(!s3.is_abelian());
    assert_eq!(s3.characters(6).len(), 2);
    let k = FiniteGroup::builtin("Z2xZ2").unwrap();
    assert_eq!(k.characters(2).len(), 4);
    let bad = FiniteGroup::from_table("bad", None, vec![vec![0, 1], vec![0, 1]]);
    assert!(bad.is_err());
    let json = r#"{"name": "Z2", "table": [[0, 1], [1, 0]]}"#;
    let g = FiniteGroup::from_json(json, "x").unwrap();
    assert_eq!(g.order(), 2);
    assert!(FiniteGroup::builtin("Q8").is_err());
}

#[test]
fn json_round_trip() {
    for name in ["sweedler", "uqb2:3", "dualgroup:builtin:Z3", "tensor:sweedler,taft:3"] {
        let h = preset(name);
        let text = presets::hopf_to_json_string(&h);
        let back = presets::hopf_from_json(&text).unwrap();
        assert_eq!(back, h, "{name}");
        assert_eq!(back.name(), h.name());
        assert_eq!(presets::hopf_to_json_string(&back), text, "{name}");
    }
}

#[test]
fn json_rejects_broken_coassociativity() {
    let h = presets::sweedler();
    let mut v = presets::hopf_to_json(&h);
    // Δ(x) = x⊗g + 1⊗x; drop the 1⊗x term.
    let comult = v["comult"].as_array_mut().unwrap();
    comult.retain(|e| !(e[0] == 2 && e[1] == 0 && e[2] == 2));
    let text = serde_json::to_string(&v).unwrap();
    let err = presets::hopf_from_json(&text).unwrap_err().to_string();
    assert!(err.contains("coassociativity") || err.contains("counit"), "{err}");
}

#[test]
fn json_schema_errors_name_the_field() {
    let h = presets::sweedler();
    let mut v = presets::hopf_to_json(&h);
    v["unit"][1] = serde_json::json!(["1", "2"]);
    let err = presets::hopf_from_json(&v.to_string()).unwrap_err();
    assert!(err.to_string().contains("unit[1]"), "{err}");
    let err = presets::hopf_from_json("{\n \"name\": 3,").unwrap_err();
    assert!(err.to_string().contains("line"), "{err}");
}

#[test]
fn trivial_algebra_is_unit() {
    let t = Hopf::trivial();
    assert_valid(&t);
    assert!(t.one()[0].is_one());
}
