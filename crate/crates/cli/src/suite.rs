//! Every property of the toolkit, run over the preset zoo.

use num_integer::Integer;
use rayon::prelude::*;
use serde_json::json;

use hopf_qexp::double::drinfeld_double;
use hopf_qexp::hopf::Variant;
use hopf_qexp::presets::{self, FiniteGroup, PresetDescriptor};
use hopf_qexp::qexp::{
    find_vanishing_alternating_r_sum, is_unipotent, quasi_exponent, t_map, t_map_literal, u_min_poly_via_regular,
    u_min_poly_via_t, Exponent, QexpOptions,
};
use hopf_qexp::twist::{bicharacter_twist, solve_twist_ansatz, sweedler_ansatz, TwistData};
use hopf_qexp::{Cyclotomic, Hopf};

use crate::output::emit;
use crate::{Failure, SuiteArgs};

type Outcome = Result<(), String>;
type Job = Box<dyn Fn() -> Outcome + Send + Sync>;

struct Item {
    property: &'static str,
    subject: String,
    job: Job,
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn build(name: &str) -> Result<Hopf, String> {
    ok(ok(PresetDescriptor::parse(name))?.build())
}

fn qexp(h: &Hopf) -> Result<u64, String> {
    Ok(ok(quasi_exponent(h, &QexpOptions::default()))?.qexp)
}

fn group_exponent(h: &Hopf) -> Result<u64, String> {
    ok(ok(h.grouplike_group())?.exponent(h))
}

fn item(property: &'static str, subject: impl Into<String>, job: impl Fn() -> Outcome + Send + Sync + 'static) -> Item {
    Item {
        property,
        subject: subject.into(),
        job: Box::new(job),
    }
}

/// Nontrivial grouplikes of `h` times `u^qexp` inside `D(h)` are never
/// unipotent, while `u^qexp` is.
fn grouplike_u_power(h: &Hopf, grouplikes: &[Vec<Cyclotomic>]) -> Outcome {
    let q = qexp(h)?;
    let qt = ok(drinfeld_double(h))?;
    let d = qt.algebra();
    let uq = ok(d.pow(&qt.drinfeld_element(), q))?;
    ensure!(ok(is_unipotent(d, &uq))?, "u^qexp is not unipotent");
    for g in grouplikes.iter().filter(|g| !h.is_one(g)) {
        let gu = ok(d.mul(&qt.embed_primal(g), &uq))?;
        ensure!(!ok(is_unipotent(d, &gu))?, "g·u^qexp is unipotent for a grouplike g ≠ 1");
    }
    Ok(())
}

fn twists() -> Vec<(&'static str, fn() -> Result<TwistData<Cyclotomic>, String>)> {
    fn klein() -> Result<TwistData<Cyclotomic>, String> {
        ok(bicharacter_twist(&ok(FiniteGroup::builtin("Z2xZ2"))?, &[vec![0, 1], vec![0, 0]]))
    }
    fn z3z3() -> Result<TwistData<Cyclotomic>, String> {
        ok(bicharacter_twist(&ok(FiniteGroup::builtin("Z3xZ3"))?, &[vec![0, 1], vec![2, 0]]))
    }
    fn sweedler() -> Result<TwistData<Cyclotomic>, String> {
        let h = presets::sweedler();
        let family = ok(solve_twist_ansatz(&h, &sweedler_ansatz()))?;
        ensure!(!family.directions.is_empty(), "no twist in the ansatz");
        let params = vec![Cyclotomic::from(1); family.directions.len()];
        ok(TwistData::new(h.clone(), family.member(&h, &params)))
    }
    vec![("bicharacter twist on C[Z2xZ2]", klein), ("bicharacter twist on C[Z3xZ3]", z3z3), ("Sweedler ansatz twist", sweedler)]
}

fn items(max_dim: usize, deep: bool) -> Vec<Item> {
    let zoo: Vec<PresetDescriptor> = presets::zoo().into_iter().filter(|d| d.dim() <= max_dim).collect();
    let mut out = Vec::new();
    for d in &zoo {
        let name = d.name();
        let dim = d.dim();
        let n = name.clone();
        out.push(item("validate", &name, move || {
            let v = build(&n)?.validate();
            ensure!(v.is_empty(), "{v:?}");
            Ok(())
        }));
        let (n, expected) = (name.clone(), d.expected());
        out.push(item("expected-invariants", &name, move || {
            let h = build(&n)?;
            let r = ok(quasi_exponent(&h, &QexpOptions::default()))?;
            if let Some(q) = expected.qexp {
                ensure!(r.qexp == q, "qexp {} ≠ {q}", r.qexp);
            }
            if let Some(e) = expected.exponent {
                let want = e.map_or(Exponent::Infinite, Exponent::Finite);
                ensure!(r.exponent == want, "exponent {} ≠ {want}", r.exponent);
            }
            if let Some(s) = expected.s2_order {
                ensure!(r.s2_order == s, "|S²| {} ≠ {s}", r.s2_order);
            }
            Ok(())
        }));
        let n = name.clone();
        out.push(item("grouplike-orders-divide-qexp", &name, move || {
            let h = build(&n)?;
            let q = qexp(&h)?;
            for g in ok(h.grouplike_group())?.elements() {
                let o = ok(h.element_order(g, q))?;
                ensure!(q % o == 0, "grouplike of order {o}");
            }
            Ok(())
        }));
        let n = name.clone();
        out.push(item("qexp-of-dual", &name, move || {
            let h = build(&n)?;
            ensure!(qexp(&h.dual())? == qexp(&h)?, "qexp(H*) ≠ qexp(H)");
            Ok(())
        }));
        let n = name.clone();
        out.push(item("qexp-of-dual-cop", &name, move || {
            let h = build(&n)?;
            ensure!(qexp(&ok(h.dual().variant(Variant::Cop))?)? == qexp(&h)?, "qexp(H*cop) ≠ qexp(H)");
            Ok(())
        }));
        let n = name.clone();
        out.push(item("antipode-power-2qexp-is-identity", &name, move || {
            let h = build(&n)?;
            let q = qexp(&h)?;
            ensure!(ok(h.antipode_power(2 * q as i64))?.is_identity(), "S^(2·qexp) ≠ Id");
            Ok(())
        }));
        let n = name.clone();
        out.push(item("qexp-one-only-for-trivial", &name, move || {
            let h = build(&n)?;
            ensure!((qexp(&h)? == 1) == (h.dim() == 1), "qexp = 1 iff dim = 1 fails");
            Ok(())
        }));
        let n = name.clone();
        out.push(item("hopf-subalgebra-qexp-divides", &name, move || {
            let h = build(&n)?;
            let q = qexp(&h)?;
            let gs = ok(h.grouplike_group())?;
            let sub = ok(h.subalgebra_closure(gs.elements()))?;
            ensure!(q % qexp(&sub)? == 0, "qexp of the group part does not divide qexp");
            Ok(())
        }));
        if dim <= 9 {
            let n = name.clone();
            out.push(item("t-maps-match-definition", &name, move || {
                let h = build(&n)?;
                for k in 0..=3 {
                    ensure!(ok(t_map(&h, k))? == ok(t_map_literal(&h, k))?, "T{k} differs");
                }
                Ok(())
            }));
        }
        if dim <= 9 || deep {
            let n = name.clone();
            out.push(item("routes-agree", &name, move || {
                let h = build(&n)?;
                let t = ok(u_min_poly_via_t(&h))?;
                let r = ok(u_min_poly_via_regular(&h))?;
                ensure!(t == r, "{t} vs {r}");
                Ok(())
            }));
        }
        if dim <= 9 {
            let n = name.clone();
            out.push(item("double-axioms", &name, move || {
                let qt = ok(drinfeld_double(&build(&n)?))?;
                let v = qt.algebra().validate();
                ensure!(v.is_empty(), "{v:?}");
                let q = qt.check_quasitriangular();
                ensure!(q.is_empty(), "{q:?}");
                Ok(())
            }));
            let n = name.clone();
            out.push(item("drinfeld-element-implements-s2", &name, move || {
                let qt = ok(drinfeld_double(&build(&n)?))?;
                ensure!(qt.verify_s2_conjugation(&qt.drinfeld_element()), "S² ≠ Ad u");
                Ok(())
            }));
        }
        if d.is_pointed() && dim > 1 {
            let n = name.clone();
            out.push(item("pointed-qexp-equals-group-exponent", &name, move || {
                let h = build(&n)?;
                ensure!(qexp(&h)? == group_exponent(&h)?, "qexp ≠ exp(G(H))");
                Ok(())
            }));
            let n = name.clone();
            out.push(item("s2-order-divides-group-exponent", &name, move || {
                let h = build(&n)?;
                let s2 = ok(h.s2_order(1000))?;
                ensure!(group_exponent(&h)? % s2 == 0, "|S²| = {s2}");
                Ok(())
            }));
        }
        if d.build().map(|h| h.grading().is_some()).unwrap_or(false) {
            let n = name.clone();
            out.push(item("graded-lcm-formula", &name, move || {
                let h = build(&n)?;
                let r = ok(quasi_exponent(&h, &QexpOptions::default()))?;
                let h0 = ok(h.degree_zero_part())?;
                ensure!(r.qexp == qexp(&h0)?.lcm(&r.s2_order), "qexp ≠ lcm(qexp(H₀), |S²|)");
                Ok(())
            }));
        }
    }
    let mut subjects = vec!["sweedler", "group:builtin:Z2", "group:builtin:Z3"];
    if deep {
        subjects.push("taft:3");
    }
    for s in subjects {
        out.push(item("alternating-r-sums", s, move || {
            let h = build(s)?;
            let q = qexp(&h)? as usize;
            let qt = ok(drinfeld_double(&h))?;
            for n in 1..=12 {
                let found = ok(find_vanishing_alternating_r_sum(&qt, n, 6))?;
                ensure!(found.is_some() == (n % q == 0), "n = {n}: {found:?}");
            }
            Ok(())
        }));
        out.push(item("grouplike-times-u-power-not-unipotent", s, move || {
            let h = build(s)?;
            let gs = ok(h.grouplike_group())?;
            grouplike_u_power(&h, gs.elements())
        }));
    }
    for s in ["sweedler", "group:builtin:Z2"] {
        out.push(item("qexp-of-double", s, move || {
            let h = build(s)?;
            let qt = ok(drinfeld_double(&h))?;
            ensure!(qexp(qt.algebra())? == qexp(&h)?, "qexp(D(H)) ≠ qexp(H)");
            Ok(())
        }));
    }
    for (a, b) in [("sweedler", "group:builtin:Z3"), ("taft:3", "group:builtin:Z2"), ("sweedler", "taft:4")] {
        out.push(item("qexp-of-tensor-is-lcm", format!("{a} ⊗ {b}"), move || {
            let (ha, hb) = (build(a)?, build(b)?);
            let t = ok(ha.tensor_lifted(&hb))?;
            ensure!(qexp(&t)? == qexp(&ha)?.lcm(&qexp(&hb)?), "qexp of the tensor product ≠ lcm");
            Ok(())
        }));
    }
    for (label, make) in twists() {
        out.push(item("twisted-algebra-validates", label, move || {
            let hj = ok(make()?.twist_hopf())?;
            let v = hj.validate();
            ensure!(v.is_empty(), "{v:?}");
            Ok(())
        }));
        out.push(item("q-ratio-coproduct-identity", label, move || {
            ensure!(ok(make()?.q_ratio_comultiplication_holds())?, "identity fails");
            Ok(())
        }));
        out.push(item("twist-preserves-qexp", label, move || {
            let t = make()?;
            ensure!(qexp(&ok(t.twist_hopf())?)? == qexp(t.parent())?, "qexp(Hᴶ) ≠ qexp(H)");
            Ok(())
        }));
        out.push(item("twisted-u-power-agrees", label, move || {
            let t = make()?;
            let h = t.parent();
            let q = qexp(h)?;
            let qt = ok(drinfeld_double(h))?;
            let d = qt.algebra();
            let uj = ok(t.twisted_drinfeld_element(&qt))?;
            ensure!(ok(d.pow(&qt.drinfeld_element(), q))? == ok(d.pow(&uj, q))?, "uⁿ ≠ (uᴶ)ⁿ");
            Ok(())
        }));
        out.push(item("twist-grouplike-order-divides-qexp", label, move || {
            let t = make()?;
            let h = t.parent();
            let q = qexp(h)?;
            let g = ok(t.grouplike_from_twist(q.lcm(&ok(h.s2_order(q))?)))?;
            let o = ok(ok(t.twist_hopf())?.element_order(&g, q))?;
            ensure!(q % o == 0, "order {o}");
            Ok(())
        }));
    }
    if max_dim >= 27 {
        for s in ["uqb2:3", "uqsl2:3"] {
            out.push(item("quantum-twist-grouplikes-divide-qexp", s, move || {
                let h = build(s)?;
                let q = qexp(&h)?;
                let base = ok(bicharacter_twist(&ok(FiniteGroup::builtin("Z3"))?, &[vec![1]]))?;
                let k = h.basis_element(1);
                let images: Vec<Vec<Cyclotomic>> = (0..3).map(|a| h.pow(&k, a)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
                let t = ok(base.transport(h.clone(), &images))?;
                let hj = ok(t.twist_hopf())?;
                let g = ok(t.grouplike_from_twist(q))?;
                ensure!(q % ok(hj.element_order(&g, q))? == 0, "grouplike from twist");
                for x in ok(h.grouplike_group())?.elements().iter().filter(|x| hj.is_grouplike(x)) {
                    ensure!(q % ok(hj.element_order(x, q))? == 0, "grouplike of Hᴶ");
                }
                Ok(())
            }));
        }
    }
    out.sort_by(|a, b| (a.property, &a.subject).cmp(&(b.property, &b.subject)));
    out
}

pub fn run(a: &SuiteArgs) -> Result<(), Failure> {
    let items = items(a.max_dim, a.deep);
    let results: Vec<(&Item, Outcome)> = items.par_iter().map(|it| (it, (it.job)())).collect();
    let width = items.iter().map(|i| i.property.len()).max().unwrap_or(0);
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut failed = 0;
    for (it, r) in &results {
        let status = if r.is_ok() { "PASS" } else { "FAIL" };
        text.push_str(&format!("{:<width$}  {:<36} {status}", it.property, it.subject));
        if let Err(e) = r {
            failed += 1;
            text.push_str(&format!("  {e}"));
        }
        text.push('\n');
        rows.push(json!({
            "property": it.property,
            "subject": it.subject,
            "status": status,
            "detail": r.as_ref().err(),
        }));
    }
    text.push_str(&format!("{} of {} checks passed\n", results.len() - failed, results.len()));
    emit(
        &a.output,
        &text,
        &json!({
            "schema": "hopf-qexp-suite/1",
            "max_dim": a.max_dim,
            "deep": a.deep,
            "items": rows,
            "passed": results.len() - failed,
            "failed": failed,
        }),
    )?;
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Check(format!("{failed} suite checks failed")))
    }
}
