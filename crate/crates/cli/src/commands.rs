use std::fs;

use serde_json::{json, Value};

use hopf_qexp::double::drinfeld_double;
use hopf_qexp::presets::{self, hopf_from_json, hopf_to_json, hopf_to_json_string, tensor_to_json, PresetDescriptor};
use hopf_qexp::qexp::{quasi_exponent, QexpOptions, QexpReport, Route};
use hopf_qexp::twist::{twist_from_json, twist_parts_from_json, twist_violations, TwistData};
use hopf_qexp::{Cyclotomic, Hopf};

use crate::output::{element_json, element_text, emit};
use crate::{AlgebraArgs, BoundArgs, Failure, PresetArgs, QexpArgs, RouteArg, SourceArgs, TwistArgs};

const DEFAULT_ORDER_BOUND: u64 = 1000;

fn read(path: &std::path::Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// The algebra named by `--preset`, `--in` or the positional file. Files are
/// validated on load.
pub fn load(src: &SourceArgs) -> Result<Hopf, Failure> {
    match (&src.preset, src.input.as_ref().or(src.file.as_ref())) {
        (Some(name), None) => Ok(PresetDescriptor::parse(name)?.build()?),
        (None, Some(path)) => {
            let text = read(path)?;
            hopf_from_json(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
        }
        _ => Err(Failure::Input("give exactly one of --preset, --in or a file".into())),
    }
}

fn header(h: &Hopf) -> String {
    format!("{} (dim {}, conductor {})", h.name(), h.dim(), h.conductor())
}

pub fn validate(a: &AlgebraArgs) -> Result<(), Failure> {
    let h = load(&a.source)?;
    let violations: Vec<String> = h.validate().iter().map(|v| v.to_string()).collect();
    let text = if violations.is_empty() {
        format!("valid: {}\n", header(&h))
    } else {
        let mut s = format!("invalid: {}\n", header(&h));
        for v in &violations {
            s.push_str(&format!("  {v}\n"));
        }
        s
    };
    let report = json!({
        "schema": "hopf-qexp/1",
        "name": h.name(),
        "dim": h.dim(),
        "conductor": h.conductor(),
        "valid": violations.is_empty(),
        "violations": violations,
    });
    emit(&a.output, &text, &report)?;
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("{} violates the Hopf axioms", h.name())))
    }
}

fn qexp_report(a: &QexpArgs) -> Result<(Hopf, QexpReport<Cyclotomic>), Failure> {
    let h = load(&a.source)?;
    let opts = QexpOptions {
        bound: a.bound,
        route: Some(match a.route {
            RouteArg::T => Route::TMaps,
            RouteArg::Regular => Route::Regular,
        }),
        cross_check: a.cross_check,
    };
    let r = quasi_exponent(&h, &opts)?;
    Ok((h, r))
}

pub fn qexp(a: &QexpArgs) -> Result<(), Failure> {
    let (h, r) = qexp_report(a)?;
    emit(&a.output, &r.to_text(), &r.to_json(h.conductor()))
}

pub fn exponent(a: &QexpArgs) -> Result<(), Failure> {
    let (h, r) = qexp_report(a)?;
    let text = format!("{}\nexponent: {}\nqexp:     {}\n", h.name(), r.exponent, r.qexp);
    let exponent = match r.exponent {
        hopf_qexp::qexp::Exponent::Finite(e) => json!(e),
        hopf_qexp::qexp::Exponent::Infinite => json!("infinite"),
    };
    emit(
        &a.output,
        &text,
        &json!({"schema": "hopf-qexp/1", "name": h.name(), "exponent": exponent, "qexp": r.qexp}),
    )
}

pub fn s2_order(a: &BoundArgs) -> Result<(), Failure> {
    let h = load(&a.source)?;
    let k = h.s2_order(a.bound.unwrap_or(DEFAULT_ORDER_BOUND))?;
    emit(
        &a.output,
        &format!("{}\n|S^2| = {k}\n", h.name()),
        &json!({"schema": "hopf-qexp/1", "name": h.name(), "s2_order": k}),
    )
}

pub fn grouplikes(a: &AlgebraArgs) -> Result<(), Failure> {
    let h = load(&a.source)?;
    let mut text = format!("{}\n", h.name());
    let mut items = Vec::new();
    let mut exponent = json!(null);
    if h.declared_grouplikes().is_empty() {
        text.push_str("no declared grouplikes\n");
    } else {
        let set = h.grouplike_group()?;
        for g in set.elements() {
            let o = h.element_order(g, DEFAULT_ORDER_BOUND)?;
            text.push_str(&format!("  {}  order {o}\n", element_text(&h, g)));
            items.push(json!({"element": element_json(g, h.conductor()), "order": o}));
        }
        let e = set.exponent(&h)?;
        text.push_str(&format!("group order {}, exponent {e}\n", set.len()));
        exponent = json!(e);
    }
    emit(
        &a.output,
        &text,
        &json!({"schema": "hopf-qexp/1", "name": h.name(), "grouplikes": items, "exponent": exponent}),
    )
}

pub fn double(a: &AlgebraArgs) -> Result<(), Failure> {
    let h = load(&a.source)?;
    let qt = drinfeld_double(&h)?;
    let d = qt.algebra();
    let u = qt.drinfeld_element();
    let mut problems: Vec<String> = d.validate().iter().map(|v| v.to_string()).collect();
    problems.extend(qt.check_quasitriangular());
    if !qt.verify_s2_conjugation(&u) {
        problems.push("S²(x) ≠ u x u⁻¹".into());
    }
    let m = d.conductor();
    let mut text = format!("D({}): dim {}, conductor {m}\n", h.name(), d.dim());
    text.push_str(&format!("R has {} terms\n", qt.r().num_terms()));
    text.push_str(&format!("u = {}\n", element_text(d, &u)));
    if problems.is_empty() {
        text.push_str("Hopf axioms, hexagons, intertwiner and S² = Ad u: ok\n");
    } else {
        for p in &problems {
            text.push_str(&format!("  {p}\n"));
        }
    }
    let mut v = hopf_to_json(d);
    let obj = v.as_object_mut().expect("algebra JSON is an object");
    obj.insert("r_matrix".into(), tensor_to_json(qt.r(), d.dim(), m));
    emit(&a.output, &text, &v)?;
    if problems.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(problems.join("; ")))
    }
}

pub fn twist_check(a: &TwistArgs) -> Result<(), Failure> {
    let text = read(&a.twist)?;
    let (h, j, j_inv) = twist_parts_from_json(&text)?;
    let (mut violations, solved) = twist_violations(&h, &j);
    if let (Some(given), Some(solved)) = (&j_inv, &solved) {
        if given != solved {
            violations.push("J_inv is not the inverse of J".into());
        }
    }
    let mut identity = Value::Null;
    if violations.is_empty() {
        let t = TwistData::new(h.clone(), j)?;
        let holds = t.q_ratio_comultiplication_holds()?;
        if !holds {
            violations.push("Δ(Q⁻¹S(Q)) ≠ J(Q⁻¹S(Q)⊗Q⁻¹S(Q))(S²⊗S²)(J⁻¹)".into());
        }
        identity = json!(holds);
    }
    let mut out = format!("twist on {}\n", header(&h));
    if violations.is_empty() {
        out.push_str("twist conditions and Q-ratio identity: ok\n");
    } else {
        for v in &violations {
            out.push_str(&format!("  {v}\n"));
        }
    }
    emit(
        &a.output,
        &out,
        &json!({
            "schema": "hopf-qexp/1",
            "algebra": h.name(),
            "is_twist": violations.is_empty(),
            "violations": violations,
            "q_ratio_identity": identity,
        }),
    )?;
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("not a twist of {}", h.name())))
    }
}

pub fn twist_apply(a: &TwistArgs) -> Result<(), Failure> {
    let t = twist_from_json(&read(&a.twist)?)?;
    let hj = t.twist_hopf()?;
    let bad = hj.validate();
    if !bad.is_empty() {
        let msg: Vec<String> = bad.iter().map(|v| v.to_string()).collect();
        return Err(Failure::Check(format!("{} fails: {}", hj.name(), msg.join("; "))));
    }
    let text = format!("{}\n", header(&hj)) + &hopf_to_json_string(&hj);
    emit(&a.output, &text, &hopf_to_json(&hj))
}

pub fn preset(a: &PresetArgs) -> Result<(), Failure> {
    if a.list {
        let zoo = presets::zoo();
        let mut text = String::new();
        let mut items = Vec::new();
        for d in &zoo {
            text.push_str(&format!("{:<36} dim {}\n", d.name(), d.dim()));
            items.push(json!({"name": d.name(), "dim": d.dim()}));
        }
        return emit(&a.output, &text, &Value::Array(items));
    }
    let name = a.name.as_deref().expect("clap requires a name without --list");
    let h = PresetDescriptor::parse(name)?.build()?;
    emit(&a.output, &hopf_to_json_string(&h), &hopf_to_json(&h))
}
