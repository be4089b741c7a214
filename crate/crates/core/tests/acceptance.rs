//! End-to-end acceptance run: one PASS/FAIL line per criterion, exact
//! arithmetic throughout. Runs without the libtest harness so the lines are
//! always printed.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use hopf_qexp::double::drinfeld_double;
use hopf_qexp::hopf::Variant;
use hopf_qexp::linalg::root_of_unity_order;
use hopf_qexp::presets::{self, FiniteGroup, PresetDescriptor};
use hopf_qexp::qexp::{
    alternating_r_sum_vanishes, is_unipotent, quasi_exponent, r_sequence, t_map, u_min_poly_via_regular,
    u_min_poly_via_t, Exponent, QexpOptions, QexpReport,
};
use hopf_qexp::twist::{bicharacter_twist, bicharacter_twist_table, is_twist, solve_twist_ansatz, sweedler_ansatz, TwistData};
use hopf_qexp::{CycloMatrix, CycloPoly, Cyclotomic, Hopf};
use num_integer::Integer;

type Check = Result<(), String>;

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

fn preset(name: &str) -> Result<Hopf, String> {
    ok(ok(PresetDescriptor::parse(name))?.build())
}

fn report(h: &Hopf) -> Result<QexpReport<Cyclotomic>, String> {
    ok(quasi_exponent(h, &QexpOptions::default()))
}

fn qexp(h: &Hopf) -> Result<u64, String> {
    Ok(report(h)?.qexp)
}

fn group_exponent(h: &Hopf) -> Result<u64, String> {
    ok(ok(h.grouplike_group())?.exponent(h))
}

fn sweedler_identity() -> Check {
    let h = presets::sweedler();
    let r = report(&h)?;
    ensure!(r.qexp == 2, "qexp = {}", r.qexp);
    ensure!(r.exponent == Exponent::Infinite, "exponent = {}", r.exponent);
    ensure!(group_exponent(&h)? == 2, "exp(G(H)) ≠ 2");
    let t: Vec<CycloMatrix> = (0..=4).map(|n| t_map(&h, n)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    let sum = ok(ok(t[0].sub(&t[2].scale(&Cyclotomic::from(2))))?.add(&t[4]))?;
    ensure!(sum.is_zero(), "T₀ − 2T₂ + T₄ ≠ 0");
    Ok(())
}

fn route_equivalence() -> Check {
    for name in ["sweedler", "group:builtin:Z2", "group:builtin:Z3", "group:builtin:S3", "taft:3"] {
        let h = preset(name)?;
        let t = ok(u_min_poly_via_t(&h))?;
        let r = ok(u_min_poly_via_regular(&h))?;
        ensure!(t == r, "{name}: T-route {t} vs regular {r}");
    }
    Ok(())
}

fn alternating_sums() -> Check {
    for name in ["sweedler", "group:builtin:Z3"] {
        let h = preset(name)?;
        let q = qexp(&h)? as usize;
        let qt = ok(drinfeld_double(&h))?;
        let rs = ok(r_sequence(&qt, 12 * 6))?;
        for n in 1..=12 {
            let found = alternating_r_sum_vanishes(&rs, n, 6);
            ensure!(found.is_some() == (n % q == 0), "{name}: n = {n} gives {found:?}");
        }
    }
    Ok(())
}

fn elementary_properties() -> Check {
    for d in presets::zoo() {
        let h = ok(d.build())?;
        let q = qexp(&h)?;
        if !h.declared_grouplikes().is_empty() {
            for g in ok(h.grouplike_group())?.elements() {
                let o = ok(h.element_order(g, q))?;
                ensure!(q % o == 0, "{d}: grouplike of order {o} vs qexp {q}");
            }
        }
        ensure!(qexp(&h.dual())? == q, "{d}: qexp(H*) differs");
        ensure!(qexp(&ok(h.dual().variant(Variant::Cop))?)? == q, "{d}: qexp(H*cop) differs");
        ensure!(ok(h.antipode_power(2 * q as i64))?.is_identity(), "{d}: S^(2 qexp) ≠ Id");
        ensure!((q == 1) == (h.dim() == 1), "{d}: qexp = {q} at dim {}", h.dim());
    }
    let t = ok(presets::sweedler().tensor_lifted(&preset("group:builtin:Z3")?))?;
    ensure!(qexp(&t)? == 6, "qexp(Sweedler ⊗ C[Z3]) ≠ 6");
    Ok(())
}

fn double_axioms() -> Check {
    for d in presets::zoo().into_iter().filter(|d| d.dim() <= 9) {
        let h = ok(d.build())?;
        let qt = ok(drinfeld_double(&h))?;
        let v = qt.algebra().validate();
        ensure!(v.is_empty(), "D({d}): {v:?}");
        let bad = qt.check_quasitriangular();
        ensure!(bad.is_empty(), "D({d}): {bad:?}");
        ensure!(qt.verify_s2_conjugation(&qt.drinfeld_element()), "D({d}): S² ≠ Ad u");
    }
    let dsw = ok(drinfeld_double(&presets::sweedler()))?;
    ensure!(qexp(dsw.algebra())? == 2, "qexp(D(Sweedler)) ≠ 2");
    Ok(())
}

/// `g·u^q` for every nontrivial grouplike `g` of `h`, inside `D(h)`.
fn grouplikes_times_u_power_not_unipotent(h: &Hopf, grouplikes: &[Vec<Cyclotomic>]) -> Check {
    let q = qexp(h)?;
    let qt = ok(drinfeld_double(h))?;
    let d = qt.algebra();
    let uq = ok(d.pow(&qt.drinfeld_element(), q))?;
    ensure!(ok(is_unipotent(d, &uq))?, "{}: u^qexp not unipotent", h.name());
    for g in grouplikes.iter().filter(|g| !h.is_one(g)) {
        let gu = ok(d.mul(&qt.embed_primal(g), &uq))?;
        ensure!(!ok(is_unipotent(d, &gu))?, "{}: g·u^qexp unipotent for g ≠ 1", h.name());
    }
    Ok(())
}

fn twist_checks(t: &TwistData<Cyclotomic>) -> Check {
    let h = t.parent();
    let name = h.name();
    ensure!(is_twist(h, t.j()), "{name}: twist axioms");
    let hj = ok(t.twist_hopf())?;
    let v = hj.validate();
    ensure!(v.is_empty(), "{name}^J: {v:?}");
    ensure!(ok(t.q_ratio_comultiplication_holds())?, "{name}: Δ(Q⁻¹S(Q)) identity");
    let q = qexp(h)?;
    ensure!(qexp(&hj)? == q, "{name}: qexp(H^J) ≠ qexp(H)");
    let qt = ok(drinfeld_double(h))?;
    let d = qt.algebra();
    let uj = ok(t.twisted_drinfeld_element(&qt))?;
    ensure!(ok(d.pow(&qt.drinfeld_element(), q))? == ok(d.pow(&uj, q))?, "{name}: u^n ≠ (u^J)^n");
    let n = q.lcm(&ok(h.s2_order(q))?);
    let g = ok(t.grouplike_from_twist(n))?;
    let o = ok(hj.element_order(&g, q))?;
    ensure!(q % o == 0, "{name}: grouplike from twist has order {o}");
    let gs = ok(h.grouplike_group())?;
    grouplikes_times_u_power_not_unipotent(h, gs.elements())?;
    // and in D(H^J) for the grouplike built from Q and its powers
    let powers: Vec<Vec<Cyclotomic>> = (0..o).map(|k| hj.pow(&g, k)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    grouplikes_times_u_power_not_unipotent(&hj, &powers)?;
    Ok(())
}

fn twist_suite() -> Check {
    let klein = ok(bicharacter_twist(&ok(FiniteGroup::builtin("Z2xZ2"))?, &[vec![0, 1], vec![0, 0]]))?;
    let z3z3 = ok(bicharacter_twist(&ok(FiniteGroup::builtin("Z3xZ3"))?, &[vec![0, 1], vec![2, 0]]))?;
    let sw = presets::sweedler();
    let family = ok(solve_twist_ansatz(&sw, &sweedler_ansatz()))?;
    ensure!(!family.directions.is_empty(), "no Sweedler twist found");
    let params = vec![Cyclotomic::from(1); family.directions.len()];
    let sw_twist = ok(TwistData::new(sw.clone(), family.member(&sw, &params)))?;
    for t in [klein, z3z3, sw_twist] {
        twist_checks(&t)?;
    }
    Ok(())
}

fn pointed_theorems() -> Check {
    for n in 2..=5usize {
        let h = ok(presets::taft(n))?;
        let r = report(&h)?;
        ensure!(r.qexp == n as u64 && group_exponent(&h)? == n as u64, "taft({n}): qexp {}", r.qexp);
        let h0 = ok(h.degree_zero_part())?;
        ensure!(r.qexp == qexp(&h0)?.lcm(&r.s2_order), "taft({n}): graded formula");
    }
    for name in ["sweedler", "taft:3", "taft:4", "taft:5", "uqb2:3", "uqb2:5", "uqsl2:3", "group:builtin:S3", "tensor:sweedler,group:builtin:Z3"] {
        let h = preset(name)?;
        let s2 = ok(h.s2_order(64))?;
        ensure!(group_exponent(&h)? % s2 == 0, "{name}: |S²| = {s2} does not divide exp(G)");
    }
    Ok(())
}

fn quantum_presets() -> Check {
    let z3 = ok(FiniteGroup::builtin("Z3"))?;
    let base = ok(bicharacter_twist(&z3, &[vec![1]]))?;
    for name in ["uqb2:3", "uqsl2:3"] {
        let h = preset(name)?;
        let q = qexp(&h)?;
        ensure!(q == 3, "qexp({name}) = {q}");
        // C[Z₃] = C[K] inside the quantum group
        let k = h.basis_element(1);
        let images: Vec<Vec<Cyclotomic>> = (0..3).map(|a| h.pow(&k, a)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
        let t = ok(base.transport(h.clone(), &images))?;
        let hj = ok(t.twist_hopf())?;
        let g = ok(t.grouplike_from_twist(3))?;
        let mut grouplikes = vec![g];
        grouplikes.extend(ok(h.grouplike_group())?.elements().iter().filter(|x| hj.is_grouplike(x)).cloned());
        for x in &grouplikes {
            let o = ok(hj.element_order(x, 3))?;
            ensure!(3 % o == 0, "{name}^J: grouplike of order {o}");
        }
    }
    Ok(())
}

fn negative_controls() -> Check {
    let h = presets::sweedler();
    let bad = ok(h.clone().with_antipode(CycloMatrix::identity(4)))?;
    ensure!(!bad.validate().is_empty(), "identity antipode accepted");
    let g = ok(FiniteGroup::builtin("Z2xZ2"))?;
    let mut beta = vec![vec![Cyclotomic::from(1); 4]; 4];
    beta[1][1] = Cyclotomic::from(-1);
    beta[1][2] = Cyclotomic::from(-1);
    ensure!(bicharacter_twist_table(&g, &beta).is_err(), "non-bicharacter table accepted");
    ensure!(root_of_unity_order(&CycloPoly::from_i64s(&[-2, 1]), 10_000).is_none(), "x − 2 has a root-of-unity order");
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("Sweedler qexp and T-identity", sweedler_identity),
        ("route equivalence", route_equivalence),
        ("alternating R sums", alternating_sums),
        ("elementary properties", elementary_properties),
        ("double axioms", double_axioms),
        ("twist suite", twist_suite),
        ("pointed theorems", pointed_theorems),
        ("quantum presets", quantum_presets),
        ("negative controls", negative_controls),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name} ({secs:.2}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({secs:.2}s): {e}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
