//! Drinfeld twists `J ∈ H ⊗ H`: axiom checks, the twisted algebra `Hᴶ`,
//! the elements `Q`, `Q⁻¹`, the twisted Drinfeld element and the grouplike
//! built from `Q`.

use num_traits::Zero;
use serde_json::{json, Value};

use crate::double::QuasitriangularData;
use crate::error::{Error, Result};
use crate::exactfield::Cyclotomic;
use crate::hopf::{HopfAlgebra, HopfData, Tensor};
use crate::linalg::{null_space, Matrix};
use crate::presets::{self, hopf_from_json_unchecked, hopf_to_json, tensor_from_json, tensor_to_json, FiniteGroup};
use crate::scalar::Field;
use crate::Hopf;

/// `(Δ⊗Id)(X)(Y⊗1) − (Id⊗Δ)(X)(1⊗Y)`; the twist equation is `C(J, J) = 0`.
fn cocycle_defect<F: Field>(h: &HopfAlgebra<F>, x: &Tensor<F>, y: &Tensor<F>) -> Tensor<F> {
    let one = h.one();
    let lhs = h.tensor_mul(&h.tensor_comul_leg(x, 0), &y.place(&[0, 1], 3, &one));
    let rhs = h.tensor_mul(&h.tensor_comul_leg(x, 1), &y.place(&[1, 2], 3, &one));
    lhs.sub(&rhs)
}

fn counit_defects<F: Field>(h: &HopfAlgebra<F>, j: &Tensor<F>) -> Vec<String> {
    let one = Tensor::from_elements(&[&h.one()]);
    let mut out = Vec::new();
    for (leg, name) in [(0, "(ε⊗Id)(J) ≠ 1"), (1, "(Id⊗ε)(J) ≠ 1")] {
        if h.tensor_counit_leg(j, leg) != one {
            out.push(name.to_string());
        }
    }
    out
}

/// Every failed twist condition on `J`, with `J⁻¹` when it exists.
pub fn twist_violations<F: Field>(h: &HopfAlgebra<F>, j: &Tensor<F>) -> (Vec<String>, Option<Tensor<F>>) {
    let mut out = Vec::new();
    if j.order() != 2 {
        return (vec![format!("J has order {} instead of 2", j.order())], None);
    }
    let j_inv = h.tensor_square_inverse(j);
    if j_inv.is_none() {
        out.push("J is not invertible in H⊗H".into());
    }
    let defect = cocycle_defect(h, j, j);
    if !defect.is_zero() {
        out.push(format!(
            "(Δ⊗Id)(J)(J⊗1) ≠ (Id⊗Δ)(J)(1⊗J) ({} nonzero coefficients in the difference)",
            defect.num_terms()
        ));
    }
    out.extend(counit_defects(h, j));
    (out, j_inv)
}

pub fn is_twist<F: Field>(h: &HopfAlgebra<F>, j: &Tensor<F>) -> bool {
    twist_violations(h, j).0.is_empty()
}

/// A verified twist together with its inverse.
#[derive(Clone, Debug)]
pub struct TwistData<F> {
    parent: HopfAlgebra<F>,
    j: Tensor<F>,
    j_inv: Tensor<F>,
}

impl<F: Field> TwistData<F> {
    pub fn new(parent: HopfAlgebra<F>, j: Tensor<F>) -> Result<Self> {
        let (violations, j_inv) = twist_violations(&parent, &j);
        if !violations.is_empty() {
            return Err(Error::NotATwist(violations.join("; ")));
        }
        let j_inv = j_inv.expect("invertibility checked");
        Ok(Self { parent, j, j_inv })
    }

    /// As [`TwistData::new`], taking a claimed inverse and checking it on
    /// both sides instead of solving for it.
    pub fn with_inverse(parent: HopfAlgebra<F>, j: Tensor<F>, j_inv: Tensor<F>) -> Result<Self> {
        let one = parent.tensor_one(2);
        if parent.tensor_mul(&j, &j_inv) != one || parent.tensor_mul(&j_inv, &j) != one {
            return Err(Error::NotATwist("J·J_inv ≠ 1⊗1".into()));
        }
        let mut violations = Vec::new();
        if !cocycle_defect(&parent, &j, &j).is_zero() {
            violations.push("(Δ⊗Id)(J)(J⊗1) ≠ (Id⊗Δ)(J)(1⊗J)".to_string());
        }
        violations.extend(counit_defects(&parent, &j));
        if !violations.is_empty() {
            return Err(Error::NotATwist(violations.join("; ")));
        }
        Ok(Self { parent, j, j_inv })
    }

    /// The trivial twist `1⊗1`.
    pub fn trivial(parent: HopfAlgebra<F>) -> Self {
        let one = parent.tensor_one(2);
        Self {
            parent,
            j: one.clone(),
            j_inv: one,
        }
    }

    pub fn parent(&self) -> &HopfAlgebra<F> {
        &self.parent
    }

    pub fn j(&self) -> &Tensor<F> {
        &self.j
    }

    pub fn j_inv(&self) -> &Tensor<F> {
        &self.j_inv
    }

    /// Push the twist forward along a Hopf algebra inclusion into `target`;
    /// `images[i]` is the image of the parent's basis element `i`. The
    /// result is re-verified in `target`.
    pub fn transport(&self, target: HopfAlgebra<F>, images: &[Vec<F>]) -> Result<TwistData<F>> {
        if images.len() != self.parent.dim() || images.iter().any(|v| v.len() != target.dim()) {
            return Err(Error::DimensionMismatch("inclusion images have the wrong shape".into()));
        }
        let push = |t: &Tensor<F>| {
            let mut out = Tensor::zero(2);
            for (k, c) in t.terms() {
                out = out.add(&Tensor::from_elements(&[&images[k[0]], &images[k[1]]]).scale(c));
            }
            out
        };
        TwistData::with_inverse(target, push(&self.j), push(&self.j_inv))
    }

    /// `Q = m∘(S⊗Id)(J)` and `Q⁻¹ = m∘(Id⊗S)(J⁻¹)`, checked to be inverse.
    pub fn q_elements(&self) -> Result<(Vec<F>, Vec<F>)> {
        let h = &self.parent;
        let s = h.antipode_matrix();
        let q = h.multiply_legs(&h.tensor_map_leg(&self.j, 0, s));
        let q_inv = h.multiply_legs(&h.tensor_map_leg(&self.j_inv, 1, s));
        if !h.is_one(&h.mul(&q, &q_inv)?) || !h.is_one(&h.mul(&q_inv, &q)?) {
            return Err(Error::Inconsistent("Q·Q⁻¹ ≠ 1: J and J⁻¹ do not match".into()));
        }
        Ok((q, q_inv))
    }

    /// `Hᴶ`: same algebra, `Δᴶ(x) = J⁻¹Δ(x)J`, `Sᴶ(x) = Q⁻¹S(x)Q`.
    pub fn twist_hopf(&self) -> Result<HopfAlgebra<F>> {
        let h = &self.parent;
        let n = h.dim();
        let (q, q_inv) = self.q_elements()?;
        let mut data: HopfData<F> = h.to_data();
        data.comult = (0..n)
            .map(|k| {
                let d = h.tensor_mul(&h.tensor_mul(&self.j_inv, &h.comult_basis(k)), &self.j);
                d.to_matrix(n, n)
            })
            .collect();
        let mut s = Matrix::zeros(n, n);
        for k in 0..n {
            let col = h.mul(&h.mul(&q_inv, &h.antipode_matrix().column(k))?, &q)?;
            for (i, x) in col.into_iter().enumerate() {
                s.set(i, k, x);
            }
        }
        data.antipode = s;
        data.name = format!("{}^J", h.name());
        data.grouplikes = Vec::new();
        data.grading = None;
        HopfAlgebra::new(data)
    }

    /// `J⁻¹` as a twist of `Hᴶ`; twisting back by it recovers `H`.
    pub fn inverse_twist(&self) -> Result<TwistData<F>> {
        TwistData::with_inverse(self.twist_hopf()?, self.j_inv.clone(), self.j.clone())
    }

    /// `Q⁻¹S(Q)`.
    pub fn q_ratio(&self) -> Result<Vec<F>> {
        let h = &self.parent;
        let (q, q_inv) = self.q_elements()?;
        h.mul(&q_inv, &h.antipode(&q)?)
    }

    /// `Δ(Q⁻¹S(Q)) = J(Q⁻¹S(Q) ⊗ Q⁻¹S(Q))(S²⊗S²)(J⁻¹)`.
    pub fn q_ratio_comultiplication_holds(&self) -> Result<bool> {
        let h = &self.parent;
        let w = self.q_ratio()?;
        let lhs = h.comul(&w)?;
        let s2 = h.antipode_power(2)?;
        let j_inv_s2 = h.tensor_map_leg(&h.tensor_map_leg(&self.j_inv, 0, &s2), 1, &s2);
        let ww = Tensor::from_elements(&[&w, &w]);
        let rhs = h.tensor_mul(&h.tensor_mul(&self.j, &ww), &j_inv_s2);
        Ok(lhs == rhs)
    }

    /// `uᴶ = Q⁻¹S(Q)·u` in `D(H)`, with `Q⁻¹S(Q)` entering through the
    /// primal copy of `H`.
    pub fn twisted_drinfeld_element(&self, qt: &QuasitriangularData<F>) -> Result<Vec<F>> {
        if qt.base_dim() != self.parent.dim() {
            return Err(Error::DimensionMismatch("double of a different algebra".into()));
        }
        let w = qt.embed_primal(&self.q_ratio()?);
        qt.algebra().mul(&w, &qt.drinfeld_element())
    }

    /// `g = S^{2n−1}(Q⁻¹)S^{2n−2}(Q)⋯S(Q⁻¹)Q`, checked grouplike in `Hᴶ`.
    /// Needs `S^{2n} = Id`.
    pub fn grouplike_from_twist(&self, n: u64) -> Result<Vec<F>> {
        let h = &self.parent;
        if n == 0 {
            return Err(Error::InvalidParameters("n must be positive".into()));
        }
        if !h.antipode_power(2 * n as i64)?.is_identity() {
            return Err(Error::InvalidParameters(format!("S^{} ≠ Id on {}", 2 * n, h.name())));
        }
        let (q, q_inv) = self.q_elements()?;
        let s = h.antipode_matrix();
        let mut g = h.one();
        let mut power = Matrix::identity(h.dim());
        // build from the right: Q, then S(Q⁻¹), S²(Q), …
        for k in 0..2 * n {
            let base = if k % 2 == 0 { &q } else { &q_inv };
            let factor = power.apply(base)?;
            g = h.mul(&factor, &g)?;
            power = s.mul(&power)?;
        }
        let hj = self.twist_hopf()?;
        if !hj.is_grouplike(&g) {
            return Err(Error::Inconsistent(format!(
                "the alternating product of Q for n = {n} is not grouplike in {}",
                hj.name()
            )));
        }
        Ok(g)
    }
}

/// The twist `Σ β(χ,ψ) e_χ ⊗ e_ψ` on `C[G]` for an abelian `G`, with `e_χ`
/// the primitive idempotents. `beta[a][b]` is indexed by the characters in
/// the order of [`FiniteGroup::characters`].
pub fn bicharacter_twist_table(g: &FiniteGroup, beta: &[Vec<Cyclotomic>]) -> Result<TwistData<Cyclotomic>> {
    if !g.is_abelian() {
        return Err(Error::InvalidParameters(format!("{} is not abelian", g.name())));
    }
    let e = g.exponent();
    let chars = g.characters(e);
    let n = g.order();
    if beta.len() != chars.len() || beta.iter().any(|r| r.len() != chars.len()) {
        return Err(Error::DimensionMismatch(format!("bicharacter table must be {n}×{n}")));
    }
    let h = presets::group_algebra(g).lifted(e as u32)?;
    let inv_n = Cyclotomic::from(crate::exactfield::Rational::new(1, n as i64));
    let idempotents: Vec<Vec<Cyclotomic>> = chars
        .iter()
        .map(|chi| {
            (0..n)
                .map(|a| Cyclotomic::root_of_unity(e as u32, chi[g.inverse(a)] as i64) * inv_n.clone())
                .collect()
        })
        .collect();
    let mut j = Tensor::zero(2);
    for (a, ea) in idempotents.iter().enumerate() {
        for (b, eb) in idempotents.iter().enumerate() {
            if !beta[a][b].is_zero() {
                j = j.add(&Tensor::from_elements(&[ea, eb]).scale(&beta[a][b]));
            }
        }
    }
    TwistData::new(h, j)
}

/// [`bicharacter_twist_table`] for `β(χ,ψ) = ζ_e^{Σ aᵢ Mᵢⱼ bⱼ}`, where `aᵢ`,
/// `bⱼ` are the exponents of `χ`, `ψ` on [`FiniteGroup::generators`] and
/// `e = exp(G)`. Bilinear in the exponents, hence a bicharacter.
pub fn bicharacter_twist(g: &FiniteGroup, form: &[Vec<u64>]) -> Result<TwistData<Cyclotomic>> {
    let gens = g.generators();
    if form.len() != gens.len() || form.iter().any(|r| r.len() != gens.len()) {
        return Err(Error::DimensionMismatch(format!(
            "form must be {0}×{0} for the {0} generators of {1}",
            gens.len(),
            g.name()
        )));
    }
    let e = g.exponent();
    let chars = g.characters(e);
    let beta: Vec<Vec<Cyclotomic>> = chars
        .iter()
        .map(|chi| {
            chars
                .iter()
                .map(|psi| {
                    let mut k = 0u64;
                    for (i, &gi) in gens.iter().enumerate() {
                        for (jx, &gj) in gens.iter().enumerate() {
                            k += chi[gi] * form[i][jx] * psi[gj];
                        }
                    }
                    Cyclotomic::root_of_unity(e as u32, (k % e) as i64)
                })
                .collect()
        })
        .collect();
    bicharacter_twist_table(g, &beta)
}

/// Solutions of the twist equations of the form `J = 1⊗1 + Σ vₖ Dₖ`.
#[derive(Clone, Debug)]
pub struct TwistFamily<F> {
    /// Each `J = 1⊗1 + t·d` is a twist for every scalar `t`.
    pub directions: Vec<Tensor<F>>,
    /// Whether every linear combination of the directions is a twist too.
    pub closed_under_sums: bool,
}

impl<F: Field> TwistFamily<F> {
    pub fn member(&self, h: &HopfAlgebra<F>, params: &[F]) -> Tensor<F> {
        let mut j = h.tensor_one(2);
        for (d, t) in self.directions.iter().zip(params) {
            j = j.add(&d.scale(t));
        }
        j
    }
}

fn flatten3<F: Field>(t: &Tensor<F>, n: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n * n * n];
    for (k, c) in t.terms() {
        v[(k[0] * n + k[1]) * n + k[2]] = c.clone();
    }
    v
}

/// Solve the twist equations over the ansatz `J = 1⊗1 + Σ vₖ Dₖ`.
///
/// The counit conditions and the part of `C(J,J) = 0` linear in `v` cut out
/// a subspace `K`; the quadratic part is then evaluated on a basis of `K`.
/// If it vanishes on all pairs, `K` is returned whole; otherwise only the
/// basis directions on which it vanishes. Every direction is re-checked with
/// the full twist test.
pub fn solve_twist_ansatz<F: Field>(h: &HopfAlgebra<F>, ansatz: &[Tensor<F>]) -> Result<TwistFamily<F>> {
    let n = h.dim();
    let one = h.tensor_one(2);
    let cols: Vec<Vec<F>> = ansatz
        .iter()
        .map(|d| {
            let lin = cocycle_defect(h, d, &one).add(&cocycle_defect(h, &one, d));
            let mut v = flatten3(&lin, n);
            for leg in [0, 1] {
                let c = h.tensor_counit_leg(d, leg);
                v.extend((0..n).map(|i| c.coeff(&[i])));
            }
            v
        })
        .collect();
    let rows: Vec<Vec<F>> = (0..cols.first().map_or(0, Vec::len))
        .map(|r| cols.iter().map(|c| c[r].clone()).collect())
        .collect();
    let kernel = null_space(&rows, ansatz.len());
    let combine = |v: &[F]| {
        let mut t = Tensor::zero(2);
        for (d, c) in ansatz.iter().zip(v) {
            t = t.add(&d.scale(c));
        }
        t
    };
    let dirs: Vec<Tensor<F>> = kernel.iter().map(|v| combine(v)).collect();
    let mut closed = true;
    let mut keep = Vec::new();
    for (a, da) in dirs.iter().enumerate() {
        if cocycle_defect(h, da, da).is_zero() {
            keep.push(da.clone());
        } else {
            closed = false;
        }
        for db in &dirs[a + 1..] {
            if !cocycle_defect(h, da, db).add(&cocycle_defect(h, db, da)).is_zero() {
                closed = false;
            }
        }
    }
    for d in &keep {
        for t in [F::one(), F::from_i64(-2)] {
            let j = one.add(&d.scale(&t));
            let (v, _) = twist_violations(h, &j);
            if !v.is_empty() {
                return Err(Error::Inconsistent(format!("ansatz solution fails the twist test: {}", v.join("; "))));
            }
        }
    }
    Ok(TwistFamily {
        directions: keep,
        closed_under_sums: closed,
    })
}

/// The ansatz `span{x⊗x, x⊗gx, gx⊗x, gx⊗gx}` on the Sweedler algebra (basis
/// `1, g, x, gx`); the `1⊗1` coefficient is fixed to 1 by the counit.
pub fn sweedler_ansatz<F: Field>() -> Vec<Tensor<F>> {
    [(2, 2), (2, 3), (3, 2), (3, 3)]
        .into_iter()
        .map(|(a, b)| Tensor::basis(vec![a, b]))
        .collect()
}

/// Twist file: `{"algebra": <preset name or inline algebra>, "J": N×N,
/// "J_inv": N×N (optional)}`.
pub fn twist_from_json(text: &str) -> Result<TwistData<Cyclotomic>> {
    let (h, j, j_inv) = twist_parts_from_json(text)?;
    match j_inv {
        Some(ji) => TwistData::with_inverse(h, j, ji),
        None => TwistData::new(h, j),
    }
}

/// The algebra (validated), `J` and the optional `J_inv` of a twist file,
/// without checking the twist conditions.
pub fn twist_parts_from_json(text: &str) -> Result<(Hopf, Tensor<Cyclotomic>, Option<Tensor<Cyclotomic>>)> {
    let v = presets::parse_json(text)?;
    let obj = v
        .as_object()
        .ok_or_else(|| schema("$", "twist file must be a JSON object"))?;
    let h: Hopf = match obj.get("algebra") {
        Some(Value::String(name)) => presets::PresetDescriptor::parse(name)?.build()?,
        Some(inline @ Value::Object(_)) => {
            let h = hopf_from_json_unchecked(inline)?;
            let bad = h.validate();
            if !bad.is_empty() {
                return Err(Error::AxiomViolations {
                    algebra: h.name().to_string(),
                    violations: bad.iter().map(|b| b.to_string()).collect(),
                });
            }
            h
        }
        _ => return Err(schema("algebra", "expected a preset name or an algebra object")),
    };
    let m = h.conductor();
    let n = h.dim();
    let j = tensor_from_json(obj.get("J").ok_or_else(|| schema("J", "missing"))?, n, m, "J")?;
    let j_inv = obj.get("J_inv").map(|ji| tensor_from_json(ji, n, m, "J_inv")).transpose()?;
    Ok((h, j, j_inv))
}

pub fn twist_to_json(t: &TwistData<Cyclotomic>) -> Value {
    let h = t.parent();
    let (n, m) = (h.dim(), h.conductor());
    json!({
        "algebra": hopf_to_json(h),
        "J": tensor_to_json(t.j(), n, m),
        "J_inv": tensor_to_json(t.j_inv(), n, m),
    })
}

fn schema(path: &str, message: &str) -> Error {
    Error::Schema {
        path: path.into(),
        message: message.into(),
    }
}
