//! The Drinfeld double `D(H) = H^{*cop} ⊗ H`, its R-matrix and Drinfeld
//! element.
//!
//! Basis element `h^j ⊗ h_i` (dual basis vector `j`, primal basis vector `i`)
//! has index `j·N + i`. Multiplication:
//!
//! `(f ⊗ a)(f' ⊗ b) = f · f'(S⁻¹(a₍₃₎) ? a₍₁₎) ⊗ a₍₂₎ b`
//!
//! with the product of functionals dual to Δ of `H`. `R = Σᵢ (ε ⊗ hᵢ) ⊗ (hⁱ ⊗ 1)`.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebra, SparseVec, Tensor};
use crate::linalg::Matrix;
use crate::scalar::Field;

/// Largest `dim H` for which the full structure of `D(H)` is tabulated.
pub const MAX_TABULATED_DIM: usize = 16;

/// Products in `D(H)` computed on demand from the structure of `H`.
pub struct DoubleEngine<'a, F> {
    h: &'a HopfAlgebra<F>,
    n: usize,
    /// `(Δ⊗id)Δ(hᵢ)` as `(a, b, c, coeff)`.
    delta3: Vec<Vec<(usize, usize, usize, F)>>,
    /// `dual_mul[j][m]` = coordinates of `hʲ · hᵐ` in the dual basis.
    dual_mul: Vec<Vec<SparseVec<F>>>,
    /// `conj[(c, a)][l][m]` = coefficient of `h_l` in `S⁻¹(h_c) h_m h_a`.
    conj: HashMap<(usize, usize), Vec<Vec<F>>>,
}

impl<'a, F: Field> DoubleEngine<'a, F> {
    pub fn new(h: &'a HopfAlgebra<F>) -> Result<Self> {
        let n = h.dim();
        let s_inv = h
            .antipode_inverse_matrix()
            .ok_or_else(|| Error::Inconsistent(format!("antipode of {} is singular", h.name())))?;
        let delta3: Vec<Vec<(usize, usize, usize, F)>> = (0..n)
            .map(|i| {
                h.tensor_comul_leg(&h.comult_basis(i), 0)
                    .terms()
                    .map(|(k, c)| (k[0], k[1], k[2], c.clone()))
                    .collect()
            })
            .collect();
        let mut dual_mul = vec![vec![Vec::new(); n]; n];
        for p in 0..n {
            for (j, m, c) in h.comult_entries(p) {
                dual_mul[*j][*m].push((p, c.clone()));
            }
        }
        let pairs: Vec<(usize, usize)> = {
            let mut v: Vec<(usize, usize)> = delta3
                .iter()
                .flatten()
                .map(|(a, _, c, _)| (*c, *a))
                .collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        let conj = pairs
            .par_iter()
            .map(|&(c, a)| {
                let left = s_inv.column(c);
                let mut table = vec![vec![F::zero(); n]; n];
                for m in 0..n {
                    let v = h.mul_unchecked(&h.mul_unchecked(&left, &h.basis_element(m)), &h.basis_element(a));
                    for (l, x) in v.into_iter().enumerate() {
                        table[l][m] = x;
                    }
                }
                ((c, a), table)
            })
            .collect();
        Ok(Self {
            h,
            n,
            delta3,
            dual_mul,
            conj,
        })
    }

    pub fn base(&self) -> &HopfAlgebra<F> {
        self.h
    }

    pub fn dim(&self) -> usize {
        self.n * self.n
    }

    /// `(hʲ ⊗ hᵢ)(hˡ ⊗ h_k)`, accumulated into `out` with weight `w`.
    fn basis_product_into(&self, (j, i): (usize, usize), (l, k): (usize, usize), w: &F, out: &mut [F]) {
        let n = self.n;
        for (a, b, c, coef) in &self.delta3[i] {
            let table = &self.conj[&(*c, *a)];
            let bk = self.h.mul_basis(*b, k);
            if bk.is_empty() {
                continue;
            }
            let wc = w.mul_ref(coef);
            for (m, t) in table[l].iter().enumerate() {
                if t.is_zero() {
                    continue;
                }
                let wt = wc.mul_ref(t);
                for (p, d1) in &self.dual_mul[j][m] {
                    let wd = wt.mul_ref(d1);
                    for (q, d2) in bk {
                        out[p * n + q].add_mul(&wd, d2);
                    }
                }
            }
        }
    }

    pub fn basis_product(&self, x: usize, y: usize) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        self.basis_product_into(self.split(x), self.split(y), &F::one(), &mut out);
        out
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        let ys: Vec<(usize, &F)> = y.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        for (s, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for &(t, b) in &ys {
                self.basis_product_into(self.split(s), self.split(t), &a.mul_ref(b), &mut out);
            }
        }
        out
    }

    /// `(dual index, primal index)` of a basis index of the double.
    pub fn split(&self, x: usize) -> (usize, usize) {
        (x / self.n, x % self.n)
    }

    /// `ε ⊗ a`.
    pub fn embed_primal(&self, a: &[F]) -> Vec<F> {
        let n = self.n;
        let mut out = vec![F::zero(); self.dim()];
        for (j, e) in self.h.counit_coeffs().iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            for (i, x) in a.iter().enumerate() {
                out[j * n + i].add_mul(e, x);
            }
        }
        out
    }

    /// `f ⊗ 1`, for `f` in dual-basis coordinates.
    pub fn embed_dual(&self, f: &[F]) -> Vec<F> {
        let n = self.n;
        let mut out = vec![F::zero(); self.dim()];
        let unit = self.h.one();
        for (j, x) in f.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, u) in unit.iter().enumerate() {
                out[j * n + i].add_mul(x, u);
            }
        }
        out
    }

    /// Antipode of the double on a basis element:
    /// `S(f ⊗ a) = (ε ⊗ S(a)) · (f∘S⁻¹ ⊗ 1)`.
    pub fn antipode_basis(&self, x: usize) -> Result<Vec<F>> {
        let (j, i) = self.split(x);
        let s_a = self.h.antipode(&self.h.basis_element(i))?;
        let s_inv = self.h.antipode_inverse_matrix().expect("checked in new");
        // (hʲ∘S⁻¹)(h_m) = coefficient of h_j in S⁻¹(h_m)
        let f: Vec<F> = (0..self.n).map(|m| s_inv.get(j, m).clone()).collect();
        Ok(self.mul(&self.embed_primal(&s_a), &self.embed_dual(&f)))
    }

    /// `R = Σᵢ (ε ⊗ hᵢ) ⊗ (hⁱ ⊗ 1)`.
    pub fn r_matrix(&self) -> Tensor<F> {
        let mut r = Tensor::zero(2);
        for i in 0..self.n {
            let left = self.embed_primal(&self.h.basis_element(i));
            let right = self.embed_dual(&self.h.basis_element(i));
            r = r.add(&Tensor::from_elements(&[&left, &right]));
        }
        r
    }

    /// `u = Σᵢ S(hⁱ ⊗ 1)(ε ⊗ hᵢ)`.
    pub fn drinfeld_element(&self) -> Result<Vec<F>> {
        let mut u = vec![F::zero(); self.dim()];
        for i in 0..self.n {
            let f = self.embed_dual(&self.h.basis_element(i));
            let mut sf = vec![F::zero(); self.dim()];
            for (x, c) in f.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (y, d) in self.antipode_basis(x)?.into_iter().enumerate() {
                    sf[y].add_mul(c, &d);
                }
            }
            let term = self.mul(&sf, &self.embed_primal(&self.h.basis_element(i)));
            for (acc, t) in u.iter_mut().zip(term) {
                *acc += &t;
            }
        }
        Ok(u)
    }

    /// Matrix of left multiplication by `a` in the double.
    pub fn left_multiplication(&self, a: &[F]) -> Matrix<F> {
        let d = self.dim();
        let cols: Vec<Vec<F>> = (0..d)
            .into_par_iter()
            .map(|k| {
                let mut e = vec![F::zero(); d];
                e[k] = F::one();
                self.mul(a, &e)
            })
            .collect();
        let mut m = Matrix::zeros(d, d);
        for (k, col) in cols.into_iter().enumerate() {
            for (i, x) in col.into_iter().enumerate() {
                if !x.is_zero() {
                    m.set(i, k, x);
                }
            }
        }
        m
    }
}

/// A quasitriangular Hopf algebra: the double together with its R-matrix.
#[derive(Clone, Debug)]
pub struct QuasitriangularData<F> {
    algebra: HopfAlgebra<F>,
    r: Tensor<F>,
    base_dim: usize,
    base_counit: Vec<F>,
}

/// `D(H)` with its R-matrix. Tabulates `dim(H)⁴` products, so `dim H` is
/// capped at [`MAX_TABULATED_DIM`].
pub fn drinfeld_double<F: Field>(h: &HopfAlgebra<F>) -> Result<QuasitriangularData<F>> {
    let n = h.dim();
    if n > MAX_TABULATED_DIM {
        return Err(Error::TooLarge(format!(
            "double of {} would have dimension {}; tabulation is limited to dim H ≤ {MAX_TABULATED_DIM}",
            h.name(),
            n * n
        )));
    }
    let eng = DoubleEngine::new(h)?;
    let d = n * n;
    let mult: Vec<Vec<SparseVec<F>>> = (0..d)
        .into_par_iter()
        .map(|x| {
            (0..d)
                .map(|y| {
                    eng.basis_product(x, y)
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .collect()
                })
                .collect()
        })
        .collect();
    // Δ(hʲ ⊗ hᵢ) = Σ (hᵇ ⊗ hᵢ₁) ⊗ (hᵃ ⊗ hᵢ₂) over hʲ's coproduct hᵃ ⊗ hᵇ in H*,
    // whose coefficients are those of h_j in h_a h_b.
    let mut dual_comult: Vec<Vec<(usize, usize, F)>> = vec![Vec::new(); n];
    for a in 0..n {
        for b in 0..n {
            for (j, c) in h.mul_basis(a, b) {
                dual_comult[*j].push((a, b, c.clone()));
            }
        }
    }
    let mut comult = Vec::with_capacity(d);
    for x in 0..d {
        let (j, i) = eng.split(x);
        let mut t = Tensor::zero(2);
        for (a, b, c) in &dual_comult[j] {
            for (i1, i2, e) in h.comult_entries(i) {
                t.add_term(vec![b * n + i1, a * n + i2], c.mul_ref(e));
            }
        }
        comult.push(t.terms().map(|(k, c)| (k[0], k[1], c.clone())).collect());
    }
    let mut counit = vec![F::zero(); d];
    let unit_h = h.one();
    for j in 0..n {
        for i in 0..n {
            counit[j * n + i] = unit_h[j].mul_ref(&h.counit_coeffs()[i]);
        }
    }
    let unit = eng.embed_primal(&unit_h);
    let cols: Vec<Vec<F>> = (0..d)
        .into_par_iter()
        .map(|x| eng.antipode_basis(x))
        .collect::<Result<_>>()?;
    let mut antipode = Matrix::zeros(d, d);
    for (x, col) in cols.into_iter().enumerate() {
        for (y, c) in col.into_iter().enumerate() {
            antipode.set(y, x, c);
        }
    }
    let labels = (0..d)
        .map(|x| {
            let (j, i) = eng.split(x);
            format!("{}*⊗{}", h.basis_labels()[j], h.basis_labels()[i])
        })
        .collect();
    let r = eng.r_matrix();
    let algebra = HopfAlgebra::from_sparse(
        format!("D({})", h.name()),
        h.conductor(),
        labels,
        mult,
        unit,
        comult,
        counit,
        antipode,
    );
    Ok(QuasitriangularData {
        algebra,
        r,
        base_dim: n,
        base_counit: h.counit_coeffs().to_vec(),
    })
}

impl<F: Field> QuasitriangularData<F> {
    pub fn algebra(&self) -> &HopfAlgebra<F> {
        &self.algebra
    }

    pub fn r(&self) -> &Tensor<F> {
        &self.r
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    /// Basis index of the double ↦ `(dual index, primal index)`.
    pub fn basis_split(&self, x: usize) -> (usize, usize) {
        (x / self.base_dim, x % self.base_dim)
    }

    pub fn basis_index(&self, dual: usize, primal: usize) -> usize {
        dual * self.base_dim + primal
    }

    /// Image of an element of `H` under `a ↦ ε ⊗ a`.
    pub fn embed_primal(&self, a: &[F]) -> Vec<F> {
        let n = self.base_dim;
        let mut out = vec![F::zero(); n * n];
        for (j, e) in self.base_counit.iter().enumerate() {
            for (i, x) in a.iter().enumerate() {
                out[j * n + i].add_mul(e, x);
            }
        }
        out
    }

    /// Image of a tensor over `H` under the primal embedding on every leg.
    pub fn embed_primal_tensor(&self, t: &Tensor<F>) -> Tensor<F> {
        let n = self.base_dim;
        let mut out = Tensor::zero(t.order());
        for (k, c) in t.terms() {
            let mut partial: Vec<(Vec<usize>, F)> = vec![(Vec::new(), c.clone())];
            for &i in k {
                let mut next = Vec::new();
                for (idx, x) in &partial {
                    for (j, e) in self.base_counit.iter().enumerate() {
                        if e.is_zero() {
                            continue;
                        }
                        let mut idx = idx.clone();
                        idx.push(j * n + i);
                        next.push((idx, x.mul_ref(e)));
                    }
                }
                partial = next;
            }
            for (idx, x) in partial {
                out.add_term(idx, x);
            }
        }
        out
    }

    /// Same R-matrix but a different algebra structure (negative controls).
    pub fn with_algebra(&self, algebra: HopfAlgebra<F>) -> Self {
        Self {
            algebra,
            r: self.r.clone(),
            base_dim: self.base_dim,
            base_counit: self.base_counit.clone(),
        }
    }

    /// `u = m₂₁(Id ⊗ S)(R) = Σᵢ S(R⁽²⁾ᵢ) R⁽¹⁾ᵢ`, using the double's antipode.
    pub fn drinfeld_element(&self) -> Vec<F> {
        let d = &self.algebra;
        let sr = d.tensor_map_leg(&self.r, 1, d.antipode_matrix());
        d.tensor_contract(&sr, &[1, 0])
    }

    /// `R⁻¹ = (S ⊗ Id)(R)`, checked on both sides.
    pub fn r_inverse(&self) -> Option<Tensor<F>> {
        let d = &self.algebra;
        let inv = d.tensor_map_leg(&self.r, 0, d.antipode_matrix());
        let one = d.tensor_one(2);
        (d.tensor_mul(&self.r, &inv) == one && d.tensor_mul(&inv, &self.r) == one).then_some(inv)
    }

    /// `(Δ⊗Id)(R) = R₁₃R₂₃` and `(Id⊗Δ)(R) = R₁₃R₁₂`; returns failures.
    pub fn check_hexagons(&self) -> Vec<String> {
        let d = &self.algebra;
        let unit = d.one();
        let r13 = self.r.place(&[0, 2], 3, &unit);
        let r23 = self.r.place(&[1, 2], 3, &unit);
        let r12 = self.r.place(&[0, 1], 3, &unit);
        let mut bad = Vec::new();
        if d.tensor_comul_leg(&self.r, 0) != d.tensor_mul(&r13, &r23) {
            bad.push("(Δ⊗Id)(R) != R13·R23".into());
        }
        if d.tensor_comul_leg(&self.r, 1) != d.tensor_mul(&r13, &r12) {
            bad.push("(Id⊗Δ)(R) != R13·R12".into());
        }
        bad
    }

    /// `Δ^op(a)·R = R·Δ(a)` for every basis element `a`; returns failures.
    pub fn check_intertwiner(&self) -> Vec<String> {
        let d = &self.algebra;
        (0..d.dim())
            .into_par_iter()
            .filter_map(|k| {
                let delta = d.comult_basis(k);
                let lhs = d.tensor_mul(&delta.flip(), &self.r);
                let rhs = d.tensor_mul(&self.r, &delta);
                (lhs != rhs).then(|| format!("Δ^op({0})R != RΔ({0})", d.basis_labels()[k]))
            })
            .collect()
    }

    /// Every quasitriangularity condition: R invertible, hexagons,
    /// intertwiner.
    pub fn check_quasitriangular(&self) -> Vec<String> {
        let mut bad = Vec::new();
        if self.r_inverse().is_none() {
            bad.push("R is not invertible with inverse (S⊗Id)(R)".into());
        }
        bad.extend(self.check_hexagons());
        bad.extend(self.check_intertwiner());
        bad
    }

    /// `S²(b) = u b u⁻¹` for every basis element `b`, with `u` invertible.
    pub fn verify_s2_conjugation(&self, u: &[F]) -> bool {
        let d = &self.algebra;
        if !matches!(d.inverse(u), Ok(Some(_))) {
            return false;
        }
        let Ok(s2) = d.antipode_power(2) else {
            return false;
        };
        (0..d.dim()).into_par_iter().all(|k| {
            let b = d.basis_element(k);
            let s2b = s2.column(k);
            d.mul_unchecked(&s2b, u) == d.mul_unchecked(u, &b)
        })
    }
}
