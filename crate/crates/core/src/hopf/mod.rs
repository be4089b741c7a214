//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! Elements are dense coefficient vectors in the algebra's basis; elements
//! of tensor powers are sparse [`Tensor`]s. The antipode matrix uses the
//! column convention: column `k` holds the coordinates of `S(e_k)`.

mod constructions;
mod grouplike;
mod tensor;
mod validate;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Field;

pub use constructions::Variant;
pub use grouplike::GrouplikeSet;
pub use tensor::{Tensor, TensorSquare};
pub use validate::{Axiom, Violation};

/// Sparse vector: `(basis index, coefficient)` pairs with nonzero coefficients.
pub type SparseVec<F> = Vec<(usize, F)>;

/// Raw structure constants, before the shape checks done by
/// [`HopfAlgebra::new`].
#[derive(Clone, Debug)]
pub struct HopfData<F> {
    pub name: String,
    pub conductor: u32,
    pub basis_labels: Vec<String>,
    /// `mult[i][j]` = coordinates of `e_i · e_j`.
    pub mult: Vec<Vec<Vec<F>>>,
    pub unit: Vec<F>,
    /// `comult[k]` = coefficient matrix of `Δ(e_k)`.
    pub comult: Vec<Matrix<F>>,
    pub counit: Vec<F>,
    pub antipode: Matrix<F>,
    pub grouplikes: Vec<Vec<F>>,
    pub grading: Option<Vec<u32>>,
}

/// A finite-dimensional Hopf algebra over an exact field.
///
/// Construction only checks shapes; [`HopfAlgebra::validate`] checks the
/// axioms.
#[derive(Clone, Debug)]
pub struct HopfAlgebra<F> {
    name: String,
    conductor: u32,
    basis_labels: Vec<String>,
    mult: Vec<Vec<SparseVec<F>>>,
    unit: Vec<F>,
    comult: Vec<Vec<(usize, usize, F)>>,
    counit: Vec<F>,
    antipode: Matrix<F>,
    antipode_inv: Option<Matrix<F>>,
    grouplikes: Vec<Vec<F>>,
    grading: Option<Vec<u32>>,
}

fn sparse<F: Field>(v: &[F]) -> SparseVec<F> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

impl<F: Field> HopfAlgebra<F> {
    pub fn new(data: HopfData<F>) -> Result<Self> {
        let n = data.basis_labels.len();
        let shape_err = |what: &str| Error::DimensionMismatch(format!("{}: {what}", data.name));
        if n == 0 {
            return Err(shape_err("dimension must be positive"));
        }
        if data.conductor == 0 {
            return Err(shape_err("conductor must be positive"));
        }
        if data.mult.len() != n
            || data
                .mult
                .iter()
                .any(|row| row.len() != n || row.iter().any(|v| v.len() != n))
        {
            return Err(shape_err("multiplication tensor shape"));
        }
        if data.unit.len() != n || data.counit.len() != n {
            return Err(shape_err("unit/counit length"));
        }
        if data.comult.len() != n || data.comult.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(shape_err("comultiplication tensor shape"));
        }
        if data.antipode.rows() != n || data.antipode.cols() != n {
            return Err(shape_err("antipode shape"));
        }
        if data.grouplikes.iter().any(|g| g.len() != n) {
            return Err(shape_err("grouplike length"));
        }
        if data.grading.as_ref().is_some_and(|g| g.len() != n) {
            return Err(shape_err("grading length"));
        }
        let mult = data
            .mult
            .iter()
            .map(|row| row.iter().map(|v| sparse(v)).collect())
            .collect();
        let comult = data
            .comult
            .iter()
            .map(|m| {
                let mut entries = Vec::new();
                for i in 0..n {
                    for j in 0..n {
                        let c = m.get(i, j);
                        if !c.is_zero() {
                            entries.push((i, j, c.clone()));
                        }
                    }
                }
                entries
            })
            .collect();
        let antipode_inv = data.antipode.inverse();
        Ok(Self {
            name: data.name,
            conductor: data.conductor,
            basis_labels: data.basis_labels,
            mult,
            unit: data.unit,
            comult,
            counit: data.counit,
            antipode: data.antipode,
            antipode_inv,
            grouplikes: data.grouplikes,
            grading: data.grading,
        })
    }

    /// Build directly from sparse structure constants (shapes are trusted).
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn from_sparse(
        name: String,
        conductor: u32,
        basis_labels: Vec<String>,
        mult: Vec<Vec<SparseVec<F>>>,
        unit: Vec<F>,
        comult: Vec<Vec<(usize, usize, F)>>,
        counit: Vec<F>,
        antipode: Matrix<F>,
    ) -> Self {
        let antipode_inv = antipode.inverse();
        Self {
            name,
            conductor,
            basis_labels,
            mult,
            unit,
            comult,
            counit,
            antipode,
            antipode_inv,
            grouplikes: Vec::new(),
            grading: None,
        }
    }

    /// Replace the antipode (used to build negative controls).
    pub fn with_antipode(mut self, antipode: Matrix<F>) -> Result<Self> {
        if antipode.rows() != self.dim() || antipode.cols() != self.dim() {
            return Err(Error::DimensionMismatch("antipode shape".into()));
        }
        self.antipode_inv = antipode.inverse();
        self.antipode = antipode;
        Ok(self)
    }

    /// Back to raw structure constants.
    pub fn to_data(&self) -> HopfData<F> {
        let n = self.dim();
        HopfData {
            name: self.name.clone(),
            conductor: self.conductor,
            basis_labels: self.basis_labels.clone(),
            mult: (0..n)
                .map(|i| (0..n).map(|j| self.densify(&self.mult[i][j])).collect())
                .collect(),
            unit: self.unit.clone(),
            comult: (0..n).map(|k| self.comult_basis(k).to_matrix(n, n)).collect(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
            grouplikes: self.grouplikes.clone(),
            grading: self.grading.clone(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.basis_labels.len()
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn declared_grouplikes(&self) -> &[Vec<F>] {
        &self.grouplikes
    }

    pub fn with_grouplikes(mut self, grouplikes: Vec<Vec<F>>) -> Self {
        self.grouplikes = grouplikes;
        self
    }

    pub fn grading(&self) -> Option<&[u32]> {
        self.grading.as_deref()
    }

    pub fn with_grading(mut self, grading: Option<Vec<u32>>) -> Self {
        self.grading = grading;
        self
    }

    pub fn antipode_matrix(&self) -> &Matrix<F> {
        &self.antipode
    }

    pub fn antipode_inverse_matrix(&self) -> Option<&Matrix<F>> {
        self.antipode_inv.as_ref()
    }

    fn densify(&self, v: &SparseVec<F>) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (i, c) in v {
            out[*i] = c.clone();
        }
        out
    }

    // ----- basis-level structure -----

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec<F> {
        &self.mult[i][j]
    }

    pub fn comult_entries(&self, k: usize) -> &[(usize, usize, F)] {
        &self.comult[k]
    }

    pub fn comult_basis(&self, k: usize) -> Tensor<F> {
        let mut t = Tensor::zero(2);
        for (i, j, c) in &self.comult[k] {
            t.add_term(vec![*i, *j], c.clone());
        }
        t
    }

    pub fn counit_coeffs(&self) -> &[F] {
        &self.counit
    }

    // ----- elements -----

    pub fn one(&self) -> Vec<F> {
        self.unit.clone()
    }

    pub fn zero(&self) -> Vec<F> {
        vec![F::zero(); self.dim()]
    }

    pub fn basis_element(&self, i: usize) -> Vec<F> {
        let mut v = self.zero();
        v[i] = F::one();
        v
    }

    fn check_len(&self, a: &[F]) -> Result<()> {
        if a.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "element of length {} used in {} (dim {})",
                a.len(),
                self.name,
                self.dim()
            )));
        }
        Ok(())
    }

    pub fn mul(&self, a: &[F], b: &[F]) -> Result<Vec<F>> {
        self.check_len(a)?;
        self.check_len(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    pub(crate) fn mul_unchecked(&self, a: &[F], b: &[F]) -> Vec<F> {
        let mut out = self.zero();
        let b_terms: SparseVec<F> = sparse(b);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in &b_terms {
                let xy = x.mul_ref(y);
                for (k, c) in &self.mult[i][*j] {
                    out[*k].add_mul(&xy, c);
                }
            }
        }
        out
    }

    /// `a^k` (with `a^0 = 1`).
    pub fn pow(&self, a: &[F], k: u64) -> Result<Vec<F>> {
        self.check_len(a)?;
        let mut acc = self.one();
        let mut base = a.to_vec();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_unchecked(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul_unchecked(&base, &base);
            }
        }
        Ok(acc)
    }

    pub fn comul(&self, a: &[F]) -> Result<Tensor<F>> {
        self.check_len(a)?;
        let mut t = Tensor::zero(2);
        for (k, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, j, c) in &self.comult[k] {
                t.add_term(vec![*i, *j], x.mul_ref(c));
            }
        }
        Ok(t)
    }

    pub fn counit(&self, a: &[F]) -> Result<F> {
        self.check_len(a)?;
        let mut acc = F::zero();
        for (x, e) in a.iter().zip(&self.counit) {
            acc.add_mul(x, e);
        }
        Ok(acc)
    }

    pub fn antipode(&self, a: &[F]) -> Result<Vec<F>> {
        self.antipode.apply(a)
    }

    pub fn antipode_inv(&self, a: &[F]) -> Result<Vec<F>> {
        self.antipode_inv
            .as_ref()
            .ok_or_else(|| Error::Inconsistent(format!("antipode of {} is not invertible", self.name)))?
            .apply(a)
    }

    /// `S^k` for any integer `k`.
    pub fn antipode_power(&self, k: i64) -> Result<Matrix<F>> {
        let base = if k >= 0 {
            &self.antipode
        } else {
            self.antipode_inv.as_ref().ok_or_else(|| {
                Error::Inconsistent(format!("antipode of {} is not invertible", self.name))
            })?
        };
        base.pow(k.unsigned_abs())
    }

    /// Multiplicative inverse of an element by an exact linear solve, if any.
    pub fn inverse(&self, a: &[F]) -> Result<Option<Vec<F>>> {
        self.check_len(a)?;
        let n = self.dim();
        // Column j of the left-multiplication matrix is a·e_j.
        let mut l = Matrix::zeros(n, n);
        for j in 0..n {
            let col = self.mul_unchecked(a, &self.basis_element(j));
            for (i, c) in col.into_iter().enumerate() {
                l.set(i, j, c);
            }
        }
        Ok(l.inverse().map(|inv| inv.apply(&self.unit).expect("shape")))
    }

    /// Matrix of left multiplication by `a` in the chosen basis.
    pub fn regular_representation(&self, a: &[F]) -> Result<Matrix<F>> {
        self.check_len(a)?;
        let n = self.dim();
        let mut l: Matrix<F> = Matrix::zeros(n, n);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in &self.mult[i][j] {
                    l.get_mut(*k, j).add_mul(x, c);
                }
            }
        }
        Ok(l)
    }

    // ----- tensor powers -----

    /// Leg-wise product in `A^{⊗k}`.
    pub fn tensor_mul(&self, a: &Tensor<F>, b: &Tensor<F>) -> Tensor<F> {
        assert_eq!(a.order(), b.order(), "tensor order mismatch");
        let mut out = Tensor::zero(a.order());
        for (ka, ca) in a.terms() {
            for (kb, cb) in b.terms() {
                let coeff = ca.mul_ref(cb);
                let mut partial: Vec<(Vec<usize>, F)> = vec![(Vec::with_capacity(ka.len()), coeff)];
                for (i, j) in ka.iter().zip(kb) {
                    let prod = &self.mult[*i][*j];
                    if prod.is_empty() {
                        partial.clear();
                        break;
                    }
                    let mut next = Vec::with_capacity(partial.len() * prod.len());
                    for (idx, c) in &partial {
                        for (k, m) in prod {
                            let mut idx = idx.clone();
                            idx.push(*k);
                            next.push((idx, c.mul_ref(m)));
                        }
                    }
                    partial = next;
                }
                for (idx, c) in partial {
                    out.add_term(idx, c);
                }
            }
        }
        out
    }

    /// `1 ⊗ … ⊗ 1`.
    pub fn tensor_one(&self, order: usize) -> Tensor<F> {
        let factors: Vec<&[F]> = (0..order).map(|_| self.unit.as_slice()).collect();
        Tensor::from_elements(&factors)
    }

    /// Apply Δ on one leg, splitting it into two adjacent legs.
    pub fn tensor_comul_leg(&self, t: &Tensor<F>, leg: usize) -> Tensor<F> {
        let mut out = Tensor::zero(t.order() + 1);
        for (k, c) in t.terms() {
            for (i, j, d) in &self.comult[k[leg]] {
                let mut idx = Vec::with_capacity(k.len() + 1);
                idx.extend_from_slice(&k[..leg]);
                idx.push(*i);
                idx.push(*j);
                idx.extend_from_slice(&k[leg + 1..]);
                out.add_term(idx, c.mul_ref(d));
            }
        }
        out
    }

    /// Apply ε on one leg, removing it.
    pub fn tensor_counit_leg(&self, t: &Tensor<F>, leg: usize) -> Tensor<F> {
        let mut out = Tensor::zero(t.order() - 1);
        for (k, c) in t.terms() {
            let e = &self.counit[k[leg]];
            if e.is_zero() {
                continue;
            }
            let mut idx = k.to_vec();
            idx.remove(leg);
            out.add_term(idx, c.mul_ref(e));
        }
        out
    }

    /// Apply a linear operator (column convention) on one leg.
    pub fn tensor_map_leg(&self, t: &Tensor<F>, leg: usize, op: &Matrix<F>) -> Tensor<F> {
        let mut out = Tensor::zero(t.order());
        for (k, c) in t.terms() {
            let j = k[leg];
            for i in 0..op.rows() {
                let m = op.get(i, j);
                if m.is_zero() {
                    continue;
                }
                let mut idx = k.to_vec();
                idx[leg] = i;
                out.add_term(idx, c.mul_ref(m));
            }
        }
        out
    }

    /// Multiply the legs of a tensor together in the given order of legs:
    /// `a₁ ⊗ … ⊗ a_k ↦ a_{order[0]} ⋯ a_{order[k-1]}`.
    pub fn tensor_contract(&self, t: &Tensor<F>, order: &[usize]) -> Vec<F> {
        let mut out = self.zero();
        for (k, c) in t.terms() {
            let mut acc = self.basis_element(k[order[0]]);
            for &leg in &order[1..] {
                acc = self.mul_unchecked(&acc, &self.basis_element(k[leg]));
            }
            for (o, a) in out.iter_mut().zip(acc) {
                o.add_mul(c, &a);
            }
        }
        out
    }

    /// `m(t)` for an order-2 tensor.
    pub fn multiply_legs(&self, t: &Tensor<F>) -> Vec<F> {
        let mut out = self.zero();
        for (k, c) in t.terms() {
            for (l, m) in &self.mult[k[0]][k[1]] {
                out[*l].add_mul(c, m);
            }
        }
        out
    }

    /// Inverse of an order-2 tensor in the algebra `A ⊗ A`, by solving
    /// `t · x = 1 ⊗ 1` exactly; `None` if `t` is not invertible.
    pub fn tensor_square_inverse(&self, t: &Tensor<F>) -> Option<Tensor<F>> {
        let n = self.dim();
        let nn = n * n;
        let mut l = Matrix::zeros(nn, nn);
        for j in 0..nn {
            let col = self.tensor_mul(t, &Tensor::basis(vec![j / n, j % n]));
            for (k, c) in col.terms() {
                l.set(k[0] * n + k[1], j, c.clone());
            }
        }
        let inv = l.inverse()?;
        let one = self.tensor_one(2);
        let mut rhs = vec![F::zero(); nn];
        for (k, c) in one.terms() {
            rhs[k[0] * n + k[1]] = c.clone();
        }
        let x = inv.apply(&rhs).ok()?;
        let mut out = Tensor::zero(2);
        for (idx, c) in x.into_iter().enumerate() {
            out.add_term(vec![idx / n, idx % n], c);
        }
        // A one-sided inverse in a finite-dimensional algebra is two-sided.
        Some(out)
    }

    pub fn is_one(&self, a: &[F]) -> bool {
        a == self.unit.as_slice()
    }

    pub fn is_scalar_multiple_of_one(&self, a: &[F]) -> Option<F> {
        let (i, c) = self.unit.iter().enumerate().find(|(_, c)| !c.is_zero())?;
        let lambda = a[i].clone() / c.clone();
        let scaled: Vec<F> = self.unit.iter().map(|u| u.mul_ref(&lambda)).collect();
        (scaled.as_slice() == a).then_some(lambda)
    }

    /// Change the scalar representation of every structure constant.
    pub fn map_scalars<G: Field>(&self, conductor: u32, f: impl Fn(&F) -> Result<G>) -> Result<HopfAlgebra<G>> {
        let data = self.to_data();
        let map_vec = |v: &Vec<F>| v.iter().map(&f).collect::<Result<Vec<G>>>();
        let map_mat = |m: &Matrix<F>| -> Result<Matrix<G>> {
            Matrix::from_vec(m.rows(), m.cols(), m.as_slice().iter().map(&f).collect::<Result<_>>()?)
        };
        HopfAlgebra::new(HopfData {
            name: data.name,
            conductor,
            basis_labels: data.basis_labels,
            mult: data
                .mult
                .iter()
                .map(|row| row.iter().map(map_vec).collect::<Result<_>>())
                .collect::<Result<_>>()?,
            unit: map_vec(&data.unit)?,
            comult: data.comult.iter().map(map_mat).collect::<Result<_>>()?,
            counit: map_vec(&data.counit)?,
            antipode: map_mat(&data.antipode)?,
            grouplikes: data.grouplikes.iter().map(map_vec).collect::<Result<_>>()?,
            grading: data.grading,
        })
    }
}

impl<F: Field> PartialEq for HopfAlgebra<F> {
    /// Structure constants, labels, declared grouplikes and grading; the name
    /// is ignored.
    fn eq(&self, other: &Self) -> bool {
        self.conductor == other.conductor
            && self.basis_labels == other.basis_labels
            && self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
            && self.grouplikes == other.grouplikes
            && self.grading == other.grading
    }
}

/// `true` when every coefficient is zero.
pub fn is_zero_vec<F: Field>(v: &[F]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub(crate) fn unit_vec<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}
