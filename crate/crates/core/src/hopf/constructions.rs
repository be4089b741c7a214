use std::str::FromStr;

use num_integer::Integer;
use num_traits::Zero;

use super::{unit_vec, HopfAlgebra, HopfData};
use crate::error::{Error, Result};
use crate::exactfield::Cyclotomic;
use crate::linalg::{Matrix, SpanBuilder};
use crate::scalar::Field;

/// Which structure maps [`HopfAlgebra::variant`] reverses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// Opposite multiplication.
    Op,
    /// Opposite comultiplication.
    Cop,
    /// Both.
    OpCop,
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "op" => Ok(Variant::Op),
            "cop" => Ok(Variant::Cop),
            "op_cop" | "opcop" => Ok(Variant::OpCop),
            _ => Err(Error::Parse(format!("unknown variant {s:?}"))),
        }
    }
}

impl<F: Field> HopfAlgebra<F> {
    /// The one-dimensional Hopf algebra (the ground field).
    pub fn trivial() -> Self {
        let one = F::one();
        HopfAlgebra::new(HopfData {
            name: "trivial".into(),
            conductor: 1,
            basis_labels: vec!["1".into()],
            mult: vec![vec![vec![one.clone()]]],
            unit: vec![one.clone()],
            comult: vec![Matrix::identity(1)],
            counit: vec![one.clone()],
            antipode: Matrix::identity(1),
            grouplikes: vec![vec![one]],
            grading: Some(vec![0]),
        })
        .expect("well-formed")
    }

    /// The dual Hopf algebra on the dual basis: multiplication is the
    /// transpose of Δ, Δ the transpose of multiplication, unit and counit
    /// swap roles and the antipode is transposed.
    pub fn dual(&self) -> Self {
        let n = self.dim();
        let mut mult = vec![vec![vec![F::zero(); n]; n]; n];
        for k in 0..n {
            for (i, j, c) in self.comult_entries(k) {
                mult[*i][*j][k] = c.clone();
            }
        }
        let mut comult = vec![Matrix::zeros(n, n); n];
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.mul_basis(i, j) {
                    comult[*k].set(i, j, c.clone());
                }
            }
        }
        let labels = self.basis_labels().iter().map(|l| format!("{l}*")).collect();
        HopfAlgebra::new(HopfData {
            name: format!("dual({})", self.name()),
            conductor: self.conductor(),
            basis_labels: labels,
            mult,
            unit: self.counit_coeffs().to_vec(),
            comult,
            counit: self.one(),
            antipode: self.antipode_matrix().transpose(),
            grouplikes: Vec::new(),
            grading: self.grading().map(<[u32]>::to_vec),
        })
        .expect("dual of a well-formed algebra is well-formed")
    }

    /// `H^op`, `H^cop` or `H^{op,cop}`. The antipode becomes `S⁻¹` for the
    /// one-sided variants.
    pub fn variant(&self, which: Variant) -> Result<Self> {
        let n = self.dim();
        let mut data = self.to_data();
        let (flip_mult, flip_comult) = match which {
            Variant::Op => (true, false),
            Variant::Cop => (false, true),
            Variant::OpCop => (true, true),
        };
        if flip_mult {
            let m = data.mult.clone();
            for i in 0..n {
                for j in 0..n {
                    data.mult[i][j] = m[j][i].clone();
                }
            }
        }
        if flip_comult {
            data.comult = data.comult.iter().map(Matrix::transpose).collect();
        }
        if flip_mult != flip_comult {
            data.antipode = self
                .antipode_inverse_matrix()
                .ok_or_else(|| Error::Inconsistent(format!("antipode of {} is singular", self.name())))?
                .clone();
        }
        let suffix = match which {
            Variant::Op => "op",
            Variant::Cop => "cop",
            Variant::OpCop => "op_cop",
        };
        data.name = format!("{}^{suffix}", self.name());
        HopfAlgebra::new(data)
    }

    /// `H₁ ⊗ H₂` on the basis `e_i ⊗ f_j ↦ i·dim(H₂) + j`. Scalars of the two
    /// factors must be compatible (see `Hopf::tensor_lifted` for cyclotomic
    /// factors of different conductors).
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        let (n1, n2) = (self.dim(), other.dim());
        let n = n1 * n2;
        let idx = |i: usize, j: usize| i * n2 + j;
        let mut mult = vec![vec![vec![F::zero(); n]; n]; n];
        for i1 in 0..n1 {
            for j1 in 0..n1 {
                let p1 = self.mul_basis(i1, j1);
                for i2 in 0..n2 {
                    for j2 in 0..n2 {
                        let out = &mut mult[idx(i1, i2)][idx(j1, j2)];
                        for (k1, c1) in p1 {
                            for (k2, c2) in other.mul_basis(i2, j2) {
                                out[idx(*k1, *k2)] = c1.mul_ref(c2);
                            }
                        }
                    }
                }
            }
        }
        let mut comult = vec![Matrix::zeros(n, n); n];
        for k1 in 0..n1 {
            for k2 in 0..n2 {
                let m = &mut comult[idx(k1, k2)];
                for (a1, b1, c1) in self.comult_entries(k1) {
                    for (a2, b2, c2) in other.comult_entries(k2) {
                        m.set(idx(*a1, *a2), idx(*b1, *b2), c1.mul_ref(c2));
                    }
                }
            }
        }
        let kron_vec = |a: &[F], b: &[F]| -> Vec<F> {
            a.iter()
                .flat_map(|x| b.iter().map(move |y| x.mul_ref(y)))
                .collect()
        };
        let mut labels = Vec::with_capacity(n);
        for a in self.basis_labels() {
            for b in other.basis_labels() {
                labels.push(format!("{a}⊗{b}"));
            }
        }
        let mut grouplikes = Vec::new();
        for g in self.declared_grouplikes() {
            for h in other.declared_grouplikes() {
                grouplikes.push(kron_vec(g, h));
            }
        }
        let grading = match (self.grading(), other.grading()) {
            (Some(a), Some(b)) => Some(
                a.iter()
                    .flat_map(|x| b.iter().map(move |y| x + y))
                    .collect(),
            ),
            _ => None,
        };
        HopfAlgebra::new(HopfData {
            name: format!("{}⊗{}", self.name(), other.name()),
            conductor: self.conductor().lcm(&other.conductor()),
            basis_labels: labels,
            mult,
            unit: kron_vec(&self.one(), &other.one()),
            comult,
            counit: kron_vec(self.counit_coeffs(), other.counit_coeffs()),
            antipode: self.antipode_matrix().kron(other.antipode_matrix()),
            grouplikes,
            grading,
        })
    }

    /// Smallest Hopf subalgebra containing `1` and `generators`: the span is
    /// grown until it is closed under products, both legs of Δ, and S.
    /// Returned as a standalone algebra on an echelon basis of the span.
    pub fn subalgebra_closure(&self, generators: &[Vec<F>]) -> Result<Self> {
        let n = self.dim();
        for g in generators {
            if g.len() != n {
                return Err(Error::DimensionMismatch("generator length".into()));
            }
        }
        let mut span = SpanBuilder::new(n);
        let mut basis: Vec<Vec<F>> = Vec::new();
        let mut queue: Vec<Vec<F>> = vec![self.one()];
        queue.extend(generators.iter().cloned());
        while let Some(v) = queue.pop() {
            if v.iter().all(Zero::is_zero) || span.insert(v.clone()).is_some() {
                continue;
            }
            basis.push(v.clone());
            for w in &basis {
                queue.push(self.mul_unchecked(&v, w));
                queue.push(self.mul_unchecked(w, &v));
            }
            queue.push(self.antipode(&v)?);
            let d = self.comul(&v)?.to_matrix(n, n);
            for j in 0..n {
                queue.push(d.column(j));
                queue.push(d.row(j).to_vec());
            }
        }
        let coords = |w: &[F]| -> Result<Vec<F>> {
            span.coordinates(w)
                .ok_or_else(|| Error::Inconsistent("closure is not closed".into()))
        };
        let k = basis.len();
        let mut mult = vec![vec![Vec::new(); k]; k];
        for a in 0..k {
            for b in 0..k {
                mult[a][b] = coords(&self.mul_unchecked(&basis[a], &basis[b]))?;
            }
        }
        let mut comult = Vec::with_capacity(k);
        for v in &basis {
            // Δ(v) = Σ_j col_j ⊗ e_j with col_j ∈ V; rewrite the left legs in
            // the new basis, then the right legs.
            let d = self.comul(v)?.to_matrix(n, n);
            let alphas: Vec<Vec<F>> = (0..n).map(|j| coords(&d.column(j))).collect::<Result<_>>()?;
            let mut m = Matrix::zeros(k, k);
            for c in 0..k {
                let w: Vec<F> = (0..n).map(|j| alphas[j][c].clone()).collect();
                for (dd, x) in coords(&w)?.into_iter().enumerate() {
                    m.set(c, dd, x);
                }
            }
            comult.push(m);
        }
        let mut antipode = Matrix::zeros(k, k);
        for (a, v) in basis.iter().enumerate() {
            for (i, x) in coords(&self.antipode(v)?)?.into_iter().enumerate() {
                antipode.set(i, a, x);
            }
        }
        let counit = basis
            .iter()
            .map(|v| self.counit(v))
            .collect::<Result<Vec<_>>>()?;
        let labels = basis.iter().enumerate().map(|(a, v)| self.describe(v, a)).collect();
        let grouplikes = self
            .declared_grouplikes()
            .iter()
            .filter_map(|g| span.coordinates(g))
            .collect();
        HopfAlgebra::new(HopfData {
            name: format!("sub({})", self.name()),
            conductor: self.conductor(),
            basis_labels: labels,
            mult,
            unit: coords(&self.one())?,
            comult,
            counit,
            antipode,
            grouplikes,
            grading: None,
        })
    }

    /// Label for a vector: the basis label when it is a basis element.
    fn describe(&self, v: &[F], fallback: usize) -> String {
        let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
        match nz.as_slice() {
            [i] if v[*i].is_one() => self.basis_labels()[*i].clone(),
            _ => format!("v{fallback}"),
        }
    }

    /// The subalgebra spanned by the basis elements of degree 0 of the
    /// declared grading.
    pub fn degree_zero_part(&self) -> Result<Self> {
        let deg = self
            .grading()
            .ok_or_else(|| Error::InvalidParameters(format!("{} has no grading", self.name())))?;
        let gens: Vec<Vec<F>> = (0..self.dim())
            .filter(|&i| deg[i] == 0)
            .map(|i| unit_vec(self.dim(), i))
            .collect();
        Ok(self
            .subalgebra_closure(&gens)?
            .with_name(format!("{}_0", self.name())))
    }
}

impl HopfAlgebra<Cyclotomic> {
    /// The same algebra with every irrational scalar re-expressed over
    /// Q(ζ_m); `m` must be a multiple of the current conductor.
    pub fn lifted(&self, m: u32) -> Result<Self> {
        if m % self.conductor() != 0 {
            return Err(Error::ConductorMismatch(self.conductor(), m));
        }
        self.map_scalars(m, |c| {
            if c.conductor() == 1 {
                Ok(c.clone())
            } else {
                c.lift(m)
            }
        })
    }

    /// Tensor product after lifting both factors to the lcm of their
    /// conductors.
    pub fn tensor_lifted(&self, other: &Self) -> Result<Self> {
        let m = self.conductor().lcm(&other.conductor());
        self.lifted(m)?.tensor(&other.lifted(m)?)
    }
}
