use std::collections::BTreeMap;


use crate::linalg::Matrix;
use crate::scalar::Field;

/// Sparse element of a tensor power `A^{⊗k}`, keyed by basis multi-indices.
///
/// The same type houses elements of `H ⊗ H` (twists, R-matrices, `Rₙ`) and
/// of `H^{⊗3}` (the two sides of hexagon and cocycle identities). Zero
/// coefficients are never stored, so derived equality is value equality.
#[derive(Clone, PartialEq)]
pub struct Tensor<F> {
    order: usize,
    terms: BTreeMap<Vec<usize>, F>,
}

/// An element of `A ⊗ A`.
pub type TensorSquare<F> = Tensor<F>;

impl<F: Field> Tensor<F> {
    pub fn zero(order: usize) -> Self {
        Self {
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(index: Vec<usize>) -> Self {
        let mut t = Self::zero(index.len());
        t.terms.insert(index, F::one());
        t
    }

    /// `a_1 ⊗ a_2 ⊗ … ⊗ a_k` for dense coefficient vectors.
    pub fn from_elements(factors: &[&[F]]) -> Self {
        let mut t = Self::zero(factors.len());
        let mut acc: Vec<(Vec<usize>, F)> = vec![(Vec::new(), F::one())];
        for f in factors {
            let mut next = Vec::new();
            for (idx, c) in &acc {
                for (i, x) in f.iter().enumerate() {
                    if !x.is_zero() {
                        let mut k = idx.clone();
                        k.push(i);
                        next.push((k, c.mul_ref(x)));
                    }
                }
            }
            acc = next;
        }
        for (k, c) in acc {
            t.add_term(k, c);
        }
        t
    }

    /// Coefficient matrix of an order-2 tensor: `Σ m[i][j] e_i ⊗ e_j`.
    pub fn from_matrix(m: &Matrix<F>) -> Self {
        let mut t = Self::zero(2);
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let c = m.get(i, j);
                if !c.is_zero() {
                    t.terms.insert(vec![i, j], c.clone());
                }
            }
        }
        t
    }

    pub fn to_matrix(&self, rows: usize, cols: usize) -> Matrix<F> {
        assert_eq!(self.order, 2, "to_matrix needs an order-2 tensor");
        let mut m = Matrix::zeros(rows, cols);
        for (k, c) in &self.terms {
            m.set(k[0], k[1], c.clone());
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &F)> {
        self.terms.iter().map(|(k, c)| (k.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, index: &[usize]) -> F {
        self.terms.get(index).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, index: Vec<usize>, c: F) {
        debug_assert_eq!(index.len(), self.order);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(index) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.order, rhs.order, "tensor order mismatch");
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&-F::one()))
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(self.order);
        if c.is_zero() {
            return out;
        }
        for (k, x) in &self.terms {
            out.terms.insert(k.clone(), x.mul_ref(c));
        }
        out
    }

    /// Reorder legs: leg `i` of the result is leg `perm[i]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order);
        let mut out = Self::zero(self.order);
        for (k, c) in &self.terms {
            out.terms
                .insert(perm.iter().map(|&p| k[p]).collect(), c.clone());
        }
        out
    }

    /// `σ(a ⊗ b) = b ⊗ a` on an order-2 tensor.
    pub fn flip(&self) -> Self {
        self.permute(&[1, 0])
    }

    /// Embed into a higher tensor power: leg `i` of `self` goes to leg
    /// `positions[i]` of the result; the remaining legs carry `unit`.
    /// This is the leg notation `X₁₃`, `X₂₃`, ….
    pub fn place(&self, positions: &[usize], order: usize, unit: &[F]) -> Self {
        assert_eq!(positions.len(), self.order);
        let unit_terms: Vec<(usize, &F)> = unit
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let free: Vec<usize> = (0..order).filter(|p| !positions.contains(p)).collect();
        let mut out = Self::zero(order);
        for (k, c) in &self.terms {
            // product over free legs of unit expansions
            let mut partial: Vec<(Vec<usize>, F)> = vec![(vec![0; order], c.clone())];
            for (leg, &p) in positions.iter().enumerate() {
                for entry in partial.iter_mut() {
                    entry.0[p] = k[leg];
                }
            }
            for &fl in &free {
                let mut next = Vec::with_capacity(partial.len() * unit_terms.len());
                for (idx, x) in &partial {
                    for &(u, uc) in &unit_terms {
                        let mut idx = idx.clone();
                        idx[fl] = u;
                        next.push((idx, x.mul_ref(uc)));
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
}

impl<F: std::fmt::Debug> std::fmt::Debug for Tensor<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| format!("({c:?})·e{k:?}"))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
