use num_integer::Integer;

use super::{HopfAlgebra, Tensor};
use crate::error::{Error, Result};
use crate::scalar::Field;

/// A verified finite group of grouplike elements, closed under products and
/// inverses.
#[derive(Clone, Debug)]
pub struct GrouplikeSet<F> {
    elements: Vec<Vec<F>>,
}

impl<F: Field> HopfAlgebra<F> {
    /// `Δ(g) = g ⊗ g` and `ε(g) = 1`, exactly.
    pub fn is_grouplike(&self, g: &[F]) -> bool {
        if g.len() != self.dim() {
            return false;
        }
        let Ok(eps) = self.counit(g) else {
            return false;
        };
        if !eps.is_one() {
            return false;
        }
        self.comul(g).expect("shape") == Tensor::from_elements(&[g, g])
    }

    /// Smallest `k ≤ bound` with `g^k = 1`.
    pub fn element_order(&self, g: &[F], bound: u64) -> Result<u64> {
        let mut acc = g.to_vec();
        for k in 1..=bound {
            if self.is_one(&acc) {
                return Ok(k);
            }
            acc = self.mul(&acc, g)?;
        }
        Err(Error::BoundExceeded {
            what: "element order".into(),
            bound,
        })
    }

    /// Order of `S²`: smallest `k ≤ bound` with `(S²)^k = Id`.
    pub fn s2_order(&self, bound: u64) -> Result<u64> {
        let s = self.antipode_matrix();
        let s2 = s.mul(s)?;
        let mut acc = s2.clone();
        for k in 1..=bound {
            if acc.is_identity() {
                return Ok(k);
            }
            acc = acc.mul(&s2)?;
        }
        Err(Error::BoundExceeded {
            what: "order of S^2".into(),
            bound,
        })
    }

    /// Verify the declared grouplikes of this algebra as a group.
    pub fn grouplike_group(&self) -> Result<GrouplikeSet<F>> {
        GrouplikeSet::verify(self, self.declared_grouplikes().to_vec())
    }
}

impl<F: Field> GrouplikeSet<F> {
    /// Checks that every element is grouplike, that the unit is present, and
    /// that the set is closed under products and inverses (`g⁻¹ = S(g)`).
    pub fn verify(h: &HopfAlgebra<F>, elements: Vec<Vec<F>>) -> Result<Self> {
        let fail = |msg: String| Error::AxiomViolations {
            algebra: h.name().to_string(),
            violations: vec![format!("grouplike: {msg}")],
        };
        for (i, g) in elements.iter().enumerate() {
            if !h.is_grouplike(g) {
                return Err(fail(format!("element #{i} is not grouplike")));
            }
        }
        let contains = |x: &[F]| elements.iter().any(|g| g.as_slice() == x);
        if !contains(&h.one()) {
            return Err(fail("unit missing".into()));
        }
        for (i, g) in elements.iter().enumerate() {
            if !contains(&h.antipode(g)?) {
                return Err(fail(format!("inverse of #{i} missing")));
            }
            for (j, k) in elements.iter().enumerate() {
                if !contains(&h.mul(g, k)?) {
                    return Err(fail(format!("product #{i}·#{j} missing")));
                }
            }
        }
        Ok(Self { elements })
    }

    pub fn elements(&self) -> &[Vec<F>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self, h: &HopfAlgebra<F>) -> Result<u64> {
        let bound = self.elements.len() as u64;
        self.elements
            .iter()
            .try_fold(1u64, |acc, g| Ok(acc.lcm(&h.element_order(g, bound)?)))
    }
}
