use std::fmt;

use rayon::prelude::*;

use super::{HopfAlgebra, Tensor};
use crate::scalar::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Associativity,
    Unit,
    Coassociativity,
    Counit,
    Bialgebra,
    CounitMultiplicative,
    Antipode,
    AntipodeInvertible,
    Grouplike,
    Grading,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Associativity => "associativity",
            Axiom::Unit => "unit",
            Axiom::Coassociativity => "coassociativity",
            Axiom::Counit => "counit",
            Axiom::Bialgebra => "bialgebra",
            Axiom::CounitMultiplicative => "counit-multiplicative",
            Axiom::Antipode => "antipode",
            Axiom::AntipodeInvertible => "antipode-invertible",
            Axiom::Grouplike => "grouplike",
            Axiom::Grading => "grading",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.axiom, self.detail)
    }
}

/// Instances reported per axiom before the rest are summarized.
const MAX_REPORTED: usize = 3;

struct Collector {
    out: Vec<Violation>,
}

impl Collector {
    fn push_all(&mut self, axiom: Axiom, mut details: Vec<String>) {
        let total = details.len();
        details.truncate(MAX_REPORTED);
        for d in details {
            self.out.push(Violation { axiom, detail: d });
        }
        if total > MAX_REPORTED {
            self.out.push(Violation {
                axiom,
                detail: format!("... and {} more", total - MAX_REPORTED),
            });
        }
    }
}

impl<F: Field> HopfAlgebra<F> {
    /// Check every Hopf algebra axiom exactly on all basis combinations,
    /// plus the declared grouplikes and grading. Empty means valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut c = Collector { out: Vec::new() };
        c.push_all(Axiom::Associativity, self.check_associativity());
        c.push_all(Axiom::Unit, self.check_unit());
        c.push_all(Axiom::Coassociativity, self.check_coassociativity());
        c.push_all(Axiom::Counit, self.check_counit());
        c.push_all(Axiom::Bialgebra, self.check_bialgebra());
        c.push_all(Axiom::CounitMultiplicative, self.check_counit_multiplicative());
        c.push_all(Axiom::Antipode, self.check_antipode());
        if self.antipode_inverse_matrix().is_none() {
            c.push_all(Axiom::AntipodeInvertible, vec!["S is singular".into()]);
        }
        c.push_all(Axiom::Grouplike, self.check_declared_grouplikes());
        c.push_all(Axiom::Grading, self.check_grading());
        c.out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Only the Hopf axioms (no declared grouplikes or grading).
    pub fn validate_axioms(&self) -> Vec<Violation> {
        self.validate()
            .into_iter()
            .filter(|v| !matches!(v.axiom, Axiom::Grouplike | Axiom::Grading))
            .collect()
    }

    fn label(&self, i: usize) -> &str {
        &self.basis_labels()[i]
    }

    fn check_associativity(&self) -> Vec<String> {
        let n = self.dim();
        (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                let mut bad = Vec::new();
                for j in 0..n {
                    let ij = self.mul_basis(i, j);
                    for k in 0..n {
                        let mut left = vec![F::zero(); n];
                        for (l, c) in ij {
                            for (m, d) in self.mul_basis(*l, k) {
                                left[*m].add_mul(c, d);
                            }
                        }
                        let mut right = vec![F::zero(); n];
                        for (l, c) in self.mul_basis(j, k) {
                            for (m, d) in self.mul_basis(i, *l) {
                                right[*m].add_mul(c, d);
                            }
                        }
                        if left != right {
                            bad.push(format!(
                                "({}·{})·{} != {}·({}·{})",
                                self.label(i),
                                self.label(j),
                                self.label(k),
                                self.label(i),
                                self.label(j),
                                self.label(k)
                            ));
                        }
                    }
                }
                bad
            })
            .collect()
    }

    fn check_unit(&self) -> Vec<String> {
        let one = self.one();
        (0..self.dim())
            .filter_map(|i| {
                let e = self.basis_element(i);
                let ok = self.mul_unchecked(&one, &e) == e && self.mul_unchecked(&e, &one) == e;
                (!ok).then(|| format!("1·{0} or {0}·1 differs from {0}", self.label(i)))
            })
            .collect()
    }

    fn check_coassociativity(&self) -> Vec<String> {
        (0..self.dim())
            .into_par_iter()
            .filter_map(|k| {
                let d = self.comult_basis(k);
                let left = self.tensor_comul_leg(&d, 0);
                let right = self.tensor_comul_leg(&d, 1);
                (left != right).then(|| format!("(Δ⊗id)Δ({0}) != (id⊗Δ)Δ({0})", self.label(k)))
            })
            .collect()
    }

    fn check_counit(&self) -> Vec<String> {
        (0..self.dim())
            .filter_map(|k| {
                let d = self.comult_basis(k);
                let e = Tensor::basis(vec![k]);
                let left = self.tensor_counit_leg(&d, 0);
                let right = self.tensor_counit_leg(&d, 1);
                (left != e || right != e)
                    .then(|| format!("(ε⊗id)Δ or (id⊗ε)Δ of {} is not the identity", self.label(k)))
            })
            .collect()
    }

    fn check_bialgebra(&self) -> Vec<String> {
        let n = self.dim();
        let mut bad: Vec<String> = (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                let di = self.comult_basis(i);
                let mut bad = Vec::new();
                for j in 0..n {
                    let dj = self.comult_basis(j);
                    let prod = self.tensor_mul(&di, &dj);
                    let mut lhs = Tensor::zero(2);
                    for (k, c) in self.mul_basis(i, j) {
                        lhs = lhs.add(&self.comult_basis(*k).scale(c));
                    }
                    if lhs != prod {
                        bad.push(format!(
                            "Δ({0}·{1}) != Δ({0})Δ({1})",
                            self.label(i),
                            self.label(j)
                        ));
                    }
                }
                bad
            })
            .collect();
        let one = self.one();
        let d1 = self.comul(&one).expect("shape");
        if d1 != self.tensor_one(2) {
            bad.push("Δ(1) != 1⊗1".into());
        }
        bad
    }

    fn check_counit_multiplicative(&self) -> Vec<String> {
        let n = self.dim();
        let eps = self.counit_coeffs();
        let mut bad = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let mut lhs = F::zero();
                for (k, c) in self.mul_basis(i, j) {
                    lhs.add_mul(c, &eps[*k]);
                }
                if lhs != eps[i].mul_ref(&eps[j]) {
                    bad.push(format!("ε({0}·{1}) != ε({0})ε({1})", self.label(i), self.label(j)));
                }
            }
        }
        if !self.counit(&self.one()).expect("shape").is_one() {
            bad.push("ε(1) != 1".into());
        }
        bad
    }

    fn check_antipode(&self) -> Vec<String> {
        let s = self.antipode_matrix();
        (0..self.dim())
            .filter_map(|k| {
                let d = self.comult_basis(k);
                let expected: Vec<F> = self
                    .one()
                    .iter()
                    .map(|u| u.mul_ref(&self.counit_coeffs()[k]))
                    .collect();
                let left = self.multiply_legs(&self.tensor_map_leg(&d, 0, s));
                let right = self.multiply_legs(&self.tensor_map_leg(&d, 1, s));
                (left != expected || right != expected).then(|| {
                    format!(
                        "m(S⊗id)Δ({0}) or m(id⊗S)Δ({0}) != ε({0})1",
                        self.label(k)
                    )
                })
            })
            .collect()
    }

    fn check_declared_grouplikes(&self) -> Vec<String> {
        self.declared_grouplikes()
            .iter()
            .enumerate()
            .filter(|(_, g)| !self.is_grouplike(g))
            .map(|(i, _)| format!("declared grouplike #{i} is not grouplike"))
            .collect()
    }

    fn check_grading(&self) -> Vec<String> {
        let Some(deg) = self.grading() else {
            return Vec::new();
        };
        let n = self.dim();
        let mut bad = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self
                    .mul_basis(i, j)
                    .iter()
                    .any(|(k, _)| deg[*k] != deg[i] + deg[j])
                {
                    bad.push(format!(
                        "{}·{} leaves degree {}",
                        self.label(i),
                        self.label(j),
                        deg[i] + deg[j]
                    ));
                }
            }
        }
        for k in 0..n {
            if self
                .comult_entries(k)
                .iter()
                .any(|(i, j, _)| deg[*i] + deg[*j] != deg[k])
            {
                bad.push(format!("Δ({}) is not homogeneous", self.label(k)));
            }
            let s = self.antipode_matrix();
            if (0..n).any(|i| !s.get(i, k).is_zero() && deg[i] != deg[k]) {
                bad.push(format!("S({}) is not homogeneous", self.label(k)));
            }
            if deg[k] != 0 && (!self.one()[k].is_zero() || !self.counit_coeffs()[k].is_zero()) {
                bad.push(format!("unit/counit meet degree {} at {}", deg[k], self.label(k)));
            }
        }
        bad
    }
}
