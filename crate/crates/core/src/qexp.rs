//! Quasi-exponent computations: iterated (co)multiplication, the operators
//! `Tₙ`, the elements `Rₙ` of `D(H) ⊗ D(H)`, and the minimal polynomial of
//! the Drinfeld element by two independent routes.

use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::double::{drinfeld_double, DoubleEngine, QuasitriangularData, MAX_TABULATED_DIM};
use crate::error::{Error, Result};
use crate::exactfield::{binomial, Cyclotomic, Poly, Rational};
use crate::hopf::{HopfAlgebra, Tensor};
use crate::linalg::{
    default_order_bound, minimal_polynomial, root_of_unity_order, sequence_minimal_polynomial,
    squarefree_part, vector_minimal_polynomial, Matrix,
};
use crate::presets::scalar_to_json;
use crate::scalar::Field;
use crate::Hopf;

/// Largest double dimension the regular route accepts.
pub const REGULAR_ROUTE_MAX_DIM: usize = 4096;

/// Above this double dimension the regular route uses the cyclic vector `1`
/// instead of a full Krylov sweep over every basis vector.
const FULL_KRYLOV_MAX_DIM: usize = 81;

/// `Δₙ(a)` as an order-`n` tensor. `Δ₀ = ε` (an order-0 tensor holding the
/// scalar), `Δ₁ = Id`, `Δₙ = (Δₙ₋₁ ⊗ Id)∘Δ`.
pub fn iterated_coproduct<F: Field>(h: &HopfAlgebra<F>, a: &[F], n: usize) -> Result<Tensor<F>> {
    if n == 0 {
        let mut t = Tensor::zero(0);
        t.add_term(Vec::new(), h.counit(a)?);
        return Ok(t);
    }
    let mut t = Tensor::zero(1);
    for (i, c) in a.iter().enumerate() {
        t.add_term(vec![i], c.clone());
    }
    for _ in 1..n {
        t = h.tensor_comul_leg(&t, 0);
    }
    Ok(t)
}

/// `mₙ(t)` for an order-`n` tensor. `m₀` sends a scalar to its multiple of
/// `1`, `m₁ = Id`, `mₙ = m∘(mₙ₋₁ ⊗ Id)`.
pub fn iterated_product<F: Field>(h: &HopfAlgebra<F>, t: &Tensor<F>) -> Vec<F> {
    if t.order() == 0 {
        let c = t.coeff(&[]);
        return h.one().iter().map(|u| u.mul_ref(&c)).collect();
    }
    let order: Vec<usize> = (0..t.order()).collect();
    h.tensor_contract(t, &order)
}

/// `Tₙ = mₙ∘(Id ⊗ S⁻² ⊗ ⋯ ⊗ S^{−2n+2})∘Δₙ`, straight from the definition.
/// Costs `dim^n`; meant as an oracle for small `n`.
pub fn t_map_literal<F: Field>(h: &HopfAlgebra<F>, n: usize) -> Result<Matrix<F>> {
    let dim = h.dim();
    let s_inv2 = h.antipode_power(-2)?;
    let mut out = Matrix::zeros(dim, dim);
    for k in 0..dim {
        let mut t = iterated_coproduct(h, &h.basis_element(k), n)?;
        let mut power = Matrix::identity(dim);
        for leg in 1..n {
            power = power.mul(&s_inv2)?;
            t = h.tensor_map_leg(&t, leg, &power);
        }
        for (i, x) in iterated_product(h, &t).into_iter().enumerate() {
            out.set(i, k, x);
        }
    }
    Ok(out)
}

/// The sequence `T₀, T₁, T₂, …` by the recursion
/// `Tₙ(a) = a₍₁₎ · S⁻²(Tₙ₋₁(a₍₂₎))`, valid because `S⁻²` is an algebra map.
pub struct TMaps<'a, F> {
    h: &'a HopfAlgebra<F>,
    s_inv2: Matrix<F>,
    next: usize,
    prev: Option<Matrix<F>>,
}

impl<'a, F: Field> TMaps<'a, F> {
    pub fn new(h: &'a HopfAlgebra<F>) -> Result<Self> {
        Ok(Self {
            h,
            s_inv2: h.antipode_power(-2)?,
            next: 0,
            prev: None,
        })
    }
}

impl<F: Field> Iterator for TMaps<'_, F> {
    type Item = Matrix<F>;

    fn next(&mut self) -> Option<Matrix<F>> {
        let h = self.h;
        let dim = h.dim();
        let t = match (self.next, &self.prev) {
            (0, _) => {
                let mut m = Matrix::zeros(dim, dim);
                let one = h.one();
                for k in 0..dim {
                    let e = &h.counit_coeffs()[k];
                    for (i, u) in one.iter().enumerate() {
                        m.set(i, k, u.mul_ref(e));
                    }
                }
                m
            }
            (1, _) => Matrix::identity(dim),
            (_, Some(prev)) => {
                let a = self.s_inv2.mul(prev).expect("square");
                let mut m = Matrix::zeros(dim, dim);
                for k in 0..dim {
                    let mut col = vec![F::zero(); dim];
                    for (i, j, c) in h.comult_entries(k) {
                        let prod = h.mul_unchecked(&h.basis_element(*i), &a.column(*j));
                        for (x, y) in col.iter_mut().zip(prod) {
                            x.add_mul(c, &y);
                        }
                    }
                    for (i, x) in col.into_iter().enumerate() {
                        m.set(i, k, x);
                    }
                }
                m
            }
            _ => unreachable!("T₁ precedes every recursive step"),
        };
        self.next += 1;
        self.prev = Some(t.clone());
        Some(t)
    }
}

/// `Tₙ` via the recursion.
pub fn t_map<F: Field>(h: &HopfAlgebra<F>, n: usize) -> Result<Matrix<F>> {
    Ok(TMaps::new(h)?.nth(n).expect("infinite sequence"))
}

/// Minimal polynomial of `u ∈ D(H)` from the first linear dependence among
/// `T₀, T₁, …` (equivalent conditions: `f(u) = 0` iff `Σ aᵢTᵢ = 0`).
pub fn u_min_poly_via_t<F: Field>(h: &HopfAlgebra<F>) -> Result<Poly<F>> {
    let n = h.dim();
    let seq = TMaps::new(h)?.map(Matrix::into_vec);
    sequence_minimal_polynomial(seq, n * n, n * n + 1)
        .ok_or_else(|| Error::Inconsistent("no dependence among T₀ … T_{N²}".into()))
}

/// Minimal polynomial of left multiplication by `u` on `D(H)`.
///
/// Up to `dim D = 81` this is the full matrix minimal polynomial. Beyond, it
/// is the minimal polynomial of the vector `1` under `L(u)`, which is the
/// same polynomial because `f(L(u))·1 = f(u)` and `L` is injective.
pub fn u_min_poly_via_regular<F: Field>(h: &HopfAlgebra<F>) -> Result<Poly<F>> {
    let n = h.dim();
    let d = n * n;
    if d > REGULAR_ROUTE_MAX_DIM {
        return Err(Error::TooLarge(format!(
            "regular route on {} needs dim D(H) = {d} > {REGULAR_ROUTE_MAX_DIM}; use the T-route",
            h.name()
        )));
    }
    if d <= FULL_KRYLOV_MAX_DIM {
        let qt = drinfeld_double(h)?;
        let u = qt.drinfeld_element();
        return minimal_polynomial(&qt.algebra().regular_representation(&u)?);
    }
    if n <= MAX_TABULATED_DIM {
        let qt = drinfeld_double(h)?;
        let u = qt.drinfeld_element();
        return vector_minimal_polynomial(&qt.algebra().regular_representation(&u)?, &qt.algebra().one());
    }
    let eng = DoubleEngine::new(h)?;
    let u = eng.drinfeld_element()?;
    vector_minimal_polynomial(&eng.left_multiplication(&u), &eng.embed_primal(&h.one()))
}

/// Which computation produced the minimal polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Linear dependence among the operators `Tₙ` on `H`.
    TMaps,
    /// Regular representation of `u` on `D(H)`.
    Regular,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::TMaps => "t-maps",
            Route::Regular => "regular",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exponent {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(e) => write!(f, "{e}"),
            Exponent::Infinite => f.write_str("infinite"),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct QexpOptions {
    /// Root-of-unity search bound; default from the polynomial.
    pub bound: Option<u64>,
    pub route: Option<Route>,
    /// Also run the other route and require equality.
    pub cross_check: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct QexpReport<F: Field> {
    pub name: String,
    pub min_poly: Poly<F>,
    pub squarefree: Poly<F>,
    pub qexp: u64,
    pub exponent: Exponent,
    pub s2_order: u64,
    pub unipotency_index: u64,
    pub route: Route,
    pub cross_checked: bool,
}

/// Smallest `N` with `(x^q − 1)^N ≡ 0 mod μ`, i.e. the nilpotency index of
/// `u^q − 1` for `u` with minimal polynomial `μ`.
pub fn unipotency_index<F: Field>(mu: &Poly<F>, q: u64) -> Option<u64> {
    let deg = mu.degree()? as u64;
    let step = Poly::x_pow_minus_one(q as usize).rem(mu);
    let mut acc = Poly::one().rem(mu);
    for n in 1..=deg.max(1) {
        acc = acc.mul(&step).rem(mu);
        if acc.is_zero() {
            return Some(n);
        }
    }
    None
}

/// qexp, exponent, |S²| and the unipotency index from the minimal
/// polynomial of `u`.
pub fn quasi_exponent<F: Field>(h: &HopfAlgebra<F>, opts: &QexpOptions) -> Result<QexpReport<F>> {
    let route = opts.route.unwrap_or(Route::TMaps);
    let compute = |r: Route| match r {
        Route::TMaps => u_min_poly_via_t(h),
        Route::Regular => u_min_poly_via_regular(h),
    };
    let min_poly = compute(route)?;
    if opts.cross_check {
        let other = match route {
            Route::TMaps => Route::Regular,
            Route::Regular => Route::TMaps,
        };
        let other_poly = compute(other)?;
        if other_poly != min_poly {
            return Err(Error::Inconsistent(format!(
                "routes disagree on {}: {route} gives {min_poly}, {other} gives {other_poly}",
                h.name()
            )));
        }
    }
    report_from_min_poly(h, min_poly, route, opts.cross_check, opts.bound)
}

fn report_from_min_poly<F: Field>(
    h: &HopfAlgebra<F>,
    min_poly: Poly<F>,
    route: Route,
    cross_checked: bool,
    bound: Option<u64>,
) -> Result<QexpReport<F>> {
    let squarefree = squarefree_part(&min_poly);
    let bound = bound.unwrap_or_else(|| default_order_bound(&squarefree));
    let qexp = root_of_unity_order(&squarefree, bound).ok_or_else(|| Error::BoundExceeded {
        what: format!(
            "root-of-unity order of the squarefree part {squarefree} of the minimal polynomial of u for {}",
            h.name()
        ),
        bound,
    })?;
    let exponent = if squarefree == min_poly {
        Exponent::Finite(qexp)
    } else {
        Exponent::Infinite
    };
    let s2_order = h.s2_order(qexp.max(bound))?;
    let unipotency_index = unipotency_index(&min_poly, qexp)
        .ok_or_else(|| Error::Inconsistent("u^qexp − 1 is not nilpotent".into()))?;
    Ok(QexpReport {
        name: h.name().to_string(),
        min_poly,
        squarefree,
        qexp,
        exponent,
        s2_order,
        unipotency_index,
        route,
        cross_checked,
    })
}

/// `R₀ = 1⊗1`, `Rₙ = R·(Id⊗S²)(R)⋯(Id⊗S^{2n−2})(R)`, for `n = 0..=max`.
pub fn r_sequence<F: Field>(qt: &QuasitriangularData<F>, max: usize) -> Result<Vec<Tensor<F>>> {
    let d = qt.algebra();
    let s2 = d.antipode_power(2)?;
    let mut out = vec![d.tensor_one(2)];
    let mut power = Matrix::identity(d.dim());
    for _ in 0..max {
        let factor = d.tensor_map_leg(qt.r(), 1, &power);
        let next = d.tensor_mul(out.last().expect("nonempty"), &factor);
        out.push(next);
        power = power.mul(&s2)?;
    }
    Ok(out)
}

pub fn r_n<F: Field>(qt: &QuasitriangularData<F>, n: usize) -> Result<Tensor<F>> {
    Ok(r_sequence(qt, n)?.pop().expect("nonempty"))
}

/// `(Tᵢ ⊗ Id)(R)` with `Tᵢ` computed on `H` and pushed through `a ↦ ε⊗a`
/// (the first leg of `R` lies in the copy of `H`).
pub fn t_applied_to_r<F: Field>(qt: &QuasitriangularData<F>, h: &HopfAlgebra<F>, t: &Matrix<F>) -> Tensor<F> {
    let n = h.dim();
    let mut out = Tensor::zero(2);
    for i in 0..n {
        let left = qt.embed_primal(&t.column(i));
        // hⁱ ⊗ 1
        let mut right = vec![F::zero(); n * n];
        for (q, x) in h.one().into_iter().enumerate() {
            right[i * n + q] = x;
        }
        out = out.add(&Tensor::from_elements(&[&left, &right]));
    }
    out
}

/// `m₂₁(Id⊗S)(t)` in the double.
pub fn drinfeld_contraction<F: Field>(qt: &QuasitriangularData<F>, t: &Tensor<F>) -> Vec<F> {
    let d = qt.algebra();
    d.tensor_contract(&d.tensor_map_leg(t, 1, d.antipode_matrix()), &[1, 0])
}

/// Smallest `N ≤ n_max` with `Σₖ (−1)ᵏ C(N,k) R_{nk} = 0`, if any.
pub fn find_vanishing_alternating_r_sum<F: Field>(qt: &QuasitriangularData<F>, n: usize, n_max: usize) -> Result<Option<usize>> {
    let rs = r_sequence(qt, n * n_max)?;
    Ok(alternating_r_sum_vanishes(&rs, n, n_max))
}

/// As [`find_vanishing_alternating_r_sum`] over a precomputed `R₀, R₁, …` of length at
/// least `n·n_max + 1`.
pub fn alternating_r_sum_vanishes<F: Field>(rs: &[Tensor<F>], n: usize, n_max: usize) -> Option<usize> {
    assert!(rs.len() > n * n_max, "R sequence too short");
    (1..=n_max).find(|&big_n| {
        let mut sum = Tensor::zero(2);
        for k in 0..=big_n {
            let b = binomial(big_n as u64, k as u64);
            let b = if k % 2 == 1 { -b } else { b };
            sum = sum.add(&rs[n * k].scale(&from_bigint::<F>(b)));
        }
        sum.is_zero()
    })
}

fn from_bigint<F: Field>(b: BigInt) -> F {
    F::from_rational(&Rational::from(b))
}

/// `(x − 1)^k` test for the minimal polynomial of left multiplication by `v`
/// in an algebra, computed on the cyclic vector `1`.
pub fn is_unipotent<F: Field>(a: &HopfAlgebra<F>, v: &[F]) -> Result<bool> {
    let mu = vector_minimal_polynomial(&a.regular_representation(v)?, &a.one())?;
    let d = mu.degree().unwrap_or(0);
    Ok(d >= 1 && mu == Poly::linear(F::one()).pow(d as u32))
}

/// The minimal polynomial of an element via the cyclic vector `1`.
pub fn element_min_poly<F: Field>(a: &HopfAlgebra<F>, v: &[F]) -> Result<Poly<F>> {
    vector_minimal_polynomial(&a.regular_representation(v)?, &a.one())
}

fn poly_to_json(p: &Poly<Cyclotomic>, m: u32) -> Value {
    Value::Array(p.coeffs().iter().map(|c| scalar_to_json(c, m)).collect())
}

impl QexpReport<Cyclotomic> {
    /// The versioned JSON report.
    pub fn to_json(&self, conductor: u32) -> Value {
        let exponent = match self.exponent {
            Exponent::Finite(e) => json!(e),
            Exponent::Infinite => json!("infinite"),
        };
        json!({
            "schema": "hopf-qexp/1",
            "name": self.name,
            "conductor": conductor,
            "min_poly": poly_to_json(&self.min_poly, conductor),
            "squarefree": poly_to_json(&self.squarefree, conductor),
            "qexp": self.qexp,
            "exponent": exponent,
            "s2_order": self.s2_order,
            "unipotency_index": self.unipotency_index,
            "route": self.route.name(),
            "cross_checked": self.cross_checked,
        })
    }

    pub fn to_text(&self) -> String {
        format!(
            "algebra:          {}\nmin poly of u:    {}\nsquarefree part:  {}\nqexp:             {}\nexponent:         {}\n|S^2|:            {}\nunipotency index: {}\nroute:            {}{}\n",
            self.name,
            self.min_poly,
            self.squarefree,
            self.qexp,
            self.exponent,
            self.s2_order,
            self.unipotency_index,
            self.route,
            if self.cross_checked { " (cross-checked)" } else { "" },
        )
    }
}

/// Convenience for the cyclotomic presets.
pub fn qexp_of(h: &Hopf) -> Result<u64> {
    Ok(quasi_exponent(h, &QexpOptions::default())?.qexp)
}
