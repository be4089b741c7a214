use num_traits::Zero;

use super::{Matrix, SpanBuilder};
use crate::error::{Error, Result};
use crate::exactfield::Poly;
use crate::scalar::Field;

/// Least-degree monic `f` with `Σ f_i v_i = 0` for the sequence
/// `v_0, v_1, …`, found by incremental elimination. `None` if the sequence
/// runs out (or exceeds `max_terms`) before becoming dependent.
pub fn sequence_minimal_polynomial<F, I>(seq: I, len: usize, max_terms: usize) -> Option<Poly<F>>
where
    F: Field,
    I: IntoIterator<Item = Vec<F>>,
{
    let mut span = SpanBuilder::new(len);
    for (k, v) in seq.into_iter().enumerate().take(max_terms) {
        if let Some(coords) = span.insert(v) {
            let mut coeffs: Vec<F> = coords.into_iter().map(|c| -c).collect();
            coeffs.push(F::one());
            debug_assert_eq!(coeffs.len(), k + 1);
            return Some(Poly::new(coeffs));
        }
    }
    None
}

/// Minimal polynomial of `a` relative to the vector `v`: the monic generator
/// of `{f : f(A) v = 0}`.
pub fn vector_minimal_polynomial<F: Field>(a: &Matrix<F>, v: &[F]) -> Result<Poly<F>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch("minimal polynomial of a non-square matrix".into()));
    }
    let n = a.rows();
    let mut cur = v.to_vec();
    let mut span = SpanBuilder::new(n);
    loop {
        let next = a.apply(&cur)?;
        if let Some(coords) = span.insert(cur) {
            let mut coeffs: Vec<F> = coords.into_iter().map(|c| -c).collect();
            coeffs.push(F::one());
            return Ok(Poly::new(coeffs));
        }
        cur = next;
    }
}

fn apply_poly<F: Field>(a: &Matrix<F>, f: &Poly<F>, v: &[F]) -> Result<Vec<F>> {
    // Horner: f(A) v
    let mut acc = vec![F::zero(); v.len()];
    for c in f.coeffs().iter().rev() {
        acc = a.apply(&acc)?;
        for (x, y) in acc.iter_mut().zip(v) {
            x.add_mul(c, y);
        }
    }
    Ok(acc)
}

/// Minimal polynomial of a square matrix.
///
/// Accumulates `f ← f · μ_{f(A) e_i}` over the standard basis vectors, which
/// yields `lcm_i μ_{e_i}`; the degree never exceeds the dimension.
pub fn minimal_polynomial<F: Field>(a: &Matrix<F>) -> Result<Poly<F>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch("minimal polynomial of a non-square matrix".into()));
    }
    let n = a.rows();
    let mut f = Poly::one();
    for i in 0..n {
        let mut e = vec![F::zero(); n];
        e[i] = F::one();
        let w = apply_poly(a, &f, &e)?;
        if w.iter().all(Zero::is_zero) {
            continue;
        }
        f = f.mul(&vector_minimal_polynomial(a, &w)?);
        if f.degree() == Some(n) {
            break;
        }
    }
    Ok(f)
}

/// Evaluate a polynomial at a square matrix.
pub fn eval_at_matrix<F: Field>(f: &Poly<F>, a: &Matrix<F>) -> Result<Matrix<F>> {
    let n = a.rows();
    let mut acc = Matrix::zeros(n, n);
    for c in f.coeffs().iter().rev() {
        acc = acc.mul(a)?.add(&Matrix::identity(n).scale(c))?;
    }
    Ok(acc)
}

/// `f / gcd(f, f')`, monic.
pub fn squarefree_part<F: Field>(f: &Poly<F>) -> Poly<F> {
    assert!(!f.is_zero(), "squarefree part of the zero polynomial");
    let g = f.gcd(&f.derivative());
    f.div_rem(&g).0.monic()
}

/// Search bound used when none is given: `(deg f · [K:Q])² + 240`, where K is
/// the field the coefficients live in.
pub fn default_order_bound<F: Field>(f: &Poly<F>) -> u64 {
    let field_degree = f.coeffs().iter().map(Field::degree_over_q).max().unwrap_or(1);
    let d = (f.degree().unwrap_or(0) * field_degree) as u64;
    d * d + 240
}

/// Smallest `n ≤ bound` with `f | x^n - 1`, i.e. the least common order of
/// the roots of a squarefree `f`. `None` ("not found") otherwise.
pub fn root_of_unity_order<F: Field>(f: &Poly<F>, bound: u64) -> Option<u64> {
    let f = f.monic();
    let deg = f.degree()?;
    if deg == 0 {
        return Some(1);
    }
    if f.coeff(0).is_zero() {
        return None;
    }
    // r = x^n mod f, advanced one multiplication by x at a time.
    let mut r = Poly::monomial(1).rem(&f);
    for n in 1..=bound {
        if r.degree() == Some(0) && r.coeff(0).is_one() {
            return Some(n);
        }
        let mut coeffs = vec![F::zero()];
        coeffs.extend(r.into_coeffs());
        if coeffs.len() > deg {
            let top = coeffs.pop().expect("degree deg term");
            for (c, m) in coeffs.iter_mut().zip(f.coeffs()) {
                *c -= &top.mul_ref(m);
            }
        }
        r = Poly::new(coeffs);
    }
    None
}

pub fn is_nilpotent<F: Field>(a: &Matrix<F>) -> Result<bool> {
    if a.rows() == 0 {
        return Ok(true);
    }
    let f = minimal_polynomial(a)?;
    Ok(is_power_of_x(&f))
}

pub(crate) fn is_power_of_x<F: Field>(f: &Poly<F>) -> bool {
    match f.degree() {
        Some(d) if d >= 1 => f.coeffs()[..d].iter().all(Zero::is_zero),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{Cyclotomic, Rational};
    use num_traits::One;

    type Q = Rational;

    fn mat(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Q::from(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn identity_min_poly() {
        assert_eq!(minimal_polynomial(&Matrix::<Q>::identity(3)).unwrap(), Poly::from_i64s(&[-1, 1]));
    }

    #[test]
    fn jordan_block_min_poly() {
        let j = mat(&[&[0, 1], &[0, 0]]);
        assert_eq!(minimal_polynomial(&j).unwrap(), Poly::from_i64s(&[0, 0, 1]));
    }

    #[test]
    fn cube_roots_diagonal() {
        let z = Cyclotomic::zeta(3);
        let d = Matrix::diagonal(vec![Cyclotomic::one(), z.clone(), &z * &z]);
        assert_eq!(minimal_polynomial(&d).unwrap(), Poly::from_i64s(&[-1, 0, 0, 1]));
    }

    #[test]
    fn min_poly_annihilates_and_has_lower_degree_than_char_poly() {
        // Block diag(J_2(1), 1): min poly (x-1)^2, not (x-1)^3
        let a = mat(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
        let f = minimal_polynomial(&a).unwrap();
        assert_eq!(f, Poly::from_i64s(&[1, -2, 1]));
        assert!(eval_at_matrix(&f, &a).unwrap().is_zero());
    }

    #[test]
    fn squarefree_parts() {
        let x2 = Poly::<Q>::from_i64s(&[0, 0, 1]);
        assert_eq!(squarefree_part(&x2), Poly::from_i64s(&[0, 1]));
        // (x-1)^2 (x+1) = x^3 - x^2 - x + 1
        let f = Poly::<Q>::from_i64s(&[1, -1, -1, 1]);
        assert_eq!(squarefree_part(&f), Poly::from_i64s(&[-1, 0, 1]));
        let g = Poly::<Q>::from_i64s(&[1, -1, 1]);
        assert_eq!(squarefree_part(&g), g);
    }

    #[test]
    fn root_orders() {
        assert_eq!(root_of_unity_order(&Poly::<Q>::from_i64s(&[-1, 1]), 10), Some(1));
        assert_eq!(root_of_unity_order(&Poly::<Q>::from_i64s(&[1, 1, 1]), 10), Some(3));
        let x_minus_2 = Poly::<Q>::from_i64s(&[-2, 1]);
        assert_eq!(root_of_unity_order(&x_minus_2, 10_000), None);
        assert_eq!(root_of_unity_order(&x_minus_2, default_order_bound(&x_minus_2)), None);
    }

    #[test]
    fn nilpotency() {
        assert!(is_nilpotent(&Matrix::<Q>::zeros(3, 3)).unwrap());
        assert!(!is_nilpotent(&Matrix::<Q>::identity(3)).unwrap());
        assert!(is_nilpotent(&mat(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]])).unwrap());
    }
}
