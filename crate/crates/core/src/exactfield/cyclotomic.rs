use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;
use num_traits::{One, Zero};
use smallvec::SmallVec;

use super::poly::Poly;
use super::rational::Rational;
use crate::error::Error;
use crate::scalar::Field;

type Coeffs = SmallVec<[Rational; 4]>;

/// Euler's totient.
pub fn euler_phi(m: u32) -> usize {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

fn cache() -> &'static RwLock<HashMap<u32, Arc<Poly<Rational>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Poly<Rational>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The m-th cyclotomic polynomial Φ_m, obtained by dividing `x^m - 1` by
/// Φ_d for every proper divisor d of m.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Poly<Rational>> {
    assert!(m >= 1, "cyclotomic polynomial needs m >= 1");
    if let Some(p) = cache().read().expect("cache poisoned").get(&m) {
        return Arc::clone(p);
    }
    let mut p = Poly::<Rational>::x_pow_minus_one(m as usize);
    for d in 1..m {
        if m % d == 0 {
            let (q, r) = p.div_rem(&cyclotomic_polynomial(d));
            debug_assert!(r.is_zero());
            p = q;
        }
    }
    let p = Arc::new(p);
    cache()
        .write()
        .expect("cache poisoned")
        .insert(m, Arc::clone(&p));
    p
}

/// An element of the cyclotomic field Q(ζ_m), stored by its coordinates in
/// the power basis `1, ζ, …, ζ^{φ(m)-1}`.
///
/// Conductor 1 values are plain rationals; they combine with elements of any
/// conductor by embedding. Two elements with distinct conductors other than
/// 1 have to be brought to a common field with [`Cyclotomic::lift`] first.
#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Coeffs,
}

impl Cyclotomic {
    pub fn rational(r: Rational) -> Self {
        let mut coeffs = Coeffs::new();
        coeffs.push(r);
        Self {
            conductor: 1,
            coeffs,
        }
    }

    pub fn from_coeffs(conductor: u32, coeffs: Vec<Rational>) -> Result<Self, Error> {
        if conductor == 0 {
            return Err(Error::Parse("conductor must be positive".into()));
        }
        let phi = euler_phi(conductor);
        if coeffs.len() != phi {
            return Err(Error::Parse(format!(
                "conductor {conductor} needs {phi} coordinates, got {}",
                coeffs.len()
            )));
        }
        Ok(Self {
            conductor,
            coeffs: coeffs.into_iter().collect(),
        })
    }

    /// Zero of Q(ζ_m) with its full coordinate vector.
    pub fn zero_in(conductor: u32) -> Self {
        Self {
            conductor,
            coeffs: std::iter::repeat_with(Rational::zero)
                .take(euler_phi(conductor))
                .collect(),
        }
    }

    /// ζ_m^k, reduced into the power basis.
    pub fn root_of_unity(conductor: u32, k: i64) -> Self {
        let k = k.rem_euclid(conductor as i64) as usize;
        Self::reduce_poly(conductor, &Poly::monomial(k))
    }

    /// A primitive m-th root of unity ζ_m.
    pub fn zeta(conductor: u32) -> Self {
        Self::root_of_unity(conductor, 1)
    }

    fn reduce_poly(conductor: u32, p: &Poly<Rational>) -> Self {
        let phi = euler_phi(conductor);
        let r = p.rem(&cyclotomic_polynomial(conductor));
        let coeffs = (0..phi).map(|i| r.coeff(i)).collect();
        Self { conductor, coeffs }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `Some` when the value is a rational number, whatever its conductor.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn as_poly(&self) -> Poly<Rational> {
        Poly::new(self.coeffs.to_vec())
    }

    /// Re-express the value in Q(ζ_target) via ζ_m = ζ_target^{target/m}.
    pub fn lift(&self, target: u32) -> Result<Self, Error> {
        if target == 0 || target % self.conductor != 0 {
            return Err(Error::ConductorMismatch(self.conductor, target));
        }
        if target == self.conductor {
            return Ok(self.clone());
        }
        let step = (target / self.conductor) as usize;
        Ok(Self::reduce_poly(target, &self.as_poly().compose_x_pow(step)))
    }

    /// Common conductor for a binary operation, or an error.
    fn common(&self, rhs: &Self) -> Result<u32, Error> {
        match (self.conductor, rhs.conductor) {
            (a, b) if a == b => Ok(a),
            (1, b) => Ok(b),
            (a, 1) => Ok(a),
            (a, b) => Err(Error::ConductorMismatch(a, b)),
        }
    }

    fn embedded(&self, conductor: u32) -> Self {
        if self.conductor == conductor {
            return self.clone();
        }
        debug_assert_eq!(self.conductor, 1);
        let mut out = Self::zero_in(conductor);
        out.coeffs[0] = self.coeffs[0].clone();
        out
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, Error> {
        let m = self.common(rhs)?;
        if rhs.conductor == 1 && m != 1 {
            let mut out = self.clone();
            out.coeffs[0] += &rhs.coeffs[0];
            return Ok(out);
        }
        let mut out = self.embedded(m);
        for (a, b) in out.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a += b;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, Error> {
        self.checked_add(&rhs.clone().neg())
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, Error> {
        let m = self.common(rhs)?;
        if let Some(r) = rhs.scalar_if_rational_conductor() {
            return Ok(self.scale(r).embedded_or_self(m));
        }
        if let Some(r) = self.scalar_if_rational_conductor() {
            return Ok(rhs.scale(r).embedded_or_self(m));
        }
        let phi = self.coeffs.len();
        let mut prod: Vec<Rational> = vec![Rational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += &(a * b);
                }
            }
        }
        // Φ_m is monic of degree φ: x^φ = -(lower terms).
        let modulus = cyclotomic_polynomial(m);
        let low = &modulus.coeffs()[..phi];
        for k in (phi..prod.len()).rev() {
            if prod[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut prod[k]);
            for (i, mi) in low.iter().enumerate() {
                if !mi.is_zero() {
                    prod[k - phi + i] -= &(&c * mi);
                }
            }
        }
        prod.truncate(phi);
        Ok(Self {
            conductor: m,
            coeffs: prod.into_iter().collect(),
        })
    }

    fn scalar_if_rational_conductor(&self) -> Option<&Rational> {
        (self.conductor == 1).then(|| &self.coeffs[0])
    }

    fn embedded_or_self(self, m: u32) -> Self {
        if self.conductor == m {
            self
        } else {
            self.embedded(m)
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Inverse by the extended Euclidean algorithm against Φ_m.
    pub fn checked_inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.scalar_if_rational_conductor() {
            return Ok(Self::rational(r.recip().expect("nonzero")));
        }
        let modulus = cyclotomic_polynomial(self.conductor);
        let (g, s, _) = self.as_poly().ext_gcd(&modulus);
        debug_assert!(g.degree() == Some(0), "Φ_m is irreducible");
        Ok(Self::reduce_poly(self.conductor, &s))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, Error> {
        self.common(rhs)?;
        self.checked_mul(&rhs.checked_inv()?)
    }
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Self::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Self::rational(Rational::one())
    }
    fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let m = self.conductor.lcm(&other.conductor);
        match (self.lift(m), other.lift(m)) {
            (Ok(a), Ok(b)) => a.coeffs == b.coeffs,
            _ => false,
        }
    }
}

impl Eq for Cyclotomic {}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Self::rational(r)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Self::rational(Rational::from_integer(n))
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(mut self) -> Cyclotomic {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! cyclo_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
    };
}

cyclo_binop!(Add, add, checked_add);
cyclo_binop!(Sub, sub, checked_sub);
cyclo_binop!(Mul, mul, checked_mul);
cyclo_binop!(Div, div, checked_div);

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        if self.conductor == rhs.conductor {
            for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
                if !b.is_zero() {
                    *a += b;
                }
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        if self.conductor == rhs.conductor {
            for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
                if !b.is_zero() {
                    *a -= b;
                }
            }
        } else {
            *self = &*self - rhs;
        }
    }
}

impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self * rhs;
    }
}

impl Field for Cyclotomic {
    fn inverse(&self) -> Option<Self> {
        self.checked_inv().ok()
    }
    fn from_i64(n: i64) -> Self {
        n.into()
    }
    fn from_rational(r: &Rational) -> Self {
        Self::rational(r.clone())
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn degree_over_q(&self) -> usize {
        self.coeffs.len()
    }
}

impl fmt::Display for Cyclotomic {
    /// Rationals print bare; anything else as a sum of `c*z^k` terms where
    /// `z` is the primitive root ζ_m of the value's conductor.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (k, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{abs}*z")?,
                (_, true) => write!(f, "z^{k}")?,
                (_, false) => write!(f, "{abs}*z^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[m={}] {}", self.conductor, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(m: u32, coeffs: &[i64]) -> Cyclotomic {
        Cyclotomic::from_coeffs(m, coeffs.iter().map(|&x| Rational::from(x)).collect()).unwrap()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), Poly::from_i64s(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(2), Poly::from_i64s(&[1, 1]));
        // x^6 - 1 = Φ1 Φ2 Φ3 Φ6 with Φ3 = x^2 + x + 1.
        let phi123 = Poly::<Rational>::from_i64s(&[-1, 1])
            .mul(&Poly::from_i64s(&[1, 1]))
            .mul(&Poly::from_i64s(&[1, 1, 1]));
        let (q, r) = Poly::<Rational>::x_pow_minus_one(6).div_rem(&phi123);
        assert!(r.is_zero());
        assert_eq!(*cyclotomic_polynomial(6), q);
        assert_eq!(q, Poly::from_i64s(&[1, -1, 1]));
    }

    #[test]
    fn totients() {
        let expected = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (m, &e) in (1..=12).zip(expected.iter()) {
            assert_eq!(euler_phi(m), e, "phi({m})");
        }
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = Cyclotomic::zeta(4);
        assert_eq!(&i * &i, Cyclotomic::from(-1));
    }

    #[test]
    fn inverse_of_i() {
        let i = Cyclotomic::zeta(4);
        let inv = i.checked_inv().unwrap();
        assert_eq!(inv, -i.clone());
        assert!((&i * &inv).is_one());
    }

    #[test]
    fn cube_roots_sum() {
        let z = Cyclotomic::zeta(3);
        assert_eq!(&z + &(&z * &z), Cyclotomic::from(-1));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(
            Cyclotomic::zeta(5).checked_div(&Cyclotomic::zero_in(5)),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn mismatched_conductors_are_rejected() {
        let err = Cyclotomic::zeta(3).checked_add(&Cyclotomic::zeta(4));
        assert!(matches!(err, Err(Error::ConductorMismatch(3, 4))));
        assert!(Cyclotomic::zeta(3).lift(4).is_err());
    }

    #[test]
    fn lifting() {
        // ζ2 = -1 stays -1 in Q(ζ6).
        let lifted = Cyclotomic::zeta(2).lift(6).unwrap();
        assert_eq!(lifted.conductor(), 6);
        assert_eq!(lifted.as_rational(), Some(&Rational::from(-1)));
        // ζ3 ↦ ζ6^2 = ζ6 - 1 (Φ6 = x^2 - x + 1), a root of x^2 + x + 1.
        let z = Cyclotomic::zeta(3).lift(6).unwrap();
        assert_eq!(z, c(6, &[-1, 1]));
        assert!((&(&z * &z) + &z + Cyclotomic::one()).is_zero());
        let half = Cyclotomic::rational(Rational::new(5, 2)).lift(4).unwrap();
        assert_eq!(half.as_rational(), Some(&Rational::new(5, 2)));
    }

    #[test]
    fn roots_of_unity_have_exact_order() {
        for m in [1u32, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 60] {
            let z = Cyclotomic::zeta(m);
            let mut p = Cyclotomic::one();
            for k in 1..=m {
                p = &p * &z;
                assert_eq!(p.is_one(), k == m, "zeta_{m}^{k}");
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(c(3, &[0, 1]).to_string(), "z");
        assert_eq!(c(5, &[1, -2, 0, 1]).to_string(), "1 - 2*z + z^3");
        assert_eq!(c(4, &[-3, 0]).to_string(), "-3");
    }
}
