use num_traits::{One, Zero};

use super::groups::normalize;
use crate::error::{Error, Result};
use crate::exactfield::Cyclotomic;
use crate::hopf::{HopfAlgebra, HopfData, Tensor};
use crate::linalg::Matrix;
use crate::scalar::Field;
use crate::Hopf;

type C = Cyclotomic;

/// Data of one algebra generator: Δ, S and ε on it.
struct Generator {
    comult: Tensor<C>,
    antipode: Vec<C>,
    counit: C,
}

/// An algebra with a monomial basis and known multiplication; Δ, ε and S
/// are extended from the generators (Δ, ε multiplicatively, S
/// anti-multiplicatively). The axiom checker confirms the result.
struct MonomialAlgebra {
    name: String,
    conductor: u32,
    labels: Vec<String>,
    mult: Vec<Vec<Vec<C>>>,
    unit: usize,
    /// Each basis element as a word in the generators.
    words: Vec<Vec<usize>>,
    grouplikes: Vec<usize>,
    grading: Option<Vec<u32>>,
}

impl MonomialAlgebra {
    /// The multiplication alone, with placeholder coalgebra maps.
    fn bare(&self) -> Hopf {
        let n = self.labels.len();
        HopfAlgebra::new(HopfData {
            name: self.name.clone(),
            conductor: self.conductor,
            basis_labels: self.labels.clone(),
            mult: self.mult.clone(),
            unit: unit_vec(n, self.unit),
            comult: vec![Matrix::zeros(n, n); n],
            counit: vec![C::zero(); n],
            antipode: Matrix::identity(n),
            grouplikes: Vec::new(),
            grading: None,
        })
        .expect("shape")
    }

    fn finish(self, gens: &[Generator]) -> Hopf {
        let n = self.labels.len();
        let bare = self.bare();
        let mut comult = Vec::with_capacity(n);
        let mut counit = Vec::with_capacity(n);
        let mut antipode = Matrix::zeros(n, n);
        for (k, word) in self.words.iter().enumerate() {
            let mut d = bare.tensor_one(2);
            let mut e = C::one();
            let mut s = bare.one();
            for &g in word {
                d = bare.tensor_mul(&d, &gens[g].comult);
                e *= &gens[g].counit;
                s = bare.mul_unchecked(&gens[g].antipode, &s);
            }
            comult.push(d.to_matrix(n, n));
            counit.push(e);
            for (i, x) in s.into_iter().enumerate() {
                antipode.set(i, k, x);
            }
        }
        let grouplikes = self.grouplikes.iter().map(|&i| unit_vec(n, i)).collect();
        HopfAlgebra::new(HopfData {
            name: self.name,
            conductor: self.conductor,
            basis_labels: self.labels,
            mult: self.mult,
            unit: unit_vec(n, self.unit),
            comult,
            counit,
            antipode,
            grouplikes,
            grading: self.grading,
        })
        .expect("shape")
    }
}

fn unit_vec(n: usize, i: usize) -> Vec<C> {
    let mut v = vec![C::zero(); n];
    v[i] = C::one();
    v
}

fn monomial_label(parts: &[(&str, usize)]) -> String {
    let s: Vec<String> = parts
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(g, e)| if *e == 1 { g.to_string() } else { format!("{g}^{e}") })
        .collect();
    if s.is_empty() {
        "1".into()
    } else {
        s.join("")
    }
}

fn root(m: u32, k: i64) -> C {
    normalize(C::root_of_unity(m, k))
}

/// The Taft algebra of dimension n²: grouplike `g` of order n, `x` with
/// `gx = ζ_n xg`, `xⁿ = 0`, `Δ(x) = x⊗g + 1⊗x`. Basis `g^a x^b` at index
/// `a + n·b`, graded by the power of `x`.
pub fn taft(n: usize) -> Result<Hopf> {
    if !(2..=12).contains(&n) {
        return Err(Error::InvalidParameters(format!("taft needs 2 ≤ n ≤ 12, got {n}")));
    }
    let m = n as u32;
    let idx = |a: usize, b: usize| a % n + n * b;
    let dim = n * n;
    let mut mult = vec![vec![vec![C::zero(); dim]; dim]; dim];
    for (a, b, c, d) in quad(n) {
        // x^b g^c = ζ^{-bc} g^c x^b
        if b + d < n {
            mult[idx(a, b)][idx(c, d)][idx(a + c, b + d)] = root(m, -((b * c) as i64));
        }
    }
    let mut labels = vec![String::new(); dim];
    let mut words = vec![Vec::new(); dim];
    let mut grading = vec![0; dim];
    for a in 0..n {
        for b in 0..n {
            labels[idx(a, b)] = monomial_label(&[("g", a), ("x", b)]);
            words[idx(a, b)] = [vec![0; a], vec![1; b]].concat();
            grading[idx(a, b)] = b as u32;
        }
    }
    let alg = MonomialAlgebra {
        name: if n == 2 { "sweedler".into() } else { format!("taft({n})") },
        conductor: m,
        labels,
        mult,
        unit: 0,
        words,
        grouplikes: (0..n).map(|a| idx(a, 0)).collect(),
        grading: Some(grading),
    };
    let bare = alg.bare();
    let g = unit_vec(dim, idx(1, 0));
    let g_inv = unit_vec(dim, idx(n - 1, 0));
    let x = unit_vec(dim, idx(0, 1));
    let gens = [
        Generator {
            comult: Tensor::from_elements(&[&g, &g]),
            antipode: g_inv.clone(),
            counit: C::one(),
        },
        Generator {
            comult: Tensor::from_elements(&[&x, &g]).add(&Tensor::from_elements(&[&bare.one(), &x])),
            antipode: neg(&bare.mul_unchecked(&x, &g_inv)),
            counit: C::zero(),
        },
    ];
    Ok(alg.finish(&gens))
}

/// Sweedler's four-dimensional algebra, basis `{1, g, x, gx}`.
pub fn sweedler() -> Hopf {
    taft(2).expect("n = 2 is supported")
}

fn quad(n: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..n).flat_map(move |a| {
        (0..n).flat_map(move |b| (0..n).flat_map(move |c| (0..n).map(move |d| (a, b, c, d))))
    })
}

fn neg(v: &[C]) -> Vec<C> {
    v.iter().map(|c| -c.clone()).collect()
}

fn check_odd_prime(p: usize, what: &str) -> Result<()> {
    let prime = p >= 3 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0);
    if !prime {
        return Err(Error::InvalidParameters(format!("{what} needs an odd prime p ≥ 3, got {p}")));
    }
    Ok(())
}

/// The Borel part of small quantum sl₂ at `q = ζ_p`: `K` grouplike of order
/// p, `KEK⁻¹ = q²E`, `Eᵖ = 0`, `Δ(E) = E⊗K + 1⊗E`. Basis `E^a K^c` at
/// index `c + p·a`, graded by the power of `E`.
pub fn uq_borel(p: usize) -> Result<Hopf> {
    check_odd_prime(p, "uqb2")?;
    if p > 7 {
        return Err(Error::TooLarge(format!("uqb2:{p} exceeds the preset envelope (p ≤ 7)")));
    }
    let m = p as u32;
    let idx = |a: usize, c: usize| c % p + p * a;
    let dim = p * p;
    let mut mult = vec![vec![vec![C::zero(); dim]; dim]; dim];
    for (a, c, b, d) in quad(p) {
        // K^c E^b = q^{2bc} E^b K^c
        if a + b < p {
            mult[idx(a, c)][idx(b, d)][idx(a + b, c + d)] = root(m, (2 * b * c) as i64);
        }
    }
    let mut labels = vec![String::new(); dim];
    let mut words = vec![Vec::new(); dim];
    let mut grading = vec![0; dim];
    for a in 0..p {
        for c in 0..p {
            labels[idx(a, c)] = monomial_label(&[("E", a), ("K", c)]);
            words[idx(a, c)] = [vec![0; a], vec![1; c]].concat();
            grading[idx(a, c)] = a as u32;
        }
    }
    let alg = MonomialAlgebra {
        name: format!("uq_borel({p})"),
        conductor: m,
        labels,
        mult,
        unit: 0,
        words,
        grouplikes: (0..p).map(|c| idx(0, c)).collect(),
        grading: Some(grading),
    };
    let bare = alg.bare();
    let e = unit_vec(dim, idx(1, 0));
    let k = unit_vec(dim, idx(0, 1));
    let k_inv = unit_vec(dim, idx(0, p - 1));
    let gens = [
        Generator {
            comult: Tensor::from_elements(&[&e, &k]).add(&Tensor::from_elements(&[&bare.one(), &e])),
            antipode: neg(&bare.mul_unchecked(&e, &k_inv)),
            counit: C::zero(),
        },
        Generator {
            comult: Tensor::from_elements(&[&k, &k]),
            antipode: k_inv,
            counit: C::one(),
        },
    ];
    Ok(alg.finish(&gens))
}

/// Small quantum sl₂ at `q = ζ_p`, dimension p³, PBW basis `E^a F^b K^c` at
/// index `c + p·(b + p·a)`. Relations `KEK⁻¹ = q²E`, `KFK⁻¹ = q⁻²F`,
/// `[E,F] = (K − K⁻¹)/(q − q⁻¹)`, `Eᵖ = Fᵖ = 0`, `Kᵖ = 1`; coproducts
/// `Δ(E) = E⊗K + 1⊗E`, `Δ(F) = F⊗1 + K⁻¹⊗F`.
pub fn uq_sl2(p: usize) -> Result<Hopf> {
    check_odd_prime(p, "uqsl2")?;
    if p > 5 {
        return Err(Error::TooLarge(format!("uqsl2:{p} exceeds the preset envelope (p ≤ 5)")));
    }
    let m = p as u32;
    let dim = p * p * p;
    let idx = |a: usize, b: usize, c: usize| c % p + p * (b + p * a);
    let q = root(m, 1);
    let q_inv = root(m, -1);
    let denom_inv = (q.clone() - q_inv.clone()).inverse().expect("q ≠ q⁻¹ for odd p");

    // Left multiplication of a basis monomial by a generator, as a dense
    // vector. 0 = E, 1 = F, 2 = K, 3 = K⁻¹.
    fn left_gen(g: usize, (a, b, c): (usize, usize, usize), ctx: &Ctx) -> Vec<C> {
        let p = ctx.p;
        let mut out = vec![C::zero(); p * p * p];
        let idx = |a: usize, b: usize, c: usize| c % p + p * (b + p * a);
        match g {
            0 => {
                if a + 1 < p {
                    out[idx(a + 1, b, c)] = C::one();
                }
            }
            2 | 3 => {
                // K E^a F^b = q^{2a-2b} E^a F^b K
                let sign = if g == 2 { 1 } else { -1 };
                let e = sign * (2 * a as i64 - 2 * b as i64);
                let shift = if g == 2 { 1 } else { p - 1 };
                out[idx(a, b, c + shift)] = root(ctx.m, e);
            }
            1 => {
                if a == 0 {
                    if b + 1 < p {
                        out[idx(0, b + 1, c)] = C::one();
                    }
                } else {
                    // F·E·M' = E·(F·M') − (K·M' − K⁻¹·M')/(q − q⁻¹)
                    let rest = (a - 1, b, c);
                    let fm = left_gen(1, rest, ctx);
                    for (i, x) in fm.iter().enumerate() {
                        if x.is_zero() {
                            continue;
                        }
                        let mono = ctx.decode(i);
                        for (j, y) in left_gen(0, mono, ctx).into_iter().enumerate() {
                            out[j].add_mul(x, &y);
                        }
                    }
                    let km = left_gen(2, rest, ctx);
                    let kim = left_gen(3, rest, ctx);
                    for j in 0..out.len() {
                        let d = (km[j].clone() - kim[j].clone()) * ctx.denom_inv.clone();
                        out[j] -= &d;
                    }
                }
            }
            _ => unreachable!("generator index"),
        }
        out
    }

    struct Ctx {
        p: usize,
        m: u32,
        denom_inv: C,
    }
    impl Ctx {
        fn decode(&self, i: usize) -> (usize, usize, usize) {
            let p = self.p;
            (i / (p * p), (i / p) % p, i % p)
        }
    }
    let ctx = Ctx { p, m, denom_inv };

    let left_vec = |g: usize, v: &[C]| -> Vec<C> {
        let mut out = vec![C::zero(); dim];
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in left_gen(g, ctx.decode(i), &ctx).into_iter().enumerate() {
                out[j].add_mul(x, &y);
            }
        }
        out
    };

    let mut mult = vec![vec![Vec::new(); dim]; dim];
    let mut labels = vec![String::new(); dim];
    let mut words = vec![Vec::new(); dim];
    for i in 0..dim {
        let (a, b, c) = ctx.decode(i);
        labels[i] = monomial_label(&[("E", a), ("F", b), ("K", c)]);
        words[i] = [vec![0; a], vec![1; b], vec![2; c]].concat();
        for j in 0..dim {
            let mut v = unit_vec(dim, j);
            for &g in words[i].iter().rev() {
                v = left_vec(g, &v);
            }
            mult[i][j] = v.into_iter().map(normalize).collect();
        }
    }
    let alg = MonomialAlgebra {
        name: format!("uq_sl2({p})"),
        conductor: m,
        labels,
        mult,
        unit: idx(0, 0, 0),
        words,
        grouplikes: (0..p).map(|c| idx(0, 0, c)).collect(),
        grading: None,
    };
    let bare = alg.bare();
    let e = unit_vec(dim, idx(1, 0, 0));
    let f = unit_vec(dim, idx(0, 1, 0));
    let k = unit_vec(dim, idx(0, 0, 1));
    let k_inv = unit_vec(dim, idx(0, 0, p - 1));
    let one = bare.one();
    let gens = [
        Generator {
            comult: Tensor::from_elements(&[&e, &k]).add(&Tensor::from_elements(&[&one, &e])),
            antipode: neg(&bare.mul_unchecked(&e, &k_inv)),
            counit: C::zero(),
        },
        Generator {
            comult: Tensor::from_elements(&[&f, &one]).add(&Tensor::from_elements(&[&k_inv, &f])),
            antipode: neg(&bare.mul_unchecked(&k, &f)),
            counit: C::zero(),
        },
        Generator {
            comult: Tensor::from_elements(&[&k, &k]),
            antipode: k_inv,
            counit: C::one(),
        },
    ];
    Ok(alg.finish(&gens))
}
