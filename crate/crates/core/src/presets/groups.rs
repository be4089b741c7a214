use std::collections::VecDeque;

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exactfield::Cyclotomic;
use crate::hopf::{HopfAlgebra, HopfData};
use crate::linalg::Matrix;
use crate::Hopf;

/// A finite group given by its Cayley table: `table[a][b]` is the index of
/// `a·b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableFile {
    name: Option<String>,
    labels: Option<Vec<String>>,
    table: Vec<Vec<usize>>,
}

impl FiniteGroup {
    /// Checks closure, associativity, identity and inverses.
    pub fn from_table(name: impl Into<String>, labels: Option<Vec<String>>, table: Vec<Vec<usize>>) -> Result<Self> {
        let name = name.into();
        let n = table.len();
        let bad = |msg: String| Error::InvalidParameters(format!("Cayley table {name}: {msg}"));
        if n == 0 {
            return Err(bad("empty table".into()));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(bad(format!("row {a} has length {}", row.len())));
            }
            if let Some(x) = row.iter().find(|&&x| x >= n) {
                return Err(bad(format!("entry {x} out of range in row {a}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(bad(format!("not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| bad("no identity element".into()))?;
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| bad(format!("element {a} has no inverse")))?;
            inverses.push(inv);
        }
        let labels = match labels {
            Some(l) if l.len() == n => l,
            Some(l) => return Err(bad(format!("{} labels for {n} elements", l.len()))),
            None => (0..n).map(|i| format!("g{i}")).collect(),
        };
        Ok(Self {
            name,
            labels,
            table,
            identity,
            inverses,
        })
    }

    /// Parse a JSON Cayley table `{"name"?, "labels"?, "table": [[…]]}`.
    pub fn from_json(text: &str, default_name: &str) -> Result<Self> {
        let f: TableFile = serde_json::from_str(text).map_err(|e| Error::Schema {
            path: format!("line {}, column {}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        Self::from_table(f.name.unwrap_or_else(|| default_name.to_string()), f.labels, f.table)
    }

    /// Z_{n₁} × … × Z_{n_k}; element `(x₁,…,x_k)` has index `Σ xᵢ·(nᵢ₊₁⋯n_k)`.
    pub fn abelian(orders: &[usize]) -> Result<Self> {
        if orders.is_empty() || orders.iter().any(|&n| n == 0) {
            return Err(Error::InvalidParameters("cyclic factor orders must be positive".into()));
        }
        let n: usize = orders.iter().product();
        let digits = |mut i: usize| -> Vec<usize> {
            let mut d = vec![0; orders.len()];
            for (slot, &m) in d.iter_mut().zip(orders).rev() {
                *slot = i % m;
                i /= m;
            }
            d
        };
        let index = |d: &[usize]| d.iter().zip(orders).fold(0, |acc, (x, m)| acc * m + x);
        let table = (0..n)
            .map(|a| {
                let da = digits(a);
                (0..n)
                    .map(|b| {
                        let s: Vec<usize> = digits(b)
                            .iter()
                            .zip(&da)
                            .zip(orders)
                            .map(|((x, y), m)| (x + y) % m)
                            .collect();
                        index(&s)
                    })
                    .collect()
            })
            .collect();
        let gens = ["a", "b", "c", "d", "e", "f"];
        let labels = (0..n)
            .map(|i| {
                let d = digits(i);
                let parts: Vec<String> = d
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x > 0)
                    .map(|(k, &x)| {
                        let g = if orders.len() == 1 { "g" } else { gens[k % gens.len()] };
                        if x == 1 {
                            g.to_string()
                        } else {
                            format!("{g}^{x}")
                        }
                    })
                    .collect();
                if parts.is_empty() {
                    "1".to_string()
                } else {
                    parts.join("")
                }
            })
            .collect();
        let name = orders
            .iter()
            .map(|m| format!("Z{m}"))
            .collect::<Vec<_>>()
            .join("x");
        Self::from_table(name, Some(labels), table)
    }

    /// The symmetric group on three letters, as permutations of {0,1,2}.
    pub fn s3() -> Self {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let labels = ["1", "(12)", "(23)", "(13)", "(123)", "(132)"];
        // (p·q)(i) = p(q(i))
        let table = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| {
                        let pq = [p[q[0]], p[q[1]], p[q[2]]];
                        perms.iter().position(|r| *r == pq).expect("closed")
                    })
                    .collect()
            })
            .collect();
        Self::from_table("S3", Some(labels.iter().map(|s| s.to_string()).collect()), table).expect("S3 table")
    }

    /// `Z2`, `Z3`, `Z4`, `Z6`, `Z2xZ2`, `S3`, and more generally `Zn` and
    /// `Zaxb…` products.
    pub fn builtin(name: &str) -> Result<Self> {
        if name == "S3" {
            return Ok(Self::s3());
        }
        let orders: Option<Vec<usize>> = name
            .split('x')
            .map(|part| part.strip_prefix('Z').and_then(|d| d.parse().ok()))
            .collect();
        match orders {
            Some(o) if !o.is_empty() && o.iter().all(|&m| (1..=60).contains(&m)) => Self::abelian(&o),
            _ => Err(Error::InvalidParameters(format!("unknown builtin group {name:?}"))),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn element_order(&self, a: usize) -> u64 {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        (0..self.order()).fold(1, |acc, a| acc.lcm(&self.element_order(a)))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// All homomorphisms to the group of `e`-th roots of unity, each as the
    /// exponent vector `k` with `χ(a) = ζ_e^{k[a]}`. Sorted.
    /// A generating set, chosen greedily in index order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut reached = vec![false; self.order()];
        reached[self.identity] = true;
        for a in 0..self.order() {
            if !reached[a] {
                gens.push(a);
                reached = self.closure(&gens);
            }
        }
        gens
    }

    pub fn characters(&self, e: u64) -> Vec<Vec<u64>> {
        let gens = self.generators();
        let mut out = Vec::new();
        let total = (e as usize).pow(gens.len() as u32);
        for code in 0..total {
            let mut vals = Vec::with_capacity(gens.len());
            let mut c = code;
            for _ in &gens {
                vals.push((c % e as usize) as u64);
                c /= e as usize;
            }
            if let Some(chi) = self.extend_character(&gens, &vals, e) {
                out.push(chi);
            }
        }
        out.sort();
        out
    }

    fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(a) = queue.pop_front() {
            for &s in gens {
                let b = self.mul(a, s);
                if !seen[b] {
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
        seen
    }

    /// Extend generator values to a homomorphism by walking the Cayley graph,
    /// failing on any inconsistency.
    fn extend_character(&self, gens: &[usize], vals: &[u64], e: u64) -> Option<Vec<u64>> {
        let n = self.order();
        let mut chi: Vec<Option<u64>> = vec![None; n];
        chi[self.identity] = Some(0);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(a) = queue.pop_front() {
            let ca = chi[a].expect("visited");
            for (&s, &v) in gens.iter().zip(vals) {
                let b = self.mul(a, s);
                let cb = (ca + v) % e;
                match chi[b] {
                    None => {
                        chi[b] = Some(cb);
                        queue.push_back(b);
                    }
                    Some(x) if x != cb => return None,
                    Some(_) => {}
                }
            }
        }
        chi.into_iter().collect()
    }
}

fn rat(n: i64) -> Cyclotomic {
    Cyclotomic::from(n)
}

/// The group algebra `C[G]`: grouplike basis, `S(g) = g⁻¹`.
pub fn group_algebra(g: &FiniteGroup) -> Hopf {
    let n = g.order();
    let unit_vec = |i: usize| {
        let mut v = vec![Cyclotomic::zero(); n];
        v[i] = Cyclotomic::one();
        v
    };
    let mult = (0..n)
        .map(|a| (0..n).map(|b| unit_vec(g.mul(a, b))).collect())
        .collect();
    let comult = (0..n)
        .map(|a| {
            let mut m = Matrix::zeros(n, n);
            m.set(a, a, Cyclotomic::one());
            m
        })
        .collect();
    let mut antipode = Matrix::zeros(n, n);
    for a in 0..n {
        antipode.set(g.inverse(a), a, Cyclotomic::one());
    }
    HopfAlgebra::new(HopfData {
        name: format!("C[{}]", g.name()),
        conductor: 1,
        basis_labels: g.labels().to_vec(),
        mult,
        unit: unit_vec(g.identity()),
        comult,
        counit: vec![rat(1); n],
        antipode,
        grouplikes: (0..n).map(unit_vec).collect(),
        grading: None,
    })
    .expect("group algebra shape")
}

/// The algebra of functions on `G`, basis of point indicators `δ_a`. Its
/// grouplikes are the characters of `G`, which need roots of unity of order
/// `exp(G)`; the conductor is set accordingly.
pub fn dual_group_algebra(g: &FiniteGroup) -> Hopf {
    let n = g.order();
    let e = g.exponent();
    let conductor = e as u32;
    let unit_vec = |i: usize| {
        let mut v = vec![Cyclotomic::zero(); n];
        v[i] = Cyclotomic::one();
        v
    };
    let mut mult = vec![vec![vec![Cyclotomic::zero(); n]; n]; n];
    for (a, row) in mult.iter_mut().enumerate() {
        row[a] = unit_vec(a);
    }
    let mut comult = vec![Matrix::zeros(n, n); n];
    for a in 0..n {
        for b in 0..n {
            comult[g.mul(a, b)].set(a, b, Cyclotomic::one());
        }
    }
    let mut antipode = Matrix::zeros(n, n);
    for a in 0..n {
        antipode.set(g.inverse(a), a, Cyclotomic::one());
    }
    let grouplikes = g
        .characters(e)
        .into_iter()
        .map(|chi| chi.into_iter().map(|k| Cyclotomic::root_of_unity(conductor, k as i64)).map(normalize).collect())
        .collect();
    HopfAlgebra::new(HopfData {
        name: format!("C^{}", g.name()),
        conductor,
        basis_labels: g.labels().iter().map(|l| format!("d[{l}]")).collect(),
        mult,
        unit: vec![rat(1); n],
        comult,
        counit: unit_vec(g.identity()),
        antipode,
        grouplikes,
        grading: None,
    })
    .expect("dual group algebra shape")
}

/// Rational values are stored with conductor 1 so they combine freely.
pub(crate) fn normalize(c: Cyclotomic) -> Cyclotomic {
    match c.as_rational() {
        Some(r) if c.conductor() != 1 => Cyclotomic::rational(r.clone()),
        _ => c,
    }
}
