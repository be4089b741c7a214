
use crate::scalar::Field;

/// Incremental row echelon form that remembers how every stored row was
/// built from the vectors accepted so far.
///
/// [`SpanBuilder::insert`] either accepts a vector (it was independent) or
/// returns its exact coordinates with respect to the accepted vectors.
#[derive(Clone, Debug)]
pub struct SpanBuilder<F> {
    len: usize,
    rows: Vec<EchelonRow<F>>,
}

#[derive(Clone, Debug)]
struct EchelonRow<F> {
    pivot: usize,
    /// Pivot entry is 1; zero at the pivots of all earlier rows.
    vector: Vec<F>,
    /// `vector = Σ combo[j] · accepted[j]`
    combo: Vec<F>,
}

impl<F: Field> SpanBuilder<F> {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            rows: Vec::new(),
        }
    }

    /// Number of accepted (independent) vectors.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn vector_len(&self) -> usize {
        self.len
    }

    /// Reduce `v` against the stored rows. Returns the residue and the
    /// multiples of each stored row that were subtracted.
    fn reduce(&self, mut v: Vec<F>) -> (Vec<F>, Vec<F>) {
        let mut factors = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            let f = v[row.pivot].clone();
            if !f.is_zero() {
                for (x, r) in v.iter_mut().zip(&row.vector).skip(row.pivot) {
                    if !r.is_zero() {
                        *x -= &f.mul_ref(r);
                    }
                }
            }
            factors.push(f);
        }
        (v, factors)
    }

    /// Coordinates of `v` in terms of the accepted vectors, if it lies in
    /// their span. Does not modify the builder.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        assert_eq!(v.len(), self.len, "vector length");
        let (residue, factors) = self.reduce(v.to_vec());
        if residue.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(self.combine(&factors))
    }

    fn combine(&self, factors: &[F]) -> Vec<F> {
        let mut coords = vec![F::zero(); self.rows.len()];
        for (f, row) in factors.iter().zip(&self.rows) {
            if f.is_zero() {
                continue;
            }
            for (c, t) in coords.iter_mut().zip(&row.combo) {
                c.add_mul(f, t);
            }
        }
        coords
    }

    /// Accepts `v` and returns `None` if it is independent of the accepted
    /// vectors; otherwise returns its coordinates and leaves the span as is.
    pub fn insert(&mut self, v: Vec<F>) -> Option<Vec<F>> {
        assert_eq!(v.len(), self.len, "vector length");
        let (residue, factors) = self.reduce(v);
        let Some(pivot) = residue.iter().position(|x| !x.is_zero()) else {
            return Some(self.combine(&factors));
        };
        let inv = residue[pivot].inverse().expect("nonzero pivot");
        let n = self.rows.len();
        // residue = v_new - Σ factors[k] row_k
        let mut combo = vec![F::zero(); n + 1];
        combo[n] = F::one();
        for (f, row) in factors.iter().zip(&self.rows) {
            if f.is_zero() {
                continue;
            }
            for (c, t) in combo.iter_mut().zip(&row.combo) {
                *c -= &f.mul_ref(t);
            }
        }
        for row in &mut self.rows {
            row.combo.push(F::zero());
        }
        let vector = residue.into_iter().map(|x| x.mul_ref(&inv)).collect();
        let combo = combo.into_iter().map(|x| x.mul_ref(&inv)).collect();
        self.rows.push(EchelonRow {
            pivot,
            vector,
            combo,
        });
        None
    }
}

/// Exact coefficients expressing `candidate` in the span of `targets`, or
/// `None` when it is independent of them. Redundant targets get coefficient
/// zero.
pub fn solve_in_span<F: Field>(targets: &[Vec<F>], candidate: &[F]) -> Option<Vec<F>> {
    let mut span = SpanBuilder::new(candidate.len());
    let mut accepted = Vec::new();
    for (i, t) in targets.iter().enumerate() {
        if span.insert(t.clone()).is_none() {
            accepted.push(i);
        }
    }
    let coords = span.coordinates(candidate)?;
    let mut out = vec![F::zero(); targets.len()];
    for (idx, c) in accepted.into_iter().zip(coords) {
        out[idx] = c;
    }
    Some(out)
}

/// Basis of the null space `{x : A x = 0}` of a matrix given by rows.
pub fn null_space<F: Field>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    // Reduced row echelon form.
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inverse().expect("nonzero");
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f.mul_ref(y);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![F::zero(); ncols];
            x[f] = F::one();
            for (row, &pc) in pivots.iter().enumerate() {
                x[pc] = -m[row][f].clone();
            }
            x
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Rational;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn identity_in_span_of_identity() {
        let id = q(&[1, 0, 0, 1]);
        assert_eq!(solve_in_span(&[id.clone()], &id), Some(q(&[1])));
    }

    #[test]
    fn nilpotent_not_in_span_of_identity() {
        let id = q(&[1, 0, 0, 1]);
        let j2 = q(&[0, 1, 0, 0]);
        assert_eq!(solve_in_span(&[id], &j2), None);
    }

    #[test]
    fn square_of_reflection() {
        // A = diag(1, -1): A^2 = Id = 1·Id + 0·A
        let id = q(&[1, 0, 0, 1]);
        let a = q(&[1, 0, 0, -1]);
        assert_eq!(solve_in_span(&[id.clone(), a], &id), Some(q(&[1, 0])));
    }

    #[test]
    fn redundant_targets_get_zero() {
        let a = q(&[1, 2]);
        let b = q(&[2, 4]);
        let c = q(&[0, 1]);
        let coords = solve_in_span(&[a, b, c], &q(&[3, 7])).unwrap();
        assert_eq!(coords, q(&[3, 0, 1]));
    }

    #[test]
    fn null_space_dimension() {
        let rows = vec![q(&[1, 1, 0]), q(&[0, 0, 1])];
        let ns = null_space(&rows, 3);
        assert_eq!(ns, vec![q(&[-1, 1, 0])]);
    }
}
