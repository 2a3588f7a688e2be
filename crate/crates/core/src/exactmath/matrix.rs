//! Dense exact matrices, reduced row-echelon form and incremental echelon bases.

use super::{Field, MathError};

/// Dense row-major matrix over an exact field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Result of [`ExactMatrix::rref`].
#[derive(Clone, Debug)]
pub struct Rref<F: Field> {
    pub matrix: ExactMatrix<F>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl<F: Field> ExactMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    /// Builds from row vectors; every row must have length `cols`.
    pub fn from_rows(rows: Vec<Vec<F>>, cols: usize) -> Result<Self, MathError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(MathError::DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(ExactMatrix {
            rows: n,
            cols,
            data,
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Reduced row-echelon form; pivots are chosen as the first nonzero entry
    /// in column order, scanning rows top to bottom.
    pub fn rref(&self) -> Rref<F> {
        let mut rows = self.row_vecs();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][c].inv().expect("pivot is nonzero");
            for x in rows[r][c..].iter_mut() {
                *x = x.mul_ref(&inv);
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    if !y.is_zero() {
                        *x = x.sub_ref(&f.mul_ref(y));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let rank = pivots.len();
        let matrix = ExactMatrix::from_rows(rows, self.cols).expect("shape preserved");
        Rref {
            matrix,
            rank,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        for i in 0..self.rows {
            e.insert(self.row(i).to_vec());
        }
        e.rank()
    }

    /// Basis of the right kernel {x : M x = 0}.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let rr = self.rref();
        let mut free = Vec::new();
        let mut pi = 0;
        for c in 0..self.cols {
            if pi < rr.pivots.len() && rr.pivots[pi] == c {
                pi += 1;
            } else {
                free.push(c);
            }
        }
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (i, &p) in rr.pivots.iter().enumerate() {
                    v[p] = rr.matrix.get(i, f).neg_ref();
                }
                v
            })
            .collect()
    }
}

/// An echelon basis grown one vector at a time.
///
/// Rows are kept sorted by pivot column with unit pivots. When `track` is
/// set, each row also remembers which combination of inserted vectors it is,
/// so that membership queries can report coordinates on the inserted
/// vectors.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    dim: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
    combos: Option<Vec<Vec<F>>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(dim: usize) -> Self {
        Echelon {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
            combos: None,
        }
    }

    /// Like [`Echelon::new`] but records combinations of the independent
    /// inserted vectors (see [`Echelon::coordinates`]).
    pub fn tracking(dim: usize) -> Self {
        Echelon {
            combos: Some(Vec::new()),
            ..Self::new(dim)
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis, returning the remainder and the
    /// multipliers used for each basis row.
    fn reduce(&self, mut v: Vec<F>, want_mult: bool) -> (Vec<F>, Vec<F>) {
        let mut mult = if want_mult {
            vec![F::zero(); self.rows.len()]
        } else {
            Vec::new()
        };
        for (k, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, y) in v[p..].iter_mut().zip(&row[p..]) {
                if !y.is_zero() {
                    *x = x.sub_ref(&f.mul_ref(y));
                }
            }
            if want_mult {
                mult[k] = f;
            }
        }
        (v, mult)
    }

    /// Inserts `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        assert_eq!(v.len(), self.dim, "vector length");
        let tracking = self.combos.is_some();
        let (mut v, mult) = self.reduce(v, tracking);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero");
        for x in v[p..].iter_mut() {
            *x = x.mul_ref(&inv);
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        if let Some(combos) = self.combos.as_mut() {
            // new row = (v_new - Σ mult_k row_k) * inv, expressed on the
            // independent inserted vectors.
            let idx = self.rows.len();
            let mut c = vec![F::zero(); idx + 1];
            c[idx] = inv.clone();
            for (k, m) in mult.iter().enumerate() {
                if m.is_zero() {
                    continue;
                }
                let f = m.mul_ref(&inv);
                for (j, y) in combos[k].iter().enumerate() {
                    c[j] = c[j].sub_ref(&f.mul_ref(y));
                }
            }
            combos.insert(pos, c);
        }
        self.rows.insert(pos, v);
        self.pivots.insert(pos, p);
        true
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.dim, "vector length");
        let (rem, _) = self.reduce(v.to_vec(), false);
        rem.iter().all(|x| x.is_zero())
    }

    /// Coordinates of `v` on the echelon rows (in pivot order), or `None`.
    pub fn row_coordinates(&self, v: &[F]) -> Result<Option<Vec<F>>, MathError> {
        if v.len() != self.dim {
            return Err(MathError::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        let (rem, mult) = self.reduce(v.to_vec(), true);
        if rem.iter().any(|x| !x.is_zero()) {
            return Ok(None);
        }
        Ok(Some(mult))
    }

    /// Coordinates of `v` on the independent vectors in insertion order
    /// (dependent insertions are skipped). Requires a tracking basis.
    pub fn coordinates(&self, v: &[F]) -> Result<Option<Vec<F>>, MathError> {
        let combos = self
            .combos
            .as_ref()
            .expect("coordinates require Echelon::tracking");
        let Some(mult) = self.row_coordinates(v)? else {
            return Ok(None);
        };
        let mut out = vec![F::zero(); self.rows.len()];
        for (m, c) in mult.iter().zip(combos) {
            if m.is_zero() {
                continue;
            }
            for (j, y) in c.iter().enumerate() {
                out[j].add_mul(m, y);
            }
        }
        Ok(Some(out))
    }

    /// Fully reduced rows (each pivot column zero in every other row).
    pub fn reduced_rows(&self) -> Vec<Vec<F>> {
        let mut rows = self.rows.clone();
        for k in (0..rows.len()).rev() {
            let p = self.pivots[k];
            let pivot_row = rows[k].clone();
            for row in rows.iter_mut().take(k) {
                if row[p].is_zero() {
                    continue;
                }
                let f = row[p].clone();
                for (x, y) in row[p..].iter_mut().zip(&pivot_row[p..]) {
                    if !y.is_zero() {
                        *x = x.sub_ref(&f.mul_ref(y));
                    }
                }
            }
        }
        rows
    }
}

/// Basis of the intersection of the spans of `a` and `b` (vectors of length
/// `dim`).
pub fn intersection<F: Field>(a: &[Vec<F>], b: &[Vec<F>], dim: usize) -> Vec<Vec<F>> {
    // Solve Σ x_i a_i = Σ y_j b_j via the kernel of [a; -b]^T.
    let cols = a.len() + b.len();
    if cols == 0 {
        return Vec::new();
    }
    let mut m = ExactMatrix::zeros(dim, cols);
    for (i, v) in a.iter().enumerate() {
        for (k, x) in v.iter().enumerate() {
            m.set(k, i, x.clone());
        }
    }
    for (j, v) in b.iter().enumerate() {
        for (k, x) in v.iter().enumerate() {
            m.set(k, a.len() + j, x.neg_ref());
        }
    }
    let mut e = Echelon::new(dim);
    for ker in m.kernel() {
        let mut w = vec![F::zero(); dim];
        for (i, v) in a.iter().enumerate() {
            if ker[i].is_zero() {
                continue;
            }
            for (k, x) in v.iter().enumerate() {
                w[k].add_mul(&ker[i], x);
            }
        }
        e.insert(w);
    }
    e.reduced_rows()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Rational;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> ExactMatrix<Rational> {
        let cols = rows.first().map_or(0, |r| r.len());
        ExactMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_int(x)).collect())
                .collect(),
            cols,
        )
        .unwrap()
    }

    #[test]
    fn rref_examples() {
        let id = m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let r = id.rref();
        assert_eq!(r.rank, 3);
        assert_eq!(r.matrix, id);
        assert_eq!(m(&[&[1, 1], &[1, 1]]).rref().rank, 1);
        let r = m(&[&[0, 2, 4], &[1, 1, 1]]).rref();
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.matrix, m(&[&[1, 0, -1], &[0, 1, 2]]));
    }

    #[test]
    fn coordinates_and_membership() {
        let mut e = Echelon::tracking(3);
        let a: Vec<Rational> = [1, 2, 0].iter().map(|&x| Rational::from_int(x)).collect();
        let b: Vec<Rational> = [0, 1, 1].iter().map(|&x| Rational::from_int(x)).collect();
        assert!(e.insert(a.clone()));
        assert!(e.insert(b.clone()));
        assert!(!e.insert(a.iter().zip(&b).map(|(x, y)| x + y).collect()));
        let zero = vec![Rational::zero(); 3];
        assert_eq!(
            e.coordinates(&zero).unwrap().unwrap(),
            vec![Rational::zero(); 2]
        );
        assert_eq!(
            e.coordinates(&a).unwrap().unwrap(),
            vec![Rational::one(), Rational::zero()]
        );
        let v: Vec<Rational> = [2, 1, -3].iter().map(|&x| Rational::from_int(x)).collect();
        assert_eq!(
            e.coordinates(&v).unwrap().unwrap(),
            vec![Rational::from_int(2), Rational::from_int(-3)]
        );
        let w: Vec<Rational> = [0, 0, 1].iter().map(|&x| Rational::from_int(x)).collect();
        assert!(e.coordinates(&w).unwrap().is_none());
        assert!(e.coordinates(&w[..2]).is_err());
        let empty = Echelon::<Rational>::tracking(3);
        assert_eq!(empty.coordinates(&zero).unwrap().unwrap(), Vec::new());
    }

    #[test]
    fn kernel_and_intersection() {
        let a = m(&[&[1, 1, 0], &[0, 0, 1]]);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![Rational::from_int(-1), Rational::one(), Rational::zero()]);
        let s1 = m(&[&[1, 0, 0], &[0, 1, 0]]).row_vecs();
        let s2 = m(&[&[0, 1, 0], &[0, 0, 1]]).row_vecs();
        let i = intersection(&s1, &s2, 3);
        assert_eq!(i, m(&[&[0, 1, 0]]).row_vecs());
    }

    proptest! {
        #[test]
        fn rref_is_idempotent_and_rank_transpose(entries in prop::collection::vec(-3i64..=3, 20)) {
            let rows: Vec<Vec<Rational>> = entries.chunks(5).map(|c| c.iter().map(|&x| Rational::from_int(x)).collect()).collect();
            let a = ExactMatrix::from_rows(rows, 5).unwrap();
            let r1 = a.rref();
            let r2 = r1.matrix.rref();
            prop_assert_eq!(&r1.matrix, &r2.matrix);
            prop_assert_eq!(r1.rank, a.transpose().rref().rank);
            prop_assert_eq!(r1.rank, a.rank());
        }
    }
}
