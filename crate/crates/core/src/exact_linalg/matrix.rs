use super::{Field, LinalgError, Subspace};

/// Dense row-major matrix over a field. The field itself is passed to every
/// operation that needs arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn new(rows: usize, cols: usize, data: Vec<E>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::Shape {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros<F: Field<Elem = E>>(field: &F, rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Builds a matrix from explicit rows; every row must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<E>>) -> Result<Self, LinalgError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinalgError::Shape {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(Self { rows: n, cols, data })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<E>]) -> Result<Self, LinalgError> {
        let cols = columns.len();
        let mut data = Vec::with_capacity(rows * cols);
        for c in columns {
            if c.len() != rows {
                return Err(LinalgError::Shape {
                    expected: rows,
                    found: c.len(),
                });
            }
        }
        for i in 0..rows {
            for c in columns {
                data.push(c[i].clone());
            }
        }
        Ok(Self { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn data(&self) -> &[E] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.data.iter().all(|x| field.is_zero(x))
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Shape {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(field, self.rows, other.cols);
        for i in 0..self.rows {
            let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if !field.is_zero(a) {
                    field.add_scaled(dst, a, other.row(k));
                }
            }
        }
        Ok(out)
    }

    /// `self * v` for a column vector `v`.
    pub fn mul_vec<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Result<Vec<E>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::Shape {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !field.is_zero(a) && !field.is_zero(b) {
                        acc = field.add(&acc, &field.mul(a, b));
                    }
                }
                acc
            })
            .collect())
    }

    /// Reduced row-echelon form and its pivot columns.
    pub fn rref<F: Field<Elem = E>>(&self, field: &F) -> (Self, Vec<usize>) {
        let mut rows = self.row_vecs();
        let pivots = rref_rows(field, &mut rows, self.cols);
        let mut data = Vec::with_capacity(self.data.len());
        for r in rows {
            data.extend(r);
        }
        data.resize(self.data.len(), field.zero());
        (
            Self {
                rows: self.rows,
                cols: self.cols,
                data,
            },
            pivots,
        )
    }

    pub fn rank<F: Field<Elem = E>>(&self, field: &F) -> usize {
        let mut rows = self.row_vecs();
        rref_rows(field, &mut rows, self.cols).len()
    }

    /// Null space of `self` acting on column vectors.
    pub fn kernel<F: Field<Elem = E>>(&self, field: &F) -> Subspace<E> {
        kernel_of_rows(field, self.row_vecs(), self.cols)
    }

    /// Column space of `self`.
    pub fn image<F: Field<Elem = E>>(&self, field: &F) -> Subspace<E> {
        Subspace::from_spanning(field, self.rows, self.transpose().row_vecs())
    }
}

/// Gauss-Jordan elimination in place with first-nonzero pivoting. On return
/// `rows` holds exactly the nonzero rows of the reduced row-echelon form.
pub fn rref_rows<F: Field>(field: &F, rows: &mut Vec<Vec<F::Elem>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    let mut support = Vec::with_capacity(ncols);
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][col])) else {
            continue;
        };
        rows.swap(r, found);
        let inv = field.inv(&rows[r][col]);
        if !field.is_one(&inv) {
            for x in rows[r][col..].iter_mut() {
                if !field.is_zero(x) {
                    *x = field.mul(x, &inv);
                }
            }
        }
        support.clear();
        support.extend((col..ncols).filter(|&k| !field.is_zero(&rows[r][k])));
        let (before, rest) = rows.split_at_mut(r);
        let (pivot, after) = rest.split_first_mut().expect("pivot row");
        for other in before.iter_mut().chain(after.iter_mut()) {
            if !field.is_zero(&other[col]) {
                let f = other[col].clone();
                field.sub_scaled(other, &f, pivot, &support);
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Kernel of the matrix with the given rows, as a canonical subspace of
/// `k^ncols`.
///
/// Eliminating with the column order reversed makes the standard null-space
/// basis come out already in reduced row-echelon form for the original order.
pub fn kernel_of_rows<F: Field>(field: &F, mut rows: Vec<Vec<F::Elem>>, ncols: usize) -> Subspace<F::Elem> {
    for r in rows.iter_mut() {
        debug_assert_eq!(r.len(), ncols);
        r.reverse();
    }
    let pivots = rref_rows(field, &mut rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    // free column f (reversed index) gives the vector with 1 at f and
    // -rows[k][f] at pivot k; in original coordinates the leading entry is f.
    let mut basis = Vec::with_capacity(ncols - pivots.len());
    let mut basis_pivots = Vec::with_capacity(ncols - pivots.len());
    for f in (0..ncols).rev().filter(|&f| !is_pivot[f]) {
        let mut v = vec![field.zero(); ncols];
        v[ncols - 1 - f] = field.one();
        for (k, &p) in pivots.iter().enumerate() {
            if p > f {
                break;
            }
            let x = &rows[k][f];
            if !field.is_zero(x) {
                v[ncols - 1 - p] = field.neg(x);
            }
        }
        basis_pivots.push(ncols - 1 - f);
        basis.push(v);
    }
    Subspace::from_canonical_parts(ncols, basis, basis_pivots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::PrimeField;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn mat(rows: Vec<Vec<u32>>) -> Matrix<u32> {
        let c = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(c, rows).unwrap()
    }

    #[test]
    fn rref_examples() {
        let f = gf(101);
        let (z, p) = mat(vec![vec![0, 0], vec![0, 0]]).rref(&f);
        assert!(z.is_zero(&f));
        assert!(p.is_empty());

        let id = Matrix::identity(&f, 3);
        let (r, p) = id.rref(&f);
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1, 2]);

        let f5 = gf(5);
        let (r, p) = mat(vec![vec![2, 4], vec![1, 2]]).rref(&f5);
        assert_eq!(r, mat(vec![vec![1, 2], vec![0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        let f = gf(101);
        assert_eq!(Matrix::identity(&f, 2).kernel(&f).dim(), 0);
        let k = mat(vec![vec![0, 0]]).kernel(&f);
        assert_eq!(k.dim(), 2);
        assert_eq!(k, Subspace::full(&f, 2));

        // a + 3b = 0 over GF(7): (-3, 1) = (4, 1), canonical form (1, 2)
        let f7 = gf(7);
        let k = mat(vec![vec![1, 3]]).kernel(&f7);
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis(), &[vec![1, 2]]);
        assert!(k.contains(&f7, &[4, 1]));
    }

    #[test]
    fn image_examples() {
        let f = gf(101);
        assert_eq!(Matrix::identity(&f, 3).image(&f), Subspace::full(&f, 3));
        assert_eq!(Matrix::zeros(&f, 3, 2).image(&f).dim(), 0);
        // (1,2)^T (1,1)
        let outer = mat(vec![vec![1, 1], vec![2, 2]]);
        let im = outer.image(&f);
        assert_eq!(im.basis(), &[vec![1, 2]]);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let f = gf(13);
        let m = mat(vec![vec![1, 2, 3, 4, 5], vec![0, 0, 1, 1, 0], vec![1, 2, 4, 5, 5]]);
        let k = m.kernel(&f);
        assert_eq!(k.dim() + m.rank(&f), 5);
        for v in k.basis() {
            assert!(m.mul_vec(&f, v).unwrap().iter().all(|&x| x == 0));
        }
        let again = Subspace::from_spanning(&f, 5, k.basis().to_vec());
        assert_eq!(again, k);
    }

    #[test]
    fn matrix_product_shapes() {
        let f = gf(7);
        let a = mat(vec![vec![1, 2, 3]]);
        let b = mat(vec![vec![1], vec![1], vec![1]]);
        assert_eq!(a.mul(&f, &b).unwrap(), mat(vec![vec![6]]));
        assert!(a.mul(&f, &a).is_err());
        assert_eq!(a.transpose().transpose(), a);
    }
}
