use super::matrix::rref_rows;
use super::{Field, LinalgError, Matrix};

/// A subspace of `k^n` stored by its reduced row-echelon basis. Two subspaces
/// are equal exactly when their canonical bases are.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<E> {
    ambient: usize,
    basis: Vec<Vec<E>>,
    pivots: Vec<usize>,
}

impl<E: Clone> Subspace<E> {
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full<F: Field<Elem = E>>(field: &F, ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![field.zero(); ambient];
                v[i] = field.one();
                v
            })
            .collect();
        Self {
            ambient,
            basis,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_spanning<F: Field<Elem = E>>(field: &F, ambient: usize, mut vectors: Vec<Vec<E>>) -> Self {
        vectors.retain(|v| v.iter().any(|x| !field.is_zero(x)));
        let pivots = rref_rows(field, &mut vectors, ambient);
        Self {
            ambient,
            basis: vectors,
            pivots,
        }
    }

    /// Wraps a basis the caller guarantees is already canonical.
    pub(crate) fn from_canonical_parts(ambient: usize, basis: Vec<Vec<E>>, pivots: Vec<usize>) -> Self {
        Self { ambient, basis, pivots }
    }

    /// Span of the standard basis vectors with the given (sorted) indices.
    pub fn coordinate<F: Field<Elem = E>>(field: &F, ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut basis = Vec::new();
        let mut pivots = Vec::new();
        for i in indices {
            let mut v = vec![field.zero(); ambient];
            v[i] = field.one();
            basis.push(v);
            pivots.push(i);
        }
        debug_assert!(pivots.windows(2).all(|w| w[0] < w[1]));
        Self { ambient, basis, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<E>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Reduces `v` in place modulo the subspace. The result is zero iff `v`
    /// lies in the subspace, and it vanishes on every pivot column.
    pub fn reduce_in_place<F: Field<Elem = E>>(&self, field: &F, v: &mut [E]) {
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !field.is_zero(&v[p]) {
                let c = v[p].clone();
                let support: Vec<usize> = (p..self.ambient).filter(|&k| !field.is_zero(&row[k])).collect();
                field.sub_scaled(v, &c, row, &support);
            }
        }
    }

    pub fn reduce<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Vec<E> {
        let mut w = v.to_vec();
        self.reduce_in_place(field, &mut w);
        w
    }

    pub fn contains<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        self.reduce(field, v).iter().all(|x| field.is_zero(x))
    }

    pub fn contains_subspace<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        Ok(other.basis.iter().all(|v| self.contains(field, v)))
    }

    /// Coordinates of a member vector in the canonical basis.
    pub fn coordinates<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Option<Vec<E>> {
        if !self.contains(field, v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn sum<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Ok(Self::from_spanning(field, self.ambient, vs))
    }

    /// Intersection by the Zassenhaus method.
    pub fn intersect<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        let n = self.ambient;
        let mut rows: Vec<Vec<E>> = Vec::with_capacity(self.dim() + other.dim());
        for v in &self.basis {
            let mut r = v.clone();
            r.extend(v.iter().cloned());
            rows.push(r);
        }
        for v in &other.basis {
            let mut r = v.clone();
            r.extend(std::iter::repeat_n(field.zero(), n));
            rows.push(r);
        }
        let pivots = rref_rows(field, &mut rows, 2 * n);
        let meet = rows
            .into_iter()
            .zip(pivots)
            .filter(|(_, p)| *p >= n)
            .map(|(r, _)| r[n..].to_vec())
            .collect();
        Ok(Self::from_spanning(field, n, meet))
    }

    /// `dim(self / sub)`; `sub` must be contained in `self`.
    pub fn quotient_dim<F: Field<Elem = E>>(&self, field: &F, sub: &Self) -> Result<usize, LinalgError> {
        if !self.contains_subspace(field, sub)? {
            return Err(LinalgError::NotSubspace);
        }
        Ok(self.dim() - sub.dim())
    }

    fn check_ambient(&self, other: &Self) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }
}

/// `top / bottom` for subspaces `bottom ⊆ top`, with a canonical basis of
/// coset representatives.
///
/// Representatives are the reduced row-echelon basis of the image of `top`
/// under reduction modulo `bottom`; they lie in `top` and a vector of `top`
/// has coordinates read off at their pivots after reduction.
#[derive(Clone, Debug)]
pub struct QuotientSpace<E> {
    top: Subspace<E>,
    bottom: Subspace<E>,
    reps: Subspace<E>,
}

impl<E: Clone> QuotientSpace<E> {
    pub fn new<F: Field<Elem = E>>(field: &F, top: Subspace<E>, bottom: Subspace<E>) -> Result<Self, LinalgError> {
        if !top.contains_subspace(field, &bottom)? {
            return Err(LinalgError::NotSubspace);
        }
        let reduced = top.basis.iter().map(|v| bottom.reduce(field, v)).collect();
        let reps = Subspace::from_spanning(field, top.ambient, reduced);
        debug_assert_eq!(reps.dim(), top.dim() - bottom.dim());
        Ok(Self { top, bottom, reps })
    }

    pub fn dim(&self) -> usize {
        self.reps.dim()
    }

    pub fn top(&self) -> &Subspace<E> {
        &self.top
    }

    pub fn bottom(&self) -> &Subspace<E> {
        &self.bottom
    }

    pub fn representatives(&self) -> &[Vec<E>] {
        self.reps.basis()
    }

    /// Coordinates of the class of `v`; `None` when `v` is not in `top`.
    pub fn class_of<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Option<Vec<E>> {
        if !self.top.contains(field, v) {
            return None;
        }
        let r = self.bottom.reduce(field, v);
        let coords = self.reps.pivots().iter().map(|&p| r[p].clone()).collect();
        Some(coords)
    }
}

/// Matrix of the map `src.top/src.bottom -> dst.top/dst.bottom` induced by
/// `m`, in the canonical representative bases. Fails if `m` does not carry
/// `src.top` into `dst.top` and `src.bottom` into `dst.bottom`.
pub fn induced_map_on_quotients<F: Field>(
    field: &F,
    m: &Matrix<F::Elem>,
    src: &QuotientSpace<F::Elem>,
    dst: &QuotientSpace<F::Elem>,
) -> Result<Matrix<F::Elem>, LinalgError> {
    if m.cols() != src.top.ambient() || m.rows() != dst.top.ambient() {
        return Err(LinalgError::Shape {
            expected: src.top.ambient(),
            found: m.cols(),
        });
    }
    for b in src.bottom.basis() {
        if !dst.bottom.contains(field, &m.mul_vec(field, b)?) {
            return Err(LinalgError::MapNotFiltered);
        }
    }
    let mut columns = Vec::with_capacity(src.dim());
    for rep in src.representatives() {
        let image = m.mul_vec(field, rep)?;
        let c = dst.class_of(field, &image).ok_or(LinalgError::MapNotFiltered)?;
        columns.push(c);
    }
    Matrix::from_columns(dst.dim(), &columns)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::PrimeField;

    fn e(n: usize, i: usize) -> Vec<u32> {
        let mut v = vec![0; n];
        v[i] = 1;
        v
    }

    #[test]
    fn sum_and_intersection() {
        let f = PrimeField::new(3).unwrap();
        let a = Subspace::from_spanning(&f, 3, vec![e(3, 0), e(3, 1)]);
        let b = Subspace::from_spanning(&f, 3, vec![e(3, 1), e(3, 2)]);
        let meet = a.intersect(&f, &b).unwrap();
        assert_eq!(meet, Subspace::from_spanning(&f, 3, vec![e(3, 1)]));
        let join = a.sum(&f, &b).unwrap();
        assert_eq!(join.dim() + meet.dim(), a.dim() + b.dim());

        let full = Subspace::full(&f, 3);
        assert_eq!(full.intersect(&f, &a).unwrap(), a);
        assert_eq!(a.sum(&f, &Subspace::zero(3)).unwrap(), a);
    }

    #[test]
    fn ambient_mismatch_and_bad_quotient() {
        let f = PrimeField::new(3).unwrap();
        let a = Subspace::full(&f, 2);
        let b = Subspace::full(&f, 3);
        assert!(matches!(a.sum(&f, &b), Err(LinalgError::AmbientMismatch(2, 3))));
        let line = Subspace::from_spanning(&f, 2, vec![e(2, 0)]);
        assert!(matches!(line.quotient_dim(&f, &a), Err(LinalgError::NotSubspace)));
        assert_eq!(a.quotient_dim(&f, &line).unwrap(), 1);
    }

    #[test]
    fn canonical_form_is_span_invariant() {
        let f = PrimeField::new(7).unwrap();
        let a = Subspace::from_spanning(&f, 3, vec![vec![1, 2, 3], vec![0, 1, 1]]);
        let b = Subspace::from_spanning(&f, 3, vec![vec![1, 3, 4], vec![2, 4, 6], vec![1, 2, 3]]);
        assert_eq!(a, b);
    }

    #[test]
    fn induced_identity_and_zero_maps() {
        let f = PrimeField::new(5).unwrap();
        let z = Subspace::from_spanning(&f, 3, vec![e(3, 0), e(3, 2)]);
        let q = QuotientSpace::new(&f, z.clone(), Subspace::zero(3)).unwrap();
        let id = Matrix::identity(&f, 3);
        assert_eq!(induced_map_on_quotients(&f, &id, &q, &q).unwrap(), Matrix::identity(&f, 2));

        // everything lands in the target boundaries
        let qb = QuotientSpace::new(&f, z.clone(), z.clone()).unwrap();
        let m = induced_map_on_quotients(&f, &id, &q, &qb).unwrap();
        assert_eq!((m.rows(), m.cols()), (0, 2));
    }

    #[test]
    fn unfiltered_map_is_rejected() {
        let f = PrimeField::new(5).unwrap();
        let line0 = Subspace::from_spanning(&f, 2, vec![e(2, 0)]);
        let line1 = Subspace::from_spanning(&f, 2, vec![e(2, 1)]);
        let src = QuotientSpace::new(&f, line0, Subspace::zero(2)).unwrap();
        let dst = QuotientSpace::new(&f, line1, Subspace::zero(2)).unwrap();
        let id = Matrix::identity(&f, 2);
        assert!(matches!(
            induced_map_on_quotients(&f, &id, &src, &dst),
            Err(LinalgError::MapNotFiltered)
        ));
    }
}
