//! Finite-dimensional commutative local algebras, their `m`-adic filtration
//! and associated graded algebra.
//!
//! Internally every algebra is re-expressed in an *adapted* basis: index 0
//! is the unit, followed by coset representatives of `m/m^2`, then of
//! `m^2/m^3`, and so on. In that basis `m^j` is the span of a suffix of the
//! basis and `R/m^n` is the span of a prefix, which is what makes the
//! filtration-aware code downstream cheap.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::exact_linalg::{Field, LinalgError, Matrix, QuotientSpace, Subspace};
use crate::resolution::RModule;

/// Largest algebra accepted; validation is quintic in the dimension.
pub const MAX_ALGEBRA_DIM: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("structure table is malformed: {0}")]
    Malformed(String),
    #[error("algebra dimension {0} exceeds the supported maximum {MAX_ALGEBRA_DIM}")]
    TooLarge(usize),
    #[error("unit law fails for basis element {0}")]
    UnitLaw(String),
    #[error("multiplication is not commutative: {0}*{1} != {1}*{0}")]
    NotCommutative(String, String),
    #[error("multiplication is not associative on ({0}, {1}, {2})")]
    NotAssociative(String, String, String),
    #[error("the ideal generated by the m-generators is not nilpotent")]
    NotNilpotent,
    #[error("R/m has dimension {0}; the designated generators do not cut out the residue field")]
    ResidueNotField(usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Raw structure constants in an arbitrary basis, as read from a table file
/// or produced from a presentation.
pub struct StructureTable<F: Field> {
    pub field: F,
    pub basis: Vec<String>,
    pub unit: usize,
    pub m_generators: Vec<usize>,
    /// `table[i][j]` holds the coordinates of `e_i * e_j`.
    pub table: Vec<Vec<Vec<F::Elem>>>,
}

impl<F: Field> Clone for StructureTable<F> {
    fn clone(&self) -> Self {
        Self {
            field: self.field.clone(),
            basis: self.basis.clone(),
            unit: self.unit,
            m_generators: self.m_generators.clone(),
            table: self.table.clone(),
        }
    }
}

impl<F: Field> fmt::Debug for StructureTable<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StructureTable")
            .field("field", &self.field.spec())
            .field("basis", &self.basis)
            .field("unit", &self.unit)
            .field("m_generators", &self.m_generators)
            .finish_non_exhaustive()
    }
}

impl<F: Field> PartialEq for StructureTable<F> {
    fn eq(&self, other: &Self) -> bool {
        self.field.spec() == other.field.spec()
            && self.basis == other.basis
            && self.unit == other.unit
            && self.m_generators == other.m_generators
            && self.table == other.table
    }
}

impl<F: Field> StructureTable<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn check_shape(&self) -> Result<(), AlgebraError> {
        if self.dim() > MAX_ALGEBRA_DIM {
            return Err(AlgebraError::TooLarge(self.dim()));
        }
        self.check_shape_unbounded()
    }

    fn check_shape_unbounded(&self) -> Result<(), AlgebraError> {
        let d = self.dim();
        if d == 0 {
            return Err(AlgebraError::Malformed("empty basis".into()));
        }
        if self.unit >= d {
            return Err(AlgebraError::Malformed(format!("unit index {} out of range", self.unit)));
        }
        if let Some(g) = self.m_generators.iter().find(|&&g| g >= d) {
            return Err(AlgebraError::Malformed(format!("generator index {g} out of range")));
        }
        if self.table.len() != d || self.table.iter().any(|row| row.len() != d || row.iter().any(|c| c.len() != d)) {
            return Err(AlgebraError::Malformed(format!("table must be {d} x {d} x {d}")));
        }
        Ok(())
    }

    fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (i, ai) in a.iter().enumerate() {
            if f.is_zero(ai) {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if f.is_zero(bj) {
                    continue;
                }
                f.add_scaled(&mut out, &f.mul(ai, bj), &self.table[i][j]);
            }
        }
        out
    }

    /// Checks the unit, commutativity and associativity laws on every basis
    /// pair/triple.
    pub fn validate_laws(&self) -> Result<(), AlgebraError> {
        self.check_shape()?;
        let f = &self.field;
        let d = self.dim();
        let unit_vec = |j: usize| {
            let mut v = vec![f.zero(); d];
            v[j] = f.one();
            v
        };
        for j in 0..d {
            let e = unit_vec(j);
            if self.table[self.unit][j] != e || self.table[j][self.unit] != e {
                return Err(AlgebraError::UnitLaw(self.basis[j].clone()));
            }
        }
        for i in 0..d {
            for j in i + 1..d {
                if self.table[i][j] != self.table[j][i] {
                    return Err(AlgebraError::NotCommutative(self.basis[i].clone(), self.basis[j].clone()));
                }
            }
        }
        // right multiplication operators, columns = e_u * e_k
        let right: Vec<Matrix<F::Elem>> = (0..d)
            .map(|k| {
                let cols: Vec<Vec<F::Elem>> = (0..d).map(|u| self.table[u][k].clone()).collect();
                Matrix::from_columns(d, &cols).expect("square")
            })
            .collect();
        let left: Vec<Matrix<F::Elem>> = (0..d)
            .map(|i| Matrix::from_columns(d, &self.table[i]).expect("square"))
            .collect();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let lhs = right[k].mul_vec(f, &self.table[i][j])?;
                    let rhs = left[i].mul_vec(f, &self.table[j][k])?;
                    if lhs != rhs {
                        return Err(AlgebraError::NotAssociative(
                            self.basis[i].clone(),
                            self.basis[j].clone(),
                            self.basis[k].clone(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A finite local algebra `(R, m, k)` with its filtration, in the adapted
/// basis described in the module docs.
pub struct FiniteLocalAlgebra<F: Field> {
    field: F,
    dim: usize,
    source: StructureTable<F>,
    /// columns: adapted basis vectors in source coordinates
    to_source: Matrix<F::Elem>,
    from_source: Matrix<F::Elem>,
    /// `products[a][b]`: sparse coordinates of `e_a * e_b`
    products: Vec<Vec<Vec<(usize, F::Elem)>>>,
    /// `offsets[i]` is the first adapted index of level `i`; the last entry is `dim`
    offsets: Vec<usize>,
    levels: Vec<usize>,
    generators: Vec<Vec<F::Elem>>,
}

impl<F: Field> fmt::Debug for FiniteLocalAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteLocalAlgebra")
            .field("field", &self.field.spec())
            .field("dim", &self.dim)
            .field("filtration_dims", &self.filtration_dims())
            .finish_non_exhaustive()
    }
}

impl<F: Field> FiniteLocalAlgebra<F> {
    /// Validates a raw table and computes filtration and adapted basis.
    pub fn from_table(table: StructureTable<F>) -> Result<Self, AlgebraError> {
        table.validate_laws()?;
        Self::from_trusted_table(table)
    }

    /// Like [`Self::from_table`] but skips the exhaustive unit, commutativity
    /// and associativity checks; for tables that satisfy them by construction.
    pub fn from_trusted_table(table: StructureTable<F>) -> Result<Self, AlgebraError> {
        table.check_shape_unbounded()?;
        let f = table.field.clone();
        let d = table.dim();
        let unit_vec = |j: usize| {
            let mut v = vec![f.zero(); d];
            v[j] = f.one();
            v
        };
        let gens: Vec<Vec<F::Elem>> = table.m_generators.iter().map(|&g| unit_vec(g)).collect();

        let powers = compute_filtration(&table, &gens)?;

        // adapted basis: unit, then canonical coset representatives level by level
        let mut adapted = vec![unit_vec(table.unit)];
        let mut offsets = vec![0, 1];
        for w in powers[1..].windows(2) {
            let q = QuotientSpace::new(&f, w[0].clone(), w[1].clone())?;
            adapted.extend(q.representatives().iter().cloned());
            offsets.push(adapted.len());
        }
        debug_assert_eq!(adapted.len(), d);
        let to_source = Matrix::from_columns(d, &adapted)?;
        let from_source = invert(&f, &to_source);

        let mut dense = vec![vec![Vec::new(); d]; d];
        for a in 0..d {
            for b in 0..d {
                let p = table.mul(&adapted[a], &adapted[b]);
                dense[a][b] = from_source.mul_vec(&f, &p)?;
            }
        }
        let products = dense
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.iter().enumerate().filter(|(_, x)| !f.is_zero(x)).map(|(i, x)| (i, x.clone())).collect())
                    .collect()
            })
            .collect();
        let mut levels = vec![0; d];
        for (lvl, w) in offsets.windows(2).enumerate() {
            for l in &mut levels[w[0]..w[1]] {
                *l = lvl;
            }
        }
        let generators = gens.iter().map(|g| from_source.mul_vec(&f, g)).collect::<Result<_, _>>()?;
        let alg = Self {
            field: f,
            dim: d,
            source: table,
            to_source,
            from_source,
            products,
            offsets,
            levels,
            generators,
        };
        alg.check_adapted();
        Ok(alg)
    }

    // level(a) + level(b) bounds the order of e_a * e_b
    fn check_adapted(&self) {
        let top = self.top_level();
        for a in 0..self.dim {
            for b in 0..self.dim {
                let lo = (self.levels[a] + self.levels[b]).min(top + 1);
                assert!(
                    self.products[a][b].iter().all(|(i, _)| self.levels[*i] >= lo),
                    "adapted basis does not respect the filtration"
                );
            }
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn source_table(&self) -> &StructureTable<F> {
        &self.source
    }

    /// `t` with `m^t != 0 = m^{t+1}`.
    pub fn top_level(&self) -> usize {
        self.offsets.len() - 2
    }

    /// Smallest `s` with `m^s = 0`.
    pub fn nilpotency_index(&self) -> usize {
        self.top_level() + 1
    }

    pub fn level(&self, k: usize) -> usize {
        self.levels[k]
    }

    /// First adapted index of level `i` (`dim` when `m^i = 0`).
    pub fn offset(&self, i: usize) -> usize {
        *self.offsets.get(i).unwrap_or(&self.dim)
    }

    /// `dim R/m^n`.
    pub fn quotient_dim(&self, n: usize) -> usize {
        self.offset(n)
    }

    /// `dim m^i` for `i = 0..=t+1`.
    pub fn filtration_dims(&self) -> Vec<usize> {
        self.offsets.iter().map(|&o| self.dim - o).collect()
    }

    /// `dim m^i/m^{i+1}` for `i = 0..=t`.
    pub fn graded_dims(&self) -> Vec<usize> {
        self.offsets.windows(2).map(|w| w[1] - w[0]).collect()
    }

    pub fn embedding_dim(&self) -> usize {
        self.offset(2) - self.offset(1)
    }

    /// `m^i` as a subspace of `R` (adapted coordinates).
    pub fn power(&self, i: usize) -> Subspace<F::Elem> {
        Subspace::coordinate(&self.field, self.dim, self.offset(i)..self.dim)
    }

    /// The designated generators of `m` in adapted coordinates.
    pub fn generators(&self) -> &[Vec<F::Elem>] {
        &self.generators
    }

    pub fn unit(&self) -> Vec<F::Elem> {
        self.basis_vector(0)
    }

    pub fn basis_vector(&self, k: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim];
        v[k] = self.field.one();
        v
    }

    /// Sparse coordinates of `e_a * e_b`.
    pub fn product_of_basis(&self, a: usize, b: usize) -> &[(usize, F::Elem)] {
        &self.products[a][b]
    }

    /// `acc += c * e_s * v` for a single element `v` of `R`.
    #[inline]
    pub fn mul_basis_acc(&self, acc: &mut [F::Elem], c: &F::Elem, s: usize, v: &[F::Elem]) {
        let f = &self.field;
        for (u, vu) in v.iter().enumerate() {
            if f.is_zero(vu) {
                continue;
            }
            let cu = f.mul(c, vu);
            for (k, x) in &self.products[s][u] {
                acc[*k] = f.add(&acc[*k], &f.mul(&cu, x));
            }
        }
    }

    pub fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let mut out = vec![self.field.zero(); self.dim];
        for (s, c) in a.iter().enumerate() {
            if !self.field.is_zero(c) {
                self.mul_basis_acc(&mut out, c, s, b);
            }
        }
        out
    }

    /// Matrix of `v -> a v` on `R`.
    pub fn left_mul_matrix(&self, a: &[F::Elem]) -> Matrix<F::Elem> {
        let cols: Vec<Vec<F::Elem>> = (0..self.dim).map(|j| self.mul(a, &self.basis_vector(j))).collect();
        Matrix::from_columns(self.dim, &cols).expect("square")
    }

    pub fn is_zero(&self, a: &[F::Elem]) -> bool {
        a.iter().all(|x| self.field.is_zero(x))
    }

    /// Whether `a` lies in `m` (zero unit coordinate).
    pub fn in_maximal_ideal(&self, a: &[F::Elem]) -> bool {
        self.field.is_zero(&a[0])
    }

    /// Least `i` with `a ∈ m^i` (`None` for zero).
    pub fn order(&self, a: &[F::Elem]) -> Option<usize> {
        a.iter().position(|x| !self.field.is_zero(x)).map(|k| self.levels[k])
    }

    pub fn to_source_coords(&self, a: &[F::Elem]) -> Vec<F::Elem> {
        self.to_source.mul_vec(&self.field, a).expect("dimension")
    }

    pub fn from_source_coords(&self, a: &[F::Elem]) -> Vec<F::Elem> {
        self.from_source.mul_vec(&self.field, a).expect("dimension")
    }

    /// Human-readable element in the source basis labels.
    pub fn format_element(&self, a: &[F::Elem]) -> String {
        let src = self.to_source_coords(a);
        let terms: Vec<String> = src
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(|(i, c)| {
                let label = &self.source.basis[i];
                if label == "1" {
                    self.field.format(c)
                } else if self.field.is_one(c) {
                    label.clone()
                } else {
                    format!("{}*{}", self.field.format(c), label)
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// `R/m^n` as an `R`-module.
    pub fn quotient_module(self: &Arc<Self>, n: usize) -> RModule<F> {
        RModule::quotient_by_power(self, n)
    }
}

/// Powers `m^1 ⊋ m^2 ⊋ ... ⊋ m^{t+1} = 0` of the ideal generated by `gens`,
/// with `m^0 = R` prepended. Also enforces `dim R/m = 1`.
pub fn compute_filtration<F: Field>(
    table: &StructureTable<F>,
    gens: &[Vec<F::Elem>],
) -> Result<Vec<Subspace<F::Elem>>, AlgebraError> {
    let f = &table.field;
    let d = table.dim();
    let basis: Vec<Vec<F::Elem>> = (0..d)
        .map(|j| {
            let mut v = vec![f.zero(); d];
            v[j] = f.one();
            v
        })
        .collect();
    let ideal: Vec<Vec<F::Elem>> = gens.iter().flat_map(|g| basis.iter().map(move |e| (g, e))).map(|(g, e)| table.mul(g, e)).collect();
    let m = Subspace::from_spanning(f, d, ideal);
    if m.dim() == d {
        return Err(AlgebraError::NotNilpotent);
    }
    if m.dim() + 1 != d {
        return Err(AlgebraError::ResidueNotField(d - m.dim()));
    }
    let mut powers = vec![Subspace::full(f, d), m];
    while !powers.last().expect("nonempty").is_zero() {
        let cur = powers.last().expect("nonempty");
        let next = Subspace::from_spanning(
            f,
            d,
            gens.iter().flat_map(|g| cur.basis().iter().map(move |v| table.mul(g, v))).collect(),
        );
        if next.dim() == cur.dim() {
            return Err(AlgebraError::NotNilpotent);
        }
        powers.push(next);
    }
    Ok(powers)
}

fn invert<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let n = m.rows();
    let mut rows = m.row_vecs();
    for (i, r) in rows.iter_mut().enumerate() {
        r.extend((0..n).map(|j| if i == j { f.one() } else { f.zero() }));
    }
    let piv = crate::exact_linalg::rref_rows(f, &mut rows, 2 * n);
    assert!(piv.len() == n && piv[n - 1] == n - 1, "matrix is invertible");
    Matrix::from_rows(n, rows.into_iter().map(|r| r[n..].to_vec()).collect()).expect("square")
}

/// The associated graded algebra `gr(R) = ⊕ m^i/m^{i+1}`.
#[derive(Clone, Debug)]
pub struct GradedAlgebra<E> {
    dims: Vec<usize>,
    /// `products[i][j][a * dims[j] + b]`: coordinates in degree `i+j` of
    /// the product of the `a`-th degree-`i` and `b`-th degree-`j` basis
    /// elements (empty when `i + j` exceeds the top degree)
    products: Vec<Vec<Vec<Vec<E>>>>,
}

impl<E: Clone + PartialEq> GradedAlgebra<E> {
    /// Graded algebra with the algebra's own adapted basis as representatives.
    pub fn new<F: Field<Elem = E>>(alg: &FiniteLocalAlgebra<F>) -> Self {
        let reps: Vec<Vec<Vec<E>>> = alg
            .graded_dims()
            .iter()
            .enumerate()
            .map(|(lvl, _)| (alg.offset(lvl)..alg.offset(lvl + 1)).map(|k| alg.basis_vector(k)).collect())
            .collect();
        Self::from_representatives(alg, &reps).expect("adapted basis is a valid choice")
    }

    /// Graded algebra computed from arbitrary representatives: `reps[i]`
    /// must project to a basis of `m^i/m^{i+1}`.
    pub fn from_representatives<F: Field<Elem = E>>(
        alg: &FiniteLocalAlgebra<F>,
        reps: &[Vec<Vec<E>>],
    ) -> Result<Self, AlgebraError> {
        let f = alg.field();
        let dims = alg.graded_dims();
        if reps.len() != dims.len() || reps.iter().zip(&dims).any(|(r, &d)| r.len() != d) {
            return Err(AlgebraError::Malformed("representatives do not match graded dimensions".into()));
        }
        // leading part at level i: coordinates in [offset(i), offset(i+1));
        // inverse of the leading-part matrix gives coordinates w.r.t. reps
        let mut solvers = Vec::with_capacity(dims.len());
        for (i, r) in reps.iter().enumerate() {
            let (lo, hi) = (alg.offset(i), alg.offset(i + 1));
            for v in r {
                if v[..lo].iter().any(|x| !f.is_zero(x)) {
                    return Err(AlgebraError::Malformed(format!("representative not in m^{i}")));
                }
            }
            let cols: Vec<Vec<E>> = r.iter().map(|v| v[lo..hi].to_vec()).collect();
            let m = Matrix::from_columns(hi - lo, &cols)?;
            if m.rank(f) != hi - lo {
                return Err(AlgebraError::Malformed(format!("representatives of degree {i} are dependent mod m^{}", i + 1)));
            }
            solvers.push(invert(f, &m));
        }
        let top = dims.len() - 1;
        let mut products = vec![vec![Vec::new(); dims.len()]; dims.len()];
        for i in 0..=top {
            for j in 0..=top {
                if i + j > top {
                    continue;
                }
                let k = i + j;
                let (lo, hi) = (alg.offset(k), alg.offset(k + 1));
                let mut entries = Vec::with_capacity(dims[i] * dims[j]);
                for a in &reps[i] {
                    for b in &reps[j] {
                        let p = alg.mul(a, b);
                        debug_assert!(p[..lo].iter().all(|x| f.is_zero(x)));
                        entries.push(solvers[k].mul_vec(f, &p[lo..hi])?);
                    }
                }
                products[i][j] = entries;
            }
        }
        Ok(Self { dims, products })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dim(&self, degree: usize) -> usize {
        self.dims.get(degree).copied().unwrap_or(0)
    }

    /// Product of basis elements `a` (degree `i`) and `b` (degree `j`);
    /// `None` when the product degree exceeds the top degree (the product is 0).
    pub fn product(&self, i: usize, a: usize, j: usize, b: usize) -> Option<&[E]> {
        if i + j > self.top_degree() {
            return None;
        }
        Some(&self.products[i][j][a * self.dims[j] + b])
    }

    /// Matrix of multiplication by the `a`-th degree-1 basis element from
    /// degree `q` to degree `q+1`.
    pub fn degree_one_operator<F: Field<Elem = E>>(&self, field: &F, a: usize, q: usize) -> Matrix<E> {
        let rows = self.dim(q + 1);
        let cols: Vec<Vec<E>> = (0..self.dim(q))
            .map(|b| match self.product(1, a, q, b) {
                Some(v) => v.to_vec(),
                None => vec![field.zero(); rows],
            })
            .collect();
        Matrix::from_columns(rows, &cols).expect("shape")
    }

    /// Multiplies homogeneous elements given by coordinates in degrees `i`, `j`.
    pub fn mul_homogeneous<F: Field<Elem = E>>(&self, field: &F, i: usize, x: &[E], j: usize, y: &[E]) -> Vec<E> {
        let k = i + j;
        let mut out = vec![field.zero(); self.dim(k)];
        if k > self.top_degree() {
            return out;
        }
        for (a, xa) in x.iter().enumerate() {
            if field.is_zero(xa) {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if field.is_zero(yb) {
                    continue;
                }
                let p = self.product(i, a, j, b).expect("degree in range");
                field.add_scaled(&mut out, &field.mul(xa, yb), p);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::PrimeField;

    /// k[x]/(x^n) with basis 1, x, ..., x^{n-1}
    pub(crate) fn truncated_poly(f: PrimeField, n: usize) -> StructureTable<PrimeField> {
        let mut table = vec![vec![vec![0u32; n]; n]; n];
        for (i, row) in table.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                if i + j < n {
                    cell[i + j] = 1;
                }
            }
        }
        StructureTable {
            field: f,
            basis: (0..n).map(|i| if i == 0 { "1".into() } else { format!("x^{i}") }).collect(),
            unit: 0,
            m_generators: if n > 1 { vec![1] } else { vec![] },
            table,
        }
    }

    #[test]
    fn filtration_of_truncated_polynomials() {
        let f = PrimeField::new(101).unwrap();
        let a = FiniteLocalAlgebra::from_table(truncated_poly(f, 4)).unwrap();
        assert_eq!(a.filtration_dims(), vec![4, 3, 2, 1, 0]);
        assert_eq!(a.nilpotency_index(), 4);
        let k = FiniteLocalAlgebra::from_table(truncated_poly(f, 1)).unwrap();
        assert_eq!(k.filtration_dims(), vec![1, 0]);
        assert_eq!(k.nilpotency_index(), 1);
        assert_eq!(GradedAlgebra::new(&k).dims(), &[1]);
    }

    #[test]
    fn broken_associativity_is_rejected() {
        let f = PrimeField::new(101).unwrap();
        let mut t = truncated_poly(f, 4);
        // declare x^2 * x^2 = x^3, while x * (x * x^2) = 0
        t.table[2][2] = vec![0, 0, 0, 1];
        assert!(matches!(FiniteLocalAlgebra::from_table(t), Err(AlgebraError::NotAssociative(..))));
    }

    #[test]
    fn unit_and_commutativity_violations() {
        let f = PrimeField::new(101).unwrap();
        let mut t = truncated_poly(f, 3);
        t.table[0][1] = vec![0, 0, 1];
        assert!(matches!(FiniteLocalAlgebra::from_table(t), Err(AlgebraError::UnitLaw(_))));
        let mut t = truncated_poly(f, 3);
        t.unit = 1;
        assert!(FiniteLocalAlgebra::from_table(t).is_err());
    }

    #[test]
    fn generators_must_be_nilpotent() {
        let f = PrimeField::new(101).unwrap();
        let mut t = truncated_poly(f, 3);
        t.m_generators = vec![0];
        assert!(matches!(FiniteLocalAlgebra::from_table(t), Err(AlgebraError::NotNilpotent)));
        let mut t = truncated_poly(f, 3);
        t.m_generators = vec![2];
        assert!(matches!(FiniteLocalAlgebra::from_table(t), Err(AlgebraError::ResidueNotField(2))));
    }

    #[test]
    fn graded_of_truncated_is_itself() {
        let f = PrimeField::new(101).unwrap();
        let a = FiniteLocalAlgebra::from_table(truncated_poly(f, 3)).unwrap();
        let g = GradedAlgebra::new(&a);
        assert_eq!(g.dims(), &[1, 1, 1]);
        assert_eq!(g.product(1, 0, 1, 0).unwrap(), &[1]);
        assert!(g.product(1, 0, 2, 0).is_none());
    }
}
