//! Finitely generated modules over a finite local algebra and their minimal
//! free resolutions.
//!
//! Elements of the free module `R^b` are stored generator-major: coordinate
//! `j * dim R + s` is the coefficient of the `s`-th adapted basis element of
//! `R` in the `j`-th component.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::exact_linalg::{kernel_of_rows, rref_rows, Field, LinalgError, Matrix, Subspace};
use crate::local_algebra::FiniteLocalAlgebra;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ResolutionError {
    #[error("stage {stage} needs a {rows} x {cols} matrix, above the cap of {max} entries")]
    ResourceCap { stage: usize, rows: usize, cols: usize, max: usize },
    #[error("index {requested} exceeds the computed horizon {horizon}")]
    HorizonExceeded { requested: usize, horizon: usize },
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("entries belong to algebras of dimension {0} and {1}")]
    AlgebraMismatch(usize, usize),
    #[error("resolution invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Guards against runaway dense eliminations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResolutionLimits {
    /// Largest number of entries of a single dense matrix.
    pub max_entries: usize,
}

impl Default for ResolutionLimits {
    fn default() -> Self {
        Self { max_entries: 40_000_000 }
    }
}

impl ResolutionLimits {
    pub const UNLIMITED: Self = Self { max_entries: usize::MAX };

    fn check(&self, stage: usize, rows: usize, cols: usize) -> Result<(), ResolutionError> {
        if rows.saturating_mul(cols) > self.max_entries {
            return Err(ResolutionError::ResourceCap {
                stage,
                rows,
                cols,
                max: self.max_entries,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
enum ModuleKind<E> {
    /// `k^dim` with the matrix of every adapted basis element of `R`.
    Actions { dim: usize, actions: Vec<Matrix<E>> },
    /// An `R`-submodule of the free module `R^rank`.
    Submodule { rank: usize, space: Subspace<E> },
}

/// A finitely generated `R`-module, as a vector space with `R`-action.
pub struct RModule<F: Field> {
    algebra: Arc<FiniteLocalAlgebra<F>>,
    kind: ModuleKind<F::Elem>,
}

impl<F: Field> Clone for RModule<F> {
    fn clone(&self) -> Self {
        Self {
            algebra: Arc::clone(&self.algebra),
            kind: self.kind.clone(),
        }
    }
}

impl<F: Field> fmt::Debug for RModule<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ModuleKind::Actions { dim, .. } => write!(f, "RModule(dim {dim})"),
            ModuleKind::Submodule { rank, space } => write!(f, "RModule(dim {} in R^{rank})", space.dim()),
        }
    }
}

impl<F: Field> RModule<F> {
    /// The residue field `k = R/m`.
    pub fn residue_field(algebra: &Arc<FiniteLocalAlgebra<F>>) -> Self {
        Self::quotient_by_power(algebra, 1)
    }

    /// `R/m^n`; `n = 0` gives the zero module and `n` past the nilpotency
    /// index gives `R`.
    pub fn quotient_by_power(algebra: &Arc<FiniteLocalAlgebra<F>>, n: usize) -> Self {
        let f = algebra.field();
        let o = algebra.quotient_dim(n);
        let actions = (0..algebra.dim())
            .map(|s| {
                let mut m = Matrix::zeros(f, o, o);
                for u in 0..o {
                    for (k, c) in algebra.product_of_basis(s, u) {
                        if *k < o {
                            m.set(*k, u, c.clone());
                        }
                    }
                }
                m
            })
            .collect();
        Self {
            algebra: Arc::clone(algebra),
            kind: ModuleKind::Actions { dim: o, actions },
        }
    }

    /// The free module `R^rank`.
    pub fn free(algebra: &Arc<FiniteLocalAlgebra<F>>, rank: usize) -> Self {
        Self {
            algebra: Arc::clone(algebra),
            kind: ModuleKind::Submodule {
                rank,
                space: Subspace::full(algebra.field(), rank * algebra.dim()),
            },
        }
    }

    /// A module given by the matrices of every adapted basis element of `R`.
    /// Checks the unit law and the multiplication table exhaustively.
    pub fn from_actions(
        algebra: &Arc<FiniteLocalAlgebra<F>>,
        dim: usize,
        actions: Vec<Matrix<F::Elem>>,
    ) -> Result<Self, ResolutionError> {
        let f = algebra.field();
        let d = algebra.dim();
        if actions.len() != d || actions.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(ResolutionError::InvalidModule(format!("need {d} square matrices of size {dim}")));
        }
        if actions[0] != Matrix::identity(f, dim) {
            return Err(ResolutionError::InvalidModule("unit does not act as the identity".into()));
        }
        for a in 0..d {
            for b in 0..d {
                let lhs = actions[a].mul(f, &actions[b])?;
                let mut rhs = Matrix::zeros(f, dim, dim);
                for (k, c) in algebra.product_of_basis(a, b) {
                    for r in 0..dim {
                        for col in 0..dim {
                            let v = f.add(rhs.get(r, col), &f.mul(c, actions[*k].get(r, col)));
                            rhs.set(r, col, v);
                        }
                    }
                }
                if lhs != rhs {
                    return Err(ResolutionError::InvalidModule(format!("action violates the product e_{a} * e_{b}")));
                }
            }
        }
        Ok(Self {
            algebra: Arc::clone(algebra),
            kind: ModuleKind::Actions { dim, actions },
        })
    }

    /// An `R`-submodule of `R^rank`; closure under multiplication is checked.
    pub fn submodule(algebra: &Arc<FiniteLocalAlgebra<F>>, rank: usize, space: Subspace<F::Elem>) -> Result<Self, ResolutionError> {
        if space.ambient() != rank * algebra.dim() {
            return Err(ResolutionError::InvalidModule("ambient dimension is not rank * dim R".into()));
        }
        let gens: Vec<usize> = (algebra.offset(1)..algebra.offset(2)).collect();
        for v in space.basis() {
            for &s in &gens {
                if !space.contains(algebra.field(), &act_free(algebra, rank, s, v)) {
                    return Err(ResolutionError::InvalidModule("subspace is not closed under the action".into()));
                }
            }
        }
        Ok(Self {
            algebra: Arc::clone(algebra),
            kind: ModuleKind::Submodule { rank, space },
        })
    }

    pub fn algebra(&self) -> &Arc<FiniteLocalAlgebra<F>> {
        &self.algebra
    }

    /// Dimension over `k`.
    pub fn dim(&self) -> usize {
        match &self.kind {
            ModuleKind::Actions { dim, .. } => *dim,
            ModuleKind::Submodule { space, .. } => space.dim(),
        }
    }

    /// Rank of the ambient free module for submodules of free modules.
    pub fn ambient_rank(&self) -> Option<usize> {
        match &self.kind {
            ModuleKind::Actions { .. } => None,
            ModuleKind::Submodule { rank, .. } => Some(*rank),
        }
    }

    /// The module as a subspace of its working coordinate space (itself for
    /// modules given by actions, the ambient free module otherwise).
    pub fn space(&self) -> Subspace<F::Elem> {
        match &self.kind {
            ModuleKind::Actions { dim, .. } => Subspace::full(self.algebra.field(), *dim),
            ModuleKind::Submodule { space, .. } => space.clone(),
        }
    }

    /// `e_s * v` for `v` in working coordinates.
    pub fn act(&self, s: usize, v: &[F::Elem]) -> Vec<F::Elem> {
        match &self.kind {
            ModuleKind::Actions { actions, .. } => actions[s].mul_vec(self.algebra.field(), v).expect("dimension"),
            ModuleKind::Submodule { rank, .. } => act_free(&self.algebra, *rank, s, v),
        }
    }

    /// `a * v` for an arbitrary algebra element `a`.
    pub fn act_element(&self, a: &[F::Elem], v: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.algebra.field();
        let mut out = vec![f.zero(); v.len()];
        for (s, c) in a.iter().enumerate() {
            if !f.is_zero(c) {
                f.add_scaled(&mut out, c, &self.act(s, v));
            }
        }
        out
    }

    /// Whether every level-1 basis element acts nilpotently and the module is
    /// closed under the action (spot check on a basis).
    pub fn check_invariants(&self) -> Result<(), ResolutionError> {
        let f = self.algebra.field();
        let space = self.space();
        let gens: Vec<usize> = (self.algebra.offset(1)..self.algebra.offset(2)).collect();
        for v in space.basis() {
            for &a in &gens {
                let av = self.act(a, v);
                if !space.contains(f, &av) {
                    return Err(ResolutionError::InvalidModule("not closed under the action".into()));
                }
                for &b in &gens {
                    if self.act(a, &self.act(b, v)) != self.act(b, &av) {
                        return Err(ResolutionError::InvalidModule("actions do not commute".into()));
                    }
                }
            }
        }
        Ok(())
    }
}

fn act_free<F: Field>(alg: &FiniteLocalAlgebra<F>, rank: usize, s: usize, v: &[F::Elem]) -> Vec<F::Elem> {
    let f = alg.field();
    let d = alg.dim();
    let mut out = vec![f.zero(); rank * d];
    let one = f.one();
    for j in 0..rank {
        let block = &v[j * d..(j + 1) * d];
        if block.iter().any(|x| !f.is_zero(x)) {
            alg.mul_basis_acc(&mut out[j * d..(j + 1) * d], &one, s, block);
        }
    }
    out
}

/// A matrix with entries in `R`; as a map `R^cols -> R^rows` it sends the
/// `j`-th basis vector to column `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMatrix<E> {
    rows: usize,
    cols: usize,
    algebra_dim: usize,
    /// row-major; every entry is a coordinate vector of length `algebra_dim`
    entries: Vec<Vec<E>>,
}

impl<E: Clone + PartialEq> AlgebraMatrix<E> {
    pub fn new(rows: usize, cols: usize, algebra_dim: usize, entries: Vec<Vec<E>>) -> Result<Self, ResolutionError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::Shape {
                expected: rows * cols,
                found: entries.len(),
            }
            .into());
        }
        if let Some(e) = entries.iter().find(|e| e.len() != algebra_dim) {
            return Err(ResolutionError::AlgebraMismatch(algebra_dim, e.len()));
        }
        Ok(Self {
            rows,
            cols,
            algebra_dim,
            entries,
        })
    }

    /// Matrix whose columns are the given elements of `R^rows`.
    pub fn from_columns(rows: usize, algebra_dim: usize, columns: &[Vec<E>]) -> Self {
        let cols = columns.len();
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in columns {
                entries.push(c[r * algebra_dim..(r + 1) * algebra_dim].to_vec());
            }
        }
        Self {
            rows,
            cols,
            algebra_dim,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &[E] {
        &self.entries[r * self.cols + c]
    }

    pub fn entries(&self) -> &[Vec<E>] {
        &self.entries
    }

    /// Column `c` as an element of `R^rows`.
    pub fn column(&self, c: usize) -> Vec<E> {
        (0..self.rows).flat_map(|r| self.entry(r, c).iter().cloned()).collect()
    }

    /// Whether every entry lies in `m`.
    pub fn is_minimal<F: Field<Elem = E>>(&self, alg: &FiniteLocalAlgebra<F>) -> bool {
        self.entries.iter().all(|e| alg.in_maximal_ideal(e))
    }

    /// The `k`-linear map `k^(cols * dim R) -> k^(rows * dim R)`.
    pub fn expand<F: Field<Elem = E>>(&self, alg: &FiniteLocalAlgebra<F>) -> Result<Matrix<E>, ResolutionError> {
        let d = alg.dim();
        if d != self.algebra_dim {
            return Err(ResolutionError::AlgebraMismatch(d, self.algebra_dim));
        }
        let f = alg.field();
        let mut m = Matrix::zeros(f, self.rows * d, self.cols * d);
        let one = f.one();
        for r in 0..self.rows {
            for c in 0..self.cols {
                let e = self.entry(r, c);
                if alg.is_zero(e) {
                    continue;
                }
                for s in 0..d {
                    let mut col = vec![f.zero(); d];
                    alg.mul_basis_acc(&mut col, &one, s, e);
                    for (t, x) in col.into_iter().enumerate() {
                        if !f.is_zero(&x) {
                            m.set(r * d + t, c * d + s, x);
                        }
                    }
                }
            }
        }
        Ok(m)
    }

    /// Image of `v ∈ R^cols`.
    pub fn apply<F: Field<Elem = E>>(&self, alg: &FiniteLocalAlgebra<F>, v: &[E]) -> Vec<E> {
        let f = alg.field();
        let d = alg.dim();
        let mut out = vec![f.zero(); self.rows * d];
        for c in 0..self.cols {
            let block = &v[c * d..(c + 1) * d];
            if alg.is_zero(block) {
                continue;
            }
            for r in 0..self.rows {
                let e = self.entry(r, c);
                let dst = &mut out[r * d..(r + 1) * d];
                for (s, x) in e.iter().enumerate() {
                    if !f.is_zero(x) {
                        alg.mul_basis_acc(dst, x, s, block);
                    }
                }
            }
        }
        out
    }

    /// Matrix product `self * other` over `R`.
    pub fn product<F: Field<Elem = E>>(&self, alg: &FiniteLocalAlgebra<F>, other: &Self) -> Result<Self, ResolutionError> {
        if self.cols != other.rows {
            return Err(LinalgError::Shape {
                expected: self.cols,
                found: other.rows,
            }
            .into());
        }
        if self.algebra_dim != other.algebra_dim {
            return Err(ResolutionError::AlgebraMismatch(self.algebra_dim, other.algebra_dim));
        }
        let columns: Vec<Vec<E>> = (0..other.cols).map(|c| self.apply(alg, &other.column(c))).collect();
        Ok(Self::from_columns(self.rows, self.algebra_dim, &columns))
    }
}

/// Coset representatives of a basis of `M/mM`, as vectors in the module's
/// working coordinates, together with `dim mM`.
///
/// The generators are the basis vectors of `M` (canonical form) sitting at
/// the non-pivot positions of `mM` written in those coordinates.
pub fn minimal_generators<F: Field>(module: &RModule<F>) -> Vec<Vec<F::Elem>> {
    minimal_generators_with(module, &ResolutionLimits::UNLIMITED, 0)
        .expect("unlimited")
        .0
}

fn minimal_generators_with<F: Field>(
    module: &RModule<F>,
    limits: &ResolutionLimits,
    stage: usize,
) -> Result<(Vec<Vec<F::Elem>>, usize), ResolutionError> {
    let alg = module.algebra();
    let f = alg.field();
    let space = module.space();
    let level_one: Vec<usize> = (alg.offset(1)..alg.offset(2)).collect();
    limits.check(stage, level_one.len() * space.dim(), space.dim())?;
    let mut rows = Vec::with_capacity(level_one.len() * space.dim());
    for v in space.basis() {
        for &l in &level_one {
            let w = module.act(l, v);
            let coords: Vec<F::Elem> = space.pivots().iter().map(|&p| w[p].clone()).collect();
            if coords.iter().any(|x| !f.is_zero(x)) {
                rows.push(coords);
            }
        }
    }
    let pivots = rref_rows(f, &mut rows, space.dim());
    let mut is_pivot = vec![false; space.dim()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let gens = space
        .basis()
        .iter()
        .enumerate()
        .filter(|(i, _)| !is_pivot[*i])
        .map(|(_, v)| v.clone())
        .collect();
    Ok((gens, pivots.len()))
}

/// Kernel of `R^b -> M`, `e_j -> gens[j]`, computed on the `m`-part of
/// `R^b` only and checked to have the dimension forced by surjectivity.
fn cover_kernel<F: Field>(
    module: &RModule<F>,
    gens: &[Vec<F::Elem>],
    m_dim: usize,
    limits: &ResolutionLimits,
    stage: usize,
) -> Result<Subspace<F::Elem>, ResolutionError> {
    let alg = module.algebra();
    let f = alg.field();
    let d = alg.dim();
    let b = gens.len();
    let space = module.space();
    let ncols = b * (d - 1);
    limits.check(stage, space.dim(), ncols)?;
    let mut rows = vec![vec![f.zero(); ncols]; space.dim()];
    for (j, g) in gens.iter().enumerate() {
        for s in 1..d {
            let w = module.act(s, g);
            let c = j * (d - 1) + (s - 1);
            for (r, &p) in space.pivots().iter().enumerate() {
                if !f.is_zero(&w[p]) {
                    rows[r][c] = w[p].clone();
                }
            }
        }
    }
    let restricted = kernel_of_rows(f, rows, ncols);
    let expected = b * d - space.dim();
    if restricted.dim() != expected || ncols - restricted.dim() != m_dim {
        return Err(ResolutionError::Invariant(format!(
            "stage {stage}: kernel on the m-part has dimension {}, expected {expected}",
            restricted.dim()
        )));
    }
    let full_index = |c: usize| (c / (d - 1)) * d + c % (d - 1) + 1;
    let basis = restricted
        .basis()
        .iter()
        .map(|v| {
            let mut full = vec![f.zero(); b * d];
            for (c, x) in v.iter().enumerate() {
                if !f.is_zero(x) {
                    full[full_index(c)] = x.clone();
                }
            }
            full
        })
        .collect();
    let pivots = restricted.pivots().iter().map(|&c| full_index(c)).collect();
    Ok(Subspace::from_canonical_parts(b * d, basis, pivots))
}

/// A minimal free resolution `F_N -> ... -> F_0 -> M -> 0`, truncated at
/// the horizon `N`.
pub struct MinimalResolution<F: Field> {
    module: RModule<F>,
    horizon: usize,
    betti: Vec<usize>,
    /// generators of `M` (images of the basis of `F_0`)
    augmentation: Vec<Vec<F::Elem>>,
    /// `differentials[i - 1]` is `∂_i : F_i -> F_{i-1}`
    differentials: Vec<AlgebraMatrix<F::Elem>>,
    /// `kernels[0] = ker(F_0 -> M)`, `kernels[i] = ker ∂_i` for `i < N`
    kernels: Vec<Subspace<F::Elem>>,
    limits: ResolutionLimits,
}

impl<F: Field> fmt::Debug for MinimalResolution<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MinimalResolution")
            .field("horizon", &self.horizon)
            .field("betti", &self.betti)
            .finish_non_exhaustive()
    }
}

/// Minimal free resolution of `module` through homological degree `horizon`.
pub fn resolve<F: Field>(module: &RModule<F>, horizon: usize) -> Result<MinimalResolution<F>, ResolutionError> {
    resolve_with(module, horizon, &ResolutionLimits::default())
}

pub fn resolve_with<F: Field>(
    module: &RModule<F>,
    horizon: usize,
    limits: &ResolutionLimits,
) -> Result<MinimalResolution<F>, ResolutionError> {
    let alg = Arc::clone(module.algebra());
    let d = alg.dim();
    let (augmentation, m_dim) = minimal_generators_with(module, limits, 0)?;
    let mut betti = vec![augmentation.len()];
    let mut kernels = Vec::with_capacity(horizon);
    let mut differentials = Vec::with_capacity(horizon);
    if horizon > 0 {
        kernels.push(cover_kernel(module, &augmentation, m_dim, limits, 0)?);
    }
    for i in 1..=horizon {
        let prev_rank = betti[i - 1];
        let syz = RModule {
            algebra: Arc::clone(&alg),
            kind: ModuleKind::Submodule {
                rank: prev_rank,
                space: kernels[i - 1].clone(),
            },
        };
        let (gens, m_dim) = minimal_generators_with(&syz, limits, i)?;
        differentials.push(AlgebraMatrix::from_columns(prev_rank, d, &gens));
        betti.push(gens.len());
        if i < horizon {
            kernels.push(cover_kernel(&syz, &gens, m_dim, limits, i)?);
        }
        log::debug!("stage {i}: b_{i} = {}", gens.len());
    }
    Ok(MinimalResolution {
        module: module.clone(),
        horizon,
        betti,
        augmentation,
        differentials,
        kernels,
        limits: *limits,
    })
}

impl<F: Field> MinimalResolution<F> {
    pub fn algebra(&self) -> &Arc<FiniteLocalAlgebra<F>> {
        self.module.algebra()
    }

    pub fn module(&self) -> &RModule<F> {
        &self.module
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    /// `b_0, ..., b_N`.
    pub fn betti(&self) -> &[usize] {
        &self.betti
    }

    /// Images in `M` of the basis of `F_0`.
    pub fn augmentation(&self) -> &[Vec<F::Elem>] {
        &self.augmentation
    }

    /// `∂_i` for `1 <= i <= N`.
    pub fn differential(&self, i: usize) -> Result<&AlgebraMatrix<F::Elem>, ResolutionError> {
        if i == 0 || i > self.horizon {
            return Err(ResolutionError::HorizonExceeded {
                requested: i,
                horizon: self.horizon,
            });
        }
        Ok(&self.differentials[i - 1])
    }

    pub fn differentials(&self) -> &[AlgebraMatrix<F::Elem>] {
        &self.differentials
    }

    /// The `d`-th syzygy module: `M` for `d = 0`, otherwise `ker ∂_d` as a
    /// submodule of `F_d`.
    pub fn syzygy(&self, d: usize) -> Result<RModule<F>, ResolutionError> {
        if d > self.horizon {
            return Err(ResolutionError::HorizonExceeded {
                requested: d,
                horizon: self.horizon,
            });
        }
        if d == 0 {
            return Ok(self.module.clone());
        }
        let alg = self.algebra();
        let space = if d < self.horizon {
            self.kernels[d].clone()
        } else {
            let prev = RModule {
                algebra: Arc::clone(alg),
                kind: ModuleKind::Submodule {
                    rank: self.betti[d - 1],
                    space: self.kernels[d - 1].clone(),
                },
            };
            let gens: Vec<Vec<F::Elem>> = (0..self.betti[d]).map(|j| self.differentials[d - 1].column(j)).collect();
            let m_dim = prev.dim() - gens.len();
            cover_kernel(&prev, &gens, m_dim, &self.limits, d)?
        };
        Ok(RModule {
            algebra: Arc::clone(alg),
            kind: ModuleKind::Submodule {
                rank: self.betti[d],
                space,
            },
        })
    }

    /// Image of `v ∈ F_0` in `M`.
    fn augment(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let alg = self.algebra();
        let f = alg.field();
        let d = alg.dim();
        let mut out = vec![f.zero(); self.module.space().ambient()];
        for (j, g) in self.augmentation.iter().enumerate() {
            let block = &v[j * d..(j + 1) * d];
            if !alg.is_zero(block) {
                f.add_scaled(&mut out, &f.one(), &self.module.act_element(block, g));
            }
        }
        out
    }

    /// Rank of `F_i -> F_{i-1}` (of `F_0 -> M` for `i = 0`), from the full
    /// expanded matrix.
    fn expanded_rank(&self, i: usize) -> usize {
        let alg = self.algebra();
        let f = alg.field();
        let d = alg.dim();
        let b = self.betti[i];
        let mut columns = Vec::with_capacity(b * d);
        for j in 0..b {
            for s in 0..d {
                let mut e = vec![f.zero(); b * d];
                e[j * d + s] = f.one();
                let img = if i == 0 {
                    self.augment(&e)
                } else {
                    self.differentials[i - 1].apply(alg, &e)
                };
                columns.push(img);
            }
        }
        let ncols = columns.first().map_or(0, |c| c.len());
        rref_rows(f, &mut columns, ncols).len()
    }

    /// Checks, independently of how the resolution was built: every entry of
    /// every differential lies in `m`; consecutive maps compose to zero; the
    /// expanded complex is exact at `F_0, ..., F_{N-1}` and `F_0 -> M` is onto.
    pub fn verify(&self) -> Result<(), ResolutionError> {
        let alg = self.algebra();
        let d = alg.dim();
        for (k, diff) in self.differentials.iter().enumerate() {
            if !diff.is_minimal(alg) {
                return Err(ResolutionError::Invariant(format!("∂_{} has an entry outside m", k + 1)));
            }
        }
        for i in 1..=self.horizon {
            let diff = &self.differentials[i - 1];
            for j in 0..diff.cols() {
                let col = diff.column(j);
                let image = if i == 1 {
                    self.augment(&col)
                } else {
                    self.differentials[i - 2].apply(alg, &col)
                };
                if !alg.is_zero(&image) {
                    return Err(ResolutionError::Invariant(format!("∂_{} ∘ ∂_{i} != 0", i - 1)));
                }
            }
        }
        let ranks: Vec<usize> = (0..=self.horizon).map(|i| self.expanded_rank(i)).collect();
        if ranks[0] != self.module.dim() {
            return Err(ResolutionError::Invariant("F_0 -> M is not onto".into()));
        }
        for i in 0..self.horizon {
            if self.betti[i] * d - ranks[i] != ranks[i + 1] {
                return Err(ResolutionError::Invariant(format!("homology at F_{i} is nonzero")));
            }
        }
        Ok(())
    }
}
