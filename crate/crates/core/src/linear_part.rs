//! The linear part of a minimal resolution: the associated graded complex
//! over `gr(R)` for the filtration `m^{p-i} F_i`, its homology and the
//! linearity defect read off at a finite horizon.
//!
//! `lin_n` is free on `b_n` generators of internal degree `n`, so its
//! component of internal degree `n + q` is `(gr_q)^{b_n}`. Homology is kept
//! per pair `(n, q)` with explicit cycle and boundary spaces.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exact_linalg::{Field, LinalgError, Matrix, Subspace};
use crate::local_algebra::GradedAlgebra;
use crate::resolution::MinimalResolution;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinearPartError {
    #[error("∂_{0} has an entry outside m; the linear part is undefined")]
    NotMinimal(usize),
    #[error("homology at index {requested} needs ∂_{} but only {available} differentials exist", requested + 1)]
    HorizonExceeded { requested: usize, available: usize },
    #[error("the check is only defined for d >= 1")]
    IndexZero,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// The complex `lin(F)` of graded free `gr(R)`-modules.
pub struct GradedComplex<F: Field> {
    field: F,
    graded: GradedAlgebra<F::Elem>,
    betti: Vec<usize>,
    /// `linear[n - 1][r * b_n + c]`: degree-1 coordinates of entry `(r, c)` of `∂*_n`
    linear: Vec<Vec<Vec<F::Elem>>>,
    /// `ops[q][a]`: multiplication by the `a`-th degree-1 basis element, `gr_q -> gr_{q+1}`
    ops: Vec<Vec<Matrix<F::Elem>>>,
}

fn degree_one_operators<F: Field>(field: &F, graded: &GradedAlgebra<F::Elem>) -> Vec<Vec<Matrix<F::Elem>>> {
    (0..=graded.top_degree())
        .map(|q| (0..graded.dim(1)).map(|a| graded.degree_one_operator(field, a, q)).collect())
        .collect()
}

impl<F: Field> fmt::Debug for GradedComplex<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedComplex")
            .field("graded_dims", &self.graded.dims())
            .field("betti", &self.betti)
            .finish_non_exhaustive()
    }
}

/// Builds `lin(F)` from a minimal resolution: each differential entry is
/// replaced by its class in `m/m^2`.
pub fn linear_part<F: Field>(res: &MinimalResolution<F>) -> Result<GradedComplex<F>, LinearPartError> {
    let alg = res.algebra();
    let (lo, hi) = (alg.offset(1), alg.offset(2));
    let mut linear = Vec::with_capacity(res.differentials().len());
    for (k, diff) in res.differentials().iter().enumerate() {
        if !diff.is_minimal(alg) {
            return Err(LinearPartError::NotMinimal(k + 1));
        }
        linear.push(diff.entries().iter().map(|e| e[lo..hi].to_vec()).collect());
    }
    let graded = GradedAlgebra::new(alg);
    Ok(GradedComplex {
        field: alg.field().clone(),
        ops: degree_one_operators(alg.field(), &graded),
        graded,
        betti: res.betti().to_vec(),
        linear,
    })
}

impl<F: Field> GradedComplex<F> {
    /// A complex from explicit degree-1 entries; `linear[n - 1]` lists the
    /// entries of `∂*_n` row-major (`b_{n-1}` rows, `b_n` columns).
    pub fn from_linear_entries(
        field: F,
        graded: GradedAlgebra<F::Elem>,
        betti: Vec<usize>,
        linear: Vec<Vec<Vec<F::Elem>>>,
    ) -> Result<Self, LinearPartError> {
        let g1 = graded.dim(1);
        for (k, entries) in linear.iter().enumerate() {
            let n = k + 1;
            if n >= betti.len() || entries.len() != betti[n - 1] * betti[n] || entries.iter().any(|e| e.len() != g1) {
                return Err(LinalgError::Shape {
                    expected: betti.get(n).map_or(0, |b| b * betti[n - 1]),
                    found: entries.len(),
                }
                .into());
            }
        }
        Ok(Self {
            ops: degree_one_operators(&field, &graded),
            field,
            graded,
            betti,
            linear,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn graded(&self) -> &GradedAlgebra<F::Elem> {
        &self.graded
    }

    pub fn betti(&self) -> &[usize] {
        &self.betti
    }

    /// Number of differentials `∂*_1 .. ∂*_L`.
    pub fn length(&self) -> usize {
        self.linear.len()
    }

    /// Top degree `t` of `gr(R)`.
    pub fn top_degree(&self) -> usize {
        self.graded.top_degree()
    }

    /// Degree-1 coordinates of entry `(r, c)` of `∂*_n`.
    pub fn entry(&self, n: usize, r: usize, c: usize) -> &[F::Elem] {
        &self.linear[n - 1][r * self.betti[n] + c]
    }

    /// `dim lin_{n}` in internal degree `n + q`.
    pub fn component_dim(&self, n: usize, q: usize) -> usize {
        self.betti.get(n).copied().unwrap_or(0) * self.graded.dim(q)
    }

    fn linear_form_operator(&self, form: &[F::Elem], q: usize) -> Matrix<F::Elem> {
        let f = &self.field;
        let (rows, cols) = (self.graded.dim(q + 1), self.graded.dim(q));
        let mut m = Matrix::zeros(f, rows, cols);
        for (a, c) in form.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let op = &self.ops[q][a];
            for r in 0..rows {
                for col in 0..cols {
                    let x = op.get(r, col);
                    if !f.is_zero(x) {
                        let v = f.add(m.get(r, col), &f.mul(c, x));
                        m.set(r, col, v);
                    }
                }
            }
        }
        m
    }

    /// Matrix of `∂*_n : (gr_q)^{b_n} -> (gr_{q+1})^{b_{n-1}}`, coordinates
    /// generator-major.
    pub fn differential_matrix(&self, n: usize, q: usize) -> Matrix<F::Elem> {
        let f = &self.field;
        let (bn, bp) = (self.betti[n], self.betti[n - 1]);
        let (gq, gq1) = (self.graded.dim(q), self.graded.dim(q + 1));
        let mut m = Matrix::zeros(f, bp * gq1, bn * gq);
        if gq1 == 0 || gq == 0 {
            return m;
        }
        for r in 0..bp {
            for c in 0..bn {
                let e = self.entry(n, r, c);
                if e.iter().all(|x| f.is_zero(x)) {
                    continue;
                }
                let block = self.linear_form_operator(e, q);
                for u in 0..gq1 {
                    for v in 0..gq {
                        let x = block.get(u, v);
                        if !f.is_zero(x) {
                            m.set(r * gq1 + u, c * gq + v, x.clone());
                        }
                    }
                }
            }
        }
        m
    }

    /// Multiplication by the `a`-th degree-1 basis element on `(gr_q)^{b}`.
    pub fn multiply_by_generator(&self, a: usize, q: usize, rank: usize, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let (gq, gq1) = (self.graded.dim(q), self.graded.dim(q + 1));
        let op = &self.ops[q][a];
        let mut out = Vec::with_capacity(rank * gq1);
        for j in 0..rank {
            out.extend(op.mul_vec(f, &v[j * gq..(j + 1) * gq]).expect("shape"));
        }
        out
    }

    /// `∂*_{n-1} ∘ ∂*_n = 0` in every internal degree.
    pub fn is_square_zero(&self) -> bool {
        (2..=self.length()).all(|n| {
            (0..=self.top_degree()).all(|q| {
                let a = self.differential_matrix(n - 1, q + 1);
                let b = self.differential_matrix(n, q);
                a.mul(&self.field, &b).expect("shapes").is_zero(&self.field)
            })
        })
    }

    /// Cycles, boundaries and homology dimensions of `lin` at index `n`.
    pub fn homology(&self, n: usize) -> Result<HomologySlice<F::Elem>, LinearPartError> {
        if n + 1 > self.length() {
            return Err(LinearPartError::HorizonExceeded {
                requested: n,
                available: self.length(),
            });
        }
        let f = &self.field;
        let t = self.top_degree();
        let mut components = Vec::with_capacity(t + 1);
        for q in 0..=t {
            let ambient = self.component_dim(n, q);
            let cycles = if n == 0 || q + 1 > t {
                Subspace::full(f, ambient)
            } else {
                self.differential_matrix(n, q).kernel(f)
            };
            let boundaries = if q == 0 {
                Subspace::zero(ambient)
            } else {
                self.differential_matrix(n + 1, q - 1).image(f)
            };
            debug_assert!(cycles.contains_subspace(f, &boundaries).unwrap_or(false));
            components.push(HomologyComponent { q, cycles, boundaries });
        }
        Ok(HomologySlice {
            index: n,
            rank: self.betti[n],
            components,
        })
    }

    /// `m* Z_n ⊆ B_n`, checked one degree-1 generator and one cycle basis
    /// vector at a time. On failure returns the offending data.
    pub fn mstar_annihilation_check(&self, slice: &HomologySlice<F::Elem>) -> Result<(), AnnihilationFailure<F::Elem>> {
        let f = &self.field;
        let t = self.top_degree();
        for comp in &slice.components {
            if comp.q + 1 > t {
                continue;
            }
            let target = &slice.components[comp.q + 1].boundaries;
            for z in comp.cycles.basis() {
                for a in 0..self.graded.dim(1) {
                    let gz = self.multiply_by_generator(a, comp.q, slice.rank, z);
                    if !target.contains(f, &gz) {
                        return Err(AnnihilationFailure {
                            index: slice.index,
                            q: comp.q,
                            generator: a,
                            cycle: z.clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn mstar_span(&self, slice: &HomologySlice<F::Elem>, q: usize, use_cycles: bool) -> Subspace<F::Elem> {
        let comp = &slice.components[q];
        let space = if use_cycles { &comp.cycles } else { &comp.boundaries };
        let ambient = self.component_dim(slice.index, q + 1);
        let mut vectors = Vec::new();
        for v in space.basis() {
            for a in 0..self.graded.dim(1) {
                vectors.push(self.multiply_by_generator(a, q, slice.rank, v));
            }
        }
        Subspace::from_spanning(&self.field, ambient, vectors)
    }

    /// `m* Ker ∂*_d = m* Im ∂*_{d+1}`, compared in every internal degree.
    pub fn mstar_equality_check(&self, slice: &HomologySlice<F::Elem>) -> Result<bool, LinearPartError> {
        if slice.index == 0 {
            return Err(LinearPartError::IndexZero);
        }
        for q in 0..self.top_degree() {
            if self.mstar_span(slice, q, true) != self.mstar_span(slice, q, false) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Cycles and boundaries of `lin_n` in internal degree `n + q`.
#[derive(Clone, Debug)]
pub struct HomologyComponent<E> {
    pub q: usize,
    pub cycles: Subspace<E>,
    pub boundaries: Subspace<E>,
}

impl<E: Clone> HomologyComponent<E> {
    pub fn dim(&self) -> usize {
        self.cycles.dim() - self.boundaries.dim()
    }
}

#[derive(Clone, Debug)]
pub struct HomologySlice<E> {
    pub index: usize,
    pub rank: usize,
    pub components: Vec<HomologyComponent<E>>,
}

impl<E: Clone> HomologySlice<E> {
    pub fn total_dim(&self) -> usize {
        self.components.iter().map(|c| c.dim()).sum()
    }

    /// Dimensions indexed by `q`, the internal degree minus the index.
    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.dim()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnihilationFailure<E> {
    pub index: usize,
    pub q: usize,
    pub generator: usize,
    pub cycle: Vec<E>,
}

/// Horizon-truncated linearity defect.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Classification {
    LdZeroUpToHorizon,
    DefectAtLeast(usize),
}

impl Classification {
    /// From the homological indices `>= 1` where something is nonzero.
    pub fn from_nonzero(indices: &[usize]) -> Self {
        match indices.iter().copied().filter(|&i| i >= 1).max() {
            None => Classification::LdZeroUpToHorizon,
            Some(d) => Classification::DefectAtLeast(d),
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::LdZeroUpToHorizon => write!(f, "ld=0 up to horizon"),
            Classification::DefectAtLeast(d) => write!(f, "defect ≥ {d}"),
        }
    }
}

impl Serialize for Classification {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Suspicious tails shorter than this are not flagged.
pub const SILENCE_TAIL_THRESHOLD: usize = 2;

/// Homology dimensions of `lin` through the horizon and what they imply.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DefectProfile {
    pub horizon: usize,
    /// `totals[n]` = `dim H_n(lin)` for `n = 0..=N`
    pub totals: Vec<usize>,
    /// `by_degree[n][q]` = `dim H_n(lin)_{n+q}`
    pub by_degree: Vec<Vec<usize>>,
    pub nonzero: Vec<usize>,
    pub classification: Classification,
    /// `N - d` for the largest nonzero index `d >= 1` (0 when none)
    pub tail_length: usize,
    pub silence_tail: bool,
}

impl DefectProfile {
    pub fn from_totals(horizon: usize, totals: Vec<usize>, by_degree: Vec<Vec<usize>>) -> Self {
        let nonzero: Vec<usize> = (1..=horizon).filter(|&i| totals[i] != 0).collect();
        let classification = Classification::from_nonzero(&nonzero);
        let tail_length = match classification {
            Classification::LdZeroUpToHorizon => 0,
            Classification::DefectAtLeast(d) => horizon - d,
        };
        Self {
            horizon,
            totals,
            by_degree,
            nonzero,
            classification,
            tail_length,
            silence_tail: tail_length >= SILENCE_TAIL_THRESHOLD,
        }
    }
}

/// Homology of `lin` at every index `0..=N`; needs `∂*_{N+1}`.
pub fn linearity_defect_profile<F: Field>(c: &GradedComplex<F>, horizon: usize) -> Result<(DefectProfile, Vec<HomologySlice<F::Elem>>), LinearPartError> {
    let slices = (0..=horizon).map(|n| c.homology(n)).collect::<Result<Vec<_>, _>>()?;
    let totals = slices.iter().map(|s| s.total_dim()).collect();
    let by_degree = slices.iter().map(|s| s.dims()).collect();
    Ok((DefectProfile::from_totals(horizon, totals, by_degree), slices))
}
