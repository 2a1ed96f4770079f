//! `Tor_i(M, R/m^n)` computed from the minimal resolution of `M`, and the
//! maps `υ^n_i : Tor_i(M, R/m^{n+1}) -> Tor_i(M, R/m^n)` induced by the
//! surjection `R/m^{n+1} -> R/m^n`.
//!
//! In the adapted basis `R/m^n` is the span of the first `dim R/m^n` basis
//! vectors, so tensoring with it truncates coordinates and the surjection is
//! a coordinate projection.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::exact_linalg::{induced_map_on_quotients, kernel_of_rows, rref_rows, Field, LinalgError, Matrix, QuotientSpace, Subspace};
use crate::linear_part::Classification;
use crate::resolution::{AlgebraMatrix, MinimalResolution, ResolutionLimits};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TorError {
    #[error("Tor_{index} needs ∂_{} but the resolution stops at ∂_{horizon}", index + 1)]
    HorizonExceeded { index: usize, horizon: usize },
    #[error("requires m^4 = 0, but the nilpotency index is {0}")]
    NilpotencyTooHigh(usize),
    #[error("matrix of {rows} x {cols} entries exceeds the cap of {max}")]
    ResourceCap { rows: usize, cols: usize, max: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// `(∂_i ⊗ R/m^n)` as rows of a `(b_{i-1} o) x (b_i o)` matrix, `o = dim R/m^n`.
fn reduced_rows<F: Field>(res: &MinimalResolution<F>, diff: &AlgebraMatrix<F::Elem>, o: usize) -> Vec<Vec<F::Elem>> {
    let alg = res.algebra();
    let f = alg.field();
    let d = alg.dim();
    let one = f.one();
    let (rows, cols) = (diff.rows(), diff.cols());
    let mut out = vec![vec![f.zero(); cols * o]; rows * o];
    let mut buf = vec![f.zero(); d];
    for r in 0..rows {
        for c in 0..cols {
            let e = diff.entry(r, c);
            if alg.is_zero(e) {
                continue;
            }
            for s in 0..o {
                buf.iter_mut().for_each(|x| *x = f.zero());
                alg.mul_basis_acc(&mut buf, &one, s, e);
                for (t, x) in buf[..o].iter().enumerate() {
                    if !f.is_zero(x) {
                        out[r * o + t][c * o + s] = x.clone();
                    }
                }
            }
        }
    }
    out
}

fn transpose<E: Clone>(rows: &[Vec<E>], ncols: usize) -> Vec<Vec<E>> {
    (0..ncols).map(|c| rows.iter().map(|r| r[c].clone()).collect()).collect()
}

/// `Tor_i(M, R/m^n)` as cycles modulo boundaries in `(R/m^n)^{b_i}`.
pub fn tor<F: Field>(res: &MinimalResolution<F>, n: usize, i: usize) -> Result<QuotientSpace<F::Elem>, TorError> {
    tor_with(res, n, i, &ResolutionLimits::UNLIMITED)
}

fn tor_with<F: Field>(res: &MinimalResolution<F>, n: usize, i: usize, limits: &ResolutionLimits) -> Result<QuotientSpace<F::Elem>, TorError> {
    if i + 1 > res.horizon() {
        return Err(TorError::HorizonExceeded {
            index: i,
            horizon: res.horizon(),
        });
    }
    let alg = res.algebra();
    let f = alg.field();
    let o = alg.quotient_dim(n);
    let b = res.betti();
    let ambient = b[i] * o;
    let cap = |rows: usize, cols: usize| {
        if rows.saturating_mul(cols) > limits.max_entries {
            Err(TorError::ResourceCap {
                rows,
                cols,
                max: limits.max_entries,
            })
        } else {
            Ok(())
        }
    };
    let cycles = if i == 0 {
        Subspace::full(f, ambient)
    } else {
        cap(b[i - 1] * o, ambient)?;
        kernel_of_rows(f, reduced_rows(res, &res.differentials()[i - 1], o), ambient)
    };
    cap(b[i + 1] * o, ambient)?;
    let outgoing = reduced_rows(res, &res.differentials()[i], o);
    let boundaries = Subspace::from_spanning(f, ambient, transpose(&outgoing, b[i + 1] * o));
    Ok(QuotientSpace::new(f, cycles, boundaries)?)
}

/// Coordinate projection `(R/m^{n+1})^b -> (R/m^n)^b`.
fn projection<F: Field>(field: &F, rank: usize, from: usize, to: usize) -> Matrix<F::Elem> {
    let mut m = Matrix::zeros(field, rank * to, rank * from);
    for j in 0..rank {
        for t in 0..to {
            m.set(j * to + t, j * from + t, field.one());
        }
    }
    m
}

/// One map `υ^n_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpsilonMap<E> {
    pub index: usize,
    pub power: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub matrix: Matrix<E>,
    pub rank: usize,
    /// true when the map is zero for structural reasons and was not computed
    pub forced_zero: bool,
}

fn upsilon_from<F: Field>(
    field: &F,
    rank: usize,
    (i, n): (usize, usize),
    (o_src, src): (usize, &QuotientSpace<F::Elem>),
    (o_dst, dst): (usize, &QuotientSpace<F::Elem>),
) -> Result<UpsilonMap<F::Elem>, TorError> {
    let matrix = induced_map_on_quotients(field, &projection(field, rank, o_src, o_dst), src, dst)?;
    let r = matrix.rank(field);
    Ok(UpsilonMap {
        index: i,
        power: n,
        source_dim: src.dim(),
        target_dim: dst.dim(),
        rank: r,
        matrix,
        forced_zero: false,
    })
}

/// `υ^n_i`, always computed from both Tor spaces.
pub fn upsilon<F: Field>(res: &MinimalResolution<F>, n: usize, i: usize) -> Result<UpsilonMap<F::Elem>, TorError> {
    let alg = res.algebra();
    let f = alg.field();
    let src = tor(res, n + 1, i)?;
    let dst = tor(res, n, i)?;
    upsilon_from(
        f,
        res.betti()[i],
        (i, n),
        (alg.quotient_dim(n + 1), &src),
        (alg.quotient_dim(n), &dst),
    )
}

/// All `υ^n_i` for `0 <= i <= N` and `1 <= n <= max(t, 1)`, where `m^{t+1} = 0`.
#[derive(Clone, Debug)]
pub struct UpsilonLadder<E> {
    pub horizon: usize,
    pub top: usize,
    /// `tor_dims[&(i, n)]` for `1 <= n <= t + 1`
    pub tor_dims: BTreeMap<(usize, usize), usize>,
    pub maps: BTreeMap<(usize, usize), UpsilonMap<E>>,
}

impl<E: Clone> UpsilonLadder<E> {
    /// Computes the ladder. For `i >= 1`, `υ^t_i` has source
    /// `Tor_i(M, R) = 0` and is recorded as forced zero.
    pub fn compute<F: Field<Elem = E>>(res: &MinimalResolution<F>, horizon: usize, limits: &ResolutionLimits) -> Result<Self, TorError> {
        let alg = res.algebra();
        let f = alg.field();
        // υ^n_0 is an isomorphism for every n >= 1, even when m = 0
        let t = alg.top_level().max(1);
        let mut tor_dims = BTreeMap::new();
        let mut maps = BTreeMap::new();
        for i in 0..=horizon {
            let mut spaces: Vec<Option<QuotientSpace<E>>> = vec![None; t + 2];
            for (n, slot) in spaces.iter_mut().enumerate().skip(1) {
                if n == t + 1 && i >= 1 {
                    continue;
                }
                let q = tor_with(res, n, i, limits)?;
                tor_dims.insert((i, n), q.dim());
                *slot = Some(q);
            }
            for n in 1..=t {
                let map = match (&spaces[n + 1], &spaces[n]) {
                    (Some(src), Some(dst)) => upsilon_from(
                        f,
                        res.betti()[i],
                        (i, n),
                        (alg.quotient_dim(n + 1), src),
                        (alg.quotient_dim(n), dst),
                    )?,
                    (None, Some(dst)) => UpsilonMap {
                        index: i,
                        power: n,
                        source_dim: 0,
                        target_dim: dst.dim(),
                        matrix: Matrix::zeros(f, dst.dim(), 0),
                        rank: 0,
                        forced_zero: true,
                    },
                    _ => unreachable!("target space is always computed"),
                };
                maps.insert((i, n), map);
            }
        }
        Ok(Self {
            horizon,
            top: t,
            tor_dims,
            maps,
        })
    }

    pub fn rank(&self, i: usize, n: usize) -> usize {
        self.maps.get(&(i, n)).map_or(0, |m| m.rank)
    }

    /// Indices `i >= 1` with some nonzero `υ^n_i`.
    pub fn nonzero_indices(&self) -> Vec<usize> {
        (1..=self.horizon).filter(|&i| (1..=self.top).any(|n| self.rank(i, n) > 0)).collect()
    }

    /// `ranks[i][n - 1]`.
    pub fn rank_table(&self) -> Vec<Vec<usize>> {
        (0..=self.horizon).map(|i| (1..=self.top).map(|n| self.rank(i, n)).collect()).collect()
    }

    /// `dims[i][n - 1]` = `dim Tor_i(M, R/m^n)` for `1 <= n <= t`.
    pub fn tor_table(&self) -> Vec<Vec<usize>> {
        (0..=self.horizon)
            .map(|i| (1..=self.top).map(|n| self.tor_dims.get(&(i, n)).copied().unwrap_or(0)).collect())
            .collect()
    }
}

/// Defect as detected by the ladder: the least `d` with `υ^n_i = 0` for all
/// `d < i <= N` and all `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LadderDefect {
    pub horizon: usize,
    pub nonzero: Vec<usize>,
    pub classification: Classification,
}

pub fn ladder_defect<E: Clone>(ladder: &UpsilonLadder<E>) -> LadderDefect {
    let nonzero = ladder.nonzero_indices();
    LadderDefect {
        horizon: ladder.horizon,
        classification: Classification::from_nonzero(&nonzero),
        nonzero,
    }
}

/// Whether every `x ∈ F_i` with `∂_i(x) ∈ m^2 F_{i-1}` lies in `m F_i`.
///
/// With `A` the map `F_i -> (R/m^2)^{b_{i-1}}`, the preimage of zero lies in
/// the `m`-part exactly when the basis vectors of `F_i` stay independent
/// modulo the image of the `m`-part: `rank A = rank A|_{mF_i} + b_i`.
pub fn linear_generation<F: Field>(res: &MinimalResolution<F>, i: usize) -> Result<bool, TorError> {
    let b = res.betti();
    if i == 0 {
        return Ok(b[0] == 0);
    }
    if i > res.horizon() {
        return Err(TorError::HorizonExceeded {
            index: i,
            horizon: res.horizon(),
        });
    }
    let alg = res.algebra();
    let f = alg.field();
    let d = alg.dim();
    let o2 = alg.quotient_dim(2);
    let diff = &res.differentials()[i - 1];
    let mut all_cols = Vec::with_capacity(b[i] * d);
    let mut m_cols = Vec::with_capacity(b[i] * (d - 1));
    for c in 0..b[i] {
        for s in 0..d {
            let mut e = vec![f.zero(); b[i] * d];
            e[c * d + s] = f.one();
            let img = diff.apply(alg, &e);
            let truncated: Vec<F::Elem> = (0..b[i - 1]).flat_map(|r| img[r * d..r * d + o2].iter().cloned()).collect();
            if s > 0 {
                m_cols.push(truncated.clone());
            }
            all_cols.push(truncated);
        }
    }
    let width = b[i - 1] * o2;
    let rank_all = rref_rows(f, &mut all_cols, width).len();
    let rank_m = rref_rows(f, &mut m_cols, width).len();
    Ok(rank_all == rank_m + b[i])
}

/// Outcome of `υ^1_i = 0 ⇒ υ^2_i = 0` at one index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ImplicationOutcome {
    pub index: usize,
    pub antecedent: bool,
    pub consequent: bool,
}

impl ImplicationOutcome {
    pub fn holds(&self) -> bool {
        !self.antecedent || self.consequent
    }
}

/// For algebras with `m^4 = 0`: at every `i <= N`, whether `υ^1_i = 0`
/// implies `υ^2_i = 0`.
pub fn second_rung_implication<F: Field>(res: &MinimalResolution<F>, ladder: &UpsilonLadder<F::Elem>) -> Result<Vec<ImplicationOutcome>, TorError> {
    let s = res.algebra().nilpotency_index();
    if s > 4 {
        return Err(TorError::NilpotencyTooHigh(s));
    }
    Ok((0..=ladder.horizon)
        .map(|i| ImplicationOutcome {
            index: i,
            antecedent: ladder.rank(i, 1) == 0,
            consequent: ladder.rank(i, 2) == 0,
        })
        .collect())
}
