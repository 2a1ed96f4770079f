use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::LabError;
use crate::exact_linalg::{Field, FieldSpec, Rationals};
use crate::local_algebra::FiniteLocalAlgebra;
use crate::presentation::{build_algebra, GroebnerLimits, Monomial, MonomialOrder, Polynomial, PresentationError, RingPresentation};

/// Generator name recorded in scan output; sample `j` of seed `s` uses
/// stream `j` of `ChaCha8Rng::seed_from_u64(s)`.
pub const PRNG_ID: &str = "ChaCha8Rng/seed_from_u64/stream";

const VARIABLE_NAMES: [&str; 4] = ["x", "y", "z", "w"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanConfig {
    pub vars: usize,
    pub characteristic: u64,
    /// every monomial of this degree is added to the ideal
    pub nilpotency: u32,
    pub extra_generators: usize,
    /// inclusive degree range of the random extra generators
    pub min_degree: u32,
    pub max_degree: u32,
    pub horizon: usize,
    pub count: usize,
    pub seed: u64,
    /// samples with larger `dim R` are redrawn
    pub max_dim: usize,
    pub max_attempts: usize,
    /// cap on a single dense matrix, in entries
    pub max_entries: usize,
    pub timestamp: bool,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            vars: 2,
            characteristic: 101,
            nilpotency: 4,
            extra_generators: 2,
            min_degree: 2,
            max_degree: 3,
            horizon: 6,
            count: 50,
            seed: 0,
            max_dim: 20,
            max_attempts: 1000,
            max_entries: 4_000_000,
            timestamp: false,
        }
    }
}

impl ScanConfig {
    pub fn validate(&self) -> Result<FieldSpec, LabError> {
        let bad = |m: String| Err(LabError::Config(m));
        if !(1..=VARIABLE_NAMES.len()).contains(&self.vars) {
            return bad(format!("vars must be between 1 and 4, got {}", self.vars));
        }
        if !(3..=5).contains(&self.nilpotency) {
            return bad(format!("nilpotency must be 3, 4 or 5, got {}", self.nilpotency));
        }
        if self.min_degree == 0 || self.min_degree > self.max_degree || self.max_degree >= self.nilpotency {
            return bad(format!(
                "degree range {}..={} must satisfy 1 <= min <= max < nilpotency",
                self.min_degree, self.max_degree
            ));
        }
        if self.horizon == 0 {
            return bad("horizon must be at least 1".into());
        }
        if self.max_attempts == 0 {
            return bad("max_attempts must be positive".into());
        }
        FieldSpec::from_characteristic(self.characteristic).map_err(|e| LabError::Config(e.to_string()))
    }

    /// True for suites outside the `m^4 = 0` and `m^3 = 0` cases.
    pub fn exploratory(&self) -> bool {
        self.nilpotency > 4
    }

    pub fn rng(&self, index: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index as u64);
        rng
    }
}

/// Exponent vectors of total degree `k` in `n` variables, lexicographically
/// descending.
pub(crate) fn monomials_of_degree(n: usize, k: u32) -> Vec<Monomial> {
    fn go(n: usize, k: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(k);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in (0..=k).rev() {
            prefix.push(e);
            go(n, k - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, k, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

fn random_coefficient(rng: &mut ChaCha8Rng, spec: FieldSpec) -> BigRational {
    let v: i64 = match spec {
        FieldSpec::Prime(p) => rng.gen_range(1..i64::from(p)),
        FieldSpec::Rationals => {
            let v = rng.gen_range(1..=9);
            if rng.gen_bool(0.5) {
                -v
            } else {
                v
            }
        }
    };
    BigRational::from_integer(BigInt::from(v))
}

fn random_generator(rng: &mut ChaCha8Rng, cfg: &ScanConfig, spec: FieldSpec) -> Polynomial<BigRational> {
    loop {
        let mut terms = Vec::new();
        for k in cfg.min_degree..=cfg.max_degree {
            for m in monomials_of_degree(cfg.vars, k) {
                if rng.gen_bool(0.5) {
                    terms.push((m, random_coefficient(rng, spec)));
                }
            }
        }
        let g = Polynomial::from_terms(&Rationals, cfg.vars, MonomialOrder::default(), terms);
        if !g.is_zero() {
            return g;
        }
    }
}

/// One draw of the presentation for sample `index`: the random extra
/// generators followed by all monomials of degree `c`.
pub fn random_presentation(cfg: &ScanConfig, rng: &mut ChaCha8Rng) -> Result<RingPresentation, LabError> {
    let spec = cfg.validate()?;
    let mut generators: Vec<Polynomial<BigRational>> = (0..cfg.extra_generators).map(|_| random_generator(rng, cfg, spec)).collect();
    let one = BigRational::from_integer(BigInt::from(1));
    generators.extend(
        monomials_of_degree(cfg.vars, cfg.nilpotency)
            .into_iter()
            .map(|m| Polynomial::from_terms(&Rationals, cfg.vars, MonomialOrder::default(), [(m, one.clone())])),
    );
    Ok(RingPresentation {
        field: spec,
        vars: VARIABLE_NAMES[..cfg.vars].iter().map(|s| s.to_string()).collect(),
        generators,
    })
}

pub struct Sample<F: Field> {
    pub presentation: RingPresentation,
    pub algebra: Arc<FiniteLocalAlgebra<F>>,
    /// draws rejected because some variable was redundant modulo `m^2`
    pub degenerate_redraws: usize,
    /// draws rejected because `dim R` exceeded the cap
    pub oversize_redraws: usize,
}

/// Sample `index` of the scan described by `cfg`.
pub fn random_algebra<F: Field>(field: &F, cfg: &ScanConfig, index: usize) -> Result<Sample<F>, LabError> {
    let spec = cfg.validate()?;
    if spec != field.spec() {
        return Err(LabError::Config(format!("configuration is over {spec}, not {}", field.spec())));
    }
    let mut rng = cfg.rng(index);
    let limits = GroebnerLimits {
        max_dim: cfg.max_dim,
        ..GroebnerLimits::default()
    };
    let (mut degenerate, mut oversize) = (0, 0);
    for _ in 0..cfg.max_attempts {
        let presentation = random_presentation(cfg, &mut rng)?;
        match build_algebra(field, &presentation, &limits) {
            Ok(a) if a.embedding_dim() < cfg.vars => {
                log::info!("sample {index}: degenerate draw, redrawing");
                degenerate += 1;
            }
            Ok(a) => {
                return Ok(Sample {
                    presentation,
                    algebra: Arc::new(a),
                    degenerate_redraws: degenerate,
                    oversize_redraws: oversize,
                })
            }
            Err(PresentationError::TooLarge { .. }) => {
                log::info!("sample {index}: dim R above {}, redrawing", cfg.max_dim);
                oversize += 1;
            }
            Err(e) => return Err(e.into()),
        }
    }
    Err(LabError::SamplingFailed {
        attempts: cfg.max_attempts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::PrimeField;

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_of_degree(2, 3).len(), 4);
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(4, 4).len(), 35);
        assert_eq!(monomials_of_degree(1, 4), vec![Monomial(vec![4])]);
    }

    #[test]
    fn monomial_ideal_only() {
        let f = PrimeField::new(101).unwrap();
        let cfg = ScanConfig {
            vars: 1,
            extra_generators: 0,
            ..ScanConfig::default()
        };
        let s = random_algebra(&f, &cfg, 0).unwrap();
        assert_eq!(s.algebra.dim(), 4);
        assert_eq!(s.algebra.nilpotency_index(), 4);
        let cfg = ScanConfig {
            vars: 2,
            nilpotency: 3,
            max_degree: 2,
            extra_generators: 0,
            ..ScanConfig::default()
        };
        let s = random_algebra(&f, &cfg, 0).unwrap();
        assert_eq!(s.algebra.dim(), 6);
    }

    #[test]
    fn same_seed_same_algebra() {
        let f = PrimeField::new(101).unwrap();
        let cfg = ScanConfig {
            seed: 7,
            ..ScanConfig::default()
        };
        let a = random_algebra(&f, &cfg, 3).unwrap();
        let b = random_algebra(&f, &cfg, 3).unwrap();
        assert_eq!(a.presentation, b.presentation);
        assert_eq!(a.algebra.source_table(), b.algebra.source_table());
    }

    #[test]
    fn rejects_bad_configs() {
        for cfg in [
            ScanConfig { vars: 5, ..ScanConfig::default() },
            ScanConfig { nilpotency: 6, ..ScanConfig::default() },
            ScanConfig { max_degree: 4, ..ScanConfig::default() },
            ScanConfig { characteristic: 12, ..ScanConfig::default() },
        ] {
            assert!(matches!(cfg.validate(), Err(LabError::Config(_))));
        }
    }
}
