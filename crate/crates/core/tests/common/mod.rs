#![allow(dead_code)]

use std::sync::Arc;

use lindefect::exact_linalg::PrimeField;
use lindefect::lab::{random_algebra, ScanConfig};
use lindefect::local_algebra::FiniteLocalAlgebra;
use lindefect::presentation::{build_algebra, parse_presentation, GroebnerLimits};

pub type Algebra = Arc<FiniteLocalAlgebra<PrimeField>>;

pub fn gf(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

pub fn algebra(text: &str) -> Algebra {
    let p = parse_presentation(text).unwrap();
    let f = gf(p.field.characteristic());
    Arc::new(build_algebra(&f, &p, &GroebnerLimits::default()).unwrap())
}

/// A small random two-variable algebra with `m^c = 0`.
pub fn random_small(seed: u64, index: usize, nilpotency: u32, extras: usize) -> Algebra {
    let cfg = ScanConfig {
        vars: 2,
        nilpotency,
        extra_generators: extras,
        max_degree: nilpotency - 1,
        seed,
        ..ScanConfig::default()
    };
    random_algebra(&gf(101), &cfg, index).unwrap().algebra
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Power series coefficients of `num / den` up to `t^len`.
pub fn series_quotient(num: &[i64], den: &[i64], len: usize) -> Vec<i64> {
    assert_eq!(den[0], 1);
    let mut out = vec![0i64; len + 1];
    for k in 0..=len {
        let mut c = num.get(k).copied().unwrap_or(0);
        for j in 1..=k.min(den.len() - 1) {
            c -= den[j] * out[k - j];
        }
        out[k] = c;
    }
    out
}
