//! Quantities recomputed by routes that share no code with the library's
//! own algorithms: series identities, truncated linear algebra, balance of
//! Tor and long exact sequences.

mod common;

use std::collections::BTreeMap;
use std::sync::Arc;

use common::*;
use lindefect::exact_linalg::{rref_rows, Field, PrimeField};
use lindefect::lab::{random_presentation, ScanConfig};
use lindefect::presentation::{build_algebra, groebner_basis, quotient_basis, GroebnerLimits, Monomial, MonomialOrder};
use lindefect::resolution::{resolve, RModule};
use lindefect::tor_ladder::{tor, UpsilonLadder};
use lindefect::resolution::ResolutionLimits;

/// Poincaré series of `k` over `k[x_1..x_e]/m^c` from the Golod formula with
/// Eagon-Northcott Betti numbers of `m^c`.
fn golod_power_series(e: u64, c: u64, len: usize) -> Vec<i64> {
    let num: Vec<i64> = (0..=e).map(|k| binomial(e, k) as i64).collect();
    let mut den = vec![0i64; e as usize + 2];
    den[0] = 1;
    for i in 1..=e {
        den[i as usize + 1] = -((binomial(c + e - 1, c + i - 1) * binomial(c + i - 2, i - 1)) as i64);
    }
    series_quotient(&num, &den, len)
}

#[test]
fn betti_numbers_of_maximal_ideal_powers_follow_golod_series() {
    for (vars, c, horizon) in [("x y", 2, 7), ("x y", 3, 6), ("x y", 4, 5), ("x y z", 2, 5), ("x y z", 3, 3)] {
        let names: Vec<&str> = vars.split(' ').collect();
        let e = names.len() as u64;
        let mut monomials = Vec::new();
        let mut stack = vec![(String::new(), 0usize, 0u64)];
        while let Some((m, start, deg)) = stack.pop() {
            if deg == c {
                monomials.push(m);
                continue;
            }
            for (j, v) in names.iter().enumerate().skip(start) {
                let next = if m.is_empty() { v.to_string() } else { format!("{m}*{v}") };
                stack.push((next, j, deg + 1));
            }
        }
        let a = algebra(&format!("vars {vars}\nideal {}\n", monomials.join(", ")));
        let res = resolve(&RModule::residue_field(&a), horizon).unwrap();
        let expected: Vec<usize> = golod_power_series(e, c, horizon).into_iter().map(|x| x as usize).collect();
        assert_eq!(res.betti(), &expected[..], "{vars} / m^{c}");
    }
}

#[test]
fn complete_intersections_have_binomial_betti_numbers() {
    // (1+t)^e / (1-t^2)^e for a complete intersection of codimension e
    for (text, e) in [("vars x y\nideal x^2, y^2\n", 2u64), ("vars x y\nideal x*y, y^2 - x^3\n", 2), ("vars x y z\nideal x^2, y^2, z^3\n", 3)] {
        let a = algebra(text);
        let res = resolve(&RModule::residue_field(&a), 6).unwrap();
        let num: Vec<i64> = (0..=e).map(|k| binomial(e, k) as i64).collect();
        let mut den = vec![0i64; 2 * e as usize + 1];
        for k in 0..=e {
            den[2 * k as usize] = binomial(e, k) as i64 * if k % 2 == 0 { 1 } else { -1 };
        }
        let expected: Vec<usize> = series_quotient(&num, &den, 6).into_iter().map(|x| x as usize).collect();
        assert_eq!(res.betti(), &expected[..], "{text}");
    }
}

fn monomials_below(nvars: usize, c: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial(vec![0; nvars])];
    let mut frontier = out.clone();
    for _ in 1..c {
        let mut next = BTreeMap::new();
        for m in &frontier {
            for i in 0..nvars {
                let mut e = m.0.clone();
                e[i] += 1;
                next.insert(e.clone(), Monomial(e));
            }
        }
        frontier = next.into_values().collect();
        out.extend(frontier.iter().cloned());
    }
    out
}

/// `dim k[x]/I` when `I ⊇ m^c`: monomials of degree `< c` modulo the span of
/// all truncated multiples `u * g`.
fn truncated_quotient_dim(field: &PrimeField, cfg: &ScanConfig, seed_index: usize) -> (usize, usize) {
    let mut rng = cfg.rng(seed_index);
    let pres = random_presentation(cfg, &mut rng).unwrap();
    let gens = pres.generators_over(field, MonomialOrder::default()).unwrap();
    let mons = monomials_below(cfg.vars, cfg.nilpotency);
    let index: BTreeMap<Vec<u32>, usize> = mons.iter().enumerate().map(|(i, m)| (m.0.clone(), i)).collect();
    let mut rows = Vec::new();
    for g in &gens {
        for u in &mons {
            let mut row = vec![field.zero(); mons.len()];
            for (m, coeff) in g.terms() {
                let prod = m.mul(u);
                if let Some(&k) = index.get(&prod.0) {
                    row[k] = field.add(&row[k], coeff);
                }
            }
            rows.push(row);
        }
    }
    let rank = rref_rows(field, &mut rows, mons.len()).len();
    let expected = mons.len() - rank;
    let built = build_algebra(
        field,
        &pres,
        &GroebnerLimits {
            max_dim: 512,
            ..GroebnerLimits::default()
        },
    )
    .unwrap();
    let gb = groebner_basis(field, &pres, &GroebnerLimits::default()).unwrap();
    let staircase = quotient_basis(&gb, cfg.vars, MonomialOrder::default(), 512).unwrap();
    assert_eq!(staircase.len(), built.dim());
    (expected, built.dim())
}

#[test]
fn groebner_dimension_matches_truncated_linear_algebra() {
    let f = gf(7);
    for (vars, c, extras) in [(1, 4, 1), (2, 3, 1), (2, 4, 2), (3, 3, 2), (3, 4, 4), (4, 3, 3)] {
        let cfg = ScanConfig {
            vars,
            characteristic: 7,
            nilpotency: c,
            extra_generators: extras,
            min_degree: 1,
            max_degree: c - 1,
            seed: 99,
            ..ScanConfig::default()
        };
        for i in 0..6 {
            let (expected, got) = truncated_quotient_dim(&f, &cfg, i);
            assert_eq!(expected, got, "vars {vars}, c {c}, sample {i}");
        }
    }
}

#[test]
fn tor_against_powers_matches_betti_numbers_of_the_quotients() {
    // Tor_i(k, R/m^n) = Tor_i(R/m^n, k), whose dimension is the i-th Betti
    // number of R/m^n over R
    for (seed, index) in [(1, 0), (1, 1), (2, 3), (5, 2)] {
        let a = random_small(seed, index, 4, 2);
        let res_k = resolve(&RModule::residue_field(&a), 5).unwrap();
        for n in 1..=a.nilpotency_index() {
            let res_q = resolve(&RModule::quotient_by_power(&a, n), 4).unwrap();
            for i in 0..4 {
                assert_eq!(tor(&res_k, n, i).unwrap().dim(), res_q.betti()[i], "seed {seed}/{index}, n {n}, i {i}");
            }
        }
    }
}

#[test]
fn upsilon_ranks_satisfy_the_long_exact_sequence() {
    // 0 -> m^n/m^{n+1} -> R/m^{n+1} -> R/m^n -> 0 gives
    // rank υ^n_i = C_i + B_{i-1} - g_n b_{i-1} - rank υ^n_{i-1}, rank υ^n_0 = C_0,
    // with B, C the Tor dimensions from resolutions of the quotients.
    for nilpotency in [3, 4] {
        for index in 0..8 {
            let a = random_small(17, index, nilpotency, 2);
            let horizon = 4;
            let res_k = resolve(&RModule::residue_field(&a), horizon + 1).unwrap();
            let ladder = UpsilonLadder::compute(&res_k, horizon, &ResolutionLimits::UNLIMITED).unwrap();
            let g = a.graded_dims();
            let betti = |n: usize| resolve(&RModule::quotient_by_power(&a, n), horizon).unwrap().betti().to_vec();
            for n in 1..=a.top_level() {
                let (b_src, c_dst) = (betti(n + 1), betti(n));
                let mut prev = c_dst[0];
                assert_eq!(ladder.rank(0, n), prev);
                for i in 1..=horizon {
                    let expected = c_dst[i] + b_src[i - 1] - g[n] * res_k.betti()[i - 1] - prev;
                    assert_eq!(ladder.rank(i, n), expected, "sample {index}, c {nilpotency}, n {n}, i {i}");
                    prev = expected;
                }
            }
        }
    }
}

#[test]
fn structure_constants_agree_with_polynomial_multiplication() {
    let f = gf(101);
    let text = "vars x y\nideal x^2 - 3*x*y, y^3 + x*y^2, x^4, x^3*y, x^2*y^2, x*y^3, y^4\n";
    let pres = lindefect::presentation::parse_presentation(text).unwrap();
    let a = Arc::new(build_algebra(&f, &pres, &GroebnerLimits::default()).unwrap());
    let gb = groebner_basis(&f, &pres, &GroebnerLimits::default()).unwrap();
    let basis = quotient_basis(&gb, 2, MonomialOrder::default(), 512).unwrap();
    // multiply basis monomials through the table and compare with normal forms
    let table = a.source_table();
    for (i, mi) in basis.iter().enumerate() {
        for (j, mj) in basis.iter().enumerate() {
            let prod = lindefect::presentation::Polynomial::from_terms(&f, 2, MonomialOrder::default(), [(mi.mul(mj), f.one())]);
            let nf = lindefect::presentation::normal_form(&f, &prod, &gb);
            let mut coords = vec![f.zero(); basis.len()];
            for (m, c) in nf.terms() {
                let k = basis.iter().position(|b| b == m).expect("normal form lies on the staircase");
                coords[k] = c.clone();
            }
            assert_eq!(table.table[i][j], coords);
        }
    }
}
