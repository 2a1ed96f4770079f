use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};

use super::polynomial::{Monomial, MonomialOrder, Polynomial};
use super::{PresentationError, RingPresentation};
use crate::exact_linalg::Field;
use crate::local_algebra::{FiniteLocalAlgebra, StructureTable};

/// Limits for the desk-scale Gröbner computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerLimits {
    pub order: MonomialOrder,
    /// Maximum number of S-pairs reduced before giving up.
    pub max_pairs: usize,
    /// Maximum dimension of the quotient.
    pub max_dim: usize,
}

impl Default for GroebnerLimits {
    fn default() -> Self {
        Self {
            order: MonomialOrder::DegRevLex,
            max_pairs: 20_000,
            max_dim: 512,
        }
    }
}

/// Full reduction of `f` modulo `basis`; the result has no term divisible by
/// a leading monomial of `basis`.
pub fn normal_form<F: Field>(field: &F, f: &Polynomial<F::Elem>, basis: &[Polynomial<F::Elem>]) -> Polynomial<F::Elem> {
    let mut p = f.clone();
    let mut remainder = Vec::new();
    while let Some((lm, lc)) = p.leading().cloned() {
        match basis.iter().find(|g| g.leading_monomial().is_some_and(|gm| gm.divides(&lm))) {
            Some(g) => {
                let (gm, gc) = g.leading().expect("nonzero divisor");
                let c = field.mul(&lc, &field.inv(gc));
                p = p.sub_scaled_shifted(field, &c, &lm.div(gm), g);
            }
            None => {
                remainder.push((lm.clone(), lc));
                p = p.without_leading();
            }
        }
    }
    Polynomial::from_terms(field, f.nvars(), f.order(), remainder)
}

fn s_polynomial<F: Field>(field: &F, f: &Polynomial<F::Elem>, g: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
    let (fm, fc) = f.leading().expect("nonzero");
    let (gm, gc) = g.leading().expect("nonzero");
    let l = fm.lcm(gm);
    let a = Polynomial::zero(f.nvars(), f.order()).sub_scaled_shifted(field, &field.neg(&field.inv(fc)), &l.div(fm), f);
    a.sub_scaled_shifted(field, &field.inv(gc), &l.div(gm), g)
}

/// Reduced, monic Gröbner basis of the ideal generated by `generators`,
/// sorted by increasing leading monomial.
pub fn buchberger<F: Field>(
    field: &F,
    generators: &[Polynomial<F::Elem>],
    limits: &GroebnerLimits,
) -> Result<Vec<Polynomial<F::Elem>>, PresentationError> {
    let order = limits.order;
    let mut basis: Vec<Polynomial<F::Elem>> = Vec::new();
    for g in generators {
        let g = g.with_order(field, order);
        let r = normal_form(field, &g, &basis);
        if !r.is_zero() {
            basis.push(r.monic(field));
        }
    }
    let mut pairs: Vec<(usize, usize)> = (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut processed = 0usize;
    while let Some((i, j)) = pairs.pop() {
        let (a, b) = (basis[i].leading_monomial().expect("nonzero"), basis[j].leading_monomial().expect("nonzero"));
        if a.coprime(b) {
            continue;
        }
        processed += 1;
        if processed > limits.max_pairs {
            return Err(PresentationError::ResourceCap(format!("more than {} S-pairs", limits.max_pairs)));
        }
        let s = s_polynomial(field, &basis[i], &basis[j]);
        let r = normal_form(field, &s, &basis);
        if !r.is_zero() {
            let k = basis.len();
            basis.push(r.monic(field));
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    Ok(reduce_basis(field, basis, order))
}

fn reduce_basis<F: Field>(field: &F, mut basis: Vec<Polynomial<F::Elem>>, order: MonomialOrder) -> Vec<Polynomial<F::Elem>> {
    basis.sort_by(|a, b| order.cmp(a.leading_monomial().expect("nonzero"), b.leading_monomial().expect("nonzero")));
    let mut minimal: Vec<Polynomial<F::Elem>> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().expect("nonzero");
        if !minimal.iter().any(|h| h.leading_monomial().expect("nonzero").divides(lm)) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Polynomial<F::Elem>> = minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, g)| g.clone()).collect();
        let (lm, lc) = minimal[k].leading().expect("nonzero").clone();
        let tail = minimal[k].without_leading();
        let tail = normal_form(field, &tail, &others);
        let head = Polynomial::from_terms(field, minimal[k].nvars(), order, [(lm, lc)]);
        reduced.push(head.add(field, &tail).monic(field));
    }
    reduced
}

/// Standard monomials of a Gröbner basis, sorted by total degree and, within
/// a degree, from largest to smallest in the monomial order.
pub fn quotient_basis<E: Clone>(
    basis: &[Polynomial<E>],
    nvars: usize,
    order: MonomialOrder,
    max_dim: usize,
) -> Result<Vec<Monomial>, PresentationError> {
    let leads: Vec<&Monomial> = basis.iter().filter_map(|g| g.leading_monomial()).collect();
    if leads.iter().any(|m| m.is_one()) {
        return Err(PresentationError::UnitIdeal);
    }
    for v in 0..nvars {
        if !leads.iter().any(|m| m.pure_power_of() == Some(v)) {
            return Err(PresentationError::NotArtinian { variable: v });
        }
    }
    let standard = |m: &Monomial| !leads.iter().any(|l| l.divides(m));
    // standard monomials are closed under division: grow from 1
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut frontier = vec![Monomial::one(nvars)];
    seen.insert(Monomial::one(nvars));
    while let Some(m) = frontier.pop() {
        for v in 0..nvars {
            let next = m.mul(&Monomial::var(nvars, v));
            if !seen.contains(&next) && standard(&next) {
                if seen.len() >= max_dim {
                    return Err(PresentationError::TooLarge { max: max_dim });
                }
                seen.insert(next.clone());
                frontier.push(next);
            }
        }
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort_by(|a, b| match a.degree().cmp(&b.degree()) {
        Ordering::Equal => order.cmp(b, a),
        o => o,
    });
    Ok(out)
}

/// Reduced Gröbner basis of the presentation's ideal over `field`.
pub fn groebner_basis<F: Field>(
    field: &F,
    presentation: &RingPresentation,
    limits: &GroebnerLimits,
) -> Result<Vec<Polynomial<F::Elem>>, PresentationError> {
    buchberger(field, &presentation.generators_over(field, limits.order)?, limits)
}

/// Structure constants of `k[vars]/I` on the standard-monomial basis.
pub fn structure_table<F: Field>(
    field: &F,
    presentation: &RingPresentation,
    limits: &GroebnerLimits,
) -> Result<StructureTable<F>, PresentationError> {
    let n = presentation.vars.len();
    let gb = groebner_basis(field, presentation, limits)?;
    let monos = quotient_basis(&gb, n, limits.order, limits.max_dim)?;
    let index: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let d = monos.len();
    let coords = |p: &Polynomial<F::Elem>| {
        let mut v = vec![field.zero(); d];
        for (m, c) in p.terms() {
            v[index[m]] = c.clone();
        }
        v
    };
    let mut table = vec![vec![Vec::new(); d]; d];
    for a in 0..d {
        for b in a..d {
            let prod = Polynomial::from_terms(field, n, limits.order, [(monos[a].mul(&monos[b]), field.one())]);
            let v = coords(&normal_form(field, &prod, &gb));
            table[b][a] = v.clone();
            table[a][b] = v;
        }
    }
    // locality: every variable class must be nilpotent; x^d = 0 for nilpotent x
    for v in 0..n {
        let x = Polynomial::from_terms(field, n, limits.order, [(Monomial::var(n, v), field.one())]);
        let mut power = normal_form(field, &x, &gb);
        let mut steps = 0;
        while !power.is_zero() && steps < d {
            power = normal_form(field, &power.mul(field, &x), &gb);
            steps += 1;
        }
        if !power.is_zero() {
            return Err(PresentationError::NotLocal {
                variable: presentation.vars[v].clone(),
            });
        }
    }
    let m_generators = monos
        .iter()
        .enumerate()
        .filter(|(_, m)| m.degree() == 1)
        .map(|(i, _)| i)
        .collect();
    let basis = monos.iter().map(|m| m.display(&presentation.vars).to_string()).collect();
    Ok(StructureTable {
        field: field.clone(),
        basis,
        unit: index[&Monomial::one(n)],
        m_generators,
        table,
    })
}

/// The finite local algebra presented by `presentation`.
pub fn build_algebra<F: Field>(
    field: &F,
    presentation: &RingPresentation,
    limits: &GroebnerLimits,
) -> Result<FiniteLocalAlgebra<F>, PresentationError> {
    let table = structure_table(field, presentation, limits)?;
    Ok(FiniteLocalAlgebra::from_trusted_table(table)?)
}

/// Leading monomials of a Gröbner basis, for display.
pub fn leading_monomials<E: Clone>(basis: &[Polynomial<E>]) -> BTreeSet<Monomial> {
    basis.iter().filter_map(|g| g.leading_monomial().cloned()).collect()
}
