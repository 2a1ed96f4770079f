use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exact_linalg::Field;

/// Exponent vector of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `Some(i)` when the monomial is a pure power of variable `i`.
    pub fn pure_power_of(&self) -> Option<usize> {
        let mut it = self.0.iter().enumerate().filter(|(_, &e)| e > 0);
        match (it.next(), it.next()) {
            (Some((i, _)), None) => Some(i),
            _ => None,
        }
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, names }
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.mono.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.names[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    Lex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => {
                for (x, y) in a.0.iter().zip(&b.0) {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::DegRevLex => match a.degree().cmp(&b.degree()) {
                Ordering::Equal => {
                    for (x, y) in a.0.iter().zip(&b.0).rev() {
                        match x.cmp(y) {
                            Ordering::Equal => continue,
                            o => return o.reverse(),
                        }
                    }
                    Ordering::Equal
                }
                o => o,
            },
        }
    }
}

/// Sparse polynomial; terms sorted by decreasing monomial, no zero
/// coefficients, no repeated monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<E> {
    nvars: usize,
    order: MonomialOrder,
    terms: Vec<(Monomial, E)>,
}

impl<E: Clone> Polynomial<E> {
    pub fn zero(nvars: usize, order: MonomialOrder) -> Self {
        Self {
            nvars,
            order,
            terms: Vec::new(),
        }
    }

    pub fn from_terms<F: Field<Elem = E>>(
        field: &F,
        nvars: usize,
        order: MonomialOrder,
        terms: impl IntoIterator<Item = (Monomial, E)>,
    ) -> Self {
        let mut ts: Vec<(Monomial, E)> = terms.into_iter().collect();
        ts.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut merged: Vec<(Monomial, E)> = Vec::with_capacity(ts.len());
        for (m, c) in ts {
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => merged.push((m, c)),
            }
        }
        merged.retain(|(_, c)| !field.is_zero(c));
        Self {
            nvars,
            order,
            terms: merged,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[(Monomial, E)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, E)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn without_leading(&self) -> Self {
        Self {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().skip(1).cloned().collect(),
        }
    }

    pub fn with_order<F: Field<Elem = E>>(&self, field: &F, order: MonomialOrder) -> Self {
        Self::from_terms(field, self.nvars, order, self.terms.iter().cloned())
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
        if field.is_zero(c) {
            return Self::zero(self.nvars, self.order);
        }
        Self {
            nvars: self.nvars,
            order: self.order,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), field.mul(a, c))).collect(),
        }
    }

    pub fn monic<F: Field<Elem = E>>(&self, field: &F) -> Self {
        match self.leading() {
            Some((_, c)) => self.scale(field, &field.inv(c)),
            None => self.clone(),
        }
    }

    /// `self - c * m * other`.
    pub fn sub_scaled_shifted<F: Field<Elem = E>>(&self, field: &F, c: &E, m: &Monomial, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(mm, x)| (mm.mul(m), field.mul(x, c))).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => self.order.cmp(&x.0, &y.0),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => {
                    let (mm, x) = b.next().unwrap();
                    out.push((mm, field.neg(&x)));
                }
                Ordering::Equal => {
                    let (mm, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let s = field.sub(x, &y);
                    if !field.is_zero(&s) {
                        out.push((mm.clone(), s));
                    }
                }
            }
        }
        Self {
            nvars: self.nvars,
            order: self.order,
            terms: out,
        }
    }

    pub fn add<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        self.sub_scaled_shifted(field, &field.neg(&field.one()), &Monomial::one(self.nvars), other)
    }

    pub fn sub<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        self.sub_scaled_shifted(field, &field.one(), &Monomial::one(self.nvars), other)
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let mut acc = Self::zero(self.nvars, self.order);
        let minus_one = field.neg(&field.one());
        for (m, c) in &other.terms {
            acc = acc.sub_scaled_shifted(field, &field.mul(&minus_one, c), m, self);
        }
        acc
    }

    pub fn display<'a, F: Field<Elem = E>>(&'a self, field: &'a F, names: &'a [String]) -> PolynomialDisplay<'a, F> {
        PolynomialDisplay {
            poly: self,
            field,
            names,
        }
    }
}

pub struct PolynomialDisplay<'a, F: Field> {
    poly: &'a Polynomial<F::Elem>,
    field: &'a F,
    names: &'a [String],
}

impl<F: Field> fmt::Display for PolynomialDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.poly.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", self.field.format(c))?;
            } else if self.field.is_one(c) {
                write!(f, "{}", m.display(self.names))?;
            } else {
                write!(f, "{}*{}", self.field.format(c), m.display(self.names))?;
            }
        }
        Ok(())
    }
}
