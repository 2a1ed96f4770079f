//! Ring presentations `k[x_1..x_n]/(f_1..f_s)`, a small Buchberger
//! implementation, and structure-constant tables in JSON.

mod groebner;
mod parse;
mod polynomial;
mod table;

pub use groebner::{
    build_algebra, buchberger, groebner_basis, leading_monomials, normal_form, quotient_basis, structure_table, GroebnerLimits,
};
pub use parse::{parse_presentation, DEFAULT_CHARACTERISTIC, MAX_EXPONENT};
pub use polynomial::{Monomial, MonomialOrder, Polynomial};
pub use table::{load_structure_constants, parse_table_document, Coefficient, TableDocument};

use num_rational::BigRational;
use thiserror::Error;

use crate::exact_linalg::{Field, FieldSpec};
use crate::local_algebra::AlgebraError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}, column {col}: unknown variable {name}")]
    UnknownVariable { name: String, line: usize, col: usize },
    #[error("line {line}, column {col}: characteristic {p} is neither 0 nor a prime below 2^31")]
    BadCharacteristic { p: u64, line: usize, col: usize },
    #[error("coefficient {0} is undefined in the chosen field")]
    Coefficient(String),
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("quotient not Artinian: no power of variable #{variable} is a leading term")]
    NotArtinian { variable: usize },
    #[error("quotient has more than {max} standard monomials")]
    TooLarge { max: usize },
    #[error("the ideal is the whole ring")]
    UnitIdeal,
    #[error("variable {variable} is not nilpotent in the quotient; the ring is not local at the origin")]
    NotLocal { variable: String },
    #[error("table file: {0}")]
    Table(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A parsed presentation. Coefficients are kept as rationals until a
/// concrete field is chosen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingPresentation {
    pub field: FieldSpec,
    pub vars: Vec<String>,
    pub generators: Vec<Polynomial<BigRational>>,
}

impl RingPresentation {
    /// Ideal generators with coefficients mapped into `field`.
    pub fn generators_over<F: Field>(&self, field: &F, order: MonomialOrder) -> Result<Vec<Polynomial<F::Elem>>, PresentationError> {
        self.generators
            .iter()
            .map(|g| {
                let terms = g
                    .terms()
                    .iter()
                    .map(|(m, c)| {
                        field
                            .from_ratio(c.numer(), c.denom())
                            .map(|x| (m.clone(), x))
                            .map_err(|_| PresentationError::Coefficient(c.to_string()))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Polynomial::from_terms(field, self.vars.len(), order, terms))
            })
            .collect()
    }

    /// The presentation in its own file format; parses back to `self`.
    pub fn to_text(&self) -> String {
        let gens: Vec<String> = self.generators.iter().map(|g| format_rational_poly(g, &self.vars)).collect();
        format!(
            "char {}\nvars {}\nideal {}\n",
            self.field.characteristic(),
            self.vars.join(" "),
            gens.join(", ")
        )
    }
}

fn format_rational_poly(g: &Polynomial<BigRational>, vars: &[String]) -> String {
    use num_traits::{One, Signed};
    if g.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in g.terms().iter().enumerate() {
        let sign = if c.is_negative() { "-" } else { "+" };
        if i > 0 {
            out.push_str(&format!(" {sign} "));
        } else if c.is_negative() {
            out.push('-');
        }
        let a = c.abs();
        match (m.is_one(), a.is_one()) {
            (true, _) => out.push_str(&a.to_string()),
            (false, true) => out.push_str(&m.display(vars).to_string()),
            (false, false) => out.push_str(&format!("{a}*{}", m.display(vars))),
        }
    }
    out
}
