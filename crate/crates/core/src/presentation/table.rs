use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::PresentationError;
use crate::exact_linalg::{Field, FieldSpec};
use crate::local_algebra::{FiniteLocalAlgebra, StructureTable, MAX_ALGEBRA_DIM};

/// A coefficient in a table file: a JSON integer or a string `"a"` / `"a/b"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coefficient {
    Int(i64),
    Text(String),
}

impl Coefficient {
    fn to_field<F: Field>(&self, field: &F) -> Result<F::Elem, PresentationError> {
        let bad = || PresentationError::Table(format!("bad coefficient {self:?}"));
        match self {
            Coefficient::Int(v) => Ok(field.from_i64(*v)),
            Coefficient::Text(s) => {
                let (n, d) = match s.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (s.trim(), "1"),
                };
                let n: BigInt = n.parse().map_err(|_| bad())?;
                let d: BigInt = d.parse().map_err(|_| bad())?;
                field.from_ratio(&n, &d).map_err(|_| PresentationError::Coefficient(s.clone()))
            }
        }
    }

    fn from_field<F: Field>(field: &F, x: &F::Elem) -> Self {
        let (n, d) = field.to_ratio(x);
        match (i64::try_from(&n), d == BigInt::from(1)) {
            (Ok(v), true) => Coefficient::Int(v),
            _ => Coefficient::Text(field.format(x)),
        }
    }
}

/// On-disk structure-constant table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableDocument {
    pub char: u64,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: usize,
    pub m_generators: Vec<usize>,
    pub table: Vec<Vec<Vec<Coefficient>>>,
}

pub fn parse_table_document(text: &str) -> Result<TableDocument, PresentationError> {
    let doc: TableDocument = serde_json::from_str(text).map_err(|e| PresentationError::Table(e.to_string()))?;
    if doc.dim != doc.basis.len() {
        return Err(PresentationError::Table(format!("dim {} but {} basis labels", doc.dim, doc.basis.len())));
    }
    if doc.dim > MAX_ALGEBRA_DIM {
        return Err(PresentationError::Table(format!("dim {} exceeds {MAX_ALGEBRA_DIM}", doc.dim)));
    }
    Ok(doc)
}

impl TableDocument {
    pub fn field(&self) -> Result<FieldSpec, PresentationError> {
        FieldSpec::from_characteristic(self.char).map_err(|e| PresentationError::Table(e.to_string()))
    }

    /// Coefficients mapped into `field`, shape-checked.
    pub fn to_structure_table<F: Field>(&self, field: &F) -> Result<StructureTable<F>, PresentationError> {
        let d = self.dim;
        if self.table.len() != d || self.table.iter().any(|r| r.len() != d || r.iter().any(|c| c.len() != d)) {
            return Err(PresentationError::Table(format!("table must be {d} x {d} x {d}")));
        }
        let table = self
            .table
            .iter()
            .map(|row| row.iter().map(|cell| cell.iter().map(|c| c.to_field(field)).collect()).collect())
            .collect::<Result<Vec<Vec<Vec<F::Elem>>>, _>>()?;
        Ok(StructureTable {
            field: field.clone(),
            basis: self.basis.clone(),
            unit: self.unit,
            m_generators: self.m_generators.clone(),
            table,
        })
    }

    pub fn from_structure_table<F: Field>(t: &StructureTable<F>) -> Self {
        Self {
            char: t.field.spec().characteristic() as u64,
            dim: t.dim(),
            basis: t.basis.clone(),
            unit: t.unit,
            m_generators: t.m_generators.clone(),
            table: t
                .table
                .iter()
                .map(|row| row.iter().map(|cell| cell.iter().map(|x| Coefficient::from_field(&t.field, x)).collect()).collect())
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("table documents serialize")
    }
}

/// Validates a table document over `field` and builds the algebra.
pub fn load_structure_constants<F: Field>(field: &F, doc: &TableDocument) -> Result<FiniteLocalAlgebra<F>, PresentationError> {
    if doc.field()? != field.spec() {
        return Err(PresentationError::Table(format!("table is over {}, not {}", doc.field()?, field.spec())));
    }
    Ok(FiniteLocalAlgebra::from_table(doc.to_structure_table(field)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::{PrimeField, Rationals};
    use crate::local_algebra::AlgebraError;

    const X4: &str = r#"{"char": 101, "dim": 4, "basis": ["1","x","x^2","x^3"], "unit": 0, "m_generators": [1],
        "table": [[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]],
                  [[0,1,0,0],[0,0,1,0],[0,0,0,1],[0,0,0,0]],
                  [[0,0,1,0],[0,0,0,1],[0,0,0,0],[0,0,0,0]],
                  [[0,0,0,1],[0,0,0,0],[0,0,0,0],[0,0,0,0]]]}"#;

    #[test]
    fn truncated_quartic_table() {
        let f = PrimeField::new(101).unwrap();
        let doc = parse_table_document(X4).unwrap();
        let a = load_structure_constants(&f, &doc).unwrap();
        assert_eq!(a.nilpotency_index(), 4);
        assert_eq!(TableDocument::from_structure_table(a.source_table()), doc);
    }

    #[test]
    fn broken_associativity() {
        let f = PrimeField::new(101).unwrap();
        let mut doc = parse_table_document(X4).unwrap();
        doc.table[2][2] = vec![Coefficient::Int(0), Coefficient::Int(0), Coefficient::Int(0), Coefficient::Int(1)];
        assert!(matches!(
            load_structure_constants(&f, &doc),
            Err(PresentationError::Algebra(AlgebraError::NotAssociative(..)))
        ));
    }

    #[test]
    fn rational_coefficients() {
        let doc = parse_table_document(
            r#"{"char": 0, "dim": 2, "basis": ["1","t"], "unit": 0, "m_generators": [1],
                "table": [[[1,0],[0,"1"]],[[0,"2/2"],[0,0]]]}"#,
        )
        .unwrap();
        assert!(load_structure_constants(&Rationals, &doc).is_ok());
        assert!(load_structure_constants(&PrimeField::new(101).unwrap(), &doc).is_err());
    }

    #[test]
    fn malformed_documents() {
        assert!(parse_table_document("{}").is_err());
        assert!(parse_table_document(r#"{"char": 2, "dim": 2, "basis": ["1"], "unit": 0, "m_generators": [], "table": []}"#).is_err());
        let doc = parse_table_document(r#"{"char": 2, "dim": 1, "basis": ["1"], "unit": 0, "m_generators": [], "table": []}"#).unwrap();
        assert!(doc.to_structure_table(&PrimeField::new(2).unwrap()).is_err());
    }
}
