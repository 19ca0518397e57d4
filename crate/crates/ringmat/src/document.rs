//! JSON document formats used by the command-line tools.
//!
//! Numbers are carried as exact rational strings (`"p/q"`, or `"p"` for
//! integers), never floats, so properties like bistochasticity stay
//! decidable and emitted documents are byte-stable: canonical form gives
//! every rational exactly one rendering.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::birkhoff::{
    BirkhoffDecomposition, DecomposeStep, DecompositionError, Permutation, PermutationError,
};
use crate::matrix::SquareMatrix;
use crate::rational::{ParseRationalError, Rational};

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("n must be at least 1")]
    ZeroOrder,
    #[error("document declares n = {n} but has {rows} rows")]
    RowCount { n: usize, rows: usize },
    #[error("document declares n = {n} but row {row} has {len} entries")]
    RowLength { n: usize, row: usize, len: usize },
    #[error("entry ({row}, {col}): {source}")]
    Entry {
        row: usize,
        col: usize,
        source: ParseRationalError,
    },
    #[error("term {term}: weight: {source}")]
    Weight {
        term: usize,
        source: ParseRationalError,
    },
    #[error("term {term}: permutation has {len} entries, expected {n}")]
    PermutationLength { term: usize, len: usize, n: usize },
}

/// A square matrix of rational strings: `{ "n": 2, "rows": [["1/2", ...]] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub n: usize,
    pub rows: Vec<Vec<String>>,
}

impl MatrixDocument {
    pub fn parse_str(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Converts to a matrix, reporting malformed entries with their
    /// one-based position.
    pub fn to_matrix(&self) -> Result<SquareMatrix<Rational>, DocumentError> {
        if self.n == 0 {
            return Err(DocumentError::ZeroOrder);
        }
        if self.rows.len() != self.n {
            return Err(DocumentError::RowCount {
                n: self.n,
                rows: self.rows.len(),
            });
        }
        let mut rows = Vec::with_capacity(self.n);
        for (i, row) in self.rows.iter().enumerate() {
            if row.len() != self.n {
                return Err(DocumentError::RowLength {
                    n: self.n,
                    row: i + 1,
                    len: row.len(),
                });
            }
            let mut out = Vec::with_capacity(self.n);
            for (j, text) in row.iter().enumerate() {
                let value = text.parse().map_err(|source| DocumentError::Entry {
                    row: i + 1,
                    col: j + 1,
                    source,
                })?;
                out.push(value);
            }
            rows.push(out);
        }
        Ok(SquareMatrix::from_rows(rows).expect("shape checked above"))
    }

    /// Canonical document for a matrix: every entry in reduced form.
    pub fn from_matrix(m: &SquareMatrix<Rational>) -> Self {
        MatrixDocument {
            n: m.order(),
            rows: m
                .rows()
                .map(|row| row.iter().map(Rational::to_string).collect())
                .collect(),
        }
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDocument {
    pub weight: String,
    /// One-based images: `perm[k]` is the column of the 1 in row `k+1`.
    pub perm: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleDocument {
    /// One-based row indices.
    pub rows: Vec<usize>,
    /// One-based column indices.
    pub cols: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepDocument {
    pub weight: String,
    pub perm: Vec<usize>,
    /// Alternating cycles consumed while locating this permutation.
    pub cycles: Vec<CycleDocument>,
    /// The matrix left after removing this term; absent on the final step.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<Vec<Vec<String>>>,
}

/// An ordered convex combination of permutations:
/// `{ "n": 3, "terms": [{ "weight": "1/3", "perm": [3, 1, 2] }, ...] }`,
/// optionally carrying the extraction steps that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionDocument {
    pub n: usize,
    pub terms: Vec<TermDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub steps: Option<Vec<StepDocument>>,
}

/// How reading a decomposition document can fail: `Malformed` is a parse or
/// shape problem, the other variants are well-formed documents whose values
/// violate the decomposition invariants.
#[derive(Debug, Error)]
pub enum DecompositionReadError {
    #[error(transparent)]
    Malformed(#[from] DocumentError),
    #[error("term {term}: {source}")]
    BadPermutation {
        term: usize,
        source: PermutationError,
    },
    #[error(transparent)]
    Invalid(#[from] DecompositionError),
}

impl DecompositionDocument {
    pub fn parse_str(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_decomposition(&self) -> Result<BirkhoffDecomposition, DecompositionReadError> {
        if self.n == 0 {
            return Err(DocumentError::ZeroOrder.into());
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (idx, term) in self.terms.iter().enumerate() {
            let weight: Rational =
                term.weight
                    .parse()
                    .map_err(|source| DocumentError::Weight {
                        term: idx + 1,
                        source,
                    })?;
            if term.perm.len() != self.n {
                return Err(DocumentError::PermutationLength {
                    term: idx + 1,
                    len: term.perm.len(),
                    n: self.n,
                }
                .into());
            }
            let perm = Permutation::from_one_based(&term.perm).map_err(|source| {
                DecompositionReadError::BadPermutation {
                    term: idx + 1,
                    source,
                }
            })?;
            terms.push((weight, perm));
        }
        Ok(BirkhoffDecomposition::new(self.n, terms)?)
    }

    pub fn from_decomposition(d: &BirkhoffDecomposition) -> Self {
        DecompositionDocument {
            n: d.order(),
            terms: d
                .terms()
                .iter()
                .map(|(weight, perm)| TermDocument {
                    weight: weight.to_string(),
                    perm: perm.one_based(),
                })
                .collect(),
            steps: None,
        }
    }

    /// Attaches the per-step trace emitted by
    /// [`decompose_traced`](crate::birkhoff::decompose_traced).
    pub fn with_steps(mut self, steps: &[DecomposeStep]) -> Self {
        self.steps = Some(
            steps
                .iter()
                .map(|step| StepDocument {
                    weight: step.weight.to_string(),
                    perm: step.permutation.one_based(),
                    cycles: step
                        .cycles
                        .iter()
                        .map(|c| CycleDocument {
                            rows: c.rows().iter().map(|&i| i + 1).collect(),
                            cols: c.cols().iter().map(|&j| j + 1).collect(),
                        })
                        .collect(),
                    residual: step.residual.as_ref().map(|m| {
                        m.rows()
                            .map(|row| row.iter().map(Rational::to_string).collect())
                            .collect()
                    }),
                })
                .collect(),
        );
        self
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }
}

/// Output record of the `charpoly` command: human-readable rendering plus
/// the monic coefficient list in descending degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharPolyDocument {
    pub n: usize,
    pub text: String,
    pub coefficients: Vec<String>,
}

impl CharPolyDocument {
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_document_round_trips() {
        let doc = MatrixDocument::parse_str(
            r#"{ "n": 2, "rows": [["1/2", "1/2"], ["1/2", "1/2"]] }"#,
        )
        .unwrap();
        let m = doc.to_matrix().unwrap();
        assert_eq!(m[(0, 1)], Rational::new(1, 2));
        let back = MatrixDocument::from_matrix(&m);
        assert_eq!(back, doc);
        let reparsed = MatrixDocument::parse_str(&back.to_json_string()).unwrap();
        assert_eq!(reparsed, doc);
    }

    #[test]
    fn entry_errors_carry_positions() {
        let doc =
            MatrixDocument::parse_str(r#"{ "n": 2, "rows": [["1", "0"], ["0", "x"]] }"#).unwrap();
        match doc.to_matrix() {
            Err(DocumentError::Entry { row: 2, col: 2, .. }) => {}
            other => panic!("expected a positioned entry error, got {other:?}"),
        }
    }

    #[test]
    fn shape_errors_name_the_shape() {
        let doc =
            MatrixDocument::parse_str(r#"{ "n": 2, "rows": [["1", "0", "0"], ["0", "1"]] }"#)
                .unwrap();
        let err = doc.to_matrix().unwrap_err();
        assert_eq!(err.to_string(), "document declares n = 2 but row 1 has 3 entries");
        let doc = MatrixDocument::parse_str(r#"{ "n": 3, "rows": [["1"]] }"#).unwrap();
        let err = doc.to_matrix().unwrap_err();
        assert_eq!(err.to_string(), "document declares n = 3 but has 1 rows");
    }

    #[test]
    fn decomposition_document_round_trips() {
        let text = r#"{ "n": 3, "terms": [
            { "weight": "1/3", "perm": [3, 1, 2] },
            { "weight": "1/3", "perm": [2, 3, 1] },
            { "weight": "1/3", "perm": [1, 2, 3] }
        ] }"#;
        let doc = DecompositionDocument::parse_str(text).unwrap();
        let d = doc.to_decomposition().unwrap();
        assert_eq!(d.len(), 3);
        let back = DecompositionDocument::from_decomposition(&d);
        assert_eq!(back.terms, doc.terms);
        assert!(back.steps.is_none());
    }

    #[test]
    fn weight_sum_violations_are_domain_errors() {
        let text = r#"{ "n": 2, "terms": [
            { "weight": "1/2", "perm": [1, 2] },
            { "weight": "1/3", "perm": [2, 1] }
        ] }"#;
        let doc = DecompositionDocument::parse_str(text).unwrap();
        match doc.to_decomposition() {
            Err(DecompositionReadError::Invalid(DecompositionError::WeightSum { sum })) => {
                assert_eq!(sum, Rational::new(5, 6));
            }
            other => panic!("expected a weight-sum violation, got {other:?}"),
        }
    }

    #[test]
    fn non_bijections_are_domain_errors() {
        let text = r#"{ "n": 2, "terms": [{ "weight": "1", "perm": [1, 1] }] }"#;
        let doc = DecompositionDocument::parse_str(text).unwrap();
        assert!(matches!(
            doc.to_decomposition(),
            Err(DecompositionReadError::BadPermutation { term: 1, .. })
        ));
    }
}
