use std::path::Path;

use freediv::poly::ParseError;
use freediv::{Polynomial, Ring, VectorField};
use serde::{Deserialize, Serialize};

/// One divisor description, read from a TOML document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivisorInput {
    pub label: String,
    pub variables: Vec<String>,
    pub f: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<i64>>,
    /// Rows of an `n×n` matrix whose columns are the basis fields.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub saito_matrix: Option<Vec<Vec<String>>>,
}

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid input document: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("{context}: {source}")]
    Polynomial { context: String, source: ParseError },
    #[error("{0}")]
    Shape(String),
}

impl DivisorInput {
    pub fn from_path(path: &Path) -> Result<Self, InputError> {
        let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_toml(&text)
    }

    pub fn from_toml(text: &str) -> Result<Self, InputError> {
        let input: DivisorInput = toml::from_str(text)?;
        input.validate()?;
        Ok(input)
    }

    fn validate(&self) -> Result<(), InputError> {
        let n = self.variables.len();
        if n == 0 {
            return Err(InputError::Shape("no variables".into()));
        }
        if let Some(w) = &self.weights {
            if w.len() != n {
                return Err(InputError::Shape(format!("{} weights for {n} variables", w.len())));
            }
        }
        if let Some(m) = &self.saito_matrix {
            if m.len() != n || m.iter().any(|r| r.len() != n) {
                return Err(InputError::Shape(format!("saito_matrix must be {n}×{n}")));
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> Result<Ring, InputError> {
        Ring::new(&self.variables).map_err(|source| InputError::Polynomial {
            context: "variables".into(),
            source,
        })
    }

    pub fn polynomial(&self, ring: &Ring) -> Result<Polynomial, InputError> {
        ring.parse(&self.f).map_err(|source| InputError::Polynomial {
            context: "f".into(),
            source,
        })
    }

    /// Columns of the given matrix as fields.
    pub fn saito_fields(&self, ring: &Ring) -> Result<Option<Vec<VectorField>>, InputError> {
        let Some(rows) = &self.saito_matrix else {
            return Ok(None);
        };
        let n = rows.len();
        let mut cols = vec![Vec::with_capacity(n); n];
        for (i, row) in rows.iter().enumerate() {
            for (j, text) in row.iter().enumerate() {
                let p = ring.parse(text).map_err(|source| InputError::Polynomial {
                    context: format!("saito_matrix[{i}][{j}]"),
                    source,
                })?;
                cols[j].push(p);
            }
        }
        Ok(Some(cols.into_iter().map(VectorField::new).collect()))
    }
}
