//! JSON interchange for algebras and matrices.
//!
//! Rational entries are written as canonical `"a/b"` strings (`"a"` when the
//! denominator is 1), prime-field entries as plain integers.

use std::path::Path;

use dqalg::algebra::MatrixSpace;
use dqalg::{FieldSpec, MatSubalgebra, Matrix, Scalar};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldDescriptor {
    Rational,
    Prime { p: u64 },
}

impl FieldDescriptor {
    pub fn to_spec(self) -> Result<FieldSpec, CliError> {
        match self {
            FieldDescriptor::Rational => Ok(FieldSpec::Rational),
            FieldDescriptor::Prime { p } => Ok(FieldSpec::prime(p)?),
        }
    }

    pub fn from_spec(f: FieldSpec) -> Self {
        match f {
            FieldSpec::Rational => FieldDescriptor::Rational,
            FieldSpec::Prime(p) => FieldDescriptor::Prime { p },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Text(String),
}

pub type Grid = Vec<Vec<Entry>>;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub field: FieldDescriptor,
    pub n: usize,
    pub basis: Vec<Grid>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub field: FieldDescriptor,
    pub matrix: Grid,
}

pub fn encode_scalar(s: &Scalar) -> Entry {
    match s {
        Scalar::Prime { value, .. } => Entry::Int(*value as i64),
        Scalar::Rational(_) => Entry::Text(s.to_string()),
    }
}

fn decode_scalar(f: FieldSpec, e: &Entry) -> Result<Scalar, CliError> {
    match e {
        Entry::Int(v) => match f {
            FieldSpec::Prime(p) if *v < 0 || *v as u64 >= p => {
                Err(CliError::Parse(format!("residue {v} outside [0, {}]", p - 1)))
            }
            _ => Ok(f.from_i64(*v)),
        },
        Entry::Text(t) => f.parse_scalar(t).map_err(|e| CliError::Parse(e.to_string())),
    }
}

pub fn encode_matrix(m: &Matrix) -> Grid {
    (0..m.rows()).map(|i| m.row(i).iter().map(encode_scalar).collect()).collect()
}

pub fn decode_matrix(f: FieldSpec, g: &Grid) -> Result<Matrix, CliError> {
    let rows = g.iter().map(|r| r.iter().map(|e| decode_scalar(f, e)).collect()).collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(f, rows).map_err(|e| CliError::Parse(e.to_string()))
}

impl AlgebraDocument {
    pub fn from_algebra(a: &MatSubalgebra, metadata: Option<Metadata>) -> Self {
        AlgebraDocument {
            field: FieldDescriptor::from_spec(a.field()),
            n: a.n(),
            basis: a.basis_matrices().iter().map(encode_matrix).collect(),
            metadata,
        }
    }

    /// Parses entries, then checks closure. Malformed entries or shapes are
    /// parse errors; a non-closed basis is a domain error.
    pub fn to_algebra(&self) -> Result<MatSubalgebra, CliError> {
        let f = self.field.to_spec()?;
        let mut basis = Vec::with_capacity(self.basis.len());
        for (i, g) in self.basis.iter().enumerate() {
            let m = decode_matrix(f, g)?;
            if m.rows() != self.n || m.cols() != self.n {
                return Err(CliError::Parse(format!(
                    "basis element {i} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    self.n,
                    self.n
                )));
            }
            basis.push(m);
        }
        Ok(MatSubalgebra::from_basis(f, self.n, &basis)?)
    }
}

impl MatrixDocument {
    pub fn to_matrix(&self) -> Result<Matrix, CliError> {
        decode_matrix(self.field.to_spec()?, &self.matrix)
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}
