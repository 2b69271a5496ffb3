//! JSON documents. Every document carries `"schema": "mvf-rmf/1"`; readers
//! accept documents without the field.

use mvf_rmf_core::{
    CompactKind, CompactVector, FunctionCounts, OrbitTable, Radix, RmfMatrix, SpectrumBasis,
    SymmetryClass, ValueVector,
};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

pub const SCHEMA: &str = "mvf-rmf/1";

fn schema() -> String {
    SCHEMA.to_string()
}

fn check_schema(found: &str) -> Result<()> {
    if found != SCHEMA {
        return Err(CliError::Usage(format!(
            "unsupported schema {found:?}, expected {SCHEMA:?}"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueVectorDoc {
    #[serde(default = "schema")]
    pub schema: String,
    pub p: u32,
    pub n: usize,
    pub values: Vec<u32>,
}

impl From<&ValueVector> for ValueVectorDoc {
    fn from(f: &ValueVector) -> Self {
        ValueVectorDoc {
            schema: schema(),
            p: f.p().get(),
            n: f.n(),
            values: f.values().to_vec(),
        }
    }
}

impl ValueVectorDoc {
    pub fn into_value_vector(self) -> Result<ValueVector> {
        check_schema(&self.schema)?;
        Ok(ValueVector::new(Radix::new(self.p)?, self.n, self.values)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    #[serde(default = "schema")]
    pub schema: String,
    pub p: u32,
    pub n: usize,
    pub rows: Vec<Vec<u32>>,
}

impl From<&RmfMatrix> for MatrixDoc {
    fn from(m: &RmfMatrix) -> Self {
        MatrixDoc {
            schema: schema(),
            p: m.p().get(),
            n: m.n(),
            rows: m.rows().map(<[u32]>::to_vec).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitDoc {
    pub representative: String,
    pub rank: usize,
    pub members: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitTableDoc {
    #[serde(default = "schema")]
    pub schema: String,
    pub p: u32,
    pub n: usize,
    pub orbits: Vec<OrbitDoc>,
}

impl From<&OrbitTable> for OrbitTableDoc {
    fn from(t: &OrbitTable) -> Self {
        OrbitTableDoc {
            schema: schema(),
            p: t.p().get(),
            n: t.n(),
            orbits: t
                .orbits()
                .iter()
                .enumerate()
                .map(|(rank, o)| OrbitDoc {
                    representative: o.representative().to_string(),
                    rank,
                    members: o.members().map(|m| m.to_string()).collect(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KindDoc {
    Rotation,
    Symmetric,
}

impl From<CompactKind> for KindDoc {
    fn from(k: CompactKind) -> Self {
        match k {
            CompactKind::Rotation => KindDoc::Rotation,
            CompactKind::Symmetric => KindDoc::Symmetric,
        }
    }
}

impl From<KindDoc> for CompactKind {
    fn from(k: KindDoc) -> Self {
        match k {
            KindDoc::Rotation => CompactKind::Rotation,
            KindDoc::Symmetric => CompactKind::Symmetric,
        }
    }
}

/// Compact vector with the representative of each rank alongside.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompactDoc {
    #[serde(default = "schema")]
    pub schema: String,
    pub p: u32,
    pub n: usize,
    pub kind: KindDoc,
    pub entries: Vec<u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub representatives: Vec<String>,
}

impl CompactDoc {
    pub fn new(c: &CompactVector, table: &OrbitTable) -> Self {
        CompactDoc {
            schema: schema(),
            p: c.p().get(),
            n: c.n(),
            kind: c.kind().into(),
            entries: c.entries().to_vec(),
            representatives: table
                .orbits()
                .iter()
                .map(|o| o.representative().to_string())
                .collect(),
        }
    }

    pub fn into_compact(self) -> Result<CompactVector> {
        check_schema(&self.schema)?;
        Ok(CompactVector::new(
            Radix::new(self.p)?,
            self.n,
            self.kind.into(),
            self.entries,
        )?)
    }
}

/// On-disk form of a spectrum basis; columns in rank order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisDoc {
    #[serde(default = "schema")]
    pub schema: String,
    pub p: u32,
    pub n: usize,
    pub columns: Vec<Vec<u32>>,
}

impl From<&SpectrumBasis> for BasisDoc {
    fn from(b: &SpectrumBasis) -> Self {
        BasisDoc {
            schema: schema(),
            p: b.p().get(),
            n: b.n(),
            columns: b.columns().iter().map(|c| c.entries().to_vec()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDoc {
    #[serde(default = "schema")]
    pub schema: String,
    pub p: u32,
    pub n: usize,
    pub class: String,
}

impl ClassDoc {
    pub fn new(p: Radix, n: usize, class: SymmetryClass) -> Self {
        ClassDoc {
            schema: schema(),
            p: p.get(),
            n,
            class: class.as_str().to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumDoc {
    #[serde(default = "schema")]
    pub schema: String,
    pub p: u32,
    pub n: usize,
    pub entries: Vec<u32>,
    pub class: String,
    pub distinguishing_classes: usize,
}

/// Exact counts; the big ones as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountDoc {
    #[serde(default = "schema")]
    pub schema: String,
    pub p: u32,
    pub n: usize,
    pub orbits: u64,
    pub kappa: u64,
    pub symmetric_functions: String,
    pub rotation_symmetric_functions_inclusive: String,
    pub strictly_rotation_symmetric_functions: String,
}

impl CountDoc {
    pub fn new(p: Radix, n: usize, c: &FunctionCounts) -> Self {
        CountDoc {
            schema: schema(),
            p: p.get(),
            n,
            orbits: c.orbits,
            kappa: c.kappa,
            symmetric_functions: c.symmetric.to_string(),
            rotation_symmetric_functions_inclusive: c.rotation_inclusive.to_string(),
            strictly_rotation_symmetric_functions: c.rotation_strict.to_string(),
        }
    }
}
