//! JSON documents for algebras (with optional metric and involution) and for graded cochain
//! families. Rationals travel as strings such as `"-3/4"` or `"2"`.

use std::collections::BTreeMap;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hodge::AdaptedMetric;
use crate::lie::{GradedLieAlgebra, LieError, SparseVec};
use crate::linalg::{Matrix, Rational};
use crate::normalization::Graded;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Json(String),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("invalid algebra data: {0}")]
    Algebra(#[from] LieError),
    #[error("invalid metric: {0}")]
    Metric(String),
    #[error("invalid involution: {0}")]
    Involution(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisEntry {
    pub label: String,
    pub degree: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: String,
    pub j: String,
    pub value: IndexMap<String, Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MetricDocument {
    /// Row-major Gram block per degree.
    pub blocks: BTreeMap<i32, Vec<Vec<Rational>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub name: String,
    pub basis: Vec<BasisEntry>,
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metric: Option<MetricDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub involution: Option<Vec<Vec<Rational>>>,
}

fn to_rows(m: &Matrix) -> Vec<Vec<Rational>> {
    m.to_dense()
}

fn from_rows(rows: &[Vec<Rational>], n: usize) -> Option<Matrix> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return None;
    }
    Some(Matrix::from_dense_with_cols(n, rows))
}

impl AlgebraDocument {
    pub fn from_algebra(g: &GradedLieAlgebra) -> Self {
        let basis =
            g.labels().iter().zip(g.degrees()).map(|(l, &d)| BasisEntry { label: l.clone(), degree: d }).collect();
        let brackets = g
            .structure()
            .iter()
            .map(|(&(i, j), v)| BracketEntry {
                i: g.label(i).to_string(),
                j: g.label(j).to_string(),
                value: v.iter().map(|(k, c)| (g.label(*k).to_string(), c.clone())).collect(),
            })
            .collect();
        AlgebraDocument { name: g.name().to_string(), basis, brackets, metric: None, involution: None }
    }

    pub fn with_metric(mut self, metric: &AdaptedMetric) -> Self {
        self.metric = Some(MetricDocument { blocks: metric.blocks().iter().map(|(d, m)| (*d, to_rows(m))).collect() });
        self
    }

    pub fn with_involution(mut self, theta: &Matrix) -> Self {
        self.involution = Some(to_rows(theta));
        self
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(text).map_err(|e| DocumentError::Json(e.to_string()))
    }

    /// Pretty-printed JSON with a trailing newline; stable for identical documents.
    pub fn emit(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    /// Builds the algebra; structural problems (duplicate or unknown labels, misordered or
    /// repeated brackets) are errors, axiom violations are left to `validate`.
    pub fn to_algebra(&self) -> Result<GradedLieAlgebra, DocumentError> {
        let basis: Vec<(String, i32)> = self.basis.iter().map(|b| (b.label.clone(), b.degree)).collect();
        let mut index: BTreeMap<&str, usize> = BTreeMap::new();
        for (i, b) in self.basis.iter().enumerate() {
            if index.insert(b.label.as_str(), i).is_some() {
                return Err(LieError::DuplicateLabel(b.label.clone()).into());
            }
        }
        let lookup = |l: &str| index.get(l).copied().ok_or_else(|| DocumentError::UnknownLabel(l.to_string()));
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for b in &self.brackets {
            let value: SparseVec =
                b.value.iter().map(|(l, c)| Ok((lookup(l)?, c.clone()))).collect::<Result<_, DocumentError>>()?;
            brackets.push((lookup(&b.i)?, lookup(&b.j)?, value));
        }
        Ok(GradedLieAlgebra::from_parts(self.name.clone(), basis, brackets)?)
    }

    pub fn metric(&self, g: &GradedLieAlgebra) -> Result<Option<AdaptedMetric>, DocumentError> {
        let Some(doc) = &self.metric else { return Ok(None) };
        let mut blocks = BTreeMap::new();
        for (&d, rows) in &doc.blocks {
            let n = g.indices_of_degree(d).len();
            let m = from_rows(rows, n).ok_or_else(|| DocumentError::Metric(format!("block {d} must be {n}×{n}")))?;
            blocks.insert(d, m);
        }
        AdaptedMetric::new(g, blocks).map(Some).map_err(|e| DocumentError::Metric(e.to_string()))
    }

    pub fn involution(&self, g: &GradedLieAlgebra) -> Result<Option<Matrix>, DocumentError> {
        let Some(rows) = &self.involution else { return Ok(None) };
        from_rows(rows, g.dim()).map(Some).ok_or_else(|| DocumentError::Involution(format!("must be {0}×{0}", g.dim())))
    }
}

/// A graded cochain family: coefficient lists per homogeneous degree over the canonical bases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDocument {
    pub form_degree: usize,
    pub components: BTreeMap<i32, Vec<Rational>>,
}

impl FamilyDocument {
    pub fn new(form_degree: usize, family: &Graded) -> Self {
        FamilyDocument { form_degree, components: family.components.clone() }
    }

    pub fn family(&self) -> Graded {
        Graded { components: self.components.clone() }
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        serde_json::from_str(text).map_err(|e| DocumentError::Json(e.to_string()))
    }

    pub fn emit(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry;

    #[test]
    fn round_trip_is_byte_identical() {
        for g in registry::corpus() {
            let text = AlgebraDocument::from_algebra(&g).emit();
            let doc = AlgebraDocument::parse(&text).unwrap();
            assert_eq!(doc.emit(), text);
            assert_eq!(doc.to_algebra().unwrap(), g);
        }
    }

    #[test]
    fn metric_round_trip() {
        let g = registry::get("heis3").unwrap();
        let m = AdaptedMetric::identity(&g);
        let doc = AlgebraDocument::from_algebra(&g).with_metric(&m);
        let back = AlgebraDocument::parse(&doc.emit()).unwrap();
        assert_eq!(back.metric(&g).unwrap(), Some(m));
    }

    #[test]
    fn rejects_bad_input() {
        let g = registry::get("heis3").unwrap();
        let text = AlgebraDocument::from_algebra(&g).emit();
        assert!(matches!(AlgebraDocument::parse(&text.replace("\"1\"", "\"1/0\"")), Err(DocumentError::Json(_))));
        assert!(matches!(AlgebraDocument::parse(&text.replace("\"1\"", "\"0.5\"")), Err(DocumentError::Json(_))));
        let dup = text.replacen("\"Y\"", "\"X\"", 1);
        assert!(matches!(
            AlgebraDocument::parse(&dup).unwrap().to_algebra(),
            Err(DocumentError::Algebra(LieError::DuplicateLabel(_)))
        ));
        let unknown = text.replace("\"Z\": \"1\"", "\"W\": \"1\"");
        assert!(matches!(AlgebraDocument::parse(&unknown).unwrap().to_algebra(), Err(DocumentError::UnknownLabel(_))));
    }
}
