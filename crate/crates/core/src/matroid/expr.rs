//! Construction expressions: the serialized form of every matroid.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::Matroid;

/// A construction tree. Building it yields a [`Matroid`]; every matroid
/// remembers the expression that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum MatroidExpr {
    Uniform {
        rank: usize,
        size: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Graphic {
        vertices: usize,
        edges: Vec<[usize; 2]>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Linear {
        prime: u64,
        columns: Vec<Vec<u64>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    RankTable {
        labels: Vec<String>,
        ranks: Vec<u8>,
    },
    Dual {
        of: Box<MatroidExpr>,
    },
    Delete {
        of: Box<MatroidExpr>,
        elements: Vec<String>,
    },
    Contract {
        of: Box<MatroidExpr>,
        elements: Vec<String>,
    },
    DirectSum {
        parts: Vec<MatroidExpr>,
    },
    PrincipalExtension {
        of: Box<MatroidExpr>,
        flat: Vec<String>,
        new: String,
    },
}

/// `e1, .., en`.
pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

impl MatroidExpr {
    pub fn uniform(rank: usize, size: usize) -> Self {
        MatroidExpr::Uniform {
            rank,
            size,
            labels: None,
        }
    }

    pub fn build(&self) -> Result<Matroid> {
        match self {
            MatroidExpr::Uniform { rank, size, labels } => {
                let labels = labels.clone().unwrap_or_else(|| default_labels(*size));
                if labels.len() != *size {
                    return Err(Error::structural(format!(
                        "uniform: {} labels for size {size}",
                        labels.len()
                    )));
                }
                Matroid::uniform_labeled(*rank, labels)
            }
            MatroidExpr::Graphic {
                vertices,
                edges,
                labels,
            } => {
                let labels = labels.clone().unwrap_or_else(|| default_labels(edges.len()));
                let edges: Vec<(usize, usize)> = edges.iter().map(|e| (e[0], e[1])).collect();
                Matroid::graphic(*vertices, &edges, labels)
            }
            MatroidExpr::Linear {
                prime,
                columns,
                labels,
            } => {
                let labels = labels
                    .clone()
                    .unwrap_or_else(|| default_labels(columns.len()));
                Matroid::linear(*prime, columns.clone(), labels)
            }
            MatroidExpr::RankTable { labels, ranks } => {
                Matroid::from_rank_table(labels.clone(), ranks.clone())
            }
            MatroidExpr::Dual { of } => Ok(of.build()?.dual()),
            MatroidExpr::Delete { of, elements } => {
                let m = of.build()?;
                let d = m.mask_of(elements)?;
                m.delete(d)
            }
            MatroidExpr::Contract { of, elements } => {
                let m = of.build()?;
                let c = m.mask_of(elements)?;
                m.contract(c)
            }
            MatroidExpr::DirectSum { parts } => {
                let built = parts
                    .iter()
                    .map(MatroidExpr::build)
                    .collect::<Result<Vec<_>>>()?;
                Matroid::direct_sum(&built)
            }
            MatroidExpr::PrincipalExtension { of, flat, new } => {
                let m = of.build()?;
                let f = m.mask_of(flat)?;
                m.principal_extension(f, new)
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("expressions always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_field_names() {
        let e = MatroidExpr::uniform(3, 7);
        assert_eq!(e.to_json(), r#"{"kind":"uniform","rank":3,"size":7}"#);
        let pe = MatroidExpr::PrincipalExtension {
            of: Box::new(e.clone()),
            flat: vec!["e1".into(), "e2".into()],
            new: "p".into(),
        };
        let text = pe.to_json();
        assert!(text.starts_with(r#"{"kind":"principal_extension","of":{"kind":"uniform""#));
        assert_eq!(MatroidExpr::from_json(&text).unwrap(), pe);
    }

    #[test]
    fn graphic_json_parses() {
        let text = r#"{"kind":"graphic","vertices":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]],"labels":["a","b","c","d","e","f"]}"#;
        let m = MatroidExpr::from_json(text).unwrap().build().unwrap();
        assert_eq!(m.len(), 6);
        assert_eq!(m.full_rank(), 3);
    }

    #[test]
    fn unknown_kind_is_parse_error() {
        let err = MatroidExpr::from_json(r#"{"kind":"free","size":3}"#).unwrap_err();
        assert!(matches!(err, Error::Parse(_)));
    }
}
