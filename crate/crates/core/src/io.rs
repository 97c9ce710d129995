//! Complex files and their JSON form.
//!
//! A complex file starts with `m=<int>`; every later line that is neither
//! blank nor a `#` comment lists one facet as whitespace-separated vertices.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::simplicial::{SimplicialComplex, SimplicialError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing 'm=<int>' header")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error(transparent)]
    Complex(#[from] SimplicialError),
    #[error("invalid complex JSON: {0}")]
    Json(String),
}

fn significant(line: &str) -> Option<&str> {
    let t = line.trim();
    (!t.is_empty() && !t.starts_with('#')).then_some(t)
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter_map(|(i, l)| significant(l).map(|t| (i + 1, t)));
    let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let m_text = header
        .strip_prefix("m")
        .map(str::trim_start)
        .and_then(|r| r.strip_prefix('='))
        .ok_or(ParseError::MissingHeader)?;
    let m: u32 = m_text.trim().parse().map_err(|_| ParseError::Syntax {
        line: hline,
        message: format!("bad vertex count '{}'", m_text.trim()),
    })?;
    let mut facets = Vec::new();
    for (line, t) in lines {
        let facet = t
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>().map_err(|_| ParseError::Syntax {
                    line,
                    message: format!("bad vertex '{tok}'"),
                })
            })
            .collect::<Result<Vec<u32>, _>>()?;
        facets.push(facet);
    }
    Ok(SimplicialComplex::from_facets(m, facets)?)
}

/// Canonical file text: header and facets in canonical order.
pub fn write_complex(k: &SimplicialComplex) -> String {
    let mut out = format!("m={}\n", k.m());
    for f in k.facets() {
        let vs: Vec<String> = f.vertices().map(|v| v.to_string()).collect();
        out.push_str(&vs.join(" "));
        out.push('\n');
    }
    out
}

/// `{"m":3,"facets":[[1,2],[1,3],[2,3]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub m: u32,
    pub facets: Vec<Vec<u32>>,
}

impl From<&SimplicialComplex> for ComplexJson {
    fn from(k: &SimplicialComplex) -> Self {
        ComplexJson {
            m: k.m(),
            facets: k.facets().into_iter().map(|f| f.to_vec()).collect(),
        }
    }
}

impl ComplexJson {
    pub fn to_complex(&self) -> Result<SimplicialComplex, ParseError> {
        Ok(SimplicialComplex::from_facets(self.m, &self.facets)?)
    }
}

pub fn complex_to_json(k: &SimplicialComplex) -> String {
    serde_json::to_string(&ComplexJson::from(k)).expect("plain data serializes")
}

pub fn complex_from_json(text: &str) -> Result<SimplicialComplex, ParseError> {
    let j: ComplexJson = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    j.to_complex()
}
