//! The line-oriented complex document. A `#` starts a comment anywhere on a
//! line; the first significant line must be `n <vertex count>`; every later
//! significant line is one facet as whitespace-separated vertex labels.

use hvec_core::{ComplexError, SimplicialComplex};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("document has no `n <vertex count>` line")]
    MissingHeader,
    #[error(transparent)]
    Validation(#[from] ComplexError),
}

fn syntax(line: usize, message: impl Into<String>) -> DocumentError {
    DocumentError::Syntax { line, message: message.into() }
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex, DocumentError> {
    let mut n: Option<u32> = None;
    let mut facets: Vec<Vec<u32>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        if n.is_none() {
            if tokens.next() != Some("n") {
                return Err(syntax(line, "expected `n <vertex count>` before any facet"));
            }
            let count = tokens
                .next()
                .ok_or_else(|| syntax(line, "missing vertex count after `n`"))?
                .parse::<u32>()
                .map_err(|_| syntax(line, "vertex count must be an integer"))?;
            if tokens.next().is_some() {
                return Err(syntax(line, "unexpected tokens after the vertex count"));
            }
            n = Some(count);
        } else {
            let facet = tokens
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|_| syntax(line, format!("`{t}` is not a vertex label")))
                })
                .collect::<Result<Vec<u32>, _>>()?;
            facets.push(facet);
        }
    }
    let n = n.ok_or(DocumentError::MissingHeader)?;
    Ok(SimplicialComplex::from_facets(n, facets)?)
}

/// Renders a complex in the same format `parse_complex` reads.
pub fn emit_complex(cx: &SimplicialComplex) -> String {
    let mut out = format!("n {}\n", cx.n());
    for facet in cx.facets() {
        let labels: Vec<String> = facet.iter().map(|v| v.to_string()).collect();
        out.push_str(&labels.join(" "));
        out.push('\n');
    }
    out
}
