//! Text formats: the `.pbci` table format, self-map specs, and reports.

mod format;
mod report;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{Element, PseudoBciAlgebra};
use crate::derivations::SelfMap;

pub use format::{parse_algebra, parse_algebras, write_algebra, HEADER};
pub use report::{
    analyze, render_report, AnalysisReport, BranchRecord, ClassDerivations, DerivationRecord, DsRecord, Format,
    MonoidRecord, TOOL_VERSION,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("line {line}, column {column}: undeclared symbol `{symbol}`")]
    Symbol { line: usize, column: usize, symbol: String },
    #[error("line {line}: {message}")]
    Shape { line: usize, message: String },
    #[error("map leaves {} element(s) unassigned: {}", .missing.len(), .missing.join(" "))]
    IncompleteMap { missing: Vec<String> },
    #[error("unknown element `{symbol}`")]
    UnknownSymbol { symbol: String },
}

/// Parses a self-map either as images in element order (`d d d 1 d`) or as
/// comma-separated assignments (`a=d, b=d, c=d, d=1, 1=d`).
pub fn parse_selfmap(text: &str, a: &PseudoBciAlgebra) -> Result<SelfMap, ParseError> {
    let lookup = |s: &str| a.element(s).ok_or_else(|| ParseError::UnknownSymbol { symbol: s.to_owned() });
    let images: Vec<Element> = if text.contains('=') {
        let mut assigned: BTreeMap<usize, Element> = BTreeMap::new();
        for (i, part) in text.split(',').enumerate() {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (lhs, rhs) = part.split_once('=').ok_or_else(|| ParseError::Syntax {
                line: 1,
                column: column_of(text, part),
                message: format!("assignment {} is missing `=`", i + 1),
            })?;
            let (x, y) = (lookup(lhs.trim())?, lookup(rhs.trim())?);
            if assigned.insert(x.index(), y).is_some() {
                return Err(ParseError::Syntax {
                    line: 1,
                    column: column_of(text, part),
                    message: format!("`{}` assigned twice", lhs.trim()),
                });
            }
        }
        let missing: Vec<String> =
            a.elements().filter(|x| !assigned.contains_key(&x.index())).map(|x| a.name(x).to_owned()).collect();
        if !missing.is_empty() {
            return Err(ParseError::IncompleteMap { missing });
        }
        assigned.into_values().collect()
    } else {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() > a.size() {
            return Err(ParseError::Syntax {
                line: 1,
                column: column_of(text, tokens[a.size()]),
                message: format!("{} images given for {} elements", tokens.len(), a.size()),
            });
        }
        let images = tokens.iter().map(|t| lookup(t)).collect::<Result<Vec<_>, _>>()?;
        if images.len() < a.size() {
            return Err(ParseError::IncompleteMap {
                missing: a.elements().skip(images.len()).map(|x| a.name(x).to_owned()).collect(),
            });
        }
        images
    };
    Ok(SelfMap::new(a, images).expect("one in-range image per element"))
}

fn column_of(text: &str, part: &str) -> usize {
    part.as_ptr() as usize - text.as_ptr() as usize + 1
}
