//! The line-oriented `.pbci` table format.
//!
//! ```text
//! pbci 1
//! # comment
//! elements: a b 1
//! unit: 1
//! arrow:
//! 1 a b
//! b 1 a
//! a b 1
//! squig: same
//! ```
//!
//! Row `i`, column `j` of a table is `eᵢ op eⱼ`. `squig: same` copies the
//! arrow table (BCI input).

use std::collections::HashSet;
use std::fmt::Write as _;

use super::ParseError;
use crate::algebra::AlgebraSpec;

pub const HEADER: &str = "pbci 1";

struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

/// Non-blank lines with comments stripped, tokenized on whitespace.
/// Columns are 1-based character offsets.
fn lines(text: &str, first_line: usize) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (col, (byte, ch)) in content.char_indices().enumerate() {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some((byte, col)),
                (true, Some((b, c))) => {
                    tokens.push(Token { text: &content[b..byte], column: c + 1 });
                    start = None;
                }
                _ => {}
            }
        }
        if let Some((b, c)) = start {
            tokens.push(Token { text: &content[b..], column: c + 1 });
        }
        if !tokens.is_empty() {
            out.push(Line { number: first_line + i, tokens });
        }
    }
    out
}

struct Parser<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    last_line: usize,
}

/// `(text, column)` pairs.
type Tokens<'a> = Vec<(&'a str, usize)>;

impl<'a> Parser<'a> {
    fn next(&mut self, what: &str) -> Result<&Line<'a>, ParseError> {
        let line = self.lines.get(self.pos).ok_or_else(|| ParseError::Syntax {
            line: self.last_line + 1,
            column: 1,
            message: format!("unexpected end of input, expected {what}"),
        })?;
        self.pos += 1;
        Ok(line)
    }

    /// A line starting with `keyword`; returns the remaining tokens.
    fn keyword(&mut self, keyword: &str) -> Result<(usize, Tokens<'a>), ParseError> {
        let line = self.next(&format!("`{keyword}`"))?;
        let head = &line.tokens[0];
        if head.text != keyword {
            return Err(ParseError::Syntax {
                line: line.number,
                column: head.column,
                message: format!("expected `{keyword}`, found `{}`", head.text),
            });
        }
        Ok((line.number, line.tokens[1..].iter().map(|t| (t.text, t.column)).collect()))
    }

    fn table(&mut self, label: &str, names: &HashSet<&str>, n: usize) -> Result<Vec<Vec<String>>, ParseError> {
        let mut rows = Vec::with_capacity(n);
        for r in 0..n {
            let line = self.next(&format!("row {} of the {label} table", r + 1))?;
            if line.tokens[0].text.ends_with(':') {
                return Err(ParseError::Shape {
                    line: line.number,
                    message: format!("{label} table has {r} rows, expected {n}"),
                });
            }
            if line.tokens.len() != n {
                return Err(ParseError::Shape {
                    line: line.number,
                    message: format!("{label} table row {} has {} entries, expected {n}", r + 1, line.tokens.len()),
                });
            }
            let mut row = Vec::with_capacity(n);
            for t in &line.tokens {
                if !names.contains(t.text) {
                    return Err(ParseError::Symbol { line: line.number, column: t.column, symbol: t.text.to_owned() });
                }
                row.push(t.text.to_owned());
            }
            rows.push(row);
        }
        Ok(rows)
    }
}

pub fn parse_algebra(text: &str) -> Result<AlgebraSpec, ParseError> {
    parse_block(text, 1)
}

fn parse_block(text: &str, first_line: usize) -> Result<AlgebraSpec, ParseError> {
    let lines = lines(text, first_line);
    let last_line = lines.last().map_or(first_line, |l| l.number);
    let mut p = Parser { lines, pos: 0, last_line };

    let (line, rest) = p.keyword("pbci")?;
    match rest.as_slice() {
        [("1", _)] => {}
        [(v, col)] => {
            return Err(ParseError::Syntax { line, column: *col, message: format!("unsupported format version `{v}`") })
        }
        _ => return Err(ParseError::Syntax { line, column: 1, message: "header must be `pbci 1`".into() }),
    }

    let (line, rest) = p.keyword("elements:")?;
    if rest.is_empty() {
        return Err(ParseError::Syntax { line, column: 1, message: "no elements declared".into() });
    }
    let mut seen = HashSet::new();
    for &(name, column) in &rest {
        if name.contains(['=', ',']) {
            return Err(ParseError::Syntax {
                line,
                column,
                message: format!("element name `{name}` contains `=` or `,`"),
            });
        }
        if !seen.insert(name) {
            return Err(ParseError::Syntax { line, column, message: format!("element `{name}` declared twice") });
        }
    }
    let names: Vec<String> = rest.iter().map(|(s, _)| s.to_string()).collect();
    let n = names.len();

    let (line, rest) = p.keyword("unit:")?;
    let unit = match rest.as_slice() {
        [(u, col)] if !seen.contains(u) => {
            return Err(ParseError::Symbol { line, column: *col, symbol: u.to_string() })
        }
        [(u, _)] => u.to_string(),
        _ => return Err(ParseError::Syntax { line, column: 1, message: "`unit:` takes exactly one symbol".into() }),
    };

    let (line, rest) = p.keyword("arrow:")?;
    if let Some((_, column)) = rest.first() {
        return Err(ParseError::Syntax { line, column: *column, message: "table rows start on the next line".into() });
    }
    let arrow = p.table("arrow", &seen, n)?;

    let (line, rest) = p.keyword("squig:")?;
    let squig = match rest.as_slice() {
        [] => p.table("squig", &seen, n)?,
        [("same", _)] => arrow.clone(),
        [(_, column), ..] => {
            return Err(ParseError::Syntax {
                line,
                column: *column,
                message: "`squig:` is followed by table rows or `same`".into(),
            })
        }
    };

    if let Some(extra) = p.lines.get(p.pos) {
        if extra.tokens[0].text.ends_with(':') || extra.tokens.len() != n {
            return Err(ParseError::Syntax {
                line: extra.number,
                column: extra.tokens[0].column,
                message: "unexpected content after the squig table".into(),
            });
        }
        return Err(ParseError::Shape { line: extra.number, message: format!("table has more than {n} rows") });
    }

    Ok(AlgebraSpec { names, unit, arrow, squig })
}

/// Parses a stream of algebras, each starting with its own `pbci` header.
pub fn parse_algebras(text: &str) -> Result<Vec<AlgebraSpec>, ParseError> {
    let mut starts = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        if content.split_whitespace().next() == Some("pbci") {
            starts.push(i);
        }
    }
    let all: Vec<&str> = text.lines().collect();
    if starts.is_empty() {
        return if all.iter().all(|l| l.split('#').next().unwrap_or("").trim().is_empty()) {
            Ok(Vec::new())
        } else {
            parse_block(text, 1).map(|s| vec![s])
        };
    }
    if let Some(i) = all[..starts[0]].iter().position(|l| !l.split('#').next().unwrap_or("").trim().is_empty()) {
        return Err(ParseError::Syntax { line: i + 1, column: 1, message: "content before the first header".into() });
    }
    starts.push(all.len());
    starts.windows(2).map(|w| parse_block(&all[w[0]..w[1]].join("\n"), w[0] + 1)).collect()
}

/// Canonical text for a spec. `parse_algebra(&write_algebra(s)) == s` for
/// every spec whose symbols are valid tokens.
pub fn write_algebra(spec: &AlgebraSpec) -> String {
    let mut out = String::new();
    writeln!(out, "{HEADER}").unwrap();
    writeln!(out, "elements: {}", spec.names.join(" ")).unwrap();
    writeln!(out, "unit: {}", spec.unit).unwrap();
    out.push_str("arrow:\n");
    for row in &spec.arrow {
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out.push_str("squig:\n");
    for row in &spec.squig {
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::validate;

    const PROPER5: &str = include_str!("../../fixtures/proper5.pbci");

    #[test]
    fn parses_fixture() {
        let spec = parse_algebra(PROPER5).unwrap();
        assert_eq!(spec.names, ["a", "b", "c", "d", "1"]);
        assert_eq!(spec.unit, "1");
        assert_eq!(spec.squig[1], ["c", "1", "1", "d", "1"]);
        assert!(validate(&spec).is_ok());
    }

    #[test]
    fn squig_same() {
        let spec = parse_algebra(include_str!("../../fixtures/cyclic3.pbci")).unwrap();
        assert_eq!(spec.arrow, spec.squig);
    }

    #[test]
    fn short_row_is_a_shape_error_at_its_line() {
        let text = PROPER5.replace("b b 1 d 1", "b b 1 d");
        let line = text.lines().position(|l| l == "b b 1 d").unwrap() + 1;
        assert_eq!(
            parse_algebra(&text),
            Err(ParseError::Shape { line, message: "arrow table row 3 has 4 entries, expected 5".into() })
        );
    }

    #[test]
    fn missing_row_is_a_shape_error() {
        let text = "pbci 1\nelements: a 1\nunit: 1\narrow:\n1 1\nsquig: same\n";
        assert!(matches!(parse_algebra(text), Err(ParseError::Shape { line: 6, .. })));
    }

    #[test]
    fn undeclared_symbol() {
        let text = "pbci 1\nelements: a 1\nunit: 1\narrow:\n1 1\na q\nsquig: same\n";
        assert_eq!(parse_algebra(text), Err(ParseError::Symbol { line: 6, column: 3, symbol: "q".into() }));
        let text = "pbci 1\nelements: a 1\nunit: e\n";
        assert!(matches!(parse_algebra(text), Err(ParseError::Symbol { line: 3, .. })));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert!(matches!(parse_algebra("pbci 2\n"), Err(ParseError::Syntax { line: 1, column: 6, .. })));
        assert!(matches!(parse_algebra("\n\nelements: a\n"), Err(ParseError::Syntax { line: 3, column: 1, .. })));
        assert!(matches!(
            parse_algebra("pbci 1\nelements: a a\n"),
            Err(ParseError::Syntax { line: 2, column: 13, .. })
        ));
        let truncated = "pbci 1\nelements: a 1\nunit: 1\n";
        assert!(matches!(parse_algebra(truncated), Err(ParseError::Syntax { line: 4, .. })));
        let trailing = format!("{PROPER5}extra:\n");
        assert!(matches!(parse_algebra(&trailing), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn comments_and_blank_lines() {
        let text =
            "# leading\n\npbci 1 # header\nelements: a 1\n\nunit: 1\narrow:  # rows follow\n1 1\na 1\nsquig: same\n";
        let spec = parse_algebra(text).unwrap();
        assert_eq!(spec.arrow, vec![vec!["1", "1"], vec!["a", "1"]]);
    }

    #[test]
    fn write_then_parse() {
        let spec = parse_algebra(PROPER5).unwrap();
        assert_eq!(parse_algebra(&write_algebra(&spec)).unwrap(), spec);
    }

    #[test]
    fn stream_of_algebras() {
        let one = parse_algebra(PROPER5).unwrap();
        let two = parse_algebra(include_str!("../../fixtures/cyclic3.pbci")).unwrap();
        let text = format!("{}\n{}", write_algebra(&one), write_algebra(&two));
        assert_eq!(parse_algebras(&text).unwrap(), vec![one, two]);
        assert_eq!(parse_algebras("").unwrap(), vec![]);
        let bad = format!("{}\npbci 1\nelements: a\n", write_algebra(&parse_algebra(PROPER5).unwrap()));
        assert!(matches!(parse_algebras(&bad), Err(ParseError::Syntax { line: 19, .. })));
    }
}
