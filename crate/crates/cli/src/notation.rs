//! Text forms for multisets (`{1^5,3^10,16^42}`) and vertex lists
//! (`[0, 3, 6]`), with line/column diagnostics.

use bhr_core::EdgeMultiset;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// A parsed multiset together with its source and order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultisetExpr {
    pub source: String,
    /// `(length, exponent)` in source order.
    pub pairs: Vec<(usize, usize)>,
    pub multiset: EdgeMultiset,
}

impl MultisetExpr {
    /// The explicit order if given, else size + 1.
    pub fn order(&self, explicit: Option<usize>) -> usize {
        explicit.unwrap_or(self.multiset.size() + 1)
    }
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Self { chars: src.chars().peekable(), line: 1, column: 1 }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.line, column: self.column, message: message.into() }
    }

    fn skip_space(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    /// Whitespace and at most one comma.
    fn skip_separator(&mut self) -> bool {
        self.skip_space();
        let comma = self.peek() == Some(',');
        if comma {
            self.bump();
            self.skip_space();
        }
        comma
    }

    fn number(&mut self, what: &str) -> Result<usize, ParseError> {
        let (line, column) = (self.line, self.column);
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.bump();
        }
        if digits.is_empty() {
            return Err(match self.peek() {
                Some(c) => self.error(format!("expected {what}, found `{c}`")),
                None => self.error(format!("expected {what}, found end of input")),
            });
        }
        digits
            .parse()
            .map_err(|_| ParseError { line, column, message: format!("{what} `{digits}` is too large") })
    }
}

/// Parses `{L^E, ...}`; braces optional, terms separated by commas and/or
/// whitespace, `E` defaults to 1.
pub fn parse_multiset(src: &str) -> Result<MultisetExpr, ParseError> {
    let mut cur = Cursor::new(src);
    cur.skip_space();
    let braced = cur.peek() == Some('{');
    if braced {
        cur.bump();
    }
    let mut pairs = Vec::new();
    loop {
        cur.skip_space();
        match cur.peek() {
            None if braced => return Err(cur.error("missing closing `}`")),
            None => break,
            Some('}') if braced => {
                cur.bump();
                cur.skip_space();
                if let Some(c) = cur.peek() {
                    return Err(cur.error(format!("unexpected `{c}` after closing `}}`")));
                }
                break;
            }
            _ => {}
        }
        let (line, column) = (cur.line, cur.column);
        let len = cur.number("a length")?;
        if len == 0 {
            return Err(ParseError { line, column, message: "lengths must be positive".into() });
        }
        let mut exp = 1;
        cur.skip_space();
        if cur.peek() == Some('^') {
            cur.bump();
            cur.skip_space();
            let (line, column) = (cur.line, cur.column);
            exp = cur.number("an exponent")?;
            if exp == 0 {
                return Err(ParseError { line, column, message: "exponents must be at least 1".into() });
            }
        }
        pairs.push((len, exp));
        let before = (cur.line, cur.column);
        let comma = cur.skip_separator();
        let moved = (cur.line, cur.column) != before;
        match cur.peek() {
            None | Some('}') => {}
            Some(c) if c.is_ascii_digit() && (comma || moved) => {}
            Some(c) => return Err(cur.error(format!("expected `,` or whitespace, found `{c}`"))),
        }
        if comma && matches!(cur.peek(), None | Some('}')) {
            return Err(cur.error("trailing `,`"));
        }
    }
    if pairs.is_empty() {
        return Err(cur.error("empty multiset"));
    }
    let multiset = EdgeMultiset::from_pairs(pairs.iter().copied());
    Ok(MultisetExpr { source: src.to_string(), pairs, multiset })
}

/// `{1^5,3^10,7,16^42}`: ascending lengths, exponent 1 left implicit.
pub fn format_multiset(m: &EdgeMultiset) -> String {
    let terms: Vec<String> = m
        .iter()
        .map(|(l, c)| if c == 1 { l.to_string() } else { format!("{l}^{c}") })
        .collect();
    format!("{{{}}}", terms.join(","))
}

/// Vertices as `[0, 3, 6]`, `0 3 6` or `0,3,6`.
pub fn parse_vertices(src: &str) -> Result<Vec<usize>, ParseError> {
    let mut cur = Cursor::new(src);
    cur.skip_space();
    let bracketed = cur.peek() == Some('[');
    if bracketed {
        cur.bump();
    }
    let mut out = Vec::new();
    loop {
        cur.skip_space();
        match cur.peek() {
            None if bracketed => return Err(cur.error("missing closing `]`")),
            None => break,
            Some(']') if bracketed => {
                cur.bump();
                cur.skip_space();
                if let Some(c) = cur.peek() {
                    return Err(cur.error(format!("unexpected `{c}` after closing `]`")));
                }
                break;
            }
            _ => {}
        }
        out.push(cur.number("a vertex")?);
        cur.skip_separator();
    }
    if out.is_empty() {
        return Err(cur.error("empty path"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn braces_and_separators_are_optional() {
        let a = parse_multiset("{1^5,3^10,16^42}").unwrap();
        let b = parse_multiset("1^5 3^10 16^42").unwrap();
        assert_eq!(a.multiset, b.multiset);
        assert_eq!(a.order(None), 58);
        let c = parse_multiset("{1^5, 3^10, 7, 16^42}").unwrap();
        assert_eq!(c.multiset.count(7), 1);
        assert_eq!(format_multiset(&c.multiset), "{1^5,3^10,7,16^42}");
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_multiset("{1^5,\n 3^0}").unwrap_err();
        assert_eq!((e.line, e.column), (2, 4));
        let e = parse_multiset("{1^5,3^10").unwrap_err();
        assert_eq!((e.line, e.column), (1, 10));
        let e = parse_multiset("1^5;3").unwrap_err();
        assert_eq!((e.line, e.column), (1, 4));
        assert!(parse_multiset("{}").is_err());
        assert!(parse_multiset("{1,}").is_err());
        assert!(parse_multiset("1^").is_err());
    }

    #[test]
    fn vertex_lists() {
        assert_eq!(parse_vertices("[0, 3, 6]").unwrap(), vec![0, 3, 6]);
        assert_eq!(parse_vertices("0 3\n6").unwrap(), vec![0, 3, 6]);
        let e = parse_vertices("[0, x]").unwrap_err();
        assert_eq!((e.line, e.column), (1, 5));
    }
}
