//! Line-oriented tokenizer. `#` starts a comment that runs to end of line.

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum TokenKind {
    /// Keyword, identifier or gate/projection/model name.
    Word(String),
    /// Decimal or `n/d` literal, already evaluated.
    Number(f64),
    LParen,
    RParen,
    Comma,
    Slash,
    Newline,
    Eof,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Word(w) => write!(f, "{w:?}"),
            TokenKind::Number(x) => write!(f, "number {x}"),
            TokenKind::LParen => f.write_str("\"(\""),
            TokenKind::RParen => f.write_str("\")\""),
            TokenKind::Comma => f.write_str("\",\""),
            TokenKind::Slash => f.write_str("\"/\""),
            TokenKind::Newline => f.write_str("end of line"),
            TokenKind::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    pub line: usize,
    pub col: usize,
}

/// A character the lexer cannot start a token with, or a malformed number.
#[derive(Debug, Clone, PartialEq)]
pub struct LexError {
    pub line: usize,
    pub col: usize,
    pub found: String,
}

pub fn tokenize(src: &str) -> Result<Vec<Token>, LexError> {
    let mut out = Vec::new();
    let mut line_no = 0;
    for (idx, raw) in src.split('\n').enumerate() {
        line_no = idx + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let ch = chars[i];
            let col = i + 1;
            let push = |out: &mut Vec<Token>, kind| {
                out.push(Token {
                    kind,
                    line: line_no,
                    col,
                })
            };
            match ch {
                '#' => break,
                c if c.is_whitespace() => i += 1,
                '(' => {
                    push(&mut out, TokenKind::LParen);
                    i += 1;
                }
                ')' => {
                    push(&mut out, TokenKind::RParen);
                    i += 1;
                }
                ',' => {
                    push(&mut out, TokenKind::Comma);
                    i += 1;
                }
                '/' => {
                    push(&mut out, TokenKind::Slash);
                    i += 1;
                }
                c if c.is_ascii_alphabetic() || c == '_' => {
                    let start = i;
                    while i < chars.len() && is_word_char(chars[i]) {
                        i += 1;
                    }
                    let word: String = chars[start..i].iter().collect();
                    push(&mut out, TokenKind::Word(word));
                }
                c if c.is_ascii_digit() || c == '-' || c == '+' || c == '.' => {
                    let (value, end) = number(&chars, i).ok_or_else(|| LexError {
                        line: line_no,
                        col,
                        found: chars[i..]
                            .iter()
                            .take_while(|c| !c.is_whitespace())
                            .collect(),
                    })?;
                    push(&mut out, TokenKind::Number(value));
                    i = end;
                }
                other => {
                    return Err(LexError {
                        line: line_no,
                        col,
                        found: other.to_string(),
                    })
                }
            }
        }
        out.push(Token {
            kind: TokenKind::Newline,
            line: line_no,
            col: chars.len() + 1,
        });
    }
    out.push(Token {
        kind: TokenKind::Eof,
        line: line_no.max(1),
        col: 1,
    });
    Ok(out)
}

fn is_word_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '-'
}

/// Scans `[+-]digits[.digits][e[+-]digits]` optionally followed by
/// `/digits...` with no spaces around the slash.
fn number(chars: &[char], start: usize) -> Option<(f64, usize)> {
    let (num, mut end) = decimal(chars, start)?;
    if end + 1 < chars.len()
        && chars[end] == '/'
        && (chars[end + 1].is_ascii_digit() || chars[end + 1] == '.')
    {
        let (den, e) = decimal(chars, end + 1)?;
        end = e;
        return Some((num / den, check_end(chars, end)?));
    }
    Some((num, check_end(chars, end)?))
}

fn check_end(chars: &[char], end: usize) -> Option<usize> {
    match chars.get(end) {
        Some(c) if c.is_ascii_alphanumeric() || *c == '_' || *c == '.' => None,
        _ => Some(end),
    }
}

fn decimal(chars: &[char], start: usize) -> Option<(f64, usize)> {
    let mut i = start;
    if matches!(chars.get(i), Some('+' | '-')) {
        i += 1;
    }
    let int_start = i;
    while chars.get(i).is_some_and(|c| c.is_ascii_digit()) {
        i += 1;
    }
    let mut digits = i - int_start;
    if chars.get(i) == Some(&'.') {
        i += 1;
        let frac_start = i;
        while chars.get(i).is_some_and(|c| c.is_ascii_digit()) {
            i += 1;
        }
        digits += i - frac_start;
    }
    if digits == 0 {
        return None;
    }
    if matches!(chars.get(i), Some('e' | 'E')) {
        let mut j = i + 1;
        if matches!(chars.get(j), Some('+' | '-')) {
            j += 1;
        }
        let exp_start = j;
        while chars.get(j).is_some_and(|c| c.is_ascii_digit()) {
            j += 1;
        }
        if j > exp_start {
            i = j;
        }
    }
    let text: String = chars[start..i].iter().collect();
    text.parse().ok().map(|v| (v, i))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(src: &str) -> Vec<TokenKind> {
        tokenize(src).unwrap().into_iter().map(|t| t.kind).collect()
    }

    #[test]
    fn numbers_and_fractions() {
        use TokenKind::*;
        assert_eq!(
            kinds("0.25 1/2 -3 1e-3 .5"),
            vec![
                Number(0.25),
                Number(0.5),
                Number(-3.0),
                Number(1e-3),
                Number(0.5),
                Newline,
                Eof
            ]
        );
    }

    #[test]
    fn gate_pair_is_three_tokens() {
        use TokenKind::*;
        assert_eq!(
            kinds("gate H/NOT on q0 # trailing"),
            vec![
                Word("gate".into()),
                Word("H".into()),
                Slash,
                Word("NOT".into()),
                Word("on".into()),
                Word("q0".into()),
                Newline,
                Eof
            ]
        );
    }

    #[test]
    fn positions() {
        let toks = tokenize("\n  pair a b").unwrap();
        assert_eq!((toks[1].line, toks[1].col), (2, 3));
        assert_eq!((toks[3].line, toks[3].col), (2, 10));
    }

    #[test]
    fn rejects_stray_characters() {
        let err = tokenize("qubit q0\nreport probs;").unwrap_err();
        assert_eq!((err.line, err.col, err.found.as_str()), (2, 13, ";"));
        assert!(tokenize("qubit q0 pm 0.5x 1").is_err());
        assert!(tokenize("qubit q0 pm - 1").is_err());
    }
}
