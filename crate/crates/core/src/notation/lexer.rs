use std::fmt;

use super::ParseError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TokenKind {
    /// Nonzero integer; negative when a `-` was fused onto the digits.
    Integer(i64),
    Zero,
    /// The precrossing tangle `i`.
    Pre,
    Star,
    Dot,
    Colon,
    Comma,
    Plus,
    /// A `-` that does not directly precede digits: the mirror operator.
    Minus,
    Caret,
    LParen,
    RParen,
    Space,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    /// Byte offset of the token in the source.
    pub pos: usize,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Integer(n) => write!(f, "{n}"),
            TokenKind::Zero => f.write_str("0"),
            TokenKind::Pre => f.write_str("i"),
            TokenKind::Star => f.write_str("*"),
            TokenKind::Dot => f.write_str("."),
            TokenKind::Colon => f.write_str(":"),
            TokenKind::Comma => f.write_str(","),
            TokenKind::Plus => f.write_str("+"),
            TokenKind::Minus => f.write_str("-"),
            TokenKind::Caret => f.write_str("^"),
            TokenKind::LParen => f.write_str("("),
            TokenKind::RParen => f.write_str(")"),
            TokenKind::Space => f.write_str(" "),
        }
    }
}

/// Split a Conway symbol into tokens.
///
/// Whitespace is significant (it is the product operator), so runs of
/// blanks collapse into a single `Space` token. Blanks directly inside
/// parentheses or around the binary operators carry no meaning and are
/// dropped by the parser, not here.
pub fn tokenize(source: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = source.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let kind = match c {
            b' ' | b'\t' => {
                let start = i;
                while i < bytes.len() && (bytes[i] == b' ' || bytes[i] == b'\t') {
                    i += 1;
                }
                out.push(Token { kind: TokenKind::Space, pos: start });
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                let value = read_number(bytes, &mut i, start)?;
                let kind = if value == 0 { TokenKind::Zero } else { TokenKind::Integer(value) };
                out.push(Token { kind, pos: start });
                continue;
            }
            b'-' if bytes.get(i + 1).is_some_and(u8::is_ascii_digit) => {
                let start = i;
                i += 1;
                let value = read_number(bytes, &mut i, start)?;
                // "-0" is just the zero tangle.
                let kind = if value == 0 { TokenKind::Zero } else { TokenKind::Integer(-value) };
                out.push(Token { kind, pos: start });
                continue;
            }
            b'-' => TokenKind::Minus,
            b'i' => TokenKind::Pre,
            b'*' => TokenKind::Star,
            b'.' => TokenKind::Dot,
            b':' => TokenKind::Colon,
            b',' => TokenKind::Comma,
            b'+' => TokenKind::Plus,
            b'^' => TokenKind::Caret,
            b'(' => TokenKind::LParen,
            b')' => TokenKind::RParen,
            _ => {
                // Report the char offset for non-ASCII input too.
                return Err(ParseError::UnknownCharacter { position: i });
            }
        };
        out.push(Token { kind, pos: i });
        i += 1;
    }
    Ok(out)
}

fn read_number(bytes: &[u8], i: &mut usize, start: usize) -> Result<i64, ParseError> {
    let mut value: i64 = 0;
    while *i < bytes.len() && bytes[*i].is_ascii_digit() {
        value = value
            .checked_mul(10)
            .and_then(|v| v.checked_add(i64::from(bytes[*i] - b'0')))
            .ok_or(ParseError::NumberTooLarge { position: start })?;
        *i += 1;
    }
    Ok(value)
}
