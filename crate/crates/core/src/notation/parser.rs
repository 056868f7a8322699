use super::ast::{ConwayExpr, Elementary, TwistKind};
use super::lexer::{Token, TokenKind};
use super::ParseError;
use crate::diagram::polyhedra;

/// Parse a token stream produced by [`tokenize`](super::tokenize).
pub fn parse_tokens(tokens: &[Token]) -> Result<ConwayExpr, ParseError> {
    let tokens = significant(tokens);
    let mut p = Parser { tokens, pos: 0 };
    let expr = if p.starts_polyhedral() { p.polyhedral()? } else { p.ramification()? };
    match p.peek() {
        None => Ok(expr),
        Some(t) if t.kind == TokenKind::RParen => {
            Err(ParseError::UnbalancedParenthesis { position: t.pos })
        }
        Some(t) => Err(unexpected(t)),
    }
}

fn ends_term(k: TokenKind) -> bool {
    matches!(k, TokenKind::Integer(_) | TokenKind::Zero | TokenKind::Pre | TokenKind::RParen)
}

fn starts_term(k: TokenKind) -> bool {
    matches!(
        k,
        TokenKind::Integer(_) | TokenKind::Zero | TokenKind::Pre | TokenKind::Minus | TokenKind::LParen
    )
}

/// Keep only the blanks that separate two factors of a product.
fn significant(tokens: &[Token]) -> Vec<Token> {
    let mut out = Vec::with_capacity(tokens.len());
    for (i, t) in tokens.iter().enumerate() {
        if t.kind == TokenKind::Space {
            let before = out.last().map(|p: &Token| p.kind);
            let after = tokens.get(i + 1).map(|n| n.kind);
            match (before, after) {
                (Some(b), Some(a)) if ends_term(b) && starts_term(a) => out.push(*t),
                _ => {}
            }
        } else {
            out.push(*t);
        }
    }
    out
}

fn unexpected(t: &Token) -> ParseError {
    ParseError::UnexpectedToken { position: t.pos, found: t.kind.to_string() }
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

/// Boundary of a polyhedron slot.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Sep {
    Start,
    Dot,
    Colon,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn peek_kind(&self) -> Option<TokenKind> {
        self.peek().map(|t| t.kind)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).copied();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn starts_polyhedral(&self) -> bool {
        matches!(
            (self.tokens.first().map(|t| t.kind), self.tokens.get(1).map(|t| t.kind)),
            (Some(TokenKind::Integer(n)), Some(TokenKind::Star)) if n > 0
        )
    }

    fn ramification(&mut self) -> Result<ConwayExpr, ParseError> {
        let first = self.sum()?;
        if self.peek_kind() != Some(TokenKind::Comma) {
            return Ok(first);
        }
        let mut items = vec![first];
        while self.peek_kind() == Some(TokenKind::Comma) {
            self.next();
            items.push(self.sum()?);
        }
        Ok(ConwayExpr::Ramification(items))
    }

    fn sum(&mut self) -> Result<ConwayExpr, ParseError> {
        let mut acc = self.product()?;
        while self.peek_kind() == Some(TokenKind::Plus) {
            self.next();
            let rhs = self.product()?;
            acc = ConwayExpr::sum(acc, rhs);
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<ConwayExpr, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek_kind() {
                Some(TokenKind::Space) => {
                    self.next();
                }
                Some(k) if starts_term(k) => {}
                _ => break,
            }
            let rhs = self.unary()?;
            acc = ConwayExpr::product(acc, rhs);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<ConwayExpr, ParseError> {
        if self.peek_kind() == Some(TokenKind::Minus) {
            self.next();
            return Ok(ConwayExpr::mirror(self.unary()?));
        }
        self.power()
    }

    fn power(&mut self) -> Result<ConwayExpr, ParseError> {
        let base = self.atom()?;
        if self.peek_kind() != Some(TokenKind::Caret) {
            return Ok(base);
        }
        let caret = self.next().expect("peeked");
        let kind = match base {
            ConwayExpr::Elementary(Elementary::Pos) => TwistKind::Pos,
            ConwayExpr::Elementary(Elementary::Neg) => TwistKind::Neg,
            ConwayExpr::Elementary(Elementary::Pre) => TwistKind::Pre,
            _ => return Err(unexpected(&caret)),
        };
        match self.next() {
            Some(Token { kind: TokenKind::Integer(n), .. }) if n > 0 => {
                Ok(ConwayExpr::twist(kind, n as u32))
            }
            Some(t) => Err(unexpected(&t)),
            None => Err(ParseError::UnexpectedEnd),
        }
    }

    fn atom(&mut self) -> Result<ConwayExpr, ParseError> {
        let t = self.next().ok_or(ParseError::UnexpectedEnd)?;
        match t.kind {
            TokenKind::Integer(n) => Ok(ConwayExpr::integer(n)),
            TokenKind::Zero => Ok(ConwayExpr::zero()),
            TokenKind::Pre => Ok(ConwayExpr::pre()),
            TokenKind::LParen => {
                let inner = self.ramification()?;
                match self.next() {
                    Some(Token { kind: TokenKind::RParen, .. }) => Ok(inner),
                    Some(other) => Err(unexpected(&other)),
                    None => Err(ParseError::UnbalancedParenthesis { position: t.pos }),
                }
            }
            TokenKind::RParen => Err(ParseError::UnbalancedParenthesis { position: t.pos }),
            _ => Err(unexpected(&t)),
        }
    }

    fn polyhedral(&mut self) -> Result<ConwayExpr, ParseError> {
        let vertices = match self.next() {
            Some(Token { kind: TokenKind::Integer(n), .. }) => n as usize,
            _ => unreachable!("checked by starts_polyhedral"),
        };
        let mut index = 0;
        while self.peek_kind() == Some(TokenKind::Star) {
            self.next();
            index += 1;
        }
        if !polyhedra::is_registered(vertices, index) {
            return Err(ParseError::UnsupportedPolyhedron(polyhedra::key(vertices, index)));
        }

        let mut slots = Vec::new();
        let mut left = Sep::Start;
        loop {
            let at = self.peek().map(|t| t.pos);
            let expr = match self.peek_kind() {
                Some(k) if starts_term(k) => Some(self.sum()?),
                _ => None,
            };
            let right = match self.peek_kind() {
                Some(TokenKind::Dot) => Some(Sep::Dot),
                Some(TokenKind::Colon) => Some(Sep::Colon),
                None => None,
                Some(_) => return Err(unexpected(self.peek().expect("peeked"))),
            };
            match (expr, right) {
                (Some(e), _) => slots.push(e),
                (None, Some(Sep::Dot)) if left == Sep::Dot => {
                    return Err(ParseError::EmptySlot { position: at.unwrap_or(0) });
                }
                // An unwritten vertex next to a colon or at the start holds 1.
                (None, Some(_)) => slots.push(ConwayExpr::one()),
                (None, None) => {}
            }
            let Some(sep) = right else { break };
            self.next();
            if sep == Sep::Colon {
                slots.push(ConwayExpr::one());
                if self.peek().is_none() {
                    break;
                }
            }
            left = sep;
        }

        if slots.len() > vertices {
            return Err(ParseError::TooManySlots { vertices, found: slots.len() });
        }
        slots.resize(vertices, ConwayExpr::one());
        Ok(ConwayExpr::Polyhedral { vertices, index, slots })
    }
}
