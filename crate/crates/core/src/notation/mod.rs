//! Extended Conway notation: tokenizer, parser and renderer.
//!
//! The grammar, from tightest to loosest binding:
//!
//! * atoms `0`, `n`, `-n`, `i`, `( ... )`, prefix mirror `-`, powers `x^n`
//! * juxtaposition product `a b` (left associative)
//! * sum `a+b`
//! * ramification `a,b,c`
//!
//! A polyhedral symbol `n*t1.t2...` substitutes tangles into the vertices
//! of a registered basic polyhedron. A colon abbreviates a vertex holding
//! `1`, and vertices not mentioned hold `1`.

mod ast;
mod lexer;
mod parser;
mod render;

use thiserror::Error;

pub use ast::{ConwayExpr, Elementary, TwistKind};
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::parse_tokens;
pub use render::render;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unknown character at offset {position}")]
    UnknownCharacter { position: usize },
    #[error("number too large at offset {position}")]
    NumberTooLarge { position: usize },
    #[error("unexpected {found} at offset {position}")]
    UnexpectedToken { position: usize, found: String },
    #[error("unexpected end of symbol")]
    UnexpectedEnd,
    #[error("unbalanced parenthesis at offset {position}")]
    UnbalancedParenthesis { position: usize },
    #[error("empty polyhedron slot at offset {position}")]
    EmptySlot { position: usize },
    #[error("{found} slots given for a polyhedron with {vertices} vertices")]
    TooManySlots { vertices: usize, found: usize },
    #[error("unsupported basic polyhedron {0}")]
    UnsupportedPolyhedron(String),
}

/// Tokenize and parse a Conway symbol.
pub fn parse(source: &str) -> Result<ConwayExpr, ParseError> {
    parse_tokens(&tokenize(source)?)
}
