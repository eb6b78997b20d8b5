//! Arithmetic expressions in `t` and `u` for user-supplied nonlinearities.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor (('*' | '/') factor)*
//! factor  := '-' factor | power
//! power   := primary ('^' factor)?
//! primary := number | 't' | 'u' | ident '(' args ')' | '(' expr ')'
//! ```
//!
//! `^` is right-associative and binds tighter than unary minus, so `-u^2`
//! is `-(u^2)` and `2^3^2` is `2^9`. There is no implicit multiplication.
//! Binary operators are parsed by precedence climbing.

mod ast;
mod lexer;
mod parser;

pub use ast::{BinOp, Expr, Func, Var};
pub use parser::{parse, ParseError, ParseErrorKind};
