use thiserror::Error;

use super::ast::{BinOp, Expr, Func, Var};
use super::lexer::{tokenize, Spanned, Token};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseErrorKind {
    #[error("empty expression")]
    Empty,
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("invalid number {0:?}")]
    InvalidNumber(String),
    #[error("unexpected {0}")]
    UnexpectedToken(String),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unknown identifier {0:?}")]
    UnknownIdentifier(String),
    #[error("{name} takes {expected} argument(s), got {found}")]
    Arity { name: &'static str, expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("{kind} at byte {offset}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub offset: usize,
}

impl ParseError {
    pub(crate) fn new(kind: ParseErrorKind, offset: usize) -> Self {
        Self { kind, offset }
    }
}

const PREC_ADD: u8 = 1;
const PREC_MUL: u8 = 2;
const PREC_NEG: u8 = 3;
const PREC_POW: u8 = 4;

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let tokens = tokenize(src)?;
    if tokens.is_empty() {
        return Err(ParseError::new(ParseErrorKind::Empty, 0));
    }
    let mut parser = Parser { tokens, pos: 0, end: src.len() };
    let expr = parser.expr(PREC_ADD)?;
    if let Some(tok) = parser.peek() {
        return Err(unexpected(tok));
    }
    Ok(expr)
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
    end: usize,
}

fn unexpected(tok: &Spanned) -> ParseError {
    let desc = match &tok.token {
        Token::Num(v) => format!("number {v}"),
        Token::Ident(s) => format!("identifier {s:?}"),
        other => format!("token {}", describe(other)),
    };
    ParseError::new(ParseErrorKind::UnexpectedToken(desc), tok.offset)
}

fn describe(tok: &Token) -> &'static str {
    match tok {
        Token::Plus => "'+'",
        Token::Minus => "'-'",
        Token::Star => "'*'",
        Token::Slash => "'/'",
        Token::Caret => "'^'",
        Token::LParen => "'('",
        Token::RParen => "')'",
        Token::Comma => "','",
        Token::Num(_) => "number",
        Token::Ident(_) => "identifier",
    }
}

fn binary_op(tok: &Token) -> Option<(BinOp, u8, bool)> {
    match tok {
        Token::Plus => Some((BinOp::Add, PREC_ADD, false)),
        Token::Minus => Some((BinOp::Sub, PREC_ADD, false)),
        Token::Star => Some((BinOp::Mul, PREC_MUL, false)),
        Token::Slash => Some((BinOp::Div, PREC_MUL, false)),
        Token::Caret => Some((BinOp::Pow, PREC_POW, true)),
        _ => None,
    }
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Result<Spanned, ParseError> {
        let tok = self.tokens.get(self.pos).cloned().ok_or(ParseError::new(ParseErrorKind::UnexpectedEnd, self.end))?;
        self.pos += 1;
        Ok(tok)
    }

    fn expect(&mut self, want: Token) -> Result<(), ParseError> {
        let tok = self.next()?;
        if tok.token == want {
            Ok(())
        } else {
            Err(unexpected(&tok))
        }
    }

    fn expr(&mut self, min_prec: u8) -> Result<Expr, ParseError> {
        let mut lhs = self.prefix()?;
        while let Some((op, prec, right_assoc)) = self.peek().and_then(|t| binary_op(&t.token)) {
            if prec < min_prec {
                break;
            }
            self.pos += 1;
            let next_min = if right_assoc { prec } else { prec + 1 };
            let rhs = self.expr(next_min)?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn prefix(&mut self) -> Result<Expr, ParseError> {
        let tok = self.next()?;
        match tok.token {
            Token::Minus => Ok(Expr::Neg(Box::new(self.expr(PREC_NEG)?))),
            Token::Num(v) => Ok(Expr::Num(v)),
            Token::LParen => {
                let inner = self.expr(PREC_ADD)?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            Token::Ident(name) => self.identifier(name, tok.offset),
            _ => Err(unexpected(&tok)),
        }
    }

    fn identifier(&mut self, name: String, offset: usize) -> Result<Expr, ParseError> {
        let is_call = matches!(self.peek(), Some(Spanned { token: Token::LParen, .. }));
        match (name.as_str(), is_call) {
            ("t", false) => Ok(Expr::Var(Var::T)),
            ("u", false) => Ok(Expr::Var(Var::U)),
            (_, true) => {
                let func = Func::from_name(&name)
                    .ok_or_else(|| ParseError::new(ParseErrorKind::UnknownIdentifier(name.clone()), offset))?;
                self.pos += 1;
                let args = self.arguments()?;
                if args.len() != func.arity() {
                    return Err(ParseError::new(
                        ParseErrorKind::Arity { name: func.name(), expected: func.arity(), found: args.len() },
                        offset,
                    ));
                }
                Ok(Expr::Call(func, args))
            }
            _ => Err(ParseError::new(ParseErrorKind::UnknownIdentifier(name), offset)),
        }
    }

    // after the opening parenthesis
    fn arguments(&mut self) -> Result<Vec<Expr>, ParseError> {
        let mut args = Vec::new();
        if matches!(self.peek(), Some(Spanned { token: Token::RParen, .. })) {
            self.pos += 1;
            return Ok(args);
        }
        loop {
            args.push(self.expr(PREC_ADD)?);
            let tok = self.next()?;
            match tok.token {
                Token::Comma => continue,
                Token::RParen => return Ok(args),
                _ => return Err(unexpected(&tok)),
            }
        }
    }
}
