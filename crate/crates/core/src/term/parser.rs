use thiserror::Error;

use super::{Equation, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at position {pos}: {message}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Arrow,
    Join,
    Meet,
    Star,
    Plus,
    Tilde,
    Bang,
    Dot,
    Caret,
    Minus,
    LParen,
    RParen,
    Equals,
    Int(u64),
    Ident(String),
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Arrow => "'->'".into(),
            Tok::Join => "'\\/'".into(),
            Tok::Meet => "'/\\'".into(),
            Tok::Star => "'*'".into(),
            Tok::Plus => "'+'".into(),
            Tok::Tilde => "'~'".into(),
            Tok::Bang => "'!'".into(),
            Tok::Dot => "'.'".into(),
            Tok::Caret => "'^'".into(),
            Tok::Minus => "'-'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Equals => "'='".into(),
            Tok::Int(k) => format!("integer {k}"),
            Tok::Ident(s) => format!("identifier {s:?}"),
        }
    }
}

fn err(pos: usize, message: impl Into<String>) -> ParseError {
    ParseError { pos, message: message.into() }
}

fn tokenize(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        let two = |second: char, tok: Tok, chars: &mut std::iter::Peekable<std::str::CharIndices>| {
            chars.next();
            match chars.peek() {
                Some(&(_, d)) if d == second => {
                    chars.next();
                    Ok(tok)
                }
                _ => Err(err(pos, format!("expected '{c}{second}'"))),
            }
        };
        let tok = match c {
            c if c.is_whitespace() => {
                chars.next();
                continue;
            }
            '-' => {
                chars.next();
                if matches!(chars.peek(), Some(&(_, '>'))) {
                    chars.next();
                    Tok::Arrow
                } else {
                    Tok::Minus
                }
            }
            '\\' => two('/', Tok::Join, &mut chars)?,
            '/' => two('\\', Tok::Meet, &mut chars)?,
            '*' | '+' | '~' | '!' | '.' | '^' | '(' | ')' | '=' | '≈' => {
                chars.next();
                match c {
                    '*' => Tok::Star,
                    '+' => Tok::Plus,
                    '~' => Tok::Tilde,
                    '!' => Tok::Bang,
                    '.' => Tok::Dot,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    _ => Tok::Equals,
                }
            }
            '0'..='9' => {
                let mut end = pos;
                while let Some(&(i, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = i + d.len_utf8();
                    chars.next();
                }
                let digits = &input[pos..end];
                Tok::Int(digits.parse().map_err(|_| err(pos, format!("integer {digits} is too large")))?)
            }
            'a'..='z' => {
                let mut end = pos;
                while let Some(&(i, d)) = chars.peek() {
                    if !(d.is_ascii_lowercase() || d.is_ascii_digit() || d == '_') {
                        break;
                    }
                    end = i + d.len_utf8();
                    chars.next();
                }
                Tok::Ident(input[pos..end].to_string())
            }
            other => return Err(err(pos, format!("unexpected character {other:?}"))),
        };
        out.push((pos, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    end: usize,
}

impl Parser {
    fn new(input: &str) -> Result<Self, ParseError> {
        Ok(Parser { toks: tokenize(input)?, idx: 0, end: input.len() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map_or(self.end, |(p, _)| *p)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        match self.peek() {
            Some(t) => err(self.pos(), format!("expected {wanted}, found {}", t.describe())),
            None => err(self.pos(), format!("expected {wanted}, found end of input")),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.unexpected("end of input")),
        }
    }

    fn count(&mut self, what: &str) -> Result<u32, ParseError> {
        let pos = self.pos();
        match self.peek() {
            Some(Tok::Int(k)) => {
                let k = u32::try_from(*k).map_err(|_| err(pos, format!("{what} {k} is too large")))?;
                self.idx += 1;
                Ok(k)
            }
            Some(Tok::Minus) => Err(err(pos, format!("negative {what} is not allowed"))),
            _ => Err(self.unexpected(what)),
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let lhs = self.join()?;
        if self.eat(&Tok::Arrow) {
            Ok(lhs.arrow(self.term()?))
        } else {
            Ok(lhs)
        }
    }

    fn join(&mut self) -> Result<Term, ParseError> {
        let mut t = self.meet()?;
        while self.eat(&Tok::Join) {
            t = t.join(self.meet()?);
        }
        Ok(t)
    }

    fn meet(&mut self) -> Result<Term, ParseError> {
        let mut t = self.mul()?;
        while self.eat(&Tok::Meet) {
            t = t.meet(self.mul()?);
        }
        Ok(t)
    }

    fn mul(&mut self) -> Result<Term, ParseError> {
        let mut t = self.unary()?;
        loop {
            if self.eat(&Tok::Star) {
                t = t.star(self.unary()?);
            } else if self.eat(&Tok::Plus) {
                t = t.oplus(self.unary()?);
            } else {
                return Ok(t);
            }
        }
    }

    fn unary(&mut self) -> Result<Term, ParseError> {
        match self.peek() {
            Some(Tok::Tilde) => {
                self.idx += 1;
                Ok(self.unary()?.inv())
            }
            Some(Tok::Bang) => {
                self.idx += 1;
                Ok(self.unary()?.neg())
            }
            Some(Tok::Int(_)) | Some(Tok::Minus) => {
                let k = self.count("multiple")?;
                if !self.eat(&Tok::Dot) {
                    return Err(self.unexpected("'.' after multiple"));
                }
                Ok(self.unary()?.mult(k))
            }
            _ => self.postfix(),
        }
    }

    fn postfix(&mut self) -> Result<Term, ParseError> {
        let mut t = self.atom()?;
        while self.eat(&Tok::Caret) {
            t = t.pow(self.count("exponent")?);
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                self.idx += 1;
                Ok(match name.as_str() {
                    "bot" => Term::Bot,
                    "top" => Term::Top,
                    _ => Term::Var(name),
                })
            }
            Some(Tok::LParen) => {
                self.idx += 1;
                let t = self.term()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.unexpected("')'"));
                }
                Ok(t)
            }
            _ => Err(self.unexpected("a term")),
        }
    }
}

pub fn parse_term(input: &str) -> Result<Term, ParseError> {
    let mut parser = Parser::new(input)?;
    let t = parser.term()?;
    parser.finish()?;
    Ok(t)
}

/// Parses `lhs = rhs` (or `lhs ≈ rhs`).
pub fn parse_equation(input: &str) -> Result<Equation, ParseError> {
    let mut parser = Parser::new(input)?;
    let lhs = parser.term()?;
    if !parser.eat(&Tok::Equals) {
        return Err(parser.unexpected("'=' or '≈'"));
    }
    let rhs = parser.term()?;
    parser.finish()?;
    Ok(Equation::new(lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Term {
        Term::var("x")
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_term("x \\/ !(x^3)").unwrap(), x().join(x().pow(3).neg()));
        assert_eq!(parse_term("3.(x \\/ y) -> top").unwrap(), x().join(Term::var("y")).mult(3).arrow(Term::Top));
        assert_eq!(parse_term("x -> y -> z").unwrap(), x().arrow(Term::var("y").arrow(Term::var("z"))));
    }

    #[test]
    fn precedence() {
        assert_eq!(parse_term("x * y /\\ z \\/ w").unwrap(), x().star(Term::var("y")).meet(Term::var("z")).join(Term::var("w")));
        assert_eq!(parse_term("~x^2").unwrap(), x().pow(2).inv());
        assert_eq!(parse_term("2.x^3").unwrap(), x().pow(3).mult(2));
        assert_eq!(parse_term("x^2^3").unwrap(), x().pow(2).pow(3));
        assert_eq!(parse_term("x + y * z").unwrap(), x().oplus(Term::var("y")).star(Term::var("z")));
        assert_eq!(parse_term("!!bot").unwrap(), Term::Bot.neg().neg());
    }

    #[test]
    fn equations() {
        let eq = parse_equation("x ≈ x").unwrap();
        assert_eq!(eq, Equation::new(x(), x()));
        assert_eq!(parse_equation("x*y = y*x").unwrap().free_vars().len(), 2);
        assert!(parse_equation("x").is_err());
        assert!(parse_equation("x = y = z").is_err());
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_term("x ^ -1").unwrap_err();
        assert_eq!(e.pos, 4);
        assert!(e.message.contains("negative exponent"));
        let e = parse_term("-2.x").unwrap_err();
        assert!(e.message.contains("negative multiple"), "{e}");
        let e = parse_term("x \\/").unwrap_err();
        assert_eq!(e.pos, 4);
        assert_eq!(parse_term("(x").unwrap_err().pos, 2);
        assert_eq!(parse_term("x $ y").unwrap_err().pos, 2);
        assert_eq!(parse_term("X").unwrap_err().pos, 0);
        assert!(parse_term("3 x").is_err());
        assert!(parse_term("x / y").is_err());
        assert!(parse_term("").is_err());
        assert!(parse_term("x^99999999999").is_err());
    }
}
