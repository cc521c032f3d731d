use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Intuitionistic propositional formulas. Negation is `φ -> F`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Var(String),
    Top,
    Bot,
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn var(name: impl Into<String>) -> Self {
        Formula::Var(name.into())
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Self {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    pub fn not(a: Formula) -> Self {
        Formula::imp(a, Formula::Bot)
    }

    /// Left-nested conjunction; `T` when empty.
    pub fn conj(items: impl IntoIterator<Item = Formula>) -> Self {
        items.into_iter().reduce(Formula::and).unwrap_or(Formula::Top)
    }

    /// Left-nested disjunction; `F` when empty.
    pub fn disj(items: impl IntoIterator<Item = Formula>) -> Self {
        items.into_iter().reduce(Formula::or).unwrap_or(Formula::Bot)
    }

    /// Variables in sorted order.
    pub fn variables(&self) -> Vec<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out.into_iter().collect()
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Var(v) => {
                out.insert(v.clone());
            }
            Formula::Top | Formula::Bot => {}
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Imp(_, b) if **b == Formula::Bot => 4,
            Formula::Imp(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            _ => 4,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let p = self.precedence();
        if p < min {
            f.write_str("(")?;
        }
        match self {
            Formula::Var(v) => f.write_str(v)?,
            Formula::Top => f.write_str("T")?,
            Formula::Bot => f.write_str("F")?,
            Formula::Imp(a, b) if **b == Formula::Bot => {
                f.write_str("~")?;
                a.write_at(f, 4)?;
            }
            Formula::Imp(a, b) => {
                a.write_at(f, 2)?;
                f.write_str("->")?;
                b.write_at(f, 1)?;
            }
            Formula::Or(a, b) => {
                a.write_at(f, 2)?;
                f.write_str("|")?;
                b.write_at(f, 3)?;
            }
            Formula::And(a, b) => {
                a.write_at(f, 3)?;
                f.write_str("&")?;
                b.write_at(f, 4)?;
            }
        }
        if p < min {
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Prints with the fewest parentheses and no spaces; `φ -> F` prints as `~φ`.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

impl FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_formula(s)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Var(String),
    Top,
    Bot,
    Not,
    And,
    Or,
    Imp,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'~' => Token::Not,
            b'&' => Token::And,
            b'|' => Token::Or,
            b'(' => Token::Open,
            b')' => Token::Close,
            b'T' => Token::Top,
            b'F' => Token::Bot,
            b'-' => {
                if bytes.get(i + 1) != Some(&b'>') {
                    return Err(Error::ParseError { pos: i, msg: "expected '->'".into() });
                }
                i += 1;
                Token::Imp
            }
            b'a'..=b'z' => {
                while i + 1 < bytes.len() && (bytes[i + 1].is_ascii_lowercase() || bytes[i + 1].is_ascii_digit()) {
                    i += 1;
                }
                Token::Var(text[start..=i].to_string())
            }
            _ => {
                return Err(Error::ParseError { pos: i, msg: format!("unexpected character {:?}", c as char) })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|t| &t.1)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn fail<T>(&self, msg: &str) -> Result<T> {
        Err(Error::ParseError { pos: self.offset(), msg: msg.into() })
    }

    fn implication(&mut self) -> Result<Formula> {
        let lhs = self.disjunction()?;
        if self.peek() == Some(&Token::Imp) {
            self.pos += 1;
            let rhs = self.implication()?;
            return Ok(Formula::imp(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula> {
        let mut lhs = self.conjunction()?;
        while self.peek() == Some(&Token::Or) {
            self.pos += 1;
            lhs = Formula::or(lhs, self.conjunction()?);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula> {
        let mut lhs = self.unary()?;
        while self.peek() == Some(&Token::And) {
            self.pos += 1;
            lhs = Formula::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula> {
        let Some(tok) = self.peek().cloned() else {
            return self.fail("unexpected end of input");
        };
        self.pos += 1;
        match tok {
            Token::Not => Ok(Formula::not(self.unary()?)),
            Token::Var(v) => Ok(Formula::Var(v)),
            Token::Top => Ok(Formula::Top),
            Token::Bot => Ok(Formula::Bot),
            Token::Open => {
                let inner = self.implication()?;
                if self.peek() != Some(&Token::Close) {
                    return self.fail("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => {
                self.pos -= 1;
                self.fail("expected a formula")
            }
        }
    }
}

/// Grammar: variables `[a-z][a-z0-9]*`, constants `T`/`F`, `~`, `&`, `|`, `->`
/// (binding in that order), parentheses. `&` and `|` associate left, `->` right.
pub fn parse_formula(text: &str) -> Result<Formula> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0, end: text.len() };
    let f = p.implication()?;
    if p.pos != p.tokens.len() {
        return p.fail("trailing input");
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(p("p->q->r"), Formula::imp(p("p"), Formula::imp(p("q"), p("r"))));
        assert_eq!(p("p|q&r"), Formula::or(p("p"), Formula::and(p("q"), p("r"))));
        assert_eq!(p("p|q|r"), Formula::or(Formula::or(p("p"), p("q")), p("r")));
        assert_eq!(p("~p&q"), Formula::and(Formula::not(p("p")), p("q")));
        assert_eq!(p("~p | ~~p"), Formula::or(Formula::not(p("p")), Formula::not(Formula::not(p("p")))));
    }

    #[test]
    fn printing_is_minimal() {
        for s in ["((~~p->p)->p|~p)->~p|~~p", "(p->q)|(q->p)", "p0|(p0->p1)|(p0&p1->p2)", "~(p&q)", "~F", "T"] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(p("p -> F").to_string(), "~p");
        assert_eq!(p("(p|q)|r").to_string(), "p|q|r");
        assert_eq!(p("p|(q|r)").to_string(), "p|(q|r)");
        assert_eq!(p("(p->q)->r").to_string(), "(p->q)->r");
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_formula("p->").unwrap_err(), Error::ParseError { pos: 3, msg: "unexpected end of input".into() });
        assert!(matches!(parse_formula("p-q"), Err(Error::ParseError { pos: 1, .. })));
        assert!(matches!(parse_formula("(p"), Err(Error::ParseError { pos: 2, .. })));
        assert!(matches!(parse_formula("p q"), Err(Error::ParseError { pos: 2, .. })));
        assert!(matches!(parse_formula("P"), Err(Error::ParseError { pos: 0, .. })));
    }

    #[test]
    fn variables_sorted() {
        assert_eq!(p("q->p|q1").variables(), ["p", "q", "q1"]);
    }
}
