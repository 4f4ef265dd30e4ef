use num_bigint::BigInt;

use super::{Presentation, PresentationError};
use crate::exactlinalg::Int;
use crate::freealgebra::LieExpr;

const MAX_EXPONENT: u32 = 4096;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Name(String),
    Num(String),
    Sym(char),
}

struct Lexed {
    toks: Vec<(Tok, usize)>,
    end_col: usize,
}

fn lex(text: &str, line: usize, col0: usize) -> Result<Lexed, PresentationError> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        let col = col0 + i;
        if ch == '#' {
            break;
        }
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            toks.push((Tok::Num(chars[start..i].iter().collect()), col));
        } else if ch.is_alphabetic() || ch == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push((Tok::Name(chars[start..i].iter().collect()), col));
        } else if "[](),+-*^".contains(ch) {
            toks.push((Tok::Sym(ch), col));
            i += 1;
        } else {
            return Err(PresentationError::Syntax { line, col, message: format!("unexpected character '{ch}'") });
        }
    }
    Ok(Lexed { toks, end_col: col0 + chars.len() })
}

struct Parser<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    line: usize,
    end_col: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.1)
    }

    fn error(&self, message: impl Into<String>) -> PresentationError {
        PresentationError::Syntax { line: self.line, col: self.col(), message: message.into() }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), PresentationError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn expr(&mut self) -> Result<LieExpr, PresentationError> {
        let mut terms = Vec::new();
        let mut sign = if self.eat('-') { Int::from(-1) } else { Int::ONE };
        loop {
            let (k, atom) = self.term()?;
            terms.push((&sign * &k, atom));
            if self.eat('+') {
                sign = Int::ONE;
            } else if self.eat('-') {
                sign = Int::from(-1);
            } else {
                break;
            }
        }
        if terms.len() == 1 && terms[0].0.is_one() {
            return Ok(terms.pop().unwrap().1);
        }
        Ok(LieExpr::Sum(terms))
    }

    fn term(&mut self) -> Result<(Int, LieExpr), PresentationError> {
        let mut k = Int::ONE;
        if let Some(Tok::Num(_)) = self.peek() {
            k = self.int()?;
            self.eat('*');
        }
        Ok((k, self.atom()?))
    }

    fn int(&mut self) -> Result<Int, PresentationError> {
        let Some(Tok::Num(digits)) = self.peek().cloned() else {
            return Err(self.error("expected an integer"));
        };
        self.pos += 1;
        let base: BigInt = digits.parse().expect("lexer only produces digits");
        if !self.eat('^') {
            return Ok(Int::from(base));
        }
        let col = self.col();
        let Some(Tok::Num(exp)) = self.peek().cloned() else {
            return Err(self.error("expected an exponent"));
        };
        self.pos += 1;
        match exp.parse::<u32>() {
            Ok(e) if e <= MAX_EXPONENT => Ok(Int::from(num_traits::pow(base, e as usize))),
            _ => Err(PresentationError::Syntax { line: self.line, col, message: format!("exponent {exp} too large") }),
        }
    }

    fn atom(&mut self) -> Result<LieExpr, PresentationError> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Name(name)) => {
                self.pos += 1;
                match self.names.iter().position(|n| *n == name) {
                    Some(i) => Ok(LieExpr::Gen(i)),
                    None => Err(PresentationError::UnknownGenerator { name, line: self.line, col }),
                }
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Sym('[')) => {
                self.pos += 1;
                if self.eat(']') {
                    return Err(PresentationError::EmptyBracket { line: self.line, col });
                }
                let mut items = vec![self.expr()?];
                while self.eat(',') {
                    items.push(self.expr()?);
                }
                self.expect(']')?;
                if items.len() < 2 {
                    return Err(PresentationError::EmptyBracket { line: self.line, col });
                }
                Ok(LieExpr::Bracket(items))
            }
            _ => Err(self.error("expected a generator, '[' or '('")),
        }
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

/// Parses the line-oriented presentation format.
pub fn parse(doc: &str) -> Result<Presentation, PresentationError> {
    let mut generators: Option<Vec<String>> = None;
    let mut relators = Vec::new();
    for (idx, raw) in doc.lines().enumerate() {
        let line = idx + 1;
        let content = strip_comment(raw);
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = content.chars().count() - trimmed.chars().count();
        let Some((key, rest)) = trimmed.split_once(':') else {
            return Err(PresentationError::Syntax { line, col: indent + 1, message: "expected 'generators:' or 'relator:'".into() });
        };
        let rest_col = indent + key.chars().count() + 2;
        match (key.trim(), &generators) {
            ("generators", None) => {
                let lexed = lex(rest, line, rest_col)?;
                let mut names = Vec::new();
                for (tok, col) in lexed.toks {
                    match tok {
                        Tok::Name(n) if names.contains(&n) => return Err(PresentationError::DuplicateGenerator(n)),
                        Tok::Name(n) => names.push(n),
                        _ => return Err(PresentationError::Syntax { line, col, message: "expected a generator name".into() }),
                    }
                }
                if names.is_empty() {
                    return Err(PresentationError::Syntax { line, col: lexed.end_col, message: "no generators listed".into() });
                }
                generators = Some(names);
            }
            ("generators", Some(_)) => {
                return Err(PresentationError::Syntax { line, col: indent + 1, message: "second generators header".into() });
            }
            ("relator", None) => {
                return Err(PresentationError::Syntax { line, col: indent + 1, message: "relator before generators header".into() });
            }
            ("relator", Some(names)) => {
                let lexed = lex(rest, line, rest_col)?;
                let mut p = Parser { toks: &lexed.toks, pos: 0, line, end_col: lexed.end_col, names };
                let e = p.expr()?;
                if p.pos < lexed.toks.len() {
                    return Err(p.error("unexpected trailing input"));
                }
                relators.push(e);
            }
            _ => {
                return Err(PresentationError::Syntax { line, col: indent + 1, message: format!("unknown directive '{}'", key.trim()) });
            }
        }
    }
    let Some(generators) = generators else {
        return Err(PresentationError::Syntax { line: 1, col: 1, message: "missing 'generators:' header".into() });
    };
    Presentation::new(generators, relators)
}
