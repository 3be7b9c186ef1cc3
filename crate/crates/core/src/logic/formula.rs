use std::fmt;

use crate::error::{Error, Result};

/// Propositional formula as written. [`Formula::desugar`] rewrites the
/// derived connectives into `¬` and `∧`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Var(String),
    Top,
    Bot,
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

use Formula::*;

pub fn var(name: &str) -> Formula {
    Var(name.to_string())
}

pub fn not(a: Formula) -> Formula {
    Not(Box::new(a))
}

pub fn and(a: Formula, b: Formula) -> Formula {
    And(Box::new(a), Box::new(b))
}

pub fn or(a: Formula, b: Formula) -> Formula {
    Or(Box::new(a), Box::new(b))
}

pub fn imp(a: Formula, b: Formula) -> Formula {
    Imp(Box::new(a), Box::new(b))
}

pub fn iff(a: Formula, b: Formula) -> Formula {
    Iff(Box::new(a), Box::new(b))
}

impl Formula {
    /// Only `Var`, `Top`, `Bot`, `Not` and `And` remain:
    /// `a ∨ b = ¬(¬a ∧ ¬b)`, `a → b = ¬(a ∧ ¬b)`,
    /// `a ↔ b = (a → b) ∧ (b → a)`.
    pub fn desugar(&self) -> Formula {
        match self {
            Var(_) | Top | Bot => self.clone(),
            Not(a) => not(a.desugar()),
            And(a, b) => and(a.desugar(), b.desugar()),
            Or(a, b) => not(and(not(a.desugar()), not(b.desugar()))),
            Imp(a, b) => not(and(a.desugar(), not(b.desugar()))),
            Iff(a, b) => {
                let (a, b) = (a.desugar(), b.desugar());
                and(not(and(a.clone(), not(b.clone()))), not(and(b, not(a))))
            }
        }
    }

    pub fn is_core(&self) -> bool {
        match self {
            Var(_) | Top | Bot => true,
            Not(a) => a.is_core(),
            And(a, b) => a.is_core() && b.is_core(),
            _ => false,
        }
    }

    /// Connective nesting depth; atoms have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Var(_) | Top | Bot => 0,
            Not(a) => 1 + a.depth(),
            And(a, b) | Or(a, b) | Imp(a, b) | Iff(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Variable names in order of first occurrence.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Top | Bot => {}
            Not(a) => a.collect_vars(out),
            And(a, b) | Or(a, b) | Imp(a, b) | Iff(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// Truth value under `value(name)`.
    pub fn eval(&self, value: &impl Fn(&str) -> bool) -> bool {
        match self {
            Var(v) => value(v),
            Top => true,
            Bot => false,
            Not(a) => !a.eval(value),
            And(a, b) => a.eval(value) && b.eval(value),
            Or(a, b) => a.eval(value) || b.eval(value),
            Imp(a, b) => !a.eval(value) || b.eval(value),
            Iff(a, b) => a.eval(value) == b.eval(value),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Var(_) | Top | Bot => 5,
            Not(_) => 4,
            And(..) => 3,
            Or(..) => 2,
            Imp(..) => 1,
            Iff(..) => 0,
        }
    }
}

impl fmt::Display for Formula {
    /// ASCII syntax with the fewest parentheses that reparse to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |f: &mut fmt::Formatter<'_>, child: &Formula, min: u8| {
            if child.precedence() < min {
                write!(f, "({child})")
            } else {
                write!(f, "{child}")
            }
        };
        match self {
            Var(v) => write!(f, "{v}"),
            Top => write!(f, "top"),
            Bot => write!(f, "bot"),
            Not(a) => {
                write!(f, "~")?;
                wrap(f, a, 4)
            }
            And(a, b) | Or(a, b) | Iff(a, b) => {
                let (p, op) = match self {
                    And(..) => (3, "&"),
                    Or(..) => (2, "|"),
                    _ => (0, "<->"),
                };
                // left-associative: the right operand needs strictly higher precedence
                wrap(f, a, p)?;
                write!(f, " {op} ")?;
                wrap(f, b, p + 1)
            }
            Imp(a, b) => {
                wrap(f, a, 2)?;
                write!(f, " -> ")?;
                wrap(f, b, 1)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Top,
    Bot,
    Not,
    And,
    Or,
    Imp,
    Iff,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tok::Ident(v) => return write!(f, "\"{v}\""),
            Tok::Top => "\"top\"",
            Tok::Bot => "\"bot\"",
            Tok::Not => "\"~\"",
            Tok::And => "\"&\"",
            Tok::Or => "\"|\"",
            Tok::Imp => "\"->\"",
            Tok::Iff => "\"<->\"",
            Tok::LParen => "\"(\"",
            Tok::RParen => "\")\"",
            Tok::End => "end of input",
        };
        f.write_str(s)
    }
}

/// Tokens with 1-based character columns.
fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        let rest: String = chars[i..chars.len().min(i + 3)].iter().collect();
        let (tok, width) = if c.is_whitespace() {
            i += 1;
            continue;
        } else if rest.starts_with("<->") {
            (Tok::Iff, 3)
        } else if rest.starts_with("->") {
            (Tok::Imp, 2)
        } else if c.is_ascii_lowercase() {
            let end = (i..chars.len())
                .find(|&j| !(chars[j].is_ascii_lowercase() || chars[j].is_ascii_digit() || chars[j] == '_'))
                .unwrap_or(chars.len());
            let word: String = chars[i..end].iter().collect();
            let tok = match word.as_str() {
                "top" => Tok::Top,
                "bot" => Tok::Bot,
                _ => Tok::Ident(word),
            };
            (tok, end - i)
        } else {
            let tok = match c {
                '~' | '¬' => Tok::Not,
                '&' | '∧' => Tok::And,
                '|' | '∨' => Tok::Or,
                '→' => Tok::Imp,
                '↔' => Tok::Iff,
                '⊤' => Tok::Top,
                '⊥' => Tok::Bot,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                _ => {
                    return Err(Error::Syntax {
                        position: col,
                        found: format!("\"{c}\""),
                    })
                }
            };
            (tok, 1)
        };
        out.push((col, tok));
        i += width;
    }
    out.push((chars.len() + 1, Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self) -> Error {
        let (position, tok) = &self.toks[self.at];
        Error::Syntax {
            position: *position,
            found: tok.to_string(),
        }
    }

    fn iff(&mut self) -> Result<Formula> {
        let mut lhs = self.imp()?;
        while *self.peek() == Tok::Iff {
            self.bump();
            lhs = iff(lhs, self.imp()?);
        }
        Ok(lhs)
    }

    fn imp(&mut self) -> Result<Formula> {
        let lhs = self.or()?;
        if *self.peek() == Tok::Imp {
            self.bump();
            return Ok(imp(lhs, self.imp()?));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula> {
        let mut lhs = self.and()?;
        while *self.peek() == Tok::Or {
            self.bump();
            lhs = or(lhs, self.and()?);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            lhs = and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula> {
        match self.peek() {
            Tok::Not => {
                self.bump();
                Ok(not(self.unary()?))
            }
            Tok::Ident(_) | Tok::Top | Tok::Bot => Ok(match self.bump() {
                Tok::Ident(v) => Var(v),
                Tok::Top => Top,
                _ => Bot,
            }),
            Tok::LParen => {
                self.bump();
                let inner = self.iff()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected());
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected()),
        }
    }
}

/// Precedence from tightest: `~`, `&`, `|`, `->` (right-associative),
/// `<->`. The Unicode connectives are accepted as well.
pub fn parse_formula(text: &str) -> Result<Formula> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
    };
    let f = p.iff()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected());
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_associativity() {
        assert_eq!(
            parse_formula("p & q | r").unwrap(),
            or(and(var("p"), var("q")), var("r"))
        );
        assert_eq!(
            parse_formula("~p -> q -> r").unwrap(),
            imp(not(var("p")), imp(var("q"), var("r")))
        );
        assert_eq!(
            parse_formula("p <-> q <-> r").unwrap(),
            iff(iff(var("p"), var("q")), var("r"))
        );
        assert_eq!(
            parse_formula("(p | q) & top").unwrap(),
            and(or(var("p"), var("q")), Top)
        );
        assert_eq!(
            parse_formula("¬p ∧ q → ⊥").unwrap(),
            parse_formula("~p & q -> bot").unwrap()
        );
    }

    #[test]
    fn syntax_errors() {
        assert_eq!(
            parse_formula("p & | q"),
            Err(Error::Syntax {
                position: 5,
                found: "\"|\"".into()
            })
        );
        assert!(matches!(parse_formula("(p"), Err(Error::Syntax { position: 3, .. })));
        assert!(matches!(parse_formula("p q"), Err(Error::Syntax { position: 3, .. })));
        assert!(matches!(parse_formula("P"), Err(Error::Syntax { position: 1, .. })));
        assert!(parse_formula("").is_err());
    }

    #[test]
    fn display_reparses() {
        for s in [
            "p & q | r",
            "~p -> q -> r",
            "(p -> q) -> r",
            "p & (q | r)",
            "~(p & q)",
            "(p <-> q) & r",
            "p <-> (q <-> r)",
        ] {
            let f = parse_formula(s).unwrap();
            assert_eq!(parse_formula(&f.to_string()).unwrap(), f, "{s} printed as {f}");
        }
        assert_eq!(parse_formula("(p -> q) -> r").unwrap().to_string(), "(p -> q) -> r");
    }

    #[test]
    fn desugaring_preserves_truth() {
        let f = parse_formula("(p | q) -> (p <-> ~q)").unwrap();
        let d = f.desugar();
        assert!(d.is_core() && !f.is_core());
        for bits in 0..4u8 {
            let v = |name: &str| if name == "p" { bits & 1 != 0 } else { bits & 2 != 0 };
            assert_eq!(f.eval(&v), d.eval(&v));
        }
    }
}
