//! Module expressions.
//!
//! ```text
//! expr   := leaf | name "(" expr ("," expr)* ")"
//! leaf   := kind ":" arg | "trivial" | "sign"
//! kind   := specht | dual-specht | perm | simple | simple-restricted | signed-perm | young
//! name   := dual | sgn* | tensor | heller^k | summand
//! ```
//!
//! Partitions inside expressions use exponent notation (`31^2`); signed
//! permutation leaves are written `signed-perm:31|2`. `summand(e, i)` is
//! the `i`-th isomorphism class of summands of `e`, counting from 0.

use std::fmt;

use symrep::combinat::Partition;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeafKind {
    Specht,
    DualSpecht,
    Perm,
    Simple,
    SimpleRestricted,
    SignedPerm,
    Young,
}

impl LeafKind {
    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "specht" => LeafKind::Specht,
            "dual-specht" => LeafKind::DualSpecht,
            "perm" => LeafKind::Perm,
            "simple" => LeafKind::Simple,
            "simple-restricted" => LeafKind::SimpleRestricted,
            "signed-perm" => LeafKind::SignedPerm,
            "young" => LeafKind::Young,
            _ => return None,
        })
    }

    fn name(self) -> &'static str {
        match self {
            LeafKind::Specht => "specht",
            LeafKind::DualSpecht => "dual-specht",
            LeafKind::Perm => "perm",
            LeafKind::Simple => "simple",
            LeafKind::SimpleRestricted => "simple-restricted",
            LeafKind::SignedPerm => "signed-perm",
            LeafKind::Young => "young",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Leaf(LeafKind, Partition, Option<Partition>),
    Trivial,
    Sign,
    Dual(Box<Expr>),
    SignTwist(Box<Expr>),
    Tensor(Box<Expr>, Box<Expr>),
    Heller(i32, Box<Expr>),
    Summand(Box<Expr>, usize),
}

impl Expr {
    pub fn parse(s: &str) -> Result<Expr, CliError> {
        let mut p = Parser { src: s, pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.error("trailing input"));
        }
        Ok(e)
    }

    /// Degree implied by the leaves, if any; leaves must agree.
    pub fn degree(&self) -> Result<Option<usize>, CliError> {
        let mut found: Option<usize> = None;
        let mut stack = vec![self];
        while let Some(e) = stack.pop() {
            let d = match e {
                Expr::Leaf(_, a, b) => Some(a.size() + b.as_ref().map_or(0, Partition::size)),
                Expr::Trivial | Expr::Sign => None,
                Expr::Dual(x) | Expr::SignTwist(x) | Expr::Heller(_, x) | Expr::Summand(x, _) => {
                    stack.push(x);
                    None
                }
                Expr::Tensor(a, b) => {
                    stack.push(a);
                    stack.push(b);
                    None
                }
            };
            match (found, d) {
                (Some(a), Some(b)) if a != b => {
                    return Err(CliError::Usage(format!("expression mixes degrees {a} and {b}")));
                }
                (None, Some(b)) => found = Some(b),
                _ => {}
            }
        }
        Ok(found)
    }

    /// Whether evaluation needs the regular-module machinery.
    pub fn needs_regular(&self) -> bool {
        match self {
            Expr::Heller(..) => true,
            Expr::Leaf(kind, ..) => *kind == LeafKind::Young,
            Expr::Trivial | Expr::Sign => false,
            Expr::Dual(x) | Expr::SignTwist(x) | Expr::Summand(x, _) => x.needs_regular(),
            Expr::Tensor(a, b) => a.needs_regular() || b.needs_regular(),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Leaf(k, a, None) => write!(f, "{}:{a}", k.name()),
            Expr::Leaf(k, a, Some(b)) => write!(f, "{}:{}|{}", k.name(), signed_side(a), signed_side(b)),
            Expr::Trivial => f.write_str("trivial"),
            Expr::Sign => f.write_str("sign"),
            Expr::Dual(x) => write!(f, "dual({x})"),
            Expr::SignTwist(x) => write!(f, "sgn*({x})"),
            Expr::Tensor(a, b) => write!(f, "tensor({a},{b})"),
            Expr::Heller(k, x) => write!(f, "heller^{k}({x})"),
            Expr::Summand(x, i) => write!(f, "summand({x},{i})"),
        }
    }
}

fn signed_side(p: &Partition) -> String {
    if p.is_empty() {
        String::new()
    } else {
        p.to_string()
    }
}

pub fn parse_partition(s: &str) -> Result<Partition, CliError> {
    s.trim().parse().map_err(|e: symrep::Error| CliError::Usage(e.to_string()))
}

/// `"31|2"` into `(31, 2)`; either side may be empty.
pub fn parse_signed(s: &str) -> Result<(Partition, Partition), CliError> {
    let (a, b) = s
        .split_once('|')
        .ok_or_else(|| CliError::Usage(format!("signed permutation spec {s:?} needs the form \"λ|μ\"")))?;
    let side = |x: &str| if x.trim().is_empty() { Ok(Partition::empty()) } else { parse_partition(x) };
    Ok((side(a)?, side(b)?))
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> CliError {
        CliError::Core(symrep::Error::Expression(format!("{msg} at offset {} in {:?}", self.pos, self.src)))
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..].chars().next().map_or(0, char::len_utf8);
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn token(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let len = rest.find(|c: char| c == '(' || c == ')' || c == ',' || c.is_whitespace()).unwrap_or(rest.len());
        self.pos += len;
        &self.src[start..start + len]
    }

    fn expr(&mut self) -> Result<Expr, CliError> {
        let tok = self.token().to_string();
        if tok.is_empty() {
            return Err(self.error("expected an expression"));
        }
        if !self.eat('(') {
            return self.leaf(&tok);
        }
        let e = match tok.as_str() {
            "dual" => Expr::Dual(Box::new(self.expr()?)),
            "sgn*" | "sgn" => Expr::SignTwist(Box::new(self.expr()?)),
            "tensor" => {
                let a = self.expr()?;
                if !self.eat(',') {
                    return Err(self.error("tensor takes two arguments"));
                }
                Expr::Tensor(Box::new(a), Box::new(self.expr()?))
            }
            "summand" => {
                let a = self.expr()?;
                if !self.eat(',') {
                    return Err(self.error("summand takes a module and an index"));
                }
                let i = self.token().parse().map_err(|_| self.error("summand index must be a non-negative integer"))?;
                Expr::Summand(Box::new(a), i)
            }
            "heller" => Expr::Heller(1, Box::new(self.expr()?)),
            h if h.starts_with("heller^") => {
                let k = h["heller^".len()..].parse().map_err(|_| self.error("heller exponent must be an integer"))?;
                Expr::Heller(k, Box::new(self.expr()?))
            }
            other => return Err(self.error(&format!("unknown function {other:?}"))),
        };
        if !self.eat(')') {
            return Err(self.error("expected ')'"));
        }
        Ok(e)
    }

    fn leaf(&self, tok: &str) -> Result<Expr, CliError> {
        match tok {
            "trivial" => return Ok(Expr::Trivial),
            "sign" => return Ok(Expr::Sign),
            _ => {}
        }
        let (kind, arg) = tok.split_once(':').ok_or_else(|| self.error(&format!("unknown module {tok:?}")))?;
        let kind = LeafKind::parse(kind).ok_or_else(|| self.error(&format!("unknown constructor {kind:?}")))?;
        if kind == LeafKind::SignedPerm {
            let (a, b) = parse_signed(arg)?;
            return Ok(Expr::Leaf(kind, a, Some(b)));
        }
        Ok(Expr::Leaf(kind, parse_partition(arg)?, None))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for s in [
            "specht:31^2",
            "dual(perm:41)",
            "sgn*(young:2^21)",
            "tensor(heller^2(simple-restricted:21^3),heller^2(simple-restricted:21^3))",
            "summand(perm:41,1)",
            "heller^-1(trivial)",
            "signed-perm:31|2",
            "signed-perm:|21",
        ] {
            assert_eq!(Expr::parse(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn whitespace_is_ignored() {
        let e = Expr::parse(" tensor( specht:41 , sign ) ").unwrap();
        assert_eq!(e.to_string(), "tensor(specht:41,sign)");
        assert_eq!(e.degree().unwrap(), Some(5));
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "specht", "foo:3", "tensor(specht:3)", "dual(specht:3", "specht:3 x", "summand(perm:3, -1)"] {
            assert!(Expr::parse(s).is_err(), "{s}");
        }
    }

    #[test]
    fn mixed_degrees() {
        assert!(Expr::parse("tensor(specht:3,specht:4)").unwrap().degree().is_err());
        assert_eq!(Expr::parse("dual(sign)").unwrap().degree().unwrap(), None);
    }
}
