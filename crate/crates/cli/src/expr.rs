//! Bound expressions in `k` (and `d`) for the `check` command.
//!
//! Grammar, with the usual precedence and `^` binding tightest:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := power (('*' | '/') power)*
//! power  := atom ('^' atom)?
//! atom   := integer | 'k' | 'd' | call | '(' expr ')'
//! call   := name '(' expr (',' expr)* ')'
//! name   := 'C' | 'A' | 'B' | 'G' | 'max' | 'min'
//! ```
//!
//! `C(n, r)` is the binomial coefficient, `A(x)` and `B(x)` the bounds of
//! the elementary argument in dimension `d`, `G(x)` the topological upper
//! bound `g_upper(d, x)`. Division is exact integer division and fails on
//! a remainder. A negative final value is an error.

use anyhow::{anyhow, bail, ensure};
use gpreps_core::solver::{binomial, bound_a, bound_b, bound_g_upper};
use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(src: &str) -> anyhow::Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Num(text.parse()?));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^(),".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            bail!("unexpected character {c:?} in bound expression");
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
enum Node {
    Num(BigInt),
    K,
    D,
    Neg(Box<Node>),
    Bin(char, Box<Node>, Box<Node>),
    Call(String, Vec<Node>),
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, op: char) -> anyhow::Result<()> {
        ensure!(self.eat(op), "expected {op:?} in bound expression");
        Ok(())
    }

    fn expr(&mut self) -> anyhow::Result<Node> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                Some(Tok::Op(c @ ('+' | '-'))) => *c,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            lhs = Node::Bin(op, Box::new(lhs), Box::new(self.term()?));
        }
    }

    fn term(&mut self) -> anyhow::Result<Node> {
        let mut lhs = self.power()?;
        loop {
            let op = match self.peek() {
                Some(Tok::Op(c @ ('*' | '/'))) => *c,
                _ => return Ok(lhs),
            };
            self.pos += 1;
            lhs = Node::Bin(op, Box::new(lhs), Box::new(self.power()?));
        }
    }

    fn power(&mut self) -> anyhow::Result<Node> {
        let base = self.unary()?;
        if self.eat('^') {
            Ok(Node::Bin('^', Box::new(base), Box::new(self.unary()?)))
        } else {
            Ok(base)
        }
    }

    fn unary(&mut self) -> anyhow::Result<Node> {
        if self.eat('-') {
            return Ok(Node::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> anyhow::Result<Node> {
        let tok = self
            .peek()
            .cloned()
            .ok_or_else(|| anyhow!("bound expression ends early"))?;
        self.pos += 1;
        match tok {
            Tok::Num(n) => Ok(Node::Num(n)),
            Tok::Op('(') => {
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            Tok::Ident(name) if name == "k" => Ok(Node::K),
            Tok::Ident(name) if name == "d" => Ok(Node::D),
            Tok::Ident(name) => {
                self.expect('(')?;
                let mut args = vec![self.expr()?];
                while self.eat(',') {
                    args.push(self.expr()?);
                }
                self.expect(')')?;
                let arity = match name.as_str() {
                    "C" | "max" | "min" => 2,
                    "A" | "B" | "G" => 1,
                    _ => bail!("unknown function {name:?} in bound expression"),
                };
                ensure!(args.len() == arity, "{name} takes {arity} argument(s)");
                Ok(Node::Call(name, args))
            }
            Tok::Op(c) => bail!("unexpected {c:?} in bound expression"),
        }
    }
}

fn small(x: &BigInt, what: &str) -> anyhow::Result<u64> {
    x.to_u64()
        .ok_or_else(|| anyhow!("{what} must be a small non-negative integer, got {x}"))
}

fn eval(node: &Node, k: &BigInt, d: u64) -> anyhow::Result<BigInt> {
    let big = |u: BigUint| BigInt::from_biguint(Sign::Plus, u);
    Ok(match node {
        Node::Num(n) => n.clone(),
        Node::K => k.clone(),
        Node::D => BigInt::from(d),
        Node::Neg(x) => -eval(x, k, d)?,
        Node::Bin(op, a, b) => {
            let a = eval(a, k, d)?;
            let b = eval(b, k, d)?;
            match op {
                '+' => a + b,
                '-' => a - b,
                '*' => a * b,
                '/' => {
                    ensure!(!b.is_zero(), "division by zero in bound expression");
                    let (q, r) = a.div_rem(&b);
                    ensure!(r.is_zero(), "{a}/{b} is not an integer");
                    q
                }
                '^' => {
                    let e = small(&b, "exponent")?;
                    ensure!(e <= 4096, "exponent {e} too large");
                    num_traits::pow(a, e as usize)
                }
                _ => unreachable!("parser only emits arithmetic operators"),
            }
        }
        Node::Call(name, args) => {
            let vals = args
                .iter()
                .map(|a| eval(a, k, d))
                .collect::<anyhow::Result<Vec<_>>>()?;
            match name.as_str() {
                "C" => big(binomial(
                    small(&vals[0], "C's n")?,
                    small(&vals[1], "C's r")?,
                )),
                "A" => big(bound_a(d, small(&vals[0], "A's argument")?)),
                "B" => big(bound_b(d, small(&vals[0], "B's argument")?)),
                "G" => {
                    let x = vals[0]
                        .to_i64()
                        .ok_or_else(|| anyhow!("G's argument is too large"))?;
                    big(bound_g_upper(d, x)?)
                }
                "max" => vals[0].clone().max(vals[1].clone()),
                "min" => vals[0].clone().min(vals[1].clone()),
                _ => unreachable!("parser only accepts known functions"),
            }
        }
    })
}

/// A parsed bound expression.
#[derive(Clone, Debug)]
pub struct BoundExpr {
    root: Node,
}

impl BoundExpr {
    pub fn parse(src: &str) -> anyhow::Result<Self> {
        let mut p = Parser {
            toks: lex(src)?,
            pos: 0,
        };
        let root = p.expr()?;
        ensure!(
            p.pos == p.toks.len(),
            "trailing input in bound expression {src:?}"
        );
        Ok(BoundExpr { root })
    }

    pub fn eval(&self, k: usize, d: usize) -> anyhow::Result<BigUint> {
        let v = eval(&self.root, &BigInt::from(k), d as u64)?;
        ensure!(
            !v.is_negative(),
            "bound expression is negative ({v}) at k = {k}"
        );
        Ok(v.magnitude().clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn at(src: &str, k: usize, d: usize) -> u64 {
        BoundExpr::parse(src)
            .unwrap()
            .eval(k, d)
            .unwrap()
            .to_u64()
            .unwrap()
    }

    #[test]
    fn arithmetic_and_precedence() {
        assert_eq!(at("k", 5, 2), 5);
        assert_eq!(at("2*k+1", 3, 2), 7);
        assert_eq!(at("2*(k+1)", 3, 2), 8);
        assert_eq!(at("k^2 - k", 4, 2), 12);
        assert_eq!(at("-k + 10", 4, 2), 6);
        assert_eq!(at("(k^2)/2", 4, 2), 8);
    }

    #[test]
    fn functions_match_library_bounds() {
        assert_eq!(at("A(k)", 4, 2), 7);
        assert_eq!(at("B(k)", 4, 2), 25);
        assert_eq!(at("d*C(2*k+2, d)+1", 1, 2), 13);
        assert_eq!(at("G(k-2)", 3, 1), 3);
        assert_eq!(at("max(k, 3) + min(k, 3)", 5, 2), 8);
    }

    #[test]
    fn errors_are_reported() {
        assert!(BoundExpr::parse("k +").is_err());
        assert!(BoundExpr::parse("foo(k)").is_err());
        assert!(BoundExpr::parse("C(k)").is_err());
        assert!(BoundExpr::parse("k $ 2").is_err());
        assert!(BoundExpr::parse("(k").is_err());
        assert!(BoundExpr::parse("k k").is_err());
        assert!(BoundExpr::parse("k - 10").unwrap().eval(3, 2).is_err());
        assert!(BoundExpr::parse("k / 2").unwrap().eval(3, 2).is_err());
        assert!(BoundExpr::parse("k / 0").unwrap().eval(3, 2).is_err());
    }
}
