//! Polynomial expressions with rational coefficients, as written in the
//! formula catalog: `n(n-1)/2`, `(3i + kappa - 2)/2`, `2^3 n`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{fractional_part, rat, Rational};
use crate::error::{Error, Result};

/// Sorted `(variable, exponent)` pairs; the empty monomial is `1`.
type Monomial = Vec<(String, u32)>;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Poly { terms }
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![(name.to_string(), 1)], Rational::one());
        Poly { terms }
    }

    fn insert(&mut self, mono: Monomial, c: Rational) {
        let entry = self.terms.entry(mono).or_insert_with(Rational::zero);
        *entry += c;
        self.terms.retain(|_, v| !v.is_zero());
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert(mono_mul(m1, m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::constant(Rational::one()), |acc, _| acc.mul(self))
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().map(|(_, e)| e).sum()).max().unwrap_or(0)
    }

    pub fn variables(&self) -> BTreeSet<String> {
        self.terms.keys().flat_map(|m| m.iter().map(|(v, _)| v.clone())).collect()
    }

    pub fn eval(&self, value: &dyn Fn(&str) -> Option<Rational>) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m {
                let x = value(v).ok_or_else(|| Error::Catalog(format!("no value for variable `{v}`")))?;
                t *= num_traits::pow(x, *e as usize);
            }
            total += t;
        }
        Ok(total)
    }

    /// For an affine polynomial in integer variables, the fractional parts
    /// of its coefficients. Two such polynomials differ by an integer for
    /// every choice of the variables when their keys agree.
    pub fn fractional_key(&self) -> Result<Vec<(String, Rational)>> {
        if self.degree() > 1 {
            return Err(Error::Catalog(format!("`{self}` is not affine")));
        }
        let mut key = Vec::new();
        for (m, c) in &self.terms {
            let f = fractional_part(c);
            if !f.is_zero() {
                let name = m.first().map_or(String::new(), |(v, _)| v.clone());
                key.push((name, f));
            }
        }
        Ok(key)
    }
}

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let mut map: BTreeMap<String, u32> = BTreeMap::new();
    for (v, e) in a.iter().chain(b) {
        *map.entry(v.clone()).or_insert(0) += e;
    }
    map.into_iter().collect()
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let vars: Vec<String> =
                m.iter().map(|(v, e)| if *e == 1 { v.clone() } else { format!("{v}^{e}") }).collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join(" "))?;
            } else {
                write!(f, "({mag}) {}", vars.join(" "))?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(u64),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut k = 0;
    while k < chars.len() {
        let ch = chars[k];
        if ch.is_whitespace() {
            k += 1;
        } else if ch.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let s: String = chars[start..k].iter().collect();
            out.push(Token::Num(s.parse().map_err(|_| Error::Catalog(format!("number too large in `{text}`")))?));
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            out.push(Token::Ident(chars[start..k].iter().collect()));
        } else if "+-*/^()".contains(ch) {
            out.push(Token::Op(ch));
            k += 1;
        } else {
            return Err(Error::Catalog(format!("unexpected `{ch}` in `{text}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn err(&self, what: &str) -> Error {
        Error::Catalog(format!("{what} in `{}`", self.text))
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        while let Some(Token::Op(op @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { acc.add(&rhs) } else { acc.sub(&rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek().cloned() {
                Some(Token::Op('*')) => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(Token::Op('/')) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    let c = rhs.as_constant().ok_or_else(|| self.err("division by a non-constant"))?;
                    if c.is_zero() {
                        return Err(self.err("division by zero"));
                    }
                    acc = acc.mul(&Poly::constant(c.recip()));
                }
                // Juxtaposition: `3i`, `n(n-1)`, `2 kappa`.
                Some(Token::Num(_) | Token::Ident(_) | Token::Op('(')) => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Poly> {
        if self.peek() == Some(&Token::Op('-')) {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Op('^')) {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Token::Num(e)) if e <= 64 => {
                    self.pos += 1;
                    Ok(base.pow(e as u32))
                }
                _ => Err(self.err("exponent must be a small literal")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek().cloned() {
            Some(Token::Num(v)) => {
                self.pos += 1;
                Ok(Poly::constant(Rational::from_integer(v.into())))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                Ok(Poly::var(&name))
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::Op(')')) {
                    return Err(self.err("missing `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => Err(self.err("expected a number, a variable or `(`")),
        }
    }
}

pub fn parse_poly(text: &str) -> Result<Poly> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(Error::Catalog("empty expression".into()));
    }
    let mut p = Parser { tokens, pos: 0, text };
    let out = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

/// Evaluate a parsed polynomial with integer variable values.
pub fn eval_with(poly: &Poly, vars: &BTreeMap<String, i64>) -> Result<Rational> {
    poly.eval(&|v| vars.get(v).map(|&x| rat(x)))
}
