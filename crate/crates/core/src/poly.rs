//! Exact Laurent polynomials in the five variables `X, Y, A, B, Z`.
//!
//! Exponents live on the half-integer grid and are stored doubled; coefficients
//! are big integers. The canonical text form sorts terms in descending
//! lexicographic order of the exponent vector `(X, Y, A, B, Z)`:
//!
//! ```text
//! 3*X^2*A^(3/2) - Y^-1 + 2
//! ```
//!
//! Integer exponents print bare, half-integer exponents as a reduced fraction
//! in parentheses. The zero polynomial prints as `0`. `str::parse` accepts
//! this form, and additionally parenthesised sub-expressions raised to
//! non-negative integer powers.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X = 0,
    Y = 1,
    A = 2,
    B = 3,
    Z = 4,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::X, Var::Y, Var::A, Var::B, Var::Z];

    pub fn name(self) -> char {
        ['X', 'Y', 'A', 'B', 'Z'][self as usize]
    }

    fn from_char(c: char) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == c)
    }
}

/// An exponent `doubled / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfExp {
    pub doubled: i64,
}

impl HalfExp {
    pub const ZERO: HalfExp = HalfExp { doubled: 0 };

    pub fn from_int(n: i64) -> HalfExp {
        HalfExp { doubled: 2 * n }
    }

    pub fn from_doubled(doubled: i64) -> HalfExp {
        HalfExp { doubled }
    }

    pub fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    /// The exponent as an integer, if it is one.
    pub fn as_int(self) -> Option<i64> {
        self.is_integer().then_some(self.doubled / 2)
    }
}

impl fmt::Display for HalfExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_int() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "({}/2)", self.doubled),
        }
    }
}

/// Doubled exponents, indexed by `Var as usize`.
pub type Exponents = [i64; 5];

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, [0; 5])
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(v, HalfExp::from_int(1))
    }

    /// `v^e` with coefficient one.
    pub fn monomial(v: Var, e: HalfExp) -> Self {
        let mut exps = [0; 5];
        exps[v as usize] = e.doubled;
        Self::term(1, exps)
    }

    /// `c * X^(x/2) * Y^(y/2) * ...` from doubled exponents.
    pub fn term(c: impl Into<BigInt>, doubled: Exponents) -> Self {
        let c = c.into();
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(doubled, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (descending) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, doubled: &Exponents) -> BigInt {
        self.terms.get(doubled).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, exps: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// The single term of a monomial, if `self` is one.
    pub fn as_monomial(&self) -> Option<(&Exponents, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiply by the monomial `v^e`.
    pub fn shift(&self, v: Var, e: HalfExp) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| {
                let mut k = *k;
                k[v as usize] += e.doubled;
                (k, c.clone())
            })
            .collect();
        Self { terms }
    }

    /// Image of `self` under the ring map sending each variable `v` to
    /// `bindings[v]` (or to itself when unbound). All variables are replaced
    /// simultaneously.
    ///
    /// A binding that is not a monomial with coefficient one may only be
    /// raised to non-negative integer powers (or to negative integer powers
    /// when its coefficient is `-1`).
    pub fn substitute(&self, bindings: &Substitution) -> Result<Self, Error> {
        let mut out = Self::zero();
        for (exps, c) in &self.terms {
            let mut acc = Self::constant(c.clone());
            for v in Var::ALL {
                let d = exps[v as usize];
                if d == 0 {
                    continue;
                }
                let factor = match &bindings.0[v as usize] {
                    None => Self::monomial(v, HalfExp::from_doubled(d)),
                    Some(p) => power(p, v, HalfExp::from_doubled(d))?,
                };
                acc = &acc * &factor;
            }
            for (k, c) in acc.terms {
                out.add_term(k, c);
            }
        }
        Ok(out)
    }

    /// Exchange two variables.
    pub fn swap(&self, a: Var, b: Var) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| {
                let mut k = *k;
                k.swap(a as usize, b as usize);
                (k, c.clone())
            })
            .collect();
        Self { terms }
    }
}

/// `p^e` where `p` is the binding of variable `v`.
fn power(p: &LaurentPoly, v: Var, e: HalfExp) -> Result<LaurentPoly, Error> {
    let unit_mono = p
        .as_monomial()
        .filter(|(_, c)| c.is_one() || (-*c).is_one());
    match (unit_mono, e.as_int()) {
        (_, Some(n)) if n >= 0 => Ok(p.pow(n as u32)),
        (Some((k, c)), Some(n)) => {
            // negative integer power of ±monomial
            let mut out = [0; 5];
            for (o, d) in out.iter_mut().zip(k) {
                *o = d * n;
            }
            let sign = if c.is_one() || n % 2 == 0 { 1 } else { -1 };
            Ok(LaurentPoly::term(sign, out))
        }
        (Some((k, c)), None) if c.is_one() => {
            // (m)^(d/2): exponent vector scales by d/2 and must stay on grid
            let mut out = [0; 5];
            for (o, dk) in out.iter_mut().zip(k) {
                let num = dk * e.doubled;
                if num % 2 != 0 {
                    return Err(Error::OffGrid);
                }
                *o = num / 2;
            }
            Ok(LaurentPoly::term(1, out))
        }
        _ => Err(Error::NonMonomialSubstitution {
            var: v.name(),
            exp: e.to_string(),
        }),
    }
}

/// Per-variable bindings for [`LaurentPoly::substitute`].
#[derive(Debug, Clone, Default)]
pub struct Substitution([Option<LaurentPoly>; 5]);

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(mut self, v: Var, p: LaurentPoly) -> Self {
        self.0[v as usize] = Some(p);
        self
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c.clone());
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                let mut k = [0; 5];
                for i in 0..5 {
                    k[i] = ka[i] + kb[i];
                }
                out.add_term(k, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl From<Var> for LaurentPoly {
    fn from(v: Var) -> Self {
        LaurentPoly::var(v)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl core::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |a, b| a + b)
    }
}

impl core::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |a, b| a * b)
    }
}

fn write_monomial(out: &mut String, exps: &Exponents) {
    let mut first = true;
    for v in Var::ALL {
        let d = exps[v as usize];
        if d == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push(v.name());
        if d != 2 {
            out.push('^');
            out.push_str(&HalfExp::from_doubled(d).to_string());
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (exps, c)) in self.terms().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let mag = c.abs();
            let constant = exps.iter().all(|&d| d == 0);
            if constant {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                write_monomial(&mut out, exps);
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let out = p.sum()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(out)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::PolySyntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<LaurentPoly, Error> {
        let mut acc = LaurentPoly::zero();
        let mut negate = self.eat(b'-');
        loop {
            let t = self.product()?;
            if negate {
                acc += -t;
            } else {
                acc += t;
            }
            if self.eat(b'+') {
                negate = false;
            } else if self.eat(b'-') {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<LaurentPoly, Error> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn digits(&mut self) -> Result<&str, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn small_int(&mut self) -> Result<i64, Error> {
        let neg = self.eat(b'-');
        let d = self.digits()?;
        let n: i64 = d.parse().map_err(|_| self.error("exponent out of range"))?;
        Ok(if neg { -n } else { n })
    }

    /// `n`, `-n`, `(n)`, `(n/d)`; returns the doubled exponent.
    fn exponent(&mut self) -> Result<i64, Error> {
        if self.eat(b'(') {
            let num = self.small_int()?;
            let den = if self.eat(b'/') { self.small_int()? } else { 1 };
            if !self.eat(b')') {
                return Err(self.error("expected `)`"));
            }
            if den <= 0 || (2 * num) % den != 0 {
                return Err(self.error("exponent is not on the half-integer grid"));
            }
            Ok(2 * num / den)
        } else {
            Ok(2 * self.small_int()?)
        }
    }

    fn factor(&mut self) -> Result<LaurentPoly, Error> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                if self.eat(b'^') {
                    let n = self.small_int()?;
                    let n = u32::try_from(n)
                        .map_err(|_| self.error("group powers must be non-negative"))?;
                    return Ok(inner.pow(n));
                }
                Ok(inner)
            }
            Some(b) if b.is_ascii_digit() => {
                let d = self.digits()?;
                let c: BigInt = d.parse().map_err(|_| self.error("bad integer"))?;
                Ok(LaurentPoly::constant(c))
            }
            Some(b) => match Var::from_char(b as char) {
                Some(v) => {
                    self.pos += 1;
                    let d = if self.eat(b'^') { self.exponent()? } else { 2 };
                    Ok(LaurentPoly::monomial(v, HalfExp::from_doubled(d)))
                }
                None => Err(self.error(&format!("unexpected character `{}`", b as char))),
            },
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// Parse or panic; test shorthand.
#[cfg(test)]
pub(crate) fn p(s: &str) -> LaurentPoly {
    s.parse()
        .unwrap_or_else(|e| panic!("bad polynomial literal {s:?}: {e}"))
}
