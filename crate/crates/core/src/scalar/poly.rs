use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{GaussianRational, Rational};
use crate::error::{Error, Result};

/// Formal parameters of the induced representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Symbol {
    #[serde(rename = "nu01")]
    Nu01,
    #[serde(rename = "nu02")]
    Nu02,
    #[serde(rename = "nu1")]
    Nu1,
    #[serde(rename = "nu2")]
    Nu2,
}

impl Symbol {
    pub const ALL: [Symbol; 4] = [Symbol::Nu01, Symbol::Nu02, Symbol::Nu1, Symbol::Nu2];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Symbol::Nu01 => "nu01",
            Symbol::Nu02 => "nu02",
            Symbol::Nu1 => "nu1",
            Symbol::Nu2 => "nu2",
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Symbol {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Symbol::ALL.into_iter().find(|sym| sym.name() == s).ok_or_else(|| Error::Parse(format!("unknown symbol {s:?}")))
    }
}

/// Exponent vector over `(nu01, nu02, nu1, nu2)`.
///
/// Ordered graded-lexicographically: total degree first, then exponents in
/// symbol order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u32; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 4]);

    pub fn new(exps: [u32; 4]) -> Self {
        Monomial(exps)
    }

    pub fn var(sym: Symbol) -> Self {
        let mut e = [0; 4];
        e[sym.index()] = 1;
        Monomial(e)
    }

    pub fn exponent(&self, sym: Symbol) -> u32 {
        self.0[sym.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(e)
    }

    fn symbols(&self) -> impl Iterator<Item = (Symbol, u32)> + '_ {
        Symbol::ALL.into_iter().filter_map(|s| (self.0[s.index()] > 0).then_some((s, self.0[s.index()])))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Assignment of values to symbols.
pub type Point = BTreeMap<Symbol, GaussianRational>;

/// Polynomial in the ν-parameters with Gaussian-rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality
/// of polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::ONE, c);
        }
        Scalar { terms }
    }

    pub fn integer(n: i64) -> Self {
        Scalar::constant(GaussianRational::integer(n))
    }

    pub fn rational(r: Rational) -> Self {
        Scalar::constant(r.into())
    }

    pub fn symbol(sym: Symbol) -> Self {
        Scalar::monomial(Monomial::var(sym), GaussianRational::one())
    }

    pub fn monomial(m: Monomial, c: GaussianRational) -> Self {
        let mut s = Scalar::zero();
        s.add_term(m, c);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; the zero polynomial has degree 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn coefficient(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The value if the polynomial has no symbolic part.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        Symbol::ALL.into_iter().filter(|s| self.terms.keys().any(|m| m.exponent(*s) > 0)).collect()
    }

    fn add_term(&mut self, m: Monomial, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn scale_rational(&self, r: &Rational) -> Scalar {
        if r.is_zero() {
            return Scalar::zero();
        }
        Scalar { terms: self.terms.iter().map(|(m, x)| (*m, x.scale(r))).collect() }
    }

    /// Division by a nonzero constant; any symbolic divisor is rejected.
    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        let c = rhs.as_constant().ok_or(Error::NonConstantDivisor)?;
        Ok(self.scale(&c.inv()?))
    }

    /// Full evaluation; every symbol that occurs must be assigned.
    pub fn eval(&self, point: &Point) -> Result<GaussianRational> {
        let mut total = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (sym, e) in m.symbols() {
                let v = point.get(&sym).ok_or(Error::MissingSymbol(sym))?;
                for _ in 0..e {
                    term = &term * v;
                }
            }
            total += &term;
        }
        Ok(total)
    }

    /// Partial substitution: assigned symbols are replaced, the rest stay.
    pub fn substitute(&self, point: &Point) -> Scalar {
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = [0u32; 4];
            for (sym, e) in m.symbols() {
                match point.get(&sym) {
                    Some(v) => {
                        for _ in 0..e {
                            coeff = &coeff * v;
                        }
                    }
                    None => rest[sym.index()] = e,
                }
            }
            out.add_term(Monomial(rest), coeff);
        }
        out
    }
}

impl From<GaussianRational> for Scalar {
    fn from(c: GaussianRational) -> Self {
        Scalar::constant(c)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::rational(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::integer(n)
    }
}

impl From<Symbol> for Scalar {
    fn from(s: Symbol) -> Self {
        Scalar::symbol(s)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(mut self, rhs: Scalar) -> Scalar {
        self += &rhs;
        self
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(mut self, rhs: Scalar) -> Scalar {
        self -= &rhs;
        self
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.clone().neg()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = if c.is_real() && c.re.is_negative() { (true, -c) } else { (false, c.clone()) };
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let vars: Vec<String> =
                m.symbols().map(|(s, e)| if e == 1 { s.to_string() } else { format!("{s}^{e}") }).collect();
            let coeff = if mag.is_real() { mag.to_string() } else { format!("({mag})") };
            if vars.is_empty() {
                f.write_str(&coeff)?;
            } else if mag.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{}*{}", coeff, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exps: BTreeMap<Symbol, u32>,
    re: Rational,
    im: Rational,
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    terms: Vec<TermRepr>,
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| TermRepr { exps: m.symbols().collect(), re: c.re.clone(), im: c.im.clone() })
            .collect();
        ScalarRepr { terms }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ScalarRepr::deserialize(deserializer)?;
        let mut out = Scalar::zero();
        for t in repr.terms {
            let mut e = [0u32; 4];
            for (sym, x) in t.exps {
                e[sym.index()] += x;
            }
            out.add_term(Monomial(e), GaussianRational::new(t.re, t.im));
        }
        Ok(out)
    }
}
