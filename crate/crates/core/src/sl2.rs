//! `SL(2, R)`: principal series on the `chi_p` basis, the discrete series
//! `D_k` of `SL^{\pm}(2, R)`, and the reducibility points.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::Sl2Generator;
use crate::scalar::{GaussianRational, Rational, Scalar};

/// The value `sigma(-1_2)` of the character of `{±1_2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(n: i64) -> Sign {
        if n.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// Parity of the weights `p` carried by the series.
    pub fn parity(self) -> i64 {
        match self {
            Sign::Plus => 0,
            Sign::Minus => 1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+" | "+1" | "1" | "plus" => Ok(Sign::Plus),
            "-" | "-1" | "minus" => Ok(Sign::Minus),
            other => Err(Error::Parse(format!("sign must be + or -, got {other:?}"))),
        }
    }
}

/// Principal series action on `chi_p`: returns `(coefficient, target weight)`.
pub fn ps_act(gen: Sl2Generator, nu: &Scalar, sign: Sign, p: i64) -> Result<(Scalar, i64)> {
    if p.rem_euclid(2) != sign.parity() {
        return Err(Error::ParityViolation { p });
    }
    Ok(match gen {
        Sl2Generator::W => (Scalar::constant(GaussianRational::new(Rational::zero(), Rational::integer(p))), p),
        Sl2Generator::XPlus => (nu + &Scalar::integer(1 + p), p + 2),
        Sl2Generator::XMinus => (nu + &Scalar::integer(1 - p), p - 2),
    })
}

/// Operators acting on the `O(2)`-finite part of `D_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DkOperator {
    Lie(Sl2Generator),
    /// `kappa_t` acts on `chi_p` by `exp(sqrt(-1) p t)`; the coefficient returned is the weight `p`.
    KappaWeight,
    /// The reflection `y_0 = diag(1, -1)`.
    Y0,
}

/// Whether `chi_p` lies in `D_k`.
pub fn in_dk(k: i64, p: i64) -> bool {
    p.abs() >= k && (p - k).rem_euclid(2) == 0
}

pub fn dk_act(op: DkOperator, k: i64, p: i64) -> Result<(GaussianRational, i64)> {
    if !in_dk(k, p) {
        return Err(Error::NotInModule { k, p });
    }
    Ok(match op {
        DkOperator::Lie(Sl2Generator::W) => (GaussianRational::new(Rational::zero(), Rational::integer(p)), p),
        DkOperator::Lie(Sl2Generator::XPlus) => (GaussianRational::integer(k + p), p + 2),
        DkOperator::Lie(Sl2Generator::XMinus) => (GaussianRational::integer(k - p), p - 2),
        DkOperator::KappaWeight => (GaussianRational::integer(p), p),
        DkOperator::Y0 => (GaussianRational::one(), -p),
    })
}

/// Reducibility type of the principal series `pi_{(nu, sigma)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag")]
pub enum Sl2Classification {
    /// `D_k^+ + D_k^-` is a submodule, with a `(k-1)`-dimensional quotient.
    DiscreteEmbedding {
        k: i64,
    },
    /// The span of `chi_p`, `|p| <= k-2`, is invariant, with quotient `D_k^+ + D_k^-`.
    FiniteQuotient {
        k: i64,
    },
    /// Sum of the two limits of discrete series.
    LimitSum,
    Irreducible,
}

/// `sign` is `sigma(-1_2)`; non-real or non-integral `nu` is irreducible.
pub fn classify(nu: &GaussianRational, sign: Sign) -> Sl2Classification {
    let Some(n) = nu.is_real().then(|| nu.re.to_i64()).flatten() else {
        return Sl2Classification::Irreducible;
    };
    let k = n.abs() + 1;
    let matches_sign = Sign::from_parity(k) == sign;
    if n >= 1 && matches_sign {
        Sl2Classification::DiscreteEmbedding { k }
    } else if n <= -1 && matches_sign {
        Sl2Classification::FiniteQuotient { k }
    } else if n == 0 && sign == Sign::Minus {
        Sl2Classification::LimitSum
    } else {
        Sl2Classification::Irreducible
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Symbol;

    #[test]
    fn ps_examples() {
        let nu = Scalar::symbol(Symbol::Nu1);
        assert_eq!(ps_act(Sl2Generator::XPlus, &nu, Sign::Plus, 0).unwrap(), (&nu + &Scalar::one(), 2));
        assert_eq!(
            ps_act(Sl2Generator::W, &nu, Sign::Plus, 4).unwrap(),
            (Scalar::constant(GaussianRational::from_parts((0, 1), (4, 1))), 4)
        );
        let (c, t) = ps_act(Sl2Generator::XMinus, &Scalar::integer(-3), Sign::Plus, -2).unwrap();
        assert!(c.is_zero());
        assert_eq!(t, -4);
        assert_eq!(ps_act(Sl2Generator::W, &nu, Sign::Minus, 2), Err(Error::ParityViolation { p: 2 }));
    }

    #[test]
    fn dk_examples() {
        let x_minus = DkOperator::Lie(Sl2Generator::XMinus);
        let x_plus = DkOperator::Lie(Sl2Generator::XPlus);
        assert_eq!(dk_act(x_minus, 2, 2).unwrap(), (GaussianRational::zero(), 0));
        assert_eq!(dk_act(x_plus, 2, 2).unwrap(), (GaussianRational::integer(4), 4));
        assert_eq!(dk_act(DkOperator::Y0, 3, 5).unwrap(), (GaussianRational::one(), -5));
        assert_eq!(dk_act(x_plus, 3, 1), Err(Error::NotInModule { k: 3, p: 1 }));
    }

    #[test]
    fn classify_examples() {
        let c = |n: i64, d: i64, s| classify(&GaussianRational::ratio(n, d), s);
        assert_eq!(c(1, 1, Sign::Plus), Sl2Classification::DiscreteEmbedding { k: 2 });
        assert_eq!(c(0, 1, Sign::Minus), Sl2Classification::LimitSum);
        assert_eq!(c(1, 2, Sign::Plus), Sl2Classification::Irreducible);
        assert_eq!(c(-2, 1, Sign::Minus), Sl2Classification::FiniteQuotient { k: 3 });
        assert_eq!(c(2, 1, Sign::Plus), Sl2Classification::Irreducible);
        assert_eq!(classify(&GaussianRational::i(), Sign::Plus), Sl2Classification::Irreducible);
    }

    #[test]
    fn classification_json() {
        assert_eq!(serde_json::to_string(&Sl2Classification::LimitSum).unwrap(), r#"{"tag":"LimitSum"}"#);
        assert_eq!(
            serde_json::to_string(&Sl2Classification::DiscreteEmbedding { k: 2 }).unwrap(),
            r#"{"tag":"DiscreteEmbedding","k":2}"#
        );
    }
}
