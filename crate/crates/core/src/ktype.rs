//! K-type combinatorics of the three standard modules.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::Parabolic;
use crate::scalar::{Point, Scalar, Symbol};

/// `rho_{0,1}`.
pub const RHO_01: i64 = 2;
/// `rho_{0,2}`.
pub const RHO_02: i64 = 1;
/// `rho_1 = rho_2`.
pub const RHO_I: i64 = 3;

/// Inducing data of a standard representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "series", rename_all = "lowercase")]
pub enum SeriesParams {
    /// Minimal parabolic: a character `sigma` of `M_0` and `nu = (nu01, nu02)`.
    P0 { sigma01: u8, sigma02: u8, nu01: Scalar, nu02: Scalar },
    /// Maximal parabolic `P_1` with discrete series `D_k` on `M_1`.
    P1 { k: i64, nu: Scalar },
    /// Maximal parabolic `P_2` with discrete series `D_k` on `M_2`.
    P2 { k: i64, nu: Scalar },
}

impl SeriesParams {
    /// `P_0` series with symbolic `nu01`, `nu02`.
    pub fn p0(sigma01: u8, sigma02: u8) -> Result<Self> {
        Self::p0_with(sigma01, sigma02, Symbol::Nu01.into(), Symbol::Nu02.into())
    }

    pub fn p0_with(sigma01: u8, sigma02: u8, nu01: Scalar, nu02: Scalar) -> Result<Self> {
        if sigma01 > 1 || sigma02 > 1 {
            return Err(Error::InvalidParams(format!("sigma bits must be 0 or 1, got ({sigma01}, {sigma02})")));
        }
        Ok(SeriesParams::P0 { sigma01, sigma02, nu01, nu02 })
    }

    /// `P_1` or `P_2` series with symbolic `nu1` or `nu2`.
    pub fn maximal(parabolic: Parabolic, k: i64) -> Result<Self> {
        let sym = match parabolic {
            Parabolic::P2 => Symbol::Nu2,
            _ => Symbol::Nu1,
        };
        Self::maximal_with(parabolic, k, sym.into())
    }

    pub fn maximal_with(parabolic: Parabolic, k: i64, nu: Scalar) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidParams(format!("Blattner parameter k = {k} must be at least 2")));
        }
        match parabolic {
            Parabolic::P1 => Ok(SeriesParams::P1 { k, nu }),
            Parabolic::P2 => Ok(SeriesParams::P2 { k, nu }),
            Parabolic::P0 => Err(Error::InvalidParams("P0 has no Blattner parameter".into())),
        }
    }

    pub fn kind(&self) -> Parabolic {
        match self {
            SeriesParams::P0 { .. } => Parabolic::P0,
            SeriesParams::P1 { .. } => Parabolic::P1,
            SeriesParams::P2 { .. } => Parabolic::P2,
        }
    }

    pub fn sigma(&self) -> Option<(u8, u8)> {
        match *self {
            SeriesParams::P0 { sigma01, sigma02, .. } => Some((sigma01, sigma02)),
            _ => None,
        }
    }

    pub fn blattner(&self) -> Option<i64> {
        match *self {
            SeriesParams::P1 { k, .. } | SeriesParams::P2 { k, .. } => Some(k),
            SeriesParams::P0 { .. } => None,
        }
    }

    /// Substitutes `point` into every `nu` coordinate.
    pub fn substitute(&self, point: &Point) -> Self {
        match self {
            SeriesParams::P0 { sigma01, sigma02, nu01, nu02 } => SeriesParams::P0 {
                sigma01: *sigma01,
                sigma02: *sigma02,
                nu01: nu01.substitute(point),
                nu02: nu02.substitute(point),
            },
            SeriesParams::P1 { k, nu } => SeriesParams::P1 { k: *k, nu: nu.substitute(point) },
            SeriesParams::P2 { k, nu } => SeriesParams::P2 { k: *k, nu: nu.substitute(point) },
        }
    }

    /// Symbols the `nu` coordinates of this series are named by.
    pub fn symbols(&self) -> Vec<Symbol> {
        match self.kind() {
            Parabolic::P0 => vec![Symbol::Nu01, Symbol::Nu02],
            Parabolic::P1 => vec![Symbol::Nu1],
            Parabolic::P2 => vec![Symbol::Nu2],
        }
    }

    /// Lowest `l` with `d(sigma; l) > 0`.
    pub fn minimal_ktype(&self) -> i64 {
        match *self {
            SeriesParams::P0 { sigma01: 0, sigma02: 0, .. } => 0,
            SeriesParams::P0 { .. } => 1,
            SeriesParams::P1 { k, .. } | SeriesParams::P2 { k, .. } => k,
        }
    }
}

impl fmt::Display for SeriesParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesParams::P0 { sigma01, sigma02, .. } => write!(f, "p0 sigma=({sigma01},{sigma02})"),
            SeriesParams::P1 { k, .. } => write!(f, "p1 k={k}"),
            SeriesParams::P2 { k, .. } => write!(f, "p2 k={k}"),
        }
    }
}

/// `epsilon(sigma_0; l)`, `None` for the maximal parabolics.
pub fn epsilon(params: &SeriesParams, l: i64) -> Option<u8> {
    params.sigma().map(|(s1, s2)| (l - s1 as i64 - s2 as i64).rem_euclid(2) as u8)
}

/// `delta(sigma; l)`, the parity of the block labels.
pub fn delta(params: &SeriesParams, l: i64) -> u8 {
    match *params {
        SeriesParams::P0 { sigma02, .. } => (l - sigma02 as i64).rem_euclid(2) as u8,
        SeriesParams::P1 { k, .. } | SeriesParams::P2 { k, .. } => (l - k).rem_euclid(2) as u8,
    }
}

/// Whether `p` belongs to `Z(sigma_0; l)`.
pub fn z_membership(params: &SeriesParams, l: i64, p: i64) -> Result<bool> {
    let eps = epsilon(params, l).ok_or_else(|| Error::InvalidParams("Z(sigma; l) is defined for P0 only".into()))?;
    let top = if eps == 0 { l } else { l - 1 };
    Ok((0..=top).contains(&p) && (p - delta(params, l) as i64).rem_euclid(2) == 0)
}

/// Whether `p` labels a column of the canonical block at level `l`.
pub fn in_block(params: &SeriesParams, l: i64, p: i64) -> bool {
    if l < 0 {
        return false;
    }
    match params.blattner() {
        None => z_membership(params, l, p).unwrap_or(false),
        Some(k) => (0..=l - k).contains(&p) && (p - (l - k)).rem_euclid(2) == 0,
    }
}

/// `d(sigma; l)` from the closed forms.
pub fn multiplicity(params: &SeriesParams, l: i64) -> i64 {
    if l < 0 {
        return 0;
    }
    match *params {
        SeriesParams::P0 { sigma01: 0, sigma02: 0, .. } => {
            if l % 2 == 0 {
                (l + 2) / 2
            } else {
                (l - 1) / 2
            }
        }
        SeriesParams::P0 { .. } => {
            if l % 2 == 0 {
                l / 2
            } else {
                (l + 1) / 2
            }
        }
        SeriesParams::P1 { k, .. } | SeriesParams::P2 { k, .. } => {
            if k > l {
                0
            } else if (l - k) % 2 == 0 {
                (l - k + 2) / 2
            } else {
                (l - k + 1) / 2
            }
        }
    }
}

/// Column labels of the canonical block, in increasing order.
pub fn block_labels(params: &SeriesParams, l: i64) -> Vec<i64> {
    if l < 0 {
        return Vec::new();
    }
    let top = match params.blattner() {
        Some(k) => l - k,
        None if epsilon(params, l) == Some(0) => l,
        None => l - 1,
    };
    (delta(params, l) as i64..=top).step_by(2).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KTypeInfo {
    pub l: i64,
    pub multiplicity: i64,
    pub p_list: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<u8>,
    pub delta: u8,
}

pub fn ktype_info(params: &SeriesParams, l: i64) -> KTypeInfo {
    let p_list = block_labels(params, l);
    KTypeInfo { l, multiplicity: p_list.len() as i64, p_list, epsilon: epsilon(params, l), delta: delta(params, l) }
}

/// `n(sigma; l, m)`, the number of zero rows above the Gamma block.
pub fn row_offset_n(params: &SeriesParams, l: i64, m: i64) -> Result<i64> {
    if !(-2..=2).contains(&m) {
        return Err(Error::BadShift(m));
    }
    if m % 2 == 0 {
        return Ok((2 - m) / 2);
    }
    let key = match *params {
        SeriesParams::P0 { sigma02, .. } => l + sigma02 as i64,
        SeriesParams::P1 { k, .. } | SeriesParams::P2 { k, .. } => l - k,
    };
    Ok(if key.rem_euclid(2) == 0 { (3 - m) / 2 } else { (1 - m) / 2 })
}
