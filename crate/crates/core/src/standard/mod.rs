//! The K-finite part of a standard representation, truncated at a K-type
//! level, with the actions of `k_C` and `p_C` on elementary vectors.

mod verify;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::gamma_coeff;
use crate::ktype::{self, SeriesParams};
use crate::lie::{self, Parabolic};
use crate::matrix::LieMatrix;
use crate::scalar::{GaussianRational, Rational, Scalar};
use crate::su2::{cg_b, component_exists, tau_act, Generator};

pub use verify::{random_point, verify_brackets, ClassReport, DiffTerm, Failure, VerifyOptions, VerifyReport};

/// Label `(l; p, q)` of an elementary vector `s(l;p,q)` or `t_i(l;p,q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ElementaryIndex {
    pub l: i64,
    pub p: i64,
    pub q: i64,
    pub series: Parabolic,
}

impl ElementaryIndex {
    pub fn new(series: Parabolic, l: i64, p: i64, q: i64) -> Self {
        ElementaryIndex { l, p, q, series }
    }
}

impl fmt::Display for ElementaryIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.series {
            Parabolic::P0 => "s",
            Parabolic::P1 => "t1",
            Parabolic::P2 => "t2",
        };
        write!(f, "{name}({};{},{})", self.l, self.p, self.q)
    }
}

/// Reduces `(l; p, q)` to a canonical label. `None` means the vector is zero.
pub fn normalize_index(params: &SeriesParams, l: i64, p: i64, q: i64) -> Option<(i64, ElementaryIndex)> {
    if l < 0 || !(0..=2 * l).contains(&q) {
        return None;
    }
    let series = params.kind();
    let (sign, p) = match ktype::epsilon(params, l) {
        Some(eps) if p > l => (if eps == 0 { 1 } else { -1 }, 2 * l - p),
        _ => (1, p),
    };
    ktype::in_block(params, l, p).then_some((sign, ElementaryIndex::new(series, l, p, q)))
}

/// All canonical labels with `l <= l_max`.
pub fn basis(params: &SeriesParams, l_max: i64) -> Vec<ElementaryIndex> {
    let series = params.kind();
    (0..=l_max)
        .flat_map(|l| {
            ktype::block_labels(params, l)
                .into_iter()
                .flat_map(move |p| (0..=2 * l).map(move |q| ElementaryIndex::new(series, l, p, q)))
        })
        .collect()
}

/// Finite linear combination of elementary vectors.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ModuleVector {
    terms: BTreeMap<ElementaryIndex, Scalar>,
}

impl ModuleVector {
    pub fn zero() -> Self {
        ModuleVector::default()
    }

    pub fn basis(index: ElementaryIndex) -> Self {
        let mut v = ModuleVector::zero();
        v.add_term(index, &Scalar::one());
        v
    }

    /// `c * s(l;p,q)` with the label normalized first.
    pub fn from_label(params: &SeriesParams, l: i64, p: i64, q: i64, c: &Scalar) -> Self {
        let mut v = ModuleVector::zero();
        if let Some((sign, idx)) = normalize_index(params, l, p, q) {
            v.add_term(idx, &c.scale_rational(&Rational::integer(sign)));
        }
        v
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

    pub fn get(&self, index: &ElementaryIndex) -> Scalar {
        self.terms.get(index).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ElementaryIndex, &Scalar)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &ElementaryIndex> {
        self.terms.keys()
    }

    pub fn max_level(&self) -> Option<i64> {
        self.terms.keys().map(|i| i.l).max()
    }

    pub fn add_term(&mut self, index: ElementaryIndex, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(index).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&index);
        }
    }

    pub fn add_scaled(&mut self, other: &ModuleVector, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (idx, x) in &other.terms {
            self.add_term(*idx, &(x * c));
        }
    }

    pub fn add_multiple(&mut self, other: &ModuleVector, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        for (idx, x) in &other.terms {
            self.add_term(*idx, &x.scale(c));
        }
    }

    pub fn scale(&self, c: &Scalar) -> ModuleVector {
        let mut out = ModuleVector::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        for (idx, x) in &other.terms {
            let e = out.terms.entry(*idx).or_default();
            *e -= x;
            if e.is_zero() {
                out.terms.remove(idx);
            }
        }
        out
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(i, c)| format!("({c})*{i}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Coefficients `gamma_{[l,m;p,j]}` and `B_{[2l,2m;q,r]}` needed below the cutoff.
#[derive(Debug, Default)]
struct Tables {
    gamma: HashMap<(i64, i64, i64, i64), Scalar>,
    b: HashMap<(i64, i64, i64, i64), Rational>,
}

impl Tables {
    fn build(params: &SeriesParams, l_max: i64) -> Result<Self> {
        let mut t = Tables::default();
        for l in 0..=l_max {
            for m in -2..=2 {
                if l + m < 0 || !component_exists(2 * l, m) {
                    continue;
                }
                for p in ktype::block_labels(params, l) {
                    for j in -1..=1 {
                        t.gamma.insert((l, m, p, j), gamma_coeff(params, l, m, p, j)?);
                    }
                }
                for q in 0..=2 * l {
                    for r in 0..=4 {
                        t.b.insert((l, m, q, r), cg_b(2 * l, m, q, r)?);
                    }
                }
            }
        }
        Ok(t)
    }
}

/// A standard module cut off at K-type level `l_max`.
#[derive(Debug, Clone)]
pub struct Truncation {
    pub l_max: i64,
    pub params: SeriesParams,
    tables: Arc<Tables>,
}

impl PartialEq for Truncation {
    fn eq(&self, other: &Self) -> bool {
        self.l_max == other.l_max && self.params == other.params
    }
}

impl Truncation {
    pub fn new(params: SeriesParams, l_max: i64) -> Result<Self> {
        if l_max < params.minimal_ktype() {
            return Err(Error::InvalidParams(format!(
                "l_max = {l_max} is below the minimal K-type {}",
                params.minimal_ktype()
            )));
        }
        let tables = Arc::new(Tables::build(&params, l_max)?);
        Ok(Truncation { l_max, params, tables })
    }

    pub fn basis(&self) -> Vec<ElementaryIndex> {
        basis(&self.params, self.l_max)
    }

    /// `tau_{2l}(gen)` in the `q` index.
    pub fn act_k(&self, gen: Generator, v: &ModuleVector) -> ModuleVector {
        act_k(gen, v)
    }

    pub fn act_p(&self, r: i64, v: &ModuleVector) -> Result<ModuleVector> {
        act_p(r, v, self)
    }

    pub fn act_gc(&self, x: &LieMatrix, v: &ModuleVector) -> Result<ModuleVector> {
        act_gc(x, v, self)
    }

    fn gamma(&self, l: i64, m: i64, p: i64, j: i64) -> Result<Scalar> {
        match self.tables.gamma.get(&(l, m, p, j)) {
            Some(g) => Ok(g.clone()),
            None => gamma_coeff(&self.params, l, m, p, j),
        }
    }

    fn b(&self, l: i64, m: i64, q: i64, r: i64) -> Result<Rational> {
        match self.tables.b.get(&(l, m, q, r)) {
            Some(b) => Ok(b.clone()),
            None => cg_b(2 * l, m, q, r),
        }
    }
}

pub fn act_k(gen: Generator, v: &ModuleVector) -> ModuleVector {
    let mut out = ModuleVector::zero();
    for (idx, c) in v.terms() {
        if let Ok(Some((q, x))) = tau_act(gen, 2 * idx.l, idx.q) {
            out.add_term(ElementaryIndex { q, ..*idx }, &c.scale_rational(&Rational::integer(x)));
        }
    }
    out
}

/// Action of `X_r`, expanded through the contiguous relations.
pub fn act_p(r: i64, v: &ModuleVector, trunc: &Truncation) -> Result<ModuleVector> {
    if !(0..=4).contains(&r) {
        return Err(Error::IndexOutOfRange { index: r, max: 4 });
    }
    let params = &trunc.params;
    let mut out = ModuleVector::zero();
    for (idx, c) in v.terms() {
        let (l, p, q) = (idx.l, idx.p, idx.q);
        for m in -2..=2 {
            if l + m < 0 || !component_exists(2 * l, m) {
                continue;
            }
            let b = trunc.b(l, m, q, r)?;
            if b.is_zero() {
                continue;
            }
            let cb = c.scale_rational(&b);
            for j in -1..=1 {
                let g = trunc.gamma(l, m, p, j)?;
                if g.is_zero() {
                    continue;
                }
                let Some((sign, target)) = normalize_index(params, l + m, p + m + 2 * j, q + m + r - 2) else {
                    continue;
                };
                if target.l > trunc.l_max {
                    return Err(Error::TruncationLeak { level: target.l, l_max: trunc.l_max });
                }
                let gc = &g * &cb;
                out.add_term(target, &if sign < 0 { -gc } else { gc });
            }
        }
    }
    Ok(out)
}

/// Action of an arbitrary element of `g_C`, split into its `k_C` and `p_C` parts.
pub fn act_gc(x: &LieMatrix, v: &ModuleVector, trunc: &Truncation) -> Result<ModuleVector> {
    let (kc, pc) = lie::cartan_coordinates(x)?;
    act_cartan(&kc, &pc, v, trunc)
}

/// Action of `sum kc[g] dphi(g) + sum pc[r] X_r`.
pub fn act_cartan(
    kc: &[GaussianRational; 3],
    pc: &[GaussianRational; 5],
    v: &ModuleVector,
    trunc: &Truncation,
) -> Result<ModuleVector> {
    let mut out = ModuleVector::zero();
    for (gen, c) in Generator::ALL.into_iter().zip(kc) {
        if !c.is_zero() {
            out.add_multiple(&act_k(gen, v), c);
        }
    }
    for (r, c) in pc.iter().enumerate() {
        if !c.is_zero() {
            out.add_multiple(&act_p(r as i64, v, trunc)?, c);
        }
    }
    Ok(out)
}
