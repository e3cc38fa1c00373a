//! The coefficients `gamma` and the contiguous-relation matrices
//! `R(Gamma_{l,m})` relating neighbouring K-types.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ktype::{self, SeriesParams, RHO_01, RHO_02, RHO_I};
use crate::lie::Parabolic;
use crate::scalar::{Rational, Scalar};
use crate::su2::{cg_a, component_exists};

fn a_or_zero(l: i64, m: i64, k: i64, i: i64) -> Rational {
    if component_exists(l, m) {
        cg_a(l, m, k, i).expect("component exists")
    } else {
        Rational::zero()
    }
}

/// `gamma_{[l,m;p,j]}` for `j` in `{-1, 0, 1}`.
///
/// Zero whenever `V_{2(l+m)}` does not occur in `V_{2l} (x) V_4`.
pub fn gamma_coeff(params: &SeriesParams, l: i64, m: i64, p: i64, j: i64) -> Result<Scalar> {
    if !(-2..=2).contains(&m) {
        return Err(Error::BadShift(m));
    }
    if !(-1..=1).contains(&j) {
        return Err(Error::InvalidParams(format!("band index j = {j} outside -1..=1")));
    }
    if l < 0 || l + m < 0 || !component_exists(2 * l, m) {
        return Ok(Scalar::zero());
    }
    let (l2, m2) = (2 * l, m);
    let shift = Scalar::integer(l * m - 3) + Scalar::rational(Rational::new(m * (m + 1), 2));
    let out = match params {
        SeriesParams::P0 { nu01, nu02, .. } => match j {
            1 => (nu02 + &Scalar::integer(RHO_02 - l + p)).scale_rational(&a_or_zero(l2, m2, 2 * l - p + m - 2, 0)),
            0 => {
                let lin = &(&nu01.scale_rational(&Rational::integer(2)) - nu02) + &Scalar::integer(2 * RHO_01 - RHO_02);
                (&lin + &shift).scale_rational(&(Rational::new(-1, 3) * a_or_zero(l2, m2, 2 * l - p + m, 2)))
            }
            _ => (nu02 + &Scalar::integer(RHO_02 + l - p)).scale_rational(&a_or_zero(l2, m2, 2 * l - p + m + 2, 4)),
        },
        SeriesParams::P1 { k, nu } | SeriesParams::P2 { k, nu } => {
            let i = if params.kind() == Parabolic::P1 { 1 } else { 2 };
            let sign = Rational::sign_power(i + 1);
            match j {
                1 => Scalar::rational(sign * Rational::integer(k - l + p) * a_or_zero(l2, m2, 2 * l - p + m - 2, 0)),
                0 => (&(nu + &Scalar::integer(RHO_I)) + &shift).scale_rational(
                    &(Rational::sign_power(i) * Rational::new(1, 3) * a_or_zero(l2, m2, 2 * l - p + m, 2)),
                ),
                _ => Scalar::rational(sign * Rational::integer(k + l - p) * a_or_zero(l2, m2, 2 * l - p + m + 2, 4)),
            }
        }
    };
    Ok(out)
}

/// Which parity selects among the `P_0`, `sigma_{0,2} = 0` case blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseKey {
    /// Parity of `sigma_{0,1} + l`.
    #[default]
    Header,
    /// Parity of `l + sigma_{0,2}`, the key used for `n(sigma; l, m)`.
    Offset,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct AssemblyOptions {
    pub case_key: CaseKey,
    /// Drop corner terms whose unit vector `e^{(n)}_i` has `i` out of
    /// range, as the block notation does for small `d`.
    pub verbatim_erasure: bool,
}

/// The block shapes of the contiguous relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AssemblyCase {
    /// `sigma_{0,2} = 0`, `m` even, key even.
    EvenShiftEven,
    /// `sigma_{0,2} = 0`, `m` even, key odd.
    EvenShiftOdd,
    /// `sigma_{0,2} = 0`, `m` odd, key even, `d = 1`.
    OddShiftEvenSingle,
    /// `sigma_{0,2} = 0`, `m` odd, key even, `d > 1`.
    OddShiftEven,
    /// `sigma_{0,2} = 0`, `m` odd, key odd.
    OddShiftOdd,
    /// `sigma_{0,2} = 1`.
    SigmaTwo,
    /// `P_1` and `P_2`.
    Maximal,
}

pub fn assembly_case(params: &SeriesParams, l: i64, m: i64, key: CaseKey) -> Result<AssemblyCase> {
    if !(-2..=2).contains(&m) {
        return Err(Error::BadShift(m));
    }
    let (s1, s2) = match params.sigma() {
        None => return Ok(AssemblyCase::Maximal),
        Some((_, 1)) => return Ok(AssemblyCase::SigmaTwo),
        Some(s) => s,
    };
    let parity = match key {
        CaseKey::Header => s1 as i64 + l,
        CaseKey::Offset => l + s2 as i64,
    }
    .rem_euclid(2);
    Ok(match (m.rem_euclid(2), parity) {
        (0, 0) => AssemblyCase::EvenShiftEven,
        (0, _) => AssemblyCase::EvenShiftOdd,
        (_, 0) if ktype::multiplicity(params, l) == 1 => AssemblyCase::OddShiftEvenSingle,
        (_, 0) => AssemblyCase::OddShiftEven,
        _ => AssemblyCase::OddShiftOdd,
    })
}

/// The stacked matrix `[O_{n,d}; R(Gamma_{l,m})]` before the zero rows are removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaStack {
    pub case: AssemblyCase,
    pub n: i64,
    pub rows: usize,
    pub cols: usize,
    pub entries: BTreeMap<(usize, usize), Scalar>,
}

impl GammaStack {
    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.entries.get(&(r, c)).cloned().unwrap_or_default()
    }

    fn add(&mut self, r: i64, c: i64, v: Scalar) {
        if v.is_zero() {
            return;
        }
        let e = self.entries.entry((r as usize, c as usize)).or_default();
        *e += &v;
        if e.is_zero() {
            self.entries.remove(&(r as usize, c as usize));
        }
    }
}

/// Assembles the stacked matrix from the case blocks.
pub fn gamma_stack(params: &SeriesParams, l: i64, m: i64, opts: AssemblyOptions) -> Result<GammaStack> {
    let case = assembly_case(params, l, m, opts.case_key)?;
    let d = ktype::multiplicity(params, l);
    let d_next = ktype::multiplicity(params, l + m);
    if d == 0 {
        return Err(Error::EmptyBlock { l });
    }
    if d_next == 0 {
        return Err(Error::EmptyBlock { l: l + m });
    }
    let n = ktype::row_offset_n(params, l, m)?;
    let dl = ktype::delta(params, l) as i64;
    let gamma = |p: i64, j: i64| gamma_coeff(params, l, m, p, j);
    let stack_rows = match case {
        AssemblyCase::OddShiftEvenSingle => 1,
        AssemblyCase::OddShiftEven => d,
        AssemblyCase::OddShiftOdd => d + 2,
        _ => d + 1,
    };
    if stack_rows != n + d_next {
        return Err(Error::CaseMismatch { l, m });
    }
    let mut stack = GammaStack { case, n, rows: stack_rows as usize, cols: d as usize, entries: BTreeMap::new() };
    // Diag(gamma_{[l,m;2k+delta,j]}) for 0 <= k < count, starting at `top`.
    let band = |stack: &mut GammaStack, top: i64, count: i64, j: i64| -> Result<()> {
        for k in 0..count {
            stack.add(top + k, k, gamma(2 * k + dl, j)?);
        }
        Ok(())
    };
    // Corner term in the last column, drawn from `e^{(dim)}_{idx}` below two zero rows.
    let corner = |stack: &mut GammaStack, dim: i64, idx: i64, v: Scalar| {
        if opts.verbatim_erasure && !(0..=dim).contains(&idx) {
            return;
        }
        stack.add(2 + idx, d - 1, v);
    };
    match case {
        AssemblyCase::EvenShiftEven => {
            band(&mut stack, 0, d, -1)?;
            band(&mut stack, 1, d, 0)?;
            band(&mut stack, 2, d - 1, 1)?;
            corner(&mut stack, d - 2, d - 3, gamma(l, 1)?);
        }
        AssemblyCase::EvenShiftOdd | AssemblyCase::Maximal => {
            band(&mut stack, 0, d, -1)?;
            band(&mut stack, 1, d, 0)?;
            band(&mut stack, 2, d - 1, 1)?;
        }
        AssemblyCase::OddShiftEvenSingle | AssemblyCase::OddShiftEven => {
            band(&mut stack, 0, d, -1)?;
            band(&mut stack, 1, d - 1, 0)?;
            band(&mut stack, 2, d - 2, 1)?;
            let dim = if case == AssemblyCase::OddShiftEvenSingle { -1 } else { d - 3 };
            corner(&mut stack, dim, d - 3, -gamma(l, 1)?);
        }
        AssemblyCase::OddShiftOdd => {
            band(&mut stack, 0, d, -1)?;
            band(&mut stack, 1, d, 0)?;
            band(&mut stack, 2, d, 1)?;
        }
        AssemblyCase::SigmaTwo => {
            band(&mut stack, 0, d, -1)?;
            band(&mut stack, 1, d, 0)?;
            band(&mut stack, 2, d - 1, 1)?;
            let eps = ktype::epsilon(params, l + m).unwrap_or(0) as i64;
            let v = gamma(l - 1, 1)?.scale_rational(&Rational::sign_power(eps));
            corner(&mut stack, d - 2, d - 2, v);
        }
    }
    Ok(stack)
}

/// `R(Gamma_{l,m})` with its shape metadata.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaMatrix {
    pub series: Parabolic,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sigma: Option<(u8, u8)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<i64>,
    pub l: i64,
    pub m: i64,
    pub rows: usize,
    pub cols: usize,
    pub n: i64,
    pub delta: u8,
    pub entries: Vec<Vec<Scalar>>,
}

impl GammaMatrix {
    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r][c]
    }
}

pub fn gamma_matrix(params: &SeriesParams, l: i64, m: i64) -> Result<GammaMatrix> {
    gamma_matrix_with(params, l, m, AssemblyOptions::default())
}

/// Strips the `n` leading rows of the stack after checking that they vanish.
pub fn gamma_matrix_with(params: &SeriesParams, l: i64, m: i64, opts: AssemblyOptions) -> Result<GammaMatrix> {
    let stack = gamma_stack(params, l, m, opts)?;
    let n = stack.n as usize;
    let nonzero = stack.entries.keys().filter(|&&(r, _)| r < n).count();
    if nonzero > 0 {
        return Err(Error::NonZeroOffsetRows { l, m, rows: n });
    }
    let entries = (n..stack.rows).map(|r| (0..stack.cols).map(|c| stack.get(r, c)).collect()).collect();
    Ok(GammaMatrix {
        series: params.kind(),
        sigma: params.sigma(),
        k: params.blattner(),
        l,
        m,
        rows: stack.rows - n,
        cols: stack.cols,
        n: stack.n,
        delta: ktype::delta(params, l),
        entries,
    })
}

/// `R(iota_i^{(l,m)})`: the `w_i` component of the injector, as a map
/// `V_{2l} -> V_{2(l+m)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IotaMatrix {
    pub l: i64,
    pub m: i64,
    pub i: i64,
    pub rows: usize,
    pub cols: usize,
    /// Nonzero entries as `(row, col, value)`.
    pub entries: Vec<(usize, usize, Rational)>,
}

impl IotaMatrix {
    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.entries.iter().find(|e| e.0 == r && e.1 == c).map(|e| e.2.clone()).unwrap_or_default()
    }
}

pub fn iota_matrix(l: i64, m: i64, i: i64) -> Result<IotaMatrix> {
    if !(-2..=2).contains(&m) {
        return Err(Error::BadShift(m));
    }
    if !(0..=4).contains(&i) {
        return Err(Error::IndexOutOfRange { index: i, max: 4 });
    }
    if l < 0 || !component_exists(2 * l, m) {
        return Err(Error::UndefinedComponent { l: 2 * l, target: 2 * (l + m) });
    }
    let rows = 2 * (l + m) + 1;
    let mut entries = Vec::new();
    for q in 0..=2 * l {
        let r = i + q + m - 2;
        if !(0..rows).contains(&r) {
            continue;
        }
        let a = cg_a(2 * l, m, r, i)?;
        if !a.is_zero() {
            entries.push((r as usize, q as usize, a));
        }
    }
    Ok(IotaMatrix { l, m, i, rows: rows as usize, cols: (2 * l + 1) as usize, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Symbol;

    fn p1(k: i64) -> SeriesParams {
        SeriesParams::maximal(Parabolic::P1, k).unwrap()
    }

    fn minus_nu1_plus_3_over_6() -> Scalar {
        (&Scalar::symbol(Symbol::Nu1) + &Scalar::integer(3)).scale_rational(&Rational::new(-1, 6))
    }

    #[test]
    fn gamma_examples() {
        assert!(gamma_coeff(&p1(2), 2, 1, 0, -1).unwrap().is_zero());
        assert_eq!(gamma_coeff(&p1(2), 2, 1, 0, 0).unwrap(), minus_nu1_plus_3_over_6());
        let s = SeriesParams::p0(0, 0).unwrap();
        for l in 2..6 {
            for m in -2..=2 {
                let expect =
                    (&Scalar::symbol(Symbol::Nu02) + &Scalar::one()).scale_rational(&a_or_zero(2 * l, m, l + m - 2, 0));
                assert_eq!(gamma_coeff(&s, l, m, l, 1).unwrap(), expect);
            }
        }
        assert_eq!(gamma_coeff(&s, 1, 3, 0, 0), Err(Error::BadShift(3)));
    }

    #[test]
    fn gamma_matrix_examples() {
        let g = gamma_matrix(&p1(2), 2, 1).unwrap();
        assert_eq!((g.rows, g.cols), (1, 1));
        assert_eq!(g.get(0, 0), &minus_nu1_plus_3_over_6());
        let g = gamma_matrix(&SeriesParams::p0(0, 0).unwrap(), 4, 2).unwrap();
        assert_eq!((g.rows, g.cols), (4, 3));
        assert_eq!(gamma_matrix(&p1(2), 2, -1), Err(Error::EmptyBlock { l: 1 }));
    }

    #[test]
    fn iota_examples() {
        let io = iota_matrix(0, 2, 0).unwrap();
        assert_eq!((io.rows, io.cols), (5, 1));
        assert_eq!(io.entries, vec![(0, 0, Rational::one())]);
        let io = iota_matrix(2, 0, 2).unwrap();
        for q in 0..5 {
            assert_eq!(io.get(q, q), cg_a(4, 0, q as i64, 2).unwrap());
        }
        for &(r, c, _) in &iota_matrix(3, -1, 1).unwrap().entries {
            assert_eq!(r as i64 - c as i64, 1 - 1 - 2);
        }
    }

    #[test]
    fn json_shape() {
        let g = gamma_matrix(&p1(2), 2, 1).unwrap();
        let v = serde_json::to_value(&g).unwrap();
        assert_eq!(v["series"], "p1");
        assert_eq!(v["rows"], 1);
        assert_eq!(v["entries"][0][0]["terms"].as_array().unwrap().len(), 2);
    }
}
