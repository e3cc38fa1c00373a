//! Finite-dimensional representations `V_l` of `sl(2, C)` and the
//! Clebsch-Gordan maps between `V_{l+2m}` and `V_l (x) V_4`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

/// Standard basis of `sl(2, C)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    E,
    H,
    F,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::E, Generator::H, Generator::F];
}

fn check_index(k: i64, l: i64) -> Result<()> {
    if (0..=l).contains(&k) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index: k, max: l })
    }
}

fn check_shift(m: i64) -> Result<()> {
    if (-2..=2).contains(&m) {
        Ok(())
    } else {
        Err(Error::BadShift(m))
    }
}

/// `tau_l(gen) v_k` on the basis `v_k = x^k y^(l-k)`, as `(target, coefficient)`.
///
/// `None` means the image is zero.
pub fn tau_act(gen: Generator, l: i64, k: i64) -> Result<Option<(i64, i64)>> {
    check_index(k, l)?;
    let (target, c) = match gen {
        Generator::H => (k, l - 2 * k),
        Generator::E => (k - 1, -k),
        Generator::F => (k + 1, k - l),
    };
    Ok((c != 0).then_some((target, c)))
}

/// Action on the dual basis `v_k^*`.
pub fn dual_tau_act(gen: Generator, l: i64, k: i64) -> Result<Option<(i64, i64)>> {
    check_index(k, l)?;
    let (target, c) = match gen {
        Generator::H => (k, 2 * k - l),
        Generator::E => (k + 1, k + 1),
        Generator::F => (k - 1, l - k + 1),
    };
    Ok((c != 0 && (0..=l).contains(&target)).then_some((target, c)))
}

fn factorial(n: i64) -> Rational {
    (1..=n).map(Rational::integer).product()
}

/// The coefficient `c` with `v_k = c * v_{l-k}^*` under `V_l ~ V_l^*`.
pub fn dual_coeff(l: i64, k: i64) -> Result<Rational> {
    check_index(k, l)?;
    Ok(Rational::sign_power(k) * factorial(l - k) * factorial(k) * factorial(l).recip()?)
}

/// Common denominator of the injector coefficients `A_{[l,2m;k,i]}`.
pub fn injector_denominator(l: i64, m: i64) -> Result<i64> {
    check_shift(m)?;
    Ok(match m {
        2 => (l + 4) * (l + 3) * (l + 2) * (l + 1),
        1 => (l + 2) * (l + 1) * l,
        0 => l * (l - 1),
        -1 => l - 2,
        _ => 1,
    })
}

/// Common denominator of the projector coefficients `B_{[l,2m;q,r]}`.
pub fn projector_denominator(l: i64, m: i64) -> Result<i64> {
    check_shift(m)?;
    Ok(match m {
        2 => 1,
        1 => l + 4,
        0 => (l + 3) * (l + 2),
        -1 => (l + 2) * (l + 1) * l,
        _ => (l + 1) * l * (l - 1) * (l - 2),
    })
}

/// Whether `V_{l+2m}` occurs in `V_l (x) V_4`.
pub fn component_exists(l: i64, m: i64) -> bool {
    if !(-2..=2).contains(&m) || l < 0 {
        return false;
    }
    let t = l + 2 * m;
    t >= 0 && t >= l - 4 && t <= l + 4 && l >= (-2 * m).max(0) && injector_denominator(l, m) != Ok(0)
}

fn check_component(l: i64, m: i64) -> Result<()> {
    check_shift(m)?;
    if component_exists(l, m) {
        Ok(())
    } else {
        Err(Error::UndefinedComponent { l, target: l + 2 * m })
    }
}

fn injector_numerator(l: i64, m: i64, k: i64, i: i64) -> i64 {
    match (m, i) {
        (2, 0) => (l + 4 - k) * (l + 3 - k) * (l + 2 - k) * (l + 1 - k),
        (2, 1) => 4 * (l + 4 - k) * (l + 3 - k) * (l + 2 - k) * k,
        (2, 2) => 6 * (l + 4 - k) * (l + 3 - k) * k * (k - 1),
        (2, 3) => 4 * (l + 4 - k) * k * (k - 1) * (k - 2),
        (2, _) => k * (k - 1) * (k - 2) * (k - 3),
        (1, 0) => (l + 2 - k) * (l + 1 - k) * (l - k),
        (1, 1) => -(l + 2 - k) * (l + 1 - k) * (l - 4 * k),
        (1, 2) => -3 * (l + 2 - k) * (l - 2 * k + 2) * k,
        (1, 3) => -(3 * l - 4 * k + 8) * k * (k - 1),
        (1, _) => -k * (k - 1) * (k - 2),
        (0, 0) => (l - k) * (l - 1 - k),
        (0, 1) => -2 * (l - k) * (l - 2 * k - 1),
        (0, 2) => l * l - 6 * k * l + 6 * k * k - l,
        (0, 3) => 2 * (l - 2 * k + 1) * k,
        (0, _) => k * (k - 1),
        (-1, 0) => l - k - 2,
        (-1, 1) => -(3 * l - 4 * k - 6),
        (-1, 2) => 3 * (l - 2 * k - 2),
        (-1, 3) => -(l - 4 * k - 2),
        (-1, _) => -k,
        (_, i) => [1, -4, 6, -4, 1][i as usize],
    }
}

fn projector_numerator(l: i64, m: i64, q: i64, r: i64) -> i64 {
    let p = l - q;
    match (m, r) {
        (2, _) => 1,
        (1, 0) => 4 * q,
        (1, 1) => -(l - 4 * q),
        (1, 2) => -2 * (l - 2 * q),
        (1, 3) => -(3 * l - 4 * q),
        (1, _) => -4 * p,
        (0, 0) => 6 * q * (q - 1),
        (0, 1) => -3 * q * (l - 2 * q + 1),
        (0, 2) => l * l - 6 * l * q + 6 * q * q - l,
        (0, 3) => 3 * (l - 2 * q - 1) * p,
        (0, _) => 6 * p * (p - 1),
        (-1, 0) => 4 * q * (q - 1) * (q - 2),
        (-1, 1) => -q * (q - 1) * (3 * l - 4 * q + 2),
        (-1, 2) => 2 * q * (l - 2 * q) * p,
        (-1, 3) => -(l - 4 * q - 2) * p * (p - 1),
        (-1, _) => -4 * p * (p - 1) * (p - 2),
        (_, 0) => q * (q - 1) * (q - 2) * (q - 3),
        (_, 1) => -q * (q - 1) * (q - 2) * p,
        (_, 2) => q * (q - 1) * p * (p - 1),
        (_, 3) => -q * p * (p - 1) * (p - 2),
        (_, _) => p * (p - 1) * (p - 2) * (p - 3),
    }
}

/// Injector coefficient `A_{[l,2m;k,i]}`; zero for `k` outside `0..=l+2m`.
pub fn cg_a(l: i64, m: i64, k: i64, i: i64) -> Result<Rational> {
    check_component(l, m)?;
    check_index(i, 4)?;
    if k < 0 || k > l + 2 * m {
        return Ok(Rational::zero());
    }
    Ok(Rational::new(injector_numerator(l, m, k, i), injector_denominator(l, m)?))
}

/// Projector coefficient `B_{[l,2m;q,r]}`.
pub fn cg_b(l: i64, m: i64, q: i64, r: i64) -> Result<Rational> {
    check_component(l, m)?;
    check_index(q, l)?;
    check_index(r, 4)?;
    Ok(Rational::new(projector_numerator(l, m, q, r), projector_denominator(l, m)?))
}

/// Element of `V_l` in the basis `v_0, ..., v_l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightVector {
    l: i64,
    coeffs: Vec<Scalar>,
}

impl WeightVector {
    pub fn zero(l: i64) -> Self {
        WeightVector { l, coeffs: vec![Scalar::zero(); (l + 1).max(0) as usize] }
    }

    pub fn basis(l: i64, k: i64) -> Result<Self> {
        check_index(k, l)?;
        let mut v = WeightVector::zero(l);
        v.coeffs[k as usize] = Scalar::one();
        Ok(v)
    }

    pub fn from_coeffs(l: i64, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() as i64 != l + 1 {
            return Err(Error::ShapeMismatch {
                expected: format!("{} coefficients", l + 1),
                found: coeffs.len().to_string(),
            });
        }
        Ok(WeightVector { l, coeffs })
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient of `v_k`; zero outside `0..=l`.
    pub fn get(&self, k: i64) -> Scalar {
        if (0..=self.l).contains(&k) {
            self.coeffs[k as usize].clone()
        } else {
            Scalar::zero()
        }
    }

    /// Adds `c * v_k`, ignoring `k` outside `0..=l`.
    pub fn add_at(&mut self, k: i64, c: &Scalar) {
        if (0..=self.l).contains(&k) {
            self.coeffs[k as usize] += c;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// `tau_l(gen)` applied to the whole vector.
    pub fn act(&self, gen: Generator) -> WeightVector {
        let mut out = WeightVector::zero(self.l);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if let Ok(Some((t, x))) = tau_act(gen, self.l, k as i64) {
                out.add_at(t, &c.scale_rational(&Rational::integer(x)));
            }
        }
        out
    }
}

/// Element of `V_l (x) V_4` in the basis `v_k (x) w_i`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorVector {
    l: i64,
    coeffs: BTreeMap<(i64, i64), Scalar>,
}

impl TensorVector {
    pub fn zero(l: i64) -> Self {
        TensorVector { l, coeffs: BTreeMap::new() }
    }

    pub fn basis(l: i64, k: i64, i: i64) -> Result<Self> {
        check_index(k, l)?;
        check_index(i, 4)?;
        let mut t = TensorVector::zero(l);
        t.add_at(k, i, &Scalar::one());
        Ok(t)
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn get(&self, k: i64, i: i64) -> Scalar {
        self.coeffs.get(&(k, i)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &Scalar)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c * v_k (x) w_i`, dropping indices out of range.
    pub fn add_at(&mut self, k: i64, i: i64, c: &Scalar) {
        if c.is_zero() || !(0..=self.l).contains(&k) || !(0..=4).contains(&i) {
            return;
        }
        let e = self.coeffs.entry((k, i)).or_default();
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&(k, i));
        }
    }

    /// `(tau_l (x) tau_4)(gen)`.
    pub fn act(&self, gen: Generator) -> TensorVector {
        let mut out = TensorVector::zero(self.l);
        for (&(k, i), c) in &self.coeffs {
            if let Ok(Some((t, x))) = tau_act(gen, self.l, k) {
                out.add_at(t, i, &c.scale_rational(&Rational::integer(x)));
            }
            if let Ok(Some((t, x))) = tau_act(gen, 4, i) {
                out.add_at(k, t, &c.scale_rational(&Rational::integer(x)));
            }
        }
        out
    }
}

/// The injector `I^l_{2m}: V_{l+2m} -> V_l (x) V_4`.
pub fn injector_apply(l: i64, m: i64, v: &WeightVector) -> Result<TensorVector> {
    check_component(l, m)?;
    if v.l != l + 2 * m {
        return Err(Error::ShapeMismatch {
            expected: format!("vector in V_{}", l + 2 * m),
            found: format!("vector in V_{}", v.l),
        });
    }
    let mut out = TensorVector::zero(l);
    for (k, c) in v.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let k = k as i64;
        for i in 0..=4 {
            let a = cg_a(l, m, k, i)?;
            out.add_at(k + 2 - m - i, i, &c.scale_rational(&a));
        }
    }
    Ok(out)
}

/// The projector `P^l_{2m}: V_l (x) V_4 -> V_{l+2m}`.
pub fn projector_apply(l: i64, m: i64, t: &TensorVector) -> Result<WeightVector> {
    check_component(l, m)?;
    if t.l != l {
        return Err(Error::ShapeMismatch {
            expected: format!("tensor in V_{l} (x) V_4"),
            found: format!("tensor in V_{} (x) V_4", t.l),
        });
    }
    let mut out = WeightVector::zero(l + 2 * m);
    for (&(q, r), c) in &t.coeffs {
        let b = cg_b(l, m, q, r)?;
        out.add_at(q + r + m - 2, &c.scale_rational(&b));
    }
    Ok(out)
}

/// CSV rows `l,m,k,i,A_num,A_den` for all defined coefficients with `l <= l_max`.
pub fn injector_csv(l_max: i64) -> String {
    let mut s = String::from("l,m,k,i,A_num,A_den\n");
    for l in 0..=l_max {
        for m in -2..=2 {
            if !component_exists(l, m) {
                continue;
            }
            for k in 0..=l + 2 * m {
                for i in 0..=4 {
                    let a = cg_a(l, m, k, i).expect("defined");
                    let _ = writeln!(s, "{l},{m},{k},{i},{},{}", a.numer(), a.denom());
                }
            }
        }
    }
    s
}

/// CSV rows `l,m,q,r,B_num,B_den` for all defined coefficients with `l <= l_max`.
pub fn projector_csv(l_max: i64) -> String {
    let mut s = String::from("l,m,q,r,B_num,B_den\n");
    for l in 0..=l_max {
        for m in -2..=2 {
            if !component_exists(l, m) {
                continue;
            }
            for q in 0..=l {
                for r in 0..=4 {
                    let b = cg_b(l, m, q, r).expect("defined");
                    let _ = writeln!(s, "{l},{m},{q},{r},{},{}", b.numer(), b.denom());
                }
            }
        }
    }
    s
}
