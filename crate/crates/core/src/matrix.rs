//! Small dense square matrices over Gaussian rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::scalar::{GaussianRational, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct SquareMatrix<const N: usize> {
    #[serde(with = "rows_serde")]
    entries: [[GaussianRational; N]; N],
}

/// The 3x3 matrices of `sl(3, C)` and `gl(3, C)`.
pub type LieMatrix = SquareMatrix<3>;
pub type Mat2 = SquareMatrix<2>;

impl<const N: usize> SquareMatrix<N> {
    pub fn zero() -> Self {
        SquareMatrix { entries: std::array::from_fn(|_| std::array::from_fn(|_| GaussianRational::zero())) }
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { GaussianRational::one() } else { GaussianRational::zero() })
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> GaussianRational) -> Self {
        SquareMatrix { entries: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))) }
    }

    pub fn from_rows(entries: [[GaussianRational; N]; N]) -> Self {
        SquareMatrix { entries }
    }

    /// Integer entries, mostly for literal constants.
    pub fn from_ints(rows: [[i64; N]; N]) -> Self {
        Self::from_fn(|i, j| GaussianRational::integer(rows[i][j]))
    }

    /// Unit matrix with a single 1 at `(i, j)`.
    pub fn unit(i: usize, j: usize) -> Self {
        let mut m = Self::zero();
        m.entries[i][j] = GaussianRational::one();
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussianRational {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GaussianRational) {
        self.entries[i][j] = v;
    }

    pub fn rows(&self) -> &[[GaussianRational; N]; N] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(GaussianRational::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.entries[j][i].clone())
    }

    pub fn trace(&self) -> GaussianRational {
        (0..N).map(|i| self.entries[i][i].clone()).sum()
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::from_fn(|i, j| &self.entries[i][j] * c)
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        Self::from_fn(|i, j| self.entries[i][j].scale(r))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..N).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..N).all(|i| (0..=i).all(|j| self.entries[i][j] == -&self.entries[j][i]))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..N).all(|i| (0..N).all(|j| i == j || self.entries[i][j].is_zero()))
    }

    /// `(x + x^T) / 2`.
    pub fn symmetric_part(&self) -> Self {
        let half = Rational::new(1, 2);
        Self::from_fn(|i, j| (&self.entries[i][j] + &self.entries[j][i]).scale(&half))
    }

    /// `(x - x^T) / 2`.
    pub fn antisymmetric_part(&self) -> Self {
        let half = Rational::new(1, 2);
        Self::from_fn(|i, j| (&self.entries[i][j] - &self.entries[j][i]).scale(&half))
    }

    /// Positions holding nonzero entries.
    pub fn support(&self) -> Vec<(usize, usize)> {
        (0..N).flat_map(|i| (0..N).map(move |j| (i, j))).filter(|&(i, j)| !self.entries[i][j].is_zero()).collect()
    }

    /// Whether `self = c * other` for some scalar `c` (true when both vanish).
    pub fn proportional_to(&self, other: &Self) -> bool {
        let Some((i, j)) = other.support().first().copied() else {
            return self.is_zero();
        };
        let c = self.entries[i][j].checked_div(&other.entries[i][j]).expect("nonzero pivot");
        *self == other.scale(&c)
    }
}

/// Commutator `ab - ba`.
pub fn bracket<const N: usize>(a: &SquareMatrix<N>, b: &SquareMatrix<N>) -> SquareMatrix<N> {
    &(a * b) - &(b * a)
}

impl<'a, const N: usize> Add<&'a SquareMatrix<N>> for &'a SquareMatrix<N> {
    type Output = SquareMatrix<N>;
    fn add(self, rhs: &'a SquareMatrix<N>) -> SquareMatrix<N> {
        SquareMatrix::from_fn(|i, j| &self.entries[i][j] + &rhs.entries[i][j])
    }
}

impl<'a, const N: usize> Sub<&'a SquareMatrix<N>> for &'a SquareMatrix<N> {
    type Output = SquareMatrix<N>;
    fn sub(self, rhs: &'a SquareMatrix<N>) -> SquareMatrix<N> {
        SquareMatrix::from_fn(|i, j| &self.entries[i][j] - &rhs.entries[i][j])
    }
}

impl<'a, const N: usize> Mul<&'a SquareMatrix<N>> for &'a SquareMatrix<N> {
    type Output = SquareMatrix<N>;
    fn mul(self, rhs: &'a SquareMatrix<N>) -> SquareMatrix<N> {
        SquareMatrix::from_fn(|i, j| (0..N).map(|k| &self.entries[i][k] * &rhs.entries[k][j]).sum())
    }
}

impl<const N: usize> Add for SquareMatrix<N> {
    type Output = SquareMatrix<N>;
    fn add(self, rhs: SquareMatrix<N>) -> SquareMatrix<N> {
        &self + &rhs
    }
}

impl<const N: usize> Sub for SquareMatrix<N> {
    type Output = SquareMatrix<N>;
    fn sub(self, rhs: SquareMatrix<N>) -> SquareMatrix<N> {
        &self - &rhs
    }
}

impl<const N: usize> Mul for SquareMatrix<N> {
    type Output = SquareMatrix<N>;
    fn mul(self, rhs: SquareMatrix<N>) -> SquareMatrix<N> {
        &self * &rhs
    }
}

impl<const N: usize> Neg for &SquareMatrix<N> {
    type Output = SquareMatrix<N>;
    fn neg(self) -> SquareMatrix<N> {
        SquareMatrix::from_fn(|i, j| -&self.entries[i][j])
    }
}

impl<const N: usize> Neg for SquareMatrix<N> {
    type Output = SquareMatrix<N>;
    fn neg(self) -> SquareMatrix<N> {
        -&self
    }
}

impl<const N: usize> fmt::Debug for SquareMatrix<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            f.write_str(&cells.join(", "))?;
        }
        f.write_str("]")
    }
}

impl<const N: usize> fmt::Display for SquareMatrix<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

mod rows_serde {
    use super::GaussianRational;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer, const N: usize>(
        rows: &[[GaussianRational; N]; N],
        s: S,
    ) -> Result<S::Ok, S::Error> {
        let v: Vec<Vec<&GaussianRational>> = rows.iter().map(|r| r.iter().collect()).collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>, const N: usize>(
        d: D,
    ) -> Result<[[GaussianRational; N]; N], D::Error> {
        let v: Vec<Vec<GaussianRational>> = Vec::deserialize(d)?;
        if v.len() != N || v.iter().any(|r| r.len() != N) {
            return Err(D::Error::custom(format!("expected a {N}x{N} matrix")));
        }
        let mut rows = v.into_iter().map(|r| {
            let mut it = r.into_iter();
            std::array::from_fn(|_| it.next().unwrap())
        });
        Ok(std::array::from_fn(|_| rows.next().unwrap()))
    }
}
