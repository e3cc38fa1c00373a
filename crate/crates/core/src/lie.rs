//! Concrete matrices of `sl(3, C)`: the bases of `k_C` and `p_C`, root
//! vectors, and the Iwasawa-type splittings attached to the parabolics.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{bracket, LieMatrix, Mat2};
use crate::scalar::{GaussianRational, Rational};
use crate::su2::Generator;

fn c(re: i64, im: i64) -> GaussianRational {
    GaussianRational::new(Rational::integer(re), Rational::integer(im))
}

fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn mat(rows: [[(i64, i64); 3]; 3]) -> LieMatrix {
    LieMatrix::from_fn(|i, j| c(rows[i][j].0, rows[i][j].1))
}

fn i_times(x: &LieMatrix) -> LieMatrix {
    x.scale(&GaussianRational::i())
}

/// The basis `X_0, ..., X_4` of `p_C`, indexed like the weight basis of `V_4`.
pub fn x_basis() -> [LieMatrix; 5] {
    [
        mat([[(0, 0), (0, 0), (0, 0)], [(0, 0), (1, 0), (0, -1)], [(0, 0), (0, -1), (-1, 0)]]),
        mat([[(0, 0), (0, 1), (1, 0)], [(0, 1), (0, 0), (0, 0)], [(1, 0), (0, 0), (0, 0)]])
            .scale_rational(&frac(-1, 2)),
        LieMatrix::from_ints([[2, 0, 0], [0, -1, 0], [0, 0, -1]]).scale_rational(&frac(-1, 3)),
        mat([[(0, 0), (0, 1), (-1, 0)], [(0, 1), (0, 0), (0, 0)], [(-1, 0), (0, 0), (0, 0)]])
            .scale_rational(&frac(-1, 2)),
        mat([[(0, 0), (0, 0), (0, 0)], [(0, 0), (1, 0), (0, 1)], [(0, 0), (0, 1), (-1, 0)]]),
    ]
}

/// The conjugated basis `X'_j = u_c X_j u_c^{-1}`.
pub fn x_prime_basis() -> [LieMatrix; 5] {
    let half = frac(1, 2);
    [
        mat([[(-1, 0), (0, 1), (0, 0)], [(0, 1), (1, 0), (0, 0)], [(0, 0), (0, 0), (0, 0)]]),
        mat([[(0, 0), (0, 0), (1, 0)], [(0, 0), (0, 0), (0, -1)], [(1, 0), (0, -1), (0, 0)]]).scale_rational(&half),
        LieMatrix::from_ints([[1, 0, 0], [0, 1, 0], [0, 0, -2]]).scale_rational(&frac(1, 3)),
        mat([[(0, 0), (0, 0), (-1, 0)], [(0, 0), (0, 0), (0, -1)], [(-1, 0), (0, -1), (0, 0)]]).scale_rational(&half),
        mat([[(-1, 0), (0, -1), (0, 0)], [(0, -1), (1, 0), (0, 0)], [(0, 0), (0, 0), (0, 0)]]),
    ]
}

pub fn k23() -> LieMatrix {
    LieMatrix::from_ints([[0, 0, 0], [0, 0, 1], [0, -1, 0]])
}

pub fn k13() -> LieMatrix {
    LieMatrix::from_ints([[0, 0, 1], [0, 0, 0], [-1, 0, 0]])
}

pub fn k12() -> LieMatrix {
    LieMatrix::from_ints([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])
}

/// Image of the `sl(2)` triple in `k_C` under the differential of the covering map.
pub fn dphi(gen: Generator) -> LieMatrix {
    match gen {
        Generator::E => &k13() + &i_times(&k12()),
        Generator::H => k23().scale(&c(0, 2)),
        Generator::F => &(-k13()) + &i_times(&k12()),
    }
}

/// Basis `u_1, u_2, u_3` of `su(2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SuGenerator {
    U1,
    U2,
    U3,
}

/// Differential of the covering `SU(2) -> SO(3)`.
pub fn covering_differential(u: SuGenerator) -> LieMatrix {
    match u {
        SuGenerator::U1 => k23().scale_rational(&Rational::integer(-2)),
        SuGenerator::U2 => k13().scale_rational(&Rational::integer(2)),
        SuGenerator::U3 => k12().scale_rational(&Rational::integer(-2)),
    }
}

/// Root vector `E_{e_i - e_j}` (zero-based indices).
pub fn root_vector(i: usize, j: usize) -> LieMatrix {
    LieMatrix::unit(i, j)
}

pub fn h1() -> LieMatrix {
    LieMatrix::from_ints([[1, 0, 0], [0, 0, 0], [0, 0, -1]])
}

pub fn h2() -> LieMatrix {
    LieMatrix::from_ints([[0, 0, 0], [0, 1, 0], [0, 0, -1]])
}

/// `H^{(1)} = 2H_1 - H_2`, spanning `a_1`.
pub fn h_sup1() -> LieMatrix {
    LieMatrix::from_ints([[2, 0, 0], [0, -1, 0], [0, 0, -1]])
}

/// `H^{(2)} = H_1 + H_2`, spanning `a_2`.
pub fn h_sup2() -> LieMatrix {
    LieMatrix::from_ints([[1, 0, 0], [0, 1, 0], [0, 0, -2]])
}

pub fn u_c() -> LieMatrix {
    LieMatrix::from_ints([[0, 0, -1], [0, 1, 0], [1, 0, 0]])
}

/// The basis `w, x_+, x_-` of `sl(2, C)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sl2Generator {
    W,
    XPlus,
    XMinus,
}

impl Sl2Generator {
    pub const ALL: [Sl2Generator; 3] = [Sl2Generator::W, Sl2Generator::XPlus, Sl2Generator::XMinus];
}

pub fn sl2_matrix(gen: Sl2Generator) -> Mat2 {
    let m = |rows: [[(i64, i64); 2]; 2]| Mat2::from_fn(|i, j| c(rows[i][j].0, rows[i][j].1));
    match gen {
        Sl2Generator::W => Mat2::from_ints([[0, 1], [-1, 0]]),
        Sl2Generator::XPlus => m([[(1, 0), (0, 1)], [(0, 1), (-1, 0)]]),
        Sl2Generator::XMinus => m([[(1, 0), (0, -1)], [(0, -1), (-1, 0)]]),
    }
}

/// Differential of `m_1`: `h` in the lower-right block, `-tr h` in the corner.
pub fn m1(h: &Mat2) -> LieMatrix {
    let mut out = LieMatrix::zero();
    out.set(0, 0, -h.trace());
    for i in 0..2 {
        for j in 0..2 {
            out.set(i + 1, j + 1, h.get(i, j).clone());
        }
    }
    out
}

/// Differential of `m_2`: `h` in the upper-left block, `-tr h` in the corner.
pub fn m2(h: &Mat2) -> LieMatrix {
    let mut out = LieMatrix::zero();
    out.set(2, 2, -h.trace());
    for i in 0..2 {
        for j in 0..2 {
            out.set(i, j, h.get(i, j).clone());
        }
    }
    out
}

/// Coordinates `(c_E, c_H, c_F)` of an element of `k_C` in the basis `dphi(E), dphi(H), dphi(F)`.
pub fn kc_decompose(x: &LieMatrix) -> Result<[GaussianRational; 3]> {
    if !x.is_antisymmetric() {
        return Err(Error::NotInKC);
    }
    let half = frac(1, 2);
    let i = GaussianRational::i();
    let (a, b, cc) = (x.get(0, 1), x.get(0, 2), x.get(1, 2));
    let ia = &i * a;
    let c_e = (b - &ia).scale(&half);
    let c_h = (&i * cc).scale(&frac(-1, 2));
    let c_f = (-&ia - b.clone()).scale(&half);
    Ok([c_e, c_h, c_f])
}

/// Coordinates of an element of `p_C` in the basis `X_0, ..., X_4`.
pub fn pc_coordinates(s: &LieMatrix) -> Result<[GaussianRational; 5]> {
    if !s.is_symmetric() || !s.trace().is_zero() {
        return Err(Error::NotInPC);
    }
    let half = frac(1, 2);
    let i = GaussianRational::i();
    let c2 = s.get(0, 0).scale(&frac(-3, 2));
    let sum04 = (s.get(1, 1) - s.get(2, 2)).scale(&half);
    let diff40 = -(&i * s.get(1, 2));
    let sum13 = (&i * s.get(0, 1)).scale(&Rational::integer(2));
    let diff31 = s.get(0, 2).scale(&Rational::integer(2));
    Ok([
        (&sum04 - &diff40).scale(&half),
        (&sum13 - &diff31).scale(&half),
        c2,
        (&sum13 + &diff31).scale(&half),
        (&sum04 + &diff40).scale(&half),
    ])
}

/// Splits `x` into its `k_C` and `p_C` parts and returns both coordinate vectors.
pub fn cartan_coordinates(x: &LieMatrix) -> Result<([GaussianRational; 3], [GaussianRational; 5])> {
    let k = kc_decompose(&x.antisymmetric_part())?;
    let p = pc_coordinates(&x.symmetric_part())?;
    Ok((k, p))
}

/// One cell of the adjoint action of `k_C` on `p_C`: `[dphi(gen), X_j] = coeff * X_target`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjointEntry {
    pub generator: Generator,
    pub j: usize,
    pub terms: Vec<(usize, GaussianRational)>,
}

/// The adjoint table as tabulated, identical to `tau_4` on `w_j`.
pub fn adjoint_table() -> Vec<AdjointEntry> {
    let mut out = Vec::new();
    for gen in Generator::ALL {
        for j in 0..5usize {
            let ji = j as i64;
            let terms = match gen {
                Generator::H => vec![(j, 4 - 2 * ji)],
                Generator::E if j > 0 => vec![(j - 1, -ji)],
                Generator::F if j < 4 => vec![(j + 1, ji - 4)],
                _ => vec![],
            };
            let terms =
                terms.into_iter().filter(|&(_, x)| x != 0).map(|(t, x)| (t, GaussianRational::integer(x))).collect();
            out.push(AdjointEntry { generator: gen, j, terms });
        }
    }
    out
}

/// The adjoint table recomputed from 3x3 commutators.
pub fn computed_adjoint_table() -> Vec<AdjointEntry> {
    let xs = x_basis();
    let mut out = Vec::new();
    for gen in Generator::ALL {
        for (j, x) in xs.iter().enumerate() {
            let coords = pc_coordinates(&bracket(&dphi(gen), x)).expect("[k, p] lies in p");
            let terms = coords.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
            out.push(AdjointEntry { generator: gen, j, terms });
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parabolic {
    P0,
    P1,
    P2,
}

impl Parabolic {
    pub const ALL: [Parabolic; 3] = [Parabolic::P0, Parabolic::P1, Parabolic::P2];

    pub fn name(self) -> &'static str {
        match self {
            Parabolic::P0 => "p0",
            Parabolic::P1 => "p1",
            Parabolic::P2 => "p2",
        }
    }
}

impl std::fmt::Display for Parabolic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Parabolic {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "p0" => Ok(Parabolic::P0),
            "p1" => Ok(Parabolic::P1),
            "p2" => Ok(Parabolic::P2),
            _ => Err(Error::Parse(format!("unknown series {s:?}"))),
        }
    }
}

/// A decomposition `x = n + a + m + k` along `g_C = n_i + a_i + m_i + k_C`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IwasawaSplit {
    pub n_part: LieMatrix,
    pub a_part: LieMatrix,
    pub m_part: LieMatrix,
    pub k_part: LieMatrix,
}

impl IwasawaSplit {
    pub fn sum(&self) -> LieMatrix {
        &(&self.n_part + &self.a_part) + &(&self.m_part + &self.k_part)
    }

    /// Each part lies in the corresponding subalgebra of `parabolic`.
    pub fn is_valid(&self, parabolic: Parabolic) -> bool {
        in_n(&self.n_part, parabolic)
            && in_a(&self.a_part, parabolic)
            && in_m(&self.m_part, parabolic)
            && in_k(&self.k_part)
    }
}

fn supported_in(x: &LieMatrix, allowed: &[(usize, usize)]) -> bool {
    x.support().iter().all(|pos| allowed.contains(pos))
}

pub fn in_n(x: &LieMatrix, parabolic: Parabolic) -> bool {
    match parabolic {
        Parabolic::P0 => supported_in(x, &[(0, 1), (0, 2), (1, 2)]),
        Parabolic::P1 => supported_in(x, &[(0, 1), (0, 2)]),
        Parabolic::P2 => supported_in(x, &[(0, 2), (1, 2)]),
    }
}

pub fn in_a(x: &LieMatrix, parabolic: Parabolic) -> bool {
    match parabolic {
        Parabolic::P0 => x.is_diagonal() && x.trace().is_zero(),
        Parabolic::P1 => x.proportional_to(&h_sup1()),
        Parabolic::P2 => x.proportional_to(&h_sup2()),
    }
}

pub fn in_m(x: &LieMatrix, parabolic: Parabolic) -> bool {
    let block = |offset: usize, corner: usize| {
        let allowed: Vec<(usize, usize)> = (0..2)
            .flat_map(|i| (0..2).map(move |j| (i + offset, j + offset)))
            .chain(std::iter::once((corner, corner)))
            .collect();
        supported_in(x, &allowed) && x.trace().is_zero()
    };
    match parabolic {
        Parabolic::P0 => x.is_zero(),
        Parabolic::P1 => block(1, 0),
        Parabolic::P2 => block(0, 2),
    }
}

pub fn in_k(x: &LieMatrix) -> bool {
    x.is_antisymmetric()
}

/// The split of `X_j` (P0, P1) or `X'_j` (P2) along the given parabolic.
pub fn iwasawa_split(j: usize, parabolic: Parabolic) -> Result<IwasawaSplit> {
    if j > 4 {
        return Err(Error::IndexOutOfRange { index: j as i64, max: 4 });
    }
    let zero = LieMatrix::zero;
    let half = frac(1, 2);
    let i = GaussianRational::i();
    let e12 = root_vector(0, 1);
    let e13 = root_vector(0, 2);
    let e23 = root_vector(1, 2);
    let split = |n, a, m, k| IwasawaSplit { n_part: n, a_part: a, m_part: m, k_part: k };
    // X_1 and X_3 split the same way for P0 and P1.
    let x1 = || split(-(&e13 + &e12.scale(&i)), zero(), zero(), (&k13() + &k12().scale(&i)).scale_rational(&half));
    let x3 = || split(&e13 - &e12.scale(&i), zero(), zero(), -(&k13() - &k12().scale(&i)).scale_rational(&half));
    Ok(match (parabolic, j) {
        (Parabolic::P0, 0) => split(e23.scale(&c(0, -2)), h2(), zero(), k23().scale(&i)),
        (Parabolic::P0, 2) => split(
            zero(),
            (&h1().scale_rational(&Rational::integer(2)) - &h2()).scale_rational(&frac(-1, 3)),
            zero(),
            zero(),
        ),
        (Parabolic::P0, 4) => split(e23.scale(&c(0, 2)), h2(), zero(), k23().scale(&-&i)),
        (Parabolic::P1, 0) => split(zero(), zero(), m1(&sl2_matrix(Sl2Generator::XMinus)), zero()),
        (Parabolic::P1, 2) => split(zero(), h_sup1().scale_rational(&frac(-1, 3)), zero(), zero()),
        (Parabolic::P1, 4) => split(zero(), zero(), m1(&sl2_matrix(Sl2Generator::XPlus)), zero()),
        (Parabolic::P0 | Parabolic::P1, 1) => x1(),
        (Parabolic::P0 | Parabolic::P1, _) => x3(),
        (Parabolic::P2, 0) => split(zero(), zero(), -m2(&sl2_matrix(Sl2Generator::XMinus)), zero()),
        (Parabolic::P2, 1) => {
            split(&e13 - &e23.scale(&i), zero(), zero(), -(&k13() - &k23().scale(&i)).scale_rational(&half))
        }
        (Parabolic::P2, 2) => split(zero(), h_sup2().scale_rational(&frac(1, 3)), zero(), zero()),
        (Parabolic::P2, 3) => {
            split(-(&e13 + &e23.scale(&i)), zero(), zero(), (&k13() + &k23().scale(&i)).scale_rational(&half))
        }
        (Parabolic::P2, _) => split(zero(), zero(), -m2(&sl2_matrix(Sl2Generator::XPlus)), zero()),
    })
}

/// The matrix that `iwasawa_split(j, parabolic)` decomposes.
pub fn split_source(j: usize, parabolic: Parabolic) -> LieMatrix {
    match parabolic {
        Parabolic::P2 => x_prime_basis()[j].clone(),
        _ => x_basis()[j].clone(),
    }
}
