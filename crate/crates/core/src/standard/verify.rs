//! Exact verification of the Lie bracket relations on a truncated module.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{act_cartan, act_k, act_p, ElementaryIndex, ModuleVector, Truncation};
use crate::error::{Error, Result};
use crate::ktype::SeriesParams;
use crate::lie::{cartan_coordinates, dphi, x_basis};
use crate::matrix::{bracket, LieMatrix};
use crate::scalar::{GaussianRational, Point, Rational, Scalar, Symbol};
use crate::su2::Generator;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOptions {
    pub l_max: i64,
    /// Also check the `[k, k]` relations.
    pub include_kk: bool,
}

/// Coefficient of one basis vector on both sides of a failed identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffTerm {
    pub index: ElementaryIndex,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub identity: String,
    pub vector: ElementaryIndex,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
    pub diff: Vec<DiffTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub class: String,
    pub checked: usize,
    pub failures: usize,
    pub first_failure: Option<Failure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub series: String,
    pub params: SeriesParams,
    pub l_max: i64,
    pub passed: bool,
    pub classes: Vec<ClassReport>,
}

fn diff(lhs: &ModuleVector, rhs: &ModuleVector) -> Vec<DiffTerm> {
    let mut keys: Vec<ElementaryIndex> = lhs.support().chain(rhs.support()).copied().collect();
    keys.sort();
    keys.dedup();
    keys.into_iter()
        .filter_map(|k| {
            let (a, b) = (lhs.get(&k), rhs.get(&k));
            (a != b).then_some(DiffTerm { index: k, lhs: a, rhs: b })
        })
        .collect()
}

type Check = (String, ElementaryIndex, Result<(ModuleVector, ModuleVector)>);

type Coords = ([GaussianRational; 3], [GaussianRational; 5]);

/// A truncation together with the Cartan coordinates of every bracket checked.
struct Context {
    trunc: Truncation,
    pp: Vec<Vec<Coords>>,
    kp: Vec<Vec<Coords>>,
    kk: Vec<Vec<Coords>>,
}

impl Context {
    fn new(trunc: Truncation) -> Result<Self> {
        let xs = x_basis();
        let ks: Vec<LieMatrix> = Generator::ALL.iter().map(|&g| dphi(g)).collect();
        let table = |left: &[LieMatrix], right: &[LieMatrix]| -> Result<Vec<Vec<Coords>>> {
            left.iter().map(|a| right.iter().map(|b| cartan_coordinates(&bracket(a, b))).collect()).collect()
        };
        Ok(Context { pp: table(&xs, &xs)?, kp: table(&ks, &xs)?, kk: table(&ks, &ks)?, trunc })
    }
}

fn summarize(class: &str, checks: Vec<Check>) -> ClassReport {
    let mut failures = 0;
    let mut first_failure = None;
    let checked = checks.len();
    for (identity, vector, outcome) in checks {
        let failure = match outcome {
            Ok((lhs, rhs)) if lhs == rhs => continue,
            Ok((lhs, rhs)) => Failure { identity, vector, error: None, diff: diff(&lhs, &rhs) },
            Err(e) => Failure { identity, vector, error: Some(e.to_string()), diff: Vec::new() },
        };
        failures += 1;
        first_failure.get_or_insert(failure);
    }
    ClassReport { class: class.to_string(), checked, failures, first_failure }
}

fn gen_name(g: Generator) -> &'static str {
    match g {
        Generator::E => "E",
        Generator::H => "H",
        Generator::F => "F",
    }
}

#[allow(clippy::needless_range_loop)]
fn pp_checks(ctx: &Context, v: ElementaryIndex) -> Vec<Check> {
    let trunc = &ctx.trunc;
    let vec = ModuleVector::basis(v);
    let singles: Vec<Result<ModuleVector>> = (0..5).map(|b| act_p(b, &vec, trunc)).collect();
    let doubles: Vec<Vec<Result<ModuleVector>>> =
        (0..5).map(|a| singles.iter().map(|s| act_p(a, s.as_ref().map_err(Clone::clone)?, trunc)).collect()).collect();
    let mut out = Vec::with_capacity(25);
    for a in 0..5 {
        for b in 0..5 {
            let outcome = (|| {
                let (kc, pc) = &ctx.pp[a][b];
                let lhs = act_cartan(kc, pc, &vec, trunc)?;
                let xa_xb = doubles[a][b].as_ref().map_err(Clone::clone)?;
                let xb_xa = doubles[b][a].as_ref().map_err(Clone::clone)?;
                Ok((lhs, xa_xb.sub(xb_xa)))
            })();
            out.push((format!("[X{a},X{b}]"), v, outcome));
        }
    }
    out
}

fn kp_checks(ctx: &Context, v: ElementaryIndex) -> Vec<Check> {
    let trunc = &ctx.trunc;
    let vec = ModuleVector::basis(v);
    let mut out = Vec::with_capacity(15);
    for (gi, g) in Generator::ALL.into_iter().enumerate() {
        let gv = act_k(g, &vec);
        for a in 0..5 {
            let outcome = (|| {
                let (kc, pc) = &ctx.kp[gi][a];
                let lhs = act_cartan(kc, pc, &vec, trunc)?;
                let g_xa = act_k(g, &act_p(a as i64, &vec, trunc)?);
                let xa_g = act_p(a as i64, &gv, trunc)?;
                Ok((lhs, g_xa.sub(&xa_g)))
            })();
            out.push((format!("[{},X{a}]", gen_name(g)), v, outcome));
        }
    }
    out
}

fn kk_checks(ctx: &Context, v: ElementaryIndex) -> Vec<Check> {
    let trunc = &ctx.trunc;
    let vec = ModuleVector::basis(v);
    let mut out = Vec::with_capacity(9);
    for (gi, g) in Generator::ALL.into_iter().enumerate() {
        for (hi, h) in Generator::ALL.into_iter().enumerate() {
            let outcome = (|| {
                let (kc, pc) = &ctx.kk[gi][hi];
                let lhs = act_cartan(kc, pc, &vec, trunc)?;
                let rhs = act_k(g, &act_k(h, &vec)).sub(&act_k(h, &act_k(g, &vec)));
                Ok((lhs, rhs))
            })();
            out.push((format!("[{},{}]", gen_name(g), gen_name(h)), v, outcome));
        }
    }
    out
}

fn run_class(ctx: &Context, name: &str, level: i64, f: fn(&Context, ElementaryIndex) -> Vec<Check>) -> ClassReport {
    let vectors: Vec<ElementaryIndex> = ctx.trunc.basis().into_iter().filter(|i| i.l <= level).collect();
    let checks: Vec<Check> = vectors.par_iter().flat_map_iter(|&v| f(ctx, v)).collect();
    summarize(name, checks)
}

/// Checks `[X_a, X_b]`, `[k, X_a]` (and optionally `[k, k]`) as operator
/// identities on every basis vector far enough below the cutoff.
pub fn verify_brackets(params: &SeriesParams, opts: VerifyOptions) -> Result<VerifyReport> {
    let floor = params.minimal_ktype() + 4;
    if opts.l_max < floor {
        return Err(Error::InvalidParams(format!(
            "l_max = {} must be at least the minimal K-type plus 4 ({floor})",
            opts.l_max
        )));
    }
    let ctx = Context::new(Truncation::new(params.clone(), opts.l_max)?)?;
    let mut classes =
        vec![run_class(&ctx, "[p,p]", opts.l_max - 4, pp_checks), run_class(&ctx, "[k,p]", opts.l_max - 2, kp_checks)];
    if opts.include_kk {
        classes.push(run_class(&ctx, "[k,k]", opts.l_max, kk_checks));
    }
    Ok(VerifyReport {
        series: params.to_string(),
        params: params.clone(),
        l_max: opts.l_max,
        passed: classes.iter().all(|c| c.failures == 0),
        classes,
    })
}

fn random_gaussian(rng: &mut ChaCha8Rng) -> GaussianRational {
    let mut part = || Rational::new(rng.random_range(-9..=9), rng.random_range(1..=7));
    let re = part();
    let im = part();
    GaussianRational::new(re, im)
}

/// A reproducible Gaussian-rational point for the given symbols.
pub fn random_point(seed: u64, symbols: &[Symbol]) -> Point {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    symbols.iter().map(|&s| (s, random_gaussian(&mut rng))).collect()
}
