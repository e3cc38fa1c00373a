use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::Instant;

use sl3gk::gamma::{gamma_stack, AssemblyOptions};
use sl3gk::ktype::{block_labels, multiplicity, z_membership, SeriesParams};
use sl3gk::lie::{adjoint_table, dphi, iwasawa_split, pc_coordinates, split_source, x_basis, Parabolic, Sl2Generator};
use sl3gk::matrix::{bracket, LieMatrix};
use sl3gk::sl2::{classify, dk_act, in_dk, ps_act, DkOperator, Sign, Sl2Classification};
use sl3gk::standard::{random_point, verify_brackets, VerifyOptions};
use sl3gk::su2::{cg_a, component_exists, injector_apply, projector_apply, Generator, TensorVector, WeightVector};
use sl3gk::{GaussianRational, Rational, Scalar, Symbol};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn p0_series() -> Vec<SeriesParams> {
    [(0, 0), (1, 0), (0, 1), (1, 1)].into_iter().map(|(a, b)| SeriesParams::p0(a, b).unwrap()).collect()
}

fn series(k_max: i64) -> Vec<SeriesParams> {
    let mut out = p0_series();
    for k in 2..=k_max {
        for par in [Parabolic::P1, Parabolic::P2] {
            out.push(SeriesParams::maximal(par, k).unwrap());
        }
    }
    out
}

// Criterion 1

/// `tau_l(g) v_k` written out from the ladder formulas.
fn ladder(g: Generator, l: i64, k: i64) -> (i64, i64) {
    match g {
        Generator::H => (k, l - 2 * k),
        Generator::E => (k - 1, -k),
        Generator::F => (k + 1, k - l),
    }
}

fn act_weight(g: Generator, v: &WeightVector) -> WeightVector {
    let l = v.l();
    let mut out = WeightVector::zero(l);
    for (k, c) in v.coeffs().iter().enumerate() {
        let (t, x) = ladder(g, l, k as i64);
        if x != 0 && !c.is_zero() {
            out.add_at(t, &c.scale_rational(&Rational::integer(x)));
        }
    }
    out
}

fn act_tensor(g: Generator, v: &TensorVector) -> TensorVector {
    let l = v.l();
    let mut out = TensorVector::zero(l);
    for (&(q, r), c) in v.terms() {
        let (t, x) = ladder(g, l, q);
        if x != 0 {
            out.add_at(t, r, &c.scale_rational(&Rational::integer(x)));
        }
        let (t, x) = ladder(g, 4, r);
        if x != 0 {
            out.add_at(q, t, &c.scale_rational(&Rational::integer(x)));
        }
    }
    out
}

fn shifts(l: i64) -> Vec<i64> {
    (-2..=2).filter(|&m| l + 2 * m >= (l - 4).abs()).collect()
}

fn clebsch_gordan() -> Outcome {
    let mut checks = 0u64;
    for l in 0..=60 {
        let ms = shifts(l);
        for m in -2..=2 {
            ensure(component_exists(l, m) == ms.contains(&m), || format!("existence l={l} m={m}"))?;
        }
        for &m in &ms {
            for k in 0..=l + 2 * m {
                let v = WeightVector::basis(l + 2 * m, k).unwrap();
                let iv = injector_apply(l, m, &v).unwrap();
                for g in Generator::ALL {
                    let lhs = injector_apply(l, m, &act_weight(g, &v)).unwrap();
                    ensure(lhs == act_tensor(g, &iv), || format!("injector l={l} m={m} k={k} {g:?}"))?;
                    checks += 1;
                }
                for &m2 in &ms {
                    let back = projector_apply(l, m2, &iv).unwrap();
                    let ok = if m2 == m { back == v } else { back.is_zero() };
                    ensure(ok, || format!("P{m2} I{m} l={l} k={k}"))?;
                    checks += 1;
                }
            }
            for q in 0..=l {
                for r in 0..=4 {
                    let t = TensorVector::basis(l, q, r).unwrap();
                    let pt = projector_apply(l, m, &t).unwrap();
                    for g in Generator::ALL {
                        let lhs = projector_apply(l, m, &act_tensor(g, &t)).unwrap();
                        ensure(lhs == act_weight(g, &pt), || format!("projector l={l} m={m} q={q} r={r} {g:?}"))?;
                        checks += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{checks} identities"))
}

// Criterion 2

fn coefficient_relations() -> Outcome {
    let mut checks = 0u64;
    for l in 0..=200 {
        for m in shifts(l) {
            let sign = Rational::sign_power(m);
            let a = |k, i| cg_a(l, m, k, i).unwrap();
            for k in 0..=l + 2 * m {
                let mirror = l + 2 * m - k;
                ensure(a(mirror, 0) == &sign * &a(k, 4), || format!("A0/A4 l={l} m={m} k={k}"))?;
                ensure(a(mirror, 2) == &sign * &a(k, 2), || format!("A2 l={l} m={m} k={k}"))?;
                let lhs = Rational::integer(3)
                    * (Rational::integer(k - m + 1) * a(k, 1) + Rational::integer(l - k + m + 1) * a(k, 3));
                let rhs = Rational::integer(m * l + m * m + m - 6) * a(k, 2);
                ensure(lhs == rhs, || format!("three-term l={l} m={m} k={k}"))?;
                checks += 3;
            }
        }
    }
    Ok(format!("{checks} identities"))
}

// Criterion 3

fn supported(x: &LieMatrix, allowed: &[(usize, usize)]) -> bool {
    (0..3).all(|i| (0..3).all(|j| x.get(i, j).is_zero() || allowed.contains(&(i, j))))
}

fn member_n(x: &LieMatrix, par: Parabolic) -> bool {
    let allowed: &[(usize, usize)] = match par {
        Parabolic::P0 => &[(0, 1), (0, 2), (1, 2)],
        Parabolic::P1 => &[(0, 1), (0, 2)],
        Parabolic::P2 => &[(0, 2), (1, 2)],
    };
    supported(x, allowed)
}

fn member_a(x: &LieMatrix, par: Parabolic) -> bool {
    let d = |i| x.get(i, i).clone();
    let diagonal = supported(x, &[(0, 0), (1, 1), (2, 2)]) && x.trace().is_zero();
    diagonal
        && match par {
            Parabolic::P0 => true,
            Parabolic::P1 => d(1) == d(2),
            Parabolic::P2 => d(0) == d(1),
        }
}

fn member_m(x: &LieMatrix, par: Parabolic) -> bool {
    let traceless = x.trace().is_zero();
    match par {
        Parabolic::P0 => x.is_zero(),
        Parabolic::P1 => traceless && x.get(0, 0).is_zero() && supported(x, &[(1, 1), (1, 2), (2, 1), (2, 2), (0, 0)]),
        Parabolic::P2 => traceless && x.get(2, 2).is_zero() && supported(x, &[(0, 0), (0, 1), (1, 0), (1, 1), (2, 2)]),
    }
}

fn adjoint_and_splits() -> Outcome {
    let xs = x_basis();
    let table = adjoint_table();
    ensure(table.len() == 15, || format!("{} cells", table.len()))?;
    for entry in &table {
        let (t, x) = ladder(entry.generator, 4, entry.j as i64);
        let expected: Vec<(usize, GaussianRational)> =
            if x == 0 { vec![] } else { vec![(t as usize, GaussianRational::integer(x))] };
        ensure(entry.terms == expected, || format!("tabulated cell {entry:?}"))?;
        let commutator = bracket(&dphi(entry.generator), &xs[entry.j]);
        let mut sum = LieMatrix::zero();
        for (t, c) in &entry.terms {
            sum = &sum + &xs[*t].scale(c);
        }
        ensure(commutator == sum, || format!("commutator {entry:?}"))?;
        let mut coords: [GaussianRational; 5] = Default::default();
        for (t, c) in &entry.terms {
            coords[*t] = c.clone();
        }
        ensure(pc_coordinates(&commutator).unwrap() == coords, || format!("coordinates {entry:?}"))?;
    }
    let mut splits = 0;
    for par in Parabolic::ALL {
        for j in 0..5 {
            let s = iwasawa_split(j, par).unwrap();
            let total = &(&s.n_part + &s.a_part) + &(&s.m_part + &s.k_part);
            ensure(total == split_source(j, par), || format!("sum X{j} {par}"))?;
            ensure(member_n(&s.n_part, par), || format!("n part X{j} {par}"))?;
            ensure(member_a(&s.a_part, par), || format!("a part X{j} {par}"))?;
            ensure(member_m(&s.m_part, par), || format!("m part X{j} {par}"))?;
            ensure(s.k_part.is_antisymmetric(), || format!("k part X{j} {par}"))?;
            splits += 1;
        }
    }
    Ok(format!("15 cells, {splits} splits"))
}

// Criterion 4

fn closed_form(params: &SeriesParams, l: i64) -> i64 {
    match (params.sigma(), params.blattner()) {
        (Some((0, 0)), _) if l % 2 == 0 => (l + 2) / 2,
        (Some((0, 0)), _) => (l - 1) / 2,
        (Some(_), _) if l % 2 == 0 => l / 2,
        (Some(_), _) => (l + 1) / 2,
        (None, Some(k)) if k > l => 0,
        (None, Some(k)) if (l - k) % 2 == 0 => (l - k + 2) / 2,
        (None, Some(k)) => (l - k + 1) / 2,
        (None, None) => unreachable!(),
    }
}

fn z_set(s1: i64, s2: i64, l: i64) -> Vec<i64> {
    let top = if (l - s1 - s2).rem_euclid(2) == 0 { l } else { l - 1 };
    (0..=top).filter(|k| (k - l + s2).rem_euclid(2) == 0).collect()
}

fn ktype_census() -> Outcome {
    let all = series(6);
    for params in &all {
        for l in 0..=200 {
            let d = multiplicity(params, l);
            ensure(block_labels(params, l).len() as i64 == d, || format!("{params} l={l} labels"))?;
            ensure(d == closed_form(params, l), || format!("{params} l={l} d={d}"))?;
            if let Some((s1, s2)) = params.sigma() {
                let z = z_set(s1 as i64, s2 as i64, l);
                ensure(z.len() as i64 == d, || format!("{params} l={l} |Z|"))?;
                ensure(block_labels(params, l) == z, || format!("{params} l={l} Z"))?;
                for p in 0..=l {
                    ensure(z_membership(params, l, p).unwrap() == z.contains(&p), || format!("{params} l={l} p={p}"))?;
                }
            }
        }
    }
    Ok(format!("{} series, l <= 200", all.len()))
}

// Criterion 5

fn zero_rows() -> Outcome {
    let mut stacks = 0;
    for params in series(5) {
        for l in 0..=40 {
            for m in -2..=2 {
                if l + m < 0 || multiplicity(&params, l) == 0 || multiplicity(&params, l + m) == 0 {
                    continue;
                }
                let stack = gamma_stack(&params, l, m, AssemblyOptions::default())
                    .map_err(|e| format!("{params} l={l} m={m}: {e}"))?;
                for r in 0..stack.n as usize {
                    for c in 0..stack.cols {
                        ensure(stack.get(r, c).is_zero(), || format!("{params} l={l} m={m} row {r} col {c}"))?;
                    }
                }
                stacks += 1;
            }
        }
    }
    Ok(format!("{stacks} stacks"))
}

// Criterion 6

fn bracket_closure() -> Outcome {
    let mut runs = 0;
    for params in series(4) {
        let l_max = params.minimal_ktype() + 6;
        for seed in 0..5 {
            let point = random_point(seed, &params.symbols());
            let report = verify_brackets(&params.substitute(&point), VerifyOptions { l_max, include_kk: false })
                .map_err(|e| format!("{params} seed {seed}: {e}"))?;
            ensure(report.passed, || format!("{params} seed {seed}: {}", serde_json::to_string(&report).unwrap()))?;
            runs += 1;
        }
    }
    Ok(format!("{runs} runs"))
}

// Criterion 7

type Sl2Vector = std::collections::BTreeMap<i64, Scalar>;

fn sl2_apply(act: &dyn Fn(Sl2Generator, i64) -> (Scalar, i64), g: Sl2Generator, v: &Sl2Vector) -> Sl2Vector {
    let mut out = Sl2Vector::new();
    for (&p, c) in v {
        let (x, t) = act(g, p);
        if x.is_zero() {
            continue;
        }
        let e = out.entry(t).or_default();
        *e += &(&x * c);
        if e.is_zero() {
            out.remove(&t);
        }
    }
    out
}

fn sl2_relations(p: i64, act: &dyn Fn(Sl2Generator, i64) -> (Scalar, i64)) -> Result<(), String> {
    use Sl2Generator::{XMinus, XPlus, W};
    let chi: Sl2Vector = [(p, Scalar::one())].into_iter().collect();
    let run = |a, b| sl2_apply(act, a, &sl2_apply(act, b, &chi));
    let commutator = |a, b| {
        let mut out = run(a, b);
        for (t, c) in run(b, a) {
            let e = out.entry(t).or_default();
            *e -= &c;
            if e.is_zero() {
                out.remove(&t);
            }
        }
        out
    };
    let times = |g, re: i64, im: i64| -> Sl2Vector {
        let c = Scalar::constant(GaussianRational::new(Rational::integer(re), Rational::integer(im)));
        sl2_apply(act, g, &chi).into_iter().map(|(t, x)| (t, &x * &c)).filter(|(_, x)| !x.is_zero()).collect()
    };
    ensure(commutator(W, XPlus) == times(XPlus, 0, 2), || format!("[w,x+] p={p}"))?;
    ensure(commutator(W, XMinus) == times(XMinus, 0, -2), || format!("[w,x-] p={p}"))?;
    ensure(commutator(XPlus, XMinus) == times(W, 0, -4), || format!("[x+,x-] p={p}"))
}

fn expected_tag(nu: i64, sign: Sign) -> Sl2Classification {
    let k = nu.abs() + 1;
    let matches = sign == if k % 2 == 0 { Sign::Plus } else { Sign::Minus };
    match nu {
        0 if sign == Sign::Minus => Sl2Classification::LimitSum,
        n if n > 0 && matches => Sl2Classification::DiscreteEmbedding { k },
        n if n < 0 && matches => Sl2Classification::FiniteQuotient { k },
        _ => Sl2Classification::Irreducible,
    }
}

fn sl2_suite() -> Outcome {
    let nu = Scalar::symbol(Symbol::Nu1);
    for sign in [Sign::Plus, Sign::Minus] {
        let act = |g, p| ps_act(g, &nu, sign, p).unwrap();
        for p in (-100..=100i64).filter(|p| p.rem_euclid(2) == sign.parity()) {
            sl2_relations(p, &act)?;
        }
    }
    for k in 2..=12 {
        let act = |g, p| {
            let (c, t) = dk_act(DkOperator::Lie(g), k, p).unwrap();
            (Scalar::constant(c), t)
        };
        for p in (-100..=100).filter(|&p| in_dk(k, p)) {
            sl2_relations(p, &act)?;
        }
        let nu = Scalar::integer(1 - k);
        let sign = Sign::from_parity(k);
        for p in (2 - k..=k - 2).step_by(2) {
            for g in Sl2Generator::ALL {
                let (c, t) = ps_act(g, &nu, sign, p).unwrap();
                ensure(t.abs() <= k - 2 || c.is_zero(), || format!("k={k} p={p} {g:?} leaves F_k"))?;
            }
        }
        ensure(ps_act(Sl2Generator::XPlus, &nu, sign, k - 2).unwrap().0.is_zero(), || format!("k={k} top"))?;
        ensure(ps_act(Sl2Generator::XMinus, &nu, sign, 2 - k).unwrap().0.is_zero(), || format!("k={k} bottom"))?;
    }
    let mut seen = std::collections::HashSet::new();
    let mut cells = 0;
    for n in -10..=10 {
        for sign in [Sign::Plus, Sign::Minus] {
            let tag = classify(&GaussianRational::integer(n), sign);
            ensure(tag == expected_tag(n, sign), || format!("nu={n} sign={sign}: {tag:?}"))?;
            seen.insert(std::mem::discriminant(&tag));
            cells += 1;
        }
    }
    for s in ["1/2", "-5/3", "i", "3-2i"] {
        let nu: GaussianRational = s.parse().unwrap();
        for sign in [Sign::Plus, Sign::Minus] {
            ensure(classify(&nu, sign) == Sl2Classification::Irreducible, || format!("nu={s} sign={sign}"))?;
            cells += 1;
        }
    }
    ensure(seen.len() == 4, || format!("{} of 4 tags seen", seen.len()))?;
    Ok(format!("{cells} grid cells, 4 tags"))
}

// Criterion 8

fn run_cli(args: &[&str]) -> Result<(Vec<u8>, Option<i32>), String> {
    let out =
        Command::new(env!("CARGO_BIN_EXE_sl3gk")).args(args).output().map_err(|e| format!("cannot run sl3gk: {e}"))?;
    Ok((out.stdout, out.status.code()))
}

fn read_tree(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut out = Vec::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(d) = stack.pop() {
        for entry in std::fs::read_dir(&d).unwrap() {
            let path = entry.unwrap().path();
            if path.is_dir() {
                stack.push(path);
            } else {
                let name = path.strip_prefix(dir).unwrap().display().to_string();
                out.push((name, std::fs::read(&path).unwrap()));
            }
        }
    }
    out.sort();
    out
}

fn determinism() -> Outcome {
    let commands: [&[&str]; 7] = [
        &["coeffs", "--table", "b", "--lmax", "12"],
        &["gamma", "--series", "p0", "--sigma", "1,1", "--l", "5", "--m", "-1"],
        &["ktypes", "--series", "p2", "--k", "3", "--lmax", "30", "--format", "json"],
        &["verify", "--series", "p0", "--sigma", "0,1", "--seed", "7", "--lmax", "7", "--report", "json"],
        &["verify", "--series", "p1", "--k", "2", "--seed", "11", "--lmax", "8"],
        &["verify", "--series", "p0", "--nu", "1/3,-2/5", "--lmax", "8", "--report", "json"],
        &["classify-sl2", "--nu", "-4", "--sign", "+"],
    ];
    for args in commands {
        let first = run_cli(args)?;
        let second = run_cli(args)?;
        ensure(first.1 == Some(0), || format!("{args:?} exited {:?}", first.1))?;
        ensure(first == second, || format!("{args:?} differs between runs"))?;
    }
    let threaded = Command::new(env!("CARGO_BIN_EXE_sl3gk"))
        .env("GK_SL3_THREADS", "1")
        .args(commands[3])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(threaded.stdout == run_cli(commands[3])?.0, || "output depends on thread count".into())?;

    let base = std::env::temp_dir().join(format!("sl3gk-acceptance-{}", std::process::id()));
    let dirs = [base.join("a"), base.join("b")];
    for d in &dirs {
        let (_, code) = run_cli(&["export", "--out", d.to_str().unwrap(), "--lmax", "10", "--gamma-lmax", "5"])?;
        ensure(code == Some(0), || format!("export exited {code:?}"))?;
    }
    let (a, b) = (read_tree(&dirs[0]), read_tree(&dirs[1]));
    let _ = std::fs::remove_dir_all(&base);
    ensure(!a.is_empty() && a == b, || "export trees differ".into())?;
    Ok(format!("{} commands, {} exported files", commands.len() + 1, a.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("Clebsch-Gordan intertwiners, P o I = id, P o I' = 0, l <= 60", clebsch_gordan),
        ("coefficient relations, l <= 200", coefficient_relations),
        ("adjoint table and parabolic splits", adjoint_and_splits),
        ("K-type census against closed forms and Z, l <= 200", ktype_census),
        ("zero offset rows in Gamma assembly, l <= 40", zero_rows),
        ("bracket closure at 5 seeded points per series", bracket_closure),
        ("SL(2) brackets, finite pieces, classifier grid", sl2_suite),
        ("byte-identical CLI output", determinism),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS - {name} ({detail}; {secs:.1}s)", n + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL - {name} ({detail}; {secs:.1}s)", n + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
