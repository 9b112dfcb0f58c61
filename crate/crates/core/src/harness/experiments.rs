use super::params::Params;
use super::{HarnessError, Table};
use crate::algebra::{enumerate_multi_indices, HomogeneousPolynomial, MultilinearForm, ScalarField};
use crate::certificates::{
    check_limit_sequence, choi_kim_scan, diagonal_sharpness, limit_trace_p_to_m, minkowski_interchange_check, search_constant_lower_with,
    sharpness_experiment, verify_inequality, ChoiKimCase, SearchOptions, SharpnessOptions, VerifyOptions,
};
use crate::exec::cell_seed;
use crate::normopt::{
    form_norm_lower_with, form_norm_upper, poly_norm_bracket, poly_norm_lower_with, vector_norm, AlternatingOptions,
    BallSpec, GradientOptions,
};
use crate::serde_ext::format_extended as fmt;
use crate::theory::{
    bilinear_mixed_exponents, exponent_table, interpolate_exponent_pairs, ksz_exponent, multilinear_exponent,
    polynomial_exponent, symmetric_exponent, ExponentPair,
};
use crate::{Execution, Scalar, Tolerances};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

const INF: f64 = f64::INFINITY;

/// What an experiment can see besides its parameters.
pub struct Context {
    pub seed: u64,
    pub tolerances: Tolerances,
    pub execution: Execution,
}

pub struct Experiment {
    pub label: &'static str,
    pub description: &'static str,
    pub parameters: &'static [&'static str],
    pub run: fn(&Params, &Context) -> Result<Table, HarnessError>,
}

pub const EXPERIMENTS: &[Experiment] = &[
    Experiment {
        label: "exponent-table",
        description: "optimal exponents, regimes and constant bounds over an (m, p) grid",
        parameters: &["ms", "ps"],
        run: exponent_table_run,
    },
    Experiment {
        label: "norm",
        description: "certified lower bound and rigorous upper bound on the sup norm of one polynomial or form",
        parameters: &["object", "n", "m", "field", "coefficients", "coefficients_im", "p", "restarts", "expected", "expected_tolerance"],
        run: norm_run,
    },
    Experiment {
        label: "verify-inequality",
        description: "multilinear inequality with constant (√2)^{m-1} on Gaussian random real forms",
        parameters: &["m", "n", "p", "count", "restarts", "min_verified_fraction"],
        run: verify_run,
    },
    Experiment {
        label: "search-constant",
        description: "seeded search for polynomials with a large coefficient-norm to sup-norm ratio",
        parameters: &["m", "n", "p", "field", "exponent", "budget", "min_ratio"],
        run: search_run,
    },
    Experiment {
        label: "choi-kim-scan",
        description: "ratio max|coefficient| / norm over the extreme points of the real 2-homogeneous unit ball on l2^2",
        parameters: &["step", "restarts", "ratio_tolerance", "norm_tolerance"],
        run: choi_kim_run,
    },
    Experiment {
        label: "diagonal-sharpness",
        description: "norm of the diagonal bilinear form n^{1/λ} and growth of coefficient ratios below λ",
        parameters: &["pairs", "sizes", "test_factor", "restarts"],
        run: diagonal_run,
    },
    Experiment {
        label: "ksz-sharpness",
        description: "norm growth of random ±1 forms against the theoretical exponent",
        parameters: &["m", "p", "inner", "outer", "sizes", "seeds_per_size", "restarts", "slope_min", "slope_max"],
        run: ksz_run,
    },
    Experiment {
        label: "limit-trace",
        description: "coefficient to sup-norm ratio of a fixed polynomial as p decreases to m",
        parameters: &["n", "m", "field", "coefficients", "coefficients_im", "ps", "exponent", "tolerance"],
        run: limit_trace_run,
    },
    Experiment {
        label: "interchange-check",
        description: "Minkowski interchange of mixed norms on random matrices",
        parameters: &["size", "count", "lambda"],
        run: interchange_run,
    },
    Experiment {
        label: "interpolation-check",
        description: "midpoint of the bilinear exponent pairs against the symmetric exponent",
        parameters: &["ps", "qs", "tolerance"],
        run: interpolation_run,
    },
];

pub fn find(label: &str) -> Option<&'static Experiment> {
    EXPERIMENTS.iter().find(|e| e.label == label)
}

fn opt(v: Option<f64>) -> String {
    v.map(fmt).unwrap_or_default()
}

fn flag(b: bool) -> String {
    b.to_string()
}

fn exponent_table_run(params: &Params, _: &Context) -> Result<Table, HarnessError> {
    let ms = params.usize_list_or("ms", &[2, 3])?;
    let ps = params.f64_list_or("ps", &[2.0, 2.5, 3.0, 4.0, 5.0, 6.0, 8.0, INF])?;
    let rows = exponent_table(&ms, &ps)?;
    let mut t = Table::new(&["m", "p", "regime", "multilinear_exp", "polynomial_exp", "constant_real", "constant_complex"]);
    for r in &rows {
        t.push(
            format!("m={},p={}", r.m, fmt(r.p)),
            None,
            vec![
                r.m.to_string(),
                fmt(r.p),
                r.regime.label().to_string(),
                opt(r.multilinear_exp),
                opt(r.polynomial_exp),
                opt(r.constant_real),
                opt(r.constant_complex),
            ],
        );
    }
    if let Some(r) = rows.iter().find(|r| r.m == 2 && r.p == INF) {
        let v = r.multilinear_exp.unwrap_or(f64::NAN);
        t.check("littlewood exponent 4/3 at (2, inf)", (v - 4.0 / 3.0).abs() <= 1e-12, fmt(v));
    }
    Ok(t)
}

fn scalars(params: &Params, n: usize, field: ScalarField) -> Result<Option<Vec<Scalar>>, HarnessError> {
    let Some(re) = params.opt_f64_list("coefficients")? else {
        return Ok(None);
    };
    let im = params.opt_f64_list("coefficients_im")?;
    if let Some(im) = &im {
        if field == ScalarField::Real || im.len() != re.len() {
            return Err(HarnessError::Schema(
                "coefficients_im needs field \"complex\" and the length of coefficients".into(),
            ));
        }
    }
    if re.len() != n {
        return Err(HarnessError::Schema(format!("expected {n} coefficients, got {}", re.len())));
    }
    Ok(Some(
        re.iter()
            .enumerate()
            .map(|(i, &r)| Scalar::new(r, im.as_ref().map_or(0.0, |v| v[i])))
            .collect(),
    ))
}

fn polynomial(params: &Params, default: &[f64]) -> Result<HomogeneousPolynomial, HarnessError> {
    let n = params.usize_or("n", 2)?;
    let m = params.usize_or("m", 2)?;
    let field = params.field_or("field", ScalarField::Real)?;
    let d = enumerate_multi_indices(n, m)?.len();
    let dense = match scalars(params, d, field)? {
        Some(v) => v,
        None if default.len() == d => default.iter().map(|&r| Scalar::new(r, 0.0)).collect(),
        None => return Err(HarnessError::Schema(format!("coefficients are required for n = {n}, m = {m}"))),
    };
    Ok(HomogeneousPolynomial::from_dense(n, m, field, &dense)?)
}

fn norm_run(params: &Params, ctx: &Context) -> Result<Table, HarnessError> {
    let object = params.str_or("object", "polynomial")?;
    let restarts = params.usize_or("restarts", ctx.tolerances.default_restarts)?;
    let mut p = params.f64_list_or("p", &[2.0])?;
    let tol = ctx.tolerances;
    let (lower, upper, certificate, est) = match object.as_str() {
        "polynomial" => {
            let poly = polynomial(params, &[0.0, 1.0, 0.0])?;
            if p.len() != 1 {
                return Err(HarnessError::Schema("a polynomial takes a single exponent p".into()));
            }
            let opts = GradientOptions { restarts, seed: ctx.seed, execution: ctx.execution, tolerances: tol };
            let est = poly_norm_lower_with(&poly, p[0], &opts)?;
            let w = &est.witness[0];
            let certificate = poly.eval(w)?.norm() / vector_norm(w, p[0]).powi(poly.degree() as i32);
            (est.value, poly_norm_bracket(&poly, p[0])?.upper, certificate, est)
        }
        "form" => {
            let n = params.usize_or("n", 2)?;
            let m = params.usize_or("m", 2)?;
            let field = params.field_or("field", ScalarField::Real)?;
            let size = n.checked_pow(m as u32).ok_or_else(|| HarnessError::Schema("form too large".into()))?;
            let entries = scalars(params, size, field)?
                .ok_or_else(|| HarnessError::Schema("coefficients are required for a form".into()))?;
            let form = MultilinearForm::from_entries(n, m, field, entries)?;
            if p.len() == 1 {
                p = vec![p[0]; m];
            }
            let balls = BallSpec::new(p.clone())?;
            let opts = AlternatingOptions { restarts, seed: ctx.seed, execution: ctx.execution, tolerances: tol };
            let est = form_norm_lower_with(&form, &balls, &opts)?;
            let refs: Vec<&[Scalar]> = est.witness.iter().map(|v| v.as_slice()).collect();
            let scale: f64 = est.witness.iter().zip(&p).map(|(w, &pk)| vector_norm(w, pk)).product();
            let certificate = form.eval(&refs)?.norm() / scale;
            (est.value, form_norm_upper(&form, &balls)?, certificate, est)
        }
        other => return Err(HarnessError::Schema(format!("object must be \"polynomial\" or \"form\", got {other:?}"))),
    };
    let expected = params.opt_f64("expected")?;
    let expected_tol = params.f64_or("expected_tolerance", 1e-8)?;
    let mut t = Table::new(&["object", "p", "measured", "upper", "certificate", "closed_form", "iterations", "converged", "pass"]);
    let cert_ok = (certificate - lower).abs() <= tol.certificate_rel * lower.max(f64::MIN_POSITIVE);
    let bracket_ok = lower <= upper * (1.0 + 1e-12);
    let expected_ok = expected.is_none_or(|e| (lower - e).abs() <= expected_tol);
    t.push(
        object.clone(),
        Some(ctx.seed),
        vec![
            object,
            p.iter().map(|&v| fmt(v)).collect::<Vec<_>>().join(";"),
            fmt(lower),
            fmt(upper),
            fmt(certificate),
            opt(expected),
            est.iterations.to_string(),
            flag(est.converged),
            flag(cert_ok && bracket_ok && expected_ok),
        ],
    );
    t.check("witness re-evaluates to the reported value", cert_ok, format!("{} vs {}", fmt(certificate), fmt(lower)));
    t.check("lower bound below upper bound", bracket_ok, format!("{} <= {}", fmt(lower), fmt(upper)));
    if let Some(e) = expected {
        t.check("matches expected value", expected_ok, format!("{} vs {}", fmt(lower), fmt(e)));
    }
    Ok(t)
}

fn verify_run(params: &Params, ctx: &Context) -> Result<Table, HarnessError> {
    let m = params.usize_or("m", 2)?;
    let n = params.usize_or("n", 8)?;
    let p = params.f64_or("p", 3.0)?;
    let count = params.usize_or("count", 200)?;
    let restarts = params.usize_or("restarts", ctx.tolerances.default_restarts)?;
    let min_fraction = params.f64_or("min_verified_fraction", 0.95)?;
    let report = verify_inequality(m, n, p, count, ctx.seed, &VerifyOptions { restarts, execution: ctx.execution })?;
    let mut t = Table::new(&["measured", "constant", "norm_lower", "norm_upper", "verified", "violation"]);
    for r in &report.rows {
        t.push(
            format!("form={}", r.index),
            Some(r.seed),
            vec![fmt(r.lhs), fmt(report.constant), fmt(r.norm_lower), fmt(r.norm_upper), flag(r.verified), flag(r.violation)],
        );
    }
    let fraction = report.verified as f64 / count.max(1) as f64;
    t.check(
        "verified fraction",
        fraction >= min_fraction,
        format!("{}/{count} verified, exponent {}", report.verified, fmt(report.exponent)),
    );
    t.check("no rigorous violations", report.violations == 0, format!("{} violations", report.violations));
    Ok(t)
}

fn search_run(params: &Params, ctx: &Context) -> Result<Table, HarnessError> {
    let m = params.usize_or("m", 2)?;
    let n = params.usize_or("n", 2)?;
    let p = params.f64_or("p", 2.0)?;
    let field = params.field_or("field", ScalarField::Real)?;
    let exponent = match params.opt_f64("exponent")? {
        Some(e) => e,
        None => polynomial_exponent(m, p)?,
    };
    let budget = params.usize_or("budget", 10_000)?;
    let min_ratio = params.opt_f64("min_ratio")?;
    let opts = SearchOptions { execution: ctx.execution, ..SearchOptions::default() };
    let r = search_constant_lower_with(m, n, p, field, exponent, budget, ctx.seed, &opts)?;
    let pass = min_ratio.is_none_or(|t| r.best_ratio >= t);
    let coefficients: Vec<String> = r
        .best_object
        .dense_coefficients()
        .iter()
        .map(|c| if field == ScalarField::Real { fmt(c.re) } else { format!("{}{:+}i", fmt(c.re), c.im) })
        .collect();
    let mut t = Table::new(&["exponent", "measured", "evaluations", "target", "best_coefficients", "pass"]);
    t.push(
        "search".into(),
        Some(ctx.seed),
        vec![fmt(exponent), fmt(r.best_ratio), r.evaluations.to_string(), opt(min_ratio), coefficients.join(";"), flag(pass)],
    );
    if let Some(target) = min_ratio {
        t.check("ratio reaches target", pass, format!("{} >= {}", fmt(r.best_ratio), fmt(target)));
    }
    Ok(t)
}

fn choi_kim_run(params: &Params, ctx: &Context) -> Result<Table, HarnessError> {
    let step = params.f64_or("step", 1e-3)?;
    let restarts = params.usize_or("restarts", 8)?;
    let ratio_tol = params.f64_or("ratio_tolerance", 1e-4)?;
    let norm_tol = params.f64_or("norm_tolerance", ctx.tolerances.diagonal_norm_rel)?;
    let scan = choi_kim_scan(step, restarts, ctx.seed, ctx.execution)?;
    let mut t = Table::new(&["case", "a", "b", "c", "measured", "closed_form", "max_coefficient", "ratio"]);
    for r in &scan.rows {
        let case = match r.case {
            ChoiKimCase::Diagonal => "diagonal",
            ChoiKimCase::Family => "family",
        };
        t.push(
            format!("case={case},a={},c={}", fmt(r.a), fmt(r.c)),
            Some(ctx.seed),
            vec![case.into(), fmt(r.a), fmt(r.b), fmt(r.c), fmt(r.norm), "1.0".into(), fmt(r.max_coefficient), fmt(r.ratio)],
        );
    }
    t.check(
        "sup ratio equals 2",
        (scan.max_ratio - 2.0).abs() <= ratio_tol,
        format!("{} at c = {}", fmt(scan.max_ratio), fmt(scan.argmax_c)),
    );
    t.check("extreme points have norm 1", scan.max_norm_deviation <= norm_tol, fmt(scan.max_norm_deviation));
    Ok(t)
}

fn diagonal_run(params: &Params, ctx: &Context) -> Result<Table, HarnessError> {
    let pairs = params.pair_list_or("pairs", &[(4.0, 4.0), (3.0, 3.0), (6.0, 3.0)])?;
    let sizes = params.usize_list_or("sizes", &[2, 4, 8, 16, 32])?;
    let factor = params.f64_or("test_factor", 0.5)?;
    let restarts = params.usize_or("restarts", 8)?;
    let report = diagonal_sharpness(&pairs, &sizes, factor, restarts, ctx.seed, ctx.execution)?;
    let tol = ctx.tolerances;
    let mut t = Table::new(&[
        "p", "q", "lambda", "size", "measured", "closed_form", "rel_err", "ratio_at_test", "slope", "target", "pass",
    ]);
    for r in &report.rows {
        let fit = report.fits.iter().find(|f| f.p == r.p && f.q == r.q).expect("fit per pair");
        let pass = r.rel_err <= tol.diagonal_norm_rel && (fit.slope - fit.expected_slope).abs() <= tol.diagonal_slope_band;
        t.push(
            format!("p={},q={},n={}", fmt(r.p), fmt(r.q), r.n),
            Some(r.seed),
            vec![
                fmt(r.p),
                fmt(r.q),
                fmt(r.lambda),
                r.n.to_string(),
                fmt(r.lower),
                fmt(r.exact),
                fmt(r.rel_err),
                fmt(r.ratio_at_test),
                fmt(fit.slope),
                fmt(fit.expected_slope),
                flag(pass),
            ],
        );
    }
    let worst = report.rows.iter().map(|r| r.rel_err).fold(0.0, f64::max);
    t.check("norms match n^{1/λ}", worst <= tol.diagonal_norm_rel, format!("max relative error {}", fmt(worst)));
    for f in &report.fits {
        t.check(
            &format!("ratio slope at (p, q) = ({}, {})", fmt(f.p), fmt(f.q)),
            (f.slope - f.expected_slope).abs() <= tol.diagonal_slope_band,
            format!("{} vs {}", fmt(f.slope), fmt(f.expected_slope)),
        );
    }
    Ok(t)
}

fn ksz_run(params: &Params, ctx: &Context) -> Result<Table, HarnessError> {
    let m = params.usize_or("m", 2)?;
    let ps = params.f64_list_or("p", &vec![INF; m])?;
    let default_pair = if m == 2 && ps.len() == 2 {
        bilinear_mixed_exponents(ps[0], ps[1])?
    } else {
        ExponentPair::new(2.0, multilinear_exponent(m, ps.iter().copied().fold(INF, f64::min))?)?
    };
    let pair = ExponentPair::new(
        params.f64_or("inner", default_pair.inner)?,
        params.f64_or("outer", default_pair.outer)?,
    )?;
    let sizes = params.usize_list_or("sizes", &[4, 8, 16, 32])?;
    let opts = SharpnessOptions {
        seeds_per_size: params.usize_or("seeds_per_size", ctx.tolerances.monte_carlo_seeds)?,
        restarts: params.usize_or("restarts", ctx.tolerances.default_restarts)?,
        execution: ctx.execution,
    };
    let report = sharpness_experiment(m, &BallSpec::new(ps.clone())?, pair, &sizes, ctx.seed, &opts)?;
    let theory = ksz_exponent(m, &ps)?;
    let band = ctx.tolerances.ksz_slope_band;
    let lo = params.f64_or("slope_min", theory - band)?;
    let hi = params.f64_or("slope_max", theory + band)?;
    let pass = report.slope >= lo && report.slope <= hi;
    let mut t = Table::new(&[
        "size", "replicate", "measured", "coefficient_norm", "closed_form", "converged", "slope", "target", "implied_bound", "pass",
    ]);
    for c in &report.cells {
        t.push(
            format!("N={},rep={}", c.size, c.replicate),
            Some(c.seed),
            vec![
                c.size.to_string(),
                c.replicate.to_string(),
                fmt(c.norm),
                fmt(c.measured),
                fmt(c.closed_form),
                flag(c.converged),
                fmt(report.slope),
                fmt(theory),
                fmt(report.implied_bound),
                flag(pass),
            ],
        );
    }
    t.check(
        "fitted slope inside band",
        pass,
        format!("{} in [{}, {}], implied outer exponent {}", fmt(report.slope), fmt(lo), fmt(hi), fmt(report.implied_bound)),
    );
    Ok(t)
}

/// `1 / max_{‖x‖_p = 1} |x^α|` for a monomial `c·x^α`, otherwise `None`.
fn monomial_ratio(p: &HomogeneousPolynomial, ball: f64) -> Option<f64> {
    let (alpha, _) = match p.coeffs().iter().collect::<Vec<_>>().as_slice() {
        [single] => *single,
        _ => return None,
    };
    let m = alpha.degree() as f64;
    let log_max: f64 = alpha
        .exponents()
        .iter()
        .filter(|&&a| a > 0)
        .map(|&a| a as f64 / ball * (a as f64 / m).ln())
        .sum();
    Some((-log_max).exp())
}

fn limit_trace_run(params: &Params, _: &Context) -> Result<Table, HarnessError> {
    let poly = polynomial(params, &[0.0, 1.0, 0.0])?;
    let ps = params.f64_list_or("ps", &[3.0, 2.5, 2.1])?;
    let fixed = params.opt_f64("exponent")?;
    let tol = params.f64_or("tolerance", 1e-6)?;
    let m = poly.degree();
    check_limit_sequence(m, &ps)?;
    let mut t = Table::new(&["p", "exponent", "measured", "closed_form", "pass"]);
    let mut worst: f64 = 0.0;
    let mut closed_any = false;
    for &p in &ps {
        let exponent = match fixed {
            Some(e) => e,
            None => polynomial_exponent(m, p)?,
        };
        let measured = limit_trace_p_to_m(&poly, &[p], exponent)?[0];
        let closed = monomial_ratio(&poly, p);
        let pass = closed.is_none_or(|c| (measured - c).abs() <= tol);
        if let Some(c) = closed {
            closed_any = true;
            worst = worst.max((measured - c).abs());
        }
        t.push(format!("p={}", fmt(p)), Some(0), vec![fmt(p), fmt(exponent), fmt(measured), opt(closed), flag(pass)]);
    }
    if closed_any {
        t.check("trace matches the monomial closed form", worst <= tol, format!("max error {}", fmt(worst)));
    }
    Ok(t)
}

fn interchange_run(params: &Params, ctx: &Context) -> Result<Table, HarnessError> {
    let size = params.usize_or("size", 5)?;
    let count = params.usize_or("count", 1000)?;
    let lambda = params.f64_or("lambda", 1.5)?;
    let rows = ctx.execution.map_indexed(count, |i| {
        let seed = cell_seed(ctx.seed, &format!("matrix={i}"));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let entries: Vec<f64> = (0..size * size).map(|_| StandardNormal.sample(&mut rng)).collect();
        let a = MultilinearForm::from_real(size, 2, &entries)?;
        minkowski_interchange_check(&a, lambda).map(|c| (seed, c))
    });
    let mut t = Table::new(&["lhs", "rhs", "holds"]);
    let mut failures = 0;
    for (i, r) in rows.into_iter().enumerate() {
        let (seed, c) = r?;
        failures += usize::from(!c.holds);
        t.push(format!("matrix={i}"), Some(seed), vec![fmt(c.lhs), fmt(c.rhs), flag(c.holds)]);
    }
    t.check("interchange holds on every matrix", failures == 0, format!("{failures} failures out of {count}"));
    Ok(t)
}

fn interpolation_run(params: &Params, _: &Context) -> Result<Table, HarnessError> {
    let ps = params.f64_list_or("ps", &[4.0, 5.0, 6.0, 8.0, 10.0])?;
    let qs = params.f64_list_or("qs", &[4.0, 5.0, 7.0, 12.0])?;
    let tol = params.f64_or("tolerance", 1e-12)?;
    let mut t = Table::new(&["p", "q", "lambda", "symmetric", "interpolated_inner", "interpolated_outer", "error", "pass"]);
    let mut worst: f64 = 0.0;
    for &p in &ps {
        for &q in &qs {
            let pair = bilinear_mixed_exponents(p, q)?;
            let mid = interpolate_exponent_pairs(pair, pair.swapped(), 0.5)?;
            let s = symmetric_exponent(p, q)?;
            let err = (mid.inner - s).abs().max((mid.outer - s).abs());
            worst = worst.max(err);
            t.push(
                format!("p={},q={}", fmt(p), fmt(q)),
                None,
                vec![fmt(p), fmt(q), fmt(pair.outer), fmt(s), fmt(mid.inner), fmt(mid.outer), fmt(err), flag(err <= tol)],
            );
        }
    }
    t.check("midpoint equals symmetric exponent", worst <= tol, format!("max error {}", fmt(worst)));
    Ok(t)
}
