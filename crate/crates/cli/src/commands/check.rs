use std::f64::consts::PI;

use rayon::prelude::*;

use jonesvol_core::asympt::{alexander_limit_check, growth_partial};
use jonesvol_core::braid::{parse_braid, random_braid, BraidWord};
use jonesvol_core::hypgeom::{dilog, lobachevsky, tetra_volume_shape, ShapeParameter};
use jonesvol_core::invariants::{
    colored_jones, fig8_double_sum, fig8_product, fig8_single_sum, kashaev, skein_residual_n2, tangle_scalar,
};
use jonesvol_core::tensorq::{
    skein_matrix_residual, verify_inverse, verify_mu_commutation, verify_trace_axiom, verify_yang_baxter, ColorDim,
    QExponent,
};
use jonesvol_core::Complex64;
use serde_json::Value;

use super::{Rendered, Table};
use crate::args::{CheckArgs, Suite};
use crate::error::CliError;
use crate::report::{cell, document, Obj};

struct Check {
    name: String,
    residual: f64,
    tolerance: f64,
}

impl Check {
    fn new(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Check { name: name.into(), residual, tolerance }
    }

    fn passed(&self) -> bool {
        self.residual <= self.tolerance
    }
}

fn max_of(xs: impl IntoIterator<Item = f64>) -> f64 {
    // NaN propagates so that a broken evaluation can never pass.
    xs.into_iter().fold(0.0, |acc, x| if x.is_nan() || acc.is_nan() { f64::NAN } else { acc.max(x) })
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(f64::MIN_POSITIVE)
}

/// Fractional part of `k·α + seed·β`, a low-discrepancy sequence in [0, 1).
fn frac(k: usize, seed: u64, alpha: f64) -> f64 {
    let x = k as f64 * alpha + seed as f64 * 0.414_213_562_373_095;
    x - x.floor()
}

/// The `k`-th sample point: even `k` on the unit circle, odd `k` off it.
fn sample_q(k: usize, seed: u64) -> QExponent {
    let phase = 0.15 + 2.8 * frac(k, seed, 0.618_033_988_749_895);
    let radius = if k % 2 == 0 { 0.0 } else { 0.6 * frac(k, seed, 0.754_877_666_246_693) - 0.3 };
    QExponent::new(Complex64::new(radius, phase)).expect("finite")
}

fn yb(color_max: usize, samples: usize, seed: u64) -> Vec<Check> {
    let cases: Vec<(usize, usize)> = (1..=color_max).flat_map(|n| (0..samples).map(move |k| (n, k))).collect();
    let rows: Vec<[f64; 4]> = cases
        .par_iter()
        .map(|&(n, k)| {
            let (d, q) = (ColorDim::new(n).unwrap(), sample_q(k, seed));
            [verify_yang_baxter(d, q), verify_mu_commutation(d, q), verify_trace_axiom(d, q), verify_inverse(d, q)]
        })
        .collect();
    ["yang_baxter", "mu_commutation", "trace_axiom", "inverse"]
        .iter()
        .enumerate()
        .map(|(i, name)| Check::new(*name, max_of(rows.iter().map(|r| r[i])), 1e-10))
        .collect()
}

fn markov(color_max: usize, samples: usize, seed: u64) -> Result<Vec<Check>, CliError> {
    let mut checks = Vec::new();
    for n in 2..=color_max.max(2) {
        let d = ColorDim::new(n)?;
        let devs: Vec<f64> = (0..samples)
            .into_par_iter()
            .map(|i| {
                let s = seed.wrapping_mul(1_000_003).wrapping_add(i as u64);
                let b = random_braid(4, 8, s);
                let w = b.random_markov_walk(10, s ^ 0x9e37_79b9_7f4a_7c15);
                let q = sample_q(i, seed);
                let j0 = colored_jones(&b, d, q)?.value;
                let j1 = colored_jones(&w, d, q)?.value;
                Ok(rel(j0, j1))
            })
            .collect::<Result<_, jonesvol_core::Error>>()?;
        checks.push(Check::new(format!("markov_n{n}"), max_of(devs), 1e-8));
    }
    Ok(checks)
}

fn skein(samples: usize, seed: u64) -> Result<Vec<Check>, CliError> {
    let w = |s: &str| parse_braid(s, Some(2)).unwrap();
    let (trefoil, unknot, hopf) = (w("1 1 1"), w("1"), w("1 1"));
    let (neg, id2) = (w("-1"), BraidWord::identity(2).unwrap());
    let mut r1 = Vec::new();
    let mut r2 = Vec::new();
    let mut r3 = Vec::new();
    for k in 0..samples {
        let q = sample_q(k, seed);
        r1.push(skein_residual_n2(&trefoil, &unknot, &hopf, q)?);
        r2.push(skein_residual_n2(&unknot, &neg, &id2, q)?);
        r3.push(skein_matrix_residual(q));
    }
    Ok(vec![
        Check::new("trefoil_unknot_hopf", max_of(r1), 1e-10),
        Check::new("unknot_mirror_unlink", max_of(r2), 1e-10),
        Check::new("r_matrix_identity", max_of(r3), 1e-12),
    ])
}

fn lobachevsky_suite(samples: usize, seed: u64) -> Vec<Check> {
    let thetas: Vec<f64> = (0..samples).map(|k| 20.0 * frac(k, seed, 0.618_033_988_749_895) - 10.0).collect();
    let odd = max_of(thetas.iter().map(|&t| (lobachevsky(t) + lobachevsky(-t)).abs()));
    let period = max_of(thetas.iter().map(|&t| (lobachevsky(t + PI) - lobachevsky(t)).abs()));
    let double = max_of(
        thetas.iter().map(|&t| (lobachevsky(2.0 * t) - 2.0 * lobachevsky(t) - 2.0 * lobachevsky(t + PI / 2.0)).abs()),
    );
    let mult = max_of(thetas.iter().flat_map(|&t| {
        (2..=4).map(move |n| {
            let s: f64 = (0..n).map(|k| lobachevsky(t + k as f64 * PI / n as f64)).sum();
            (lobachevsky(n as f64 * t) - n as f64 * s).abs()
        })
    }));
    let l3 = lobachevsky(PI / 3.0);
    let regular = ShapeParameter::new(Complex64::from_polar(1.0, PI / 3.0)).unwrap();
    vec![
        Check::new("odd", odd, 1e-12),
        Check::new("period_pi", period, 1e-12),
        Check::new("double_angle", double, 1e-10),
        Check::new("multiplication", mult, 1e-10),
        Check::new("five_pi_over_six", (lobachevsky(5.0 * PI / 6.0) + 1.5 * l3).abs(), 1e-12),
        Check::new("zero_at_pi", lobachevsky(PI).abs(), 1e-12),
        Check::new("regular_tetrahedron", (tetra_volume_shape(regular) - 3.0 * l3).abs(), 1e-10),
    ]
}

fn dilog_suite(samples: usize, seed: u64) -> Result<Vec<Check>, CliError> {
    let c = Complex64::new;
    let zeta2 = PI * PI / 6.0;
    let mut taylor = Vec::new();
    let mut inversion = Vec::new();
    let mut rotation = Vec::new();
    for k in 0..samples {
        let (a, b) = (frac(k, seed, 0.618_033_988_749_895), frac(k, seed, 0.754_877_666_246_693));
        let small = Complex64::from_polar(0.5 * a, 2.0 * PI * b);
        let series: Complex64 = (1..=200).map(|n| small.powu(n) / (n * n) as f64).sum();
        taylor.push((dilog(small)? - series).norm());

        let big = Complex64::from_polar(1.05 + 4.0 * a, 2.0 * PI * b + 0.01);
        let l = (-big).ln();
        inversion.push((dilog(big)? + dilog(big.inv())? + zeta2 + l * l * 0.5).norm());

        let z = ShapeParameter::new(c(4.0 * a - 2.0, 3.0 * b + 0.01))?;
        rotation.push((tetra_volume_shape(z) - tetra_volume_shape(z.rotate())).abs());
    }
    let e = Complex64::from_polar(1.0, PI / 3.0);
    Ok(vec![
        Check::new("li2_one", (dilog(c(1.0, 0.0))?.re - zeta2).abs(), 1e-12),
        Check::new("li2_minus_one", (dilog(c(-1.0, 0.0))? + zeta2 / 2.0).norm(), 1e-12),
        Check::new("clausen_pi_over_3", (dilog(e)?.im - 2.0 * lobachevsky(PI / 6.0)).abs(), 1e-12),
        Check::new("taylor_series", max_of(taylor), 1e-10),
        Check::new("inversion", max_of(inversion), 1e-10),
        Check::new("tetra_rotation", max_of(rotation), 1e-10),
    ])
}

fn fig8_suite(color_max: usize, samples: usize, seed: u64) -> Result<Vec<Check>, CliError> {
    let braid = parse_braid("1 -2 1 -2", None).unwrap();
    let cases: Vec<(usize, usize)> = (2..=color_max).flat_map(|n| (0..samples).map(move |k| (n, k))).collect();
    let generic: Vec<f64> = cases
        .par_iter()
        .map(|&(n, k)| {
            let d = ColorDim::new(n)?;
            let q = sample_q(k, seed);
            let vals = [
                tangle_scalar(&braid, d, q)?.value,
                colored_jones(&braid, d, q)?.value,
                fig8_double_sum(d, q),
                fig8_product(d, q),
                fig8_single_sum(d, q)?,
            ];
            Ok(max_of(vals.iter().flat_map(|a| vals.iter().map(move |b| rel(*a, *b)))))
        })
        .collect::<Result<_, jonesvol_core::Error>>()?;
    let roots: Vec<f64> = (2..=color_max)
        .into_par_iter()
        .map(|n| {
            let d = ColorDim::new(n)?;
            let q = QExponent::root_of_unity(n)?;
            let vals = [tangle_scalar(&braid, d, q)?.value, fig8_double_sum(d, q), fig8_product(d, q)];
            Ok(max_of(vals.iter().flat_map(|a| vals.iter().map(move |b| rel(*a, *b)))))
        })
        .collect::<Result<_, jonesvol_core::Error>>()?;
    let sin2 = |n: usize| -> f64 { (0..n).map(|j| growth_partial(n, j).unwrap()).sum() };
    let k2 = kashaev(&braid, ColorDim::new(2)?)?;
    let k3 = kashaev(&braid, ColorDim::new(3)?)?;
    Ok(vec![
        Check::new("generic_q_agreement", max_of(generic), 1e-9),
        Check::new("root_of_unity_agreement", max_of(roots), 1e-9),
        Check::new("kashaev_2", (k2 - 5.0).norm().max((sin2(2) - 5.0).abs()), 1e-10),
        Check::new("kashaev_3", (k3 - 13.0).norm().max((sin2(3) - 13.0).abs()), 1e-10),
    ])
}

fn alexander_suite() -> Result<Vec<Check>, CliError> {
    let theta = Complex64::new(0.1, 0.0);
    let (v200, target) = alexander_limit_check(theta, 200)?;
    let (v2000, _) = alexander_limit_check(theta, 2000)?;
    let (d200, d2000) = ((v200 - target).norm(), (v2000 - target).norm());
    Ok(vec![
        Check::new("deviation_n2000", d2000, 1e-2),
        Check::new("decrease_n200_to_n2000", (d2000 - d200).max(0.0), 0.0),
    ])
}

pub fn run(args: &CheckArgs) -> Result<Rendered, CliError> {
    let samples = |default: usize| args.samples.unwrap_or(default);
    let colors = |default: usize| args.color_max.unwrap_or(default);
    let (name, checks) = match args.suite {
        Suite::Yb => ("yb", yb(colors(6), samples(20), args.seed)),
        Suite::Markov => ("markov", markov(colors(3), samples(100), args.seed)?),
        Suite::Skein => ("skein", skein(samples(10), args.seed)?),
        Suite::Lobachevsky => ("lobachevsky", lobachevsky_suite(samples(1000), args.seed)),
        Suite::Dilog => ("dilog", dilog_suite(samples(100), args.seed)?),
        Suite::Fig8Formulas => ("fig8-formulas", fig8_suite(colors(8), samples(5), args.seed)?),
        Suite::Alexander => ("alexander", alexander_suite()?),
    };
    let failures = checks.iter().filter(|c| !c.passed()).count();

    let list: Vec<Value> = checks
        .iter()
        .map(|c| {
            Obj::new()
                .set("name", c.name.clone())
                .f("residual", c.residual)
                .f("tolerance", c.tolerance)
                .set("passed", c.passed())
                .into()
        })
        .collect();
    let mut inputs = Obj::new().set("suite", name).set("seed", args.seed);
    if let Some(s) = args.samples {
        inputs = inputs.set("samples", s as u64);
    }
    if let Some(c) = args.color_max {
        inputs = inputs.set("color_max", c as u64);
    }
    let outputs = Obj::new().set("checks", list).set("passed", failures == 0);
    let diagnostics = Obj::new().set("count", checks.len() as u64).set("failures", failures as u64);
    let rows = checks
        .iter()
        .map(|c| vec![c.name.clone(), cell(c.residual), cell(c.tolerance), c.passed().to_string()])
        .collect();
    Ok(Rendered {
        doc: document("check", inputs, outputs, diagnostics),
        table: Some(Table { header: vec!["check", "residual", "tolerance", "passed"], rows }),
        failures,
    })
}
