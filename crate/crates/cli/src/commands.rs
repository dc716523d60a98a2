//! Subcommand implementations.

use anyhow::{bail, Context, Result};
use rug::{Float, Rational};
use serde_json::Value;

use recipsum_core::asymp::{
    rademacher_p, s1_asymptotic, s1_mainterm, s2_asymptotic_detail, s2_mainterm, IiEvaluation,
};
use recipsum_core::qseries::{enumerate_moment, partition_numbers, s_moment_series};
use recipsum_core::render::{render_float, render_rational};
use recipsum_core::verify::{run_suite, Suite, VerifyOptions};
use recipsum_core::PrecisionContext;

use crate::output::Report;
use crate::{Command, GlobalOpts, IiMode, SuiteArg};

pub struct Outcome {
    pub report: Report,
    pub success: bool,
}

impl Outcome {
    fn ok(report: Report) -> Result<Self> {
        Ok(Outcome { report, success: true })
    }
}

pub fn run(command: &Command, g: &GlobalOpts) -> Result<Outcome> {
    let ctx = PrecisionContext::new(g.precision)?;
    let digits = g.digits as usize;
    match command {
        Command::Exact { moment, n } => exact(*moment, &n.n, g, digits),
        Command::Asym { moment, n, ii } => {
            let rows = n
                .n
                .iter()
                .map(|&n| Ok((n, render_float(&asymptotic(*moment, n, *ii, &ctx)?, digits))))
                .collect::<Result<Vec<_>>>()?;
            Outcome::ok(value_report("asym", *moment, g, rows))
        }
        Command::Mainterm { moment, n } => {
            let rows = n
                .n
                .iter()
                .map(|&n| {
                    let v = match moment {
                        1 => s1_mainterm(n, &ctx)?,
                        _ => s2_mainterm(n, &ctx)?,
                    };
                    Ok((n, render_float(&v, digits)))
                })
                .collect::<Result<Vec<_>>>()?;
            Outcome::ok(value_report("mainterm", *moment, g, rows))
        }
        Command::Compare { moment, n, ii } => compare(*moment, &n.n, *ii, g, &ctx, digits),
        Command::Verify { suite } => verify(*suite, g, ctx),
        Command::Pn { n, truncation } => pn(&n.n, *truncation, g, &ctx),
    }
}

fn meta(g: &GlobalOpts, moment: Option<u32>) -> Vec<(&'static str, Value)> {
    let mut m = Vec::new();
    if let Some(k) = moment {
        m.push(("moment", Value::from(k)));
    }
    m.push(("precision_bits", Value::from(g.precision)));
    m.push(("digits", Value::from(g.digits)));
    m
}

fn to_u32(n: u64) -> Result<u32> {
    u32::try_from(n).with_context(|| format!("n = {n} is too large for the exact series"))
}

fn exact_values(moment: u32, ns: &[u64], enum_cap: u32) -> Result<Vec<(Rational, bool)>> {
    let order = to_u32(*ns.iter().max().expect("nonempty"))? as usize;
    let series = s_moment_series(moment, order)?;
    ns.iter()
        .map(|&n| {
            let value = series.coeffs()[n as usize].clone();
            let checked = n >= 1 && n <= u64::from(enum_cap);
            if checked {
                let brute = enumerate_moment(n as u32, moment, enum_cap)?;
                if brute != value {
                    bail!("series and enumeration disagree at n = {n}, k = {moment}: {value} vs {brute}");
                }
            }
            Ok((value, checked))
        })
        .collect()
}

fn exact(moment: u32, ns: &[u64], g: &GlobalOpts, digits: usize) -> Result<Outcome> {
    let values = exact_values(moment, ns, g.enum_cap)?;
    let mut rows = Vec::new();
    let mut text = Vec::new();
    for (&n, (v, checked)) in ns.iter().zip(&values) {
        rows.push(vec![
            Value::from(n.to_string()),
            Value::from(render_rational(v, digits)),
            Value::from(v.numer().to_string()),
            Value::from(v.denom().to_string()),
            Value::from(*checked),
        ]);
        text.push(v.to_string());
    }
    Outcome::ok(Report {
        command: "exact",
        meta: meta(g, Some(moment)),
        columns: vec!["n", "value", "num", "den", "enumeration_checked"],
        rows,
        text,
    })
}

fn asymptotic(moment: u32, n: u64, ii: IiMode, ctx: &PrecisionContext) -> Result<Float> {
    Ok(match moment {
        1 => s1_asymptotic(n, ctx)?,
        _ => {
            let mode = match ii {
                IiMode::Quadrature => IiEvaluation::Quadrature,
                IiMode::Leading => IiEvaluation::LeadingTerm,
            };
            s2_asymptotic_detail(n, ctx, mode)?.real()
        }
    })
}

fn value_report(command: &'static str, moment: u32, g: &GlobalOpts, values: Vec<(u64, String)>) -> Report {
    let text = values.iter().map(|(n, v)| format!("{n} {v}")).collect();
    let rows = values
        .into_iter()
        .map(|(n, v)| vec![Value::from(n.to_string()), Value::from(v)])
        .collect();
    Report {
        command,
        meta: meta(g, Some(moment)),
        columns: vec!["n", "value"],
        rows,
        text,
    }
}

fn aligned(columns: &[&str], rows: &[Vec<String>]) -> Vec<String> {
    let widths: Vec<usize> = (0..columns.len())
        .map(|i| rows.iter().map(|r| r[i].len()).chain([columns[i].len()]).max().unwrap_or(0))
        .collect();
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        padded.join("  ")
    };
    let mut out = vec![line(columns.to_vec())];
    out.extend(rows.iter().map(|r| line(r.iter().map(String::as_str).collect())));
    out
}

fn compare(moment: u32, ns: &[u64], ii: IiMode, g: &GlobalOpts, ctx: &PrecisionContext, digits: usize) -> Result<Outcome> {
    let exact = exact_values(moment, ns, g.enum_cap)?;
    let mut cells = Vec::new();
    for (&n, (e, _)) in ns.iter().zip(&exact) {
        if n == 0 {
            bail!("the asymptotic formula needs n >= 1");
        }
        let a = asymptotic(moment, n, ii, ctx)?;
        let a_exact = a.to_rational().context("asymptotic value is not finite")?;
        let ratio = Rational::from(e / &a_exact) - 1u32;
        cells.push(vec![
            n.to_string(),
            render_rational(e, digits),
            render_rational(&a_exact, digits),
            render_rational(&ratio, digits),
        ]);
    }
    let columns = vec!["n", "exact", "asymptotic", "ratio_minus_one"];
    let text = aligned(&columns, &cells);
    Outcome::ok(Report {
        command: "compare",
        meta: meta(g, Some(moment)),
        columns,
        rows: cells.into_iter().map(|r| r.into_iter().map(Value::from).collect()).collect(),
        text,
    })
}

fn verify(suite: SuiteArg, g: &GlobalOpts, ctx: PrecisionContext) -> Result<Outcome> {
    let suites: Vec<Suite> = match suite {
        SuiteArg::All => Suite::ALL.to_vec(),
        SuiteArg::Omega => vec![Suite::Omega],
        SuiteArg::Branch => vec![Suite::Branch],
        SuiteArg::Bessel => vec![Suite::Bessel],
        SuiteArg::Alphabeta => vec![Suite::AlphaBeta],
        SuiteArg::Lq => vec![Suite::Lq],
        SuiteArg::Bell => vec![Suite::Bell],
    };
    let opts = VerifyOptions {
        ctx,
        enumeration_cap: g.enum_cap,
        ..VerifyOptions::default()
    };
    let mut rows = Vec::new();
    let mut text = Vec::new();
    let mut success = true;
    for s in suites {
        for c in run_suite(s, &opts)? {
            success &= c.passed;
            let tag = if c.passed { "PASS" } else { "FAIL" };
            text.push(if c.detail.is_empty() {
                format!("{tag} {}: {}", c.suite, c.name)
            } else {
                format!("{tag} {}: {} ({})", c.suite, c.name, c.detail)
            });
            rows.push(vec![
                Value::from(c.suite),
                Value::from(c.name),
                Value::from(c.passed),
                Value::from(c.detail),
            ]);
        }
    }
    Ok(Outcome {
        report: Report {
            command: "verify",
            meta: meta(g, None),
            columns: vec!["suite", "check", "passed", "detail"],
            rows,
            text,
        },
        success,
    })
}

fn pn(ns: &[u64], truncation: Option<u64>, g: &GlobalOpts, ctx: &PrecisionContext) -> Result<Outcome> {
    let max = usize::try_from(*ns.iter().max().expect("nonempty"))?;
    let table = partition_numbers(max);
    let mut rows = Vec::new();
    let mut text = Vec::new();
    for &n in ns {
        let v = rademacher_p(n, truncation, ctx)?;
        if v.value != table[n as usize] {
            bail!("Rademacher sum gives {} for p({n}) but the recurrence gives {}", v.value, table[n as usize]);
        }
        rows.push(vec![
            Value::from(n.to_string()),
            Value::from(v.value.to_string()),
            Value::from(v.terms.to_string()),
            Value::from(render_float(&v.residual, 3)),
        ]);
        text.push(format!("{n} {}", v.value));
    }
    Outcome::ok(Report {
        command: "pn",
        meta: meta(g, None),
        columns: vec!["n", "p", "terms", "residual"],
        rows,
        text,
    })
}
