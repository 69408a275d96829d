use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qes_core::aim;
use qes_core::families::{gen_family, FamilyKind, FamilyParams, Parity};
use qes_core::meixner::{self, CheckMode};
use qes_core::norms;
use qes_core::numeric::DEFAULT_PRECISION_BITS;
use qes_core::rational::{self, to_decimal};
use qes_core::spectra;
use qes_core::sturm;
use qes_core::verify::Suite;
use qes_core::{Error, Poly, Rational, Var};
use serde_json::{json, Value};

use crate::json::{poly_to_json, rational_string};

pub const PRECISION_ENV: &str = "QES_PRECISION_BITS";

#[derive(Debug, Parser)]
#[command(name = "qes", version, about = "Quasi-exactly solvable sextic oscillator toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the result here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate members of a polynomial family.
    Gen(GenArgs),
    /// Energies of one parity sector, or a wavefunction table.
    Spectrum(SpectrumArgs),
    /// Run verification suites.
    Verify(VerifyArgs),
    /// Asymptotic iteration method termination polynomials.
    Aim(AimArgs),
    /// Meixner correspondence check.
    Meixner(MeixnerArgs),
    /// Moments, squared norms and Gram matrices.
    Moments(MomentsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    Even,
    Odd,
}

impl From<ParityArg> for Parity {
    fn from(p: ParityArg) -> Parity {
        match p {
            ParityArg::Even => Parity::Even,
            ParityArg::Odd => Parity::Odd,
        }
    }
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    rational::parse(s).map_err(|e| e.to_string())
}

fn parse_family(s: &str) -> Result<FamilyKind, String> {
    FamilyKind::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = FamilyKind::ALL.iter().map(|k| k.name()).collect();
        format!("unknown family {s:?}; expected one of {}", names.join(", "))
    })
}

/// Family parameters; anything not given stays symbolic.
#[derive(Debug, Args)]
pub struct ParamArgs {
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true, conflicts_with = "symbolic_t")]
    pub t: Option<Rational>,
    #[arg(long)]
    pub symbolic_t: bool,
    #[arg(long = "J", value_parser = parse_rational, allow_hyphen_values = true, conflicts_with = "symbolic_j")]
    pub j: Option<Rational>,
    #[arg(long = "symbolic-J")]
    pub symbolic_j: bool,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub sqrt_a: Option<Rational>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub b: Option<Rational>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub c: Option<Rational>,
    /// Bender–Dunne parity parameter.
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub s: Option<Rational>,
}

impl ParamArgs {
    fn params(&self) -> FamilyParams {
        let mut p = FamilyParams::symbolic();
        let set = |slot: &mut Poly, v: &Option<Rational>| {
            if let Some(v) = v {
                *slot = Poly::from(v);
            }
        };
        set(&mut p.t, &self.t);
        set(&mut p.j, &self.j);
        set(&mut p.sqrt_a, &self.sqrt_a);
        set(&mut p.b, &self.b);
        set(&mut p.c, &self.c);
        if let Some(s) = &self.s {
            p.s = s.clone();
        }
        p
    }
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: FamilyKind,
    #[command(flatten)]
    pub params: ParamArgs,
    /// Number of members, starting at index 0.
    #[arg(short = 'N', default_value_t = 5)]
    pub count: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub t: Rational,
    #[arg(long = "J")]
    pub j: usize,
    #[arg(long, value_enum, default_value_t = ParityArg::Even)]
    pub parity: ParityArg,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true, default_value = "1e-30")]
    pub eps: Rational,
    /// `json` for the energies, `csv` for the wavefunction of `--level`.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, default_value_t = 0)]
    pub level: usize,
    /// Wavefunction grid as `lo:hi:intervals`.
    #[arg(long, default_value = "-4:4:100", allow_hyphen_values = true)]
    pub grid: String,
    /// Decimal digits in the wavefunction table.
    #[arg(long, default_value_t = 30)]
    pub digits: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite name or `all`.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(short = 'N', default_value_t = 5)]
    pub size: usize,
}

#[derive(Debug, Args)]
pub struct AimArgs {
    #[arg(long, value_enum, default_value_t = ParityArg::Even)]
    pub parity: ParityArg,
    /// Numeric `t`; symbolic when absent.
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub t: Option<Rational>,
    #[arg(long = "J")]
    pub j: usize,
    /// Iterations to run; defaults to the settling iteration.
    #[arg(long)]
    pub iterations: Option<usize>,
    /// Anchor for δ_n(x0); defaults to 0 (even) or 1 (odd).
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub x0: Option<Rational>,
}

#[derive(Debug, Args)]
pub struct MeixnerArgs {
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub t: Rational,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub i: Rational,
    #[arg(long, value_enum, default_value_t = ParityArg::Even)]
    pub parity: ParityArg,
    #[arg(short = 'N', default_value_t = 6)]
    pub count: usize,
}

#[derive(Debug, Args)]
pub struct MomentsArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: FamilyKind,
    #[command(flatten)]
    pub params: ParamArgs,
    /// Number of squared norms `γ_0..γ_{N-1}`.
    #[arg(short = 'N', default_value_t = 4)]
    pub count: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Emit the Gram matrix instead of the norm table.
    #[arg(long)]
    pub gram: bool,
}

/// Why a command failed, mapped onto the exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Property(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Property(_) => 1,
            Failure::Usage(_) => 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::PropertyViolation { .. } | Error::Consistency(_) | Error::Degenerate(_) => {
                Failure::Property(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Output of a successful or property-failing run.
pub struct Outcome {
    pub text: String,
    pub failed: bool,
}

fn ok(text: String) -> Result<Outcome, Failure> {
    Ok(Outcome { text, failed: false })
}

fn precision_bits() -> Result<usize, Failure> {
    match std::env::var(PRECISION_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&b| b >= 16)
            .ok_or_else(|| Failure::Usage(format!("{PRECISION_ENV}={v:?} is not a bit count ≥ 16"))),
        Err(_) => Ok(DEFAULT_PRECISION_BITS),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Failure::Usage(e.to_string());
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(&row).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("utf-8"))
}

pub fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Gen(a) => gen(a),
        Command::Spectrum(a) => spectrum(a),
        Command::Verify(a) => run_verify(a),
        Command::Aim(a) => run_aim(a),
        Command::Meixner(a) => run_meixner(a),
        Command::Moments(a) => moments(a),
    }
}

fn gen(a: &GenArgs) -> Result<Outcome, Failure> {
    let fam = gen_family(a.family, &a.params.params(), a.count)?;
    let labels: Vec<String> = (0..fam.len()).map(|n| a.family.label(n)).collect();
    let text = match a.format {
        Format::Json => pretty(&json!({
            "family": a.family.name(),
            "members": fam.iter().zip(&labels).enumerate().map(|(n, (p, label))| json!({
                "index": n,
                "label": label,
                "poly": poly_to_json(p),
                "text": p.to_string(),
            })).collect::<Vec<_>>(),
        })),
        Format::Latex => {
            let mut s = String::from("\\begin{align*}\n");
            for (p, label) in fam.iter().zip(&labels) {
                let _ = writeln!(s, "{} &= {} \\\\", latex_label(label), p.to_latex());
            }
            s.push_str("\\end{align*}\n");
            s
        }
        Format::Csv => csv_text(
            &["index", "label", "poly"],
            fam.iter()
                .zip(&labels)
                .enumerate()
                .map(|(n, (p, l))| vec![n.to_string(), l.clone(), p.to_string()]),
        )?,
        Format::Text => fam
            .iter()
            .zip(&labels)
            .map(|(p, l)| format!("{l} = {p}\n"))
            .collect(),
    };
    ok(text)
}

fn latex_label(label: &str) -> String {
    label
        .replace("𝒫", "\\mathcal{P}")
        .replace("𝒬", "\\mathcal{Q}")
        .replace("^(t)", "^{(t)}")
}

fn parse_grid(spec: &str) -> Result<Vec<Rational>, Failure> {
    let parts: Vec<&str> = spec.split(':').collect();
    let bad = || Failure::Usage(format!("grid {spec:?} is not lo:hi:intervals"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let lo = rational::parse(parts[0]).map_err(|_| bad())?;
    let hi = rational::parse(parts[1]).map_err(|_| bad())?;
    let n: usize = parts[2].parse().map_err(|_| bad())?;
    if n == 0 || lo >= hi {
        return Err(bad());
    }
    Ok(spectra::uniform_grid(&lo, &hi, n))
}

fn spectrum(a: &SpectrumArgs) -> Result<Outcome, Failure> {
    let parity: Parity = a.parity.into();
    let levels = spectra::qes_energies(&a.t, a.j, parity, &a.eps)?;
    let text = match a.format {
        Format::Json => {
            let digits = rational::digits_for(&a.eps);
            let levels = levels
                .iter()
                .map(|l| {
                    let value = sturm::certified_decimal(&l.minimal_poly, &l.interval, digits)?;
                    Ok(json!({
                        "index": l.level_index,
                        "minimal_poly": poly_to_json(&l.minimal_poly),
                        "value": value,
                        "interval": [rational_string(&l.interval.lo), rational_string(&l.interval.hi)],
                    }))
                })
                .collect::<Result<Vec<_>, Error>>()?;
            pretty(&json!({
                "t": rational_string(&a.t),
                "J": a.j,
                "parity": parity.name(),
                "levels": levels,
            }))
        }
        Format::Csv => {
            let level = levels.get(a.level).ok_or_else(|| {
                Failure::Usage(format!("level {} out of range 0..{}", a.level, levels.len()))
            })?;
            let grid = parse_grid(&a.grid)?;
            let samples = spectra::wavefunction_samples(level, &a.t, &grid, precision_bits()?);
            csv_text(
                &["x", "psi"],
                samples
                    .iter()
                    .map(|s| vec![to_decimal(&s.x, a.digits), to_decimal(&s.psi, a.digits)]),
            )?
        }
        other => return Err(Failure::Usage(format!("spectrum has no {other:?} output"))),
    };
    ok(text)
}

fn run_verify(a: &VerifyArgs) -> Result<Outcome, Failure> {
    let suites: Vec<Suite> = if a.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        a.suite
            .split(',')
            .map(|name| {
                Suite::from_name(name.trim()).ok_or_else(|| {
                    let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                    Failure::Usage(format!("unknown suite {name:?}; expected all or {}", names.join(", ")))
                })
            })
            .collect::<Result<_, _>>()?
    };
    let mut text = String::new();
    let (mut passed, mut failed) = (0, 0);
    for suite in suites {
        for check in suite.run(a.size) {
            let status = if check.passed { "PASS" } else { "FAIL" };
            if check.passed {
                passed += 1;
            } else {
                failed += 1;
            }
            let _ = writeln!(
                text,
                "{status} [{}] {}: {} ({})",
                check.suite, check.name, check.detail, check.reference
            );
        }
    }
    let _ = writeln!(text, "{passed} passed, {failed} failed");
    Ok(Outcome {
        text,
        failed: failed > 0,
    })
}

fn run_aim(a: &AimArgs) -> Result<Outcome, Failure> {
    let parity: Parity = a.parity.into();
    let t = a.t.as_ref().map(Poly::from).unwrap_or_else(|| Poly::var(Var::T));
    let (lambda0, s0) = aim::scaled_problem(&t, &Poly::from(a.j as i64), parity);
    let settles = aim::settling_iteration(a.j, parity);
    let iterations = a.iterations.unwrap_or(settles);
    let x0 = a.x0.clone().unwrap_or_else(|| aim::default_anchor(parity));
    let states = aim::aim_iterate(&lambda0, &s0, iterations)?;
    let rows: Vec<Value> = states
        .windows(2)
        .map(|w| {
            let anchored = aim::aim_termination(&w[1], &w[0], &x0).ok();
            let quantization = aim::quantization_polynomial(&w[1], &w[0]).ok();
            json!({
                "n": w[1].n,
                "delta_at_x0": anchored.as_ref().map(poly_to_json),
                "quantization": quantization.as_ref().map(poly_to_json),
            })
        })
        .collect();
    ok(pretty(&json!({
        "parity": parity.name(),
        "t": a.t.as_ref().map(rational_string),
        "J": a.j,
        "x0": rational_string(&x0),
        "settles_at": settles,
        "iterations": rows,
    })))
}

fn run_meixner(a: &MeixnerArgs) -> Result<Outcome, Failure> {
    let report =
        meixner::meixner_correspondence_check(&a.t, &a.i, a.parity.into(), a.count, precision_bits()?)?;
    let max_relative = match &report.mode {
        CheckMode::Exact => Value::Null,
        CheckMode::Float { max_relative, .. } => Value::String(to_decimal(max_relative, 45)),
    };
    ok(pretty(&json!({
        "t": rational_string(&report.t),
        "i": rational_string(&report.i),
        "parity": report.parity.name(),
        "sigma_sq": rational_string(&report.params.sigma_sq),
        "delta": report.delta_display(40),
        "eta": rational_string(&report.params.eta),
        "n_checked": report.n_checked,
        "status": report.status(),
        "max_relative": max_relative,
    })))
}

fn moments(a: &MomentsArgs) -> Result<Outcome, Failure> {
    if a.count == 0 {
        return Err(Failure::Usage("N must be at least 1".into()));
    }
    let params = a.params.params();
    if a.gram {
        let n_max = a.count - 1;
        let l = norms::moment_functional(a.family, &params, n_max.max(1))?;
        let fam = gen_family(a.family, &params, n_max + 1)?;
        let g = norms::gram_matrix(&l, &fam, n_max)?;
        let text = match a.format {
            Format::Csv => {
                let header: Vec<String> = core::iter::once("m".to_string())
                    .chain((0..=n_max).map(|n| n.to_string()))
                    .collect();
                let header: Vec<&str> = header.iter().map(String::as_str).collect();
                csv_text(
                    &header,
                    g.iter().enumerate().map(|(m, row)| {
                        core::iter::once(m.to_string())
                            .chain(row.iter().map(|x| x.to_string()))
                            .collect()
                    }),
                )?
            }
            _ => pretty(&json!({
                "family": a.family.name(),
                "gram": g.iter().map(|row| row.iter().map(poly_to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
            })),
        };
        return ok(text);
    }
    let seq = norms::norm_sequence(a.family, &params, a.count)?;
    let l = norms::moment_functional(a.family, &params, a.count.saturating_sub(1).max(1))?;
    let opt = |p: &Option<Poly>| p.as_ref().map(|p| p.to_string()).unwrap_or_default();
    let agree = |x: Option<norms::Agreement>| x.map(|a| a.name()).unwrap_or("").to_string();
    let text = match a.format {
        Format::Csv => csv_text(
            &["n", "gamma", "printed_product", "product_agreement", "closed_form", "closed_agreement"],
            seq.comparisons.iter().map(|c| {
                vec![
                    c.n.to_string(),
                    c.gram.to_string(),
                    opt(&c.printed_product),
                    agree(c.product_agreement),
                    opt(&c.closed_form),
                    agree(c.closed_agreement),
                ]
            }),
        )?,
        _ => pretty(&json!({
            "family": a.family.name(),
            "moments": l.moments.iter().map(poly_to_json).collect::<Vec<_>>(),
            "norms": seq.comparisons.iter().map(|c| json!({
                "n": c.n,
                "gram": poly_to_json(&c.gram),
                "printed_product": c.printed_product.as_ref().map(poly_to_json),
                "product_agreement": c.product_agreement.map(|a| a.name()),
                "closed_form": c.closed_form.as_ref().map(poly_to_json),
                "closed_agreement": c.closed_agreement.map(|a| a.name()),
            })).collect::<Vec<_>>(),
        })),
    };
    ok(text)
}

/// Parses `args`, runs the command and writes its output. Returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let outcome = execute(&cli).and_then(|o| {
        match &cli.output {
            Some(path) => std::fs::write(path, &o.text)
                .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?,
            None => print!("{}", o.text),
        }
        Ok(o)
    });
    match outcome {
        Ok(o) if o.failed => 1,
        Ok(_) => 0,
        Err(f) => {
            match &f {
                Failure::Usage(m) => eprintln!("error: {m}"),
                Failure::Property(m) => eprintln!("property violation: {m}"),
            }
            f.exit_code()
        }
    }
}
