//! Command-line surface: one subcommand per regularized-product family plus
//! a zeta utility, with text or JSON reports and sysexits-style codes
//! (0 success, 2 validation/precision fault, 64 unknown subcommand,
//! 65 malformed input).

use crate::dirichlet::enumerate_characters;
use crate::error::Error;
use crate::funcfield::{
    count_points, counts_from_numerator, numerator_from_counts, regprod_funcfield,
    regprod_funcfield_via_roots, weil_validate, CurveSpec, InfinityRule, WeilStatus, ZetaNumerator,
};
use crate::hurwitz::HurwitzEvaluator;
use crate::lfunc::LFunctions;
use crate::numberfield::{leading_check, regprod_number_field, NumberFieldData};
use crate::progressions::{regprod_progression, ProgressionTarget};
use crate::report::{json_f64, Diagnostics, ExponentOut, Report};
use crate::series::{rat, Rat};
use crate::special::{bernoulli, bernoulli_poly};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde_json::{Map, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAULT: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;

/// Run configuration assembled from flags and the environment.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub precision_bits: u32,
    pub json: bool,
    pub verify: bool,
    pub weil_tol: f64,
}

#[derive(Parser, Debug)]
#[command(
    name = "regprod",
    about = "Super-regularized products over primes, prime ideals, and closed points of curves",
    disable_help_subcommand = true
)]
struct Cli {
    /// emit the report as JSON
    #[arg(long, global = true)]
    json: bool,
    /// run the invariant suite on the result and report residuals
    #[arg(long, global = true)]
    verify: bool,
    /// working precision in bits (>= 53; the arithmetic kernel is IEEE double)
    #[arg(long, global = true)]
    precision_bits: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Regularized product over all rational primes (= 4π²)
    Primes,
    /// Regularized product over primes p ≡ a (mod m)
    Progression(ProgressionArgs),
    /// Regularized product of prime-ideal norms of a number field
    NumberField(NumberFieldArgs),
    /// Regularized product of closed-point norms of a curve over F_q
    Curve(CurveArgs),
    /// Rational function field F_q(T): exponent (3q−1)/(q−1)
    RationalFf(RationalArgs),
    /// Special-function utilities (Hurwitz zeta, Bernoulli, L-values)
    Zeta(ZetaArgs),
}

#[derive(Args, Debug)]
struct ProgressionArgs {
    #[arg(long)]
    m: u64,
    #[arg(long)]
    a: u64,
}

#[derive(Args, Debug)]
struct NumberFieldArgs {
    /// one of: Q, Q(i), Q(sqrt5), Q(sqrt-3)
    #[arg(long, conflicts_with_all = ["r1", "r2", "w", "h", "reg", "disc"])]
    preset: Option<String>,
    #[arg(long, requires_all = ["r2", "w", "h", "reg", "disc"])]
    r1: Option<u32>,
    #[arg(long)]
    r2: Option<u32>,
    /// number of roots of unity w_K
    #[arg(long)]
    w: Option<u32>,
    /// class number h_K
    #[arg(long)]
    h: Option<u32>,
    /// regulator R_K
    #[arg(long)]
    reg: Option<f64>,
    /// field discriminant
    #[arg(long)]
    disc: Option<i64>,
}

#[derive(Args, Debug)]
struct CurveArgs {
    /// base field size (prime)
    #[arg(long)]
    q: u64,
    /// curve kind: plane | artin-schreier
    #[arg(long)]
    kind: Option<String>,
    /// defining polynomial: homogeneous in x,y,z (plane) or f(x) (artin-schreier)
    #[arg(long)]
    f: Option<String>,
    /// h(x) for the artin-schreier model y² + h(x)y = f(x)
    #[arg(long, default_value = "1")]
    h: String,
    /// points at infinity: a single count or comma-separated per degree
    #[arg(long)]
    infinity: Option<String>,
    /// curve genus (required for plane curves; (deg f − 1)/2 by default for
    /// artin-schreier with odd deg f)
    #[arg(long)]
    genus: Option<u32>,
    /// take L(t) directly as comma-separated integer coefficients
    #[arg(long)]
    l_poly: Option<String>,
    /// tolerance for the Weil |π| = √q check
    #[arg(long, default_value_t = 1e-9)]
    weil_tol: f64,
}

#[derive(Args, Debug)]
struct RationalArgs {
    #[arg(long)]
    q: u64,
}

#[derive(Args, Debug)]
struct ZetaArgs {
    #[command(subcommand)]
    which: ZetaCommand,
}

#[derive(Subcommand, Debug)]
enum ZetaCommand {
    /// ζ_H(s, x), optionally with Taylor coefficients at s = 0
    Hurwitz {
        /// s as "re" or "re,im"
        #[arg(long)]
        s: String,
        #[arg(long)]
        x: f64,
        /// also report Taylor coefficients at s = 0 up to this order (≤ 6)
        #[arg(long)]
        order: Option<usize>,
    },
    /// Bernoulli number B_k or polynomial value B_k(x)
    Bernoulli {
        #[arg(long)]
        k: u32,
        /// rational argument "p/q"; omitted means the Bernoulli number
        #[arg(long)]
        x: Option<String>,
    },
    /// Dirichlet L-function data at s = 0 for the index-th character mod m
    L {
        #[arg(long)]
        m: u64,
        /// character index in enumeration order (0 = principal)
        #[arg(long)]
        index: usize,
        #[arg(long, default_value_t = 3)]
        order: usize,
    },
}

/// Parse argv and run; returns the rendered report and the exit code.
pub fn run_command(argv: &[String]) -> (String, i32) {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                ErrorKind::InvalidSubcommand => EXIT_USAGE,
                _ => EXIT_DATA,
            };
            return (err.to_string(), code);
        }
    };
    let precision_bits = match cli.precision_bits.or_else(|| {
        std::env::var("REGPROD_PRECISION_BITS")
            .ok()
            .and_then(|v| v.parse().ok())
    }) {
        Some(bits) if bits < 53 => {
            return (
                format!("error: precision must be at least 53 bits, got {bits}\n"),
                EXIT_DATA,
            )
        }
        Some(bits) => bits,
        None => 53,
    };
    let config = RunConfig {
        precision_bits,
        json: cli.json,
        verify: cli.verify,
        weil_tol: 1e-9,
    };
    match dispatch(&cli.command, &config) {
        Ok(report) => {
            let body = if config.json {
                report.to_json()
            } else {
                report.to_text()
            };
            let code = if report.status == "ok" {
                EXIT_OK
            } else {
                EXIT_FAULT
            };
            (body, code)
        }
        Err(err) => {
            let code = match err {
                Error::InvalidInput(_) | Error::BudgetExceeded(_, _) => EXIT_DATA,
                _ => EXIT_FAULT,
            };
            (format!("error: {err}\n"), code)
        }
    }
}

fn dispatch(cmd: &Command, config: &RunConfig) -> crate::Result<Report> {
    let mut lfun = LFunctions::new(HurwitzEvaluator::default());
    match cmd {
        Command::Primes => {
            let out = crate::progressions::regprod_all_primes(&mut lfun)?;
            let mut inputs = Map::new();
            inputs.insert("family".into(), Value::String("all rational primes".into()));
            let mut diagnostics = Diagnostics::new(53);
            if config.verify {
                diagnostics.push("leading_check_rel", out.leading.relative_error);
            }
            Ok(Report {
                command: "primes".into(),
                inputs,
                exponent: ExponentOut::from_float(out.exponent),
                value: out.value,
                weil: None,
                breakdown: Value::Null,
                diagnostics,
                status: "ok".into(),
            })
        }
        Command::Progression(args) => {
            let target = ProgressionTarget::new(args.m, args.a)?;
            let out = regprod_progression(&mut lfun, &target)?;
            let mut inputs = Map::new();
            inputs.insert("m".into(), Value::from(args.m));
            inputs.insert("a".into(), Value::from(args.a));
            let rows: Vec<Value> = out
                .terms
                .iter()
                .map(|t| {
                    let mut row = Map::new();
                    row.insert("r".into(), Value::from(t.r));
                    row.insert("q_plus".into(), json_f64(t.q_plus));
                    row.insert("q_minus".into(), json_f64(t.q_minus));
                    row.insert("q_zero".into(), json_f64(t.q_zero));
                    row.insert("R".into(), json_f64(t.r_coefficient));
                    row.insert("contribution".into(), json_f64(t.contribution));
                    Value::Object(row)
                })
                .collect();
            let mut diagnostics = Diagnostics::new(53);
            diagnostics.push("max_imag_residue", out.max_imag_residue);
            if config.verify {
                let b = lfun.principal_residue_b(args.m.max(2))?;
                diagnostics.push("principal_residue_path_difference", b.difference);
                let mut remul = 0.0f64;
                for chi in enumerate_characters(args.m)? {
                    let (_, residual) = lfun.inverse_l_laurent(&chi, 1)?;
                    remul = remul.max(residual);
                }
                diagnostics.push("inverse_l_remultiplication_max", remul);
            }
            Ok(Report {
                command: "progression".into(),
                inputs,
                exponent: ExponentOut::from_float(out.exponent),
                value: out.value,
                weil: None,
                breakdown: Value::Array(rows),
                diagnostics,
                status: "ok".into(),
            })
        }
        Command::NumberField(args) => {
            let field = match (&args.preset, args.r1) {
                (Some(name), _) => NumberFieldData::preset(name)?,
                (None, Some(r1)) => {
                    let mut f = NumberFieldData::quadratic(
                        args.disc.unwrap(),
                        args.w.unwrap(),
                        args.h.unwrap(),
                        args.reg.unwrap(),
                    )?;
                    if (r1, args.r2.unwrap()) != (f.real_places, f.complex_places) {
                        return Err(Error::InvalidInput(format!(
                            "(r1, r2) = ({r1}, {}) does not match the discriminant sign",
                            args.r2.unwrap()
                        )));
                    }
                    f.real_places = r1;
                    f
                }
                (None, None) => {
                    return Err(Error::InvalidInput(
                        "number-field needs --preset or explicit invariants".into(),
                    ))
                }
            };
            let out = regprod_number_field(&mut lfun, &field)?;
            let mut inputs = Map::new();
            inputs.insert(
                "field".into(),
                Value::String(
                    args.preset
                        .clone()
                        .unwrap_or_else(|| format!("quadratic disc {}", field.discriminant)),
                ),
            );
            inputs.insert("r1".into(), Value::from(field.real_places));
            inputs.insert("r2".into(), Value::from(field.complex_places));
            inputs.insert("w".into(), Value::from(field.roots_of_unity));
            inputs.insert("h".into(), Value::from(field.class_number));
            inputs.insert("regulator".into(), json_f64(field.regulator));
            let mut breakdown = Map::new();
            breakdown.insert(
                "zeta_taylor_at_0".into(),
                Value::Array(out.taylor.iter().map(|&c| json_f64(c)).collect()),
            );
            let mut diagnostics = Diagnostics::new(53);
            diagnostics.push("leading_check_rel", out.leading.relative_error);
            if config.verify {
                let check = leading_check(&mut lfun, &field)?;
                diagnostics.push("leading_expected", check.expected);
                diagnostics.push("leading_computed", check.computed);
            }
            Ok(Report {
                command: "number-field".into(),
                inputs,
                exponent: ExponentOut::from_float(out.exponent),
                value: out.value,
                weil: None,
                breakdown: Value::Object(breakdown),
                diagnostics,
                status: "ok".into(),
            })
        }
        Command::Curve(args) => run_curve(args, config),
        Command::RationalFf(args) => {
            if args.q < 2 {
                return Err(Error::InvalidInput("q must be a prime power >= 2".into()));
            }
            let num = ZetaNumerator::new(vec![1], args.q, 0)?;
            let out = regprod_funcfield(&num)?;
            let mut inputs = Map::new();
            inputs.insert("q".into(), Value::from(args.q));
            Ok(Report {
                command: "rational-ff".into(),
                inputs,
                exponent: ExponentOut::from_exact(&out.exponent),
                value: out.value,
                weil: None,
                breakdown: Value::Null,
                diagnostics: Diagnostics::new(53),
                status: "ok".into(),
            })
        }
        Command::Zeta(args) => run_zeta(&args.which, config, &mut lfun),
    }
}

fn run_curve(args: &CurveArgs, config: &RunConfig) -> crate::Result<Report> {
    if args.weil_tol <= 0.0 || args.weil_tol.is_nan() {
        return Err(Error::InvalidInput("tolerances must be positive".into()));
    }
    let mut inputs = Map::new();
    inputs.insert("q".into(), Value::from(args.q));
    let mut diagnostics = Diagnostics::new(53);
    let mut status = "ok".to_string();

    // the curve model, when given
    let curve = match (&args.kind, &args.f) {
        (Some(kind), Some(f_src)) => {
            Some(build_curve(kind, f_src, &args.h, &args.infinity, args.q)?)
        }
        (None, None) => None,
        (Some(_), None) => {
            return Err(Error::InvalidInput("--kind requires --f".into()));
        }
        (None, Some(_)) => {
            return Err(Error::InvalidInput("--f requires --kind".into()));
        }
    };
    if let Some(f_src) = &args.f {
        inputs.insert("f".into(), Value::String(f_src.clone()));
    }

    let counted = match &curve {
        Some(c) => {
            let genus = match (args.genus, c) {
                (Some(g), _) => g,
                (None, CurveSpec::ArtinSchreier { f, .. }) if (f.len() - 1) % 2 == 1 => {
                    (f.len() as u32 - 2) / 2
                }
                _ => {
                    return Err(Error::InvalidInput(
                        "--genus is required for this curve".into(),
                    ))
                }
            };
            inputs.insert("genus".into(), Value::from(genus));
            let counts: Vec<u64> = (1..=2 * genus)
                .map(|m| count_points(c, m))
                .collect::<crate::Result<_>>()?;
            let num = numerator_from_counts(&counts, args.q, genus)?;
            Some((counts, weil_validate(num, args.weil_tol)))
        }
        None => None,
    };

    // the numerator actually fed to the regularized product
    let (num, weil_str) = match &args.l_poly {
        Some(src) => {
            let coeffs: Vec<i64> = src
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::InvalidInput(format!("bad L coefficient '{t}'")))
                })
                .collect::<crate::Result<_>>()?;
            if coeffs.len().is_multiple_of(2) {
                return Err(Error::InvalidInput("L(t) must have even degree 2g".into()));
            }
            let genus = (coeffs.len() as u32 - 1) / 2;
            inputs.insert("l_poly".into(), Value::String(src.clone()));
            let num = weil_validate(ZetaNumerator::new(coeffs, args.q, genus)?, args.weil_tol);
            let weil = weil_status_string(&num.weil);
            (num, weil)
        }
        None => {
            let (counts, num) = counted
                .clone()
                .ok_or_else(|| Error::InvalidInput("curve needs --f/--kind or --l-poly".into()))?;
            inputs.insert(
                "point_counts".into(),
                Value::Array(counts.iter().map(|&n| Value::from(n)).collect()),
            );
            let weil = weil_status_string(&num.weil);
            (num, weil)
        }
    };

    let out = regprod_funcfield(&num)?;
    let mut breakdown = Map::new();
    breakdown.insert(
        "numerator".into(),
        Value::Array(num.coefficients.iter().map(|&c| Value::from(c)).collect()),
    );
    breakdown.insert("class_number".into(), Value::from(num.value_at_one()));
    // a nonzero rational exponent makes the product value irrational, so the
    // set of closed points cannot be finite
    use num_traits::Zero;
    breakdown.insert(
        "closed_points_infinite".into(),
        Value::Bool(!out.exponent.is_zero()),
    );

    // discrepancy check when both an explicit L and a counted curve exist
    if let (Some(_), Some((counts, counted_num))) = (&args.l_poly, &counted) {
        breakdown.insert(
            "counted_point_counts".into(),
            Value::Array(counts.iter().map(|&n| Value::from(n)).collect()),
        );
        breakdown.insert(
            "counted_numerator".into(),
            Value::Array(
                counted_num
                    .coefficients
                    .iter()
                    .map(|&c| Value::from(c))
                    .collect(),
            ),
        );
        breakdown.insert(
            "counted_weil".into(),
            Value::String(weil_status_string(&counted_num.weil)),
        );
        if counted_num.coefficients != num.coefficients {
            let counted_out = regprod_funcfield(counted_num)?;
            breakdown.insert(
                "counted_exponent".into(),
                Value::String(
                    ExponentOut::from_exact(&counted_out.exponent)
                        .exact
                        .unwrap(),
                ),
            );
            breakdown.insert("discrepancy".into(), Value::Bool(true));
            status = "discrepancy: supplied L(t) disagrees with the counted curve".into();
        } else {
            breakdown.insert("discrepancy".into(), Value::Bool(false));
        }
    }

    if config.verify {
        // roots path must agree with the exact rational path
        let roots = num.inverse_roots();
        let via_roots = regprod_funcfield_via_roots(&roots, num.genus, num.q, num.value_at_one())?;
        let exact = out.exponent.to_f64().unwrap();
        diagnostics.push("roots_vs_polynomial_path", (via_roots - exact).abs());
        let sqrt_q = (num.q as f64).sqrt();
        let max_dev = roots
            .iter()
            .map(|r| (r.norm() - sqrt_q).abs())
            .fold(0.0f64, f64::max);
        diagnostics.push("weil_max_deviation", max_dev);
        // re-expansion reproduces the counts
        if let Some((counts, _)) = &counted {
            let re = counts_from_numerator(&num, counts.len())?;
            let ok = re.iter().zip(counts).all(|(&a, &b)| a == b as i64);
            diagnostics.push("count_reexpansion_match", if ok { 0.0 } else { 1.0 });
        }
    }

    Ok(Report {
        command: "curve".into(),
        inputs,
        exponent: ExponentOut::from_exact(&out.exponent),
        value: out.value,
        weil: Some(weil_str),
        breakdown: Value::Object(breakdown),
        diagnostics,
        status,
    })
}

fn weil_status_string(w: &WeilStatus) -> String {
    match w {
        WeilStatus::Unchecked => "unchecked".into(),
        WeilStatus::Validated => "validated".into(),
        WeilStatus::Violated(why) => format!("violated: {why}"),
    }
}

fn run_zeta(
    cmd: &ZetaCommand,
    _config: &RunConfig,
    lfun: &mut LFunctions,
) -> crate::Result<Report> {
    let eval = HurwitzEvaluator::default();
    let mut inputs = Map::new();
    let mut breakdown = Map::new();
    let mut diagnostics = Diagnostics::new(53);
    let (command, scalar): (String, ExponentOut) = match cmd {
        ZetaCommand::Hurwitz { s, x, order } => {
            let s = parse_complex(s)?;
            inputs.insert("s".into(), Value::String(format!("{}", s)));
            inputs.insert("x".into(), json_f64(*x));
            let v = eval.hurwitz_zeta(s, *x)?;
            breakdown.insert("re".into(), json_f64(v.re));
            breakdown.insert("im".into(), json_f64(v.im));
            if let Some(k) = order {
                let t = eval.taylor_at_zero(*x, *k)?;
                breakdown.insert(
                    "taylor_at_0".into(),
                    Value::Array(t.coefficients.iter().map(|c| json_f64(c.re)).collect()),
                );
                diagnostics.push("node_doubling_estimate", t.error_estimate);
            }
            ("zeta hurwitz".into(), ExponentOut::from_float(v.re))
        }
        ZetaCommand::Bernoulli { k, x } => {
            inputs.insert("k".into(), Value::from(*k));
            let value = match x {
                None => bernoulli(*k),
                Some(src) => {
                    let xr = parse_rational(src)?;
                    inputs.insert("x".into(), Value::String(src.clone()));
                    bernoulli_poly::<Rat>(*k, &xr)
                }
            };
            breakdown.insert(
                "value".into(),
                Value::String(format!("{}/{}", value.numer(), value.denom())),
            );
            ("zeta bernoulli".into(), ExponentOut::from_exact(&value))
        }
        ZetaCommand::L { m, index, order } => {
            let chars = enumerate_characters(*m)?;
            let chi = chars.get(*index).ok_or_else(|| {
                Error::InvalidInput(format!(
                    "character index {index} out of range; phi({m}) = {}",
                    chars.len()
                ))
            })?;
            inputs.insert("m".into(), Value::from(*m));
            inputs.insert("index".into(), Value::from(*index as u64));
            let exp = lfun.l_taylor_at_zero(chi, *order)?;
            breakdown.insert(
                "order_of_vanishing".into(),
                Value::from(exp.order_of_vanishing),
            );
            breakdown.insert(
                "taylor_re".into(),
                Value::Array(exp.taylor.iter().map(|c| json_f64(c.re)).collect()),
            );
            breakdown.insert(
                "taylor_im".into(),
                Value::Array(exp.taylor.iter().map(|c| json_f64(c.im)).collect()),
            );
            diagnostics.push("kernel_error", exp.kernel_error);
            let l0 = lfun.l_at_zero(chi);
            (
                "zeta l".into(),
                match lfun.l_at_zero_exact(chi) {
                    Some(r) => ExponentOut::from_exact(&r),
                    None => ExponentOut::from_float(l0.re),
                },
            )
        }
    };
    Ok(Report {
        command,
        inputs,
        value: scalar.float.exp(),
        exponent: scalar,
        weil: None,
        breakdown: Value::Object(breakdown),
        diagnostics,
        status: "ok".into(),
    })
}

fn parse_complex(src: &str) -> crate::Result<Complex64> {
    let parts: Vec<&str> = src.split(',').collect();
    let parse = |t: &str| {
        t.trim()
            .parse::<f64>()
            .map_err(|_| Error::InvalidInput(format!("bad number '{t}'")))
    };
    match parts.as_slice() {
        [re] => Ok(Complex64::new(parse(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(parse(re)?, parse(im)?)),
        _ => Err(Error::InvalidInput(format!("bad complex literal '{src}'"))),
    }
}

fn parse_rational(src: &str) -> crate::Result<Rat> {
    let parts: Vec<&str> = src.split('/').collect();
    let parse = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|_| Error::InvalidInput(format!("bad integer '{t}'")))
    };
    match parts.as_slice() {
        [n] => Ok(rat(parse(n)?, 1)),
        [n, d] if parse(d)? != 0 => Ok(rat(parse(n)?, parse(d)?)),
        _ => Err(Error::InvalidInput(format!("bad rational literal '{src}'"))),
    }
}

fn build_curve(
    kind: &str,
    f_src: &str,
    h_src: &str,
    infinity: &Option<String>,
    q: u64,
) -> crate::Result<CurveSpec> {
    match kind {
        "plane" => parse_curve(f_src, q),
        "artin-schreier" => {
            let f = parse_univariate(f_src, q)?;
            let h = parse_univariate(h_src, q)?;
            let rule = match infinity {
                None => InfinityRule::Constant(1),
                Some(spec) => {
                    let vals: Vec<u64> = spec
                        .split(',')
                        .map(|t| {
                            t.trim().parse::<u64>().map_err(|_| {
                                Error::InvalidInput(format!("bad infinity count '{t}'"))
                            })
                        })
                        .collect::<crate::Result<_>>()?;
                    if vals.len() == 1 {
                        InfinityRule::Constant(vals[0])
                    } else {
                        InfinityRule::PerDegree(vals)
                    }
                }
            };
            CurveSpec::artin_schreier(q, h, f, rule)
        }
        other => Err(Error::InvalidInput(format!(
            "unknown curve kind '{other}' (expected plane or artin-schreier)"
        ))),
    }
}

/// One parsed monomial: coefficient and exponents of x, y, z.
type Monomial = (u64, u32, u32, u32);

/// Parse the curve mini-language: terms joined by '+' (a leading '-' negates
/// mod p), each term a '*'-separated product of an optional integer
/// coefficient and variable powers x^i, y^j, z^k.
pub fn parse_curve(source: &str, p: u64) -> crate::Result<CurveSpec> {
    let monomials = parse_polynomial(source, p)?;
    if monomials.is_empty() {
        return Err(Error::InvalidInput("zero polynomial".into()));
    }
    CurveSpec::plane(p, monomials)
}

fn parse_polynomial(source: &str, p: u64) -> crate::Result<Vec<Monomial>> {
    if p < 2 {
        return Err(Error::InvalidInput("characteristic must be >= 2".into()));
    }
    let compact: String = source.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::InvalidInput("empty polynomial".into()));
    }
    // split into signed terms
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = compact.starts_with('-');
    for (i, ch) in compact.char_indices() {
        if i == 0 && (ch == '-' || ch == '+') {
            continue;
        }
        match ch {
            '+' | '-' => {
                terms.push((negative, std::mem::take(&mut current)));
                negative = ch == '-';
            }
            _ => current.push(ch),
        }
    }
    terms.push((negative, current));

    let mut monomials: Vec<Monomial> = Vec::new();
    for (neg, term) in terms {
        if term.is_empty() {
            return Err(Error::InvalidInput("empty term in polynomial".into()));
        }
        let mut coeff: u64 = 1;
        let (mut ex, mut ey, mut ez) = (0u32, 0u32, 0u32);
        for factor in term.split('*') {
            if factor.is_empty() {
                return Err(Error::InvalidInput(format!(
                    "empty factor in term '{term}'"
                )));
            }
            if factor.chars().next().unwrap().is_ascii_digit() {
                let c: u64 = factor
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("bad coefficient '{factor}'")))?;
                coeff = coeff * (c % p) % p;
                continue;
            }
            let (var, exp) = match factor.split_once('^') {
                Some((v, e)) => {
                    let exp: u32 = e
                        .parse()
                        .map_err(|_| Error::InvalidInput(format!("bad exponent '{e}'")))?;
                    (v, exp)
                }
                None => (factor, 1),
            };
            match var {
                "x" => ex += exp,
                "y" => ey += exp,
                "z" => ez += exp,
                other => {
                    return Err(Error::InvalidInput(format!(
                        "unknown variable '{other}' (expected x, y, z)"
                    )))
                }
            }
        }
        if neg {
            coeff = (p - coeff % p) % p;
        }
        if !coeff.is_multiple_of(p) {
            monomials.push((coeff % p, ex, ey, ez));
        }
    }
    if monomials.is_empty() {
        return Err(Error::InvalidInput(
            "zero polynomial after reduction mod p".into(),
        ));
    }
    Ok(monomials)
}

fn parse_univariate(source: &str, p: u64) -> crate::Result<Vec<u64>> {
    let monomials = parse_polynomial(source, p)?;
    let mut coeffs = Vec::new();
    for (c, ex, ey, ez) in monomials {
        if ey != 0 || ez != 0 {
            return Err(Error::InvalidInput(
                "artin-schreier polynomials must be univariate in x".into(),
            ));
        }
        if coeffs.len() <= ex as usize {
            coeffs.resize(ex as usize + 1, 0);
        }
        coeffs[ex as usize] = (coeffs[ex as usize] + c) % p;
    }
    Ok(coeffs)
}
