use clap::{Parser, Subcommand, ValueEnum};
use rand::Rng;
use serde_json::{json, Map, Value};

use skewres_core::commutative_oracle::{residue_at, rho};
use skewres_core::fractions::SkewFrac;
use skewres_core::poly::RatFn;
use skewres_core::random;
use skewres_core::residues::{
    chvar_check, gamma_star, preferred_method, residue_sum, sres, sres_infinity, sres_zero, Point, ResidueRecord,
};
use skewres_core::skew_ring::{central_right_multiple, euclid, left_divide, right_divide, EuclidKind};
use skewres_core::taylor::{
    default_precision, expand, expand_at_infinity, expand_at_zero, Method, TaylorSeries, XSeries,
};
use skewres_core::verify::{self, CheckOutcome, Trial};
use skewres_core::{Fe, FieldConfig, Tower};

use crate::error::CliError;
use crate::parse::{parse, parse_poly};
use crate::print;

#[derive(Parser, Debug)]
#[command(
    name = "skewres",
    version,
    about = "Skew polynomials, Taylor expansions and skew residues over finite fields"
)]
pub struct Cli {
    /// Field configuration: a JSON file {"p","s","r","modulus"} or one of gf25, gf343, gf4.
    #[arg(long, global = true)]
    pub config: Option<String>,
    /// Seed for the randomized self-test.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Absolute series precision; 0 selects pole order + 2.
    #[arg(long, global = true, default_value_t = 0)]
    pub prec: u64,
    /// Emit JSON (always on; accepted for scripts that pass it).
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parameters of the configured tower.
    FieldInfo,
    /// Euclidean division A = Q·B + R (right) or A = B·Q + R (left).
    Div {
        #[arg(long, value_enum, default_value = "right")]
        mode: Side,
        a: String,
        b: String,
    },
    /// gcd or lcm with cofactors.
    Gcd {
        #[arg(long, value_enum, default_value = "rgcd")]
        kind: Kind,
        f: String,
        g: String,
    },
    /// The minimal central multiple N = f·g = g·f.
    Bound { f: String },
    /// Taylor expansion at a point z of F, at 0 or at inf.
    Taylor {
        #[arg(long)]
        point: String,
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
        expr: String,
    },
    /// Skew residue and partial residues.
    Sres {
        #[arg(long)]
        point: String,
        #[arg(long)]
        j: Option<i64>,
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
        expr: String,
    },
    /// Classical residue of C(Y)·dY for C in K(Y).
    Cres {
        #[arg(long)]
        point: String,
        expr: String,
    },
    /// Sum of the partial residues over all rational points and infinity.
    CheckResidueFormula {
        #[arg(long, default_value_t = 0)]
        j: i64,
        expr: String,
    },
    /// Change of variables X -> C·X for central C.
    Chvar {
        #[arg(long = "C")]
        c: String,
        #[arg(long)]
        point: String,
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
        expr: String,
    },
    /// Runs the randomized invariant suite.
    Selftest,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Side {
    Right,
    Left,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Kind {
    Rgcd,
    Lgcd,
    Llcm,
    Rlcm,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MethodArg {
    Canonical,
    Hensel,
}

/// A command's JSON answer and exit code (0, or 4 when a checked identity fails).
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub value: Value,
    pub exit: i32,
}

impl Report {
    fn ok(value: Value) -> Report {
        Report { value, exit: 0 }
    }

    fn checked(value: Value, holds: bool) -> Report {
        Report { value, exit: if holds { 0 } else { 4 } }
    }
}

pub fn load_tower(config: Option<&str>) -> Result<Tower, CliError> {
    let cfg = match config {
        None | Some("gf25") => FieldConfig::gf25(),
        Some("gf343") => FieldConfig::gf343(),
        Some("gf4") => FieldConfig::gf4(),
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("{path}: {e}")))?;
            serde_json::from_str(&text).map_err(|e| CliError::Config(format!("{path}: {e}")))?
        }
    };
    Tower::new(cfg).map_err(|e| CliError::Config(e.to_string()))
}

fn parse_point(text: &str, k: &Tower) -> Result<Point, CliError> {
    match text.trim() {
        "inf" => Ok(Point::Infinity),
        t => {
            let n: i64 =
                t.parse().map_err(|_| CliError::Argument(format!("point must be an integer or inf, got '{text}'")))?;
            Ok(Point::finite(k.from_int(n)))
        }
    }
}

fn method_of(m: Option<MethodArg>, k: &Tower) -> Method {
    match m {
        Some(MethodArg::Canonical) => Method::Canonical,
        Some(MethodArg::Hensel) => Method::Hensel,
        None => preferred_method(k),
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Canonical => "canonical",
        Method::Hensel => "hensel",
    }
}

fn fe_list(v: &[Fe], k: &Tower) -> Value {
    Value::Array(v.iter().map(|&c| Value::String(k.format(c))).collect())
}

fn record_json(rec: &ResidueRecord, k: &Tower) -> Value {
    let full = match &rec.full {
        Some(q) => Value::Array((0..k.r()).map(|j| fe_list(q.section(j), k)).collect()),
        None => Value::Null,
    };
    json!({ "point": rec.point.to_string(), "full": full, "partial": fe_list(&rec.partial, k) })
}

/// One `r`-vector of class coordinates per power of `T`, from the valuation up
/// to the precision.
fn taylor_coefficients(s: &TaylorSeries, k: &Tower) -> Value {
    let Some(v) = s.valuation() else { return json!([]) };
    Value::Array((v..s.prec()).map(|n| fe_list(&s.coeff(n).components(), k)).collect())
}

fn x_series_coefficients(s: &XSeries, k: &Tower) -> Value {
    let Some(v) = s.valuation() else { return json!([]) };
    Value::Array((v..s.prec()).map(|e| Value::String(k.format(s.coeff(e)))).collect())
}

fn x_series_text(s: &XSeries, var: &str, k: &Tower) -> String {
    let parts: Vec<String> = s
        .terms()
        .map(|(e, c)| {
            let coeff = k.format(c);
            let v = if e == 1 { var.to_string() } else { format!("{var}^{e}") };
            match (e, coeff.contains('+'), c == Fe::ONE) {
                (0, _, _) => coeff,
                (_, _, true) => v,
                (_, true, _) => format!("({coeff})*{v}"),
                _ => format!("{coeff}*{v}"),
            }
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn coefficient_ratfn(f: &SkewFrac, k: &Tower) -> Result<RatFn, CliError> {
    let c = f.num().to_coef(k).ok_or(skewres_core::Error::NotCentral)?;
    Ok(c.to_ratfn(k).div(&RatFn::from_poly(f.den().clone()), k)?)
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let k = load_tower(cli.config.as_deref())?;
    let k = &k;
    match &cli.command {
        Command::FieldInfo => {
            let cfg = k.config();
            Ok(Report::ok(json!({
                "p": k.p(),
                "s": cfg.s,
                "r": k.r(),
                "q": k.q(),
                "size": k.size(),
                "modulus": cfg.modulus,
                "generator": "g",
                "frobenius_of_g": k.format(k.frob(k.gen(), 1)),
                "trace_one_element": k.format(k.trace_one_element()),
                "canonical_available": k.inv_r().is_ok(),
            })))
        }
        Command::Div { mode, a, b } => {
            let (a, b) = (parse_poly(a, k)?, parse_poly(b, k)?);
            let (q, r) = match mode {
                Side::Right => right_divide(&a, &b, k)?,
                Side::Left => left_divide(&a, &b, k)?,
            };
            Ok(Report::ok(json!({ "Q": print::skew_poly(&q, k), "R": print::skew_poly(&r, k) })))
        }
        Command::Gcd { kind, f, g } => {
            let (f, g) = (parse_poly(f, k)?, parse_poly(g, k)?);
            let kind = match kind {
                Kind::Rgcd => EuclidKind::Rgcd,
                Kind::Lgcd => EuclidKind::Lgcd,
                Kind::Llcm => EuclidKind::Llcm,
                Kind::Rlcm => EuclidKind::Rlcm,
            };
            let res = euclid(kind, &f, &g, k)?;
            Ok(Report::ok(json!({
                "value": print::skew_poly(&res.value, k),
                "u": print::skew_poly(&res.u, k),
                "v": print::skew_poly(&res.v, k),
            })))
        }
        Command::Bound { f } => {
            let f = parse_poly(f, k)?;
            let (g, n) = central_right_multiple(&f, k)?;
            Ok(Report::ok(json!({ "g": print::skew_poly(&g, k), "N": print::y_poly(&n, k) })))
        }
        Command::Taylor { point, method, expr } => {
            let f = parse(expr, k)?;
            let r = k.r() as i64;
            match parse_point(point, k)? {
                Point::Finite(z) => {
                    let m = method_of(*method, k);
                    let prec = if cli.prec == 0 { default_precision(&f, z, k) } else { cli.prec as i64 };
                    let s = expand(&f, z, m, prec, k)?;
                    Ok(Report::ok(json!({
                        "point": point_text(Point::Finite(z)),
                        "method": method_name(m),
                        "prec": prec,
                        "valuation": s.valuation(),
                        "coefficients": taylor_coefficients(&s, k),
                        "series": print::series(&s, k),
                    })))
                }
                Point::Zero => {
                    let val = f.num().valuation().unwrap_or(0);
                    let prec = if cli.prec == 0 { val + 2 * r } else { cli.prec as i64 };
                    let s = expand_at_zero(&f, prec, k);
                    Ok(Report::ok(json!({
                        "point": "0",
                        "prec": prec,
                        "valuation": s.valuation(),
                        "coefficients": x_series_coefficients(&s, k),
                        "series": x_series_text(&s, "X", k),
                    })))
                }
                Point::Infinity => {
                    let val = f.degree(k).map(|d| -d).unwrap_or(0);
                    let prec = if cli.prec == 0 { val + 2 * r } else { cli.prec as i64 };
                    let s = expand_at_infinity(&f, prec, k);
                    Ok(Report::ok(json!({
                        "point": "inf",
                        "variable": "U = X^-1",
                        "prec": prec,
                        "valuation": s.valuation(),
                        "coefficients": x_series_coefficients(&s, k),
                        "series": x_series_text(&s, "U", k),
                    })))
                }
            }
        }
        Command::Sres { point, j, method, expr } => {
            let f = parse(expr, k)?;
            let point = parse_point(point, k)?;
            let mut out = match point {
                Point::Finite(z) => {
                    let m = method_of(*method, k);
                    let rec = sres(&f, z, m, k)?;
                    let mut v = record_json(&rec, k);
                    v["method"] = Value::String(method_name(m).into());
                    v
                }
                Point::Zero | Point::Infinity => {
                    let partial = (0..k.r() as i64)
                        .map(|j| if point == Point::Zero { sres_zero(&f, j, k) } else { sres_infinity(&f, j, k) })
                        .collect::<Result<Vec<_>, _>>()?;
                    record_json(&ResidueRecord { point, full: None, partial }, k)
                }
            };
            if let Some(j) = j {
                if *j < 0 || *j >= k.r() as i64 {
                    return Err(skewres_core::Error::IndexOutOfRange { j: *j, r: k.r() }.into());
                }
                out["j"] = json!(j);
                out["value"] = out["partial"][*j as usize].clone();
            }
            Ok(Report::ok(out))
        }
        Command::Cres { point, expr } => {
            let c = coefficient_ratfn(&parse(expr, k)?, k)?;
            let point = parse_point(point, k)?;
            Ok(Report::ok(json!({
                "point": point_text(point),
                "residue": k.format(residue_at(&c, point, k)),
                "rho": fe_list(&rho(&c, point, k), k),
            })))
        }
        Command::CheckResidueFormula { j, expr } => {
            let f = parse(expr, k)?;
            let s = residue_sum(&f, *j, k)?;
            let breakdown: Map<String, Value> =
                s.breakdown.iter().map(|(p, v)| (point_text(*p), Value::String(k.format(*v)))).collect();
            Ok(Report::checked(json!({ "sum": k.format(s.sum), "breakdown": breakdown }), s.sum.is_zero()))
        }
        Command::Chvar { c, point, method, expr } => {
            let c = parse(c, k)?.to_central(k).ok_or(skewres_core::Error::NotCentral)?;
            let f = parse(expr, k)?;
            let z = match parse_point(point, k)? {
                Point::Finite(z) => z,
                _ => return Err(skewres_core::Error::ZeroPoint.into()),
            };
            let m = method_of(*method, k);
            let rep = chvar_check(&c, z, &f, m, k)?;
            Ok(Report::checked(
                json!({
                    "point": point_text(Point::Finite(z)),
                    "gamma_star": k.format(gamma_star(&c, z, k)?),
                    "method": method_name(m),
                    "lhs": record_json(&rep.lhs, k),
                    "rhs": record_json(&rep.rhs, k),
                    "equal": rep.equal,
                }),
                rep.equal,
            ))
        }
        Command::Selftest => {
            let mut checks = verify::full_suite(k, cli.seed);
            checks.push(round_trip_check(k, cli.seed, 500));
            let failed = checks.iter().filter(|c| !c.passed()).count();
            let list: Vec<Value> = checks.iter().map(outcome_json).collect();
            Ok(Report::checked(
                json!({
                    "config": { "p": k.p(), "r": k.r() },
                    "seed": cli.seed,
                    "checks": list,
                    "passed": checks.len() - failed,
                    "failed": failed,
                }),
                failed == 0,
            ))
        }
    }
}

fn point_text(p: Point) -> String {
    p.to_string()
}

fn outcome_json(c: &CheckOutcome) -> Value {
    let mut v = json!({
        "name": c.name,
        "trials": c.trials,
        "failures": c.failures,
        "skipped": c.skipped,
        "passed": c.passed(),
    });
    if let Some(d) = &c.first_failure {
        v["first_failure"] = Value::String(d.clone());
    }
    v
}

/// `parse(print(v)) = v` on random skew polynomials and fractions.
pub fn round_trip_check(k: &Tower, seed: u64, trials: usize) -> CheckOutcome {
    verify::run_check("printer round trip", seed, trials, |rng| {
        let f = if rng.gen_bool(0.5) {
            SkewFrac::from_skew(random::skew_poly(rng, k, 5))
        } else {
            random::split_frac(rng, k, 4, 2, 2)
        };
        let text = print::frac(&f, k);
        Ok(match parse(&text, k) {
            Ok(back) if back == f => Trial::Pass,
            Ok(_) => Trial::Fail(format!("{text} read back differently")),
            Err(e) => Trial::Fail(format!("{text}: {e}")),
        })
    })
}

/// Runs a command line and returns the JSON text and the exit code.
pub fn execute<I, T>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (e.to_string(), code);
        }
    };
    match run(&cli) {
        Ok(rep) => (rep.value.to_string(), rep.exit),
        Err(e) => (json!({ "error": e.kind(), "detail": e.to_string() }).to_string(), e.exit_code()),
    }
}
