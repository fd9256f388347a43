//! Command definitions and their execution.
//!
//! Every command produces a list of [`OutputRecord`]s in a deterministic order
//! plus an exit code: 0 when everything checked out, 1 when a verification
//! failed or a Kurepa counterexample turned up, 2 for usage errors.

use std::env;

use clap::{ArgGroup, Args, Parser, Subcommand};
use fsum_core::bernoulli::{
    bernoulli_identity_partial, bernoulli_numbers, bernoulli_series_certificate, volkenborn_level,
    volkenborn_poly,
};
use fsum_core::padic::{in_convergence_domain, padic_distance_exponent, padic_expand, vp, Prime};
use fsum_core::sequences::{family_sequences, kurepa_digit_scan, kurepa_gcd_scan};
use fsum_core::summation::{
    build_p_q, invariant_sum, truncated_padic_sum, verify_identity, SeriesSpec,
};
use fsum_core::{BigInt, BigRational, Family, IntPoly};
use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::args::{
    parse_int_list, parse_nat_set, parse_rational, parse_rational_set, ParseError,
};
use crate::record::{self, Format, OutputRecord};

/// Environment variable capping `p^m` for Volkenborn levels and the bounds of Kurepa scans.
pub const WORK_LIMIT_VAR: &str = "FSUM_WORK_LIMIT";
pub const DEFAULT_WORK_LIMIT: u64 = 10_000_000;

#[derive(Debug, Parser)]
#[command(name = "fsum", version, about = "Exact p-adic invariant summation of factorial series")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "human")]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print U_k, V_k and A_{k-1} for k = 1..=kmax.
    Triples {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=1000))]
        kmax: u64,
    },
    /// Check the finite identity over a grid, optionally with p-adic certificates.
    Verify(VerifyArgs),
    /// Print the p-adic invariant sum V_k(x), or Q(x) for a coefficient list.
    Sum(SumArgs),
    /// Print the p-adic expansion of a rational.
    Padic {
        #[arg(long, allow_hyphen_values = true)]
        value: String,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..=100_000))]
        digits: u64,
    },
    /// Bernoulli table, Bernoulli-weighted identities, or finite Volkenborn levels.
    Bernoulli(BernoulliArgs),
    /// Desk-scale checks of gcd(!n, n!) = 2 and the zeroth p-adic digit of Σ j!.
    Kurepa {
        #[arg(long)]
        gcd_max: Option<u64>,
        #[arg(long)]
        digit_max: Option<u64>,
    },
    /// The four integer sequences -V_k(1), -V_k(-1), U_k(1), -U_k(-1).
    Sequences {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=1000))]
        kmax: u64,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Degrees, e.g. `2` or `1..5`.
    #[arg(long)]
    pub k: String,
    /// Check N = 1..=n-max.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n_max: u64,
    /// Points, e.g. `-3..3`, `1/2,2/3`.
    #[arg(long, allow_hyphen_values = true)]
    pub x_set: String,
    /// Primes for certificates, e.g. `2,3,5`.
    #[arg(long)]
    pub p_list: Option<String>,
}

#[derive(Debug, Args)]
pub struct SumArgs {
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub x: String,
    /// Coefficients C_1..C_k of a linear combination.
    #[arg(long = "C", allow_hyphen_values = true)]
    pub coeffs: Option<String>,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["nmax", "identity", "level"])))]
pub struct BernoulliArgs {
    /// Print B_0..B_nmax.
    #[arg(long)]
    pub nmax: Option<usize>,
    /// Check the Bernoulli-weighted identity of degree k for N = 1..=N.
    #[arg(long, requires = "terms")]
    pub identity: Option<usize>,
    #[arg(long = "N", alias = "terms", id = "terms")]
    pub terms: Option<u64>,
    /// Also certify the series against the prime p (with --identity).
    #[arg(long)]
    pub p: Option<u64>,
    /// Finite Volkenborn level: `--level P M`.
    #[arg(long, num_args = 2, value_names = ["P", "M"], requires = "poly")]
    pub level: Option<Vec<u64>>,
    /// Little-endian integer coefficients of the integrand, e.g. `0,0,1` for x^2.
    #[arg(long, allow_hyphen_values = true)]
    pub poly: Option<String>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] fsum_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Debug)]
pub struct Outcome {
    pub records: Vec<OutputRecord>,
    pub exit_code: i32,
}

impl Outcome {
    fn from_records(records: Vec<OutputRecord>) -> Self {
        let exit_code = if records.iter().all(|r| r.ok) { 0 } else { 1 };
        Outcome { records, exit_code }
    }

    pub fn render(&self, format: Format) -> String {
        let mut s = String::new();
        for r in &self.records {
            s.push_str(&r.render(format));
            s.push('\n');
        }
        s
    }
}

pub fn work_limit() -> u64 {
    env::var(WORK_LIMIT_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_WORK_LIMIT)
}

fn prime(p: u64) -> Result<Prime, CliError> {
    Ok(Prime::new(p)?)
}

pub fn run(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Triples { kmax } => triples(*kmax as usize),
        Command::Verify(a) => verify(a),
        Command::Sum(a) => sum(a),
        Command::Padic { value, p, digits } => padic(value, *p, *digits as usize),
        Command::Bernoulli(a) => bernoulli(a),
        Command::Kurepa { gcd_max, digit_max } => kurepa(*gcd_max, *digit_max),
        Command::Sequences { kmax } => sequences(*kmax as usize),
    }
}

fn triples(kmax: usize) -> Result<Outcome, CliError> {
    let family = Family::new(kmax);
    let records = (1..=kmax)
        .map(|k| {
            let t = family.triple(k);
            let ok = t.check().is_ok();
            let human = format!("U_{k} = {}; V_{k} = {}; A_{} = {}", t.u, t.v, k - 1, t.a);
            OutputRecord::new(
                "triples",
                json!({ "k": k }),
                json!({
                    "k": k,
                    "U": t.u.to_string(),
                    "V": t.v.to_string(),
                    "A": t.a.render(),
                    "U_coeffs": record::coeffs(&t.u),
                    "V_coeffs": record::coeffs(&t.v),
                    "A_layers": t.a.layers().iter().map(record::coeffs).collect::<Vec<_>>(),
                }),
                ok,
            )
            .with_human(human)
        })
        .collect();
    Ok(Outcome::from_records(records))
}

fn verify(a: &VerifyArgs) -> Result<Outcome, CliError> {
    let ks = parse_nat_set(&a.k)?;
    if ks.contains(&0) {
        return Err(usage("--k values must be at least 1"));
    }
    let xs = parse_rational_set(&a.x_set)?;
    let primes = match &a.p_list {
        Some(s) => parse_nat_set(s)?.into_iter().map(prime).collect::<Result<Vec<_>, _>>()?,
        None => Vec::new(),
    };
    let kmax = ks.iter().copied().max().unwrap_or(1) as usize;
    let family = Family::new(kmax);

    let mut jobs = Vec::new();
    for &k in &ks {
        for n in 1..=a.n_max {
            for x in &xs {
                jobs.push((k as usize, n, x.clone()));
            }
        }
    }
    // Results are collected in job order whatever the completion order.
    let per_job: Vec<Vec<OutputRecord>> = jobs
        .par_iter()
        .map(|(k, n, x)| verify_job(&family, *k, *n, x, &primes))
        .collect();
    Ok(Outcome::from_records(per_job.into_iter().flatten().collect()))
}

fn verify_job(family: &Family, k: usize, n: u64, x: &BigRational, primes: &[Prime]) -> Vec<OutputRecord> {
    let mut out = Vec::with_capacity(1 + primes.len());
    let check = verify_identity(family, k, n, x).expect("k and N validated");
    out.push(OutputRecord::new(
        "verify",
        json!({ "k": k, "N": n, "x": record::rat(x) }),
        json!({
            "record": "identity",
            "k": k,
            "N": n,
            "x": record::rat(x),
            "lhs": record::rat(&check.lhs),
            "rhs": record::rat(&check.rhs),
        }),
        check.holds(),
    ));
    for &p in primes {
        let params = json!({ "k": k, "N": n, "x": record::rat(x), "p": p.get() });
        out.push(match truncated_padic_sum(family, k, x, p, n) {
            Ok(c) => {
                let mut result = record::certificate(&c);
                result["record"] = json!("certificate");
                OutputRecord::new("verify", params, result, c.ok())
            }
            Err(e) => OutputRecord::new(
                "verify",
                params,
                json!({
                    "record": "rejection",
                    "k": k,
                    "N": n,
                    "x": record::rat(x),
                    "p": p.get(),
                    "error": e.to_string(),
                }),
                false,
            ),
        });
    }
    out
}

fn integer_x(s: &str) -> Result<BigInt, CliError> {
    let x = parse_rational(s)?;
    if !x.is_integer() {
        return Err(usage(format!("--x must be an integer, got {x}")));
    }
    Ok(x.to_integer())
}

fn sum(a: &SumArgs) -> Result<Outcome, CliError> {
    let x = integer_x(&a.x)?;
    let record = match &a.coeffs {
        Some(list) => {
            let coeffs = parse_int_list(list)?;
            let k = a.k.unwrap_or(coeffs.len());
            let spec = SeriesSpec::new(k, coeffs.clone(), BigRational::from_integer(x.clone()))?;
            let family = Family::new(k);
            let (p, q) = build_p_q(&family, &spec);
            let value = q.eval_int(&x);
            OutputRecord::new(
                "sum",
                json!({ "k": k, "x": record::int(&x), "C": coeffs.iter().map(record::int).collect::<Vec<_>>() }),
                json!({ "P": p.render(), "Q": q.to_string(), "value": record::int(&value) }),
                true,
            )
            .with_human(format!("P = {p}; Q = {q}; sum at x = {x}: {value}"))
        }
        None => {
            let k = a.k.ok_or_else(|| usage("--k is required without --C"))?;
            if k == 0 {
                return Err(usage("--k must be at least 1"));
            }
            let family = Family::new(k);
            let value = invariant_sum(&family, k, &x)?;
            let v = family.v(k);
            OutputRecord::new(
                "sum",
                json!({ "k": k, "x": record::int(&x) }),
                json!({ "U": family.u(k).to_string(), "V": v.to_string(), "value": record::int(&value) }),
                true,
            )
            .with_human(format!("V_{k} = {v}; sum at x = {x}: {value}"))
        }
    };
    Ok(Outcome::from_records(vec![record]))
}

fn padic(value: &str, p: u64, digits: usize) -> Result<Outcome, CliError> {
    let q = parse_rational(value)?;
    let p = prime(p)?;
    let e = padic_expand(&q, p, digits)?;
    let in_zp = in_convergence_domain(&q, p);
    let mut result = record::expansion(&e);
    result["value"] = record::rat(&q);
    result["in_zp"] = json!(in_zp);
    let digit_text = e.digits.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
    let val_text = if e.is_zero() { "inf".to_string() } else { e.valuation.to_string() };
    let mut human = format!("{q} in Q_{p}: valuation {val_text}; digits {digit_text}");
    if !in_zp {
        human.push_str(&format!("; negative valuation, not in Z_{p}"));
    }
    Ok(Outcome::from_records(vec![OutputRecord::new(
        "padic",
        json!({ "value": record::rat(&q), "p": p.get(), "digits": digits }),
        result,
        true,
    )
    .with_human(human)]))
}

fn bernoulli(a: &BernoulliArgs) -> Result<Outcome, CliError> {
    if let Some(nmax) = a.nmax {
        let t = bernoulli_numbers(nmax);
        let records = t
            .values()
            .iter()
            .enumerate()
            .map(|(n, b)| {
                OutputRecord::new(
                    "bernoulli",
                    json!({ "nmax": nmax }),
                    json!({
                        "n": n,
                        "numerator": record::int(b.numer()),
                        "denominator": record::int(b.denom()),
                        "value": record::rat(b),
                    }),
                    true,
                )
                .with_human(format!("B_{n} = {b}"))
            })
            .collect();
        return Ok(Outcome::from_records(records));
    }
    if let Some(k) = a.identity {
        let n_max = a.terms.ok_or_else(|| usage("--identity needs --N"))?;
        if k == 0 || n_max == 0 {
            return Err(usage("--identity and --N must be at least 1"));
        }
        let family = Family::new(k);
        let table = bernoulli_numbers(n_max as usize + k);
        let target = volkenborn_poly(family.v(k), &table)?;
        let p = a.p.map(prime).transpose()?;
        let mut records = Vec::new();
        for n in 1..=n_max {
            let (lhs, rhs) = bernoulli_identity_partial(&family, k, n, &table)?;
            records.push(OutputRecord::new(
                "bernoulli",
                json!({ "identity": k, "N": n }),
                json!({
                    "record": "identity",
                    "k": k,
                    "N": n,
                    "lhs": record::rat(&lhs),
                    "rhs": record::rat(&rhs),
                    "target": record::rat(&target),
                }),
                lhs == rhs,
            ));
            if let Some(p) = p {
                let c = bernoulli_series_certificate(&family, k, p, n, &table)?;
                let mut result = record::certificate(&c);
                result["record"] = json!("certificate");
                records.push(OutputRecord::new(
                    "bernoulli",
                    json!({ "identity": k, "N": n, "p": p.get() }),
                    result,
                    c.ok(),
                ));
            }
        }
        return Ok(Outcome::from_records(records));
    }
    if let Some(level) = &a.level {
        let (p, m) = (prime(level[0])?, level[1]);
        let m = u32::try_from(m).map_err(|_| usage("level exponent too large"))?;
        let poly = IntPoly::from_coeffs(parse_int_list(a.poly.as_deref().unwrap_or("0"))?);
        let value = volkenborn_level(&poly, p, m, work_limit())?;
        let table = bernoulli_numbers(poly.degree().unwrap_or(0));
        let integral = volkenborn_poly(&poly, &table)?;
        let distance = padic_distance_exponent(&value, &integral, p);
        return Ok(Outcome::from_records(vec![OutputRecord::new(
            "bernoulli",
            json!({ "level": [p.get(), m], "poly": record::coeffs(&poly) }),
            json!({
                "record": "level",
                "p": p.get(),
                "m": m,
                "level": record::rat(&value),
                "integral": record::rat(&integral),
                "distance_exponent": record::exponent(distance),
                "level_valuation": record::exponent(vp(&value, p)),
            }),
            true,
        )]));
    }
    Err(usage("one of --nmax, --identity, --level is required"))
}

fn kurepa(gcd_max: Option<u64>, digit_max: Option<u64>) -> Result<Outcome, CliError> {
    if gcd_max.is_none() && digit_max.is_none() {
        return Err(usage("give --gcd-max and/or --digit-max"));
    }
    let limit = work_limit();
    for bound in [gcd_max, digit_max].into_iter().flatten() {
        if bound > limit {
            return Err(CliError::Core(fsum_core::Error::WorkLimit {
                terms: bound as u128,
                limit,
            }));
        }
    }
    let mut records = Vec::new();
    if let Some(nmax) = gcd_max {
        if nmax < 2 {
            return Err(usage("--gcd-max must be at least 2"));
        }
        let r = kurepa_gcd_scan(nmax);
        let failure = r
            .first_failure
            .as_ref()
            .map(|(n, g)| json!({ "n": n, "gcd": record::int(g) }))
            .unwrap_or(Value::Null);
        let human = match &r.first_failure {
            None => format!("gcd(!n, n!) = 2 for all 2 <= n <= {nmax}"),
            Some((n, g)) => format!("COUNTEREXAMPLE: gcd(!{n}, {n}!) = {g}"),
        };
        records.push(
            OutputRecord::new(
                "kurepa",
                json!({ "gcd_max": nmax }),
                json!({ "scan": "gcd", "bound": nmax, "ok_up_to": r.ok_up_to, "first_failure": failure }),
                r.ok(),
            )
            .with_human(human),
        );
    }
    if let Some(bound) = digit_max {
        let r = kurepa_digit_scan(bound);
        let human = match r.first_failure {
            None => format!(
                "zeroth digit of Σ j! is nonzero for all {} odd primes <= {bound}",
                r.checked_primes
            ),
            Some(p) => format!("COUNTEREXAMPLE: zeroth digit of Σ j! vanishes for p = {p}"),
        };
        records.push(
            OutputRecord::new(
                "kurepa",
                json!({ "digit_max": bound }),
                json!({
                    "scan": "digit",
                    "bound": bound,
                    "checked_primes": r.checked_primes,
                    "first_failure": r.first_failure.map(|p| json!(p.get())).unwrap_or(Value::Null),
                }),
                r.ok(),
            )
            .with_human(human),
        );
    }
    Ok(Outcome::from_records(records))
}

fn sequences(kmax: usize) -> Result<Outcome, CliError> {
    let family = Family::new(kmax);
    let s = family_sequences(&family, kmax);
    let named = [
        ("-V_k(1)", &s.minus_v_at_one),
        ("-V_k(-1)", &s.minus_v_at_minus_one),
        ("U_k(1)", &s.u_at_one),
        ("-U_k(-1)", &s.minus_u_at_minus_one),
    ];
    let records = named
        .iter()
        .map(|(name, values)| {
            let text = values.iter().map(BigInt::to_string).collect::<Vec<_>>().join(", ");
            OutputRecord::new(
                "sequences",
                json!({ "kmax": kmax }),
                json!({ "name": name, "values": values.iter().map(record::int).collect::<Vec<_>>() }),
                true,
            )
            .with_human(format!("{name}: {text}"))
        })
        .collect();
    Ok(Outcome::from_records(records))
}
