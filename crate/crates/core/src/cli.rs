//! Command-line front end: `verify` one `(curve, automorphism)` pair or
//! `search` a box of invariant quartics.
//!
//! Exit codes: 0 torsion (or a completed search), 1 inconclusive, 2 invalid
//! input curve (singular, not semi-invariant, wrong degree), 3 usage or
//! parse error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::ceresa::{certify, DiagonalAutomorphism, TorsionCertificate, Verdict};
use crate::error::Error;
use crate::poly::{parse_polynomial, parse_rational};
use crate::search::{run_search_streaming, SearchConfig, SearchHit, SearchStats};

pub const EXIT_TORSION: i32 = 0;
pub const EXIT_INCONCLUSIVE: i32 = 1;
pub const EXIT_INVALID_CURVE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "quartic-torsion",
    version,
    about = "Certify torsion Ceresa classes of plane quartics with a diagonal automorphism"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Certify a single curve and automorphism.
    Verify(VerifyArgs),
    /// Enumerate invariant quartics and report certified examples.
    Search(SearchArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Homogeneous quartic in X, Y, Z, e.g. "X^4+X*Z^3+Y^3*Z".
    #[arg(long)]
    pub curve: String,
    /// Order n of the primitive root of unity.
    #[arg(long)]
    pub order: u32,
    /// Exponents a,b,c of sigma = diag(w^a, w^b, w^c).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub exponents: Vec<i64>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub order_min: u32,
    #[arg(long)]
    pub order_max: u32,
    /// Coefficient alphabet, comma separated rationals (default 0,1).
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: Option<String>,
    /// Maximum number of monomials per candidate.
    #[arg(long)]
    pub max_support: Option<usize>,
    /// Enumerate every exponent triple instead of one per symmetry class.
    #[arg(long)]
    pub no_dedup: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointRecord {
    pub axis: String,
    pub on_curve: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedLineRecord {
    pub axis_pair: String,
    pub meets_curve: bool,
}

/// Serialized certificate. Field order is the key order of the JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub curve: String,
    pub order: u32,
    pub exponents: [u32; 3],
    pub lambda_exp: u32,
    pub smooth: bool,
    pub fixed_points: Vec<FixedPointRecord>,
    pub fixed_lines: Vec<FixedLineRecord>,
    pub v_character: Vec<u32>,
    pub h03: Vec<u32>,
    pub h12: Vec<u32>,
    pub tangent_spectrum: Vec<u32>,
    pub verdict: String,
    pub reasons: Vec<String>,
}

impl From<&TorsionCertificate> for CertificateRecord {
    fn from(c: &TorsionCertificate) -> Self {
        CertificateRecord {
            curve: c.curve.to_string(),
            order: c.sigma.order(),
            exponents: c.sigma.exponents(),
            lambda_exp: c.lambda_exp,
            smooth: c.smooth,
            fixed_points: c
                .fixed_locus
                .points
                .iter()
                .map(|p| FixedPointRecord {
                    axis: p.axis.to_string(),
                    on_curve: p.on_curve(),
                })
                .collect(),
            fixed_lines: c
                .fixed_locus
                .lines
                .iter()
                .map(|l| FixedLineRecord {
                    axis_pair: l.label(),
                    meets_curve: l.meets_curve,
                })
                .collect(),
            v_character: c.v_character.exponents().to_vec(),
            h03: c.h03_character.exponents().to_vec(),
            h12: c.h12_character.exponents().to_vec(),
            tangent_spectrum: c.tangent_spectrum.exponents().to_vec(),
            verdict: c.verdict.as_str().to_string(),
            reasons: c.reasons.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryRecord {
    pub order_min: u32,
    pub order_max: u32,
    pub cells: u64,
    pub candidates: u64,
    pub screened: u64,
    pub smooth: u64,
    pub hits: u64,
}

/// Final line of a JSON search run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryLine {
    pub summary: SummaryRecord,
}

pub fn certificate_json(c: &TorsionCertificate) -> String {
    serde_json::to_string(&CertificateRecord::from(c)).expect("plain data")
}

pub fn certificate_text(c: &TorsionCertificate) -> String {
    let points: Vec<String> = c
        .fixed_locus
        .points
        .iter()
        .map(|p| {
            let tag = if p.on_curve() { "on curve" } else { "off curve" };
            format!("{} {tag}", p.axis.point_label())
        })
        .collect();
    let lines: Vec<String> = c
        .fixed_locus
        .lines
        .iter()
        .map(|l| {
            let tag = if l.meets_curve { "meets curve" } else { "inside curve" };
            format!("{}=0 {tag}", l.equation_axis())
        })
        .collect();
    let or_none = |v: Vec<String>| {
        if v.is_empty() {
            "none".to_string()
        } else {
            v.join(", ")
        }
    };
    let [a, b, e] = c.sigma.exponents();
    let mut s = String::new();
    let mut line = |k: &str, v: String| s.push_str(&format!("{k:<18}{v}\n"));
    line("curve:", c.curve.to_string());
    line("order:", c.sigma.order().to_string());
    line("exponents:", format!("{a},{b},{e}"));
    line("smooth:", c.smooth.to_string());
    line("lambda_exp:", c.lambda_exp.to_string());
    if c.fixed_locus.degenerate {
        line("fixed points:", "all (projective identity)".into());
    } else {
        line("fixed points:", or_none(points));
        line("fixed lines:", or_none(lines));
    }
    line("V:", c.v_character.to_string());
    line("Lambda^2 V*:", c.wedge2_dual_character().to_string());
    line("H03:", c.h03_character.to_string());
    line("H12:", c.h12_character.to_string());
    line("tangent spectrum:", c.tangent_spectrum.to_string());
    line("verdict:", c.verdict.to_string());
    s.push_str("reasons:\n");
    for r in &c.reasons {
        s.push_str(&format!("  - {r}\n"));
    }
    s
}

fn hit_text(hit: &SearchHit) -> String {
    let (n, [a, b, c], l) = hit.parameters();
    let cert = &hit.certificate;
    format!(
        "hit order={n} exponents={a},{b},{c} lambda_exp={l} curve={} V={:?} H03={:?} verdict={}",
        cert.curve,
        cert.v_character.exponents(),
        cert.h03_character.exponents(),
        cert.verdict
    )
}

fn summary_text(s: &SummaryRecord) -> String {
    format!(
        "summary orders={}..{} cells={} candidates={} screened={} smooth={} hits={}",
        s.order_min, s.order_max, s.cells, s.candidates, s.screened, s.smooth, s.hits
    )
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    match cli.command {
        Command::Verify(args) => cmd_verify(&args, out, err),
        Command::Search(args) => cmd_search(&args, out, err),
    }
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let curve = match parse_polynomial(&args.curve) {
        Ok(f) => f,
        Err(e) => {
            let _ = writeln!(err, "error: cannot parse curve: {e}");
            return EXIT_USAGE;
        }
    };
    let exps: [i64; 3] = match args.exponents.as_slice().try_into() {
        Ok(e) => e,
        Err(_) => {
            let _ = writeln!(
                err,
                "error: --exponents needs exactly three values, got {}",
                args.exponents.len()
            );
            return EXIT_USAGE;
        }
    };
    let sigma = match DiagonalAutomorphism::new(args.order, exps) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let cert = match certify(&curve, &sigma) {
        Ok(c) => c,
        Err(e @ (Error::WrongDegree { .. }
        | Error::NotHomogeneous
        | Error::NotSemiInvariant { .. }
        | Error::ZeroPolynomial)) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INVALID_CURVE;
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };

    let report = if args.json {
        certificate_json(&cert) + "\n"
    } else {
        certificate_text(&cert)
    };
    let _ = write!(out, "{report}");

    if !cert.smooth {
        let _ = writeln!(err, "error: the curve is singular");
        return EXIT_INVALID_CURVE;
    }
    match cert.verdict {
        Verdict::Torsion => EXIT_TORSION,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn search_config(args: &SearchArgs) -> Result<SearchConfig, Error> {
    let mut config = SearchConfig::new(args.order_min, args.order_max);
    if let Some(coeffs) = &args.coeffs {
        config.coefficient_alphabet = coeffs
            .split(',')
            .map(parse_rational)
            .collect::<Result<_, _>>()
            .map_err(|e| Error::Config(format!("bad --coeffs: {e}")))?;
    }
    config.max_support = args.max_support;
    config.dedup = !args.no_dedup;
    config.validate()?;
    Ok(config)
}

pub fn cmd_search(args: &SearchArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let config = match search_config(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let stats: SearchStats = match run_search_streaming(&config, |hit| {
        let line = if args.json {
            serde_json::to_string(&CertificateRecord::from(&hit.certificate)).expect("plain data")
        } else {
            hit_text(hit)
        };
        let _ = writeln!(out, "{line}");
    }) {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let summary = SummaryRecord {
        order_min: config.order_min,
        order_max: config.order_max,
        cells: stats.cells,
        candidates: stats.candidates,
        screened: stats.screened,
        smooth: stats.smooth,
        hits: stats.hits,
    };
    let line = if args.json {
        serde_json::to_string(&SummaryLine { summary }).expect("plain data")
    } else {
        summary_text(&summary)
    };
    let _ = writeln!(out, "{line}");
    EXIT_TORSION
}
