//! Command-line surface: polynomial file I/O, the bound/annulus/spread/roots
//! /bench subcommands, table and CSV rendering, and SVG annulus plots.
//!
//! Exit codes: 0 success, 2 unreadable or malformed input, 3 pipeline not
//! runnable after zero-root deflation, 4 unconverged roots (results still
//! printed).

use crate::bench::{run_experiment, BenchName, ExperimentSpec};
use crate::bounds::{self, Annulus, BoundTable, MatrixSide};
use crate::companion::{self, CompanionMatrix};
use crate::matrix::NormKind;
use crate::oracle::{aberth_roots, AberthConfig};
use crate::poly::{Polynomial, RootSet};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;
pub const EXIT_UNCONVERGED: i32 = 4;

/// On-disk polynomial document: ascending `[re, im]` coefficient pairs.
#[derive(Debug, Serialize, Deserialize)]
pub struct PolyFile {
    pub coeffs: Vec<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monic: Option<bool>,
}

impl PolyFile {
    pub fn from_polynomial(p: &Polynomial) -> Self {
        PolyFile {
            coeffs: p.coeffs().iter().map(|c| [c.re, c.im]).collect(),
            monic: None,
        }
    }

    pub fn into_polynomial(self) -> Result<Polynomial, String> {
        let coeffs: Vec<Complex64> = self
            .coeffs
            .iter()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect();
        let p = Polynomial::new(coeffs).map_err(|e| e.to_string())?;
        Ok(if self.monic == Some(true) {
            p.monicize()
        } else {
            p
        })
    }
}

/// Reads a polynomial from JSON (`{"coeffs": [[re, im], ...]}`) or CSV (one
/// `re,im` pair per line, `#` comments allowed), ascending order unless
/// `desc` is set.
pub fn read_poly_file(path: &Path, desc: bool) -> Result<Polynomial, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let mut file = if looks_like_json(path, &text) {
        serde_json::from_str::<PolyFile>(&text).map_err(|e| format!("bad JSON: {e}"))?
    } else {
        parse_poly_csv(&text)?
    };
    if desc {
        file.coeffs.reverse();
    }
    file.into_polynomial()
}

fn looks_like_json(path: &Path, text: &str) -> bool {
    path.extension().is_some_and(|e| e == "json") || text.trim_start().starts_with('{')
}

fn parse_poly_csv(text: &str) -> Result<PolyFile, String> {
    let mut coeffs = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split(',').map(str::trim);
        let re = parts
            .next()
            .ok_or_else(|| format!("line {}: empty", lineno + 1))?;
        let im = parts.next().unwrap_or("0");
        if parts.next().is_some() {
            return Err(format!("line {}: expected `re,im`", lineno + 1));
        }
        let re: f64 = re
            .parse()
            .map_err(|e| format!("line {}: {e}", lineno + 1))?;
        let im: f64 = im
            .parse()
            .map_err(|e| format!("line {}: {e}", lineno + 1))?;
        coeffs.push([re, im]);
    }
    if coeffs.is_empty() {
        return Err("no coefficients found".into());
    }
    Ok(PolyFile {
        coeffs,
        monic: None,
    })
}

// --- result document ---------------------------------------------------------

#[derive(Debug, Default, Serialize)]
pub struct ResultDoc {
    pub annulus: Option<AnnulusDoc>,
    pub table: Option<Vec<CellDoc>>,
    pub spreads: Option<SpreadsDoc>,
    pub roots: Option<Vec<RootDoc>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub headers: Option<HeadersDoc>,
    pub warnings: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct AnnulusDoc {
    pub r_lo: f64,
    pub r_hi: f64,
    pub k1: u32,
    pub k2: u32,
    pub norms: Vec<String>,
    pub balance_iters: u32,
}

impl AnnulusDoc {
    fn from(a: &Annulus) -> Self {
        AnnulusDoc {
            r_lo: a.r_lo,
            r_hi: a.r_hi,
            k1: a.provenance.k1,
            k2: a.provenance.k2,
            norms: a
                .provenance
                .norms
                .iter()
                .map(|n| n.name().to_string())
                .collect(),
            balance_iters: a.provenance.balance_iters,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CellDoc {
    pub k: u32,
    pub norm: String,
    pub balanced: bool,
    pub matrix: String,
    pub value: f64,
}

#[derive(Debug, Serialize)]
pub struct SpreadsDoc {
    pub abs_spread_upper: f64,
    pub root_spread_upper: f64,
    pub distance_bracket: [f64; 2],
    pub asymptotic: bool,
}

#[derive(Debug, Serialize)]
pub struct RootDoc {
    pub re: f64,
    pub im: f64,
    pub modulus: f64,
    pub residual: f64,
    pub converged: bool,
}

#[derive(Debug, Serialize)]
pub struct HeadersDoc {
    pub max_root_modulus: f64,
    pub min_root_modulus: f64,
}

fn table_docs(t: &BoundTable) -> Vec<CellDoc> {
    t.cells
        .iter()
        .map(|c| CellDoc {
            k: c.k,
            norm: c.norm.name().to_string(),
            balanced: c.balanced,
            matrix: c.side.name().to_string(),
            value: c.value,
        })
        .collect()
}

fn root_docs(rs: &RootSet) -> Vec<RootDoc> {
    rs.roots
        .iter()
        .zip(rs.residuals.iter().zip(&rs.converged))
        .map(|(z, (&res, &ok))| RootDoc {
            re: z.re,
            im: z.im,
            modulus: z.norm(),
            residual: res,
            converged: ok,
        })
        .collect()
}

// --- argument parsing ----------------------------------------------------------

#[derive(Parser)]
#[command(
    name = "rootloc",
    version,
    about = "Annulus bounds for polynomial roots from norms of balanced companion-matrix powers"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Grid of upper/lower root-modulus bounds over powers and norms
    Bound(BoundArgs),
    /// Annulus containing all roots, optionally plotted as SVG
    Annulus(AnnulusArgs),
    /// Root-spread upper bounds and the extreme-root distance bracket
    Spread(SpreadArgs),
    /// Refine all roots with the simultaneous iteration oracle
    Roots(RootsArgs),
    /// Reproduce a built-in benchmark table with reference headers
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputKind {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormKind {
    /// Ones on the subdiagonal, coefficients down the last column
    FrobeniusTranspose,
    /// Classical layout: the transpose of the above
    Frobenius,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OrderKind {
    Asc,
    Desc,
}

#[derive(Args)]
struct PolyInput {
    /// Polynomial file (JSON or CSV)
    #[arg(long)]
    poly: PathBuf,
    /// Coefficient order in the file
    #[arg(long, value_enum, default_value_t = OrderKind::Asc)]
    order: OrderKind,
}

#[derive(Args)]
struct BoundArgs {
    #[command(flatten)]
    input: PolyInput,
    /// Comma-separated list of powers
    #[arg(long, value_delimiter = ',', default_values_t = [1u32, 2, 8, 16, 32, 64])]
    k: Vec<u32>,
    /// Norms to evaluate
    #[arg(long, value_delimiter = ',', default_values_t = [NormArg::One, NormArg::Inf, NormArg::Fro])]
    norms: Vec<NormArg>,
    /// Balancing sweeps applied to each power (0 disables)
    #[arg(long, default_value_t = 20)]
    balance_iters: u32,
    /// Companion form used for the powers
    #[arg(long, value_enum, default_value_t = FormKind::FrobeniusTranspose)]
    form: FormKind,
    #[arg(long, value_enum, default_value_t = OutputKind::Table)]
    output: OutputKind,
}

#[derive(Args)]
struct AnnulusArgs {
    #[command(flatten)]
    input: PolyInput,
    /// Power for both radii (override the inner-radius power with --k2)
    #[arg(long, default_value_t = 1)]
    k: u32,
    #[arg(long)]
    k2: Option<u32>,
    #[arg(long, value_delimiter = ',', default_values_t = [NormArg::One, NormArg::Inf, NormArg::Fro])]
    norms: Vec<NormArg>,
    #[arg(long, default_value_t = 20)]
    balance_iters: u32,
    #[arg(long, value_enum, default_value_t = FormKind::FrobeniusTranspose)]
    form: FormKind,
    #[arg(long, value_enum, default_value_t = OutputKind::Table)]
    output: OutputKind,
    /// Write an SVG plot of the annulus here
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Run the oracle and overlay root markers on the SVG
    #[arg(long)]
    plot_roots: bool,
}

#[derive(Args)]
struct SpreadArgs {
    #[command(flatten)]
    input: PolyInput,
    #[arg(long, default_value_t = 1)]
    k: u32,
    #[arg(long)]
    k2: Option<u32>,
    /// Norm for the spread bounds
    #[arg(long, value_enum, default_value_t = NormArg::Inf)]
    norm: NormArg,
    #[arg(long, default_value_t = 20)]
    balance_iters: u32,
    #[arg(long, value_enum, default_value_t = OutputKind::Table)]
    output: OutputKind,
}

#[derive(Args)]
struct RootsArgs {
    #[command(flatten)]
    input: PolyInput,
    /// Relative residual target
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    #[arg(long, default_value_t = 200)]
    max_iters: u32,
    #[arg(long, value_enum, default_value_t = OutputKind::Table)]
    output: OutputKind,
}

#[derive(Args)]
struct BenchArgs {
    /// laguerre100 | toeplitz100 | ones50 | lsr1 | example1 | example2
    #[arg(long, value_parser = BenchName::from_str)]
    name: BenchName,
    #[arg(long, value_delimiter = ',')]
    k: Option<Vec<u32>>,
    #[arg(long, value_delimiter = ',')]
    norms: Option<Vec<NormArg>>,
    #[arg(long)]
    balance_iters: Option<u32>,
    #[arg(long, value_enum, default_value_t = OutputKind::Table)]
    output: OutputKind,
}

/// clap-friendly wrapper for norm names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum NormArg {
    One,
    Inf,
    Fro,
}

impl From<NormArg> for NormKind {
    fn from(n: NormArg) -> NormKind {
        match n {
            NormArg::One => NormKind::One,
            NormArg::Inf => NormKind::Inf,
            NormArg::Fro => NormKind::Fro,
        }
    }
}

impl std::fmt::Display for NormArg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(NormKind::from(*self).name())
    }
}

// --- command implementations ---------------------------------------------------

/// Parses argv and runs; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match cli.cmd {
        Command::Bound(args) => cmd_bound(args),
        Command::Annulus(args) => cmd_annulus(args),
        Command::Spread(args) => cmd_spread(args),
        Command::Roots(args) => cmd_roots(args),
        Command::Bench(args) => cmd_bench(args),
    }
}

/// Loads, monicizes and deflates a polynomial for the bound pipeline.
fn prepare(input: &PolyInput, warnings: &mut Vec<String>) -> Result<Polynomial, i32> {
    let p = match read_poly_file(&input.poly, input.order == OrderKind::Desc) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return Err(EXIT_INPUT);
        }
    };
    let monic = if p.is_monic() {
        p
    } else {
        warnings.push("input scaled to monic form".into());
        p.monicize()
    };
    let rec = bounds::deflate_zero_roots(&monic);
    if rec.zero_root_multiplicity > 0 {
        warnings.push(format!(
            "deflated zero root of multiplicity {}; bounds describe the nonzero roots only",
            rec.zero_root_multiplicity
        ));
    }
    if rec.deflated.degree() < 2 {
        warnings.push("fewer than two nonzero roots remain; bound pipeline not run".into());
        for w in warnings.iter() {
            eprintln!("note: {w}");
        }
        return Err(EXIT_DEGENERATE);
    }
    Ok(rec.deflated)
}

fn companion_pair(p: &Polynomial, form: FormKind) -> (CompanionMatrix, CompanionMatrix) {
    let q = p
        .reversal()
        .expect("deflated polynomial has nonzero constant term");
    match form {
        FormKind::FrobeniusTranspose => (
            companion::frobenius_transpose(p).unwrap(),
            companion::frobenius_transpose(&q).unwrap(),
        ),
        FormKind::Frobenius => (
            companion::frobenius(p).unwrap(),
            companion::frobenius(&q).unwrap(),
        ),
    }
}

fn cmd_bound(args: BoundArgs) -> i32 {
    let mut warnings = Vec::new();
    let p = match prepare(&args.input, &mut warnings) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let norms: Vec<NormKind> = args.norms.iter().map(|&n| n.into()).collect();
    let (c1, c2) = companion_pair(&p, args.form);
    let mut cells = Vec::new();
    for &k in &args.k {
        for balanced in [false, true] {
            if balanced && args.balance_iters == 0 {
                continue;
            }
            let iters = if balanced { args.balance_iters } else { 0 };
            for (nk, v) in bounds::upper_bounds_for(&c1, k, &norms, iters) {
                cells.push(CellDoc {
                    k,
                    norm: nk.name().into(),
                    balanced,
                    matrix: MatrixSide::C1.name().into(),
                    value: v,
                });
            }
            for (nk, v) in bounds::lower_bounds_for(&c2, k, &norms, iters) {
                cells.push(CellDoc {
                    k,
                    norm: nk.name().into(),
                    balanced,
                    matrix: MatrixSide::C2.name().into(),
                    value: v,
                });
            }
        }
    }
    let doc = ResultDoc {
        table: Some(cells),
        warnings,
        ..Default::default()
    };
    emit(&doc, args.output);
    EXIT_OK
}

fn annulus_for(
    p: &Polynomial,
    form: FormKind,
    k1: u32,
    k2: u32,
    norms: &[NormKind],
    balance_iters: u32,
) -> Annulus {
    let (c1, c2) = companion_pair(p, form);
    let r_hi = bounds::upper_bounds_for(&c1, k1, norms, balance_iters)
        .into_iter()
        .map(|(_, v)| v)
        .fold(f64::INFINITY, f64::min);
    let r_lo = bounds::lower_bounds_for(&c2, k2, norms, balance_iters)
        .into_iter()
        .map(|(_, v)| v)
        .fold(0.0, f64::max);
    Annulus {
        r_lo,
        r_hi,
        provenance: bounds::Provenance {
            k1,
            k2,
            norms: norms.to_vec(),
            balance_iters,
        },
    }
}

fn cmd_annulus(args: AnnulusArgs) -> i32 {
    let mut warnings = Vec::new();
    let p = match prepare(&args.input, &mut warnings) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let norms: Vec<NormKind> = args.norms.iter().map(|&n| n.into()).collect();
    let k2 = args.k2.unwrap_or(args.k);
    let ann = annulus_for(&p, args.form, args.k, k2, &norms, args.balance_iters);
    let roots = if args.plot_roots {
        Some(aberth_roots(&p, &AberthConfig::default()))
    } else {
        None
    };
    if let Some(path) = &args.svg {
        let svg = annulus_svg(&ann, roots.as_ref());
        if let Err(e) = std::fs::write(path, svg) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return EXIT_INPUT;
        }
    }
    let doc = ResultDoc {
        annulus: Some(AnnulusDoc::from(&ann)),
        roots: roots.as_ref().map(root_docs),
        warnings,
        ..Default::default()
    };
    emit(&doc, args.output);
    EXIT_OK
}

fn cmd_spread(args: SpreadArgs) -> i32 {
    let mut warnings = Vec::new();
    let p = match prepare(&args.input, &mut warnings) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let k2 = args.k2.unwrap_or(args.k);
    let s = bounds::spread_bounds(&p, args.k, k2, args.norm.into(), args.balance_iters)
        .expect("prepared polynomial satisfies pipeline preconditions");
    warnings.push(
        "distance bracket holds for sufficiently large k when the extreme roots and the origin are not collinear"
            .into(),
    );
    let doc = ResultDoc {
        spreads: Some(SpreadsDoc {
            abs_spread_upper: s.abs_spread_upper,
            root_spread_upper: s.root_spread_upper,
            distance_bracket: [s.distance_bracket.0, s.distance_bracket.1],
            asymptotic: s.asymptotic,
        }),
        warnings,
        ..Default::default()
    };
    emit(&doc, args.output);
    EXIT_OK
}

fn cmd_roots(args: RootsArgs) -> i32 {
    let p = match read_poly_file(&args.input.poly, args.input.order == OrderKind::Desc) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    if p.degree() < 1 {
        eprintln!("error: constant polynomial has no roots");
        return EXIT_INPUT;
    }
    let mut warnings = Vec::new();
    let cfg = AberthConfig {
        tol: args.tol,
        max_iters: args.max_iters,
        init_radius_hint: None,
    };
    let rs = aberth_roots(&p, &cfg);
    let zero_count = rs.roots.iter().filter(|z| z.norm() == 0.0).count();
    if zero_count > 0 {
        warnings.push(format!(
            "zero root of multiplicity {zero_count} deflated exactly"
        ));
    }
    let all_ok = rs.all_converged();
    if !all_ok {
        warnings.push("some roots failed the residual test; results are best-effort".into());
    }
    let doc = ResultDoc {
        roots: Some(root_docs(&rs)),
        warnings,
        ..Default::default()
    };
    emit(&doc, args.output);
    if all_ok {
        EXIT_OK
    } else {
        EXIT_UNCONVERGED
    }
}

fn cmd_bench(args: BenchArgs) -> i32 {
    let mut spec = ExperimentSpec::defaults_for(args.name);
    if let Some(ks) = args.k {
        spec.ks = ks;
    }
    if let Some(norms) = args.norms {
        spec.norms = norms.into_iter().map(NormKind::from).collect();
    }
    if let Some(iters) = args.balance_iters {
        spec.balance_iters = iters;
    }
    match run_experiment(&spec) {
        Ok(result) => {
            let doc = ResultDoc {
                table: Some(table_docs(&result.table)),
                headers: Some(HeadersDoc {
                    max_root_modulus: result.ref_max_modulus,
                    min_root_modulus: result.ref_min_modulus,
                }),
                ..Default::default()
            };
            emit(&doc, args.output);
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_UNCONVERGED
        }
    }
}

// --- rendering -------------------------------------------------------------------

fn emit(doc: &ResultDoc, kind: OutputKind) {
    match kind {
        OutputKind::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(doc).expect("serializable")
            );
        }
        OutputKind::Csv => print!("{}", render_csv(doc)),
        OutputKind::Table => print!("{}", render_table(doc)),
    }
}

fn render_csv(doc: &ResultDoc) -> String {
    let mut out = String::new();
    if let Some(a) = &doc.annulus {
        out.push_str("key,value\n");
        let _ = writeln!(out, "r_lo,{}", a.r_lo);
        let _ = writeln!(out, "r_hi,{}", a.r_hi);
    }
    if let Some(s) = &doc.spreads {
        out.push_str("key,value\n");
        let _ = writeln!(out, "abs_spread_upper,{}", s.abs_spread_upper);
        let _ = writeln!(out, "root_spread_upper,{}", s.root_spread_upper);
        let _ = writeln!(out, "distance_lower,{}", s.distance_bracket[0]);
        let _ = writeln!(out, "distance_upper,{}", s.distance_bracket[1]);
    }
    if let Some(cells) = &doc.table {
        out.push_str("k,matrix,norm,balanced,value\n");
        for c in cells {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                c.k, c.matrix, c.norm, c.balanced, c.value
            );
        }
    }
    if let Some(roots) = &doc.roots {
        out.push_str("re,im,modulus,residual,converged\n");
        for r in roots {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                r.re, r.im, r.modulus, r.residual, r.converged
            );
        }
    }
    out
}

/// Rounds to four significant figures for the human-readable table mode.
fn sig4(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let mag = v.abs().log10().floor() as i32;
    if (-3..=5).contains(&mag) {
        let decimals = (3 - mag).max(0) as usize;
        format!("{v:.decimals$}")
    } else {
        format!("{v:.3e}")
    }
}

fn render_table(doc: &ResultDoc) -> String {
    let mut out = String::new();
    if let Some(h) = &doc.headers {
        let _ = writeln!(
            out,
            "reference: max |root| = {}   min |root| = {}",
            sig4(h.max_root_modulus),
            sig4(h.min_root_modulus)
        );
    }
    if let Some(a) = &doc.annulus {
        let _ = writeln!(
            out,
            "annulus: {} <= |z| <= {}   (k1={}, k2={}, norms={}, balance={})",
            sig4(a.r_lo),
            sig4(a.r_hi),
            a.k1,
            a.k2,
            a.norms.join(","),
            a.balance_iters
        );
    }
    if let Some(s) = &doc.spreads {
        let _ = writeln!(out, "abs spread upper bound:  {}", sig4(s.abs_spread_upper));
        let _ = writeln!(out, "root spread upper bound: {}", sig4(s.root_spread_upper));
        let _ = writeln!(
            out,
            "extreme-root distance bracket: ({}, {})",
            sig4(s.distance_bracket[0]),
            sig4(s.distance_bracket[1])
        );
    }
    if let Some(cells) = &doc.table {
        // one row per (k, matrix, balanced), one column per norm
        let mut norms: Vec<String> = Vec::new();
        for c in cells {
            if !norms.contains(&c.norm) {
                norms.push(c.norm.clone());
            }
        }
        let _ = write!(out, "{:>5} {:>6} {:>9}", "k", "matrix", "balanced");
        for n in &norms {
            let _ = write!(out, " {n:>12}");
        }
        out.push('\n');
        let mut seen: Vec<(u32, String, bool)> = Vec::new();
        for c in cells {
            let key = (c.k, c.matrix.clone(), c.balanced);
            if seen.contains(&key) {
                continue;
            }
            seen.push(key.clone());
            let _ = write!(out, "{:>5} {:>6} {:>9}", c.k, c.matrix, c.balanced);
            for n in &norms {
                let v = cells
                    .iter()
                    .find(|x| {
                        x.k == c.k && x.matrix == c.matrix && x.balanced == c.balanced && &x.norm == n
                    })
                    .map(|x| sig4(x.value))
                    .unwrap_or_default();
                let _ = write!(out, " {v:>12}");
            }
            out.push('\n');
        }
    }
    if let Some(roots) = &doc.roots {
        let _ = writeln!(
            out,
            "{:>14} {:>14} {:>12} {:>10} {:>9}",
            "re", "im", "modulus", "residual", "converged"
        );
        for r in roots {
            let _ = writeln!(
                out,
                "{:>14} {:>14} {:>12} {:>10} {:>9}",
                sig4(r.re),
                sig4(r.im),
                sig4(r.modulus),
                format!("{:.1e}", r.residual),
                r.converged
            );
        }
    }
    for w in &doc.warnings {
        let _ = writeln!(out, "note: {w}");
    }
    out
}

/// 800x800 SVG of the annulus: two origin-centered circles, an axis cross,
/// and optional root markers drawn as small crosses.
pub fn annulus_svg(ann: &Annulus, roots: Option<&RootSet>) -> String {
    let s = if ann.r_hi.is_finite() && ann.r_hi > 0.0 {
        1.1 * ann.r_hi
    } else {
        1.0
    };
    let sw = s / 200.0;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" viewBox="{} {} {} {}">"#,
        -s,
        -s,
        2.0 * s,
        2.0 * s
    );
    let _ = writeln!(
        svg,
        r##"  <line x1="{}" y1="0" x2="{}" y2="0" stroke="#999999" stroke-width="{sw}"/>"##,
        -s, s
    );
    let _ = writeln!(
        svg,
        r##"  <line x1="0" y1="{}" x2="0" y2="{}" stroke="#999999" stroke-width="{sw}"/>"##,
        -s, s
    );
    let _ = writeln!(
        svg,
        r##"  <circle cx="0" cy="0" r="{}" fill="none" stroke="#1f77b4" stroke-width="{}"/>"##,
        ann.r_hi,
        2.0 * sw
    );
    let _ = writeln!(
        svg,
        r##"  <circle cx="0" cy="0" r="{}" fill="none" stroke="#d62728" stroke-width="{}"/>"##,
        ann.r_lo,
        2.0 * sw
    );
    if let Some(rs) = roots {
        let d = 2.5 * sw;
        for z in &rs.roots {
            // y axis flipped so the upper half-plane plots upward
            let (x, y) = (z.re, -z.im);
            let _ = writeln!(
                svg,
                r##"  <path d="M {} {} L {} {} M {} {} L {} {}" stroke="#2ca02c" stroke-width="{sw}" fill="none"/>"##,
                x - d,
                y - d,
                x + d,
                y + d,
                x - d,
                y + d,
                x + d,
                y - d
            );
        }
    }
    svg.push_str("</svg>\n");
    svg
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_file_json_round_trip_is_bit_identical() {
        let p = Polynomial::from_real(&[-4.0, 6.5e-13, -2.0, 1.0]).unwrap();
        let json = serde_json::to_string(&PolyFile::from_polynomial(&p)).unwrap();
        let back: PolyFile = serde_json::from_str(&json).unwrap();
        let q = back.into_polynomial().unwrap();
        assert_eq!(p.coeffs(), q.coeffs());
    }

    #[test]
    fn csv_and_json_agree() {
        let csv = "# ascending\n-1,0\n0,0\n1,0\n";
        let from_csv = parse_poly_csv(csv).unwrap().into_polynomial().unwrap();
        let from_json = serde_json::from_str::<PolyFile>(r#"{"coeffs": [[-1,0],[0,0],[1,0]]}"#)
            .unwrap()
            .into_polynomial()
            .unwrap();
        assert_eq!(from_csv.coeffs(), from_json.coeffs());
    }

    #[test]
    fn svg_has_exactly_two_circles_without_roots() {
        let ann = Annulus {
            r_lo: 0.42,
            r_hi: 7.0,
            provenance: bounds::Provenance {
                k1: 1,
                k2: 1,
                norms: NormKind::ALL.to_vec(),
                balance_iters: 0,
            },
        };
        let svg = annulus_svg(&ann, None);
        assert_eq!(svg.matches("<circle").count(), 2);
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn sig4_formatting() {
        assert_eq!(sig4(7.0), "7.000");
        assert_eq!(sig4(261.0), "261.0");
        assert_eq!(sig4(0.005732), "0.005732");
        assert_eq!(sig4(2.057e17), "2.057e17");
        assert_eq!(sig4(1.126e15), "1.126e15");
    }
}
