//! Command-line front end. [`run`] does all the work and returns the exit
//! code with the text to print, so tests can drive it without a process.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 hypothesis violation,
//! 3 a verification reported FAIL.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use polytower::homology::{simplicial_homology, SplittingCheck};
use polytower::io::{complex_from_json, ComplexJson};
use polytower::lie::{for_each_lyndon, try_standard_bracketing, witt_count, Alphabet, Unbounded};
use polytower::tower::{
    degree_comparison, full_decomposition, Decomposition, EnumerationOptions, Indexing, SpaceSpec,
    TowerError, Variant, DEFAULT_WORD_CAP,
};
use polytower::{classify, divergence_witnesses, parse_complex, Classification, SimplicialComplex};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_HYPOTHESIS: i32 = 2;
pub const EXIT_FAIL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "polytower",
    version,
    about = "Polyhedral products, their homology and Goodwillie tower factor lists"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Summary, shiftedness, certificate, missing faces and classification.
    Check {
        complex: PathBuf,
        #[arg(long)]
        assume_trivial_fwf: bool,
    },
    /// Reduced homology of |K| and of the real moment-angle complex.
    Homology {
        complex: PathBuf,
        /// Compare against the sum over full subcomplexes and report PASS/FAIL.
        #[arg(long)]
        verify_splitting: bool,
    },
    /// Factor list of one loop space decomposition.
    Factors(FactorsArgs),
    /// Lyndon words with standard bracketing, checked against Witt numbers.
    Hall {
        #[arg(long)]
        letters: usize,
        #[arg(long)]
        max_len: usize,
    },
    /// Sphere words witnessing v_h-periodic divergence.
    Witness {
        complex: PathBuf,
        #[arg(long, value_delimiter = ',')]
        dims: Vec<u32>,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long)]
        assume_trivial_fwf: bool,
    },
}

#[derive(Debug, Args)]
pub struct FactorsArgs {
    complex: PathBuf,
    /// Excisive degrees: one per vertex for multi and cone, one for single and bh.
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<u32>,
    /// Sphere dimensions d_i of the inputs X_i = S^{d_i}, one per vertex.
    #[arg(long, value_delimiter = ',', required = true)]
    dims: Vec<u32>,
    #[arg(long, default_value = "multi")]
    variant: Variant,
    #[arg(long, value_enum, default_value_t = IndexingArg::Restricted)]
    indexing: IndexingArg,
    #[arg(long)]
    assume_trivial_fwf: bool,
    /// Abort after this many enumerated words.
    #[arg(long, default_value_t = DEFAULT_WORD_CAP)]
    cap: u64,
    /// Multiply the enumeration bounds; the factor list must not change.
    #[arg(long, default_value_t = 1)]
    bound_scale: u32,
    /// Also list cone and identity-on-wedge degrees word by word (single n).
    #[arg(long)]
    compare: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum IndexingArg {
    Restricted,
    Full,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Input { path: String, message: String },
    #[error(transparent)]
    Tower(#[from] TowerError),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Tower(TowerError::HypothesisUnverified) => EXIT_HYPOTHESIS,
            _ => EXIT_PARSE,
        }
    }
}

/// Exit code, standard output and standard error of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn err(code: i32, stderr: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Runs with the worker count from `PP_THREADS`, if set.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let threads = match std::env::var("PP_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(t) if t >= 1 => Some(t),
            _ => {
                return Outcome::err(
                    EXIT_PARSE,
                    format!("PP_THREADS must be a positive integer, got '{v}'\n"),
                )
            }
        },
        Err(_) => None,
    };
    run_with_threads(args, threads)
}

/// Runs on a dedicated pool of `threads` workers (the global pool if `None`).
pub fn run_with_threads<I, T>(args: I, threads: Option<usize>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(code, text)
            } else {
                Outcome::err(code, text)
            };
        }
    };
    match threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Outcome::err(EXIT_PARSE, format!("cannot start {t} workers: {e}\n")),
        },
        None => execute(&cli),
    }
}

fn execute(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Check {
            complex,
            assume_trivial_fwf,
        } => check(complex, *assume_trivial_fwf, cli.format),
        Command::Homology {
            complex,
            verify_splitting,
        } => homology(complex, *verify_splitting, cli.format),
        Command::Factors(args) => factors(args, cli.format),
        Command::Hall { letters, max_len } => Ok(hall(*letters, *max_len, cli.format)),
        Command::Witness {
            complex,
            dims,
            count,
            assume_trivial_fwf,
        } => witness(complex, dims, *count, *assume_trivial_fwf, cli.format),
    };
    match result {
        Ok((code, out)) => Outcome::ok(code, out),
        Err(e) => Outcome::err(e.code(), format!("error: {e}\n")),
    }
}

type Report = Result<(i32, String), CliError>;

/// Reads a complex file, either the `m=` text format or its JSON form.
pub fn load_complex(path: &Path) -> Result<SimplicialComplex, String> {
    let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
    let parsed = if text.trim_start().starts_with('{') {
        complex_from_json(&text)
    } else {
        parse_complex(&text)
    };
    parsed.map_err(|e| e.to_string())
}

fn load(path: &Path) -> Result<SimplicialComplex, CliError> {
    load_complex(path).map_err(|message| CliError::Input {
        path: path.display().to_string(),
        message,
    })
}

/// Compact JSON with sorted keys and a trailing newline.
pub fn canonical_json(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("values serialize");
    s.push('\n');
    s
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("plain data serializes")
}

fn faces_json(faces: &[polytower::Simplex]) -> Value {
    Value::Array(faces.iter().map(|f| json!(f.to_vec())).collect())
}

fn face_list(faces: &[polytower::Simplex]) -> String {
    if faces.is_empty() {
        return "none".into();
    }
    faces
        .iter()
        .map(|f| f.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let mut s = String::new();
        for (j, (c, w)) in cells.iter().zip(&width).enumerate() {
            if j + 1 == cells.len() {
                s.push_str(c);
            } else {
                let _ = write!(s, "{c}{}  ", " ".repeat(w - c.chars().count()));
            }
        }
        s.push('\n');
        s
    };
    let mut out = line(header.iter().map(|h| h.to_string()).collect());
    for r in rows {
        out.push_str(&line(r.clone()));
    }
    out
}

fn check(path: &Path, assume: bool, format: Format) -> Report {
    let k = load(path)?;
    let report = classify(&k, assume);
    let missing = k.minimal_missing_faces();
    let out = match format {
        Format::Json => canonical_json(&json!({
            "complex": to_value(&ComplexJson::from(&k)),
            "face_count": k.face_count(),
            "dim": k.dim(),
            "shifted": k.is_shifted(),
            "certificate": to_value(&report.certificate),
            "minimal_missing_faces": faces_json(&missing),
            "report": to_value(&report),
        })),
        Format::Table => {
            let mut s = String::new();
            let _ = writeln!(s, "vertices        {}", k.m());
            let _ = writeln!(s, "faces           {}", k.face_count());
            let _ = writeln!(s, "dimension       {}", k.dim());
            let _ = writeln!(s, "facets          {}", face_list(&k.facets()));
            let _ = writeln!(s, "shifted         {}", k.is_shifted());
            let _ = writeln!(s, "certificate     {}", report.certificate);
            let _ = writeln!(s, "missing faces   {}", face_list(&missing));
            let _ = writeln!(s, "classification  {}", report.classification.as_str());
            if let Some(f) = report.witness_face {
                let _ = writeln!(s, "witness face    {f}");
            }
            s
        }
    };
    Ok((EXIT_OK, out))
}

fn homology(path: &Path, verify: bool, format: Format) -> Report {
    let k = load(path)?;
    let simplicial = simplicial_homology(&k);
    let check = SplittingCheck::run(&k);
    let verdict = if check.passed() { "PASS" } else { "FAIL" };
    let code = if verify && !check.passed() {
        EXIT_FAIL
    } else {
        EXIT_OK
    };
    let out = match format {
        Format::Json => {
            let mut v = json!({
                "complex": to_value(&ComplexJson::from(&k)),
                "simplicial": to_value(&simplicial),
                "real_moment_angle": { "cells": check.cells, "homology": to_value(&check.cubical) },
            });
            if verify {
                v["wedge"] = to_value(&check.wedge);
                v["splitting"] = json!(verdict);
            }
            canonical_json(&v)
        }
        Format::Table => {
            let mut s = String::new();
            let _ = writeln!(s, "H~(|K|)              {simplicial}");
            let _ = writeln!(
                s,
                "H~(RZ_K) cubical     {}  ({} cells)",
                check.cubical, check.cells
            );
            if verify {
                let _ = writeln!(s, "sum H~(K_I) shifted  {}", check.wedge);
                let _ = writeln!(s, "splitting            {verdict}");
            }
            s
        }
    };
    Ok((code, out))
}

fn spec_for(k: &SimplicialComplex, dims: &[u32]) -> Result<SpaceSpec, CliError> {
    if dims.len() != k.m() as usize {
        return Err(CliError::Usage(format!(
            "--dims needs {} values, got {}",
            k.m(),
            dims.len()
        )));
    }
    Ok(SpaceSpec::new(dims.to_vec(), false)?)
}

fn factors(args: &FactorsArgs, format: Format) -> Report {
    let k = load(&args.complex)?;
    let spec = spec_for(&k, &args.dims)?;
    let expected = if args.variant.is_multi() {
        k.m() as usize
    } else {
        1
    };
    if args.n.len() != expected {
        return Err(CliError::Usage(format!(
            "--n needs {expected} value(s) for variant {}, got {}",
            args.variant,
            args.n.len()
        )));
    }
    if args.compare && args.n.len() != 1 {
        return Err(CliError::Usage(
            "--compare takes a single degree --n".into(),
        ));
    }
    let opts = EnumerationOptions {
        indexing: match args.indexing {
            IndexingArg::Restricted => Indexing::Restricted,
            IndexingArg::Full => Indexing::Full,
        },
        assume_trivial_fwf: args.assume_trivial_fwf,
        cap: args.cap,
        bound_scale: args.bound_scale,
        max_total_power: None,
    };
    let d = full_decomposition(&k, &args.n, &spec, args.variant, &opts)?;
    let comparison = if args.compare {
        Some(degree_comparison(&k, args.n[0], &spec, &opts)?)
    } else {
        None
    };
    let out = match format {
        Format::Json => {
            let mut v = to_value(&d);
            if let Some(rows) = &comparison {
                v["degree_comparison"] = to_value(rows);
            }
            canonical_json(&v)
        }
        Format::Table => {
            let mut s = factors_table(&d);
            if let Some(rows) = &comparison {
                let body: Vec<Vec<String>> = rows
                    .iter()
                    .map(|r| {
                        let gens: Vec<String> =
                            r.generators.iter().map(|g| g.to_string()).collect();
                        vec![
                            r.word.clone(),
                            gens.join(" "),
                            r.smash_degree.to_string(),
                            r.length.to_string(),
                            r.kappa_cone.to_string(),
                            r.kappa_bh.to_string(),
                        ]
                    })
                    .collect();
                s.push('\n');
                s.push_str(&table(
                    &["word", "generators", "Σa", "length", "κ cone", "κ bh"],
                    &body,
                ));
            }
            s
        }
    };
    Ok((EXIT_OK, out))
}

fn factors_table(d: &Decomposition) -> String {
    let mut s = String::new();
    let n: Vec<String> = d.n.iter().map(|x| x.to_string()).collect();
    let dims: Vec<String> = d.dims.iter().map(|x| x.to_string()).collect();
    let _ = writeln!(
        s,
        "variant {}  n=({})  dims=({})  certificate {}  indexing {}",
        d.variant,
        n.join(","),
        dims.join(","),
        d.certificate,
        d.indexing
    );
    let rows: Vec<Vec<String>> = d
        .lie_factors
        .iter()
        .map(|f| {
            let a: Vec<String> = f.powers().iter().map(|x| x.to_string()).collect();
            vec![
                f.labelled_word(),
                format!("({})", a.join(",")),
                f.kappa().to_string(),
                f.space().to_string(),
                f.homology().to_string(),
                f.sphere_dim().map_or("-".into(), |x| format!("S^{x}")),
            ]
        })
        .collect();
    let _ = writeln!(s, "\nlie factors: {}", rows.len());
    if !rows.is_empty() {
        s.push_str(&table(
            &["word", "a", "κ", "space", "homology", "sphere"],
            &rows,
        ));
    }
    let rows: Vec<Vec<String>> = d
        .product_factors
        .iter()
        .map(|p| {
            vec![
                p.variable.to_string(),
                p.degree.to_string(),
                p.space.clone(),
            ]
        })
        .collect();
    let _ = writeln!(s, "\nproduct factors: {}", rows.len());
    if !rows.is_empty() {
        s.push_str(&table(&["variable", "degree", "space"], &rows));
    }
    let c = &d.census;
    let _ = writeln!(
        s,
        "\nletters {}  words visited {}  dropped κ=0 {}  dropped null {}  bound scale {}",
        c.alphabet_size, c.words_visited, c.kappa_zero_dropped, c.null_dropped, c.bound_scale
    );
    s
}

fn hall(q: usize, max_len: usize, format: Format) -> (i32, String) {
    let alphabet = Alphabet::standard(q);
    let mut words: Vec<Vec<usize>> = Vec::new();
    let _ = for_each_lyndon(q, max_len, &mut Unbounded, |w| {
        words.push(w.to_vec());
        std::ops::ControlFlow::Continue(())
    });
    words.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let label = |c: usize| alphabet.letter(c).label.clone();
    let listing: Vec<(String, String)> = words
        .iter()
        .map(|w| {
            let h = try_standard_bracketing(w).expect("generated words are Lyndon");
            (
                w.iter().map(|&c| label(c)).collect(),
                h.bracket().render_with(label),
            )
        })
        .collect();
    let counts: Vec<(usize, usize, String)> = (1..=max_len)
        .map(|n| {
            (
                n,
                words.iter().filter(|w| w.len() == n).count(),
                witt_count(q as u64, n as u32).to_string(),
            )
        })
        .collect();
    let ok = counts.iter().all(|(_, got, witt)| got.to_string() == *witt);
    let code = if ok { EXIT_OK } else { EXIT_FAIL };
    let verdict = if ok { "PASS" } else { "FAIL" };
    let out = match format {
        Format::Json => canonical_json(&json!({
            "letters": q,
            "max_len": max_len,
            "words": listing.iter().map(|(w, b)| json!({ "word": w, "bracket": b })).collect::<Vec<_>>(),
            "counts": counts.iter().map(|(n, got, witt)| json!({ "length": n, "count": got, "witt": witt })).collect::<Vec<_>>(),
            "witt_check": verdict,
        })),
        Format::Table => {
            let rows: Vec<Vec<String>> = listing
                .iter()
                .map(|(w, b)| vec![w.clone(), b.clone()])
                .collect();
            let mut s = table(&["word", "bracket"], &rows);
            let rows: Vec<Vec<String>> = counts
                .iter()
                .map(|(n, got, witt)| vec![n.to_string(), got.to_string(), witt.clone()])
                .collect();
            s.push('\n');
            s.push_str(&table(&["length", "count", "witt"], &rows));
            let _ = writeln!(s, "witt check {verdict}");
            s
        }
    };
    (code, out)
}

fn witness(path: &Path, dims: &[u32], count: usize, assume: bool, format: Format) -> Report {
    let k = load(path)?;
    let spec = spec_for(&k, dims)?;
    let report = classify(&k, assume);
    match report.classification {
        Classification::ConvergesEverywhere => {
            return Err(CliError::Usage(
                "K is the full simplex and has no missing face".into(),
            ))
        }
        Classification::OutsideHypotheses => return Err(TowerError::HypothesisUnverified.into()),
        Classification::IntegralConvergesVhDiverges => {}
    }
    let ws = divergence_witnesses(&k, &spec, count).map_err(|e| match e {
        polytower::convergence::ConvergenceError::Tower(t) => CliError::Tower(t),
        other => CliError::Usage(other.to_string()),
    })?;
    let note = "combinatorial witnesses only: each word gives a sphere factor; no v_h-periodic homotopy is computed";
    let out = match format {
        Format::Json => canonical_json(&json!({
            "report": to_value(&report),
            "dims": dims,
            "witnesses": to_value(&ws),
            "note": note,
        })),
        Format::Table => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "classification {}  certificate {}",
                report.classification.as_str(),
                report.certificate
            );
            if let Some(f) = report.witness_face {
                let _ = writeln!(s, "witness face {f}");
            }
            let rows: Vec<Vec<String>> = ws
                .iter()
                .enumerate()
                .map(|(i, w)| {
                    vec![
                        (i + 1).to_string(),
                        w.labelled_word(),
                        w.weight.to_string(),
                        format!("S^{}", w.sphere_dim),
                    ]
                })
                .collect();
            s.push_str(&table(&["#", "word", "weight", "sphere"], &rows));
            let _ = writeln!(s, "{note}");
            s
        }
    };
    Ok((EXIT_OK, out))
}
