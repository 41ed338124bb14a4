//! Command-line front end.
//!
//! Every command prints line-oriented records: one record per line, made of
//! `key=value` fields separated by single spaces, with keys in sorted order.
//! Values never contain spaces; the characters `%`, space, `=`, tab and
//! newline are percent-encoded.  Weights are written `(a,b,…)` with
//! rational entries `p/q`, and lists inside a value are separated by `;`.
//!
//! Exit codes: 0 on success, 1 for parse errors, invalid input and failed
//! verifications, 2 for internal invariant violations and overflow.

use crate::basics::golden::parse_root_expr;
use crate::basics::{basic_jantzen_table, classification, verify, TableSelection};
use crate::classical::classical_is_simple;
use crate::jantzen::{is_simple, jantzen_row, psi_sets};
use crate::reduction::{basic_triple, reduce, simple_via_reduction, triple_is_simple, Decider};
use crate::rootsys::{parse_rational, standard, CartanType, Parabolic, Realization, TypeLetter, Weight};
use crate::weyl::is_in_lambda_i_plus;
use crate::{Error, Result};
use clap::{Args, Parser, Subcommand};
use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

/// Jantzen coefficients and simplicity of generalized Verma modules.
#[derive(Parser, Debug)]
#[command(name = "verma", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide simplicity with the Jantzen criterion and the reduction, and
    /// report a witness when the module is not simple.
    Simple(InstanceArgs),
    /// Print the Jantzen coefficient row with its contributing roots.
    Coeffs(InstanceArgs),
    /// Run the reduction chain for one root of Ψ⁺.
    Reduce {
        #[command(flatten)]
        instance: InstanceArgs,
        /// The root, as coordinates (`0,1,1`) or an expression (`e2+e3`).
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
    },
    /// Basic weights, coefficient table and poset of basic systems.
    Basics(BasicsArgs),
    /// Recompute the embedded reference tables and report differences.
    Verify {
        /// `all`, a table number 1–16, or `figures`.
        #[arg(long, default_value = "all")]
        tables: String,
    },
    /// Run one instance per line of a file:
    /// `B8; crossed=2,5; lambda=2,1,2,-1,-3,4,2,1; cmd=simple`.
    Batch {
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Args, Debug, Clone)]
pub struct InstanceArgs {
    /// Cartan type, such as `B8` or `E6`.
    pub system: String,
    /// Crossed Bourbaki indices Δ∖I, comma separated (empty for I = Δ).
    #[arg(long, conflicts_with = "included")]
    pub crossed: Option<String>,
    /// Included Bourbaki indices I, comma separated.
    #[arg(long)]
    pub included: Option<String>,
    /// λ in ambient coordinates, comma separated integers or `p/q`.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
}

#[derive(Args, Debug, Clone)]
pub struct BasicsArgs {
    /// Cartan type of the basic system.
    #[arg(long, required_unless_present = "all", requires_all = ["i", "j"])]
    pub system: Option<String>,
    /// The crossed node `i`.
    #[arg(long)]
    pub i: Option<usize>,
    /// The fundamental weight index `j`.
    #[arg(long)]
    pub j: Option<usize>,
    /// Summarize every basic system of the classification.
    #[arg(long, conflicts_with = "system")]
    pub all: bool,
    /// Emit the poset as a Graphviz digraph instead of a record.
    #[arg(long, conflicts_with = "all")]
    pub dot: bool,
}

/// One output line: sorted `key=value` fields.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Record(pub BTreeMap<String, String>);

impl Record {
    pub fn new() -> Self {
        Record::default()
    }

    pub fn set(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.0.insert(key.to_string(), value.to_string());
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.get(key).map(String::as_str)
    }

    /// Parses a line produced by [`Record`]'s `Display`.
    pub fn parse(line: &str) -> Result<Record> {
        let mut out = BTreeMap::new();
        for field in line.split(' ').filter(|f| !f.is_empty()) {
            let (k, v) = field.split_once('=').ok_or_else(|| Error::Parse(format!("field without '=': {field:?}")))?;
            if out.insert(unescape(k)?, unescape(v)?).is_some() {
                return Err(Error::Parse(format!("duplicate key {k:?}")));
            }
        }
        Ok(Record(out))
    }
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '%' => out.push_str("%25"),
            ' ' => out.push_str("%20"),
            '=' => out.push_str("%3D"),
            '\t' => out.push_str("%09"),
            '\n' => out.push_str("%0A"),
            c => out.push(c),
        }
    }
    out
}

fn unescape(s: &str) -> Result<String> {
    let mut out = String::with_capacity(s.len());
    let mut rest = s;
    while let Some(p) = rest.find('%') {
        out.push_str(&rest[..p]);
        let code = rest.get(p + 1..p + 3).ok_or_else(|| Error::Parse(format!("truncated escape in {s:?}")))?;
        let byte = u8::from_str_radix(code, 16).map_err(|_| Error::Parse(format!("bad escape %{code} in {s:?}")))?;
        out.push(char::from(byte));
        rest = &rest[p + 3..];
    }
    out.push_str(rest);
    Ok(out)
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, v) in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{}={}", escape(k), escape(v))?;
        }
        Ok(())
    }
}

/// How the Levi part was given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeviSpec {
    Crossed(Vec<usize>),
    Included(Vec<usize>),
}

/// A parsed instance `(Φ, I, λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceSpec {
    pub system: CartanType,
    pub levi: LeviSpec,
    pub lambda: Weight,
}

fn parse_indices(text: &str, what: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .enumerate()
        .map(|(k, t)| t.parse().map_err(|_| Error::Parse(format!("{what} entry {}: not an index: {t:?}", k + 1))))
        .collect()
}

fn parse_lambda(text: &str) -> Result<Weight> {
    parse_lambda_at(text, 1)
}

/// Parses a coordinate list whose first character sits at `column`; errors
/// name the entry and its column.
fn parse_lambda_at(text: &str, column: usize) -> Result<Weight> {
    let mut out = Vec::new();
    let mut col = column;
    for (k, t) in text.split(',').enumerate() {
        let lead = t.len() - t.trim_start().len();
        out.push(parse_rational(t).map_err(|_| {
            Error::Parse(format!("lambda entry {} at column {}: not a rational literal: {:?}", k + 1, col + lead, t.trim()))
        })?);
        col += t.chars().count() + 1;
    }
    Ok(Weight(out))
}

impl InstanceSpec {
    pub fn from_args(args: &InstanceArgs) -> Result<Self> {
        let system: CartanType = args.system.parse()?;
        let levi = match (&args.crossed, &args.included) {
            (_, Some(inc)) => LeviSpec::Included(parse_indices(inc, "included")?),
            (Some(c), None) => LeviSpec::Crossed(parse_indices(c, "crossed")?),
            (None, None) => LeviSpec::Crossed(Vec::new()),
        };
        Ok(InstanceSpec { system, levi, lambda: parse_lambda(&args.lambda)? })
    }

    /// The ambient realization and the parabolic, after validating
    /// dimensions, indices and `λ ∈ Λ_I⁺`.
    pub fn resolve(&self) -> Result<(std::sync::Arc<Realization>, Parabolic)> {
        let real = standard(self.system)?;
        real.check_dim(&self.lambda)?;
        let par = match &self.levi {
            LeviSpec::Crossed(c) => Parabolic::standard(&real, c)?,
            LeviSpec::Included(i) => Parabolic::from_included(&real, i)?,
        };
        if !is_in_lambda_i_plus(&real, &self.lambda, &par) {
            return Err(Error::NotInLambdaIPlus);
        }
        Ok((real, par))
    }

    fn echo(&self, rec: &mut Record, par: &Parabolic) {
        rec.set("system", self.system)
            .set("crossed", join(par.crossed.iter(), ","))
            .set("lambda", &self.lambda);
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn root_text(real: &Realization, r: usize) -> String {
    real.roots[r].to_string()
}

fn roots_text(real: &Realization, roots: &[usize]) -> String {
    join(roots.iter().map(|&r| root_text(real, r)), ";")
}

/// `simple`: the Jantzen criterion, the reduction (with both basic-system
/// deciders) and, for classical types, the closed form, which must agree.
pub fn cmd_simple(spec: &InstanceSpec) -> Result<Record> {
    let (real, par) = spec.resolve()?;
    let (simple, witness) = is_simple(&real, &spec.lambda, &par)?;
    let verdict = simple_via_reduction(&real, &spec.lambda, &par, Decider::Both)?;
    if verdict.simple != simple {
        return Err(Error::Internal("the Jantzen criterion and the reduction disagree".into()));
    }
    let mut rec = Record::new();
    rec.set("cmd", "simple");
    spec.echo(&mut rec, &par);
    if matches!(spec.system.letter, TypeLetter::A | TypeLetter::B | TypeLetter::C | TypeLetter::D) {
        let closed = classical_is_simple(&real, &par, &spec.lambda)?;
        if closed != simple {
            return Err(Error::Internal("the closed-form criterion disagrees".into()));
        }
        rec.set("classical", closed);
    }
    let psi = psi_sets(&real, &spec.lambda, &par)?;
    let row = jantzen_row(&real, &spec.lambda, &par)?;
    let mut nonvanishing: Vec<usize> =
        row.entries.keys().flat_map(|mu| row.contributors[mu].iter().map(|&(b, _)| b)).collect();
    nonvanishing.sort_unstable();
    rec.set("simple", simple)
        .set("nonvanishing", roots_text(&real, &nonvanishing))
        .set("psi_plus", roots_text(&real, &psi.psi_plus))
        .set("psi_plus_plus", roots_text(&real, &psi.psi_plus_plus))
        .set(
            "basic_systems",
            join(
                verdict.roots.iter().map(|r| {
                    format!(
                        "{}@{}@{}",
                        root_text(&real, r.beta),
                        r.triple.label,
                        if r.simple { "simple" } else { "nonsimple" }
                    )
                }),
                ";",
            ),
        );
    if let Some(w) = witness {
        rec.set("witness_beta", root_text(&real, w.beta))
            .set("witness_target", &w.target)
            .set("witness_coefficient", w.coefficient);
    }
    Ok(rec)
}

/// `coeffs`: the full row, sorted by target weight, with contributors.
pub fn cmd_coeffs(spec: &InstanceSpec) -> Result<Record> {
    let (real, par) = spec.resolve()?;
    let row = jantzen_row(&real, &spec.lambda, &par)?;
    let mut rec = Record::new();
    rec.set("cmd", "coeffs");
    spec.echo(&mut rec, &par);
    rec.set("entries", row.entries.len())
        .set("row", join(row.entries.iter().map(|(mu, c)| format!("{mu}:{c}")), ";"))
        .set(
            "contributors",
            join(
                row.contributors.iter().map(|(mu, who)| {
                    format!("{mu}<-{}", join(who.iter().map(|&(b, s)| format!("{}:{s:+}", root_text(&real, b))), "&"))
                }),
                ";",
            ),
        );
    Ok(rec)
}

/// Parses a root given as coordinates or as an `e`-expression.
pub fn parse_root(real: &Realization, text: &str) -> Result<usize> {
    let w = if text.contains('e') { parse_root_expr(text, real.dim)? } else { parse_lambda(text)? };
    real.check_dim(&w)?;
    real.root_index(&w).ok_or_else(|| Error::Parse(format!("{text:?} is not a root")))
}

/// `reduce`: the chain `Φ_[λ] ⊇ Φ_1(β) ⊇ …` and the basic system reached.
pub fn cmd_reduce(spec: &InstanceSpec, beta: &str) -> Result<Record> {
    let (real, par) = spec.resolve()?;
    let b = parse_root(&real, beta)?;
    let trace = reduce(&real, &spec.lambda, &par, b)?;
    let triple = basic_triple(&real, &spec.lambda, &par, &trace)?;
    let simple = triple_is_simple(&real, &triple, Decider::Both)?;
    let mut rec = Record::new();
    rec.set("cmd", "reduce");
    spec.echo(&mut rec, &par);
    rec.set("beta", root_text(&real, b))
        .set("start_roots", trace.start.len())
        .set("chain", join(trace.steps.iter().map(|s| format!("{}:{}", s.rule, s.result.len())), ";"))
        .set("terminal", roots_text(&real, &trace.terminal.positive(&real)))
        .set("label", &triple.label)
        .set("variants", join(triple.label.variants.iter().map(|(i, j)| format!("({i},{j})")), ";"))
        .set("scale", triple.label.k)
        .set("standard_labels", join(&triple.standard_labels, ","))
        .set("simple", simple);
    Ok(rec)
}

/// Output of `basics`: records, or DOT text.
pub enum BasicsOutput {
    Records(Vec<Record>),
    Dot(String),
}

/// `basics`: one system in full, or a summary of all of them.
pub fn cmd_basics(args: &BasicsArgs) -> Result<BasicsOutput> {
    if args.all {
        let mut out = Vec::new();
        for (kind, i, j) in classification()? {
            let t = basic_jantzen_table(kind, i, j)?;
            let mut rec = Record::new();
            rec.set("cmd", "basics")
                .set("system", kind)
                .set("i", i)
                .set("j", j)
                .set("weights", t.weights.len())
                .set("nonzero", t.coefficients.len())
                .set("edges", t.poset.len())
                .set("max_abs", t.max_abs())
                .set("nonsimple", join(&t.nonsimple, ","));
            out.push(rec);
        }
        return Ok(BasicsOutput::Records(out));
    }
    let kind: CartanType = args.system.as_deref().unwrap_or_default().parse()?;
    let (i, j) = (args.i.unwrap_or(0), args.j.unwrap_or(0));
    let t = basic_jantzen_table(kind, i, j)?;
    if args.dot {
        return Ok(BasicsOutput::Dot(t.to_dot()));
    }
    let mut rec = Record::new();
    rec.set("cmd", "basics")
        .set("system", kind)
        .set("i", i)
        .set("j", j)
        .set("numbering", format!("{:?}", t.numbering).to_lowercase())
        .set("weights", join(&t.weights, ";"))
        .set("coefficients", join(t.coefficients.iter().map(|((s, u), c)| format!("{s},{u}:{c}")), ";"))
        .set("poset", join(t.poset.iter().map(|(s, u)| format!("{s}->{u}")), ";"))
        .set("max_abs", t.max_abs())
        .set("nonsimple", join(&t.nonsimple, ","));
    Ok(BasicsOutput::Records(vec![rec]))
}

/// `verify`: one record per check and a closing summary.
pub fn cmd_verify(tables: &str) -> Result<(Vec<Record>, bool)> {
    let sel: TableSelection = tables.parse()?;
    let report = verify(sel)?;
    let mut out: Vec<Record> = report
        .checks
        .iter()
        .map(|c| {
            let mut r = Record::new();
            r.set("check", &c.name).set("status", if c.ok { "pass" } else { "fail" }).set("detail", &c.detail);
            r
        })
        .collect();
    let failed = report.checks.iter().filter(|c| !c.ok).count();
    let mut summary = Record::new();
    summary.set("verify", tables).set("checks", report.checks.len()).set("failed", failed);
    out.push(summary);
    Ok((out, failed == 0))
}

/// One parsed batch line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BatchLine {
    pub spec: InstanceSpec,
    pub cmd: String,
    pub beta: Option<String>,
}

/// Parses `B8; crossed=2,5; lambda=2,1,2,-1,-3,4,2,1; cmd=simple`.
/// Errors carry the 1-based column of the offending field.
pub fn parse_batch_line(line: &str) -> Result<BatchLine> {
    let mut fields = Vec::new();
    let mut column = 1;
    for part in line.split(';') {
        let lead = part.len() - part.trim_start().len();
        fields.push((column + lead, part.trim()));
        column += part.chars().count() + 1;
    }
    let at = |col: usize, e: Error| match e {
        Error::Parse(m) => Error::Parse(format!("column {col}: {m}")),
        Error::InvalidType(m) => Error::Parse(format!("column {col}: invalid root system type {m}")),
        other => other,
    };
    let (col0, system) = fields[0];
    let system: CartanType = system.parse().map_err(|e| at(col0, e))?;
    let mut levi = None;
    let mut lambda = None;
    let mut cmd = None;
    let mut beta = None;
    for &(col, field) in &fields[1..] {
        if field.is_empty() {
            continue;
        }
        let (k, v) = field.split_once('=').ok_or_else(|| at(col, Error::Parse(format!("expected key=value, got {field:?}"))))?;
        match k.trim() {
            "crossed" => levi = Some(LeviSpec::Crossed(parse_indices(v, "crossed").map_err(|e| at(col, e))?)),
            "included" => levi = Some(LeviSpec::Included(parse_indices(v, "included").map_err(|e| at(col, e))?)),
            "lambda" => lambda = Some(parse_lambda_at(v, col + k.len() + 1)?),
            "cmd" => cmd = Some(v.trim().to_string()),
            "beta" => beta = Some(v.trim().to_string()),
            other => return Err(at(col, Error::Parse(format!("unknown key {other:?}")))),
        }
    }
    let lambda = lambda.ok_or_else(|| Error::Parse("missing lambda=".into()))?;
    let cmd = cmd.unwrap_or_else(|| "simple".into());
    if !matches!(cmd.as_str(), "simple" | "coeffs" | "reduce") {
        return Err(Error::Parse(format!("unknown cmd {cmd:?}")));
    }
    if cmd == "reduce" && beta.is_none() {
        return Err(Error::Parse("cmd=reduce needs beta=".into()));
    }
    Ok(BatchLine { spec: InstanceSpec { system, levi: levi.unwrap_or(LeviSpec::Crossed(Vec::new())), lambda }, cmd, beta })
}

fn run_batch_line(line: &BatchLine) -> Result<Record> {
    match line.cmd.as_str() {
        "simple" => cmd_simple(&line.spec),
        "coeffs" => cmd_coeffs(&line.spec),
        _ => cmd_reduce(&line.spec, line.beta.as_deref().unwrap_or_default()),
    }
}

/// Exit status for a library error.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Internal(_) | Error::Overflow | Error::OrbitTooLarge { .. } | Error::OracleCapExceeded { .. } => 2,
        _ => 1,
    }
}

fn error_record(e: &Error) -> Record {
    let mut r = Record::new();
    r.set("error", e).set("exit", exit_code(e));
    r
}

/// `batch`: one record per non-empty, non-`#` line, in input order.
/// Returns the records and the worst exit status.
pub fn cmd_batch(text: &str) -> (Vec<Record>, u8) {
    let mut out = Vec::new();
    let mut status = 0;
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut rec = match parse_batch_line(line).and_then(|l| run_batch_line(&l)) {
            Ok(r) => r,
            Err(e) => {
                status = status.max(exit_code(&e));
                error_record(&e)
            }
        };
        rec.set("line", n + 1);
        out.push(rec);
    }
    (out, status)
}

fn emit(out: &mut dyn Write, records: &[Record]) -> std::io::Result<()> {
    for r in records {
        writeln!(out, "{r}")?;
    }
    Ok(())
}

/// Runs a parsed command line, writing to `out`; returns the exit status.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let result: Result<u8> = (|| {
        let (records, status) = match &cli.command {
            Command::Simple(a) => (vec![cmd_simple(&InstanceSpec::from_args(a)?)?], 0),
            Command::Coeffs(a) => (vec![cmd_coeffs(&InstanceSpec::from_args(a)?)?], 0),
            Command::Reduce { instance, beta } => (vec![cmd_reduce(&InstanceSpec::from_args(instance)?, beta)?], 0),
            Command::Basics(a) => match cmd_basics(a)? {
                BasicsOutput::Records(r) => (r, 0),
                BasicsOutput::Dot(d) => {
                    write!(out, "{d}").map_err(|e| Error::Internal(e.to_string()))?;
                    (Vec::new(), 0)
                }
            },
            Command::Verify { tables } => {
                let (r, ok) = cmd_verify(tables)?;
                (r, if ok { 0 } else { 1 })
            }
            Command::Batch { file } => {
                let text = std::fs::read_to_string(file)
                    .map_err(|e| Error::Parse(format!("cannot read {}: {e}", file.display())))?;
                cmd_batch(&text)
            }
        };
        emit(out, &records).map_err(|e| Error::Internal(e.to_string()))?;
        Ok(status)
    })();
    match result {
        Ok(s) => s,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Entry point used by the binary.
pub fn main_entry() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    ExitCode::from(run(&cli, &mut stdout.lock(), &mut stderr.lock()))
}
