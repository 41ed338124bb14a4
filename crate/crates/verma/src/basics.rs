//! Basic systems `(Φ, i, j)`: classification, standard basic weights,
//! Jantzen-coefficient tables, posets and the simplicity catalog.
//!
//! A basic system is an irreducible `Φ` with `I = Δ∖{α_i}` whose basic
//! weights are the integral weights of `Wϖ_j ∩ Λ_I⁺` (up to a positive
//! multiple).  Only the `k = 1` representatives are enumerated; coefficients
//! of `kλ` agree with those of `λ`.

pub mod golden;

use crate::jantzen::{jantzen_row, theta_expand, FormalVermaSum};
use crate::rootsys::{rat, standard, CartanType, Parabolic, Rational, Realization, TypeLetter, Weight};
use crate::weyl::{orbit_labels, reflect, LabelFrame, DEFAULT_ORBIT_CAP};
use crate::{Error, Result};
use golden::{golden, ListMode, SystemKey};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

/// The vectors `a, b` (and short-root analogues) bounding basic systems:
/// `(Φ, i, j)` basic implies `a_j ≥ b_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundVectors {
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
    pub a_short: Option<Vec<Rational>>,
    pub b_short: Option<Vec<Rational>>,
}

fn max_norm(real: &Realization) -> Rational {
    real.norms.iter().max().cloned().unwrap_or_else(|| rat(0))
}

/// `a_j = (⟨α_j,α_j⟩/2)·ht_j(β₀)` and `b_i = max{0, ⟨ρ,β⟩ : β ∈ Φ_I⁺}`,
/// `I = Δ∖{α_i}`; for non-simply-laced types also the versions built from
/// the highest short root and the short roots of `Φ_I⁺`.
pub fn bound_vectors(kind: CartanType) -> Result<BoundVectors> {
    let real = standard(kind)?;
    let r = real.rank();
    let rho = real.rho();
    let long = max_norm(&real);
    let a_from = |top: usize| -> Vec<Rational> {
        (0..r).map(|j| &real.norms[real.simple[j]] / rat(2) * rat(real.coeffs[top][j])).collect()
    };
    let b_from = |short_only: bool| -> Vec<Rational> {
        (0..r)
            .map(|i| {
                (0..real.num_positive())
                    .filter(|&x| real.coeffs[x][i] == 0 && (!short_only || real.norms[x] < long))
                    .map(|x| rho.dot(&real.roots[x]))
                    .fold(rat(0), |m, v| if v > m { v } else { m })
            })
            .collect()
    };
    let a = a_from(real.highest_root());
    let b = b_from(false);
    if kind.is_simply_laced() {
        return Ok(BoundVectors { a, b, a_short: None, b_short: None });
    }
    let top_short = (0..real.num_positive())
        .filter(|&x| real.norms[x] < long)
        .max_by_key(|&x| real.height(x))
        .ok_or_else(|| Error::Internal("non-simply-laced type without short roots".into()))?;
    Ok(BoundVectors { a, b, a_short: Some(a_from(top_short)), b_short: Some(b_from(true)) })
}

/// All `(i, j)` (1-based) passing the necessary inequalities
/// `a_j ≥ b_i`, `a_i ≥ b_j` and their short-root analogues.
pub fn candidate_basic_systems(kind: CartanType) -> Result<Vec<(usize, usize)>> {
    let bv = bound_vectors(kind)?;
    let r = bv.a.len();
    let ok = |a: &[Rational], b: &[Rational], i: usize, j: usize| a[j] >= b[i] && a[i] >= b[j];
    let mut out = Vec::new();
    for i in 0..r {
        for j in 0..r {
            let long_ok = ok(&bv.a, &bv.b, i, j);
            let short_ok = match (&bv.a_short, &bv.b_short) {
                (Some(a), Some(b)) => ok(a, b, i, j),
                _ => true,
            };
            if long_ok && short_ok {
                out.push((i + 1, j + 1));
            }
        }
    }
    Ok(out)
}

/// Largest rank searched by [`classification`] for the infinite families.
/// The bounds `a_j ≤ 2 < b_i` exclude every larger rank.
pub const CLASSIFICATION_MAX_RANK: usize = 10;

/// Every Cartan type up to [`CLASSIFICATION_MAX_RANK`].
pub fn all_types() -> Vec<CartanType> {
    let mut out = Vec::new();
    for (letter, lo) in [(TypeLetter::A, 1), (TypeLetter::B, 2), (TypeLetter::C, 2), (TypeLetter::D, 4)] {
        for n in lo..=CLASSIFICATION_MAX_RANK {
            out.push(CartanType { letter, rank: n });
        }
    }
    for n in 6..=8 {
        out.push(CartanType { letter: TypeLetter::E, rank: n });
    }
    out.push(CartanType { letter: TypeLetter::F, rank: 4 });
    out.push(CartanType { letter: TypeLetter::G, rank: 2 });
    out
}

/// The basic systems: candidates with at least one basic weight.
pub fn classification() -> Result<Vec<SystemKey>> {
    let mut out = Vec::new();
    for kind in all_types() {
        for (i, j) in candidate_basic_systems(kind)? {
            if !basic_labels(kind, i, j)?.is_empty() {
                out.push((kind, i, j));
            }
        }
    }
    Ok(out)
}

/// Dynkin labels of `Wϖ_j ∩ Λ_I⁺`, `I = Δ∖{α_i}`, unordered.
fn basic_labels(kind: CartanType, i: usize, j: usize) -> Result<Vec<Vec<i64>>> {
    let real = standard(kind)?;
    let r = real.rank();
    if i == 0 || i > r || j == 0 || j > r {
        return Err(Error::NotBasic(format!("({kind},{i},{j}) has an index outside 1..={r}")));
    }
    let mut start = vec![0i64; r];
    start[j - 1] = 1;
    let orbit = orbit_labels(&real, start, DEFAULT_ORBIT_CAP)?;
    Ok(orbit.into_iter().filter(|v| (0..r).all(|m| m == i - 1 || v[m] > 0)).collect())
}

fn lex_desc(a: &Weight, b: &Weight) -> std::cmp::Ordering {
    b.cmp(a)
}

/// Rows of the standard basic weights: `rows[s]` lists `(t, c)` with
/// `c = c(λ^s, λ^t) ≠ 0` as produced from the row of `λ^s`.
fn rows_by_index(real: &Realization, par: &Parabolic, weights: &[Weight]) -> Result<Vec<Vec<(usize, i64)>>> {
    let index: HashMap<&Weight, usize> = weights.iter().enumerate().map(|(k, w)| (w, k)).collect();
    weights
        .iter()
        .map(|w| {
            let row = jantzen_row(real, w, par)?;
            row.entries
                .iter()
                .map(|(mu, &c)| {
                    index
                        .get(mu)
                        .map(|&t| (t, c))
                        .ok_or_else(|| Error::Internal(format!("coefficient target {mu} is not a basic weight")))
                })
                .collect()
        })
        .collect()
}

/// The standard basic weights in an order computed from the weights alone:
/// a topological order of "`μ` occurs in the row of `λ`", ties broken by
/// descending coordinates.
pub fn computed_basic_weights(kind: CartanType, i: usize, j: usize) -> Result<Vec<Weight>> {
    let real = standard(kind)?;
    let frame = LabelFrame::integral(&real);
    let mut weights: Vec<Weight> = basic_labels(kind, i, j)?.iter().map(|v| frame.decode(&real, v)).collect();
    weights.sort_by(lex_desc);
    let par = Parabolic::standard(&real, &[i])?;
    let rows = rows_by_index(&real, &par, &weights)?;
    let n = weights.len();
    let mut indeg = vec![0usize; n];
    for row in &rows {
        for &(t, _) in row {
            indeg[t] += 1;
        }
    }
    // Weights are sorted descending, so the smallest ready index is the
    // lexicographically largest ready weight.
    let mut ready: BTreeSet<usize> = (0..n).filter(|&k| indeg[k] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(s) = ready.pop_first() {
        order.push(s);
        for &(t, _) in &rows[s] {
            indeg[t] -= 1;
            if indeg[t] == 0 {
                ready.insert(t);
            }
        }
    }
    if order.len() != n {
        return Err(Error::Internal(format!("coefficient relation of ({kind},{i},{j}) has a cycle")));
    }
    Ok(order.into_iter().map(|k| weights[k].clone()).collect())
}

/// Where the numbering of a system's basic weights comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Numbering {
    /// The numbering of the embedded reference tables.
    Reference,
    /// [`computed_basic_weights`].
    Computed,
}

/// The standard basic weights, numbered as in the reference tables when
/// those fix a numbering for this system, and by
/// [`computed_basic_weights`] otherwise.
pub fn basic_weights(kind: CartanType, i: usize, j: usize) -> Result<Vec<Weight>> {
    Ok(numbered_weights(kind, i, j)?.0)
}

fn numbered_weights(kind: CartanType, i: usize, j: usize) -> Result<(Vec<Weight>, Numbering)> {
    let computed = computed_basic_weights(kind, i, j)?;
    let Some(block) = golden().weights_of(&(kind, i, j)) else {
        return Ok((computed, Numbering::Computed));
    };
    let listed: BTreeSet<&Weight> = block.weights.iter().collect();
    let found: BTreeSet<&Weight> = computed.iter().collect();
    if listed != found {
        // The reference numbering does not describe this set; keep the
        // computed order and let verification report the difference.
        return Ok((computed, Numbering::Computed));
    }
    Ok((block.weights.clone(), Numbering::Reference))
}

/// Everything computed for one basic system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicSystemRecord {
    pub kind: CartanType,
    pub i: usize,
    pub j: usize,
    /// Standard basic weights `λ^1, λ^2, …`.
    pub weights: Vec<Weight>,
    pub numbering: Numbering,
    /// Nonzero `c_{s,t}` (1-based, `s < t`).
    pub coefficients: BTreeMap<(usize, usize), i64>,
    /// Adjacent pairs `(s, t)`, sorted.
    pub poset: Vec<(usize, usize)>,
    /// 1-based indices of the weights whose module is not simple.
    pub nonsimple: Vec<usize>,
}

impl BasicSystemRecord {
    pub fn key(&self) -> SystemKey {
        (self.kind, self.i, self.j)
    }

    /// Largest `|c_{s,t}|`.
    pub fn max_abs(&self) -> i64 {
        self.coefficients.values().map(|c| c.abs()).max().unwrap_or(0)
    }

    /// Whether `M_I(kλ^s)` is simple (1-based `s`).
    pub fn is_simple(&self, s: usize) -> bool {
        !self.nonsimple.contains(&s)
    }

    /// Graphviz digraph of the poset, edges labelled by coefficients.
    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph \"({},{},{})\" {{\n", self.kind, self.i, self.j);
        for (k, w) in self.weights.iter().enumerate() {
            out.push_str(&format!("  {} [label=\"{}: {}\"];\n", k + 1, k + 1, w));
        }
        for &(s, t) in &self.poset {
            out.push_str(&format!("  {} -> {} [label=\"{}\"];\n", s, t, self.coefficients[&(s, t)]));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for BasicSystemRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.kind, self.i, self.j)
    }
}

/// Coefficient matrix of a numbered weight list.
pub fn coefficient_matrix(kind: CartanType, i: usize, weights: &[Weight]) -> Result<BTreeMap<(usize, usize), i64>> {
    let real = standard(kind)?;
    let par = Parabolic::standard(&real, &[i])?;
    let rows = rows_by_index(&real, &par, weights)?;
    let mut out = BTreeMap::new();
    for (s, row) in rows.iter().enumerate() {
        for &(t, c) in row {
            let key = (s.min(t) + 1, s.max(t) + 1);
            if out.insert(key, c).is_some_and(|old| old != c) {
                return Err(Error::Internal(format!("c{key:?} is produced twice with different values")));
            }
        }
    }
    Ok(out)
}

/// Pairs `(s, t)`, `s < t`, whose coefficient is nonzero and which are not
/// joined by any increasing chain of two or more nonzero coefficients.
pub fn adjacency(n: usize, coefficients: &BTreeMap<(usize, usize), i64>) -> Vec<(usize, usize)> {
    let mut succ = vec![Vec::new(); n + 1];
    for (&(s, t), &c) in coefficients {
        if c != 0 {
            succ[s].push(t);
        }
    }
    // reach[s]: everything reachable from s by a chain of length ≥ 1.
    let mut reach: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n + 1];
    let mut edges = Vec::new();
    for s in (1..=n).rev() {
        let mut long = BTreeSet::new();
        for &u in &succ[s] {
            long.extend(reach[u].iter().copied());
        }
        for &t in &succ[s] {
            if !long.contains(&t) {
                edges.push((s, t));
            }
        }
        let mut all = long;
        all.extend(succ[s].iter().copied());
        reach[s] = all;
    }
    edges.sort_unstable();
    edges
}

fn build_record(kind: CartanType, i: usize, j: usize) -> Result<BasicSystemRecord> {
    let (weights, numbering) = numbered_weights(kind, i, j)?;
    if weights.is_empty() {
        return Err(Error::NotBasic(format!("({kind},{i},{j}) has no basic weights")));
    }
    let coefficients = coefficient_matrix(kind, i, &weights)?;
    let poset = adjacency(weights.len(), &coefficients);
    let mut nonsimple: Vec<usize> = coefficients.keys().map(|&(s, _)| s).collect();
    nonsimple.dedup();
    Ok(BasicSystemRecord { kind, i, j, weights, numbering, coefficients, poset, nonsimple })
}

type Catalog = Mutex<HashMap<SystemKey, Arc<BasicSystemRecord>>>;

/// The record of `(kind, i, j)`, computed once per process.
pub fn basic_jantzen_table(kind: CartanType, i: usize, j: usize) -> Result<Arc<BasicSystemRecord>> {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    let cache = CATALOG.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (kind, i, j);
    if let Some(rec) = cache.lock().expect("catalog poisoned").get(&key) {
        return Ok(Arc::clone(rec));
    }
    let rec = Arc::new(build_record(kind, i, j)?);
    Ok(Arc::clone(cache.lock().expect("catalog poisoned").entry(key).or_insert(rec)))
}

/// Poset edges of a basic system.
pub fn basic_poset(kind: CartanType, i: usize, j: usize) -> Result<Vec<(usize, usize)>> {
    Ok(basic_jantzen_table(kind, i, j)?.poset.clone())
}

/// Records of every basic system.
pub fn simplicity_catalog() -> Result<Vec<Arc<BasicSystemRecord>>> {
    classification()?.into_iter().map(|(k, i, j)| basic_jantzen_table(k, i, j)).collect()
}

/// Whether `M_I(kλ)` is simple for the standard basic weight with the given
/// Dynkin labels in the standard realization of `kind`.
pub fn catalog_is_simple(kind: CartanType, i: usize, j: usize, labels: &[i64]) -> Result<bool> {
    let rec = basic_jantzen_table(kind, i, j)?;
    let real = standard(kind)?;
    let w = LabelFrame::integral(&real).decode(&real, labels);
    let s = rec
        .weights
        .iter()
        .position(|x| *x == w)
        .ok_or_else(|| Error::NotBasic(format!("{w} is not a standard basic weight of {rec}")))?;
    Ok(rec.is_simple(s + 1))
}

/// One comparison against the reference data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), ok, detail: detail.into() }
    }
}

/// Outcome of a verification run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn extend(&mut self, other: VerifyReport) {
        self.checks.extend(other.checks);
    }
}

fn relabel_note(r: &golden::Relabel) -> String {
    if r.is_identity() {
        String::new()
    } else {
        format!(" (block numbering differs from the weight list by {r})")
    }
}

fn key_name(key: &SystemKey) -> String {
    format!("({},{},{})", key.0, key.1, key.2)
}

/// Weight-list tables 1–10: the computed set equals the listed set, and the
/// listed numbering is compatible with the coefficient relation (a weight
/// only produces weights with larger numbers).
pub fn verify_weights(table: u32) -> Result<VerifyReport> {
    let block = golden().weight_table(table).ok_or_else(|| Error::Parse(format!("no weight table {table}")))?;
    let (kind, i, j) = block.key;
    let computed = computed_basic_weights(kind, i, j)?;
    let a: BTreeSet<&Weight> = computed.iter().collect();
    let b: BTreeSet<&Weight> = block.weights.iter().collect();
    let name = format!("table {table} {}", key_name(&block.key));
    let mut report = VerifyReport::default();
    let detail = if a == b {
        format!("{} weights", a.len())
    } else {
        format!("computed {} weights, listed {}; {} missing, {} extra", a.len(), b.len(), b.difference(&a).count(), a.difference(&b).count())
    };
    report.checks.push(Check::new(format!("{name} weights"), a == b, detail));
    if a == b {
        let real = standard(kind)?;
        let par = Parabolic::standard(&real, &[i])?;
        let rows = rows_by_index(&real, &par, &block.weights)?;
        let bad: Vec<(usize, usize)> =
            rows.iter().enumerate().flat_map(|(s, r)| r.iter().filter(move |(t, _)| *t < s).map(move |(t, _)| (s + 1, t + 1))).collect();
        report.checks.push(Check::new(format!("{name} numbering"), bad.is_empty(), format!("{} order violations", bad.len())));
    }
    Ok(report)
}

/// Weight lists without a table number (small systems).
pub fn verify_untabled_weights() -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    for block in golden().weights.iter().filter(|b| b.table.is_none()) {
        let (kind, i, j) = block.key;
        let computed = computed_basic_weights(kind, i, j)?;
        let a: BTreeSet<&Weight> = computed.iter().collect();
        let b: BTreeSet<&Weight> = block.weights.iter().collect();
        report.checks.push(Check::new(format!("weights {}", key_name(&block.key)), a == b, format!("{} computed, {} listed", a.len(), b.len())));
    }
    Ok(report)
}

/// Coefficient tables 11–15.
pub fn verify_coefficients(table: u32) -> Result<VerifyReport> {
    let blocks = golden().coeff_tables(table);
    if blocks.is_empty() {
        return Err(Error::Parse(format!("no coefficient table {table}")));
    }
    let mut report = VerifyReport::default();
    for block in blocks {
        let (kind, i, j) = block.key;
        let rec = basic_jantzen_table(kind, i, j)?;
        let computed: BTreeMap<(usize, usize), i64> =
            rec.coefficients.iter().map(|(&k, &c)| (block.relabel.map_pair(k), c)).collect();
        let ok = rec.numbering == Numbering::Reference && computed == block.entries;
        let diff = computed.iter().filter(|(k, v)| block.entries.get(k) != Some(v)).count()
            + block.entries.keys().filter(|k| !computed.contains_key(k)).count();
        report.checks.push(Check::new(
            format!("table {table} {}", key_name(&block.key)),
            ok,
            format!(
                "{} nonzero coefficients computed, {} listed, {} differ{}",
                computed.len(),
                block.entries.len(),
                diff,
                relabel_note(&block.relabel)
            ),
        ));
    }
    Ok(report)
}

/// Posets of Figures 1–4.
pub fn verify_figures() -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    for block in &golden().posets {
        let (kind, i, j) = block.key;
        let rec = basic_jantzen_table(kind, i, j)?;
        let mut computed: Vec<(usize, usize)> = rec.poset.iter().map(|&e| block.relabel.map_pair(e)).collect();
        computed.sort_unstable();
        report.checks.push(Check::new(
            format!("figure {} {}", block.figure, key_name(&block.key)),
            rec.numbering == Numbering::Reference && computed == block.edges,
            format!("{} edges computed, {} listed{}", computed.len(), block.edges.len(), relabel_note(&block.relabel)),
        ));
    }
    Ok(report)
}

/// Computed data for one classical summary row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummaryCheck {
    pub psi_plus_plus: Vec<Weight>,
    /// `Σ_{β ∈ Ψ⁺⁺} θ(s_β λ)` fully expanded.
    pub theta_sum: FormalVermaSum,
    pub simple: bool,
}

/// Ψ⁺⁺, the expanded θ-sum and the verdict for `λ` in `(kind, i, ·)`.
pub fn summary_row(kind: CartanType, i: usize, w: &Weight) -> Result<SummaryCheck> {
    let real = standard(kind)?;
    let par = Parabolic::standard(&real, &[i])?;
    let psi = crate::jantzen::psi_sets(&real, w, &par)?;
    let mut theta_sum = FormalVermaSum::new();
    for &beta in &psi.psi_plus_plus {
        for (mu, c) in theta_expand(&real, &reflect(&real, w, beta), &par)? {
            *theta_sum.entry(mu).or_insert(0) += c;
        }
    }
    theta_sum.retain(|_, c| *c != 0);
    let mut psi_plus_plus: Vec<Weight> = psi.psi_plus_plus.iter().map(|&b| real.roots[b].clone()).collect();
    psi_plus_plus.sort();
    let simple = crate::jantzen::is_simple(&real, w, &par)?.0;
    Ok(SummaryCheck { psi_plus_plus, theta_sum, simple })
}

/// Table 16.
pub fn verify_summary() -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    for row in &golden().summary {
        let (kind, i, j) = row.key;
        let got = summary_row(kind, i, &row.weight)?;
        let mut want = row.psi_plus_plus.clone();
        want.sort();
        let is_basic = basic_weights(kind, i, j)?.contains(&row.weight);
        let ok = is_basic && got.psi_plus_plus == want && got.theta_sum.is_empty() == row.theta_sum_zero && got.simple == row.simple;
        report.checks.push(Check::new(
            format!("table 16 {} {}", key_name(&row.key), row.weight),
            ok,
            format!(
                "basic={is_basic} |Ψ⁺⁺|={} θ-sum={} simple={}",
                got.psi_plus_plus.len(),
                if got.theta_sum.is_empty() { "zero" } else { "nonzero" },
                got.simple
            ),
        ));
    }
    Ok(report)
}

/// The classification against the reference list.
pub fn verify_classification() -> Result<VerifyReport> {
    let got: BTreeSet<SystemKey> = classification()?.into_iter().collect();
    let want: BTreeSet<SystemKey> = golden().classification.iter().copied().collect();
    let detail = format!(
        "{} computed, {} listed; missing {:?}; extra {:?}",
        got.len(),
        want.len(),
        want.difference(&got).map(key_name).collect::<Vec<_>>(),
        got.difference(&want).map(key_name).collect::<Vec<_>>()
    );
    Ok(VerifyReport { checks: vec![Check::new("classification", got == want, detail)] })
}

/// Non-simple weights per basic system against the reference lists;
/// systems without a list are entirely simple.
pub fn verify_nonsimple() -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    for rec in simplicity_catalog()? {
        let got: BTreeSet<&Weight> = rec.nonsimple.iter().map(|&s| &rec.weights[s - 1]).collect();
        let want: BTreeSet<&Weight> = match golden().nonsimple_of(&rec.key()) {
            None => BTreeSet::new(),
            Some(b) => {
                let listed: BTreeSet<&Weight> = b.weights.iter().collect();
                match b.mode {
                    ListMode::Only => listed,
                    ListMode::Except => rec.weights.iter().filter(|w| !listed.contains(w)).collect(),
                }
            }
        };
        report.checks.push(Check::new(
            format!("non-simple {rec}"),
            got == want,
            format!("{} of {} weights non-simple", got.len(), rec.weights.len()),
        ));
    }
    Ok(report)
}

/// A selection of reference tables to verify.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableSelection {
    All,
    Table(u32),
    Figures,
}

impl std::str::FromStr for TableSelection {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(TableSelection::All),
            "figures" => Ok(TableSelection::Figures),
            _ => match s.parse::<u32>() {
                Ok(n) if (1..=16).contains(&n) => Ok(TableSelection::Table(n)),
                _ => Err(Error::Parse(format!("table selection must be all, figures or 1..=16, got {s:?}"))),
            },
        }
    }
}

/// Recomputes the selected reference data.
pub fn verify(sel: TableSelection) -> Result<VerifyReport> {
    match sel {
        TableSelection::Table(n @ 1..=10) => verify_weights(n),
        TableSelection::Table(n @ 11..=15) => verify_coefficients(n),
        TableSelection::Table(16) => verify_summary(),
        TableSelection::Table(n) => Err(Error::Parse(format!("no table {n}"))),
        TableSelection::Figures => verify_figures(),
        TableSelection::All => {
            let mut report = VerifyReport::default();
            for n in 1..=16 {
                report.extend(verify(TableSelection::Table(n))?);
            }
            report.extend(verify_untabled_weights()?);
            report.extend(verify_figures()?);
            report.extend(verify_classification()?);
            report.extend(verify_nonsimple()?);
            Ok(report)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::ratio;

    fn t(s: &str) -> CartanType {
        s.parse().unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn bound_vectors_of_exceptional_types() {
        let e8 = bound_vectors(t("E8")).unwrap();
        assert_eq!(e8.a, ints(&[2, 3, 4, 6, 5, 4, 3, 2]));
        assert_eq!(e8.b, ints(&[11, 7, 6, 4, 4, 7, 11, 17]));
        let e7 = bound_vectors(t("E7")).unwrap();
        assert_eq!(e7.b, ints(&[9, 6, 5, 3, 4, 7, 11]));
        let f4 = bound_vectors(t("F4")).unwrap();
        assert_eq!(f4.a, ints(&[2, 3, 2, 1]));
        assert_eq!(f4.b, ints(&[3, 1, 2, 4]));
        assert_eq!(f4.a_short.unwrap(), vec![rat(1), rat(2), ratio(3, 2), rat(1)]);
        assert_eq!(f4.b_short.unwrap(), vec![ratio(5, 2), rat(1), ratio(1, 2), ratio(5, 2)]);
        let a5 = bound_vectors(t("A5")).unwrap();
        assert_eq!(a5.a, ints(&[1; 5]));
        assert_eq!(a5.b, ints(&[4, 3, 2, 3, 4]));
        assert_eq!(bound_vectors(t("B4")).unwrap().a, ints(&[1, 2, 2, 1]));
        assert_eq!(bound_vectors(t("C4")).unwrap().a, ints(&[2, 2, 2, 2]));
    }

    #[test]
    fn candidates() {
        assert_eq!(candidate_basic_systems(t("A3")).unwrap(), vec![(2, 2)]);
        assert_eq!(candidate_basic_systems(t("D4")).unwrap(), vec![(2, 2)]);
        assert_eq!(candidate_basic_systems(t("F4")).unwrap(), vec![(2, 2), (2, 3), (3, 2), (3, 3)]);
        assert_eq!(candidate_basic_systems(t("E6")).unwrap(), vec![(4, 4)]);
        assert_eq!(candidate_basic_systems(t("E7")).unwrap(), vec![(4, 4), (4, 5), (5, 4)]);
        assert_eq!(candidate_basic_systems(t("E8")).unwrap(), vec![(3, 4), (4, 3), (4, 4), (4, 5), (5, 4), (5, 5)]);
        assert!(candidate_basic_systems(t("A4")).unwrap().is_empty());
    }

    #[test]
    fn small_basic_weights() {
        let w = |v: &[i64]| Weight::from_ints(v);
        assert_eq!(basic_weights(t("G2"), 1, 1).unwrap(), vec![w(&[-1, 1, 0]), w(&[-1, 0, 1])]);
        assert_eq!(basic_weights(t("B3"), 2, 2).unwrap(), vec![w(&[1, 0, 1]), w(&[0, -1, 1])]);
        let e7 = basic_weights(t("E7"), 4, 4).unwrap();
        assert_eq!(e7.len(), 6);
        assert_eq!(e7[0], Weight::parse("1/2,3/2,-3/2,-1/2,1/2,3/2,-3/2,3/2").unwrap());
        assert!(basic_weights(t("C3"), 3, 3).unwrap().is_empty());
    }

    #[test]
    fn tables_and_posets_of_small_systems() {
        let a1 = basic_jantzen_table(t("A1"), 1, 1).unwrap();
        assert_eq!(a1.coefficients, BTreeMap::from([((1, 2), 1)]));
        assert_eq!(a1.poset, vec![(1, 2)]);
        let b2 = basic_jantzen_table(t("B2"), 1, 2).unwrap();
        assert!(b2.coefficients.is_empty() && b2.poset.is_empty());
        let e7 = basic_jantzen_table(t("E7"), 4, 4).unwrap();
        assert_eq!(e7.coefficients[&(1, 6)], 2);
        assert_eq!(e7.coefficients[&(3, 4)], 2);
        assert_eq!(e7.coefficients[&(1, 5)], -1);
        assert_eq!(e7.poset, vec![(1, 3), (2, 3), (3, 4), (4, 5), (4, 6)]);
        assert!(e7.to_dot().contains("3 -> 4 [label=\"2\"]"));
    }

    #[test]
    fn adjacency_drops_shortcuts() {
        let c = BTreeMap::from([((1, 2), 1), ((2, 3), 1), ((1, 3), -1), ((3, 4), 1)]);
        assert_eq!(adjacency(4, &c), vec![(1, 2), (2, 3), (3, 4)]);
        assert!(adjacency(3, &BTreeMap::new()).is_empty());
    }

    #[test]
    fn catalog_lookup() {
        let real = standard(t("B3")).unwrap();
        let labels = |w: &Weight| -> Vec<i64> { LabelFrame::new(&real, w).unwrap().1 };
        assert!(!catalog_is_simple(t("B3"), 2, 2, &labels(&Weight::from_ints(&[1, 0, 1]))).unwrap());
        assert!(catalog_is_simple(t("B3"), 2, 2, &labels(&Weight::from_ints(&[0, -1, 1]))).unwrap());
        assert!(catalog_is_simple(t("B3"), 2, 2, &labels(&Weight::from_ints(&[1, 1, 0]))).is_err());
    }

    #[test]
    fn table_selection_parses() {
        assert_eq!("all".parse::<TableSelection>().unwrap(), TableSelection::All);
        assert_eq!("7".parse::<TableSelection>().unwrap(), TableSelection::Table(7));
        assert!("17".parse::<TableSelection>().is_err());
        assert!("x".parse::<TableSelection>().is_err());
    }
}
