//! Parser for the embedded golden fixture `data/golden-v1.txt`.
//!
//! The format is line oriented; see `data/FORMAT.md`.

use crate::rootsys::{rat, CartanType, Weight};
use crate::{Error, Result};
use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

/// Raw text of the shipped fixture.
pub const GOLDEN_V1: &str = include_str!("../../data/golden-v1.txt");

/// A basic system `(Φ, i, j)`.
pub type SystemKey = (CartanType, usize, usize);

/// Numbered list of standard basic weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightBlock {
    pub table: Option<u32>,
    pub key: SystemKey,
    pub weights: Vec<Weight>,
}

/// Nonzero coefficients `c_{s,t}` (1-based, `s < t`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffBlock {
    pub table: u32,
    pub key: SystemKey,
    pub entries: BTreeMap<(usize, usize), i64>,
    /// Numbering of this block relative to the system's weight list.
    pub relabel: Relabel,
}

/// Edge list of a poset figure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetBlock {
    pub figure: u32,
    pub key: SystemKey,
    pub edges: Vec<(usize, usize)>,
    /// Numbering of this block relative to the system's weight list.
    pub relabel: Relabel,
}

/// A product of disjoint transpositions `a:b`, translating the numbering of
/// the weight list into the numbering used by a coefficient or poset block.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Relabel(pub Vec<(usize, usize)>);

impl Relabel {
    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Image of a 1-based index.
    pub fn map(&self, k: usize) -> usize {
        for &(a, b) in &self.0 {
            if k == a {
                return b;
            }
            if k == b {
                return a;
            }
        }
        k
    }

    /// Image of an unordered pair, written with the smaller index first.
    pub fn map_pair(&self, (s, t): (usize, usize)) -> (usize, usize) {
        let (x, y) = (self.map(s), self.map(t));
        (x.min(y), x.max(y))
    }

    fn parse(line: usize, text: Option<&String>) -> Result<Relabel> {
        let Some(text) = text else { return Ok(Relabel::default()) };
        let mut pairs = Vec::new();
        let mut used = std::collections::BTreeSet::new();
        for part in text.split(',') {
            let (a, b) = part.split_once(':').ok_or_else(|| err(line, format!("bad transposition {part:?}")))?;
            let (a, b): (usize, usize) = (num(line, a)?, num(line, b)?);
            if a == b || !used.insert(a) || !used.insert(b) {
                return Err(err(line, "relabel must list disjoint transpositions"));
            }
            pairs.push((a, b));
        }
        Ok(Relabel(pairs))
    }
}

impl std::fmt::Display for Relabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(a, b)| format!("{a}:{b}")).collect();
        f.write_str(&parts.join(","))
    }
}

/// One row of the classical summary table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummaryRow {
    pub key: SystemKey,
    pub weight: Weight,
    /// `Ψ⁺⁺` as ambient vectors.
    pub psi_plus_plus: Vec<Weight>,
    /// Whether `Σ_{β ∈ Ψ⁺⁺} θ(s_β λ)` vanishes.
    pub theta_sum_zero: bool,
    pub simple: bool,
}

/// Whether a non-simple list names the non-simple weights or the simple ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ListMode {
    Only,
    Except,
}

/// Standard basic weights whose modules are (`Only`) or are not
/// (`Except`) the non-simple ones of a system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonsimpleBlock {
    pub key: SystemKey,
    pub mode: ListMode,
    pub weights: Vec<Weight>,
}

/// The whole fixture.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Golden {
    pub weights: Vec<WeightBlock>,
    pub coeffs: Vec<CoeffBlock>,
    pub posets: Vec<PosetBlock>,
    pub summary: Vec<SummaryRow>,
    pub classification: Vec<SystemKey>,
    pub nonsimple: Vec<NonsimpleBlock>,
}

impl Golden {
    /// The numbered weight list of a system, if the fixture has one.
    pub fn weights_of(&self, key: &SystemKey) -> Option<&WeightBlock> {
        self.weights.iter().find(|b| &b.key == key)
    }

    pub fn weight_table(&self, table: u32) -> Option<&WeightBlock> {
        self.weights.iter().find(|b| b.table == Some(table))
    }

    pub fn coeff_tables(&self, table: u32) -> Vec<&CoeffBlock> {
        self.coeffs.iter().filter(|b| b.table == table).collect()
    }

    pub fn nonsimple_of(&self, key: &SystemKey) -> Option<&NonsimpleBlock> {
        self.nonsimple.iter().find(|b| &b.key == key)
    }
}

/// The parsed shipped fixture.
pub fn golden() -> &'static Golden {
    static CELL: OnceLock<Golden> = OnceLock::new();
    CELL.get_or_init(|| parse(GOLDEN_V1).expect("shipped golden fixture parses"))
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse(format!("golden line {line}: {}", msg.into()))
}

fn attrs(line: usize, words: &[&str]) -> Result<HashMap<String, String>> {
    words
        .iter()
        .map(|w| {
            w.split_once('=').map(|(k, v)| (k.to_string(), v.to_string())).ok_or_else(|| err(line, format!("bad attribute {w:?}")))
        })
        .collect()
}

fn num<T: std::str::FromStr>(line: usize, s: &str) -> Result<T> {
    s.trim().parse().map_err(|_| err(line, format!("bad number {s:?}")))
}

fn key_from(line: usize, a: &HashMap<String, String>) -> Result<SystemKey> {
    let get = |k: &str| a.get(k).ok_or_else(|| err(line, format!("missing attribute {k}")));
    Ok((get("system")?.parse()?, num(line, get("i")?)?, num(line, get("j")?)?))
}

fn key_from_words(line: usize, sys: &str, i: &str, j: &str) -> Result<SystemKey> {
    Ok((sys.parse()?, num(line, i)?, num(line, j)?))
}

/// Parses a root written like `e1+e3`, `2e1` or `e2-e4` into a vector.
pub fn parse_root_expr(text: &str, dim: usize) -> Result<Weight> {
    let mut v = vec![0i64; dim];
    let bad = || Error::Parse(format!("bad root expression {text:?}"));
    let s = text.replace(' ', "");
    let mut rest = s.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let sign = match rest.as_bytes()[0] {
            b'+' => {
                rest = &rest[1..];
                1
            }
            b'-' => {
                rest = &rest[1..];
                -1
            }
            _ if first => 1,
            _ => return Err(bad()),
        };
        first = false;
        let e = rest.find('e').ok_or_else(bad)?;
        let coef: i64 = if e == 0 { 1 } else { rest[..e].parse().map_err(|_| bad())? };
        rest = &rest[e + 1..];
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let idx: usize = rest[..end].parse().map_err(|_| bad())?;
        if idx == 0 || idx > dim {
            return Err(bad());
        }
        v[idx - 1] += sign * coef;
        rest = &rest[end..];
    }
    Ok(Weight(v.into_iter().map(rat).collect()))
}

/// Parses fixture text.
pub fn parse(text: &str) -> Result<Golden> {
    let mut g = Golden::default();
    let mut lines = text.lines().enumerate().map(|(n, l)| (n + 1, l.trim()));
    let mut version_seen = false;
    while let Some((ln, line)) = lines.next() {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(v) = line.strip_prefix("version ") {
            if v.trim() != "1" {
                return Err(err(ln, format!("unsupported version {v}")));
            }
            version_seen = true;
            continue;
        }
        let words: Vec<&str> = line.split_whitespace().collect();
        if words.first() != Some(&"begin") || words.len() < 2 {
            return Err(err(ln, format!("expected a block header, found {line:?}")));
        }
        let kind = words[1];
        let a = attrs(ln, &words[2..])?;
        let mut body = Vec::new();
        loop {
            let (bl, l) = lines.next().ok_or_else(|| err(ln, "unterminated block"))?;
            if l == "end" {
                break;
            }
            if !l.is_empty() && !l.starts_with('#') {
                body.push((bl, l));
            }
        }
        match kind {
            "weights" => {
                let key = key_from(ln, &a)?;
                let table = a.get("table").map(|t| num(ln, t)).transpose()?;
                let mut weights = Vec::new();
                for (k, (bl, l)) in body.iter().enumerate() {
                    let (idx, w) = l.split_once(' ').ok_or_else(|| err(*bl, "expected `index weight`"))?;
                    if num::<usize>(*bl, idx)? != k + 1 {
                        return Err(err(*bl, "weights must be numbered consecutively from 1"));
                    }
                    weights.push(Weight::parse(w)?);
                }
                g.weights.push(WeightBlock { table, key, weights });
            }
            "coeffs" => {
                let key = key_from(ln, &a)?;
                let table = num(ln, a.get("table").ok_or_else(|| err(ln, "missing table"))?)?;
                let mut entries = BTreeMap::new();
                for (bl, l) in body {
                    let f: Vec<&str> = l.split_whitespace().collect();
                    if f.len() != 3 {
                        return Err(err(bl, "expected `s t value`"));
                    }
                    entries.insert((num(bl, f[0])?, num(bl, f[1])?), num(bl, f[2])?);
                }
                let relabel = Relabel::parse(ln, a.get("relabel"))?;
                g.coeffs.push(CoeffBlock { table, key, entries, relabel });
            }
            "poset" => {
                let key = key_from(ln, &a)?;
                let figure = num(ln, a.get("figure").ok_or_else(|| err(ln, "missing figure"))?)?;
                let mut edges = Vec::new();
                for (bl, l) in body {
                    let f: Vec<&str> = l.split_whitespace().collect();
                    if f.len() != 2 {
                        return Err(err(bl, "expected `s t`"));
                    }
                    edges.push((num(bl, f[0])?, num(bl, f[1])?));
                }
                edges.sort_unstable();
                let relabel = Relabel::parse(ln, a.get("relabel"))?;
                g.posets.push(PosetBlock { figure, key, edges, relabel });
            }
            "table16" => {
                for (bl, l) in body {
                    let cells: Vec<&str> = l.split('|').map(str::trim).collect();
                    if cells.len() != 5 {
                        return Err(err(bl, "expected five `|`-separated cells"));
                    }
                    let head: Vec<&str> = cells[0].split_whitespace().collect();
                    if head.len() != 3 {
                        return Err(err(bl, "expected `system i j`"));
                    }
                    let key = key_from_words(bl, head[0], head[1], head[2])?;
                    let weight = Weight::parse(cells[1])?;
                    let dim = weight.dim();
                    let psi_plus_plus =
                        cells[2].split(';').map(|r| parse_root_expr(r.trim(), dim)).collect::<Result<Vec<_>>>()?;
                    let theta_sum_zero = match cells[3] {
                        "zero" => true,
                        "nonzero" => false,
                        o => return Err(err(bl, format!("bad θ-sum cell {o:?}"))),
                    };
                    let simple = match cells[4] {
                        "yes" => true,
                        "no" => false,
                        o => return Err(err(bl, format!("bad verdict {o:?}"))),
                    };
                    g.summary.push(SummaryRow { key, weight, psi_plus_plus, theta_sum_zero, simple });
                }
            }
            "classification" => {
                for (bl, l) in body {
                    let f: Vec<&str> = l.split_whitespace().collect();
                    if f.len() != 3 {
                        return Err(err(bl, "expected `system i j`"));
                    }
                    g.classification.push(key_from_words(bl, f[0], f[1], f[2])?);
                }
            }
            "nonsimple" => {
                let key = key_from(ln, &a)?;
                let mode = match a.get("mode").map(String::as_str) {
                    Some("only") => ListMode::Only,
                    Some("except") => ListMode::Except,
                    _ => return Err(err(ln, "mode must be `only` or `except`")),
                };
                let weights = body.iter().map(|(_, l)| Weight::parse(l)).collect::<Result<Vec<_>>>()?;
                g.nonsimple.push(NonsimpleBlock { key, mode, weights });
            }
            other => return Err(err(ln, format!("unknown block kind {other:?}"))),
        }
    }
    if !version_seen {
        return Err(Error::Parse("golden fixture has no version line".into()));
    }
    Ok(g)
}
