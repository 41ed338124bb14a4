//! The reduction chain `Φ_[λ] ⊇ Φ_1(β) ⊇ … ⊇ Φ(β)` and identification of
//! the resulting basic system.
//!
//! Starting from the integral subsystem, the rules are applied cyclically:
//! irreducible component of β, span of (Levi part ∪ β), component again,
//! span of (singular part ∪ β).  Every span is taken inside the current
//! subsystem.  The chain stops once four consecutive rules change nothing.

use crate::jantzen::{encode_in_lambda_i_plus, jantzen_row, psi_labels};
use crate::rootsys::{diagram_automorphisms, rat, CartanType, Parabolic, Rational, Realization, Subsystem, Weight};
use crate::weyl::{dominantize_labels, pair, reflect_labels, LabelFrame};
use crate::{Error, Result};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use std::fmt;

/// One of the three reduction rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Component,
    ParabolicSpan,
    SingularSpan,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Component => "component",
            Rule::ParabolicSpan => "parabolic-span",
            Rule::SingularSpan => "singular-span",
        })
    }
}

/// The rule applied at step `i` (0-based) of the chain.
pub fn rule_at(i: usize) -> Rule {
    match i % 4 {
        0 | 2 => Rule::Component,
        1 => Rule::ParabolicSpan,
        _ => Rule::SingularSpan,
    }
}

/// One step of the chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub index: usize,
    pub rule: Rule,
    pub result: Subsystem,
}

/// A complete run of the chain for one root `β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub beta: usize,
    /// `Φ_[λ]`.
    pub start: Subsystem,
    pub steps: Vec<ReductionStep>,
    /// `Φ(β)`.
    pub terminal: Subsystem,
}

/// Applies one rule to `cur`.
pub fn apply_rule(real: &Realization, rule: Rule, cur: &Subsystem, beta: usize, par: &Parabolic, singular: &Subsystem) -> Subsystem {
    match rule {
        Rule::Component => real.irreducible_component(cur, beta).expect("β stays in the chain"),
        Rule::ParabolicSpan | Rule::SingularSpan => {
            let part = if rule == Rule::ParabolicSpan { &par.levi } else { singular };
            let mut seeds = part.intersect(cur).positive(real);
            seeds.push(beta);
            real.span_of_roots_within(&seeds, cur)
        }
    }
}

/// Runs the reduction chain for `β ∈ Ψ_λ⁺`.
pub fn reduce(real: &Realization, w: &Weight, par: &Parabolic, beta: usize) -> Result<ReductionTrace> {
    let enc = encode_in_lambda_i_plus(real, w, par)?;
    let (plus, _) = psi_labels(real, &enc.frame, &enc.v, par);
    if !plus.contains(&beta) {
        return Err(Error::RootNotInPsiPlus);
    }
    let start = real.integral_subsystem(w);
    let singular = real.singular_subsystem(w);
    let mut cur = start.clone();
    let mut steps = Vec::new();
    let mut unchanged = 0;
    let mut i = 0;
    while unchanged < 4 {
        let rule = rule_at(i);
        let next = apply_rule(real, rule, &cur, beta, par, &singular);
        unchanged = if next == cur { unchanged + 1 } else { 0 };
        steps.push(ReductionStep { index: i + 1, rule, result: next.clone() });
        cur = next;
        i += 1;
    }
    Ok(ReductionTrace { beta, start, steps, terminal: cur })
}

/// Canonical name of a basic system, with the weight scale `k` and the
/// automorphic variants of `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicLabel {
    pub kind: CartanType,
    pub i: usize,
    pub j: usize,
    /// The positive integer with `λ| = k·λ_std`.
    pub k: i64,
    /// All `(i, j)` obtainable through diagram automorphisms, sorted;
    /// contains `(i, j)`.
    pub variants: Vec<(usize, usize)>,
}

impl fmt::Display for BasicLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.kind, self.i, self.j)
    }
}

/// `(Φ(β), Φ_I ∩ Φ(β), λ|_{Φ(β)})` with its identification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicTriple {
    pub system: Subsystem,
    pub parabolic_part: Subsystem,
    pub weight: Weight,
    pub label: BasicLabel,
    /// Dynkin labels of `λ|/k` transported to the standard realization of
    /// `label.kind`; a standard basic weight.
    pub standard_labels: Vec<i64>,
}

impl BasicTriple {
    /// The standard basic weight `λ|/k` in the standard realization.
    pub fn standard_weight(&self) -> Result<Weight> {
        let std = crate::rootsys::standard(self.label.kind)?;
        Ok(std.from_labels(&self.standard_labels.iter().map(|&x| rat(x)).collect::<Vec<_>>()))
    }
}

/// Integer vector spanning the kernel of the given integer rows (which must
/// have corank one).
fn kernel_vector(rows: &[Vec<i64>], width: usize) -> Option<Vec<i64>> {
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..width {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..width {
                    let d = &f * &m[row][c];
                    m[r][c] -= d;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if pivots.len() + 1 != width {
        return None;
    }
    let free = (0..width).find(|c| !pivots.contains(c))?;
    let mut x = vec![Rational::zero(); width];
    x[free] = rat(1);
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = -m[r][free].clone();
    }
    let den = x.iter().fold(num_bigint::BigInt::from(1), |acc, v| acc.lcm(v.denom()));
    x.iter().map(|v| (v * Rational::from_integer(den.clone())).to_integer().to_i64()).collect()
}

/// The single nonzero position of a dominant vector `c·e_i`, if any.
fn single_support(v: &[i64]) -> Option<(usize, i64)> {
    let nz: Vec<usize> = (0..v.len()).filter(|&k| v[k] != 0).collect();
    (nz.len() == 1 && v[nz[0]] > 0).then(|| (nz[0], v[nz[0]]))
}

/// The identification of a geometric triple, together with the local
/// realization in which it was computed.
pub struct Identified {
    pub label: BasicLabel,
    pub standard_labels: Vec<i64>,
    /// `Φ(β)` realized with simple roots in Bourbaki order.
    pub local: Realization,
    /// Local root index → ambient root index.
    pub local_map: Vec<usize>,
    /// The Levi part inside the local realization.
    pub local_levi: Subsystem,
}

/// Identifies the basic system of `(system, parabolic_part, weight)`.
///
/// `i` is read off by moving the line of weights vanishing on the Levi part,
/// oriented positively on the nilradical, into the dominant chamber, and
/// then straightening the Levi part with `W_{Δ∖α_i}`; `j` is read off from the dominant
/// representative of the weight.  The lexicographically smallest result over
/// all diagram automorphisms is returned.
pub fn identify_basic_system(real: &Realization, system: &Subsystem, parabolic_part: &Subsystem, weight: &Weight) -> Result<Identified> {
    let class = real.dynkin_classify(system)?;
    let kind = class.kind;
    let (local, local_map) = real.sub_realization(Some(kind), &class.labelings[0])?;
    let r = local.rank();
    let to_local = |a: usize| local_map.iter().position(|&x| x == a);
    let local_levi = Subsystem::from_indices(
        parabolic_part.members().iter().map(|&a| to_local(a).ok_or(Error::RootNotInSubsystem)).collect::<Result<Vec<_>>>()?,
    );
    let levi_gens = local.simple_system_of(&local_levi);
    if levi_gens.len() + 1 != r {
        return Err(Error::NotBasic(format!("Levi part has rank {} in {kind}", levi_gens.len())));
    }
    let (frame, lam) = LabelFrame::new(&local, weight)?;
    if frame.scale != 1 {
        return Err(Error::NotBasic("weight is not integral on the reduced system".into()));
    }
    let sing = local.singular_subsystem(&frame.decode(&local, &lam));
    if local.rank_of(&sing) + 1 != r {
        return Err(Error::NotBasic(format!("singular part has rank {} in {kind}", local.rank_of(&sing))));
    }

    let mut dom = lam.clone();
    dominantize_labels(&local, &mut dom, &local.simple);
    let (j, k) = single_support(&dom).ok_or_else(|| Error::NotBasic("weight is not a multiple of a fundamental weight orbit".into()))?;

    let rows: Vec<Vec<i64>> = levi_gens.iter().map(|&g| local.co_coeffs[g].clone()).collect();
    let nu = kernel_vector(&rows, r).ok_or_else(|| Error::Internal("Levi kernel is not a line".into()))?;
    let mut rho_p = vec![0i64; r];
    for &g in &local_levi.positive(&local) {
        for (x, b) in rho_p.iter_mut().zip(&local.labels[g]) {
            *x += b;
        }
    }

    // Orient the Levi line so that it is positive on the nilradical: the
    // positive roots of Φ(β) outside the Levi part.
    let nil = (0..local.num_positive()).find(|&g| !local_levi.contains(g)).expect("Levi part is proper");
    let sign: i64 = if pair(&local, &nu, nil) > 0 { 1 } else { -1 };
    let auts = diagram_automorphisms(kind)?;
    let mut candidates: Vec<(usize, usize, Vec<i64>)> = Vec::new();
    {
        let mut vn: Vec<i64> = nu.iter().map(|x| sign * x).collect();
        let mut vl = lam.clone();
        let mut vr = rho_p.clone();
        'chamber: loop {
            for &s in &local.simple {
                if pair(&local, &vn, s) < 0 {
                    reflect_labels(&local, &mut vn, s);
                    reflect_labels(&local, &mut vl, s);
                    reflect_labels(&local, &mut vr, s);
                    continue 'chamber;
                }
            }
            break;
        }
        let (i, _) = single_support(&vn).ok_or_else(|| Error::Internal("Levi line is not fundamental".into()))?;
        let others: Vec<usize> = local.simple.iter().copied().filter(|&s| s != i).collect();
        'levi: loop {
            for &s in &others {
                if pair(&local, &vr, s) < 0 {
                    reflect_labels(&local, &mut vr, s);
                    reflect_labels(&local, &mut vl, s);
                    continue 'levi;
                }
            }
            break;
        }
        if (0..r).any(|m| m != i && vl[m] <= 0) {
            return Err(Error::Internal("transported weight is not in Λ_I⁺".into()));
        }
        for pi in &auts {
            let mut permuted = vec![0i64; r];
            for m in 0..r {
                permuted[pi[m]] = vl[m];
            }
            candidates.push((pi[i] + 1, pi[j] + 1, permuted));
        }
    }
    candidates.sort();
    let (i, j_lab, labels) = candidates[0].clone();
    let mut variants: Vec<(usize, usize)> = candidates.iter().map(|c| (c.0, c.1)).collect();
    variants.dedup();
    let standard_labels = labels.iter().map(|x| x / k).collect();
    Ok(Identified { label: BasicLabel { kind, i, j: j_lab, k, variants }, standard_labels, local, local_map, local_levi })
}

/// Builds and identifies the basic triple at the end of a trace.
pub fn basic_triple(real: &Realization, w: &Weight, par: &Parabolic, trace: &ReductionTrace) -> Result<BasicTriple> {
    let system = trace.terminal.clone();
    let parabolic_part = par.levi.intersect(&system);
    let weight = real.restrict(w, &system);
    let id = identify_basic_system(real, &system, &parabolic_part, &weight)?;
    Ok(BasicTriple { system, parabolic_part, weight, label: id.label, standard_labels: id.standard_labels })
}

/// How the simplicity of each basic triple is decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decider {
    /// Jantzen row of the triple computed inside `Φ(β)`.
    Direct,
    /// Lookup in the catalog of basic systems.
    Catalog,
    /// Both, insisting on agreement.
    Both,
}

/// Per-root outcome of [`simple_via_reduction`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedRoot {
    pub beta: usize,
    pub triple: BasicTriple,
    pub simple: bool,
}

/// Outcome of [`simple_via_reduction`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionVerdict {
    pub simple: bool,
    pub roots: Vec<ReducedRoot>,
}

/// Simplicity of the basic module attached to a triple.
pub fn triple_is_simple(real: &Realization, triple: &BasicTriple, decider: Decider) -> Result<bool> {
    let direct = || -> Result<bool> {
        let id = identify_basic_system(real, &triple.system, &triple.parabolic_part, &triple.weight)?;
        let par = Parabolic::from_levi(&id.local, id.local_levi.clone());
        Ok(jantzen_row(&id.local, &triple.weight, &par)?.is_empty())
    };
    let catalog = || crate::basics::catalog_is_simple(triple.label.kind, triple.label.i, triple.label.j, &triple.standard_labels);
    match decider {
        Decider::Direct => direct(),
        Decider::Catalog => catalog(),
        Decider::Both => {
            let (a, b) = (direct()?, catalog()?);
            if a != b {
                return Err(Error::Internal(format!("basic system {} disagrees with the catalog", triple.label)));
            }
            Ok(a)
        }
    }
}

/// Simplicity through the reduction of every `β ∈ Ψ_λ⁺⁺`.
pub fn simple_via_reduction(real: &Realization, w: &Weight, par: &Parabolic, decider: Decider) -> Result<ReductionVerdict> {
    let enc = encode_in_lambda_i_plus(real, w, par)?;
    let (_, pp) = psi_labels(real, &enc.frame, &enc.v, par);
    let mut roots = Vec::with_capacity(pp.len());
    for beta in pp {
        let trace = reduce(real, w, par, beta)?;
        let triple = basic_triple(real, w, par, &trace)?;
        let simple = triple_is_simple(real, &triple, decider)?;
        roots.push(ReducedRoot { beta, triple, simple });
    }
    Ok(ReductionVerdict { simple: roots.iter().all(|r| r.simple), roots })
}
