//! Jantzen coefficients of generalized Verma modules.
//!
//! For `λ ∈ Λ_I⁺` the coefficient row collects, for every
//! `β ∈ Ψ_λ⁺⁺`, the sign of the element of `W_I` moving `s_β λ` into
//! `Λ_I⁺`.  A brute-force oracle expands the full alternating sums over
//! `W_I` instead and re-collects them, which is used to cross-check the fast
//! path.

use crate::rootsys::{Parabolic, Realization, Weight};
use crate::weyl::{
    apply_matrix, dominantize_labels, in_lambda_i_plus_labels, is_regular_labels, pair, parabolic_elements,
    reflect_labels, LabelFrame,
};
use crate::{Error, Result};
use std::collections::{BTreeMap, HashMap};

/// Default cap on `|W_I|` for the oracle.
pub const ORACLE_CAP: usize = 10_000;

/// `Ψ_λ⁺` and `Ψ_λ⁺⁺` as sorted lists of positive root indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiSets {
    pub psi_plus: Vec<usize>,
    pub psi_plus_plus: Vec<usize>,
}

/// Nonzero Jantzen coefficients `c(λ, μ)` of a fixed `λ`, keyed by `μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientRow {
    pub source: Weight,
    pub entries: BTreeMap<Weight, i64>,
    /// For each target, the roots `β` (with signs) whose reflections land
    /// on it, including those whose contributions cancel.
    pub contributors: BTreeMap<Weight, Vec<(usize, i8)>>,
}

impl CoefficientRow {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `c(λ, μ)`, zero when absent.
    pub fn get(&self, mu: &Weight) -> i64 {
        self.entries.get(mu).copied().unwrap_or(0)
    }

    /// Largest absolute coefficient.
    pub fn max_abs(&self) -> i64 {
        self.entries.values().map(|c| c.abs()).max().unwrap_or(0)
    }
}

/// A formal sum of Verma module classes.
pub type FormalVermaSum = BTreeMap<Weight, i64>;

/// Evidence that a module is not simple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub beta: usize,
    pub target: Weight,
    pub coefficient: i64,
}

/// A weight of `Λ_I⁺` in label form, validated.
pub(crate) struct Encoded {
    pub frame: LabelFrame,
    pub v: Vec<i64>,
}

pub(crate) fn encode_in_lambda_i_plus(real: &Realization, w: &Weight, par: &Parabolic) -> Result<Encoded> {
    let (frame, v) = LabelFrame::new(real, w)?;
    if !in_lambda_i_plus_labels(real, &frame, &v, par) {
        return Err(Error::NotInLambdaIPlus);
    }
    Ok(Encoded { frame, v })
}

/// `Ψ⁺` and `Ψ⁺⁺` on scaled labels.
pub(crate) fn psi_labels(real: &Realization, frame: &LabelFrame, v: &[i64], par: &Parabolic) -> (Vec<usize>, Vec<usize>) {
    let mut plus = Vec::new();
    let mut plus_plus = Vec::new();
    for beta in 0..real.num_positive() {
        if par.levi.contains(beta) {
            continue;
        }
        let p = pair(real, v, beta);
        if p <= 0 || !frame.is_integral(p) {
            continue;
        }
        plus.push(beta);
        let mut u = v.to_vec();
        reflect_labels(real, &mut u, beta);
        if is_regular_labels(real, &u, &par.levi_pos) {
            plus_plus.push(beta);
        }
    }
    (plus, plus_plus)
}

/// One row in label form: target labels → (coefficient, contributors).
pub(crate) type LabelRow = BTreeMap<Vec<i64>, (i64, Vec<(usize, i8)>)>;

pub(crate) fn row_labels(real: &Realization, v: &[i64], pp: &[usize], par: &Parabolic) -> LabelRow {
    let mut row: LabelRow = BTreeMap::new();
    for &beta in pp {
        let mut u = v.to_vec();
        reflect_labels(real, &mut u, beta);
        let steps = dominantize_labels(real, &mut u, &par.gens);
        let sign: i8 = if steps % 2 == 0 { 1 } else { -1 };
        let e = row.entry(u).or_insert((0, Vec::new()));
        e.0 += i64::from(sign);
        e.1.push((beta, sign));
    }
    row
}

/// `Ψ_λ⁺` and `Ψ_λ⁺⁺`.
pub fn psi_sets(real: &Realization, w: &Weight, par: &Parabolic) -> Result<PsiSets> {
    let enc = encode_in_lambda_i_plus(real, w, par)?;
    let (psi_plus, psi_plus_plus) = psi_labels(real, &enc.frame, &enc.v, par);
    Ok(PsiSets { psi_plus, psi_plus_plus })
}

/// The Jantzen coefficient row of `λ ∈ Λ_I⁺`.
pub fn jantzen_row(real: &Realization, w: &Weight, par: &Parabolic) -> Result<CoefficientRow> {
    let enc = encode_in_lambda_i_plus(real, w, par)?;
    let (_, pp) = psi_labels(real, &enc.frame, &enc.v, par);
    let row = row_labels(real, &enc.v, &pp, par);
    let mut entries = BTreeMap::new();
    let mut contributors = BTreeMap::new();
    for (u, (c, who)) in row {
        let mu = enc.frame.decode(real, &u);
        if c != 0 {
            entries.insert(mu.clone(), c);
        }
        contributors.insert(mu, who);
    }
    Ok(CoefficientRow { source: w.clone(), entries, contributors })
}

/// `c(λ, μ)`, extended symmetrically: the row of whichever weight produces
/// the other is consulted.
pub fn jantzen_coefficient(real: &Realization, a: &Weight, b: &Weight, par: &Parabolic) -> Result<i64> {
    let from_a = jantzen_row(real, a, par)?.get(b);
    if from_a != 0 {
        return Ok(from_a);
    }
    Ok(jantzen_row(real, b, par)?.get(a))
}

/// Simplicity by the Jantzen criterion, with a witness when not simple.
pub fn is_simple(real: &Realization, w: &Weight, par: &Parabolic) -> Result<(bool, Option<Witness>)> {
    let row = jantzen_row(real, w, par)?;
    let witness = row.entries.iter().next().map(|(mu, &c)| Witness {
        beta: row.contributors[mu][0].0,
        target: mu.clone(),
        coefficient: c,
    });
    Ok((witness.is_none(), witness))
}

fn theta_labels(elements: &[(Vec<i64>, i8)], v: &[i64], coeff: i64, acc: &mut HashMap<Vec<i64>, i64>) {
    for (m, p) in elements {
        *acc.entry(apply_matrix(m, v)).or_insert(0) += coeff * i64::from(*p);
    }
}

/// `θ(λ) = Σ_{w ∈ W_I} (−1)^{ℓ(w)} [M(wλ)]`, fully expanded.
pub fn theta_expand(real: &Realization, w: &Weight, par: &Parabolic) -> Result<FormalVermaSum> {
    let (frame, v) = LabelFrame::new(real, w)?;
    let elements = parabolic_elements(real, &par.gens, ORACLE_CAP)?;
    let mut acc = HashMap::new();
    theta_labels(&elements, &v, 1, &mut acc);
    Ok(acc.into_iter().filter(|(_, c)| *c != 0).map(|(u, c)| (frame.decode(real, &u), c)).collect())
}

/// Brute-force row: expands `Σ_{β ∈ Ψ⁺} θ(s_β λ)` over all of `W_I`, then
/// re-collects the result in the basis `{[M_I(μ)] : μ ∈ Λ_I⁺}` and checks
/// that the re-collection reproduces the expansion exactly.  Contributor
/// lists are left empty.
pub fn sum_formula_oracle(real: &Realization, w: &Weight, par: &Parabolic) -> Result<CoefficientRow> {
    let enc = encode_in_lambda_i_plus(real, w, par)?;
    let elements = parabolic_elements(real, &par.gens, ORACLE_CAP)?;
    let (plus, _) = psi_labels(real, &enc.frame, &enc.v, par);
    let mut acc: HashMap<Vec<i64>, i64> = HashMap::new();
    for &beta in &plus {
        let mut u = enc.v.clone();
        reflect_labels(real, &mut u, beta);
        theta_labels(&elements, &u, 1, &mut acc);
    }
    let heads: Vec<(Vec<i64>, i64)> = acc
        .iter()
        .filter(|(u, c)| **c != 0 && in_lambda_i_plus_labels(real, &enc.frame, u, par))
        .map(|(u, c)| (u.clone(), *c))
        .collect();
    for (u, c) in &heads {
        theta_labels(&elements, u, -c, &mut acc);
    }
    if acc.values().any(|&c| c != 0) {
        return Err(Error::Internal("θ-expansion does not re-collect into Λ_I⁺ classes".into()));
    }
    let entries = heads.into_iter().map(|(u, c)| (enc.frame.decode(real, &u), c)).collect();
    Ok(CoefficientRow { source: w.clone(), entries, contributors: BTreeMap::new() })
}
