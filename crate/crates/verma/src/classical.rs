//! Closed forms for the classical types B, C and D.
//!
//! Everything here works in the standard ε-coordinates: `λ = (λ_1, …, λ_n)`
//! and roots `±e_i ± e_j`, `±e_i` (B) or `±2e_i` (C).  Coordinates and
//! Bourbaki indices are 1-based in the segment bookkeeping, as in the usual
//! notation; weights are indexed 0-based as vectors.
//!
//! * [`segment_data`] cuts the chain of simple roots at the crossed nodes;
//! * [`standardize`] applies `φ = s_{e_n}` to a non-standard Levi part of
//!   `D_n` (one containing `α_n` but not `α_{n−1}`);
//! * [`cd_indices`] and [`level_subsystem`] are the bookkeeping behind the
//!   closed forms of the two span steps ([`closed_form_reduction`]);
//! * [`congruence_decomposition`] splits `Φ_[λ]` by the class of `λ_i`
//!   modulo ℤ;
//! * [`theorem_d_vanishes`] and [`classical_is_simple`] are the closed-form
//!   vanishing and simplicity criteria.

use crate::jantzen::psi_sets;
use crate::rootsys::{rabs, rat, Parabolic, Rational, Realization, Subsystem, TypeLetter, Weight};
use crate::weyl::is_in_lambda_i_plus;
use crate::{Error, Result};
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};

fn letter_of(real: &Realization) -> Result<TypeLetter> {
    real.kind.map(|k| k.letter).ok_or_else(|| Error::WrongType("A, B, C or D (standard realization)".into()))
}

fn classical_letter(real: &Realization) -> Result<TypeLetter> {
    match letter_of(real)? {
        l @ (TypeLetter::B | TypeLetter::C | TypeLetter::D) => Ok(l),
        _ => Err(Error::WrongType("B, C or D".into())),
    }
}

/// Integer ε-coordinates of a root.
fn root_coords(real: &Realization, root: usize) -> Vec<i64> {
    real.roots[root]
        .0
        .iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            i64::try_from(c.to_integer()).expect("classical root coordinates are small")
        })
        .collect()
}

/// Nonzero entries `(i, c)` of a root (1-based `i`).
fn support(real: &Realization, root: usize) -> Vec<(usize, i64)> {
    root_coords(real, root).into_iter().enumerate().filter(|&(_, c)| c != 0).map(|(i, c)| (i + 1, c)).collect()
}

fn root_from_coords(real: &Realization, coords: &[i64]) -> usize {
    let w = Weight::from_ints(coords);
    real.root_index(&w).expect("coordinates describe a root")
}

/// `e_i + e_j` (or `c·e_i` when `j` is `None`), 1-based.
fn e_root(real: &Realization, i: usize, ci: i64, j: Option<usize>) -> usize {
    let mut v = vec![0i64; real.dim];
    v[i - 1] = ci;
    if let Some(j) = j {
        v[j - 1] = 1;
    }
    root_from_coords(real, &v)
}

/// `φ = s_{e_n}`: negates the last coordinate.
pub fn phi_weight(w: &Weight) -> Weight {
    let mut out = w.clone();
    if let Some(last) = out.0.last_mut() {
        *last = -last.clone();
    }
    out
}

/// `φ` on root indices.
pub fn phi_root(real: &Realization, root: usize) -> usize {
    real.root_index(&phi_weight(&real.roots[root])).expect("φ permutes the roots of D_n")
}

/// Segment data of a standard parabolic of a classical system.
///
/// `Δ∖I = {α_{q_1}, …, α_{q_{m−1}}}` with `q_0 = 0` and `q_m = n + 1`.
/// The segment `s` consists of the coordinates `q_{s−1} < i ≤ q_s`
/// (`≤ n` for `s = m`) and carries `I_s = {α_k ∈ I : q_{s−1} < k < q_s}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentData {
    pub n: usize,
    /// `q_0, q_1, …, q_m`.
    pub q: Vec<usize>,
    pub m: usize,
    /// `I_1, …, I_m` as 1-based Bourbaki indices.
    pub levi_parts: Vec<Vec<usize>>,
    /// `n_s = |I_s| + 1` for `s < m` and `n_m = |I_m|`.
    pub sizes: Vec<usize>,
    /// Whether `I` is standard (always true outside type D).
    pub standard: bool,
    /// Whether `φ` was applied to reach this data.
    pub phi_applied: bool,
}

impl SegmentData {
    /// The segment containing coordinate `i` (1-based).
    pub fn segment_of(&self, i: usize) -> usize {
        (1..=self.m).find(|&s| self.q[s - 1] < i && i <= self.q[s]).expect("coordinate within 1..=n")
    }

    /// Coordinates of segment `s`.
    pub fn coords(&self, s: usize) -> std::ops::RangeInclusive<usize> {
        self.q[s - 1] + 1..=self.q[s].min(self.n)
    }

    /// `n_s`.
    pub fn size(&self, s: usize) -> usize {
        self.sizes[s - 1]
    }
}

/// Included Bourbaki indices of a standard parabolic.
fn included_indices(real: &Realization, par: &Parabolic) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(par.gens.len());
    for &g in &par.gens {
        match real.simple.iter().position(|&s| s == g) {
            Some(k) => out.push(k + 1),
            None => return Err(Error::WrongType("standard parabolic".into())),
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Whether `I` is non-standard: `Φ = D_n`, `α_{n−1} ∉ I` and `α_n ∈ I`.
pub fn is_nonstandard(real: &Realization, par: &Parabolic) -> Result<bool> {
    let letter = classical_letter(real)?;
    let inc = included_indices(real, par)?;
    let n = real.rank();
    Ok(letter == TypeLetter::D && !inc.contains(&(n - 1)) && inc.contains(&n))
}

/// Segment data of `I`, with the non-standard adjustment
/// `I_{m−1} = {…} ∪ {α_n}`, `I_m = ∅` for type D.
pub fn segment_data(real: &Realization, par: &Parabolic) -> Result<SegmentData> {
    let nonstandard = is_nonstandard(real, par)?;
    let inc = included_indices(real, par)?;
    let n = real.rank();
    let mut q = vec![0];
    q.extend((1..=n).filter(|k| !inc.contains(k)));
    q.push(n + 1);
    let m = q.len() - 1;
    let mut levi_parts: Vec<Vec<usize>> =
        (1..=m).map(|s| inc.iter().copied().filter(|&k| q[s - 1] < k && k < q[s]).collect()).collect();
    if nonstandard {
        // α_n sits beyond the last crossed node α_{n−1}; it belongs to I_{m−1}.
        levi_parts[m - 1].retain(|&k| k != n);
        levi_parts[m - 2].push(n);
    }
    let sizes = (1..=m).map(|s| levi_parts[s - 1].len() + usize::from(s < m)).collect();
    Ok(SegmentData { n, q, m, levi_parts, sizes, standard: !nonstandard, phi_applied: false })
}

/// A parabolic and weight brought to standard form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Standardized {
    pub par: Parabolic,
    pub weight: Weight,
    pub phi_applied: bool,
}

/// Applies `φ = s_{e_n}` when `I ⊂ D_n` is non-standard; the identity
/// otherwise.
pub fn standardize(real: &Realization, par: &Parabolic, w: &Weight) -> Result<Standardized> {
    if letter_of(real)? != TypeLetter::D {
        return Err(Error::WrongType("D".into()));
    }
    standardize_any(real, par, w)
}

/// [`standardize`] that passes B and C through unchanged.
fn standardize_any(real: &Realization, par: &Parabolic, w: &Weight) -> Result<Standardized> {
    real.check_dim(w)?;
    if !is_nonstandard(real, par)? {
        return Ok(Standardized { par: par.clone(), weight: w.clone(), phi_applied: false });
    }
    let n = real.rank();
    let crossed: Vec<usize> = (1..=n)
        .filter(|k| !par.gens.contains(&real.simple[k - 1]))
        .map(|k| if k == n - 1 { n } else { k })
        .collect();
    Ok(Standardized { par: Parabolic::standard(real, &crossed)?, weight: phi_weight(w), phi_applied: true })
}

fn standard_segments(real: &Realization, par: &Parabolic, w: &Weight) -> Result<(Standardized, SegmentData)> {
    let std = standardize_any(real, par, w)?;
    let mut seg = segment_data(real, &std.par)?;
    seg.phi_applied = std.phi_applied;
    Ok((std, seg))
}

/// The indices `c_1^I(β), c_2^I(β)` (when `β ∉ Φ_I`) and `d_1^λ(β),
/// d_2^λ(β)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdIndices {
    pub c: Option<(usize, usize)>,
    pub d1: Rational,
    pub d2: Rational,
}

/// `d_1 = max{|λ_i|, |λ_j|}`, and `d_2 = min{|λ_i|, |λ_j|}` unless the two
/// are equal, in which case `d_2 = 0`; for `e_i`, `2e_i`: `d_1 = |λ_i|`,
/// `d_2 = 0`.
fn d_indices(real: &Realization, w: &Weight, root: usize) -> (Rational, Rational) {
    let sup = support(real, root);
    let a = rabs(&w.0[sup[0].0 - 1]);
    if sup.len() == 1 {
        return (a, Rational::zero());
    }
    let b = rabs(&w.0[sup[1].0 - 1]);
    if a == b {
        (a, Rational::zero())
    } else if a > b {
        (a, b)
    } else {
        (b, a)
    }
}

/// `(c_1, c_2)` for a standard `I` and `β ∉ Φ_I`.
fn c_indices(real: &Realization, seg: &SegmentData, root: usize) -> (usize, usize) {
    let sup = support(real, root);
    let s = seg.segment_of(sup[0].0);
    if sup.len() == 1 {
        return (s, seg.m);
    }
    let t = seg.segment_of(sup[1].0);
    (s, if t > s { t } else { seg.m })
}

/// The c- and d-indices of a root.  Non-standard `I` are handled through
/// `c^I(β) = c^{φ(I)}(φ(β))`.
pub fn cd_indices(real: &Realization, par: &Parabolic, w: &Weight, beta: usize) -> Result<CdIndices> {
    classical_letter(real)?;
    let (std, seg) = standard_segments(real, par, w)?;
    let b = if std.phi_applied { phi_root(real, beta) } else { beta };
    let c = (!std.par.levi.contains(b)).then(|| c_indices(real, &seg, b));
    let (d1, d2) = d_indices(real, w, beta);
    Ok(CdIndices { c, d1, d2 })
}

/// `Φ_λ(a) = {γ ∈ Φ_λ : d_1^λ(γ) = a}`.
pub fn level_subsystem(real: &Realization, w: &Weight, a: &Rational) -> Result<Subsystem> {
    classical_letter(real)?;
    real.check_dim(w)?;
    let sing = real.singular_subsystem(w);
    Ok(Subsystem::from_indices(sing.members().iter().copied().filter(|&g| &d_indices(real, w, g).0 == a).collect()))
}

/// One congruence class `K_(z)` (together with `K_(1−z)` when
/// `z ∉ ½ℤ`) and its subsystem `Φ_(z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceClass {
    /// Representative in `[0, 1/2]`.
    pub z: Rational,
    /// `K_(z)`, 1-based.
    pub k_z: Vec<usize>,
    /// `K_(1−z)` when `z ∉ ½ℤ`, empty otherwise.
    pub k_one_minus_z: Vec<usize>,
    pub roots: Subsystem,
}

fn frac(x: &Rational) -> Rational {
    x - x.floor()
}

fn membership(real: &Realization, letter: TypeLetter, z: &Rational, kz: &[usize], kc: &[usize], root: usize) -> bool {
    let sup = support(real, root);
    let half_integral = (z * rat(2)).is_integer();
    if !half_integral {
        if sup.len() != 2 {
            return false;
        }
        let ((i, ci), (j, cj)) = (sup[0], sup[1]);
        let in_z = |k: usize| kz.contains(&k);
        let in_c = |k: usize| kc.contains(&k);
        return if ci * cj < 0 {
            (in_z(i) && in_z(j)) || (in_c(i) && in_c(j))
        } else {
            (in_z(i) && in_c(j)) || (in_c(i) && in_z(j))
        };
    }
    if !sup.iter().all(|(k, _)| kz.contains(k)) {
        return false;
    }
    match sup.len() {
        2 => true,
        _ => match letter {
            TypeLetter::B => true,
            TypeLetter::C => z.is_integer(),
            _ => false,
        },
    }
}

/// The classes `K_(z)`, `0 ≤ z ≤ 1/2`, with their subsystems `Φ_(z)`,
/// ordered by `z`.  Only nonempty classes are listed.
pub fn congruence_decomposition(real: &Realization, w: &Weight) -> Result<Vec<CongruenceClass>> {
    let letter = classical_letter(real)?;
    real.check_dim(w)?;
    let half = Rational::new(1.into(), 2.into());
    let mut by_z: BTreeMap<Rational, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for (idx, x) in w.0.iter().enumerate() {
        let f = frac(x);
        let one_minus = rat(1) - &f;
        if f <= half {
            by_z.entry(f).or_default().0.push(idx + 1);
        } else {
            by_z.entry(one_minus).or_default().1.push(idx + 1);
        }
    }
    Ok(by_z
        .into_iter()
        .map(|(z, (kz, kc))| {
            let roots = Subsystem::from_indices(
                (0..real.num_roots()).filter(|&r| membership(real, letter, &z, &kz, &kc, r)).collect(),
            );
            CongruenceClass { z, k_z: kz, k_one_minus_z: kc, roots }
        })
        .collect())
}

/// Absolute values of the coordinates, the level subsystems of `Φ_λ` and
/// the congruence classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelData {
    /// `|λ_i|`, sorted in decreasing order.
    pub abs_values: Vec<Rational>,
    /// Nonempty `Φ_λ(a)`, keyed by `a`.
    pub levels: BTreeMap<Rational, Subsystem>,
    pub classes: Vec<CongruenceClass>,
}

pub fn level_data(real: &Realization, w: &Weight) -> Result<LevelData> {
    let classes = congruence_decomposition(real, w)?;
    let mut abs_values: Vec<Rational> = w.0.iter().map(rabs).collect();
    abs_values.sort_unstable_by(|a, b| b.cmp(a));
    let mut levels = BTreeMap::new();
    for a in abs_values.iter().collect::<BTreeSet<_>>() {
        let sub = level_subsystem(real, w, a)?;
        if !sub.is_empty() {
            levels.insert(a.clone(), sub);
        }
    }
    Ok(LevelData { abs_values, levels, classes })
}

/// `(ℚβ + ℚΦ_{I_s} + ℚΦ_{I_t}) ∩ Φ`, or `{±β}` in the degenerate D case
/// where that span splits.
fn span_or_line(real: &Realization, letter: TypeLetter, mut seeds: Vec<usize>, beta: usize) -> Subsystem {
    seeds.push(beta);
    let span = real.span_of_roots_within(&seeds, &real.whole());
    if letter == TypeLetter::D && real.components(&span).len() > 1 {
        real.close_negatives(&[real.abs(beta)])
    } else {
        span
    }
}

/// `(Φ_{β,1})_{β,0} = (ℚβ + ℚΦ_{I_s} + ℚΦ_{I_t}) ∩ Φ` with
/// `s = c_1^I(β)`, `t = c_2^I(β)` (or `{±β}` for D), for `β ∉ Φ_I`.
pub fn closed_form_parabolic(real: &Realization, par: &Parabolic, beta: usize) -> Result<Subsystem> {
    let letter = classical_letter(real)?;
    if par.levi.contains(beta) {
        return Err(Error::RootInLevi);
    }
    let (std, seg) = standard_segments(real, par, &Weight::zero(real.dim))?;
    let b = if std.phi_applied { phi_root(real, beta) } else { beta };
    let (s, t) = c_indices(real, &seg, b);
    let seeds: Vec<usize> = seg.levi_parts[s - 1]
        .iter()
        .chain(if t != s { seg.levi_parts[t - 1].iter() } else { [].iter() })
        .map(|&k| real.simple[k - 1])
        .collect();
    let out = span_or_line(real, letter, seeds, b);
    Ok(if std.phi_applied {
        Subsystem::from_indices(out.members().iter().map(|&r| phi_root(real, r)).collect())
    } else {
        out
    })
}

/// `(Φ_{β,2})_{β,0} = (ℚβ + ℚΦ_λ(a) + ℚΦ_λ(b)) ∩ Φ` with
/// `a = d_1^λ(β)`, `b = d_2^λ(β)` (or `{±β}` for D), for integral
/// `λ ∈ Λ_I⁺` and `β ∈ Ψ_λ⁺`.
pub fn closed_form_singular(real: &Realization, par: &Parabolic, w: &Weight, beta: usize) -> Result<Subsystem> {
    let letter = classical_letter(real)?;
    if real.integral_subsystem(w) != real.whole() {
        return Err(Error::NotIntegral);
    }
    if !psi_sets(real, w, par)?.psi_plus.contains(&beta) {
        return Err(Error::RootNotInPsiPlus);
    }
    let (a, b) = d_indices(real, w, beta);
    let mut seeds = level_subsystem(real, w, &a)?.positive(real);
    seeds.extend(level_subsystem(real, w, &b)?.positive(real));
    Ok(span_or_line(real, letter, seeds, beta))
}

/// Both closed forms for one root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub parabolic: Subsystem,
    /// Present for integral weights only.
    pub singular: Option<Subsystem>,
}

/// [`closed_form_parabolic`] and, for integral `λ`, [`closed_form_singular`].
pub fn closed_form_reduction(real: &Realization, par: &Parabolic, w: &Weight, beta: usize) -> Result<ClosedForm> {
    let parabolic = closed_form_parabolic(real, par, beta)?;
    let singular = match closed_form_singular(real, par, w, beta) {
        Ok(s) => Some(s),
        Err(Error::NotIntegral) => None,
        Err(e) => return Err(e),
    };
    Ok(ClosedForm { parabolic, singular })
}

/// Pairs `{β, β′} ⊂ Φ⁺` singled out by the vanishing conditions, in the
/// standardized coordinates.
fn vanishing_pairs_std(real: &Realization, letter: TypeLetter, seg: &SegmentData, w: &Weight) -> Vec<(usize, usize)> {
    let l = |i: usize| &w.0[i - 1];
    let zero = Rational::zero();
    let positive_integer = |x: &Rational| x.is_integer() && x.is_positive();
    let last: Vec<usize> = if seg.m >= 1 { seg.coords(seg.m).collect() } else { Vec::new() };
    let mut out = Vec::new();
    for s in 1..seg.m {
        let block: Vec<usize> = seg.coords(s).collect();
        let no_negative = |x: &Rational| block.iter().all(|&k| l(k) != &-x);
        match letter {
            TypeLetter::B | TypeLetter::C => {
                let short = if letter == TypeLetter::B { 1 } else { 2 };
                for &i in &block {
                    let li = l(i);
                    // Case (i): i in segment s, j in the last segment.
                    let value_ok = if letter == TypeLetter::B {
                        (li * rat(2)).is_integer() && li.is_positive()
                    } else {
                        positive_integer(li)
                    };
                    if value_ok && block.iter().all(|&k| !l(k).is_zero()) && no_negative(li) {
                        for &j in last.iter().filter(|&&j| l(j) == li) {
                            out.push((e_root(real, i, short, None), e_root(real, i, 1, Some(j))));
                        }
                    }
                    // Case (ii): i < j both in segment s.
                    if positive_integer(li) && no_negative(li) && last.iter().all(|&k| l(k) != li) {
                        for &j in block.iter().filter(|&&j| j > i && l(j) == &zero) {
                            out.push((e_root(real, i, short, None), e_root(real, i, 1, Some(j))));
                        }
                    }
                }
            }
            _ => {
                // Case (iii): i < j in segment s, k < n in the last segment.
                let n = seg.n;
                if !l(n).is_zero() {
                    continue;
                }
                for &i in &block {
                    let li = l(i);
                    if !positive_integer(li) || !no_negative(li) {
                        continue;
                    }
                    for &j in block.iter().filter(|&&j| j > i && l(j) == &zero) {
                        for &k in last.iter().filter(|&&k| k < n && l(k) == li) {
                            out.push((e_root(real, i, 1, Some(j)), e_root(real, i, 1, Some(k))));
                        }
                    }
                }
            }
        }
    }
    out
}

/// The root pairs `{β, β′}` for which the vanishing conditions hold,
/// expressed in the original (unstandardized) coordinates.  For type A the
/// list is empty.
pub fn vanishing_pairs(real: &Realization, par: &Parabolic, w: &Weight) -> Result<Vec<(usize, usize)>> {
    let letter = letter_of(real)?;
    if letter == TypeLetter::A {
        return Ok(Vec::new());
    }
    let letter = classical_letter(real)?;
    let (std, seg) = standard_segments(real, par, w)?;
    let back = |r: usize| if std.phi_applied { phi_root(real, r) } else { r };
    Ok(vanishing_pairs_std(real, letter, &seg, &std.weight).into_iter().map(|(a, b)| (back(a), back(b))).collect())
}

fn check_in_lambda_i_plus(real: &Realization, par: &Parabolic, w: &Weight) -> Result<()> {
    real.check_dim(w)?;
    if is_in_lambda_i_plus(real, w, par) {
        Ok(())
    } else {
        Err(Error::NotInLambdaIPlus)
    }
}

/// Whether `c(λ, μ_β) = 0` for `β ∈ Ψ_λ⁺⁺`, by the closed-form conditions:
///
/// * (i) B (resp. C): `β = e_i` (resp. `2e_i`) or `e_i + e_j` with `i` in a
///   segment `s < m` and `j` in the last one, `λ_i = λ_j ∈ ½ℤ^{>0}` (resp.
///   `ℤ^{>0}`), and `λ_k ≠ 0, −λ_i` throughout segment `s`;
/// * (ii) B/C: the same roots with `i < j` both in segment `s < m`,
///   `λ_i ∈ ℤ^{>0}`, `λ_j = 0`, `λ_k ≠ −λ_i` throughout segment `s` and
///   `λ_l ≠ λ_i` throughout the last segment;
/// * (iii) D: `β = e_i + e_j` or `e_i + e_k` with `i < j` in a segment
///   `s < m` and `k < n` in the last one, `λ_i = λ_k ∈ ℤ^{>0}`,
///   `λ_j = λ_n = 0` and `λ_l ≠ −λ_i` throughout segment `s`.
///
/// Type A never vanishes.
pub fn theorem_d_vanishes(real: &Realization, par: &Parabolic, w: &Weight, beta: usize) -> Result<bool> {
    let letter = letter_of(real)?;
    if !matches!(letter, TypeLetter::A | TypeLetter::B | TypeLetter::C | TypeLetter::D) {
        return Err(Error::WrongType("A, B, C or D".into()));
    }
    check_in_lambda_i_plus(real, par, w)?;
    if !psi_sets(real, w, par)?.psi_plus_plus.contains(&beta) {
        return Err(Error::RootNotInPsiPlusPlus);
    }
    Ok(vanishing_pairs(real, par, w)?.iter().any(|&(a, b)| a == beta || b == beta))
}

/// Simplicity of `M_I(λ)` for classical `Φ`: for type A, `Ψ_λ⁺⁺ = ∅`; for
/// B, C and D, every root of `Ψ_λ⁺⁺` is one of the vanishing roots of
/// [`theorem_d_vanishes`].  For D with at most one zero coordinate this
/// reduces to `Ψ_λ⁺⁺ = ∅`.
pub fn classical_is_simple(real: &Realization, par: &Parabolic, w: &Weight) -> Result<bool> {
    let letter = letter_of(real)?;
    check_in_lambda_i_plus(real, par, w)?;
    let pp = psi_sets(real, w, par)?.psi_plus_plus;
    match letter {
        TypeLetter::A => Ok(pp.is_empty()),
        TypeLetter::B | TypeLetter::C | TypeLetter::D => {
            if pp.is_empty() {
                return Ok(true);
            }
            if letter == TypeLetter::D && w.0.iter().filter(|x| x.is_zero()).count() <= 1 {
                return Ok(false);
            }
            let allowed: BTreeSet<usize> = vanishing_pairs(real, par, w)?.into_iter().flat_map(|(a, b)| [a, b]).collect();
            Ok(pp.iter().all(|b| allowed.contains(b)))
        }
        _ => Err(Error::WrongType("A, B, C or D".into())),
    }
}
