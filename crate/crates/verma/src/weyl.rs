//! Weyl group actions on weights.
//!
//! The hot paths work on *scaled Dynkin labels*: a weight `λ` is encoded by
//! the integers `v_k = d·⟨λ, α_k∨⟩`, where `d` is the least common
//! denominator of the labels, together with the component of `λ` orthogonal
//! to the roots (which every reflection leaves untouched).  A reflection in
//! a root `β` then reads `v ← v − ⟨v, β∨⟩·(⟨β, α_l∨⟩)_l` and needs only
//! integer arithmetic.
//!
//! Magnitudes are bounded once at encoding time ([`LABEL_LIMIT`]); because
//! the Weyl group acts by isometries every label reachable by reflections
//! stays within a small multiple of that bound, so the kernel does not need
//! per-operation overflow checks.

use crate::rootsys::{common_denominator, rat, Parabolic, Rational, Realization, Weight};
use crate::{Error, Result};
use num_traits::{ToPrimitive, Zero};
use std::collections::{HashMap, HashSet, VecDeque};

/// Largest admissible absolute value of an encoded scaled label.
pub const LABEL_LIMIT: i64 = 1 << 40;

/// Default cap on orbit sizes.
pub const DEFAULT_ORBIT_CAP: usize = 10_000_000;

/// Shared scale and orthogonal remainder of a family of encoded weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelFrame {
    /// Common denominator `d`.
    pub scale: i64,
    /// Component of the weight orthogonal to every root.
    pub orth: Weight,
}

impl LabelFrame {
    /// Encodes `λ`, choosing the smallest scale that makes its labels
    /// integral.
    pub fn new(real: &Realization, w: &Weight) -> Result<(LabelFrame, Vec<i64>)> {
        real.check_dim(w)?;
        let labels = real.labels_of(w);
        let scale = common_denominator(&labels)?;
        let orth = w.sub(&real.from_labels(&labels));
        let frame = LabelFrame { scale, orth };
        let v = frame.scaled(&labels)?.ok_or(Error::Overflow)?;
        Ok((frame, v))
    }

    /// The frame of an integral weight with zero orthogonal part.
    pub fn integral(real: &Realization) -> LabelFrame {
        LabelFrame { scale: 1, orth: Weight::zero(real.dim) }
    }

    fn scaled(&self, labels: &[Rational]) -> Result<Option<Vec<i64>>> {
        let d = rat(self.scale);
        let mut out = Vec::with_capacity(labels.len());
        for x in labels {
            let y = x * &d;
            if !y.is_integer() {
                return Ok(None);
            }
            let y = y.to_integer().to_i64().ok_or(Error::Overflow)?;
            if y.abs() > LABEL_LIMIT {
                return Err(Error::Overflow);
            }
            out.push(y);
        }
        Ok(Some(out))
    }

    /// Encodes `μ` in this frame, or `None` when `μ` has a different
    /// orthogonal part or labels that are not multiples of `1/d`.
    pub fn encode(&self, real: &Realization, w: &Weight) -> Result<Option<Vec<i64>>> {
        real.check_dim(w)?;
        let labels = real.labels_of(w);
        if w.sub(&real.from_labels(&labels)) != self.orth {
            return Ok(None);
        }
        self.scaled(&labels)
    }

    /// Decodes scaled labels back into ambient coordinates.
    pub fn decode(&self, real: &Realization, v: &[i64]) -> Weight {
        let labels: Vec<Rational> = v.iter().map(|&x| Rational::new(x.into(), self.scale.into())).collect();
        real.from_labels(&labels).add(&self.orth)
    }

    /// Whether a scaled pairing is an integer.
    pub fn is_integral(&self, p: i64) -> bool {
        p % self.scale == 0
    }
}

/// Scaled coroot pairing `d·⟨λ, β∨⟩`.
#[inline]
pub fn pair(real: &Realization, v: &[i64], root: usize) -> i64 {
    real.co_coeffs[root].iter().zip(v).map(|(c, x)| c * x).sum()
}

/// Applies `s_β` to scaled labels in place; returns the scaled pairing.
#[inline]
pub fn reflect_labels(real: &Realization, v: &mut [i64], root: usize) -> i64 {
    let p = pair(real, v, root);
    if p != 0 {
        for (x, b) in v.iter_mut().zip(&real.labels[root]) {
            *x -= p * b;
        }
    }
    p
}

/// Reflects into the dominant chamber of the group generated by the
/// reflections in `gens` (a simple system of some subsystem).  Returns the
/// number of reflections applied.
pub fn dominantize_labels(real: &Realization, v: &mut [i64], gens: &[usize]) -> usize {
    let mut steps = 0;
    'outer: loop {
        for &g in gens {
            if pair(real, v, g) < 0 {
                reflect_labels(real, v, g);
                steps += 1;
                continue 'outer;
            }
        }
        return steps;
    }
}

/// Whether every root in `roots` pairs nonzero with `v`.
pub fn is_regular_labels(real: &Realization, v: &[i64], roots: &[usize]) -> bool {
    roots.iter().all(|&r| pair(real, v, r) != 0)
}

/// Whether scaled labels lie in `Λ_I⁺`.
pub fn in_lambda_i_plus_labels(real: &Realization, frame: &LabelFrame, v: &[i64], par: &Parabolic) -> bool {
    par.gens.iter().all(|&g| {
        let p = pair(real, v, g);
        p > 0 && frame.is_integral(p)
    })
}

/// `s_α λ = λ − ⟨λ, α∨⟩α`.
pub fn reflect(real: &Realization, w: &Weight, root: usize) -> Weight {
    let p = real.pairing(w, root);
    let mut out = w.clone();
    out.add_scaled(&-p, &real.roots[root]);
    out
}

/// An I-dominant representative with the parity of the group element used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominantizationResult {
    pub representative: Weight,
    /// `(−1)^steps`.
    pub parity: i8,
    pub steps: usize,
}

fn check_integral_on(real: &Realization, w: &Weight, roots: &[usize]) -> Result<()> {
    if roots.iter().all(|&g| real.pairing(w, g).is_integer()) {
        Ok(())
    } else {
        Err(Error::NotIntegralOnI)
    }
}

/// Dominantizes `λ` with respect to `W_I`.
pub fn dominantize(real: &Realization, w: &Weight, par: &Parabolic) -> Result<DominantizationResult> {
    check_integral_on(real, w, &par.gens)?;
    let (frame, mut v) = LabelFrame::new(real, w)?;
    let steps = dominantize_labels(real, &mut v, &par.gens);
    Ok(DominantizationResult {
        representative: frame.decode(real, &v),
        parity: if steps % 2 == 0 { 1 } else { -1 },
        steps,
    })
}

/// Dominantizes `λ` with respect to the full Weyl group.
pub fn dominantize_full(real: &Realization, w: &Weight) -> Result<DominantizationResult> {
    let whole = Parabolic::standard(real, &[])?;
    dominantize(real, w, &whole)
}

/// `(−1)^{#{α ∈ Φ_I⁺ : ⟨λ, α∨⟩ < 0}}`, the parity of the element of `W_I`
/// taking a Φ_I-regular `λ` to the dominant chamber.
pub fn inversion_parity(real: &Realization, w: &Weight, par: &Parabolic) -> i8 {
    let n = par.levi_pos.iter().filter(|&&a| real.inner(w, a) < Rational::zero()).count();
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `λ ∈ Λ_I⁺`: every simple root of `Φ_I` pairs to a positive integer.
pub fn is_in_lambda_i_plus(real: &Realization, w: &Weight, par: &Parabolic) -> bool {
    par.gens.iter().all(|&g| {
        let p = real.pairing(w, g);
        p.is_integer() && p > Rational::zero()
    })
}

/// Whether `⟨λ, α⟩ ≠ 0` for all `α ∈ Φ_I`.
pub fn is_regular_on(real: &Realization, w: &Weight, par: &Parabolic) -> bool {
    par.levi_pos.iter().all(|&a| !real.inner(w, a).is_zero())
}

/// The symmetric sign function: the product of the dominantization
/// parities when both weights are Φ_I-regular with a common I-dominant
/// representative, and 0 otherwise.
pub fn sgn(real: &Realization, a: &Weight, b: &Weight, par: &Parabolic) -> Result<i8> {
    if !is_regular_on(real, a, par) || !is_regular_on(real, b, par) {
        return Ok(0);
    }
    let da = dominantize(real, a, par)?;
    let db = dominantize(real, b, par)?;
    Ok(if da.representative == db.representative { da.parity * db.parity } else { 0 })
}

/// A Weyl group orbit, stored as scaled labels.
#[derive(Clone, Debug)]
pub struct OrbitSet {
    pub base: Weight,
    pub frame: LabelFrame,
    members: HashSet<Vec<i64>>,
}

impl OrbitSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, real: &Realization, w: &Weight) -> bool {
        matches!(self.frame.encode(real, w), Ok(Some(v)) if self.members.contains(&v))
    }

    /// Members as scaled labels, sorted.
    pub fn labels(&self) -> Vec<Vec<i64>> {
        let mut v: Vec<Vec<i64>> = self.members.iter().cloned().collect();
        v.sort_unstable();
        v
    }

    /// Members in ambient coordinates, sorted.
    pub fn weights(&self, real: &Realization) -> Vec<Weight> {
        let mut v: Vec<Weight> = self.members.iter().map(|x| self.frame.decode(real, x)).collect();
        v.sort();
        v
    }
}

/// `Wλ` by breadth-first closure under simple reflections.
pub fn weyl_orbit(real: &Realization, w: &Weight) -> Result<OrbitSet> {
    weyl_orbit_capped(real, w, DEFAULT_ORBIT_CAP)
}

/// `Wλ` with an explicit size cap.
pub fn weyl_orbit_capped(real: &Realization, w: &Weight, cap: usize) -> Result<OrbitSet> {
    let (frame, v) = LabelFrame::new(real, w)?;
    let members = orbit_labels(real, v, cap)?;
    Ok(OrbitSet { base: w.clone(), frame, members })
}

/// Orbit closure on scaled labels.
pub fn orbit_labels(real: &Realization, start: Vec<i64>, cap: usize) -> Result<HashSet<Vec<i64>>> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(v) = queue.pop_front() {
        for (k, &s) in real.simple.iter().enumerate() {
            if v[k] == 0 {
                continue;
            }
            let mut u = v.clone();
            reflect_labels(real, &mut u, s);
            if !seen.contains(&u) {
                if seen.len() >= cap {
                    return Err(Error::OrbitTooLarge { cap });
                }
                seen.insert(u.clone());
                queue.push_back(u);
            }
        }
    }
    Ok(seen)
}

/// The elements of `W_I` as integer matrices acting on (scaled) labels,
/// with their parities.  Enumerated through the free action on `ρ`.
pub fn parabolic_elements(real: &Realization, gens: &[usize], cap: usize) -> Result<Vec<(Vec<i64>, i8)>> {
    let r = real.rank();
    let gen_mats: Vec<Vec<i64>> = gens
        .iter()
        .map(|&g| {
            let mut m = vec![0i64; r * r];
            for l in 0..r {
                for k in 0..r {
                    m[l * r + k] = i64::from(l == k) - real.labels[g][l] * real.co_coeffs[g][k];
                }
            }
            m
        })
        .collect();
    let mut identity = vec![0i64; r * r];
    for k in 0..r {
        identity[k * r + k] = 1;
    }
    let key = |m: &[i64]| -> Vec<i64> { (0..r).map(|l| m[l * r..(l + 1) * r].iter().sum()).collect() };
    let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut out = vec![(identity.clone(), 1i8)];
    seen.insert(key(&identity), 0);
    let mut head = 0;
    while head < out.len() {
        let (m, par) = out[head].clone();
        head += 1;
        for g in &gen_mats {
            let mut prod = vec![0i64; r * r];
            for i in 0..r {
                for j in 0..r {
                    prod[i * r + j] = (0..r).map(|k| g[i * r + k] * m[k * r + j]).sum();
                }
            }
            let kk = key(&prod);
            if !seen.contains_key(&kk) {
                if out.len() >= cap {
                    return Err(Error::OracleCapExceeded { cap });
                }
                seen.insert(kk, out.len());
                out.push((prod, -par));
            }
        }
    }
    Ok(out)
}

/// Applies a label matrix from [`parabolic_elements`].
pub fn apply_matrix(m: &[i64], v: &[i64]) -> Vec<i64> {
    let r = v.len();
    (0..r).map(|i| (0..r).map(|k| m[i * r + k] * v[k]).sum()).collect()
}

/// Permutation of root indices induced by `s_β`.
pub fn reflection_permutation(real: &Realization, root: usize) -> Vec<usize> {
    (0..real.num_roots())
        .map(|x| {
            let p = real.root_pairing(x, root);
            let c: Vec<i64> = real.coeffs[x].iter().zip(&real.coeffs[root]).map(|(a, b)| a - p * b).collect();
            real.root_by_coeffs(&c).expect("reflection permutes roots")
        })
        .collect()
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

/// The subgroup generated by reflections in `roots`, as root permutations.
pub fn reflection_subgroup(real: &Realization, roots: &[usize]) -> HashSet<Vec<usize>> {
    let gens: Vec<Vec<usize>> = roots.iter().map(|&r| reflection_permutation(real, r)).collect();
    let id: Vec<usize> = (0..real.num_roots()).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        for g in &gens {
            let u = compose(g, &w);
            if seen.insert(u.clone()) {
                queue.push_back(u);
            }
        }
    }
    seen
}

/// Brute-force fixator of `λ` in `W`, as root permutations.  Only for
/// rank ≤ 4.
pub fn stabilizer_brute(real: &Realization, w: &Weight) -> Result<HashSet<Vec<usize>>> {
    if real.rank() > 4 {
        return Err(Error::RankTooLargeForOracle { rank: real.rank() });
    }
    let whole = reflection_subgroup(real, &real.simple);
    let mut out = HashSet::new();
    for perm in whole {
        // An element fixes λ iff it fixes its pairing with every root after
        // transport: ⟨wλ, α⟩ = ⟨λ, w⁻¹α⟩.  Compare ⟨λ, α⟩ with ⟨λ, wα⟩.
        if (0..real.num_roots()).all(|a| real.inner(w, a) == real.inner(w, perm[a])) {
            out.insert(perm);
        }
    }
    Ok(out)
}
