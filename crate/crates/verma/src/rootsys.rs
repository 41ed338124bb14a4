//! Standard realizations of finite root systems, subsystems as index sets,
//! and the exact linear algebra used throughout the crate.
//!
//! A [`Realization`] stores every root once, in a fixed order: positive
//! roots sorted by height (ties broken so that the simple roots come out in
//! Bourbaki order), followed by their negatives in the same order.  All
//! subsystems are sorted index sets into that table.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

/// Exact rational scalar; always reduced with positive denominator.
pub type Rational = BigRational;

/// The rational `n`.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The rational `n/d`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses an integer or `p/q` literal.  Decimal notation is rejected so that
/// every input stays exact.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::Parse(format!("not a rational literal: {text:?}"));
    let int = |s: &str, signed: bool| -> Result<BigInt> {
        let digits = if signed { s.strip_prefix(['-', '+']).unwrap_or(s) } else { s };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        BigInt::from_str(s.strip_prefix('+').unwrap_or(s)).map_err(|_| bad())
    };
    match t.split_once('/') {
        None => Ok(Rational::from_integer(int(t, true)?)),
        Some((n, d)) => {
            let n = int(n, true)?;
            let d = int(d, false)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// A weight in the ambient coordinates of a realization.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Weight(pub Vec<Rational>);

impl Weight {
    pub fn zero(dim: usize) -> Self {
        Weight(vec![Rational::zero(); dim])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Weight(v.iter().map(|&x| rat(x)).collect())
    }

    /// Parses a comma-separated list of rational literals, optionally wrapped
    /// in parentheses.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let t = t.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(t);
        if t.trim().is_empty() {
            return Ok(Weight(Vec::new()));
        }
        t.split(',').map(parse_rational).collect::<Result<Vec<_>>>().map(Weight)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &Weight) -> Rational {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Rational) -> Weight {
        Weight(self.0.iter().map(|a| a * c).collect())
    }

    /// Adds `c·other` in place.
    pub fn add_scaled(&mut self, c: &Rational, other: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += c * b;
        }
    }

    /// Comma-separated coordinates without parentheses.
    pub fn to_csv(&self) -> String {
        self.0.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_csv())
    }
}

/// Cartan–Killing family letter.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum TypeLetter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for TypeLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// A finite irreducible Cartan type such as `B8` or `E6`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CartanType {
    pub letter: TypeLetter,
    pub rank: usize,
}

impl CartanType {
    /// Validates the (letter, rank) pair.
    pub fn new(letter: TypeLetter, rank: usize) -> Result<Self> {
        use TypeLetter::*;
        let ok = match letter {
            A => rank >= 1,
            B | C => rank >= 2,
            D => rank >= 4,
            E => (6..=8).contains(&rank),
            F => rank == 4,
            G => rank == 2,
        };
        if ok {
            Ok(CartanType { letter, rank })
        } else {
            Err(Error::InvalidType(format!("{letter}{rank}")))
        }
    }

    /// Number of roots.
    pub fn num_roots(&self) -> usize {
        use TypeLetter::*;
        let n = self.rank;
        match self.letter {
            A => n * (n + 1),
            B | C => 2 * n * n,
            D => 2 * n * (n - 1),
            E => [72, 126, 240][n - 6],
            F => 48,
            G => 12,
        }
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.letter, TypeLetter::A | TypeLetter::D | TypeLetter::E)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidType(s.to_string());
        let mut chars = s.chars();
        let letter = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => TypeLetter::A,
            Some('B') => TypeLetter::B,
            Some('C') => TypeLetter::C,
            Some('D') => TypeLetter::D,
            Some('E') => TypeLetter::E,
            Some('F') => TypeLetter::F,
            Some('G') => TypeLetter::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        CartanType::new(letter, rank)
    }
}

/// A sorted, negation-closed set of root indices into a [`Realization`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Subsystem {
    members: Vec<usize>,
}

impl Subsystem {
    /// Builds a subsystem from arbitrary indices (sorted and deduplicated).
    pub fn from_indices(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Subsystem { members }
    }

    pub fn empty() -> Self {
        Subsystem::default()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, root: usize) -> bool {
        self.members.binary_search(&root).is_ok()
    }

    pub fn intersect(&self, other: &Subsystem) -> Subsystem {
        Subsystem { members: self.members.iter().copied().filter(|&r| other.contains(r)).collect() }
    }

    pub fn is_subset_of(&self, other: &Subsystem) -> bool {
        self.members.iter().all(|&r| other.contains(r))
    }

    /// Members that are positive in the ambient realization.
    pub fn positive(&self, real: &Realization) -> Vec<usize> {
        self.members.iter().copied().filter(|&r| real.is_positive(r)).collect()
    }
}

/// Result of matching an irreducible subsystem to a standard Dynkin diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub kind: CartanType,
    /// Every labeling realizing a diagram isomorphism; `labelings[x][k]` is
    /// the root index sent to Bourbaki node `k + 1`.  The first entry is the
    /// lexicographically smallest.
    pub labelings: Vec<Vec<usize>>,
}

/// A root system realized in explicit ambient coordinates.
#[derive(Debug)]
pub struct Realization {
    /// The Cartan type, when the system is irreducible and identified.
    pub kind: Option<CartanType>,
    /// Ambient dimension.
    pub dim: usize,
    /// All roots: positive roots first (by height), then their negatives.
    pub roots: Vec<Weight>,
    /// Simple roots as root indices, in Bourbaki order.
    pub simple: Vec<usize>,
    /// Coordinates of each root over the simple roots.
    pub coeffs: Vec<Vec<i64>>,
    /// Coordinates of each coroot over the simple coroots.
    pub co_coeffs: Vec<Vec<i64>>,
    /// `labels[β][l] = ⟨β, α_l∨⟩`.
    pub labels: Vec<Vec<i64>>,
    /// `⟨β, β⟩` for every root.
    pub norms: Vec<Rational>,
    /// `cartan[k][l] = ⟨α_k, α_l∨⟩`.
    pub cartan: Vec<Vec<i64>>,
    /// Fundamental weights `ϖ_k` with `⟨ϖ_k, α_l∨⟩ = δ_kl`.
    pub fundamental: Vec<Weight>,
    index: HashMap<Weight, usize>,
    coeff_index: HashMap<Vec<i64>, usize>,
    root_pairings: Vec<i32>,
}

static STANDARD: OnceLock<Mutex<HashMap<CartanType, Arc<Realization>>>> = OnceLock::new();

/// Returns the (cached) standard realization of the given type.
pub fn build_realization(letter: TypeLetter, rank: usize) -> Result<Arc<Realization>> {
    let kind = CartanType::new(letter, rank)?;
    standard(kind)
}

/// Returns the (cached) standard realization of `kind`.
pub fn standard(kind: CartanType) -> Result<Arc<Realization>> {
    let cache = STANDARD.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(r) = cache.lock().expect("realization cache poisoned").get(&kind) {
        return Ok(Arc::clone(r));
    }
    let real = Arc::new(Realization::from_simple_roots(Some(kind), standard_simple_roots(kind))?);
    let mut guard = cache.lock().expect("realization cache poisoned");
    Ok(Arc::clone(guard.entry(kind).or_insert(real)))
}

fn unit(dim: usize, i: usize, c: Rational) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[i] = c;
    v
}

fn e8_simple_roots() -> Vec<Weight> {
    let h = ratio(1, 2);
    let mut out = Vec::with_capacity(8);
    let mut a1 = vec![-h.clone(); 8];
    a1[0] = h.clone();
    a1[7] = h;
    out.push(Weight(a1));
    let mut a2 = unit(8, 0, rat(1));
    a2[1] = rat(1);
    out.push(Weight(a2));
    for k in 1..7 {
        // α_{k+2} = e_{k+1} − e_k (1-based coordinates)
        let mut a = unit(8, k, rat(1));
        a[k - 1] = rat(-1);
        out.push(Weight(a));
    }
    out
}

/// The standard simple roots of `kind`, in Bourbaki order.
pub fn standard_simple_roots(kind: CartanType) -> Vec<Weight> {
    use TypeLetter::*;
    let n = kind.rank;
    let diff = |dim: usize, i: usize, j: usize| {
        let mut v = unit(dim, i, rat(1));
        v[j] = rat(-1);
        Weight(v)
    };
    match kind.letter {
        A => (0..n).map(|i| diff(n + 1, i, i + 1)).collect(),
        B | C | D => {
            let mut out: Vec<Weight> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            out.push(match kind.letter {
                B => Weight(unit(n, n - 1, rat(1))),
                C => Weight(unit(n, n - 1, rat(2))),
                _ => {
                    let mut v = unit(n, n - 1, rat(1));
                    v[n - 2] = rat(1);
                    Weight(v)
                }
            });
            out
        }
        E => e8_simple_roots().into_iter().take(n).collect(),
        F => {
            let h = ratio(1, 2);
            vec![
                diff(4, 1, 2),
                diff(4, 2, 3),
                Weight(unit(4, 3, rat(1))),
                Weight(vec![h.clone(), -h.clone(), -h.clone(), -h]),
            ]
        }
        G => vec![diff(3, 0, 1), Weight(vec![rat(-2), rat(1), rat(1)])],
    }
}

fn to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}

impl Realization {
    /// Builds the root system generated by reflections in `simple`, which
    /// must be a linearly independent set of vectors with integral Cartan
    /// matrix.
    pub fn from_simple_roots(kind: Option<CartanType>, simple: Vec<Weight>) -> Result<Realization> {
        let r = simple.len();
        let dim = simple.first().map_or(0, Weight::dim);
        let bad = |m: &str| Error::Internal(format!("simple roots rejected: {m}"));
        let snorm: Vec<Rational> = simple.iter().map(|a| a.dot(a)).collect();
        let mut cartan = vec![vec![0i64; r]; r];
        for k in 0..r {
            for l in 0..r {
                let v = rat(2) * simple[k].dot(&simple[l]) / &snorm[l];
                cartan[k][l] = to_i64(&v).ok_or_else(|| bad("non-integral Cartan entry"))?;
            }
        }

        // Closure of the simple roots under simple reflections, on
        // coefficient vectors.
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut queue = VecDeque::new();
        for k in 0..r {
            let mut e = vec![0i64; r];
            e[k] = 1;
            if seen.insert(e.clone(), ()).is_none() {
                queue.push_back(e);
            }
        }
        while let Some(c) = queue.pop_front() {
            for k in 0..r {
                let p: i64 = (0..r).map(|m| c[m] * cartan[m][k]).sum();
                if p == 0 {
                    continue;
                }
                let mut d = c.clone();
                d[k] -= p;
                if !seen.contains_key(&d) {
                    if seen.len() > 20_000 {
                        return Err(bad("root closure is not finite"));
                    }
                    seen.insert(d.clone(), ());
                    queue.push_back(d);
                }
            }
        }
        let mut pos: Vec<Vec<i64>> = seen.into_keys().filter(|c| c.iter().all(|&x| x >= 0)).collect();
        pos.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let mut coeffs = pos.clone();
        coeffs.extend(pos.iter().map(|c| c.iter().map(|x| -x).collect::<Vec<_>>()));
        let num = coeffs.len();

        let roots: Vec<Weight> = coeffs
            .iter()
            .map(|c| {
                let mut w = Weight::zero(dim);
                for (k, &x) in c.iter().enumerate() {
                    if x != 0 {
                        w.add_scaled(&rat(x), &simple[k]);
                    }
                }
                w
            })
            .collect();
        let norms: Vec<Rational> = roots.iter().map(|a| a.dot(a)).collect();
        let mut co_coeffs = Vec::with_capacity(num);
        let mut labels = Vec::with_capacity(num);
        for (i, c) in coeffs.iter().enumerate() {
            let mut cc = Vec::with_capacity(r);
            for k in 0..r {
                let v = rat(c[k]) * &snorm[k] / &norms[i];
                cc.push(to_i64(&v).ok_or_else(|| bad("non-integral coroot"))?);
            }
            co_coeffs.push(cc);
            labels.push((0..r).map(|l| (0..r).map(|k| c[k] * cartan[k][l]).sum()).collect::<Vec<i64>>());
        }

        let a: Vec<Vec<Rational>> = cartan.iter().map(|row| row.iter().map(|&x| rat(x)).collect()).collect();
        let m = invert(&a).ok_or_else(|| bad("singular Cartan matrix"))?;
        let fundamental = (0..r)
            .map(|i| {
                let mut w = Weight::zero(dim);
                for k in 0..r {
                    w.add_scaled(&m[i][k], &simple[k]);
                }
                w
            })
            .collect();

        let mut root_pairings = vec![0i32; num * num];
        for x in 0..num {
            for g in 0..num {
                let v: i64 = (0..r).map(|l| co_coeffs[g][l] * labels[x][l]).sum();
                root_pairings[x * num + g] = v as i32;
            }
        }
        let index = roots.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let coeff_index = coeffs.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        let simple_idx = (0..r).collect();
        Ok(Realization {
            kind,
            dim,
            roots,
            simple: simple_idx,
            coeffs,
            co_coeffs,
            labels,
            norms,
            cartan,
            fundamental,
            index,
            coeff_index,
            root_pairings,
        })
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn is_positive(&self, root: usize) -> bool {
        root < self.num_positive()
    }

    /// Index of `−β`.
    pub fn neg(&self, root: usize) -> usize {
        let h = self.num_positive();
        if root < h {
            root + h
        } else {
            root - h
        }
    }

    /// The positive root among `±β`.
    pub fn abs(&self, root: usize) -> usize {
        root % self.num_positive()
    }

    pub fn root_index(&self, w: &Weight) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Index of the root with the given simple-root coordinates.
    pub fn root_by_coeffs(&self, c: &[i64]) -> Option<usize> {
        self.coeff_index.get(c).copied()
    }

    pub fn height(&self, root: usize) -> i64 {
        self.coeffs[root].iter().sum()
    }

    /// The highest root.
    pub fn highest_root(&self) -> usize {
        self.num_positive() - 1
    }

    /// Checks that `λ` has the ambient dimension.
    pub fn check_dim(&self, w: &Weight) -> Result<()> {
        if w.dim() == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dim, got: w.dim() })
        }
    }

    /// `⟨λ, α∨⟩ = 2⟨λ, α⟩/⟨α, α⟩`.
    pub fn pairing(&self, w: &Weight, root: usize) -> Rational {
        rat(2) * w.dot(&self.roots[root]) / &self.norms[root]
    }

    /// `⟨λ, α⟩`.
    pub fn inner(&self, w: &Weight, root: usize) -> Rational {
        w.dot(&self.roots[root])
    }

    /// `⟨α, γ∨⟩` for two roots.
    pub fn root_pairing(&self, a: usize, g: usize) -> i64 {
        self.root_pairings[a * self.num_roots() + g] as i64
    }

    /// Dynkin labels `⟨λ, α_k∨⟩`.
    pub fn labels_of(&self, w: &Weight) -> Vec<Rational> {
        self.simple.iter().map(|&s| self.pairing(w, s)).collect()
    }

    /// The weight with the given Dynkin labels lying in the span of the roots.
    pub fn from_labels(&self, labels: &[Rational]) -> Weight {
        let mut w = Weight::zero(self.dim);
        for (k, x) in labels.iter().enumerate() {
            if !x.is_zero() {
                w.add_scaled(x, &self.fundamental[k]);
            }
        }
        w
    }

    /// Half the sum of the positive roots.
    pub fn rho(&self) -> Weight {
        let mut w = Weight::zero(self.dim);
        for f in &self.fundamental {
            w = w.add(f);
        }
        w
    }

    /// The whole root system as a subsystem.
    pub fn whole(&self) -> Subsystem {
        Subsystem { members: (0..self.num_roots()).collect() }
    }

    /// `Φ_λ = {α : ⟨λ, α⟩ = 0}`.
    pub fn singular_subsystem(&self, w: &Weight) -> Subsystem {
        let h = self.num_positive();
        let pos: Vec<usize> = (0..h).filter(|&r| self.inner(w, r).is_zero()).collect();
        self.close_negatives(&pos)
    }

    /// `Φ_[λ] = {α : ⟨λ, α∨⟩ ∈ ℤ}`.
    pub fn integral_subsystem(&self, w: &Weight) -> Subsystem {
        let h = self.num_positive();
        let pos: Vec<usize> = (0..h).filter(|&r| self.pairing(w, r).is_integer()).collect();
        self.close_negatives(&pos)
    }

    /// The subsystem `{±β : β ∈ pos}`.
    pub fn close_negatives(&self, roots: &[usize]) -> Subsystem {
        let mut m: Vec<usize> = roots.iter().flat_map(|&r| [r, self.neg(r)]).collect();
        m.sort_unstable();
        m.dedup();
        Subsystem { members: m }
    }

    /// `(ℚ·span seeds) ∩ Φ`, for arbitrary ambient seed vectors.
    pub fn span_intersect(&self, seeds: &[Weight]) -> Subsystem {
        let mut space = RowSpace::new(self.dim);
        for s in seeds {
            space.insert(&s.0);
        }
        let members = (0..self.num_roots()).filter(|&r| space.contains(&self.roots[r].0)).collect();
        Subsystem { members }
    }

    /// `(ℚ·span roots) ∩ within`, computed on simple-root coordinates.
    pub fn span_of_roots_within(&self, roots: &[usize], within: &Subsystem) -> Subsystem {
        let mut space = IntRowSpace::new(self.rank());
        for &r in roots {
            space.insert(&self.coeffs[r]);
        }
        let members = within.members.iter().copied().filter(|&r| space.contains(&self.coeffs[r])).collect();
        Subsystem { members }
    }

    /// The irreducible component of `sub` containing `β`.
    pub fn irreducible_component(&self, sub: &Subsystem, beta: usize) -> Result<Subsystem> {
        if !sub.contains(beta) {
            return Err(Error::RootNotInSubsystem);
        }
        let mut inside = vec![false; self.num_roots()];
        let mut queue = VecDeque::from([beta]);
        inside[beta] = true;
        while let Some(a) = queue.pop_front() {
            for &g in &sub.members {
                if !inside[g] && self.root_pairing(a, g) != 0 {
                    inside[g] = true;
                    queue.push_back(g);
                }
            }
        }
        let members = sub.members.iter().copied().filter(|&r| inside[r]).collect();
        Ok(Subsystem { members })
    }

    /// Decomposition of `sub` into irreducible components, ordered by their
    /// smallest member.
    pub fn components(&self, sub: &Subsystem) -> Vec<Subsystem> {
        let mut out: Vec<Subsystem> = Vec::new();
        for &r in &sub.members {
            if out.iter().any(|c| c.contains(r)) {
                continue;
            }
            out.push(self.irreducible_component(sub, r).expect("member of subsystem"));
        }
        out
    }

    /// The simple system of `sub` relative to `sub ∩ Φ⁺`: positive members
    /// that are not a sum of two positive members.  Sorted by root index.
    pub fn simple_system_of(&self, sub: &Subsystem) -> Vec<usize> {
        let pos = sub.positive(self);
        pos.iter()
            .copied()
            .filter(|&g| {
                !pos.iter().any(|&a| {
                    a != g && {
                        let d: Vec<i64> = self.coeffs[g].iter().zip(&self.coeffs[a]).map(|(x, y)| x - y).collect();
                        self.root_by_coeffs(&d).is_some_and(|i| self.is_positive(i) && sub.contains(i))
                    }
                })
            })
            .collect()
    }

    /// Rank of a subsystem.
    pub fn rank_of(&self, sub: &Subsystem) -> usize {
        self.simple_system_of(sub).len()
    }

    /// Identifies the Cartan type of an irreducible subsystem together with
    /// all Bourbaki labelings of its simple system.
    ///
    /// A rank-2 double bond is called `C2` when the ambient system is of
    /// type C and `B2` otherwise.
    pub fn dynkin_classify(&self, sub: &Subsystem) -> Result<Classification> {
        if sub.is_empty() || self.components(sub).len() != 1 {
            return Err(Error::NotIrreducible);
        }
        let simple = self.simple_system_of(sub);
        let r = simple.len();
        let local: Vec<Vec<i64>> =
            simple.iter().map(|&a| simple.iter().map(|&b| self.root_pairing(a, b)).collect()).collect();
        let prefer_c = self.kind.is_some_and(|k| k.letter == TypeLetter::C);
        let mut letters = vec![TypeLetter::A, TypeLetter::D, TypeLetter::E, TypeLetter::F, TypeLetter::G];
        if prefer_c {
            letters.splice(1..1, [TypeLetter::C, TypeLetter::B]);
        } else {
            letters.splice(1..1, [TypeLetter::B, TypeLetter::C]);
        }
        for letter in letters {
            let Ok(kind) = CartanType::new(letter, r) else { continue };
            if kind.num_roots() != sub.len() {
                continue;
            }
            let std = standard(kind)?;
            let labelings = diagram_isomorphisms(&local, &std.cartan);
            if labelings.is_empty() {
                continue;
            }
            let mut labelings: Vec<Vec<usize>> = labelings
                .into_iter()
                .map(|pi| {
                    let mut lab = vec![0; r];
                    for (a, &k) in pi.iter().enumerate() {
                        lab[k] = simple[a];
                    }
                    lab
                })
                .collect();
            labelings.sort();
            return Ok(Classification { kind, labelings });
        }
        Err(Error::Internal("subsystem matches no standard Cartan matrix".into()))
    }

    /// The unique weight in `ℚ·sub` with the same coroot pairings as `λ` on
    /// `sub`.
    pub fn restrict(&self, w: &Weight, sub: &Subsystem) -> Weight {
        let basis = self.simple_system_of(sub);
        let k = basis.len();
        if k == 0 {
            return Weight::zero(self.dim);
        }
        let a: Vec<Vec<Rational>> =
            (0..k).map(|l| (0..k).map(|m| rat(self.root_pairing(basis[m], basis[l]))).collect()).collect();
        let b: Vec<Rational> = basis.iter().map(|&l| self.pairing(w, l)).collect();
        let x = solve(&a, &b).expect("simple system is linearly independent");
        let mut out = Weight::zero(self.dim);
        for (m, &s) in basis.iter().enumerate() {
            out.add_scaled(&x[m], &self.roots[s]);
        }
        out
    }

    /// Realizes `sub` as a root system of its own with the given simple
    /// roots (in the order to be used as its numbering).  Returns the new
    /// realization and the map from its root indices to ambient indices.
    pub fn sub_realization(&self, kind: Option<CartanType>, simple: &[usize]) -> Result<(Realization, Vec<usize>)> {
        let vecs = simple.iter().map(|&s| self.roots[s].clone()).collect();
        let sub = Realization::from_simple_roots(kind, vecs)?;
        let map = sub
            .roots
            .iter()
            .map(|w| self.root_index(w).ok_or_else(|| Error::Internal("sub-realization root outside Φ".into())))
            .collect::<Result<Vec<_>>>()?;
        Ok((sub, map))
    }
}

/// All bijections `π` from local simple roots to standard nodes with
/// `local[a][b] = std[π a][π b]`.
fn diagram_isomorphisms(local: &[Vec<i64>], std: &[Vec<i64>]) -> Vec<Vec<usize>> {
    fn go(a: usize, local: &[Vec<i64>], std: &[Vec<i64>], pi: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let r = local.len();
        if a == r {
            out.push(pi.clone());
            return;
        }
        for k in 0..r {
            if used[k] {
                continue;
            }
            let ok = (0..a).all(|b| local[a][b] == std[k][pi[b]] && local[b][a] == std[pi[b]][k]);
            if ok {
                used[k] = true;
                pi.push(k);
                go(a + 1, local, std, pi, used, out);
                pi.pop();
                used[k] = false;
            }
        }
    }
    if local.len() != std.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(0, local, std, &mut Vec::new(), &mut vec![false; local.len()], &mut out);
    out
}

/// Diagram automorphisms of a standard type, as permutations of the
/// 0-based node indices.
pub fn diagram_automorphisms(kind: CartanType) -> Result<Vec<Vec<usize>>> {
    let std = standard(kind)?;
    let mut auts = diagram_isomorphisms(&std.cartan, &std.cartan);
    auts.sort();
    Ok(auts)
}

/// The parabolic data determined by `I ⊂ Δ` (or, more generally, by a
/// Levi subsystem `Φ_I`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parabolic {
    /// Crossed Bourbaki indices `Δ∖I` (1-based).  Empty for a Levi given
    /// only as a subsystem of a non-standard realization.
    pub crossed: Vec<usize>,
    /// Simple system of `Φ_I`, as root indices.
    pub gens: Vec<usize>,
    /// `Φ_I`.
    pub levi: Subsystem,
    /// `Φ_I⁺`.
    pub levi_pos: Vec<usize>,
}

impl Parabolic {
    /// The standard parabolic with the given crossed nodes (1-based).
    pub fn standard(real: &Realization, crossed: &[usize]) -> Result<Self> {
        let r = real.rank();
        let mut crossed = crossed.to_vec();
        crossed.sort_unstable();
        crossed.dedup();
        if let Some(&bad) = crossed.iter().find(|&&k| k == 0 || k > r) {
            return Err(Error::Parse(format!("crossed index {bad} outside 1..={r}")));
        }
        let included: Vec<usize> = (1..=r).filter(|k| !crossed.contains(k)).collect();
        let members = (0..real.num_roots())
            .filter(|&x| crossed.iter().all(|&k| real.coeffs[x][k - 1] == 0))
            .collect();
        let levi = Subsystem { members };
        Ok(Parabolic {
            crossed,
            gens: included.iter().map(|&k| real.simple[k - 1]).collect(),
            levi_pos: levi.positive(real),
            levi,
        })
    }

    /// The standard parabolic with the given included nodes (1-based).
    pub fn from_included(real: &Realization, included: &[usize]) -> Result<Self> {
        let r = real.rank();
        if let Some(&bad) = included.iter().find(|&&k| k == 0 || k > r) {
            return Err(Error::Parse(format!("included index {bad} outside 1..={r}")));
        }
        let crossed: Vec<usize> = (1..=r).filter(|k| !included.contains(k)).collect();
        Parabolic::standard(real, &crossed)
    }

    /// The parabolic whose Levi part is an arbitrary closed subsystem.
    pub fn from_levi(real: &Realization, levi: Subsystem) -> Self {
        let gens = real.simple_system_of(&levi);
        let crossed = if gens.iter().all(|&g| g < real.rank()) {
            (1..=real.rank()).filter(|k| !gens.contains(&(k - 1))).collect()
        } else {
            Vec::new()
        };
        Parabolic { crossed, gens, levi_pos: levi.positive(real), levi }
    }

    /// Included Bourbaki indices (1-based) for a standard parabolic.
    pub fn included(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.gens.iter().map(|&g| g + 1).collect();
        v.sort_unstable();
        v
    }
}

/// Inverse of a square rational matrix, or `None` if singular.
pub fn invert(a: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, p);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..2 * n {
                    let d = &f * &m[col][c];
                    m[r][c] -= d;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Solves `x·A = b`, i.e. `Σ_m x_m A[l][m] = b_l` with `A[l][m]` indexed
/// as given (rows are equations).
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let inv = invert(a)?;
    Some(inv.iter().map(|row| row.iter().zip(b).map(|(x, y)| x * y).sum()).collect())
}

/// Incrementally built row space over ℚ.
#[derive(Clone, Debug)]
pub struct RowSpace {
    width: usize,
    rows: Vec<(usize, Vec<Rational>)>,
}

impl RowSpace {
    pub fn new(width: usize) -> Self {
        RowSpace { width, rows: Vec::new() }
    }

    fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    *x -= &f * y;
                }
            }
        }
        v
    }

    /// Adds `v`; returns whether it enlarged the space.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        debug_assert_eq!(v.len(), self.width);
        let r = self.reduce(v);
        match r.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(p) => {
                let inv = r[p].recip();
                self.rows.push((p, r.into_iter().map(|x| x * &inv).collect()));
                true
            }
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// Row space over ℚ for integer vectors, using fraction-free elimination.
#[derive(Clone, Debug)]
pub struct IntRowSpace {
    width: usize,
    rows: Vec<(usize, Vec<i128>)>,
}

impl IntRowSpace {
    pub fn new(width: usize) -> Self {
        IntRowSpace { width, rows: Vec::new() }
    }

    fn reduce(&self, v: &[i64]) -> Vec<i128> {
        let mut v: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for (p, row) in &self.rows {
            let f = v[*p];
            if f != 0 {
                let g = row[*p];
                for (x, y) in v.iter_mut().zip(row) {
                    *x = *x * g - f * y;
                }
                let c = v.iter().fold(0i128, |acc, &x| acc.gcd(&x));
                if c > 1 {
                    v.iter_mut().for_each(|x| *x /= c);
                }
            }
        }
        v
    }

    /// Adds `v`; returns whether it enlarged the space.
    pub fn insert(&mut self, v: &[i64]) -> bool {
        debug_assert_eq!(v.len(), self.width);
        let r = self.reduce(v);
        match r.iter().position(|&x| x != 0) {
            None => false,
            Some(p) => {
                self.rows.push((p, r));
                true
            }
        }
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// Least common multiple of the denominators of `v`, as `i64`.
pub fn common_denominator(v: &[Rational]) -> Result<i64> {
    let mut d = BigInt::one();
    for x in v {
        d = d.lcm(x.denom());
    }
    d.to_i64().ok_or(Error::Overflow)
}

/// Absolute value helper for rationals.
pub fn rabs(x: &Rational) -> Rational {
    x.abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(v: &[i64]) -> Weight {
        Weight::from_ints(v)
    }

    #[test]
    fn root_counts_match_the_classification() {
        for name in ["A1", "A2", "A5", "B2", "B3", "B8", "C3", "C5", "D4", "D6", "E6", "E7", "E8", "F4", "G2"] {
            let kind: CartanType = name.parse().unwrap();
            let real = standard(kind).unwrap();
            assert_eq!(real.num_roots(), kind.num_roots(), "{name}");
            assert_eq!(real.rank(), kind.rank);
            for r in 0..real.num_roots() {
                assert_eq!(real.roots[real.neg(r)], real.roots[r].scale(&rat(-1)));
                let sign = if real.is_positive(r) { 1 } else { -1 };
                assert!(real.coeffs[r].iter().all(|&c| c * sign >= 0));
            }
        }
    }

    #[test]
    fn a2_b8_e8_realizations() {
        let a2 = build_realization(TypeLetter::A, 2).unwrap();
        assert_eq!(a2.dim, 3);
        assert_eq!(a2.roots[a2.simple[0]], w(&[1, -1, 0]));
        assert_eq!(a2.roots[a2.simple[1]], w(&[0, 1, -1]));
        let b8 = build_realization(TypeLetter::B, 8).unwrap();
        assert_eq!(b8.num_roots(), 128);
        assert_eq!(b8.dim, 8);
        let e8 = build_realization(TypeLetter::E, 8).unwrap();
        assert_eq!(e8.num_roots(), 240);
        let mut top = vec![0; 8];
        top[6] = 1;
        top[7] = 1;
        assert_eq!(e8.roots[e8.highest_root()], w(&top));
        let e6 = build_realization(TypeLetter::E, 6).unwrap();
        assert_eq!(e6.dim, 8);
        let g2 = build_realization(TypeLetter::G, 2).unwrap();
        assert_eq!(g2.roots[g2.simple[1]], w(&[-2, 1, 1]));
    }

    #[test]
    fn invalid_types_are_rejected() {
        for bad in ["A0", "B1", "C1", "D3", "E5", "E9", "F3", "G3", "X2", "B"] {
            assert!(bad.parse::<CartanType>().is_err(), "{bad}");
        }
    }

    #[test]
    fn fundamental_weights_are_dual_to_coroots() {
        for name in ["A3", "B4", "C4", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let real = standard(name.parse().unwrap()).unwrap();
            for (i, f) in real.fundamental.iter().enumerate() {
                for (j, &s) in real.simple.iter().enumerate() {
                    let expect = if i == j { rat(1) } else { rat(0) };
                    assert_eq!(real.pairing(f, s), expect, "{name}");
                }
            }
        }
    }

    #[test]
    fn pairing_examples() {
        let a2 = build_realization(TypeLetter::A, 2).unwrap();
        let b2 = build_realization(TypeLetter::B, 2).unwrap();
        let b3 = build_realization(TypeLetter::B, 3).unwrap();
        let e13 = a2.root_index(&w(&[1, 0, -1])).unwrap();
        assert_eq!(a2.pairing(&w(&[1, 0, -1]), e13), rat(2));
        let half = Weight(vec![ratio(1, 2), ratio(1, 2)]);
        assert_eq!(b2.pairing(&half, b2.root_index(&w(&[0, 1])).unwrap()), rat(1));
        let l = w(&[1, 0, 1]);
        assert_eq!(b3.pairing(&l, b3.root_index(&w(&[1, 0, 1])).unwrap()), rat(2));
    }

    #[test]
    fn singular_and_integral_subsystems() {
        let b3 = build_realization(TypeLetter::B, 3).unwrap();
        let sing = b3.singular_subsystem(&w(&[1, 0, 1]));
        let expect = b3.close_negatives(&[b3.root_index(&w(&[1, 0, -1])).unwrap(), b3.root_index(&w(&[0, 1, 0])).unwrap()]);
        assert_eq!(sing, expect);
        assert_eq!(b3.singular_subsystem(&Weight::zero(3)), b3.whole());
        assert!(b3.singular_subsystem(&b3.rho()).is_empty());

        let b2 = build_realization(TypeLetter::B, 2).unwrap();
        let integral = b2.integral_subsystem(&Weight(vec![ratio(1, 2), ratio(1, 4)]));
        assert_eq!(integral, b2.close_negatives(&[b2.root_index(&w(&[1, 0])).unwrap()]));
        let a2 = build_realization(TypeLetter::A, 2).unwrap();
        let third = Weight(vec![ratio(1, 3), ratio(1, 3), ratio(-2, 3)]);
        assert_eq!(a2.integral_subsystem(&third), a2.whole());
    }

    #[test]
    fn span_intersect_examples() {
        let b2 = build_realization(TypeLetter::B, 2).unwrap();
        assert!(b2.span_intersect(&[]).is_empty());
        let all = b2.span_intersect(&[w(&[0, 1]), w(&[1, -1])]);
        assert_eq!(all, b2.whole());
        let a2 = build_realization(TypeLetter::A, 2).unwrap();
        let line = a2.span_intersect(&[w(&[1, -1, 0])]);
        assert_eq!(line.len(), 2);
    }

    #[test]
    fn components_and_simple_systems() {
        let a3 = build_realization(TypeLetter::A, 3).unwrap();
        let x = a3.root_index(&w(&[1, -1, 0, 0])).unwrap();
        let y = a3.root_index(&w(&[0, 0, 1, -1])).unwrap();
        let sub = a3.close_negatives(&[x, y]);
        assert_eq!(a3.irreducible_component(&sub, x).unwrap(), a3.close_negatives(&[x]));
        assert_eq!(a3.components(&sub).len(), 2);
        assert_eq!(a3.irreducible_component(&sub, a3.simple[1]), Err(Error::RootNotInSubsystem));

        let b3 = build_realization(TypeLetter::B, 3).unwrap();
        let sub = b3.span_intersect(&[w(&[1, 0, 0]), w(&[0, 1, 0])]);
        let simple: Vec<Weight> = b3.simple_system_of(&sub).iter().map(|&r| b3.roots[r].clone()).collect();
        assert_eq!(simple, vec![w(&[1, -1, 0]), w(&[0, 1, 0])]);
        assert_eq!(b3.simple_system_of(&b3.whole()), b3.simple);
    }

    #[test]
    fn parabolic_span_adds_exactly_one_simple_root() {
        let real = build_realization(TypeLetter::B, 4).unwrap();
        let par = Parabolic::standard(&real, &[2]).unwrap();
        for beta in 0..real.num_positive() {
            if par.levi.contains(beta) {
                continue;
            }
            let mut seeds = par.levi_pos.clone();
            seeds.push(beta);
            let span = real.span_of_roots_within(&seeds, &real.whole());
            let simple = real.simple_system_of(&span);
            assert_eq!(simple.len(), par.gens.len() + 1);
            assert!(par.gens.iter().all(|g| simple.contains(g)));
        }
    }

    #[test]
    fn dynkin_classification() {
        for name in ["A1", "A4", "B3", "C3", "D4", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let kind: CartanType = name.parse().unwrap();
            let real = standard(kind).unwrap();
            let c = real.dynkin_classify(&real.whole()).unwrap();
            assert_eq!(c.kind, kind);
            assert!(c.labelings.contains(&real.simple));
        }
        let d4 = build_realization(TypeLetter::D, 4).unwrap();
        assert_eq!(d4.dynkin_classify(&d4.whole()).unwrap().labelings.len(), 6);
        let b4 = build_realization(TypeLetter::B, 4).unwrap();
        let d_sub = b4.span_of_roots_within(&[], &b4.whole());
        assert!(b4.dynkin_classify(&d_sub).is_err());
        // The long roots of B4 form D4.
        let long: Vec<usize> = (0..b4.num_roots()).filter(|&r| b4.norms[r] == rat(2)).collect();
        let d = b4.dynkin_classify(&Subsystem::from_indices(long)).unwrap();
        assert_eq!(d.kind.to_string(), "D4");
        // A rank-2 double bond is named after the ambient letter.
        let c3 = build_realization(TypeLetter::C, 3).unwrap();
        let sub = c3.span_intersect(&[w(&[1, 0, 0]), w(&[0, 1, 0])]);
        assert_eq!(c3.dynkin_classify(&sub).unwrap().kind.to_string(), "C2");
        let sub = b3_sub();
        assert_eq!(sub.0.dynkin_classify(&sub.1).unwrap().kind.to_string(), "B2");
    }

    fn b3_sub() -> (Arc<Realization>, Subsystem) {
        let b3 = build_realization(TypeLetter::B, 3).unwrap();
        let sub = b3.span_intersect(&[w(&[1, 0, 0]), w(&[0, 1, 0])]);
        (b3, sub)
    }

    #[test]
    fn restriction_examples() {
        let a2 = build_realization(TypeLetter::A, 2).unwrap();
        let l = w(&[1, 0, -1]);
        let sub = a2.close_negatives(&[a2.simple[0]]);
        assert_eq!(a2.restrict(&l, &sub), Weight(vec![ratio(1, 2), ratio(-1, 2), rat(0)]));
        assert_eq!(a2.restrict(&l, &a2.singular_subsystem(&l)), Weight::zero(3));
        assert_eq!(a2.restrict(&l, &a2.whole()), l);
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse_rational("3/2").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational("-4/6").unwrap(), ratio(-2, 3));
        assert_eq!(parse_rational("+7").unwrap(), rat(7));
        for bad in ["1.5", "1/0", "", "a", "1/-2", "--1", "1e3"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
        let wt = Weight::parse("(1/2,-3, 0)").unwrap();
        assert_eq!(wt.to_string(), "(1/2,-3,0)");
        assert_eq!(Weight::parse(&wt.to_string()).unwrap(), wt);
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-6i64..=6, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
    }

    fn system() -> impl Strategy<Value = CartanType> {
        prop::sample::select(vec!["A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "B4", "C4"])
            .prop_map(|s| s.parse().unwrap())
    }

    proptest! {
        #[test]
        fn restriction_is_idempotent_and_orthogonal(
            kind in system(),
            coords in prop::collection::vec(small_rational(), 5),
            picks in prop::collection::vec(any::<prop::sample::Index>(), 1..4),
        ) {
            let real = standard(kind).unwrap();
            let l = Weight(coords[..real.dim].to_vec());
            let roots: Vec<usize> = picks.iter().map(|i| i.index(real.num_roots())).collect();
            let sub = real.span_of_roots_within(&roots, &real.whole());
            let r = real.restrict(&l, &sub);
            prop_assert_eq!(real.restrict(&r, &sub), r.clone());
            for &a in sub.members() {
                prop_assert!(real.inner(&l.sub(&r), a).is_zero());
            }
            // The singular part of the restriction is Φ_λ ∩ Φ′.
            let own: Vec<usize> = sub.members().iter().copied().filter(|&a| real.inner(&r, a).is_zero()).collect();
            prop_assert_eq!(Subsystem::from_indices(own), real.singular_subsystem(&l).intersect(&sub));
        }

        #[test]
        fn spans_are_closed_subsystems(
            kind in system(),
            picks in prop::collection::vec(any::<prop::sample::Index>(), 0..4),
        ) {
            let real = standard(kind).unwrap();
            let roots: Vec<usize> = picks.iter().map(|i| i.index(real.num_roots())).collect();
            let sub = real.span_of_roots_within(&roots, &real.whole());
            let seeds: Vec<Weight> = roots.iter().map(|&r| real.roots[r].clone()).collect();
            prop_assert_eq!(real.span_intersect(&seeds), sub.clone());
            for &a in sub.members() {
                prop_assert!(sub.contains(real.neg(a)));
                for &g in sub.members() {
                    let p = real.root_pairing(a, g);
                    let img: Vec<i64> = real.coeffs[a].iter().zip(&real.coeffs[g]).map(|(x, y)| x - p * y).collect();
                    prop_assert!(real.root_by_coeffs(&img).is_some_and(|i| sub.contains(i)));
                }
            }
            // Every positive member decomposes over the simple system.
            let simple = real.simple_system_of(&sub);
            let mut space = IntRowSpace::new(real.rank());
            for &s in &simple { prop_assert!(space.insert(&real.coeffs[s])); }
            for &a in sub.members() { prop_assert!(space.contains(&real.coeffs[a])); }
        }
    }
}
