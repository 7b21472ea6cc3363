//! One-generator quasi-twisted codes and their minimum generating sets.
//!
//! A code of index `l` and co-index `n` is the `S_n`-module spanned by one
//! tuple `(f_0, …, f_{l-1})` of `S_n` residues. Its codewords live in
//! `R^{nl}` through the packing [`rho_pack`], which places coefficient `i`
//! of component `j` at position `i·l + j`.
//!
//! A [`GeneratingSet`] splits its spanners into two lists: `s1`, whose
//! elements are combined with coefficients in `R`, and `s2`, whose elements
//! are combined with coefficients in `F2`. When the family preconditions
//! hold, every codeword has exactly one such representation, so the code
//! has `4^|s1| · 2^|s2|` words.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2poly::{gcd_all, xn_minus_1, BinPoly};
use crate::ring::{check_n, RVec, RingElem, SnElem};

/// The four generator shapes handled by the builders.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// `(g_0, …, g_{l-1})` with F2 polynomials `g_i`.
    A1,
    /// `(u g_0, …, u g_{l-1})`.
    A2,
    /// `(q_0 f g, …, q_{l-1} f g)` with `f | g | x^n + 1`.
    B,
    /// `(u g f_0, …, u g f_{l-1})` with `g | x^n + 1` and each `f_i` coprime to `(x^n+1)/g`.
    SpecialA2,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::A1, Family::A2, Family::B, Family::SpecialA2];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::A1 => "A1",
            Family::A2 => "A2",
            Family::B => "B",
            Family::SpecialA2 => "SpecialA2",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Recipe(format!("unknown family {s:?}; expected A1, A2, B or SpecialA2")))
    }
}

/// The raw polynomial inputs of one generator, by family.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Construction {
    A1 { g: Vec<BinPoly> },
    A2 { g: Vec<BinPoly> },
    B { q: Vec<BinPoly>, f: BinPoly, g: BinPoly },
    SpecialA2 { g: BinPoly, f: Vec<BinPoly> },
}

impl Construction {
    pub fn family(&self) -> Family {
        match self {
            Construction::A1 { .. } => Family::A1,
            Construction::A2 { .. } => Family::A2,
            Construction::B { .. } => Family::B,
            Construction::SpecialA2 { .. } => Family::SpecialA2,
        }
    }

    /// The index `l`.
    pub fn index(&self) -> usize {
        match self {
            Construction::A1 { g } | Construction::A2 { g } => g.len(),
            Construction::B { q, .. } => q.len(),
            Construction::SpecialA2 { f, .. } => f.len(),
        }
    }

    /// Runs the family's generating-set builder.
    pub fn generating_set(&self, n: usize) -> Result<GeneratingSet> {
        match self {
            Construction::A1 { g } => build_a1(n, g),
            Construction::A2 { g } => build_a2(n, g),
            Construction::B { q, f, g } => build_b(n, q, f, g),
            Construction::SpecialA2 { g, f } => build_special_a2(n, g, f).map(|(gs, _)| gs),
        }
    }
}

/// A one-generator code: the tuple of `S_n` components plus the inputs it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QtGenerator {
    n: usize,
    components: Vec<SnElem>,
    construction: Construction,
}

impl QtGenerator {
    /// Reduces the construction inputs into `S_n`. Family preconditions are
    /// not checked here; the builders check them.
    pub fn new(n: usize, construction: Construction) -> Result<Self> {
        check_n(n)?;
        if construction.index() == 0 {
            return Err(Error::precondition("index l must be at least 1"));
        }
        let components: Result<Vec<SnElem>> = match &construction {
            Construction::A1 { g } => g.iter().map(|p| SnElem::from_f2(p, n)).collect(),
            Construction::A2 { g } => g.iter().map(|p| SnElem::u_times_f2(p, n)).collect(),
            Construction::B { q, f, g } => {
                let fg = f * g;
                q.iter().map(|qi| SnElem::from_f2(&(qi * &fg), n)).collect()
            }
            Construction::SpecialA2 { g, f } => f.iter().map(|fi| SnElem::u_times_f2(&(g * fi), n)).collect(),
        };
        Ok(QtGenerator { n, components: components?, construction })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn l(&self) -> usize {
        self.components.len()
    }

    pub fn family(&self) -> Family {
        self.construction.family()
    }

    pub fn components(&self) -> &[SnElem] {
        &self.components
    }

    pub fn construction(&self) -> &Construction {
        &self.construction
    }

    pub fn generating_set(&self) -> Result<GeneratingSet> {
        self.construction.generating_set(self.n)
    }

    /// The packed generator vector in `R^{nl}`.
    pub fn packed(&self) -> RVec {
        rho_pack(&self.components).expect("components share n by construction")
    }
}

/// Packs an `l`-tuple of `S_n` residues into `R^{nl}`: coefficient `i` of
/// component `j` goes to position `i·l + j`.
pub fn rho_pack(components: &[SnElem]) -> Result<RVec> {
    let l = components.len();
    let Some(first) = components.first() else {
        return Ok(RVec::zeros(0));
    };
    let n = first.n();
    let mut v = RVec::zeros(n * l);
    for (j, c) in components.iter().enumerate() {
        if c.n() != n {
            return Err(Error::ModulusMismatch { left: n, right: c.n() });
        }
        for i in 0..n {
            v.set(i * l + j, c.coeff(i));
        }
    }
    Ok(v)
}

/// Inverse of [`rho_pack`] for index `l`.
pub fn rho_unpack(v: &RVec, l: usize) -> Result<Vec<SnElem>> {
    if l == 0 || !v.len().is_multiple_of(l) || v.is_empty() {
        return Err(Error::IndivisibleLength { len: v.len(), l });
    }
    let n = v.len() / l;
    check_n(n)?;
    (0..l)
        .map(|j| {
            let (mut a, mut b) = (0u64, 0u64);
            for i in 0..n {
                let s = v.get(i * l + j);
                a |= (s.a as u64) << i;
                b |= (s.b as u64) << i;
            }
            SnElem::new(n, a, b)
        })
        .collect()
}

/// The `(1+u)`-constacyclic shift `(c_0, …, c_{n-1}) ↦ ((1+u) c_{n-1}, c_0, …, c_{n-2})`.
pub fn t_shift(c: &RVec) -> RVec {
    let n = c.len();
    let mut out = RVec::zeros(n);
    if n == 0 {
        return out;
    }
    out.set(0, RingElem::ONE_PLUS_U * c.get(n - 1));
    for i in 1..n {
        out.set(i, c.get(i - 1));
    }
    out
}

/// Multiplies every component of a packed vector by the same `S_n` element.
pub fn scale_packed(v: &RVec, l: usize, by: &SnElem) -> Result<RVec> {
    let comps = rho_unpack(v, l)?;
    let scaled: Vec<SnElem> = comps.iter().map(|c| c.mul(by)).collect::<Result<_>>()?;
    rho_pack(&scaled)
}

/// Bookkeeping attached to a generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenMeta {
    pub n: usize,
    pub l: usize,
    pub family: Family,
    /// The divisor of `x^n + 1` that controls the code: the gcd for A1/A2,
    /// the input `g` for B and SpecialA2.
    pub g: BinPoly,
    /// `(x^n + 1) / g`.
    pub h: BinPoly,
    /// `deg h` for A1, A2 and SpecialA2; `deg g` for B.
    pub r: usize,
    /// `deg f` for B.
    pub t: Option<usize>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratingSet {
    /// Spanners taking coefficients in `R`.
    pub s1: Vec<RVec>,
    /// Spanners taking coefficients in `F2`; each is annihilated by `u`.
    pub s2: Vec<RVec>,
    pub meta: GenMeta,
}

impl GeneratingSet {
    /// `log2 |C| = 2|s1| + |s2|`.
    pub fn card_log2(&self) -> usize {
        card_log2(self)
    }

    /// Codeword length `nl`.
    pub fn length(&self) -> usize {
        self.meta.n * self.meta.l
    }

    /// A spanning set over F2: `w` and `u·w` for each `w` in `s1`, then `s2`.
    pub fn f2_basis(&self) -> Vec<RVec> {
        self.s1.iter().flat_map(|w| [w.clone(), w.times_u()]).chain(self.s2.iter().cloned()).collect()
    }
}

pub fn card_log2(gs: &GeneratingSet) -> usize {
    2 * gs.s1.len() + gs.s2.len()
}

/// `x^j · base` for `j = 0..count`, packed.
pub(crate) fn shifted_copies(base: &[SnElem], count: usize) -> Vec<RVec> {
    let mut cur = base.to_vec();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push(rho_pack(&cur).expect("shared n"));
        for c in cur.iter_mut() {
            *c = c.mul_x();
        }
    }
    out
}

fn check_index(len: usize) -> Result<()> {
    if len == 0 {
        Err(Error::precondition("index l must be at least 1"))
    } else {
        Ok(())
    }
}

/// Generating set for `(g_0, …, g_{l-1})` with F2 polynomials `g_i`.
///
/// With `g = gcd(g_0, …, g_{l-1}, x^n + 1)`, `h = (x^n + 1)/g`, `r = deg h`
/// and `f_i = g_i / g`, the set is `s1 = {x^j G : j < r}` and
/// `s2 = {x^j u F : j < n - r}`.
///
/// Uniqueness of representation additionally needs
/// `gcd(g_0, …, g_{l-1}, x^{2n} + 1) = g`; otherwise `S_n G` is smaller
/// than `2^{n+r}` and this function refuses.
pub fn build_a1(n: usize, g_list: &[BinPoly]) -> Result<GeneratingSet> {
    check_n(n)?;
    check_index(g_list.len())?;
    let modulus = xn_minus_1(n)?;
    let components: Vec<SnElem> = g_list.iter().map(|p| SnElem::from_f2(p, n)).collect::<Result<_>>()?;
    if components.iter().all(SnElem::is_zero) {
        return Err(Error::precondition("generator is zero in S_n"));
    }
    let reduced: Vec<BinPoly> = g_list.iter().map(|p| p.rem(&modulus)).collect::<Result<_>>()?;
    let g = gcd_all(reduced.iter().chain([&modulus]))?;
    let double = xn_minus_1(2 * n)?;
    let g_wide = gcd_all(g_list.iter().chain([&double]))?;
    if g_wide != g {
        return Err(Error::precondition(format!(
            "gcd(g_0..g_{{l-1}}, x^{}+1) = {g_wide} differs from gcd(g_0..g_{{l-1}}, x^{n}+1) = {g}, so the spanners are dependent",
            2 * n
        )));
    }
    let h = modulus.exact_div(&g)?;
    let r = h.deg().expect("h divides a nonzero polynomial");
    let f: Vec<BinPoly> = g_list.iter().map(|gi| gi.exact_div(&g)).collect::<Result<_>>()?;
    let uf: Vec<SnElem> = f.iter().map(|fi| SnElem::u_times_f2(fi, n)).collect::<Result<_>>()?;
    Ok(GeneratingSet {
        s1: shifted_copies(&components, r),
        s2: shifted_copies(&uf, n - r),
        meta: GenMeta { n, l: g_list.len(), family: Family::A1, g, h, r, t: None, notes: Vec::new() },
    })
}

/// Generating set for `(u g_0, …, u g_{l-1})`: `s2 = {x^j G : j < r}` with
/// `r = deg((x^n+1)/gcd(g_0, …, g_{l-1}, x^n+1))`.
pub fn build_a2(n: usize, g_list: &[BinPoly]) -> Result<GeneratingSet> {
    check_n(n)?;
    check_index(g_list.len())?;
    let modulus = xn_minus_1(n)?;
    let reduced: Vec<BinPoly> = g_list.iter().map(|p| p.rem(&modulus)).collect::<Result<_>>()?;
    if reduced.iter().all(BinPoly::is_zero) {
        return Err(Error::precondition("every g_i is divisible by x^n+1, so the generator is zero"));
    }
    let g = gcd_all(reduced.iter().chain([&modulus]))?;
    let h = modulus.exact_div(&g)?;
    let r = h.deg().expect("nonzero");
    let components: Vec<SnElem> = g_list.iter().map(|p| SnElem::u_times_f2(p, n)).collect::<Result<_>>()?;
    Ok(GeneratingSet {
        s1: Vec::new(),
        s2: shifted_copies(&components, r),
        meta: GenMeta { n, l: g_list.len(), family: Family::A2, g, h, r, t: None, notes: Vec::new() },
    })
}

/// Generating set for `(q_0 f g, …, q_{l-1} f g)`.
///
/// With `r = deg g`, `t = deg f`, `h = (x^n+1)/g`: `s1 = {x^j G : j < n - r}`
/// and `s2 = {x^j F : j < r - t}` where `F = (u q_0 f, …, u q_{l-1} f)`.
///
/// Checked preconditions: `f | g | x^n+1`, `t < r < n`, `gcd(q_i, h) = 1`
/// for every `i`, and for uniqueness of representation also `gcd(f, h) = 1`
/// and `gcd(q_0, …, q_{l-1}, g/f) = 1`. Maximality of `g` is not checked.
pub fn build_b(n: usize, q_list: &[BinPoly], f: &BinPoly, g: &BinPoly) -> Result<GeneratingSet> {
    check_n(n)?;
    check_index(q_list.len())?;
    let modulus = xn_minus_1(n)?;
    if f.is_zero() || g.is_zero() {
        return Err(Error::precondition("f and g must be nonzero"));
    }
    if !g.is_divisible_by(f) {
        return Err(Error::precondition(format!("f = {f} does not divide g = {g}")));
    }
    if !modulus.is_divisible_by(g) {
        return Err(Error::precondition(format!("g = {g} does not divide x^{n}+1")));
    }
    let (t, r) = (f.deg().expect("nonzero"), g.deg().expect("nonzero"));
    if !(t < r && r < n) {
        return Err(Error::precondition(format!("need deg f < deg g < n, got {t}, {r}, {n}")));
    }
    let h = modulus.exact_div(g)?;
    for (i, qi) in q_list.iter().enumerate() {
        if !qi.gcd(&h).is_one() {
            return Err(Error::precondition(format!("gcd(q_{i}, h) != 1 for q_{i} = {qi}, h = {h}")));
        }
    }
    if !f.gcd(&h).is_one() {
        return Err(Error::precondition(format!("gcd(f, h) != 1 for f = {f}, h = {h}")));
    }
    let cofactor = g.exact_div(f)?;
    let q_gcd = gcd_all(q_list)?;
    if !q_gcd.gcd(&cofactor).is_one() {
        return Err(Error::precondition(format!("gcd(q_0..q_{{l-1}}, g/f) != 1 for g/f = {cofactor}")));
    }
    let fg = f * g;
    let big: Vec<SnElem> = q_list.iter().map(|qi| SnElem::from_f2(&(qi * &fg), n)).collect::<Result<_>>()?;
    let small: Vec<SnElem> = q_list.iter().map(|qi| SnElem::u_times_f2(&(qi * f), n)).collect::<Result<_>>()?;
    Ok(GeneratingSet {
        s1: shifted_copies(&big, n - r),
        s2: shifted_copies(&small, r - t),
        meta: GenMeta {
            n,
            l: q_list.len(),
            family: Family::B,
            g: g.clone(),
            h,
            r,
            t: Some(t),
            notes: vec!["maximality of g among divisors with f | g | x^n+1 is not verified".into()],
        },
    })
}

/// The companion constacyclic code `(u g)` of length `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Companion {
    pub n: usize,
    pub g: BinPoly,
}

impl Companion {
    pub fn generator(&self) -> SnElem {
        SnElem::u_times_f2(&self.g, self.n).expect("n validated by the builder")
    }
}

/// Generating set for `(u g f_0, …, u g f_{l-1})` with `g | x^n+1` and each
/// `f_i` coprime to `h = (x^n+1)/g`: `s2 = {x^j G : j < r}`, `r = deg h`.
///
/// Every nonzero codeword is nonzero in every component, which yields the
/// lower bound `d_L(C) >= l · d_L((u g))`; see [`crate::analysis::projection_bound`].
pub fn build_special_a2(n: usize, g: &BinPoly, f_list: &[BinPoly]) -> Result<(GeneratingSet, Companion)> {
    check_n(n)?;
    check_index(f_list.len())?;
    let modulus = xn_minus_1(n)?;
    if g.is_zero() || !modulus.is_divisible_by(g) {
        return Err(Error::precondition(format!("g = {g} does not divide x^{n}+1")));
    }
    let h = modulus.exact_div(g)?;
    let r = h.deg().expect("nonzero");
    if r == 0 {
        return Err(Error::precondition("g = x^n+1 makes the code zero; need deg g < n"));
    }
    for (i, fi) in f_list.iter().enumerate() {
        if !fi.gcd(&h).is_one() {
            return Err(Error::precondition(format!("gcd(f_{i}, (x^n+1)/g) != 1 for f_{i} = {fi}")));
        }
    }
    let components: Vec<SnElem> = f_list.iter().map(|fi| SnElem::u_times_f2(&(g * fi), n)).collect::<Result<_>>()?;
    let gs = GeneratingSet {
        s1: Vec::new(),
        s2: shifted_copies(&components, r),
        meta: GenMeta { n, l: f_list.len(), family: Family::SpecialA2, g: g.clone(), h, r, t: None, notes: Vec::new() },
    };
    Ok((gs, Companion { n, g: g.clone() }))
}

/// Default cap on `log2` of the number of enumerated codewords.
pub const DEFAULT_ENUM_LOG2: usize = 26;

/// Upper bound on how many codewords an enumeration may visit.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub struct EnumGuard {
    max_log2: Option<usize>,
}

impl Default for EnumGuard {
    fn default() -> Self {
        EnumGuard { max_log2: Some(DEFAULT_ENUM_LOG2) }
    }
}

impl EnumGuard {
    pub fn with_max_log2(max_log2: usize) -> Self {
        EnumGuard { max_log2: Some(max_log2) }
    }

    /// No limit. Enumeration still cannot exceed `2^63` words.
    pub fn forced() -> Self {
        EnumGuard { max_log2: None }
    }

    pub fn check(&self, needed_log2: usize) -> Result<()> {
        match self.max_log2 {
            Some(limit) if needed_log2 > limit => Err(Error::EnumerationGuard { needed: needed_log2, limit }),
            _ if needed_log2 > 63 => Err(Error::EnumerationGuard { needed: needed_log2, limit: 63 }),
            _ => Ok(()),
        }
    }
}

/// Visits every F2-combination of `basis` in Gray-code order, starting at zero.
pub fn for_each_combination(basis: &[RVec], len: usize, mut visit: impl FnMut(&RVec)) {
    let mut cur = RVec::zeros(len);
    visit(&cur);
    let total: u64 = 1u64 << basis.len();
    for step in 1..total {
        cur += &basis[step.trailing_zeros() as usize];
        visit(&cur);
    }
}

/// Visits every element of the span of `gs` (with repetition if the spanners are dependent).
pub fn for_each_codeword(gs: &GeneratingSet, guard: EnumGuard, visit: impl FnMut(&RVec)) -> Result<()> {
    let basis = gs.f2_basis();
    guard.check(basis.len())?;
    for_each_combination(&basis, gs.length(), visit);
    Ok(())
}

/// The span `{Σ α_j v_j + Σ β_k w_k}` with `α_j ∈ R` over `s1` and `β_k ∈ F2` over `s2`.
pub fn span_enumerate(gs: &GeneratingSet) -> Result<HashSet<RVec>> {
    span_enumerate_guarded(gs, EnumGuard::default())
}

pub fn span_enumerate_guarded(gs: &GeneratingSet, guard: EnumGuard) -> Result<HashSet<RVec>> {
    let mut out = HashSet::new();
    for_each_codeword(gs, guard, |c| {
        out.insert(c.clone());
    })?;
    Ok(out)
}
