//! Exact distances, the brute-force module oracle, constacyclic
//! classification, the projection lower bound and Gray-image parameters.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::construct::{for_each_codeword, rho_pack, t_shift, EnumGuard, Family, GeneratingSet, QtGenerator};
use crate::error::{Error, Result};
use crate::gf2poly::{divisors_of_xn_minus_1, xn_minus_1, BinPoly};
use crate::ring::{RVec, SnElem};

/// Default limit on `n` for [`oracle_enum`]: `4^12` multipliers.
pub const DEFAULT_ORACLE_MAX_N: usize = 12;

/// Minimum Lee weight over the nonzero vectors of a set.
pub fn min_lee<'a, I>(codewords: I) -> Result<u32>
where
    I: IntoIterator<Item = &'a RVec>,
{
    codewords.into_iter().filter(|c| !c.is_zero()).map(RVec::lee_weight).min().ok_or(Error::ZeroCode)
}

/// Minimum Lee distance of the span of `gs`, streamed without materializing the code.
pub fn span_min_lee(gs: &GeneratingSet, guard: EnumGuard) -> Result<u32> {
    let mut best: Option<u32> = None;
    for_each_codeword(gs, guard, |c| {
        let w = c.lee_weight();
        if w > 0 && best.is_none_or(|b| w < b) {
            best = Some(w);
        }
    })?;
    best.ok_or(Error::ZeroCode)
}

/// The code `{ρ(f·c_0, …, f·c_{l-1}) : f ∈ S_n}`, by running `f` over all `4^n` elements.
pub fn oracle_enum(components: &[SnElem]) -> Result<HashSet<RVec>> {
    oracle_enum_guarded(components, DEFAULT_ORACLE_MAX_N)
}

pub fn oracle_enum_guarded(components: &[SnElem], max_n: usize) -> Result<HashSet<RVec>> {
    let Some(first) = components.first() else {
        return Err(Error::precondition("index l must be at least 1"));
    };
    let n = first.n();
    if let Some(bad) = components.iter().find(|c| c.n() != n) {
        return Err(Error::ModulusMismatch { left: n, right: bad.n() });
    }
    if n > max_n {
        return Err(Error::OracleGuard { n, limit: max_n });
    }
    let top = 1u64 << n;
    let mut out = HashSet::new();
    let mut scratch = Vec::with_capacity(components.len());
    for a in 0..top {
        for b in 0..top {
            let f = SnElem::from_masks_unchecked(n, a, b);
            scratch.clear();
            scratch.extend(components.iter().map(|c| f.mul_same_n(c)));
            out.insert(rho_pack(&scratch)?);
        }
    }
    Ok(out)
}

/// True iff the span of `gs` is exactly the code generated by `gen`.
pub fn equals_oracle(gs: &GeneratingSet, gen: &QtGenerator) -> Result<bool> {
    let truth = oracle_enum(gen.components())?;
    let mut span = HashSet::with_capacity(truth.len());
    for_each_codeword(gs, EnumGuard::default(), |c| {
        span.insert(c.clone());
    })?;
    Ok(span == truth)
}

/// Which of the canonical constacyclic shapes an ideal `(c)` of `S_n` has.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", content = "g")]
pub enum ConstacyclicType {
    /// `(c) = (g)` for a proper divisor `g` of `x^n + 1`.
    A1(BinPoly),
    /// `(c) = (u g)` for a divisor `g` of `x^n + 1`.
    A2(BinPoly),
    /// Neither shape.
    Other,
}

impl fmt::Display for ConstacyclicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstacyclicType::A1(g) => write!(f, "A1 with g = {g}"),
            ConstacyclicType::A2(g) => write!(f, "A2 with g = {g}"),
            ConstacyclicType::Other => write!(f, "B/other"),
        }
    }
}

/// Size exponent of the ideal `(c)`: rank over F2 of `{x^i c, u x^i c : i < n}`.
fn ideal_log2(c: &SnElem) -> usize {
    let n = c.n();
    let mut rows = Vec::with_capacity(2 * n);
    let mut cur = *c;
    for _ in 0..n {
        rows.push(vec![cur.a_bits(), cur.b_bits()]);
        let ux = cur.times_u();
        rows.push(vec![ux.a_bits(), ux.b_bits()]);
        cur = cur.mul_x();
    }
    gf2_rank(rows)
}

/// Classifies the ideal generated by `gen` by enumerating it and matching it
/// against `(g)` and `(u g)` for the divisors `g` of `x^n + 1`, least degree first.
pub fn classify_constacyclic(gen: &SnElem) -> Result<ConstacyclicType> {
    classify_constacyclic_guarded(gen, DEFAULT_ORACLE_MAX_N)
}

pub fn classify_constacyclic_guarded(gen: &SnElem, max_n: usize) -> Result<ConstacyclicType> {
    let n = gen.n();
    if n > max_n {
        return Err(Error::OracleGuard { n, limit: max_n });
    }
    let top = 1u64 << n;
    let mut ideal: HashSet<(u64, u64)> = HashSet::new();
    for a in 0..top {
        for b in 0..top {
            let p = SnElem::from_masks_unchecked(n, a, b).mul_same_n(gen);
            ideal.insert((p.a_bits(), p.b_bits()));
        }
    }
    let size = ideal.len();
    debug_assert_eq!(size, 1usize << ideal_log2(gen));

    // Two ideals are equal when one contains the other's generator and they have the same size.
    let matches =
        |cand: &SnElem| ideal.contains(&(cand.a_bits(), cand.b_bits())) && (1usize << ideal_log2(cand)) == size;
    let modulus = xn_minus_1(n)?;
    let divisors = divisors_of_xn_minus_1(n)?;
    for d in divisors.iter().filter(|d| **d != modulus) {
        if matches(&SnElem::from_f2(d, n)?) {
            return Ok(ConstacyclicType::A1(d.clone()));
        }
    }
    for d in &divisors {
        if matches(&SnElem::u_times_f2(d, n)?) {
            return Ok(ConstacyclicType::A2(d.clone()));
        }
    }
    Ok(ConstacyclicType::Other)
}

/// Exact minimum Lee distance of the companion code `(u g)` in `S_n`, from
/// its `2^{n - deg g}` codewords `u·(g a mod x^n+1)`.
pub fn companion_min_lee(g: &BinPoly, n: usize) -> Result<u32> {
    let modulus = xn_minus_1(n)?;
    if g.is_zero() || !modulus.is_divisible_by(g) {
        return Err(Error::precondition(format!("g = {g} does not divide x^{n}+1")));
    }
    let r = n - g.deg().expect("nonzero");
    if r == 0 {
        return Err(Error::ZeroCode);
    }
    EnumGuard::default().check(r)?;
    let gw = SnElem::u_times_f2(g, n)?;
    let mut best = u32::MAX;
    for a in 1u64..(1u64 << r) {
        let c = SnElem::from_masks_unchecked(n, a, 0).mul_same_n(&gw);
        best = best.min(c.lee_weight());
    }
    Ok(best)
}

/// The lower bound `l · d_L((u g))` on the Lee distance of a code from
/// [`crate::construct::build_special_a2`].
pub fn projection_bound(g: &BinPoly, n: usize, l: usize) -> Result<u32> {
    Ok(l as u32 * companion_min_lee(g, n)?)
}

/// Binary parameters `[length, dimension, distance]` of a Gray image.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GrayParams {
    pub length: usize,
    pub dimension: usize,
    pub distance: u32,
}

impl GrayParams {
    pub fn as_array(&self) -> [usize; 3] {
        [self.length, self.dimension, self.distance as usize]
    }
}

impl fmt::Display for GrayParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.length, self.dimension, self.distance)
    }
}

/// The Gray image of a length-`nl` code with `2^k` words and Lee distance `d`
/// is a binary `[2nl, k, d]` code.
pub fn gray_params(n: usize, l: usize, k: usize, d_lee: u32) -> GrayParams {
    GrayParams { length: 2 * n * l, dimension: k, distance: d_lee }
}

/// Rank over F2 of a list of bit rows.
pub fn gf2_rank(mut rows: Vec<Vec<u64>>) -> usize {
    let mut rank = 0;
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    for word in 0..width {
        for bit in 0..64 {
            let mask = 1u64 << bit;
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r].get(word).is_some_and(|w| w & mask != 0)) else {
                continue;
            };
            rows.swap(rank, pivot);
            let prow = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row.get(word).is_some_and(|w| w & mask != 0) {
                    for (x, y) in row.iter_mut().zip(&prow) {
                        *x ^= y;
                    }
                }
            }
            rank += 1;
        }
    }
    rank
}

/// Rank of the binary matrix whose rows are the Gray images of the F2
/// expansion of `gs`. For a minimal generating set this equals `card_log2`.
pub fn rank_check(gs: &GeneratingSet) -> usize {
    let rows = gs.f2_basis().iter().map(|w| w.gray().words().to_vec()).collect();
    gf2_rank(rows)
}

/// True iff the set is mapped onto itself by the `l`-fold constacyclic shift.
pub fn qt_check(codewords: &HashSet<RVec>, l: usize) -> bool {
    codewords.iter().all(|c| {
        let mut s = c.clone();
        for _ in 0..l {
            s = t_shift(&s);
        }
        codewords.contains(&s)
    })
}

/// Best-known minimum distance of a binary linear code, for the handful of
/// parameter points tabulated in [`best_known`].
#[derive(Debug, Copy, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BestKnown {
    pub length: usize,
    pub dimension: usize,
    /// A code with this distance exists.
    pub lower: u32,
    /// No code has larger distance, when known.
    pub upper: Option<u32>,
}

const BEST_KNOWN: &[BestKnown] = &[
    BestKnown { length: 12, dimension: 2, lower: 8, upper: Some(8) },
    BestKnown { length: 12, dimension: 5, lower: 4, upper: Some(4) },
    BestKnown { length: 16, dimension: 3, lower: 8, upper: Some(8) },
    BestKnown { length: 18, dimension: 2, lower: 12, upper: Some(12) },
    BestKnown { length: 24, dimension: 3, lower: 13, upper: Some(13) },
    BestKnown { length: 36, dimension: 10, lower: 12, upper: None },
];

pub fn best_known(length: usize, dimension: usize) -> Option<BestKnown> {
    BEST_KNOWN.iter().copied().find(|b| b.length == length && b.dimension == dimension)
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Optimality {
    Optimal,
    /// A code with larger distance is known.
    BelowBestKnown,
    /// Not in the table, or between the known bounds.
    Unknown,
}

impl fmt::Display for Optimality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Optimality::Optimal => "optimal",
            Optimality::BelowBestKnown => "below best known",
            Optimality::Unknown => "n/a",
        })
    }
}

pub fn optimality(p: &GrayParams) -> Optimality {
    match best_known(p.length, p.dimension) {
        Some(b) if p.distance < b.lower => Optimality::BelowBestKnown,
        Some(b) if Some(p.distance) == b.upper => Optimality::Optimal,
        _ => Optimality::Unknown,
    }
}

#[derive(Debug, Copy, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "match")]
    Match,
    #[serde(rename = "mismatch")]
    Mismatch,
    #[serde(rename = "n/a")]
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::NotApplicable => "n/a",
        })
    }
}

/// Externally claimed binary parameters and whether the computation agrees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claims {
    pub expected: Vec<usize>,
    pub verdict: Verdict,
}

impl Claims {
    pub fn compare(expected: [usize; 3], computed: Option<GrayParams>) -> Self {
        let verdict = match computed {
            None => Verdict::NotApplicable,
            Some(p) if p.as_array() == expected => Verdict::Match,
            Some(_) => Verdict::Mismatch,
        };
        Claims { expected: expected.to_vec(), verdict }
    }
}

/// Parameters of one code, as emitted by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSummary {
    pub n: usize,
    pub l: usize,
    pub family: String,
    /// `log2 |C|`.
    pub k: usize,
    /// `None` when enumeration was refused by the guard.
    pub d_lee: Option<u32>,
    /// `[2nl, k, d]`.
    pub gray: (usize, usize, Option<u32>),
    pub projection_bound: Option<u32>,
    pub claims: Option<Claims>,
}

impl CodeSummary {
    pub fn gray_params(&self) -> Option<GrayParams> {
        self.d_lee.map(|d| gray_params(self.n, self.l, self.k, d))
    }

    pub fn is_complete(&self) -> bool {
        self.d_lee.is_some()
    }
}

/// Builds the generating set of `gen` and computes its parameters. A guard
/// refusal leaves `d_lee` empty; precondition failures are returned as errors.
pub fn summarize(gen: &QtGenerator, guard: EnumGuard) -> Result<CodeSummary> {
    let gs = gen.generating_set()?;
    let k = gs.card_log2();
    let d_lee = match span_min_lee(&gs, guard) {
        Ok(d) => Some(d),
        Err(Error::EnumerationGuard { .. }) => None,
        Err(e) => return Err(e),
    };
    let bound = match gen.family() {
        Family::SpecialA2 => projection_bound(&gs.meta.g, gen.n(), gen.l()).ok(),
        _ => None,
    };
    Ok(CodeSummary {
        n: gen.n(),
        l: gen.l(),
        family: gen.family().to_string(),
        k,
        d_lee,
        gray: (2 * gen.n() * gen.l(), k, d_lee),
        projection_bound: bound,
        claims: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build_a1, build_special_a2, span_enumerate, Construction};
    use crate::ring::RPoly;

    fn p(s: &str) -> BinPoly {
        s.parse().unwrap()
    }

    fn sn(s: &str, n: usize) -> SnElem {
        s.parse::<RPoly>().unwrap().reduce(n).unwrap()
    }

    #[test]
    fn oracle_small_ideal() {
        let code = oracle_enum(&[sn("u*(1)", 2)]).unwrap();
        let want: HashSet<RVec> =
            ["0", "u*(1)", "u*(x)", "u*(x+1)"].iter().map(|s| rho_pack(&[sn(s, 2)]).unwrap()).collect();
        assert_eq!(code, want);
        assert_eq!(min_lee(&code).unwrap(), 2);
    }

    #[test]
    fn oracle_zero_generator() {
        let code = oracle_enum(&[SnElem::zero(3).unwrap(), SnElem::zero(3).unwrap()]).unwrap();
        assert_eq!(code.len(), 1);
        assert_eq!(min_lee(&code), Err(Error::ZeroCode));
    }

    #[test]
    fn oracle_guard() {
        let g = SnElem::one(13).unwrap();
        assert_eq!(oracle_enum(&[g]), Err(Error::OracleGuard { n: 13, limit: 12 }));
    }

    #[test]
    fn equals_oracle_detects_missing_spanner() {
        let gen = QtGenerator::new(3, Construction::A1 { g: vec![p("x+1"), p("x^2+1")] }).unwrap();
        let mut gs = gen.generating_set().unwrap();
        assert!(equals_oracle(&gs, &gen).unwrap());
        gs.s2.pop();
        assert!(!equals_oracle(&gs, &gen).unwrap());
        assert_eq!(span_enumerate(&gs).unwrap().len(), 16);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_constacyclic(&sn("x+1", 3)).unwrap(), ConstacyclicType::A1(p("x+1")));
        assert_eq!(classify_constacyclic(&sn("u*(x+1)", 3)).unwrap(), ConstacyclicType::A2(p("x+1")));
        assert_eq!(classify_constacyclic(&sn("x^2+1", 2)).unwrap(), ConstacyclicType::A2(p("1")));
        assert_eq!(classify_constacyclic(&sn("0", 3)).unwrap(), ConstacyclicType::A2(p("x^3+1")));
    }

    #[test]
    fn classify_mixed_generator() {
        // x+1 + u in S_2: (x+1)^2 = u, so the ideal is (x+1) again.
        assert_eq!(classify_constacyclic(&sn("x+1 + u*(1)", 2)).unwrap(), ConstacyclicType::A1(p("x+1")));
        // x^2+1 + u·x = (x+1)^2 · unit in S_4
        assert_eq!(classify_constacyclic(&sn("x^2+1 + u*(x)", 4)).unwrap(), ConstacyclicType::A1(p("x^2+1")));
        // (x+1)^2 in S_3 is neither (g) nor (u g) for a divisor g of x^3+1
        assert_eq!(classify_constacyclic(&sn("x^2+1", 3)).unwrap(), ConstacyclicType::Other);
    }

    #[test]
    fn companion_bounds() {
        assert_eq!(projection_bound(&p("x+1"), 3, 2).unwrap(), 8);
        assert_eq!(companion_min_lee(&p("x+1"), 4).unwrap(), 4);
        assert_eq!(projection_bound(&p("x+1"), 4, 3).unwrap(), 12);
        assert_eq!(projection_bound(&p("x+1"), 5, 1).unwrap(), companion_min_lee(&p("x+1"), 5).unwrap());
        assert_eq!(projection_bound(&p("x^3+1"), 3, 2), Err(Error::ZeroCode));
        assert!(projection_bound(&p("x^2+1"), 3, 2).is_err());
    }

    #[test]
    fn rank_matches_cardinality() {
        let gs = build_a1(3, &[p("x+1"), p("x^2+1")]).unwrap();
        assert_eq!(rank_check(&gs), 5);
        let (gs, _) = build_special_a2(3, &p("x+1"), &[p("x^3+x+1"), p("x^3+x^2+1")]).unwrap();
        assert_eq!(rank_check(&gs), 2);
    }

    #[test]
    fn gf2_rank_basics() {
        assert_eq!(gf2_rank(vec![]), 0);
        assert_eq!(gf2_rank(vec![vec![0b11], vec![0b01], vec![0b10]]), 2);
        assert_eq!(gf2_rank(vec![vec![0, 1], vec![1, 0], vec![1, 1]]), 2);
    }

    #[test]
    fn qt_check_cases() {
        let gs = build_a1(3, &[p("x+1"), p("x^2+1")]).unwrap();
        let code = span_enumerate(&gs).unwrap();
        assert!(qt_check(&code, 2));
        assert!(qt_check(&code, 4));
        let mut e = RVec::zeros(6);
        e.set(0, crate::ring::RingElem::ONE);
        let lone: HashSet<RVec> = [e].into_iter().collect();
        assert!(!qt_check(&lone, 2));
    }

    #[test]
    fn optimality_table() {
        let v = |len, k, d| optimality(&GrayParams { length: len, dimension: k, distance: d });
        assert_eq!(v(12, 5, 4), Optimality::Optimal);
        assert_eq!(v(24, 3, 12), Optimality::BelowBestKnown);
        assert_eq!(v(36, 10, 8), Optimality::BelowBestKnown);
        assert_eq!(v(36, 10, 12), Optimality::Unknown);
        assert_eq!(v(40, 3, 12), Optimality::Unknown);
    }

    #[test]
    fn summary_json_shape() {
        let gen = QtGenerator::new(3, Construction::A1 { g: vec![p("x+1"), p("x^2+1")] }).unwrap();
        let mut s = summarize(&gen, EnumGuard::default()).unwrap();
        s.claims = Some(Claims::compare([12, 5, 4], s.gray_params()));
        let json = serde_json::to_value(&s).unwrap();
        assert_eq!(json["gray"], serde_json::json!([12, 5, 4]));
        assert_eq!(json["family"], "A1");
        assert_eq!(json["projection_bound"], serde_json::Value::Null);
        assert_eq!(json["claims"]["verdict"], "match");
    }
}
