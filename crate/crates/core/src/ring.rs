//! The chain ring `R = F2 + uF2` (with `u² = 0`), the quotient
//! `S_n = R[x]/(x^n - (1+u))`, Lee weights and the Gray map.
//!
//! Every R-valued object is stored as two parallel bit strings: the
//! `a`-part and the `b`-part of `a + u·b`. Addition is XOR on both parts,
//! and a product needs three F2 products:
//! `(a1 + u b1)(a2 + u b2) = a1 a2 + u (a1 b2 + a2 b1)`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use crate::error::{Error, ParseErrorKind, Result};
use crate::gf2poly::{clmul64, parse_poly_at, BinPoly};

/// An element `a + u·b` of `R`.
#[derive(Debug, Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RingElem {
    pub a: bool,
    pub b: bool,
}

impl RingElem {
    pub const ZERO: RingElem = RingElem { a: false, b: false };
    pub const ONE: RingElem = RingElem { a: true, b: false };
    pub const U: RingElem = RingElem { a: false, b: true };
    pub const ONE_PLUS_U: RingElem = RingElem { a: true, b: true };

    /// The four ring elements in the order 0, 1, u, 1+u.
    pub const ALL: [RingElem; 4] = [Self::ZERO, Self::ONE, Self::U, Self::ONE_PLUS_U];

    pub fn new(a: bool, b: bool) -> Self {
        RingElem { a, b }
    }

    pub fn is_zero(self) -> bool {
        !self.a && !self.b
    }

    /// Lee weight: 0, 1, 2, 1 for 0, 1, u, 1+u.
    pub fn lee_weight(self) -> u32 {
        self.b as u32 + (self.a ^ self.b) as u32
    }

    /// Gray image `(b, a+b)`: 0→00, 1→01, u→11, 1+u→10.
    pub fn gray(self) -> (bool, bool) {
        (self.b, self.a ^ self.b)
    }
}

impl Add for RingElem {
    type Output = RingElem;

    fn add(self, rhs: RingElem) -> RingElem {
        RingElem::new(self.a ^ rhs.a, self.b ^ rhs.b)
    }
}

impl Mul for RingElem {
    type Output = RingElem;

    fn mul(self, rhs: RingElem) -> RingElem {
        RingElem::new(self.a & rhs.a, (self.a & rhs.b) ^ (rhs.a & self.b))
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match (self.a, self.b) {
            (false, false) => "0",
            (true, false) => "1",
            (false, true) => "u",
            (true, true) => "1+u",
        };
        f.write_str(s)
    }
}

/// Lee weight of a vector over `R`.
pub fn lee_weight(v: &[RingElem]) -> u32 {
    v.iter().map(|s| s.lee_weight()).sum()
}

/// Gray image of a vector over `R`, in the blockwise layout of [`GrayWord`].
pub fn gray_map(v: &[RingElem]) -> GrayWord {
    RVec::from_elems(v).gray()
}

/// A polynomial over `R` of arbitrary degree, `a(x) + u·b(x)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RPoly {
    pub a: BinPoly,
    pub b: BinPoly,
}

impl RPoly {
    pub fn new(a: BinPoly, b: BinPoly) -> Self {
        RPoly { a, b }
    }

    /// An F2 polynomial viewed over `R`.
    pub fn from_f2(a: BinPoly) -> Self {
        RPoly { a, b: BinPoly::zero() }
    }

    /// `u·p` for an F2 polynomial `p`.
    pub fn u_times(p: BinPoly) -> Self {
        RPoly { a: BinPoly::zero(), b: p }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Reduces into `S_n`, folding `x^(n+k)` onto `x^k·(1+u)`.
    pub fn reduce(&self, n: usize) -> Result<SnElem> {
        sn_reduce(self, n)
    }
}

impl Mul for &RPoly {
    type Output = RPoly;

    fn mul(self, rhs: &RPoly) -> RPoly {
        RPoly { a: &self.a * &rhs.a, b: &(&self.a * &rhs.b) + &(&rhs.a * &self.b) }
    }
}

impl Add for &RPoly {
    type Output = RPoly;

    fn add(self, rhs: &RPoly) -> RPoly {
        RPoly { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl fmt::Display for RPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "u*({})", self.b),
            (false, false) => write!(f, "{} + u*({})", self.a, self.b),
        }
    }
}

impl FromStr for RPoly {
    type Err = Error;

    /// Parses `"a(x) + u*(b(x))"`; either part may be omitted.
    fn from_str(s: &str) -> Result<Self> {
        let Some(upos) = s.find("u*(") else {
            return Ok(RPoly::from_f2(parse_poly_at(s, 0)?));
        };
        let inner_start = upos + 3;
        let close = s[inner_start..]
            .rfind(')')
            .map(|i| inner_start + i)
            .ok_or(Error::Parse { offset: s.len(), kind: ParseErrorKind::UnclosedParen })?;
        if let Some((i, c)) = s[close + 1..].char_indices().find(|(_, c)| !c.is_whitespace()) {
            return Err(Error::Parse { offset: close + 1 + i, kind: ParseErrorKind::UnexpectedChar(c) });
        }
        let b = parse_poly_at(&s[inner_start..close], inner_start)?;
        let head = s[..upos].trim_end();
        let a = match head.strip_suffix('+') {
            Some(h) => parse_poly_at(h, 0)?,
            None if head.trim().is_empty() => BinPoly::zero(),
            None => {
                return Err(Error::Parse { offset: upos, kind: ParseErrorKind::UnexpectedChar('u') });
            }
        };
        Ok(RPoly { a, b })
    }
}

/// Largest block length supported by [`SnElem`].
pub const MAX_N: usize = 64;

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        Err(Error::InvalidLength { n, max: MAX_N })
    } else {
        Ok(())
    }
}

/// A residue class of `S_n = R[x]/(x^n - (1+u))`, stored fully reduced.
///
/// Bit `i` of `a` (resp. `b`) is the F2 (resp. u) part of the coefficient of `x^i`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SnElem {
    n: usize,
    a: u64,
    b: u64,
}

impl SnElem {
    /// Builds an element from coefficient masks; bits at or above `n` are rejected.
    pub fn new(n: usize, a: u64, b: u64) -> Result<Self> {
        check_n(n)?;
        let m = low_mask(n);
        if a & !m != 0 || b & !m != 0 {
            return Err(Error::Precondition(format!("coefficients exceed degree {} in S_{n}", n - 1)));
        }
        Ok(SnElem { n, a, b })
    }

    pub(crate) fn from_masks_unchecked(n: usize, a: u64, b: u64) -> Self {
        debug_assert!((1..=MAX_N).contains(&n));
        SnElem { n, a, b }
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(n, 0, 0)
    }

    pub fn one(n: usize) -> Result<Self> {
        Self::new(n, 1, 0)
    }

    /// The residue of an F2 polynomial.
    pub fn from_f2(p: &BinPoly, n: usize) -> Result<Self> {
        sn_reduce(&RPoly::from_f2(p.clone()), n)
    }

    /// The residue of `u·p`; only `p mod (x^n + 1)` matters.
    pub fn u_times_f2(p: &BinPoly, n: usize) -> Result<Self> {
        sn_reduce(&RPoly::u_times(p.clone()), n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a_bits(&self) -> u64 {
        self.a
    }

    pub fn b_bits(&self) -> u64 {
        self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn coeff(&self, i: usize) -> RingElem {
        assert!(i < self.n, "coefficient index {i} out of range for S_{}", self.n);
        RingElem::new((self.a >> i) & 1 == 1, (self.b >> i) & 1 == 1)
    }

    /// The `n` coefficients, constant term first.
    pub fn coeffs(&self) -> Vec<RingElem> {
        (0..self.n).map(|i| self.coeff(i)).collect()
    }

    /// The canonical representative as a polynomial over `R`.
    pub fn lift(&self) -> RPoly {
        RPoly::new(BinPoly::from_bits(self.a), BinPoly::from_bits(self.b))
    }

    pub fn lee_weight(&self) -> u32 {
        self.b.count_ones() + (self.a ^ self.b).count_ones()
    }

    /// `u·self`.
    pub fn times_u(&self) -> SnElem {
        SnElem { n: self.n, a: 0, b: self.a }
    }

    pub fn scale(&self, r: RingElem) -> SnElem {
        let a = if r.a { self.a } else { 0 };
        let b = (if r.a { self.b } else { 0 }) ^ (if r.b { self.a } else { 0 });
        SnElem { n: self.n, a, b }
    }

    fn same_n(&self, other: &SnElem) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::ModulusMismatch { left: self.n, right: other.n })
        }
    }

    pub fn add(&self, other: &SnElem) -> Result<SnElem> {
        self.same_n(other)?;
        Ok(SnElem { n: self.n, a: self.a ^ other.a, b: self.b ^ other.b })
    }

    /// Product in `S_n`.
    pub fn mul(&self, other: &SnElem) -> Result<SnElem> {
        self.same_n(other)?;
        Ok(self.mul_same_n(other))
    }

    /// Product; both operands must share `n`.
    #[inline]
    pub(crate) fn mul_same_n(&self, other: &SnElem) -> SnElem {
        let n = self.n;
        let hi_a = clmul64(self.a, other.a);
        let hi_b = clmul64(self.a, other.b) ^ clmul64(other.a, self.b);
        // Degrees stay below 2n - 1, so a single fold suffices.
        let m = low_mask(n) as u128;
        let (a_lo, a_hi) = ((hi_a & m) as u64, (hi_a >> n) as u64);
        let (b_lo, b_hi) = ((hi_b & m) as u64, (hi_b >> n) as u64);
        SnElem { n, a: a_lo ^ a_hi, b: b_lo ^ b_hi ^ a_hi }
    }

    /// `x^k` in `S_n`.
    pub fn x_pow(k: usize, n: usize) -> Result<SnElem> {
        sn_reduce(&RPoly::from_f2(BinPoly::monomial(k)), n)
    }

    /// `x·self`, i.e. one constacyclic shift of the coefficient vector.
    pub fn mul_x(&self) -> SnElem {
        let n = self.n;
        let top = n - 1;
        let (ca, cb) = ((self.a >> top) & 1, (self.b >> top) & 1);
        let m = low_mask(n);
        // The coefficient at x^(n-1) wraps to x^0 multiplied by 1+u.
        let a = ((self.a << 1) & m) | ca;
        let b = ((self.b << 1) & m) | (cb ^ ca);
        SnElem { n, a, b }
    }
}

impl fmt::Display for SnElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.lift().fmt(f)
    }
}

impl fmt::Debug for SnElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S_{}({})", self.n, self)
    }
}

/// Reduces a polynomial over `R` of any degree into `S_n`.
///
/// Folding uses `x^n = 1+u` and `(1+u)^2 = 1`: the block of coefficients at
/// `x^(kn)..x^(kn+n-1)` lands on `x^0..x^(n-1)` multiplied by `(1+u)^k`.
pub fn sn_reduce(p: &RPoly, n: usize) -> Result<SnElem> {
    check_n(n)?;
    let chunk = |q: &BinPoly, k: usize| -> u64 {
        let lo = k * n;
        let mut w = 0u64;
        for i in 0..n {
            if q.coeff(lo + i) {
                w |= 1 << i;
            }
        }
        w
    };
    let blocks = |q: &BinPoly| q.deg().map_or(0, |d| d / n + 1);
    let (mut a, mut b) = (0u64, 0u64);
    for k in 0..blocks(&p.a) {
        let c = chunk(&p.a, k);
        a ^= c;
        if k % 2 == 1 {
            b ^= c;
        }
    }
    for k in 0..blocks(&p.b) {
        b ^= chunk(&p.b, k);
    }
    Ok(SnElem { n, a, b })
}

fn words_for(len: usize) -> usize {
    len.div_ceil(64)
}

/// A vector in `R^N`, stored as two bit strings.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RVec {
    len: usize,
    a: Vec<u64>,
    b: Vec<u64>,
}

impl RVec {
    pub fn zeros(len: usize) -> Self {
        RVec { len, a: vec![0; words_for(len)], b: vec![0; words_for(len)] }
    }

    pub fn from_elems(v: &[RingElem]) -> Self {
        let mut out = RVec::zeros(v.len());
        for (i, &s) in v.iter().enumerate() {
            out.set(i, s);
        }
        out
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> RingElem {
        assert!(i < self.len);
        let (w, s) = (i / 64, i % 64);
        RingElem::new((self.a[w] >> s) & 1 == 1, (self.b[w] >> s) & 1 == 1)
    }

    pub fn set(&mut self, i: usize, r: RingElem) {
        assert!(i < self.len);
        let (w, s) = (i / 64, i % 64);
        self.a[w] = (self.a[w] & !(1 << s)) | ((r.a as u64) << s);
        self.b[w] = (self.b[w] & !(1 << s)) | ((r.b as u64) << s);
    }

    pub fn to_elems(&self) -> Vec<RingElem> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().chain(&self.b).all(|&w| w == 0)
    }

    pub fn lee_weight(&self) -> u32 {
        self.a.iter().zip(&self.b).map(|(&a, &b)| b.count_ones() + (a ^ b).count_ones()).sum()
    }

    /// `u·self`: every symbol lands in `{0, u}`.
    pub fn times_u(&self) -> RVec {
        RVec { len: self.len, a: vec![0; self.a.len()], b: self.a.clone() }
    }

    pub fn times_one_plus_u(&self) -> RVec {
        let b = self.a.iter().zip(&self.b).map(|(a, b)| a ^ b).collect();
        RVec { len: self.len, a: self.a.clone(), b }
    }

    /// True when every symbol lies in `{0, u}`.
    pub fn is_u_multiple(&self) -> bool {
        self.a.iter().all(|&w| w == 0)
    }

    /// Blockwise Gray image: all `b` parts, then all `a+b` parts.
    pub fn gray(&self) -> GrayWord {
        let n = self.len;
        let mut bits = GrayWord::zeros(2 * n);
        for i in 0..n {
            let s = self.get(i);
            let (first, second) = s.gray();
            if first {
                bits.set(i);
            }
            if second {
                bits.set(n + i);
            }
        }
        bits
    }
}

impl AddAssign<&RVec> for RVec {
    fn add_assign(&mut self, rhs: &RVec) {
        assert_eq!(self.len, rhs.len, "vector length mismatch");
        for (x, y) in self.a.iter_mut().zip(&rhs.a) {
            *x ^= y;
        }
        for (x, y) in self.b.iter_mut().zip(&rhs.b) {
            *x ^= y;
        }
    }
}

impl Add for &RVec {
    type Output = RVec;

    fn add(self, rhs: &RVec) -> RVec {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl fmt::Debug for RVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for i in 0..self.len {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.get(i))?;
        }
        write!(f, ")")
    }
}

/// A binary word of length `2N`, the Gray image of a vector in `R^N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GrayWord {
    len: usize,
    bits: Vec<u64>,
}

impl GrayWord {
    pub fn zeros(len: usize) -> Self {
        GrayWord { len, bits: vec![0; words_for(len)] }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bit(&self, i: usize) -> bool {
        assert!(i < self.len);
        (self.bits[i / 64] >> (i % 64)) & 1 == 1
    }

    fn set(&mut self, i: usize) {
        self.bits[i / 64] |= 1 << (i % 64);
    }

    pub fn words(&self) -> &[u64] {
        &self.bits
    }

    pub fn hamming_weight(&self) -> u32 {
        self.bits.iter().map(|w| w.count_ones()).sum()
    }
}

impl Add for &GrayWord {
    type Output = GrayWord;

    fn add(self, rhs: &GrayWord) -> GrayWord {
        assert_eq!(self.len, rhs.len, "word length mismatch");
        GrayWord { len: self.len, bits: self.bits.iter().zip(&rhs.bits).map(|(x, y)| x ^ y).collect() }
    }
}
