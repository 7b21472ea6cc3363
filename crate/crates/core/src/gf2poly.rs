//! Polynomials over F2, bit-packed into 64-bit limbs.
//!
//! Bit `i` of the limb vector is the coefficient of `x^i`. The limb vector
//! never carries trailing zero limbs, so equality and hashing are structural.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use crate::error::{Error, ParseErrorKind, Result};

/// Degree of a polynomial; the zero polynomial has degree `NegInfinity`.
///
/// The derived ordering puts `NegInfinity` below every finite degree.
#[derive(Debug, Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A polynomial over the two-element field.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BinPoly {
    limbs: Vec<u64>,
}

/// Carry-less product of two 64-bit words.
#[inline]
pub(crate) fn clmul64(a: u64, b: u64) -> u128 {
    let a = a as u128;
    let mut b = b;
    let mut acc = 0u128;
    while b != 0 {
        acc ^= a << b.trailing_zeros();
        b &= b - 1;
    }
    acc
}

impl BinPoly {
    pub fn zero() -> Self {
        BinPoly { limbs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_bits(1)
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_bits(0b10)
    }

    pub fn monomial(k: usize) -> Self {
        let mut p = Self::zero();
        p.flip(k);
        p
    }

    /// Bit `i` of `bits` becomes the coefficient of `x^i`.
    pub fn from_bits(bits: u64) -> Self {
        Self::from_limbs(vec![bits])
    }

    pub fn from_limbs(limbs: Vec<u64>) -> Self {
        let mut p = BinPoly { limbs };
        p.trim();
        p
    }

    /// Sum of the monomials `x^k`; repeated exponents cancel.
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exps: I) -> Self {
        let mut p = Self::zero();
        for k in exps {
            p.flip(k);
        }
        p
    }

    fn trim(&mut self) {
        while self.limbs.last() == Some(&0) {
            self.limbs.pop();
        }
    }

    pub fn limbs(&self) -> &[u64] {
        &self.limbs
    }

    /// The coefficient bits as a single word, if the degree is below 64.
    pub fn to_u64(&self) -> Option<u64> {
        match self.limbs.len() {
            0 => Some(0),
            1 => Some(self.limbs[0]),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.limbs == [1]
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.limbs.get(i / 64).is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    /// Toggles the coefficient of `x^i`.
    pub fn flip(&mut self, i: usize) {
        let w = i / 64;
        if self.limbs.len() <= w {
            self.limbs.resize(w + 1, 0);
        }
        self.limbs[w] ^= 1 << (i % 64);
        self.trim();
    }

    pub fn degree(&self) -> Degree {
        match self.limbs.last() {
            None => Degree::NegInfinity,
            Some(&top) => Degree::Finite(64 * (self.limbs.len() - 1) + 63 - top.leading_zeros() as usize),
        }
    }

    /// Degree as an integer; `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.degree().finite()
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> u32 {
        self.limbs.iter().map(|w| w.count_ones()).sum()
    }

    /// Exponents with a nonzero coefficient, highest first.
    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.limbs.len() * 64).rev().filter(|&i| self.coeff(i))
    }

    /// `self · x^k`.
    pub fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (words, bits) = (k / 64, k % 64);
        let mut out = vec![0u64; self.limbs.len() + words + 1];
        for (i, &w) in self.limbs.iter().enumerate() {
            out[i + words] ^= w << bits;
            if bits != 0 {
                out[i + words + 1] ^= w >> (64 - bits);
            }
        }
        Self::from_limbs(out)
    }

    /// `self += other · x^k`, in place.
    fn add_shifted(&mut self, other: &BinPoly, k: usize) {
        let (words, bits) = (k / 64, k % 64);
        let need = other.limbs.len() + words + 1;
        if self.limbs.len() < need {
            self.limbs.resize(need, 0);
        }
        for (i, &w) in other.limbs.iter().enumerate() {
            self.limbs[i + words] ^= w << bits;
            if bits != 0 {
                self.limbs[i + words + 1] ^= w >> (64 - bits);
            }
        }
        self.trim();
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &BinPoly) -> Result<(BinPoly, BinPoly)> {
        let dd = d.deg().ok_or(Error::DivisionByZero)?;
        let mut r = self.clone();
        let mut q = BinPoly::zero();
        while let Some(dr) = r.deg() {
            if dr < dd {
                break;
            }
            let shift = dr - dd;
            r.add_shifted(d, shift);
            q.flip(shift);
        }
        Ok((q, r))
    }

    pub fn rem(&self, d: &BinPoly) -> Result<BinPoly> {
        self.div_rem(d).map(|(_, r)| r)
    }

    /// True if `d` divides `self`. The zero polynomial divides only zero.
    pub fn is_divisible_by(&self, d: &BinPoly) -> bool {
        if d.is_zero() {
            return self.is_zero();
        }
        self.rem(d).is_ok_and(|r| r.is_zero())
    }

    /// Exact quotient `self / d`, failing with a precondition error if `d` does not divide.
    pub fn exact_div(&self, d: &BinPoly) -> Result<BinPoly> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::precondition(format!("{d} does not divide {self}")))
        }
    }

    pub fn gcd(&self, other: &BinPoly) -> BinPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a
    }
}

/// Greatest common divisor of a list, folded left to right.
pub fn gcd_all<'a, I>(ps: I) -> Result<BinPoly>
where
    I: IntoIterator<Item = &'a BinPoly>,
{
    let g = ps.into_iter().fold(BinPoly::zero(), |acc, p| acc.gcd(p));
    if g.is_zero() {
        Err(Error::GcdOfZeros)
    } else {
        Ok(g)
    }
}

/// `x^n - 1`, which over F2 is `x^n + 1`.
pub fn xn_minus_1(n: usize) -> Result<BinPoly> {
    if n == 0 {
        return Err(Error::InvalidLength { n, max: usize::MAX });
    }
    Ok(BinPoly::from_exponents([n, 0]))
}

/// Splits `n = 2^e · m` with `m` odd.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn two_adic_split(n: usize) -> (u32, usize) {
    assert!(n > 0, "two_adic_split needs n >= 1");
    let e = n.trailing_zeros();
    (e, n >> e)
}

/// Largest `n` for which [`divisors_of_xn_minus_1`] runs its trial division.
pub const MAX_DIVISOR_SEARCH_N: usize = 24;

/// All divisors of `x^n + 1`, by trial division over every polynomial of degree `<= n`.
///
/// Sorted by degree, then by coefficient string.
pub fn divisors_of_xn_minus_1(n: usize) -> Result<Vec<BinPoly>> {
    if n == 0 || n > MAX_DIVISOR_SEARCH_N {
        return Err(Error::InvalidLength { n, max: MAX_DIVISOR_SEARCH_N });
    }
    let modulus = xn_minus_1(n)?;
    let mut out: Vec<BinPoly> =
        (1u64..(1u64 << (n + 1))).map(BinPoly::from_bits).filter(|d| modulus.is_divisible_by(d)).collect();
    out.sort();
    Ok(out)
}

impl Ord for BinPoly {
    /// Degree first, then the coefficient string read from the top.
    fn cmp(&self, other: &Self) -> Ordering {
        self.limbs.len().cmp(&other.limbs.len()).then_with(|| self.limbs.iter().rev().cmp(other.limbs.iter().rev()))
    }
}

impl PartialOrd for BinPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &BinPoly {
    type Output = BinPoly;

    fn add(self, rhs: &BinPoly) -> BinPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for BinPoly {
    type Output = BinPoly;

    fn add(mut self, rhs: BinPoly) -> BinPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&BinPoly> for BinPoly {
    fn add_assign(&mut self, rhs: &BinPoly) {
        if self.limbs.len() < rhs.limbs.len() {
            self.limbs.resize(rhs.limbs.len(), 0);
        }
        for (a, b) in self.limbs.iter_mut().zip(&rhs.limbs) {
            *a ^= b;
        }
        self.trim();
    }
}

impl Mul for &BinPoly {
    type Output = BinPoly;

    fn mul(self, rhs: &BinPoly) -> BinPoly {
        if self.is_zero() || rhs.is_zero() {
            return BinPoly::zero();
        }
        let mut out = vec![0u64; self.limbs.len() + rhs.limbs.len()];
        for (i, &a) in self.limbs.iter().enumerate() {
            for (j, &b) in rhs.limbs.iter().enumerate() {
                let p = clmul64(a, b);
                out[i + j] ^= p as u64;
                out[i + j + 1] ^= (p >> 64) as u64;
            }
        }
        BinPoly::from_limbs(out)
    }
}

impl Mul for BinPoly {
    type Output = BinPoly;

    fn mul(self, rhs: BinPoly) -> BinPoly {
        &self * &rhs
    }
}

impl fmt::Display for BinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in self.exponents() {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match k {
                0 => write!(f, "1")?,
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BinPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinPoly({self})")
    }
}

fn parse_err(offset: usize, kind: ParseErrorKind) -> Error {
    Error::Parse { offset, kind }
}

/// Parses a polynomial starting at byte `base` of some larger input, so that
/// reported offsets refer to the larger input.
pub(crate) fn parse_poly_at(s: &str, base: usize) -> Result<BinPoly> {
    let bytes = s.as_bytes();
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(parse_err(base + pos, ParseErrorKind::Empty));
    }

    if s[pos..].starts_with("0b") {
        pos += 2;
        let digits = s[pos..].trim_end();
        if digits.is_empty() {
            return Err(parse_err(base + pos, ParseErrorKind::Empty));
        }
        let mut p = BinPoly::zero();
        for (i, c) in digits.chars().enumerate() {
            match c {
                '0' => {}
                '1' => p.flip(digits.len() - 1 - i),
                other => return Err(parse_err(base + pos + i, ParseErrorKind::UnexpectedChar(other))),
            }
        }
        return Ok(p);
    }

    if s[pos..].trim_end() == "0" {
        return Ok(BinPoly::zero());
    }

    let mut p = BinPoly::zero();
    loop {
        skip_ws(&mut pos);
        let Some(&c) = bytes.get(pos) else {
            return Err(parse_err(base + pos, ParseErrorKind::Empty));
        };
        let term_start = pos;
        let exp = match c {
            b'1' => {
                pos += 1;
                0
            }
            b'x' => {
                pos += 1;
                if bytes.get(pos) == Some(&b'^') {
                    pos += 1;
                    let start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if start == pos {
                        return Err(parse_err(base + start, ParseErrorKind::ExpectedExponent));
                    }
                    s[start..pos]
                        .parse::<usize>()
                        .ok()
                        .filter(|&k| k < (1 << 24))
                        .ok_or_else(|| parse_err(base + start, ParseErrorKind::ExponentOverflow))?
                } else {
                    1
                }
            }
            _ => {
                let ch = s[pos..].chars().next().unwrap_or('?');
                return Err(parse_err(base + pos, ParseErrorKind::UnexpectedChar(ch)));
            }
        };
        if p.coeff(exp) {
            return Err(parse_err(base + term_start, ParseErrorKind::DuplicateExponent(exp)));
        }
        p.flip(exp);
        skip_ws(&mut pos);
        match bytes.get(pos) {
            None => return Ok(p),
            Some(b'+') => pos += 1,
            Some(_) => {
                let ch = s[pos..].chars().next().unwrap_or('?');
                return Err(parse_err(base + pos, ParseErrorKind::UnexpectedChar(ch)));
            }
        }
    }
}

impl FromStr for BinPoly {
    type Err = Error;

    /// Accepts `"x^4+x^3+x^2+1"` style monomial sums (any order, no repeats),
    /// `"0"`, or a binary string `"0b11101"` whose rightmost digit is the constant term.
    fn from_str(s: &str) -> Result<Self> {
        parse_poly_at(s, 0)
    }
}

impl serde::Serialize for BinPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for BinPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BinPoly {
        s.parse().unwrap()
    }

    /// Independent schoolbook product over exponent sets.
    fn naive_mul(a: &BinPoly, b: &BinPoly) -> BinPoly {
        let mut out = BinPoly::zero();
        for i in a.exponents() {
            for j in b.exponents() {
                out.flip(i + j);
            }
        }
        out
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p("x+1") * &p("x^3+x+1"), p("x^4+x^3+x^2+1"));
        assert_eq!(&p("x^5+x^2") * &BinPoly::one(), p("x^5+x^2"));
        assert_eq!(&p("x+1") * &p("x^2+x+1"), p("x^3+1"));
        assert!((&p("x+1") * &BinPoly::zero()).is_zero());
    }

    #[test]
    fn mul_across_limbs() {
        let a = p("x^100+x^63+x^64+1");
        let b = p("x^70+x^1+x^0");
        assert_eq!(&a * &b, naive_mul(&a, &b));
        assert_eq!((&a * &b).deg(), Some(170));
    }

    #[test]
    fn divmod_examples() {
        assert_eq!(p("x^3+1").div_rem(&p("x+1")).unwrap(), (p("x^2+x+1"), BinPoly::zero()));
        assert_eq!(p("x^3+x+1").div_rem(&p("x^2+x+1")).unwrap(), (p("x+1"), p("x")));
        let q = p("x^9+x^4+x");
        assert_eq!(q.div_rem(&q).unwrap(), (BinPoly::one(), BinPoly::zero()));
        assert_eq!(q.div_rem(&BinPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        let g = gcd_all(&[p("x+1"), p("x^2+1"), p("x^3+1")]).unwrap();
        assert_eq!(g, p("x+1"));
        assert_eq!(gcd_all(&[p("x^4+x+1"), BinPoly::zero()]).unwrap(), p("x^4+x+1"));
        assert_eq!(gcd_all(&[p("x^3+x+1"), p("x^2+x+1")]).unwrap(), BinPoly::one());
        assert_eq!(gcd_all(&[BinPoly::zero(), BinPoly::zero()]), Err(Error::GcdOfZeros));
        assert_eq!(gcd_all(&[]), Err(Error::GcdOfZeros));
    }

    #[test]
    fn xn_minus_1_values() {
        assert_eq!(xn_minus_1(3).unwrap(), p("x^3+1"));
        assert_eq!(xn_minus_1(1).unwrap(), p("x+1"));
        assert_eq!(xn_minus_1(9).unwrap(), p("x^9+1"));
        assert!(xn_minus_1(0).is_err());
    }

    #[test]
    fn two_adic_values() {
        assert_eq!(two_adic_split(12), (2, 3));
        assert_eq!(two_adic_split(9), (0, 9));
        assert_eq!(two_adic_split(4), (2, 1));
    }

    #[test]
    fn two_adic_split_exhaustive() {
        for n in 1..=1_000_000usize {
            let (e, m) = two_adic_split(n);
            assert_eq!(m << e, n);
            assert_eq!(m % 2, 1);
        }
    }

    #[test]
    fn zero_degree_is_below_constants() {
        assert_eq!(BinPoly::zero().degree(), Degree::NegInfinity);
        assert!(BinPoly::zero().degree() < BinPoly::one().degree());
        assert_eq!(p("x^64").degree(), Degree::Finite(64));
    }

    #[test]
    fn divisors_of_x3_plus_1() {
        let ds = divisors_of_xn_minus_1(3).unwrap();
        let want: Vec<BinPoly> = ["1", "x+1", "x^2+x+1", "x^3+1"].iter().map(|s| p(s)).collect();
        assert_eq!(ds, want);
    }

    #[test]
    fn parse_and_emit() {
        assert_eq!(p("x^4+x^3+x^2+1").to_string(), "x^4+x^3+x^2+1");
        assert_eq!(p("1"), BinPoly::one());
        assert_eq!(p("0b11101"), p("x^4+x^3+x^2+1"));
        assert_eq!(p(" 1 + x ").to_string(), "x+1");
        assert_eq!(p("0"), BinPoly::zero());
    }

    #[test]
    fn parse_errors() {
        let err = |s: &str| s.parse::<BinPoly>().unwrap_err();
        assert_eq!(err("x^"), Error::Parse { offset: 2, kind: ParseErrorKind::ExpectedExponent });
        assert_eq!(err(""), Error::Parse { offset: 0, kind: ParseErrorKind::Empty });
        assert_eq!(err("x+x"), Error::Parse { offset: 2, kind: ParseErrorKind::DuplicateExponent(1) });
        assert_eq!(err("x+"), Error::Parse { offset: 2, kind: ParseErrorKind::Empty });
        assert_eq!(err("x*2"), Error::Parse { offset: 1, kind: ParseErrorKind::UnexpectedChar('*') });
        assert_eq!(err("0b102"), Error::Parse { offset: 4, kind: ParseErrorKind::UnexpectedChar('2') });
    }
}
