use proptest::prelude::*;
use qtcodes::gf2poly::{gcd_all, two_adic_split, xn_minus_1, BinPoly};

/// Coefficients, lowest first, with no trailing zeros.
fn naive(p: &BinPoly) -> Vec<bool> {
    let mut v: Vec<bool> = (0..=p.deg().unwrap_or(0)).map(|i| p.coeff(i)).collect();
    while v.last() == Some(&false) {
        v.pop();
    }
    v
}

fn from_naive(v: &[bool]) -> BinPoly {
    BinPoly::from_exponents(v.iter().enumerate().filter(|(_, &c)| c).map(|(i, _)| i))
}

fn naive_mul(a: &[bool], b: &[bool]) -> Vec<bool> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![false; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] ^= x && y;
        }
    }
    out
}

fn naive_rem(a: &[bool], d: &[bool]) -> Vec<bool> {
    let mut r = a.to_vec();
    while r.len() >= d.len() {
        let shift = r.len() - d.len();
        for (i, &c) in d.iter().enumerate() {
            r[shift + i] ^= c;
        }
        while r.last() == Some(&false) {
            r.pop();
        }
    }
    r
}

fn poly(max_deg: usize) -> impl Strategy<Value = BinPoly> {
    proptest::collection::vec(any::<bool>(), 0..=max_deg + 1).prop_map(|v| from_naive(&v))
}

fn nonzero(max_deg: usize) -> impl Strategy<Value = BinPoly> {
    poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn product_matches_schoolbook(a in poly(150), b in poly(150)) {
        prop_assert_eq!(naive(&(&a * &b)), naive_mul(&naive(&a), &naive(&b)));
    }

    #[test]
    fn division_recovers_quotient_and_remainder(p in poly(120), d in nonzero(70), q in poly(60)) {
        let r = q.rem(&d).unwrap();
        let (qq, rr) = (&(&p * &d) + &r).div_rem(&d).unwrap();
        prop_assert_eq!(qq, p);
        prop_assert_eq!(&rr, &r);
        prop_assert!(rr.deg() < d.deg());
    }

    #[test]
    fn remainder_matches_long_division(a in poly(130), d in nonzero(40)) {
        prop_assert_eq!(naive(&a.rem(&d).unwrap()), naive_rem(&naive(&a), &naive(&d)));
    }

    #[test]
    fn gcd_divides_and_is_order_free(a in nonzero(40), b in nonzero(40), c in nonzero(40)) {
        let g = gcd_all([&a, &b, &c]).unwrap();
        for p in [&a, &b, &c] {
            prop_assert!(p.rem(&g).unwrap().is_zero());
        }
        prop_assert_eq!(&g, &gcd_all([&c, &a, &b]).unwrap());
        prop_assert_eq!(a.gcd(&b), b.gcd(&a));
    }

    #[test]
    fn gcd_with_xn_plus_1_factors_it(p in nonzero(30), n in 1usize..40) {
        let m = xn_minus_1(n).unwrap();
        let g = gcd_all([&p, &m]).unwrap();
        let h = m.exact_div(&g).unwrap();
        prop_assert_eq!(&g * &h, m);
    }

    #[test]
    fn text_round_trip(p in poly(100)) {
        prop_assert_eq!(p.to_string().parse::<BinPoly>().unwrap(), p);
    }

    #[test]
    fn two_adic_split_reassembles(n in 1usize..1_000_000) {
        let (e, m) = two_adic_split(n);
        prop_assert_eq!(m << e, n);
        prop_assert_eq!(m % 2, 1);
    }
}

#[test]
fn degree_of_zero_sorts_below_everything() {
    assert!(BinPoly::zero().degree() < BinPoly::one().degree());
    assert_eq!(BinPoly::zero().deg(), None);
}
