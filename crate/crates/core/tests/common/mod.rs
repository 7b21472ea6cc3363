//! Seeded samplers of generators that pass their family's preconditions.
#![allow(dead_code)]

use qtcodes::gf2poly::divisors_of_xn_minus_1;
use qtcodes::{BinPoly, Construction, Family, GeneratingSet, QtGenerator};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Random polynomial of degree below `2n`, possibly zero.
pub fn poly(rng: &mut impl Rng, n: usize) -> BinPoly {
    BinPoly::from_bits(rng.gen_range(0..1u64 << (2 * n)))
}

fn polys(rng: &mut impl Rng, n: usize, l: usize) -> Vec<BinPoly> {
    (0..l).map(|_| poly(rng, n)).collect()
}

fn pick<'a, T>(rng: &mut impl Rng, v: &'a [T]) -> &'a T {
    &v[rng.gen_range(0..v.len())]
}

pub fn construction(rng: &mut impl Rng, n: usize, l: usize, family: Family) -> Construction {
    let divs = divisors_of_xn_minus_1(n).unwrap();
    match family {
        Family::A1 => Construction::A1 { g: polys(rng, n, l) },
        Family::A2 => Construction::A2 { g: polys(rng, n, l) },
        Family::SpecialA2 => Construction::SpecialA2 { g: pick(rng, &divs).clone(), f: polys(rng, n, l) },
        Family::B => {
            let g = pick(rng, &divs).clone();
            let fs: Vec<BinPoly> = divs.iter().filter(|f| g.is_divisible_by(f)).cloned().collect();
            Construction::B { q: polys(rng, n, l), f: pick(rng, &fs).clone(), g }
        }
    }
}

/// Rejection-samples a construction whose generating set builds.
pub fn sample(rng: &mut impl Rng, n: usize, l: usize, family: Family) -> (QtGenerator, GeneratingSet) {
    for _ in 0..10_000 {
        let c = construction(rng, n, l, family);
        let gen = QtGenerator::new(n, c).unwrap();
        if let Ok(gs) = gen.generating_set() {
            return (gen, gs);
        }
    }
    panic!("no feasible {family} generator found for n = {n}, l = {l}");
}
