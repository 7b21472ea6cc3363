//! Exhaustive search over generator polynomials within degree bounds.
//!
//! Candidates are visited in a fixed lexicographic order: slot by slot, and
//! within a slot by coefficient string, lowest degree first. Evaluation runs
//! in parallel, but results are merged in candidate order, so the table does
//! not depend on the worker count.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::{gray_params, span_min_lee, GrayParams};
use crate::construct::{Construction, EnumGuard, Family};
use crate::error::{Error, Result};
use crate::gf2poly::{divisors_of_xn_minus_1, BinPoly};
use crate::recipe::Recipe;
use crate::ring::check_n;

/// Default cap on enumerated candidate tuples.
pub const DEFAULT_MAX_CANDIDATES: usize = 1 << 20;

const CHUNK: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    pub n: usize,
    pub l: usize,
    pub family: Family,
    /// Degree bound for every free polynomial slot; must be below `2n`.
    pub max_deg: usize,
    pub max_candidates: usize,
    /// `None` uses rayon's default pool.
    pub workers: Option<usize>,
    pub guard: EnumGuard,
}

impl SearchSpec {
    pub fn new(n: usize, l: usize, family: Family, max_deg: usize) -> Self {
        SearchSpec {
            n,
            l,
            family,
            max_deg,
            max_candidates: DEFAULT_MAX_CANDIDATES,
            workers: None,
            guard: EnumGuard::with_max_log2(20),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRow {
    pub k: usize,
    pub d_lee: u32,
    pub gray: GrayParams,
    /// No other row has both `k` and `d` at least as large (one strictly).
    pub pareto: bool,
    pub recipe: Recipe,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    /// Candidate tuples enumerated.
    pub candidates: usize,
    /// Candidates satisfying the family preconditions with a nonzero code.
    pub feasible: usize,
    /// Best distance per dimension, ascending in `k`.
    pub rows: Vec<SearchRow>,
}

/// All polynomials of degree `<= max_deg`, zero first.
fn polys_up_to(max_deg: usize) -> Vec<BinPoly> {
    (0u64..(1u64 << (max_deg + 1))).map(BinPoly::from_bits).collect()
}

/// Mixed-radix counter over slot sizes; the first slot is most significant.
struct Odometer {
    sizes: Vec<usize>,
    cur: Option<Vec<usize>>,
}

impl Odometer {
    fn new(sizes: Vec<usize>) -> Self {
        let cur = if sizes.iter().all(|&s| s > 0) { Some(vec![0; sizes.len()]) } else { None };
        Odometer { sizes, cur }
    }
}

impl Iterator for Odometer {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.cur.clone()?;
        let cur = self.cur.as_mut().expect("checked above");
        let mut i = self.sizes.len();
        loop {
            if i == 0 {
                self.cur = None;
                break;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < self.sizes[i] {
                break;
            }
            cur[i] = 0;
        }
        Some(out)
    }
}

/// The candidate constructions, lazily, in search order.
fn candidates(spec: &SearchSpec) -> Result<Box<dyn Iterator<Item = Construction>>> {
    let n = spec.n;
    let polys = polys_up_to(spec.max_deg);
    let np = polys.len();
    let l = spec.l;
    let within = |d: &BinPoly| d.deg().is_some_and(|k| k <= spec.max_deg);
    Ok(match spec.family {
        Family::A1 | Family::A2 => {
            let fam = spec.family;
            Box::new(Odometer::new(vec![np; l]).map(move |idx| {
                let g: Vec<BinPoly> = idx.iter().map(|&i| polys[i].clone()).collect();
                if fam == Family::A1 {
                    Construction::A1 { g }
                } else {
                    Construction::A2 { g }
                }
            }))
        }
        Family::SpecialA2 => {
            let divs: Vec<BinPoly> =
                divisors_of_xn_minus_1(n)?.into_iter().filter(|d| within(d) && d.deg() < Some(n)).collect();
            let mut sizes = vec![divs.len()];
            sizes.extend(std::iter::repeat_n(np, l));
            Box::new(Odometer::new(sizes).map(move |idx| Construction::SpecialA2 {
                g: divs[idx[0]].clone(),
                f: idx[1..].iter().map(|&i| polys[i].clone()).collect(),
            }))
        }
        Family::B => {
            let divs: Vec<BinPoly> = divisors_of_xn_minus_1(n)?.into_iter().filter(within).collect();
            let pairs: Vec<(BinPoly, BinPoly)> = divs
                .iter()
                .flat_map(|g| divs.iter().filter(|f| g.is_divisible_by(f)).map(move |f| (f.clone(), g.clone())))
                .collect();
            let mut sizes = vec![pairs.len()];
            sizes.extend(std::iter::repeat_n(np, l));
            Box::new(Odometer::new(sizes).map(move |idx| {
                let (f, g) = pairs[idx[0]].clone();
                Construction::B { q: idx[1..].iter().map(|&i| polys[i].clone()).collect(), f, g }
            }))
        }
    })
}

fn evaluate(n: usize, c: &Construction, guard: EnumGuard) -> Option<(usize, u32)> {
    let gs = c.generating_set(n).ok()?;
    let d = span_min_lee(&gs, guard).ok()?;
    Some((gs.card_log2(), d))
}

/// Runs the search and returns the best distance found for each dimension.
pub fn search(spec: &SearchSpec) -> Result<SearchReport> {
    check_n(spec.n)?;
    if spec.l == 0 {
        return Err(Error::precondition("index l must be at least 1"));
    }
    if spec.max_deg >= 2 * spec.n || spec.max_deg >= 63 {
        return Err(Error::precondition(format!(
            "degree bound {} must be below 2n = {} (and below 63)",
            spec.max_deg,
            2 * spec.n
        )));
    }
    let pool = match spec.workers {
        Some(w) => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| Error::precondition(e.to_string()))?,
        ),
        None => None,
    };

    let mut iter = candidates(spec)?.take(spec.max_candidates);
    // best[k] = (d, recipe) for the first candidate reaching the largest d at dimension k
    let mut best: std::collections::BTreeMap<usize, (u32, Construction)> = Default::default();
    let (mut seen, mut feasible) = (0usize, 0usize);
    loop {
        let chunk: Vec<Construction> = iter.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        seen += chunk.len();
        let eval =
            || -> Vec<Option<(usize, u32)>> { chunk.par_iter().map(|c| evaluate(spec.n, c, spec.guard)).collect() };
        let results = match &pool {
            Some(p) => p.install(eval),
            None => eval(),
        };
        for (c, res) in chunk.into_iter().zip(results) {
            let Some((k, d)) = res else { continue };
            feasible += 1;
            match best.get(&k) {
                Some((bd, _)) if *bd >= d => {}
                _ => {
                    best.insert(k, (d, c));
                }
            }
        }
    }
    if best.is_empty() {
        return Err(Error::EmptySearchSpace);
    }

    let mut rows: Vec<SearchRow> = best
        .into_iter()
        .map(|(k, (d, c))| SearchRow {
            k,
            d_lee: d,
            gray: gray_params(spec.n, spec.l, k, d),
            pareto: false,
            recipe: Recipe::from_construction(spec.n, &c),
        })
        .collect();
    let mut best_above = 0u32;
    for row in rows.iter_mut().rev() {
        row.pareto = row.d_lee > best_above;
        best_above = best_above.max(row.d_lee);
    }
    Ok(SearchReport { candidates: seen, feasible, rows })
}
