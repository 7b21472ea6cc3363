//! One-generator `(1+u)`-quasi-twisted codes over `R = F2 + uF2`.
//!
//! The crate builds the minimum generating sets of four families of
//! one-generator quasi-twisted codes, maps them through the Gray isometry to
//! binary linear codes, and checks every result against a brute-force
//! enumeration of the `S_n`-module the generator spans.
//!
//! ```
//! use qtcodes::{build_a1, span_min_lee, gray_params, BinPoly, EnumGuard};
//!
//! let g: Vec<BinPoly> = ["x+1", "x^2+1"].iter().map(|s| s.parse().unwrap()).collect();
//! let gs = build_a1(3, &g).unwrap();
//! let d = span_min_lee(&gs, EnumGuard::default()).unwrap();
//! assert_eq!(gray_params(3, 2, gs.card_log2(), d).as_array(), [12, 5, 4]);
//! ```
//!
//! The guide under `book/` walks through the algebra; its code listings are
//! compiled as doc-tests of this crate.

pub mod analysis;
pub mod construct;
pub mod error;
pub mod gf2poly;
pub mod published;
pub mod recipe;
pub mod ring;
pub mod search;

pub use analysis::{
    classify_constacyclic, equals_oracle, gray_params, min_lee, oracle_enum, projection_bound, qt_check, rank_check,
    span_min_lee, summarize, CodeSummary, ConstacyclicType, GrayParams,
};
pub use construct::{
    build_a1, build_a2, build_b, build_special_a2, card_log2, rho_pack, rho_unpack, span_enumerate, t_shift,
    Construction, EnumGuard, Family, GeneratingSet, QtGenerator,
};
pub use error::{Error, Result};
pub use gf2poly::{gcd_all, two_adic_split, xn_minus_1, BinPoly, Degree};
pub use recipe::Recipe;
pub use ring::{gray_map, lee_weight, GrayWord, RPoly, RVec, RingElem, SnElem};
pub use search::{search, SearchReport, SearchSpec};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/ring.md")]
    mod ring {}
    #[doc = include_str!("../../../book/src/qt-codes.md")]
    mod qt_codes {}
    #[doc = include_str!("../../../book/src/generating-sets.md")]
    mod generating_sets {}
    #[doc = include_str!("../../../book/src/analysis.md")]
    mod analysis {}
    #[doc = include_str!("../../../book/src/reference-codes.md")]
    mod reference_codes {}
    #[doc = include_str!("../../../book/src/search.md")]
    mod search {}
}
