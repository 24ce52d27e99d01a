//! Minimum-distance bounds for q-ary cyclic codes.
//!
//! The crate builds cyclic codes from defining sets, computes consecutive-run
//! and double-progression bounds along with a locator-based bound, and checks
//! everything against brute-force enumeration and direct series identities.

mod error;

pub mod bounds;
pub mod code;
pub mod field;
pub mod oracle;
pub mod poly;

pub use bounds::{
    bch_bound, bound_report, ht_bound, ht_bound_normalized, nzl_bound, nzl_run, nzl_search,
    parity_bound_formula, prop1_improves, rs_bound_formula, synth_ht_pattern, BchWitness,
    BoundReport, HtNormalizedWitness, HtWitness, NzlWitness, SearchConfig, HT_LENGTH_CAP,
};
pub use code::{
    cyclotomic_coset, minimal_polynomial, verification_alphabet, Codeword, CyclicCode,
    DefiningSet, Locator, LocatorFamily,
};
pub use error::Error;
pub use field::{Element, Embedding, Field, DEFAULT_FIELD_CAP, MAX_FIELD_CAP};
pub use oracle::{
    definition2_holds, min_distance, rational_form, verify_coprime_factors, verify_definition2,
    verify_series_identity, Def2Failure, Def2Report, DistanceResult, PairContext, RationalForm,
    DEFAULT_ENUM_CAP,
};
pub use poly::Poly;

pub type Result<T> = std::result::Result<T, Error>;
