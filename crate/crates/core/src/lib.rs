//! Anti-collusion fingerprinting codes.
//!
//! Frameproof codes (FPC), separable codes (SC) and strongly separable codes
//! (SSC) over small alphabets: the descendant-code calculus, exact checkers
//! with witnesses, the length-3 SSC family and its binary one-hot image, two
//! colluder tracers for binary codes, and a noiseless spread-spectrum
//! averaging-attack simulator that feeds them.
//!
//! Indices are 0-based throughout the library.

pub mod code;
pub mod construct;
pub mod desc;
pub mod error;
pub mod signal;
mod subsets;
pub mod trace;
pub mod verify;

pub use code::{hamming, Coalition, Code, Codeword};
pub use construct::{
    build_length3, one_hot_compose, optimal_s, predicted_size, ConstructionPlan, MixedAlphabet,
    Symbol,
};
pub use desc::{desc_contains, desc_intersect_code, descendant, shortened, FeasibleSet, SymbolSet};
pub use error::{Error, Result};
pub use signal::{
    averaging_attack, correlate, embed, make_context, threshold, DetectionStatistics,
    EmbeddingContext,
};
pub use trace::{coalition_feasible_set, lacc_identify, ssc_trace, Evidence, Outcome, TraceReport};
pub use verify::{
    desc_cap_bound, forbidden_type_scan, is_fpc, is_fpc_with, is_sc, is_sc_with, is_ssc,
    is_ssc_naive, is_ssc_naive_with, is_ssc_with, shortened_sc_check, ForbiddenType, Limits,
    Verdict, Witness,
};
