//! Exact and floating-point Sylvester wave decompositions of the
//! denumerant d(t; a), the number of nonnegative integer solutions of
//! a_1 x_1 + ... + a_N x_N = t.
//!
//! The denumerant is a quasi-polynomial in t; it splits into one wave
//! W_f(t; a) per divisor f of the entries, and each wave is computed
//! exactly in the cyclotomic quotient ring Q[x]/<Phi_f> (module [`wave`])
//! or approximately over Complex64 (module [`wave_float`]). Both routes
//! run on truncated-power-series log/exp machinery ([`series`], [`gtodd`])
//! over pluggable coefficient rings ([`ring`], [`cyclotomic`]).
//!
//! [`oracle`] holds an independent dynamic-programming counter used to
//! cross-check everything.
//!
//! ```
//! use denumerant::{all_waves, rat, Rat};
//!
//! let waves = all_waves(&[1, 3, 6]).unwrap();
//! // one wave per divisor of an entry
//! assert_eq!(waves.keys().copied().collect::<Vec<_>>(), vec![1, 2, 3, 6]);
//! // their values sum to the solution count of x + 3y + 6z = 14
//! let d14: Rat = waves.values().map(|w| w.eval(14)).sum();
//! assert_eq!(d14, rat(9, 1));
//! // the period-2 wave alternates between -1/24 and 1/24
//! assert_eq!(waves[&2].eval(13), rat(-1, 24));
//! ```
//!
//! The crate is no_std (alloc required); IO, CLI, and serialization live
//! in the companion binary crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cyclotomic;
pub mod error;
pub mod gtodd;
pub mod oracle;
pub mod poly;
pub mod quasipoly;
pub mod rat;
pub mod ring;
pub mod series;
pub mod wave;
pub mod wave_float;

pub use cyclotomic::{cyclotomic_poly, divisor_union, divisors, mod_xf_reduce, CycCtx, CycRing};
pub use error::{Error, Result};
pub use gtodd::{gtodd_sequence, GtdSpec};
pub use oracle::{dp_count, primroot_sum_check, DpTable};
pub use poly::Poly;
pub use quasipoly::{qp_combine, QuasiPolynomial, MAX_PERIOD};
pub use rat::{rat, rat_int, rat_to_f64, rat_u64, Rat};
pub use ring::{ComplexField, RationalField, Ring};
pub use series::{
    h_series, h_y_series, ts_add, ts_exp, ts_lift, ts_log, ts_mul, ts_neg, ts_one, ts_scale_arg,
    ts_sub, ts_sum_scaled, ts_zero, TruncSeries,
};
pub use wave::{
    all_waves, coefficient_table, denumerant, validate_sequence, wave_f, wave_one,
    CoefficientTable, WaveContext,
};
pub use wave_float::{
    float_all_waves, float_combine, float_denumerant, float_wave_f, FloatWave,
};
