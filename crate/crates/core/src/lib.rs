//! Quantum data-syndrome (QDS) codes built by protecting a stabilizer code's
//! syndrome with a shortened primitive narrow-sense BCH code.
//!
//! The crate is layered bottom-up:
//!
//! * [`fields`]: GF(2) polynomials, GF(2^m) tables, cyclotomic cosets, GF(4).
//! * [`linalg`]: bit-packed vectors and dense GF(2) matrices.
//! * [`stabilizer`]: Pauli operators, stabilizer codes, lookup decoding.
//! * [`bch`]: BCH construction, shortening, systematic encoding, and
//!   Berlekamp-Massey decoding.
//! * [`qds`]: syndrome measurement codes, QDS assembly, two-step decoding,
//!   and measurement-overhead accounting.
//! * [`sim`]: weight-stratified Monte Carlo under phenomenological noise.

pub mod bch;
pub mod error;
pub mod fields;
pub mod linalg;
pub mod qds;
pub mod sim;
pub mod stabilizer;

pub use bch::{BchCode, BchDecoded, MSelection};
pub use error::{Error, Result};
pub use fields::{FieldPolynomial, FiniteField, Gf4};
pub use linalg::{BinaryMatrix, Bits};
pub use qds::{BchSm, OverheadRow, QdsCode, RepetitionSm, SmDecodeError, SyndromeMeasurementCode, TwoStepOutcome};

pub use sim::{CellStats, CodeMeta, Combined, CurvePoint, ErrorModel, SimGrid, TrialPlan};
pub use stabilizer::{LookupDecoder, PauliOperator, ResidualClass, StabilizerCode};
