//! Fixtures shared by the benchmarks.

use std::sync::Arc;

use qds_core::stabilizer::DEFAULT_ENUMERATION_BUDGET;
use qds_core::{BchCode, BchSm, BinaryMatrix, Bits, LookupDecoder, QdsCode, StabilizerCode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Steane code measured through the shortened `[21,6,7]` BCH code.
pub fn steane_bch() -> (QdsCode, LookupDecoder) {
    let base = StabilizerCode::steane();
    let decoder = LookupDecoder::build_complete(&base, DEFAULT_ENUMERATION_BUDGET).expect("Steane decoder");
    let sm = Arc::new(BchSm::for_syndrome(6, 3).expect("BCH for ell=6"));
    (QdsCode::assemble(base, sm).expect("assembly"), decoder)
}

/// `count` received words of `code`, each with exactly `t` flipped bits.
pub fn noisy_words(code: &BchCode, count: usize, seed: u64) -> Vec<Bits> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let msg = Bits::from_bools(&(0..code.k()).map(|_| rng.gen()).collect::<Vec<bool>>());
            let mut word = code.encode(&msg).expect("message length");
            for p in rand::seq::index::sample(&mut rng, code.n(), code.t()) {
                word.flip(p);
            }
            word
        })
        .collect()
}

pub fn random_matrix(rows: usize, cols: usize, seed: u64) -> BinaryMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let data = (0..rows).map(|_| Bits::from_bools(&(0..cols).map(|_| rng.gen()).collect::<Vec<bool>>())).collect();
    BinaryMatrix::from_rows(cols, data).expect("row lengths")
}
