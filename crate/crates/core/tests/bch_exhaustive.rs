use qds_core::stabilizer::combinations;
use qds_core::{BchCode, Bits};

#[test]
fn shortened_21_6_7_all_messages_all_small_errors() {
    let code = BchCode::new(5, 3).unwrap().shorten(10).unwrap();
    assert_eq!((code.n(), code.k(), code.d()), (21, 6, 7));
    let patterns: Vec<Bits> = (0..=3).flat_map(|w| combinations(21, w)).map(|s| Bits::from_positions(21, s)).collect();
    assert_eq!(patterns.len(), 1_562);
    let mut cases = 0;
    for m in 0u64..64 {
        let msg = Bits::from_u64(m, 6);
        let cw = code.encode(&msg).unwrap();
        for e in &patterns {
            let out = code.decode(&cw.xor(e)).unwrap();
            assert_eq!(out.message, msg);
            assert_eq!(out.corrected_positions, e.ones_positions().collect::<Vec<_>>());
            cases += 1;
        }
    }
    assert_eq!(cases, 99_968);
}

#[test]
fn hamming_15_11_single_errors() {
    let code = BchCode::new(4, 1).unwrap();
    assert_eq!((code.n(), code.k(), code.d()), (15, 11, 3));
    for m in 0u64..2048 {
        let msg = Bits::from_u64(m, 11);
        let cw = code.encode(&msg).unwrap();
        assert_eq!(code.decode(&cw).unwrap().message, msg);
        for p in 0..15 {
            let mut r = cw.clone();
            r.flip(p);
            assert_eq!(code.decode(&r).unwrap().message, msg);
        }
    }
}
