#![allow(dead_code)]

use dualbraid::brute::generators;
use dualbraid::BandWord;
use proptest::prelude::*;

pub fn w(n: usize, pairs: &[(usize, usize)]) -> BandWord {
    BandWord::from_pairs(n, pairs).unwrap()
}

/// Random positive band words on exactly `n` strands.
pub fn band_word(n: usize, max_len: usize) -> impl Strategy<Value = BandWord> {
    prop::collection::vec(prop::sample::select(generators(n)), 0..=max_len)
        .prop_map(move |letters| BandWord::new(n, letters).unwrap())
}

/// A strand count in `lo..=hi` together with a word on it.
pub fn sized_word(lo: usize, hi: usize, max_len: usize) -> impl Strategy<Value = BandWord> {
    (lo..=hi).prop_flat_map(move |n| band_word(n, max_len))
}
