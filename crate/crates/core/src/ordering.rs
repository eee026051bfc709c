//! The rotating ordering: ShortLex comparison of splittings, recursively
//! down to the exponent order on `BKL(2)`.

use std::cmp::Ordering;

use crate::error::Result;
use crate::garside::equal;
use crate::rotating::{rnf, separator, splitting};
use crate::word::{BandLetter, BandWord};

/// Compares two braids in the rotating ordering. A word on fewer strands
/// is widened first, `BKL(n-1)` being an initial segment of `BKL(n)`.
pub fn cmp_rotating(u: &BandWord, v: &BandWord) -> Ordering {
    let n = u.strands().max(v.strands());
    cmp_same(&u.widen(n), &v.widen(n))
}

fn cmp_same(u: &BandWord, v: &BandWord) -> Ordering {
    if u.len() == v.len() && equal(u, v) {
        return Ordering::Equal;
    }
    if u.strands() == 2 {
        return u.len().cmp(&v.len());
    }
    let su = splitting(u).expect("n >= 3");
    let sv = splitting(v).expect("n >= 3");
    su.breadth().cmp(&sv.breadth()).then_with(|| {
        su.entries()
            .iter()
            .zip(sv.entries())
            .map(|(x, y)| cmp_same(x, y))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    })
}

/// The immediate successor `w a(1,2)`.
pub fn successor(w: &BandWord) -> BandWord {
    w.push(BandLetter::new_unchecked(1, 2)).expect("a(1,2) fits every strand count")
}

/// Whether `w` lies below `a(n-1,n)`, i.e. in `BKL(n-1)`.
pub fn is_initial_segment_member(w: &BandWord, n: usize) -> bool {
    let w = w.widen(n);
    let bound = BandWord::letter(n, n - 1, n).expect("n >= 2");
    cmp_rotating(&w, &bound) == Ordering::Less
}

/// Letter-based counterpart of [`is_initial_segment_member`]: every letter
/// of the rotating normal form avoids strand `n`.
pub fn normal_form_avoids_last_strand(w: &BandWord, n: usize) -> bool {
    rnf(&w.widen(n)).letters().iter().all(|l| l.q() < n)
}

/// The least braid of `n`-breadth `b >= 2`, which is `sep_n^(b-2)`.
pub fn min_of_breadth(n: usize, b: usize) -> Result<BandWord> {
    assert!(b >= 2, "breadth-1 braids have no separator");
    separator(n, b - 2)
}
