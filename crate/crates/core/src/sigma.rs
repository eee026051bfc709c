//! The braid ordering on `B_n`, decided by handle reduction.
//!
//! Uses the flipped convention: a word is `s_i`-positive when it contains
//! `s_i`, no `s_i^-1`, and no letter of index above `i`. Handles are taken
//! accordingly: `s_i^e u s_i^-e` with every letter of `u` below `i`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::word::{ArtinLetter, ArtinWord, BandWord};

pub const DEFAULT_LENGTH_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SigmaClass {
    Trivial,
    Positive(usize),
    Negative(usize),
}

impl fmt::Display for SigmaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigmaClass::Trivial => f.write_str("trivial"),
            SigmaClass::Positive(i) => write!(f, "s{i}-positive"),
            SigmaClass::Negative(i) => write!(f, "s{i}-negative"),
        }
    }
}

/// Removes every adjacent `x x^-1` pair.
pub fn free_reduce(w: &ArtinWord) -> ArtinWord {
    ArtinWord::new_unchecked(w.strands(), free_reduce_letters(w.letters()))
}

fn free_reduce_letters(letters: &[ArtinLetter]) -> Vec<ArtinLetter> {
    let mut out: Vec<ArtinLetter> = Vec::with_capacity(letters.len());
    for &l in letters {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Handle reduction with a ceiling on the intermediate word length.
#[derive(Debug, Clone, Copy)]
pub struct HandleReducer {
    pub length_limit: usize,
}

impl Default for HandleReducer {
    fn default() -> Self {
        HandleReducer { length_limit: DEFAULT_LENGTH_LIMIT }
    }
}

impl HandleReducer {
    /// Repeatedly reduces the handle whose right end comes first (such a
    /// handle contains no other handle) until none is left.
    pub fn reduce(&self, w: &ArtinWord) -> Result<ArtinWord> {
        let n = w.strands();
        let mut letters = free_reduce_letters(w.letters());
        // last_at_least[i]: position of the latest letter of index >= i
        let mut last_at_least = vec![usize::MAX; n];
        while let Some((start, end)) = find_handle(&letters, &mut last_at_least) {
            let head = letters[start];
            let main = head.index();
            let mut reduced = Vec::with_capacity(letters.len() + 2 * (end - start));
            reduced.extend_from_slice(&letters[..start]);
            for &l in &letters[start + 1..end] {
                if l.index() + 1 == main {
                    // s_i^e s_(i-1)^d s_i^-e = s_(i-1)^-e s_i^d s_(i-1)^e
                    reduced.push(ArtinLetter::with_sign(main - 1, !head.is_positive()));
                    reduced.push(ArtinLetter::with_sign(main, l.is_positive()));
                    reduced.push(ArtinLetter::with_sign(main - 1, head.is_positive()));
                } else {
                    reduced.push(l);
                }
            }
            reduced.extend_from_slice(&letters[end + 1..]);
            letters = free_reduce_letters(&reduced);
            if letters.len() > self.length_limit {
                return Err(Error::ReductionOverflow { limit: self.length_limit });
            }
        }
        Ok(ArtinWord::new_unchecked(n, letters))
    }
}

fn find_handle(letters: &[ArtinLetter], last_at_least: &mut [usize]) -> Option<(usize, usize)> {
    last_at_least.fill(usize::MAX);
    for (pos, &l) in letters.iter().enumerate() {
        let i = l.index();
        let prev = last_at_least[i];
        if prev != usize::MAX {
            let p = letters[prev];
            if p.index() == i && p.is_positive() != l.is_positive() {
                return Some((prev, pos));
            }
        }
        for slot in &mut last_at_least[1..=i] {
            *slot = pos;
        }
    }
    None
}

pub fn handle_reduce(w: &ArtinWord) -> Result<ArtinWord> {
    HandleReducer::default().reduce(w)
}

/// Classifies a fully reduced word by its letters of greatest index.
pub(crate) fn classify_reduced(w: &ArtinWord) -> Result<SigmaClass> {
    let Some(top) = w.letters().iter().map(|l| l.index()).max() else {
        return Ok(SigmaClass::Trivial);
    };
    let mut signs = w.letters().iter().filter(|l| l.index() == top).map(|l| l.is_positive());
    let first = signs.next().expect("top index occurs");
    if signs.any(|s| s != first) {
        return Err(Error::Internal(format!("reduced word {w} mixes signs of s{top}")));
    }
    Ok(if first { SigmaClass::Positive(top) } else { SigmaClass::Negative(top) })
}

pub fn sigma_class(w: &ArtinWord) -> Result<SigmaClass> {
    classify_reduced(&handle_reduce(w)?)
}

/// `u < v` iff `u^-1 v` is sigma-positive.
pub fn cmp_dehornoy(u: &BandWord, v: &BandWord) -> Result<Ordering> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch { left: u.strands(), right: v.strands() });
    }
    cmp_artin(&u.to_artin(), &v.to_artin())
}

pub(crate) fn cmp_artin(u: &ArtinWord, v: &ArtinWord) -> Result<Ordering> {
    Ok(match sigma_class(&u.inverse().concat(v))? {
        SigmaClass::Positive(_) => Ordering::Less,
        SigmaClass::Negative(_) => Ordering::Greater,
        SigmaClass::Trivial => Ordering::Equal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aw(n: usize, xs: &[i32]) -> ArtinWord {
        ArtinWord::from_signed(n, xs).unwrap()
    }

    #[test]
    fn free_reduction() {
        assert!(free_reduce(&aw(3, &[1, -1])).is_empty());
        assert_eq!(free_reduce(&aw(3, &[1, 2])), aw(3, &[1, 2]));
        assert!(free_reduce(&aw(3, &[2, 1, -1, -2])).is_empty());
    }

    #[test]
    fn handle_reduction() {
        assert_eq!(handle_reduce(&aw(3, &[-2, 1, 2])).unwrap(), aw(3, &[1, 2, -1]));
        assert!(handle_reduce(&aw(3, &[])).unwrap().is_empty());
        // s1 s2 s1 (s2 s1 s2)^-1 is trivial
        assert!(handle_reduce(&aw(3, &[1, 2, 1, -2, -1, -2])).unwrap().is_empty());
    }

    #[test]
    fn classification() {
        assert_eq!(sigma_class(&aw(3, &[1, 2, -1])).unwrap(), SigmaClass::Positive(2));
        assert_eq!(sigma_class(&aw(3, &[])).unwrap(), SigmaClass::Trivial);
        assert_eq!(sigma_class(&aw(3, &[-2, 1])).unwrap(), SigmaClass::Negative(2));
        assert_eq!(sigma_class(&aw(4, &[1, 3, -1])).unwrap(), SigmaClass::Positive(3));
    }

    #[test]
    fn reduction_guard() {
        let r = HandleReducer { length_limit: 3 };
        assert!(matches!(
            r.reduce(&aw(4, &[-3, 2, 1, 2, 3])),
            Err(Error::ReductionOverflow { limit: 3 })
        ));
    }

    #[test]
    fn textbook_comparison() {
        let s2 = BandWord::from_pairs(3, &[(2, 3)]).unwrap();
        let s1s2 = BandWord::from_pairs(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(cmp_dehornoy(&s2, &s1s2).unwrap(), Ordering::Less);
        assert_eq!(cmp_dehornoy(&s1s2, &s2).unwrap(), Ordering::Greater);
        assert_eq!(cmp_dehornoy(&s2, &s2).unwrap(), Ordering::Equal);
    }
}
