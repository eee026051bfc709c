//! Word problem, divisibility and submonoid tails in `BKL(n)`, via greedy
//! normal forms over non-crossing partitions.

use crate::error::{Error, Result};
use crate::ncp::NonCrossingPartition;
use crate::word::{BandLetter, BandWord};

/// Left-greedy normal form: each factor is the maximal simple left divisor
/// of the product of itself and everything to its right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GreedyNF {
    n: usize,
    factors: Vec<NonCrossingPartition>,
}

impl GreedyNF {
    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn factors(&self) -> &[NonCrossingPartition] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    /// Word length of the element (the presentation is homogeneous).
    pub fn length(&self) -> usize {
        self.factors.iter().map(|f| f.rank()).sum()
    }

    pub fn to_word(&self) -> BandWord {
        let mut letters = Vec::with_capacity(self.length());
        for f in &self.factors {
            letters.extend_from_slice(f.to_word().letters());
        }
        BandWord::new_unchecked(self.n, letters)
    }

    /// Whether each adjacent pair is left-weighted.
    pub fn is_normal(&self) -> bool {
        !self.factors.iter().any(|f| f.is_trivial())
            && self
                .factors
                .windows(2)
                .all(|p| p[0].right_complement().meet(&p[1]).is_trivial())
    }
}

pub fn gnf(w: &BandWord) -> GreedyNF {
    let n = w.strands();
    let mut factors: Vec<NonCrossingPartition> = Vec::with_capacity(w.len());
    for &letter in w.letters() {
        factors.push(NonCrossingPartition::from_letter(letter, n));
        slide_left_weighted(&mut factors);
    }
    GreedyNF { n, factors }
}

/// Bubble passes from the right until every adjacent pair is left-weighted.
fn slide_left_weighted(factors: &mut Vec<NonCrossingPartition>) {
    loop {
        let mut changed = false;
        for i in (0..factors.len().saturating_sub(1)).rev() {
            let m = factors[i].right_complement().meet(&factors[i + 1]);
            if m.is_trivial() {
                continue;
            }
            factors[i] = factors[i].mul(&m);
            factors[i + 1] = m.left_quotient(&factors[i + 1]);
            changed = true;
        }
        factors.retain(|f| !f.is_trivial());
        if !changed {
            break;
        }
    }
}

/// Right-greedy normal form: each factor is the maximal simple right
/// divisor of the product of everything up to it.
fn right_gnf(w: &BandWord) -> Vec<NonCrossingPartition> {
    let n = w.strands();
    let mut factors: Vec<NonCrossingPartition> = Vec::with_capacity(w.len());
    for &letter in w.letters().iter().rev() {
        factors.insert(0, NonCrossingPartition::from_letter(letter, n));
        loop {
            let mut changed = false;
            for i in 0..factors.len().saturating_sub(1) {
                let m = factors[i].meet(&factors[i + 1].left_complement());
                if m.is_trivial() {
                    continue;
                }
                factors[i] = factors[i].right_quotient(&m);
                factors[i + 1] = m.mul(&factors[i + 1]);
                changed = true;
            }
            factors.retain(|f| !f.is_trivial());
            if !changed {
                break;
            }
        }
    }
    factors
}

fn factors_to_word(n: usize, factors: &[NonCrossingPartition]) -> BandWord {
    let mut letters = Vec::new();
    for f in factors {
        letters.extend_from_slice(f.to_word().letters());
    }
    BandWord::new_unchecked(n, letters)
}

/// Whether `u` and `v` represent the same element.
///
/// # Panics
/// If the strand counts differ.
pub fn equal(u: &BandWord, v: &BandWord) -> bool {
    assert_eq!(u.strands(), v.strands(), "equality across strand counts");
    u.len() == v.len() && gnf(u) == gnf(v)
}

/// Divides `w` on the right by the simple `s`, if `s` right-divides it.
fn divide_by_simple(w: &BandWord, s: &NonCrossingPartition) -> Option<BandWord> {
    if s.is_trivial() {
        return Some(w.clone());
    }
    let mut factors = right_gnf(w);
    let last = factors.pop()?;
    if !s.refines(&last) {
        return None;
    }
    factors.push(last.right_quotient(s));
    Some(factors_to_word(w.strands(), &factors))
}

/// `u` with `w = u * g`, or `NotDivisible`.
pub fn right_quotient(w: &BandWord, g: &BandWord) -> Result<BandWord> {
    if w.strands() != g.strands() {
        return Err(Error::StrandMismatch { left: w.strands(), right: g.strands() });
    }
    if g.len() > w.len() {
        return Err(Error::NotDivisible);
    }
    let n = w.strands();
    let mut rest = w.clone();
    for &letter in g.letters().iter().rev() {
        rest = divide_by_simple(&rest, &NonCrossingPartition::from_letter(letter, n))
            .ok_or(Error::NotDivisible)?;
    }
    Ok(rest)
}

/// Whether `w = u * g` for some positive `u`.
pub fn right_divides(g: &BandWord, w: &BandWord) -> bool {
    right_quotient(w, g).is_ok()
}

/// Maximal right divisor of `w` lying in `BKL(m)`, returned as a word over
/// the same strand count as `w`.
///
/// The right divisors of `w` in `BKL(m)` are closed under right lcm, so
/// peeling off any of them repeatedly reaches the maximum; each step strips
/// the largest simple one, i.e. the last right-greedy factor cut down to
/// `{1..m}`.
pub fn tail(w: &BandWord, m: usize) -> BandWord {
    let n = w.strands();
    let window = NonCrossingPartition::prefix_block(m.min(n), n);
    let mut rest = w.clone();
    let mut pieces: Vec<BandWord> = Vec::new();
    loop {
        let mut factors = right_gnf(&rest);
        let Some(last) = factors.pop() else { break };
        let s = last.meet(&window);
        if s.is_trivial() {
            break;
        }
        factors.push(last.right_quotient(&s));
        rest = factors_to_word(n, &factors);
        pieces.push(s.to_word());
    }
    let letters: Vec<BandLetter> = pieces
        .iter()
        .rev()
        .flat_map(|p| p.letters().iter().copied())
        .collect();
    BandWord::new_unchecked(n, letters)
}

/// Splits `w` as `(rest, tail)` with `w = rest * tail(w, m)`.
pub(crate) fn split_tail(w: &BandWord, m: usize) -> (BandWord, BandWord) {
    let t = tail(w, m);
    let rest = right_quotient(w, &t).expect("the tail right-divides the word");
    (rest, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::delta_word;

    fn w(n: usize, pairs: &[(usize, usize)]) -> BandWord {
        BandWord::from_pairs(n, pairs).unwrap()
    }

    fn ncp(n: usize, blocks: &[&[usize]]) -> NonCrossingPartition {
        let blocks: Vec<Vec<usize>> = blocks.iter().map(|b| b.to_vec()).collect();
        NonCrossingPartition::from_blocks(n, &blocks).unwrap()
    }

    #[test]
    fn gnf_examples() {
        let a12 = ncp(2, &[&[1, 2]]);
        assert_eq!(gnf(&w(2, &[(1, 2), (1, 2)])).factors(), &[a12.clone(), a12]);
        assert_eq!(gnf(&BandWord::garside(3)).factors(), &[NonCrossingPartition::full(3)]);
        assert_eq!(gnf(&w(3, &[(1, 2), (2, 3)])), gnf(&w(3, &[(1, 3), (1, 2)])));
        assert!(gnf(&BandWord::identity(4)).is_identity());
    }

    #[test]
    fn equality_examples() {
        assert!(equal(&w(3, &[(1, 2), (2, 3)]), &w(3, &[(2, 3), (1, 3)])));
        assert!(equal(&w(4, &[(1, 2), (3, 4)]), &w(4, &[(3, 4), (1, 2)])));
        assert!(!equal(&w(3, &[(1, 2)]), &w(3, &[(2, 3)])));
        assert!(!equal(&w(4, &[(1, 3), (2, 4)]), &w(4, &[(2, 4), (1, 3)])));
    }

    #[test]
    fn right_division_examples() {
        let d3 = BandWord::garside(3);
        assert!(right_divides(&w(3, &[(2, 3)]), &d3));
        assert!(right_divides(&w(3, &[(1, 2)]), &d3));
        assert!(!right_divides(&w(3, &[(1, 2)]), &w(3, &[(2, 3)])));
        assert!(equal(&right_quotient(&d3, &w(3, &[(2, 3)])).unwrap(), &w(3, &[(1, 2)])));
        assert!(equal(&right_quotient(&d3, &w(3, &[(1, 2)])).unwrap(), &w(3, &[(1, 3)])));
        let x = w(4, &[(1, 3), (2, 4)]);
        assert_eq!(right_quotient(&x, &BandWord::identity(4)).unwrap(), x);
        assert_eq!(right_quotient(&x, &w(4, &[(1, 3)])), Err(Error::NotDivisible));
    }

    #[test]
    fn tail_examples() {
        assert!(tail(&w(4, &[(1, 4)]), 3).is_empty());
        let x = w(4, &[(1, 3), (2, 3), (1, 2)]);
        assert!(equal(&tail(&x, 3), &x));
        let t = tail(&BandWord::garside(4), 3);
        assert!(equal(&t, &delta_word(1, 3, 4).unwrap()));
    }

    #[test]
    fn greedy_forms_are_normal() {
        let x = w(5, &[(1, 5), (2, 4), (1, 3), (4, 5), (2, 5), (1, 2), (3, 4)]);
        let nf = gnf(&x);
        assert!(nf.is_normal());
        assert_eq!(nf.length(), x.len());
        assert_eq!(gnf(&nf.to_word()), nf);
    }
}
