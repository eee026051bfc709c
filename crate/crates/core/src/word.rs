//! Words over the band generators `a(p,q)` and over the Artin generators `s_i`.
//!
//! Strand indices are 1-based throughout, matching the usual braid notation.

use std::fmt;

use crate::error::{Error, Result};

/// The band generator `a(p,q)`, `p < q`: strands `p` and `q` cross in front
/// of the strands lying between them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BandLetter {
    p: usize,
    q: usize,
}

impl BandLetter {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p == 0 || p >= q {
            return Err(Error::BandLetterOutOfRange { p, q, n: q });
        }
        Ok(BandLetter { p, q })
    }

    pub(crate) fn new_unchecked(p: usize, q: usize) -> Self {
        debug_assert!(0 < p && p < q);
        BandLetter { p, q }
    }

    pub fn p(self) -> usize {
        self.p
    }

    pub fn q(self) -> usize {
        self.q
    }

    /// Image under the rotation `phi_n^k` (conjugation by `delta_n^k`).
    pub fn rotate(self, n: usize, k: i64) -> BandLetter {
        let shift = k.rem_euclid(n as i64) as usize;
        if shift == 0 {
            return self;
        }
        // indices are taken mod n and then sorted
        let p = (self.p - 1 + shift) % n + 1;
        let q = (self.q - 1 + shift) % n + 1;
        BandLetter::new_unchecked(p.min(q), p.max(q))
    }

    /// `a(p,q) = s_p ... s_{q-2} s_{q-1} s_{q-2}^-1 ... s_p^-1`.
    pub fn to_artin(self) -> Vec<ArtinLetter> {
        let mut out = Vec::with_capacity(2 * (self.q - self.p) - 1);
        out.extend((self.p..self.q - 1).map(ArtinLetter::pos));
        out.push(ArtinLetter::pos(self.q - 1));
        out.extend((self.p..self.q - 1).rev().map(ArtinLetter::neg));
        out
    }

    /// Whether the two chords commute by a length-2 relation, i.e. the
    /// intervals `[p,q]` are disjoint or nested.
    pub fn commutes_with(self, other: BandLetter) -> bool {
        let disjoint = self.q < other.p || other.q < self.p;
        let nested = (other.p < self.p && self.q < other.q) || (self.p < other.p && other.q < self.q);
        disjoint || nested
    }
}

impl fmt::Display for BandLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a({},{})", self.p, self.q)
    }
}

/// A positive word over band generators on a fixed number of strands.
/// The empty word is the trivial braid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BandWord {
    n: usize,
    letters: Vec<BandLetter>,
}

impl BandWord {
    pub fn new(n: usize, letters: Vec<BandLetter>) -> Result<Self> {
        check_strands(n, 2)?;
        if let Some(l) = letters.iter().find(|l| l.q > n) {
            return Err(Error::BandLetterOutOfRange { p: l.p, q: l.q, n });
        }
        Ok(BandWord { n, letters })
    }

    pub(crate) fn new_unchecked(n: usize, letters: Vec<BandLetter>) -> Self {
        debug_assert!(n >= 2 && letters.iter().all(|l| l.q <= n));
        BandWord { n, letters }
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let letters = pairs
            .iter()
            .map(|&(p, q)| BandLetter::new(p, q))
            .collect::<Result<Vec<_>>>()?;
        BandWord::new(n, letters)
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 2, "strand count must be at least 2");
        BandWord { n, letters: Vec::new() }
    }

    pub fn letter(n: usize, p: usize, q: usize) -> Result<Self> {
        BandWord::new(n, vec![BandLetter::new(p, q)?])
    }

    /// The Garside element `delta_n = a(1,2) a(2,3) ... a(n-1,n)`.
    pub fn garside(n: usize) -> Self {
        delta_word(1, n, n).expect("1 <= n")
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[BandLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn last(&self) -> Option<BandLetter> {
        self.letters.last().copied()
    }

    /// Largest `q` among the letters (1 for the empty word): the least `m`
    /// such that the word lives in `BKL(m)`.
    pub fn max_strand(&self) -> usize {
        self.letters.iter().map(|l| l.q).max().unwrap_or(1)
    }

    /// Concatenation. Both words must share a strand count.
    pub fn concat(&self, other: &BandWord) -> BandWord {
        assert_eq!(self.n, other.n, "concatenating words on different strand counts");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BandWord { n: self.n, letters }
    }

    pub fn pow(&self, k: usize) -> BandWord {
        let mut letters = Vec::with_capacity(self.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        BandWord { n: self.n, letters }
    }

    pub fn push(&self, letter: BandLetter) -> Result<BandWord> {
        let mut letters = self.letters.clone();
        letters.push(letter);
        BandWord::new(self.n, letters)
    }

    /// Reinterpret the word over `m >= n` strands.
    pub fn widen(&self, m: usize) -> BandWord {
        assert!(m >= self.n, "cannot widen {} strands to {}", self.n, m);
        BandWord { n: m, letters: self.letters.clone() }
    }

    /// Reinterpret the word over `m` strands; fails if a letter does not fit.
    pub fn restrict(&self, m: usize) -> Result<BandWord> {
        BandWord::new(m, self.letters.clone())
    }

    /// Letterwise image under `phi_n^k`, where `n` is the word's strand count.
    pub fn phi(&self, k: i64) -> BandWord {
        let n = self.n;
        BandWord {
            n,
            letters: self.letters.iter().map(|l| l.rotate(n, k)).collect(),
        }
    }

    pub fn to_artin(&self) -> ArtinWord {
        ArtinWord {
            n: self.n,
            letters: self.letters.iter().flat_map(|l| l.to_artin()).collect(),
        }
    }
}

impl fmt::Display for BandWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// `phi_n^k(w)`.
pub fn phi(n: usize, k: i64, w: &BandWord) -> BandWord {
    assert_eq!(n, w.strands(), "phi applied with a foreign strand count");
    w.phi(k)
}

/// `delta(p,q) = a(p,p+1) a(p+1,p+2) ... a(q-1,q)` over `n` strands.
pub fn delta_word(p: usize, q: usize, n: usize) -> Result<BandWord> {
    check_strands(n, 2)?;
    if p == 0 || p > q {
        return Err(Error::DeltaBounds { p, q });
    }
    if q > n {
        return Err(Error::BandLetterOutOfRange { p, q, n });
    }
    let letters = (p..q).map(|i| BandLetter::new_unchecked(i, i + 1)).collect();
    Ok(BandWord { n, letters })
}

pub fn band_to_artin(w: &BandWord) -> ArtinWord {
    w.to_artin()
}

/// `s_i` or `s_i^-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArtinLetter {
    index: usize,
    positive: bool,
}

impl ArtinLetter {
    pub fn pos(index: usize) -> Self {
        ArtinLetter { index, positive: true }
    }

    pub fn neg(index: usize) -> Self {
        ArtinLetter { index, positive: false }
    }

    pub fn index(self) -> usize {
        self.index
    }

    pub fn is_positive(self) -> bool {
        self.positive
    }

    pub fn inverse(self) -> Self {
        ArtinLetter { index: self.index, positive: !self.positive }
    }

    pub(crate) fn with_sign(index: usize, positive: bool) -> Self {
        ArtinLetter { index, positive }
    }
}

impl fmt::Display for ArtinLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "s{}", self.index)
        } else {
            write!(f, "s{}^-1", self.index)
        }
    }
}

/// A signed word over `s_1, ..., s_{n-1}`: any element of the braid group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArtinWord {
    n: usize,
    letters: Vec<ArtinLetter>,
}

impl ArtinWord {
    pub fn new(n: usize, letters: Vec<ArtinLetter>) -> Result<Self> {
        check_strands(n, 2)?;
        if let Some(l) = letters.iter().find(|l| l.index == 0 || l.index >= n) {
            return Err(Error::ArtinLetterOutOfRange { index: l.index, n });
        }
        Ok(ArtinWord { n, letters })
    }

    pub(crate) fn new_unchecked(n: usize, letters: Vec<ArtinLetter>) -> Self {
        ArtinWord { n, letters }
    }

    /// Signed-integer shorthand: `3` is `s3`, `-2` is `s2^-1`.
    pub fn from_signed(n: usize, letters: &[i32]) -> Result<Self> {
        let letters = letters
            .iter()
            .map(|&x| ArtinLetter::with_sign(x.unsigned_abs() as usize, x > 0))
            .collect();
        ArtinWord::new(n, letters)
    }

    pub fn identity(n: usize) -> Self {
        ArtinWord { n, letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[ArtinLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Group inverse: reversed, every sign flipped.
    pub fn inverse(&self) -> ArtinWord {
        ArtinWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn concat(&self, other: &ArtinWord) -> ArtinWord {
        assert_eq!(self.n, other.n, "concatenating words on different strand counts");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        ArtinWord { n: self.n, letters }
    }

    /// The band word with `s_i -> a(i,i+1)`, if every letter is positive.
    pub fn to_band(&self) -> Option<BandWord> {
        self.letters
            .iter()
            .map(|l| l.positive.then(|| BandLetter::new_unchecked(l.index, l.index + 1)))
            .collect::<Option<Vec<_>>>()
            .map(|letters| BandWord { n: self.n, letters })
    }
}

impl fmt::Display for ArtinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

pub(crate) fn check_strands(n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::StrandCount { n, min })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, pairs: &[(usize, usize)]) -> BandWord {
        BandWord::from_pairs(n, pairs).unwrap()
    }

    #[test]
    fn band_letters_expand_to_conjugates() {
        assert_eq!(w(3, &[(1, 2)]).to_artin(), ArtinWord::from_signed(3, &[1]).unwrap());
        assert_eq!(w(3, &[(1, 3)]).to_artin(), ArtinWord::from_signed(3, &[1, 2, -1]).unwrap());
        assert_eq!(
            w(5, &[(2, 5)]).to_artin(),
            ArtinWord::from_signed(5, &[2, 3, 4, -3, -2]).unwrap()
        );
        assert!(BandWord::identity(4).to_artin().is_empty());
    }

    #[test]
    fn rotation_on_letters() {
        assert_eq!(w(3, &[(1, 2)]).phi(1), w(3, &[(2, 3)]));
        assert_eq!(w(6, &[(4, 5)]).phi(2), w(6, &[(1, 6)]));
        assert_eq!(w(5, &[(2, 5)]).phi(1), w(5, &[(1, 3)]));
        assert_eq!(w(5, &[(1, 3)]).phi(-1), w(5, &[(2, 5)]));
        let x = w(5, &[(1, 3), (2, 5), (4, 5), (1, 2)]);
        assert_eq!(x.phi(5), x);
        assert_eq!(x.phi(-7), x.phi(3));
    }

    #[test]
    fn delta_words() {
        assert_eq!(delta_word(1, 3, 3).unwrap(), w(3, &[(1, 2), (2, 3)]));
        assert!(delta_word(2, 2, 4).unwrap().is_empty());
        assert_eq!(delta_word(1, 5, 5).unwrap(), BandWord::garside(5));
        assert_eq!(delta_word(3, 2, 4), Err(Error::DeltaBounds { p: 3, q: 2 }));
    }

    #[test]
    fn validation() {
        assert!(BandWord::from_pairs(3, &[(1, 4)]).is_err());
        assert!(BandLetter::new(2, 2).is_err());
        assert!(BandLetter::new(0, 2).is_err());
        assert!(ArtinWord::from_signed(3, &[3]).is_err());
        assert!(BandWord::new(1, vec![]).is_err());
    }

    #[test]
    fn commuting_chords() {
        let l = |p, q| BandLetter::new(p, q).unwrap();
        assert!(l(1, 2).commutes_with(l(3, 4)));
        assert!(l(1, 4).commutes_with(l(2, 3)));
        assert!(!l(1, 3).commutes_with(l(2, 4)));
        assert!(!l(1, 2).commutes_with(l(2, 3)));
    }

    #[test]
    fn display() {
        assert_eq!(w(3, &[(1, 3), (1, 2)]).to_string(), "a(1,3) a(1,2)");
        assert_eq!(BandWord::identity(3).to_string(), "1");
        assert_eq!(ArtinWord::from_signed(3, &[-2, 1, 2]).unwrap().to_string(), "s2^-1 s1 s2");
    }
}
