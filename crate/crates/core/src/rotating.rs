//! The `phi_n`-splitting, the rotating normal form and the syntactic
//! notions built on it (separators, ladders, dangerous braids, iterated
//! splitting trees).

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::garside::split_tail;
use crate::word::{check_strands, delta_word, ArtinWord, BandLetter, BandWord};

/// The `phi_n`-splitting `(b_b, ..., b_1)` of a braid of `BKL(n)`: the
/// unique sequence over `BKL(n-1)` with
/// `beta = phi^(b-1)(b_b) ... phi(b_2) b_1` whose partial products
/// `phi^(b-k)(b_b) ... phi(b_(k+1))` all have trivial `BKL(n-1)`-tail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Splitting {
    n: usize,
    /// `entries[0]` is `b_b`, the last one is `b_1`; words over `n-1` strands.
    entries: Vec<BandWord>,
    trivial: bool,
}

impl Splitting {
    pub fn strands(&self) -> usize {
        self.n
    }

    /// Entries from `b_b` down to `b_1`.
    pub fn entries(&self) -> &[BandWord] {
        &self.entries
    }

    /// The `n`-breadth `b`.
    pub fn breadth(&self) -> usize {
        self.entries.len()
    }

    /// `b_k` for `1 <= k <= b`.
    pub fn entry(&self, k: usize) -> &BandWord {
        assert!(k >= 1 && k <= self.breadth(), "entry index {k} out of 1..={}", self.breadth());
        &self.entries[self.breadth() - k]
    }

    /// Set for the trivial braid, whose splitting is the placeholder `(1)`.
    pub fn is_trivial_braid(&self) -> bool {
        self.trivial
    }

    /// `phi^(b-1)(b_b) ... phi(b_2) b_1` as a word over `n` strands.
    pub fn reconstruct(&self) -> BandWord {
        let b = self.breadth();
        let mut out = BandWord::identity(self.n);
        for (i, e) in self.entries.iter().enumerate() {
            out = out.concat(&e.widen(self.n).phi((b - 1 - i) as i64));
        }
        out
    }
}

impl fmt::Display for Splitting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")
    }
}

/// Extracts the `BKL(n-1)`-tail, rotates the remainder back by `phi_n^-1`,
/// and repeats until nothing is left.
pub fn splitting(w: &BandWord) -> Result<Splitting> {
    let n = w.strands();
    check_strands(n, 3)?;
    if w.is_empty() {
        return Ok(Splitting { n, entries: vec![BandWord::identity(n - 1)], trivial: true });
    }
    let mut entries = Vec::new();
    let mut rest = w.clone();
    loop {
        let (remainder, t) = split_tail(&rest, n - 1);
        entries.push(t.restrict(n - 1).expect("tail letters fit in n-1 strands"));
        if remainder.is_empty() {
            break;
        }
        rest = remainder.phi(-1);
    }
    entries.reverse();
    Ok(Splitting { n, entries, trivial: false })
}

pub fn breadth(w: &BandWord) -> Result<usize> {
    Ok(splitting(w)?.breadth())
}

/// Rotating normal form. Over two strands this is `a(1,2)^k`; above, the
/// concatenation of `phi^(k-1)` of the normal forms of the splitting entries.
pub fn rnf(w: &BandWord) -> BandWord {
    let n = w.strands();
    if n == 2 || w.is_empty() {
        return BandWord::new_unchecked(n, vec![BandLetter::new_unchecked(1, 2); w.len()]);
    }
    let s = splitting(w).expect("n >= 3");
    let b = s.breadth();
    let mut out = BandWord::identity(n);
    for (i, e) in s.entries().iter().enumerate() {
        out = out.concat(&rnf(e).widen(n).phi((b - 1 - i) as i64));
    }
    out
}

/// Final letter of the rotating normal form.
pub fn last_letter(w: &BandWord) -> Result<BandLetter> {
    rnf(w).last().ok_or(Error::TrivialBraid)
}

/// `sep_n^r = phi^(r+1)(a(n-2,n-1)) ... phi^2(a(n-2,n-1))` for `r >= 1`,
/// and `a(n-1,n)` for `r = 0`.
pub fn separator(n: usize, r: usize) -> Result<BandWord> {
    check_strands(n, 3)?;
    if r == 0 {
        return BandWord::letter(n, n - 1, n);
    }
    let base = BandLetter::new_unchecked(n - 2, n - 1);
    let letters = (2..=r + 1).rev().map(|k| base.rotate(n, k as i64)).collect();
    Ok(BandWord::new_unchecked(n, letters))
}

/// The iterated splitting: leaves are exponents in `BKL(2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SplittingTree {
    Leaf(usize),
    Node(Vec<SplittingTree>),
}

impl SplittingTree {
    /// Root-to-leaf depth; `n - 2` for a braid of `BKL(n)`.
    pub fn depth(&self) -> usize {
        match self {
            SplittingTree::Leaf(_) => 0,
            SplittingTree::Node(children) => 1 + children[0].depth(),
        }
    }

    /// Whether every leaf sits at the same depth and no node is empty.
    pub fn is_balanced(&self) -> bool {
        fn walk(t: &SplittingTree, d: usize, want: usize) -> bool {
            match t {
                SplittingTree::Leaf(_) => d == want,
                SplittingTree::Node(c) => !c.is_empty() && c.iter().all(|x| walk(x, d + 1, want)),
            }
        }
        walk(self, 0, self.depth())
    }
}

/// ShortLex on trees: a node with fewer children is smaller, equal widths
/// compare child by child from the left; leaves compare as integers.
impl Ord for SplittingTree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (SplittingTree::Leaf(a), SplittingTree::Leaf(b)) => a.cmp(b),
            (SplittingTree::Node(a), SplittingTree::Node(b)) => {
                a.len().cmp(&b.len()).then_with(|| a.iter().cmp(b.iter()))
            }
            // Only trees of equal depth are comparable in a meaningful way.
            (SplittingTree::Leaf(_), SplittingTree::Node(_)) => Ordering::Less,
            (SplittingTree::Node(_), SplittingTree::Leaf(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for SplittingTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Nested arrays: a `BKL(2)` element `a(1,2)^k` is written `[k]`, a node is
/// the array of its children, e.g. `[[1],[0],[0]]` for `a(1,3)` in `BKL(3)`.
impl fmt::Display for SplittingTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplittingTree::Leaf(k) => write!(f, "[{k}]"),
            SplittingTree::Node(children) => {
                f.write_str("[")?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str("]")
            }
        }
    }
}

pub fn splitting_tree(w: &BandWord) -> SplittingTree {
    if w.strands() == 2 {
        return SplittingTree::Leaf(w.len());
    }
    let s = splitting(w).expect("n >= 3");
    SplittingTree::Node(s.entries().iter().map(splitting_tree).collect())
}

/// Bar decomposition found by [`is_ladder`]: positions of the bars
/// `x_1, ..., x_h` in the word and the rungs `f_0 < f_1 < ... < f_h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LadderWitness {
    pub bars: Vec<usize>,
    pub rungs: Vec<usize>,
}

/// Whether `w`, a normal word over `n-1` strands seen inside `BKL(n)`, is
/// an `a(i,n)`-ladder: it climbs from `i` to `n-1` through bars
/// `a(e,f_k)` with `e < f_(k-1) < f_k`, the stretches between bars never
/// straddling the current rung, and its last letter is some `a(.,n-1)`.
///
/// A letter straddling the current rung can only be the next bar, so the
/// decomposition is forced and a single left-to-right scan decides it.
pub fn is_ladder(w: &BandWord, i: usize, n: usize) -> Option<LadderWitness> {
    if n < 3 || i == 0 || i > n - 1 {
        return None;
    }
    let top = n - 1;
    if w.last().map(|l| l.q()) != Some(top) {
        return None;
    }
    let mut rung = i;
    let mut witness = LadderWitness { bars: Vec::new(), rungs: vec![i] };
    for (pos, l) in w.letters().iter().enumerate() {
        if rung == top {
            break;
        }
        if l.p() < rung && rung < l.q() {
            rung = l.q();
            witness.bars.push(pos);
            witness.rungs.push(rung);
        }
    }
    (rung == top).then_some(witness)
}

/// `delta(f_d,n-1)^-1 ... delta(f_1,n-1)^-1` for indices given as
/// `[f_d, ..., f_1]`, weakly decreasing.
pub fn dangerous_braid(indices: &[usize], n: usize) -> Result<ArtinWord> {
    check_strands(n, 3)?;
    let top = n - 1;
    let bad = Error::BadDangerousIndices { max: top };
    if indices.iter().any(|&f| f == 0 || f > top) || indices.windows(2).any(|p| p[0] < p[1]) {
        return Err(bad);
    }
    let mut out = ArtinWord::identity(n);
    for &f in indices {
        out = out.concat(&delta_word(f, top, n)?.to_artin().inverse());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::equal;

    fn w(n: usize, pairs: &[(usize, usize)]) -> BandWord {
        BandWord::from_pairs(n, pairs).unwrap()
    }

    #[test]
    fn generator_splittings() {
        let s = splitting(&w(4, &[(1, 3)])).unwrap();
        assert_eq!(s.entries(), &[w(3, &[(1, 3)])]);
        let s = splitting(&w(4, &[(2, 4)])).unwrap();
        assert_eq!(s.entries(), &[w(3, &[(1, 3)]), BandWord::identity(3)]);
        let s = splitting(&w(4, &[(1, 4)])).unwrap();
        assert_eq!(s.entries(), &[w(3, &[(2, 3)]), BandWord::identity(3), BandWord::identity(3)]);
    }

    #[test]
    fn delta3_splitting() {
        let s = splitting(&BandWord::garside(3)).unwrap();
        assert_eq!(s.entries(), &[w(2, &[(1, 2)]), BandWord::identity(2), w(2, &[(1, 2)])]);
        assert!(equal(&s.reconstruct(), &BandWord::garside(3)));
        assert_eq!(rnf(&BandWord::garside(3)), w(3, &[(1, 3), (1, 2)]));
    }

    #[test]
    fn trivial_splitting_is_flagged() {
        let s = splitting(&BandWord::identity(4)).unwrap();
        assert!(s.is_trivial_braid());
        assert_eq!(s.breadth(), 1);
        assert!(splitting(&BandWord::identity(2)).is_err());
    }

    #[test]
    fn breadths() {
        for n in 3..=6 {
            assert_eq!(breadth(&w(n, &[(n - 1, n)])).unwrap(), 2);
            assert_eq!(breadth(&w(n, &[(1, n)])).unwrap(), 3);
            assert_eq!(breadth(&BandWord::garside(n - 1).widen(n)).unwrap(), 1);
        }
    }

    #[test]
    fn separators_and_their_normal_forms() {
        assert_eq!(separator(5, 3).unwrap(), w(5, &[(2, 3), (1, 2), (1, 5)]));
        assert_eq!(separator(6, 4).unwrap(), w(6, &[(3, 4), (2, 3), (1, 2), (1, 6)]));
        for n in 3..=6 {
            assert_eq!(separator(n, 1).unwrap(), w(n, &[(1, n)]));
            assert_eq!(separator(n, 0).unwrap(), w(n, &[(n - 1, n)]));
        }
        assert_eq!(rnf(&separator(6, 4).unwrap()).to_string(), "a(3,4) a(2,3) a(1,2) a(1,6)");
        assert_eq!(last_letter(&separator(5, 3).unwrap()).unwrap(), BandLetter::new(1, 5).unwrap());
    }

    #[test]
    fn last_letters() {
        assert_eq!(last_letter(&w(3, &[(1, 3)])).unwrap(), BandLetter::new(1, 3).unwrap());
        assert_eq!(last_letter(&BandWord::garside(3)).unwrap(), BandLetter::new(1, 2).unwrap());
        assert_eq!(last_letter(&BandWord::identity(3)), Err(Error::TrivialBraid));
    }

    #[test]
    fn rnf_base_case() {
        let x = w(2, &[(1, 2); 4]);
        assert_eq!(rnf(&x), x);
    }

    #[test]
    fn trees() {
        assert_eq!(splitting_tree(&w(2, &[(1, 2); 3])), SplittingTree::Leaf(3));
        use SplittingTree::*;
        assert_eq!(splitting_tree(&w(3, &[(1, 3)])), Node(vec![Leaf(1), Leaf(0), Leaf(0)]));
        assert_eq!(splitting_tree(&BandWord::garside(3)), Node(vec![Leaf(1), Leaf(0), Leaf(1)]));
        assert_eq!(splitting_tree(&w(3, &[(1, 3)])).to_string(), "[[1],[0],[0]]");
        let t = splitting_tree(&BandWord::garside(5));
        assert_eq!(t.depth(), 3);
        assert!(t.is_balanced());
    }

    #[test]
    fn ladders() {
        assert!(is_ladder(&w(5, &[(1, 4)]).restrict(4).unwrap(), 4, 5).is_some());
        assert!(is_ladder(&w(4, &[(1, 2)]), 2, 5).is_none());
        // climbs 1 -> 3 -> 4 (bars a(1,3) then a(2,4))
        let x = w(5, &[(1, 2), (1, 3), (3, 4), (2, 4)]);
        let wit = is_ladder(&x, 2, 5).unwrap();
        assert_eq!(wit.bars, vec![1, 3]);
        assert_eq!(wit.rungs, vec![2, 3, 4]);
        assert!(is_ladder(&w(5, &[(2, 3), (1, 4)]), 3, 5).is_some());
        // a(3,4) touches rung 3 without straddling it, so it is no bar
        assert!(is_ladder(&w(5, &[(3, 4)]), 3, 5).is_none());
        assert!(is_ladder(&w(5, &[(3, 4)]), 2, 5).is_none());
    }

    #[test]
    fn dangerous_words() {
        assert_eq!(dangerous_braid(&[1], 4).unwrap(), ArtinWord::from_signed(4, &[-2, -1]).unwrap());
        assert!(dangerous_braid(&[], 4).unwrap().is_empty());
        assert!(dangerous_braid(&[3], 4).unwrap().is_empty());
        assert_eq!(
            dangerous_braid(&[2, 1], 4).unwrap(),
            ArtinWord::from_signed(4, &[-2, -2, -1]).unwrap()
        );
        assert!(dangerous_braid(&[1, 2], 4).is_err());
        assert!(dangerous_braid(&[4], 4).is_err());
    }
}
