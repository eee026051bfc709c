//! Non-crossing partitions of `{1..n}`, i.e. the simple elements of `BKL(n)`.
//!
//! A block `{i1 < i2 < ... < ik}` stands for the braid
//! `a(i1,i2) a(i2,i3) ... a(ik-1,ik)`; distinct blocks commute. Under the
//! projection to the symmetric group (`a(p,q) -> (p q)`, words read as
//! compositions `pi(x y) = pi(x) . pi(y)`) the block becomes the increasing
//! cycle `i1 -> i2 -> ... -> ik -> i1`, `delta_n` becomes `i -> i+1 mod n`,
//! and simple elements correspond bijectively to their permutations. All the
//! lattice arithmetic below goes through that permutation.
//!
//! Left and right divisibility between simples both coincide with
//! refinement, and the gcd in either order is the blockwise intersection.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::{BandLetter, BandWord};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NonCrossingPartition {
    /// `rep[i]` is the least element of the block containing `i` (0-based).
    rep: Vec<u8>,
}

type Perm = Vec<u8>;

impl NonCrossingPartition {
    /// All singletons: the trivial braid.
    pub fn trivial(n: usize) -> Self {
        assert!(n <= u8::MAX as usize);
        NonCrossingPartition { rep: (0..n as u8).collect() }
    }

    /// The single block `{1..n}`: the Garside element `delta_n`.
    pub fn full(n: usize) -> Self {
        NonCrossingPartition { rep: vec![0; n] }
    }

    /// Partition with the block `{p,q}` and singletons elsewhere.
    pub fn from_letter(letter: BandLetter, n: usize) -> Self {
        assert!(letter.q() <= n);
        let mut rep: Vec<u8> = (0..n as u8).collect();
        rep[letter.q() - 1] = (letter.p() - 1) as u8;
        NonCrossingPartition { rep }
    }

    /// Partition with the single nontrivial block `{1..m}`.
    pub(crate) fn prefix_block(m: usize, n: usize) -> Self {
        let rep = (0..n).map(|i| if i < m { 0 } else { i as u8 }).collect();
        NonCrossingPartition { rep }
    }

    /// Builds a partition from 1-based blocks; the blocks must be disjoint,
    /// cover `{1..n}` and be pairwise non-crossing.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self> {
        let bad = || Error::Internal(format!("{blocks:?} is not a non-crossing partition of 1..={n}"));
        let mut rep = vec![u8::MAX; n];
        for block in blocks {
            let least = *block.iter().min().ok_or_else(bad)?;
            for &i in block {
                if i == 0 || i > n || rep[i - 1] != u8::MAX {
                    return Err(bad());
                }
                rep[i - 1] = (least - 1) as u8;
            }
        }
        if rep.contains(&u8::MAX) {
            return Err(bad());
        }
        let ncp = NonCrossingPartition { rep };
        if !ncp.is_non_crossing() {
            return Err(bad());
        }
        Ok(ncp)
    }

    pub fn strands(&self) -> usize {
        self.rep.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.rep.iter().enumerate().all(|(i, &r)| r as usize == i)
    }

    /// Number of blocks.
    pub fn block_count(&self) -> usize {
        self.rep.iter().enumerate().filter(|&(i, &r)| r as usize == i).count()
    }

    /// Length of the simple element as a band word: `n - #blocks`.
    pub fn rank(&self) -> usize {
        self.strands() - self.block_count()
    }

    /// Blocks as sorted 1-based index lists, ordered by least element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let n = self.strands();
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; n];
        for i in 0..n {
            let r = self.rep[i] as usize;
            if slot[r] == usize::MAX {
                slot[r] = out.len();
                out.push(Vec::new());
            }
            out[slot[r]].push(i + 1);
        }
        out
    }

    pub fn same_block(&self, i: usize, j: usize) -> bool {
        self.rep[i - 1] == self.rep[j - 1]
    }

    /// Blockwise intersection: the gcd of two simples (either side).
    pub fn meet(&self, other: &Self) -> Self {
        assert_eq!(self.strands(), other.strands());
        let rep = (0..self.strands())
            .map(|j| {
                let same = |i: &usize| self.rep[*i] == self.rep[j] && other.rep[*i] == other.rep[j];
                (0..=j).find(same).expect("j is in its own block") as u8
            })
            .collect();
        NonCrossingPartition { rep }
    }

    /// Whether every block of `self` lies inside a block of `other`, i.e.
    /// `self` divides `other` on either side.
    pub fn refines(&self, other: &Self) -> bool {
        assert_eq!(self.strands(), other.strands());
        let n = self.strands();
        (0..n).all(|i| other.rep[i] == other.rep[self.rep[i] as usize])
    }

    pub fn is_non_crossing(&self) -> bool {
        let n = self.strands();
        for a in 0..n {
            for b in a + 1..n {
                if self.rep[a] == self.rep[b] {
                    continue;
                }
                for c in b + 1..n {
                    if self.rep[c] != self.rep[a] {
                        continue;
                    }
                    if (c + 1..n).any(|d| self.rep[d] == self.rep[b]) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Word of the simple element: blocks in order, each as its chain of
    /// consecutive chords.
    pub fn to_word(&self) -> BandWord {
        let letters = self
            .blocks()
            .into_iter()
            .flat_map(|b| {
                b.windows(2)
                    .map(|w| BandLetter::new_unchecked(w[0], w[1]))
                    .collect::<Vec<_>>()
            })
            .collect();
        BandWord::new_unchecked(self.strands(), letters)
    }

    fn to_perm(&self) -> Perm {
        let n = self.strands();
        let mut perm: Perm = (0..n as u8).collect();
        for block in self.blocks() {
            for (k, &i) in block.iter().enumerate() {
                let next = block[(k + 1) % block.len()];
                perm[i - 1] = (next - 1) as u8;
            }
        }
        perm
    }

    fn from_perm(perm: &[u8]) -> Self {
        let n = perm.len();
        let mut rep = vec![u8::MAX; n];
        for i in 0..n {
            if rep[i] != u8::MAX {
                continue;
            }
            let mut j = i;
            loop {
                rep[j] = i as u8;
                j = perm[j] as usize;
                if j == i {
                    break;
                }
            }
        }
        let ncp = NonCrossingPartition { rep };
        debug_assert_eq!(ncp.to_perm(), perm, "permutation is not below the Coxeter cycle");
        debug_assert!(ncp.is_non_crossing());
        ncp
    }

    /// `x^-1 delta`: the Kreweras complement.
    pub fn right_complement(&self) -> Self {
        let n = self.strands();
        Self::from_perm(&compose(&invert(&self.to_perm()), &coxeter(n)))
    }

    /// `delta x^-1`.
    pub fn left_complement(&self) -> Self {
        let n = self.strands();
        Self::from_perm(&compose(&coxeter(n), &invert(&self.to_perm())))
    }

    /// `self * other`; the product must be simple.
    pub(crate) fn mul(&self, other: &Self) -> Self {
        Self::from_perm(&compose(&self.to_perm(), &other.to_perm()))
    }

    /// `self^-1 * other`; `self` must left-divide `other`.
    pub(crate) fn left_quotient(&self, other: &Self) -> Self {
        Self::from_perm(&compose(&invert(&self.to_perm()), &other.to_perm()))
    }

    /// `self * other^-1`; `other` must right-divide `self`.
    pub(crate) fn right_quotient(&self, other: &Self) -> Self {
        Self::from_perm(&compose(&self.to_perm(), &invert(&other.to_perm())))
    }

    /// Image under `phi_n`: every block shifted by one, mod `n`.
    pub fn rotate(&self) -> Self {
        let n = self.strands();
        let blocks: Vec<Vec<usize>> = self
            .blocks()
            .into_iter()
            .map(|b| b.into_iter().map(|i| i % n + 1).collect())
            .collect();
        Self::from_blocks(n, &blocks).expect("rotation preserves non-crossing partitions")
    }
}

impl fmt::Debug for NonCrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NonCrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, block) in self.blocks().iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str("{")?;
            for (j, i) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{i}")?;
            }
            f.write_str("}")?;
        }
        f.write_str("}")
    }
}

pub fn letter_ncp(letter: BandLetter, n: usize) -> NonCrossingPartition {
    NonCrossingPartition::from_letter(letter, n)
}

/// `(f . g)(i) = f(g(i))`.
fn compose(f: &[u8], g: &[u8]) -> Perm {
    g.iter().map(|&x| f[x as usize]).collect()
}

fn invert(f: &[u8]) -> Perm {
    let mut inv = vec![0u8; f.len()];
    for (i, &x) in f.iter().enumerate() {
        inv[x as usize] = i as u8;
    }
    inv
}

fn coxeter(n: usize) -> Perm {
    (0..n).map(|i| ((i + 1) % n) as u8).collect()
}
