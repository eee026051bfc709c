//! Brute-force machinery that only knows the defining relations: word
//! enumeration, equivalence classes under the presentation, divisors read
//! off as suffixes. Independent of the normal-form code; used to cross-check it.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::garside::{gnf, GreedyNF};
use crate::word::{BandLetter, BandWord};

/// All band letters on `n` strands, ordered by `q` then `p`.
pub fn generators(n: usize) -> Vec<BandLetter> {
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for q in 2..=n {
        for p in 1..q {
            out.push(BandLetter::new_unchecked(p, q));
        }
    }
    out
}

/// Words obtained from `letters` by one application of a defining relation.
pub fn relation_neighbours(letters: &[BandLetter]) -> Vec<Vec<BandLetter>> {
    let mut out = Vec::new();
    for i in 0..letters.len().saturating_sub(1) {
        let (x, y) = (letters[i], letters[i + 1]);
        let mut emit = |a: BandLetter, b: BandLetter| {
            let mut w = letters.to_vec();
            w[i] = a;
            w[i + 1] = b;
            out.push(w);
        };
        if x.commutes_with(y) {
            emit(y, x);
            continue;
        }
        // a(p,q) a(q,r) = a(q,r) a(p,r) = a(p,r) a(p,q)
        let triangle = if x.q() == y.p() {
            Some((x.p(), x.q(), y.q()))
        } else if x.q() == y.q() && y.p() < x.p() {
            Some((y.p(), x.p(), x.q()))
        } else if x.p() == y.p() && y.q() < x.q() {
            Some((x.p(), y.q(), x.q()))
        } else {
            None
        };
        if let Some((p, q, r)) = triangle {
            let l = BandLetter::new_unchecked;
            let forms = [(l(p, q), l(q, r)), (l(q, r), l(p, r)), (l(p, r), l(p, q))];
            for (a, b) in forms {
                if (a, b) != (x, y) {
                    emit(a, b);
                }
            }
        }
    }
    out
}

/// Every word equal to `w` in the monoid (the relations preserve length,
/// so this is finite).
pub fn word_class(w: &BandWord) -> HashSet<Vec<BandLetter>> {
    let mut seen: HashSet<Vec<BandLetter>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.letters().to_vec());
    queue.push_back(w.letters().to_vec());
    while let Some(cur) = queue.pop_front() {
        for next in relation_neighbours(&cur) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// All words of exactly `len` letters on `n` strands, lexicographically.
pub fn words_of_length(n: usize, len: usize) -> Vec<BandWord> {
    let gens = generators(n);
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w: Vec<BandLetter>| {
                gens.iter().map(move |&g| {
                    let mut x = w.clone();
                    x.push(g);
                    x
                })
            })
            .collect();
    }
    out.into_iter().map(|l| BandWord::new_unchecked(n, l)).collect()
}

/// One representative word per element of length at most `max_len`, the
/// first one met in length-then-lexicographic order.
pub fn enumerate_elements(n: usize, max_len: usize) -> Vec<BandWord> {
    let mut seen: HashMap<GreedyNF, ()> = HashMap::new();
    let mut out = Vec::new();
    for len in 0..=max_len {
        for w in words_of_length(n, len) {
            if seen.insert(gnf(&w), ()).is_none() {
                out.push(w);
            }
        }
    }
    out
}

/// Longest suffix, over all words of the class, with every letter inside
/// `BKL(m)`.
pub fn brute_tail(w: &BandWord, m: usize) -> BandWord {
    let best = word_class(w)
        .into_iter()
        .map(|x| {
            let k = x.iter().rev().take_while(|l| l.q() <= m).count();
            x[x.len() - k..].to_vec()
        })
        .max_by_key(|s| s.len())
        .unwrap_or_default();
    BandWord::new_unchecked(w.strands(), best)
}

/// Whether some word of the class of `w` ends with some word of the class of `g`.
pub fn brute_right_divides(g: &BandWord, w: &BandWord) -> bool {
    if g.len() > w.len() {
        return false;
    }
    let targets = word_class(g);
    word_class(w)
        .iter()
        .any(|x| targets.contains(&x[x.len() - g.len()..]))
}

/// Equality via the presentation alone.
pub fn brute_equal(u: &BandWord, v: &BandWord) -> bool {
    u.len() == v.len() && word_class(u).contains(v.letters())
}
