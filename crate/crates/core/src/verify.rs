//! Exhaustive finite checks over enumerated corpora of `BKL(n)`.
//!
//! Each check returns a [`CheckReport`]; the command-line `enum-verify`
//! runs them all and the acceptance tests run them at fixed sizes.

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;

use crate::brute::{brute_tail, enumerate_elements};
use crate::garside::{equal, right_divides, right_quotient, tail};
use crate::ordering::{cmp_rotating, is_initial_segment_member, normal_form_avoids_last_strand, successor};
use crate::rotating::{is_ladder, last_letter, rnf, splitting, Splitting};
use crate::sigma::{cmp_artin, handle_reduce, sigma_class, SigmaClass};
use crate::word::{ArtinWord, BandWord};

const MAX_LISTED_FAILURES: usize = 10;

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    pub samples: Vec<String>,
}

impl CheckReport {
    fn new(name: &str) -> Self {
        CheckReport { name: name.to_string(), checked: 0, failed: 0, samples: Vec::new() }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.samples.len() < MAX_LISTED_FAILURES {
                self.samples.push(what());
            }
        }
    }

    fn merge(mut self, other: CheckReport) -> Self {
        self.checked += other.checked;
        self.failed += other.failed;
        let room = MAX_LISTED_FAILURES.saturating_sub(self.samples.len());
        self.samples.extend(other.samples.into_iter().take(room));
        self
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}: {} checked, {} failed", self.name, self.checked, self.failed)?;
        for s in &self.samples {
            write!(f, "\n    {s}")?;
        }
        Ok(())
    }
}

/// Distinct elements of `BKL(n)` of length at most `max_len`, one word each.
#[derive(Debug, Clone)]
pub struct Corpus {
    pub n: usize,
    pub max_len: usize,
    pub elements: Vec<BandWord>,
}

impl Corpus {
    pub fn new(n: usize, max_len: usize) -> Self {
        Corpus { n, max_len, elements: enumerate_elements(n, max_len) }
    }
}

fn ord_tag(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "LT",
        Ordering::Equal => "EQ",
        Ordering::Greater => "GT",
    }
}

/// Rotating ordering against the handle-reduction ordering on every ordered
/// pair of distinct elements.
pub fn check_orderings_agree(corpus: &Corpus) -> CheckReport {
    let artin: Vec<ArtinWord> = corpus.elements.iter().map(|w| w.to_artin()).collect();
    let els = &corpus.elements;
    (0..els.len())
        .into_par_iter()
        .map(|i| {
            let mut rep = CheckReport::new("rotating order = braid order");
            for j in 0..els.len() {
                if i == j {
                    continue;
                }
                let rot = cmp_rotating(&els[i], &els[j]);
                let deh = cmp_artin(&artin[i], &artin[j]);
                let ok = matches!(deh, Ok(d) if d == rot) && rot != Ordering::Equal;
                rep.record(ok, || {
                    format!("{} vs {}: rotating {} oracle {:?}", els[i], els[j], ord_tag(rot), deh)
                });
            }
            rep
        })
        .reduce(|| CheckReport::new("rotating order = braid order"), CheckReport::merge)
}

/// Sorts the corpus by the rotating ordering and checks that no element
/// falls strictly between `x` and `x a(1,2)`.
pub fn check_successor_gap(corpus: &Corpus) -> CheckReport {
    let mut rep = CheckReport::new("successor gap");
    let mut sorted = corpus.elements.clone();
    sorted.sort_by(cmp_rotating);
    for x in &corpus.elements {
        let next = successor(x);
        let lo = sorted.partition_point(|y| cmp_rotating(y, x) != Ordering::Greater);
        let between = sorted[lo..]
            .iter()
            .take_while(|y| cmp_rotating(y, &next) == Ordering::Less)
            .next();
        rep.record(between.is_none(), || {
            format!("{} lies between {} and its successor", between.unwrap(), x)
        });
    }
    rep
}

/// Membership in `BKL(n-1)` by comparison with `a(n-1,n)` against the
/// letters of the normal form.
pub fn check_initial_segment(corpus: &Corpus) -> CheckReport {
    let mut rep = CheckReport::new("initial segment");
    let n = corpus.n;
    for x in &corpus.elements {
        let by_order = is_initial_segment_member(x, n);
        let by_letters = normal_form_avoids_last_strand(x, n);
        let by_word = x.max_strand() < n;
        rep.record(by_order == by_letters && by_letters == by_word, || {
            format!("{x}: order {by_order}, normal form {by_letters}, word {by_word}")
        });
    }
    rep
}

/// Splitting conditions: reconstruction and trivial intermediate tails.
pub fn splitting_conditions(s: &Splitting, source: &BandWord) -> Result<(), String> {
    let n = s.strands();
    if !equal(&s.reconstruct(), source) {
        return Err(format!("{source}: splitting {s} does not multiply back"));
    }
    if s.is_trivial_braid() {
        return Ok(());
    }
    let b = s.breadth();
    if b >= 2 && s.entry(b).is_empty() {
        return Err(format!("{source}: leading entry of {s} is trivial"));
    }
    for k in 1..b {
        let mut partial = BandWord::identity(n);
        for j in (k + 1..=b).rev() {
            partial = partial.concat(&s.entry(j).widen(n).phi((j - k) as i64));
        }
        if !tail(&partial, n - 1).is_empty() {
            return Err(format!("{source}: partial product above entry {k} of {s} has a tail"));
        }
    }
    Ok(())
}

pub fn check_splittings(corpus: &Corpus) -> CheckReport {
    let mut rep = CheckReport::new("splitting conditions");
    for x in &corpus.elements {
        let res = splitting(x).map_err(|e| e.to_string()).and_then(|s| splitting_conditions(&s, x));
        rep.record(res.is_ok(), || res.unwrap_err());
    }
    rep
}

/// The three last-letter constraints on every entry of a splitting.
pub fn last_letter_violations(s: &Splitting) -> Vec<String> {
    let top = s.strands() - 1;
    let mut out = Vec::new();
    if s.is_trivial_braid() {
        return out;
    }
    for k in 2..=s.breadth() {
        let e = s.entry(k);
        if k >= 3 && e.is_empty() {
            out.push(format!("entry {k} of {s} is trivial"));
        }
        if e.is_empty() {
            continue;
        }
        let nf = rnf(e);
        let last = nf.last().expect("nontrivial");
        if last.q() != top {
            out.push(format!("entry {k} of {s} ends with {last}"));
        }
        if last.p() + 1 == top && nf.len() >= 2 {
            let before = nf.letters()[nf.len() - 2];
            if before.q() != top {
                out.push(format!("entry {k} of {s}: normal form {nf} has {before} before {last}"));
            }
        }
    }
    out
}

/// Each entry `b_k`, `b-1 >= k >= 2` (`k = 2` only when nontrivial), is a
/// `phi_n(last b_(k+1))`-ladder.
pub fn ladder_violations(s: &Splitting) -> Vec<String> {
    let n = s.strands();
    let mut out = Vec::new();
    if s.is_trivial_braid() {
        return out;
    }
    for k in (2..s.breadth()).rev() {
        let e = s.entry(k);
        if k == 2 && e.is_empty() {
            continue;
        }
        let above = match last_letter(s.entry(k + 1)) {
            Ok(l) => l.rotate(n, 1),
            Err(_) => {
                out.push(format!("entry {} of {s} is trivial", k + 1));
                continue;
            }
        };
        let nf = rnf(e);
        if is_ladder(&nf, above.p(), n).is_none() {
            out.push(format!("entry {k} of {s} ({nf}) is not an {above}-ladder"));
        }
    }
    out
}

pub fn check_last_letters_and_ladders(corpus: &Corpus) -> CheckReport {
    let mut rep = CheckReport::new("last letters and ladders");
    for x in &corpus.elements {
        let s = splitting(x).expect("n >= 3");
        let mut v = last_letter_violations(&s);
        v.extend(ladder_violations(&s));
        rep.record(v.is_empty(), || format!("{x}: {}", v.join("; ")));
    }
    rep
}

/// Tail against the maximal suffix over the whole class, for every `m < n`.
pub fn check_tails(corpus: &Corpus) -> CheckReport {
    let mut rep = CheckReport::new("tail = brute-force tail");
    for x in &corpus.elements {
        for m in 2..corpus.n {
            let fast = tail(x, m);
            let slow = brute_tail(x, m);
            let quotient_ok = right_quotient(x, &fast)
                .map(|q| tail(&q, m).is_empty())
                .unwrap_or(false);
            let ok = equal(&fast, &slow) && right_divides(&fast, x) && quotient_ok;
            rep.record(ok, || format!("{x}, m={m}: tail {fast}, brute force {slow}"));
        }
    }
    rep
}

/// Handle reduction preserves the element, and positive words are
/// sigma-positive.
pub fn check_oracle(corpus: &Corpus) -> CheckReport {
    let mut rep = CheckReport::new("oracle self-consistency");
    for x in &corpus.elements {
        let a = x.to_artin();
        let back = handle_reduce(&a).and_then(|r| sigma_class(&a.concat(&r.inverse())));
        rep.record(back == Ok(SigmaClass::Trivial), || format!("{x}: round trip gives {back:?}"));
        let class = sigma_class(&a);
        let ok = match class {
            Ok(SigmaClass::Trivial) => x.is_empty(),
            Ok(SigmaClass::Positive(_)) => !x.is_empty(),
            _ => false,
        };
        rep.record(ok, || format!("{x}: classified {class:?}"));
    }
    rep
}

/// Every check that makes sense at this strand count.
pub fn run_all(n: usize, max_len: usize) -> Vec<CheckReport> {
    let corpus = Corpus::new(n, max_len);
    let mut out = vec![check_oracle(&corpus), check_orderings_agree(&corpus), check_successor_gap(&corpus)];
    if n >= 3 {
        out.push(check_initial_segment(&corpus));
        out.push(check_splittings(&corpus));
        out.push(check_last_letters_and_ladders(&corpus));
        out.push(check_tails(&corpus));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_corpus_passes_everything() {
        for rep in run_all(3, 3) {
            assert!(rep.passed(), "{rep}");
            assert!(rep.checked > 0);
        }
        for rep in run_all(4, 2) {
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn report_formatting() {
        let mut r = CheckReport::new("demo");
        r.record(true, String::new);
        r.record(false, || "boom".into());
        assert_eq!(r.to_string(), "FAIL demo: 2 checked, 1 failed\n    boom");
    }
}
