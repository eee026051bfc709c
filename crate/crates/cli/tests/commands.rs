use std::process::Command;

use dualbraid::{BandLetter, BandWord};
use dualbraid_cli::{parse_word, run, Outcome, Word, EXIT_CONTRACT, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};
use proptest::prelude::*;

fn go(args: &[&str]) -> Outcome {
    run(std::iter::once("dualbraid").chain(args.iter().copied()))
}

#[test]
fn compare_example() {
    let out = go(&["compare", "--strands", "3", "a(2,3)", "a(1,2) a(2,3)"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout, "rotating: LT\noracle: LT\nmismatch: no\n");
    let out = go(&["compare", "--strands", "4", "d(1,4)", "a(1,4) d(1,3)"]);
    assert_eq!(out.stdout, "rotating: EQ\noracle: EQ\nmismatch: no\n");
}

#[test]
fn normalize_separators() {
    let out = go(&["normalize", "--strands", "6", "d(3,4) d(2,3) d(1,2) a(1,6)"]);
    assert_eq!(out.stdout, "a(3,4) a(2,3) a(1,2) a(1,6)\n");
    let out = go(&["normalize", "--strands", "5", "d(2,3) d(1,2) a(1,5)"]);
    assert_eq!(out.stdout, "a(2,3) a(1,2) a(1,5)\n");
    let out = go(&["normalize", "--strands", "3", "d(1,3)"]);
    assert_eq!(out.stdout, "a(1,3) a(1,2)\n");
    assert_eq!(go(&["normalize", "--strands", "4", "1"]).stdout, "1\n");
}

#[test]
fn split_and_tree() {
    assert_eq!(go(&["split", "--strands", "4", "a(1,4)"]).stdout, "[a(2,3); 1; 1]\n");
    assert_eq!(go(&["split", "--strands", "4", "a(2,4)"]).stdout, "[a(1,3); 1]\n");
    assert_eq!(go(&["tree", "--strands", "3", "a(1,3)"]).stdout, "[[1],[0],[0]]\n");
    assert_eq!(go(&["tree", "--strands", "2", "s1 s1"]).stdout, "[2]\n");
}

#[test]
fn oracle_example() {
    let out = go(&["oracle", "--strands", "3", "s2^-1 s1 s2"]);
    assert_eq!(out.stdout, "class: s2-positive\nreduced: s1 s2 s1^-1\n");
    assert_eq!(go(&["oracle", "--strands", "3", "s2^-1 s1"]).stdout, "class: s2-negative\nreduced: s2^-1 s1\n");
    assert_eq!(go(&["oracle", "--strands", "4", "a(1,3)"]).stdout, "class: s2-positive\nreduced: s1 s2 s1^-1\n");
    assert_eq!(go(&["oracle", "--strands", "4", "s1 s1^-1"]).stdout, "class: trivial\nreduced: 1\n");
}

#[test]
fn enum_verify() {
    let out = go(&["enum-verify", "--strands", "3", "--max-len", "3", "--jobs", "1"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert!(out.stdout.lines().all(|l| l.starts_with("PASS") || l.starts_with("total:")));
    assert!(out.stdout.ends_with(", 0 failed\n"));
}

#[test]
fn errors_and_codes() {
    let bad = go(&["normalize", "--strands", "3", "a(1,2) s1"]);
    assert_eq!(bad.code, EXIT_USAGE);
    assert!(bad.stderr.contains("column 8"), "{}", bad.stderr);
    assert_eq!(go(&["normalize", "--strands", "3", "a(1,4)"]).code, EXIT_USAGE);
    assert_eq!(go(&["normalize", "a(1,2)"]).code, EXIT_USAGE);
    assert_eq!(go(&["compare", "--strands", "3", "s1^-1", "s1"]).code, EXIT_CONTRACT);
    assert_eq!(go(&["enum-verify", "--strands", "1", "--max-len", "2"]).code, EXIT_CONTRACT);
    assert_eq!(go(&[]).code, EXIT_USAGE);
    assert_ne!(EXIT_MISMATCH, EXIT_OK);
}

#[test]
fn compare_finds_no_mismatch_on_small_corpus() {
    let els = dualbraid::brute::enumerate_elements(4, 2);
    for u in &els {
        for v in &els {
            let (su, sv) = (u.to_string(), v.to_string());
            let out = go(&["compare", "--strands", "4", &su, &sv]);
            assert_eq!(out.code, EXIT_OK, "{su} vs {sv}: {}", out.stdout);
        }
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_dualbraid");
    let ok = Command::new(bin).args(["split", "--strands", "4", "a(1,4)"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "[a(2,3); 1; 1]\n");
    let bad = Command::new(bin).args(["split", "--strands", "4", "a(1"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let contract = Command::new(bin).args(["split", "--strands", "2", "a(1,2)"]).output().unwrap();
    assert_eq!(contract.status.code(), Some(2));
}

fn band_word() -> impl Strategy<Value = BandWord> {
    (2usize..=7).prop_flat_map(|n| {
        prop::collection::vec((1..n, 1..n), 0..10).prop_map(move |raw| {
            let letters = raw
                .into_iter()
                .map(|(a, b)| {
                    let (p, q) = if a == b { (a, a + 1) } else { (a.min(b), a.max(b) + 1) };
                    BandLetter::new(p, q).unwrap()
                })
                .collect();
            BandWord::new(n, letters).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn band_words_round_trip(w in band_word()) {
        prop_assert_eq!(parse_word(&w.to_string(), w.strands()).unwrap(), Word::Band(w));
    }

    #[test]
    fn artin_words_round_trip(n in 2usize..7, raw in prop::collection::vec((1usize..7, any::<bool>()), 0..12)) {
        let letters: Vec<i32> = raw
            .into_iter()
            .map(|(i, pos)| {
                let i = ((i - 1) % (n - 1) + 1) as i32;
                if pos { i } else { -i }
            })
            .collect();
        let w = dualbraid::ArtinWord::from_signed(n, &letters).unwrap();
        let parsed = parse_word(&w.to_string(), n).unwrap();
        if w.is_empty() {
            prop_assert_eq!(parsed, Word::Band(BandWord::identity(n)));
        } else {
            prop_assert_eq!(parsed, Word::Artin(w));
        }
    }

    #[test]
    fn normal_forms_round_trip(w in band_word()) {
        let n = w.strands().to_string();
        let out = go(&["normalize", "--strands", &n, &w.to_string()]);
        prop_assert_eq!(out.code, EXIT_OK);
        let again = go(&["normalize", "--strands", &n, out.stdout.trim_end()]);
        prop_assert_eq!(again.stdout, out.stdout);
    }

    #[test]
    fn tree_depth(w in band_word()) {
        let n = w.strands();
        let out = go(&["tree", "--strands", &n.to_string(), &w.to_string()]);
        let text = out.stdout.trim_end();
        let mut depth = 0usize;
        let mut max = 0usize;
        for c in text.chars() {
            match c {
                '[' => {
                    depth += 1;
                    max = max.max(depth);
                }
                ']' => depth -= 1,
                _ => {}
            }
        }
        // leaves carry one bracket of their own
        prop_assert_eq!(max, n - 1);
    }
}
