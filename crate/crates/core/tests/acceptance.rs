//! Acceptance run: one PASS/FAIL line per criterion, with the measured value,
//! the pinned tolerance and the wall time against its limit.

use std::time::{Duration, Instant};

use braidlink::braid::{
    conjugate_test, enumerate_words, words_equal, BraidWord, Conjugacy, ConjugacyBudget, NonConjugacyCertificate, Sign,
};
use braidlink::census::{essential_witnesses, fingerprint, run_census, CensusConfig};
use braidlink::closure::{close_mixed, is_essential, markov_conjugate, markov_stabilize, Ambient};
use braidlink::dynamics::{order_errors, verify, Classification, VerifyConfig};
use braidlink::mixed::{verify_presentation, RelationFamily};
use braidlink::quandle::{coloring_count, dihedral};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod common;
use common::presentation_oracle;

struct Outcome {
    pass: bool,
    detail: String,
}

fn criterion(id: usize, name: &str, limit: Duration, body: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = body();
    let elapsed = start.elapsed();
    let in_time = elapsed <= limit;
    let pass = out.pass && in_time;
    println!(
        "[{}] {id} {name}: {} ({:.2}s, limit {}s)",
        if pass { "PASS" } else { "FAIL" },
        out.detail,
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    pass
}

fn w(text: &str) -> BraidWord {
    text.parse().unwrap()
}

fn presentation_soundness() -> Outcome {
    let mut relators = 0;
    let mut failed = 0;
    for n in 2..=5usize {
        for i in 1..n as i64 {
            for j in i + 1..n as i64 {
                let (l, r) = if j == i + 1 { (vec![i, j, i], vec![j, i, j]) } else { (vec![i, j], vec![j, i]) };
                relators += 1;
                let eq = words_equal(&BraidWord::from_tokens(n, &l).unwrap(), &BraidWord::from_tokens(n, &r).unwrap());
                failed += !eq.unwrap() as usize;
            }
        }
    }
    let mut mixed = 0;
    let mut loop_braid = 0;
    for (m, n) in [(1, 2), (1, 3), (2, 2)] {
        let report = verify_presentation(m, n);
        mixed += report.checks.len();
        failed += report.checks.iter().filter(|c| !c.holds).count();
        loop_braid += report.checks.iter().filter(|c| c.family == RelationFamily::LoopBraid).count();
    }
    Outcome {
        pass: failed == 0 && loop_braid > 0,
        detail: format!("{relators} braid relators, {mixed} mixed relators ({loop_braid} a·σ₁·a·σ₁), {failed} failures"),
    }
}

fn word_problem_oracle() -> Outcome {
    let words: Vec<BraidWord> = enumerate_words(2, 8).collect();
    let mut disagreements = 0;
    for u in &words {
        for v in &words {
            if words_equal(u, v).unwrap() != (u.exponent_sum() == v.exponent_sum()) {
                disagreements += 1;
            }
        }
    }
    Outcome {
        pass: disagreements == 0 && words.len() == 511,
        detail: format!("{} B2 words, {} pairs, {disagreements} disagreements", words.len(), words.len().pow(2)),
    }
}

fn conjugacy() -> Outcome {
    let (s1, s2) = (w("B3: 1"), w("B3: 2"));
    let witness_ok = match conjugate_test(&s1, &s2, ConjugacyBudget::default()).unwrap() {
        Conjugacy::Conjugate { witness } => {
            let lhs = witness.concat(&s1).unwrap().concat(&witness.inverse()).unwrap();
            words_equal(&lhs, &s2).unwrap()
        }
        _ => false,
    };
    let refuted = matches!(
        conjugate_test(&w("B2: 1"), &w("B2: -1"), ConjugacyBudget::default()).unwrap(),
        Conjugacy::NotConjugate(NonConjugacyCertificate::ExponentSum { left: 1, right: -1 })
    );
    Outcome {
        pass: witness_ok && refuted,
        detail: format!("σ1~σ2 witness verified={witness_ok}, σ1≁σ1⁻¹ by exponent sum={refuted}"),
    }
}

fn quandle_invariants() -> Outcome {
    let cases = [("B2: 1 1 1", 3, 9u64), ("B1:", 3, 3), ("B3: 1 -2 1 -2", 5, 25)];
    let mut parts = Vec::new();
    let mut pass = true;
    for (text, n, frozen) in cases {
        let q = dihedral(n).unwrap();
        let word = w(text);
        let oracle = presentation_oracle(&word, &q);
        let count = coloring_count(&word, &q).unwrap();
        pass &= oracle == frozen && count == frozen;
        parts.push(format!("{text} d{n}: {count} (oracle {oracle}, frozen {frozen})"));
    }
    Outcome {
        pass,
        detail: parts.join("; "),
    }
}

fn random_word(rng: &mut ChaCha8Rng, n: usize, len: usize) -> BraidWord {
    let tokens: Vec<i64> = (0..len)
        .map(|_| {
            let i = rng.random_range(1..n as i64);
            if rng.random_bool(0.5) { i } else { -i }
        })
        .collect();
    BraidWord::from_tokens(n, &tokens).unwrap()
}

fn markov_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut failures = 0;
    let trials = 500;
    for _ in 0..trials {
        let n = rng.random_range(1..=3);
        let len = if n == 1 { 0 } else { rng.random_range(0..=6) };
        let word = random_word(&mut rng, n, len);
        let f = fingerprint(&word);
        let c = if n == 1 { BraidWord::identity(1).unwrap() } else { random_word(&mut rng, n, 1) };
        let sign = if rng.random_bool(0.5) { Sign::Pos } else { Sign::Neg };
        let conj = markov_conjugate(&word, &c).unwrap();
        if fingerprint(&conj) != f || fingerprint(&markov_stabilize(&conj, sign)) != f {
            failures += 1;
        }
    }
    Outcome {
        pass: failures == 0,
        detail: format!("{trials} random words (n ≤ 3, length ≤ 6), {failures} failures"),
    }
}

fn census() -> Outcome {
    let cfg = CensusConfig {
        ambient: Ambient::Sphere3,
        min_strands: 2,
        max_strands: 3,
        max_length: 4,
        depth: 3,
        ..CensusConfig::default()
    };
    let first = run_census(&cfg).unwrap();
    let second = run_census(&cfg).unwrap();
    let identical = first.to_string() == second.to_string();
    let class = |t: &str| first.find(t).map(|i| (first.records[i].class_id, first.records[i].fingerprint.hash()));
    let (unknot, hopf, trefoil) = (class("B2: 1"), class("B2: 1 1"), class("B2: 1 1 1"));
    let apart = match (&unknot, &hopf, &trefoil) {
        (Some(u), Some(h), Some(t)) => u.0 != h.0 && h.0 != t.0 && u.0 != t.0 && u.1 != h.1 && h.1 != t.1 && u.1 != t.1,
        _ => false,
    };
    let replay = first.verify_traces();
    let hops: usize = first.records.iter().map(|r| r.path.len()).sum();
    Outcome {
        pass: identical && apart && replay && first.complete,
        detail: format!(
            "{} words, {} classes, byte-identical={identical}, unknot/Hopf/trefoil apart={apart}, {hops} hops replayed={replay}",
            first.records.len(),
            first.class_count()
        ),
    }
}

fn infinitude() -> Outcome {
    let ws = essential_witnesses(10);
    let mut windings = Vec::new();
    let mut essential = 0;
    for w in &ws {
        let link = close_mixed(w).unwrap();
        if link.components() == 1 && is_essential(&link).unwrap() {
            essential += 1;
        }
        windings.extend(link.winding());
    }
    let expected: Vec<u64> = (1..=10).collect();
    Outcome {
        pass: ws.len() == 10 && essential == 10 && windings == expected,
        detail: format!("{} witnesses, {essential} certified essential, windings {windings:?}", ws.len()),
    }
}

fn dynamics() -> Outcome {
    let report = verify(&VerifyConfig::default());
    let (e1, e2) = order_errors(0.1);
    let classes_ok = report.fixed_points.iter().all(|(name, r)| match *name {
        "P" => r.classification == Classification::Saddle,
        _ => r.classification == Classification::Sink,
    });
    let get = |n: &str| report.check(n).map(|c| c.value).unwrap_or(f64::NAN);
    Outcome {
        pass: report.all_pass() && classes_ok,
        detail: format!(
            "residuals {:.1e}/{:.1e} (<1e-12), spectra {:.1e}/{:.1e} (<1e-4), continuity {:.1e} (<1e-9), p∘h {:.1e} (<1e-12), RK4 ratio {:.2} in [14,18] (err {e1:.2e}→{e2:.2e})",
            get("residual P"),
            get("residual Q"),
            get("spectrum P"),
            get("spectrum Q"),
            get("continuity r2=2,4"),
            get("p(h(x)) = p(x)"),
            e1 / e2
        ),
    }
}

#[test]
fn acceptance() {
    let s = Duration::from_secs;
    let results = [
        criterion(1, "presentation soundness", s(10), presentation_soundness),
        criterion(2, "word-problem oracle", s(30), word_problem_oracle),
        criterion(3, "conjugacy", s(1), conjugacy),
        criterion(4, "quandle invariants", s(5), quandle_invariants),
        criterion(5, "Markov invariance", s(60), markov_invariance),
        criterion(6, "census determinism and soundness", s(300), census),
        criterion(7, "infinitude witness", s(1), infinitude),
        criterion(8, "dynamics verification", s(30), dynamics),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("acceptance: {passed}/{} criteria pass", results.len());
    assert_eq!(passed, results.len());
}
