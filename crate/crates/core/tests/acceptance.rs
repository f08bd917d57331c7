//! Acceptance suite: one pass/fail line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigUint;
use partcat_core::repn::{hom_dim, hom_dim_bruteforce};
use partcat_core::verify::{
    check_associativity, check_combinatorics, check_faithfulness, check_fullness, check_phi_kernel,
    check_relations, golden_examples, DEFAULT_SEED,
};
use partcat_core::{Exec, FieldSpec, Result, SuiteReport};

const Q: FieldSpec = FieldSpec::RATIONALS;

/// Outcome of one criterion: the first failing report, if any.
type Verdict = Result<Option<String>>;

fn all_pass(reports: impl IntoIterator<Item = Result<SuiteReport>>) -> Verdict {
    for r in reports {
        let r = r?;
        if !r.passed() {
            return Ok(Some(r.to_string()));
        }
    }
    Ok(None)
}

fn relations() -> Verdict {
    let f5 = FieldSpec::prime(5)?;
    all_pass(
        [2, 3, 4]
            .into_iter()
            .flat_map(|n| [Q, f5].into_iter().filter(move |f| f.allows_rewriting(n)).map(move |f| (n, f)))
            .map(|(n, f)| check_relations(n, f, Exec::default())),
    )
}

fn splits(max: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=max).flat_map(|m| (0..=m).map(move |k| (k, m - k)))
}

fn kernel() -> Verdict {
    all_pass([2, 3].into_iter().flat_map(|n| splits(4).map(move |(k, l)| check_phi_kernel(n, k, l, Exec::default()))))
}

fn dimensions() -> Verdict {
    for (n, k, l, want) in [(2, 1, 1, 4u32), (3, 1, 1, 3), (3, 3, 0, 9), (3, 2, 1, 9), (4, 2, 1, 6)] {
        if hom_dim(n, k, l) != BigUint::from(want) {
            return Ok(Some(format!("hom_dim({n},{k},{l}) = {}, expected {want}", hom_dim(n, k, l))));
        }
    }
    for n in 2..=4 {
        for (k, l) in splits(5) {
            let brute = hom_dim_bruteforce(n, k, l, Q, Exec::default())?;
            if BigUint::from(brute) != hom_dim(n, k, l) {
                return Ok(Some(format!("n={n} k={k} l={l}: formula {} vs brute force {brute}", hom_dim(n, k, l))));
            }
        }
    }
    Ok(None)
}

fn fullness() -> Verdict {
    all_pass((2..=4).flat_map(|n| splits(5).map(move |(k, l)| check_fullness(n, k, l, Exec::default()))))
}

fn faithfulness() -> Verdict {
    all_pass(
        [2, 3]
            .into_iter()
            .flat_map(|n| (0..=4).map(move |k| check_faithfulness(n, k, Q, DEFAULT_SEED + k as u64, 100, Exec::default()))),
    )
}

fn golden() -> Verdict {
    all_pass([golden_examples(Exec::default())])
}

fn associativity() -> Verdict {
    all_pass(
        [2, 3]
            .into_iter()
            .flat_map(|n| (0..=3).map(move |k| check_associativity(n, k, DEFAULT_SEED + k as u64, 50, Exec::default()))),
    )
}

fn combinatorics() -> Verdict {
    all_pass([Ok(check_combinatorics(7))])
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 8] = [
        ("generating relations hold as morphism and matrix identities, n = 2,3,4 over Q and F5", relations),
        ("Φ(x_D) = 0 iff D has more than n parts; rank and injectivity of Φ, n = 2,3, k+l ≤ 4", kernel),
        ("dimension formula equals brute-force A_n invariants, n = 2,3,4, k+l ≤ 5", dimensions),
        ("Ψ-rank of the spanning set equals the dimension, n = 2,3,4, k+l ≤ 5", fullness),
        ("normal-form basis is Ψ-independent; reduce preserves Ψ on 100 random morphisms, n = 2,3, k ≤ 4", faithfulness),
        ("worked examples: four jellyfish, α∘β∘α, j*∘j for n = 2,3", golden),
        ("rewritten composition is associative on 50 random triples, n = 2,3, k ≤ 3", associativity),
        ("Bell and Stirling numbers match enumeration, m ≤ 7", combinatorics),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = check();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(None) => println!("criterion {}: PASS ({secs:.2}s) {name}", i + 1),
            Ok(Some(report)) => {
                failed += 1;
                println!("criterion {}: FAIL ({secs:.2}s) {name}", i + 1);
                eprint!("{report}");
            }
            Err(e) => {
                failed += 1;
                println!("criterion {}: FAIL ({secs:.2}s) {name}: error {e}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
