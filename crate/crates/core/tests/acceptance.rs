//! Acceptance criteria, one line per criterion. Runs without the test
//! harness so every line shows up in `cargo test` output.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qfrob::bigon::{verify_cobraiding, verify_hopf_axioms};
use qfrob::braided::{verify_braided_associativity, verify_phi_braided, BraidSlots};
use qfrob::frobenius::{
    negative_control, verify_annulus_tn, verify_phi_homomorphism, verify_phi_multiplicative,
    verify_square_collapse, verify_square_expansion,
};
use qfrob::qcomb::{verify_qbinom_vanishing, verify_root_identities};
use qfrob::torus::{verify_freshman_dream, verify_monogon_noncentrality, verify_torus_chebyshev};
use qfrob::uq::{verify_pairing_tables, verify_dual_frobenius};
use qfrob::{Report, Ring, RootSpec};

const SEED: u64 = 2024;

fn spec(n: u32) -> RootSpec {
    RootSpec::new(n).unwrap()
}

fn over(suite: &str, orders: impl IntoIterator<Item = u32>, f: impl Fn(&RootSpec) -> Report) -> Report {
    let mut report = Report::new(suite);
    for n in orders {
        report.merge(f(&spec(n)));
    }
    report
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Report,
}

fn criteria() -> Vec<Criterion> {
    let secs = Duration::from_secs;
    vec![
        Criterion {
            id: 1,
            name: "Gaussian binomials vanish at order N, n <= 64",
            budget: secs(5),
            run: || over("qfacts", 1..=64, verify_qbinom_vanishing),
        },
        Criterion {
            id: 2,
            name: "freshman dream in the 2-generator torus, N <= 40, cross terms below N",
            budget: secs(10),
            run: || {
                let mut r = Report::new("freshman-dream");
                for n in 1..=40 {
                    r.merge(verify_freshman_dream(n, n));
                }
                r
            },
        },
        Criterion {
            id: 3,
            name: "torus Chebyshev T_N(x + x^-1 + y), n <= 40",
            budget: secs(30),
            run: || over("torus-chebyshev", 1..=40, verify_torus_chebyshev),
        },
        Criterion {
            id: 4,
            name: "bigon Chebyshev T_N(a + d) = a^N + d^N, n <= 40",
            budget: secs(60),
            run: || over("annulus", 1..=40, verify_annulus_tn),
        },
        Criterion {
            id: 5,
            name: "square expansion: closed form m <= 10, collapse n <= 40",
            budget: secs(30),
            run: || {
                let mut r = verify_square_expansion(10, None);
                r.merge(over("square", 1..=40, verify_square_collapse));
                r
            },
        },
        Criterion {
            id: 6,
            name: "Hopf axioms and co-braiding, degree <= 4 plus 200 samples",
            budget: secs(60),
            run: || {
                let g = Ring::generic();
                let mut r = verify_hopf_axioms(&g, 4);
                r.merge(verify_cobraiding(&g, 4, 200, SEED));
                r
            },
        },
        Criterion {
            id: 7,
            name: "pairing tables for m, p <= 8",
            budget: secs(30),
            run: || verify_pairing_tables(8, 8),
        },
        Criterion {
            id: 8,
            name: "dual Frobenius, 100 samples per n in {1,3,4,5,8,12,16,24}",
            budget: secs(60),
            run: || over("dual-frobenius", [1, 3, 4, 5, 8, 12, 16, 24], |s| verify_dual_frobenius(s, 2, 100, SEED)),
        },
        Criterion {
            id: 9,
            name: "Phi relations, coalgebra, counit, antipode, co-R, multiplicativity, n <= 24",
            budget: secs(120),
            run: || {
                over("phi-homomorphism", 1..=24, |s| {
                    let mut r = verify_phi_homomorphism(s);
                    r.merge(verify_phi_multiplicative(s, 200, SEED));
                    r
                })
            },
        },
        Criterion {
            id: 10,
            name: "negative controls: generic q and wrong powers M != N, n <= 40",
            budget: secs(30),
            run: || {
                let mut r = negative_control(None);
                r.merge(over("negative-control", 1..=40, |s| negative_control(Some(s))));
                r
            },
        },
        Criterion {
            id: 11,
            name: "monogon commutator and non-centrality, m <= 6",
            budget: secs(10),
            run: || {
                let mut r = Report::new("monogon");
                for m in 1..=6 {
                    r.merge(verify_monogon_noncentrality(m));
                }
                r
            },
        },
        Criterion {
            id: 12,
            name: "root-of-unity scalar identities, n <= 64",
            budget: secs(5),
            run: || over("root-identities", 1..=64, verify_root_identities),
        },
        Criterion {
            id: 13,
            name: "braided square: 200 associativity triples, Phi (x) Phi for n in {3,5,12}",
            budget: secs(60),
            run: || {
                let mut r = verify_braided_associativity(200, SEED, BraidSlots::STANDARD);
                r.merge(over("braided", [3, 5, 12], |s| verify_phi_braided(s, 100, SEED, BraidSlots::STANDARD)));
                r
            },
        },
    ]
}

fn main() -> ExitCode {
    let mut all_ok = true;
    for c in criteria() {
        let start = Instant::now();
        let report = (c.run)();
        let elapsed = start.elapsed();
        let in_budget = elapsed <= c.budget;
        let ok = report.all_passed() && report.passed() > 0 && in_budget;
        all_ok &= ok;
        println!(
            "criterion {:>2}: {} - {} (passed={} failed={} skipped={}, {:.2}s of {}s)",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.name,
            report.passed(),
            report.failed(),
            report.skipped(),
            elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
        if let Some(f) = report.first_failure() {
            println!("    first failure: {} | lhs = {} | rhs = {}", f.id, f.lhs, f.rhs);
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
