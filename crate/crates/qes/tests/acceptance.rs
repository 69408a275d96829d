//! One PASS/FAIL line per acceptance criterion. Exits nonzero on any FAIL.

use std::time::Instant;

use qes_core::meixner::FLOAT_TOLERANCE;
use qes_core::numeric::DEFAULT_PRECISION_BITS;
use qes_core::rational::int;
use qes_core::verify::{self, Check};

struct Criterion {
    id: u32,
    title: &'static str,
    run: fn() -> Vec<Check>,
}

fn golden_scaled() -> Vec<Check> {
    verify::golden_scaled()
}

fn golden_general() -> Vec<Check> {
    verify::golden_general()
}

fn orthogonality() -> Vec<Check> {
    verify::orthogonality(6)
}

fn norms() -> Vec<Check> {
    verify::norm_formulas(6, 4)
}

fn factorization() -> Vec<Check> {
    verify::factorization(4, 4)
}

fn spectra() -> Vec<Check> {
    verify::spectra_checks(6)
}

fn ode_residual() -> Vec<Check> {
    verify::ode_residual(4)
}

fn aim() -> Vec<Check> {
    verify::aim_cross(5)
}

fn meixner() -> Vec<Check> {
    let mut out = verify::meixner_checks(7, DEFAULT_PRECISION_BITS);
    out.push(
        Check::new("meixner", "float tolerance", "relative error ≤ 1e-30")
            .outcome(FLOAT_TOLERANCE == "1e-30" && DEFAULT_PRECISION_BITS == 128, FLOAT_TOLERANCE),
    );
    out
}

fn scaling() -> Vec<Check> {
    verify::scaling(&int(2), 5)
}

const CRITERIA: [Criterion; 10] = [
    Criterion { id: 1, title: "golden scaled families, symbolic t and J", run: golden_scaled },
    Criterion { id: 2, title: "golden general families P_2..P_7 on their constraint surfaces", run: golden_general },
    Criterion { id: 3, title: "Gram matrices diagonal for n ≤ 6", run: orthogonality },
    Criterion { id: 4, title: "squared norm formulas for n ≤ 6, vanishing for J = 0..4", run: norms },
    Criterion { id: 5, title: "factorization for J ≤ 4, n ≤ 4", run: factorization },
    Criterion { id: 6, title: "spectra: root counts J ≤ 6, ±√8 to 30 digits, residual ≤ 1e-25", run: spectra },
    Criterion { id: 7, title: "symbolic ODE residual for n ≤ 4", run: ode_residual },
    Criterion { id: 8, title: "AIM quantization equals F_{J+1} for J ≤ 5", run: aim },
    Criterion { id: 9, title: "Meixner correspondence N ≤ 6, float mode within 1e-30", run: meixner },
    Criterion { id: 10, title: "scaling identity at a = 16, n ≤ 5", run: scaling },
];

fn main() {
    let start = Instant::now();
    let mut failed = 0;
    for c in &CRITERIA {
        let t0 = Instant::now();
        let checks = (c.run)();
        let bad: Vec<&Check> = checks.iter().filter(|k| !k.passed).collect();
        let ok = !checks.is_empty() && bad.is_empty();
        println!(
            "{} criterion {:>2}: {} ({} checks, {:.1?})",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.title,
            checks.len(),
            t0.elapsed()
        );
        for k in checks.iter().filter(|k| k.detail.starts_with("printed form differs")) {
            println!("       discrepancy {}: {}", k.name, k.detail);
        }
        for k in &bad {
            println!("       failed [{}] {}: {}", k.suite, k.name, k.detail);
        }
        if !ok {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed in {:.1?}", CRITERIA.len() - failed, CRITERIA.len(), start.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
