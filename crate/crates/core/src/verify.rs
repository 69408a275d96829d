//! Named verification suites. Each check records what was compared and
//! whether it held; nothing here panics on a failed property.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::aim;
use crate::error::Result;
use crate::families::{self, gen_family, FamilyKind, FamilyParams, Parity};
use crate::meixner::{self, CheckMode};
use crate::norms::{self, Agreement};
use crate::numeric;
use crate::poly::{Poly, Var};
use crate::rational::{self, int, ratio, Rational};
use crate::spectra;
use crate::sturm;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    /// The property being checked.
    pub reference: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(suite: &'static str, name: impl Into<String>, reference: &'static str) -> Check {
        Check {
            suite,
            name: name.into(),
            reference,
            passed: false,
            detail: String::new(),
        }
    }

    pub fn outcome(mut self, passed: bool, detail: impl Into<String>) -> Check {
        self.passed = passed;
        self.detail = detail.into();
        self
    }

    fn from_result<T>(self, r: Result<T>, ok: impl FnOnce(T) -> (bool, String)) -> Check {
        match r {
            Ok(v) => {
                let (passed, detail) = ok(v);
                self.outcome(passed, detail)
            }
            Err(e) => self.outcome(false, e.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Golden,
    Norms,
    Factorization,
    Spectra,
    Residual,
    AimCross,
    Meixner,
    Scaling,
    BenderDunne,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Golden,
        Suite::Norms,
        Suite::Factorization,
        Suite::Spectra,
        Suite::Residual,
        Suite::AimCross,
        Suite::Meixner,
        Suite::Scaling,
        Suite::BenderDunne,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Golden => "golden",
            Suite::Norms => "norms",
            Suite::Factorization => "factorization",
            Suite::Spectra => "spectra",
            Suite::Residual => "residual",
            Suite::AimCross => "aim-cross",
            Suite::Meixner => "meixner",
            Suite::Scaling => "scaling",
            Suite::BenderDunne => "bender-dunne",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }

    /// Runs the suite at size `n` (loop bounds scale with it).
    pub fn run(self, n: usize) -> Vec<Check> {
        let n = n.max(1);
        match self {
            Suite::Golden => {
                let mut out = golden_scaled();
                out.extend(golden_general());
                out
            }
            Suite::Norms => {
                let mut out = orthogonality(n);
                out.extend(norm_formulas(n, n.min(4)));
                out.extend(factor_norms(n.min(5), 3));
                out.extend(real_roots_and_interlacing(n.min(5)));
                out
            }
            Suite::Factorization => factorization(n - 1, n - 1),
            Suite::Spectra => spectra_checks(n.min(6)),
            Suite::Residual => ode_residual(n - 1),
            Suite::AimCross => aim_cross(n),
            Suite::Meixner => meixner_checks(n + 1, numeric::DEFAULT_PRECISION_BITS),
            Suite::Scaling => scaling(&int(2), n),
            Suite::BenderDunne => bender_dunne(n),
        }
    }
}

fn p(text: &str) -> Poly {
    Poly::parse(text).expect("reference literal parses")
}

fn sym() -> (Poly, Poly) {
    (Poly::var(Var::T), Poly::var(Var::J))
}

/// A reference polynomial in the form it was printed, and with misprints
/// repaired where the two differ.
pub struct Reference {
    pub label: &'static str,
    pub printed: &'static str,
    pub repaired: Option<&'static str>,
}

/// Scaled family members `F_1..F_4` with symbolic `t` and `J`.
pub const SCALED_EVEN: [Reference; 4] = [
    Reference { label: "P_1^(t)", printed: "E - t", repaired: None },
    Reference { label: "P_2^(t)", printed: "E^2 - 6t E + 5t^2 - 8J", repaired: None },
    Reference {
        label: "P_3^(t)",
        printed: "E^3 - 15t E^2 + (48(1-J) - 8J + 59t^2)E - 3t(16 - 40J + 15t^2)",
        repaired: None,
    },
    Reference {
        label: "P_4^(t)",
        printed: "E^4 - 28t E^3 + (288 - 176t + 254t^2)E^2 - 4t(528 - 392J + 203t^2)E - 48(45J - 38)t^2 + 585t^4",
        repaired: Some(
            "E^4 - 28t E^3 + (288 - 176J + 254t^2)E^2 - 4t(528 - 392J + 203t^2)E - 48(45J - 38)t^2 + 585t^4 + 960J(J - 2)",
        ),
    },
];

pub const SCALED_ODD: [Reference; 4] = [
    Reference { label: "𝒫_1^(t)", printed: "E - 3t", repaired: None },
    Reference { label: "𝒫_2^(t)", printed: "E^2 - 10t E + 21t^2 - 24J", repaired: None },
    Reference {
        label: "𝒫_3^(t)",
        printed: "E^3 - 21t E^2 + (80 - 104J + 131t^2)E - 3t(80 - 168J + 77t^2)",
        repaired: None,
    },
    Reference {
        label: "𝒫_4^(t)",
        printed: "E^4 - 36t E^3 - 12t E(400 - 312J + 183t^2) + E^2(416 - 272J + 446t^2) + 9(448(J - 2)J - 16(-74 + 77J)t^2 + 385t^4)",
        repaired: None,
    },
];

/// `J = 1` members `F_0..F_5` in factored form.
pub const FACTORED_EVEN_J1: [&str; 6] = [
    "1",
    "E - t",
    "E^2 - 6t E + 5t^2 - 8",
    "(E - 9t)(E^2 - 6t E + 5t^2 - 8)",
    "(E^2 - 22t E + 117t^2 + 120)(E^2 - 6t E + 5t^2 - 8)",
    "(E^3 - 39t E^2 + (568 + 491t^2)E - 1989t^3 - 6072t)(E^2 - 6t E + 5t^2 - 8)",
];

pub const FACTORED_ODD_J1: [&str; 6] = [
    "1",
    "E - 3t",
    "(E - 7t)(E - 3t) - 24",
    "((E - 7t)(E - 3t) - 24)(E - 11t)",
    "(168 + (E - 15t)(E - 11t))((E - 7t)(E - 3t) - 24)",
    "((E - 7t)(E - 3t) - 24)(E^3 - 45t E^2 + (744 + 659t^2)E - 3135t^3 - 9528t)",
];

/// General members `P_2..P_7` in `(√a, b, c)` and the `k` of their
/// constraint `k a^{3/2} - b² + 4ac = 0`.
pub const GENERAL: [(Reference, i64); 6] = [
    (Reference { label: "P_2", printed: "2sqrt_a E - b", repaired: None }, 12),
    (Reference { label: "P_3", printed: "2sqrt_a E - 3b", repaired: None }, 20),
    (
        Reference {
            label: "P_4",
            printed: "4sqrt_a^2 E^2 - 12sqrt_a b E + 24sqrt_a^3 + 3b^2 + 8sqrt_a^2 c",
            repaired: None,
        },
        28,
    ),
    (
        Reference {
            label: "P_5",
            printed: "4sqrt_a^2 E^2 - 20sqrt_a b E + 120sqrt_a^3 + 15b^2 + 24sqrt_a^2 c",
            repaired: None,
        },
        36,
    ),
    (
        Reference {
            label: "P_6",
            printed: "8sqrt_a^3 E^3 - 60sqrt_a^2 b E^2 + (720sqrt_a^4 - 90sqrt_a b^2 + 112sqrt_a^3 c)E - 552sqrt_a^3 b - 15b^3 - 120sqrt_a^2 b c",
            repaired: Some(
                "8sqrt_a^3 E^3 - 60sqrt_a^2 b E^2 + (720sqrt_a^4 + 90sqrt_a b^2 + 112sqrt_a^3 c)E - 552sqrt_a^3 b - 15b^3 - 120sqrt_a^2 b c",
            ),
        },
        44,
    ),
    (
        Reference {
            label: "P_7",
            printed: "8sqrt_a^3 E^3 - 84sqrt_a^2 b E^2 + (1680sqrt_a^4 + 210sqrt_a b^2 + 208sqrt_a^3 c)E - 3480sqrt_a^3 b - 105b^3 - 504sqrt_a^2 b c",
            repaired: None,
        },
        52,
    ),
];

/// Compares a computed polynomial with a reference. Passes when it equals
/// the repaired form (or the printed one if no repair is listed); the detail
/// records any difference from the printed form.
fn compare_reference(
    suite: &'static str,
    reference: &'static str,
    r: &Reference,
    computed: &Poly,
    equal: impl Fn(&Poly, &Poly) -> bool,
) -> Check {
    let check = Check::new(suite, r.label, reference);
    let printed = p(r.printed);
    let target = r.repaired.map(p).unwrap_or_else(|| printed.clone());
    let passed = equal(computed, &target);
    let detail = if equal(computed, &printed) {
        format!("{computed}")
    } else {
        format!(
            "printed form differs by {}; computed {computed}",
            computed - &printed
        )
    };
    check.outcome(passed, detail)
}

/// Scaled families against the reference lists, including the `J = 1`
/// factored members.
pub fn golden_scaled() -> Vec<Check> {
    let reference = "scaled families F_1..F_4 and the J = 1 factored lists";
    let mut out = Vec::new();
    let (t, j) = sym();
    for (parity, refs, factored) in [
        (Parity::Even, &SCALED_EVEN, &FACTORED_EVEN_J1),
        (Parity::Odd, &SCALED_ODD, &FACTORED_ODD_J1),
    ] {
        let kind = FamilyKind::scaled(parity);
        match gen_family(kind, &FamilyParams::scaled(t.clone(), j.clone()), 5) {
            Ok(fam) => {
                for (r, f) in refs.iter().zip(&fam[1..]) {
                    out.push(compare_reference("golden", reference, r, f, |a, b| a == b));
                }
            }
            Err(e) => out.push(Check::new("golden", kind.name(), reference).outcome(false, e.to_string())),
        }
        let check = Check::new("golden", format!("{} J=1 factored F_0..F_5", kind.name()), reference);
        out.push(check.from_result(
            gen_family(kind, &FamilyParams::scaled(t.clone(), 1), 6),
            |fam| {
                let bad: Vec<usize> = (0..6).filter(|&n| fam[n] != p(factored[n])).collect();
                (bad.is_empty(), format!("mismatched indices {bad:?}"))
            },
        ));
    }
    out
}

/// Whether `d(c)` vanishes at `c = (b² - k√a³)/(4√a²)`, i.e. after clearing
/// denominators.
fn vanishes_on_constraint(d: &Poly, k: i64) -> bool {
    let s = Poly::var(Var::SqrtA);
    let b = Poly::var(Var::B);
    let num = &(&b * &b) - &s.pow(3).scale(&int(k));
    let den = s.pow(2).scale(&int(4));
    let coeffs = d.coeffs_in(Var::C);
    let deg = coeffs.len().saturating_sub(1);
    let total: Poly = coeffs
        .iter()
        .enumerate()
        .map(|(j, cj)| &(cj * &num.pow(j as u32)) * &den.pow((deg - j) as u32))
        .sum();
    total.is_zero()
}

/// General families `P_2..P_7` with symbolic `√a`, `b`, `c`, compared on
/// the constraint surface, plus termination at that constraint.
pub fn golden_general() -> Vec<Check> {
    let reference = "general families P_2..P_7 under k a^{3/2} - b² + 4ac = 0";
    let mut out = Vec::new();
    let params = FamilyParams::symbolic();
    let even = gen_family(FamilyKind::GeneralEven, &params, 4);
    let odd = gen_family(FamilyKind::GeneralOdd, &params, 4);
    let (even, odd) = match (even, odd) {
        (Ok(e), Ok(o)) => (e, o),
        (Err(e), _) | (_, Err(e)) => {
            return vec![Check::new("golden", "general families", reference).outcome(false, e.to_string())]
        }
    };
    for (idx, (r, k)) in GENERAL.iter().enumerate() {
        let label_index = idx + 2;
        let computed = if label_index % 2 == 0 {
            &even[label_index / 2]
        } else {
            &odd[(label_index - 1) / 2]
        };
        out.push(compare_reference("golden", reference, r, computed, |a, b| {
            vanishes_on_constraint(&(a - b), *k)
        }));
        // termination: the coupling feeding the next member vanishes at c*
        let parity = if label_index % 2 == 0 { Parity::Even } else { Parity::Odd };
        let n = (label_index - 2) / 2;
        let c = families::gen_constraint_c_poly(parity, &int(1), &Poly::var(Var::B), n);
        let spot = FamilyParams::general(int(1), Poly::var(Var::B), c);
        let stops = families::truncates_at(FamilyKind::general(parity), &spot, n + 1);
        out.push(
            Check::new("golden", format!("{} terminates at k = {k}", r.label), reference)
                .outcome(stops, if stops { "coupling vanishes" } else { "coupling survives" }),
        );
    }
    out
}

/// Off-diagonal Gram entries vanish for `m ≠ n ≤ n_max`, all four
/// scaled and factor families, symbolic `t` and `J`.
pub fn orthogonality(n_max: usize) -> Vec<Check> {
    let reference = "L[F_m F_n] = 0 for m ≠ n";
    let (t, j) = sym();
    let params = FamilyParams::scaled(t, j);
    [
        FamilyKind::ScaledEven,
        FamilyKind::ScaledOdd,
        FamilyKind::FactorEven,
        FamilyKind::FactorOdd,
    ]
    .into_iter()
    .map(|kind| {
        let check = Check::new("norms", format!("{} Gram matrix diagonal, n ≤ {n_max}", kind.name()), reference);
        let gram = norms::moment_functional(kind, &params, n_max).and_then(|l| {
            let fam = gen_family(kind, &params, n_max + 1)?;
            norms::gram_matrix(&l, &fam, n_max)
        });
        check.from_result(gram, |g| {
            let diag = norms::is_diagonal(&g);
            let g1 = g.get(1).map(|row| format!("{}", row[1])).unwrap_or_default();
            (diag, format!("G[1][1] = {g1}"))
        })
    })
    .collect()
}

/// Gram norms against the printed product and closed forms, and exact
/// vanishing for `n ≥ J + 1`.
pub fn norm_formulas(n_max: usize, j_max: usize) -> Vec<Check> {
    let reference = "γ_n = ∏ 8k(2k∓1)(J-k+1), vanishing for n ≥ J+1";
    let (t, j) = sym();
    let mut out = Vec::new();
    for parity in [Parity::Even, Parity::Odd] {
        let kind = FamilyKind::scaled(parity);
        let first = if parity == Parity::Even { "8J" } else { "24J" };
        let check = Check::new("norms", format!("{} γ_0..γ_{n_max}", kind.name()), reference);
        out.push(check.from_result(
            norms::norm_sequence(kind, &FamilyParams::scaled(t.clone(), j.clone()), n_max + 1),
            |seq| {
                let magnitude_ok = seq.comparisons.iter().all(|c| {
                    c.closed_agreement == Some(Agreement::Equal)
                        && c.product_agreement.is_some_and(|a| a != Agreement::Differs)
                });
                let first_ok = seq.gammas.get(1).is_some_and(|g| *g == p(first));
                let signs: Vec<&str> = seq
                    .comparisons
                    .iter()
                    .map(|c| c.product_agreement.map_or("-", Agreement::name))
                    .collect();
                (
                    magnitude_ok && first_ok && seq.gammas[0].is_one(),
                    format!("γ_1 = {}; printed product vs Gram per n: {signs:?}", seq.gammas.get(1).map(|g| g.to_string()).unwrap_or_default()),
                )
            },
        ));
        for jv in 0..=j_max {
            let check = Check::new("norms", format!("{} vanishing at J = {jv}", kind.name()), reference);
            out.push(check.from_result(
                norms::norm_sequence(kind, &FamilyParams::scaled(t.clone(), jv as i64), n_max.max(jv + 1) + 1),
                |seq| {
                    let ok = seq
                        .gammas
                        .iter()
                        .enumerate()
                        .all(|(n, g)| g.is_zero() == (n > jv));
                    (ok, format!("γ = [{}]", join(&seq.gammas)))
                },
            ));
        }
    }
    out
}

fn join(ps: &[Poly]) -> String {
    ps.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")
}

/// Factor-family norms never vanish for integer `J`, and their magnitude
/// matches the printed products.
pub fn factor_norms(n_max: usize, j_max: usize) -> Vec<Check> {
    let reference = "γ^Q_n and γ^𝒬_n are nonzero";
    let t = Poly::var(Var::T);
    let mut out = Vec::new();
    for kind in [FamilyKind::FactorEven, FamilyKind::FactorOdd] {
        for jv in 0..=j_max {
            let check = Check::new("norms", format!("{} γ_1..γ_{n_max} at J = {jv}", kind.name()), reference);
            out.push(check.from_result(
                norms::norm_sequence(kind, &FamilyParams::scaled(t.clone(), jv as i64), n_max + 1),
                |seq| {
                    let nonzero = seq.gammas.iter().all(|g| !g.is_zero());
                    let magnitude = seq
                        .comparisons
                        .iter()
                        .all(|c| c.product_agreement.is_some_and(|a| a != Agreement::Differs));
                    let signs: Vec<&str> = seq
                        .comparisons
                        .iter()
                        .map(|c| c.product_agreement.map_or("-", Agreement::name))
                        .collect();
                    (nonzero && magnitude, format!("printed product vs Gram per n: {signs:?}"))
                },
            ));
        }
    }
    out
}

const SAMPLE_T: [(i64, i64); 4] = [(-2, 1), (0, 1), (1, 2), (3, 1)];

/// `F_{J+1}` of the even family has `J + 1` simple real roots interlaced by
/// those of `F_J`.
pub fn real_roots_and_interlacing(j_max: usize) -> Vec<Check> {
    let reference = "F_{J+1} real-rooted, zeros of F_J interlace";
    let mut out = Vec::new();
    for (tn, td) in SAMPLE_T {
        let t = ratio(tn, td);
        for jv in 0..=j_max {
            let check = Check::new("norms", format!("t = {t}, J = {jv}"), reference);
            out.push(check.from_result(
                gen_family(FamilyKind::ScaledEven, &FamilyParams::scaled(t.clone(), jv as i64), jv + 2),
                |fam| {
                    let count = sturm::count_real_roots(&fam[jv + 1]).unwrap_or(0);
                    let inter = sturm::interlaces(&fam[jv], &fam[jv + 1]).unwrap_or(false);
                    (count == jv + 1 && inter, format!("{count} real roots, interlacing {inter}"))
                },
            ));
        }
    }
    out
}

/// `F_{J+1+n} = Q_n F_{J+1}` with zero remainder for symbolic `t`.
pub fn factorization(j_max: usize, n_max: usize) -> Vec<Check> {
    let reference = "F_{n+J+1} = Q_n F_{J+1} and the factor recurrence";
    let t = Poly::var(Var::T);
    let mut out = Vec::new();
    for kind in [FamilyKind::ScaledEven, FamilyKind::ScaledOdd] {
        for jv in 0..=j_max {
            let params = FamilyParams::scaled(t.clone(), jv as i64);
            let check = Check::new("factorization", format!("{} J = {jv}, n ≤ {n_max}", kind.name()), reference);
            let result = gen_family(kind, &params, jv + n_max + 2)
                .and_then(|fam| norms::factorization_check(kind, &params, &fam));
            out.push(check.from_result(result, |q| {
                (
                    q.len() == n_max + 1,
                    format!("Q_1 = {}", q.get(1).map(|x| x.to_string()).unwrap_or_default()),
                )
            }));
        }
    }
    out
}

/// Root counts, the `t = 0, J = 1` energies to 30 digits, nodes and the
/// numeric Schrödinger residual.
pub fn spectra_checks(j_max: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let eps = rational::parse("1e-30").expect("literal");
    let reference = "J + 1 real energies per sector";
    for parity in [Parity::Even, Parity::Odd] {
        for (tn, td) in SAMPLE_T {
            let t = ratio(tn, td);
            let counts: Vec<String> = (0..=j_max)
                .map(|jv| match spectra::qes_energies(&t, jv, parity, &rational::parse("1e-6").unwrap()) {
                    Ok(levels) if levels.len() == jv + 1 => String::from("ok"),
                    Ok(levels) => format!("J={jv}: {}", levels.len()),
                    Err(e) => format!("J={jv}: {e}"),
                })
                .collect();
            let bad: Vec<&String> = counts.iter().filter(|c| *c != "ok").collect();
            out.push(
                Check::new("spectra", format!("{} root counts at t = {t}, J ≤ {j_max}", parity.name()), reference)
                    .outcome(bad.is_empty(), format!("{bad:?}")),
            );
        }
    }

    let reference = "energies ±√8 at t = 0, J = 1 to 30 digits";
    let check = Check::new("spectra", "t = 0, J = 1 even energies", reference);
    out.push(check.from_result(spectra::qes_energies(&int(0), 1, Parity::Even, &eps), |levels| {
        let digits: Vec<String> = levels
            .iter()
            .map(|l| sturm::certified_decimal(&l.minimal_poly, &l.interval, 30).unwrap_or_default())
            .collect();
        let ok = digits
            == [
                "-2.828427124746190097603377448419",
                "2.828427124746190097603377448419",
            ];
        (ok, digits.join(", "))
    }));

    let reference = "max |-ψ'' + (V - E)ψ| ≤ 1e-25 on [-3, 3] at 128 bits";
    let grid = spectra::uniform_grid(&int(-3), &int(3), 120);
    let tol = rational::parse("1e-25").expect("literal");
    for parity in [Parity::Even, Parity::Odd] {
        let check = Check::new("spectra", format!("{} residual at t = 0, J = 1", parity.name()), reference);
        out.push(check.from_result(spectra::qes_energies(&int(0), 1, parity, &eps), |levels| {
            let v = spectra::scaled_potential(&int(0), 1, parity);
            let worst = levels
                .iter()
                .map(|l| numeric::to_rational(&spectra::schrodinger_residual_numeric(&v, &l.value, &l.chi(), &grid, numeric::DEFAULT_PRECISION_BITS)))
                .max()
                .unwrap_or_else(Rational::zero);
            (worst <= tol, format!("max residual {}", rational::to_decimal(&worst, 40)))
        }));
    }

    let reference = "level k has 2k (even) or 2k + 1 (odd) nodes";
    let grid = spectra::uniform_grid(&int(-4), &int(4), 100);
    for parity in [Parity::Even, Parity::Odd] {
        let check = Check::new("spectra", format!("{} node counts at t = 0, J = 2", parity.name()), reference);
        out.push(check.from_result(spectra::qes_energies(&int(0), 2, parity, &eps), |levels| {
            let nodes: Vec<usize> = levels
                .iter()
                .map(|l| spectra::count_nodes(&spectra::wavefunction_samples(l, &int(0), &grid, numeric::DEFAULT_PRECISION_BITS)))
                .collect();
            let ok = levels.iter().zip(&nodes).all(|(l, n)| *n == l.expected_nodes());
            (ok, format!("nodes {nodes:?}"))
        }));
    }
    out
}

/// `χ'' - λ₀χ' - s₀χ` is a single monomial times the terminating
/// polynomial, for symbolic `b`.
pub fn ode_residual(n_max: usize) -> Vec<Check> {
    let reference = "χ'' - λ₀χ' - s₀χ ∝ x^m × terminating polynomial";
    let mut out = Vec::new();
    for parity in [Parity::Even, Parity::Odd] {
        for n in 0..=n_max {
            let check = Check::new("residual", format!("{} n = {n}", parity.name()), reference);
            out.push(check.from_result(
                spectra::ode_residual_symbolic(parity, &int(1), &Poly::var(Var::B), n),
                |r| (true, format!("R = {} · {} · x^{}", r.ratio, FamilyKind::general(parity).label(n + 1), r.degree)),
            ));
        }
    }
    out
}

/// Quantization polynomials from the iteration equal the monic constraint
/// polynomials, symbolic `t`, `J = 0..=j_max`.
pub fn aim_cross(j_max: usize) -> Vec<Check> {
    let reference = "x-content of δ_n equals monic F_{J+1}";
    let t = Poly::var(Var::T);
    let mut out = Vec::new();
    for parity in [Parity::Even, Parity::Odd] {
        for jv in 0..=j_max {
            let check = Check::new("aim-cross", format!("{} J = {jv}", parity.name()), reference);
            out.push(check.from_result(aim::aim_cross_check(&t, jv, parity), |c| {
                (
                    c.agrees(),
                    format!(
                        "iteration {}; anchored δ divisible by F_{{J+1}}: {}",
                        c.iteration, c.anchored_divisible
                    ),
                )
            }));
        }
    }
    out
}

/// Exact correspondence at `(0, 0)` and `(2, 1)`, float at `(1, 0)`, and the
/// symbolic shift condition.
pub fn meixner_checks(count: usize, bits: usize) -> Vec<Check> {
    let reference = "(2w)^{-n} F_n(2wE) obeys the Meixner recurrence";
    let mut out = Vec::new();
    for parity in [Parity::Even, Parity::Odd] {
        for (t, i) in [(0, 0), (2, 1), (1, 0)] {
            let check = Check::new("meixner", format!("{} t = {t}, i = {i}, N = {count}", parity.name()), reference);
            out.push(check.from_result(
                meixner::meixner_correspondence_check(&int(t), &int(i), parity, count, bits),
                |r| match r.mode {
                    CheckMode::Exact => (true, String::from("exact")),
                    CheckMode::Float { max_relative, .. } => (
                        true,
                        format!("float, max relative {}", rational::to_decimal(&max_relative, 45)),
                    ),
                },
            ));
        }
        let check = Check::new("meixner", format!("{} 2f = dη, symbolic t, i", parity.name()), reference);
        out.push(check.from_result(meixner::shift_condition_symbolic(parity), |ok| (ok, String::new())));
    }
    out
}

/// `G_m(αE) = 2^m α^{3m} F_m(E)` for `α = a^{1/4}`, symbolic `t` and `J`.
pub fn scaling(a_quarter: &Rational, n_max: usize) -> Vec<Check> {
    let reference = "P_n(a, b, c) = 2^n a^{3n/4} P_n^(t)(a^{-1/4} E)";
    let (t, j) = sym();
    let alpha = Poly::from(a_quarter);
    let mut out = Vec::new();
    for parity in [Parity::Even, Parity::Odd] {
        let check = Check::new(
            "scaling",
            format!("{} a = {}, n ≤ {n_max}", parity.name(), a_quarter * a_quarter * a_quarter * a_quarter),
            reference,
        );
        let a2 = &alpha * &alpha;
        let c = &(&(&t * &t) - &(&j.scale(&int(4)) + &Poly::from(parity.c_offset()))) * &a2;
        let b = &(&t * &a2) * &alpha.scale(&int(2));
        let params = FamilyParams::general(a2.clone(), b, c);
        let result = gen_family(FamilyKind::general(parity), &params, n_max + 1).and_then(|g| {
            let f = gen_family(FamilyKind::scaled(parity), &FamilyParams::scaled(t.clone(), j.clone()), n_max + 1)?;
            Ok((g, f))
        });
        out.push(check.from_result(result, |(g, f)| {
            let stretched = Poly::var(Var::E).scale(a_quarter);
            let bad: Vec<usize> = (0..=n_max)
                .filter(|&m| {
                    let factor = num_traits::pow(int(2) * a_quarter * a_quarter * a_quarter, m);
                    g[m].substitute(Var::E, &stretched) != f[m].scale(&factor)
                })
                .collect();
            (bad.is_empty(), format!("mismatched members {bad:?}"))
        }));
    }
    let check = Check::new("scaling", "energies scale by a^{1/4}", reference);
    let eps = rational::parse("1e-12").expect("literal");
    let result = (|| {
        for parity in [Parity::Even, Parity::Odd] {
            for jv in 0..=2 {
                spectra::scaled_general_consistency(a_quarter, &ratio(1, 2), jv, parity, &eps)?;
            }
        }
        Ok(())
    })();
    out.push(check.from_result(result, |()| (true, String::from("J ≤ 2, t = 1/2"))));
    out
}

/// The scaled families at `t = 0` are the Bender–Dunne polynomials with
/// `J_BD = J + 1` and `s = 1/4` (even) or `3/4` (odd).
pub fn bender_dunne(n_max: usize) -> Vec<Check> {
    let reference = "scaled families at t = 0 reduce to Bender–Dunne";
    let j = Poly::var(Var::J);
    [(Parity::Even, ratio(1, 4)), (Parity::Odd, ratio(3, 4))]
        .into_iter()
        .map(|(parity, s)| {
            let check = Check::new("bender-dunne", format!("{} s = {s}, n ≤ {n_max}", parity.name()), reference);
            let result = gen_family(FamilyKind::scaled(parity), &FamilyParams::scaled(int(0), j.clone()), n_max + 1)
                .and_then(|f| {
                    let bd = gen_family(
                        FamilyKind::BenderDunne,
                        &FamilyParams::bender_dunne(s.clone(), &j + &Poly::one()),
                        n_max + 1,
                    )?;
                    Ok((f, bd))
                });
            check.from_result(result, |(f, bd)| (f == bd, String::from("J_BD = J + 1")))
        })
        .collect()
}

/// Every suite at size `n`.
pub fn run_all(n: usize) -> Vec<Check> {
    Suite::ALL.iter().flat_map(|s| s.run(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_pass(checks: &[Check]) {
        for c in checks {
            assert!(c.passed, "{} {}: {}", c.suite, c.name, c.detail);
        }
    }

    #[test]
    fn golden_lists() {
        let g = golden_scaled();
        all_pass(&g);
        let p4 = g.iter().find(|c| c.name == "P_4^(t)").unwrap();
        assert!(p4.detail.starts_with("printed form differs"));
        let general = golden_general();
        all_pass(&general);
        let p6 = general.iter().find(|c| c.name == "P_6").unwrap();
        assert!(p6.detail.starts_with("printed form differs"));
    }

    #[test]
    fn small_suites() {
        for suite in [Suite::Norms, Suite::Factorization, Suite::Residual, Suite::Meixner, Suite::Scaling, Suite::BenderDunne] {
            all_pass(&suite.run(3));
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::from_name(s.name()), Some(s));
        }
    }
}
