//! Exact QES energies and the wavefunctions built on them.
//!
//! Energies are the real roots of the constraint polynomial `F_{J+1}` of the
//! scaled family, isolated and refined with exact rationals. Wavefunctions use
//! the scaled potential `V = x⁶ + 2t x⁴ + (t² - 4J - k) x²` with `k = 3` for even
//! and `k = 5` for odd states, so that `ψ = χ(x) exp(-x⁴/4 - t x²/2)`.
//!
//! Level indices are internal to the sector: level `k` of the even sector has
//! `2k` nodes and level `k` of the odd sector has `2k + 1`.

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::families::{self, chi_assemble, gen_family, FamilyKind, FamilyParams, Parity};
use crate::numeric::{self, Float};
use crate::poly::{Poly, Var};
use crate::rational::{self, int, Rational};
use crate::riccati::{self, chi_ode_coeffs_general, SexticPotential};
use crate::sturm::{self, IsolatingInterval};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralResult {
    pub level_index: usize,
    pub parity: Parity,
    /// `F_{J+1}` at the given `t`, a polynomial in `E`.
    pub minimal_poly: Poly,
    /// Certified bracket of width at most `eps`.
    pub interval: IsolatingInterval,
    pub value: Rational,
    /// `χ` coefficients in `x`, lowest degree first, at `E = value`.
    pub chi_coeffs: Vec<Rational>,
}

impl SpectralResult {
    pub fn chi(&self) -> Poly {
        Poly::from_rationals(Var::X, &self.chi_coeffs)
    }

    /// Nodes expected for this level.
    pub fn expected_nodes(&self) -> usize {
        match self.parity {
            Parity::Even => 2 * self.level_index,
            Parity::Odd => 2 * self.level_index + 1,
        }
    }
}

/// `V(x) = x⁶ + 2t x⁴ + (t² - 4J - k) x²` carrying the sector of size `J + 1`.
pub fn scaled_potential(t: &Rational, j: usize, parity: Parity) -> SexticPotential {
    let c = t * t - int(4 * j as i64 + parity.c_offset());
    SexticPotential::new(int(1), int(2) * t, c).expect("sqrt_a = 1")
}

/// `χ` for the general family at `√a = 1`, `b = 2t`, with `E` left symbolic.
fn chi_symbolic(t: &Rational, j: usize, parity: Parity) -> Result<Poly> {
    let v = scaled_potential(t, j, parity);
    let params = FamilyParams::general(int(1), v.b().clone(), v.c().clone());
    let family = gen_family(FamilyKind::general(parity), &params, j + 1)?;
    chi_assemble(parity, &family, j, &int(1))
}

/// The `J + 1` energies of one parity sector, ascending.
pub fn qes_energies(
    t: &Rational,
    j: usize,
    parity: Parity,
    eps: &Rational,
) -> Result<Vec<SpectralResult>> {
    if !eps.is_positive() {
        return Err(Error::Usage("eps must be positive".into()));
    }
    let family = gen_family(
        FamilyKind::scaled(parity),
        &FamilyParams::scaled(t.clone(), j as i64),
        j + 2,
    )?;
    let minimal = family[j + 1].clone();
    let intervals = sturm::sturm_isolate(&minimal)?;
    if intervals.len() != j + 1 {
        return Err(Error::violation(
            format!("{} has {} real roots, expected {}", FamilyKind::scaled(parity).label(j + 1), intervals.len(), j + 1),
            "real zeros of the constraint polynomial",
        ));
    }
    let chi = chi_symbolic(t, j, parity)?;
    intervals
        .iter()
        .enumerate()
        .map(|(level_index, iv)| {
            let (bracket, exact) = sturm::refine_bracket(&minimal, iv, eps)?;
            let value = exact.unwrap_or_else(|| bracket.midpoint());
            let chi_coeffs = chi
                .coeffs_in(Var::X)
                .iter()
                .map(|c| c.eval_rational(&[(Var::E, value.clone())]))
                .collect::<Result<Vec<_>>>()?;
            Ok(SpectralResult {
                level_index,
                parity,
                minimal_poly: minimal.clone(),
                interval: bracket,
                value,
                chi_coeffs,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WaveSample {
    pub x: Rational,
    /// `ψ(x)` rounded to the working precision.
    pub psi: Rational,
}

/// `ψ(x) = χ(x) exp(-x⁴/4 - t x²/2)` on a grid.
pub fn wavefunction_samples(
    res: &SpectralResult,
    t: &Rational,
    grid: &[Rational],
    bits: usize,
) -> Vec<WaveSample> {
    let chi = res.chi();
    let f = Poly::from_rationals(
        Var::X,
        &[int(0), int(0), t / int(2), int(0), rational::ratio(1, 4)],
    );
    grid.iter()
        .map(|x| {
            let at = [(Var::X, x.clone())];
            let chi_x = chi.eval_rational(&at).expect("univariate in x");
            let f_x = f.eval_rational(&at).expect("univariate in x");
            let weight = numeric::exp(&-numeric::from_rational(&f_x, bits));
            let psi = numeric::from_rational(&chi_x, bits) * weight;
            WaveSample {
                x: x.clone(),
                psi: numeric::to_rational(&psi),
            }
        })
        .collect()
}

/// Sign changes along the samples, skipping exact zeros.
pub fn count_nodes(samples: &[WaveSample]) -> usize {
    let mut last = Ordering::Equal;
    let mut nodes = 0;
    for s in samples {
        let sign = rational::sign(&s.psi);
        if sign == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && sign != last {
            nodes += 1;
        }
        last = sign;
    }
    nodes
}

/// `n + 1` evenly spaced points from `lo` to `hi`.
pub fn uniform_grid(lo: &Rational, hi: &Rational, n: usize) -> Vec<Rational> {
    let step = (hi - lo) / int(n.max(1) as i64);
    (0..=n).map(|k| lo + &step * int(k as i64)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OdeResidual {
    /// `R = χ'' - λ₀χ' - s₀χ`.
    pub residual: Poly,
    /// The single power of `x` present in `R`.
    pub degree: usize,
    /// `R = ratio · terminating · x^degree`.
    pub ratio: Rational,
    pub terminating: Poly,
}

/// Substitutes `χ` into its own ODE with `E` symbolic and shows that the
/// residual is a single monomial carrying the terminating polynomial.
///
/// `c` is fixed by the constraint at index `n`; `b` may be symbolic.
pub fn ode_residual_symbolic(
    parity: Parity,
    sqrt_a: &Rational,
    b: &Poly,
    n: usize,
) -> Result<OdeResidual> {
    let c = families::gen_constraint_c_poly(parity, sqrt_a, b, n);
    let params = FamilyParams::general(sqrt_a.clone(), b.clone(), c.clone());
    let family = gen_family(FamilyKind::general(parity), &params, n + 2)?;
    let chi = chi_assemble(parity, &family, n, sqrt_a)?;
    let (lambda0, s0) = chi_ode_coeffs_general(sqrt_a, b, &c);
    let residual = &(&chi.derivative(Var::X).derivative(Var::X)
        - &(&lambda0 * &chi.derivative(Var::X)))
        - &(&s0 * &chi);
    let degree = match parity {
        Parity::Even => 2 * n,
        Parity::Odd => 2 * n + 1,
    };
    let reference = "χ'' = λ₀χ' + s₀χ with the terminating constraint";
    let coeffs = residual.coeffs_in(Var::X);
    if coeffs
        .iter()
        .enumerate()
        .any(|(k, c)| k != degree && !c.is_zero())
    {
        return Err(Error::violation(
            format!("residual has powers of x other than x^{degree}"),
            reference,
        ));
    }
    let top = residual.coeff_in(Var::X, degree);
    let terminating = family[n + 1].clone();
    let (q, r) = top.divrem(&terminating)?;
    let ratio = match q.as_const() {
        Some(q) if r.is_zero() && !q.is_zero() => q.clone(),
        _ => {
            return Err(Error::violation(
                format!(
                    "x^{degree} coefficient is not a rational multiple of {}",
                    FamilyKind::general(parity).label(n + 1)
                ),
                reference,
            ))
        }
    };
    Ok(OdeResidual {
        residual,
        degree,
        ratio,
        terminating,
    })
}

/// `e^{f} (-ψ'' + (V - E)ψ)` for `ψ = χ e^{-f}` with `f = ∫u` from the
/// decaying Riccati branch:
/// `-χ'' + 2f'χ' + (f'' - f'² + V - E)χ`. Exact; zero iff `ψ` is an eigenfunction.
pub fn schrodinger_residual_exact(v: &SexticPotential, e: &Rational, chi: &Poly) -> Poly {
    let u = riccati::riccati_solve(v).u;
    let d1 = chi.derivative(Var::X);
    let d2 = d1.derivative(Var::X);
    let potential = &(&(&u.derivative(Var::X) - &(&u * &u)) + &v.polynomial()) - &Poly::from(e);
    &(&(-d2) + &(&u * &d1).scale(&int(2))) + &(&potential * chi)
}

/// `max |-ψ'' + Vψ - Eψ|` over the grid. The polynomial part is exact; only
/// the factor `e^{-f}` is evaluated in floating point.
pub fn schrodinger_residual_numeric(
    v: &SexticPotential,
    e: &Rational,
    chi: &Poly,
    grid: &[Rational],
    bits: usize,
) -> Float {
    let r = schrodinger_residual_exact(v, e, chi);
    let f = riccati::riccati_solve(v).f;
    grid.iter()
        .map(|x| {
            let at = [(Var::X, x.clone())];
            let rx = r.eval_rational(&at).expect("univariate in x").abs();
            let fx = f.eval_rational(&at).expect("univariate in x");
            numeric::from_rational(&rx, bits) * numeric::exp(&-numeric::from_rational(&fx, bits))
        })
        .fold(numeric::from_rational(&int(0), bits), |acc, r| if r > acc { r } else { acc })
}

/// `max |ψ|` over the grid.
pub fn psi_max(v: &SexticPotential, chi: &Poly, grid: &[Rational], bits: usize) -> Float {
    let f = riccati::riccati_solve(v).f;
    grid.iter()
        .map(|x| {
            let at = [(Var::X, x.clone())];
            let cx = chi.eval_rational(&at).expect("univariate in x").abs();
            let fx = f.eval_rational(&at).expect("univariate in x");
            numeric::from_rational(&cx, bits) * numeric::exp(&-numeric::from_rational(&fx, bits))
        })
        .fold(numeric::from_rational(&int(0), bits), |acc, r| if r > acc { r } else { acc })
}

/// Checks that the sector energies of `(a, b, c)` from the scale map are
/// `a^{1/4}` times the scaled energies: each scaled bracket, stretched by
/// `a^{1/4}`, must certify a root of the general constraint polynomial and
/// the root counts must agree.
pub fn scaled_general_consistency(
    a_quarter: &Rational,
    t: &Rational,
    j: usize,
    parity: Parity,
    eps: &Rational,
) -> Result<()> {
    let reference = "E(a, b, c) = a^{1/4} E(t)";
    let map = families::ScaleMap::new(a_quarter.clone(), t.clone(), int(j as i64))?;
    let v = map.forward_for(parity);
    let params = FamilyParams::general(v.sqrt_a().clone(), v.b().clone(), v.c().clone());
    let general = gen_family(FamilyKind::general(parity), &params, j + 2)?;
    let g = &general[j + 1];
    let scaled = qes_energies(t, j, parity, eps)?;
    if sturm::count_real_roots(g)? != scaled.len() {
        return Err(Error::violation("root counts differ", reference));
    }
    for level in &scaled {
        let lo = a_quarter * &level.interval.lo;
        let hi = a_quarter * &level.interval.hi;
        if sturm::count_roots_in(g, &lo, &hi)? != 1 {
            return Err(Error::violation(
                format!("level {} does not scale", level.level_index),
                reference,
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{parse, ratio, to_decimal};

    fn eps30() -> Rational {
        parse("1e-30").unwrap()
    }

    #[test]
    fn energies_at_t0_j1() {
        let levels = qes_energies(&int(0), 1, Parity::Even, &eps30()).unwrap();
        assert_eq!(levels.len(), 2);
        assert_eq!(levels[0].minimal_poly, Poly::parse("E^2 - 8").unwrap());
        let iv = &levels[1].interval;
        assert!(&iv.lo * &iv.lo < int(8) && &iv.hi * &iv.hi > int(8));
        let digits = |l: &SpectralResult| {
            sturm::certified_decimal(&l.minimal_poly, &l.interval, 30).unwrap()
        };
        assert_eq!(digits(&levels[1]), "2.828427124746190097603377448419");
        assert_eq!(digits(&levels[0]), "-2.828427124746190097603377448419");
        assert!(levels[1].interval.width() <= eps30());
    }

    #[test]
    fn ground_state_is_exact() {
        let levels = qes_energies(&ratio(3, 2), 0, Parity::Even, &eps30()).unwrap();
        assert_eq!(levels[0].value, ratio(3, 2));
        assert_eq!(levels[0].chi_coeffs, [int(1)]);
        let v = scaled_potential(&ratio(3, 2), 0, Parity::Even);
        assert!(schrodinger_residual_exact(&v, &levels[0].value, &levels[0].chi()).is_zero());
        let psi = wavefunction_samples(&levels[0], &ratio(3, 2), &[int(0)], 128);
        assert_eq!(psi[0].psi, int(1));
    }

    #[test]
    fn energies_at_t1_j1() {
        // 3 ± 2√3
        let levels = qes_energies(&int(1), 1, Parity::Even, &eps30()).unwrap();
        assert!(to_decimal(&levels[0].value, 20).starts_with("-0.4641016151377545870"));
        assert!(to_decimal(&levels[1].value, 20).starts_with("6.4641016151377545870"));
    }

    #[test]
    fn odd_wavefunction_vanishes_at_origin() {
        let levels = qes_energies(&int(0), 1, Parity::Odd, &eps30()).unwrap();
        let psi = wavefunction_samples(&levels[0], &int(0), &[int(0), int(1)], 128);
        assert!(psi[0].psi.is_zero());
        assert!(!psi[1].psi.is_zero());
    }

    #[test]
    fn node_counts_follow_level() {
        let grid = uniform_grid(&int(-4), &int(4), 100);
        for parity in [Parity::Even, Parity::Odd] {
            for level in qes_energies(&int(0), 2, parity, &eps30()).unwrap() {
                let psi = wavefunction_samples(&level, &int(0), &grid, 128);
                assert_eq!(count_nodes(&psi), level.expected_nodes());
            }
        }
    }

    #[test]
    fn residual_is_tiny_for_refined_energy_and_large_for_wrong_one() {
        let grid = uniform_grid(&int(-3), &int(3), 60);
        let v = scaled_potential(&int(0), 1, Parity::Even);
        let level = &qes_energies(&int(0), 1, Parity::Even, &eps30()).unwrap()[1];
        let r = numeric::to_rational(&schrodinger_residual_numeric(&v, &level.value, &level.chi(), &grid, 128));
        assert!(r <= parse("1e-25").unwrap());
        let wrong = &level.value + parse("1e-3").unwrap();
        let r = numeric::to_rational(&schrodinger_residual_numeric(&v, &wrong, &level.chi(), &grid, 128));
        let scale = numeric::to_rational(&psi_max(&v, &level.chi(), &grid, 128));
        assert!(r >= parse("1e-4").unwrap() * scale);
    }

    #[test]
    fn symbolic_residual_small_cases() {
        let b = Poly::var(Var::B);
        let r = ode_residual_symbolic(Parity::Even, &int(1), &b, 0).unwrap();
        assert_eq!(r.degree, 0);
        assert_eq!(r.ratio, ratio(1, 2));
        assert_eq!(r.residual, Poly::parse("E - b/2").unwrap());
        let r = ode_residual_symbolic(Parity::Even, &int(1), &b, 1).unwrap();
        assert_eq!(r.degree, 2);
        let r = ode_residual_symbolic(Parity::Odd, &int(1), &b, 0).unwrap();
        assert_eq!(r.degree, 1);
        assert_eq!(r.ratio, ratio(1, 2));
    }

    #[test]
    fn general_energies_scale() {
        scaled_general_consistency(&int(2), &int(1), 2, Parity::Even, &parse("1e-10").unwrap()).unwrap();
        scaled_general_consistency(&int(2), &ratio(-1, 2), 1, Parity::Odd, &parse("1e-10").unwrap()).unwrap();
    }

    #[test]
    fn energies_move_continuously() {
        let eps = parse("1e-12").unwrap();
        let a = qes_energies(&int(1), 2, Parity::Even, &eps).unwrap();
        let b = qes_energies(&(int(1) + parse("1e-3").unwrap()), 2, Parity::Even, &eps).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert!((&x.value - &y.value).abs() < parse("1e-1").unwrap());
        }
    }
}
