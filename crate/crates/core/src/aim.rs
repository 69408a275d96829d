//! Asymptotic iteration method for `χ'' = λ₀χ' + s₀χ`.
//!
//! `λ_n = λ'_{n-1} + s_{n-1} + λ₀λ_{n-1}` and `s_n = s'_{n-1} + s₀λ_{n-1}`;
//! the iteration terminates when `δ_n = s_nλ_{n-1} - s_{n-1}λ_n` vanishes.
//!
//! For the sextic problem `δ_n` evaluated at a single anchor `x0` carries the
//! constraint polynomial together with spurious factors that depend on the
//! anchor. The anchor-free quantization polynomial is the content of `δ_n`
//! in `x`, i.e. the gcd of its `x`-coefficients; it first equals the monic
//! constraint polynomial `F_{J+1}` at iteration `max(1, 2J)` (even) or
//! `2J + 1` (odd) and is unchanged afterwards.
//!
//! Degrees grow linearly: `deg_x λ_n = 3(n + 1)` and `deg_x s_n = 3n + 2`
//! for `λ₀ = 2x³ + 2tx`.

use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::families::{gen_family, FamilyKind, FamilyParams, Parity};
use crate::poly::{Poly, Var};
use crate::rational::{int, Rational};
use crate::riccati::chi_ode_coeffs_general;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AimState {
    pub n: usize,
    pub lambda: Poly,
    pub s: Poly,
}

impl AimState {
    /// The state after this one.
    pub fn next(&self, lambda0: &Poly, s0: &Poly) -> AimState {
        AimState {
            n: self.n + 1,
            lambda: &(&self.lambda.derivative(Var::X) + &self.s) + &(lambda0 * &self.lambda),
            s: &self.s.derivative(Var::X) + &(s0 * &self.lambda),
        }
    }
}

/// States `0..=n_max`; state 0 holds `(λ₀, s₀)` themselves.
pub fn aim_iterate(lambda0: &Poly, s0: &Poly, n_max: usize) -> Result<Vec<AimState>> {
    if lambda0.is_zero() {
        return Err(Error::Domain("λ₀ must not vanish".into()));
    }
    if n_max == 0 {
        return Err(Error::Usage("need at least one iteration".into()));
    }
    let mut states = Vec::with_capacity(n_max + 1);
    states.push(AimState {
        n: 0,
        lambda: lambda0.clone(),
        s: s0.clone(),
    });
    for _ in 0..n_max {
        let next = states.last().unwrap().next(lambda0, s0);
        states.push(next);
    }
    Ok(states)
}

/// `δ_n(x) = s_nλ_{n-1} - s_{n-1}λ_n` as a polynomial in `x`.
pub fn delta(state: &AimState, prev: &AimState) -> Result<Poly> {
    if state.n != prev.n + 1 {
        return Err(Error::Usage(format!(
            "states {} and {} are not consecutive",
            prev.n, state.n
        )));
    }
    Ok(&(&state.s * &prev.lambda) - &(&prev.s * &state.lambda))
}

/// `δ_n(x0)`, a polynomial in `E` and the remaining parameters.
pub fn aim_termination(state: &AimState, prev: &AimState, x0: &Rational) -> Result<Poly> {
    let d = delta(state, prev)?.substitute(Var::X, &Poly::from(x0));
    if d.is_zero() || !d.contains(Var::E) {
        return Err(Error::Degenerate(format!(
            "δ_{} at x = {x0} does not depend on E",
            state.n
        )));
    }
    Ok(d)
}

/// Default anchor: 0 for even problems, 1 for odd ones.
pub fn default_anchor(parity: Parity) -> Rational {
    match parity {
        Parity::Even => int(0),
        Parity::Odd => int(1),
    }
}

/// The content of `δ_n` in `x`, made monic in `E`.
pub fn quantization_polynomial(state: &AimState, prev: &AimState) -> Result<Poly> {
    let d = delta(state, prev)?;
    let content = d.content_in(Var::X);
    if !content.contains(Var::E) {
        return Err(Error::Degenerate(format!(
            "the x-content of δ_{} does not depend on E",
            state.n
        )));
    }
    monic_in_e(&content)
}

/// Divides by the leading `E`-coefficient, which must be a nonzero rational.
pub fn monic_in_e(p: &Poly) -> Result<Poly> {
    let lead = p.lead_coeff_in(Var::E);
    match lead.as_const() {
        Some(c) if !c.is_zero() => Ok(p.scale(&c.recip())),
        _ => Err(Error::Divisibility(format!(
            "leading E-coefficient {lead} is not a nonzero rational"
        ))),
    }
}

/// `(λ₀, s₀)` of the scaled problem `√a = 1`, `b = 2t`, `c = t² - 4J - k`.
pub fn scaled_problem(t: &Poly, j: &Poly, parity: Parity) -> (Poly, Poly) {
    let c = &(t * t) - &(&j.scale(&int(4)) + &Poly::from(parity.c_offset()));
    chi_ode_coeffs_general(&int(1), &t.scale(&int(2)), &c)
}

/// Iteration at which the quantization polynomial first settles.
pub fn settling_iteration(j: usize, parity: Parity) -> usize {
    match parity {
        Parity::Even => (2 * j).max(1),
        Parity::Odd => 2 * j + 1,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AimCross {
    pub iteration: usize,
    pub quantization: Poly,
    /// Monic `F_{J+1}` from the recurrence.
    pub constraint: Poly,
    /// `δ_n(x0)` at the default anchor.
    pub anchored: Poly,
    /// Whether `F_{J+1}` divides the anchored `δ_n(x0)`.
    pub anchored_divisible: bool,
}

impl AimCross {
    pub fn agrees(&self) -> bool {
        self.quantization == self.constraint
    }
}

/// Runs the iteration for the scaled problem with constraint index `J` and
/// compares its quantization polynomial with `F_{J+1}`.
pub fn aim_cross_check(t: &Poly, j: usize, parity: Parity) -> Result<AimCross> {
    let jp = Poly::from(j as i64);
    let (lambda0, s0) = scaled_problem(t, &jp, parity);
    let iteration = settling_iteration(j, parity);
    let states = aim_iterate(&lambda0, &s0, iteration)?;
    let (state, prev) = (&states[iteration], &states[iteration - 1]);
    let quantization = quantization_polynomial(state, prev)?;
    let family = gen_family(
        FamilyKind::scaled(parity),
        &FamilyParams::scaled(t.clone(), jp),
        j + 2,
    )?;
    let constraint = family[j + 1].clone();
    let anchored = aim_termination(state, prev, &default_anchor(parity))?;
    let anchored_divisible = anchored.divrem(&constraint)?.1.is_zero();
    Ok(AimCross {
        iteration,
        quantization,
        constraint,
        anchored,
        anchored_divisible,
    })
}

/// `s_n/λ_n - s_{n-1}/λ_{n-1}` at a point where every variable is bound.
pub fn ratio_condition(
    state: &AimState,
    prev: &AimState,
    bindings: &[(Var, Rational)],
) -> Result<Rational> {
    let ratio = |st: &AimState| -> Result<Rational> {
        let l = st.lambda.eval_rational(bindings)?;
        if l.is_zero() {
            return Err(Error::Degenerate(format!("λ_{} vanishes at the point", st.n)));
        }
        Ok(st.s.eval_rational(bindings)? / l)
    };
    Ok(ratio(state)? - ratio(prev)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    #[test]
    fn first_step_by_hand() {
        let states = aim_iterate(&p("2x^3"), &p("-E"), 1).unwrap();
        assert_eq!(states[1].lambda, p("6x^2 - E + 4x^6"));
        assert_eq!(states[1].s, p("-2E x^3"));
    }

    #[test]
    fn zero_s_stays_zero() {
        let states = aim_iterate(&p("2x^3 + x"), &Poly::zero(), 4).unwrap();
        assert!(states.iter().all(|s| s.s.is_zero()));
    }

    #[test]
    fn rejects_zero_lambda() {
        assert!(matches!(aim_iterate(&Poly::zero(), &p("E"), 2), Err(Error::Domain(_))));
    }

    #[test]
    fn recomputation_is_deterministic() {
        let (l0, s0) = scaled_problem(&Poly::var(Var::T), &Poly::from(1), Parity::Even);
        let states = aim_iterate(&l0, &s0, 3).unwrap();
        assert_eq!(states[2].next(&l0, &s0), states[3]);
        assert_eq!(states[3].lambda.degree_in(Var::X), Some(12));
        assert_eq!(states[3].s.degree_in(Var::X), Some(11));
    }

    #[test]
    fn first_order_terminations() {
        let t = Poly::var(Var::T);
        let (l0, s0) = scaled_problem(&t, &Poly::zero(), Parity::Even);
        let states = aim_iterate(&l0, &s0, 1).unwrap();
        // the anchor at x = 0 picks up a spurious factor E - 3t
        let d = aim_termination(&states[1], &states[0], &int(0)).unwrap();
        assert_eq!(monic_in_e(&d).unwrap(), p("(E - t)(E - 3t)"));
        let q = quantization_polynomial(&states[1], &states[0]).unwrap();
        assert_eq!(q, p("E - t"));

        let (l0, s0) = scaled_problem(&t, &Poly::zero(), Parity::Odd);
        let states = aim_iterate(&l0, &s0, 1).unwrap();
        let q = quantization_polynomial(&states[1], &states[0]).unwrap();
        assert_eq!(q, p("E - 3t"));
    }

    #[test]
    fn cross_oracle_small_j() {
        let t = Poly::var(Var::T);
        for parity in [Parity::Even, Parity::Odd] {
            for j in 0..=2 {
                let cross = aim_cross_check(&t, j, parity).unwrap();
                assert!(cross.agrees(), "{parity:?} J={j}: {}", cross.quantization);
                assert!(cross.anchored_divisible);
            }
        }
    }

    #[test]
    fn ratio_condition_at_rational_root() {
        // t = 1, J = 0: the even constraint polynomial is E - 1
        let (l0, s0) = scaled_problem(&Poly::from(1), &Poly::zero(), Parity::Even);
        let states = aim_iterate(&l0, &s0, 1).unwrap();
        let at = [(Var::X, int(1)), (Var::E, int(1))];
        assert!(ratio_condition(&states[1], &states[0], &at).unwrap().is_zero());
        let off = [(Var::X, int(1)), (Var::E, int(2))];
        assert!(!ratio_condition(&states[1], &states[0], &off).unwrap().is_zero());
    }
}
