//! Polynomial solutions of the Riccati equation `u' = E - V(x) + u²`.
//!
//! A polynomial solution can only be `±[√(V - E)]`, the polynomial part of
//! the square root expanded in descending powers of `x`. For the sextic
//! potential this fixes the exponent `f(x)` of the ground state
//! `ψ = exp(-f)` and reduces the eigenproblem to a linear equation for the
//! polynomial prefactor `χ(x)`.

use alloc::format;
use alloc::vec;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Poly, Var};
use crate::rational::{self, int, ratio, Rational};

/// `V(x) = a x⁶ + b x⁴ + c x²`, parameterised by `√a` so that `a^{3/2}` stays rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SexticPotential {
    sqrt_a: Rational,
    b: Rational,
    c: Rational,
}

impl SexticPotential {
    pub fn new(sqrt_a: Rational, b: Rational, c: Rational) -> Result<Self> {
        if !sqrt_a.is_positive() {
            return Err(Error::Domain(format!("sqrt_a must be positive, got {sqrt_a}")));
        }
        Ok(SexticPotential { sqrt_a, b, c })
    }

    pub fn sqrt_a(&self) -> &Rational {
        &self.sqrt_a
    }

    pub fn a(&self) -> Rational {
        &self.sqrt_a * &self.sqrt_a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    /// `V(x)` as a polynomial in `x`.
    pub fn polynomial(&self) -> Poly {
        Poly::from_rationals(
            Var::X,
            &[
                int(0),
                int(0),
                self.c.clone(),
                int(0),
                self.b.clone(),
                int(0),
                self.a(),
            ],
        )
    }

    /// `12 a^{3/2} - b² + 4ac`; the ground state `χ = 1` exists iff this vanishes.
    pub fn ground_constraint(&self) -> Rational {
        let s = &self.sqrt_a;
        int(12) * s * s * s - &self.b * &self.b + int(4) * self.a() * &self.c
    }
}

/// Which sign of `±[√(V - E)]` to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Branch {
    /// `u = +[√(V - E)]`, giving the normalisable `exp(-f)`.
    #[default]
    Decaying,
    Growing,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RiccatiSolution {
    /// `u = f'`.
    pub u: Poly,
    pub f: Poly,
    pub ground_energy: Rational,
    /// Zero exactly when `u` solves the Riccati equation at `ground_energy`.
    pub constraint_value: Rational,
}

impl RiccatiSolution {
    pub fn is_admissible(&self) -> bool {
        self.constraint_value.is_zero()
    }
}

/// Polynomial part of `√P` in descending powers of the main variable of `P`.
///
/// Coefficients are matched from the top degree down: `q_m = √p_{2m}` and each
/// lower `q_k` is fixed by the coefficient of degree `m + k`. The
/// coefficients of `P` may themselves be polynomials, but the leading one must
/// be the square of a positive rational.
pub fn sqrt_poly_part(p: &Poly) -> Result<Poly> {
    let var = p.main_var().unwrap_or(Var::X);
    let coeffs = p.coeffs_in(var);
    if coeffs.is_empty() {
        return Err(Error::Domain("square root part of the zero polynomial".into()));
    }
    let n = coeffs.len() - 1;
    if n % 2 == 1 {
        return Err(Error::Domain(format!(
            "odd degree {n}: the Riccati equation has no polynomial solution"
        )));
    }
    let m = n / 2;
    let lead = coeffs[n]
        .as_const()
        .filter(|c| c.is_positive())
        .ok_or_else(|| Error::Irrational(format!("leading coefficient {} is not a positive rational", coeffs[n])))?;
    let top = rational::sqrt_exact(lead)
        .ok_or_else(|| Error::Irrational(format!("leading coefficient {lead} is not a square")))?;
    let mut q = vec![Poly::zero(); m + 1];
    q[m] = Poly::from(&top);
    let inv_two_top = (int(2) * &top).recip();
    for k in (0..m).rev() {
        let cross: Poly = (k + 1..m).map(|i| &q[i] * &q[m + k - i]).sum();
        q[k] = (&coeffs[m + k] - &cross).scale(&inv_two_top);
    }
    Ok(Poly::from_coeffs(var, q))
}

/// Riccati solution for the sextic potential on the chosen branch.
pub fn riccati_solve_branch(v: &SexticPotential, branch: Branch) -> RiccatiSolution {
    let vx = &v.polynomial() - &Poly::var(Var::E);
    let q = sqrt_poly_part(&vx).expect("a x^6 has a rational square root");
    let sign = match branch {
        Branch::Decaying => int(1),
        Branch::Growing => int(-1),
    };
    let u = q.scale(&sign);
    // f = ∫u with f(0) = 0
    let f = Poly::from_coeffs(
        Var::X,
        core::iter::once(Poly::zero())
            .chain(
                u.coeffs_in(Var::X)
                    .into_iter()
                    .enumerate()
                    .map(|(k, c)| c.scale(&ratio(1, k as i64 + 1))),
            )
            .collect(),
    );
    let s = v.sqrt_a();
    let ground_energy = &sign * v.b() / (int(2) * s);
    let constraint_value =
        &sign * int(12) * s * s * s - v.b() * v.b() + int(4) * v.a() * v.c();
    RiccatiSolution {
        u,
        f,
        ground_energy,
        constraint_value,
    }
}

/// The physical (decaying) Riccati solution.
pub fn riccati_solve(v: &SexticPotential) -> RiccatiSolution {
    riccati_solve_branch(v, Branch::Decaying)
}

/// `u' - (E₀ - V + u²)`, the zero polynomial when `u` solves the equation.
pub fn riccati_defect(v: &SexticPotential, sol: &RiccatiSolution) -> Poly {
    let rhs = &(&Poly::from(&sol.ground_energy) - &v.polynomial()) + &(&sol.u * &sol.u);
    &sol.u.derivative(Var::X) - &rhs
}

/// Coefficients of `χ'' = λ₀ χ' + s₀ χ` after factoring out `exp(-f)`.
///
/// `λ₀ = 2(√a x³ + b/(2√a) x)`, `s₀ = b/(2√a) - E + (3√a - b²/(4a) + c) x²`,
/// with `E` left symbolic.
pub fn chi_ode_coeffs(v: &SexticPotential) -> (Poly, Poly) {
    chi_ode_coeffs_general(v.sqrt_a(), &Poly::from(v.b()), &Poly::from(v.c()))
}

/// As [`chi_ode_coeffs`] but with `b` and `c` allowed to be polynomials.
pub fn chi_ode_coeffs_general(sqrt_a: &Rational, b: &Poly, c: &Poly) -> (Poly, Poly) {
    let s = Poly::from(sqrt_a);
    let half_b_over_s = b.scale(&(int(2) * sqrt_a).recip());
    let lambda0 = Poly::from_coeffs(
        Var::X,
        vec![Poly::zero(), half_b_over_s.scale(&int(2)), Poly::zero(), s.scale(&int(2))],
    );
    let kappa = &(&s.scale(&int(3)) - &(b * b).scale(&(int(4) * sqrt_a * sqrt_a).recip())) + c;
    let s0 = Poly::from_coeffs(
        Var::X,
        vec![&half_b_over_s - &Poly::var(Var::E), Poly::zero(), kappa],
    );
    (lambda0, s0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    fn pot(s: i64, b: i64, c: i64) -> SexticPotential {
        SexticPotential::new(int(s), int(b), int(c)).unwrap()
    }

    #[test]
    fn sqrt_part_examples() {
        assert_eq!(sqrt_poly_part(&p("x^6 - 4x^4 + 7x^2 - 2")).unwrap(), p("x^3 - 2x"));
        assert_eq!(sqrt_poly_part(&p("x^2")).unwrap(), p("x"));
        assert_eq!(sqrt_poly_part(&p("x^6 + 6x^4 + 9x^2 - 5")).unwrap(), p("x^3 + 3x"));
    }

    #[test]
    fn sqrt_part_errors() {
        assert!(matches!(sqrt_poly_part(&p("x^5 + 1")), Err(Error::Domain(_))));
        assert!(matches!(sqrt_poly_part(&p("2x^2")), Err(Error::Irrational(_))));
        assert!(matches!(sqrt_poly_part(&p("-x^2")), Err(Error::Irrational(_))));
        assert!(matches!(sqrt_poly_part(&p("t*x^2")), Err(Error::Irrational(_))));
    }

    #[test]
    fn worked_riccati_example_checks_out() {
        // u' = 2 - 7x² + 4x⁴ - x⁶ + u² is solved by u = -(x³ - 2x)
        let u = p("-(x^3 - 2x)");
        let lhs = u.derivative(Var::X);
        let rhs = &p("2 - 7x^2 + 4x^4 - x^6") + &(&u * &u);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn solve_admissible_potentials() {
        let sol = riccati_solve(&pot(1, 2, -2));
        assert_eq!(sol.u, p("x^3 + x"));
        assert_eq!(sol.f, p("x^4/4 + x^2/2"));
        assert_eq!(sol.ground_energy, int(1));
        assert!(sol.is_admissible());
        assert!(riccati_defect(&pot(1, 2, -2), &sol).is_zero());

        let sol = riccati_solve(&pot(1, 0, -3));
        assert_eq!(sol.u, p("x^3"));
        assert_eq!(sol.ground_energy, int(0));
        assert!(sol.is_admissible());

        let sol = riccati_solve(&pot(1, 0, 0));
        assert_eq!(sol.constraint_value, int(12));
        assert!(!riccati_defect(&pot(1, 0, 0), &sol).is_zero());
    }

    #[test]
    fn growing_branch_is_available() {
        // u = -x³ solves the equation for V = x⁶ + 3x² at E = 0
        let v = pot(1, 0, 3);
        let sol = riccati_solve_branch(&v, Branch::Growing);
        assert_eq!(sol.u, p("-x^3"));
        assert!(sol.is_admissible());
        assert!(riccati_defect(&v, &sol).is_zero());
    }

    #[test]
    fn chi_ode_examples() {
        let (l0, s0) = chi_ode_coeffs(&pot(1, 0, -3));
        assert_eq!((l0, s0), (p("2x^3"), p("-E")));
        let (l0, s0) = chi_ode_coeffs(&pot(1, 2, -2));
        assert_eq!((l0, s0), (p("2x^3 + 2x"), p("1 - E")));
        let (_, s0) = chi_ode_coeffs(&pot(1, 0, 0));
        assert_eq!(s0.coeff_in(Var::X, 2), Poly::from(3));
    }

    #[test]
    fn potential_requires_positive_sqrt_a() {
        assert!(SexticPotential::new(int(0), int(1), int(1)).is_err());
        assert_eq!(pot(2, 0, 0).a(), int(4));
    }
}
