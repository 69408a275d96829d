//! Meixner polynomials of the second kind and the rescaling that maps the
//! fixed-`i` families onto them.
//!
//! The fixed-`i` families are
//! `F_{n+1} = (E - (4n+1)t)F_n - 8n(2n-1)(i+1)F_{n-1}` (even) and
//! `F_{n+1} = (E - (4n+3)t)F_n - 8n(2n+1)(i+1)F_{n-1}` (odd). They agree with
//! the scaled families under `J = n + i`, where `n - J - 1 = -(i+1)`.
//!
//! With `w = √(4i + 4 - t²)` and `k = 2w`, `M_n(E) = k^{-n} F_n(kE)` obeys
//! `M_{n+1} = (E - (2n+η)δ)M_n - (δ²+1) n(n+η-1) M_{n-1}` with `δ = t/w` and
//! `η = 1/2` (even) or `3/2` (odd). When `w` is irrational the check runs in
//! floating point.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::families::{self, Parity};
use crate::numeric::{self, Float};
use crate::poly::{Poly, Var};
use crate::rational::{self, int, Rational};

/// Parameters of the generic recurrence
/// `F_{n+1} = (E - dn - f)F_n - n(gn + h)F_{n-1}` mapped to Meixner form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeixnerParams {
    pub d: Rational,
    pub f: Rational,
    pub g: Rational,
    pub h: Rational,
    /// `σ² = 4g - d²`.
    pub sigma_sq: Rational,
    /// `δ = d/σ` when `σ` is rational.
    pub delta: Option<Rational>,
    /// `δ² = d²/σ²`, always rational.
    pub delta_sq: Rational,
    /// `η = 1 + h/g`.
    pub eta: Rational,
    /// Whether `2f = dη`, the condition that removes the constant shift.
    pub shift_condition: bool,
}

pub fn meixner_params_from_recurrence(
    d: Rational,
    f: Rational,
    g: Rational,
    h: Rational,
) -> Result<MeixnerParams> {
    if !g.is_positive() {
        return Err(Error::Domain(format!("g must be positive, got {g}")));
    }
    let sigma_sq = int(4) * &g - &d * &d;
    if !sigma_sq.is_positive() {
        return Err(Error::Domain(format!("4g - d² = {sigma_sq} is not positive")));
    }
    let eta = int(1) + &h / &g;
    let delta_sq = &d * &d / &sigma_sq;
    let delta = rational::sqrt_exact(&sigma_sq).map(|s| &d / s);
    let shift_condition = int(2) * &f == &d * &eta;
    Ok(MeixnerParams {
        d,
        f,
        g,
        h,
        sigma_sq,
        delta,
        delta_sq,
        eta,
        shift_condition,
    })
}

/// `(d, f, g, h)` of the fixed-`i` family, so that
/// `(4n+1)t = dn + f` and `8n(2n-1)(i+1) = n(gn + h)` (even).
pub fn family_recurrence_params(t: &Rational, i: &Rational, parity: Parity) -> [Rational; 4] {
    let d = int(4) * t;
    let g = int(16) * (i + int(1));
    match parity {
        Parity::Even => [d, t.clone(), g, int(-8) * (i + int(1))],
        Parity::Odd => [d, int(3) * t, g, int(8) * (i + int(1))],
    }
}

/// `2f = dη` with `t` and `i` symbolic; `i` occupies the `J` slot.
pub fn shift_condition_symbolic(parity: Parity) -> Result<bool> {
    let t = Poly::var(Var::T);
    let i1 = &Poly::var(Var::J) + &Poly::one();
    let d = t.scale(&int(4));
    let g = i1.scale(&int(16));
    let (f, h) = match parity {
        Parity::Even => (t.clone(), i1.scale(&int(-8))),
        Parity::Odd => (t.scale(&int(3)), i1.scale(&int(8))),
    };
    let eta = &Poly::one() + &h.exact_div(&g)?;
    Ok(f.scale(&int(2)) == &d * &eta)
}

/// `M_0..M_{count-1}` with `M_{-1} = 0`.
pub fn meixner_gen(delta: &Rational, eta: &Rational, count: usize) -> Result<Vec<Poly>> {
    if count == 0 {
        return Err(Error::Usage("N must be at least 1".into()));
    }
    let e = Poly::var(Var::E);
    let mut out = vec![Poly::one()];
    let mut prev = Poly::zero();
    let coupling_base = delta * delta + int(1);
    for n in 0..count.saturating_sub(1) {
        let nn = int(n as i64);
        let shift = (int(2) * &nn + eta) * delta;
        let coupling = &coupling_base * &nn * (&nn + eta - int(1));
        let cur = out.last().unwrap().clone();
        let next = &(&(&e - &Poly::from(shift)) * &cur) - &prev.scale(&coupling);
        prev = cur;
        out.push(next);
    }
    Ok(out)
}

/// `F_0..F_{count-1}` of the fixed-`i` family.
pub fn fixed_i_family(t: &Rational, i: &Rational, parity: Parity, count: usize) -> Result<Vec<Poly>> {
    if count == 0 {
        return Err(Error::Usage("N must be at least 1".into()));
    }
    let e = Poly::var(Var::E);
    let mut out = vec![Poly::one()];
    let mut prev = Poly::zero();
    for n in 0..count.saturating_sub(1) {
        let n_i = n as i64;
        let (shift, coupling) = match parity {
            Parity::Even => (int(4 * n_i + 1) * t, int(8 * n_i * (2 * n_i - 1)) * (i + int(1))),
            Parity::Odd => (int(4 * n_i + 3) * t, int(8 * n_i * (2 * n_i + 1)) * (i + int(1))),
        };
        let cur = out.last().unwrap().clone();
        let next = &(&(&e - &Poly::from(shift)) * &cur) - &prev.scale(&coupling);
        prev = cur;
        out.push(next);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckMode {
    Exact,
    /// Largest coefficient mismatch relative to the largest coefficient.
    Float { bits: usize, max_relative: Rational },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeixnerReport {
    pub t: Rational,
    pub i: Rational,
    pub parity: Parity,
    pub params: MeixnerParams,
    pub n_checked: usize,
    pub mode: CheckMode,
}

impl MeixnerReport {
    pub fn status(&self) -> &'static str {
        match self.mode {
            CheckMode::Exact => "exact",
            CheckMode::Float { .. } => "float",
        }
    }

    /// `δ` as a decimal string, exact when rational.
    pub fn delta_display(&self, digits: usize) -> String {
        match &self.params.delta {
            Some(d) => format!("{d}"),
            None => {
                let w = numeric::sqrt(&self.params.sigma_sq, 4 * digits + 64);
                let d = numeric::from_rational(&self.params.d, 4 * digits + 64) / w;
                rational::to_decimal(&numeric::to_rational(&d), digits)
            }
        }
    }
}

pub const FLOAT_TOLERANCE: &str = "1e-30";

/// Rescales the fixed-`i` family and checks it against the Meixner recurrence.
///
/// Exact when `4i + 4 - t²` is a rational square, otherwise in `bits`-bit
/// floating point with relative tolerance `10⁻³⁰`.
pub fn meixner_correspondence_check(
    t: &Rational,
    i: &Rational,
    parity: Parity,
    count: usize,
    bits: usize,
) -> Result<MeixnerReport> {
    if !families::is_natural(i) {
        return Err(Error::Usage(format!("i must be a non-negative integer, got {i}")));
    }
    let [d, f, g, h] = family_recurrence_params(t, i, parity);
    let params = meixner_params_from_recurrence(d, f, g, h)?;
    let reference = "M_n(E) = (2w)^{-n} F_n(2wE) satisfies the Meixner recurrence";
    if !params.shift_condition {
        return Err(Error::violation("2f = dη fails", reference));
    }
    let w_sq = int(4) * i + int(4) - t * t;
    let family = fixed_i_family(t, i, parity, count)?;
    let mode = match rational::sqrt_exact(&w_sq) {
        Some(w) => {
            let k = int(2) * &w;
            let delta = t / &w;
            let meixner = meixner_gen(&delta, &params.eta, count)?;
            for (n, (fam, m)) in family.iter().zip(&meixner).enumerate() {
                let mapped = fam.substitute(Var::E, &Poly::var(Var::E).scale(&k)).scale(
                    &num_traits::pow(k.clone(), n).recip(),
                );
                if &mapped != m {
                    return Err(Error::violation(
                        format!("member {n} does not map onto M_{n}"),
                        reference,
                    ));
                }
            }
            CheckMode::Exact
        }
        None => {
            let tol = rational::parse(FLOAT_TOLERANCE)?;
            let max_relative = float_check(t, &w_sq, &params.eta, &family, bits)?;
            if max_relative > tol {
                return Err(Error::violation(
                    format!("relative mismatch {} exceeds {FLOAT_TOLERANCE}", rational::to_decimal(&max_relative, 40)),
                    reference,
                ));
            }
            CheckMode::Float { bits, max_relative }
        }
    };
    Ok(MeixnerReport {
        t: t.clone(),
        i: i.clone(),
        parity,
        params,
        n_checked: count,
        mode,
    })
}

/// Coefficients lowest first, in floating point.
fn float_coeffs(p: &Poly, bits: usize) -> Vec<Float> {
    p.coeffs_in(Var::E)
        .iter()
        .map(|c| numeric::from_rational(c.as_const().expect("numeric"), bits))
        .collect()
}

fn float_check(
    t: &Rational,
    w_sq: &Rational,
    eta: &Rational,
    family: &[Poly],
    bits: usize,
) -> Result<Rational> {
    let fl = |r: &Rational| numeric::from_rational(r, bits);
    let w = numeric::sqrt(w_sq, bits);
    let k = fl(&int(2)) * &w;
    let delta = fl(t) / &w;
    let coupling_base = &delta * &delta + fl(&int(1));

    let mut meixner: Vec<Vec<Float>> = vec![vec![fl(&int(1))]];
    let mut prev: Vec<Float> = Vec::new();
    for n in 0..family.len().saturating_sub(1) {
        let nn = int(n as i64);
        let shift = fl(&(int(2) * &nn + eta)) * &delta;
        let coupling = &coupling_base * fl(&(&nn * (&nn + eta - int(1))));
        let cur = meixner.last().unwrap().clone();
        let mut next = vec![fl(&int(0)); cur.len() + 1];
        for (m, c) in cur.iter().enumerate() {
            next[m + 1] = &next[m + 1] + c;
            next[m] = &next[m] - &shift * c;
        }
        for (m, c) in prev.iter().enumerate() {
            next[m] = &next[m] - &coupling * c;
        }
        prev = cur;
        meixner.push(next);
    }

    let mut worst = int(0);
    for (n, fam) in family.iter().enumerate() {
        let coeffs = float_coeffs(fam, bits);
        let scale = coeffs
            .iter()
            .enumerate()
            .map(|(m, c)| {
                // k^{m-n} F_{n,m}
                let mut v = c.clone();
                for _ in m..n {
                    v = v / &k;
                }
                numeric::to_rational(&v)
            })
            .collect::<Vec<_>>();
        let target: Vec<Rational> = meixner[n].iter().map(numeric::to_rational).collect();
        let magnitude = target.iter().map(|x| x.abs()).max().unwrap_or_else(Rational::zero);
        for (a, b) in scale.iter().zip(&target) {
            let diff = (a - b).abs();
            let rel = if magnitude.is_zero() { diff } else { diff / &magnitude };
            if rel > worst {
                worst = rel;
            }
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    #[test]
    fn params_examples() {
        let t = Rational::from_integer(7.into());
        for (parity, eta) in [(Parity::Even, ratio(1, 2)), (Parity::Odd, ratio(3, 2))] {
            let [d, f, g, h] = family_recurrence_params(&ratio(1, 3), &int(2), parity);
            let m = meixner_params_from_recurrence(d, f, g, h).unwrap();
            assert_eq!(m.eta, eta);
            assert_eq!(m.sigma_sq, int(16) * (int(12) - ratio(1, 9)));
            assert!(m.shift_condition);
            assert!(shift_condition_symbolic(parity).unwrap());
        }
        let m = meixner_params_from_recurrence(int(0), int(0), int(1), int(0)).unwrap();
        assert_eq!((m.delta, m.eta), (Some(int(0)), int(1)));
        assert!(matches!(
            meixner_params_from_recurrence(int(4) * &t, t.clone(), int(1), int(0)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn meixner_members() {
        let m = meixner_gen(&int(0), &ratio(1, 2), 3).unwrap();
        assert_eq!(m[1], p("E"));
        assert_eq!(m[2], p("E^2 - 1/2"));
        assert_eq!(meixner_gen(&int(1), &ratio(1, 2), 2).unwrap()[1], p("E - 1/2"));
        assert!(meixner_gen(&int(0), &int(1), 0).is_err());
    }

    #[test]
    fn exact_correspondence() {
        for parity in [Parity::Even, Parity::Odd] {
            let r = meixner_correspondence_check(&int(0), &int(0), parity, 4, 128).unwrap();
            assert_eq!(r.mode, CheckMode::Exact);
            let r = meixner_correspondence_check(&int(2), &int(1), parity, 5, 128).unwrap();
            assert_eq!(r.mode, CheckMode::Exact);
            assert_eq!(r.params.delta, Some(int(1)));
        }
        let fam = fixed_i_family(&int(0), &int(0), Parity::Even, 3).unwrap();
        assert_eq!(fam[2], p("E^2 - 8"));
    }

    #[test]
    fn float_correspondence() {
        let r = meixner_correspondence_check(&int(1), &int(0), Parity::Even, 6, 128).unwrap();
        match &r.mode {
            CheckMode::Float { max_relative, .. } => {
                assert!(*max_relative <= rational::parse("1e-30").unwrap())
            }
            CheckMode::Exact => panic!("w = √3 is irrational"),
        }
        assert!(r.delta_display(10).starts_with("0.57735026"));
    }

    #[test]
    fn domain_error_outside_range() {
        assert!(matches!(
            meixner_correspondence_check(&int(3), &int(0), Parity::Even, 3, 128),
            Err(Error::Domain(_))
        ));
    }
}
