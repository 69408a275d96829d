//! The polynomial families in the energy variable and the scaling that links them.
//!
//! Every family obeys a three-term recurrence
//!
//! ```text
//! F_{n+1} = (lead·E - shift_n) F_n + coupling_n F_{n-1},   F_0 = 1, F_{-1} = 0.
//! ```
//!
//! Lists are 0-based. Index map to the customary labels:
//!
//! | kind          | list index `n` | label                 |
//! |---------------|----------------|-----------------------|
//! | `GeneralEven` | `n`            | `P_{2n}`              |
//! | `GeneralOdd`  | `n`            | `𝒫_{2n+1}`            |
//! | `ScaledEven`  | `n`            | `P_n^{(t)}`           |
//! | `ScaledOdd`   | `n`            | `𝒫_n^{(t)}`           |
//! | `FactorEven`  | `n`            | `Q_n^{(t)}`           |
//! | `FactorOdd`   | `n`            | `𝒬_n^{(t)}`           |
//! | `BenderDunne` | `n`            | `P_n` (with `P_1 = E`)|
//!
//! The general families live in `(√a, b, c)` and are not monic (leading
//! coefficient `(2√a)^n`); all others are monic. The scaled families are
//! the general ones at `a = 1`, `b = 2t` after dividing by `2^n`; the even
//! family belongs to `c = t² - 4J - 3` and the odd family to
//! `c = t² - 4J - 5`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::poly::{Poly, Var};
use crate::rational::{self, int, ratio, Rational};
use crate::riccati::SexticPotential;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn name(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }

    /// Offset `k` in `c = t² - 4J - k` for the scaled Hamiltonian of this parity.
    pub fn c_offset(self) -> i64 {
        match self {
            Parity::Even => 3,
            Parity::Odd => 5,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    GeneralEven,
    GeneralOdd,
    ScaledEven,
    ScaledOdd,
    FactorEven,
    FactorOdd,
    BenderDunne,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 7] = [
        FamilyKind::GeneralEven,
        FamilyKind::GeneralOdd,
        FamilyKind::ScaledEven,
        FamilyKind::ScaledOdd,
        FamilyKind::FactorEven,
        FamilyKind::FactorOdd,
        FamilyKind::BenderDunne,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::GeneralEven => "general-even",
            FamilyKind::GeneralOdd => "general-odd",
            FamilyKind::ScaledEven => "scaled-even",
            FamilyKind::ScaledOdd => "scaled-odd",
            FamilyKind::FactorEven => "factor-even",
            FamilyKind::FactorOdd => "factor-odd",
            FamilyKind::BenderDunne => "bender-dunne",
        }
    }

    pub fn from_name(name: &str) -> Option<FamilyKind> {
        FamilyKind::ALL.into_iter().find(|k| k.name() == name)
    }

    pub fn scaled(parity: Parity) -> FamilyKind {
        match parity {
            Parity::Even => FamilyKind::ScaledEven,
            Parity::Odd => FamilyKind::ScaledOdd,
        }
    }

    pub fn factor(parity: Parity) -> FamilyKind {
        match parity {
            Parity::Even => FamilyKind::FactorEven,
            Parity::Odd => FamilyKind::FactorOdd,
        }
    }

    pub fn general(parity: Parity) -> FamilyKind {
        match parity {
            Parity::Even => FamilyKind::GeneralEven,
            Parity::Odd => FamilyKind::GeneralOdd,
        }
    }

    pub fn parity(self) -> Option<Parity> {
        match self {
            FamilyKind::GeneralEven | FamilyKind::ScaledEven | FamilyKind::FactorEven => {
                Some(Parity::Even)
            }
            FamilyKind::GeneralOdd | FamilyKind::ScaledOdd | FamilyKind::FactorOdd => {
                Some(Parity::Odd)
            }
            FamilyKind::BenderDunne => None,
        }
    }

    pub fn is_monic(self) -> bool {
        !matches!(self, FamilyKind::GeneralEven | FamilyKind::GeneralOdd)
    }

    /// Customary label of list entry `index`.
    pub fn label(self, index: usize) -> String {
        match self {
            FamilyKind::GeneralEven => format!("P_{}", 2 * index),
            FamilyKind::GeneralOdd => format!("𝒫_{}", 2 * index + 1),
            FamilyKind::ScaledEven => format!("P_{index}^(t)"),
            FamilyKind::ScaledOdd => format!("𝒫_{index}^(t)"),
            FamilyKind::FactorEven => format!("Q_{index}^(t)"),
            FamilyKind::FactorOdd => format!("𝒬_{index}^(t)"),
            FamilyKind::BenderDunne => format!("P_{index}"),
        }
    }

    /// Recurrence coefficients producing `F_{n+1}` from `F_n` and `F_{n-1}`.
    pub fn step(self, params: &FamilyParams, n: usize) -> Step {
        let n_i = n as i64;
        let nn = Poly::from(n_i);
        let (t, j) = (&params.t, &params.j);
        let monic = |shift: Poly, coupling: Poly| Step {
            lead: Poly::one(),
            shift,
            coupling,
        };
        match self {
            FamilyKind::ScaledEven => monic(
                t.scale(&int(4 * n_i + 1)),
                (&nn - &(j + &Poly::one())).scale(&int(8 * n_i * (2 * n_i - 1))),
            ),
            FamilyKind::ScaledOdd => monic(
                t.scale(&int(4 * n_i + 3)),
                (&nn - &(j + &Poly::one())).scale(&int(8 * n_i * (2 * n_i + 1))),
            ),
            FamilyKind::FactorEven => monic(
                &t.scale(&int(4 * n_i + 5)) + &(j * t).scale(&int(4)),
                &(j + &Poly::from(n_i + 1)) * &(&j.scale(&int(2)) + &Poly::from(2 * n_i + 1)),
            )
            .scaled_coupling(&int(8 * n_i)),
            FamilyKind::FactorOdd => monic(
                &t.scale(&int(4 * n_i + 7)) + &(j * t).scale(&int(4)),
                &(j + &Poly::from(n_i + 1)) * &(&j.scale(&int(2)) + &Poly::from(2 * n_i + 3)),
            )
            .scaled_coupling(&int(8 * n_i)),
            FamilyKind::BenderDunne => monic(
                Poly::zero(),
                (&nn - j).scale(&(int(16 * n_i) * (int(n_i - 1) + int(2) * &params.s))),
            ),
            FamilyKind::GeneralEven | FamilyKind::GeneralOdd => {
                let parity = self.parity().unwrap();
                let (offset, pair) = match parity {
                    Parity::Even => (1, 2 * n_i * (2 * n_i - 1)),
                    Parity::Odd => (3, 2 * n_i * (2 * n_i + 1)),
                };
                Step {
                    lead: params.sqrt_a.scale(&int(2)),
                    shift: params.b.scale(&int(4 * n_i + offset)),
                    coupling: general_coupling(parity, &params.sqrt_a, &params.b, &params.c, n)
                        .scale(&int(pair)),
                }
            }
        }
    }
}

/// One recurrence step: `F_{n+1} = (lead·E - shift) F_n + coupling F_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub lead: Poly,
    pub shift: Poly,
    pub coupling: Poly,
}

impl Step {
    fn scaled_coupling(mut self, factor: &Rational) -> Step {
        self.coupling = self.coupling.scale(factor);
        self
    }
}

/// Bracket `4(4n∓1)a^{3/2} - b² + 4ac` multiplying `F_{n-1}` in the general recurrences.
fn general_coupling(parity: Parity, sqrt_a: &Poly, b: &Poly, c: &Poly, n: usize) -> Poly {
    let k = match parity {
        Parity::Even => 4 * n as i64 - 1,
        Parity::Odd => 4 * n as i64 + 1,
    };
    let s3 = sqrt_a.pow(3);
    &(&s3.scale(&int(4 * k)) - &(b * b)) + &(&(sqrt_a * sqrt_a) * c).scale(&int(4))
}

/// Parameters read by the recurrences. Each may be a number or a polynomial
/// (typically a bare variable to keep it symbolic).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    pub t: Poly,
    pub j: Poly,
    pub sqrt_a: Poly,
    pub b: Poly,
    pub c: Poly,
    /// Bender–Dunne parity parameter, `1/4` (even) or `3/4` (odd).
    pub s: Rational,
}

impl Default for FamilyParams {
    fn default() -> Self {
        FamilyParams::symbolic()
    }
}

impl FamilyParams {
    /// Everything symbolic; `s = 1/4`.
    pub fn symbolic() -> Self {
        FamilyParams {
            t: Poly::var(Var::T),
            j: Poly::var(Var::J),
            sqrt_a: Poly::var(Var::SqrtA),
            b: Poly::var(Var::B),
            c: Poly::var(Var::C),
            s: ratio(1, 4),
        }
    }

    pub fn scaled(t: impl Into<Poly>, j: impl Into<Poly>) -> Self {
        FamilyParams {
            t: t.into(),
            j: j.into(),
            ..FamilyParams::symbolic()
        }
    }

    pub fn general(sqrt_a: impl Into<Poly>, b: impl Into<Poly>, c: impl Into<Poly>) -> Self {
        FamilyParams {
            sqrt_a: sqrt_a.into(),
            b: b.into(),
            c: c.into(),
            ..FamilyParams::symbolic()
        }
    }

    pub fn bender_dunne(s: Rational, j: impl Into<Poly>) -> Self {
        FamilyParams {
            j: j.into(),
            s,
            ..FamilyParams::symbolic()
        }
    }

    /// General parameters of the scaled Hamiltonian (`a = 1`, `b = 2t`) for a parity.
    pub fn general_from_scaled(t: &Poly, j: &Poly, parity: Parity) -> Self {
        let c = &(t * t) - &(&j.scale(&int(4)) + &Poly::from(parity.c_offset()));
        FamilyParams::general(Poly::one(), t.scale(&int(2)), c)
    }
}

/// `[F_0, ..., F_{count-1}]` for the given family.
pub fn gen_family(kind: FamilyKind, params: &FamilyParams, count: usize) -> Result<Vec<Poly>> {
    if count == 0 {
        return Err(Error::Usage("a family needs at least one member".into()));
    }
    let e = Poly::var(Var::E);
    let mut out = Vec::with_capacity(count);
    out.push(Poly::one());
    let mut prev = Poly::zero();
    for n in 0..count - 1 {
        let step = kind.step(params, n);
        let cur = out.last().unwrap();
        let linear = &(&step.lead * &e) - &step.shift;
        let next = &(&linear * cur) + &(&step.coupling * &prev);
        prev = cur.clone();
        out.push(next);
    }
    Ok(out)
}

/// The `c` solving `4(4n+3)a^{3/2} - b² + 4ac = 0` (even) or `4(4n+5)a^{3/2} - b² + 4ac = 0` (odd).
///
/// At this `c` the general family terminates at `P_{2n+2}` (resp. `𝒫_{2n+3}`).
pub fn gen_constraint_c(parity: Parity, sqrt_a: &Rational, b: &Rational, n: usize) -> Rational {
    gen_constraint_c_poly(parity, sqrt_a, &Poly::from(b), n)
        .as_const()
        .cloned()
        .unwrap()
}

/// [`gen_constraint_c`] with a polynomial `b`.
pub fn gen_constraint_c_poly(parity: Parity, sqrt_a: &Rational, b: &Poly, n: usize) -> Poly {
    let k = match parity {
        Parity::Even => 4 * n as i64 + 3,
        Parity::Odd => 4 * n as i64 + 5,
    };
    let s3 = sqrt_a * sqrt_a * sqrt_a;
    let a = sqrt_a * sqrt_a;
    (&(b * b) - &Poly::from(int(4 * k) * s3)).scale(&(int(4) * a).recip())
}

/// `(a^{1/4}, t, J)`: the scale transformation to `a = 1`, `b = 2t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaleMap {
    pub a_quarter: Rational,
    pub t: Rational,
    pub j_effective: Rational,
}

impl ScaleMap {
    pub fn new(a_quarter: Rational, t: Rational, j_effective: Rational) -> Result<Self> {
        if !a_quarter.is_positive() {
            return Err(Error::Domain("a^(1/4) must be positive".into()));
        }
        Ok(ScaleMap {
            a_quarter,
            t,
            j_effective,
        })
    }

    /// The general potential whose scaled form has this `(t, J)` for the given parity.
    pub fn forward_for(&self, parity: Parity) -> SexticPotential {
        let q = &self.a_quarter;
        let q2 = q * q;
        let c = (&self.t * &self.t - int(4) * &self.j_effective - int(parity.c_offset())) * &q2;
        let b = int(2) * &self.t * &q2 * q;
        SexticPotential::new(q2, b, c).expect("a^(1/4) > 0")
    }

    /// Inverse of [`ScaleMap::forward_for`].
    pub fn backward_for(v: &SexticPotential, parity: Parity) -> Result<ScaleMap> {
        let q = rational::sqrt_exact(v.sqrt_a()).ok_or_else(|| {
            Error::Irrational(format!("a = {} is not the fourth power of a rational", v.a()))
        })?;
        let q2 = &q * &q;
        let t = v.b() / (int(2) * &q2 * &q);
        let j = (&t * &t - v.c() / &q2 - int(parity.c_offset())) / int(4);
        ScaleMap::new(q, t, j)
    }
}

/// `(a^{1/4}, t, J) → (a, b, c)` with `a = α⁴`, `b = 2tα³`, `c = (t² - 4J - 3)α²`.
pub fn scale_map_forward(m: &ScaleMap) -> SexticPotential {
    m.forward_for(Parity::Even)
}

/// `t = b/(2a^{3/4})`, `J = (t² - c a^{-1/2} - 3)/4`; needs `a` to be a rational fourth power.
pub fn scale_map_backward(v: &SexticPotential) -> Result<ScaleMap> {
    ScaleMap::backward_for(v, Parity::Even)
}

/// Polynomial prefactor `χ(x)` built from a general family.
///
/// Even: `χ_{2n+2} = Σ_{i≤n} (-1)^i P_{2i}(E) x^{2i} / ((2i)! (2√a)^i)`.
/// Odd:  `χ_{2n+3} = Σ_{i≤n} (-1)^i 𝒫_{2i+1}(E) x^{2i+1} / ((2i+1)! (2√a)^i)`.
pub fn chi_assemble(
    parity: Parity,
    family: &[Poly],
    n: usize,
    sqrt_a: &Rational,
) -> Result<Poly> {
    if family.len() <= n {
        return Err(Error::Usage(format!(
            "χ with n = {n} needs {} family members, got {}",
            n + 1,
            family.len()
        )));
    }
    if !sqrt_a.is_positive() {
        return Err(Error::Domain("sqrt_a must be positive".into()));
    }
    let two_s = int(2) * sqrt_a;
    let mut coeffs = Vec::new();
    for (i, member) in family.iter().take(n + 1).enumerate() {
        let power = match parity {
            Parity::Even => 2 * i,
            Parity::Odd => 2 * i + 1,
        };
        let sign = if i % 2 == 0 { int(1) } else { int(-1) };
        let denom = rational::factorial(power as u64) * num_traits::pow(two_s.clone(), i);
        if coeffs.len() <= power {
            coeffs.resize(power + 1, Poly::zero());
        }
        coeffs[power] = member.scale(&(sign / denom));
    }
    Ok(Poly::from_coeffs(Var::X, coeffs))
}

/// Whether the coupling that feeds `F_{n+1}` vanishes identically.
pub fn truncates_at(kind: FamilyKind, params: &FamilyParams, n: usize) -> bool {
    kind.step(params, n).coupling.is_zero()
}

/// Index of the first vanishing coupling, searching `n ≤ limit`.
pub fn first_truncation(kind: FamilyKind, params: &FamilyParams, limit: usize) -> Option<usize> {
    (1..=limit).find(|&n| truncates_at(kind, params, n))
}

/// Whether a rational is a non-negative integer.
pub fn is_natural(value: &Rational) -> bool {
    value.is_integer() && !value.is_negative()
}

pub(crate) fn natural(value: &Rational, what: &str) -> Result<usize> {
    if is_natural(value) {
        Ok(value.to_integer().try_into().map_err(|_| Error::Usage(format!("{what} too large")))?)
    } else {
        Err(Error::Usage(format!("{what} must be a non-negative integer, got {value}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    #[test]
    fn scaled_symbolic_members() {
        let even = gen_family(FamilyKind::ScaledEven, &FamilyParams::symbolic(), 3).unwrap();
        assert_eq!(even[1], p("E - t"));
        assert_eq!(even[2], p("E^2 - 6t E + 5t^2 - 8J"));
        let odd = gen_family(FamilyKind::ScaledOdd, &FamilyParams::symbolic(), 3).unwrap();
        assert_eq!(odd[1], p("E - 3t"));
        assert_eq!(odd[2], p("E^2 - 10t E + 21t^2 - 24J"));
    }

    #[test]
    fn scaled_at_t_zero_starts_with_e() {
        let f = gen_family(FamilyKind::ScaledEven, &FamilyParams::scaled(0, 7), 2).unwrap();
        assert_eq!(f[1], p("E"));
    }

    #[test]
    fn bender_dunne_small_members() {
        let f = gen_family(FamilyKind::BenderDunne, &FamilyParams::bender_dunne(ratio(1, 4), 1), 3)
            .unwrap();
        assert_eq!(f[1], p("E"));
        assert_eq!(f[2], p("E^2"));
    }

    #[test]
    fn zero_count_is_usage_error() {
        assert!(matches!(
            gen_family(FamilyKind::ScaledEven, &FamilyParams::symbolic(), 0),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn general_family_leading_coefficient() {
        let f = gen_family(FamilyKind::GeneralEven, &FamilyParams::symbolic(), 4).unwrap();
        assert_eq!(f[1], p("2 sqrt_a E - b"));
        assert_eq!(f[3].lead_coeff_in(Var::E), p("8 sqrt_a^3"));
        let g = gen_family(FamilyKind::GeneralOdd, &FamilyParams::symbolic(), 2).unwrap();
        assert_eq!(g[1], p("2 sqrt_a E - 3b"));
    }

    #[test]
    fn constraint_examples() {
        assert_eq!(gen_constraint_c(Parity::Even, &int(1), &int(4), 0), int(1));
        assert_eq!(gen_constraint_c(Parity::Even, &int(1), &int(0), 0), int(-3));
        assert_eq!(gen_constraint_c(Parity::Odd, &int(1), &int(0), 0), int(-5));
    }

    #[test]
    fn scale_map_examples() {
        let v = scale_map_forward(&ScaleMap::new(int(2), int(1), int(1)).unwrap());
        assert_eq!((v.a(), v.b().clone(), v.c().clone()), (int(16), int(16), int(-24)));
        let v = scale_map_forward(&ScaleMap::new(int(1), int(0), int(1)).unwrap());
        assert_eq!((v.a(), v.b().clone(), v.c().clone()), (int(1), int(0), int(-7)));
        let v = SexticPotential::new(int(2), int(1), int(0)).unwrap();
        assert!(matches!(scale_map_backward(&v), Err(Error::Irrational(_))));
    }

    #[test]
    fn chi_examples() {
        let fam = gen_family(FamilyKind::GeneralEven, &FamilyParams::general(1, Var::B, Var::C), 3)
            .unwrap();
        assert_eq!(chi_assemble(Parity::Even, &fam, 0, &int(1)).unwrap(), Poly::one());
        let chi = chi_assemble(Parity::Even, &fam, 1, &int(1)).unwrap();
        assert_eq!(chi, &Poly::one() - &(&fam[1] * &p("x^2/4")));
        let odd = gen_family(FamilyKind::GeneralOdd, &FamilyParams::general(1, Var::B, Var::C), 2)
            .unwrap();
        let chi = chi_assemble(Parity::Odd, &odd, 1, &int(1)).unwrap();
        assert_eq!(chi, &p("x") * &(&Poly::one() - &(&odd[1] * &p("x^2/12"))));
        assert!(matches!(
            chi_assemble(Parity::Odd, &odd, 2, &int(1)),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn truncation_index() {
        for j in 0..5 {
            let params = FamilyParams::scaled(Var::T, j);
            assert_eq!(first_truncation(FamilyKind::ScaledEven, &params, 20), Some(j as usize + 1));
            assert_eq!(first_truncation(FamilyKind::ScaledOdd, &params, 20), Some(j as usize + 1));
        }
        assert_eq!(first_truncation(FamilyKind::ScaledEven, &FamilyParams::symbolic(), 20), None);
    }

    #[test]
    fn labels() {
        assert_eq!(FamilyKind::GeneralEven.label(2), "P_4");
        assert_eq!(FamilyKind::GeneralOdd.label(1), "𝒫_3");
        assert_eq!(FamilyKind::from_name("factor-odd"), Some(FamilyKind::FactorOdd));
    }
}
