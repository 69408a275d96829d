//! Moment functionals, Gram matrices, squared norms and the factorization property.
//!
//! A monic family with a three-term recurrence is orthogonal for the linear
//! functional `L` fixed by `L[1] = 1` and `L[F_n] = 0` for `n ≥ 1`. The
//! functional is generally sign-indefinite, so norms may be negative or zero.
//! The Gram matrix computed through `L` is the reference for every printed
//! norm formula.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::families::{self, gen_family, FamilyKind, FamilyParams};
use crate::poly::{Poly, Var};
use crate::rational::{self, int};

/// Moments `μ_0..μ_{2N}` of the orthogonality functional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentFunctional {
    pub moments: Vec<Poly>,
}

impl MomentFunctional {
    /// Solves `L[F_n] = 0` for `n = 1..` from the family's coefficients.
    ///
    /// The system is triangular; each step divides by the leading
    /// coefficient of `F_n`, which is one for monic families.
    pub fn from_family(family: &[Poly]) -> Result<MomentFunctional> {
        let mut moments: Vec<Poly> = Vec::with_capacity(family.len());
        moments.push(Poly::one());
        for f in family.iter().skip(1) {
            let coeffs = f.coeffs_in(Var::E);
            let n = coeffs.len() - 1;
            if n != moments.len() {
                return Err(Error::Usage(format!(
                    "family member of degree {n} where {} was expected",
                    moments.len()
                )));
            }
            let lower: Poly = coeffs[..n]
                .iter()
                .zip(&moments)
                .map(|(c, mu)| c * mu)
                .sum();
            moments.push((-lower).exact_div(&coeffs[n])?);
        }
        Ok(MomentFunctional { moments })
    }

    /// `L[p]` for a polynomial in `E`.
    pub fn apply(&self, p: &Poly) -> Result<Poly> {
        let coeffs = p.coeffs_in(Var::E);
        if coeffs.len() > self.moments.len() {
            return Err(Error::Usage(format!(
                "degree {} needs more than the {} available moments",
                coeffs.len() - 1,
                self.moments.len()
            )));
        }
        Ok(coeffs.iter().zip(&self.moments).map(|(c, mu)| c * mu).sum())
    }
}

/// Moments `μ_0..μ_{2N}` for a family.
pub fn moment_functional(
    kind: FamilyKind,
    params: &FamilyParams,
    n: usize,
) -> Result<MomentFunctional> {
    if n == 0 {
        return Err(Error::Usage("N must be at least 1".into()));
    }
    MomentFunctional::from_family(&gen_family(kind, params, 2 * n + 1)?)
}

/// `G[m][n] = L[F_m F_n]` for `m, n ≤ n_max`.
pub fn gram_matrix(
    functional: &MomentFunctional,
    family: &[Poly],
    n_max: usize,
) -> Result<Vec<Vec<Poly>>> {
    if 2 * n_max + 1 > functional.moments.len() {
        return Err(Error::Usage(format!(
            "a {0}x{0} Gram matrix needs {1} moments, have {2}",
            n_max + 1,
            2 * n_max + 1,
            functional.moments.len()
        )));
    }
    if family.len() <= n_max {
        return Err(Error::Usage("family too short for the requested Gram matrix".into()));
    }
    let mut g = Vec::with_capacity(n_max + 1);
    for m in 0..=n_max {
        let mut row = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            row.push(functional.apply(&(&family[m] * &family[n]))?);
        }
        g.push(row);
    }
    Ok(g)
}

/// Whether every off-diagonal entry vanishes identically.
pub fn is_diagonal(g: &[Vec<Poly>]) -> bool {
    g.iter()
        .enumerate()
        .all(|(m, row)| row.iter().enumerate().all(|(n, x)| m == n || x.is_zero()))
}

/// How a printed formula relates to the Gram-matrix norm.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Agreement {
    Equal,
    /// Equal up to an overall sign flip.
    Negated,
    Differs,
}

impl Agreement {
    pub fn of(reference: &Poly, candidate: &Poly) -> Agreement {
        if reference == candidate {
            Agreement::Equal
        } else if *reference == -candidate {
            Agreement::Negated
        } else {
            Agreement::Differs
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Agreement::Equal => "equal",
            Agreement::Negated => "equal up to sign",
            Agreement::Differs => "differs",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormComparison {
    pub n: usize,
    pub gram: Poly,
    /// The printed two-term norm recurrence, multiplied out.
    pub printed_product: Option<Poly>,
    /// The printed Γ-function closed form, as a polynomial in `J`.
    pub closed_form: Option<Poly>,
    pub product_agreement: Option<Agreement>,
    pub closed_agreement: Option<Agreement>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormSequence {
    pub family: FamilyKind,
    /// `γ_0..γ_{N-1}` from the Gram diagonal.
    pub gammas: Vec<Poly>,
    pub comparisons: Vec<NormComparison>,
}

/// `J (J-1) ... (J-n+1)`, i.e. `Γ(J+1)/Γ(J-n+1)`.
fn falling(j: &Poly, n: usize) -> Poly {
    (0..n as i64)
        .map(|k| j - &Poly::from(k))
        .fold(Poly::one(), |acc, f| &acc * &f)
}

fn product(n: usize, factor: impl Fn(i64) -> Poly) -> Poly {
    (1..=n as i64).fold(Poly::one(), |acc, k| &acc * &factor(k))
}

/// Printed product and closed forms of `γ_n`, where the family has them.
pub fn printed_norm_forms(kind: FamilyKind, j: &Poly, n: usize) -> (Option<Poly>, Option<Poly>) {
    let four_n = rational::int(4).pow(n as i32);
    match kind {
        FamilyKind::ScaledEven => (
            Some(product(n, |k| {
                (&(j - &Poly::from(k)) + &Poly::one()).scale(&int(8 * k * (2 * k - 1)))
            })),
            Some(falling(j, n).scale(&(four_n * rational::factorial(2 * n as u64)))),
        ),
        FamilyKind::ScaledOdd => (
            Some(product(n, |k| {
                (&Poly::from(k - 1) - j).scale(&int(8 * k * (2 * k + 1)))
            })),
            Some(falling(j, n).scale(&(four_n * rational::factorial(2 * n as u64 + 1)))),
        ),
        FamilyKind::FactorEven => (
            Some(product(n, |k| {
                (&(j + &Poly::from(k + 1)) * &(&j.scale(&int(2)) + &Poly::from(2 * k + 1)))
                    .scale(&int(8 * k))
            })),
            None,
        ),
        FamilyKind::FactorOdd => (
            Some(product(n, |k| {
                (&(j + &Poly::from(k + 1)) * &(&j.scale(&int(2)) + &Poly::from(2 * k + 3)))
                    .scale(&int(8 * k))
            })),
            None,
        ),
        _ => (None, None),
    }
}

/// Squared norms from the Gram diagonal, compared with the printed formulas.
pub fn norm_sequence(kind: FamilyKind, params: &FamilyParams, count: usize) -> Result<NormSequence> {
    if count == 0 {
        return Err(Error::Usage("N must be at least 1".into()));
    }
    let family = gen_family(kind, params, 2 * count - 1)?;
    let functional = MomentFunctional::from_family(&family)?;
    let mut gammas = Vec::with_capacity(count);
    let mut comparisons = Vec::with_capacity(count);
    for n in 0..count {
        let gram = functional.apply(&(&family[n] * &family[n]))?;
        let (printed_product, closed_form) = printed_norm_forms(kind, &params.j, n);
        comparisons.push(NormComparison {
            n,
            product_agreement: printed_product.as_ref().map(|p| Agreement::of(&gram, p)),
            closed_agreement: closed_form.as_ref().map(|p| Agreement::of(&gram, p)),
            gram: gram.clone(),
            printed_product,
            closed_form,
        });
        gammas.push(gram);
    }
    Ok(NormSequence {
        family: kind,
        gammas,
        comparisons,
    })
}

/// Divides `F_{J+1+n}` by `F_{J+1}` for every available `n` and checks the
/// quotients against the factor-family recurrence.
///
/// `kind` is `ScaledEven` or `ScaledOdd`; `params.j` must be a non-negative
/// integer and `family` generated from the same parameters.
pub fn factorization_check(
    kind: FamilyKind,
    params: &FamilyParams,
    family: &[Poly],
) -> Result<Vec<Poly>> {
    let parity = match kind {
        FamilyKind::ScaledEven | FamilyKind::ScaledOdd => kind.parity().unwrap(),
        _ => return Err(Error::Usage(format!("no factor family for {}", kind.name()))),
    };
    let j = params
        .j
        .as_const()
        .ok_or_else(|| Error::Usage("factorization needs a numeric J".into()))?;
    let j = families::natural(j, "J")?;
    if family.len() <= j + 1 {
        return Err(Error::Usage(format!(
            "need more than {} family members for J = {j}",
            j + 1
        )));
    }
    let base = &family[j + 1];
    let mut quotients = Vec::new();
    for (n, member) in family.iter().enumerate().skip(j + 1) {
        let (q, r) = member.divrem(base)?;
        if !r.is_zero() {
            return Err(Error::violation(
                format!("{} is not divisible by {}", kind.label(n), kind.label(j + 1)),
                "factorization P_{n+J+1} = Q_n P_{J+1}",
            ));
        }
        quotients.push(q);
    }
    let expected = gen_family(FamilyKind::factor(parity), params, quotients.len())?;
    if let Some(n) = (0..quotients.len()).find(|&n| quotients[n] != expected[n]) {
        return Err(Error::violation(
            format!("quotient {n} does not follow the factor recurrence"),
            "factor-polynomial recurrence",
        ));
    }
    Ok(quotients)
}
