//! Real root isolation with Sturm sequences and certified bisection.
//!
//! All arithmetic is exact. Intervals are half-open `(lo, hi]` and their
//! endpoints are never roots, so a sign change across an interval is a
//! certificate for the root inside it.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Poly, Var};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl IsolatingInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rational::int(2)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo < x && x <= &self.hi
    }
}

/// Dense rational coefficients of a univariate polynomial, lowest degree first.
#[derive(Clone, Debug, PartialEq)]
struct Dense(Vec<Rational>);

impl Dense {
    fn from_poly(p: &Poly) -> Result<Dense> {
        let vars = p.vars();
        if vars.len() > 1 {
            return Err(Error::Usage(format!(
                "expected a univariate polynomial, found variables {vars:?}"
            )));
        }
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| c.as_const().cloned().expect("univariate"))
            .collect();
        Ok(Dense(coeffs))
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn trim(mut self) -> Dense {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    fn eval(&self, x: &Rational) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    fn sign_at(&self, x: &Rational) -> Ordering {
        rational::sign(&self.eval(x))
    }

    fn derivative(&self) -> Dense {
        Dense(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rational::int(k as i64))
                .collect(),
        )
    }

    fn rem(&self, d: &Dense) -> Dense {
        let mut r = self.0.clone();
        let lead = d.0.last().unwrap();
        while r.len() >= d.0.len() && !r.is_empty() {
            let k = r.len() - d.0.len();
            let c = r.last().unwrap() / lead;
            for (j, dj) in d.0.iter().enumerate() {
                r[k + j] -= &c * dj;
            }
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Dense(r)
    }

    fn div_exact(&self, d: &Dense) -> Dense {
        let mut r = self.0.clone();
        let lead = d.0.last().unwrap();
        let mut q = vec![Rational::zero(); r.len() + 1 - d.0.len()];
        while r.len() >= d.0.len() {
            let k = r.len() - d.0.len();
            let c = r.last().unwrap() / lead;
            for (j, dj) in d.0.iter().enumerate() {
                r[k + j] -= &c * dj;
            }
            r.pop();
            q[k] = c;
        }
        Dense(q).trim()
    }

    fn gcd(&self, other: &Dense) -> Dense {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        let lead = a.0.last().cloned().unwrap_or_else(Rational::one);
        Dense(a.0.iter().map(|c| c / &lead).collect())
    }

    fn squarefree(&self) -> Dense {
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            self.clone()
        } else {
            self.div_exact(&g)
        }
    }

    /// Strict bound on the absolute value of every root.
    fn root_bound(&self) -> Rational {
        let lead = self.0.last().unwrap().abs();
        let max = self.0[..self.0.len() - 1]
            .iter()
            .map(|c| c.abs() / &lead)
            .max()
            .unwrap_or_else(Rational::zero);
        max + Rational::one()
    }
}

struct SturmChain(Vec<Dense>);

impl SturmChain {
    fn new(p: &Dense) -> SturmChain {
        let mut chain = vec![p.clone(), p.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(Dense(r.0.into_iter().map(|c| -c).collect()));
        }
        SturmChain(chain)
    }

    fn variations(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut last = Ordering::Equal;
        for s in self.0.iter().map(|q| q.sign_at(x)) {
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct roots in `(lo, hi]`.
    fn count(&self, lo: &Rational, hi: &Rational) -> usize {
        self.variations(lo) - self.variations(hi)
    }
}

/// Splitting point strictly inside `(lo, hi)` that is not a root of `p`.
fn split_point(p: &Dense, lo: &Rational, hi: &Rational) -> Rational {
    let width = hi - lo;
    for k in 2i64.. {
        for j in 1..k {
            let candidate = lo + &width * rational::ratio(j, k);
            if !p.eval(&candidate).is_zero() {
                return candidate;
            }
        }
    }
    unreachable!()
}

/// One interval per distinct real root, sorted ascending.
pub fn sturm_isolate(p: &Poly) -> Result<Vec<IsolatingInterval>> {
    let dense = Dense::from_poly(p)?;
    if dense.is_zero() {
        return Err(Error::Domain("the zero polynomial has no isolated roots".into()));
    }
    let sf = dense.squarefree();
    if sf.degree() == 0 {
        return Ok(Vec::new());
    }
    let chain = SturmChain::new(&sf);
    let bound = sf.root_bound();
    let mut pending = vec![(-bound.clone(), bound)];
    let mut found = Vec::new();
    while let Some((lo, hi)) = pending.pop() {
        match chain.count(&lo, &hi) {
            0 => {}
            1 => found.push(IsolatingInterval { lo, hi }),
            _ => {
                let mid = split_point(&sf, &lo, &hi);
                pending.push((mid.clone(), hi));
                pending.push((lo, mid));
            }
        }
    }
    found.sort_by(|a, b| a.lo.cmp(&b.lo));
    Ok(found)
}

/// Number of distinct real roots of `p`.
pub fn count_real_roots(p: &Poly) -> Result<usize> {
    Ok(sturm_isolate(p)?.len())
}

/// Shrinks `iv` by exact bisection until its width is at most `eps`.
///
/// Returns the final bracket (endpoints of opposite sign) and, when a
/// bisection point or the linear formula lands on the root, the exact root.
pub fn refine_bracket(
    p: &Poly,
    iv: &IsolatingInterval,
    eps: &Rational,
) -> Result<(IsolatingInterval, Option<Rational>)> {
    if !eps.is_positive() {
        return Err(Error::Usage("eps must be positive".into()));
    }
    let dense = Dense::from_poly(p)?;
    if dense.is_zero() {
        return Err(Error::Domain("cannot refine a root of the zero polynomial".into()));
    }
    let sf = dense.squarefree();
    let (mut lo, mut hi) = (iv.lo.clone(), iv.hi.clone());
    let s_lo = sf.sign_at(&lo);
    let s_hi = sf.sign_at(&hi);
    if s_lo == Ordering::Equal || s_hi == Ordering::Equal || s_lo == s_hi {
        return Err(Error::Consistency(format!(
            "no sign change of {p} across ({lo}, {hi}]"
        )));
    }
    if sf.degree() == 1 {
        let root = -&sf.0[0] / &sf.0[1];
        return Ok((IsolatingInterval { lo, hi }, Some(root)));
    }
    let two = rational::int(2);
    while &(&hi - &lo) > eps {
        let mid = (&lo + &hi) / &two;
        match sf.sign_at(&mid) {
            Ordering::Equal => return Ok((IsolatingInterval { lo, hi }, Some(mid))),
            s if s == s_lo => lo = mid,
            _ => hi = mid,
        }
    }
    Ok((IsolatingInterval { lo, hi }, None))
}

/// A rational within `eps` of the single root of `p` in `iv`.
pub fn root_refine(p: &Poly, iv: &IsolatingInterval, eps: &Rational) -> Result<Rational> {
    let (bracket, exact) = refine_bracket(p, iv, eps)?;
    Ok(exact.unwrap_or_else(|| bracket.midpoint()))
}

/// The root in `iv` as a decimal string with `digits` fractional digits,
/// refined until both ends of the bracket round to the same string.
pub fn certified_decimal(p: &Poly, iv: &IsolatingInterval, digits: usize) -> Result<String> {
    let mut iv = iv.clone();
    let mut eps = num_traits::pow(rational::ratio(1, 10), digits + 2);
    for _ in 0..32 {
        let (bracket, exact) = refine_bracket(p, &iv, &eps)?;
        if let Some(root) = exact {
            return Ok(rational::to_decimal(&root, digits));
        }
        let lo = rational::to_decimal(&bracket.lo, digits);
        if lo == rational::to_decimal(&bracket.hi, digits) {
            return Ok(lo);
        }
        iv = bracket;
        eps /= rational::int(100);
    }
    Err(Error::Consistency(format!(
        "root of {p} sits on a rounding boundary at {digits} digits"
    )))
}

/// Distinct real roots of `p` in `(lo, hi]`.
pub fn count_roots_in(p: &Poly, lo: &Rational, hi: &Rational) -> Result<usize> {
    let dense = Dense::from_poly(p)?;
    if dense.is_zero() {
        return Err(Error::Domain("the zero polynomial has no isolated roots".into()));
    }
    if lo >= hi {
        return Ok(0);
    }
    let sf = dense.squarefree();
    if sf.degree() == 0 {
        return Ok(0);
    }
    Ok(SturmChain::new(&sf).count(lo, hi))
}

/// Whether the real roots of `lower` strictly interlace those of `upper`:
/// all roots simple and distinct, one root of `lower` between each pair of
/// consecutive roots of `upper` and none outside.
pub fn interlaces(lower: &Poly, upper: &Poly) -> Result<bool> {
    if lower.gcd(upper).degree().unwrap_or(0) > 0 {
        return Ok(false);
    }
    let mut up = sturm_isolate(upper)?;
    let mut low = sturm_isolate(lower)?;
    if low.len() + 1 != up.len() {
        return Ok(false);
    }
    let overlap = |a: &IsolatingInterval, b: &IsolatingInterval| a.lo < b.hi && b.lo < a.hi;
    loop {
        let clash = up
            .iter()
            .enumerate()
            .find_map(|(i, a)| low.iter().position(|b| overlap(a, b)).map(|k| (i, k)));
        let Some((i, k)) = clash else { break };
        let half_u = up[i].width() / rational::int(2);
        let half_l = low[k].width() / rational::int(2);
        up[i] = shrink(upper, &up[i], &half_u)?;
        low[k] = shrink(lower, &low[k], &half_l)?;
    }
    Ok((0..low.len()).all(|k| up[k].hi <= low[k].lo && low[k].hi <= up[k + 1].lo))
}

/// A narrower certified bracket; an exact root collapses to a tiny interval
/// around it.
fn shrink(p: &Poly, iv: &IsolatingInterval, eps: &Rational) -> Result<IsolatingInterval> {
    let (bracket, exact) = refine_bracket(p, iv, eps)?;
    Ok(match exact {
        None => bracket,
        Some(root) => {
            let dense = Dense::from_poly(p)?.squarefree();
            let mut delta = eps / rational::int(2);
            loop {
                let lo = &root - &delta;
                let hi = &root + &delta;
                if lo >= iv.lo && hi <= iv.hi && !dense.eval(&lo).is_zero() && !dense.eval(&hi).is_zero() {
                    break IsolatingInterval { lo, hi };
                }
                delta /= rational::int(3);
            }
        }
    })
}

/// Sign of `p` at a rational point.
pub fn sign_at(p: &Poly, x: &Rational) -> Result<Ordering> {
    Ok(Dense::from_poly(p)?.sign_at(x))
}

/// Whether the single-variable polynomial is in `var` (or constant).
pub fn is_univariate_in(p: &Poly, var: Var) -> bool {
    p.vars().iter().all(|v| *v == var)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, parse, ratio, to_decimal};

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    #[test]
    fn isolates_e_squared_minus_eight() {
        let ivs = sturm_isolate(&p("E^2 - 8")).unwrap();
        assert_eq!(ivs.len(), 2);
        assert!(ivs[0].contains(&ratio(-2828427, 1_000_000)));
        assert!(ivs[1].contains(&ratio(2828427, 1_000_000)));
        assert!(ivs[0].hi <= ivs[1].lo);
    }

    #[test]
    fn no_real_roots() {
        assert!(sturm_isolate(&p("E^2 + 1")).unwrap().is_empty());
        assert!(sturm_isolate(&p("5")).unwrap().is_empty());
        assert!(matches!(sturm_isolate(&Poly::zero()), Err(Error::Domain(_))));
    }

    #[test]
    fn constructed_factors_and_multiplicity() {
        let ivs = sturm_isolate(&p("(E-1)*(E-2)*(E-3)")).unwrap();
        assert_eq!(ivs.len(), 3);
        for (iv, k) in ivs.iter().zip(1..) {
            assert!(iv.contains(&int(k)));
        }
        // repeated roots are counted once
        assert_eq!(sturm_isolate(&p("(E-1)^3*(E+2)^2")).unwrap().len(), 2);
    }

    #[test]
    fn refines_sqrt8_to_thirty_digits() {
        let q = p("E^2 - 8");
        let iv = sturm_isolate(&q).unwrap().pop().unwrap();
        let eps = parse("1e-30").unwrap();
        let (bracket, _) = refine_bracket(&q, &iv, &eps).unwrap();
        assert!(bracket.width() <= eps);
        let r = root_refine(&q, &iv, &parse("1e-34").unwrap()).unwrap();
        assert_eq!(to_decimal(&r, 30), "2.828427124746190097603377448419");
        let s2 = root_refine(&p("E^2-2"), &sturm_isolate(&p("E^2-2")).unwrap()[1], &eps).unwrap();
        assert!(to_decimal(&s2, 12).starts_with("1.41421356237"));
    }

    #[test]
    fn interlacing() {
        let upper = p("(E-1)*(E-3)*(E-5)");
        assert!(interlaces(&p("(E-2)*(E-4)"), &upper).unwrap());
        assert!(!interlaces(&p("(E-2)*(E-2.5)"), &upper).unwrap());
        assert!(!interlaces(&p("(E-3)*(E-4)"), &upper).unwrap());
        assert!(interlaces(&p("E"), &p("E^2 - 2")).unwrap());
        assert_eq!(count_roots_in(&upper, &int(1), &int(3)).unwrap(), 1);
        assert_eq!(count_roots_in(&upper, &int(0), &int(5)).unwrap(), 3);
    }

    #[test]
    fn linear_root_is_exact() {
        let q = p("E - 5");
        let iv = sturm_isolate(&q).unwrap().pop().unwrap();
        assert_eq!(root_refine(&q, &iv, &ratio(1, 10)).unwrap(), int(5));
    }

    #[test]
    fn refine_rejects_bad_bracket() {
        let q = p("E^2 - 8");
        let iv = IsolatingInterval { lo: int(0), hi: int(1) };
        assert!(matches!(root_refine(&q, &iv, &ratio(1, 10)), Err(Error::Consistency(_))));
        let iv = IsolatingInterval { lo: int(0), hi: int(3) };
        assert!(matches!(root_refine(&q, &iv, &int(0)), Err(Error::Usage(_))));
    }

    #[test]
    fn rejects_multivariate() {
        assert!(matches!(sturm_isolate(&p("E - t")), Err(Error::Usage(_))));
    }
}
