//! Recursive dense polynomials over the rationals.
//!
//! A [`Poly`] is either a rational constant or a dense coefficient vector in
//! one [`Var`] whose coefficients only involve strictly inner variables. The
//! nesting order is fixed (`x` outermost, then `E`, then the parameters), so
//! every polynomial has exactly one representation and equality is
//! structural.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

mod parse;

/// Polynomial variables, declared innermost first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    C,
    B,
    SqrtA,
    J,
    T,
    E,
    X,
}

impl Var {
    pub const ALL: [Var; 7] = [Var::C, Var::B, Var::SqrtA, Var::J, Var::T, Var::E, Var::X];

    pub fn name(self) -> &'static str {
        match self {
            Var::C => "c",
            Var::B => "b",
            Var::SqrtA => "sqrt_a",
            Var::J => "J",
            Var::T => "t",
            Var::E => "E",
            Var::X => "x",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == name)
    }

    fn latex(self) -> &'static str {
        match self {
            Var::SqrtA => "\\sqrt{a}",
            other => other.name(),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Node {
    Const(Rational),
    /// At least two coefficients, the last one nonzero, none mentioning `var`
    /// or any outer variable.
    Dense(Var, Vec<Poly>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly(Node);

impl Default for Poly {
    fn default() -> Self {
        Poly::zero()
    }
}

impl From<Rational> for Poly {
    fn from(value: Rational) -> Self {
        Poly(Node::Const(value))
    }
}

impl From<&Rational> for Poly {
    fn from(value: &Rational) -> Self {
        Poly(Node::Const(value.clone()))
    }
}

impl From<i64> for Poly {
    fn from(value: i64) -> Self {
        Poly(Node::Const(rational::int(value)))
    }
}

impl From<Var> for Poly {
    fn from(var: Var) -> Self {
        Poly::var(var)
    }
}

impl Poly {
    pub fn zero() -> Self {
        Poly(Node::Const(Rational::zero()))
    }

    pub fn one() -> Self {
        Poly(Node::Const(Rational::one()))
    }

    pub fn constant(value: Rational) -> Self {
        Poly(Node::Const(value))
    }

    pub fn var(var: Var) -> Self {
        Poly(Node::Dense(var, vec![Poly::zero(), Poly::one()]))
    }

    /// `coeff · var^degree`.
    pub fn monomial(var: Var, degree: usize, coeff: Poly) -> Self {
        let mut coeffs = vec![Poly::zero(); degree];
        coeffs.push(coeff);
        Poly::from_coeffs(var, coeffs)
    }

    /// `Σ coeffs[k]·var^k`; coefficients may mention any variable.
    pub fn from_coeffs(var: Var, coeffs: Vec<Poly>) -> Self {
        if coeffs.iter().all(|c| c.main_var().is_none_or(|v| v < var)) {
            return Poly::dense(var, coeffs);
        }
        let x = Poly::var(var);
        coeffs
            .into_iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * &x) + &c)
    }

    /// Shorthand for univariate rational coefficient lists.
    pub fn from_rationals(var: Var, coeffs: &[Rational]) -> Self {
        Poly::dense(var, coeffs.iter().map(Poly::from).collect())
    }

    fn dense(var: Var, mut coeffs: Vec<Poly>) -> Self {
        while coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        match coeffs.len() {
            0 => Poly::zero(),
            1 => coeffs.pop().unwrap(),
            _ => Poly(Node::Dense(var, coeffs)),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.0, Node::Const(c) if c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.0, Node::Const(c) if c.is_one())
    }

    pub fn as_const(&self) -> Option<&Rational> {
        match &self.0 {
            Node::Const(c) => Some(c),
            Node::Dense(..) => None,
        }
    }

    /// Outermost variable, `None` for constants.
    pub fn main_var(&self) -> Option<Var> {
        match &self.0 {
            Node::Const(_) => None,
            Node::Dense(v, _) => Some(*v),
        }
    }

    /// Coefficients in the main variable (a constant is its own single coefficient).
    pub fn coeffs(&self) -> Vec<Poly> {
        match &self.0 {
            Node::Const(c) if c.is_zero() => Vec::new(),
            Node::Const(_) => vec![self.clone()],
            Node::Dense(_, cs) => cs.clone(),
        }
    }

    /// Coefficients with respect to `var`; they may involve outer variables.
    pub fn coeffs_in(&self, var: Var) -> Vec<Poly> {
        match &self.0 {
            Node::Const(c) if c.is_zero() => Vec::new(),
            Node::Dense(v, cs) if *v == var => cs.clone(),
            Node::Dense(v, cs) if *v > var => {
                let mut out: Vec<Poly> = Vec::new();
                for (k, c) in cs.iter().enumerate() {
                    for (j, cj) in c.coeffs_in(var).into_iter().enumerate() {
                        if out.len() <= j {
                            out.resize(j + 1, Poly::zero());
                        }
                        let term = Poly::monomial(*v, k, cj);
                        out[j] = &out[j] + &term;
                    }
                }
                out
            }
            _ => vec![self.clone()],
        }
    }

    pub fn degree_in(&self, var: Var) -> Option<usize> {
        match &self.0 {
            Node::Const(c) if c.is_zero() => None,
            Node::Const(_) => Some(0),
            Node::Dense(v, cs) if *v == var => Some(cs.len() - 1),
            Node::Dense(v, cs) if *v > var => cs.iter().filter_map(|c| c.degree_in(var)).max(),
            Node::Dense(..) => Some(0),
        }
    }

    /// Degree in the outermost variable; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        match &self.0 {
            Node::Const(c) if c.is_zero() => None,
            Node::Const(_) => Some(0),
            Node::Dense(_, cs) => Some(cs.len() - 1),
        }
    }

    /// Coefficient of `var^k`.
    pub fn coeff_in(&self, var: Var, k: usize) -> Poly {
        self.coeffs_in(var).into_iter().nth(k).unwrap_or_default()
    }

    pub fn lead_coeff_in(&self, var: Var) -> Poly {
        self.coeffs_in(var).pop().unwrap_or_default()
    }

    /// Leading rational found by following leading coefficients inward.
    pub fn lead_rational(&self) -> Rational {
        match &self.0 {
            Node::Const(c) => c.clone(),
            Node::Dense(_, cs) => cs.last().unwrap().lead_rational(),
        }
    }

    /// Scaled so that [`Poly::lead_rational`] is one; zero stays zero.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(&self.lead_rational().recip())
    }

    /// Variables that occur, innermost first.
    pub fn vars(&self) -> Vec<Var> {
        let mut seen = [false; 7];
        self.mark_vars(&mut seen);
        Var::ALL
            .into_iter()
            .zip(seen)
            .filter_map(|(v, s)| s.then_some(v))
            .collect()
    }

    fn mark_vars(&self, seen: &mut [bool; 7]) {
        if let Node::Dense(v, cs) = &self.0 {
            seen[*v as usize] = true;
            for c in cs {
                c.mark_vars(seen);
            }
        }
    }

    pub fn contains(&self, var: Var) -> bool {
        self.vars().contains(&var)
    }

    pub fn scale(&self, factor: &Rational) -> Poly {
        if factor.is_zero() {
            return Poly::zero();
        }
        self.map_consts(&|c| c * factor)
    }

    fn map_consts(&self, f: &dyn Fn(&Rational) -> Rational) -> Poly {
        match &self.0 {
            Node::Const(c) => Poly(Node::Const(f(c))),
            Node::Dense(v, cs) => Poly::dense(*v, cs.iter().map(|c| c.map_consts(f)).collect()),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    pub fn derivative(&self, var: Var) -> Poly {
        match &self.0 {
            Node::Dense(v, cs) if *v == var => Poly::dense(
                *v,
                cs.iter()
                    .enumerate()
                    .skip(1)
                    .map(|(k, c)| c.scale(&rational::int(k as i64)))
                    .collect(),
            ),
            Node::Dense(v, cs) if *v > var => {
                Poly::dense(*v, cs.iter().map(|c| c.derivative(var)).collect())
            }
            _ => Poly::zero(),
        }
    }

    /// Replaces `var` by `value` everywhere.
    pub fn substitute(&self, var: Var, value: &Poly) -> Poly {
        match &self.0 {
            Node::Dense(v, cs) if *v == var => cs
                .iter()
                .rev()
                .fold(Poly::zero(), |acc, c| &(&acc * value) + c),
            Node::Dense(v, cs) if *v > var => Poly::from_coeffs(
                *v,
                cs.iter().map(|c| c.substitute(var, value)).collect(),
            ),
            _ => self.clone(),
        }
    }

    pub fn eval(&self, bindings: &[(Var, Poly)]) -> Poly {
        bindings
            .iter()
            .fold(self.clone(), |p, (v, val)| p.substitute(*v, val))
    }

    /// Full substitution down to a rational; every remaining variable needs a binding.
    pub fn eval_rational(&self, bindings: &[(Var, Rational)]) -> Result<Rational> {
        let mut p = self.clone();
        for (v, val) in bindings {
            p = p.substitute(*v, &Poly::from(val));
        }
        match p.0 {
            Node::Const(c) => Ok(c),
            Node::Dense(v, _) => Err(Error::Usage(format!("no value bound for variable {v}"))),
        }
    }

    /// Division with remainder in the main variable of `divisor`.
    ///
    /// Every leading-coefficient division must be exact in the coefficient
    /// ring; otherwise a [`Error::Divisibility`] is reported rather than
    /// falling back to pseudo-division.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        if divisor.is_zero() {
            return Err(Error::Domain("division by the zero polynomial".into()));
        }
        let var = match &divisor.0 {
            Node::Const(c) => return Ok((self.scale(&c.recip()), Poly::zero())),
            Node::Dense(v, _) => *v,
        };
        let d = divisor.coeffs();
        let d_lead = d.last().unwrap();
        let d_deg = d.len() - 1;
        let mut rem = self.coeffs_in(var);
        if rem.len() <= d_deg {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Poly::zero(); rem.len() - d_deg];
        while rem.len() > d_deg {
            let k = rem.len() - 1 - d_deg;
            let c = rem.last().unwrap().exact_div(d_lead)?;
            for (j, dj) in d.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * dj);
            }
            debug_assert!(rem.last().unwrap().is_zero());
            while rem.last().is_some_and(Poly::is_zero) {
                rem.pop();
            }
            quot[k] = c;
        }
        Ok((Poly::from_coeffs(var, quot), Poly::from_coeffs(var, rem)))
    }

    /// Quotient of a division that must leave no remainder.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Divisibility(format!("{divisor} does not divide {self}")))
        }
    }

    /// Pseudo-remainder in `var`; internal to gcd computations.
    fn pseudo_rem(&self, divisor: &Poly, var: Var) -> Poly {
        let d = divisor.coeffs_in(var);
        let d_lead = d.last().unwrap();
        let d_deg = d.len() - 1;
        let mut rem = self.coeffs_in(var);
        while rem.len() > d_deg && !rem.is_empty() {
            let k = rem.len() - 1 - d_deg;
            let r_lead = rem.last().unwrap().clone();
            for c in rem.iter_mut() {
                *c = &*c * d_lead;
            }
            for (j, dj) in d.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&r_lead * dj);
            }
            while rem.last().is_some_and(Poly::is_zero) {
                rem.pop();
            }
        }
        Poly::from_coeffs(var, rem)
    }

    /// Gcd of the coefficients with respect to `var`.
    pub fn content_in(&self, var: Var) -> Poly {
        self.coeffs_in(var)
            .iter()
            .fold(Poly::zero(), |g, c| g.gcd(c))
    }

    /// Greatest common divisor, normalised by [`Poly::monic`].
    ///
    /// Recursive primitive remainder sequence: contents are split off in the
    /// outermost variable and handled one level down.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let var = match self.main_var().max(other.main_var()) {
            None => return Poly::one(),
            Some(v) => v,
        };
        let ca = self.content_in(var);
        let cb = other.content_in(var);
        let content = ca.gcd(&cb);
        let mut p = self.exact_div(&ca).expect("content divides");
        let mut q = other.exact_div(&cb).expect("content divides");
        if p.degree_in(var) < q.degree_in(var) {
            core::mem::swap(&mut p, &mut q);
        }
        loop {
            if q.degree_in(var) == Some(0) {
                return content;
            }
            let r = p.pseudo_rem(&q, var);
            if r.is_zero() {
                return (&content * &q).monic();
            }
            if r.degree_in(var) == Some(0) {
                return content;
            }
            let cr = r.content_in(var);
            p = q;
            q = r.exact_div(&cr).expect("content divides");
        }
    }

    /// Expanded terms: variable powers (outermost first) with their rational coefficient.
    pub fn terms(&self) -> Vec<(Vec<(Var, usize)>, Rational)> {
        let mut out = Vec::new();
        self.collect_terms(&mut Vec::new(), &mut out);
        out
    }

    fn collect_terms(
        &self,
        prefix: &mut Vec<(Var, usize)>,
        out: &mut Vec<(Vec<(Var, usize)>, Rational)>,
    ) {
        match &self.0 {
            Node::Const(c) => {
                if !c.is_zero() {
                    out.push((prefix.clone(), c.clone()));
                }
            }
            Node::Dense(v, cs) => {
                for (k, c) in cs.iter().enumerate().rev() {
                    if k > 0 {
                        prefix.push((*v, k));
                    }
                    c.collect_terms(prefix, out);
                    if k > 0 {
                        prefix.pop();
                    }
                }
            }
        }
    }

    /// LaTeX rendering of the expanded form.
    pub fn to_latex(&self) -> String {
        render(self, true)
    }

    /// Parses expressions such as `E^2 - 6*t*E + 5 t^2 - 8J` or `(E-9t)*(E^2-1/2)`.
    pub fn parse(text: &str) -> Result<Poly> {
        parse::parse(text)
    }
}

fn render(p: &Poly, latex: bool) -> String {
    let terms = p.terms();
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (powers, coeff)) in terms.iter().enumerate() {
        let negative = coeff.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mag = coeff.abs();
        let mut factors: Vec<String> = Vec::new();
        if !mag.is_one() || powers.is_empty() {
            factors.push(if latex && !mag.is_integer() {
                format!("\\frac{{{}}}{{{}}}", mag.numer(), mag.denom())
            } else {
                mag.to_string()
            });
        }
        for (v, k) in powers {
            let name = if latex { v.latex() } else { v.name() };
            factors.push(match (*k, latex) {
                (1, _) => name.to_string(),
                (k, true) => format!("{name}^{{{k}}}"),
                (k, false) => format!("{name}^{k}"),
            });
        }
        out.push_str(&factors.join(if latex { " " } else { "*" }));
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self, false))
    }
}

fn add(a: &Poly, b: &Poly) -> Poly {
    match (&a.0, &b.0) {
        (Node::Const(x), Node::Const(y)) => Poly(Node::Const(x + y)),
        _ => match a.main_var().cmp(&b.main_var()) {
            core::cmp::Ordering::Greater => add_into_constant_term(a, b),
            core::cmp::Ordering::Less => add_into_constant_term(b, a),
            core::cmp::Ordering::Equal => {
                let (Node::Dense(v, xs), Node::Dense(_, ys)) = (&a.0, &b.0) else {
                    unreachable!()
                };
                let n = xs.len().max(ys.len());
                let coeffs = (0..n)
                    .map(|k| match (xs.get(k), ys.get(k)) {
                        (Some(x), Some(y)) => add(x, y),
                        (Some(x), None) => x.clone(),
                        (None, Some(y)) => y.clone(),
                        (None, None) => unreachable!(),
                    })
                    .collect();
                Poly::dense(*v, coeffs)
            }
        },
    }
}

fn add_into_constant_term(outer: &Poly, inner: &Poly) -> Poly {
    let Node::Dense(v, cs) = &outer.0 else {
        unreachable!()
    };
    let mut cs = cs.clone();
    cs[0] = add(&cs[0], inner);
    Poly::dense(*v, cs)
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    match (&a.0, &b.0) {
        (Node::Const(x), Node::Const(y)) => Poly(Node::Const(x * y)),
        _ => match a.main_var().cmp(&b.main_var()) {
            core::cmp::Ordering::Greater => mul_coeffwise(a, b),
            core::cmp::Ordering::Less => mul_coeffwise(b, a),
            core::cmp::Ordering::Equal => {
                let (Node::Dense(v, xs), Node::Dense(_, ys)) = (&a.0, &b.0) else {
                    unreachable!()
                };
                let mut out = vec![Poly::zero(); xs.len() + ys.len() - 1];
                for (i, x) in xs.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in ys.iter().enumerate() {
                        if !y.is_zero() {
                            out[i + j] = add(&out[i + j], &mul(x, y));
                        }
                    }
                }
                Poly::dense(*v, out)
            }
        },
    }
}

fn mul_coeffwise(outer: &Poly, inner: &Poly) -> Poly {
    let Node::Dense(v, cs) = &outer.0 else {
        unreachable!()
    };
    Poly(Node::Dense(*v, cs.iter().map(|c| mul(c, inner)).collect()))
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                $body(self, rhs)
            }
        }
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                $body(&self, &rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                $body(&self, rhs)
            }
        }
        impl $trait<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Mul, mul, mul);
forward_binop!(Sub, sub, |a: &Poly, b: &Poly| add(a, &-b));

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.map_consts(&|c| -c)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl core::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |a, b| &a + &b)
    }
}

impl core::iter::Product for Poly {
    fn product<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::one(), |a, b| &a * &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    #[test]
    fn arithmetic_expands() {
        assert_eq!(p("(E-t)*(E-5t)"), p("E^2 - 6*t*E + 5*t^2"));
        let q = p("E^3 - 2*J*E + t");
        assert_eq!(&q + &Poly::zero(), q);
        assert_eq!(&q - &q, Poly::zero());
        assert_eq!(
            p("(E-9t)*(E^2-6t*E+5t^2-8)"),
            p("E^3 - 15t E^2 + 59 t^2 E - 8E - 45t^3 + 72t")
        );
    }

    #[test]
    fn zero_is_canonical() {
        assert!(Poly::from_coeffs(Var::E, vec![Poly::zero(), Poly::zero()]).is_zero());
        assert_eq!(Poly::from_coeffs(Var::E, vec![Poly::from(3)]), Poly::from(3));
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(p("E^2+1").degree(), Some(2));
        assert!(p("E").coeffs().len() == 2 && Poly::zero().coeffs().is_empty());
    }

    #[test]
    fn mixed_nesting_normalises() {
        // a coefficient mentioning an outer variable is folded back into place
        let odd = Poly::from_coeffs(Var::T, vec![Poly::var(Var::E), Poly::one()]);
        assert_eq!(odd, p("E + t"));
        assert_eq!(odd.main_var(), Some(Var::E));
        assert_eq!(p("x*E*t").coeffs_in(Var::T), vec![Poly::zero(), p("x*E")]);
        assert_eq!(p("x^2*t + E*t^2").degree_in(Var::T), Some(2));
    }

    #[test]
    fn evaluation() {
        let p2 = p("E^2 - 6*t*E + 5*t^2 - 8*J");
        let v = p2
            .eval_rational(&[(Var::T, int(0)), (Var::J, int(1)), (Var::E, int(3))])
            .unwrap();
        assert_eq!(v, int(1));
        assert_eq!(p("x^3-2x").eval_rational(&[(Var::X, int(2))]).unwrap(), int(4));
        assert_eq!(p2.eval(&[]), p2);
        assert!(matches!(
            p2.eval_rational(&[(Var::E, int(1))]),
            Err(Error::Usage(_))
        ));
        assert_eq!(p2.substitute(Var::E, &p("2E")), p("4E^2 - 12t*E + 5t^2 - 8J"));
    }

    #[test]
    fn derivative_in_each_variable() {
        let q = p("x^3*E + t^2*x");
        assert_eq!(q.derivative(Var::X), p("3x^2*E + t^2"));
        assert_eq!(q.derivative(Var::T), p("2t*x"));
        assert_eq!(q.derivative(Var::J), Poly::zero());
    }

    #[test]
    fn division() {
        let d = p("E^2 - 6t*E + 5t^2 - 8");
        let (q, r) = p("(E-9t)*(E^2 - 6t*E + 5t^2 - 8)").divrem(&d).unwrap();
        assert_eq!(q, p("E - 9t"));
        assert!(r.is_zero());
        let f = p("E^3 + t*E + J");
        assert_eq!(f.divrem(&Poly::one()).unwrap(), (f.clone(), Poly::zero()));
        assert!(matches!(f.divrem(&Poly::zero()), Err(Error::Domain(_))));
        // leading coefficient 2t does not divide t in Q[t]
        assert!(matches!(
            p("t*E").divrem(&p("2t^2*E + 1")),
            Err(Error::Divisibility(_))
        ));
        let (q, r) = p("E^2 + 1").divrem(&p("2E")).unwrap();
        assert_eq!((q, r), (p("1/2 E"), Poly::one()));
    }

    #[test]
    fn gcd_over_nested_rings() {
        let g = p("E^2 - 6t*E + 5t^2 - 8");
        let a = &g * &p("E - 9t");
        let b = &g * &p("E^2 + t*J");
        assert_eq!(a.gcd(&b), g);
        assert_eq!(p("E-1").gcd(&p("E-2")), Poly::one());
        assert_eq!(p("2t*E + 2t").gcd(&p("t*E^2 - t")), p("t*E + t"));
        assert_eq!(p("6E + 3").content_in(Var::E), Poly::one());
    }

    #[test]
    fn rendering() {
        assert_eq!(p("E^2 - 6t*E + 5t^2 - 8J").to_string(), "E^2 - 6*E*t + 5*t^2 - 8*J");
        assert_eq!(p("-E/2 + 1").to_latex(), "-\\frac{1}{2} E + 1");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(p("sqrt_a^3*E").to_latex(), "E \\sqrt{a}^{3}");
        assert_eq!(Poly::from(ratio(-3, 4)).to_string(), "-3/4");
    }
}
