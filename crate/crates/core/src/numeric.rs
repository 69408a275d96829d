//! Fixed-precision binary floats for the few places that need `exp` or an
//! irrational square root.

use alloc::format;

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::IBig;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::rational::{int, Rational};

pub type Float = FBig<HalfEven, 2>;

pub const DEFAULT_PRECISION_BITS: usize = 128;

fn to_ibig(n: &BigInt) -> IBig {
    IBig::from_str_radix(&n.to_str_radix(16), 16).expect("hex digits round-trip")
}

fn from_ibig(n: &IBig) -> BigInt {
    BigInt::parse_bytes(format!("{n:x}").as_bytes(), 16).expect("hex digits round-trip")
}

pub fn from_rational(r: &Rational, bits: usize) -> Float {
    let num = Float::from(to_ibig(r.numer())).with_precision(bits).value();
    let den = Float::from(to_ibig(r.denom())).with_precision(bits).value();
    num / den
}

/// The exact rational value of a float.
pub fn to_rational(f: &Float) -> Rational {
    let repr = f.repr();
    let sig = from_ibig(repr.significand());
    let e = repr.exponent();
    if e >= 0 {
        Rational::from_integer(sig << e as usize)
    } else {
        Rational::new(sig, BigInt::from(1) << e.unsigned_abs())
    }
}

pub fn sqrt(r: &Rational, bits: usize) -> Float {
    from_rational(r, bits).sqrt()
}

pub fn exp(x: &Float) -> Float {
    x.exp()
}

/// `|a - b| / max(|a|, |b|)`, zero when both vanish.
pub fn relative_diff(a: &Rational, b: &Rational) -> Rational {
    let scale = if a.abs() > b.abs() { a.abs() } else { b.abs() };
    if scale.is_zero() {
        int(0)
    } else {
        (a - b).abs() / scale
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{parse, ratio, to_decimal};

    #[test]
    fn rational_round_trip() {
        for r in [ratio(3, 8), ratio(-5, 1), int(0), ratio(-1, 1024)] {
            assert_eq!(to_rational(&from_rational(&r, 64)), r);
        }
        let third = to_rational(&from_rational(&ratio(1, 3), 128));
        assert!(relative_diff(&third, &ratio(1, 3)) < parse("1e-38").unwrap());
    }

    #[test]
    fn sqrt_and_exp() {
        let s = to_rational(&sqrt(&int(2), 128));
        assert_eq!(to_decimal(&s, 30), "1.414213562373095048801688724210");
        let e = to_rational(&exp(&from_rational(&int(1), 128)));
        assert_eq!(to_decimal(&e, 30), "2.718281828459045235360287471353");
    }
}
