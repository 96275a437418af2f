//! Scalar types shared across the crate: exact rationals, Gaussian
//! rationals, and the small trait that lets the dense-matrix code run over
//! any of the four coefficient fields we care about (ℚ, ℚ(i), f64, ℂ as
//! complex f64).

use num_bigint::{BigInt, Sign};
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Exact rational scalar.
pub type Rat = BigRational;
/// Exact Gaussian-rational scalar.
pub type CRat = Complex<BigRational>;
/// Complex double.
pub type C64 = Complex<f64>;

pub fn rat_i(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn crat(re: Rat, im: Rat) -> CRat {
    Complex::new(re, im)
}

/// Parses "p/q" or "p" (reduced or not) into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let p: BigInt = num
        .parse()
        .map_err(|_| format!("invalid rational numerator in {s:?}"))?;
    let q: BigInt = den
        .parse()
        .map_err(|_| format!("invalid rational denominator in {s:?}"))?;
    if q.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(p, q))
}

/// Formats a rational as "p" or "p/q" (always reduced, q > 0).
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Exact dyadic rational equal to the given finite float.
pub fn f64_to_rat(x: f64) -> Option<Rat> {
    BigRational::from_float(x)
}

fn floor_rat(r: &Rat) -> BigInt {
    r.floor().to_integer()
}

/// The rational with smallest denominator (then smallest numerator) inside
/// the closed interval [lo, hi]. Used to recover exact roots from isolating
/// intervals produced by bisection.
pub fn simplest_rat_in(lo: &Rat, hi: &Rat) -> Rat {
    assert!(lo <= hi);
    if lo.is_zero() || hi.is_zero() || (lo.is_negative() && hi.is_positive()) {
        return Rat::zero();
    }
    if hi.is_negative() {
        return -simplest_rat_in(&-hi.clone(), &-lo.clone());
    }
    // 0 < lo <= hi
    simplest_pos(lo, hi)
}

fn simplest_pos(lo: &Rat, hi: &Rat) -> Rat {
    let fl = floor_rat(lo);
    let candidate = Rat::from_integer(if lo.is_integer() {
        fl.clone()
    } else {
        &fl + 1
    });
    if candidate <= *hi {
        return candidate;
    }
    // both strictly inside (fl, fl+1)
    let frac_lo = lo - Rat::from_integer(fl.clone());
    let frac_hi = hi - Rat::from_integer(fl.clone());
    let inner = simplest_pos(&frac_hi.recip(), &frac_lo.recip());
    Rat::from_integer(fl) + inner.recip()
}

/// Bit size of a rational, used as a pivot-quality heuristic in exact
/// elimination (small entries keep intermediate growth down).
fn rat_bits(r: &Rat) -> u64 {
    r.numer().bits() + r.denom().bits()
}

fn sign_i8(b: Sign) -> i8 {
    match b {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

pub fn rat_sign(r: &Rat) -> i8 {
    sign_i8(r.numer().sign())
}

/// Coefficient field abstraction for the dense-matrix routines.
///
/// Exact fields answer `is_zero` exactly; float fields answer it literally
/// (tolerances are handled by the elimination routines, not here).
pub trait Scalar: Clone + PartialEq + fmt::Debug + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn div(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn conj(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// Larger is a better pivot. Exact fields rank by smallness of the
    /// representation, float fields by magnitude.
    fn pivot_quality(&self) -> f64;
    /// Magnitude estimate (for residual reporting).
    fn magnitude(&self) -> f64;
}

impl Scalar for Rat {
    fn zero() -> Self {
        Rat::zero()
    }
    fn one() -> Self {
        Rat::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn pivot_quality(&self) -> f64 {
        if Zero::is_zero(self) {
            0.0
        } else {
            1.0 / (1.0 + rat_bits(self) as f64)
        }
    }
    fn magnitude(&self) -> f64 {
        rat_to_f64(self).abs()
    }
}

impl Scalar for CRat {
    fn zero() -> Self {
        Complex::new(Rat::zero(), Rat::zero())
    }
    fn one() -> Self {
        Complex::new(Rat::one(), Rat::zero())
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        // (a+bi)/(c+di) = (a+bi)(c-di)/(c²+d²)
        let n2 = &rhs.re * &rhs.re + &rhs.im * &rhs.im;
        assert!(!Zero::is_zero(&n2), "division by zero Gaussian rational");
        let num = self * Complex::new(rhs.re.clone(), -rhs.im.clone());
        Complex::new(num.re / &n2, num.im / &n2)
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn pivot_quality(&self) -> f64 {
        if Scalar::is_zero(self) {
            0.0
        } else {
            1.0 / (1.0 + (rat_bits(&self.re) + rat_bits(&self.im)) as f64)
        }
    }
    fn magnitude(&self) -> f64 {
        (rat_to_f64(&self.re).powi(2) + rat_to_f64(&self.im).powi(2)).sqrt()
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        *self
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn pivot_quality(&self) -> f64 {
        self.abs()
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl Scalar for C64 {
    fn zero() -> Self {
        Complex::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex::new(1.0, 0.0)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        num_complex::Complex::conj(self)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn pivot_quality(&self) -> f64 {
        self.norm()
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        for s in ["3/4", "-7/2", "5", "0", "-12"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(parse_rat(&format_rat(&r)).unwrap(), r);
        }
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn simplest_rational_recovers_roots() {
        // 1/3 is the simplest rational in [0.33, 0.34]
        let lo = rat(33, 100);
        let hi = rat(34, 100);
        assert_eq!(simplest_rat_in(&lo, &hi), rat(1, 3));
        // spanning zero
        assert_eq!(simplest_rat_in(&rat(-1, 5), &rat(1, 7)), rat_i(0));
        // negative interval
        assert_eq!(simplest_rat_in(&rat(-34, 100), &rat(-33, 100)), rat(-1, 3));
        // integer inside
        assert_eq!(simplest_rat_in(&rat(19, 10), &rat(21, 10)), rat_i(2));
    }
}
