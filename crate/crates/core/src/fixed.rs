//! Binary fixed-point reals over `BigInt`, just enough for logarithms of huge
//! integers without materializing them as floats.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// `raw / 2^frac_bits`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixed {
    raw: BigInt,
    frac_bits: u32,
}

/// Bits needed to carry `digits` significant decimal digits.
pub fn bits_for_digits(digits: u32) -> u32 {
    (f64::from(digits) * std::f64::consts::LOG2_10).ceil() as u32
}

impl Fixed {
    pub fn zero(frac_bits: u32) -> Self {
        Fixed {
            raw: BigInt::zero(),
            frac_bits,
        }
    }

    pub fn from_int(x: impl Into<BigInt>, frac_bits: u32) -> Self {
        Fixed {
            raw: x.into() << frac_bits,
            frac_bits,
        }
    }

    pub fn frac_bits(&self) -> u32 {
        self.frac_bits
    }

    pub fn is_positive(&self) -> bool {
        self.raw.is_positive()
    }

    pub fn abs(&self) -> Self {
        Fixed {
            raw: self.raw.abs(),
            frac_bits: self.frac_bits,
        }
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        Fixed {
            raw: &self.raw * k,
            frac_bits: self.frac_bits,
        }
    }

    /// Division by an integer, rounding toward negative infinity.
    pub fn div_int(&self, k: &BigInt) -> Self {
        assert!(!k.is_zero(), "division by zero");
        Fixed {
            raw: self.raw.div_floor(k),
            frac_bits: self.frac_bits,
        }
    }

    /// Quotient of two fixed-point values, at the larger of the two precisions.
    pub fn div(&self, other: &Fixed) -> Self {
        let (a, b) = align(self, other);
        assert!(!b.raw.is_zero(), "division by zero");
        Fixed {
            raw: (a.raw << a.frac_bits).div_floor(&b.raw),
            frac_bits: a.frac_bits,
        }
    }

    /// Changes the number of fractional bits, truncating when reducing.
    pub fn with_frac_bits(&self, frac_bits: u32) -> Self {
        let raw = match frac_bits.cmp(&self.frac_bits) {
            Ordering::Equal => self.raw.clone(),
            Ordering::Greater => &self.raw << (frac_bits - self.frac_bits),
            Ordering::Less => &self.raw >> (self.frac_bits - frac_bits),
        };
        Fixed { raw, frac_bits }
    }

    /// Largest integer not above the value.
    pub fn floor(&self) -> BigInt {
        &self.raw >> self.frac_bits
    }

    /// True when `|self - other| <= 10^-digits * max(|self|, |other|)`.
    pub fn agrees_to(&self, other: &Fixed, digits: u32) -> bool {
        let (a, b) = align(self, other);
        let diff = (&a.raw - &b.raw).abs();
        let scale = a.raw.abs().max(b.raw.abs());
        diff * BigInt::from(10u32).pow(digits) <= scale
    }

    /// Decimal rendering with exactly `digits` places after the point, rounded
    /// half away from zero.
    pub fn to_decimal(&self, digits: u32) -> String {
        let negative = self.raw.is_negative();
        let mag = self.raw.abs();
        let mut int = &mag >> self.frac_bits;
        let frac = &mag - (&int << self.frac_bits);
        let unit = BigInt::from(10u32).pow(digits);
        let mut scaled = frac * &unit;
        if self.frac_bits > 0 {
            scaled += BigInt::one() << (self.frac_bits - 1);
        }
        let mut scaled = scaled >> self.frac_bits;
        if scaled >= unit {
            scaled -= &unit;
            int += 1;
        }
        let sign = if negative && !(int.is_zero() && scaled.is_zero()) {
            "-"
        } else {
            ""
        };
        if digits == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{scaled:0>width$}", width = digits as usize)
        }
    }

    pub fn to_f64(&self) -> f64 {
        let bits = self.raw.bits();
        // keep 64 significant bits, then scale
        let shift = bits.saturating_sub(64);
        let top = (&self.raw >> shift).to_f64().unwrap_or(f64::NAN);
        top * 2f64.powi(shift as i32 - self.frac_bits as i32)
    }
}

fn align(a: &Fixed, b: &Fixed) -> (Fixed, Fixed) {
    let bits = a.frac_bits.max(b.frac_bits);
    (a.with_frac_bits(bits), b.with_frac_bits(bits))
}

impl Add for &Fixed {
    type Output = Fixed;

    fn add(self, rhs: &Fixed) -> Fixed {
        let (a, b) = align(self, rhs);
        Fixed {
            raw: a.raw + b.raw,
            frac_bits: a.frac_bits,
        }
    }
}

impl Sub for &Fixed {
    type Output = Fixed;

    fn sub(self, rhs: &Fixed) -> Fixed {
        let (a, b) = align(self, rhs);
        Fixed {
            raw: a.raw - b.raw,
            frac_bits: a.frac_bits,
        }
    }
}

impl Neg for Fixed {
    type Output = Fixed;

    fn neg(self) -> Fixed {
        Fixed {
            raw: -self.raw,
            frac_bits: self.frac_bits,
        }
    }
}

impl PartialOrd for Fixed {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let (a, b) = align(self, other);
        a.raw.partial_cmp(&b.raw)
    }
}

impl fmt::Display for Fixed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(16) as u32;
        f.write_str(&self.to_decimal(digits))
    }
}

/// `2 atanh(t)` for `0 <= t < 1`, with `t` given at `bits` fractional bits.
fn two_atanh(t: &BigInt, bits: u32) -> BigInt {
    let t2 = (t * t) >> bits;
    let mut power = t.clone();
    let mut sum = BigInt::zero();
    let mut k = 1u64;
    loop {
        let term = &power / BigInt::from(k);
        if term.is_zero() {
            break;
        }
        sum += term;
        power = (&power * &t2) >> bits;
        k += 2;
    }
    sum << 1
}

fn ln2_raw(bits: u32) -> BigInt {
    // ln 2 = 2 atanh(1/3)
    two_atanh(&((BigInt::one() << bits) / 3), bits)
}

/// Natural logarithm of a positive integer to `frac_bits` fractional bits.
///
/// Writes `x = 2^k f` with `1 <= f < 2`, so `ln x = k ln 2 + 2 atanh((f-1)/(f+1))`
/// and the series argument stays below 1/3.
pub fn ln_integer(x: &BigUint, frac_bits: u32) -> Fixed {
    assert!(!x.is_zero(), "logarithm of zero");
    let k = x.bits() - 1;
    let guard = 32 + (64 - k.leading_zeros());
    let bits = frac_bits + guard;
    let x = BigInt::from_biguint(Sign::Plus, x.clone());
    let f = if k <= u64::from(bits) {
        x << (u64::from(bits) - k)
    } else {
        x >> (k - u64::from(bits))
    };
    let one = BigInt::one() << bits;
    let t = ((&f - &one) << bits) / (&f + &one);
    let raw = ln2_raw(bits) * BigInt::from(k) + two_atanh(&t, bits);
    Fixed {
        raw: raw >> guard,
        frac_bits,
    }
}

/// `ln(num / den)` for positive integers.
pub fn ln_ratio(num: &BigUint, den: &BigUint, frac_bits: u32) -> Fixed {
    &ln_integer(num, frac_bits) - &ln_integer(den, frac_bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ln_u(x: u64, bits: u32) -> Fixed {
        ln_integer(&BigUint::from(x), bits)
    }

    #[test]
    fn ln_matches_f64_for_small_integers() {
        for x in [1u64, 2, 3, 5, 7, 10, 15, 135, 1445, 487_350_000, u64::MAX] {
            let got = ln_u(x, 80).to_f64();
            assert!(
                (got - (x as f64).ln()).abs() < 1e-14 * (1.0 + (x as f64).ln()),
                "ln {x}: {got}"
            );
        }
    }

    #[test]
    fn ln2_known_digits() {
        // ln 2 = 0.69314718055994530941723212145817656807550013436025...
        assert_eq!(
            ln_u(2, 200).to_decimal(45),
            "0.693147180559945309417232121458176568075500134"
        );
    }

    #[test]
    fn ln10_known_digits() {
        // ln 10 = 2.30258509299404568401799145468436420760110148862877...
        assert_eq!(
            ln_u(10, 200).to_decimal(40),
            "2.3025850929940456840179914546843642076011"
        );
    }

    #[test]
    fn ln_of_huge_power_is_linear() {
        let big = BigUint::from(3u32).pow(10_000);
        let ln3 = ln_u(3, 128);
        let direct = ln_integer(&big, 128);
        let scaled = ln3.mul_int(&BigInt::from(10_000));
        assert!(direct.agrees_to(&scaled, 30));
    }

    #[test]
    fn decimal_rounding_carries() {
        let x = Fixed {
            raw: BigInt::from(255),
            frac_bits: 8,
        }; // 0.99609375
        assert_eq!(x.to_decimal(2), "1.00");
        assert_eq!(x.to_decimal(8), "0.99609375");
        assert_eq!((-x).to_decimal(3), "-0.996");
        assert_eq!(Fixed::from_int(7, 10).to_decimal(0), "7");
    }

    #[test]
    fn agreement_is_relative() {
        let a = Fixed::from_int(1_000_000, 64);
        let b = &a
            + &Fixed {
                raw: BigInt::one() << 60,
                frac_bits: 64,
            };
        assert!(a.agrees_to(&b, 6));
        assert!(!a.agrees_to(&b, 8));
    }

    #[test]
    fn ordering_and_floor() {
        let a = ln_u(15, 64);
        let b = ln_u(16, 64);
        assert!(a < b);
        assert_eq!(a.floor(), BigInt::from(2));
        assert_eq!(
            ln_ratio(&BigUint::from(27u32), &BigUint::from(5u32), 64).floor(),
            BigInt::from(1)
        );
    }
}
