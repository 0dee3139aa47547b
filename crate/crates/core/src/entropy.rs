//! Spanning-tree entropy `z_n = ln(s_n) / V_n` and its limit `ln(15) / 2`.
//!
//! Each `z_n` is computed twice: from the factored count
//! (`e3 ln 3 + e5 ln 5 + 2 ln m`) and from an expanded logarithmic expression
//! in `n` that never touches `e3`, `e5` or `m`. The two must agree to the
//! requested number of significant digits.

use num_bigint::{BigInt, BigUint};

use crate::count::{closed_s, FactoredCount};
use crate::error::{Error, Result};
use crate::fixed::{bits_for_digits, ln_integer, ln_ratio, Fixed};
use crate::graph::{order_size, Step};

/// Smallest accepted `precision_digits`.
pub const MIN_PRECISION_DIGITS: u32 = 15;

#[derive(Debug, Clone, PartialEq)]
pub struct EntropyRow {
    pub n: Step,
    pub v: BigUint,
    pub ln_s: Fixed,
    /// From the factored count.
    pub z: Fixed,
    /// From the explicit expression in `n`.
    pub z_explicit: Fixed,
    /// `|z_n - ln(15)/2|`.
    pub residual: Fixed,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EntropyTable {
    pub digits: u32,
    pub rows: Vec<EntropyRow>,
    pub limit: Fixed,
}

/// Working precision for row `n`: the residual loses about `log2(3^n)` bits to
/// cancellation against the limit, so those are added on top.
fn working_bits(n: Step, digits: u32) -> u32 {
    let p = BigUint::from(3u32).pow(n.0);
    bits_for_digits(digits) + p.bits() as u32 + 64
}

fn big(x: u32) -> BigUint {
    BigUint::from(x)
}

/// `ln(15) / 2`.
pub fn entropy_limit(frac_bits: u32) -> Fixed {
    ln_integer(&big(15), frac_bits + 1)
        .div_int(&BigInt::from(2))
        .with_frac_bits(frac_bits)
}

/// `ln s_n` from the factored representation.
pub fn ln_count(count: &FactoredCount, frac_bits: u32) -> Fixed {
    let e3 = BigInt::from(count.e3.clone());
    let e5 = BigInt::from(count.e5.clone());
    let parts = [
        ln_integer(&big(3), frac_bits).mul_int(&e3),
        ln_integer(&big(5), frac_bits).mul_int(&e5),
        ln_integer(&count.m, frac_bits).mul_int(&BigInt::from(2)),
    ];
    parts.iter().fold(Fixed::zero(frac_bits), |acc, p| &acc + p)
}

/// `log10 s_n` and the number of decimal digits of `s_n`.
pub fn log10_count(count: &FactoredCount, digits: u32) -> (Fixed, BigUint) {
    let bits = bits_for_digits(digits) + count.e3.bits() as u32 + 64;
    let log10 = ln_count(count, bits).div(&ln_integer(&big(10), bits));
    let digit_count = (log10.floor() + 1u32).to_biguint().unwrap_or_default();
    (log10, digit_count)
}

/// `z_n` through the explicit expression
/// `(-8 ln 2 + ln(27/5) + 3^n ln 15 - 2n ln 135 + 8 ln(3^n + 5^n)) / (2 (5 + 3^n))`.
pub fn z_explicit(n: Step, frac_bits: u32) -> Fixed {
    let p3 = BigUint::from(3u32).pow(n.0);
    let p5 = BigUint::from(5u32).pow(n.0);
    let numerator = [
        ln_integer(&big(2), frac_bits).mul_int(&BigInt::from(-8)),
        ln_ratio(&big(27), &big(5), frac_bits),
        ln_integer(&big(15), frac_bits).mul_int(&BigInt::from(p3.clone())),
        ln_integer(&big(135), frac_bits).mul_int(&BigInt::from(-2 * i64::from(n.0))),
        ln_integer(&(&p3 + &p5), frac_bits).mul_int(&BigInt::from(8)),
    ]
    .iter()
    .fold(Fixed::zero(frac_bits), |acc, t| &acc + t);
    numerator.div_int(&(BigInt::from(p3 + 5u32) * 2))
}

/// One row of the entropy table, with the two `z_n` routes cross-checked.
pub fn entropy_row(n: Step, digits: u32) -> Result<EntropyRow> {
    let bits = working_bits(n, digits);
    let count = closed_s(n)?;
    let (v, _) = order_size(n);
    let ln_s = ln_count(&count, bits);
    let z = ln_s.div_int(&BigInt::from(v.clone()));
    let z_explicit = z_explicit(n, bits);
    if !z.agrees_to(&z_explicit, digits) {
        return Err(Error::Consistency(format!(
            "z_{n} disagrees between routes: {} vs {}",
            z.to_decimal(digits + 2),
            z_explicit.to_decimal(digits + 2)
        )));
    }
    if n.0 >= 1 && !z.is_positive() {
        return Err(Error::Consistency(format!("z_{n} is not positive")));
    }
    let residual = (&z - &entropy_limit(bits)).abs();
    Ok(EntropyRow {
        n,
        v,
        ln_s,
        z,
        z_explicit,
        residual,
    })
}

/// Rows `0 ..= n_max` plus the limit `ln(15)/2`.
pub fn entropy_table(n_max: Step, digits: u32) -> Result<EntropyTable> {
    if digits < MIN_PRECISION_DIGITS {
        return Err(Error::Usage(format!(
            "precision must be at least {MIN_PRECISION_DIGITS} digits, got {digits}"
        )));
    }
    let rows = (0..=n_max.0)
        .map(|n| entropy_row(Step(n), digits))
        .collect::<Result<Vec<_>>>()?;
    Ok(EntropyTable {
        digits,
        rows,
        limit: entropy_limit(bits_for_digits(digits) + 64),
    })
}

impl EntropyTable {
    pub const CSV_HEADER: &'static str = "n,V_n,ln_s,z_n,residual";

    /// Residual of the last row.
    pub fn final_residual(&self) -> &Fixed {
        &self
            .rows
            .last()
            .expect("table has at least one row")
            .residual
    }

    pub fn to_csv(&self) -> String {
        let d = self.digits;
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                row.n,
                row.v,
                row.ln_s.to_decimal(d),
                row.z.to_decimal(d),
                residual_text(&row.residual, d)
            ));
        }
        out
    }
}

/// Scientific notation with `digits` significant digits; residuals shrink
/// like `n / 3^n`, so fixed decimals would hide them.
pub fn residual_text(residual: &Fixed, digits: u32) -> String {
    if !residual.is_positive() {
        return "0".to_string();
    }
    let ten = BigInt::from(10);
    let one = Fixed::from_int(1, residual.frac_bits());
    let upper = Fixed::from_int(10, residual.frac_bits());
    let mut mantissa = residual.clone();
    let mut exponent = 0i64;
    while mantissa >= upper {
        mantissa = mantissa.div_int(&ten);
        exponent += 1;
    }
    while mantissa < one {
        mantissa = mantissa.mul_int(&ten);
        exponent -= 1;
    }
    let mut text = mantissa.to_decimal(digits - 1);
    if text.starts_with("10") {
        text = mantissa.div_int(&ten).to_decimal(digits - 1);
        exponent += 1;
    }
    format!("{text}e{exponent}")
}

/// Published spanning-tree entropies of graphs with the same average degree.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub graph: &'static str,
    pub entropy: f64,
}

pub fn entropy_comparison() -> Vec<ComparisonRow> {
    vec![
        ComparisonRow {
            graph: "apollonian",
            entropy: entropy_limit(128).to_f64(),
        },
        ComparisonRow {
            graph: "sierpinski-3d",
            entropy: 1.5694,
        },
        ComparisonRow {
            graph: "hypercubic-lattice-3d",
            entropy: 1.6734,
        },
    ]
}
