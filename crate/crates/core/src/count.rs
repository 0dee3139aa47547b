//! Exact spanning-tree counts for `A(n)`.
//!
//! Two independent routes: the class-census recursion, which tracks how many
//! spanning forests of each hub-separation pattern `A(n)` has, and the closed
//! forms obtained by solving that recursion. Every closed form has rational
//! exponents as written; here the numerators are checked to be divisible before
//! any exponentiation, so all arithmetic stays in the integers.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::Step;

/// Default largest `n` whose counts are expanded to full decimal integers.
pub const DEFAULT_EXPANSION_THRESHOLD: u32 = 12;

/// Hard ceiling on expansion regardless of flags; `s_16` already has tens of
/// millions of digits.
pub const MAX_EXPANSION_STEP: u32 = 16;

/// Sizes of the hub-edge-free spanning-subgraph classes of `A(n)`.
///
/// * `a`: spanning 3-forests with every hub in its own tree.
/// * `b`: spanning 2-forests without hub edges in which one fixed hub is
///   separated from the other two. The three choices of isolated hub give
///   equal counts, so one value is stored.
/// * `c`: spanning trees without hub edges.
/// * `s`: all spanning trees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCensus {
    pub n: Step,
    pub a: BigUint,
    pub b: BigUint,
    pub c: BigUint,
    pub s: BigUint,
}

impl ClassCensus {
    /// Checks `a >= 1`, `b = c = 0` exactly at `n = 0`, and `a c = 3 b^2`.
    pub fn check(&self) -> Result<()> {
        if self.a.is_zero() {
            return Err(Error::Consistency(format!("a_{} is zero", self.n)));
        }
        let empty = self.b.is_zero() && self.c.is_zero();
        if empty != (self.n.0 == 0) {
            return Err(Error::Consistency(format!(
                "b_{n} = {} and c_{n} = {} at n = {n}",
                self.b,
                self.c,
                n = self.n
            )));
        }
        if &self.a * &self.c != &self.b * &self.b * 3u32 {
            return Err(Error::Consistency(format!(
                "a_{n} c_{n} != 3 b_{n}^2",
                n = self.n
            )));
        }
        Ok(())
    }
}

/// Census of `A(0)`: the triangle itself is the only 3-forest separating the
/// hubs once its edges are dropped, and it has three spanning trees.
pub fn census_seed() -> ClassCensus {
    ClassCensus {
        n: Step(0),
        a: BigUint::one(),
        b: BigUint::zero(),
        c: BigUint::zero(),
        s: BigUint::from(3u32),
    }
}

/// Advances the census from `A(n)` to `A(n + 1)`.
pub fn census_step(prev: &ClassCensus) -> Result<ClassCensus> {
    let (a, b, c) = (&prev.a, &prev.b, &prev.c);
    let a2 = a * a;
    let a3 = &a2 * a;
    let b2 = b * b;
    let b3 = &b2 * b;
    let a2b = &a2 * b;
    let ab2 = a * &b2;
    let a2c = &a2 * c;
    let abc = a * b * c;

    let next = ClassCensus {
        n: Step(prev.n.0 + 1),
        a: &a3 * 3u32 + &a2b * 6u32,
        b: &a3 + &a2b * 7u32 + &ab2 * 7u32 + &a2c,
        c: &a3 + &a2b * 12u32 + &ab2 * 36u32 + &b3 * 14u32 + &a2c * 3u32 + &abc * 12u32,
        s: &a3 * 16u32 + &a2b * 72u32 + &ab2 * 78u32 + &b3 * 14u32 + &a2c * 9u32 + &abc * 12u32,
    };
    next.check()?;
    Ok(next)
}

/// Censuses for `A(0) ..= A(n)`.
pub fn census_chain(n: Step) -> Result<Vec<ClassCensus>> {
    if n.0 > MAX_EXPANSION_STEP {
        return Err(expansion_refused(n, MAX_EXPANSION_STEP));
    }
    let mut chain = Vec::with_capacity(n.0 as usize + 1);
    chain.push(census_seed());
    for _ in 0..n.0 {
        let next = census_step(chain.last().expect("chain is non-empty"))?;
        chain.push(next);
    }
    Ok(chain)
}

fn expansion_refused(n: Step, limit: u32) -> Error {
    Error::SizeGuard(format!(
        "full expansion of the count for n = {n} exceeds the limit n <= {limit}; \
         use the factored form or log output"
    ))
}

fn pow3(n: u32) -> BigInt {
    BigInt::from(3u32).pow(n)
}

fn pow5(n: u32) -> BigInt {
    BigInt::from(5u32).pow(n)
}

/// `numerator / divisor` after checking the division is exact and non-negative.
fn exact_div(numerator: BigInt, divisor: u32, what: &str) -> Result<BigUint> {
    let (q, r) = numerator.div_rem(&BigInt::from(divisor));
    if !r.is_zero() {
        return Err(Error::Consistency(format!(
            "{what}: {numerator} is not divisible by {divisor}"
        )));
    }
    q.to_biguint()
        .ok_or_else(|| Error::Consistency(format!("{what}: negative value {numerator}")))
}

fn small_exponent(e: &BigUint, n: Step) -> Result<u32> {
    e.to_u32()
        .ok_or_else(|| expansion_refused(n, MAX_EXPANSION_STEP))
}

fn guard_closed(n: Step) -> Result<()> {
    if n.0 > MAX_EXPANSION_STEP {
        return Err(expansion_refused(n, MAX_EXPANSION_STEP));
    }
    Ok(())
}

/// `a_n = 3^((3^n + 2n - 1)/4) * 5^((3^n - 2n - 1)/4)`.
pub fn closed_a(n: Step) -> Result<BigUint> {
    guard_closed(n)?;
    let p = pow3(n.0);
    let two_n = BigInt::from(2 * n.0 as u64);
    let e3 = exact_div(&p + &two_n - 1, 4, "exponent of 3 in a_n")?;
    let e5 = exact_div(&p - &two_n - 1, 4, "exponent of 5 in a_n")?;
    Ok(BigUint::from(3u32).pow(small_exponent(&e3, n)?)
        * BigUint::from(5u32).pow(small_exponent(&e5, n)?))
}

/// `b_n = 15^((3^n - 2n - 1)/4) * (5^n - 3^n) / 2`.
pub fn closed_b(n: Step) -> Result<BigUint> {
    guard_closed(n)?;
    let p = pow3(n.0);
    let e15 = exact_div(
        &p - BigInt::from(2 * n.0 as u64) - 1,
        4,
        "exponent of 15 in b_n",
    )?;
    let half_gap = exact_div(pow5(n.0) - &p, 2, "5^n - 3^n")?;
    Ok(BigUint::from(15u32).pow(small_exponent(&e15, n)?) * half_gap)
}

/// `c_n = 3^((3^n - 6n + 3)/4) * 5^((3^n - 2n - 1)/4) * ((5^n - 3^n)/2)^2`.
pub fn closed_c(n: Step) -> Result<BigUint> {
    guard_closed(n)?;
    let p = pow3(n.0);
    let e3 = exact_div(
        &p - BigInt::from(6 * n.0 as u64) + 3,
        4,
        "exponent of 3 in c_n",
    )?;
    let e5 = exact_div(
        &p - BigInt::from(2 * n.0 as u64) - 1,
        4,
        "exponent of 5 in c_n",
    )?;
    let half_gap = exact_div(pow5(n.0) - &p, 2, "5^n - 3^n")?;
    Ok(BigUint::from(3u32).pow(small_exponent(&e3, n)?)
        * BigUint::from(5u32).pow(small_exponent(&e5, n)?)
        * &half_gap
        * &half_gap)
}

/// `s_n` held as `3^e3 * 5^e5 * m^2` with `m = (3^n + 5^n) / 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredCount {
    pub n: Step,
    pub e3: BigUint,
    pub e5: BigUint,
    pub m: BigUint,
}

impl FactoredCount {
    /// Full decimal value, refused for `n > threshold` or above the hard ceiling.
    pub fn expand(&self, threshold: u32) -> Result<BigUint> {
        let limit = threshold.min(MAX_EXPANSION_STEP);
        if self.n.0 > limit {
            return Err(expansion_refused(self.n, limit));
        }
        Ok(BigUint::from(3u32).pow(small_exponent(&self.e3, self.n)?)
            * BigUint::from(5u32).pow(small_exponent(&self.e5, self.n)?)
            * &self.m
            * &self.m)
    }
}

impl fmt::Display for FactoredCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "3^{} * 5^{} * {}^2", self.e3, self.e5, self.m)
    }
}

/// Closed form for the number of spanning trees, in factored form.
///
/// Valid for every `n`; no expansion happens here.
pub fn closed_s(n: Step) -> Result<FactoredCount> {
    let m = exact_div(pow3(n.0) + pow5(n.0), 2, "3^n + 5^n")?;
    if n.0 == 0 {
        return Ok(FactoredCount {
            n,
            e3: BigUint::one(),
            e5: BigUint::zero(),
            m,
        });
    }
    let k = BigInt::from(2 * (n.0 as u64 - 1));
    let e3 = exact_div((pow3(n.0 - 1) - &k - 1) * 3, 4, "exponent of 3 in s_n")?;
    let e5 = exact_div(pow3(n.0) - &k - 3, 4, "exponent of 5 in s_n")?;
    Ok(FactoredCount { n, e3, e5, m })
}

/// Route used to obtain `s_n` as a full integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMethod {
    Recursion,
    ClosedForm,
}

impl FromStr for CountMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "recursion" => Ok(CountMethod::Recursion),
            "closed-form" => Ok(CountMethod::ClosedForm),
            other => Err(Error::Usage(format!("unknown count method {other:?}"))),
        }
    }
}

/// Number of spanning trees of `A(n)` as a full integer.
pub fn spanning_tree_count(n: Step, method: CountMethod, threshold: u32) -> Result<BigUint> {
    let limit = threshold.min(MAX_EXPANSION_STEP);
    if n.0 > limit {
        return Err(expansion_refused(n, limit));
    }
    match method {
        CountMethod::Recursion => Ok(census_chain(n)?.pop().expect("chain is non-empty").s),
        CountMethod::ClosedForm => closed_s(n)?.expand(threshold),
    }
}
