//! Runs every cross-method invariant and collects pass/fail outcomes.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::classify::classify_exhaustive;
use crate::count::{census_chain, closed_a, closed_b, closed_c, closed_s, ClassCensus};
use crate::entropy::{entropy_limit, entropy_row, entropy_table};
use crate::error::{Error, Result};
use crate::graph::{build_iterative, build_merged, order_size, Step};
use crate::oracle::{c_count_oracle, rooted_forest_count, tree_count_kirchhoff};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    pub fn line(&self) -> String {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        format!("{tag} {}: {}", self.name, self.detail)
    }
}

/// Upper bounds on `n` for each family of checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyBounds {
    pub structure: u32,
    pub merged_trees: u32,
    pub exact: u32,
    pub growth: u32,
    pub kirchhoff: u32,
    pub classify: u32,
    pub forests: u32,
    pub entropy: u32,
    pub convergence: u32,
}

impl Default for VerifyBounds {
    fn default() -> Self {
        VerifyBounds {
            structure: 6,
            merged_trees: 4,
            exact: 12,
            growth: 10,
            kirchhoff: 4,
            classify: 2,
            forests: 3,
            entropy: 20,
            convergence: 12,
        }
    }
}

impl VerifyBounds {
    /// Default bounds, each clamped to at most `n_max`.
    pub fn up_to(n_max: u32) -> Self {
        let d = VerifyBounds::default();
        VerifyBounds {
            structure: d.structure.min(n_max),
            merged_trees: d.merged_trees.min(n_max),
            exact: d.exact.min(n_max),
            growth: d.growth.min(n_max),
            kirchhoff: d.kirchhoff.min(n_max),
            classify: d.classify.min(n_max),
            forests: d.forests.min(n_max),
            entropy: d.entropy.min(n_max),
            convergence: d.convergence.min(n_max),
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Consistency(msg()))
    }
}

fn outcome(name: &'static str, result: Result<String>) -> CheckOutcome {
    match result {
        Ok(detail) => CheckOutcome {
            name,
            passed: true,
            detail,
        },
        Err(e) => CheckOutcome {
            name,
            passed: false,
            detail: e.to_string(),
        },
    }
}

fn structure(max: u32) -> Result<String> {
    for n in 0..=max {
        let g = build_iterative(Step(n))?;
        g.validate()?;
        let (v, e) = order_size(Step(n));
        ensure(
            BigUint::from(g.order()) == v && BigUint::from(g.size()) == e,
            || format!("A({n}) order/size differ from formula"),
        )?;
        if n >= 1 {
            let m = build_merged(Step(n))?;
            m.validate()?;
            ensure(
                m.order() == g.order()
                    && m.size() == g.size()
                    && m.degree_sequence() == g.degree_sequence()
                    && m.triangle_count() == g.triangle_count(),
                || format!("merged and iterative A({n}) differ"),
            )?;
        }
    }
    Ok(format!(
        "n = 0..={max}: V, E, E = 3V - 6, hubs, birth steps; merged construction agrees"
    ))
}

fn merged_trees(max: u32) -> Result<String> {
    for n in 1..=max {
        let a = tree_count_kirchhoff(&build_iterative(Step(n))?)?;
        let b = tree_count_kirchhoff(&build_merged(Step(n))?)?;
        ensure(a == b, || format!("A({n}): iterative {a} vs merged {b}"))?;
    }
    Ok(format!("n = 1..={max}"))
}

fn closed_vs_recursion(chain: &[ClassCensus]) -> Result<String> {
    for c in chain {
        let n = c.n;
        ensure(closed_a(n)? == c.a, || format!("a_{n} differs"))?;
        ensure(closed_b(n)? == c.b, || format!("b_{n} differs"))?;
        ensure(closed_c(n)? == c.c, || format!("c_{n} differs"))?;
        ensure(closed_s(n)?.expand(n.0)? == c.s, || {
            format!("s_{n} differs")
        })?;
    }
    let last = chain.last().expect("non-empty chain");
    Ok(format!(
        "n = 0..={}, s_{} has {} digits",
        last.n,
        last.n,
        last.s.to_string().len()
    ))
}

fn identities(chain: &[ClassCensus]) -> Result<String> {
    for c in chain {
        ensure(&c.a * &c.c == &c.b * &c.b * 3u32, || {
            format!("a c != 3 b^2 at n = {}", c.n)
        })?;
    }
    for pair in chain.windows(2) {
        let (cur, next) = (&pair[0], &pair[1]);
        let n = cur.n.0;
        let a3 = &cur.a * &cur.a * &cur.a;
        let holds = if n == 0 {
            next.a == a3 * 3u32
        } else {
            BigUint::from(3u32).pow(n - 1) * &next.a == BigUint::from(5u32).pow(n) * a3
        };
        ensure(holds, || format!("3^(n-1) a_(n+1) != 5^n a_n^3 at n = {n}"))?;
    }
    Ok(format!(
        "a c = 3 b^2 and 3^(n-1) a_(n+1) = 5^n a_n^3 for n = 0..={}",
        chain.len() - 1
    ))
}

fn divisibility(max: u32) -> Result<String> {
    for n in 0..=max {
        let p3 = BigUint::from(3u32).pow(n);
        let p5 = BigUint::from(5u32).pow(n);
        let two = BigUint::from(2u32);
        ensure((&p3 + &p5) % &two == BigUint::zero(), || {
            format!("3^{n} + 5^{n} is odd")
        })?;
        ensure((&p5 - &p3) % &two == BigUint::zero(), || {
            format!("5^{n} - 3^{n} is odd")
        })?;
        // closed_s re-checks both exponent numerators mod 4
        closed_s(Step(n))?;
    }
    Ok(format!("n = 0..={max}"))
}

fn growth(chain: &[ClassCensus], max: u32) -> Result<String> {
    for pair in chain.windows(2).take(max as usize) {
        let (cur, next) = (&pair[0], &pair[1]);
        let n = cur.n;
        ensure(next.s > cur.s, || format!("s_(n+1) <= s_n at n = {n}"))?;
        ensure(next.s < &cur.s * &cur.s * &cur.s, || {
            format!("s_(n+1) >= s_n^3 at n = {n}")
        })?;
        ensure(next.s >= &cur.a * &cur.a * &cur.a * 16u32, || {
            format!("s_(n+1) < 16 a_n^3 at n = {n}")
        })?;
    }
    Ok(format!(
        "16 a_n^3 <= s_(n+1) and s_n < s_(n+1) < s_n^3 for n = 0..{max}"
    ))
}

fn kirchhoff(chain: &[ClassCensus], max: u32) -> Result<String> {
    for c in chain.iter().take(max as usize + 1) {
        let k = tree_count_kirchhoff(&build_iterative(c.n)?)?;
        ensure(k == c.s, || {
            format!("n = {}: determinant {k} vs recursion {}", c.n, c.s)
        })?;
    }
    Ok(format!("n = 0..={max}"))
}

fn classification(chain: &[ClassCensus], max: u32) -> Result<String> {
    for c in chain.iter().take(max as usize + 1) {
        let found = classify_exhaustive(&build_iterative(c.n)?)?;
        found.check_bijections()?;
        ensure(
            found.a == c.a && found.b == c.b && found.c == c.c && found.s == c.s,
            || format!("n = {}: enumeration disagrees with recursion", c.n),
        )?;
    }
    Ok(format!("n = 0..={max}: d = a, e = b, f = a, b = b' = b''"))
}

fn forests(max: u32) -> Result<String> {
    for n in 0..=max {
        let step = Step(n);
        let g = build_iterative(step)?;
        let a = rooted_forest_count(&g, &g.hubs())?;
        ensure(a == closed_a(step)?, || {
            format!("three-root forests at n = {n}")
        })?;
        let h = g.hubs();
        let two = rooted_forest_count(&g.without_hub_edges(), &h[..2])?;
        ensure(two == closed_b(step)? * 2u32, || {
            format!("two-root forests at n = {n}")
        })?;
        if n >= 1 {
            ensure(c_count_oracle(step)? == closed_c(step)?, || {
                format!("hub-edge-free trees at n = {n}")
            })?;
        }
    }
    Ok(format!("n = 0..={max}"))
}

fn entropy_agreement(max: u32) -> Result<String> {
    let table = entropy_table(Step(max), 15)?;
    let residual = table.final_residual().to_f64();
    Ok(format!(
        "both routes agree to 15 digits for n = 0..={max}; residual at n = {max} is {residual:.3e}"
    ))
}

/// `z_n` approaches `ln(15)/2` from below up to `n = 5`, overshoots at
/// `n = 6`, and decreases toward the limit from then on. The residual is
/// therefore decreasing on `2..=6` and on `7..`, with one bump from 6 to 7.
fn convergence(max: u32) -> Result<String> {
    let limit = entropy_limit(128);
    let rows = (2..=max)
        .map(|n| entropy_row(Step(n), 15))
        .collect::<Result<Vec<_>>>()?;
    for pair in rows.windows(2) {
        let (cur, next) = (&pair[0], &pair[1]);
        let n = next.n.0;
        ensure(n == 7 || next.residual < cur.residual, || {
            format!("residual grew at n = {n}")
        })?;
        let above = next.z > limit;
        ensure(above == (n >= 6), || {
            format!("z_{n} on the wrong side of the limit")
        })?;
    }
    if max >= 10 {
        let r10 = entropy_row(Step(10), 15)?.residual;
        ensure(r10.to_f64() < 1e-3, || {
            "residual at n = 10 is not below 1e-3".into()
        })?;
    }
    Ok(format!(
        "z_n crosses {} once (n = 5 to 6); |z_n - ln(15)/2| decreasing on 2..=6 and 7..={max}",
        limit.to_decimal(7)
    ))
}

/// Every check, in a fixed order.
pub fn run_checks(bounds: VerifyBounds) -> Vec<CheckOutcome> {
    let chain = census_chain(Step(bounds.exact.max(bounds.growth + 1)));
    let with_chain = |f: &dyn Fn(&[ClassCensus]) -> Result<String>| match &chain {
        Ok(c) => f(c),
        Err(e) => Err(e.clone()),
    };
    let exact_len = bounds.exact as usize + 1;
    vec![
        outcome("structure", structure(bounds.structure)),
        outcome("merged-tree-count", merged_trees(bounds.merged_trees)),
        outcome(
            "closed-form-vs-recursion",
            with_chain(&|c| closed_vs_recursion(&c[..exact_len])),
        ),
        outcome(
            "algebraic-identities",
            with_chain(&|c| identities(&c[..exact_len])),
        ),
        outcome("divisibility", divisibility(bounds.exact)),
        outcome("growth", with_chain(&|c| growth(c, bounds.growth))),
        outcome("kirchhoff", with_chain(&|c| kirchhoff(c, bounds.kirchhoff))),
        outcome(
            "classification",
            with_chain(&|c| classification(c, bounds.classify)),
        ),
        outcome("forest-oracles", forests(bounds.forests)),
        outcome("entropy-agreement", entropy_agreement(bounds.entropy)),
        outcome("entropy-convergence", convergence(bounds.convergence)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bounds_pass() {
        let outcomes = run_checks(VerifyBounds::up_to(3));
        for o in &outcomes {
            assert!(o.passed, "{}", o.line());
        }
        assert_eq!(outcomes.len(), 11);
    }

    #[test]
    fn bounds_clamp() {
        let b = VerifyBounds::up_to(1);
        assert_eq!((b.structure, b.exact, b.entropy), (1, 1, 1));
        assert_eq!(VerifyBounds::up_to(100), VerifyBounds::default());
    }
}
