use apollonian::count::{
    census_chain, closed_a, closed_b, closed_c, closed_s, spanning_tree_count, CountMethod,
};
use apollonian::entropy::{entropy_comparison, entropy_row, entropy_table, log10_count};
use apollonian::{Error, Step};
use num_bigint::BigUint;
use proptest::prelude::*;

fn big(s: &str) -> BigUint {
    s.parse().unwrap()
}

#[test]
fn s4_matches_independent_determinant() {
    // sympy Bareiss determinant of the Laplacian minor of A(4)
    let want = big("6820689973308563232421875");
    assert_eq!(
        spanning_tree_count(Step(4), CountMethod::Recursion, 12).unwrap(),
        want
    );
    assert_eq!(
        spanning_tree_count(Step(4), CountMethod::ClosedForm, 12).unwrap(),
        want
    );
}

#[test]
fn closed_forms_equal_recursion_to_twelve() {
    let chain = census_chain(Step(12)).unwrap();
    for c in &chain {
        assert_eq!(closed_a(c.n).unwrap(), c.a, "a_{}", c.n);
        assert_eq!(closed_b(c.n).unwrap(), c.b, "b_{}", c.n);
        assert_eq!(closed_c(c.n).unwrap(), c.c, "c_{}", c.n);
        assert_eq!(closed_s(c.n).unwrap().expand(12).unwrap(), c.s, "s_{}", c.n);
    }
    assert_eq!(chain[12].s.to_string().len(), 156_260);
}

#[test]
fn growth_is_below_cubic() {
    let chain = census_chain(Step(11)).unwrap();
    for w in chain.windows(2) {
        let (cur, next) = (&w[0], &w[1]);
        assert!(next.s > cur.s);
        assert!(next.s < &cur.s * &cur.s * &cur.s, "n = {}", cur.n);
        assert!(next.s >= &cur.a * &cur.a * &cur.a * 16u32);
    }
}

#[test]
fn digits_and_log10_from_factored_form() {
    let (log10, digits) = log10_count(&closed_s(Step(12)).unwrap(), 15);
    assert_eq!(digits, BigUint::from(156_260u32));
    let (log10_3, digits_3) = log10_count(&closed_s(Step(3)).unwrap(), 15);
    assert_eq!(digits_3, BigUint::from(9u32));
    assert!((log10_3.to_f64() - 487_350_000f64.log10()).abs() < 1e-12);
    assert!(log10.to_f64() > 156_259.0);
}

#[test]
fn entropy_reference_values() {
    // mpmath at 50 digits from the exact counts
    let cases = [
        (0, "0.366204096222703230465"),
        (1, "0.693147180559945309417"),
        (2, "1.039409228649504647871"),
        (3, "1.250280819296718319055"),
        (5, "1.351050942732744267218"),
        (10, "1.354137698641080913342"),
        (20, "1.354025106846351989948"),
    ];
    for (n, want) in cases {
        let row = entropy_row(Step(n), 21).unwrap();
        assert_eq!(row.z.to_decimal(21), want, "z_{n}");
    }
}

#[test]
fn entropy_limit_and_residuals() {
    let table = entropy_table(Step(10), 20).unwrap();
    assert_eq!(table.limit.to_decimal(20), "1.35402510055110503300");
    let r = table.final_residual().to_f64();
    assert!((r - 1.1259809e-4).abs() < 1e-11, "{r}");
    let csv = table.to_csv();
    assert!(csv.starts_with("n,V_n,ln_s,z_n,residual\n0,3,1.09861228866810969140,"));
    assert_eq!(csv.lines().count(), 12);
}

#[test]
fn entropy_rejects_low_precision() {
    assert!(matches!(entropy_table(Step(3), 14), Err(Error::Usage(_))));
}

#[test]
fn comparison_table() {
    let rows = entropy_comparison();
    assert_eq!(rows.len(), 3);
    assert_eq!(format!("{:.4}", rows[0].entropy), "1.3540");
    assert_eq!(rows[1].entropy, 1.5694);
    assert_eq!(rows[2].entropy, 1.6734);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn exponents_are_integral(n in 0u32..400) {
        let f = closed_s(Step(n)).unwrap();
        let m = (BigUint::from(3u32).pow(n) + BigUint::from(5u32).pow(n)) / 2u32;
        prop_assert_eq!(f.m, m);
    }

    #[test]
    fn routes_agree_on_z(n in 0u32..60, digits in 15u32..40) {
        let row = entropy_row(Step(n), digits).unwrap();
        prop_assert!(row.z.agrees_to(&row.z_explicit, digits));
    }
}
