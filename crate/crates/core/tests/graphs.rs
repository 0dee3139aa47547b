use apollonian::graph::{build_iterative, build_merged, order_size, ExportFormat, Step};
use num_bigint::BigUint;

#[test]
fn order_and_size_through_six() {
    for n in 0..=6 {
        let g = build_iterative(Step(n)).unwrap();
        let (v, e) = order_size(Step(n));
        assert_eq!(BigUint::from(g.order()), v);
        assert_eq!(BigUint::from(g.size()), e);
        assert_eq!(g.size() + 6, 3 * g.order());
    }
}

#[test]
fn birth_steps_grow_by_powers_of_three() {
    let g = build_iterative(Step(6)).unwrap();
    assert_eq!(g.birth_histogram(), vec![3, 1, 3, 9, 27, 81, 243]);
    let m = build_merged(Step(6)).unwrap();
    assert_eq!(m.birth_histogram(), g.birth_histogram());
}

#[test]
fn merged_matches_iterative_degrees() {
    for n in 1..=6 {
        let a = build_iterative(Step(n)).unwrap();
        let b = build_merged(Step(n)).unwrap();
        assert_eq!(a.degree_sequence(), b.degree_sequence(), "n = {n}");
        assert_eq!(a.triangle_count(), b.triangle_count(), "n = {n}");
    }
}

#[test]
fn edge_list_parses_back() {
    let g = build_merged(Step(4)).unwrap();
    let parsed: Vec<(usize, usize)> = g
        .export(ExportFormat::EdgeList)
        .lines()
        .map(|l| {
            let (u, v) = l.split_once(' ').unwrap();
            (u.parse().unwrap(), v.parse().unwrap())
        })
        .collect();
    assert_eq!(parsed, g.edges());
}

#[test]
fn exports_are_stable() {
    let a = build_iterative(Step(3)).unwrap();
    let b = build_iterative(Step(3)).unwrap();
    for f in [
        ExportFormat::EdgeList,
        ExportFormat::Dot,
        ExportFormat::Json,
    ] {
        assert_eq!(a.export(f), b.export(f));
    }
}
