//! Brute-force classification of spanning forests by how they separate the
//! hubs. Only feasible for tiny graphs (`A(2)` has 15 edges).
//!
//! With hubs `h0, h1, h2`:
//!
//! | tag  | shape                                                            |
//! |------|------------------------------------------------------------------|
//! | `A`  | 3 trees, each hub in its own tree                                |
//! | `B`  | 2 trees, no hub edge, `h0` alone (`B'`: `h1` alone, `B''`: `h2`) |
//! | `C`  | spanning tree, no hub edge                                       |
//! | `D`  | 2 trees, only hub edge `h0h1`, `h2` in the other tree            |
//! | `E`  | spanning tree, only hub edge `h0h1`, `h2` joined to `h1` without it |
//! | `F`  | spanning tree containing exactly hub edges `h0h1` and `h1h2`     |
//!
//! `D`, `E` and `F` are in bijection with `A`, `B` and `A` by deleting hub
//! edges.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{ApollonianGraph, VertexId};

/// Largest edge count accepted by [`classify_exhaustive`].
pub const MAX_CLASSIFY_EDGES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubgraphClass {
    A,
    B,
    BPrime,
    BDoublePrime,
    C,
    D,
    E,
    F,
    Other,
}

impl fmt::Display for SubgraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            SubgraphClass::A => "A",
            SubgraphClass::B => "B",
            SubgraphClass::BPrime => "B'",
            SubgraphClass::BDoublePrime => "B''",
            SubgraphClass::C => "C",
            SubgraphClass::D => "D",
            SubgraphClass::E => "E",
            SubgraphClass::F => "F",
            SubgraphClass::Other => "other",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClassifiedCensus {
    pub a: BigUint,
    pub b: BigUint,
    pub b_prime: BigUint,
    pub b_double_prime: BigUint,
    pub c: BigUint,
    pub d: BigUint,
    pub e: BigUint,
    pub f: BigUint,
    /// All spanning trees, whatever their hub edges.
    pub s: BigUint,
}

impl ClassifiedCensus {
    fn add(&mut self, class: SubgraphClass) {
        let slot = match class {
            SubgraphClass::A => &mut self.a,
            SubgraphClass::B => &mut self.b,
            SubgraphClass::BPrime => &mut self.b_prime,
            SubgraphClass::BDoublePrime => &mut self.b_double_prime,
            SubgraphClass::C => &mut self.c,
            SubgraphClass::D => &mut self.d,
            SubgraphClass::E => &mut self.e,
            SubgraphClass::F => &mut self.f,
            SubgraphClass::Other => return,
        };
        *slot += 1u32;
    }

    /// `(tag, count)` pairs in display order, ending with `s`.
    pub fn rows(&self) -> Vec<(&'static str, &BigUint)> {
        vec![
            ("A", &self.a),
            ("B", &self.b),
            ("B'", &self.b_prime),
            ("B''", &self.b_double_prime),
            ("C", &self.c),
            ("D", &self.d),
            ("E", &self.e),
            ("F", &self.f),
            ("s", &self.s),
        ]
    }

    /// Checks the hub-edge bijections `d = a`, `e = b`, `f = a`, the symmetry
    /// `b = b' = b''`, and that every spanning tree is accounted for:
    /// `s = c + 6 b + 3 a` (one hub edge: 3 edges times 2 sides for the third
    /// hub; two hub edges: 3 pairs).
    pub fn check_bijections(&self) -> Result<()> {
        let fail = |what: &str| Err(Error::Consistency(format!("classified census: {what}")));
        if self.d != self.a {
            return fail("d != a");
        }
        if self.f != self.a {
            return fail("f != a");
        }
        if self.e != self.b {
            return fail("e != b");
        }
        if self.b != self.b_prime || self.b != self.b_double_prime {
            return fail("b, b', b'' differ");
        }
        if self.s != &self.c + &self.b * 6u32 + &self.a * 3u32 {
            return fail("s != c + 6b + 3a");
        }
        Ok(())
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// False if `a` and `b` were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// Classifies one spanning forest with `components` trees, given the
/// component representative of every vertex and which hub edges it uses.
fn classify_forest(
    components: usize,
    hub_root: [usize; 3],
    uses: [bool; 3],
    joined_without_h01: bool,
) -> SubgraphClass {
    let [r0, r1, r2] = hub_root;
    let [e01, e02, e12] = uses;
    let hub_edges = uses.iter().filter(|&&u| u).count();
    match (components, hub_edges) {
        (3, 0) if r0 != r1 && r1 != r2 && r0 != r2 => SubgraphClass::A,
        (2, 0) if r1 == r2 && r0 != r1 => SubgraphClass::B,
        (2, 0) if r0 == r2 && r1 != r0 => SubgraphClass::BPrime,
        (2, 0) if r0 == r1 && r2 != r0 => SubgraphClass::BDoublePrime,
        (2, 1) if e01 && r2 != r0 => SubgraphClass::D,
        (1, 0) => SubgraphClass::C,
        (1, 1) if e01 && joined_without_h01 => SubgraphClass::E,
        (1, 2) if e01 && e12 && !e02 => SubgraphClass::F,
        _ => SubgraphClass::Other,
    }
}

/// Enumerates every acyclic edge subset with 1, 2 or 3 components and
/// tallies the classes.
///
/// Only subsets of size `V - 1`, `V - 2` and `V - 3` are visited; an acyclic
/// subset of size `V - k` has exactly `k` components.
pub fn classify_exhaustive(g: &ApollonianGraph) -> Result<ClassifiedCensus> {
    if g.size() > MAX_CLASSIFY_EDGES {
        return Err(Error::SizeGuard(format!(
            "exhaustive classification limited to {MAX_CLASSIFY_EDGES} edges, graph has {}",
            g.size()
        )));
    }
    let order = g.order();
    let [h0, h1, h2] = g.hubs();
    let hub_edge_index = |u: VertexId, v: VertexId| -> Option<usize> {
        let e = (u.min(v), u.max(v));
        [
            (h0.min(h1), h0.max(h1)),
            (h0.min(h2), h0.max(h2)),
            (h1.min(h2), h1.max(h2)),
        ]
        .iter()
        .position(|&h| h == e)
    };
    let edges = g.edges();
    let mut census = ClassifiedCensus::default();
    for components in 1..=3usize {
        if components > order {
            continue;
        }
        for subset in (0..edges.len()).combinations(order - components) {
            let mut uf = UnionFind::new(order);
            let mut uses = [false; 3];
            // forest minus the h0h1 edge, for the E test
            let mut without_h01 = UnionFind::new(order);
            let mut acyclic = true;
            for &i in &subset {
                let (u, v) = edges[i];
                if !uf.union(u, v) {
                    acyclic = false;
                    break;
                }
                match hub_edge_index(u, v) {
                    Some(0) => uses[0] = true,
                    other => {
                        if let Some(k) = other {
                            uses[k] = true;
                        }
                        without_h01.union(u, v);
                    }
                }
            }
            if !acyclic {
                continue;
            }
            let hub_root = [uf.find(h0), uf.find(h1), uf.find(h2)];
            let joined = without_h01.find(h1) == without_h01.find(h2);
            let class = classify_forest(components, hub_root, uses, joined);
            census.add(class);
            if components == 1 {
                census.s += 1u32;
            }
        }
    }
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_iterative, Step};

    fn census(n: u32) -> ClassifiedCensus {
        classify_exhaustive(&build_iterative(Step(n)).unwrap()).unwrap()
    }

    fn row(c: &ClassifiedCensus) -> Vec<u64> {
        c.rows()
            .iter()
            .map(|(_, v)| u64::try_from(*v).unwrap())
            .collect()
    }

    #[test]
    fn triangle() {
        let c = census(0);
        // A B B' B'' C D E F s
        assert_eq!(row(&c), vec![1, 0, 0, 0, 0, 1, 0, 1, 3]);
        c.check_bijections().unwrap();
    }

    #[test]
    fn complete_graph_on_four() {
        let c = census(1);
        assert_eq!(row(&c), vec![3, 1, 1, 1, 1, 3, 1, 3, 16]);
        c.check_bijections().unwrap();
    }

    #[test]
    fn classes_are_exclusive() {
        // two hub edges in a 2-forest is never D
        assert_eq!(
            classify_forest(2, [0, 0, 0], [true, false, true], true),
            SubgraphClass::Other
        );
        assert_eq!(
            classify_forest(1, [0, 0, 0], [true, true, true], true),
            SubgraphClass::Other
        );
        assert_eq!(
            classify_forest(1, [0, 0, 0], [false, true, false], true),
            SubgraphClass::Other
        );
    }

    #[test]
    fn edge_guard() {
        let g = build_iterative(Step(3)).unwrap();
        assert!(matches!(classify_exhaustive(&g), Err(Error::SizeGuard(_))));
    }

    #[test]
    fn bijection_check_detects_mismatch() {
        let mut c = census(1);
        c.d += 1u32;
        assert!(c.check_bijections().is_err());
    }
}
