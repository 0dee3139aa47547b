//! Explicit construction of Apollonian networks.
//!
//! `A(0)` is a triangle. `A(n)` inserts one vertex into every triangle created
//! at step `n - 1` and joins it to the triangle's three corners. The same graph
//! also arises by gluing three copies of `A(n - 1)` along three pairs of hub
//! edges; both constructions live here so they can be checked against each
//! other.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};

pub type VertexId = usize;

/// Largest step for which the explicit graph is built (`V_16` is about 21.5 million).
pub const MAX_BUILD_STEP: u32 = 16;

/// Construction step `n` of `A(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
pub struct Step(pub u32);

impl Step {
    pub fn get(self) -> u32 {
        self.0
    }
}

impl From<u32> for Step {
    fn from(n: u32) -> Self {
        Step(n)
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Step {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .parse::<u32>()
            .map(Step)
            .map_err(|_| Error::Usage(format!("step must be a non-negative integer, got {s:?}")))
    }
}

/// `(V_n, E_n) = ((3^n + 5) / 2, 3 (3^n + 1) / 2)`.
pub fn order_size(n: Step) -> (BigUint, BigUint) {
    let p = BigUint::from(3u32).pow(n.0);
    let order = (&p + 5u32) >> 1;
    let size = ((p + 1u32) * 3u32) >> 1;
    (order, size)
}

/// An explicit `A(n)` with its hubs distinguished.
///
/// Edges are stored once as `(min, max)` and kept sorted; adjacency lists are
/// sorted as well, so membership tests are binary searches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApollonianGraph {
    step: Step,
    birth: Vec<u32>,
    edges: Vec<(VertexId, VertexId)>,
    adjacency: Vec<Vec<VertexId>>,
    hubs: [VertexId; 3],
}

fn normalize(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

fn check_build_step(n: Step) -> Result<()> {
    if n.0 > MAX_BUILD_STEP {
        return Err(Error::SizeGuard(format!(
            "refusing to build A({n}) explicitly (limit is n <= {MAX_BUILD_STEP}); \
             use the formula-based count/entropy operations instead"
        )));
    }
    Ok(())
}

impl ApollonianGraph {
    fn from_parts(
        step: Step,
        birth: Vec<u32>,
        mut edges: Vec<(VertexId, VertexId)>,
        hubs: [VertexId; 3],
    ) -> Result<Self> {
        let order = birth.len();
        for e in edges.iter_mut() {
            if e.0 == e.1 {
                return Err(Error::Consistency(format!("self-loop at vertex {}", e.0)));
            }
            if e.0.max(e.1) >= order {
                return Err(Error::Consistency(format!(
                    "edge {e:?} references a missing vertex"
                )));
            }
            *e = normalize(e.0, e.1);
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Consistency(format!("multi-edge {:?}", w[0])));
        }
        let mut adjacency = vec![Vec::new(); order];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in adjacency.iter_mut() {
            list.sort_unstable();
        }
        Ok(ApollonianGraph {
            step,
            birth,
            edges,
            adjacency,
            hubs,
        })
    }

    pub fn step(&self) -> Step {
        self.step
    }

    pub fn order(&self) -> usize {
        self.birth.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn hubs(&self) -> [VertexId; 3] {
        self.hubs
    }

    /// The three edges joining hub pairs, each as `(min, max)`, sorted.
    pub fn hub_edges(&self) -> [(VertexId, VertexId); 3] {
        let [a, b, c] = self.hubs;
        let mut out = [normalize(a, b), normalize(a, c), normalize(b, c)];
        out.sort_unstable();
        out
    }

    pub fn is_hub_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.hub_edges().contains(&normalize(u, v))
    }

    /// Sorted `(min, max)` edge list.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.order() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Step at which `v` was introduced (hubs are born at step 0).
    pub fn birth_step(&self, v: VertexId) -> u32 {
        self.birth[v]
    }

    pub fn birth_steps(&self) -> &[u32] {
        &self.birth
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        degrees.sort_unstable();
        degrees
    }

    pub fn triangle_count(&self) -> u64 {
        let mut count = 0u64;
        for &(u, v) in &self.edges {
            // common neighbours above v, so each triangle is counted once
            let (a, b) = (&self.adjacency[u], &self.adjacency[v]);
            let (mut i, mut j) = (
                a.partition_point(|&w| w <= v),
                b.partition_point(|&w| w <= v),
            );
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        count += 1;
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
        count
    }

    /// Number of vertices per birth step, indexed by step.
    pub fn birth_histogram(&self) -> Vec<usize> {
        let mut hist = vec![0usize; self.step.0 as usize + 1];
        for &t in &self.birth {
            hist[t as usize] += 1;
        }
        hist
    }

    pub fn is_connected(&self) -> bool {
        if self.order() == 0 {
            return true;
        }
        let mut seen = vec![false; self.order()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.order()
    }

    /// A copy of this graph with the three hub edges removed.
    ///
    /// The result keeps hub labels but no longer satisfies the structural
    /// invariants; it is only meant as input to the determinant oracles.
    pub fn without_hub_edges(&self) -> ApollonianGraph {
        let hub_edges = self.hub_edges();
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|e| !hub_edges.contains(e))
            .collect();
        ApollonianGraph::from_parts(self.step, self.birth.clone(), edges, self.hubs)
            .expect("removing edges keeps the graph simple")
    }

    /// Checks every structural invariant of `A(n)`.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Consistency(msg));
        let (order, size) = order_size(self.step);
        if BigUint::from(self.order()) != order || BigUint::from(self.size()) != size {
            return fail(format!(
                "A({}) has {} vertices and {} edges, expected {order} and {size}",
                self.step,
                self.order(),
                self.size()
            ));
        }
        if self.size() + 6 != 3 * self.order() {
            return fail(format!("E = {} differs from 3V - 6", self.size()));
        }
        let [a, b, c] = self.hubs;
        if a == b || b == c || a == c {
            return fail(format!("hubs {:?} are not distinct", self.hubs));
        }
        for (u, v) in self.hub_edges() {
            if !self.has_edge(u, v) {
                return fail(format!("hub edge ({u}, {v}) missing"));
            }
        }
        for v in 0..self.order() {
            let t = self.birth[v];
            let older = self.adjacency[v]
                .iter()
                .filter(|&&u| self.birth[u] < t)
                .count();
            if t == 0 {
                if !self.hubs.contains(&v) {
                    return fail(format!("vertex {v} has birth step 0 but is not a hub"));
                }
            } else if older != 3 {
                return fail(format!(
                    "vertex {v} born at step {t} had degree {older} on creation"
                ));
            }
        }
        for (t, &count) in self.birth_histogram().iter().enumerate().skip(1) {
            if count != 3usize.pow(t as u32 - 1) {
                return fail(format!(
                    "{count} vertices born at step {t}, expected 3^{}",
                    t - 1
                ));
            }
        }
        Ok(())
    }
}

/// Builds `A(n)` by repeated triangle subdivision.
///
/// Hubs are 0, 1, 2. At each step the triangles created in the previous step
/// are sorted by vertex triple and subdivided in that order, so vertex ids are
/// deterministic.
pub fn build_iterative(n: Step) -> Result<ApollonianGraph> {
    check_build_step(n)?;
    let mut birth = vec![0u32; 3];
    let mut edges = vec![(0, 1), (0, 2), (1, 2)];
    let mut frontier: Vec<[VertexId; 3]> = vec![[0, 1, 2]];
    for t in 1..=n.0 {
        frontier.sort_unstable();
        let mut next = Vec::with_capacity(frontier.len() * 3);
        for &[x, y, z] in &frontier {
            let v = birth.len();
            birth.push(t);
            edges.extend([(x, v), (y, v), (z, v)]);
            next.extend([[x, y, v], [x, z, v], [y, z, v]]);
        }
        frontier = next;
    }
    ApollonianGraph::from_parts(n, birth, edges, [0, 1, 2])
}

/// Builds `A(n)` by gluing three copies of `A(n - 1)`.
///
/// With outer hubs 0, 1, 2 and centre 3, the copies occupy the triangles
/// (0, 1, 3), (1, 2, 3) and (2, 0, 3). Each copy maps its hubs in order onto
/// the corners of its triangle, so neighbouring copies share exactly one edge
/// to the centre and the hub edges of the result are the copies' first hub
/// edges.
pub fn build_merged(n: Step) -> Result<ApollonianGraph> {
    check_build_step(n)?;
    let mut g = build_iterative(Step(0))?;
    for _ in 0..n.0 {
        g = merge_three(&g)?;
    }
    Ok(g)
}

fn merge_three(g: &ApollonianGraph) -> Result<ApollonianGraph> {
    const CORNERS: [[VertexId; 3]; 3] = [[0, 1, 3], [1, 2, 3], [2, 0, 3]];
    let interior = g.order() - 3;
    let mut birth = vec![0, 0, 0, 1];
    birth.reserve(3 * interior);
    let mut edges = Vec::with_capacity(3 * g.size());
    for corners in CORNERS {
        let mut map = vec![usize::MAX; g.order()];
        for (k, &h) in g.hubs.iter().enumerate() {
            map[h] = corners[k];
        }
        for (slot, &t) in map.iter_mut().zip(&g.birth) {
            if *slot == usize::MAX {
                *slot = birth.len();
                birth.push(t + 1);
            }
        }
        edges.extend(g.edges.iter().map(|&(u, v)| normalize(map[u], map[v])));
    }
    edges.sort_unstable();
    edges.dedup();
    if birth.len() != 3 * g.order() - 5 || edges.len() != 3 * g.size() - 3 {
        return Err(Error::Consistency(format!(
            "merge produced {} vertices and {} edges from copies with {} and {}",
            birth.len(),
            edges.len(),
            g.order(),
            g.size()
        )));
    }
    ApollonianGraph::from_parts(Step(g.step.0 + 1), birth, edges, [0, 1, 2])
}

/// Text serializations of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    EdgeList,
    Dot,
    Json,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-list" => Ok(ExportFormat::EdgeList),
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            other => Err(Error::Usage(format!(
                "unknown graph format {other:?} (expected edge-list, dot or json)"
            ))),
        }
    }
}

#[derive(Serialize)]
struct JsonVertex {
    id: VertexId,
    birth_step: u32,
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    n: u32,
    order: usize,
    size: usize,
    hubs: [VertexId; 3],
    hub_edges: [(VertexId, VertexId); 3],
    vertices: Vec<JsonVertex>,
    edges: &'a [(VertexId, VertexId)],
}

impl ApollonianGraph {
    pub fn export(&self, format: ExportFormat) -> String {
        match format {
            ExportFormat::EdgeList => {
                let mut out = String::with_capacity(self.size() * 8);
                for (u, v) in &self.edges {
                    out.push_str(&format!("{u} {v}\n"));
                }
                out
            }
            ExportFormat::Dot => self.to_dot(),
            ExportFormat::Json => {
                let doc = JsonGraph {
                    n: self.step.0,
                    order: self.order(),
                    size: self.size(),
                    hubs: self.hubs,
                    hub_edges: self.hub_edges(),
                    vertices: self
                        .birth
                        .iter()
                        .enumerate()
                        .map(|(id, &birth_step)| JsonVertex { id, birth_step })
                        .collect(),
                    edges: &self.edges,
                };
                let mut out = serde_json::to_string_pretty(&doc).expect("graph serializes");
                out.push('\n');
                out
            }
        }
    }

    fn to_dot(&self) -> String {
        let mut out = format!("graph apollonian_{} {{\n", self.step);
        for (k, h) in self.hubs.iter().enumerate() {
            out.push_str(&format!("  {h} [hub={k}, shape=doublecircle];\n"));
        }
        for &(u, v) in &self.edges {
            if self.is_hub_edge(u, v) {
                out.push_str(&format!("  {u} -- {v} [hub_edge=true, penwidth=2];\n"));
            } else {
                out.push_str(&format!("  {u} -- {v};\n"));
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders_match_formula() {
        assert_eq!(order_size(Step(0)), (3u32.into(), 3u32.into()));
        assert_eq!(order_size(Step(4)), (43u32.into(), 123u32.into()));
        assert_eq!(order_size(Step(10)), (29527u32.into(), 88575u32.into()));
    }

    #[test]
    fn iterative_base_cases() {
        let g0 = build_iterative(Step(0)).unwrap();
        assert_eq!((g0.order(), g0.size()), (3, 3));
        let g1 = build_iterative(Step(1)).unwrap();
        assert_eq!((g1.order(), g1.size()), (4, 6));
        assert_eq!(g1.degree_sequence(), vec![3, 3, 3, 3]);
        let g3 = build_iterative(Step(3)).unwrap();
        assert_eq!((g3.order(), g3.size()), (16, 42));
    }

    #[test]
    fn iterative_numbering_follows_sorted_triangles() {
        let g = build_iterative(Step(2)).unwrap();
        // vertex 4 subdivides (0,1,3), 5 subdivides (0,2,3), 6 subdivides (1,2,3)
        assert_eq!(g.neighbors(4), &[0, 1, 3]);
        assert_eq!(g.neighbors(5), &[0, 2, 3]);
        assert_eq!(g.neighbors(6), &[1, 2, 3]);
    }

    #[test]
    fn built_graphs_validate() {
        for n in 0..=6 {
            build_iterative(Step(n)).unwrap().validate().unwrap();
            build_merged(Step(n)).unwrap().validate().unwrap();
        }
    }

    #[test]
    fn merged_agrees_with_iterative() {
        for n in 1..=6 {
            let a = build_iterative(Step(n)).unwrap();
            let b = build_merged(Step(n)).unwrap();
            assert_eq!(a.order(), b.order());
            assert_eq!(a.size(), b.size());
            assert_eq!(a.degree_sequence(), b.degree_sequence());
            assert_eq!(a.triangle_count(), b.triangle_count());
        }
    }

    #[test]
    fn size_guard_refuses_large_steps() {
        assert!(matches!(
            build_iterative(Step(17)),
            Err(Error::SizeGuard(_))
        ));
        assert!(matches!(build_merged(Step(40)), Err(Error::SizeGuard(_))));
    }

    #[test]
    fn validate_catches_missing_hub_edge() {
        let g = build_iterative(Step(2)).unwrap().without_hub_edges();
        assert!(matches!(g.validate(), Err(Error::Consistency(_))));
    }

    #[test]
    fn step_rejects_negative_input() {
        assert!("-1".parse::<Step>().is_err());
        assert!("x".parse::<Step>().is_err());
        assert_eq!("7".parse::<Step>().unwrap(), Step(7));
    }

    #[test]
    fn edge_list_of_triangle() {
        let g = build_iterative(Step(0)).unwrap();
        assert_eq!(g.export(ExportFormat::EdgeList), "0 1\n0 2\n1 2\n");
        let g2 = build_iterative(Step(2)).unwrap();
        assert_eq!(g2.export(ExportFormat::EdgeList).lines().count(), 15);
    }

    #[test]
    fn json_carries_hubs_and_birth_steps() {
        let g = build_iterative(Step(1)).unwrap();
        let doc: serde_json::Value = serde_json::from_str(&g.export(ExportFormat::Json)).unwrap();
        assert_eq!(doc["hubs"], serde_json::json!([0, 1, 2]));
        assert_eq!(doc["vertices"][3]["birth_step"], 1);
        assert_eq!(
            doc["hub_edges"],
            serde_json::json!([[0, 1], [0, 2], [1, 2]])
        );
        assert_eq!(doc["edges"].as_array().unwrap().len(), 6);
    }

    #[test]
    fn dot_marks_hubs() {
        let dot = build_iterative(Step(1)).unwrap().export(ExportFormat::Dot);
        assert!(dot.starts_with("graph apollonian_1 {"));
        assert_eq!(dot.matches("doublecircle").count(), 3);
        assert_eq!(dot.matches("hub_edge=true").count(), 3);
        assert_eq!(dot.matches(" -- ").count(), 6);
    }

    #[test]
    fn unknown_format_is_usage_error() {
        assert!(matches!(
            "graphml".parse::<ExportFormat>(),
            Err(Error::Usage(_))
        ));
    }
}
