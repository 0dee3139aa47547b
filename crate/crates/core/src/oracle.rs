//! Determinant oracles: the matrix-tree theorem and its rooted-forest
//! generalization, evaluated exactly by fraction-free elimination.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{build_iterative, ApollonianGraph, Step, VertexId};

/// Largest graph order accepted by the determinant oracles.
pub const DETERMINANT_GUARD: usize = 200;

/// Graph Laplacian with the rows and columns of some vertices removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaplacianMinor {
    order: usize,
    entries: Vec<Vec<BigInt>>,
}

impl LaplacianMinor {
    /// Degree-diagonal minus adjacency, restricted to vertices not in `deleted`.
    pub fn new(g: &ApollonianGraph, deleted: &[VertexId]) -> Self {
        let mut index = vec![None; g.order()];
        let mut next = 0;
        for (v, slot) in index.iter_mut().enumerate() {
            if !deleted.contains(&v) {
                *slot = Some(next);
                next += 1;
            }
        }
        let mut entries = vec![vec![BigInt::zero(); next]; next];
        for &(u, v) in g.edges() {
            if let Some(i) = index[u] {
                entries[i][i] += 1;
            }
            if let Some(j) = index[v] {
                entries[j][j] += 1;
            }
            if let (Some(i), Some(j)) = (index[u], index[v]) {
                entries[i][j] -= 1;
                entries[j][i] -= 1;
            }
        }
        LaplacianMinor {
            order: next,
            entries,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn determinant(&self) -> Result<BigInt> {
        bareiss_determinant(self.entries.clone())
    }
}

/// Exact determinant by Bareiss elimination.
///
/// Every division is checked to leave no remainder; a remainder means the
/// elimination went wrong and is reported as a consistency failure. Returns
/// zero when no pivot can be found.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> Result<BigInt> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::Usage("determinant of a non-square matrix".into()));
    }
    if n == 0 {
        return Ok(BigInt::from(1));
    }
    let mut negate = false;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        let (head, tail) = m.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        for row in tail.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let num = pivot * &row[j] - &lead * &pivot_row[j];
                let (q, r) = num.div_rem(&prev);
                if !r.is_zero() {
                    return Err(Error::Consistency(format!(
                        "fraction-free elimination left a remainder at pivot {k}"
                    )));
                }
                row[j] = q;
            }
            row[k] = BigInt::zero();
        }
        prev = pivot.clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

fn check_guard(g: &ApollonianGraph) -> Result<()> {
    if g.order() > DETERMINANT_GUARD {
        return Err(Error::SizeGuard(format!(
            "determinant oracle limited to {DETERMINANT_GUARD} vertices, graph has {}",
            g.order()
        )));
    }
    Ok(())
}

/// Spanning-tree count by the matrix-tree theorem, deleting hub 0's row and
/// column.
pub fn tree_count_kirchhoff(g: &ApollonianGraph) -> Result<BigUint> {
    check_guard(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let det = LaplacianMinor::new(g, &[g.hubs()[0]]).determinant()?;
    if !det.is_positive() {
        return Err(Error::Consistency(format!(
            "connected graph gave determinant {det}"
        )));
    }
    Ok(det.magnitude().clone())
}

/// Spanning forests with one tree per root, every root in a different tree.
///
/// `roots` must be a non-empty set of hub vertices.
pub fn rooted_forest_count(g: &ApollonianGraph, roots: &[VertexId]) -> Result<BigUint> {
    check_guard(g)?;
    if roots.is_empty() {
        return Err(Error::Usage(
            "rooted forest count needs at least one root".into(),
        ));
    }
    let hubs = g.hubs();
    for (i, r) in roots.iter().enumerate() {
        if !hubs.contains(r) {
            return Err(Error::Usage(format!("root {r} is not a hub")));
        }
        if roots[..i].contains(r) {
            return Err(Error::Usage(format!("root {r} given twice")));
        }
    }
    let det = LaplacianMinor::new(g, roots).determinant()?;
    det.to_biguint()
        .ok_or_else(|| Error::Consistency(format!("negative forest count {det}")))
}

/// Hub-edge-free spanning trees of `A(n)`: the matrix-tree count of `A(n)`
/// with its three hub edges deleted.
pub fn c_count_oracle(n: Step) -> Result<BigUint> {
    let g = build_iterative(n)?.without_hub_edges();
    match tree_count_kirchhoff(&g) {
        Err(Error::Disconnected) => Ok(BigUint::zero()),
        other => other,
    }
}
