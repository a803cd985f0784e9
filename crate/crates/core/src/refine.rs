//! Pairwise refinement of ordered factorizations and normalization of sets.

use num_integer::Integer;

use crate::factorization::{is_associated, Basis, OrderedFactorization};
use crate::{Error, Result};

/// Final gcd grid of a refinement.
///
/// `cells` has `rows + 1` rows and `cols + 1` columns. Entry `(i, j)` for
/// `i < rows, j < cols` is the gcd taken when row `i` met column `j`; the
/// last column holds what is left of each `d_i` and the last row what is
/// left of each `e_j`. Row `i` multiplies to `d_i`, column `j` to `e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinementMatrix {
    pub rows: usize,
    pub cols: usize,
    pub cells: Vec<Vec<u64>>,
}

impl RefinementMatrix {
    pub fn build(d: &OrderedFactorization, e: &OrderedFactorization) -> Result<Self> {
        if d.n() != e.n() {
            return Err(Error::ProductMismatch {
                expected: d.n(),
                actual: e.n(),
            });
        }
        let (l, m) = (d.len(), e.len());
        let mut dr = d.parts().to_vec();
        let mut er = e.parts().to_vec();
        let mut cells = vec![vec![1u64; m + 1]; l + 1];
        for i in 0..l {
            for j in 0..m {
                let c = dr[i].gcd(&er[j]);
                cells[i][j] = c;
                dr[i] /= c;
                er[j] /= c;
            }
        }
        for i in 0..l {
            cells[i][m] = dr[i];
        }
        cells[l][..m].copy_from_slice(&er[..m]);
        Ok(RefinementMatrix {
            rows: l,
            cols: m,
            cells,
        })
    }

    /// The grid read row by row, ones dropped.
    pub fn row_reading(&self) -> Vec<u64> {
        (0..self.rows)
            .flat_map(|i| (0..self.cols).map(move |j| (i, j)))
            .map(|(i, j)| self.cells[i][j])
            .filter(|&c| c > 1)
            .collect()
    }

    /// The grid read column by column, ones dropped.
    pub fn column_reading(&self) -> Vec<u64> {
        (0..self.cols)
            .flat_map(|j| (0..self.rows).map(move |i| (i, j)))
            .map(|(i, j)| self.cells[i][j])
            .filter(|&c| c > 1)
            .collect()
    }

    /// Every entry is coprime to every entry strictly below and to its left.
    pub fn is_staircase_coprime(&self) -> bool {
        for i in 0..self.rows {
            for j2 in 0..self.cols {
                for i2 in i + 1..self.rows {
                    for j in 0..j2 {
                        if self.cells[i][j2].gcd(&self.cells[i2][j]) != 1 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Returns `(d ∥ e, e ∥ d)`.
pub fn refine_pair(
    d: &OrderedFactorization,
    e: &OrderedFactorization,
) -> Result<(OrderedFactorization, OrderedFactorization)> {
    let grid = RefinementMatrix::build(d, e)?;
    let n = d.n();
    Ok((
        OrderedFactorization::of(n, grid.row_reading())?,
        OrderedFactorization::of(n, grid.column_reading())?,
    ))
}

/// A pairwise associated set of factorizations sharing one basis.
///
/// Vertex identity in relation graphs comes from the part order of
/// `members[canonical]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedSet {
    pub members: Vec<OrderedFactorization>,
    pub basis: Basis,
    pub canonical: usize,
}

impl NormalizedSet {
    pub fn n(&self) -> u64 {
        self.members[self.canonical].n()
    }

    pub fn canonical_member(&self) -> &OrderedFactorization {
        &self.members[self.canonical]
    }
}

/// Refines a set of factorizations of one `n` until all pairs are associated.
///
/// A set that is already pairwise associated comes back as given, minus
/// duplicates. Otherwise members are taken in ascending lexicographic order. Each new member is
/// refined against the already settled ones, sweeping until nothing moves,
/// then one more sweep over all pairs runs to a fixed point. Duplicates are
/// merged, keeping first occurrences.
pub fn normalize(set: &[OrderedFactorization]) -> Result<NormalizedSet> {
    let first = set
        .first()
        .ok_or_else(|| Error::BadArguments("empty factorization set".into()))?;
    if let Some(bad) = set.iter().find(|f| f.n() != first.n()) {
        return Err(Error::ProductMismatch {
            expected: first.n(),
            actual: bad.n(),
        });
    }
    let mut input: Vec<OrderedFactorization> = Vec::with_capacity(set.len());
    for f in set {
        if !input.contains(f) {
            input.push(f.clone());
        }
    }
    if input.iter().all(|a| input.iter().all(|b| is_associated(a, b))) {
        let basis = input[0].basis();
        return Ok(NormalizedSet {
            members: input,
            basis,
            canonical: 0,
        });
    }
    input.sort();

    let mut settled: Vec<OrderedFactorization> = Vec::with_capacity(input.len());
    for mut f in input {
        loop {
            let mut changed = false;
            for s in settled.iter_mut() {
                let (s2, f2) = refine_pair(s, &f)?;
                if s2 != *s || f2 != f {
                    changed = true;
                }
                *s = s2;
                f = f2;
            }
            if !changed {
                break;
            }
        }
        settled.push(f);
    }

    loop {
        let mut changed = false;
        for i in 0..settled.len() {
            for j in i + 1..settled.len() {
                let (a, b) = refine_pair(&settled[i], &settled[j])?;
                if a != settled[i] || b != settled[j] {
                    changed = true;
                    settled[i] = a;
                    settled[j] = b;
                }
            }
        }
        if !changed {
            break;
        }
    }

    let mut members: Vec<OrderedFactorization> = Vec::with_capacity(settled.len());
    for f in settled {
        if !members.contains(&f) {
            members.push(f);
        }
    }
    debug_assert!(members.iter().all(|a| members.iter().all(|b| is_associated(a, b))));
    let basis = members[0].basis();
    Ok(NormalizedSet {
        members,
        basis,
        canonical: 0,
    })
}
