//! Table-driven arithmetic on raw coefficient vectors for the inner loops.

use crate::ffpoly::PrimeField;

const TABLE_LIMIT: u32 = 1024;

#[derive(Clone, Debug)]
pub(crate) struct Zp {
    pub p: u32,
    table: Option<Vec<u32>>,
    inv: Vec<u32>,
}

impl Zp {
    pub fn new(field: PrimeField) -> Self {
        let p = field.p();
        let table = (p <= TABLE_LIMIT).then(|| {
            let mut t = vec![0u32; (p * p) as usize];
            for a in 0..p {
                for b in 0..p {
                    t[(a * p + b) as usize] = field.mul(a, b);
                }
            }
            t
        });
        let inv = if p <= TABLE_LIMIT {
            (0..p).map(|a| if a == 0 { 0 } else { field.inv(a) }).collect()
        } else {
            Vec::new()
        };
        Zp { p, table, inv }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.table {
            Some(t) => t[(a * self.p + b) as usize],
            None => ((a as u64 * b as u64) % self.p as u64) as u32,
        }
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn inv(&self, a: u32) -> u32 {
        if self.inv.is_empty() {
            let mut r = 1u64;
            let (mut b, mut k) = (a as u64, self.p as u64 - 2);
            while k > 0 {
                if k & 1 == 1 {
                    r = r * b % self.p as u64;
                }
                b = b * b % self.p as u64;
                k >>= 1;
            }
            r as u32
        } else {
            self.inv[a as usize]
        }
    }
}

/// Solutions of a linear system over `F_p`.
pub(crate) struct Solution {
    pub rank: usize,
    pub particular: Vec<u32>,
    pub kernel: Vec<Vec<u32>>,
    /// The free column behind each kernel vector.
    pub free: Vec<usize>,
}

/// Gaussian elimination on rows `[a_1 … a_u | b]`. `None` when inconsistent.
pub(crate) fn solve(zp: &Zp, rows: &mut [Vec<u32>], unknowns: usize, want_solution: bool) -> Option<Solution> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..unknowns {
        let Some(k) = (r..rows.len()).find(|&k| rows[k][col] != 0) else {
            continue;
        };
        rows.swap(r, k);
        let inv = zp.inv(rows[r][col]);
        if inv != 1 {
            for x in rows[r][col..].iter_mut() {
                *x = zp.mul(*x, inv);
            }
        }
        let prow = rows[r].clone();
        let (head, tail) = rows.split_at_mut(r + 1);
        let fix = |row: &mut Vec<u32>| {
            let f = row[col];
            if f != 0 {
                let nf = zp.neg(f);
                for c in col..=unknowns {
                    if prow[c] != 0 {
                        row[c] = zp.add(row[c], zp.mul(nf, prow[c]));
                    }
                }
            }
        };
        for row in tail.iter_mut() {
            fix(row);
        }
        if want_solution {
            for row in head[..r].iter_mut() {
                fix(row);
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    if rows[r..].iter().any(|row| row[unknowns] != 0) {
        return None;
    }
    let rank = r;
    if !want_solution {
        return Some(Solution {
            rank,
            particular: Vec::new(),
            kernel: Vec::new(),
            free: Vec::new(),
        });
    }
    let mut particular = vec![0u32; unknowns];
    for (i, &c) in pivots.iter().enumerate() {
        particular[c] = rows[i][unknowns];
    }
    let free: Vec<usize> = (0..unknowns).filter(|c| !pivots.contains(c)).collect();
    let mut kernel = Vec::new();
    for &free in &free {
        let mut v = vec![0u32; unknowns];
        v[free] = 1;
        for (i, &c) in pivots.iter().enumerate() {
            v[c] = zp.neg(rows[i][free]);
        }
        kernel.push(v);
    }
    Some(Solution {
        rank,
        particular,
        kernel,
        free,
    })
}
