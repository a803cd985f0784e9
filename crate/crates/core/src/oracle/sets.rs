use std::collections::HashSet;

use num_bigint::BigUint;

use super::fibered::count_divisor_intersection;
use super::{check_budget, check_tame, pow_u128};
use crate::factorization::nontrivial_divisors;
use crate::ffpoly::{compose, tame_decompose, FqPoly, PrimeField};
use crate::{Error, OrderedFactorization, Result};

/// Above this many shift-normalized elements the union is counted by
/// inclusion-exclusion instead of being materialized.
const LITERAL_UNION_LIMIT: u128 = 2_000_000;

/// A set of monic original polynomials of one degree, keyed by the
/// little-endian coefficient vector of length `degree + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySet {
    pub field: PrimeField,
    pub degree: usize,
    members: HashSet<Vec<u32>>,
}

impl PolySet {
    pub fn new(field: PrimeField, degree: usize) -> Self {
        PolySet {
            field,
            degree,
            members: HashSet::new(),
        }
    }

    fn key(&self, f: &FqPoly) -> Vec<u32> {
        let mut k = f.coeffs().to_vec();
        k.resize(self.degree + 1, 0);
        k
    }

    /// Inserts `f`; panics unless it is monic original of the set's degree.
    pub fn insert(&mut self, f: &FqPoly) -> bool {
        assert!(f.is_monic_original() && f.deg() == self.degree);
        let k = self.key(f);
        self.members.insert(k)
    }

    pub fn contains(&self, f: &FqPoly) -> bool {
        f.deg() == self.degree && self.members.contains(&self.key(f))
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = FqPoly> + '_ {
        self.members.iter().map(|k| FqPoly::from_coeffs(self.field, k.clone()))
    }

    pub fn intersection(&self, other: &PolySet) -> PolySet {
        PolySet {
            field: self.field,
            degree: self.degree,
            members: self.members.intersection(&other.members).cloned().collect(),
        }
    }

    pub fn union(&self, other: &PolySet) -> PolySet {
        PolySet {
            field: self.field,
            degree: self.degree,
            members: self.members.union(&other.members).cloned().collect(),
        }
    }
}

/// All monic original polynomials of degree `d`. With `normalized`, only
/// those without an `x^(d-1)` term.
fn monic_originals(field: PrimeField, d: usize, normalized: bool) -> Vec<FqPoly> {
    let p = field.p();
    let free = if normalized && d >= 2 { d - 2 } else { d - 1 };
    let mut out = Vec::new();
    let mut c = vec![0u32; d + 1];
    c[d] = 1;
    loop {
        out.push(FqPoly::from_coeffs(field, c.clone()));
        let mut i = 1;
        while i <= free {
            c[i] += 1;
            if c[i] < p {
                break;
            }
            c[i] = 0;
            i += 1;
        }
        if i > free {
            break;
        }
    }
    out
}

fn compositions(field: PrimeField, parts: &[usize], normalized: bool) -> Vec<FqPoly> {
    let (&last, rest) = parts.split_last().expect("nonempty degree sequence");
    let mut acc = monic_originals(field, last, normalized);
    for &d in rest.iter().rev() {
        let outer = monic_originals(field, d, false);
        let mut next = Vec::with_capacity(outer.len() * acc.len());
        for g in &outer {
            for h in &acc {
                next.push(compose(g, h));
            }
        }
        acc = next;
    }
    acc
}

fn sequence_cost(p: u32, parts: &[u64], normalized: bool) -> u128 {
    let s: u64 = parts.iter().map(|d| d - 1).sum();
    pow_u128(p, s as usize - usize::from(normalized))
}

fn parts_of(dseq: &OrderedFactorization) -> Vec<usize> {
    dseq.parts().iter().map(|&d| d as usize).collect()
}

fn check_member(n: usize, dseq: &OrderedFactorization) -> Result<()> {
    if dseq.n() != n as u64 {
        return Err(Error::ProductMismatch {
            expected: n as u64,
            actual: dseq.n(),
        });
    }
    Ok(())
}

/// Every composition `g_1 ∘ ⋯ ∘ g_ℓ` of monic originals with
/// `deg g_i = d_i`.
pub fn composition_set(n: usize, dseq: &OrderedFactorization, field: PrimeField, budget: u128) -> Result<PolySet> {
    check_member(n, dseq)?;
    check_tame(n, field)?;
    check_budget(sequence_cost(field.p(), dseq.parts(), false), budget)?;
    let mut set = PolySet::new(field, n);
    for f in compositions(field, &parts_of(dseq), false) {
        set.insert(&f);
    }
    Ok(set)
}

/// Whether `f` decomposes along the degree sequence `parts`, by
/// peeling left factors off with [`tame_decompose`].
pub fn in_sequence_set(f: &FqPoly, parts: &[usize]) -> Result<bool> {
    if !f.is_monic_original() {
        return Ok(false);
    }
    if parts.iter().product::<usize>() != f.deg() {
        return Ok(false);
    }
    let mut cur = f.clone();
    for &d in &parts[..parts.len().saturating_sub(1)] {
        match tame_decompose(&cur, d)? {
            Some((_, h)) => cur = h,
            None => return Ok(false),
        }
    }
    Ok(true)
}

fn dedup_members(set: &[OrderedFactorization]) -> Vec<OrderedFactorization> {
    let mut out: Vec<OrderedFactorization> = Vec::new();
    for m in set {
        if m.len() >= 2 && !out.contains(m) {
            out.push(m.clone());
        }
    }
    out
}

/// `∩_{d ∈ set} D_{n,d}` as a set: the cheapest member is listed in full and
/// filtered against the others.
pub fn intersection_set(n: usize, set: &[OrderedFactorization], field: PrimeField, budget: u128) -> Result<PolySet> {
    for m in set {
        check_member(n, m)?;
    }
    check_tame(n, field)?;
    let members = dedup_members(set);
    let Some(cheapest) = members
        .iter()
        .min_by_key(|m| sequence_cost(field.p(), m.parts(), false))
    else {
        check_budget(pow_u128(field.p(), n - 1), budget)?;
        let mut all = PolySet::new(field, n);
        for f in monic_originals(field, n, false) {
            all.insert(&f);
        }
        return Ok(all);
    };
    let base = composition_set(n, cheapest, field, budget)?;
    let mut out = PolySet::new(field, n);
    'next: for f in base.iter() {
        for m in &members {
            if m != cheapest && !in_sequence_set(&f, &parts_of(m))? {
                continue 'next;
            }
        }
        out.insert(&f);
    }
    Ok(out)
}

/// `#∩_{d ∈ set} D_{n,d}(F_p)`.
///
/// Sets of two-part sequences go to [`count_divisor_intersection`]; anything
/// else is listed up to shifts and filtered.
pub fn oracle_count_d(n: usize, set: &[OrderedFactorization], field: PrimeField, budget: u128) -> Result<BigUint> {
    for m in set {
        check_member(n, m)?;
    }
    check_tame(n, field)?;
    let p = field.p();
    let members = dedup_members(set);
    if members.is_empty() {
        return Ok(BigUint::from(p).pow((n.max(1) - 1) as u32));
    }
    if members.iter().all(|m| m.len() == 2) {
        let firsts: Vec<usize> = members.iter().map(|m| m.parts()[0] as usize).collect();
        return count_divisor_intersection(n, &firsts, field, budget);
    }
    let cheapest = members
        .iter()
        .min_by_key(|m| sequence_cost(p, m.parts(), true))
        .expect("nonempty");
    check_budget(sequence_cost(p, cheapest.parts(), true), budget)?;
    let mut count = 0u64;
    'next: for f in compositions(field, &parts_of(cheapest), true) {
        for m in &members {
            if m != cheapest && !in_sequence_set(&f, &parts_of(m))? {
                continue 'next;
            }
        }
        count += 1;
    }
    Ok(BigUint::from(count) * p)
}

fn divisor_pairs(n: usize) -> Vec<(usize, usize)> {
    nontrivial_divisors(n as u64)
        .into_iter()
        .map(|d| (d as usize, n / d as usize))
        .collect()
}

/// `#D_n(F_p)` from the union of shift-normalized composition sets.
pub fn union_literal(n: usize, field: PrimeField, budget: u128) -> Result<BigUint> {
    check_tame(n, field)?;
    let p = field.p();
    let pairs = divisor_pairs(n);
    let cost = pairs
        .iter()
        .map(|&(d, e)| pow_u128(p, d + e - 3))
        .fold(0u128, u128::saturating_add);
    check_budget(cost, budget)?;
    let mut set = PolySet::new(field, n);
    for &(d, e) in &pairs {
        for f in compositions(field, &[d, e], true) {
            set.insert(&f);
        }
    }
    Ok(BigUint::from(set.len()) * p)
}

/// `#D_n(F_p)` by inclusion-exclusion over divisor sets, each intersection
/// counted by [`count_divisor_intersection`].
pub fn union_by_inclusion_exclusion(n: usize, field: PrimeField, budget: u128) -> Result<BigUint> {
    check_tame(n, field)?;
    let divisors: Vec<usize> = divisor_pairs(n).into_iter().map(|(d, _)| d).collect();
    let k = divisors.len();
    let mut plus = BigUint::default();
    let mut minus = BigUint::default();
    for mask in 1u64..(1u64 << k) {
        let s: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| divisors[i]).collect();
        let c = count_divisor_intersection(n, &s, field, budget)?;
        if s.len() % 2 == 1 {
            plus += c;
        } else {
            minus += c;
        }
    }
    Ok(plus - minus)
}

/// `#D_n(F_p)` as the size of `∪_d D_{n,(d, n/d)}`.
pub fn oracle_count_union(n: usize, field: PrimeField, budget: u128) -> Result<BigUint> {
    check_tame(n, field)?;
    let p = field.p();
    let cost = divisor_pairs(n)
        .iter()
        .map(|&(d, e)| pow_u128(p, d + e - 3))
        .fold(0u128, u128::saturating_add);
    if cost <= LITERAL_UNION_LIMIT.min(budget) {
        union_literal(n, field, budget)
    } else {
        union_by_inclusion_exclusion(n, field, budget)
    }
}

/// Scans all `p^(n-1)` monic original polynomials of degree `n` and counts
/// those with a tame decomposition at some nontrivial divisor.
pub fn exhaustive_decomposables(n: usize, field: PrimeField, budget: u128) -> Result<BigUint> {
    check_tame(n, field)?;
    let p = field.p();
    if n < 2 {
        return Ok(BigUint::default());
    }
    check_budget(pow_u128(p, n - 1), budget)?;
    let divisors: Vec<usize> = divisor_pairs(n).into_iter().map(|(d, _)| d).collect();
    if divisors.is_empty() {
        return Ok(BigUint::default());
    }
    let mut count = 0u64;
    let mut c = vec![0u32; n + 1];
    c[n] = 1;
    loop {
        let f = FqPoly::from_coeffs(field, c.clone());
        for &d in &divisors {
            if tame_decompose(&f, d)?.is_some() {
                count += 1;
                break;
            }
        }
        let mut i = 1;
        while i < n {
            c[i] += 1;
            if c[i] < p {
                break;
            }
            c[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    Ok(BigUint::from(count))
}
