#![allow(dead_code)]

use proptest::prelude::*;
use tamecount::OrderedFactorization;

/// Groups `primes` into contiguous blocks, a new block starting wherever
/// `cuts[i]` is set.
pub fn grouped(primes: &[u64], cuts: &[bool]) -> OrderedFactorization {
    let mut parts = vec![primes[0]];
    for (i, &p) in primes.iter().enumerate().skip(1) {
        if cuts[i] {
            parts.push(p);
        } else {
            *parts.last_mut().unwrap() *= p;
        }
    }
    OrderedFactorization::new(parts).unwrap()
}

/// `k` random ordered factorizations of one random `n` built from the given
/// primes, at most `max_primes` prime factors with multiplicity.
pub fn factorizations(pool: Vec<u64>, max_primes: usize, k: usize) -> impl Strategy<Value = Vec<OrderedFactorization>> {
    proptest::collection::vec(proptest::sample::select(pool), 1..=max_primes).prop_flat_map(move |ps| {
        let len = ps.len();
        proptest::collection::vec(
            (
                Just(ps.clone()).prop_shuffle(),
                proptest::collection::vec(any::<bool>(), len),
            ),
            k,
        )
        .prop_map(|v| v.iter().map(|(p, c)| grouped(p, c)).collect())
    })
}

pub fn pair(pool: Vec<u64>, max_primes: usize) -> impl Strategy<Value = (OrderedFactorization, OrderedFactorization)> {
    factorizations(pool, max_primes, 2).prop_map(|v| (v[0].clone(), v[1].clone()))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push(q);
        }
    }
    out
}

/// Associatedness straight from the definition: some bijection matching
/// equal values keeps every non-coprime pair in order.
pub fn associated_by_definition(d: &[u64], e: &[u64]) -> bool {
    if d.len() != e.len() {
        return false;
    }
    permutations(d.len()).into_iter().any(|pi| {
        (0..d.len()).all(|i| d[i] == e[pi[i]])
            && (0..d.len()).all(|i| (i + 1..d.len()).all(|j| gcd(d[i], d[j]) == 1 || pi[i] < pi[j]))
    })
}
