//! Symbolic counts as polynomials in `q`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;

use crate::factorization::nontrivial_divisors;
use crate::refine::normalize;
use crate::relgraph::{build_graph, neighborhood_products, scc_chain, RelationGraph};
use crate::{Error, OrderedFactorization, QPolynomial, Result};

/// Monic original polynomials of degree `n`: `q^(n-1)`.
pub fn count_p(n: u64) -> QPolynomial {
    QPolynomial::q_pow((n.max(1) - 1) as u32)
}

/// Compositions along one degree sequence: `q^(Σ d_i - ℓ)`.
pub fn count_d_single(n: u64, dseq: &OrderedFactorization) -> Result<QPolynomial> {
    if dseq.n() != n {
        return Err(Error::ProductMismatch {
            expected: n,
            actual: dseq.n(),
        });
    }
    let s: u64 = dseq.parts().iter().sum();
    Ok(QPolynomial::q_pow((s - dseq.len() as u64) as u32))
}

/// `q (q^⌊d/e⌋ + (1 - δ) (q - 1))` with `δ = 1` iff `e = 2`.
pub fn count_two_collision(d: u64, e: u64) -> Result<QPolynomial> {
    if d.gcd(&e) != 1 {
        return Err(Error::NotCoprime(d, e));
    }
    if !(d > e && e >= 2) {
        return Err(Error::BadOrder(d, e));
    }
    Ok(component_polynomial((d / e) as u32, e == 2))
}

/// `q (q^s + (1 - δ)(q - 1))`.
fn component_polynomial(s: u32, delta: bool) -> QPolynomial {
    let mut p = QPolynomial::q_pow(s + 1);
    if !delta {
        p = &p + &QPolynomial::from_terms([(2, 1), (1, -1)]);
    }
    p
}

fn orbit_args(d: u64, e: u64, q: u64) -> Result<()> {
    if d < 2 || e < 1 {
        return Err(Error::BadArguments(format!(
            "need d >= 2 and e >= 1, got d = {d}, e = {e}"
        )));
    }
    if d.gcd(&e) != 1 {
        return Err(Error::BadArguments(format!("{d} and {e} are not coprime")));
    }
    if q < 2 || q.gcd(&(d * e)) != 1 {
        return Err(Error::BadArguments(format!("q = {q} must be coprime to {}", d * e)));
    }
    Ok(())
}

/// Size of the shift orbit of the exponential family of degree `d`.
pub fn orbit_size_exp(d: u64, e: u64, q: u64) -> Result<BigUint> {
    orbit_args(d, e, q)?;
    let qq = BigUint::from(q);
    Ok(match e {
        1 => qq.pow((d - 1) as u32),
        2 => qq.pow((d / 2 + 1) as u32) - &qq * (q - 1) / 2u32,
        _ => qq.pow((d / e + 1) as u32),
    })
}

/// Size of the shift orbit of the Dickson family of degree `d`.
pub fn orbit_size_trig(d: u64, e: u64, q: u64) -> Result<BigUint> {
    orbit_args(d, e, q)?;
    Ok(if d == 2 {
        BigUint::from(q)
    } else {
        BigUint::from(q * (q - 1) / (q - 1).gcd(&e))
    })
}

/// Count for one strongly connected component.
///
/// A single vertex `d` gives `q^(d-1)`. Otherwise, with `e_i` the product of
/// the two-way neighbours of `d_i`, the count is
/// `q (q^Σ⌊d_i/e_i⌋ + (1 - δ)(q - 1))` where `δ = 1` iff
/// `min(d_i, e_i) = 2` for every vertex.
pub fn count_component(g: &RelationGraph) -> Result<QPolynomial> {
    if g.len() == 1 {
        return Ok(QPolynomial::q_pow((g.vertices[0].value - 1) as u32));
    }
    let e = neighborhood_products(g)?;
    let mut s = 0u64;
    let mut delta = true;
    for v in &g.vertices {
        let ev = e[&v.id];
        s += v.value / ev;
        if v.value.min(ev) != 2 {
            delta = false;
        }
    }
    Ok(component_polynomial(s as u32, delta))
}

/// Product of the component counts along the chain.
pub fn count_graph(g: &RelationGraph) -> QPolynomial {
    scc_chain(g)
        .components
        .iter()
        .map(|c| count_component(c).expect("chain components are strongly connected"))
        .fold(QPolynomial::one(), |acc, c| &acc * &c)
}

/// Polynomials decomposing along every sequence in `set`.
pub fn count_collisions(n: u64, set: &[OrderedFactorization]) -> Result<QPolynomial> {
    if let Some(bad) = set.iter().find(|f| f.n() != n) {
        return Err(Error::ProductMismatch {
            expected: n,
            actual: bad.n(),
        });
    }
    let normalized = normalize(set)?;
    Ok(count_graph(&build_graph(&normalized)))
}

/// Decomposable monic original polynomials of degree `n`, by
/// inclusion-exclusion over nonempty sets of nontrivial divisors.
pub fn count_decomposables(n: u64) -> QPolynomial {
    let divisors = nontrivial_divisors(n);
    let k = divisors.len();
    let mut total = QPolynomial::zero();
    for mask in 1u64..(1u64 << k) {
        let set: Vec<OrderedFactorization> = (0..k)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| OrderedFactorization::of(n, vec![divisors[i], n / divisors[i]]).expect("divisor pair"))
            .collect();
        let c = count_collisions(n, &set).expect("divisor pairs share n");
        total = if mask.count_ones() % 2 == 1 {
            &total + &c
        } else {
            &total - &c
        };
    }
    total
}

/// Exact value of `count_decomposables(n)` at `q`.
pub fn count_decomposables_at(n: u64, q: u64) -> BigInt {
    count_decomposables(n).eval_u64(q)
}

pub fn is_composite(n: u64) -> bool {
    !nontrivial_divisors(n).is_empty()
}
