use std::collections::HashSet;

use num_integer::Integer;

use crate::ffpoly::{dickson, exp_component, original_shift, FqPoly, PrimeField};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitKind {
    Exp,
    Trig,
}

fn monic_of_degree(field: PrimeField, s: usize) -> Vec<FqPoly> {
    let p = field.p();
    let mut out = Vec::new();
    let mut c = vec![0u32; s + 1];
    c[s] = 1;
    loop {
        out.push(FqPoly::from_coeffs(field, c.clone()));
        let mut i = 0;
        while i < s {
            c[i] += 1;
            if c[i] < p {
                break;
            }
            c[i] = 0;
            i += 1;
        }
        if i == s {
            break;
        }
    }
    out
}

/// Size of the set of all shifts of the degree-`d` component family: every
/// `x^k w^e` for the exponential kind, every `T_d(x, z^e)` with `z ≠ 0` for
/// the Dickson kind.
pub fn orbit_enumerate(kind: OrbitKind, d: usize, e: usize, p: u64) -> Result<u64> {
    if d < 2 || e < 1 || d.gcd(&e) != 1 {
        return Err(Error::BadArguments(format!(
            "need coprime d >= 2, e >= 1, got d = {d}, e = {e}"
        )));
    }
    if (d * e) as u64 % p == 0 {
        return Err(Error::BadArguments(format!("p = {p} divides {}", d * e)));
    }
    let field = PrimeField::new(p)?;
    let family: Vec<FqPoly> = match kind {
        OrbitKind::Exp if e == 1 => {
            let x = FqPoly::x(field);
            monic_of_degree(field, d - 1).iter().map(|w| w * &x).collect()
        }
        OrbitKind::Exp => monic_of_degree(field, d / e)
            .iter()
            .map(|w| exp_component(d, e, w))
            .collect::<Result<_>>()?,
        OrbitKind::Trig => (1..field.p())
            .map(|z| dickson(field, d, field.pow(z, e as u64)))
            .collect(),
    };
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    for f in &family {
        for a in field.elements() {
            seen.insert(original_shift(f, a)?.coeffs().to_vec());
        }
    }
    Ok(seen.len() as u64)
}
