use super::{FqPoly, PrimeField};

/// First-kind Dickson polynomial: `D_0 = 2`, `D_1 = x`,
/// `D_k = x D_(k-1) - z D_(k-2)`.
pub fn dickson_star(field: PrimeField, d: usize, z: u32) -> FqPoly {
    let x = FqPoly::x(field);
    let mut prev = FqPoly::constant(field, 2 % field.p());
    if d == 0 {
        return prev;
    }
    let mut cur = x.clone();
    for _ in 1..d {
        let next = &(&x * &cur) - &prev.scale(z);
        prev = cur;
        cur = next;
    }
    cur
}

/// The Dickson polynomial with its constant term removed.
pub fn dickson(field: PrimeField, d: usize, z: u32) -> FqPoly {
    let t = dickson_star(field, d, z);
    &t - &FqPoly::constant(field, t.coeff(0))
}
