use super::{FqPoly, PrimeField};
use crate::{Error, Result};

/// Coefficients `u_0 = 1, u_1, …, u_count` of the reversed series `u` with
/// `u^d ≡ F (mod y^(count+1))`, where `F_k` is the coefficient of `x^(n-k)`
/// in `f`. Requires `p ∤ d` and `count < n`.
pub(crate) fn series_root(field: PrimeField, f: &[u32], n: usize, d: usize, count: usize) -> Vec<u32> {
    let d_inv = field.inv(field.from_u64(d as u64));
    let len = count + 1;
    let mut u = vec![0u32; len];
    u[0] = 1;
    // table[j][k] = [y^k] u^j.
    let mut table = vec![vec![0u32; len]; d + 1];
    for row in table.iter_mut() {
        row[0] = 1;
    }
    let mut a = vec![0u32; d + 1];
    for k in 1..len {
        for j in 1..=d {
            let mut s = a[j - 1];
            let prev = &table[j - 1];
            for i in 1..k {
                if u[i] != 0 {
                    s = field.add(s, field.mul(u[i], prev[k - i]));
                }
            }
            a[j] = s;
        }
        let uk = field.mul(field.sub(f[n - k], a[d]), d_inv);
        u[k] = uk;
        for j in 1..=d {
            table[j][k] = field.add(a[j], field.mul(field.from_u64(j as u64), uk));
        }
    }
    u
}

/// The unique monic original `h` of degree `e` whose `d`-th power, `d = n/e`,
/// agrees with `f` in degrees `n-1` down to `n-e+1`.
///
/// `f` holds ascending coefficients of a monic polynomial of degree `n`;
/// only its top `e` coefficients are read. Requires `p ∤ d`.
pub fn tame_root(field: PrimeField, f: &[u32], n: usize, e: usize) -> Vec<u32> {
    let u = series_root(field, f, n, n / e, e - 1);
    let mut h = vec![0u32; e + 1];
    for (k, &c) in u.iter().enumerate() {
        h[e - k] = c;
    }
    h
}

/// Digits `c_i` with `f = Σ c_i h^i` and `deg c_i < deg h`.
pub fn h_adic_expand(f: &FqPoly, h: &FqPoly) -> Vec<FqPoly> {
    let mut digits = Vec::new();
    let mut rest = f.clone();
    loop {
        let (q, r) = rest.div_rem(h);
        digits.push(r);
        if q.is_zero() {
            break;
        }
        rest = q;
    }
    digits
}

/// The unique `(g, h)` with `deg g = d` and `f = g ∘ h`, both monic original,
/// if it exists.
pub fn tame_decompose(f: &FqPoly, d: usize) -> Result<Option<(FqPoly, FqPoly)>> {
    if !f.is_monic_original() {
        return Err(Error::NotMonicOriginal);
    }
    let n = f.deg();
    let field = f.field();
    if d <= 1 || d >= n || n % d != 0 || d as u64 % field.p() as u64 == 0 {
        return Err(Error::BadDivisor { n, d });
    }
    let e = n / d;
    let h = FqPoly::from_coeffs(field, tame_root(field, f.coeffs(), n, e));
    let digits = h_adic_expand(f, &h);
    if digits.iter().any(|c| !c.is_constant()) {
        return Ok(None);
    }
    let g = FqPoly::from_coeffs(field, digits.iter().map(|c| c.coeff(0)).collect());
    Ok(Some((g, h)))
}
