use num_integer::Integer;

use super::decompose::series_root;
use super::{compose, dickson, original_shift, tame_decompose, FqPoly};
use crate::{Error, Result};

/// Normal form of a polynomial with decompositions of degrees `(d, e)` and
/// `(e, d)`, `d > e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CollisionForm {
    /// `f = (x^k w^e ∘ x^e)^[a]` with `d = s e + k`, `deg w = s`.
    Exponential { w: FqPoly, a: u32 },
    /// `f = T_(de)(x, z)^[a]`, `z ≠ 0`.
    Trigonometric { z: u32, a: u32 },
}

/// `x^k w^e` where `d = s e + k`, `1 ≤ k < e`, `deg w = s`. For `e = 1` the
/// family is all of `P_d` and `w` itself is returned.
pub fn exp_component(d: usize, e: usize, w: &FqPoly) -> Result<FqPoly> {
    if d < 1 || e < 1 || d.gcd(&e) != 1 {
        return Err(Error::BadArguments(format!("d = {d} and e = {e} must be coprime")));
    }
    if !w.is_monic() {
        return Err(Error::BadArguments("w must be monic".into()));
    }
    if e == 1 {
        if w.deg() != d || !w.is_original() {
            return Err(Error::BadDegree {
                expected: d,
                actual: w.deg(),
            });
        }
        return Ok(w.clone());
    }
    let (s, k) = (d / e, d % e);
    if w.deg() != s {
        return Err(Error::BadDegree {
            expected: s,
            actual: w.deg(),
        });
    }
    Ok(&FqPoly::monomial(w.field(), 1, k) * &w.pow(e))
}

/// Monic `w` of degree `s` with `w^e = g`, if any.
fn monic_root(g: &FqPoly, e: usize) -> Option<FqPoly> {
    let n = g.deg();
    if n % e != 0 || !g.is_monic() {
        return None;
    }
    let s = n / e;
    let field = g.field();
    let u = series_root(field, g.coeffs(), n, e, s);
    let mut w = vec![0u32; s + 1];
    for (k, &c) in u.iter().enumerate() {
        w[s - k] = c;
    }
    let w = FqPoly::from_coeffs(field, w);
    (w.pow(e) == *g).then_some(w)
}

/// Normal form of `f` if it decomposes along both `(d, e)` and `(e, d)`.
///
/// Arguments with `d < e` are swapped first. For `e = 2` the Dickson case is
/// a special exponential one and is reported as such.
pub fn classify_two_collision(f: &FqPoly, d: usize, e: usize) -> Result<Option<CollisionForm>> {
    if d < e {
        return classify_two_collision(f, e, d);
    }
    let field = f.field();
    let p = field.p() as usize;
    if e < 2 || d == e || d.gcd(&e) != 1 || (d * e) % p == 0 {
        return Err(Error::BadArguments(format!(
            "need coprime d > e >= 2 with p ∤ de, got d = {d}, e = {e}, p = {p}"
        )));
    }
    let n = d * e;
    if f.deg() != n || !f.is_monic_original() {
        return Ok(None);
    }
    if tame_decompose(f, d)?.is_none() || tame_decompose(f, e)?.is_none() {
        return Ok(None);
    }
    let a = field.mul(f.coeff(n - 1), field.inv(field.from_u64(n as u64)));
    let f0 = original_shift(f, field.neg(a))?;

    if (0..=n).all(|k| k % e == 0 || f0.coeff(k) == 0) {
        let g = FqPoly::from_coeffs(field, (0..=d).map(|j| f0.coeff(j * e)).collect());
        let k = d % e;
        if (0..k).all(|j| g.coeff(j) == 0) {
            let rest = FqPoly::from_coeffs(field, g.coeffs()[k..].to_vec());
            if let Some(w) = monic_root(&rest, e) {
                return Ok(Some(CollisionForm::Exponential { w, a }));
            }
        }
    }

    let z = field.mul(field.neg(f0.coeff(n - 2)), field.inv(field.from_u64(n as u64)));
    if z != 0 && f0 == dickson(field, n, z) {
        return Ok(Some(CollisionForm::Trigonometric { z, a }));
    }
    Ok(None)
}

/// `(g1*, g2*)` with `g1 ∘ g2 = g1* ∘ g2*` and the degrees exchanged.
pub fn ritt_move(g1: &FqPoly, g2: &FqPoly) -> Result<(FqPoly, FqPoly)> {
    let (d1, d2) = (g1.deg(), g2.deg());
    if d1 < 2 || d2 < 2 || d1.gcd(&d2) != 1 {
        return Err(Error::BadArguments(format!(
            "degrees {d1} and {d2} must be coprime and at least 2"
        )));
    }
    let f = compose(g1, g2);
    tame_decompose(&f, d2)?.ok_or(Error::NoSwapExists)
}

/// Common left and right factors of two decompositions of one polynomial:
/// `g = a ∘ u`, `g2 = a ∘ u2`, `h = v ∘ b`, `h2 = v2 ∘ b` with
/// `deg a = gcd(deg g, deg g2)` and `deg b = gcd(deg h, deg h2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcdSplit {
    pub a: FqPoly,
    pub u: FqPoly,
    pub u2: FqPoly,
    pub v: FqPoly,
    pub v2: FqPoly,
    pub b: FqPoly,
}

/// `(outer, inner)` with `f = outer ∘ inner` and `deg outer = d`.
fn split_at(f: &FqPoly, d: usize) -> Result<Option<(FqPoly, FqPoly)>> {
    let x = FqPoly::x(f.field());
    if d == 1 {
        return Ok(Some((x, f.clone())));
    }
    if d == f.deg() {
        return Ok(Some((f.clone(), x)));
    }
    tame_decompose(f, d)
}

pub fn gcd_split(g: &FqPoly, h: &FqPoly, g2: &FqPoly, h2: &FqPoly) -> Result<GcdSplit> {
    if ![g, h, g2, h2].iter().all(|p| p.is_monic_original()) {
        return Err(Error::NotMonicOriginal);
    }
    if compose(g, h) != compose(g2, h2) {
        return Err(Error::NotACollision);
    }
    let l = g.deg().gcd(&g2.deg());
    let r = h.deg().gcd(&h2.deg());
    let (a, u) = split_at(g, l)?.ok_or(Error::NotACollision)?;
    let (a2, u2) = split_at(g2, l)?.ok_or(Error::NotACollision)?;
    let (v, b) = split_at(h, h.deg() / r)?.ok_or(Error::NotACollision)?;
    let (v2, b2) = split_at(h2, h2.deg() / r)?.ok_or(Error::NotACollision)?;
    if a != a2 || b != b2 {
        return Err(Error::NotACollision);
    }
    Ok(GcdSplit { a, u, u2, v, v2, b })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffpoly::PrimeField;

    fn poly(p: u64, c: &[i64]) -> FqPoly {
        FqPoly::from_i64(PrimeField::new(p).unwrap(), c)
    }

    #[test]
    fn exp_components() {
        let f5 = PrimeField::new(5).unwrap();
        let x = FqPoly::x(f5);
        assert_eq!(exp_component(3, 2, &x).unwrap(), FqPoly::monomial(f5, 1, 3));
        let w = poly(7, &[0, 1, 1]);
        assert_eq!(exp_component(5, 2, &w).unwrap(), &poly(7, &[0, 1]) * &w.pow(2));
        let one = FqPoly::constant(f5, 1);
        assert_eq!(exp_component(2, 5, &one).unwrap(), FqPoly::monomial(f5, 1, 2));
        assert!(matches!(exp_component(5, 2, &x), Err(Error::BadDegree { .. })));
    }

    #[test]
    fn classify_examples() {
        let f5 = PrimeField::new(5).unwrap();
        let x6 = FqPoly::monomial(f5, 1, 6);
        assert_eq!(
            classify_two_collision(&x6, 3, 2).unwrap(),
            Some(CollisionForm::Exponential { w: FqPoly::x(f5), a: 0 })
        );
        let f11 = PrimeField::new(11).unwrap();
        let t = original_shift(&dickson(f11, 35, 1), 2).unwrap();
        assert_eq!(
            classify_two_collision(&t, 7, 5).unwrap(),
            Some(CollisionForm::Trigonometric { z: 1, a: 2 })
        );
        assert_eq!(
            classify_two_collision(&t, 5, 7).unwrap(),
            classify_two_collision(&t, 7, 5).unwrap()
        );
        assert_eq!(
            classify_two_collision(&poly(7, &[0, 0, 0, 1, 0, 1]), 5, 3).unwrap(),
            None
        );
        assert!(classify_two_collision(&x6, 4, 2).is_err());
    }

    #[test]
    fn ritt_examples() {
        let f5 = PrimeField::new(5).unwrap();
        let (a, b) = ritt_move(&FqPoly::monomial(f5, 1, 3), &FqPoly::monomial(f5, 1, 2)).unwrap();
        assert_eq!((a, b), (FqPoly::monomial(f5, 1, 2), FqPoly::monomial(f5, 1, 3)));

        let f7 = PrimeField::new(7).unwrap();
        let w = poly(7, &[1, 1]);
        let g1 = exp_component(3, 2, &w).unwrap();
        let x2 = FqPoly::monomial(f7, 1, 2);
        let (a, b) = ritt_move(&g1, &x2).unwrap();
        assert_eq!(a, x2);
        assert_eq!(b, &FqPoly::x(f7) * &w.inflate(2));

        let f11 = PrimeField::new(11).unwrap();
        let z = 2;
        let g1 = dickson(f11, 5, f11.pow(z, 3));
        let g2 = dickson(f11, 3, z);
        let (a, b) = ritt_move(&g1, &g2).unwrap();
        assert_eq!((a, b), (dickson(f11, 3, f11.pow(z, 5)), dickson(f11, 5, z)));

        let g = poly(7, &[0, 1, 0, 1]);
        let h = poly(7, &[0, 3, 1]);
        assert_eq!(ritt_move(&g, &h), Err(Error::NoSwapExists));
    }

    #[test]
    fn gcd_split_trivial() {
        let g = poly(7, &[0, 2, 1]);
        let h = poly(7, &[0, 1, 0, 1]);
        let s = gcd_split(&g, &h, &g, &h).unwrap();
        assert_eq!((s.a.clone(), s.b.clone()), (g.clone(), h.clone()));
        assert_eq!(s.u, FqPoly::x(g.field()));
        assert_eq!(s.v, FqPoly::x(g.field()));
        assert_eq!(gcd_split(&g, &h, &h, &g), Err(Error::NotACollision));
    }

    #[test]
    fn gcd_split_coprime_left() {
        let f7 = PrimeField::new(7).unwrap();
        let w = poly(7, &[3, 1]);
        let g = exp_component(3, 2, &w).unwrap();
        let x2 = FqPoly::monomial(f7, 1, 2);
        let (g2, h2) = ritt_move(&g, &x2).unwrap();
        let s = gcd_split(&g, &x2, &g2, &h2).unwrap();
        assert_eq!(s.a, FqPoly::x(f7));
        assert_eq!(s.b, FqPoly::x(f7));
        assert_eq!((s.u, s.v2), (g, h2));
    }
}
