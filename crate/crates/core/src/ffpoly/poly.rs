use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::PrimeField;
use crate::{Error, Result};

/// Dense polynomial over `F_p`, coefficients ascending, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FqPoly {
    field: PrimeField,
    coeffs: Vec<u32>,
}

impl FqPoly {
    pub fn from_coeffs(field: PrimeField, mut coeffs: Vec<u32>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= field.p();
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FqPoly { field, coeffs }
    }

    pub fn from_i64(field: PrimeField, coeffs: &[i64]) -> Self {
        Self::from_coeffs(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: PrimeField) -> Self {
        FqPoly { field, coeffs: vec![] }
    }

    pub fn constant(field: PrimeField, c: u32) -> Self {
        Self::from_coeffs(field, vec![c])
    }

    pub fn x(field: PrimeField) -> Self {
        Self::monomial(field, 1, 1)
    }

    pub fn monomial(field: PrimeField, c: u32, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        Self::from_coeffs(field, v)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u32 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, with the zero polynomial counted as 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn is_original(&self) -> bool {
        self.coeff(0) == 0
    }

    pub fn is_monic_original(&self) -> bool {
        self.is_monic() && self.is_original()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, a: u32) -> u32 {
        let f = self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, a), c))
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = self.field;
        Self::from_coeffs(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::constant(self.field, 1);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Division with remainder by a polynomial with invertible leading
    /// coefficient.
    pub fn div_rem(&self, d: &FqPoly) -> (FqPoly, FqPoly) {
        let f = self.field;
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = f.inv(d.coeffs[dd]);
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(f), self.clone());
        }
        let mut q = vec![0; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = f.mul(r[k + dd], lead_inv);
            q[k] = c;
            if c != 0 {
                for (i, &b) in d.coeffs.iter().enumerate() {
                    r[k + i] = f.sub(r[k + i], f.mul(c, b));
                }
            }
        }
        r.truncate(dd);
        (Self::from_coeffs(f, q), Self::from_coeffs(f, r))
    }

    /// `x^k ↦ x^(k·e)`.
    pub fn inflate(&self, e: usize) -> Self {
        let mut v = vec![0; self.deg() * e + 1];
        for (k, &c) in self.coeffs.iter().enumerate() {
            v[k * e] = c;
        }
        Self::from_coeffs(self.field, v)
    }

    /// Parses `"x^4+2*x^2+x"`; coefficients are reduced mod `p`.
    pub fn parse(field: PrimeField, s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse {
                pos: 0,
                msg: "empty polynomial".into(),
            });
        }
        let b = compact.as_bytes();
        let mut coeffs: Vec<i64> = Vec::new();
        let mut i = 0;
        while i < b.len() {
            let start = i;
            let mut sign = 1i64;
            if b[i] == b'+' || b[i] == b'-' {
                if b[i] == b'-' {
                    sign = -1;
                }
                i += 1;
            } else if i > 0 {
                return Err(Error::Parse {
                    pos: i,
                    msg: "expected + or -".into(),
                });
            }
            let ds = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            let had = ds < i;
            let mut c: i64 = if had {
                compact[ds..i].parse().map_err(|_| Error::Parse {
                    pos: ds,
                    msg: "bad coefficient".into(),
                })?
            } else {
                1
            };
            let mut k = 0usize;
            if had && i < b.len() && b[i] == b'*' {
                i += 1;
            }
            if i < b.len() && b[i] == b'x' {
                i += 1;
                k = 1;
                if i < b.len() && b[i] == b'^' {
                    i += 1;
                    let es = i;
                    while i < b.len() && b[i].is_ascii_digit() {
                        i += 1;
                    }
                    k = compact[es..i].parse().map_err(|_| Error::Parse {
                        pos: es,
                        msg: "bad exponent".into(),
                    })?;
                }
            } else if !had {
                return Err(Error::Parse {
                    pos: start,
                    msg: "expected a term".into(),
                });
            }
            c = (c % field.p() as i64) * sign;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, 0);
            }
            coeffs[k] += c;
        }
        Ok(Self::from_i64(field, &coeffs))
    }
}

impl fmt::Display for FqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (k, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, _) => write!(f, "{c}*x")?,
                (_, 1) => write!(f, "x^{k}")?,
                _ => write!(f, "{c}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &FqPoly {
    type Output = FqPoly;
    fn add(self, rhs: &FqPoly) -> FqPoly {
        let f = self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        FqPoly::from_coeffs(f, (0..n).map(|k| f.add(self.coeff(k), rhs.coeff(k))).collect())
    }
}

impl Sub for &FqPoly {
    type Output = FqPoly;
    fn sub(self, rhs: &FqPoly) -> FqPoly {
        let f = self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        FqPoly::from_coeffs(f, (0..n).map(|k| f.sub(self.coeff(k), rhs.coeff(k))).collect())
    }
}

impl Mul for &FqPoly {
    type Output = FqPoly;
    fn mul(self, rhs: &FqPoly) -> FqPoly {
        let f = self.field;
        if self.is_zero() || rhs.is_zero() {
            return FqPoly::zero(f);
        }
        let p = f.p() as u64;
        let mut acc = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u64 * b as u64) % p;
            }
        }
        FqPoly::from_coeffs(f, acc.into_iter().map(|c| c as u32).collect())
    }
}

/// `g(h)`, by Horner's rule.
pub fn compose(g: &FqPoly, h: &FqPoly) -> FqPoly {
    let f = g.field;
    let mut acc = FqPoly::zero(f);
    for &c in g.coeffs.iter().rev() {
        acc = &(&acc * h) + &FqPoly::constant(f, c);
    }
    acc
}

/// `(x - f(a)) ∘ f ∘ (x + a)`.
pub fn original_shift(f: &FqPoly, a: u32) -> Result<FqPoly> {
    if !f.is_monic_original() {
        return Err(Error::NotMonicOriginal);
    }
    let field = f.field;
    let moved = compose(f, &FqPoly::from_coeffs(field, vec![a, 1]));
    Ok(&moved - &FqPoly::constant(field, f.eval(a)))
}
