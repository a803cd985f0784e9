//! Sparse polynomials in a formal symbol `q` with big integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    terms: BTreeMap<u32, BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coef: impl Into<BigInt>, exp: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coef.into());
        p
    }

    /// `q^exp`.
    pub fn q_pow(exp: u32) -> Self {
        Self::monomial(1, exp)
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    fn add_term(&mut self, exp: u32, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coef;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    pub fn coefficient(&self, exp: u32) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Terms by descending exponent.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.terms.iter().rev().map(|(&e, c)| (e, c))
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        // Horner over descending exponents, filling gaps with powers of q.
        let mut acc = BigInt::zero();
        let mut last: Option<u32> = None;
        for (e, c) in self.terms() {
            if let Some(l) = last {
                acc *= q.pow(l - e);
            }
            acc += c;
            last = Some(e);
        }
        if let Some(l) = last {
            acc *= q.pow(l);
        }
        acc
    }

    pub fn eval_u64(&self, q: u64) -> BigInt {
        self.eval(&BigInt::from(q))
    }
}

/// Exact evaluation at an integer `q`.
pub fn qp_eval(p: &QPolynomial, q: u64) -> BigInt {
    p.eval_u64(q)
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut r = self.clone();
        for (&e, c) in &rhs.terms {
            r.add_term(e, c.clone());
        }
        r
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        let mut r = QPolynomial::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                r.add_term(a + b, x * y);
            }
        }
        r
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QPolynomial {
            type Output = QPolynomial;
            fn $m(self, rhs: QPolynomial) -> QPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if e == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for QPolynomial {
    type Err = Error;

    /// Accepts the output of `Display`, plus loose spacing.
    fn from_str(s: &str) -> Result<Self> {
        let err = |pos: usize, msg: &str| Error::Parse {
            pos,
            msg: msg.to_string(),
        };
        let b = s.as_bytes();
        let mut p = QPolynomial::zero();
        let mut i = 0;
        let skip = |i: &mut usize| {
            while *i < b.len() && b[*i] == b' ' {
                *i += 1;
            }
        };
        let digits = |i: &mut usize| {
            let st = *i;
            while *i < b.len() && b[*i].is_ascii_digit() {
                *i += 1;
            }
            st
        };
        skip(&mut i);
        if i == b.len() {
            return Err(err(0, "empty polynomial"));
        }
        let mut first = true;
        while i < b.len() {
            let mut neg = false;
            if b[i] == b'-' || b[i] == b'+' {
                neg = b[i] == b'-';
                i += 1;
                skip(&mut i);
            } else if !first {
                return Err(err(i, "expected + or -"));
            }
            first = false;
            let st = digits(&mut i);
            let mut coef = if st < i {
                s[st..i].parse::<BigInt>().map_err(|_| err(st, "bad coefficient"))?
            } else {
                BigInt::one()
            };
            let mut exp = 0u32;
            let had_coef = st < i;
            if had_coef && i < b.len() && b[i] == b'*' {
                i += 1;
                if i >= b.len() || b[i] != b'q' {
                    return Err(err(i, "expected q after *"));
                }
            }
            if i < b.len() && b[i] == b'q' {
                i += 1;
                exp = 1;
                if i < b.len() && b[i] == b'^' {
                    i += 1;
                    let st = digits(&mut i);
                    exp = s[st..i].parse().map_err(|_| err(st, "bad exponent"))?;
                }
            } else if !had_coef {
                return Err(err(i, "expected a term"));
            }
            if neg {
                coef = -coef;
            }
            p.add_term(exp, coef);
            skip(&mut i);
        }
        Ok(p)
    }
}

impl Serialize for QPolynomial {
    /// `[[exponent, "coefficient"], …]`, descending exponents.
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = ser.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in self.terms() {
            seq.serialize_element(&(e, c.to_string()))?;
        }
        seq.end()
    }
}
