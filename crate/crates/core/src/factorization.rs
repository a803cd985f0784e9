//! Ordered factorizations, their bases, and the associatedness relation.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::{Error, Result};

/// A sequence of nontrivial divisors of `n` whose product is `n`.
///
/// Parts are read left to right as composition degrees: `(d1, d2)` stands
/// for `g1 ∘ g2` with `deg g1 = d1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedFactorization {
    n: u64,
    parts: Vec<u64>,
}

/// The multiset of parts of a factorization, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Basis {
    entries: Vec<u64>,
}

impl Basis {
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn product(&self) -> u64 {
        self.entries.iter().product()
    }
}

impl OrderedFactorization {
    /// Builds a factorization of the product of `parts`.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if let Some(&bad) = parts.iter().find(|&&d| d < 2) {
            return Err(Error::InvalidFactorization(format!("part {bad} is below 2")));
        }
        let mut n: u64 = 1;
        for &d in &parts {
            n = n
                .checked_mul(d)
                .ok_or_else(|| Error::InvalidFactorization("product overflows".into()))?;
        }
        Ok(OrderedFactorization { n, parts })
    }

    /// Builds a factorization and checks that it multiplies out to `n`.
    pub fn of(n: u64, parts: Vec<u64>) -> Result<Self> {
        let f = Self::new(parts)?;
        if f.n != n {
            return Err(Error::ProductMismatch {
                expected: n,
                actual: f.n,
            });
        }
        Ok(f)
    }

    /// The trivial factorization `(n)`.
    pub fn whole(n: u64) -> Result<Self> {
        Self::new(vec![n])
    }

    /// Parses `"12,420"` and checks the product against `n`.
    pub fn parse_for(n: u64, s: &str) -> Result<Self> {
        let f: Self = s.parse()?;
        if f.n != n {
            return Err(Error::ProductMismatch {
                expected: n,
                actual: f.n,
            });
        }
        Ok(f)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn basis(&self) -> Basis {
        let mut entries = self.parts.clone();
        entries.sort_unstable();
        Basis { entries }
    }
}

impl fmt::Display for OrderedFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for OrderedFactorization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        let mut pos = 0;
        for field in s.split(',') {
            let t = field.trim();
            let d: u64 = t.parse().map_err(|_| Error::Parse {
                pos,
                msg: format!("expected a positive integer, found {t:?}"),
            })?;
            if d < 2 {
                return Err(Error::Parse {
                    pos,
                    msg: format!("part {d} is below 2"),
                });
            }
            parts.push(d);
            pos += field.len() + 1;
        }
        Self::new(parts)
    }
}

/// All `d` with `1 < d < n` and `d | n`, ascending.
pub fn nontrivial_divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Order-preserving matching of `d` onto `e`: `d[i] == e[sigma[i]]`, with
/// repeated values matched left to right.
pub fn sigma(d: &OrderedFactorization, e: &OrderedFactorization) -> Result<Vec<usize>> {
    if d.basis() != e.basis() {
        return Err(Error::BasisMismatch);
    }
    let mut used = vec![false; e.len()];
    let mut s = Vec::with_capacity(d.len());
    for &x in &d.parts {
        let j = (0..e.len())
            .find(|&j| !used[j] && e.parts[j] == x)
            .ok_or(Error::BasisMismatch)?;
        used[j] = true;
        s.push(j);
    }
    Ok(s)
}

/// `d` and `e` share a basis and the matching keeps every non-coprime pair
/// in its original relative order.
pub fn is_associated(d: &OrderedFactorization, e: &OrderedFactorization) -> bool {
    let Ok(s) = sigma(d, e) else {
        return false;
    };
    let p = &d.parts;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i].gcd(&p[j]) > 1 && s[i] > s[j] {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn of(p: &[u64]) -> OrderedFactorization {
        OrderedFactorization::new(p.to_vec()).unwrap()
    }

    #[test]
    fn divisors() {
        assert_eq!(nontrivial_divisors(6), vec![2, 3]);
        assert!(nontrivial_divisors(7).is_empty());
        assert_eq!(nontrivial_divisors(12), vec![2, 3, 4, 6]);
        assert_eq!(nontrivial_divisors(36), vec![2, 3, 4, 6, 9, 12, 18]);
        assert!(nontrivial_divisors(1).is_empty());
    }

    #[test]
    fn sigma_matches_repeats_in_order() {
        assert_eq!(sigma(&of(&[2, 2, 3]), &of(&[2, 3, 2])).unwrap(), vec![0, 2, 1]);
        assert_eq!(sigma(&of(&[6, 7]), &of(&[6, 7])).unwrap(), vec![0, 1]);
        assert_eq!(sigma(&of(&[2, 3]), &of(&[3, 3])), Err(Error::BasisMismatch));
    }

    #[test]
    fn association() {
        assert!(is_associated(&of(&[2, 6, 7, 60]), &of(&[2, 7, 6, 60])));
        assert!(is_associated(&of(&[2, 2, 3]), &of(&[2, 3, 2])));
        assert!(!is_associated(&of(&[2, 4]), &of(&[4, 2])));
        assert!(!is_associated(&of(&[2, 3]), &of(&[6])));
    }

    #[test]
    fn text_form() {
        let f: OrderedFactorization = "12,420".parse().unwrap();
        assert_eq!(f.n(), 5040);
        assert_eq!(f.to_string(), "12,420");
        assert!("12,1".parse::<OrderedFactorization>().is_err());
        assert!("12,,3".parse::<OrderedFactorization>().is_err());
        assert!(matches!(
            OrderedFactorization::parse_for(60, "12,420"),
            Err(Error::ProductMismatch { .. })
        ));
    }
}
