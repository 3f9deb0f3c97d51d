//! Coefficient fields and exact sparse rank computation.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The coefficient field `K`: the rationals or a prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum FieldSpec {
    #[default]
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("q"),
            FieldSpec::Prime(p) => write!(f, "fp{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `q` or `fpP` with `P` prime.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rationals);
        }
        let digits = s.strip_prefix("fp").ok_or(Error::NotPrime(0))?;
        let p: u64 = digits.parse().map_err(|_| Error::NotPrime(0))?;
        FieldSpec::prime(p)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A sparse row: `(column, value)` pairs with strictly increasing columns.
pub type SparseRow = Vec<(usize, i64)>;

trait Arith {
    type E: Clone;
    fn embed(&self, v: i64) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    /// `a - c * b`
    fn sub_mul(&self, a: &Self::E, c: &Self::E, b: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
}

struct Rationals;

impl Arith for Rationals {
    type E = BigRational;

    fn embed(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn sub_mul(&self, a: &BigRational, c: &BigRational, b: &BigRational) -> BigRational {
        a - c * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        BigRational::one() / a
    }
}

struct PrimeField(u64);

impl Arith for PrimeField {
    type E = u64;

    fn embed(&self, v: i64) -> u64 {
        v.rem_euclid(self.0 as i64) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.0
    }
    fn sub_mul(&self, a: &u64, c: &u64, b: &u64) -> u64 {
        (a + self.0 - c * b % self.0) % self.0
    }
    fn inv(&self, a: &u64) -> u64 {
        // Fermat: a^(p-2)
        let (mut base, mut exp, mut acc) = (*a % self.0, self.0 - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.0;
            }
            base = base * base % self.0;
            exp >>= 1;
        }
        acc
    }
}

/// Rank of the integer matrix given by sparse rows, computed exactly over
/// `field`.
pub fn rank(field: FieldSpec, rows: &[SparseRow]) -> usize {
    match field {
        FieldSpec::Rationals => rank_with(&Rationals, rows),
        FieldSpec::Prime(p) => rank_with(&PrimeField(p as u64), rows),
    }
}

fn rank_with<A: Arith>(ar: &A, rows: &[SparseRow]) -> usize {
    // pivot column -> normalized row whose leading entry (at that column) is 1
    let mut pivots: HashMap<usize, Vec<(usize, A::E)>> = HashMap::new();
    for row in rows {
        let mut cur: Vec<(usize, A::E)> =
            row.iter().map(|&(c, v)| (c, ar.embed(v))).filter(|(_, v)| !ar.is_zero(v)).collect();
        while let Some((lead, lead_val)) = cur.first().cloned() {
            match pivots.get(&lead) {
                Some(p) => cur = axpy(ar, &cur, &lead_val, p),
                None => {
                    let inv = ar.inv(&lead_val);
                    let normalized = cur.iter().map(|(c, v)| (*c, ar.mul(v, &inv))).collect();
                    pivots.insert(lead, normalized);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// `a - c * b` on sparse rows.
fn axpy<A: Arith>(ar: &A, a: &[(usize, A::E)], c: &A::E, b: &[(usize, A::E)]) -> Vec<(usize, A::E)> {
    let zero = ar.embed(0);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map_or(usize::MAX, |x| x.0);
        let cb = b.get(j).map_or(usize::MAX, |x| x.0);
        let (col, v) = if ca < cb {
            i += 1;
            (ca, a[i - 1].1.clone())
        } else if cb < ca {
            j += 1;
            (cb, ar.sub_mul(&zero, c, &b[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ca, ar.sub_mul(&a[i - 1].1, c, &b[j - 1].1))
        };
        if !ar.is_zero(&v) {
            out.push((col, v));
        }
    }
    out
}
