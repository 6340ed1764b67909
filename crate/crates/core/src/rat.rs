//! Exact rational scalars and small vector helpers.
//!
//! Rationals are always reduced with positive denominator (the `num-rational`
//! invariants), and serialize as `"p/q"` or `"p"` in every JSON payload.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = num_rational::BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Test helper style constructor; panics on zero denominator.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let mut parts = s.splitn(2, '/');
    let numer = parts.next().unwrap_or("");
    let numer: BigInt = numer
        .parse()
        .map_err(|_| Error::InvalidInput(format!("malformed rational {s:?}")))?;
    match parts.next() {
        None => Ok(Rat::from_integer(numer)),
        Some(d) => {
            let denom: BigInt = d
                .parse()
                .map_err(|_| Error::InvalidInput(format!("malformed rational {s:?}")))?;
            if denom.is_zero() {
                return Err(Error::InvalidInput(format!(
                    "malformed rational {s:?}: zero denominator"
                )));
            }
            Ok(Rat::new(numer, denom))
        }
    }
}

pub fn rat_to_string(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn rat_is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

pub fn dot_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = BigInt::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

pub fn dot_rat_int(a: &[Rat], b: &[BigInt]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * Rat::from_integer(y.clone());
    }
    acc
}

pub fn dot_int_rat(a: &[BigInt], b: &[Rat]) -> Rat {
    dot_rat_int(b, a)
}

pub fn rat_vec(v: &[BigInt]) -> Vec<Rat> {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

pub fn int_vec(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn lcm_denominators<'a>(xs: impl Iterator<Item = &'a Rat>) -> BigInt {
    let mut l = BigInt::one();
    for x in xs {
        l = l.lcm(x.denom());
    }
    l
}

/// Clears denominators by the common lcm; preserves direction, not scale.
pub fn scale_to_integers(v: &[Rat]) -> Vec<BigInt> {
    let l = lcm_denominators(v.iter());
    v.iter()
        .map(|x| {
            let y = x * Rat::from_integer(l.clone());
            debug_assert!(y.denom().is_one());
            y.numer().clone()
        })
        .collect()
}

/// Rank of a rational matrix given as rows, by Gaussian elimination.
pub fn rat_rank(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    if m.is_empty() {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for i in 0..m.len() {
            if i != rank && !m[i][col].is_zero() {
                let c = &m[i][col] / &pivot;
                for j in col..cols {
                    let s = &m[rank][j] * &c;
                    m[i][j] -= s;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Determinant of a square rational matrix by Gaussian elimination.
pub fn rat_det(rows: &[Vec<Rat>]) -> Rat {
    let n = rows.len();
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !m[i][col].is_zero()) else {
            return Rat::zero();
        };
        if p != col {
            m.swap(col, p);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for i in col + 1..n {
            if !m[i][col].is_zero() {
                let c = &m[i][col] / &pivot;
                for j in col..n {
                    let s = &m[col][j] * &c;
                    m[i][j] -= s;
                }
            }
        }
    }
    det
}

pub fn abs_rat(x: &Rat) -> Rat {
    if x.is_negative() {
        -x.clone()
    } else {
        x.clone()
    }
}
