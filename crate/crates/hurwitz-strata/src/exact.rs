//! Exact integer and rational arithmetic primitives.
//!
//! Every public value produced by this crate is an exact integer or a
//! reduced rational; no floating point appears anywhere. Rationals are
//! normalized on construction, so equality is canonical-form equality.

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(v: i64) -> Rat {
    Rat::from_integer(int(v))
}

pub fn rat_from(num: i64, den: i64) -> Rat {
    Rat::new(int(num), int(den))
}

/// n! with a domain error on negative input.
pub fn factorial(n: i64) -> Result<Int> {
    if n < 0 {
        return Err(Error::domain(format!("factorial of negative integer {n}")));
    }
    let mut acc = Int::one();
    for i in 2..=n {
        acc *= i;
    }
    Ok(acc)
}

/// C(n, k). Zero when k < 0 or k > n; negative n is a domain error
/// (the generalized binomial is never needed here).
pub fn binomial(n: i64, k: i64) -> Result<Int> {
    if n < 0 {
        return Err(Error::domain(format!("binomial with negative n = {n}")));
    }
    if k < 0 || k > n {
        return Ok(Int::zero());
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    Ok(acc)
}

/// total! / (parts[0]! ... parts[last]!), requiring sum(parts) = total.
pub fn multinomial(total: u64, parts: &[u64]) -> Result<Int> {
    let sum: u64 = parts.iter().sum();
    if sum != total {
        return Err(Error::domain(format!(
            "multinomial parts sum to {sum}, expected {total}"
        )));
    }
    let mut acc = factorial(total as i64)?;
    for &p in parts {
        acc /= factorial(p as i64)?;
    }
    Ok(acc)
}

/// base^exponent as an exact rational; negative exponents invert.
pub fn ipow(base: &Int, exponent: i64) -> Result<Rat> {
    if base.is_zero() && exponent < 0 {
        return Err(Error::domain("zero base with negative exponent"));
    }
    let pow = num::pow::pow(base.clone(), exponent.unsigned_abs() as usize);
    if exponent >= 0 {
        Ok(Rat::from_integer(pow))
    } else {
        Ok(Rat::new(Int::one(), pow))
    }
}

/// base^exponent for a rational base, with the same sign convention.
pub fn rat_pow(base: &Rat, exponent: i64) -> Result<Rat> {
    if base.is_zero() && exponent < 0 {
        return Err(Error::domain("zero base with negative exponent"));
    }
    let pow = num::pow::pow(base.clone(), exponent.unsigned_abs() as usize);
    if exponent >= 0 {
        Ok(pow)
    } else {
        Ok(pow.recip())
    }
}

/// Serializes a rational as "p/q", or just "p" when q = 1.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_negative(r: &Rat) -> bool {
    r.numer().sign() == Sign::Minus
}

pub fn rat_is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0).unwrap(), int(1));
        assert_eq!(factorial(5).unwrap(), int(120));
        assert_eq!(
            factorial(20).unwrap(),
            "2432902008176640000".parse::<Int>().unwrap()
        );
        assert!(factorial(-1).is_err());
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2).unwrap(), int(6));
        assert_eq!(binomial(2, 3).unwrap(), int(0));
        assert_eq!(binomial(6, 3).unwrap(), int(20));
        assert_eq!(binomial(7, -1).unwrap(), int(0));
        assert!(binomial(-2, 1).is_err());
    }

    #[test]
    fn binomial_matches_pascal() {
        // independent oracle: Pascal's triangle
        let mut row = vec![Int::one()];
        for n in 1..=12i64 {
            let mut next = vec![Int::one()];
            for k in 1..n {
                next.push(&row[(k - 1) as usize] + &row[k as usize]);
            }
            next.push(Int::one());
            row = next;
            for k in 0..=n {
                assert_eq!(binomial(n, k).unwrap(), row[k as usize]);
            }
        }
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(2, &[1, 1, 0]).unwrap(), int(2));
        assert_eq!(multinomial(0, &[0, 0, 0]).unwrap(), int(1));
        assert_eq!(multinomial(3, &[1, 1, 1]).unwrap(), int(6));
        assert!(multinomial(4, &[1, 1]).is_err());
    }

    #[test]
    fn ipow_values() {
        assert_eq!(ipow(&int(4), -2).unwrap(), rat_from(1, 16));
        assert_eq!(ipow(&int(3), 0).unwrap(), rat(1));
        assert_eq!(ipow(&int(5), 3).unwrap(), rat(125));
        assert!(ipow(&int(0), -1).is_err());
    }

    proptest! {
        #[test]
        fn multinomial_is_product_of_binomials(parts in proptest::collection::vec(0u64..5, 1..5)) {
            let total: u64 = parts.iter().sum();
            prop_assume!(total <= 10);
            let mut expected = Int::one();
            let mut remaining = total as i64;
            for &p in &parts {
                expected *= binomial(remaining, p as i64).unwrap();
                remaining -= p as i64;
            }
            prop_assert_eq!(multinomial(total, &parts).unwrap(), expected);
        }

        #[test]
        fn ipow_inverse(b in 1i64..50, e in -8i64..8) {
            let prod = ipow(&int(b), e).unwrap() * ipow(&int(b), -e).unwrap();
            prop_assert_eq!(prod, rat(1));
        }
    }
}
