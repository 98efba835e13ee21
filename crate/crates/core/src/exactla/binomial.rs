use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `C(p, q)` with the convention `C(p, q) = 0` for `q < 0` or `q > p`.
pub fn binomial(p: i64, q: i64) -> Result<BigInt> {
    if p < 0 {
        return Err(Error::NegativeBinomialTop(p));
    }
    if q < 0 || q > p {
        return Ok(BigInt::zero());
    }
    let q = q.min(p - q);
    let mut acc = BigInt::one();
    for i in 0..q {
        acc *= p - i;
        acc /= i + 1;
    }
    Ok(acc)
}

/// One full row `C(p, 0..=p)` of Pascal's triangle, with out-of-range lookups
/// returning zero.
#[derive(Debug, Clone)]
pub struct BinomialRow {
    p: i64,
    values: Vec<BigInt>,
}

impl BinomialRow {
    pub fn new(p: i64) -> Result<Self> {
        if p < 0 {
            return Err(Error::NegativeBinomialTop(p));
        }
        let mut values = Vec::with_capacity(p as usize + 1);
        let mut acc = BigInt::one();
        values.push(acc.clone());
        for i in 0..p {
            acc = acc * (p - i) / (i + 1);
            values.push(acc.clone());
        }
        Ok(BinomialRow { p, values })
    }

    pub fn top(&self) -> i64 {
        self.p
    }

    pub fn get(&self, q: i64) -> BigInt {
        if q < 0 || q > self.p {
            BigInt::zero()
        } else {
            self.values[q as usize].clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn out_of_range_is_zero() {
        assert_eq!(binomial(2, 3).unwrap(), BigInt::zero());
        assert_eq!(binomial(2, -1).unwrap(), BigInt::zero());
        assert_eq!(binomial(0, 0).unwrap(), BigInt::one());
    }

    #[test]
    fn negative_top_rejected() {
        assert_eq!(binomial(-1, 0), Err(Error::NegativeBinomialTop(-1)));
        assert!(BinomialRow::new(-3).is_err());
    }

    #[test]
    fn central_coefficient_at_genus_two() {
        assert_eq!(binomial(2, 1).unwrap(), BigInt::from(2));
    }

    #[test]
    fn central_coefficient_even() {
        for g in 2..=50i64 {
            let c = binomial(2 * g - 2, g - 1).unwrap();
            assert_eq!(&c % 2, BigInt::zero(), "g = {g}");
            assert_eq!(c, 2 * binomial(2 * g - 3, g - 1).unwrap());
        }
    }

    #[test]
    fn large_values_exceed_u64() {
        // C(68, 34) > 2^64
        let c = binomial(68, 34).unwrap();
        assert!(c > BigInt::from(u64::MAX));
        assert_eq!(c.to_string(), "28453041475240576740");
    }

    #[test]
    fn row_matches_pointwise() {
        let row = BinomialRow::new(12).unwrap();
        for q in -3..16 {
            assert_eq!(row.get(q), binomial(12, q).unwrap());
        }
    }
}
