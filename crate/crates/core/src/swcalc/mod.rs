//! Seiberg–Witten combinatorics for circle bundles over `Σ_g` and the
//! torus bundles obtained from them.
//!
//! All values are reported up to the global sign ambiguity of the invariants;
//! the representative carries the factor `sign(n)`.

mod sweep;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactla::BinomialRow;

pub use sweep::{parity_sweep, Counterexample, SweepCell, SweepReport};

/// Coefficients of `Σ_k sw(t^k) t^k` for `0 <= k < |n|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SWPolynomial {
    n: i64,
    coefficients: Vec<BigInt>,
}

impl SWPolynomial {
    fn zero(n: i64) -> Self {
        SWPolynomial {
            n,
            coefficients: vec![BigInt::zero(); n.unsigned_abs() as usize],
        }
    }

    /// The Euler number `n` this polynomial belongs to.
    pub fn euler_number(&self) -> i64 {
        self.n
    }

    pub fn modulus(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    /// Coefficient at `t^k`, with `k` read modulo `|n|`.
    pub fn coefficient(&self, k: i64) -> &BigInt {
        &self.coefficients[k.rem_euclid(self.modulus() as i64) as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    /// Indices carrying a nonzero coefficient (the basic classes).
    pub fn support(&self) -> Vec<usize> {
        (0..self.modulus())
            .filter(|&k| !self.coefficients[k].is_zero())
            .collect()
    }

    pub fn coefficient_sum(&self) -> BigInt {
        self.coefficients.iter().sum()
    }
}

impl fmt::Display for SWPolynomial {
    /// Renders nonzero terms as `c0 + c1*t^1 - c2*t^2 ...`; the zero polynomial is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for k in self.support() {
            let c = &self.coefficients[k];
            let term = if k == 0 {
                c.abs().to_string()
            } else {
                format!("{}*t^{k}", c.abs())
            };
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-{term}")?,
                (true, false) => write!(f, "{term}")?,
                (false, true) => write!(f, " - {term}")?,
                (false, false) => write!(f, " + {term}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A subgroup of `Z_{|n|}`, members listed in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResidueSet {
    modulus: u64,
    members: Vec<u64>,
}

impl ResidueSet {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: i64) -> bool {
        let r = x.rem_euclid(self.modulus as i64) as u64;
        self.members.binary_search(&r).is_ok()
    }
}

/// `A_{m,n}`: the cyclic subgroup of `Z_{|n|}` generated by `m`.
pub fn subgroup_a(m: i64, n: i64) -> Result<ResidueSet> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    let modulus = n.unsigned_abs();
    let step = m.unsigned_abs().gcd(&modulus);
    Ok(ResidueSet {
        modulus,
        members: (0..modulus).step_by(step as usize).collect(),
    })
}

fn check_genus(genus: usize) -> Result<()> {
    if genus < 2 {
        return Err(Error::GenusTooSmall(genus as i64));
    }
    Ok(())
}

/// SW invariants of `S^1 × Σ_g` on the classes `s · pr^*(λ)`,
/// `c_s = (-1)^{g-1+s} C(2g-2, g-1+s)` for `|s| <= g-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductCoefficients {
    genus: usize,
    values: Vec<BigInt>,
}

impl ProductCoefficients {
    /// Largest `|s|` with a nonzero coefficient, `g - 1`.
    pub fn radius(&self) -> i64 {
        self.genus as i64 - 1
    }

    /// `c_s`, zero outside `[-(g-1), g-1]`.
    pub fn get(&self, s: i64) -> BigInt {
        let r = self.radius();
        if s < -r || s > r {
            BigInt::zero()
        } else {
            self.values[(s + r) as usize].clone()
        }
    }

    /// `(s, c_s)` for `s = -(g-1), ..., g-1`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        let r = self.radius();
        self.values
            .iter()
            .enumerate()
            .map(move |(i, c)| (i as i64 - r, c))
    }
}

pub fn product_sw_coefficients(genus: usize) -> Result<ProductCoefficients> {
    check_genus(genus)?;
    let top = 2 * genus as i64 - 2;
    let row = BinomialRow::new(top)?;
    let values = (0..=top)
        .map(|q| {
            let c = row.get(q);
            if q % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    Ok(ProductCoefficients { genus, values })
}

/// `Σ_{k=-(2g-2)}^{2g-2} (-1)^q C(2g-2, q)` with `q = (g-1) + offset + k·step`.
fn alternating_window_sum(row: &BinomialRow, genus: usize, offset: i64, step: i64) -> BigInt {
    let g = genus as i64;
    let span = 2 * g - 2;
    let mut acc = BigInt::zero();
    for k in -span..=span {
        let q = (g - 1) + offset + k * step;
        if q < 0 || q > span {
            continue;
        }
        let c = row.get(q);
        if q % 2 == 0 {
            acc += c;
        } else {
            acc -= c;
        }
    }
    acc
}

fn sign_of(n: i64) -> i64 {
    if n < 0 {
        -1
    } else {
        1
    }
}

/// The SW polynomial of the circle bundle over `Σ_g` with Euler number `n`.
///
/// For `n = 2l` the coefficient of `t^{2i}` is
/// `sign(n) Σ_k (-1)^{(g-1)+i+k|l|} C(2g-2, (g-1)+i+k|l|)`, `0 <= i < |l|`;
/// for odd `n` the coefficient of `t^i` uses `|n|` in place of `|l|`.
pub fn sw_poly_circle_bundle(genus: usize, n: i64) -> Result<SWPolynomial> {
    check_genus(genus)?;
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    let row = BinomialRow::new(2 * genus as i64 - 2)?;
    let sign = sign_of(n);
    let abs_n = n.abs();
    let mut poly = SWPolynomial::zero(n);
    if abs_n % 2 == 0 {
        let l = abs_n / 2;
        for i in 0..l {
            poly.coefficients[2 * i as usize] = sign * alternating_window_sum(&row, genus, i, l);
        }
    } else {
        for i in 0..abs_n {
            poly.coefficients[i as usize] = sign * alternating_window_sum(&row, genus, i, abs_n);
        }
    }
    Ok(poly)
}

/// Independent route to [`sw_poly_circle_bundle`]: fold the product
/// coefficients `c_s` along residues. Odd `n` sends `s` to `s mod |n|`, even
/// `n = 2l` sends `s` to `2 (s mod |l|)`.
pub fn fold_product_poly(genus: usize, n: i64) -> Result<SWPolynomial> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    let product = product_sw_coefficients(genus)?;
    let sign = sign_of(n);
    let abs_n = n.abs();
    let mut poly = SWPolynomial::zero(n);
    for (s, c) in product.iter() {
        let index = if abs_n % 2 == 0 {
            2 * s.rem_euclid(abs_n / 2)
        } else {
            s.rem_euclid(abs_n)
        };
        poly.coefficients[index as usize] += sign * c;
    }
    Ok(poly)
}

/// `sw^4_E(0)` as the coset double sum over `i ∈ A_{m,|n|}` and
/// `j` with `i - j ∈ A_{2m,|n|}` of `sw^3_M(t^j)`.
pub fn sw4_zero_coset(genus: usize, m: i64, n: i64) -> Result<BigInt> {
    let poly = sw_poly_circle_bundle(genus, n)?;
    coset_sum(&poly, m)
}

pub(crate) fn coset_sum(poly: &SWPolynomial, m: i64) -> Result<BigInt> {
    let n = poly.euler_number();
    let outer = subgroup_a(m, n)?;
    let inner = subgroup_a(2 * m, n)?;
    let mut acc = BigInt::zero();
    for &i in outer.members() {
        for &b in inner.members() {
            acc += poly.coefficient(i as i64 - b as i64);
        }
    }
    Ok(acc)
}

/// Inner double sum shared by the closed and non-pullback forms.
///
/// Odd `n`: over `i ∈ A = {0 <= i < |n| : d | i}` with step `|n|` and offset `i`.
/// Even `n`, even `m`: over `i ∈ A' = {i ∈ A : 2 | i}` with step `|n|/2`; the
/// exponent `i` of `t` sits at binomial offset `i/2`.
fn inner_sum(row: &BinomialRow, genus: usize, m: i64, n: i64) -> Result<BigInt> {
    let abs_n = n.abs();
    let d = m.abs().gcd(&abs_n);
    if abs_n % 2 == 1 {
        Ok((0..abs_n)
            .step_by(d as usize)
            .map(|i| alternating_window_sum(row, genus, i, abs_n))
            .sum())
    } else if m % 2 == 0 {
        // d is even here, so every member of A is even.
        Ok((0..abs_n)
            .step_by(d as usize)
            .map(|i| alternating_window_sum(row, genus, i / 2, abs_n / 2))
            .sum())
    } else {
        Err(Error::UnsupportedParity { m, n })
    }
}

/// Closed form of `sw^4_E(0)`:
/// `sign(n) (|n| / gcd(|m|,|n|)) Σ_A ...` for odd `n`, and
/// `sign(n) (|n| / (x gcd(|m|,|n|))) Σ_{A'} ...` for even `n` and even `m`,
/// where `x = gcd(2|m|,|n|) / gcd(|m|,|n|)`.
pub fn sw4_zero_closed(genus: usize, m: i64, n: i64) -> Result<BigInt> {
    check_genus(genus)?;
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    let row = BinomialRow::new(2 * genus as i64 - 2)?;
    let inner = inner_sum(&row, genus, m, n)?;
    let abs_n = n.abs();
    let d = m.abs().gcd(&abs_n);
    let multiplicity = if abs_n % 2 == 1 {
        abs_n / d
    } else {
        let x = (2 * m.abs()).gcd(&abs_n) / d;
        abs_n / (x * d)
    };
    Ok(sign_of(n) * multiplicity * inner)
}

/// `sw^4_E(0)` when the circle-action Euler class is not a pullback: the
/// inner sum alone, times `sign(n)`.
pub fn sw4_zero_nonpullback(genus: usize, m: i64, n: i64) -> Result<BigInt> {
    check_genus(genus)?;
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    let row = BinomialRow::new(2 * genus as i64 - 2)?;
    Ok(sign_of(n) * inner_sum(&row, genus, m, n)?)
}

/// Whether [`sw4_zero_closed`] is defined at `(m, n)`.
pub fn closed_form_applies(m: i64, n: i64) -> bool {
    n != 0 && (n % 2 != 0 || m % 2 == 0)
}
