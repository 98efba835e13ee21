use std::collections::HashMap;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;

use super::{closed_form_applies, coset_sum, sw4_zero_closed, sw_poly_circle_bundle};
use crate::error::Result;

/// One evaluated grid point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepCell {
    pub genus: usize,
    pub m: i64,
    pub n: i64,
    pub coset: BigInt,
    /// Closed-form value, present when its parity precondition holds.
    pub closed: Option<BigInt>,
}

impl SweepCell {
    pub fn is_even(&self) -> bool {
        self.coset.is_even()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub genus: usize,
    pub m: i64,
    pub n: i64,
    pub coset: BigInt,
    pub closed: Option<BigInt>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    /// Number of evaluated cells.
    pub cases: usize,
    /// Cells with `m = 0` or `n = 0`, which are not evaluated.
    pub skipped: usize,
    /// Cells where the closed form was also evaluated and compared.
    pub closed_form_checks: usize,
    pub all_even: bool,
    pub counterexamples: Vec<Counterexample>,
    /// Every evaluated cell in lexicographic `(g, m, n)` order.
    pub cells: Vec<SweepCell>,
}

fn sweep_genus(
    genus: usize,
    m_range: &RangeInclusive<i64>,
    n_range: &RangeInclusive<i64>,
) -> Result<(Vec<SweepCell>, usize)> {
    let mut polys = HashMap::new();
    for n in n_range.clone().filter(|&n| n != 0) {
        polys.insert(n, sw_poly_circle_bundle(genus, n)?);
    }
    let mut cells = Vec::new();
    let mut skipped = 0;
    for m in m_range.clone() {
        for n in n_range.clone() {
            if m == 0 || n == 0 {
                skipped += 1;
                continue;
            }
            let coset = coset_sum(&polys[&n], m)?;
            let closed = if closed_form_applies(m, n) {
                Some(sw4_zero_closed(genus, m, n)?)
            } else {
                None
            };
            cells.push(SweepCell {
                genus,
                m,
                n,
                coset,
                closed,
            });
        }
    }
    Ok((cells, skipped))
}

/// Evaluates `sw^4_E(0)` on every `(g, m, n)` of the grid with `m, n != 0`,
/// checks evenness and, where defined, agreement with the closed form.
///
/// Genera are processed in parallel; the merged result is in lexicographic order.
pub fn parity_sweep(
    g_range: RangeInclusive<usize>,
    m_range: RangeInclusive<i64>,
    n_range: RangeInclusive<i64>,
) -> Result<SweepReport> {
    let per_genus: Vec<(Vec<SweepCell>, usize)> = g_range
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|g| sweep_genus(g, &m_range, &n_range))
        .collect::<Result<_>>()?;

    let mut cells = Vec::new();
    let mut skipped = 0;
    for (c, s) in per_genus {
        cells.extend(c);
        skipped += s;
    }

    let mut counterexamples = Vec::new();
    for cell in &cells {
        let mut reasons = Vec::new();
        if !cell.is_even() {
            reasons.push("odd value".to_string());
        }
        if let Some(closed) = &cell.closed {
            if closed != &cell.coset {
                reasons.push("closed form disagrees with coset sum".to_string());
            }
        }
        if !reasons.is_empty() {
            counterexamples.push(Counterexample {
                genus: cell.genus,
                m: cell.m,
                n: cell.n,
                coset: cell.coset.clone(),
                closed: cell.closed.clone(),
                reason: reasons.join("; "),
            });
        }
    }

    Ok(SweepReport {
        cases: cells.len(),
        skipped,
        closed_form_checks: cells.iter().filter(|c| c.closed.is_some()).count(),
        all_even: cells.iter().all(SweepCell::is_even),
        counterexamples,
        cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_cell() {
        let r = parity_sweep(2..=2, 3..=3, 3..=3).unwrap();
        assert_eq!(r.cases, 1);
        assert_eq!(r.cells[0].coset, BigInt::from(-2));
        assert!(r.all_even);
        assert!(r.counterexamples.is_empty());
    }

    #[test]
    fn zero_cells_are_skipped() {
        let r = parity_sweep(2..=3, -2..=2, -2..=2).unwrap();
        assert_eq!(r.cases, 2 * 16);
        assert_eq!(r.skipped, 2 * 9);
    }

    #[test]
    fn order_is_lexicographic() {
        let r = parity_sweep(2..=4, -3..=3, -3..=3).unwrap();
        let keys: Vec<_> = r.cells.iter().map(|c| (c.genus, c.m, c.n)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn grid_with_only_skipped_cells() {
        let r = parity_sweep(2..=4, 1..=3, 0..=0).unwrap();
        assert_eq!(r.cases, 0);
        assert_eq!(r.skipped, 9);
        assert!(r.all_even);
    }
}
