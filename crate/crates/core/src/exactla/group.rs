use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{snf, IntMatrix};

/// Finitely generated abelian group `Z^r ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k` with
/// `d_1 | d_2 | ... | d_k` and every `d_i >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    free_rank: usize,
    invariant_factors: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        AbelianGroup {
            free_rank: rank,
            invariant_factors: Vec::new(),
        }
    }

    /// Normalizes an arbitrary list of cyclic orders into invariant-factor form.
    /// Orders equal to 0 become free summands, orders of absolute value 1 vanish.
    pub fn from_cyclic_orders(free_rank: usize, orders: &[BigInt]) -> Self {
        let mut free_rank = free_rank;
        let mut torsion = Vec::new();
        for d in orders {
            let d = d.abs();
            if d.is_zero() {
                free_rank += 1;
            } else if !d.is_one() {
                torsion.push(d);
            }
        }
        let diag = IntMatrix::from_vec(torsion.len(), torsion.len(), {
            let n = torsion.len();
            let mut data = vec![BigInt::zero(); n * n];
            for (i, d) in torsion.into_iter().enumerate() {
                data[i * n + i] = d;
            }
            data
        });
        let invariant_factors = snf(&diag)
            .invariants()
            .into_iter()
            .filter(|d| !d.is_one())
            .collect();
        AbelianGroup {
            free_rank,
            invariant_factors,
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn is_free(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let orders: Vec<BigInt> = self
            .invariant_factors
            .iter()
            .chain(&other.invariant_factors)
            .cloned()
            .collect();
        AbelianGroup::from_cyclic_orders(self.free_rank + other.free_rank, &orders)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.invariant_factors {
            parts.push(format!("Z_{d}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Isomorphism type of `Z^rows / column-span(m)`.
pub fn cokernel_structure(m: &IntMatrix) -> AbelianGroup {
    let form = snf(m);
    let diag = form.invariants();
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    AbelianGroup::from_cyclic_orders(m.rows() - rank, &diag[..rank])
}

/// Basis (as columns) of the lattice `{v : m v = 0}`, in a canonical
/// echelon form: each basis vector is primitive and the lattice is saturated.
pub fn integer_kernel(m: &IntMatrix) -> IntMatrix {
    let form = snf(m);
    let rank = form.rank();
    let basis: Vec<Vec<BigInt>> = (rank..m.cols()).map(|j| form.right.column(j)).collect();
    canonical_basis(m.cols(), basis)
}

/// Row-style Hermite normal form of the given vectors: same lattice, canonical
/// representatives, leading entries positive. Returned as matrix columns.
pub fn canonical_basis(dim: usize, vectors: Vec<Vec<BigInt>>) -> IntMatrix {
    let mut rows = vectors;
    let mut pivot_row = 0;
    for c in 0..dim {
        if pivot_row >= rows.len() {
            break;
        }
        // Euclid on column c among rows pivot_row..
        loop {
            let best = (pivot_row..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by(|&a, &b| rows[a][c].abs().cmp(&rows[b][c].abs()));
            let Some(b) = best else { break };
            rows.swap(pivot_row, b);
            let mut done = true;
            for i in pivot_row + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[pivot_row][c]);
                let (head, tail) = rows.split_at_mut(i);
                for (x, p) in tail[0].iter_mut().zip(&head[pivot_row]) {
                    *x -= &q * p;
                }
                if !rows[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if rows[pivot_row][c].is_zero() {
            continue;
        }
        if rows[pivot_row][c].is_negative() {
            for x in rows[pivot_row].iter_mut() {
                *x = -&*x;
            }
        }
        // Reduce entries above the pivot into [0, pivot).
        for i in 0..pivot_row {
            let q = rows[i][c].div_floor(&rows[pivot_row][c]);
            if q.is_zero() {
                continue;
            }
            let (head, tail) = rows.split_at_mut(pivot_row);
            for (x, p) in head[i].iter_mut().zip(&tail[0]) {
                *x -= &q * p;
            }
        }
        pivot_row += 1;
    }
    rows.truncate(pivot_row);
    IntMatrix::from_columns(dim, &rows)
}

/// Gcd of the entries; zero for the zero vector.
pub fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Divides out the content. The zero vector is returned unchanged.
pub fn primitive_part(v: &[BigInt]) -> Vec<BigInt> {
    let c = content(v);
    if c.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &c).collect()
}
