//! First homology of total spaces and the circle-action trichotomy for flat bundles.

use num_bigint::BigInt;

use crate::bundle::{fixed_sublattice, TorusBundle};
use crate::error::{Error, Result};
use crate::exactla::{cokernel_structure, AbelianGroup};

/// Case split for flat bundles by the rank of the fixed sublattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Trichotomy {
    TrivialBundle,
    NontrivialWithCircleAction,
    NoCircleAction,
}

impl Trichotomy {
    /// The first Betti number this case forces on a flat bundle over `Σ_g`.
    pub fn expected_b1(self, genus: usize) -> usize {
        match self {
            Trichotomy::TrivialBundle => 2 * genus + 2,
            Trichotomy::NontrivialWithCircleAction => 2 * genus + 1,
            Trichotomy::NoCircleAction => 2 * genus,
        }
    }
}

/// `H_1(E) = Z^{2g} ⊕ Z^2 / <(A_i - I) x_j, m x_1 + n x_2>`.
pub fn h1_total_space(bundle: &TorusBundle) -> AbelianGroup {
    let mut relations = bundle.monodromy_relations();
    if !bundle.is_flat() {
        relations = relations.hstack(&bundle.euler_column());
    }
    AbelianGroup::free(2 * bundle.genus()).direct_sum(&cokernel_structure(&relations))
}

/// `H_1(M) = Z^{2g} ⊕ Z_{|n|}` for the circle bundle of Euler number `n` over `Σ_g`.
pub fn h1_circle_bundle(genus: usize, n: i64) -> Result<AbelianGroup> {
    if genus < 2 {
        return Err(Error::GenusTooSmall(genus as i64));
    }
    Ok(AbelianGroup::from_cyclic_orders(
        2 * genus,
        &[BigInt::from(n)],
    ))
}

/// `(b_1, b_2)`, with `b_2 = 2 b_1 - 2` from `χ(E) = 0`.
pub fn betti(bundle: &TorusBundle) -> (usize, usize) {
    let b1 = h1_total_space(bundle).free_rank();
    (b1, 2 * b1 - 2)
}

pub fn trichotomy(bundle: &TorusBundle) -> Result<Trichotomy> {
    if !bundle.is_flat() {
        let [m, n] = bundle.euler();
        return Err(Error::NotFlat {
            m: m.to_string(),
            n: n.to_string(),
        });
    }
    Ok(if bundle.has_trivial_monodromy() {
        Trichotomy::TrivialBundle
    } else if fixed_sublattice(bundle).rank() == 1 {
        Trichotomy::NontrivialWithCircleAction
    } else {
        Trichotomy::NoCircleAction
    })
}

/// A free fiber-preserving circle action exists iff the monodromy fixes a
/// nonzero integer vector.
pub fn has_fiber_circle_action(bundle: &TorusBundle) -> bool {
    fixed_sublattice(bundle).rank() >= 1
}
