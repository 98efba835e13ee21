//! Ranks on the `E^2` page of the Leray–Serre spectral sequence of a torus
//! bundle over `Σ_g`, computed from the Fox-calculus resolution of the
//! surface group.
//!
//! The coefficient module `H_1(T^2) = Z^2` is a left module through the
//! monodromy. It is turned into a right module by `v · γ = ρ(γ^{-1}) v`, so the
//! tensored complex is
//!
//! ```text
//! Z^2 --D2--> Z^{4g} --D1--> Z^2
//! D2 block j = ρ(conj(∂r/∂x_j)),   D1 block j = ρ(x_j)^{-1} - I
//! ```
//!
//! With this choice `coker D1` is exactly the coinvariants `Z^2 / S` and
//! `ker D2` is exactly the invariant lattice.

pub mod fox;

use crate::bundle::{TorusBundle, SL2Z};
use crate::error::{Error, Result};
use crate::exactla::{cokernel_structure, integer_kernel, AbelianGroup, IntMatrix};
use crate::homology::betti;

use self::fox::{fox_derivative, surface_relator};

/// Boundary maps of the twisted chain complex computing `H_*(Σ_g; Z^2_ρ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoxBoundaries {
    /// `4g x 2`
    pub d2: IntMatrix,
    /// `2 x 4g`
    pub d1: IntMatrix,
}

/// Ranks of `E^2_{pq} = H_p(Σ_g; H_q(T^2))` for `0 <= p, q <= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct E2Ranks {
    pub rank_e00: usize,
    pub rank_e10: usize,
    pub rank_e20: usize,
    pub rank_e01: usize,
    pub rank_e11: usize,
    pub rank_e21: usize,
    pub rank_e02: usize,
    pub rank_e12: usize,
    pub rank_e22: usize,
}

fn check_monodromy(genus: usize, monodromy: &[SL2Z]) -> Result<()> {
    if genus < 2 {
        return Err(Error::GenusTooSmall(genus as i64));
    }
    if monodromy.len() != 2 * genus {
        return Err(Error::Validation {
            field: "monodromy".into(),
            message: format!("expected {} matrices, got {}", 2 * genus, monodromy.len()),
        });
    }
    if !crate::bundle::surface_relator_image(monodromy).is_identity() {
        return Err(Error::NotARepresentation);
    }
    Ok(())
}

pub fn fox_boundary_matrices(genus: usize, monodromy: &[SL2Z]) -> Result<FoxBoundaries> {
    check_monodromy(genus, monodromy)?;
    let relator = surface_relator(genus);
    let gens = 2 * genus;
    let mut d2 = IntMatrix::zeros(2 * gens, 2);
    let mut d1 = IntMatrix::zeros(2, 2 * gens);
    let identity = IntMatrix::identity(2);
    for j in 0..gens {
        let derivative = fox_derivative(&relator, j).conjugate();
        d2.set_block(2 * j, 0, &derivative.evaluate(monodromy));
        d1.set_block(0, 2 * j, &monodromy[j].inverse().to_matrix().sub(&identity));
    }
    Ok(FoxBoundaries { d2, d1 })
}

pub fn e2_ranks(genus: usize, monodromy: &[SL2Z]) -> Result<E2Ranks> {
    let FoxBoundaries { d2, d1 } = fox_boundary_matrices(genus, monodromy)?;
    let rank_d1 = d1.rank();
    let rank_d2 = d2.rank();
    Ok(E2Ranks {
        rank_e00: 1,
        rank_e10: 2 * genus,
        rank_e20: 1,
        rank_e01: 2 - rank_d1,
        rank_e11: (4 * genus - rank_d1) - rank_d2,
        rank_e21: 2 - rank_d2,
        rank_e02: 1,
        rank_e12: 2 * genus,
        rank_e22: 1,
    })
}

/// `H_0(Σ_g; Z^2_ρ) = coker D1`.
pub fn twisted_h0(genus: usize, monodromy: &[SL2Z]) -> Result<AbelianGroup> {
    Ok(cokernel_structure(
        &fox_boundary_matrices(genus, monodromy)?.d1,
    ))
}

/// Basis of `H_2(Σ_g; Z^2_ρ) = ker D2` as columns.
pub fn twisted_h2_basis(genus: usize, monodromy: &[SL2Z]) -> Result<IntMatrix> {
    Ok(integer_kernel(&fox_boundary_matrices(genus, monodromy)?.d2))
}

/// `[T^2] ≠ 0` in `H_2(E; R)` iff `b_2(E) = rank E_20 + rank E_11 + rank E_02`,
/// with `E^∞_11 = E^2_11` independent of the Euler class.
pub fn fiber_class_via_spectral(bundle: &TorusBundle) -> Result<bool> {
    let ranks = e2_ranks(bundle.genus(), bundle.monodromy())?;
    let (_, b2) = betti(bundle);
    Ok(b2 == ranks.rank_e20 + ranks.rank_e11 + ranks.rank_e02)
}
