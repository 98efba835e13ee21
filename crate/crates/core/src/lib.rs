pub mod bundle;
pub mod classify;
pub mod error;
pub mod exactla;
pub mod homology;
pub mod sample;
pub mod spectral;
pub mod swcalc;

pub use error::{Error, Result};

pub use bundle::{parse_bundle, serialize_bundle, Lattice, TorusBundle, SL2Z};
pub use classify::{
    fiber_class_nonzero, invariant_symplectic_exists, is_symplectic, l_subspace,
    thurston_norm_product, ClassificationReport, CrossChecks, ProductH1Class, ProductH2Class,
    RationaleEntry,
};
pub use exactla::{AbelianGroup, BigInt, IntMatrix};
pub use homology::{betti, h1_circle_bundle, h1_total_space, trichotomy, Trichotomy};
pub use spectral::{e2_ranks, fiber_class_via_spectral, E2Ranks};
pub use swcalc::{
    fold_product_poly, parity_sweep, subgroup_a, sw4_zero_closed, sw4_zero_coset,
    sw4_zero_nonpullback, sw_poly_circle_bundle, ResidueSet, SWPolynomial, SweepReport,
};
