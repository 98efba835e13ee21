//! Verdicts on torus bundles: whether the fiber class survives in real
//! homology, and hence whether the total space is symplectic.
//!
//! Also holds the linear algebra for invariant symplectic forms on circle
//! bundles over `Σ_g × S^1`, where the Thurston norm is `|k| (2g - 2)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::bundle::{fixed_sublattice, is_multiple_of, TorusBundle};
use crate::error::{Error, Result};
use crate::exactla::{integer_kernel, IntMatrix};
use crate::homology::{betti, has_fiber_circle_action};
use crate::spectral::fiber_class_via_spectral;

/// The rule that decided a case, with a short statement of the fact it rests on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationaleEntry {
    pub rule: String,
    pub citation: String,
}

impl RationaleEntry {
    fn new(rule: &str, citation: &str) -> Self {
        RationaleEntry {
            rule: rule.to_string(),
            citation: citation.to_string(),
        }
    }
}

/// Agreement of the rule-based verdict with the two independent oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CrossChecks {
    /// `b_1(flat twin) == b_1(E)` agrees with the verdict.
    pub betti_flat_twin: bool,
    /// The `E^2`-rank test agrees with the verdict.
    pub spectral: bool,
}

impl CrossChecks {
    pub fn all_agree(&self) -> bool {
        self.betti_flat_twin && self.spectral
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub b1: usize,
    pub b2: usize,
    pub has_circle_action: bool,
    pub fiber_class_nonzero: bool,
    pub symplectic: bool,
    /// First entry is the general criterion, the second the case that applied.
    pub rationale: Vec<RationaleEntry>,
    pub cross_checks: CrossChecks,
}

impl ClassificationReport {
    /// The rule that decided this bundle.
    pub fn governing_rule(&self) -> &str {
        &self
            .rationale
            .last()
            .expect("rationale is never empty")
            .rule
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        writeln!(
            f,
            "symplectic: {} (Theorem: {})",
            yes_no(self.symplectic),
            self.governing_rule()
        )?;
        writeln!(
            f,
            "fiber class nonzero: {}",
            yes_no(self.fiber_class_nonzero)
        )?;
        writeln!(f, "circle action: {}", yes_no(self.has_circle_action))?;
        writeln!(f, "b1: {}", self.b1)?;
        writeln!(f, "b2: {}", self.b2)?;
        writeln!(f, "rationale:")?;
        for entry in &self.rationale {
            writeln!(f, "  - {}: {}", entry.rule, entry.citation)?;
        }
        writeln!(
            f,
            "cross-check betti of flat twin: {}",
            if self.cross_checks.betti_flat_twin {
                "agree"
            } else {
                "DISAGREE"
            }
        )?;
        write!(
            f,
            "cross-check spectral ranks: {}",
            if self.cross_checks.spectral {
                "agree"
            } else {
                "DISAGREE"
            }
        )
    }
}

fn euler_is_zero(bundle: &TorusBundle) -> bool {
    bundle.euler().iter().all(Zero::is_zero)
}

/// Whether `[T^2] ≠ 0` in `H_2(E; R)`.
///
/// This holds exactly for the trivial bundle, for bundles whose monodromy
/// fixes no nonzero vector, and for bundles with a rank-one fixed lattice
/// `Z·z` whose Euler class lies in `Z·z`.
pub fn fiber_class_nonzero(bundle: &TorusBundle) -> bool {
    if bundle.has_trivial_monodromy() {
        return euler_is_zero(bundle);
    }
    let fixed = fixed_sublattice(bundle);
    match fixed.generator() {
        None => fixed.rank() == 0,
        Some(z) => is_multiple_of(bundle.euler(), z),
    }
}

fn governing_case(bundle: &TorusBundle) -> RationaleEntry {
    let [m, n] = bundle.euler();
    if bundle.has_trivial_monodromy() {
        return match (m.is_zero(), n.is_zero()) {
            (true, true) => RationaleEntry::new(
                "trivial bundle",
                "T^2 x Σ_g with the product symplectic form",
            ),
            (false, false) => RationaleEntry::new(
                "principal, mn ≠ 0",
                "a principal torus bundle with both Euler components nonzero is not symplectic",
            ),
            _ => RationaleEntry::new(
                "principal, one of m, n zero",
                "Etgü: a nontrivial principal bundle whose Euler class has a zero component is not symplectic",
            ),
        };
    }
    match fixed_sublattice(bundle).generator() {
        None => RationaleEntry::new(
            "no fiber circle action",
            "Thurston: the monodromy fixes no fiber class, so the fiber is nonzero in homology",
        ),
        Some(_) if fiber_class_nonzero(bundle) => RationaleEntry::new(
            "circle action, euler class a multiple of the orbit class",
            "the Euler class lies in Z·z for the primitive fixed vector z",
        ),
        Some(_) => RationaleEntry::new(
            "circle action, euler class not a multiple of the orbit class",
            "the Euler class leaves Z·z, which kills the fiber class",
        ),
    }
}

/// Full symplectic verdict with its rationale and oracle cross-checks.
///
/// Requires the monodromy to be a representation of the surface group, since
/// the spectral oracle needs an honest chain complex.
pub fn is_symplectic(bundle: &TorusBundle) -> Result<ClassificationReport> {
    let verdict = fiber_class_nonzero(bundle);
    let (b1, b2) = betti(bundle);
    let (twin_b1, _) = betti(&bundle.flat_twin());
    let spectral = fiber_class_via_spectral(bundle)?;

    let cross_checks = CrossChecks {
        betti_flat_twin: (twin_b1 == b1) == verdict,
        spectral: spectral == verdict,
    };
    if !cross_checks.all_agree() {
        return Err(Error::InternalInconsistency(format!(
            "rule-based verdict {verdict}, b1 {b1} vs flat twin {twin_b1}, spectral verdict {spectral} for bundle {bundle}"
        )));
    }

    Ok(ClassificationReport {
        b1,
        b2,
        has_circle_action: has_fiber_circle_action(bundle),
        fiber_class_nonzero: verdict,
        symplectic: verdict,
        rationale: vec![
            RationaleEntry::new(
                "fiber class criterion",
                "a torus bundle over Σ_g is symplectic iff [T^2] is nonzero in H_2(E; R)",
            ),
            governing_case(bundle),
        ],
        cross_checks,
    })
}

/// Degree-one class `k [S^1] + b` on `Σ_g × S^1`; `b` has `2g` coordinates
/// in the basis `a_1, b_1, ..., a_g, b_g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProductH1Class {
    pub k: BigInt,
    pub b: Vec<BigInt>,
}

/// Degree-two class `n [Σ_g] + Σ kvec_i (c_i × S^1)` on `Σ_g × S^1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProductH2Class {
    pub n: BigInt,
    pub kvec: Vec<BigInt>,
}

impl ProductH2Class {
    pub fn zero(genus: usize) -> Self {
        ProductH2Class {
            n: BigInt::zero(),
            kvec: vec![BigInt::zero(); 2 * genus],
        }
    }
}

fn check_arity(genus: usize, field: &str, len: usize) -> Result<()> {
    if genus < 2 {
        return Err(Error::GenusTooSmall(genus as i64));
    }
    if len != 2 * genus {
        return Err(Error::Validation {
            field: field.to_string(),
            message: format!("expected {} coordinates, got {len}", 2 * genus),
        });
    }
    Ok(())
}

/// Basis (as columns, coordinates `(x_b, x_k)`) of
/// `L = {α ∈ H^1 : α ∪ c_1 = 0}`, the kernel of `x ↦ x_b · J kvec + x_k n`.
pub fn l_subspace(genus: usize, c1: &ProductH2Class) -> Result<IntMatrix> {
    check_arity(genus, "kvec", c1.kvec.len())?;
    let mut functional = IntMatrix::zeros(1, 2 * genus + 1);
    for i in 0..genus {
        let (p, q) = (2 * i, 2 * i + 1);
        functional[(0, p)] = c1.kvec[q].clone();
        functional[(0, q)] = -&c1.kvec[p];
    }
    functional[(0, 2 * genus)] = c1.n.clone();
    Ok(integer_kernel(&functional))
}

/// An invariant symplectic form exists iff `L` is not contained in the
/// pullbacks `A` from `Σ_g`, on which the Thurston norm vanishes.
pub fn invariant_symplectic_exists(genus: usize, c1: &ProductH2Class) -> Result<bool> {
    let basis = l_subspace(genus, c1)?;
    let last = 2 * genus;
    Ok((0..basis.cols()).any(|j| !basis[(last, j)].is_zero()))
}

/// `||k [S^1] + b||_T = |k| (2g - 2)`.
pub fn thurston_norm_product(genus: usize, x: &ProductH1Class) -> Result<BigInt> {
    check_arity(genus, "b", x.b.len())?;
    Ok(x.k.abs() * (2 * genus as i64 - 2))
}
