//! The named tolerance set.
//!
//! Every numeric check in the crate draws its threshold from one of these
//! named fields, so a whole run can be audited or re-tuned from one place.
//! The defaults are sized for the matrices this crate works with (dense
//! complex, at most a few dozen rows, benign conditioning).

use serde::{Deserialize, Serialize};

/// Named tolerances used by construction-time verification and the law
/// suites. `projection`/`symmetry` guard identities that are exact in exact
/// arithmetic on matrix entries, `algebraic` guards scalar identities of the
/// same kind, `reproduction` and `membership` allow for accumulated error in
/// derived quantities, `relation` and `orthogonality` are relative factors
/// applied to the kernel constant `c`, and `cluster` separates eigenvalue
/// groups when splitting a commutant element.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Tolerances {
    /// Projection invariants: Hermitian, idempotent, commutes with the action.
    pub projection: f64,
    /// Kernel symmetry `K_x(y) = conj(K_y(x))` and the translation laws.
    pub symmetry: f64,
    /// Reproducing identity and general assertion-level checks.
    pub reproduction: f64,
    /// Membership tests `f ∈ H`, trace vs dimension, `c` vs `dim H`, `|λ| = 1`.
    pub membership: f64,
    /// Identities that are exact permutation rearrangements of finite sums.
    pub algebraic: f64,
    /// Relative relatedness factor: `x ~ y` iff `|K_x(y)| ≥ c·(1 − relation)`.
    pub relation: f64,
    /// Orthogonality threshold as a multiple of `c`: `|[K_x,K_y]| ≤ orthogonality·c`.
    pub orthogonality: f64,
    /// Eigenvalue clustering gap: split where the gap exceeds
    /// `max(cluster, cluster · spectral range)`.
    pub cluster: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            projection: 1e-10,
            symmetry: 1e-10,
            reproduction: 1e-9,
            membership: 1e-8,
            algebraic: 1e-12,
            relation: 1e-7,
            orthogonality: 1e-8,
            cluster: 1e-6,
        }
    }
}
