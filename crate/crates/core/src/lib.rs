//! Reproducing kernels of invariant subspaces of finite group actions.
//!
//! A finite group `G` acting transitively on a finite set `X` turns the
//! complex function space `C(X)` into a Hilbert space under the uniform
//! invariant probability measure. Every `G`-invariant subspace `H` is then a
//! reproducing kernel Hilbert space: each point `x` owns a kernel `K_x ∈ H`
//! with `f(x) = [f, K_x]` for all `f ∈ H`. This crate builds those kernels
//! explicitly (`K = n·P` for the orthogonal projection `P` onto `H`), checks
//! the identities they satisfy, computes the equivalence relation
//! `x ~ y ⇔ K_y = λK_x` together with its relation stabilizer subgroups
//! `E(x) = {γ : γx ~ x}`, and probes open questions about the interplay of
//! kernels and stabilizers on concrete instances.
//!
//! Modules follow the pipeline:
//!
//! * [`perm`] / [`group`] — permutations, group enumeration from generators,
//!   subgroups, normalizers, conjugacy, coset actions.
//! * [`space`] — functions on `X`, the invariant inner product, translation.
//! * [`linalg`] — small dense complex matrices and a Jacobi eigensolver.
//! * [`decomp`] — splitting `C(X)` into minimal invariant subspaces by
//!   commutant averaging.
//! * [`kernel`] — kernel families of a subspace and their identity checks.
//! * [`relation`] — the relation `~`, its partition of `X`, relation
//!   stabilizers, and the stabilizer/normalizer law suites.
//! * [`conjecture`] — executable probes for the open questions.
//! * [`report`] — serializable law-check records shared by the suites.

pub mod conjecture;
pub mod decomp;
pub mod families;
pub mod group;
pub mod kernel;
pub mod linalg;
pub mod perm;
pub mod relation;
pub mod report;
pub mod rng;
pub mod space;
pub mod tol;

pub use conjecture::{
    probe_orthogonality_conjecture, probe_positive_implies_related, run_conjecture_suite,
    search_orthogonal_kernel_basis, ConjectureError, ConjectureId, ConjectureReport,
    ConjectureStatus, SuiteInstance, Witness,
};
pub use decomp::{
    commutant_average, decompose, decompose_with_retries, is_irreducible, perm_matrix,
    sum_subspaces, DecompError, InvariantSubspace,
};
pub use families::{group_from_spec, parse_group_text, FamilyError};
pub use group::{FiniteGroup, GroupError, Subgroup, DEFAULT_ELEMENT_CAP};
pub use kernel::{kernel_family, KernelError, KernelFamily};
pub use linalg::{hermitian_eigendecomposition, CMatrix, LinalgError};
pub use perm::Permutation;
pub use relation::{
    equivalence_partition, lambda_of, related, relation_stabilizer, verify_class_nontriviality,
    verify_kernel_equality, verify_normalizer_laws, verify_relatedness_conditions,
    verify_stabilizer_laws, EquivalencePartition, RelationError, RelationStabilizer,
};
pub use report::LawCheck;
pub use rng::DetRng;
pub use space::{inner_product, translate, verify_translation_invariance, FunctionOnX, Measure,
    SpaceError};
pub use tol::Tolerances;
