//! Exact computations for the preprojective algebra of the cyclic quiver:
//! normal forms, graded automorphism groups, skew group algebras, the
//! Auslander map and rings of invariants.

pub mod group_spec;
pub mod invariants;
pub mod linalg;
pub mod preproj;
pub mod quiver;
pub mod scalars;
pub mod smash;
pub mod symmetry;

pub use group_spec::{parse_group, parse_group_spec, GroupSpec, GroupSpecError};
pub use preproj::{hilbert, AlgebraElement, HilbertReport, NFMonomial, RelationIdealTruncation};
pub use quiver::{ArrowRef, QuiverA, Word};
pub use scalars::{CyclotomicContext, Scalar};

pub use smash::{auslander_verdict, AuslanderReport, Certificate, GrowthKind, IdealTruncation, SmashElement};
pub use symmetry::{classify_auslander, enumerate_subgroups, Automorphism, FiniteGroup, SubgroupDescriptor, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("quiver needs at least 3 vertices, got {0}")]
    QuiverTooSmall(usize),
    #[error("arrows are not composable")]
    NotComposable,
    #[error("division by zero")]
    DivisionByZero,
    #[error("not an automorphism{}: {detail}", vertex.map(|v| format!(" at vertex {v}")).unwrap_or_default())]
    NotAnAutomorphism { vertex: Option<usize>, detail: String },
    #[error("group generation exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("automorphisms act on quivers of different sizes")]
    QuiverMismatch,
    #[error("the closed-form classifier only covers subgroups of the dihedral group")]
    ScalarGroupNotClassifiable,
    #[error("element is not homogeneous")]
    MixedDegree,
    #[error("growth window {window} needs at least {needed} degrees, have {have}")]
    WindowTooLarge { window: usize, needed: usize, have: usize },
    #[error("{0}")]
    Unsupported(String),
}
