//! Diffraction and homometry on finite abelian groups.
//!
//! Given a complex density on a finite abelian group, this crate computes its
//! autocorrelation and pure point diffraction, classifies every density that
//! shares the diffraction by means of phase forms on the relator group of the
//! spectrum, and realises each solution as a stationary process on a compact
//! quotient with an explicit eigenfunction table.
//!
//! Layering, bottom to top:
//!
//! * [`abelian`] — group arithmetic, characters, transforms
//! * [`density`] — densities, autocorrelation, diffraction
//! * [`relators`] — generator bases, relator vectors, relator lattices
//! * [`phaseforms`] — phase forms, moment conditions, class-group structure
//! * [`process`] — the stationary process on the character quotient
//! * [`inverse`] — solving the inverse problem, family descriptions
//! * [`io`] — JSON/CSV serialisation of the public types

pub mod abelian;
pub mod density;
pub mod error;
pub mod inverse;
pub mod io;
pub mod lattice;
pub mod phaseforms;
pub mod process;
pub mod relators;
pub mod turn;

pub use abelian::{Element, Group, GroupFunction, Quotient, Subgroup};
pub use density::{BraggSpectrum, Density, PointMeasure};
pub use error::{Error, ErrorKind, Result};
pub use inverse::{
    CircleFamilyReport, ExtractedPhase, FamilyDescription, RationalDensityReport,
};
pub use phaseforms::{ElementaryPhaseForm, MomentTable, PhaseGroupStructure};
pub use process::{ProcessModel, ProcessReport, SpectralMeasure};
pub use relators::{FsVector, GeneratorBasis, RelatorLattice, SymbolRole};
pub use turn::Turn;

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;

/// Default order cap for group construction.
pub const DEFAULT_ORDER_CAP: u64 = 1_000_000;

/// Default relative extinction threshold for diffraction supports.
pub const DEFAULT_REL_TOL: f64 = 1e-9;
