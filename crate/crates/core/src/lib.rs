//! Shifted Young tableaux over the primed alphabet.
//!
//! Shifted jeu de taquin, shifted tableau switching and its modified
//! variant, the J-operation and generalized evacuation, and shifted
//! Littlewood-Richardson coefficients checked against Schur Q-functions.

pub mod coeff;
pub mod error;
pub mod evacuation;
pub mod jdt;
pub mod lattice;
pub mod letter;
pub mod modified;
pub mod partition;
pub mod shape;
pub mod switching;
pub mod tableau;
pub mod word;

pub use error::{Error, Result};
pub use letter::Letter;
pub use partition::StrictPartition;
pub use shape::{Cell, SkewShiftedShape};
pub use switching::{Order, SwitchKind, SwitchPath, SwitchStep};
pub use tableau::{Mode, ShiftedTableau, ValidityReport, Violation};
pub use word::Word;
