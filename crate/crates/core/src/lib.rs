//! Dynamics of an effective two-level atom exchanging photons between two
//! quantized cavity modes (the Raman coupled model with Stark shifts retained).
//!
//! - [`states`]: Fock, coherent and thermal photon statistics.
//! - [`analytic`]: closed-form inversion, atom–mode-1 negativity and linear entropy.
//! - [`semiclassical`]: mode 2 replaced by a classical drive.
//! - [`oracle`]: brute-force truncated-space evolution used to validate the closed forms.
//! - [`scenario`], [`series`], [`revivals`], [`verify`], [`presets`]: time-grid runs, CSV output,
//!   revival detection, analytic-vs-oracle comparison and figure presets.

pub mod analytic;
pub mod error;
pub mod oracle;
pub mod presets;
pub mod revivals;
pub mod scenario;
pub mod semiclassical;
pub mod series;
pub mod states;
pub mod verify;

pub use error::{Error, Result};
