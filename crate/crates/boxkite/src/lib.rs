//! Basis arithmetic, zero-divisor box-kites, and emanation tables for
//! Cayley-Dickson algebras of dimension 2^N (quaternions, octonions,
//! sedenions, pathions, chingons, ...).
//!
//! Everything here works at the level of *basis units*: the product of two
//! basis units is always another basis unit up to sign, so an element is a
//! `(sign, index)` pair and index arithmetic is bitwise XOR. On top of that
//! sits the zero-divisor machinery that first appears in dimension 16:
//! assessor dyads, mutually annihilating edges, box-kites, and the emanation
//! tables that record them.
//!
//! # Start with the examples
//!
//! Each major capability has a runnable example. From the workspace root:
//!
//! ```text
//! cargo run -p boxkite --example unit_products        # products, trips, oracle cross-check
//! cargo run -p boxkite --example discover_kites       # box-kite discovery and anatomy
//! cargo run -p boxkite --example emanation_table      # build and print an ET
//! cargo run -p boxkite --example sand_mandala         # the seven-frame flip-book
//! cargo run -p boxkite --example number_hub           # the half-generator atlas tables
//! cargo run -p boxkite --example genealogy_tree       # trip genealogy across dimensions
//! cargo run -p boxkite --example pathion_census       # the 77-box-kite census
//! cargo run -p boxkite --example export_formats       # ASCII / CSV / PGM / JSON exports
//! ```
//!
//! The `boxkite` binary wraps the same library calls in a small CLI
//! (`product`, `trips`, `et`, `boxkites`, `census`, `genealogy`, `verify`,
//! `render`); run `boxkite --help` for details.
//!
//! # Module map
//!
//! - [`cdp`]: unit indices, oriented trips, the trip-rule product, the
//!   doubling-formula product used as an independent cross-check, trip
//!   enumeration and zero padding.
//! - [`kite`]: strut contexts, assessors, edge tests, box-kite discovery,
//!   type classification, sail trip systems, vizier identities.
//! - [`emanation`]: emanation-table construction, fill statistics, zigzag
//!   extraction, the flip-book, spectral bands, and the census.
//! - [`genealogy`]: the trip machine that replays how each strut constant's
//!   box-kites reappear in every higher dimension, and the family
//!   classification of the 16-dimensional ancestors.
//! - [`export`]: ASCII, CSV, PGM, and JSON serializations of tables.
//! - [`verify`]: the named structural checks behind `boxkite verify`.

pub mod cdp;
pub mod emanation;
pub mod export;
pub mod genealogy;
pub mod kite;
pub mod verify;

pub use cdp::{
    enumerate_trips, orient_trip, trip_count, unit_product, Sign, SignedUnit, Trip, UnitIndex,
};
pub use emanation::{band_class, build_table, census, flipbook, label_order, EmanationTable};
pub use kite::{discover_boxkites, dmz_edge, BoxKite, Context, EdgeSign, KiteType};

/// Smallest dimension exponent with zero divisors (16-ions).
pub const MIN_KITE_N: u32 = 4;
/// Largest dimension exponent the library accepts. Index math is exact far
/// beyond this, but tables are quadratic in 2^N, so keep desk-scale.
pub const MAX_N: u32 = 12;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension exponent {0} outside supported range 1..={MAX_N}")]
    UnsupportedDimension(u32),
    #[error("unit index {index} out of range for dimension 2^{n}")]
    IndexOutOfRange { index: u32, n: u32 },
    #[error("{0:?} is not a set of three distinct nonzero indices with zero XOR")]
    InvalidTrip([u32; 3]),
    #[error("{0} is not a usable generator here (power of two above the trip, within range)")]
    InvalidGenerator(u32),
    #[error("strut constant {s} invalid for N={n}: need 0 < s < {g}")]
    InvalidStrut { s: u32, n: u32, g: u32 },
    #[error("{l} is not an assessor L-index in this context")]
    InvalidAssessor { l: u32 },
    #[error("zero padding overflows the supported index range (got {0})")]
    PadOverflow(u64),
    #[error("no doubling convention in the registry reproduces the anchor products")]
    CalibrationFailed,
    #[error("structural anomaly: {0}")]
    Anomaly(String),
}

pub type Result<T> = std::result::Result<T, Error>;
