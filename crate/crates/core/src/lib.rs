//! Counting r-regular maps on the torus up to all homeomorphisms.
//!
//! Quotient maps on the annulus and Moebius band are counted by root-edge
//! recurrences over precursor sequences of closed surfaces, then combined
//! with Klein-bottle and sensed torus counts.

pub mod annulus;
pub mod assembly;
pub mod counts;
pub mod disc;
pub mod error;
pub mod moebius;
pub mod oracle;
pub mod precursors;
pub mod quotient;
pub mod reference;

pub use assembly::{census_table, reflexible_count, unsensed_count, CensusRow, CensusTable, OrbifoldKind, QuotientIndex};
pub use counts::{Count, SeqId, SeqTable};
pub use error::{Error, Result};
pub use precursors::{Backend, PrecursorSet, Sequence};
pub use quotient::{Family, QuotientTables};
