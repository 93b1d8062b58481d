//! Exact characters of symmetric and alternating groups.

mod alternating;
mod mn;
mod quad;

pub(crate) use alternating::split_tag_of;
pub use alternating::{
    an_character, an_classes, an_irreps, character_table_an, character_table_an_bounded,
    class_splits, irrep_splits, parse_tagged, AnClass, AnIrrep, CharacterTable, ClassEntry,
    ClassTag, IrrepEntry, IrrepTag, OrthogonalityReport, DEFAULT_TABLE_BOUND,
};
pub use mn::mn_character;
pub use quad::{QuadSum, QuadValue};
