//! Constructive generation of nets.

mod catalogue;
mod classify;
mod label;
mod ops;
mod triangles;

pub use catalogue::{
    base_net, build, build_strict, core_labels_up_to, core_labels_with_orders, forbidden_digon_sides, Seed,
};
pub use classify::{classify, classify_in_frame, enumerate_primitive, reduction_witnesses, Classification, Reduction};
pub use label::{DigonKind, DigonRecord, Family, NetLabel};
pub use ops::{attach_digon, extend_side, insert_pmu, SideDir};
pub use triangles::{triangle_net, triangle_variants, TriangleKind, TriangleNet};
