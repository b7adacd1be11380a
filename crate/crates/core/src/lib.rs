//! Generic spherical quadrilaterals: nets, fixed-angle feasibility,
//! four-circle configurations and chains.

#![allow(clippy::needless_range_loop)]

pub mod angles;
pub mod arrangement;
pub mod builders;
pub mod chains;
pub mod error;
pub mod geometry;
pub mod net;
pub mod partition;
pub mod vec3;

pub use angles::{AngleVector, Direction, FixedAngleQuad, Scalar};
pub use builders::{Family, NetLabel};
pub use chains::{Chain, EndState, Scope};
pub use error::{Error, Result};
pub use geometry::FourCircleConfig;
pub use net::{Net, VertexKind};
pub use vec3::Vec3;
