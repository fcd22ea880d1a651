//! Equipped posets, the two incidence algebras built from them, and the
//! knitting of the preprojective Auslander-Reiten component that contains
//! the simple projective at the maximum.

pub mod algebra;
pub mod correspond;
pub mod enumerate;
pub mod forms;
pub mod io;
pub mod knit;
pub mod oracle;
pub mod poset;
pub mod vector;

pub use algebra::{build_model, AlgebraModel, Flavor, InjectiveProfile, Label, RadicalInfo};
pub use knit::{knit_component, ArArrow, ArVertex, ComponentGraph, KnitStatus, VertexKind};
pub use poset::{EquippedPoset, Point, PointId, Strength};
