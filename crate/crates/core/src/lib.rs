//! Construction and certification of group-invariant proper metrics on
//! countable discrete spaces carrying proper group actions.
//!
//! The pipeline starts from any finite-valued pseudometric, makes it
//! invariant by exact counting-measure averaging over a fundamental set,
//! adds an orbit-separating term when the orbit space is infinite, builds
//! the stick-path metric over the translates of the fundamental set, joins
//! its islands with weighted bridges, and returns the supremum of the base
//! with the bridge metric. Every claimed property (invariance, properness,
//! finiteness, compatibility) is discharged by exact verifiers over an
//! explicit window, and the run is summarized in a deterministic JSON
//! report.

pub mod action;
pub mod bridge;
pub mod error;
pub mod export;
pub mod extreal;
pub mod group;
pub mod isogroup;
pub mod koszul;
pub mod lattice;
pub mod metric;
pub mod pipeline;
pub mod report;
pub mod scenario;
pub mod stick;
pub mod verify;

mod shortest_path;

pub use action::{ActionDescriptor, ActionKind, Point, ProperVerdict};
pub use error::{Error, Result};
pub use extreal::ExtReal;
pub use group::{GroupDescriptor, GroupElement, GroupFamily, SubgroupDescriptor};
pub use metric::Pseudometric;
pub use pipeline::{run_pipeline, PipelineOutput};
pub use scenario::{Scenario, ScenarioConfig, ScenarioId};
pub use verify::verify_suite;
