//! Multi-Dependency PIBT (MD-PIBT): a multi-agent path finding toolkit that
//! plans windowed paths by searching over a graph of dependencies between
//! agents' tentative and safe paths.
//!
//! The crate is organized as:
//!
//! - [`grid`]: maps, agent kinodynamic models, successor generation and
//!   goal-distance tables.
//! - [`kernel`]: windowed path enumeration, collision predicates and the
//!   per-epoch reservation table.
//! - [`agdg`]: the agent dependency graph with hard and soft edges.
//! - [`planner`]: the MD-PIBT search itself, including the PIBT and EPIBT
//!   parameterizations.
//! - [`sim`]: one-shot and lifelong drivers with plan/commit windowing.
//! - [`validate`]: an independent collision oracle, metrics, a brute-force
//!   joint-state optimal solver and a reference one-step PIBT.

pub mod agdg;
pub mod grid;
pub mod kernel;
pub mod planner;
pub mod sim;
pub mod validate;

pub use grid::{AgentModel, Cell, DistanceMap, GridMap, Heading, KinState};
pub use kernel::{Path, ReservationTable};
pub use planner::{AgentRecord, FindPathMode, PlannerConfig, PriorityStrategy};
pub use sim::{ProblemInstance, RunMode, RunResult};
