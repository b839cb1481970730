//! Grid domain: maps, agent models, kinodynamic states and goal-distance
//! tables.

mod distance;
mod map;
mod model;
mod scen;

pub use distance::DistanceMap;
pub use map::{GridMap, MapParseError};
pub use model::{AgentModel, Cell, Footprint, Heading, KinState};
pub use scen::{parse_scen, ScenEntry, ScenParseError};

/// Distance value marking states from which the goal is unreachable.
pub const DIST_INF: u32 = u32::MAX;
