//! Path kernel: windowed candidate enumeration, path-vs-path collision
//! predicates and the per-epoch reservation table.

mod collide;
mod enumerate;
mod path;
mod reservation;

pub use collide::paths_collide;
pub use enumerate::enumerate_paths;
pub use path::Path;
pub use reservation::ReservationTable;
