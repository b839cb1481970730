use std::collections::VecDeque;

use thiserror::Error;

use super::map::GridMap;
use super::model::{AgentModel, Cell, Heading, KinState};
use super::DIST_INF;

#[derive(Debug, Error)]
pub enum DistanceError {
    #[error("goal {0} is not a valid state for the agent model")]
    InvalidGoal(Cell),
}

/// Exact unit-cost distance from every valid state to a goal cell, computed
/// by backward breadth-first search over the model's state space.
///
/// For `Rm` the goal is satisfied at any heading, so all four headings at the
/// goal cell are distance-zero sources. Unreachable states hold [`DIST_INF`].
///
/// Entries are stored as `u16` to keep 10k-agent instances affordable; this
/// caps representable distances at 65534, far above any shortest path on the
/// supported map sizes.
#[derive(Debug, Clone)]
pub struct DistanceMap {
    model: AgentModel,
    goal: Cell,
    table: Box<[u16]>,
}

const RAW_INF: u16 = u16::MAX;

impl DistanceMap {
    pub fn build(goal: Cell, model: AgentModel, map: &GridMap) -> Result<Self, DistanceError> {
        let goal_state = match model {
            AgentModel::Rm => KinState::facing(goal, Heading::North),
            _ => KinState::at(goal),
        };
        if !goal_state.is_valid(model, map) {
            return Err(DistanceError::InvalidGoal(goal));
        }

        let mut table = vec![RAW_INF; model.state_count(map)].into_boxed_slice();
        let mut queue = VecDeque::new();

        match model {
            AgentModel::Rm => {
                for h in Heading::ALL {
                    let s = KinState::facing(goal, h);
                    table[s.index(model, map)] = 0;
                    queue.push_back(s);
                }
            }
            _ => {
                table[goal_state.index(model, map)] = 0;
                queue.push_back(goal_state);
            }
        }

        while let Some(state) = queue.pop_front() {
            let d = table[state.index(model, map)];
            debug_assert!(d < RAW_INF - 1, "distance overflow");
            for pred in predecessors(state, model, map) {
                let slot = &mut table[pred.index(model, map)];
                if *slot == RAW_INF {
                    *slot = d + 1;
                    queue.push_back(pred);
                }
            }
        }

        Ok(Self { model, goal, table })
    }

    pub fn goal(&self) -> Cell {
        self.goal
    }

    pub fn model(&self) -> AgentModel {
        self.model
    }

    /// Distance from `state` to the goal, or [`DIST_INF`] when unreachable.
    #[inline]
    pub fn get(&self, state: KinState, map: &GridMap) -> u32 {
        let raw = self.table[state.index(self.model, map)];
        if raw == RAW_INF {
            DIST_INF
        } else {
            raw as u32
        }
    }
}

/// States from which `state` is reachable in one action.
///
/// For the symmetric pebble moves this is the successor set; for `Rm`, the
/// forward action must be inverted while rotations stay symmetric.
fn predecessors(state: KinState, model: AgentModel, map: &GridMap) -> Vec<KinState> {
    match model {
        AgentModel::Pm | AgentModel::Pmla(_) => super::model::successors(state, model, map),
        AgentModel::Rm => {
            let heading = state.heading.expect("rm state carries a heading");
            let mut out = Vec::with_capacity(4);
            out.push(state);
            let (dx, dy) = heading.delta();
            if let Some(cell) = state.cell.offset(-dx, -dy) {
                let back = KinState::facing(cell, heading);
                if back.is_valid(model, map) {
                    out.push(back);
                }
            }
            // rotate_left/right are inverse bijections on headings, so the
            // rotation predecessors are the rotation successors' mirror.
            out.push(KinState::facing(state.cell, heading.rotate_right()));
            out.push(KinState::facing(state.cell, heading.rotate_left()));
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::model::{all_states, successors};

    #[test]
    fn pm_open_grid_distance_is_manhattan() {
        let map = GridMap::open(8, 8);
        let d = DistanceMap::build(Cell::new(3, 4), AgentModel::Pm, &map).unwrap();
        assert_eq!(d.get(KinState::at(Cell::new(0, 0)), &map), 7);
        assert_eq!(d.get(KinState::at(Cell::new(3, 4)), &map), 0);
    }

    #[test]
    fn rm_one_cell_west_facing_west_needs_three_steps() {
        // Agent sits one cell west of the goal but faces away from it: two
        // rotations plus one forward move.
        let map = GridMap::open(8, 8);
        let d = DistanceMap::build(Cell::new(4, 4), AgentModel::Rm, &map).unwrap();
        let s = KinState::facing(Cell::new(3, 4), Heading::West);
        assert_eq!(d.get(s, &map), 3);
        let facing_goal = KinState::facing(Cell::new(3, 4), Heading::East);
        assert_eq!(d.get(facing_goal, &map), 1);
    }

    #[test]
    fn enclosed_goal_leaves_everything_unreachable() {
        let text = "type octile\nheight 3\nwidth 5\nmap\n.@.@.\n.@.@.\n.@.@.";
        let map = GridMap::parse(text, "m").unwrap();
        let d = DistanceMap::build(Cell::new(2, 1), AgentModel::Pm, &map).unwrap();
        assert_eq!(d.get(KinState::at(Cell::new(0, 0)), &map), DIST_INF);
        assert_eq!(d.get(KinState::at(Cell::new(2, 0)), &map), 1);
    }

    #[test]
    fn invalid_goal_is_rejected() {
        let map = GridMap::parse("type octile\nheight 2\nwidth 2\nmap\n.@\n..", "m").unwrap();
        assert!(DistanceMap::build(Cell::new(1, 0), AgentModel::Pm, &map).is_err());
        // A pmla(2) anchor at (0,0) covers the blocked (1,0).
        assert!(DistanceMap::build(Cell::new(0, 0), AgentModel::Pmla(2), &map).is_err());
    }

    #[test]
    fn distances_are_consistent_across_all_models() {
        let text = "type octile\nheight 6\nwidth 6\nmap\n......\n..@@..\n..@...\n......\n.@....\n......";
        let map = GridMap::parse(text, "m").unwrap();
        for model in [AgentModel::Pm, AgentModel::Pmla(2), AgentModel::Rm] {
            let goal = Cell::new(5, 5);
            let d = DistanceMap::build(goal, model, &map).unwrap();
            for s in all_states(model, &map) {
                let ds = d.get(s, &map);
                for next in successors(s, model, &map) {
                    let dn = d.get(next, &map);
                    if ds == DIST_INF {
                        assert_eq!(dn, DIST_INF);
                    } else {
                        assert!(dn != DIST_INF);
                        assert!((ds as i64 - dn as i64).abs() <= 1, "{s} -> {next}: {ds} vs {dn}");
                    }
                }
            }
        }
    }
}
