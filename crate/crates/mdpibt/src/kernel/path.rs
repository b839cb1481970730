use serde::{Deserialize, Serialize};

use crate::grid::{KinState, DIST_INF};

/// A timestep-indexed sequence of states over a planning window of `w` steps,
/// holding `w + 1` states at offsets `0..=w`.
///
/// `terminal_dist` caches the owner's goal distance from the final state and
/// orders candidate lists; it is not meaningful for safe paths built from
/// carryover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Path {
    states: Vec<KinState>,
    terminal_dist: u32,
}

impl Path {
    pub fn new(states: Vec<KinState>, terminal_dist: u32) -> Self {
        assert!(!states.is_empty(), "a path holds at least its start state");
        Self {
            states,
            terminal_dist,
        }
    }

    /// A path that waits at `state` for `window` steps.
    pub fn wait_at(state: KinState, window: usize) -> Self {
        Self {
            states: vec![state; window + 1],
            terminal_dist: DIST_INF,
        }
    }

    pub fn states(&self) -> &[KinState] {
        &self.states
    }

    /// Number of steps, i.e. `len - 1`.
    pub fn window(&self) -> usize {
        self.states.len() - 1
    }

    pub fn start(&self) -> KinState {
        self.states[0]
    }

    pub fn end(&self) -> KinState {
        *self.states.last().expect("non-empty")
    }

    /// State at offset `t`, repeating the final state beyond the horizon.
    #[inline]
    pub fn at(&self, t: usize) -> KinState {
        if t < self.states.len() {
            self.states[t]
        } else {
            self.end()
        }
    }

    pub fn terminal_dist(&self) -> u32 {
        self.terminal_dist
    }

    pub fn cells(&self) -> impl Iterator<Item = crate::grid::Cell> + '_ {
        self.states.iter().map(|s| s.cell)
    }
}
