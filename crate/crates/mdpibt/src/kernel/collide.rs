use crate::grid::{AgentModel, Footprint};

use super::path::Path;

/// Whether two paths collide under the footprint semantics of their models.
///
/// The shorter path is padded by repeating its final state. A collision is
/// either a vertex collision (footprints intersect at the same timestep) or a
/// generalized swap: at some transition, `a`'s footprint at `t` intersects
/// `b`'s at `t + 1` *and* `b`'s at `t` intersects `a`'s at `t + 1`. For
/// single-cell agents this reduces to the classic edge collision.
pub fn paths_collide(a: &Path, model_a: AgentModel, b: &Path, model_b: AgentModel) -> bool {
    let horizon = a.states().len().max(b.states().len());
    let fa = |t: usize| Footprint::of(a.at(t), model_a);
    let fb = |t: usize| Footprint::of(b.at(t), model_b);

    for t in 0..horizon {
        if fa(t).intersects(fb(t)) {
            return true;
        }
    }
    for t in 0..horizon.saturating_sub(1) {
        if fa(t).intersects(fb(t + 1)) && fb(t).intersects(fa(t + 1)) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{Cell, KinState};

    fn pm_path(cells: &[(u16, u16)]) -> Path {
        Path::new(
            cells.iter().map(|&(x, y)| KinState::at(Cell::new(x, y))).collect(),
            0,
        )
    }

    #[test]
    fn vertex_collision_at_shared_cell() {
        let a = pm_path(&[(1, 3), (2, 3), (3, 3), (3, 3)]);
        let b = pm_path(&[(3, 4), (3, 4), (3, 3), (3, 4)]);
        assert!(paths_collide(&a, AgentModel::Pm, &b, AgentModel::Pm));
    }

    #[test]
    fn swap_is_an_edge_collision() {
        let a = pm_path(&[(1, 1), (1, 2)]);
        let b = pm_path(&[(1, 2), (1, 1)]);
        assert!(paths_collide(&a, AgentModel::Pm, &b, AgentModel::Pm));
    }

    #[test]
    fn follow_is_not_a_collision() {
        let a = pm_path(&[(1, 1), (1, 2)]);
        let b = pm_path(&[(1, 2), (1, 3)]);
        assert!(!paths_collide(&a, AgentModel::Pm, &b, AgentModel::Pm));
    }

    #[test]
    fn large_footprint_overlaps_point_agent() {
        // A stationary 3x3 agent anchored at (0,0) covers (2,2).
        let big = pm_path(&[(0, 0), (0, 0), (0, 0)]);
        let small = pm_path(&[(4, 2), (3, 2), (2, 2)]);
        assert!(paths_collide(&big, AgentModel::Pmla(3), &small, AgentModel::Pm));
        let clear = pm_path(&[(4, 2), (3, 2), (3, 3)]);
        assert!(!paths_collide(&big, AgentModel::Pmla(3), &clear, AgentModel::Pm));
    }

    #[test]
    fn shorter_path_is_padded_with_waits() {
        let parked = pm_path(&[(2, 2)]);
        let mover = pm_path(&[(0, 2), (1, 2), (2, 2)]);
        assert!(paths_collide(&parked, AgentModel::Pm, &mover, AgentModel::Pm));
    }
}
