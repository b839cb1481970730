use smallvec::SmallVec;

use crate::grid::{AgentModel, Cell, Footprint};

use super::path::Path;

/// Per-epoch reservation table holding the most recent path of every agent
/// (the tentative path while planned, the safe path otherwise), indexed by
/// timestep and cell for fast collision queries.
///
/// All reserved paths share one horizon. Queries are semantically equal to
/// testing the candidate against every entry with [`super::paths_collide`];
/// the occupancy index only changes the cost.
#[derive(Debug)]
pub struct ReservationTable {
    horizon: usize,
    width: u16,
    occ: Vec<Vec<SmallVec<[u32; 2]>>>,
    paths: Vec<Path>,
    models: Vec<AgentModel>,
    hit_mark: Vec<u32>,
    swap_mark: Vec<u32>,
    generation: u32,
}

impl ReservationTable {
    /// Builds the table from one `(path, model)` row per agent, in agent-id
    /// order. Every path must span exactly `horizon` steps.
    pub fn build(horizon: usize, width: u16, height: u16, rows: Vec<(Path, AgentModel)>) -> Self {
        let cells = width as usize * height as usize;
        let mut table = Self {
            horizon,
            width,
            occ: vec![vec![SmallVec::new(); cells]; horizon + 1],
            paths: Vec::with_capacity(rows.len()),
            models: Vec::with_capacity(rows.len()),
            hit_mark: vec![0; rows.len()],
            swap_mark: vec![0; rows.len()],
            generation: 0,
        };
        for (agent, (path, model)) in rows.into_iter().enumerate() {
            table.models.push(model);
            table.insert_cells(agent as u32, &path);
            table.paths.push(path);
        }
        table
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn agent_count(&self) -> usize {
        self.paths.len()
    }

    pub fn path_of(&self, agent: u32) -> &Path {
        &self.paths[agent as usize]
    }

    /// Swaps in a new reserved path for `agent`.
    pub fn replace(&mut self, agent: u32, path: Path) {
        let old = std::mem::replace(&mut self.paths[agent as usize], path);
        self.remove_cells(agent, &old);
        let path = self.paths[agent as usize].clone();
        self.insert_cells(agent, &path);
    }

    #[inline]
    fn cell_index(&self, cell: Cell) -> usize {
        cell.y as usize * self.width as usize + cell.x as usize
    }

    fn insert_cells(&mut self, agent: u32, path: &Path) {
        debug_assert_eq!(path.window(), self.horizon, "reserved paths share one horizon");
        let model = self.models[agent as usize];
        for t in 0..=self.horizon {
            for cell in Footprint::of(path.at(t), model).cells() {
                let idx = self.cell_index(cell);
                self.occ[t][idx].push(agent);
            }
        }
    }

    fn remove_cells(&mut self, agent: u32, path: &Path) {
        let model = self.models[agent as usize];
        for t in 0..=self.horizon {
            for cell in Footprint::of(path.at(t), model).cells() {
                let idx = self.cell_index(cell);
                let slot = &mut self.occ[t][idx];
                if let Some(pos) = slot.iter().position(|&a| a == agent) {
                    slot.swap_remove(pos);
                }
            }
        }
    }

    /// Agents other than `owner` whose reserved path collides with
    /// `candidate`, ascending by id.
    pub fn colliding_agents(&mut self, candidate: &Path, owner: u32, model: AgentModel) -> Vec<u32> {
        debug_assert_eq!(candidate.window(), self.horizon);
        if self.generation > u32::MAX - (self.horizon as u32 + 2) {
            self.hit_mark.fill(0);
            self.swap_mark.fill(0);
            self.generation = 0;
        }
        self.generation += 1;
        let hit_gen = self.generation;
        let mut hits: Vec<u32> = Vec::new();

        // Vertex collisions: occupancy cells are exact footprints, so a
        // shared cell is a footprint intersection.
        for t in 0..=self.horizon {
            for cell in Footprint::of(candidate.at(t), model).cells() {
                let idx = self.cell_index(cell);
                for &a in &self.occ[t][idx] {
                    if a != owner && self.hit_mark[a as usize] != hit_gen {
                        self.hit_mark[a as usize] = hit_gen;
                        hits.push(a);
                    }
                }
            }
        }

        // Generalized swaps: an agent collides at transition t when it sits on
        // the candidate's t-footprint at t+1 and on the candidate's
        // (t+1)-footprint at t.
        for t in 0..self.horizon {
            self.generation += 1;
            let swap_gen = self.generation;
            for cell in Footprint::of(candidate.at(t), model).cells() {
                let idx = self.cell_index(cell);
                for &a in &self.occ[t + 1][idx] {
                    if a != owner {
                        self.swap_mark[a as usize] = swap_gen;
                    }
                }
            }
            for cell in Footprint::of(candidate.at(t + 1), model).cells() {
                let idx = self.cell_index(cell);
                for &a in &self.occ[t][idx] {
                    if a != owner
                        && self.swap_mark[a as usize] == swap_gen
                        && self.hit_mark[a as usize] != hit_gen
                    {
                        self.hit_mark[a as usize] = hit_gen;
                        hits.push(a);
                    }
                }
            }
        }

        hits.sort_unstable();
        hits
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::KinState;
    use crate::kernel::paths_collide;

    fn pm_path(cells: &[(u16, u16)]) -> Path {
        Path::new(
            cells.iter().map(|&(x, y)| KinState::at(Cell::new(x, y))).collect(),
            0,
        )
    }

    #[test]
    fn finds_agents_blocking_a_sweep() {
        // Three parked agents across a 3-step path's row, plus one far away.
        let rows = vec![
            (pm_path(&[(2, 1); 4]), AgentModel::Pm),
            (pm_path(&[(3, 1); 4]), AgentModel::Pm),
            (pm_path(&[(4, 1); 4]), AgentModel::Pm),
            (pm_path(&[(7, 7); 4]), AgentModel::Pm),
        ];
        let mut table = ReservationTable::build(3, 8, 8, rows);
        let candidate = pm_path(&[(1, 1), (2, 1), (3, 1), (4, 1)]);
        assert_eq!(table.colliding_agents(&candidate, 4, AgentModel::Pm), vec![0, 1, 2]);
    }

    #[test]
    fn owner_is_excluded() {
        let rows = vec![(pm_path(&[(1, 1); 2]), AgentModel::Pm)];
        let mut table = ReservationTable::build(1, 4, 4, rows);
        let candidate = pm_path(&[(1, 1), (2, 1)]);
        assert!(table.colliding_agents(&candidate, 0, AgentModel::Pm).is_empty());
    }

    #[test]
    fn swap_is_detected() {
        let rows = vec![(pm_path(&[(2, 1), (1, 1)]), AgentModel::Pm)];
        let mut table = ReservationTable::build(1, 4, 4, rows);
        let candidate = pm_path(&[(1, 1), (2, 1)]);
        assert_eq!(table.colliding_agents(&candidate, 1, AgentModel::Pm), vec![0]);
    }

    #[test]
    fn large_candidate_sweeps_over_two_point_agents() {
        let rows = vec![
            (pm_path(&[(4, 2); 3]), AgentModel::Pm),
            (pm_path(&[(5, 4); 3]), AgentModel::Pm),
        ];
        let mut table = ReservationTable::build(2, 10, 10, rows);
        // 4x4 footprint moving right covers both parked agents.
        let candidate = pm_path(&[(1, 1), (2, 1), (3, 1)]);
        assert_eq!(
            table.colliding_agents(&candidate, 2, AgentModel::Pmla(4)),
            vec![0, 1]
        );
    }

    #[test]
    fn replace_updates_the_index() {
        let rows = vec![
            (pm_path(&[(2, 2), (2, 2)]), AgentModel::Pm),
            (pm_path(&[(0, 0), (0, 0)]), AgentModel::Pm),
        ];
        let mut table = ReservationTable::build(1, 4, 4, rows);
        let candidate = pm_path(&[(2, 1), (2, 2)]);
        assert_eq!(table.colliding_agents(&candidate, 1, AgentModel::Pm), vec![0]);
        table.replace(0, pm_path(&[(3, 3), (3, 3)]));
        assert!(table.colliding_agents(&candidate, 1, AgentModel::Pm).is_empty());
    }

    #[test]
    fn matches_naive_pairwise_check() {
        // Differential check on a handcrafted mixed-model set; the proptest
        // version lives in tests/kernel_properties.rs.
        let rows = vec![
            (pm_path(&[(0, 0), (1, 0), (1, 1)]), AgentModel::Pmla(2)),
            (pm_path(&[(3, 0), (2, 0), (2, 1)]), AgentModel::Pm),
            (pm_path(&[(0, 3), (0, 2), (0, 2)]), AgentModel::Pm),
        ];
        let mut table = ReservationTable::build(2, 6, 6, rows.clone());
        let candidate = pm_path(&[(2, 2), (1, 2), (1, 1)]);
        for owner in 0..3u32 {
            let fast = table.colliding_agents(&candidate, owner, AgentModel::Pm);
            let naive: Vec<u32> = (0..3u32)
                .filter(|&j| j != owner)
                .filter(|&j| {
                    paths_collide(&candidate, AgentModel::Pm, &rows[j as usize].0, rows[j as usize].1)
                })
                .collect();
            assert_eq!(fast, naive, "owner {owner}");
        }
    }
}
