use crate::grid::{AgentModel, Cell};
use crate::kernel::Path;

/// Per-agent planning state for one epoch.
///
/// `safe` always holds a path; the set of all agents' safe paths stays
/// mutually collision-free between operations. `candidates` is the sorted
/// list of windowed paths the agent may try, `path_index` the next untried
/// entry, and `replans` counts pops within the current epoch.
#[derive(Debug, Clone)]
pub struct AgentRecord {
    pub id: u32,
    pub model: AgentModel,
    pub goal: Cell,
    /// Epoch rank: 0 plans first. Lower value means strictly higher priority.
    pub priority: u32,
    /// Tentative path under negotiation, revocable until promoted.
    pub tentative: Option<Path>,
    /// Fallback path; promotion rewrites it at the end of each search call.
    pub safe: Path,
    pub candidates: Vec<Path>,
    pub path_index: usize,
    pub replans: u32,
    /// Timesteps since this agent last stood on its goal; drives LET ordering.
    pub elapsed: u64,
}

impl AgentRecord {
    pub fn new(id: u32, model: AgentModel, goal: Cell, safe: Path, candidates: Vec<Path>) -> Self {
        Self {
            id,
            model,
            goal,
            priority: id,
            tentative: None,
            safe,
            candidates,
            path_index: 0,
            replans: 0,
            elapsed: 0,
        }
    }

    /// The most recent path: tentative while planned, safe otherwise.
    pub fn reserved(&self) -> &Path {
        self.tentative.as_ref().unwrap_or(&self.safe)
    }
}
