use crate::grid::{successors, AgentModel, DistanceMap, GridMap, KinState};

use super::path::Path;

/// Enumerates every `window`-step path starting at `start` whose intermediate
/// states are all valid, sorted ascending by the distance from the final
/// state to the goal behind `dist`.
///
/// The sort is stable over depth-first generation order, which itself follows
/// the successor ordering, so ties break deterministically. The all-wait path
/// is always present, so the result is never empty.
pub fn enumerate_paths(
    start: KinState,
    window: usize,
    model: AgentModel,
    map: &GridMap,
    dist: &DistanceMap,
) -> Vec<Path> {
    assert!(window >= 1, "planning window must be >= 1");
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(window + 1);
    prefix.push(start);
    extend(&mut prefix, window, model, map, dist, &mut out);
    out.sort_by_key(|p| p.terminal_dist());
    out
}

fn extend(
    prefix: &mut Vec<KinState>,
    window: usize,
    model: AgentModel,
    map: &GridMap,
    dist: &DistanceMap,
    out: &mut Vec<Path>,
) {
    if prefix.len() == window + 1 {
        let end = *prefix.last().expect("non-empty");
        out.push(Path::new(prefix.clone(), dist.get(end, map)));
        return;
    }
    let cur = *prefix.last().expect("non-empty");
    for next in successors(cur, model, map) {
        prefix.push(next);
        extend(prefix, window, model, map, dist, out);
        prefix.pop();
    }
}
