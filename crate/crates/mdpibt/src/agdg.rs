//! The agent dependency graph: agents as nodes, directed hard and soft
//! dependency edges between them.
//!
//! A hard edge `a -> b` records that `a`'s tentative path collides with the
//! safe path of the *unplanned* agent `b`; a soft edge `a --> b` records the
//! same collision while `b` is planned. Soft edges convert to hard the moment
//! their target is unplanned. Every hard edge carries a monotone insertion
//! stamp so the planner can pick the most recently added parent; converted
//! edges are stamped afresh at conversion time.

use std::fmt::Write as _;

/// Directed multi-relation dependency graph over agent ids `0..n`.
#[derive(Debug, Clone)]
pub struct DependencyGraph {
    hard_out: Vec<Vec<u32>>,
    hard_in: Vec<Vec<(u32, u64)>>,
    soft_out: Vec<Vec<u32>>,
    soft_in: Vec<Vec<u32>>,
    next_stamp: u64,
}

impl DependencyGraph {
    pub fn new(agents: usize) -> Self {
        Self {
            hard_out: vec![Vec::new(); agents],
            hard_in: vec![Vec::new(); agents],
            soft_out: vec![Vec::new(); agents],
            soft_in: vec![Vec::new(); agents],
            next_stamp: 0,
        }
    }

    pub fn clear(&mut self) {
        for list in self
            .hard_out
            .iter_mut()
            .chain(self.soft_out.iter_mut())
            .chain(self.soft_in.iter_mut())
        {
            list.clear();
        }
        for list in self.hard_in.iter_mut() {
            list.clear();
        }
        self.next_stamp = 0;
    }

    pub fn add_hard(&mut self, src: u32, dst: u32) {
        debug_assert_ne!(src, dst, "no self-edges");
        debug_assert!(!self.has_edge(src, dst), "pair already carries an edge");
        let stamp = self.next_stamp;
        self.next_stamp += 1;
        self.hard_out[src as usize].push(dst);
        self.hard_in[dst as usize].push((src, stamp));
    }

    pub fn add_soft(&mut self, src: u32, dst: u32) {
        debug_assert_ne!(src, dst, "no self-edges");
        debug_assert!(!self.has_edge(src, dst), "pair already carries an edge");
        self.soft_out[src as usize].push(dst);
        self.soft_in[dst as usize].push(src);
    }

    pub fn has_edge(&self, src: u32, dst: u32) -> bool {
        self.hard_out[src as usize].contains(&dst) || self.soft_out[src as usize].contains(&dst)
    }

    pub fn hard_in_degree(&self, agent: u32) -> usize {
        self.hard_in[agent as usize].len()
    }

    /// Hard parents of `agent` ordered by edge insertion recency, most recent
    /// last.
    pub fn hard_parents(&self, agent: u32) -> Vec<u32> {
        let mut edges = self.hard_in[agent as usize].clone();
        edges.sort_by_key(|&(_, stamp)| stamp);
        edges.into_iter().map(|(src, _)| src).collect()
    }

    /// Snapshot of `agent`'s hard children in insertion order.
    pub fn hard_children(&self, agent: u32) -> Vec<u32> {
        self.hard_out[agent as usize].clone()
    }

    pub fn remove_hard(&mut self, src: u32, dst: u32) {
        retain_one(&mut self.hard_out[src as usize], dst);
        let list = &mut self.hard_in[dst as usize];
        if let Some(pos) = list.iter().position(|&(s, _)| s == src) {
            list.remove(pos);
        }
    }

    /// Converts every soft edge into `agent` to a hard edge with a fresh
    /// stamp. Valid exactly when `agent` has just been unplanned.
    pub fn convert_soft_in_to_hard(&mut self, agent: u32) {
        let sources = std::mem::take(&mut self.soft_in[agent as usize]);
        for src in sources {
            retain_one(&mut self.soft_out[src as usize], agent);
            let stamp = self.next_stamp;
            self.next_stamp += 1;
            self.hard_out[src as usize].push(agent);
            self.hard_in[agent as usize].push((src, stamp));
        }
    }

    /// Drops every soft edge leaving `agent`.
    pub fn remove_soft_out(&mut self, agent: u32) {
        let targets = std::mem::take(&mut self.soft_out[agent as usize]);
        for dst in targets {
            retain_one(&mut self.soft_in[dst as usize], agent);
        }
    }

    pub fn edge_count(&self) -> usize {
        self.hard_out.iter().map(Vec::len).sum::<usize>()
            + self.soft_out.iter().map(Vec::len).sum::<usize>()
    }

    pub fn hard_edge_count(&self) -> usize {
        self.hard_out.iter().map(Vec::len).sum()
    }

    /// Text edge list for trace output: one `src -> dst` line per hard edge
    /// and `src --> dst` per soft edge.
    pub fn export_edges(&self) -> String {
        let mut out = String::new();
        for (src, targets) in self.hard_out.iter().enumerate() {
            for &dst in targets {
                let _ = writeln!(out, "{src} -> {dst}");
            }
        }
        for (src, targets) in self.soft_out.iter().enumerate() {
            for &dst in targets {
                let _ = writeln!(out, "{src} --> {dst}");
            }
        }
        out
    }
}

fn retain_one(list: &mut Vec<u32>, value: u32) {
    if let Some(pos) = list.iter().position(|&v| v == value) {
        list.remove(pos);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hard_parents_follow_insertion_recency() {
        let mut g = DependencyGraph::new(4);
        g.add_hard(1, 0); // X
        g.add_hard(2, 0); // Y
        assert_eq!(g.hard_parents(0), vec![1, 2]);

        // Removing and re-adding X makes it the most recent again.
        g.remove_hard(1, 0);
        g.add_hard(1, 0);
        assert_eq!(g.hard_parents(0), vec![2, 1]);
    }

    #[test]
    fn unconnected_node_has_no_parents() {
        let g = DependencyGraph::new(3);
        assert!(g.hard_parents(2).is_empty());
        assert_eq!(g.hard_in_degree(2), 0);
    }

    #[test]
    fn conversion_restamps_edges() {
        let mut g = DependencyGraph::new(4);
        g.add_soft(1, 0);
        g.add_hard(2, 0);
        assert_eq!(g.hard_parents(0), vec![2]);
        g.convert_soft_in_to_hard(0);
        // The converted edge is now the most recent hard parent.
        assert_eq!(g.hard_parents(0), vec![2, 1]);
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(1, 0));
    }

    #[test]
    fn remove_soft_out_clears_both_sides() {
        let mut g = DependencyGraph::new(3);
        g.add_soft(0, 1);
        g.add_soft(0, 2);
        g.remove_soft_out(0);
        assert_eq!(g.edge_count(), 0);
        g.convert_soft_in_to_hard(1);
        assert_eq!(g.hard_in_degree(1), 0);
    }

    #[test]
    fn export_lists_both_edge_kinds() {
        let mut g = DependencyGraph::new(3);
        g.add_hard(0, 1);
        g.add_soft(2, 1);
        let text = g.export_edges();
        assert!(text.contains("0 -> 1"));
        assert!(text.contains("2 --> 1"));
    }
}
