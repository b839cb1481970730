use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::map::GridMap;

/// A grid cell, `x` growing rightwards and `y` growing downwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub x: u16,
    pub y: u16,
}

impl Cell {
    pub const fn new(x: u16, y: u16) -> Self {
        Self { x, y }
    }

    /// The neighbor one step in `(dx, dy)`, if it stays within `u16`.
    pub fn offset(self, dx: i32, dy: i32) -> Option<Cell> {
        let x = self.x as i32 + dx;
        let y = self.y as i32 + dy;
        if (0..=u16::MAX as i32).contains(&x) && (0..=u16::MAX as i32).contains(&y) {
            Some(Cell::new(x as u16, y as u16))
        } else {
            None
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Facing direction for the rotation model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Heading {
    North,
    East,
    South,
    West,
}

impl Heading {
    pub const ALL: [Heading; 4] = [Heading::North, Heading::East, Heading::South, Heading::West];

    pub fn index(self) -> usize {
        match self {
            Heading::North => 0,
            Heading::East => 1,
            Heading::South => 2,
            Heading::West => 3,
        }
    }

    /// Unit step in this direction; north is `-y`.
    pub fn delta(self) -> (i32, i32) {
        match self {
            Heading::North => (0, -1),
            Heading::East => (1, 0),
            Heading::South => (0, 1),
            Heading::West => (-1, 0),
        }
    }

    pub fn rotate_left(self) -> Heading {
        match self {
            Heading::North => Heading::West,
            Heading::West => Heading::South,
            Heading::South => Heading::East,
            Heading::East => Heading::North,
        }
    }

    pub fn rotate_right(self) -> Heading {
        match self {
            Heading::North => Heading::East,
            Heading::East => Heading::South,
            Heading::South => Heading::West,
            Heading::West => Heading::North,
        }
    }
}

/// Agent kinodynamic model.
///
/// `Pm` is a single-cell omnidirectional agent, `Pmla(k)` occupies a `k`x`k`
/// footprint anchored at its top-left cell and moves like `Pm`, and `Rm`
/// occupies one cell but carries a heading and can only move forward or
/// rotate in place.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AgentModel {
    Pm,
    Pmla(u8),
    Rm,
}

impl AgentModel {
    /// Footprint side length in cells.
    pub fn size(self) -> u16 {
        match self {
            AgentModel::Pm | AgentModel::Rm => 1,
            AgentModel::Pmla(k) => k as u16,
        }
    }

    pub fn heading_count(self) -> usize {
        match self {
            AgentModel::Rm => 4,
            _ => 1,
        }
    }

    /// Number of state-table slots for this model on `map`.
    pub fn state_count(self, map: &GridMap) -> usize {
        map.cell_count() * self.heading_count()
    }
}

impl fmt::Display for AgentModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AgentModel::Pm => write!(f, "pm"),
            AgentModel::Pmla(k) => write!(f, "pmla:{k}"),
            AgentModel::Rm => write!(f, "rm"),
        }
    }
}

impl FromStr for AgentModel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pm" => Ok(AgentModel::Pm),
            "rm" => Ok(AgentModel::Rm),
            other => {
                if let Some(k) = other.strip_prefix("pmla:") {
                    let k: u8 = k.parse().map_err(|_| format!("invalid pmla size: {k}"))?;
                    if k == 0 {
                        return Err("pmla size must be >= 1".to_string());
                    }
                    Ok(AgentModel::Pmla(k))
                } else {
                    Err(format!("unknown agent model: {other} (expected pm, pmla:<k>, rm)"))
                }
            }
        }
    }
}

/// A kinodynamic state: the occupied (anchor) cell plus, for `Rm`, a heading.
///
/// For `Pmla` the cell is the top-left anchor of the footprint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KinState {
    pub cell: Cell,
    pub heading: Option<Heading>,
}

impl KinState {
    pub const fn at(cell: Cell) -> Self {
        Self { cell, heading: None }
    }

    pub const fn facing(cell: Cell, heading: Heading) -> Self {
        Self {
            cell,
            heading: Some(heading),
        }
    }

    /// Compact index into per-model state tables.
    #[inline]
    pub fn index(self, model: AgentModel, map: &GridMap) -> usize {
        let base = map.cell_index(self.cell);
        match model {
            AgentModel::Rm => base * 4 + self.heading.map_or(0, Heading::index),
            _ => base,
        }
    }

    /// A state is valid when its whole footprint lies on passable cells and,
    /// for `Rm`, it carries a heading.
    pub fn is_valid(self, model: AgentModel, map: &GridMap) -> bool {
        match model {
            AgentModel::Rm if self.heading.is_none() => false,
            AgentModel::Pm | AgentModel::Pmla(_) if self.heading.is_some() => false,
            _ => footprint_passable(self.cell, model, map),
        }
    }
}

impl fmt::Display for KinState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.heading {
            Some(h) => write!(f, "{}{:?}", self.cell, h),
            None => write!(f, "{}", self.cell),
        }
    }
}

/// The set of cells occupied by a state, as an axis-aligned square.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Footprint {
    pub anchor: Cell,
    pub size: u16,
}

impl Footprint {
    pub fn of(state: KinState, model: AgentModel) -> Self {
        Self {
            anchor: state.cell,
            size: model.size(),
        }
    }

    pub fn cells(self) -> impl Iterator<Item = Cell> {
        let Footprint { anchor, size } = self;
        (0..size).flat_map(move |dy| (0..size).map(move |dx| Cell::new(anchor.x + dx, anchor.y + dy)))
    }

    pub fn contains(self, cell: Cell) -> bool {
        cell.x >= self.anchor.x
            && cell.x < self.anchor.x + self.size
            && cell.y >= self.anchor.y
            && cell.y < self.anchor.y + self.size
    }

    /// Axis-aligned square overlap test.
    #[inline]
    pub fn intersects(self, other: Footprint) -> bool {
        let (ax0, ay0) = (self.anchor.x as u32, self.anchor.y as u32);
        let (ax1, ay1) = (ax0 + self.size as u32, ay0 + self.size as u32);
        let (bx0, by0) = (other.anchor.x as u32, other.anchor.y as u32);
        let (bx1, by1) = (bx0 + other.size as u32, by0 + other.size as u32);
        ax0 < bx1 && bx0 < ax1 && ay0 < by1 && by0 < ay1
    }
}

/// Returns the cells covered by `state` under `model`.
pub fn footprint(state: KinState, model: AgentModel) -> impl Iterator<Item = Cell> {
    Footprint::of(state, model).cells()
}

#[inline]
fn footprint_passable(anchor: Cell, model: AgentModel, map: &GridMap) -> bool {
    let k = model.size();
    if anchor.x as u32 + k as u32 > map.width() as u32 || anchor.y as u32 + k as u32 > map.height() as u32 {
        return false;
    }
    for dy in 0..k {
        for dx in 0..k {
            if map.is_blocked(Cell::new(anchor.x + dx, anchor.y + dy)) {
                return false;
            }
        }
    }
    true
}

/// Orthogonal move order (after wait): up, right, down, left.
///
/// This ordering seeds every deterministic tie-break downstream.
pub const MOVE_ORDER: [(i32, i32); 4] = [(0, -1), (1, 0), (0, 1), (-1, 0)];

/// Valid successor states of `state` under `model`, in deterministic order.
///
/// The wait action always comes first, so `state` is always its own first
/// successor. `Pm`/`Pmla` then try the four orthogonal moves in [`MOVE_ORDER`];
/// `Rm` tries forward, rotate-left, rotate-right.
pub fn successors(state: KinState, model: AgentModel, map: &GridMap) -> Vec<KinState> {
    debug_assert!(state.is_valid(model, map), "successors of invalid state {state}");
    let mut out = Vec::with_capacity(5);
    out.push(state);
    match model {
        AgentModel::Pm | AgentModel::Pmla(_) => {
            for (dx, dy) in MOVE_ORDER {
                if let Some(cell) = state.cell.offset(dx, dy) {
                    if footprint_passable(cell, model, map) {
                        out.push(KinState::at(cell));
                    }
                }
            }
        }
        AgentModel::Rm => {
            let heading = state.heading.expect("rm state carries a heading");
            let (dx, dy) = heading.delta();
            if let Some(cell) = state.cell.offset(dx, dy) {
                if footprint_passable(cell, model, map) {
                    out.push(KinState::facing(cell, heading));
                }
            }
            out.push(KinState::facing(state.cell, heading.rotate_left()));
            out.push(KinState::facing(state.cell, heading.rotate_right()));
        }
    }
    out
}

/// All valid states of `model` on `map`, in state-index order.
pub fn all_states(model: AgentModel, map: &GridMap) -> Vec<KinState> {
    let mut out = Vec::new();
    for y in 0..map.height() {
        for x in 0..map.width() {
            let cell = Cell::new(x, y);
            match model {
                AgentModel::Rm => {
                    for h in Heading::ALL {
                        let s = KinState::facing(cell, h);
                        if s.is_valid(model, map) {
                            out.push(s);
                        }
                    }
                }
                _ => {
                    let s = KinState::at(cell);
                    if s.is_valid(model, map) {
                        out.push(s);
                    }
                }
            }
        }
    }
    out
}
