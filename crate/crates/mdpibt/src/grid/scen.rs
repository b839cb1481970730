use thiserror::Error;

use super::map::GridMap;
use super::model::Cell;

/// Errors from parsing or validating a MovingAI `.scen` file.
#[derive(Debug, Error)]
pub enum ScenParseError {
    #[error("line {line}: expected at least 9 tab-separated fields, got {got}")]
    MalformedEntry { line: usize, got: usize },

    #[error("line {line}: invalid {field}: {value}")]
    InvalidField {
        line: usize,
        field: &'static str,
        value: String,
    },

    #[error("line {line}: scenario dimensions {w}x{h} do not match map {map_w}x{map_h}")]
    DimensionMismatch {
        line: usize,
        w: u16,
        h: u16,
        map_w: u16,
        map_h: u16,
    },

    #[error("line {line}: {which} cell {cell} is blocked or out of bounds")]
    BlockedCell {
        line: usize,
        which: &'static str,
        cell: Cell,
    },
}

/// One start/goal task from a scenario file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScenEntry {
    pub start: Cell,
    pub goal: Cell,
}

/// Parses the MovingAI `.scen` format against `map`.
///
/// The leading `version` line is optional. Each remaining non-empty line is
/// tab-separated: bucket, map name, map width, map height, start-x, start-y,
/// goal-x, goal-y, optimal length (ignored). Entries keep file order.
pub fn parse_scen(text: &str, map: &GridMap) -> Result<Vec<ScenEntry>, ScenParseError> {
    let mut entries = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if idx == 0 && trimmed.starts_with("version") {
            continue;
        }
        let fields: Vec<&str> = trimmed.split('\t').collect();
        if fields.len() < 9 {
            return Err(ScenParseError::MalformedEntry {
                line,
                got: fields.len(),
            });
        }
        let num = |i: usize, field: &'static str| -> Result<u16, ScenParseError> {
            fields[i].parse().map_err(|_| ScenParseError::InvalidField {
                line,
                field,
                value: fields[i].to_string(),
            })
        };
        let w = num(2, "map width")?;
        let h = num(3, "map height")?;
        if w != map.width() || h != map.height() {
            return Err(ScenParseError::DimensionMismatch {
                line,
                w,
                h,
                map_w: map.width(),
                map_h: map.height(),
            });
        }
        let start = Cell::new(num(4, "start-x")?, num(5, "start-y")?);
        let goal = Cell::new(num(6, "goal-x")?, num(7, "goal-y")?);
        if !map.is_passable(start) {
            return Err(ScenParseError::BlockedCell {
                line,
                which: "start",
                cell: start,
            });
        }
        if !map.is_passable(goal) {
            return Err(ScenParseError::BlockedCell {
                line,
                which: "goal",
                cell: goal,
            });
        }
        entries.push(ScenEntry { start, goal });
    }
    Ok(entries)
}
