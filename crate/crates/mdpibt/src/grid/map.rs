use thiserror::Error;

use super::model::Cell;

/// Errors from parsing a MovingAI `.map` file.
#[derive(Debug, Error)]
pub enum MapParseError {
    #[error("line {line}: malformed header, expected `{expected}`")]
    MalformedHeader { line: usize, expected: &'static str },

    #[error("line {line}: invalid {field}: {value}")]
    InvalidDimension {
        line: usize,
        field: &'static str,
        value: String,
    },

    #[error("line {line}: map rows do not match header (expected {expected} rows of {width} cells)")]
    DimensionMismatch {
        line: usize,
        expected: usize,
        width: usize,
    },

    #[error("line {line}: unknown cell character {ch:?}")]
    UnknownCell { line: usize, ch: char },
}

/// A 4-connected grid map with static obstacles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridMap {
    width: u16,
    height: u16,
    blocked: Vec<bool>,
    name: String,
}

impl GridMap {
    /// Builds a map from an explicit blocked mask, row-major.
    ///
    /// Panics if the mask length does not equal `width * height` or either
    /// dimension is zero.
    pub fn from_blocked(width: u16, height: u16, blocked: Vec<bool>, name: impl Into<String>) -> Self {
        assert!(width >= 1 && height >= 1, "map dimensions must be >= 1");
        assert_eq!(
            blocked.len(),
            width as usize * height as usize,
            "blocked mask must have width*height entries"
        );
        Self {
            width,
            height,
            blocked,
            name: name.into(),
        }
    }

    /// An obstacle-free map, handy in tests.
    pub fn open(width: u16, height: u16) -> Self {
        Self::from_blocked(
            width,
            height,
            vec![false; width as usize * height as usize],
            format!("open-{width}x{height}"),
        )
    }

    /// Parses the MovingAI `.map` text format:
    ///
    /// ```text
    /// type octile
    /// height H
    /// width W
    /// map
    /// <H rows of W characters>
    /// ```
    ///
    /// `.` and `G` are passable, `@` and `T` are blocked.
    pub fn parse(text: &str, name: impl Into<String>) -> Result<Self, MapParseError> {
        let mut lines = text.lines().enumerate();

        let expect = |pair: Option<(usize, &str)>,
                      prefix: &'static str|
         -> Result<(usize, String), MapParseError> {
            match pair {
                Some((idx, line)) if line.trim_start().starts_with(prefix) => {
                    Ok((idx + 1, line.trim().to_string()))
                }
                Some((idx, _)) => Err(MapParseError::MalformedHeader {
                    line: idx + 1,
                    expected: prefix,
                }),
                None => Err(MapParseError::MalformedHeader {
                    line: 0,
                    expected: prefix,
                }),
            }
        };

        expect(lines.next(), "type")?;
        let (hline, height_str) = expect(lines.next(), "height")?;
        let (wline, width_str) = expect(lines.next(), "width")?;
        expect(lines.next(), "map")?;

        let parse_dim = |line: usize, field: &'static str, s: &str| -> Result<u16, MapParseError> {
            s.split_whitespace()
                .nth(1)
                .and_then(|v| v.parse::<u16>().ok())
                .filter(|&v| v >= 1)
                .ok_or(MapParseError::InvalidDimension {
                    line,
                    field,
                    value: s.to_string(),
                })
        };
        let height = parse_dim(hline, "height", &height_str)?;
        let width = parse_dim(wline, "width", &width_str)?;

        let mut blocked = Vec::with_capacity(width as usize * height as usize);
        let mut rows = 0usize;
        let mut last_line = 4;
        for (idx, line) in lines {
            let line = line.trim_end();
            if line.is_empty() {
                continue;
            }
            last_line = idx + 1;
            if rows == height as usize || line.chars().count() != width as usize {
                return Err(MapParseError::DimensionMismatch {
                    line: idx + 1,
                    expected: height as usize,
                    width: width as usize,
                });
            }
            for ch in line.chars() {
                match ch {
                    '.' | 'G' => blocked.push(false),
                    '@' | 'T' => blocked.push(true),
                    _ => return Err(MapParseError::UnknownCell { line: idx + 1, ch }),
                }
            }
            rows += 1;
        }
        if rows != height as usize {
            return Err(MapParseError::DimensionMismatch {
                line: last_line,
                expected: height as usize,
                width: width as usize,
            });
        }

        Ok(Self::from_blocked(width, height, blocked, name))
    }

    /// Renders the map back into the MovingAI text format.
    pub fn to_map_text(&self) -> String {
        let mut out = format!("type octile\nheight {}\nwidth {}\nmap\n", self.height, self.width);
        for y in 0..self.height {
            for x in 0..self.width {
                out.push(if self.is_blocked(Cell::new(x, y)) { '@' } else { '.' });
            }
            out.push('\n');
        }
        out
    }

    pub fn width(&self) -> u16 {
        self.width
    }

    pub fn height(&self) -> u16 {
        self.height
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn cell_count(&self) -> usize {
        self.width as usize * self.height as usize
    }

    pub fn in_bounds(&self, cell: Cell) -> bool {
        cell.x < self.width && cell.y < self.height
    }

    #[inline]
    pub fn cell_index(&self, cell: Cell) -> usize {
        cell.y as usize * self.width as usize + cell.x as usize
    }

    #[inline]
    pub fn is_blocked(&self, cell: Cell) -> bool {
        self.blocked[self.cell_index(cell)]
    }

    #[inline]
    pub fn is_passable(&self, cell: Cell) -> bool {
        self.in_bounds(cell) && !self.is_blocked(cell)
    }

    pub fn passable_count(&self) -> usize {
        self.blocked.iter().filter(|&&b| !b).count()
    }

    /// Iterates all passable cells in row-major order.
    pub fn passable_cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.height).flat_map(move |y| {
            (0..self.width)
                .map(move |x| Cell::new(x, y))
                .filter(move |&c| !self.is_blocked(c))
        })
    }
}
