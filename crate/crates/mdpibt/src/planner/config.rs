use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Candidate-acceptance rule of the path search.
///
/// `Pibt` accepts a candidate whose colliding set is disjoint from every
/// agent planned so far this epoch; `Epibt` accepts a candidate that avoids
/// agents holding a tentative path in the current call and whose colliders
/// are all strictly lower priority with replan attempts left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FindPathMode {
    Pibt,
    Epibt,
}

impl fmt::Display for FindPathMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FindPathMode::Pibt => write!(f, "pibt"),
            FindPathMode::Epibt => write!(f, "epibt"),
        }
    }
}

impl std::str::FromStr for FindPathMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pibt" => Ok(FindPathMode::Pibt),
            "epibt" => Ok(FindPathMode::Epibt),
            other => Err(format!("unknown find-path mode: {other}")),
        }
    }
}

/// Agent ordering strategy recomputed at every epoch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PriorityStrategy {
    /// Longer elapsed time since the last goal arrival plans first.
    Let,
    /// Shorter distance to the next goal plans first.
    Sd,
}

impl fmt::Display for PriorityStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PriorityStrategy::Let => write!(f, "let"),
            PriorityStrategy::Sd => write!(f, "sd"),
        }
    }
}

impl std::str::FromStr for PriorityStrategy {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "let" => Ok(PriorityStrategy::Let),
            "sd" => Ok(PriorityStrategy::Sd),
            other => Err(format!("unknown priority strategy: {other}")),
        }
    }
}

/// Collision cap `C`: the maximum number of agents a candidate path may
/// collide with at acceptance time. `UNBOUNDED` stands for infinity.
pub const UNBOUNDED_COLLIDERS: usize = usize::MAX;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("planning window must be >= 1")]
    ZeroWindow,

    #[error("simulation window h={h} must satisfy 1 <= h <= w={w}")]
    BadCommitWindow { h: u32, w: u32 },

    #[error("collision cap must be >= 1")]
    ZeroCap,
}

/// Hyper-parameter bundle selecting PIBT / EPIBT / MD-PIBT behavior.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlannerConfig {
    /// Planning window `w` (steps per planned path).
    pub window: u32,
    /// Simulation window `h`: committed steps per epoch, `1 <= h <= w`.
    pub commit: u32,
    /// Replan limit `R`: attempts granted before the forced safe-path fall.
    pub replan_limit: u32,
    /// Collision cap `C` ([`UNBOUNDED_COLLIDERS`] for infinity).
    pub collision_cap: usize,
    /// Candidate-acceptance mode `m`.
    pub mode: FindPathMode,
    pub priority: PriorityStrategy,
    /// Flips the elapsed-time ordering so recently satisfied agents plan
    /// first; for sensitivity runs only.
    #[serde(default)]
    pub let_inverted: bool,
}

impl PlannerConfig {
    /// The configuration replicating one-step PIBT: `w = h = 1`, `C = 1`,
    /// PIBT-mode acceptance.
    pub fn pibt_preset(replan_limit: u32, priority: PriorityStrategy) -> Self {
        Self {
            window: 1,
            commit: 1,
            replan_limit,
            collision_cap: 1,
            mode: FindPathMode::Pibt,
            priority,
            let_inverted: false,
        }
    }

    /// The configuration replicating EPIBT: caller-chosen windows with
    /// `C = 1` and EPIBT-mode acceptance.
    pub fn epibt_preset(window: u32, commit: u32, replan_limit: u32, priority: PriorityStrategy) -> Self {
        Self {
            window,
            commit,
            replan_limit,
            collision_cap: 1,
            mode: FindPathMode::Epibt,
            priority,
            let_inverted: false,
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.window == 0 {
            return Err(ConfigError::ZeroWindow);
        }
        if self.commit == 0 || self.commit > self.window {
            return Err(ConfigError::BadCommitWindow {
                h: self.commit,
                w: self.window,
            });
        }
        if self.collision_cap == 0 {
            return Err(ConfigError::ZeroCap);
        }
        Ok(())
    }

    /// Short label used in reports, e.g. `w3-h1-R100-Cinf-epibt-let`.
    pub fn label(&self) -> String {
        format!(
            "w{}-h{}-R{}-C{}-{}-{}",
            self.window,
            self.commit,
            self.replan_limit,
            cap_to_string(self.collision_cap),
            self.mode,
            self.priority
        )
    }
}

pub fn cap_to_string(cap: usize) -> String {
    if cap == UNBOUNDED_COLLIDERS {
        "inf".to_string()
    } else {
        cap.to_string()
    }
}

pub fn cap_from_str(s: &str) -> Result<usize, String> {
    if s == "inf" {
        Ok(UNBOUNDED_COLLIDERS)
    } else {
        let v: usize = s.parse().map_err(|_| format!("invalid collision cap: {s}"))?;
        if v == 0 {
            return Err("collision cap must be >= 1 (or inf)".to_string());
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_pin_their_parameters() {
        let p = PlannerConfig::pibt_preset(100, PriorityStrategy::Sd);
        assert_eq!((p.window, p.commit, p.collision_cap), (1, 1, 1));
        assert_eq!(p.mode, FindPathMode::Pibt);

        let e = PlannerConfig::epibt_preset(3, 1, 100, PriorityStrategy::Let);
        assert_eq!(e.collision_cap, 1);
        assert_eq!(e.mode, FindPathMode::Epibt);
        assert!(e.validate().is_ok());
    }

    #[test]
    fn commit_window_is_bounded_by_planning_window() {
        let mut c = PlannerConfig::epibt_preset(3, 4, 100, PriorityStrategy::Let);
        assert!(matches!(c.validate(), Err(ConfigError::BadCommitWindow { .. })));
        c.commit = 3;
        assert!(c.validate().is_ok());
    }

    #[test]
    fn cap_strings_roundtrip() {
        assert_eq!(cap_from_str("inf").unwrap(), UNBOUNDED_COLLIDERS);
        assert_eq!(cap_from_str("4").unwrap(), 4);
        assert!(cap_from_str("0").is_err());
        assert_eq!(cap_to_string(UNBOUNDED_COLLIDERS), "inf");
        assert_eq!(cap_to_string(2), "2");
    }
}
