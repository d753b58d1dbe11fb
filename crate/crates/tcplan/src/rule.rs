//! Planning rules and least-index dispatch.
//!
//! A planner is an ordered list of local rules. Each rule pairs an open
//! domain predicate on (start, goal) pairs with a continuous section that
//! produces a path between them. Planning picks the first rule whose domain
//! accepts the pair; the number of rules a planner needs is the measure of
//! how far its space is from admitting one continuous global rule.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::path::Path;
use crate::vector::Vector;

type DomainFn = Arc<dyn Fn(&Vector, &Vector) -> bool + Send + Sync>;
type SectionFn = Arc<dyn Fn(&Vector, &Vector) -> Result<Path> + Send + Sync>;
type MemberFn = Arc<dyn Fn(&Vector) -> bool + Send + Sync>;
type ViolationFn = Arc<dyn Fn(&Vector) -> f64 + Send + Sync>;

/// An open set of (start, goal) pairs together with a continuous section
/// defined on it.
#[derive(Clone)]
pub struct LocalRule {
    label: String,
    domain: DomainFn,
    section: SectionFn,
}

impl LocalRule {
    pub fn new<D, S>(label: impl Into<String>, domain: D, section: S) -> Self
    where
        D: Fn(&Vector, &Vector) -> bool + Send + Sync + 'static,
        S: Fn(&Vector, &Vector) -> Result<Path> + Send + Sync + 'static,
    {
        Self {
            label: label.into(),
            domain: Arc::new(domain),
            section: Arc::new(section),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Whether the pair lies in this rule's open domain.
    pub fn admits(&self, start: &Vector, goal: &Vector) -> bool {
        (self.domain)(start, goal)
    }

    /// The rule's path for an admissible pair. Calling it outside the domain
    /// is a caller bug and may surface as an error from the formula.
    pub fn section(&self, start: &Vector, goal: &Vector) -> Result<Path> {
        (self.section)(start, goal)
    }
}

impl std::fmt::Debug for LocalRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LocalRule")
            .field("label", &self.label)
            .finish()
    }
}

/// A planned path plus the dispatch metadata tests care about.
///
/// `rule_index` is 1-based, matching the rule labels (`s1`, `s2`, ...).
#[derive(Clone, Debug)]
pub struct PlannedPath {
    pub path: Path,
    pub rule_index: usize,
    pub rule_label: String,
}

/// An ordered, nonempty list of local rules over a free space.
#[derive(Clone)]
pub struct MotionPlanner {
    space_name: String,
    rules: Vec<LocalRule>,
    membership: MemberFn,
    violation: ViolationFn,
}

impl MotionPlanner {
    /// `violation` quantifies how far a point is from satisfying membership
    /// (zero when safely inside); the harness uses it to score containment.
    pub fn new<M, V>(
        space_name: impl Into<String>,
        rules: Vec<LocalRule>,
        membership: M,
        violation: V,
    ) -> Self
    where
        M: Fn(&Vector) -> bool + Send + Sync + 'static,
        V: Fn(&Vector) -> f64 + Send + Sync + 'static,
    {
        assert!(!rules.is_empty(), "a planner needs at least one rule");
        Self {
            space_name: space_name.into(),
            rules,
            membership: Arc::new(membership),
            violation: Arc::new(violation),
        }
    }

    pub fn space_name(&self) -> &str {
        &self.space_name
    }

    pub fn rules(&self) -> &[LocalRule] {
        &self.rules
    }

    /// Number of local rules. For the planners shipped here this equals the
    /// least possible count for their space.
    pub fn rule_count(&self) -> usize {
        self.rules.len()
    }

    pub fn is_member(&self, x: &Vector) -> bool {
        (self.membership)(x)
    }

    /// Nonnegative distance-like measure of how badly `x` violates the free
    /// space; exactly 0.0 for compliant points.
    pub fn membership_violation(&self, x: &Vector) -> f64 {
        (self.violation)(x)
    }

    /// Least-index dispatch: the first rule whose domain accepts the pair
    /// plans it.
    pub fn plan(&self, start: &Vector, goal: &Vector) -> Result<PlannedPath> {
        for point in [start, goal] {
            if !self.is_member(point) {
                return Err(Error::OutsideFreeSpace {
                    point: point.to_string(),
                    space: self.space_name.clone(),
                });
            }
        }
        for (i, rule) in self.rules.iter().enumerate() {
            if rule.admits(start, goal) {
                return Ok(PlannedPath {
                    path: rule.section(start, goal)?,
                    rule_index: i + 1,
                    rule_label: rule.label.clone(),
                });
            }
        }
        Err(Error::NoApplicableRule {
            start: start.to_string(),
            goal: goal.to_string(),
        })
    }
}

impl std::fmt::Debug for MotionPlanner {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MotionPlanner")
            .field("space_name", &self.space_name)
            .field("rules", &self.rules)
            .finish()
    }
}
