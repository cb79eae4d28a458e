//! Link quality ranges and per-link attribute assignment.
//!
//! Units: bandwidth in Mbit/s, delay and jitter in milliseconds, packet loss
//! rate as a fraction in `[0, 1]`. Integers are drawn from the inclusive
//! range `[min, max]`; reals from `[min, max)`, or exactly `min` when the two
//! bounds are equal.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::{Stream, StreamRng};
use crate::topology::{Edge, Topology};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntRange {
    pub min: u64,
    pub max: u64,
}

impl IntRange {
    pub fn new(min: u64, max: u64) -> Self {
        Self { min, max }
    }

    pub fn contains(&self, x: u64) -> bool {
        self.min <= x && x <= self.max
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RealRange {
    pub min: f64,
    pub max: f64,
}

impl RealRange {
    pub fn new(min: f64, max: f64) -> Self {
        Self { min, max }
    }

    /// Membership under the sampling convention: `[min, max)`, or `{min}` if degenerate.
    pub fn contains(&self, x: f64) -> bool {
        if self.min == self.max {
            x == self.min
        } else {
            self.min <= x && x < self.max
        }
    }
}

/// Designer-set bounds for the four QoS metrics.
///
/// Used both for link attributes and for flow requirements.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QosRanges {
    pub bandwidth: IntRange,
    pub delay: RealRange,
    pub jitter: RealRange,
    pub plr: RealRange,
}

pub type AttributeRanges = QosRanges;

impl Default for QosRanges {
    fn default() -> Self {
        Self {
            bandwidth: IntRange::new(10, 100),
            delay: RealRange::new(1.0, 10.0),
            jitter: RealRange::new(0.0, 1.0),
            plr: RealRange::new(0.0, 0.05),
        }
    }
}

impl QosRanges {
    pub fn validate(&self) -> Result<()> {
        let bw = self.bandwidth;
        if bw.min < 1 {
            return Err(range_err("bandwidth", "minimum must be at least 1 Mbit/s"));
        }
        if bw.min > bw.max {
            return Err(range_err(
                "bandwidth",
                format!("min {} exceeds max {}", bw.min, bw.max),
            ));
        }
        for (metric, r) in [
            ("delay", self.delay),
            ("jitter", self.jitter),
            ("plr", self.plr),
        ] {
            if !r.min.is_finite() || !r.max.is_finite() {
                return Err(range_err(metric, "bounds must be finite"));
            }
            if r.min < 0.0 {
                return Err(range_err(metric, format!("min {} is negative", r.min)));
            }
            if r.min > r.max {
                return Err(range_err(
                    metric,
                    format!("min {} exceeds max {}", r.min, r.max),
                ));
            }
        }
        if self.plr.max > 1.0 {
            return Err(range_err(
                "plr",
                format!(
                    "max {} is above 1 (loss is a fraction, not a percent)",
                    self.plr.max
                ),
            ));
        }
        Ok(())
    }

    pub(crate) fn sample(&self, rng: &mut StreamRng) -> (u64, f64, f64, f64) {
        let bandwidth = rng.int_inclusive(self.bandwidth.min, self.bandwidth.max);
        let delay = rng.real(self.delay.min, self.delay.max);
        let jitter = rng.real(self.jitter.min, self.jitter.max);
        let plr = rng.real(self.plr.min, self.plr.max);
        (bandwidth, delay, jitter, plr)
    }
}

fn range_err(metric: &'static str, reason: impl Into<String>) -> Error {
    Error::Range {
        metric,
        reason: reason.into(),
    }
}

/// Quality values of one undirected link, applied in both directions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinkAttributes {
    pub bandwidth: u64,
    pub delay: f64,
    pub jitter: f64,
    pub plr: f64,
}

impl LinkAttributes {
    pub fn within(&self, ranges: &AttributeRanges) -> bool {
        ranges.bandwidth.contains(self.bandwidth)
            && ranges.delay.contains(self.delay)
            && ranges.jitter.contains(self.jitter)
            && ranges.plr.contains(self.plr)
    }
}

pub type LinkAttributeMap = BTreeMap<Edge, LinkAttributes>;

/// Draws one attribute set per edge, visiting edges in canonical order.
pub fn assign_link_attributes(
    t: &Topology,
    ranges: &AttributeRanges,
    seed: u64,
) -> Result<LinkAttributeMap> {
    ranges.validate()?;
    let n = t.node_count();
    if let Some(bad) = t.edges().iter().find(|e| e.v().index() >= n) {
        return Err(Error::Structural(format!(
            "edge {bad} references a node outside 0..{n}"
        )));
    }

    let mut rng = StreamRng::new(seed, Stream::LinkAttributes);
    let map = t
        .edges()
        .iter()
        .map(|&edge| {
            let (bandwidth, delay, jitter, plr) = ranges.sample(&mut rng);
            (
                edge,
                LinkAttributes {
                    bandwidth,
                    delay,
                    jitter,
                    plr,
                },
            )
        })
        .collect();
    Ok(map)
}
