//! The complete reproducible artifact: topology, link attributes and flows
//! plus the seed and ranges that produced them.

use std::collections::BTreeSet;

use crate::attributes::{assign_link_attributes, AttributeRanges, LinkAttributeMap};
use crate::error::{Error, Result};
use crate::generator::{generate_topology, GeneratorConfig};
use crate::topology::{validate_topology, Topology, TopologyClass};
use crate::traffic::{generate_flows, Flow, FlowRanges};

pub const SCHEMA_VERSION: &str = "1.0";

/// Timestamp used when the caller does not supply one. Keeping it fixed
/// makes repeated runs byte-identical.
pub const DEFAULT_CREATED: &str = "1970-01-01T00:00:00Z";

/// Everything needed to (re)generate a scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioSpec {
    pub class: TopologyClass,
    pub n: usize,
    pub seed: u64,
    pub flow_count: usize,
    pub link_ranges: AttributeRanges,
    pub flow_ranges: FlowRanges,
    pub created: String,
}

impl ScenarioSpec {
    pub fn new(class: TopologyClass, n: usize, seed: u64) -> Self {
        Self {
            class,
            n,
            seed,
            flow_count: 0,
            link_ranges: AttributeRanges::default(),
            flow_ranges: FlowRanges::default(),
            created: DEFAULT_CREATED.to_string(),
        }
    }

    pub fn with_flows(mut self, count: usize) -> Self {
        self.flow_count = count;
        self
    }

    pub fn build(&self) -> Result<Scenario> {
        validate_created(&self.created)?;
        let topology = generate_topology(&GeneratorConfig::new(self.class, self.n, self.seed))?;
        let link_attrs = assign_link_attributes(&topology, &self.link_ranges, self.seed)?;
        let flows = generate_flows(&topology, self.flow_count, &self.flow_ranges, self.seed)?;
        Ok(Scenario {
            schema_version: SCHEMA_VERSION.to_string(),
            seed: self.seed,
            created: self.created.clone(),
            topology,
            link_attrs,
            flows,
            link_ranges: self.link_ranges,
            flow_ranges: self.flow_ranges,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub schema_version: String,
    pub seed: u64,
    /// ISO-8601 UTC timestamp, e.g. `2024-05-01T12:00:00Z`.
    pub created: String,
    pub topology: Topology,
    pub link_attrs: LinkAttributeMap,
    pub flows: Vec<Flow>,
    pub link_ranges: AttributeRanges,
    pub flow_ranges: FlowRanges,
}

impl Scenario {
    /// The generation inputs this scenario claims to come from.
    pub fn spec(&self) -> ScenarioSpec {
        ScenarioSpec {
            class: self.topology.class(),
            n: self.topology.node_count(),
            seed: self.seed,
            flow_count: self.flows.len(),
            link_ranges: self.link_ranges,
            flow_ranges: self.flow_ranges,
            created: self.created.clone(),
        }
    }

    /// True if regenerating from the recorded seed and ranges gives this scenario back.
    pub fn is_reproducible(&self) -> bool {
        self.spec().build().is_ok_and(|s| s == *self)
    }

    /// Checks every scenario invariant, naming the offending field on failure.
    pub fn validate(&self) -> Result<()> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::Version(self.schema_version.clone()));
        }
        validate_created(&self.created)?;
        self.link_ranges
            .validate()
            .map_err(|e| Error::validation("ranges.link", e.to_string()))?;
        self.flow_ranges
            .validate()
            .map_err(|e| Error::validation("ranges.flow", e.to_string()))?;

        let report = validate_topology(&self.topology);
        if let Some(v) = report.violations.first() {
            return Err(Error::validation("edges", v.to_string()));
        }

        let edges: BTreeSet<_> = self.topology.edges().iter().copied().collect();
        if let Some(missing) = edges.iter().find(|e| !self.link_attrs.contains_key(e)) {
            return Err(Error::validation(
                "link_attrs",
                format!("missing attributes for edge {missing}"),
            ));
        }
        if let Some(extra) = self.link_attrs.keys().find(|e| !edges.contains(e)) {
            return Err(Error::validation(
                "link_attrs",
                format!("attributes given for {extra}, which is not an edge"),
            ));
        }
        for (edge, attrs) in &self.link_attrs {
            if !attrs.within(&self.link_ranges) {
                return Err(Error::validation(
                    "link_attrs",
                    format!("attributes of edge {edge} fall outside ranges.link"),
                ));
            }
        }

        let n = self.topology.node_count();
        for (index, flow) in self.flows.iter().enumerate() {
            let field = format!("flows[{index}]");
            if flow.id as usize != index {
                return Err(Error::validation(
                    field,
                    format!("flow id {} out of sequence, expected {index}", flow.id),
                ));
            }
            if flow.src == flow.dst {
                return Err(Error::validation(
                    field,
                    format!("flow {} has identical src and dst {}", flow.id, flow.src),
                ));
            }
            if flow.src.index() >= n || flow.dst.index() >= n {
                return Err(Error::validation(
                    field,
                    format!("flow {} references a node outside 0..{n}", flow.id),
                ));
            }
            if !flow.req.within(&self.flow_ranges) {
                return Err(Error::validation(
                    field,
                    format!("requirements of flow {} fall outside ranges.flow", flow.id),
                ));
            }
        }
        Ok(())
    }
}

fn validate_created(created: &str) -> Result<()> {
    let parsed = chrono::DateTime::parse_from_rfc3339(created).map_err(|e| {
        Error::validation(
            "created",
            format!("{created:?} is not an ISO-8601 timestamp: {e}"),
        )
    })?;
    if parsed.offset().local_minus_utc() != 0 {
        return Err(Error::validation("created", "timestamp must be in UTC"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::NodeId;

    #[test]
    fn built_scenarios_validate() {
        for class in TopologyClass::ALL {
            let s = ScenarioSpec::new(class, 6, 3)
                .with_flows(5)
                .build()
                .unwrap();
            s.validate().unwrap();
            assert!(s.is_reproducible());
            assert_eq!(s.link_attrs.len(), s.topology.edge_count());
        }
    }

    #[test]
    fn flow_count_does_not_touch_links() {
        let a = ScenarioSpec::new(TopologyClass::PartialMesh, 8, 11)
            .with_flows(1)
            .build()
            .unwrap();
        let b = ScenarioSpec::new(TopologyClass::PartialMesh, 8, 11)
            .with_flows(50)
            .build()
            .unwrap();
        assert_eq!(a.topology, b.topology);
        assert_eq!(a.link_attrs, b.link_attrs);
    }

    #[test]
    fn detects_self_flow() {
        let mut s = ScenarioSpec::new(TopologyClass::FullMesh, 4, 1)
            .with_flows(3)
            .build()
            .unwrap();
        s.flows[2].dst = s.flows[2].src;
        match s.validate() {
            Err(Error::Validation { field, message }) => {
                assert_eq!(field, "flows[2]");
                assert!(message.contains("flow 2"));
            }
            other => panic!("{other:?}"),
        }
        s.flows[2].dst = NodeId(9);
        assert!(s.validate().is_err());
    }

    #[test]
    fn detects_tampering() {
        let s = ScenarioSpec::new(TopologyClass::Sparse, 5, 1)
            .build()
            .unwrap();
        let mut t = s.clone();
        t.seed += 1;
        t.validate().unwrap();
        assert!(!t.is_reproducible());
    }

    #[test]
    fn rejects_bad_timestamps() {
        let mut spec = ScenarioSpec::new(TopologyClass::Sparse, 5, 1);
        spec.created = "yesterday".into();
        assert!(spec.build().is_err());
        spec.created = "2024-01-01T00:00:00+02:00".into();
        assert!(spec.build().is_err());
        spec.created = "2024-01-01T08:30:00Z".into();
        assert!(spec.build().is_ok());
    }
}
