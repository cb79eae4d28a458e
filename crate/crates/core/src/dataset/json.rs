//! Canonical scenario JSON.
//!
//! Keys are sorted at every level, edges and link records follow canonical
//! edge order, flows follow id order, and the document ends with a newline.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::attributes::{LinkAttributes, QosRanges};
use crate::error::{Error, Result};
use crate::scenario::{Scenario, SCHEMA_VERSION};
use crate::topology::{Edge, NodeId, Topology, TopologyClass};
use crate::traffic::{Flow, FlowRequirements};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    schema_version: String,
    seed: u64,
    created: String,
    class: TopologyClass,
    n: usize,
    edges: Vec<[usize; 2]>,
    link_attrs: Vec<LinkRecord>,
    ranges: RangesBlock,
    flows: Vec<FlowRecord>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RangesBlock {
    link: QosRanges,
    flow: QosRanges,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LinkRecord {
    u: usize,
    v: usize,
    bandwidth: u64,
    delay: f64,
    jitter: f64,
    plr: f64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FlowRecord {
    id: u32,
    src: usize,
    dst: usize,
    bandwidth: u64,
    delay: f64,
    jitter: f64,
    plr: f64,
}

impl From<&Scenario> for Document {
    fn from(s: &Scenario) -> Self {
        Document {
            schema_version: s.schema_version.clone(),
            seed: s.seed,
            created: s.created.clone(),
            class: s.topology.class(),
            n: s.topology.node_count(),
            edges: s
                .topology
                .edges()
                .iter()
                .map(|e| {
                    let (u, v) = e.endpoints();
                    [u, v]
                })
                .collect(),
            link_attrs: s
                .link_attrs
                .iter()
                .map(|(e, a)| LinkRecord {
                    u: e.u().index(),
                    v: e.v().index(),
                    bandwidth: a.bandwidth,
                    delay: a.delay,
                    jitter: a.jitter,
                    plr: a.plr,
                })
                .collect(),
            ranges: RangesBlock {
                link: s.link_ranges,
                flow: s.flow_ranges,
            },
            flows: s
                .flows
                .iter()
                .map(|f| FlowRecord {
                    id: f.id,
                    src: f.src.index(),
                    dst: f.dst.index(),
                    bandwidth: f.req.bandwidth,
                    delay: f.req.delay,
                    jitter: f.req.jitter,
                    plr: f.req.plr,
                })
                .collect(),
        }
    }
}

pub fn export_scenario_json(s: &Scenario) -> String {
    // Going through `Value` sorts object keys (its map is a BTreeMap).
    let value =
        serde_json::to_value(Document::from(s)).expect("scenario fields are always representable");
    let mut out = serde_json::to_string_pretty(&value).expect("value serialization cannot fail");
    out.push('\n');
    out
}

pub fn parse_scenario_json(doc: &str) -> Result<Scenario> {
    let value: Value = serde_json::from_str(doc).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;

    let version = value
        .as_object()
        .ok_or_else(|| Error::validation("document", "top level must be a JSON object"))?
        .get("schema_version")
        .ok_or_else(|| Error::validation("schema_version", "missing field"))?;
    match version.as_str() {
        Some(SCHEMA_VERSION) => {}
        Some(other) => return Err(Error::Version(other.to_string())),
        None => return Err(Error::validation("schema_version", "must be a string")),
    }

    let doc: Document = serde_json::from_value(value).map_err(schema_error)?;
    let scenario = into_scenario(doc)?;
    scenario.validate()?;
    Ok(scenario)
}

fn schema_error(e: serde_json::Error) -> Error {
    let message = e.to_string();
    let field = message
        .split('`')
        .nth(1)
        .filter(|_| message.starts_with("missing field") || message.starts_with("unknown field"))
        .unwrap_or("document")
        .to_string();
    Error::Validation { field, message }
}

fn into_scenario(doc: Document) -> Result<Scenario> {
    let topology = Topology::from_parts(
        doc.class,
        doc.n,
        doc.edges.iter().map(|&[u, v]| Edge::new(u, v)),
    );

    let mut link_attrs = BTreeMap::new();
    for r in doc.link_attrs {
        let edge = Edge::new(r.u, r.v);
        let attrs = LinkAttributes {
            bandwidth: r.bandwidth,
            delay: r.delay,
            jitter: r.jitter,
            plr: r.plr,
        };
        match link_attrs.entry(edge) {
            Entry::Vacant(slot) => {
                slot.insert(attrs);
            }
            Entry::Occupied(_) => {
                return Err(Error::validation(
                    "link_attrs",
                    format!("duplicate attributes for edge {edge}"),
                ))
            }
        }
    }

    let flows = doc
        .flows
        .into_iter()
        .map(|r| Flow {
            id: r.id,
            src: NodeId(r.src),
            dst: NodeId(r.dst),
            req: FlowRequirements {
                bandwidth: r.bandwidth,
                delay: r.delay,
                jitter: r.jitter,
                plr: r.plr,
            },
        })
        .collect();

    Ok(Scenario {
        schema_version: doc.schema_version,
        seed: doc.seed,
        created: doc.created,
        topology,
        link_attrs,
        flows,
        link_ranges: doc.ranges.link,
        flow_ranges: doc.ranges.flow,
    })
}
