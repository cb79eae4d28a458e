//! Flat record dataset.
//!
//! ```text
//! R,<u>,<v>,<bandwidth>,<delay>,<jitter>,<plr>
//! F,<id>,<src>,<dst>,<bandwidth>,<delay>,<jitter>,<plr>
//! ```
//!
//! All `R` lines come first in canonical edge order, then `F` lines by id.
//! Lines end with `\n`. Topology class, seed and ranges are not carried;
//! they live only in the JSON document.

use std::fmt::Write;

use super::fmt_real;
use crate::attributes::LinkAttributes;
use crate::error::{Error, Result};
use crate::scenario::Scenario;
use crate::topology::{Edge, NodeId};
use crate::traffic::{Flow, FlowRequirements};

pub fn export_flat_dataset(s: &Scenario) -> String {
    let mut out = String::new();
    for (edge, a) in &s.link_attrs {
        let (u, v) = edge.endpoints();
        writeln!(
            out,
            "R,{u},{v},{},{},{},{}",
            a.bandwidth,
            fmt_real(a.delay),
            fmt_real(a.jitter),
            fmt_real(a.plr)
        )
        .unwrap();
    }
    for f in &s.flows {
        writeln!(
            out,
            "F,{},{},{},{},{},{},{}",
            f.id,
            f.src,
            f.dst,
            f.req.bandwidth,
            fmt_real(f.req.delay),
            fmt_real(f.req.jitter),
            fmt_real(f.req.plr)
        )
        .unwrap();
    }
    out
}

/// Link and flow records read back from a flat dataset.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FlatDataset {
    pub links: Vec<(Edge, LinkAttributes)>,
    pub flows: Vec<Flow>,
}

pub fn parse_flat_dataset(text: &str) -> Result<FlatDataset> {
    let mut data = FlatDataset::default();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let fields: Vec<&str> = line.split(',').collect();
        let err = |message: String| Error::Parse {
            line: line_no,
            column: 1,
            message,
        };
        let int = |k: usize| -> Result<u64> {
            fields[k].parse().map_err(|_| {
                err(format!(
                    "field {} is not an integer: {:?}",
                    k + 1,
                    fields[k]
                ))
            })
        };
        let real = |k: usize| -> Result<f64> {
            fields[k]
                .parse()
                .map_err(|_| err(format!("field {} is not a number: {:?}", k + 1, fields[k])))
        };
        match fields[0] {
            "R" if fields.len() == 7 => data.links.push((
                Edge::new(int(1)? as usize, int(2)? as usize),
                LinkAttributes {
                    bandwidth: int(3)?,
                    delay: real(4)?,
                    jitter: real(5)?,
                    plr: real(6)?,
                },
            )),
            "F" if fields.len() == 8 => data.flows.push(Flow {
                id: u32::try_from(int(1)?).map_err(|_| err("flow id out of range".into()))?,
                src: NodeId(int(2)? as usize),
                dst: NodeId(int(3)? as usize),
                req: FlowRequirements {
                    bandwidth: int(4)?,
                    delay: real(5)?,
                    jitter: real(6)?,
                    plr: real(7)?,
                },
            }),
            "R" | "F" => {
                return Err(err(format!(
                    "{} record has {} fields",
                    fields[0],
                    fields.len()
                )))
            }
            other => return Err(err(format!("unknown record type {other:?}"))),
        }
    }
    Ok(data)
}
