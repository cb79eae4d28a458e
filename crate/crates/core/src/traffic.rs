//! Flow demand generation.
//!
//! A flow is a demand record: an ordered endpoint pair plus the bandwidth,
//! delay, jitter and loss the flow requires. Endpoints are uniform over
//! ordered pairs with distinct nodes, drawn independently per flow, so two
//! flows may share endpoints. Each flow reads its own random stream, which
//! keeps flow `i` unchanged when the total flow count changes.

use serde::{Deserialize, Serialize};

use crate::attributes::QosRanges;
use crate::error::{Error, Result};
use crate::rng::{Stream, StreamRng};
use crate::topology::{NodeId, Topology};

pub type FlowRanges = QosRanges;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FlowRequirements {
    pub bandwidth: u64,
    pub delay: f64,
    pub jitter: f64,
    pub plr: f64,
}

impl FlowRequirements {
    pub fn within(&self, ranges: &FlowRanges) -> bool {
        ranges.bandwidth.contains(self.bandwidth)
            && ranges.delay.contains(self.delay)
            && ranges.jitter.contains(self.jitter)
            && ranges.plr.contains(self.plr)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Flow {
    pub id: u32,
    pub src: NodeId,
    pub dst: NodeId,
    pub req: FlowRequirements,
}

pub fn generate_flows(
    t: &Topology,
    count: usize,
    ranges: &FlowRanges,
    seed: u64,
) -> Result<Vec<Flow>> {
    ranges.validate()?;
    if count == 0 {
        return Ok(Vec::new());
    }
    let n = t.node_count();
    if n < 2 {
        return Err(Error::Endpoint { n });
    }
    let count = u32::try_from(count)
        .map_err(|_| Error::Structural(format!("flow count {count} exceeds the id space")))?;

    Ok((0..count)
        .map(|id| sample_flow(id, n as u64, ranges, seed))
        .collect())
}

fn sample_flow(id: u32, n: u64, ranges: &FlowRanges, seed: u64) -> Flow {
    let mut rng = StreamRng::new(seed, Stream::Flow(id));
    let src = rng.below(n);
    let mut dst = rng.below(n - 1);
    if dst >= src {
        dst += 1;
    }
    let (bandwidth, delay, jitter, plr) = ranges.sample(&mut rng);
    Flow {
        id,
        src: NodeId(src as usize),
        dst: NodeId(dst as usize),
        req: FlowRequirements {
            bandwidth,
            delay,
            jitter,
            plr,
        },
    }
}
