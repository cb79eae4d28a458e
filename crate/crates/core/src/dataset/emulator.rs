//! Mininet deployment script export.
//!
//! Every topology node becomes an Open vSwitch `s<i>` with one host `h<i>`
//! attached. Hosts share the 10.0.0.0/24 subnet (`h<i>` is `10.0.0.<i+1>`),
//! so all of them can reach each other over layer 2. Topology links become
//! `TCLink`s shaped with the link's bandwidth (Mbit/s), delay and jitter (ms)
//! and loss in percent; host attachment links are unshaped.
//!
//! Without `--controller` the switches run standalone with STP, since the
//! sparse and mesh classes contain cycles.

use std::fmt::Write;

use super::fmt_real;
use crate::error::{Error, Result};
use crate::scenario::Scenario;

/// Largest topology exported for single-machine emulation.
pub const MAX_EMULATOR_NODES: usize = 64;

/// Loss as a percentage, rounded to 1e-9 so `0.07` renders as `7.0`.
fn loss_percent(plr: f64) -> f64 {
    (plr * 100.0 * 1e9).round() / 1e9
}

pub fn export_emulator_script(s: &Scenario) -> Result<String> {
    let n = s.topology.node_count();
    if n > MAX_EMULATOR_NODES {
        return Err(Error::EmulatorSize {
            n,
            max: MAX_EMULATOR_NODES,
        });
    }

    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "#!/usr/bin/env python3").unwrap();
    writeln!(
        w,
        "\"\"\"Mininet deployment: {} topology, {} nodes, {} links, {} flows, seed {}.\"\"\"",
        s.topology.class(),
        n,
        s.topology.edge_count(),
        s.flows.len(),
        s.seed
    )
    .unwrap();
    w.push_str(SCRIPT_HEADER);

    writeln!(w, "def build(controller=None):").unwrap();
    writeln!(
        w,
        "    net = Mininet(link=TCLink, switch=OVSSwitch, controller=None)"
    )
    .unwrap();
    writeln!(w, "    if controller:").unwrap();
    writeln!(w, "        ip, _, port = controller.partition(':')").unwrap();
    writeln!(
        w,
        "        net.addController('c0', controller=RemoteController, ip=ip, port=int(port or 6653))"
    )
    .unwrap();
    writeln!(w, "        opts = dict(failMode='secure')").unwrap();
    writeln!(w, "    else:").unwrap();
    writeln!(w, "        opts = dict(failMode='standalone', stp=True)").unwrap();
    writeln!(w).unwrap();

    writeln!(w, "    # switches").unwrap();
    for i in 0..n {
        writeln!(
            w,
            "    s{i} = net.addSwitch('s{i}', dpid='{:016x}', **opts)",
            i + 1
        )
        .unwrap();
    }
    writeln!(w).unwrap();
    writeln!(w, "    # hosts").unwrap();
    for i in 0..n {
        writeln!(
            w,
            "    h{i} = net.addHost('h{i}', ip='10.0.0.{}/24', mac='00:00:00:00:00:{:02x}')",
            i + 1,
            i + 1
        )
        .unwrap();
    }
    writeln!(w).unwrap();
    writeln!(w, "    # host attachment links").unwrap();
    for i in 0..n {
        writeln!(w, "    net.addLink(h{i}, s{i})").unwrap();
    }
    writeln!(w).unwrap();
    writeln!(w, "    # topology links").unwrap();
    for (edge, a) in &s.link_attrs {
        let (u, v) = edge.endpoints();
        writeln!(
            w,
            "    net.addLink(s{u}, s{v}, bw={}, delay='{}ms', jitter='{}ms', loss={})",
            a.bandwidth,
            fmt_real(a.delay),
            fmt_real(a.jitter),
            fmt_real(loss_percent(a.plr))
        )
        .unwrap();
    }
    writeln!(w, "    return net").unwrap();
    w.push_str(SCRIPT_MAIN);
    Ok(out)
}

const SCRIPT_HEADER: &str = r#"
import argparse
import time

from mininet.cli import CLI
from mininet.link import TCLink
from mininet.log import setLogLevel
from mininet.net import Mininet
from mininet.node import OVSSwitch, RemoteController


"#;

const SCRIPT_MAIN: &str = r#"

def main():
    parser = argparse.ArgumentParser()
    parser.add_argument('--controller', help='remote controller as HOST[:PORT]')
    parser.add_argument('--settle', type=float, default=35.0,
                        help='seconds to wait for STP when running standalone')
    parser.add_argument('--pingall', action='store_true')
    parser.add_argument('--no-cli', action='store_true')
    args = parser.parse_args()

    setLogLevel('info')
    net = build(args.controller)
    net.start()
    try:
        if not args.controller:
            time.sleep(args.settle)
        if args.pingall:
            net.pingAll()
        if not args.no_cli:
            CLI(net)
    finally:
        net.stop()


if __name__ == '__main__':
    main()
"#;
