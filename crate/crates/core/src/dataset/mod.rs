//! Export formats for scenarios.
//!
//! * [`json`]: the canonical scenario document, the interchange unit.
//! * [`flat`]: one `R` record per link and one `F` record per flow.
//! * [`emulator`]: a Mininet deployment script.
//!
//! All reals are rendered as the shortest decimal that round-trips to the
//! same `f64`, so output bytes do not depend on the platform.

pub mod emulator;
pub mod flat;
pub mod json;

pub use emulator::{export_emulator_script, MAX_EMULATOR_NODES};
pub use flat::{export_flat_dataset, parse_flat_dataset, FlatDataset};
pub use json::{export_scenario_json, parse_scenario_json};

pub(crate) fn fmt_real(x: f64) -> String {
    debug_assert!(x.is_finite());
    ryu::Buffer::new().format_finite(x).to_string()
}
