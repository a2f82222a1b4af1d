//! Scenario files, command execution and reports.

mod run;
mod scenario;

pub use run::{run, Command, Entry, Options, Report, RunError, Section, Summary, Value};
pub use scenario::{parse_scenario, serialize_scenario, CurveSpec, GeometryKind, GeometrySpec, Scenario, ScenarioError};

#[cfg(test)]
mod tests;
