//! Reproduction of the worked example and the `lode-atlas` command line.

pub mod cli;
pub mod example;
pub mod fixtures;
pub mod report;

pub use example::{closed_form, curve_probe, hauptmodul_membership, verify_example, ClosedForm};
pub use fixtures::{ExampleFixture, FixtureError, FixtureSet};
pub use report::{Report, Section};
