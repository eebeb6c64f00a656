//! Named scenarios, configuration files and the sweep drivers used by the
//! command-line tool and the browser demo.

pub mod config;
pub mod output;
pub mod presets;
pub mod run;

pub use config::{Scenario, ScenarioConfig};
pub use presets::{preset, PRESET_NAMES};
