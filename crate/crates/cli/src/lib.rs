//! Command implementations behind the `graded` binary. Each command turns a
//! loaded config into a serializable report with a text rendering.

pub mod config;
pub mod inspect;
pub mod pullback;
pub mod render;
pub mod standard;
pub mod verify;

pub use config::{load_config, load_matrix, parse_config, Loaded, Overrides};
