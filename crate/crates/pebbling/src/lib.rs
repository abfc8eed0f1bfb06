//! File formats, parallel threshold sweeps and the `pebble` command-line
//! front end over [`pebbling_core`].

pub mod cli;
pub mod io;
pub mod sweep;

pub use cli::run_cli;
pub use io::FormatError;
pub use sweep::{crossing_line, parallel_sweep, write_csv, SweepParams};
