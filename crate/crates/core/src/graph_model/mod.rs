//! Game instances: graphs, treasure values, ship starts, file format and generators.

mod format;
mod generate;
mod graph;
mod instance;

pub use format::{parse_graph, parse_instance, serialize_graph, serialize_instance};
pub use generate::{
    grid_graph, grid_vertex, make_grid, random_graph, random_instance, GridSpec, RandomParams,
};
pub(crate) use graph::bits;
pub use graph::{Graph, MAX_VERTICES};
pub use instance::{Instance, Player};
