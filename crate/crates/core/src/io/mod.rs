pub mod dot;
pub mod graph6;

pub use dot::{digraph_dot, separator_dot};
pub use graph6::{parse_graph6, to_graph6};
