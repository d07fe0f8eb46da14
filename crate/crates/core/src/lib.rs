//! Exact tools for 1-extendable graphs: graphs in which every vertex belongs
//! to some maximum independent set.
//!
//! ```
//! use oneext::{Graph, extend::is_one_extendable};
//!
//! let p5 = Graph::path(5);
//! let report = is_one_extendable(&p5).unwrap();
//! assert_eq!(report.alpha, 3);
//! assert_eq!(report.uncovered(), vec![1, 3]);
//! ```

pub mod csma;
pub mod error;
pub mod extend;
pub mod graph;
pub mod kernel;
pub mod mis;
pub mod reduce3sat;
pub mod set;
pub mod transforms;
mod treedp;
pub mod unitdisk;

pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder};
pub use set::VertexSet;

pub(crate) fn serialize_set<S: serde::Serializer>(s: &VertexSet, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_seq(s.iter())
}
