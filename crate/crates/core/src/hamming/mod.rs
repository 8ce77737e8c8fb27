//! Vertices and codes of the Hamming graph `H(m,q)`, the Hamming metric,
//! distance partitions and the composition/`Num` invariants.

mod code;
mod metric;
mod num;
mod params;
mod partition;
mod vertex;

pub use code::Code;
pub(crate) use metric::index_distance;
pub use metric::{dist_to_code, hamming_distance, min_distance, min_distance_with, sphere};
pub use num::{composition, num_profile, NumProfile};
pub use params::{GraphParams, Symbol, MAX_VERTEX_COUNT};
pub use partition::{
    covering_radius, distance_partition, distance_partition_with, DistancePartition,
};
pub use vertex::Vertex;
