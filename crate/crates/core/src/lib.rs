//! Exact Kauffman bracket skein computations in the annulus, the annulus
//! with one marked point on each boundary, and marked disks, together with
//! the positivity constraints they impose on bases of the annulus skein
//! algebra.

pub mod diagram;
pub mod laurent;
pub mod positivity;
pub mod sequences;
pub mod skein;

pub use diagram::{Diagram, DiagramError, SurfaceModel};
pub use laurent::LaurentPoly;
pub use sequences::{SequenceSpec, UniPoly};
pub use skein::{BasisElement, IdealSpec, Resolver, SkeinError, SkeinVector};
