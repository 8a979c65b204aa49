//! Exact HOMFLY polynomials of closed braids via resolving trees and
//! admissible circuit partitions, plus the invariants read off them.

pub mod braid;
pub mod checks;
pub mod corpus;
pub mod invariants;
pub mod jaeger;
pub mod method;
pub mod poly;
pub mod report;
pub mod resolver;

pub use method::Method;
