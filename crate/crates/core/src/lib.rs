//! Zagreb indices of simple graphs: exact computation of `M1` and `M2`,
//! the verdict on `M1/n <= M2/m`, the classical lower and upper bounds with
//! their equality cases, the `C(a, b)` counterexample family, subdivision
//! graphs, and exhaustive scans of small labeled graphs.
//!
//! ```
//! use zagreb::families::build_counterexample_family;
//! use zagreb::indices::{compare_indices, Verdict};
//!
//! let g = build_counterexample_family(12, 2).unwrap();
//! let report = compare_indices(&g).unwrap();
//! assert_eq!((report.m1, report.m2, report.comparison), (198, 208, -8));
//! assert_eq!(report.verdict, Verdict::Fails);
//! ```

pub mod bounds;
pub mod enumeration;
pub mod exact;
pub mod families;
pub mod graph;
pub mod indices;
pub mod io;

pub use graph::{classify, Graph, GraphClass, GraphError};
pub use indices::{compare_indices, first_zagreb, second_zagreb, IndexReport, Verdict};
