//! Trellis state-complexity profiles of linear codes over small finite
//! fields, one-point Hermitian codes, gonality sequences and the lower
//! bounds on state complexity built from them.

pub mod bounds;
pub mod code;
pub mod codefile;
pub mod error;
pub mod exec;
pub mod field;
pub mod gonality;
pub mod hermitian;
pub mod matrix;
pub mod profile;
pub mod rfunction;
pub mod search;
pub mod verify;

pub use bounds::{bound_report, BoundReport, ReportOptions};
pub use code::LinearCode;
pub use error::{Error, Result};
pub use exec::Execution;
pub use field::{Field, FieldElement};
pub use gonality::{GonalitySequence, Origin};
pub use hermitian::{hermitian_code, HermitianCode, HermitianCurve};
pub use matrix::Matrix;
pub use profile::StateProfile;
pub use rfunction::RTable;
pub use search::{absolute_complexity_search, SearchConfig, SearchResult, Strategy};
