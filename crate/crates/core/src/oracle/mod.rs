//! Exhaustive ground truth at small order.

pub mod cache;
pub mod certify;
pub mod enumerate;
pub mod turan;

pub use cache::OracleCache;
pub use certify::{certify_free, Certificate, Verdict};
pub use enumerate::{enumerate_graphs, Constraints, EnumerationStream, MAX_ORDER, MAX_ORDER_DEGREE_TWO};
pub use turan::{turan_oracle, TuranDoc, TuranResult};
