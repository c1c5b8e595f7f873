pub mod arith;
pub mod error;
pub mod generic;
pub mod interp;
pub mod koornwinder;
pub mod macdonald;
pub mod params;
pub mod qcalc;
pub mod refute;
pub mod partition;
pub mod serial;
pub mod specialize;
pub mod suites;

pub use error::{Error, Result};
