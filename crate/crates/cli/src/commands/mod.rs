pub mod adapt;
pub mod calibrate;
pub mod datasets;
pub mod eval;
pub mod profile;
pub mod review;
pub mod vocab;
