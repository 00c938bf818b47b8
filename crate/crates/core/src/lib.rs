//! Recognition of rational canal surfaces and reconstruction of their
//! medial axis transform.

pub mod qpoly;
pub mod sqrtfield;
pub mod rng;
pub mod surface;
pub mod curvetools;
pub mod coherent;
pub mod matrec;
pub mod parse;
pub mod pipeline;
