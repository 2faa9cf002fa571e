//! Truncated power series, umbral evaluation, Borel-type coefficient
//! transforms, negative-derivative integration and an identity catalog.

pub mod series;
pub mod catalog;
pub mod negderiv;
pub mod quadrature;
pub mod special;
pub mod transforms;
pub mod umbral;
