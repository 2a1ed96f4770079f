//! Minimal free resolutions of the residue field over finite-dimensional
//! local algebras, their linear parts and linearity defect, and the maps
//! `Tor_i(M, R/m^{n+1}) -> Tor_i(M, R/m^n)` that detect it.

pub mod exact_linalg;
pub mod local_algebra;
pub mod presentation;
pub mod lab;
pub mod linear_part;
pub mod resolution;
pub mod tor_ladder;
