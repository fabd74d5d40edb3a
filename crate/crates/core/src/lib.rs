//! Cut-and-project point sets and the Lorentz gas on them.
//!
//! The crate builds regular cut-and-project configurations (hypercubic,
//! Fibonacci, Penrose, periodic extensions such as the honeycomb), simulates
//! free path lengths of a point particle moving between spherical scatterers
//! placed on the point set, and independently estimates the Boltzmann-Grad
//! limit distribution through lattice-orbit sampling in the higher
//! dimensional cover. The two routes are designed to be cross-checked
//! sample-by-sample and distribution-by-distribution.
//!
//! Conventions used throughout:
//! * row vectors: a lattice is `{ m B + x : m in Z^n }` with `B` the basis
//!   matrix whose *rows* are the basis vectors;
//! * physical space is the first `d` coordinates, internal space the last
//!   `m = n - d`;
//! * scatterers are open balls; a tangent ray counts as a hit;
//! * windows are open (strict interior membership).

pub mod directions;
pub mod error;
pub mod iofmt;
pub mod lattice;
pub mod linalg;
pub mod lorentz;
pub mod homspace;
pub mod polytope;
pub mod rng;
pub mod schemes;
pub mod stats;
pub mod cutproject;

pub use error::{Error, Result};

/// Volume of the unit ball in `R^d`.
pub fn unit_ball_volume(d: usize) -> f64 {
    // pi^{d/2} / Gamma(d/2 + 1), with the half-integer Gamma recursion.
    std::f64::consts::PI.powf(d as f64 / 2.0) / gamma_half(d + 2)
}

/// Surface volume of the unit sphere `S^{d-1}` in `R^d`.
pub fn unit_sphere_area(d: usize) -> f64 {
    d as f64 * unit_ball_volume(d)
}

/// Gamma(k/2) for positive integer k.
fn gamma_half(k: usize) -> f64 {
    match k {
        0 => f64::INFINITY,
        1 => std::f64::consts::PI.sqrt(),
        2 => 1.0,
        _ => (k as f64 / 2.0 - 1.0) * gamma_half(k - 2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ball_volumes() {
        assert!((unit_ball_volume(1) - 2.0).abs() < 1e-14);
        assert!((unit_ball_volume(2) - std::f64::consts::PI).abs() < 1e-14);
        assert!((unit_ball_volume(3) - 4.0 / 3.0 * std::f64::consts::PI).abs() < 1e-13);
        assert!((unit_sphere_area(2) - 2.0 * std::f64::consts::PI).abs() < 1e-13);
    }
}
