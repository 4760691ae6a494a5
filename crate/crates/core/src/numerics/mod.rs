//! Shared numerical machinery: special functions, quadrature, small dense
//! linear algebra, and a deterministic quasi-Newton minimizer.

pub mod bfgs;
pub mod gamma;
pub mod linalg;
pub mod quadrature;

/// Standard normal CDF.
pub fn normal_cdf(y: f64) -> f64 {
    0.5 * statrs::function::erf::erfc(-y / std::f64::consts::SQRT_2)
}
