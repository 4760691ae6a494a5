//! Site hazard representation and sampling.
//!
//! A hazard curve tabulates the annual exceedance frequency λ(im). Events
//! are treated as a Poisson process with total rate λ_max = λ(im_min), so
//! the annual event probability is 1 − exp(−λ_max), and the intensity
//! conditional on an event has CDF 1 − λ(im)/λ_max. Curves are
//! interpolated piecewise-linearly in (ln im, ln λ), the standard
//! convention for published exceedance curves.
//!
//! Across sites, intensities within one event are correlated through an
//! exponential-decay model ρ(d) = exp(−3d/r) and sampled with a Nataf
//! construction: Cholesky-correlated standard normals mapped through each
//! site's conditional inverse CDF.

use crate::error::{Error, Result};
use crate::numerics::linalg::{cholesky_with_jitter, Matrix};
use crate::numerics::normal_cdf;
use rand::Rng;
use rand_distr::StandardNormal;
use std::path::Path;

/// Tabulated annual exceedance curve λ(im).
#[derive(Debug, Clone)]
pub struct HazardCurve {
    im_grid: Vec<f64>,
    lambda_grid: Vec<f64>,
}

impl HazardCurve {
    /// Validates grids: strictly increasing positive im, positive
    /// non-increasing λ, equal lengths ≥ 2.
    pub fn new(im_grid: Vec<f64>, lambda_grid: Vec<f64>) -> Result<Self> {
        if im_grid.len() != lambda_grid.len() {
            return Err(Error::Validation(format!(
                "hazard grids differ in length: {} vs {}",
                im_grid.len(),
                lambda_grid.len()
            )));
        }
        if im_grid.len() < 2 {
            return Err(Error::Validation(
                "hazard curve needs at least 2 points".into(),
            ));
        }
        for w in im_grid.windows(2) {
            if !(w[0] > 0.0 && w[1] > w[0]) {
                return Err(Error::Validation(
                    "im grid must be strictly increasing and positive".into(),
                ));
            }
        }
        for w in lambda_grid.windows(2) {
            if w[1] > w[0] {
                return Err(Error::Validation(
                    "lambda grid must be non-increasing".into(),
                ));
            }
        }
        if lambda_grid.iter().any(|&l| !(l > 0.0)) {
            return Err(Error::Validation("lambda values must be positive".into()));
        }
        Ok(HazardCurve {
            im_grid,
            lambda_grid,
        })
    }

    /// Two-column CSV (im, lambda) with a header row, ascending im.
    pub fn from_csv(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let mut im = Vec::new();
        let mut lambda = Vec::new();
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("{}: empty file", path.display())))?;
        if header.split(',').count() != 2 {
            return Err(Error::Parse(format!(
                "{}: expected two-column header",
                path.display()
            )));
        }
        for (lineno, line) in lines.enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut fields = line.split(',');
            let parse = |f: Option<&str>| -> Result<f64> {
                f.and_then(|s| s.trim().parse::<f64>().ok()).ok_or_else(|| {
                    Error::Parse(format!("{}: bad number on line {}", path.display(), lineno + 2))
                })
            };
            im.push(parse(fields.next())?);
            lambda.push(parse(fields.next())?);
        }
        HazardCurve::new(im, lambda)
    }

    pub fn im_min(&self) -> f64 {
        self.im_grid[0]
    }

    pub fn im_max(&self) -> f64 {
        *self.im_grid.last().unwrap()
    }

    /// Total event rate: λ at the smallest tabulated intensity.
    pub fn lambda_max(&self) -> f64 {
        self.lambda_grid[0]
    }

    /// λ(im) by piecewise-linear interpolation in (ln im, ln λ).
    pub fn exceedance_rate(&self, im: f64) -> Result<f64> {
        if im < self.im_min() || im > self.im_max() {
            return Err(Error::Range(format!(
                "im {} outside tabulated range [{}, {}]",
                im,
                self.im_min(),
                self.im_max()
            )));
        }
        let idx = match self
            .im_grid
            .binary_search_by(|probe| probe.partial_cmp(&im).unwrap())
        {
            Ok(i) => return Ok(self.lambda_grid[i]),
            Err(i) => i - 1,
        };
        let (x0, x1) = (self.im_grid[idx], self.im_grid[idx + 1]);
        let (y0, y1) = (self.lambda_grid[idx], self.lambda_grid[idx + 1]);
        let t = (im.ln() - x0.ln()) / (x1.ln() - x0.ln());
        Ok((y0.ln() + t * (y1.ln() - y0.ln())).exp())
    }
}

/// Probability of at least one event in a year: 1 − exp(−λ_max).
pub fn annual_event_probability(curve: &HazardCurve) -> f64 {
    1.0 - (-curve.lambda_max()).exp()
}

/// CDF of the intensity conditional on an event: 1 − λ(im)/λ_max.
pub fn conditional_im_cdf(curve: &HazardCurve, im: f64) -> Result<f64> {
    let rate = curve.exceedance_rate(im)?;
    Ok(1.0 - rate / curve.lambda_max())
}

/// Inverse of [`conditional_im_cdf`]. Mass beyond im_max (the residual
/// tail λ(im_max)/λ_max) maps to im_max.
pub fn conditional_im_quantile(curve: &HazardCurve, u: f64) -> f64 {
    debug_assert!((0.0..=1.0).contains(&u));
    let target_rate = curve.lambda_max() * (1.0 - u);
    if target_rate >= curve.lambda_max() {
        return curve.im_min();
    }
    if target_rate <= *curve.lambda_grid.last().unwrap() {
        return curve.im_max();
    }
    // Find the segment with λ_{k+1} ≤ target < λ_k and invert the
    // log-log line; flat segments return their left edge.
    for k in 0..curve.im_grid.len() - 1 {
        let (y0, y1) = (curve.lambda_grid[k], curve.lambda_grid[k + 1]);
        if target_rate <= y0 && target_rate >= y1 {
            if y0 == y1 {
                return curve.im_grid[k];
            }
            let t = (target_rate.ln() - y0.ln()) / (y1.ln() - y0.ln());
            let (x0, x1) = (curve.im_grid[k], curve.im_grid[k + 1]);
            return (x0.ln() + t * (x1.ln() - x0.ln())).exp();
        }
    }
    curve.im_max()
}

/// Discrete conditional-on-event intensity distribution.
#[derive(Debug, Clone)]
pub struct ImPmf {
    pub im_points: Vec<f64>,
    pub masses: Vec<f64>,
}

impl ImPmf {
    pub fn validate(&self) -> Result<()> {
        if self.im_points.len() != self.masses.len() || self.im_points.is_empty() {
            return Err(Error::Validation("pmf shape mismatch".into()));
        }
        if self.masses.iter().any(|&m| m < 0.0) {
            return Err(Error::Validation("negative pmf mass".into()));
        }
        let total: f64 = self.masses.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::Validation(format!(
                "pmf masses sum to {total}, expected 1"
            )));
        }
        Ok(())
    }

    /// Index of the bin containing cumulative mass u (inverse discrete CDF).
    pub fn quantile_index(&self, u: f64) -> usize {
        let mut acc = 0.0;
        for (k, &m) in self.masses.iter().enumerate() {
            acc += m;
            if u < acc {
                return k;
            }
        }
        self.masses.len() - 1
    }
}

/// Bin the conditional intensity distribution into `n_bins` log-spaced
/// bins over [im_min, im_max].
///
/// Masses are CDF increments between consecutive edges; the residual tail
/// beyond im_max is lumped into the last bin. Representative points are
/// geometric means of the bin edges.
pub fn discretize_annual_im(curve: &HazardCurve, n_bins: usize) -> Result<ImPmf> {
    if n_bins == 0 {
        return Err(Error::Validation("n_bins must be at least 1".into()));
    }
    let ratio = curve.im_max() / curve.im_min();
    let edges: Vec<f64> = (0..=n_bins)
        .map(|k| curve.im_min() * ratio.powf(k as f64 / n_bins as f64))
        .collect();
    let mut im_points = Vec::with_capacity(n_bins);
    let mut masses = Vec::with_capacity(n_bins);
    let mut cdf_lo = 0.0;
    for k in 0..n_bins {
        let cdf_hi = conditional_im_cdf(curve, edges[k + 1].min(curve.im_max()))?;
        im_points.push((edges[k] * edges[k + 1]).sqrt());
        masses.push((cdf_hi - cdf_lo).max(0.0));
        cdf_lo = cdf_hi;
    }
    // Residual tail beyond im_max.
    *masses.last_mut().unwrap() += 1.0 - cdf_lo;
    let pmf = ImPmf { im_points, masses };
    pmf.validate()?;
    Ok(pmf)
}

/// Planar site coordinates (km) and the correlation range r (km).
#[derive(Debug, Clone)]
pub struct SiteLayout {
    pub site_positions: Vec<(f64, f64)>,
    pub correlation_range_r: f64,
}

impl SiteLayout {
    pub fn new(site_positions: Vec<(f64, f64)>, correlation_range_r: f64) -> Result<Self> {
        if site_positions.is_empty() {
            return Err(Error::Validation("layout needs at least one site".into()));
        }
        if !(correlation_range_r > 0.0) {
            return Err(Error::Validation("correlation range must be positive".into()));
        }
        if site_positions
            .iter()
            .any(|&(x, y)| !x.is_finite() || !y.is_finite())
        {
            return Err(Error::Validation("site coordinates must be finite".into()));
        }
        Ok(SiteLayout {
            site_positions,
            correlation_range_r,
        })
    }

    pub fn n_sites(&self) -> usize {
        self.site_positions.len()
    }
}

/// Intra-event correlation matrix R with R_ij = exp(−3 d_ij / r).
///
/// Constructed symmetrically with a unit diagonal.
pub fn build_correlation_matrix(layout: &SiteLayout) -> Matrix {
    let n = layout.n_sites();
    let mut r = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            let (xi, yi) = layout.site_positions[i];
            let (xj, yj) = layout.site_positions[j];
            let d = ((xi - xj).powi(2) + (yi - yj).powi(2)).sqrt();
            let rho = (-3.0 * d / layout.correlation_range_r).exp();
            r[(i, j)] = rho;
            r[(j, i)] = rho;
        }
    }
    r
}

/// Correlated-field sampler: holds the Cholesky factor of R so repeated
/// event draws don't refactor.
#[derive(Debug, Clone)]
pub struct FieldSampler {
    chol: Matrix,
}

impl FieldSampler {
    pub fn new(layout: &SiteLayout) -> Result<Self> {
        let r = build_correlation_matrix(layout);
        Ok(FieldSampler {
            chol: cholesky_with_jitter(&r)?,
        })
    }

    pub fn n_sites(&self) -> usize {
        self.chol.rows()
    }

    /// Correlated standard normals y = L z.
    pub fn sample_latent<R: Rng>(&self, rng: &mut R) -> Vec<f64> {
        let n = self.n_sites();
        let z: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
        self.chol.mul_vec(&z)
    }

    /// Correlated uniforms Φ(y_k).
    pub fn sample_uniforms<R: Rng>(&self, rng: &mut R) -> Vec<f64> {
        self.sample_latent(rng).into_iter().map(normal_cdf).collect()
    }
}

/// One spatially correlated intensity field, one value per site.
///
/// Each marginal follows its site's conditional intensity distribution via
/// the inverse CDF of the correlated uniform.
pub fn sample_correlated_field<R: Rng>(
    layout: &SiteLayout,
    curves: &[HazardCurve],
    rng: &mut R,
) -> Result<Vec<f64>> {
    if curves.len() != layout.n_sites() {
        return Err(Error::Validation(format!(
            "{} curves for {} sites",
            curves.len(),
            layout.n_sites()
        )));
    }
    let sampler = FieldSampler::new(layout)?;
    let u = sampler.sample_uniforms(rng);
    Ok(u.iter()
        .zip(curves)
        .map(|(&u, curve)| conditional_im_quantile(curve, u))
        .collect())
}
