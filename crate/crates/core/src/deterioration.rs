//! Nonstationary gamma-process deterioration and exact corrosion-state
//! transition matrices.
//!
//! Cumulative section loss D(τ) follows a gamma process with power-law
//! shape function α(τ) = a·τ^b and constant rate β: D(τ) ~ Gamma(α(τ), β),
//! increments over (τ₁, τ₂] are Gamma(α(τ₂) − α(τ₁), β) and independent.
//!
//! Discretizing D into corrosion damage states (CDS) loses the Markov
//! property unless the within-state damage level is averaged out. The
//! one-step transition probability from state l to m over (τ, τ+Δτ] is
//! the exact total-probability integral
//!
//! ```text
//! P_{l→m} = 1/P(S(τ)=l) ∫_{c_{l−1}}^{c_l} f_{D(τ)}(x)
//!           · [F_ΔD(c_m − x) − F_ΔD(c_{m−1} − x)] dx
//! ```
//!
//! evaluated here by adaptive quadrature (relative tolerance 1e-9), with
//! the open last interval truncated where the conditional tail mass drops
//! to 1e-12 and a change of variables removing the x^{α−1} endpoint
//! singularity when α(τ) < 1.

use crate::error::{Error, Result};
use crate::numerics::gamma::{
    gamma_cdf, gamma_pdf, gamma_quantile_upper, ln_gamma, reg_gamma_pair,
};
use crate::numerics::linalg::Matrix;
use crate::numerics::quadrature::integrate;
use rand::Rng;
use rand_distr::{Distribution, Gamma as GammaDist};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Relative tolerance of the transition-probability quadrature.
pub const QUAD_REL_TOL: f64 = 1e-9;
/// Conditional tail mass ignored when truncating the open last interval.
const TAIL_TRUNCATION: f64 = 1e-12;
/// Conditioning states with less occupancy than this fall back to an
/// identity row.
const OCCUPANCY_FLOOR: f64 = 1e-300;

/// Power-law gamma process parameters: shape α(τ) = a·τ^b, rate β.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GammaProcessParams {
    pub a: f64,
    pub b: f64,
    pub beta: f64,
}

impl GammaProcessParams {
    pub fn new(a: f64, b: f64, beta: f64) -> Result<Self> {
        if !(a > 0.0 && b > 0.0 && beta > 0.0) {
            return Err(Error::Validation(format!(
                "gamma process parameters must be positive: a={a}, b={b}, beta={beta}"
            )));
        }
        Ok(GammaProcessParams { a, b, beta })
    }
}

/// Shape function α(τ) = a·τ^b.
pub fn shape(params: &GammaProcessParams, tau: f64) -> f64 {
    debug_assert!(tau >= 0.0);
    params.a * tau.powf(params.b)
}

/// CDF of the accumulated loss D(τ) at x.
pub fn marginal_cdf(params: &GammaProcessParams, tau: f64, x: f64) -> Result<f64> {
    debug_assert!(tau > 0.0);
    gamma_cdf(shape(params, tau), params.beta, x)
}

/// CDF of the increment D(τ₂) − D(τ₁) at x.
pub fn increment_cdf(params: &GammaProcessParams, tau1: f64, tau2: f64, x: f64) -> Result<f64> {
    debug_assert!(tau2 > tau1 && tau1 >= 0.0);
    let inc_shape = shape(params, tau2) - shape(params, tau1);
    gamma_cdf(inc_shape, params.beta, x)
}

/// Corrosion damage state scheme: cut points c_1 … c_{n−1} on section
/// loss, with c_0 = 0 and c_n = ∞ implicit. A loss exactly at a threshold
/// belongs to the upper state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CdsScheme {
    thresholds: Vec<f64>,
}

impl CdsScheme {
    pub fn new(thresholds: Vec<f64>) -> Result<Self> {
        if thresholds.is_empty() {
            return Err(Error::Validation("need at least one CDS threshold".into()));
        }
        if thresholds[0] <= 0.0 {
            return Err(Error::Validation("CDS thresholds must be positive".into()));
        }
        if thresholds.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Validation(
                "CDS thresholds must be strictly increasing".into(),
            ));
        }
        Ok(CdsScheme { thresholds })
    }

    pub fn n_cds(&self) -> usize {
        self.thresholds.len() + 1
    }

    pub fn thresholds(&self) -> &[f64] {
        &self.thresholds
    }

    /// Lower edge of state l (1-based): c_{l−1}.
    fn lower(&self, l: usize) -> f64 {
        if l == 1 {
            0.0
        } else {
            self.thresholds[l - 2]
        }
    }

    /// Upper edge of state l (1-based): c_l, infinite for the top state.
    fn upper(&self, l: usize) -> f64 {
        if l == self.n_cds() {
            f64::INFINITY
        } else {
            self.thresholds[l - 1]
        }
    }

    /// 1-based state index of a loss value.
    pub fn classify(&self, loss: f64) -> usize {
        let mut state = 1;
        for &t in &self.thresholds {
            if loss >= t {
                state += 1;
            }
        }
        state
    }
}

/// P(lo ≤ D(τ) < hi), cancellation-free in both tails.
pub fn marginal_band(params: &GammaProcessParams, tau: f64, lo: f64, hi: f64) -> f64 {
    increment_band(shape(params, tau), params.beta, lo, hi).max(0.0)
}

/// Probability vector over CDS at exposure time τ > 0.
pub fn state_occupancy(
    params: &GammaProcessParams,
    scheme: &CdsScheme,
    tau: f64,
) -> Result<Vec<f64>> {
    if !(tau > 0.0) {
        return Err(Error::Validation("occupancy needs tau > 0".into()));
    }
    let n = scheme.n_cds();
    Ok((1..=n)
        .map(|l| marginal_band(params, tau, scheme.lower(l), scheme.upper(l)))
        .collect())
}

/// Exact one-step CDS transition matrix for the window (τ, τ+dt].
///
/// Rows condition on the truncated marginal of D(τ) inside each state;
/// τ = 0 conditions row 1 on the degenerate start D(0) = 0. Conditioning
/// states with occupancy below 1e-300 get a deterministic identity row,
/// reported through the returned flag list.
pub fn transition_matrix(
    params: &GammaProcessParams,
    scheme: &CdsScheme,
    tau: f64,
    dt: f64,
) -> Result<(Matrix, Vec<usize>)> {
    if !(dt > 0.0 && tau >= 0.0) {
        return Err(Error::Validation(format!(
            "transition window needs tau >= 0, dt > 0; got tau={tau}, dt={dt}"
        )));
    }
    let n = scheme.n_cds();
    let inc_shape = shape(params, tau + dt) - shape(params, tau);
    let mut m = Matrix::zeros(n, n);
    let mut identity_rows = Vec::new();

    for l in 1..=n {
        let row = m.row_mut(l - 1);
        if tau == 0.0 {
            if l == 1 {
                // Degenerate start: increments from D = 0 exactly.
                for target in 1..=n {
                    row[target - 1] = increment_band(
                        inc_shape,
                        params.beta,
                        scheme.lower(target),
                        scheme.upper(target),
                    )
                    .max(0.0);
                }
            } else {
                row[l - 1] = 1.0;
                identity_rows.push(l);
            }
            continue;
        }

        let occupancy = marginal_band(params, tau, scheme.lower(l), scheme.upper(l));
        if occupancy < OCCUPANCY_FLOOR {
            row[l - 1] = 1.0;
            identity_rows.push(l);
            continue;
        }

        let x_lo = scheme.lower(l);
        let x_hi = if l == n {
            // Cut the open interval where the conditional tail falls to
            // TAIL_TRUNCATION of the state's occupancy.
            gamma_quantile_upper(shape(params, tau), params.beta, TAIL_TRUNCATION * occupancy)?
                .max(x_lo * (1.0 + 1e-12))
        } else {
            scheme.upper(l)
        };

        for target in l..=n {
            let (g_lo, g_hi) = (scheme.lower(target), scheme.upper(target));
            let band = |x: f64| increment_band(inc_shape, params.beta, g_lo - x, g_hi - x);
            let integral = conditioned_integral(params, tau, x_lo, x_hi, &band)?;
            row[target - 1] = (integral / occupancy).clamp(0.0, 1.0);
        }
    }

    let dev = m.max_row_sum_deviation();
    if dev > 1e-8 {
        return Err(Error::Numerical(format!(
            "transition matrix row sums off by {dev} at tau={tau}"
        )));
    }
    Ok((m, identity_rows))
}

/// P(lo < ΔD ≤ hi) for the increment distribution.
///
/// Evaluated from whichever tail keeps the difference cancellation-free:
/// P(hi) − P(lo) in the lower half, Q(lo) − Q(hi) in the upper. Taking the
/// difference of two CDF values near 1 would leave only rounding noise,
/// which the adaptive quadrature then tries (and fails) to resolve.
fn increment_band(inc_shape: f64, beta: f64, lo: f64, hi: f64) -> f64 {
    let at = |v: f64| -> (f64, f64) {
        if v <= 0.0 {
            (0.0, 1.0)
        } else if v.is_infinite() {
            (1.0, 0.0)
        } else {
            reg_gamma_pair(inc_shape, beta * v).unwrap_or((f64::NAN, f64::NAN))
        }
    };
    let (p_lo, q_lo) = at(lo);
    let (p_hi, q_hi) = at(hi);
    if p_lo <= 0.5 && p_hi <= 0.5 {
        p_hi - p_lo
    } else {
        q_lo - q_hi
    }
}

/// ∫ f_{D(τ)}(x) g(x) dx over [x_lo, x_hi], with the x^{α−1} singularity
/// at x = 0 removed by the substitution x = x_hi·u^{1/α} when α < 1.
fn conditioned_integral<F: Fn(f64) -> f64>(
    params: &GammaProcessParams,
    tau: f64,
    x_lo: f64,
    x_hi: f64,
    g: &F,
) -> Result<f64> {
    let alpha = shape(params, tau);
    let beta = params.beta;
    if x_lo == 0.0 && alpha < 1.0 {
        // f(x) dx = β^α x_hi^α / (α Γ(α)) · e^{−βx(u)} du on u ∈ [0, 1].
        let scale =
            (alpha * beta.ln() + alpha * x_hi.ln() - ln_gamma(alpha)).exp() / alpha;
        let integrand = |u: f64| {
            if u <= 0.0 {
                return 0.0;
            }
            let x = x_hi * u.powf(1.0 / alpha);
            (-beta * x).exp() * g(x)
        };
        let val = integrate(&integrand, 0.0, 1.0, QUAD_REL_TOL, 1e-300)?;
        Ok(scale * val)
    } else {
        let integrand = |x: f64| gamma_pdf(alpha, beta, x) * g(x);
        integrate(&integrand, x_lo, x_hi, QUAD_REL_TOL, 1e-300)
    }
}

/// Per-window CDS transition matrices for integer windows
/// (k·dt, (k+1)·dt], k = 0 … n_windows−1.
#[derive(Debug, Clone)]
pub struct CdsTransitionSet {
    matrices: Vec<Matrix>,
    dt: f64,
    /// (window index, 1-based state) pairs replaced by identity rows.
    pub identity_fallbacks: Vec<(usize, usize)>,
}

impl CdsTransitionSet {
    /// Builds all windows; independent windows run in parallel, results
    /// assembled in window order.
    pub fn build(
        params: &GammaProcessParams,
        scheme: &CdsScheme,
        n_windows: usize,
        dt: f64,
    ) -> Result<Self> {
        let results: Vec<Result<(Matrix, Vec<usize>)>> = (0..n_windows)
            .into_par_iter()
            .map(|k| transition_matrix(params, scheme, k as f64 * dt, dt))
            .collect();
        let mut matrices = Vec::with_capacity(n_windows);
        let mut identity_fallbacks = Vec::new();
        for (k, r) in results.into_iter().enumerate() {
            let (m, flags) = r?;
            identity_fallbacks.extend(flags.into_iter().map(|l| (k, l)));
            matrices.push(m);
        }
        Ok(CdsTransitionSet {
            matrices,
            dt,
            identity_fallbacks,
        })
    }

    pub fn n_windows(&self) -> usize {
        self.matrices.len()
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    /// Matrix for the window starting at exposure index k.
    pub fn window(&self, k: usize) -> &Matrix {
        &self.matrices[k]
    }
}

/// Solve the two moment equations E[D(T)] = mean_T, SD[D(T)] = sd_T for
/// (a, β) given the shape exponent b: β = mean/sd², a = mean·β/T^b.
pub fn calibrate_from_moments(
    mean_t: f64,
    sd_t: f64,
    b: f64,
    t_years: f64,
) -> Result<GammaProcessParams> {
    if !(mean_t > 0.0 && sd_t > 0.0 && t_years > 0.0 && b > 0.0) {
        return Err(Error::Validation(format!(
            "calibration targets must be positive: mean={mean_t}, sd={sd_t}, b={b}, T={t_years}"
        )));
    }
    let beta = mean_t / (sd_t * sd_t);
    let a = mean_t * beta / t_years.powf(b);
    GammaProcessParams::new(a, b, beta)
}

/// Sample one path of cumulative losses at steps 0, dt, 2·dt, …, horizon.
///
/// Element k is D(k·dt); the path starts at 0 and is non-decreasing.
pub fn sample_path<R: Rng>(
    params: &GammaProcessParams,
    horizon: f64,
    dt: f64,
    rng: &mut R,
) -> Result<Vec<f64>> {
    if !(dt > 0.0) || horizon < 0.0 {
        return Err(Error::Validation("need dt > 0 and horizon >= 0".into()));
    }
    let steps = (horizon / dt).round() as usize;
    if ((steps as f64 * dt) - horizon).abs() > 1e-9 * dt.max(horizon) {
        return Err(Error::Validation(format!(
            "horizon {horizon} is not a multiple of dt {dt}"
        )));
    }
    let mut path = Vec::with_capacity(steps + 1);
    let mut level = 0.0;
    path.push(level);
    for k in 0..steps {
        let inc_shape = shape(params, (k + 1) as f64 * dt) - shape(params, k as f64 * dt);
        level += sample_gamma(inc_shape, params.beta, rng);
        path.push(level);
    }
    Ok(path)
}

/// One Gamma(shape, rate) draw; zero shape yields a zero increment.
pub fn sample_gamma<R: Rng>(shape: f64, rate: f64, rng: &mut R) -> f64 {
    if shape <= 0.0 {
        return 0.0;
    }
    GammaDist::new(shape, 1.0 / rate)
        .expect("valid gamma parameters")
        .sample(rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn case_params() -> GammaProcessParams {
        calibrate_from_moments(0.4, 0.075, 1.5, 50.0).unwrap()
    }

    fn case_scheme() -> CdsScheme {
        CdsScheme::new(vec![0.1, 0.4]).unwrap()
    }

    #[test]
    fn shape_examples() {
        let p = GammaProcessParams::new(1.0, 1.0, 1.0).unwrap();
        assert_eq!(shape(&p, 4.0), 4.0);
        assert_eq!(shape(&p, 0.0), 0.0);

        let p = case_params();
        assert!((shape(&p, 50.0) - 28.444).abs() < 1e-3);
    }

    #[test]
    fn marginal_cdf_boundaries_and_exponential_case() {
        let p = case_params();
        assert_eq!(marginal_cdf(&p, 10.0, 0.0).unwrap(), 0.0);
        assert_eq!(marginal_cdf(&p, 10.0, f64::INFINITY).unwrap(), 1.0);

        // α(τ) = 1 reduces to an exponential distribution.
        let p = GammaProcessParams::new(1.0, 1.0, 2.0).unwrap();
        let got = marginal_cdf(&p, 1.0, 1.0).unwrap();
        assert!((got - (1.0 - (-2.0f64).exp())).abs() < 1e-12);
        assert!((got - 0.86466).abs() < 1e-5);
    }

    #[test]
    fn increment_cdf_properties() {
        let p = case_params();
        assert_eq!(increment_cdf(&p, 49.0, 50.0, 0.0).unwrap(), 0.0);
        assert_eq!(increment_cdf(&p, 49.0, 50.0, -1.0).unwrap(), 0.0);

        // Stationary special case: equal windows share the increment law.
        let p = GammaProcessParams::new(0.3, 1.0, 5.0).unwrap();
        let a = increment_cdf(&p, 0.0, 2.0, 0.17).unwrap();
        let b = increment_cdf(&p, 7.0, 9.0, 0.17).unwrap();
        assert!((a - b).abs() < 1e-14);
    }

    #[test]
    fn increment_cdf_matches_reference_gamma() {
        // Independent oracle: statrs' gamma CDF on the window (49, 50].
        let p = case_params();
        let inc_shape = shape(&p, 50.0) - shape(&p, 49.0);
        let x = 0.02;
        use statrs::distribution::ContinuousCDF;
        let reference = statrs::distribution::Gamma::new(inc_shape, p.beta)
            .unwrap()
            .cdf(x);
        let got = increment_cdf(&p, 49.0, 50.0, x).unwrap();
        assert!((got - reference).abs() < 1e-12, "{got} vs {reference}");
    }

    #[test]
    fn occupancy_pristine_limit_and_mass() {
        let p = case_params();
        let s = case_scheme();
        let occ = state_occupancy(&p, &s, 1e-9).unwrap();
        assert!((occ[0] - 1.0).abs() < 1e-12);

        for &tau in &[0.5, 5.0, 20.0, 50.0] {
            let occ = state_occupancy(&p, &s, tau).unwrap();
            let total: f64 = occ.iter().sum();
            assert!((total - 1.0).abs() < 1e-12);
            assert!(occ.iter().all(|&v| v >= 0.0));
        }
    }

    #[test]
    fn occupancy_matches_path_sampling() {
        // Path-sampling oracle: D(50) as a sum of annual increments.
        let p = case_params();
        let s = case_scheme();
        let analytic = state_occupancy(&p, &s, 50.0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let n = 200_000;
        let mut counts = vec![0usize; s.n_cds()];
        for _ in 0..n {
            let path = sample_path(&p, 50.0, 1.0, &mut rng).unwrap();
            counts[s.classify(*path.last().unwrap()) - 1] += 1;
        }
        for (l, &c) in counts.iter().enumerate() {
            let freq = c as f64 / n as f64;
            assert!(
                (freq - analytic[l]).abs() < 0.005,
                "state {}: {freq} vs {}",
                l + 1,
                analytic[l]
            );
        }
    }

    #[test]
    fn calibration_examples() {
        let p = case_params();
        assert!((p.beta - 71.111).abs() < 1e-3);
        assert!((p.a - 0.080452).abs() < 5e-6);
        assert!((p.a - 0.4 * p.beta / 50.0f64.powf(1.5)).abs() < 1e-15);

        // Ratio identity and round trip of the defining equations.
        assert!((p.beta - 0.4 / (0.075 * 0.075)).abs() < 1e-12);
        let mean = shape(&p, 50.0) / p.beta;
        let sd = (shape(&p, 50.0)).sqrt() / p.beta;
        assert!((mean - 0.4).abs() < 1e-12);
        assert!((sd - 0.075).abs() < 1e-12);

        // b = 1 closed form.
        let p1 = calibrate_from_moments(0.4, 0.075, 1.0, 50.0).unwrap();
        assert!((p1.a - 0.4 * p1.beta / 50.0).abs() < 1e-12);
    }

    #[test]
    fn transition_matrix_structure() {
        let p = case_params();
        let s = case_scheme();
        for &tau in &[0.0, 1.0, 10.0, 30.0, 49.0] {
            let (m, _) = transition_matrix(&p, &s, tau, 1.0).unwrap();
            assert!(m.max_row_sum_deviation() < 1e-8, "tau={tau}");
            for l in 0..3 {
                for target in 0..l {
                    assert_eq!(m[(l, target)], 0.0, "healing at tau={tau}");
                }
            }
        }
    }

    #[test]
    fn transition_matrix_vanishing_window_is_identity() {
        let p = case_params();
        let s = case_scheme();
        let (m, _) = transition_matrix(&p, &s, 10.0, 1e-9).unwrap();
        for l in 0..3 {
            assert!((m[(l, l)] - 1.0).abs() < 1e-6, "diag {l}: {}", m[(l, l)]);
        }
    }

    #[test]
    fn transition_matrix_degenerate_start() {
        let p = case_params();
        let s = case_scheme();
        let (m, flags) = transition_matrix(&p, &s, 0.0, 1.0).unwrap();
        // Row 1 equals raw increment band probabilities from D = 0.
        let f1 = increment_cdf(&p, 0.0, 1.0, 0.1).unwrap();
        let f2 = increment_cdf(&p, 0.0, 1.0, 0.4).unwrap();
        assert!((m[(0, 0)] - f1).abs() < 1e-13);
        assert!((m[(0, 1)] - (f2 - f1)).abs() < 1e-13);
        // Conditioning states 2 and 3 are unreachable at τ = 0.
        assert_eq!(flags, vec![2, 3]);
    }

    #[test]
    fn transition_matrix_matches_monte_carlo() {
        // Conditional-frequency oracle at τ = 10, dt = 1 (reduced-size
        // version of the acceptance run).
        let p = case_params();
        let s = case_scheme();
        let (m, _) = transition_matrix(&p, &s, 10.0, 1.0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let n = 200_000;
        let mut counts = vec![vec![0usize; 3]; 3];
        let mut totals = vec![0usize; 3];
        for _ in 0..n {
            let d10 = sample_gamma(shape(&p, 10.0), p.beta, &mut rng);
            let inc = sample_gamma(shape(&p, 11.0) - shape(&p, 10.0), p.beta, &mut rng);
            let from = s.classify(d10) - 1;
            let to = s.classify(d10 + inc) - 1;
            counts[from][to] += 1;
            totals[from] += 1;
        }
        for l in 0..3 {
            if totals[l] < 2_000 {
                continue; // too few conditioning samples for a stable row
            }
            for t in 0..3 {
                let freq = counts[l][t] as f64 / totals[l] as f64;
                assert!(
                    (freq - m[(l, t)]).abs() < 0.01,
                    "({},{}): {freq} vs {}",
                    l + 1,
                    t + 1,
                    m[(l, t)]
                );
            }
        }
    }

    #[test]
    fn chapman_consistency_spot_check() {
        let p = case_params();
        let s = case_scheme();
        for &tau in &[1.0, 7.0, 25.0, 49.0] {
            let occ = state_occupancy(&p, &s, tau).unwrap();
            let (m, _) = transition_matrix(&p, &s, tau, 1.0).unwrap();
            let next = state_occupancy(&p, &s, tau + 1.0).unwrap();
            for target in 0..3 {
                let propagated: f64 = (0..3).map(|l| occ[l] * m[(l, target)]).sum();
                assert!(
                    (propagated - next[target]).abs() < 2.0 * QUAD_REL_TOL,
                    "tau={tau}, state {}: {propagated} vs {}",
                    target + 1,
                    next[target]
                );
            }
        }
    }

    #[test]
    fn monotone_degradation() {
        // CDS distribution under repeated application is stochastically
        // non-decreasing in exposure time.
        let p = case_params();
        let s = case_scheme();
        let set = CdsTransitionSet::build(&p, &s, 50, 1.0).unwrap();
        let mut dist = vec![1.0, 0.0, 0.0];
        let mut prev_tail = vec![0.0, 0.0];
        for k in 0..set.n_windows() {
            let m = set.window(k);
            let mut next = vec![0.0; 3];
            for l in 0..3 {
                for t in 0..3 {
                    next[t] += dist[l] * m[(l, t)];
                }
            }
            dist = next;
            let tail = vec![dist[1] + dist[2], dist[2]];
            for (i, (&t, &pt)) in tail.iter().zip(&prev_tail).enumerate() {
                assert!(t >= pt - 1e-12, "window {k}, tail {i}: {t} < {pt}");
            }
            prev_tail = tail;
        }
    }

    #[test]
    fn sample_path_properties() {
        let p = case_params();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(sample_path(&p, 0.0, 1.0, &mut rng).unwrap(), vec![0.0]);

        for _ in 0..100 {
            let path = sample_path(&p, 50.0, 1.0, &mut rng).unwrap();
            assert_eq!(path.len(), 51);
            assert_eq!(path[0], 0.0);
            assert!(path.windows(2).all(|w| w[1] >= w[0]));
        }
        assert!(sample_path(&p, 10.5, 1.0, &mut rng).is_err());
    }
}
