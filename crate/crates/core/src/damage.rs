//! Park-Ang damage quantification and seismic damage states.
//!
//! The Park-Ang index combines peak deformation with cumulative hysteretic
//! energy, D_PA = δ_m/δ_u + β_PA·E_h/(V_y·δ_u), and is bucketed into
//! discrete seismic damage states (SDS). A value exactly at a threshold
//! belongs to the upper state, mirroring the CDS boundary convention.
//!
//! [`SyntheticResponseModel`] stands in for a finite-element response
//! campaign: it draws lognormal Park-Ang demands whose median grows with
//! intensity and with pre-existing corrosion, floored so an event never
//! improves the damage state.

use crate::error::{Error, Result};
use rand::Rng;
use rand_distr::{Distribution, LogNormal};
use serde::{Deserialize, Serialize};

/// Inputs of the Park-Ang damage index.
#[derive(Debug, Clone, Copy)]
pub struct ParkAngInputs {
    /// Maximum deformation recorded from the analysis.
    pub delta_m: f64,
    /// Ultimate deformation capacity.
    pub delta_u: f64,
    /// Cumulative dissipated hysteretic energy.
    pub hysteretic_energy: f64,
    /// Yield strength.
    pub v_y: f64,
    /// Non-negative empirical coefficient weighting the energy term.
    pub beta_pa: f64,
}

impl ParkAngInputs {
    pub fn validate(&self) -> Result<()> {
        if !(self.delta_u > 0.0 && self.v_y > 0.0) {
            return Err(Error::Validation(
                "capacity and yield strength must be positive".into(),
            ));
        }
        if self.delta_m < 0.0 || self.hysteretic_energy < 0.0 || self.beta_pa < 0.0 {
            return Err(Error::Validation(
                "deformation, energy and beta_pa must be non-negative".into(),
            ));
        }
        Ok(())
    }
}

/// D_PA = δ_m/δ_u + β_PA · E_h / (V_y · δ_u).
pub fn park_ang_index(inputs: &ParkAngInputs) -> Result<f64> {
    inputs.validate()?;
    Ok(inputs.delta_m / inputs.delta_u
        + inputs.beta_pa * inputs.hysteretic_energy / (inputs.v_y * inputs.delta_u))
}

/// Seismic damage state scheme over D_PA cut points.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SdsScheme {
    thresholds: Vec<f64>,
}

impl SdsScheme {
    pub fn new(thresholds: Vec<f64>) -> Result<Self> {
        if thresholds.is_empty() {
            return Err(Error::Validation("need at least one SDS threshold".into()));
        }
        if thresholds[0] <= 0.0 || thresholds.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Validation(
                "SDS thresholds must be positive and strictly increasing".into(),
            ));
        }
        Ok(SdsScheme { thresholds })
    }

    pub fn n_sds(&self) -> usize {
        self.thresholds.len() + 1
    }

    pub fn thresholds(&self) -> &[f64] {
        &self.thresholds
    }

    /// Lower D_PA edge of state s (1-based); 0 for the first state.
    pub fn lower(&self, s: usize) -> f64 {
        if s == 1 {
            0.0
        } else {
            self.thresholds[s - 2]
        }
    }
}

/// 1-based SDS of a damage index value; thresholds map to the upper state.
pub fn classify_sds(d_pa: f64, scheme: &SdsScheme) -> usize {
    debug_assert!(d_pa >= 0.0);
    let mut state = 1;
    for &t in scheme.thresholds() {
        if d_pa >= t {
            state += 1;
        }
    }
    state
}

/// Lognormal Park-Ang demand model conditioned on corrosion state.
///
/// ln median = ln(median_ref) + im_exponent·ln(im/im_ref) + cds_log_scale[l−1];
/// the dispersion is per-CDS. Stand-in for a structural analysis campaign,
/// used only to produce fragility training data.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SyntheticResponseModel {
    /// Median D_PA of a pristine component at the reference intensity.
    pub median_ref: f64,
    /// Reference intensity for the median anchor.
    pub im_ref: f64,
    /// Power-law growth of the median with intensity.
    pub im_exponent: f64,
    /// Log-scale vulnerability offsets per CDS, non-decreasing.
    pub cds_log_scale: Vec<f64>,
    /// Lognormal dispersions per CDS.
    pub dispersion: Vec<f64>,
}

impl SyntheticResponseModel {
    pub fn validate(&self, n_cds: usize) -> Result<()> {
        if self.cds_log_scale.len() != n_cds || self.dispersion.len() != n_cds {
            return Err(Error::Validation(format!(
                "response model sized for {} CDS, scheme has {}",
                self.cds_log_scale.len(),
                n_cds
            )));
        }
        if !(self.median_ref > 0.0 && self.im_ref > 0.0 && self.im_exponent > 0.0) {
            return Err(Error::Validation(
                "response model medians and exponent must be positive".into(),
            ));
        }
        if self.dispersion.iter().any(|&d| !(d > 0.0)) {
            return Err(Error::Validation("dispersions must be positive".into()));
        }
        if self.cds_log_scale.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::Validation(
                "vulnerability must be non-decreasing in CDS".into(),
            ));
        }
        Ok(())
    }

    /// Median D_PA at (cds, im).
    pub fn median(&self, cds: usize, im: f64) -> f64 {
        self.median_ref
            * (im / self.im_ref).powf(self.im_exponent)
            * self.cds_log_scale[cds - 1].exp()
    }

    /// P(D_PA ≥ x) for an unfloored draw at (cds, im).
    pub fn exceedance(&self, cds: usize, im: f64, x: f64) -> f64 {
        if x <= 0.0 {
            return 1.0;
        }
        let z = (x.ln() - self.median(cds, im).ln()) / self.dispersion[cds - 1];
        1.0 - crate::numerics::normal_cdf(z)
    }
}

/// Draw a Park-Ang value for an event at intensity `im` on a component in
/// corrosion state `cds` with prior seismic state `prior_sds`.
///
/// The draw is floored at the lower edge of `prior_sds`, so the implied
/// SDS never heals.
pub fn generate_response<R: Rng>(
    model: &SyntheticResponseModel,
    scheme: &SdsScheme,
    cds: usize,
    prior_sds: usize,
    im: f64,
    rng: &mut R,
) -> f64 {
    debug_assert!(im > 0.0 && cds >= 1 && prior_sds >= 1 && prior_sds <= scheme.n_sds());
    let mu = self_ln(model.median(cds, im));
    let draw = LogNormal::new(mu, model.dispersion[cds - 1])
        .expect("valid lognormal parameters")
        .sample(rng);
    draw.max(scheme.lower(prior_sds))
}

fn self_ln(x: f64) -> f64 {
    x.ln()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn scheme() -> SdsScheme {
        SdsScheme::new(vec![0.2, 0.5]).unwrap()
    }

    fn model() -> SyntheticResponseModel {
        SyntheticResponseModel {
            median_ref: 0.08,
            im_ref: 0.2,
            im_exponent: 1.1,
            cds_log_scale: vec![0.0, 0.35, 0.8],
            dispersion: vec![0.45, 0.45, 0.5],
        }
    }

    fn inputs(delta_m: f64, energy: f64, beta_pa: f64) -> ParkAngInputs {
        ParkAngInputs {
            delta_m,
            delta_u: 1.0,
            hysteretic_energy: energy,
            v_y: 1.0,
            beta_pa,
        }
    }

    #[test]
    fn park_ang_examples() {
        assert!((park_ang_index(&inputs(0.3, 0.0, 0.1)).unwrap() - 0.3).abs() < 1e-15);
        assert!((park_ang_index(&inputs(1.0, 0.0, 0.1)).unwrap() - 1.0).abs() < 1e-15);
        // δ_m/δ_u = 0.4, β = 0.1, E_h/(V_y δ_u) = 0.5 → 0.45
        assert!((park_ang_index(&inputs(0.4, 0.5, 0.1)).unwrap() - 0.45).abs() < 1e-15);
    }

    #[test]
    fn park_ang_monotonicity() {
        let base = park_ang_index(&inputs(0.4, 0.5, 0.1)).unwrap();
        assert!(park_ang_index(&inputs(0.5, 0.5, 0.1)).unwrap() > base);
        assert!(park_ang_index(&inputs(0.4, 0.6, 0.1)).unwrap() > base);
        assert!(park_ang_index(&inputs(0.4, 0.5, 0.2)).unwrap() > base);
        let larger_capacity = ParkAngInputs {
            delta_u: 2.0,
            ..inputs(0.4, 0.5, 0.1)
        };
        assert!(park_ang_index(&larger_capacity).unwrap() < base);
        let stronger = ParkAngInputs {
            v_y: 2.0,
            ..inputs(0.4, 0.5, 0.1)
        };
        assert!(park_ang_index(&stronger).unwrap() < base);
    }

    #[test]
    fn park_ang_rejects_bad_inputs() {
        let mut bad = inputs(0.4, 0.5, 0.1);
        bad.delta_u = 0.0;
        assert!(park_ang_index(&bad).is_err());
    }

    #[test]
    fn classify_table_values() {
        let s = scheme();
        assert_eq!(classify_sds(0.1, &s), 1);
        assert_eq!(classify_sds(0.3, &s), 2);
        assert_eq!(classify_sds(0.6, &s), 3);
        // Thresholds belong to the upper state.
        assert_eq!(classify_sds(0.2, &s), 2);
        assert_eq!(classify_sds(0.5, &s), 3);
    }

    #[test]
    fn classify_is_monotone() {
        let s = scheme();
        let grid: Vec<f64> = (0..200).map(|k| k as f64 * 0.005).collect();
        for w in grid.windows(2) {
            assert!(classify_sds(w[0], &s) <= classify_sds(w[1], &s));
        }
    }

    #[test]
    fn degenerate_draw_stays_in_first_state() {
        let s = scheme();
        let mut m = model();
        m.dispersion = vec![1e-9, 1e-9, 1e-9];
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..100 {
            // Median well below 0.2 at a weak intensity.
            let d = generate_response(&m, &s, 1, 1, 0.05, &mut rng);
            assert_eq!(classify_sds(d, &s), 1);
        }
    }

    #[test]
    fn non_healing_floor() {
        let s = scheme();
        let m = model();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let d = generate_response(&m, &s, 1, 3, 0.05, &mut rng);
            assert_eq!(classify_sds(d, &s), 3);
        }
        for _ in 0..200 {
            let d = generate_response(&m, &s, 2, 2, 0.1, &mut rng);
            assert!(classify_sds(d, &s) >= 2);
        }
    }

    #[test]
    fn frequencies_match_lognormal_tails() {
        // Analytic lognormal tail oracle for a pristine prior state.
        let s = scheme();
        let m = model();
        let (cds, im) = (2, 0.6);
        let n = 100_000;
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut counts = [0usize; 3];
        for _ in 0..n {
            let d = generate_response(&m, &s, cds, 1, im, &mut rng);
            counts[classify_sds(d, &s) - 1] += 1;
        }
        let p2 = m.exceedance(cds, im, 0.2);
        let p3 = m.exceedance(cds, im, 0.5);
        let expect = [1.0 - p2, p2 - p3, p3];
        for (k, &c) in counts.iter().enumerate() {
            let freq = c as f64 / n as f64;
            assert!(
                (freq - expect[k]).abs() < 0.01,
                "state {}: {freq} vs {}",
                k + 1,
                expect[k]
            );
        }
    }

    #[test]
    fn corrosion_amplifies_damage_frequencies() {
        // P(SDS ≥ 2) grows with CDS at fixed intensity.
        let s = scheme();
        let m = model();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let n = 50_000;
        let mut tails = Vec::new();
        for cds in 1..=3 {
            let mut hits = 0;
            for _ in 0..n {
                let d = generate_response(&m, &s, cds, 1, 0.4, &mut rng);
                if classify_sds(d, &s) >= 2 {
                    hits += 1;
                }
            }
            tails.push(hits as f64 / n as f64);
        }
        assert!(tails[0] < tails[1] && tails[1] < tails[2], "{tails:?}");
    }
}
