//! Dense BFGS minimizer for small smooth problems.
//!
//! Deterministic by construction: fixed zero-friendly initialization is
//! supplied by the caller, Armijo backtracking with fixed constants, and
//! no randomized restarts. Problem sizes here are a handful of parameters
//! per fragility context, so the dense inverse-Hessian update is fine.

/// Outcome of a minimization run.
#[derive(Debug, Clone)]
pub struct BfgsOutcome {
    pub x: Vec<f64>,
    pub value: f64,
    pub grad_inf_norm: f64,
    pub iterations: usize,
    pub converged: bool,
}

/// Minimize f with analytic gradient, stopping when ‖∇f‖_∞ < grad_tol.
pub fn minimize<F>(f: F, x0: &[f64], grad_tol: f64, max_iter: usize) -> BfgsOutcome
where
    F: Fn(&[f64]) -> (f64, Vec<f64>),
{
    let n = x0.len();
    let mut x = x0.to_vec();
    let (mut fx, mut g) = f(&x);
    // Inverse Hessian estimate, row-major, starts at identity.
    let mut h = vec![0.0; n * n];
    for i in 0..n {
        h[i * n + i] = 1.0;
    }

    let mut iterations = 0;
    for iter in 0..max_iter {
        iterations = iter;
        let gnorm = inf_norm(&g);
        if gnorm < grad_tol {
            return BfgsOutcome {
                x,
                value: fx,
                grad_inf_norm: gnorm,
                iterations: iter,
                converged: true,
            };
        }

        // Search direction d = −H g.
        let mut d = vec![0.0; n];
        for i in 0..n {
            let mut acc = 0.0;
            for j in 0..n {
                acc += h[i * n + j] * g[j];
            }
            d[i] = -acc;
        }
        let mut slope: f64 = d.iter().zip(&g).map(|(a, b)| a * b).sum();
        if slope >= 0.0 {
            // Lost positive definiteness; restart from steepest descent.
            for i in 0..n {
                for j in 0..n {
                    h[i * n + j] = if i == j { 1.0 } else { 0.0 };
                }
            }
            for i in 0..n {
                d[i] = -g[i];
            }
            slope = -g.iter().map(|v| v * v).sum::<f64>();
        }

        // Armijo backtracking.
        let mut step = 1.0;
        let mut x_new;
        let mut fx_new;
        let mut g_new;
        loop {
            x_new = x.iter().zip(&d).map(|(a, b)| a + step * b).collect::<Vec<_>>();
            let (v, grad) = f(&x_new);
            fx_new = v;
            g_new = grad;
            if fx_new <= fx + 1e-4 * step * slope || step < 1e-18 {
                break;
            }
            step *= 0.5;
        }

        // BFGS inverse update with curvature guard.
        let s: Vec<f64> = x_new.iter().zip(&x).map(|(a, b)| a - b).collect();
        let y: Vec<f64> = g_new.iter().zip(&g).map(|(a, b)| a - b).collect();
        let sy: f64 = s.iter().zip(&y).map(|(a, b)| a * b).sum();
        let s_norm = s.iter().map(|v| v * v).sum::<f64>().sqrt();
        let y_norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        if sy > 1e-12 * s_norm * y_norm {
            let rho = 1.0 / sy;
            // H ← (I − ρ s yᵀ) H (I − ρ y sᵀ) + ρ s sᵀ
            let mut hy = vec![0.0; n];
            for i in 0..n {
                let mut acc = 0.0;
                for j in 0..n {
                    acc += h[i * n + j] * y[j];
                }
                hy[i] = acc;
            }
            let yhy: f64 = y.iter().zip(&hy).map(|(a, b)| a * b).sum();
            for i in 0..n {
                for j in 0..n {
                    h[i * n + j] += rho * rho * yhy * s[i] * s[j]
                        - rho * (s[i] * hy[j] + hy[i] * s[j])
                        + rho * s[i] * s[j];
                }
            }
        }

        x = x_new;
        fx = fx_new;
        g = g_new;
    }

    let gnorm = inf_norm(&g);
    BfgsOutcome {
        x,
        value: fx,
        grad_inf_norm: gnorm,
        iterations: iterations + 1,
        converged: gnorm < grad_tol,
    }
}

fn inf_norm(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}
