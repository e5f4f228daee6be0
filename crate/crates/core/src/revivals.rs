//! Revival-peak detection on a sampled signal.
//!
//! The signal is first centred, `d_i = |x_i − x̄|`. An index is a candidate
//! when `d_i` is the maximum of `d` over `[i − w, i + w]`, the earliest index
//! winning ties. Candidates are then kept only if they rise at least halfway
//! from the median of `d` to its global maximum.

use crate::error::{Error, Result};

/// Half-width in samples; one twentieth of the default 4000-point grid.
pub const DEFAULT_WINDOW: usize = 200;

/// Fraction of the rise from baseline to global maximum a peak must reach.
pub const DEFAULT_PROMINENCE: f64 = 0.5;

/// Indices of revival peaks in `values` with the default prominence.
pub fn revival_indices(values: &[f64], window: usize) -> Result<Vec<usize>> {
    revival_indices_with(values, window, DEFAULT_PROMINENCE)
}

pub fn revival_indices_with(values: &[f64], window: usize, prominence: f64) -> Result<Vec<usize>> {
    if window == 0 {
        return Err(Error::InvalidArgument("window must be at least 1".into()));
    }
    if values.len() < window {
        return Err(Error::InvalidArgument(format!(
            "series of length {} is shorter than the window {window}",
            values.len()
        )));
    }
    if !(0.0..=1.0).contains(&prominence) {
        return Err(Error::InvalidArgument(format!("prominence must lie in [0, 1], got {prominence}")));
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidArgument("series contains non-finite values".into()));
    }
    if values.iter().all(|&v| v == values[0]) {
        return Ok(Vec::new());
    }
    let mean = values.iter().sum::<f64>() / values.len() as f64;
    let d: Vec<f64> = values.iter().map(|x| (x - mean).abs()).collect();
    let top = d.iter().copied().fold(0.0, f64::max);
    let mut sorted = d.clone();
    sorted.sort_by(f64::total_cmp);
    let floor = sorted[sorted.len() / 2];
    let threshold = floor + prominence * (top - floor);

    let n = d.len();
    let peaks = (0..n)
        .filter(|&i| {
            let lo = i.saturating_sub(window);
            let hi = (i + window).min(n - 1);
            d[lo..i].iter().all(|&x| x < d[i]) && d[i + 1..=hi].iter().all(|&x| x <= d[i])
        })
        .filter(|&i| d[i] >= threshold)
        .collect();
    Ok(peaks)
}

/// Peak times of `values` sampled at `tau`.
pub fn detect_revivals(tau: &[f64], values: &[f64], window: usize) -> Result<Vec<f64>> {
    if tau.len() != values.len() {
        return Err(Error::InvalidArgument(format!(
            "{} times for {} values",
            tau.len(),
            values.len()
        )));
    }
    Ok(revival_indices(values, window)?.into_iter().map(|i| tau[i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn sinusoid_peaks_are_uniform() {
        // three full periods; |sin| peaks every π
        let tau: Vec<f64> = (0..1885).map(|k| k as f64 * 0.01).collect();
        let x: Vec<f64> = tau.iter().map(|t| t.sin()).collect();
        let peaks = detect_revivals(&tau, &x, 50).unwrap();
        assert_eq!(peaks.len(), 6);
        for (k, p) in peaks.iter().enumerate() {
            assert!((p - (k as f64 + 0.5) * PI).abs() <= 0.01, "{p}");
        }
    }

    #[test]
    fn constant_series_has_no_peaks() {
        assert!(revival_indices(&[0.3; 100], 5).unwrap().is_empty());
    }

    #[test]
    fn argument_errors() {
        assert!(matches!(revival_indices(&[1.0, 2.0], 3), Err(Error::InvalidArgument(_))));
        assert!(matches!(revival_indices(&[1.0, 2.0], 0), Err(Error::InvalidArgument(_))));
        assert!(revival_indices(&[1.0, f64::NAN, 0.0], 1).is_err());
        assert!(detect_revivals(&[0.0], &[1.0, 2.0], 1).is_err());
    }

    #[test]
    fn ties_go_to_the_first_index() {
        let x = [0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0];
        assert_eq!(revival_indices(&x, 2).unwrap(), vec![2]);
    }

    #[test]
    fn small_ripples_are_filtered() {
        // big bursts at 100 and 300 on top of a weak ripple
        let x: Vec<f64> = (0..400)
            .map(|i| {
                let t = i as f64;
                let burst = (-((t - 100.0) / 5.0).powi(2)).exp() + (-((t - 300.0) / 5.0).powi(2)).exp();
                burst + 0.02 * (t * 0.7).sin()
            })
            .collect();
        assert_eq!(revival_indices(&x, 10).unwrap(), vec![100, 300]);
    }
}
