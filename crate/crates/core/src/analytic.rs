//! Closed-form threshold curves and the probability bounds used to check
//! the simulations. All logarithms are natural.
//!
//! Near the AS threshold one can also model the number of witnessing blocks
//! as roughly Poisson, with `P(AS) ≈ P(N ≥ 1)`. That heuristic is not
//! exposed as a function here; the sweep's `mean_blocks_examined` column is
//! the observable to compare against it.

use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ThresholdKind {
    /// `ln n / n`
    Connectivity,
    /// `(ln n / n)^(1/3)`
    AS,
    /// `5 sqrt(ln n / n)`
    CfsUpper,
    /// `1 / (sqrt(n) ln n)`
    CfsLower,
    /// `sqrt((sqrt(17) - 3) / 2) / sqrt(n)`
    CfsConjectured,
}

impl ThresholdKind {
    pub const ALL: [ThresholdKind; 5] = [
        ThresholdKind::Connectivity,
        ThresholdKind::AS,
        ThresholdKind::CfsUpper,
        ThresholdKind::CfsLower,
        ThresholdKind::CfsConjectured,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ThresholdKind::Connectivity => "Connectivity",
            ThresholdKind::AS => "AS",
            ThresholdKind::CfsUpper => "CfsUpper",
            ThresholdKind::CfsLower => "CfsLower",
            ThresholdKind::CfsConjectured => "CfsConjectured",
        }
    }
}

/// Branching-process constant for the square graph, `sqrt((sqrt(17)-3)/2)`.
pub fn cfs_conjectured_constant() -> f64 {
    ((17f64.sqrt() - 3.0) / 2.0).sqrt()
}

/// Threshold density for `n` vertices, clamped to `(0, 1]`.
pub fn threshold(kind: ThresholdKind, n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain(format!("threshold needs n >= 2, got {n}")));
    }
    let nf = n as f64;
    let ln = nf.ln();
    let raw = match kind {
        ThresholdKind::Connectivity => ln / nf,
        ThresholdKind::AS => (ln / nf).cbrt(),
        ThresholdKind::CfsUpper => 5.0 * (ln / nf).sqrt(),
        ThresholdKind::CfsLower => 1.0 / (nf.sqrt() * ln),
        ThresholdKind::CfsConjectured => cfs_conjectured_constant() / nf.sqrt(),
    };
    Ok(raw.min(1.0))
}

/// `(1 - p) C(n, 2)`, the expected number of blocks in G(n, p).
pub fn expected_nonadjacent_pairs(n: usize, p: f64) -> f64 {
    let nf = n as f64;
    (1.0 - p) * nf * (nf - 1.0) / 2.0
}

/// `3 C(n, 4) p^4 (1 - p)^2`, the expected number of induced 4-cycles.
pub fn expected_induced_squares(n: usize, p: f64) -> f64 {
    if n < 4 {
        return 0.0;
    }
    let nf = n as f64;
    let choose4 = nf * (nf - 1.0) * (nf - 2.0) * (nf - 3.0) / 24.0;
    3.0 * choose4 * p.powi(4) * (1.0 - p).powi(2)
}

/// Two-sided Chernoff tail `min(1, 2 exp(-δ²μ/3))` for a sum of i.i.d.
/// indicators with mean `μ`.
pub fn chernoff_bound(mu: f64, delta: f64) -> Result<f64> {
    if !(delta > 0.0 && delta < 2.0 / 3.0) {
        return Err(Error::Domain(format!("delta {delta} outside (0, 2/3)")));
    }
    if mu.is_nan() || mu <= 0.0 {
        return Err(Error::Domain(format!("mu {mu} must be positive")));
    }
    Ok((2.0 * (-delta * delta * mu / 3.0).exp()).min(1.0))
}

/// Wilson score interval for a binomial proportion.
pub fn wilson_interval(successes: u64, trials: u64, confidence: f64) -> Result<(f64, f64)> {
    if trials == 0 || successes > trials {
        return Err(Error::InvalidInput(format!(
            "need 0 <= successes <= trials and trials >= 1, got {successes}/{trials}"
        )));
    }
    if !(confidence > 0.0 && confidence < 1.0) {
        return Err(Error::InvalidInput(format!(
            "confidence {confidence} outside (0, 1)"
        )));
    }
    let z = Normal::standard().inverse_cdf(0.5 + confidence / 2.0);
    let n = trials as f64;
    let phat = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let centre = (phat + z2 / (2.0 * n)) / denom;
    let half = z * (phat * (1.0 - phat) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    // The score interval always contains phat; clamp only rounding residue.
    let lo = if successes == 0 { 0.0 } else { (centre - half).clamp(0.0, phat) };
    let hi = if successes == trials { 1.0 } else { (centre + half).clamp(phat, 1.0) };
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn threshold_values() {
        let a = threshold(ThresholdKind::AS, 1000).unwrap();
        assert!((a - 0.190_449).abs() < 1e-6, "{a}");
        let c = threshold(ThresholdKind::Connectivity, 8).unwrap();
        assert!((c - 8f64.ln() / 8.0).abs() < 1e-15);
        assert!((c - 0.2599).abs() < 1e-4);
        assert!(threshold(ThresholdKind::AS, 1).is_err());
        assert_eq!(threshold(ThresholdKind::CfsUpper, 10).unwrap(), 1.0);
    }

    #[test]
    fn conjectured_constant_rounds_to_four_places() {
        let c = cfs_conjectured_constant();
        assert_eq!(format!("{c:.4}"), "0.7494");
        let ratio = threshold(ThresholdKind::CfsConjectured, 10_000).unwrap() * 100.0;
        assert!((ratio - c).abs() < 1e-12);
    }

    #[test]
    fn block_count_expectation() {
        let p = 0.8 * threshold(ThresholdKind::AS, 1000).unwrap();
        let e = expected_nonadjacent_pairs(1000, p);
        assert!((e - 423_397.0).abs() / 423_397.0 < 5e-4, "{e}");
        assert_eq!(e.round(), 423_397.0);
        assert_eq!(expected_nonadjacent_pairs(17, 1.0), 0.0);
        assert_eq!(expected_nonadjacent_pairs(4, 0.0), 6.0);
    }

    #[test]
    fn square_expectation_matches_exact_enumeration() {
        assert_eq!(expected_induced_squares(4, 1.0), 0.0);
        assert_eq!(expected_induced_squares(3, 0.5), 0.0);
        // Weighted sum over all 64 labelled graphs on 4 vertices.
        let p: f64 = 0.5;
        let mut exact = 0.0;
        for mask in 0u32..64 {
            let edges: Vec<_> = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let m = edges.len() as i32;
            let g = crate::graph::Graph::from_edges(4, edges).unwrap();
            let k = crate::squares::count_squares(&g) as f64;
            exact += k * p.powi(m) * (1.0 - p).powi(6 - m);
        }
        assert!((exact - 3.0 / 64.0).abs() < 1e-15);
        assert!((expected_induced_squares(4, 0.5) - exact).abs() < 1e-15);
        let e60 = expected_induced_squares(60, 0.3);
        assert!((e60 - 3.0 * 487_635.0 * 0.0081 * 0.49).abs() < 1e-6);
        assert!((e60 - 5806.27).abs() < 0.01);
    }

    #[test]
    fn chernoff_values() {
        let b = chernoff_bound(100.0, 0.3).unwrap();
        assert!((b - 2.0 * (-3.0f64).exp()).abs() < 1e-15);
        assert!((b - 0.09957).abs() < 1e-5);
        let b = chernoff_bound(12.0, 0.5).unwrap();
        assert!((b - 0.7358).abs() < 1e-4);
        assert_eq!(chernoff_bound(0.1, 0.1).unwrap(), 1.0);
        assert!(chernoff_bound(10.0, 0.0).is_err());
        assert!(chernoff_bound(10.0, 0.7).is_err());
        let mut last = 1.0;
        for mu in [10.0, 100.0, 1e3, 1e4] {
            let b = chernoff_bound(mu, 0.2).unwrap();
            assert!(b <= last);
            last = b;
        }
        assert!(last < 1e-50);
    }

    #[test]
    fn wilson_values() {
        assert_eq!(wilson_interval(0, 400, 0.95).unwrap().0, 0.0);
        assert_eq!(wilson_interval(400, 400, 0.95).unwrap().1, 1.0);
        let (lo, hi) = wilson_interval(200, 400, 0.95).unwrap();
        let half = (hi - lo) / 2.0;
        assert!((half - 0.049).abs() < 5e-4, "{half}");
        assert!(half < 0.05);
        assert!(wilson_interval(5, 4, 0.95).is_err());
        assert!(wilson_interval(0, 0, 0.95).is_err());
    }

    #[test]
    fn regime_ordering() {
        for n in (100..=1_000_000).step_by(997) {
            let lower = threshold(ThresholdKind::CfsLower, n).unwrap();
            let conj = threshold(ThresholdKind::CfsConjectured, n).unwrap();
            let upper = threshold(ThresholdKind::CfsUpper, n).unwrap();
            assert!(lower < conj && conj < upper, "n = {n}");
        }
    }

    #[test]
    fn cfs_upper_falls_below_as_only_for_large_n() {
        // 5 sqrt(L) < L^(1/3) iff L < 5^-6 with L = ln n / n.
        let below = |n| {
            threshold(ThresholdKind::CfsUpper, n).unwrap() < threshold(ThresholdKind::AS, n).unwrap()
        };
        let crossover = (100..10_000_000usize)
            .find(|&n| (n as f64).ln() / n as f64 <= 5f64.powi(-6))
            .unwrap();
        assert!(crossover > 180_000 && crossover < 200_000, "{crossover}");
        assert!(!below(crossover - 1000));
        for n in [crossover + 1000, 1_000_000, 100_000_000] {
            assert!(below(n), "n = {n}");
        }
    }

    proptest! {
        #[test]
        fn thresholds_are_probabilities(n in 2usize..10_000_000) {
            for k in ThresholdKind::ALL {
                let t = threshold(k, n).unwrap();
                prop_assert!(t.is_finite() && t > 0.0 && t <= 1.0);
            }
        }

        #[test]
        fn wilson_contains_estimate(trials in 1u64..5000, frac in 0.0f64..=1.0, conf in 0.5f64..0.999) {
            let s = (frac * trials as f64).round() as u64;
            let (lo, hi) = wilson_interval(s, trials, conf).unwrap();
            let phat = s as f64 / trials as f64;
            prop_assert!(0.0 <= lo && lo <= phat && phat <= hi && hi <= 1.0);
        }

        #[test]
        fn wilson_narrows_with_trials(k in 1u64..50, num in 0u64..=4) {
            // Same ratio num/4 at 4k and 8k trials.
            let (a, b) = (wilson_interval(num * k, 4 * k, 0.95).unwrap(), wilson_interval(2 * num * k, 8 * k, 0.95).unwrap());
            prop_assert!(b.1 - b.0 < a.1 - a.0);
        }

        #[test]
        fn expectations_are_finite(n in 0usize..100_000, p in 0.0f64..=1.0) {
            let a = expected_nonadjacent_pairs(n, p);
            let b = expected_induced_squares(n, p);
            prop_assert!(a.is_finite() && a >= 0.0 && b.is_finite() && b >= 0.0);
        }
    }
}
