//! Classification metrics: F1, Matthews correlation, and the area under the
//! interpolated precision/recall curve (iAUC).
//!
//! F1 and MCC are plain functions of a confusion matrix. iAUC is rank-based:
//! predictions are sorted by decreasing decision score, tied scores move as a
//! single threshold step, intermediate points between achievable
//! (true-positive, false-positive) cuts are interpolated one true positive at
//! a time with the false-positive count growing linearly, and the area is the
//! trapezoidal integral over recall. The curve is anchored at the first
//! achievable point: precision is held constant from recall 0 up to the first
//! point's recall instead of being extrapolated.

use crate::corpus::Label;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Binary confusion counts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Confusion {
    pub tp: u64,
    pub fp: u64,
    pub tn: u64,
    pub fn_: u64,
}

impl Confusion {
    pub fn new(tp: u64, fp: u64, tn: u64, fn_: u64) -> Self {
        Confusion { tp, fp, tn, fn_ }
    }

    /// Tally predictions against reference labels. `Relevant` is the
    /// positive class.
    pub fn from_predictions(predicted: &[Label], actual: &[Label]) -> Result<Self> {
        if predicted.len() != actual.len() {
            return Err(Error::DimensionMismatch {
                expected: actual.len(),
                found: predicted.len(),
            });
        }
        let mut c = Confusion::default();
        for (&p, &a) in predicted.iter().zip(actual) {
            match (p, a) {
                (Label::Relevant, Label::Relevant) => c.tp += 1,
                (Label::Relevant, Label::Irrelevant) => c.fp += 1,
                (Label::Irrelevant, Label::Irrelevant) => c.tn += 1,
                (Label::Irrelevant, Label::Relevant) => c.fn_ += 1,
            }
        }
        Ok(c)
    }

    pub fn total(&self) -> u64 {
        self.tp + self.fp + self.tn + self.fn_
    }

    /// F1 = 2tp / (2tp + fp + fn). The degenerate case tp+fp+fn = 0 is
    /// defined as 0; use [`Confusion::f1_with_flag`] to detect it.
    pub fn f1(&self) -> f64 {
        self.f1_with_flag().0
    }

    /// F1 plus a flag marking the undefined tp+fp+fn = 0 case.
    pub fn f1_with_flag(&self) -> (f64, bool) {
        let denom = 2 * self.tp + self.fp + self.fn_;
        if denom == 0 {
            (0.0, true)
        } else {
            (2.0 * self.tp as f64 / denom as f64, false)
        }
    }

    /// Matthews correlation coefficient. Any zero factor in the denominator
    /// yields 0.
    pub fn mcc(&self) -> f64 {
        let (tp, fp, tn, fn_) = (
            self.tp as f64,
            self.fp as f64,
            self.tn as f64,
            self.fn_ as f64,
        );
        let denom = (tp + fp) * (tp + fn_) * (tn + fp) * (tn + fn_);
        if denom == 0.0 {
            0.0
        } else {
            (tp * tn - fp * fn_) / denom.sqrt()
        }
    }
}

/// Interpolated precision/recall curve with its area.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PrCurve {
    /// (recall, precision) points in nondecreasing recall order, including
    /// the interpolated intermediate points.
    pub points: Vec<(f64, f64)>,
    /// Area under the curve, in [0, 1].
    pub area: f64,
}

/// Area under the interpolated precision/recall curve of a scored sample.
///
/// Scores and labels are parallel: `scores[i]` is the decision score for the
/// document whose reference label is `labels[i]`. Higher scores rank earlier.
/// Errors if there is no positive (`Relevant`) label or any score is
/// non-finite.
pub fn interpolated_pr_auc(scores: &[f64], labels: &[Label]) -> Result<PrCurve> {
    if scores.len() != labels.len() {
        return Err(Error::DimensionMismatch {
            expected: labels.len(),
            found: scores.len(),
        });
    }
    let total_pos = labels.iter().filter(|&&l| l == Label::Relevant).count() as u64;
    if total_pos == 0 {
        return Err(Error::InvalidParam(
            "interpolated_pr_auc requires at least one positive label".into(),
        ));
    }
    if scores.iter().any(|s| !s.is_finite()) {
        return Err(Error::InvalidParam(
            "interpolated_pr_auc requires finite scores".into(),
        ));
    }

    // Cuts after each tie block, in descending-score order.
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[b].partial_cmp(&scores[a]).unwrap().then(a.cmp(&b)));

    let mut cuts: Vec<(u64, u64)> = Vec::new(); // cumulative (tp, fp)
    let (mut tp, mut fp) = (0u64, 0u64);
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j < order.len() && scores[order[j]] == scores[order[i]] {
            if labels[order[j]] == Label::Relevant {
                tp += 1;
            } else {
                fp += 1;
            }
            j += 1;
        }
        cuts.push((tp, fp));
        i = j;
    }

    // Achievable PR points have at least one true positive; cuts before the
    // first positive carry no recall and are dropped.
    let achievable: Vec<(u64, u64)> = cuts.into_iter().filter(|&(tp, _)| tp >= 1).collect();
    debug_assert!(!achievable.is_empty());

    let pr = |tp: f64, fp: f64| -> (f64, f64) { (tp / total_pos as f64, tp / (tp + fp)) };

    let mut points: Vec<(f64, f64)> = Vec::new();
    points.push(pr(achievable[0].0 as f64, achievable[0].1 as f64));
    for w in achievable.windows(2) {
        let (tp_a, fp_a) = (w[0].0 as f64, w[0].1 as f64);
        let (tp_b, fp_b) = (w[1].0 as f64, w[1].1 as f64);
        let d_tp = tp_b - tp_a;
        if d_tp > 0.0 {
            let slope = (fp_b - fp_a) / d_tp;
            let mut x = 1.0;
            while x < d_tp {
                points.push(pr(tp_a + x, fp_a + x * slope));
                x += 1.0;
            }
        }
        points.push(pr(tp_b, fp_b));
    }

    // Anchor rectangle from recall 0 to the first achievable recall, then
    // trapezoids across the interpolated curve.
    let mut area = points[0].0 * points[0].1;
    for w in points.windows(2) {
        area += (w[1].0 - w[0].0) * (w[0].1 + w[1].1) / 2.0;
    }

    Ok(PrCurve { points, area })
}

/// Mean and standard error (sample std / sqrt(n)) of a set of fold metrics.
pub fn mean_and_se(values: &[f64]) -> (f64, f64) {
    let n = values.len();
    if n == 0 {
        return (f64::NAN, f64::NAN);
    }
    let mean = values.iter().sum::<f64>() / n as f64;
    if n == 1 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n as f64 - 1.0);
    (mean, var.sqrt() / (n as f64).sqrt())
}

#[cfg(test)]
pub mod oracle {
    //! Brute-force reference implementation used by tests only.
    //!
    //! Enumerates every distinct-score threshold, recounting the confusion
    //! from scratch per threshold, then applies the same one-TP-at-a-time
    //! interpolation and trapezoid rule. Shares no code with
    //! [`super::interpolated_pr_auc`].

    use crate::corpus::Label;

    pub fn pr_auc_brute_force(scores: &[f64], labels: &[Label]) -> f64 {
        let total_pos = labels.iter().filter(|&&l| l == Label::Relevant).count() as f64;
        assert!(total_pos > 0.0);

        // Distinct thresholds, descending. Predict positive iff score >= t.
        let mut thresholds: Vec<f64> = scores.to_vec();
        thresholds.sort_by(|a, b| b.partial_cmp(a).unwrap());
        thresholds.dedup();

        let mut achievable: Vec<(f64, f64)> = Vec::new();
        for &t in &thresholds {
            let mut tp = 0.0;
            let mut fp = 0.0;
            for (&s, &l) in scores.iter().zip(labels) {
                if s >= t {
                    if l == Label::Relevant {
                        tp += 1.0;
                    } else {
                        fp += 1.0;
                    }
                }
            }
            if tp >= 1.0 {
                achievable.push((tp, fp));
            }
        }

        let mut curve: Vec<(f64, f64)> = Vec::new();
        for k in 0..achievable.len() {
            let (tp_b, fp_b) = achievable[k];
            if k > 0 {
                let (tp_a, fp_a) = achievable[k - 1];
                let gap = (tp_b - tp_a) as i64;
                for step in 1..gap {
                    let tp = tp_a + step as f64;
                    let fp = fp_a + step as f64 * (fp_b - fp_a) / (tp_b - tp_a);
                    curve.push((tp / total_pos, tp / (tp + fp)));
                }
            }
            curve.push((tp_b / total_pos, tp_b / (tp_b + fp_b)));
        }

        let mut area = curve[0].0 * curve[0].1;
        for w in curve.windows(2) {
            area += (w[1].0 - w[0].0) * (w[0].1 + w[1].1) / 2.0;
        }
        area
    }
}
