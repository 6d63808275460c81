use crate::error::{Error, Result};

/// A sampled curve: strictly increasing abscissae with one value each.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSeries {
    xs: Vec<f64>,
    ys: Vec<f64>,
    label: String,
}

impl GridSeries {
    pub fn new(label: impl Into<String>, xs: Vec<f64>, ys: Vec<f64>) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::Shape(format!("{} abscissae but {} values", xs.len(), ys.len())));
        }
        if xs.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::Shape("abscissae must be strictly increasing".into()));
        }
        Ok(Self {
            xs,
            ys,
            label: label.into(),
        })
    }

    /// Samples `f` on `xs`.
    pub fn tabulate(label: impl Into<String>, xs: Vec<f64>, f: impl Fn(f64) -> f64) -> Result<Self> {
        let ys = xs.iter().map(|&x| f(x)).collect();
        Self::new(label, xs, ys)
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub fn ys(&self) -> &[f64] {
        &self.ys
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.xs.iter().copied().zip(self.ys.iter().copied())
    }

    /// Trapezoidal quadrature weights for the abscissae.
    pub fn trapezoid_weights(&self) -> Vec<f64> {
        trapezoid_weights(&self.xs)
    }

    pub fn same_abscissae(&self, other: &GridSeries) -> bool {
        self.xs == other.xs
    }
}

/// `n` equally spaced points from `lo` to `hi` inclusive.
///
/// Points are computed as `lo + i * step` so a symmetric odd grid hits 0 exactly.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let step = (hi - lo) / (n - 1) as f64;
            (0..n)
                .map(|i| if i == n - 1 { hi } else { lo + i as f64 * step })
                .collect()
        }
    }
}

pub fn trapezoid_weights(xs: &[f64]) -> Vec<f64> {
    let n = xs.len();
    let mut w = vec![0.0; n];
    for i in 0..n.saturating_sub(1) {
        let h = 0.5 * (xs[i + 1] - xs[i]);
        w[i] += h;
        w[i + 1] += h;
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_mismatched_lengths() {
        assert!(matches!(
            GridSeries::new("a", vec![0.0, 1.0], vec![1.0]),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn rejects_unsorted() {
        assert!(GridSeries::new("a", vec![0.0, 0.0], vec![1.0, 1.0]).is_err());
        assert!(GridSeries::new("a", vec![1.0, 0.0], vec![1.0, 1.0]).is_err());
    }

    #[test]
    fn odd_symmetric_grid_contains_zero() {
        let xs = linspace(-1.0, 1.0, 2001);
        assert_eq!(xs[1000], 0.0);
        assert_eq!(xs[0], -1.0);
        assert_eq!(xs[2000], 1.0);
        assert!((xs[1500] - 0.5).abs() < 1e-15);
    }

    #[test]
    fn trapezoid_weights_sum_to_span() {
        let xs = linspace(-2.0, 3.0, 11);
        let w = trapezoid_weights(&xs);
        assert!((w.iter().sum::<f64>() - 5.0).abs() < 1e-14);
        assert!((w[0] - 0.25).abs() < 1e-15);
        assert!((w[5] - 0.5).abs() < 1e-15);
    }
}
