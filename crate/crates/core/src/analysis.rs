//! Small helpers for reading features off sampled time series.

fn significance_start(xs: &[f64], rel_floor: f64) -> Option<usize> {
    let peak = xs.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if peak == 0.0 {
        return None;
    }
    let floor = rel_floor * peak;
    xs.iter().position(|x| x.abs() >= floor)
}

/// Index of the first local maximum once the series has reached
/// `rel_floor` times its largest magnitude.
///
/// A local maximum is an interior sample strictly above its predecessor and
/// not below its successor.
pub fn first_local_maximum(xs: &[f64], rel_floor: f64) -> Option<usize> {
    let start = significance_start(xs, rel_floor)?.max(1);
    (start..xs.len().saturating_sub(1)).find(|&i| xs[i] > xs[i - 1] && xs[i] >= xs[i + 1])
}

/// Index of the first local extremum (maximum or minimum) once the series
/// has reached `rel_floor` times its largest magnitude.
pub fn first_extremum(xs: &[f64], rel_floor: f64) -> Option<usize> {
    let start = significance_start(xs, rel_floor)?.max(1);
    (start..xs.len().saturating_sub(1)).find(|&i| {
        let before = xs[i] - xs[i - 1];
        let after = xs[i + 1] - xs[i];
        (before > 0.0 && after <= 0.0) || (before < 0.0 && after >= 0.0)
    })
}
