/// Least-squares slope of `ln t` against `ln n`: the empirical exponent of a
/// polynomial running time. NaN with fewer than two distinct sizes.
pub fn log_log_slope(samples: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = samples.iter().map(|&(n, t)| (n.ln(), t.ln())).collect();
    let m = logs.len() as f64;
    let (sx, sy) = logs
        .iter()
        .fold((0.0, 0.0), |(a, b), &(x, y)| (a + x, b + y));
    let (mx, my) = (sx / m, sy / m);
    let (cov, var) = logs.iter().fold((0.0, 0.0), |(c, v), &(x, y)| {
        (c + (x - mx) * (y - my), v + (x - mx) * (x - mx))
    });
    if var > 0.0 {
        cov / var
    } else {
        f64::NAN
    }
}
