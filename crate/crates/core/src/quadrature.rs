//! Gauss–Legendre panel integration along straight segments in the disc.
//!
//! Profile-built functions are reconstructed by integrating analytic data
//! along the radial segment `[0, z]`. The integrands are analytic on the
//! disc, so fixed 16-point panels of length [`PANEL_LEN`] converge far past
//! the accuracy the certification tolerances need.

use num_complex::Complex64;

/// Panel length along the radial segment.
pub const PANEL_LEN: f64 = 0.05;

/// Positive nodes and weights of the 16-point Gauss–Legendre rule on [-1, 1];
/// the rule is symmetric, so negative nodes carry the same weights.
const GL16: [(f64, f64); 8] = [
    (9.50125098376374544e-2, 1.89450610455068585e-1),
    (2.81603550779258915e-1, 1.82603415044923612e-1),
    (4.58016777657227370e-1, 1.69156519395002619e-1),
    (6.17876244402643771e-1, 1.49595988816576764e-1),
    (7.55404408355002999e-1, 1.24628971255534030e-1),
    (8.65631202387831755e-1, 9.51585116824925914e-2),
    (9.44575023073232600e-1, 6.22535239386477063e-2),
    (9.89400934991649939e-1, 2.71524594117540374e-2),
];

/// 16-point Gauss–Legendre quadrature of `f` over the straight segment
/// from `a` to `b`.
pub fn integrate_segment<F>(f: &F, a: Complex64, b: Complex64) -> Complex64
where
    F: Fn(Complex64) -> Complex64 + ?Sized,
{
    let mid = (a + b) * 0.5;
    let half = (b - a) * 0.5;
    let mut acc = Complex64::new(0.0, 0.0);
    for &(x, w) in &GL16 {
        acc += (f(mid + half * x) + f(mid - half * x)) * w;
    }
    acc * half
}

/// Integral of `f` over the radial segment `[0, z]`, split into panels of
/// length `panel_len`.
pub fn integrate_radial<F>(f: &F, z: Complex64, panel_len: f64) -> Complex64
where
    F: Fn(Complex64) -> Complex64 + ?Sized,
{
    let r = z.norm();
    if r == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let panels = (r / panel_len).ceil().max(1.0) as usize;
    let dir = z / r;
    let step = r / panels as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..panels {
        let a = dir * (step * i as f64);
        let b = dir * (step * (i + 1) as f64);
        acc += integrate_segment(f, a, b);
    }
    acc
}

/// Joint reconstruction of `L(z) = ∫₀^z q(t) dt` and `F(z) = ∫₀^z exp(L(t)) dt`
/// along the radial segment, marching panels so the inner integral is reused
/// cumulatively instead of being restarted at every outer node.
pub fn nested_exp_integral<F>(q: &F, z: Complex64, panel_len: f64) -> (Complex64, Complex64)
where
    F: Fn(Complex64) -> Complex64 + ?Sized,
{
    let r = z.norm();
    if r == 0.0 {
        return (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
    }
    let panels = (r / panel_len).ceil().max(1.0) as usize;
    let dir = z / r;
    let step = r / panels as f64;
    let mut log_cum = Complex64::new(0.0, 0.0);
    let mut outer = Complex64::new(0.0, 0.0);
    for i in 0..panels {
        let a = dir * (step * i as f64);
        let b = dir * (step * (i + 1) as f64);
        let mid = (a + b) * 0.5;
        let half = (b - a) * 0.5;
        for &(x, w) in &GL16 {
            for node in [mid + half * x, mid - half * x] {
                let log_at_node = log_cum + integrate_segment(q, a, node);
                outer += log_at_node.exp() * w;
            }
        }
        log_cum += integrate_segment(q, a, b);
    }
    // All panels share the same half-length dir*step/2 = z/(2*panels).
    (log_cum, outer * (z / (2.0 * panels as f64)))
}
