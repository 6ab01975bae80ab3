//! Local ingredients of the model Morse-Smale diffeomorphism: the
//! contraction `h`, the projection `p : ℝ³ \ O → S² × S¹`, the piecewise flow
//! with its saddle `P(1,0,0)` and sink `Q(-1,0,0)`, and the stereographic
//! projection `S³ \ {N} → ℝ³`.

use std::f64::consts::FRAC_PI_2;
use std::fmt;

use nalgebra::{Complex, Matrix3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point3(pub [f64; 3]);

impl Point3 {
    pub const fn new(x1: f64, x2: f64, x3: f64) -> Self {
        Point3([x1, x2, x3])
    }

    pub fn norm_sq(&self) -> f64 {
        self.0.iter().map(|v| v * v).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn scale(&self, s: f64) -> Point3 {
        Point3(self.0.map(|v| v * s))
    }

    pub fn add(&self, other: &Point3) -> Point3 {
        Point3([self.0[0] + other.0[0], self.0[1] + other.0[1], self.0[2] + other.0[2]])
    }

    pub fn sub(&self, other: &Point3) -> Point3 {
        self.add(&other.scale(-1.0))
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|v| v.is_finite())
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

pub const SADDLE: Point3 = Point3::new(1.0, 0.0, 0.0);
pub const SINK: Point3 = Point3::new(-1.0, 0.0, 0.0);

/// A point of `S² × S¹`: the first two coordinates of the `S²` factor and the
/// circle coordinate in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorusPoint {
    pub unit: (f64, f64),
    pub circle: f64,
}

/// Circular distance on `ℝ / ℤ`.
pub fn circle_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(1.0);
    d.min(1.0 - d)
}

impl TorusPoint {
    pub fn distance(&self, other: &TorusPoint) -> f64 {
        (self.unit.0 - other.unit.0)
            .abs()
            .max((self.unit.1 - other.unit.1).abs())
            .max(circle_distance(self.circle, other.circle))
    }
}

/// `h(x) = x / 2`
pub fn contract_h(x: &Point3) -> Point3 {
    x.scale(0.5)
}

/// `p(x) = (x₁/‖x‖, x₂/‖x‖, log₂‖x‖ mod 1)`
pub fn project_p(x: &Point3) -> Result<TorusPoint> {
    let r = x.norm();
    if r == 0.0 {
        return Err(Error::Origin);
    }
    let circle = r.log2().rem_euclid(1.0);
    // rem_euclid can round up to exactly 1.0 for tiny negative inputs
    let circle = if circle >= 1.0 { 0.0 } else { circle };
    Ok(TorusPoint {
        unit: (x.0[0] / r, x.0[1] / r),
        circle,
    })
}

/// The three pieces of the flow, by `r² = x₁² + x₂² + x₃²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// `r² ≤ 2`
    Core,
    /// `2 < r² ≤ 4`
    Shell,
    /// `r² > 4`
    Outer,
}

pub fn region_of(x: &Point3) -> Region {
    let r2 = x.norm_sq();
    if r2 <= 2.0 {
        Region::Core
    } else if r2 <= 4.0 {
        Region::Shell
    } else {
        Region::Outer
    }
}

/// Evaluates the formula of one region at any point, regardless of which
/// region the point lies in.
pub fn vector_field_in(region: Region, x: &Point3) -> Point3 {
    let [_, x2, x3] = x.0;
    let r2 = x.norm_sq();
    match region {
        Region::Outer => Point3::new(1.0, 0.0, 0.0),
        Region::Core | Region::Shell => {
            let d = r2 - 4.0;
            let v1 = 1.0 - d * d / 9.0;
            let k = match region {
                Region::Core => -1.0,
                _ => 0.5 * ((FRAC_PI_2 * (r2 - 3.0)).sin() - 1.0),
            };
            Point3::new(v1, k * x2, k * x3)
        }
    }
}

/// The piecewise vector field generating `φ^t`.
pub fn vector_field_phi(x: &Point3) -> Point3 {
    vector_field_in(region_of(x), x)
}

fn rk4_step(x: &Point3, h: f64) -> Point3 {
    let k1 = vector_field_phi(x);
    let k2 = vector_field_phi(&x.add(&k1.scale(h / 2.0)));
    let k3 = vector_field_phi(&x.add(&k2.scale(h / 2.0)));
    let k4 = vector_field_phi(&x.add(&k3.scale(h)));
    let incr = k1.add(&k2.scale(2.0)).add(&k3.scale(2.0)).add(&k4);
    x.add(&incr.scale(h / 6.0))
}

/// Fixed-step classical Runge–Kutta approximation of `φ^t(x0)`. The last
/// step is shortened to land exactly on `t`; negative `t` integrates
/// backwards.
pub fn integrate_flow(x0: &Point3, t: f64, step: f64) -> Result<Point3> {
    if !(step > 0.0) {
        return Err(Error::NonPositiveStep(step));
    }
    let dir = if t < 0.0 { -1.0 } else { 1.0 };
    let span = t.abs();
    let full = (span / step).floor() as u64;
    let rest = span - full as f64 * step;
    let mut x = *x0;
    for k in 0..full {
        x = rk4_step(&x, dir * step);
        if !x.is_finite() {
            return Err(Error::NonFinite(dir * (k + 1) as f64 * step));
        }
    }
    if rest > step * 1e-12 {
        x = rk4_step(&x, dir * rest);
        if !x.is_finite() {
            return Err(Error::NonFinite(t));
        }
    }
    Ok(x)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Saddle,
    Sink,
    Source,
    NonHyperbolic,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Saddle => "saddle",
            Classification::Sink => "sink",
            Classification::Source => "source",
            Classification::NonHyperbolic => "non-hyperbolic",
        })
    }
}

pub const JACOBIAN_STEP: f64 = 1e-5;
pub const HYPERBOLICITY_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralReport {
    pub point: Point3,
    /// Largest velocity component at the point.
    pub residual: f64,
    /// Jacobian eigenvalues, sorted by decreasing real part.
    pub eigenvalues: Vec<Complex<f64>>,
    pub classification: Classification,
}

/// Central-difference Jacobian of the vector field.
pub fn jacobian(x: &Point3, step: f64) -> Matrix3<f64> {
    let mut j = Matrix3::zeros();
    for c in 0..3 {
        let mut plus = *x;
        let mut minus = *x;
        plus.0[c] += step;
        minus.0[c] -= step;
        let (fp, fm) = (vector_field_phi(&plus), vector_field_phi(&minus));
        for r in 0..3 {
            j[(r, c)] = (fp.0[r] - fm.0[r]) / (2.0 * step);
        }
    }
    j
}

pub fn classify(eigenvalues: &[Complex<f64>], tol: f64) -> Classification {
    if eigenvalues.iter().any(|e| e.re.abs() <= tol) {
        Classification::NonHyperbolic
    } else if eigenvalues.iter().all(|e| e.re < 0.0) {
        Classification::Sink
    } else if eigenvalues.iter().all(|e| e.re > 0.0) {
        Classification::Source
    } else {
        Classification::Saddle
    }
}

/// Linearization of the flow at a point. A real part of the vector-field
/// spectrum near zero is a time-one-map eigenvalue of modulus near one.
pub fn spectral_at(x: &Point3) -> SpectralReport {
    let j = jacobian(x, JACOBIAN_STEP);
    let mut eigenvalues: Vec<Complex<f64>> = j.complex_eigenvalues().iter().copied().collect();
    eigenvalues.sort_by(|a, b| b.re.total_cmp(&a.re).then(b.im.total_cmp(&a.im)));
    SpectralReport {
        point: *x,
        residual: vector_field_phi(x).max_abs(),
        classification: classify(&eigenvalues, HYPERBOLICITY_TOL),
        eigenvalues,
    }
}

/// `ϑ₊(x) = (x₁, x₂, x₃) / (1 − x₄)`
pub fn stereographic(x: [f64; 4]) -> Result<Point3> {
    let denom = 1.0 - x[3];
    if denom == 0.0 {
        return Err(Error::NorthPole);
    }
    Ok(Point3::new(x[0] / denom, x[1] / denom, x[2] / denom))
}

/// `ϑ₊⁻¹(y) = (2y, ‖y‖² − 1) / (‖y‖² + 1)`
pub fn stereographic_inverse(y: &Point3) -> [f64; 4] {
    let s = y.norm_sq();
    let d = s + 1.0;
    [2.0 * y.0[0] / d, 2.0 * y.0[1] / d, 2.0 * y.0[2] / d, (s - 1.0) / d]
}

/// Settings of [`verify`]. Tolerances default to the values the
/// verification is specified against.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub samples: usize,
    pub residual_tol: f64,
    pub spectrum_tol: f64,
    pub continuity_tol: f64,
    pub projection_tol: f64,
    pub translation_tol: f64,
    pub stereographic_tol: f64,
    /// Accepted band for the error ratio when the step is halved.
    pub order_ratio: (f64, f64),
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 7,
            samples: 1000,
            residual_tol: 1e-12,
            spectrum_tol: 1e-4,
            continuity_tol: 1e-9,
            projection_tol: 1e-12,
            translation_tol: 1e-9,
            stereographic_tol: 1e-12,
            order_ratio: (14.0, 18.0),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub value: f64,
    pub bound: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DynamicsReport {
    pub config: VerifyConfig,
    pub fixed_points: Vec<(&'static str, SpectralReport)>,
    pub checks: Vec<Check>,
}

impl DynamicsReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn fmt_eig(e: &Complex<f64>) -> String {
    if e.im.abs() < 1e-12 {
        format!("{:.6}", e.re)
    } else {
        format!("{:.6}{:+.6}i", e.re, e.im)
    }
}

impl fmt::Display for DynamicsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        writeln!(
            f,
            "# dynamics-verify seed={} samples={} residual_tol={:e} spectrum_tol={:e} continuity_tol={:e} projection_tol={:e} translation_tol={:e} stereographic_tol={:e} order_ratio={}..{}",
            c.seed, c.samples, c.residual_tol, c.spectrum_tol, c.continuity_tol, c.projection_tol,
            c.translation_tol, c.stereographic_tol, c.order_ratio.0, c.order_ratio.1
        )?;
        writeln!(f, "{:<6} {:<16} {:>10} {:<36} {}", "point", "coords", "residual", "eigenvalues", "class")?;
        for (name, r) in &self.fixed_points {
            let eigs: Vec<String> = r.eigenvalues.iter().map(fmt_eig).collect();
            writeln!(
                f,
                "{:<6} {:<16} {:>10.3e} {:<36} {}",
                name,
                r.point.to_string(),
                r.residual,
                eigs.join(", "),
                r.classification
            )?;
        }
        for ch in &self.checks {
            writeln!(
                f,
                "{:<24} {:>12.4e}  bound {:<18} {}",
                ch.name,
                ch.value,
                ch.bound,
                if ch.pass { "PASS" } else { "FAIL" }
            )?;
        }
        write!(f, "overall {}", if self.all_pass() { "PASS" } else { "FAIL" })
    }
}

fn random_unit<R: Rng>(rng: &mut R) -> Point3 {
    loop {
        let p = Point3::new(
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
            rng.random_range(-1.0..1.0),
        );
        let n = p.norm();
        if n > 1e-3 && n <= 1.0 {
            return p.scale(1.0 / n);
        }
    }
}

fn spectrum_error(found: &[Complex<f64>], expected: &[f64]) -> f64 {
    let mut found: Vec<f64> = found.iter().map(|e| e.re).collect();
    let mut expected = expected.to_vec();
    found.sort_by(f64::total_cmp);
    expected.sort_by(f64::total_cmp);
    let im = 0.0f64;
    found
        .iter()
        .zip(&expected)
        .map(|(a, b)| (a - b).abs())
        .fold(im, f64::max)
}

/// Largest jump of the vector field across the spheres `r² = 2` and
/// `r² = 4`, sampled just inside and just outside along random rays.
pub fn continuity_defect(seed: u64, rays: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let eps = 1e-12;
    let mut worst = 0.0f64;
    for _ in 0..rays {
        let d = random_unit(&mut rng);
        for threshold in [2.0f64, 4.0] {
            let r = threshold.sqrt();
            let inside = d.scale(r * (1.0 - eps));
            let outside = d.scale(r * (1.0 + eps));
            debug_assert_ne!(region_of(&inside), region_of(&outside));
            let jump = vector_field_phi(&inside).sub(&vector_field_phi(&outside)).max_abs();
            worst = worst.max(jump);
        }
    }
    worst
}

/// Largest deviation of `p ∘ h` from `p` on random points with norms
/// spread over several octaves.
pub fn projection_defect(seed: u64, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let r = 2f64.powf(rng.random_range(-6.0..6.0));
        let x = random_unit(&mut rng).scale(r);
        let a = project_p(&x).expect("nonzero sample");
        let b = project_p(&contract_h(&x)).expect("nonzero sample");
        worst = worst.max(a.distance(&b));
    }
    worst
}

/// Error of a core-region trajectory at steps `h` and `h/2` against a
/// reference computed with step `h/64`; returns `(err_h, err_half)`.
pub fn order_errors(h: f64) -> (f64, f64) {
    let x0 = Point3::new(0.0, 0.5, 0.5);
    let t = 1.0;
    let reference = integrate_flow(&x0, t, h / 64.0).expect("bounded trajectory");
    let coarse = integrate_flow(&x0, t, h).expect("bounded trajectory");
    let fine = integrate_flow(&x0, t, h / 2.0).expect("bounded trajectory");
    (
        coarse.sub(&reference).max_abs(),
        fine.sub(&reference).max_abs(),
    )
}

pub fn stereographic_defect(seed: u64, samples: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    let mut done = 0;
    while done < samples {
        let v: [f64; 4] = std::array::from_fn(|_| rng.random_range(-1.0..1.0));
        let n = v.iter().map(|c| c * c).sum::<f64>().sqrt();
        if n < 1e-3 {
            continue;
        }
        let u = v.map(|c| c / n);
        // stay away from the pole, where the chart blows up
        if u[3] > 0.9 {
            continue;
        }
        let back = stereographic_inverse(&stereographic(u).expect("not the pole"));
        let err = u.iter().zip(&back).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
        worst = worst.max(err);
        done += 1;
    }
    worst
}

/// Runs every numerical check of the model flow.
pub fn verify(config: &VerifyConfig) -> DynamicsReport {
    let saddle = spectral_at(&SADDLE);
    let sink = spectral_at(&SINK);
    let mut checks = Vec::new();
    let mut push = |name, value: f64, bound: String, pass: bool| {
        checks.push(Check {
            name,
            value,
            bound,
            pass,
        })
    };

    push("residual P", saddle.residual, format!("< {:e}", config.residual_tol), saddle.residual < config.residual_tol);
    push("residual Q", sink.residual, format!("< {:e}", config.residual_tol), sink.residual < config.residual_tol);

    let ep = spectrum_error(&saddle.eigenvalues, &[4.0 / 3.0, -1.0, -1.0]);
    let eq = spectrum_error(&sink.eigenvalues, &[-4.0 / 3.0, -1.0, -1.0]);
    push("spectrum P", ep, format!("< {:e}", config.spectrum_tol), ep < config.spectrum_tol);
    push("spectrum Q", eq, format!("< {:e}", config.spectrum_tol), eq < config.spectrum_tol);
    push(
        "P is saddle",
        0.0,
        "saddle".into(),
        saddle.classification == Classification::Saddle,
    );
    push("Q is sink", 0.0, "sink".into(), sink.classification == Classification::Sink);

    let cont = continuity_defect(config.seed, config.samples);
    push("continuity r2=2,4", cont, format!("< {:e}", config.continuity_tol), cont < config.continuity_tol);

    let proj = projection_defect(config.seed.wrapping_add(1), config.samples);
    push("p(h(x)) = p(x)", proj, format!("< {:e}", config.projection_tol), proj < config.projection_tol);

    let start = Point3::new(5.0, 0.0, 0.0);
    let moved = integrate_flow(&start, 1.0, 0.01).expect("outer flow is a translation");
    let tr = moved.sub(&Point3::new(6.0, 0.0, 0.0)).max_abs();
    push("outer translation", tr, format!("< {:e}", config.translation_tol), tr < config.translation_tol);

    let (e1, e2) = order_errors(0.1);
    let ratio = e1 / e2;
    let (lo, hi) = config.order_ratio;
    push("rk4 order ratio", ratio, format!("in [{lo}, {hi}]"), ratio >= lo && ratio <= hi);

    let st = stereographic_defect(config.seed.wrapping_add(2), config.samples);
    push("stereographic round trip", st, format!("< {:e}", config.stereographic_tol), st < config.stereographic_tol);

    let origin = integrate_flow(&Point3::new(0.0, 0.0, 0.0), 20.0, 0.01).expect("bounded");
    let to_sink = origin.sub(&SINK).max_abs();
    push("origin flows to Q", to_sink, "< 1e-6".into(), to_sink < 1e-6);

    DynamicsReport {
        config: config.clone(),
        fixed_points: vec![("P", saddle), ("Q", sink)],
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &Point3, b: &Point3, tol: f64) -> bool {
        a.sub(b).max_abs() <= tol
    }

    #[test]
    fn contraction_examples() {
        assert_eq!(contract_h(&Point3::new(2.0, 0.0, 0.0)), Point3::new(1.0, 0.0, 0.0));
        assert_eq!(contract_h(&Point3::new(0.0, 0.0, 0.0)), Point3::new(0.0, 0.0, 0.0));
        assert_eq!(contract_h(&Point3::new(1.0, 1.0, 1.0)), Point3::new(0.5, 0.5, 0.5));
    }

    #[test]
    fn projection_examples() {
        let a = project_p(&Point3::new(1.0, 0.0, 0.0)).unwrap();
        assert_eq!((a.unit, a.circle), ((1.0, 0.0), 0.0));
        let b = project_p(&Point3::new(2.0, 0.0, 0.0)).unwrap();
        assert_eq!((b.unit, b.circle), ((1.0, 0.0), 0.0));
        let s = 2f64.sqrt();
        let c = project_p(&Point3::new(0.0, s, s)).unwrap();
        assert!(c.unit.0.abs() < 1e-15);
        assert!((c.unit.1 - s / 2.0).abs() < 1e-15);
        assert!(circle_distance(c.circle, 0.0) < 1e-15);
        let d = project_p(&Point3::new(0.0, 1.0, 1.0)).unwrap();
        assert!((d.circle - 0.5).abs() < 1e-15);
        assert!(matches!(project_p(&Point3::new(0.0, 0.0, 0.0)), Err(Error::Origin)));
    }

    #[test]
    fn circle_distance_wraps() {
        assert!((circle_distance(0.999, 0.001) - 0.002).abs() < 1e-12);
        assert!((circle_distance(0.25, 0.75) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn vector_field_examples() {
        assert_eq!(vector_field_phi(&SADDLE).max_abs(), 0.0);
        assert_eq!(vector_field_phi(&SINK).max_abs(), 0.0);
        assert_eq!(vector_field_phi(&Point3::new(3.0, 0.0, 0.0)), Point3::new(1.0, 0.0, 0.0));
    }

    #[test]
    fn branches_agree_on_threshold_spheres() {
        let d = Point3::new(0.3, -0.5, 0.8);
        let d = d.scale(1.0 / d.norm());
        let on2 = d.scale(2f64.sqrt());
        let jump = vector_field_in(Region::Core, &on2).sub(&vector_field_in(Region::Shell, &on2));
        assert!(jump.max_abs() < 1e-12);
        let on4 = d.scale(2.0);
        let jump = vector_field_in(Region::Shell, &on4).sub(&vector_field_in(Region::Outer, &on4));
        assert!(jump.max_abs() < 1e-12);
    }

    #[test]
    fn integration_examples() {
        let x = integrate_flow(&Point3::new(5.0, 0.0, 0.0), 1.0, 0.01).unwrap();
        assert!(close(&x, &Point3::new(6.0, 0.0, 0.0), 1e-9));
        let p = integrate_flow(&SADDLE, 10.0, 0.01).unwrap();
        assert!(close(&p, &SADDLE, 1e-9));
        let o = integrate_flow(&Point3::new(0.0, 0.0, 0.0), 30.0, 0.01).unwrap();
        assert!(close(&o, &SINK, 1e-6));
        assert!(matches!(integrate_flow(&SADDLE, 1.0, 0.0), Err(Error::NonPositiveStep(_))));
        let back = integrate_flow(&Point3::new(6.0, 0.0, 0.0), -1.0, 0.01).unwrap();
        assert!(close(&back, &Point3::new(5.0, 0.0, 0.0), 1e-9));
    }

    #[test]
    fn non_finite_start_is_reported() {
        let r = integrate_flow(&Point3::new(f64::NAN, 0.0, 0.0), 1.0, 0.1);
        assert!(matches!(r, Err(Error::NonFinite(_))));
    }

    #[test]
    fn spectral_examples() {
        let p = spectral_at(&SADDLE);
        assert_eq!(p.classification, Classification::Saddle);
        assert!((p.eigenvalues[0].re - 4.0 / 3.0).abs() < 1e-4);
        assert!((p.eigenvalues[1].re + 1.0).abs() < 1e-4);
        assert!((p.eigenvalues[2].re + 1.0).abs() < 1e-4);
        let q = spectral_at(&SINK);
        assert_eq!(q.classification, Classification::Sink);
        assert!((q.eigenvalues[2].re + 4.0 / 3.0).abs() < 1e-4);
        let o = spectral_at(&Point3::new(3.0, 0.0, 0.0));
        assert_eq!(o.residual, 1.0);
        assert_eq!(o.classification, Classification::NonHyperbolic);
    }

    #[test]
    fn classification_rules() {
        let c = |v: &[f64]| classify(&v.iter().map(|&r| Complex::new(r, 0.0)).collect::<Vec<_>>(), 1e-6);
        assert_eq!(c(&[1.0, -1.0, -1.0]), Classification::Saddle);
        assert_eq!(c(&[-1.0, -2.0, -0.5]), Classification::Sink);
        assert_eq!(c(&[1.0, 2.0, 0.5]), Classification::Source);
        assert_eq!(c(&[1.0, 1e-7, -1.0]), Classification::NonHyperbolic);
    }

    #[test]
    fn stereographic_examples() {
        assert_eq!(stereographic([0.0, 0.0, 0.0, -1.0]).unwrap(), Point3::new(0.0, 0.0, 0.0));
        assert_eq!(stereographic([1.0, 0.0, 0.0, 0.0]).unwrap(), Point3::new(1.0, 0.0, 0.0));
        assert!(matches!(stereographic([0.0, 0.0, 0.0, 1.0]), Err(Error::NorthPole)));
        assert!(stereographic_defect(3, 200) < 1e-12);
    }

    #[test]
    fn verification_passes() {
        let report = verify(&VerifyConfig {
            samples: 200,
            ..VerifyConfig::default()
        });
        assert!(report.all_pass(), "{report}");
    }
}
