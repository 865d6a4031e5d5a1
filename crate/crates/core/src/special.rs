//! Complex special functions: log Γ, digamma, ζ and ζ′/ζ.
//!
//! Everything here is evaluated in the working scalar type with no
//! arbitrary-precision fallback. The accuracy contracts (absolute error
//! ≤ 1e-10 for log Γ / ψ / ζ in their validated domains, stated for `f64`)
//! leave several orders of headroom over every constant the verification
//! layer consumes.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{real, Real, LN_TWO_PI};

/// `B_{2k} / (2k(2k-1))` for k = 1..=10: Stirling series coefficients of log Γ.
const LOG_GAMMA_ASYMP: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1_260.0,
    -1.0 / 1_680.0,
    1.0 / 1_188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3_617.0 / 122_400.0,
    43_867.0 / 244_188.0,
    -174_611.0 / 125_400.0,
];

/// `B_{2k} / (2k)` for k = 1..=10: asymptotic series coefficients of ψ.
const DIGAMMA_ASYMP: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32_760.0,
    1.0 / 12.0,
    -3_617.0 / 8_160.0,
    43_867.0 / 14_364.0,
    -174_611.0 / 6_600.0,
];

/// `B_{2k} / (2k)!` for k = 1..=10: Euler–Maclaurin correction weights
/// (Bernoulli numbers through B₂₀).
const EULER_MACLAURIN_WEIGHTS: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30_240.0,
    -1.0 / 1_209_600.0,
    1.0 / 47_900_160.0,
    -691.0 / 1_307_674_368_000.0,
    1.0 / 74_724_249_600.0,
    -3_617.0 / 10_670_622_842_880_000.0,
    43_867.0 / 5_109_094_217_170_944_000.0,
    -174_611.0 / 802_857_662_698_291_200_000.0,
];

/// Re z threshold above which the Stirling / asymptotic series are applied
/// directly; smaller arguments are shifted up by the recurrence.
const SHIFT_THRESHOLD: f64 = 10.0;

fn is_nonpositive_integer<T: Real>(z: Complex<T>) -> bool {
    z.im.is_zero() && z.re <= T::zero() && z.re.fract().is_zero()
}

/// Principal branch of log Γ(z).
///
/// Stirling series after shifting the argument into Re z ≥ 10 by the
/// recurrence log Γ(z) = log Γ(z+1) − Log z; every shifted point stays off
/// the cut, so the recurrence preserves the branch. On the negative real
/// axis the value is the continuous limit from the upper half-plane.
/// Absolute error ≤ 1e-10 for |Im z| ≤ 1e4, Re z ∈ [−50, 50].
pub fn log_gamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole(format!("log_gamma at non-positive integer z = {z}")));
    }
    if z.im < T::zero() {
        return Ok(log_gamma(z.conj())?.conj());
    }
    let threshold = real::<T>(SHIFT_THRESHOLD);
    let mut w = z;
    let mut shifted = Complex::<T>::new(T::zero(), T::zero());
    while w.re < threshold {
        shifted += w.ln();
        w += T::one();
    }
    let half = real::<T>(0.5);
    let ln_w = w.ln();
    // (w − 1/2) Log w − w + log(2π)/2
    let mut acc = (w - half) * ln_w - w + real::<T>(0.5 * LN_TWO_PI);
    let inv_w2 = (w * w).inv();
    let mut term = w.inv();
    for &c in &LOG_GAMMA_ASYMP {
        acc += term * real::<T>(c);
        term *= inv_w2;
    }
    Ok(acc - shifted)
}

/// Digamma ψ(z) = d/dz log Γ(z).
///
/// Recurrence ψ(z) = ψ(z+1) − 1/z into Re z ≥ 10, then the asymptotic
/// expansion ψ(w) ≈ Log w − 1/(2w) − Σ B₂ₖ/(2k w^{2k}). Same accuracy
/// domain as [`log_gamma`].
pub fn digamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    if is_nonpositive_integer(z) {
        return Err(Error::Pole(format!("digamma at non-positive integer z = {z}")));
    }
    if z.im < T::zero() {
        return Ok(digamma(z.conj())?.conj());
    }
    let threshold = real::<T>(SHIFT_THRESHOLD);
    let mut w = z;
    let mut acc = Complex::<T>::new(T::zero(), T::zero());
    while w.re < threshold {
        acc -= w.inv();
        w += T::one();
    }
    let half = real::<T>(0.5);
    acc += w.ln() - w.inv() * half;
    let inv_w2 = (w * w).inv();
    let mut term = inv_w2;
    for &c in &DIGAMMA_ASYMP {
        acc -= term * real::<T>(c);
        term *= inv_w2;
    }
    Ok(acc)
}

/// Summation cutoff for Euler–Maclaurin: N = max(20, ⌈1.3 |t|⌉).
fn em_cutoff<T: Real>(t: T) -> usize {
    let n = (real::<T>(1.3) * t.abs()).ceil();
    n.to_usize().unwrap_or(20).max(20)
}

/// ζ(s) by Euler–Maclaurin, valid for Re s ≥ −1 away from s = 1.
fn zeta_em<T: Real>(s: Complex<T>) -> Complex<T> {
    let n = em_cutoff(s.im);
    let mut sum = Complex::new(T::one(), T::zero());
    for k in 2..n {
        let ln_k = real::<T>((k as f64).ln());
        sum += (-s * ln_k).exp();
    }
    let nf = real::<T>(n as f64);
    let ln_n = nf.ln();
    let n_pow_ms = (-s * ln_n).exp(); // N^{-s}
    sum += n_pow_ms * real::<T>(0.5);
    sum += n_pow_ms * nf / (s - T::one()); // N^{1-s}/(s-1)
    // Correction terms B_{2k}/(2k)! · s(s+1)···(s+2k-2) · N^{-s-2k+1}
    let mut rising = s; // product of (s+j), j = 0..=2k-2
    let mut n_pow = n_pow_ms / nf; // N^{-s-2k+1}
    let inv_n2 = (nf * nf).recip();
    for (k, &w) in EULER_MACLAURIN_WEIGHTS.iter().enumerate() {
        sum += rising * n_pow * real::<T>(w);
        n_pow *= inv_n2;
        let m = 2 * (k + 1) - 1; // extend the rising factorial by two terms
        rising = rising * (s + real::<T>(m as f64)) * (s + real::<T>((m + 1) as f64));
    }
    sum
}

/// ζ′(s) by termwise differentiation of the same Euler–Maclaurin formula.
fn zeta_em_deriv<T: Real>(s: Complex<T>) -> Complex<T> {
    let n = em_cutoff(s.im);
    let mut sum = Complex::new(T::zero(), T::zero());
    for k in 2..n {
        let ln_k = real::<T>((k as f64).ln());
        sum -= (-s * ln_k).exp() * ln_k;
    }
    let nf = real::<T>(n as f64);
    let ln_n = nf.ln();
    let n_pow_ms = (-s * ln_n).exp();
    sum -= n_pow_ms * real::<T>(0.5) * ln_n;
    let sm1 = s - T::one();
    // d/ds [N^{1-s}/(s-1)] = -N^{1-s} (log N/(s-1) + 1/(s-1)^2)
    sum -= n_pow_ms * nf * (sm1.inv() * ln_n + (sm1 * sm1).inv());
    // d/ds [P_k(s) N^{-s-2k+1}] = (P_k'(s) - P_k(s) log N) N^{-s-2k+1}
    let mut rising = s;
    let mut rising_d = Complex::new(T::one(), T::zero());
    let mut n_pow = n_pow_ms / nf;
    let inv_n2 = (nf * nf).recip();
    for (k, &w) in EULER_MACLAURIN_WEIGHTS.iter().enumerate() {
        sum += (rising_d - rising * ln_n) * n_pow * real::<T>(w);
        n_pow *= inv_n2;
        let m = 2 * (k + 1) - 1;
        for j in [m, m + 1] {
            let factor = s + real::<T>(j as f64);
            rising_d = rising_d * factor + rising;
            rising *= factor;
        }
    }
    sum
}

/// Analytic logarithm of sin(w), branch chosen per half-plane so that no
/// intermediate quantity overflows for large |Im w|. The branch is only
/// meaningful up to 2πi; callers exponentiate the result.
fn log_sin<T: Real>(w: Complex<T>) -> Complex<T> {
    if w.im < T::zero() {
        return log_sin(w.conj()).conj();
    }
    if w.im.is_zero() {
        let s = w.re.sin();
        let im = if s < T::zero() { T::PI() } else { T::zero() };
        return Complex::new(s.abs().ln(), im);
    }
    // sin w = (i/2) e^{-iw} (1 - e^{2iw}), |e^{2iw}| < 1 in the upper half-plane
    let i = Complex::new(T::zero(), T::one());
    let q = (i * w * real::<T>(2.0)).exp();
    -i * w + (Complex::new(T::one(), T::zero()) - q).ln()
        + Complex::new(-real::<T>(std::f64::consts::LN_2), T::FRAC_PI_2())
}

/// cot(w) without overflow for large |Im w|.
fn cot<T: Real>(w: Complex<T>) -> Complex<T> {
    let quarter = real::<T>(0.25);
    if w.im > quarter {
        // cot w = i (q + 1)/(q - 1) with q = e^{2iw}, |q| < 1
        let i = Complex::new(T::zero(), T::one());
        let q = (i * w * real::<T>(2.0)).exp();
        let one = Complex::new(T::one(), T::zero());
        i * (q + one) / (q - one)
    } else if w.im < -quarter {
        cot(w.conj()).conj()
    } else {
        w.cos() / w.sin()
    }
}

const ZETA_T_LIMIT: f64 = 1.0e4;

fn check_zeta_domain<T: Real>(s: Complex<T>) -> Result<()> {
    if s.im.abs() > real::<T>(ZETA_T_LIMIT) {
        return Err(Error::AccuracyDomain(format!(
            "zeta validated for |Im s| <= 1e4, got s = {s}"
        )));
    }
    Ok(())
}

/// ζ(s).
///
/// Euler–Maclaurin for Re s ≥ −1 (cutoff N = max(20, ⌈1.3|t|⌉), Bernoulli
/// corrections through B₂₀, absolute error ≤ 1e-10 for |t| ≤ 1e4); the
/// functional equation, assembled in log space to dodge overflow of the
/// individual factors, for Re s < −1.
pub fn zeta<T: Real>(s: Complex<T>) -> Result<Complex<T>> {
    if s.re.is_one() && s.im.is_zero() {
        return Err(Error::Pole("zeta at s = 1".into()));
    }
    check_zeta_domain(s)?;
    if s.re >= -T::one() {
        return Ok(zeta_em(s));
    }
    // ζ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s) ζ(1-s)
    let one_m_s = Complex::new(T::one(), T::zero()) - s;
    let log_factor = s * real::<T>(std::f64::consts::LN_2)
        + (s - T::one()) * real::<T>(std::f64::consts::PI.ln())
        + log_sin(s * T::FRAC_PI_2())
        + log_gamma(one_m_s)?;
    Ok(log_factor.exp() * zeta_em(one_m_s))
}

/// Default floor on |ζ(s)| below which ζ′/ζ refuses to divide.
pub const ZETA_FLOOR: f64 = 1.0e-12;

/// ζ′(s)/ζ(s).
///
/// Termwise-differentiated Euler–Maclaurin over the ζ value for Re s ≥ −1;
/// log-derivative of the functional equation for Re s < −1. Errors out when
/// |ζ(s)| falls below `floor`.
pub fn zeta_logderiv<T: Real>(s: Complex<T>, floor: T) -> Result<Complex<T>> {
    if s.re.is_one() && s.im.is_zero() {
        return Err(Error::Pole("zeta_logderiv at s = 1".into()));
    }
    check_zeta_domain(s)?;
    if s.re >= -T::one() {
        let z = zeta_em(s);
        if z.norm() < floor {
            return Err(Error::NearZero(format!(
                "|zeta({s})| = {:e} is below the floor {floor:e}",
                z.norm()
            )));
        }
        return Ok(zeta_em_deriv(s) / z);
    }
    // ζ′/ζ(s) = log 2 + log π + (π/2) cot(πs/2) − ψ(1−s) − ζ′/ζ(1−s)
    let w = Complex::new(T::one(), T::zero()) - s; // Re w > 2
    let sin_arg = s * T::FRAC_PI_2();
    if s.im.abs() <= real::<T>(2.0) && sin_arg.sin().norm() < floor {
        return Err(Error::NearZero(format!(
            "zeta_logderiv at s = {s}: too close to a trivial zero"
        )));
    }
    let inner = zeta_em_deriv(w) / zeta_em(w);
    Ok(Complex::new(real::<T>(LN_TWO_PI), T::zero()) + cot(sin_arg) * T::FRAC_PI_2()
        - digamma(w)?
        - inner)
}
