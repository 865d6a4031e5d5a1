//! Independent numerical integration of the two kernel integrals
//! ∫ log(u/2π) / (a² + b²(u∓t)²) du that anchor the envelope checks.
//!
//! This is the brute-force oracle the verification layer compares its
//! closed-form bounds against, so it stays deliberately self-contained:
//! adaptive Simpson with forced subdivision at the kernel peak, plus an
//! exact elementary antiderivative for the far tail.

use crate::bounds::KernelParams;
use crate::error::{Error, Result};
use crate::scalar::{ln_over_two_pi, real, Real};

/// Which kernel the integrand carries: `Minus` is 1/(a²+b²(u−t)²) with its
/// peak at u = t, `Plus` is 1/(a²+b²(u+t)²) with the peak at u = −t.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelSign {
    Minus,
    Plus,
}

impl KernelSign {
    fn peak<T: Real>(self, t: T) -> T {
        match self {
            KernelSign::Minus => t,
            KernelSign::Plus => -t,
        }
    }
}

/// Outcome of a kernel integration.
#[derive(Debug, Clone, Copy)]
pub struct IntegralResult<T> {
    /// Integral value, including the analytic far-tail term for infinite
    /// upper limits.
    pub value: T,
    /// Accumulated quadrature error estimate.
    pub abs_error_estimate: T,
    /// Finite upper limit the quadrature actually ran to.
    pub cutoff: T,
    /// Bound on the error of the analytic far-tail term (zero for finite
    /// upper limits).
    pub tail_bound: T,
}

const MAX_DEPTH: u32 = 40;
const ABS_FLOOR: f64 = 1.0e-14;
const REL_TOL: f64 = 1.0e-11;

/// One Simpson step over [a, b] with midpoint m.
fn simpson_estimate<T: Real>(fa: T, fm: T, fb: T, width: T) -> T {
    width / real::<T>(6.0) * (fa + real::<T>(4.0) * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adapt<T: Real, F: Fn(T) -> T>(
    f: &F,
    a: T,
    fa: T,
    b: T,
    fb: T,
    m: T,
    fm: T,
    whole: T,
    tol: T,
    depth: u32,
    err: &mut T,
) -> Result<T> {
    let lm = (a + m) * real::<T>(0.5);
    let rm = (m + b) * real::<T>(0.5);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson_estimate(fa, flm, fm, m - a);
    let right = simpson_estimate(fm, frm, fb, b - m);
    let delta = left + right - whole;
    let fifteen = real::<T>(15.0);
    if delta.abs() <= fifteen * tol {
        *err += delta.abs() / fifteen;
        return Ok(left + right + delta / fifteen);
    }
    if depth >= MAX_DEPTH {
        return Err(Error::Convergence(format!(
            "refinement depth {MAX_DEPTH} exhausted on [{a}, {b}]"
        )));
    }
    let child_tol = (tol * real::<T>(0.5)).max(real::<T>(ABS_FLOOR));
    let l = adapt(f, a, fa, m, fm, lm, flm, left, child_tol, depth + 1, err)?;
    let r = adapt(f, m, fm, b, fb, rm, frm, right, child_tol, depth + 1, err)?;
    Ok(l + r)
}

fn run_pass<T: Real, F: Fn(T) -> T>(f: &F, pts: &[T], scale: T) -> Result<(T, T)> {
    let tol_total = (scale * real::<T>(REL_TOL)).max(real::<T>(ABS_FLOOR));
    let tol_seg = tol_total / real::<T>((pts.len() - 1) as f64);
    let mut value = T::zero();
    let mut err = T::zero();
    for w in pts.windows(2) {
        let (a, b) = (w[0], w[1]);
        let m = (a + b) * real::<T>(0.5);
        let (fa, fm, fb) = (f(a), f(m), f(b));
        let whole = simpson_estimate(fa, fm, fb, b - a);
        value += adapt(f, a, fa, b, fb, m, fm, whole, tol_seg, 0, &mut err)?;
    }
    Ok((value, err))
}

/// Adaptive Simpson over [lo, hi] with forced subdivision at `breaks`.
///
/// The relative tolerance needs a magnitude to anchor to; a coarse Simpson
/// sweep can misjudge it badly on long decaying segments, so the pass is
/// rerun with the first pass's own value as the anchor whenever the two
/// disagree by more than a factor of two.
fn integrate<T: Real, F: Fn(T) -> T>(f: &F, lo: T, hi: T, breaks: &[T]) -> Result<(T, T)> {
    if lo == hi {
        return Ok((T::zero(), T::zero()));
    }
    let mut pts = vec![lo];
    for &p in breaks {
        if p > lo && p < hi {
            pts.push(p);
        }
    }
    pts.push(hi);
    pts.sort_by(|x, y| x.partial_cmp(y).expect("finite breakpoints"));
    pts.dedup();

    let mut scale = T::zero();
    for w in pts.windows(2) {
        let m = (w[0] + w[1]) * real::<T>(0.5);
        scale += simpson_estimate(f(w[0]), f(m), f(w[1]), w[1] - w[0]).abs();
    }
    let (value, err) = run_pass(f, &pts, scale)?;
    let anchor = value.abs();
    if scale > real::<T>(2.0) * anchor || scale < real::<T>(0.5) * anchor {
        return run_pass(f, &pts, anchor);
    }
    Ok((value, err))
}

/// Exact value of ∫_{u0}^∞ log(u/2π) / (u − c)² du for u0 > max(c, 0), c ≠ u0.
///
/// Integration by parts gives log(u0/2π)/(u0−c) + (1/c)·log(u0/(u0−c)); the
/// second factor is evaluated through `ln_1p` so the c → 0 limit is stable.
fn log_over_square_tail<T: Real>(u0: T, c: T) -> T {
    let head = ln_over_two_pi(u0) / (u0 - c);
    let kappa = if c.is_zero() {
        u0.recip()
    } else {
        -(-c / u0).ln_1p() / c
    };
    head + kappa
}

fn validate<T: Real>(params: &KernelParams<T>) -> Result<()> {
    if !(params.b > T::zero()) || params.a < T::zero() || !(params.alpha > T::zero()) {
        return Err(Error::Domain(format!(
            "kernel integral requires b > 0, a >= 0, alpha > 0; got a = {}, b = {}, alpha = {}",
            params.a, params.b, params.alpha
        )));
    }
    Ok(())
}

fn check_peak<T: Real>(params: &KernelParams<T>, sign: KernelSign, lo: T, hi: T) -> Result<()> {
    let c = sign.peak(params.t);
    if params.a.is_zero() && c >= lo && c <= hi {
        return Err(Error::Domain(format!(
            "a > 0 required: the kernel peak u = {c} lies inside [{lo}, {hi}]"
        )));
    }
    Ok(())
}

fn run<T: Real>(
    params: &KernelParams<T>,
    sign: KernelSign,
    lo: T,
    hi: T,
) -> Result<(T, T)> {
    let (a, b) = (params.a, params.b);
    let c = sign.peak(params.t);
    let f = move |u: T| ln_over_two_pi(u) / (a * a + b * b * (u - c) * (u - c));
    let hw = if a.is_zero() { T::one() } else { a / b };
    integrate(&f, lo, hi, &[c - hw, c, c + hw])
}

/// ∫_α^{upper} log(u/2π) / (a² + b²(u∓t)²) du.
///
/// `upper = None` means the improper integral to +∞: the quadrature runs to
/// `cutoff = max(10|t|, α + 1e6)` and the remainder beyond the cutoff is
/// replaced by the exact integral of the `1/(b²(u∓t)²)` majorant, whose
/// deviation from the true remainder is returned as `tail_bound`.
pub fn kernel_integral<T: Real>(
    params: &KernelParams<T>,
    sign: KernelSign,
    upper: Option<T>,
) -> Result<IntegralResult<T>> {
    validate(params)?;
    let alpha = params.alpha;
    if let Some(hi) = upper {
        if hi < alpha {
            return Err(Error::Domain(format!(
                "upper limit {hi} below alpha = {alpha}"
            )));
        }
        check_peak(params, sign, alpha, hi)?;
        let (value, err) = run(params, sign, alpha, hi)?;
        return finished(IntegralResult {
            value,
            abs_error_estimate: err,
            cutoff: hi,
            tail_bound: T::zero(),
        });
    }

    let t = params.t;
    let cutoff = (real::<T>(10.0) * t.abs()).max(alpha + real::<T>(1.0e6));
    check_peak(params, sign, alpha, cutoff)?;
    let (body, err) = run(params, sign, alpha, cutoff)?;
    let c = sign.peak(t);
    let b2 = params.b * params.b;
    let tail_term = log_over_square_tail(cutoff, c) / b2;
    // Replacing a²+b²(u−c)² by b²(u−c)² overshoots by at most
    // (a²/b⁴) ∫ log(u/2π)/(u−c)⁴ du.
    let a2 = params.a * params.a;
    let umc = cutoff - c;
    let ub = cutoff - c.max(T::zero());
    let three = real::<T>(3.0);
    let tail_bound = a2 / (b2 * b2)
        * (ln_over_two_pi(cutoff) / (three * umc * umc * umc)
            + (real::<T>(9.0) * ub * ub * ub).recip());

    finished(IntegralResult {
        value: body + tail_term,
        abs_error_estimate: err,
        cutoff,
        tail_bound,
    })
}

/// Enforces the result invariant: estimated error plus tail bound inside the
/// 1e-8 relative budget.
fn finished<T: Real>(result: IntegralResult<T>) -> Result<IntegralResult<T>> {
    let budget = real::<T>(1.0e-8) * T::one().max(result.value.abs());
    if result.abs_error_estimate + result.tail_bound > budget {
        return Err(Error::Convergence(format!(
            "error budget exceeded: estimate {:e} + tail {:e} > {budget:e}",
            result.abs_error_estimate, result.tail_bound
        )));
    }
    Ok(result)
}

/// ∫_{lo}^{hi} log(u/2π) / (a² + b²(u∓t)²) du over a finite window
/// [lo, hi] ⊆ [α, ∞).
pub fn finite_kernel_integral<T: Real>(
    params: &KernelParams<T>,
    sign: KernelSign,
    lo: T,
    hi: T,
) -> Result<IntegralResult<T>> {
    validate(params)?;
    if lo < params.alpha || hi < lo || !hi.is_finite() {
        return Err(Error::Domain(format!(
            "finite kernel integral needs alpha <= lo <= hi < inf; got [{lo}, {hi}], alpha = {}",
            params.alpha
        )));
    }
    check_peak(params, sign, lo, hi)?;
    let (value, err) = run(params, sign, lo, hi)?;
    finished(IntegralResult {
        value,
        abs_error_estimate: err,
        cutoff: hi,
        tail_bound: T::zero(),
    })
}
