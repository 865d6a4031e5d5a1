//! Zero-table ingestion, validation and queries: N(T) counting against the
//! explicit envelope, and the raw S₁/S₂ kernel sums.

use std::path::Path;

use num_complex::Complex;

use crate::bounds::KernelParams;
use crate::error::{Error, Result};
use crate::scalar::{gamma1, real, Real, GAMMA1};
use crate::special::zeta;
use crate::xi::inverse_square_tail_bound;

/// Validated ascending table of positive ordinates γ of critical-line zeros
/// 1/2 + iγ.
///
/// A table is treated as the complete initial segment of the zero sequence
/// up to its height: truncation tail bounds account for everything above the
/// last ordinate and for nothing below it.
#[derive(Debug, Clone)]
pub struct ZeroTable<T> {
    ordinates: Vec<T>,
    source_label: String,
}

/// N(T) measured against its main term and the explicit deviation bound.
#[derive(Debug, Clone, Copy)]
pub struct CountingReport<T> {
    pub t: T,
    pub n_of_t: usize,
    /// (T/2π) log(T/2πe) + 7/8
    pub main_term: T,
    /// N(T) − main term
    pub deviation: T,
    /// 0.110 log T + 0.290 log log T + 2.290 + 25/(48πT)
    pub bound: T,
    pub satisfied: bool,
}

/// Kernel sums S₁ = Σ 1/(a²+b²(t−γ)²) and S₂ = Σ 1/(a²+b²(t+γ)²) over the
/// table, with truncation tail bounds where t ≤ 0.8 · height makes the tail
/// envelope applicable.
#[derive(Debug, Clone, Copy)]
pub struct KernelSums<T> {
    pub s1: T,
    pub s2: T,
    pub s1_tail: Option<T>,
    pub s2_tail: Option<T>,
}

impl<T: Real> ZeroTable<T> {
    /// Builds a table from ordinates, enforcing positivity, strict ascent,
    /// and (for nonempty tables) that the sequence starts at γ₁.
    pub fn new(ordinates: Vec<T>, source_label: impl Into<String>) -> Result<Self> {
        for (i, &g) in ordinates.iter().enumerate() {
            if !(g > T::zero()) || !g.is_finite() {
                return Err(Error::Monotonicity {
                    line: i + 1,
                    msg: format!("ordinate {g} is not a positive finite number"),
                });
            }
            if i > 0 && g <= ordinates[i - 1] {
                return Err(Error::Monotonicity {
                    line: i + 1,
                    msg: format!("{g} does not exceed the previous ordinate {}", ordinates[i - 1]),
                });
            }
        }
        if let Some(&first) = ordinates.first() {
            if (first - gamma1::<T>()).abs() > real::<T>(1.0e-4) {
                return Err(Error::Domain(format!(
                    "first ordinate {first} is not within 1e-4 of gamma1 = {GAMMA1}"
                )));
            }
        }
        Ok(Self {
            ordinates,
            source_label: source_label.into(),
        })
    }

    /// A table with no ordinates; every zero then counts as tail.
    pub fn empty(source_label: impl Into<String>) -> Self {
        Self {
            ordinates: Vec::new(),
            source_label: source_label.into(),
        }
    }

    /// Parses the one-ordinate-per-line text format: optional surrounding
    /// whitespace, `#` comment lines, decimal ordinates.
    pub fn parse(text: &str, source_label: impl Into<String>) -> Result<Self> {
        let mut ordinates = Vec::new();
        let mut lines = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let value: f64 = line.parse().map_err(|e| Error::Parse {
                line: idx + 1,
                msg: format!("{line:?}: {e}"),
            })?;
            ordinates.push(real::<T>(value));
            lines.push(idx + 1);
        }
        if ordinates.is_empty() {
            return Err(Error::EmptyTable("no ordinates in input".into()));
        }
        // re-map constructor line indices onto source line numbers
        Self::new(ordinates, source_label).map_err(|e| match e {
            Error::Monotonicity { line, msg } => Error::Monotonicity {
                line: lines[line - 1],
                msg,
            },
            other => other,
        })
    }

    /// Loads and validates a zero table from a file.
    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text, path.display().to_string())
    }

    pub fn ordinates(&self) -> &[T] {
        &self.ordinates
    }

    pub fn count(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    /// Largest ordinate, i.e. the height the table is complete up to.
    pub fn height(&self) -> Option<T> {
        self.ordinates.last().copied()
    }

    pub fn source_label(&self) -> &str {
        &self.source_label
    }

    /// Number of ordinates ≤ T (a zero exactly at T is counted). Within the
    /// table range this is N(T).
    pub fn count_zeros_below(&self, t: T) -> Result<usize> {
        let height = self.height().unwrap_or_else(T::zero);
        if !(t > T::zero()) || t > height {
            return Err(Error::Domain(format!(
                "count_zeros_below needs 0 < T <= height ({height}), got {t}"
            )));
        }
        Ok(self.ordinates.partition_point(|&g| g <= t))
    }

    /// Measures |N(T) − (T/2π)log(T/2πe) − 7/8| against the explicit bound
    /// 0.110 log T + 0.290 log log T + 2.290 + 25/(48πT), valid for T ≥ e.
    pub fn verify_counting_bound(&self, t: T) -> Result<CountingReport<T>> {
        if t < T::E() {
            return Err(Error::Domain(format!(
                "counting bound needs T >= e, got {t}"
            )));
        }
        let n = self.count_zeros_below(t)?;
        let two_pi = real::<T>(2.0) * T::PI();
        let main_term = t / two_pi * (t / (two_pi * T::E())).ln() + real::<T>(0.875);
        let deviation = real::<T>(n as f64) - main_term;
        let bound = real::<T>(0.110) * t.ln() + real::<T>(0.290) * t.ln().ln()
            + real::<T>(2.290)
            + real::<T>(25.0) / (real::<T>(48.0) * T::PI() * t);
        Ok(CountingReport {
            t,
            n_of_t: n,
            main_term,
            deviation,
            bound,
            satisfied: deviation.abs() <= bound,
        })
    }

    /// S₁ and S₂ for the kernel 1/(a²+b²(t∓γ)²), truncated at the table
    /// height. Tail bounds are attached when t ≤ 0.8 · height; for larger t
    /// the truncated sums are still returned but no envelope applies.
    pub fn kernel_sum(&self, params: &KernelParams<T>) -> Result<KernelSums<T>> {
        let KernelParams { a, b, t, .. } = *params;
        if !(a > T::zero()) || !(b > T::zero()) {
            return Err(Error::Domain(format!(
                "kernel_sum needs a, b > 0, got a = {a}, b = {b}"
            )));
        }
        if t <= gamma1() {
            return Err(Error::Domain(format!(
                "kernel_sum needs t > gamma1, got t = {t}"
            )));
        }
        let mut s1 = T::zero();
        let mut s2 = T::zero();
        for &g in &self.ordinates {
            let dm = t - g;
            let dp = t + g;
            s1 += (a * a + b * b * dm * dm).recip();
            s2 += (a * a + b * b * dp * dp).recip();
        }
        let b2 = b * b;
        let (s1_tail, s2_tail) = match self.height() {
            Some(h) if t <= real::<T>(0.8) * h => (
                Some(inverse_square_tail_bound(h, t)? / b2),
                Some(inverse_square_tail_bound(h, -t)? / b2),
            ),
            _ => (None, None),
        };
        Ok(KernelSums {
            s1,
            s2,
            s1_tail,
            s2_tail,
        })
    }
}

/// Recomputes |ζ(1/2 + iγ)| for every table entry and returns the
/// (index, residual) pairs exceeding `tolerance`; an empty result means the
/// table passed.
pub fn validate_zero_table<T: Real>(
    table: &ZeroTable<T>,
    tolerance: T,
) -> Result<Vec<(usize, T)>> {
    if !(tolerance > T::zero()) {
        return Err(Error::Domain(format!(
            "validation tolerance must be positive, got {tolerance}"
        )));
    }
    let half = real::<T>(0.5);
    let mut offenders = Vec::new();
    for (i, &g) in table.ordinates().iter().enumerate() {
        let residual = zeta(Complex::new(half, g))?.norm();
        if residual > tolerance {
            offenders.push((i, residual));
        }
    }
    Ok(offenders)
}
