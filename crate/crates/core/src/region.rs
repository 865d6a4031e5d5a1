//! Positivity regions of Re ξ′/ξ under hypothetical failures of the Riemann
//! hypothesis: one off-line zero, finitely many, or an infinite family with
//! a tail correction. Produces rectangular (σ, t) grids and exports them as
//! CSV or SVG.

use std::io::Write;
use std::path::Path;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::scalar::{gamma1, ln_over_two_pi, real, Real};

/// How an off-line zero family is modelled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scenario {
    /// Exactly one zero off the critical line.
    One,
    /// A finite family (n ≥ 2; the degenerate empty probe is allowed through
    /// [`HypotheticalZeroSet::probe`]).
    Finite,
    /// Infinitely many: explicit seed zeros plus a synthetic ordinate tail
    /// entering the ½/(t+γ̃)² correction.
    Infinite,
}

/// An off-critical-line zero β̃ + iγ̃ with 1/2 < β̃ < 1 and γ̃ > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OffLineZero<T> {
    pub beta: T,
    pub gamma: T,
}

/// User-supplied hypothetical zeros for the region scenarios.
#[derive(Debug, Clone)]
pub struct HypotheticalZeroSet<T> {
    zeros: Vec<OffLineZero<T>>,
    scenario: Scenario,
    /// Synthetic ordinates standing in for the rest of an infinite family;
    /// they feed only the ½/(t+γ̃)² correction, not the attraction terms.
    tail_ordinates: Vec<T>,
}

/// Default number of synthetic tail ordinates for the infinite scenario.
pub const DEFAULT_TAIL_CAP: usize = 100_000;

fn check_zero<T: Real>(z: &OffLineZero<T>) -> Result<()> {
    let half = real::<T>(0.5);
    if !(z.beta > half && z.beta < T::one()) || !(z.gamma > T::zero()) {
        return Err(Error::Domain(format!(
            "off-line zero needs beta in (1/2, 1) and gamma > 0, got ({}, {})",
            z.beta, z.gamma
        )));
    }
    Ok(())
}

/// Inverts the N(T) main term (u/2π) log(u/2πe) = n by Newton iteration.
fn ordinate_of_count<T: Real>(n: T) -> T {
    let two_pi = real::<T>(2.0) * T::PI();
    let mut u = if n > T::one() {
        // first guess: u ≈ 2πn / log n
        two_pi * n / n.ln().max(T::one())
    } else {
        real::<T>(20.0)
    };
    for _ in 0..60 {
        let f = u / two_pi * (ln_over_two_pi(u) - T::one()) - n;
        let df = ln_over_two_pi(u) / two_pi;
        let step = f / df;
        u = (u - step).max(real::<T>(15.0));
        if step.abs() < real::<T>(1.0e-9) * u {
            break;
        }
    }
    u
}

impl<T: Real> HypotheticalZeroSet<T> {
    /// Scenario I: a single off-line zero.
    pub fn one(beta: T, gamma: T) -> Result<Self> {
        let z = OffLineZero { beta, gamma };
        check_zero(&z)?;
        Ok(Self {
            zeros: vec![z],
            scenario: Scenario::One,
            tail_ordinates: Vec::new(),
        })
    }

    /// Scenario II: a finite family of n ≥ 2 off-line zeros.
    pub fn finite(zeros: Vec<OffLineZero<T>>) -> Result<Self> {
        if zeros.len() < 2 {
            return Err(Error::Domain(format!(
                "finite scenario needs n >= 2 zeros, got {}",
                zeros.len()
            )));
        }
        for z in &zeros {
            check_zero(z)?;
        }
        Ok(Self {
            zeros,
            scenario: Scenario::Finite,
            tail_ordinates: Vec::new(),
        })
    }

    /// The degenerate no-zero probe: a vacuous family whose region condition
    /// holds everywhere.
    pub fn probe() -> Self {
        Self {
            zeros: Vec::new(),
            scenario: Scenario::Finite,
            tail_ordinates: Vec::new(),
        }
    }

    /// Scenario III: explicit seed zeros extended by `tail_cap` synthetic
    /// ordinates spaced via the N(T) main term, which model the infinitely
    /// many remaining off-line ordinates inside the ½/(t+γ̃)² correction.
    pub fn infinite(zeros: Vec<OffLineZero<T>>, tail_cap: usize) -> Result<Self> {
        if zeros.is_empty() {
            return Err(Error::Domain(
                "infinite scenario needs at least one seed zero".into(),
            ));
        }
        for z in &zeros {
            check_zero(z)?;
        }
        let start = zeros
            .iter()
            .map(|z| z.gamma)
            .fold(gamma1::<T>(), T::max);
        let two_pi = real::<T>(2.0) * T::PI();
        let n0 = start / two_pi * (ln_over_two_pi(start) - T::one());
        let mut tail_ordinates = Vec::with_capacity(tail_cap);
        for k in 1..=tail_cap {
            tail_ordinates.push(ordinate_of_count(n0 + real::<T>(k as f64)));
        }
        Ok(Self {
            zeros,
            scenario: Scenario::Infinite,
            tail_ordinates,
        })
    }

    pub fn zeros(&self) -> &[OffLineZero<T>] {
        &self.zeros
    }

    pub fn scenario(&self) -> Scenario {
        self.scenario
    }

    pub fn tail_ordinates(&self) -> &[T] {
        &self.tail_ordinates
    }
}

const PROXIMITY: f64 = 1.0e-9;

fn proximity_violated<T: Real>(sigma: T, t: T, set: &HypotheticalZeroSet<T>) -> bool {
    let floor = real::<T>(PROXIMITY * PROXIMITY);
    set.zeros.iter().any(|z| {
        for beta in [z.beta, T::one() - z.beta] {
            for gamma in [z.gamma, -z.gamma] {
                let db = sigma - beta;
                let dg = t - gamma;
                if db * db + dg * dg < floor {
                    return true;
                }
            }
        }
        false
    })
}

/// Re Σ₂ at s = σ + it: for each zero the four symmetric terms at β̃ and
/// 1−β̃, each paired with ∓γ̃. Vanishes identically on σ = 1/2.
pub fn offline_contribution<T: Real>(
    sigma: T,
    t: T,
    set: &HypotheticalZeroSet<T>,
) -> Result<T> {
    if proximity_violated(sigma, t, set) {
        return Err(Error::Proximity(format!(
            "({sigma}, {t}) is within 1e-9 of a hypothetical zero"
        )));
    }
    Ok(offline_contribution_raw(sigma, t, set))
}

fn offline_contribution_raw<T: Real>(sigma: T, t: T, set: &HypotheticalZeroSet<T>) -> T {
    let mut sum = T::zero();
    for z in &set.zeros {
        let db1 = sigma - z.beta;
        let db2 = sigma - (T::one() - z.beta);
        for gamma in [z.gamma, -z.gamma] {
            let dg2 = (t - gamma) * (t - gamma);
            // the beta and 1-beta terms are added as one pair: on sigma = 1/2
            // they are exact floating-point negations and cancel to zero
            sum += db1 / (db1 * db1 + dg2) + db2 / (db2 * db2 + dg2);
        }
    }
    sum
}

/// Left and right sides of the region inequality:
///
/// lhs = Σₖ (σ−β̃ₖ)/((σ−β̃ₖ)²+(t−γ̃ₖ)²)   [− Σ ½/(t+γ̃)² in scenario III]
/// rhs = −c · 0.11 (σ−1/2) log(t/2π)
pub fn scenario_sides<T: Real>(
    sigma: T,
    t: T,
    set: &HypotheticalZeroSet<T>,
    c: T,
) -> Result<(T, T)> {
    let half = real::<T>(0.5);
    let two_pi = real::<T>(2.0) * T::PI();
    if !(sigma > half && sigma < T::one()) {
        return Err(Error::Domain(format!(
            "scenario sides need 1/2 < sigma < 1, got {sigma}"
        )));
    }
    if !(t > two_pi) {
        return Err(Error::Domain(format!("scenario sides need t > 2pi, got {t}")));
    }
    if !(c > T::zero() && c <= T::one()) {
        return Err(Error::Domain(format!("scenario sides need c in (0, 1], got {c}")));
    }
    if proximity_violated(sigma, t, set) {
        return Err(Error::Proximity(format!(
            "({sigma}, {t}) is within 1e-9 of a hypothetical zero"
        )));
    }
    Ok(scenario_sides_raw(sigma, t, set, c))
}

fn scenario_sides_raw<T: Real>(sigma: T, t: T, set: &HypotheticalZeroSet<T>, c: T) -> (T, T) {
    let half = real::<T>(0.5);
    let mut lhs = T::zero();
    for z in &set.zeros {
        let db = sigma - z.beta;
        let dg = t - z.gamma;
        lhs += db / (db * db + dg * dg);
    }
    if set.scenario == Scenario::Infinite {
        for &g in &set.tail_ordinates {
            let dp = t + g;
            lhs -= half / (dp * dp);
        }
        for z in &set.zeros {
            let dp = t + z.gamma;
            lhs -= half / (dp * dp);
        }
    }
    let rhs = -c * real::<T>(0.11) * (sigma - half) * ln_over_two_pi(t);
    (lhs, rhs)
}

/// Rectangular evaluation lattice: `steps` cells per axis, cell (i, j)
/// covering [lo + i·h, lo + (i+1)·h) and evaluated at its lower-left corner.
#[derive(Debug, Clone, Copy)]
pub struct GridSpec<T> {
    pub sigma_lo: T,
    pub sigma_hi: T,
    pub sigma_steps: usize,
    pub t_lo: T,
    pub t_hi: T,
    pub t_steps: usize,
}

impl<T: Real> GridSpec<T> {
    pub fn new(
        sigma_lo: T,
        sigma_hi: T,
        sigma_steps: usize,
        t_lo: T,
        t_hi: T,
        t_steps: usize,
    ) -> Result<Self> {
        let half = real::<T>(0.5);
        let two_pi = real::<T>(2.0) * T::PI();
        if sigma_steps < 2 || t_steps < 2 {
            return Err(Error::GridSpec(format!(
                "need at least 2 steps per axis, got {sigma_steps} x {t_steps}"
            )));
        }
        if !(sigma_lo > half && sigma_hi < T::one() && sigma_lo < sigma_hi) {
            return Err(Error::GridSpec(format!(
                "sigma range must satisfy 1/2 < lo < hi < 1, got [{sigma_lo}, {sigma_hi}]"
            )));
        }
        if !(t_lo > two_pi && t_lo < t_hi) {
            return Err(Error::GridSpec(format!(
                "t range must satisfy 2pi < lo < hi, got [{t_lo}, {t_hi}]"
            )));
        }
        Ok(Self {
            sigma_lo,
            sigma_hi,
            sigma_steps,
            t_lo,
            t_hi,
            t_steps,
        })
    }

    pub fn sigma_at(&self, i: usize) -> T {
        self.sigma_lo
            + (self.sigma_hi - self.sigma_lo) * real::<T>(i as f64)
                / real::<T>(self.sigma_steps as f64)
    }

    pub fn t_at(&self, j: usize) -> T {
        self.t_lo + (self.t_hi - self.t_lo) * real::<T>(j as f64) / real::<T>(self.t_steps as f64)
    }
}

/// One evaluated lattice cell.
#[derive(Debug, Clone, Copy)]
pub struct Cell<T> {
    pub lhs: T,
    pub rhs: T,
    pub satisfied: bool,
}

/// Evaluated grid; cells are stored row-major with t as the outer index.
#[derive(Debug, Clone)]
pub struct RegionGrid<T> {
    pub spec: GridSpec<T>,
    cells: Vec<Cell<T>>,
}

impl<T: Real> RegionGrid<T> {
    pub fn cells(&self) -> &[Cell<T>] {
        &self.cells
    }

    pub fn cell(&self, i: usize, j: usize) -> &Cell<T> {
        &self.cells[j * self.spec.sigma_steps + i]
    }

    pub fn unsatisfied_count(&self) -> usize {
        self.cells.iter().filter(|c| !c.satisfied).count()
    }
}

/// Evaluates the scenario inequality over the lattice. Cells within the
/// proximity floor of a hypothetical zero are marked unsatisfied, with both
/// sides recorded as the raw signed values where computable. `rhs_margin`
/// is an optional safety margin δ added to the right side.
pub fn compute_region<T: Real>(
    set: &HypotheticalZeroSet<T>,
    c: T,
    spec: &GridSpec<T>,
    rhs_margin: T,
) -> Result<RegionGrid<T>> {
    if !(c > T::zero() && c <= T::one()) {
        return Err(Error::Domain(format!("compute_region needs c in (0, 1], got {c}")));
    }
    let ns = spec.sigma_steps;
    let nt = spec.t_steps;
    let cells: Vec<Cell<T>> = (0..nt)
        .into_par_iter()
        .flat_map_iter(|j| {
            let t = spec.t_at(j);
            (0..ns).map(move |i| {
                let sigma = spec.sigma_at(i);
                let (lhs, raw_rhs) = scenario_sides_raw(sigma, t, set, c);
                let rhs = raw_rhs + rhs_margin;
                let satisfied =
                    !proximity_violated(sigma, t, set) && lhs.is_finite() && lhs > rhs;
                Cell { lhs, rhs, satisfied }
            })
        })
        .collect();
    Ok(RegionGrid { spec: *spec, cells })
}

/// Grid export formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Csv,
    Svg,
}

/// Writes the grid: CSV with header `sigma,t,lhs,rhs,satisfied` (one row per
/// cell, t-outer row-major, LF endings) or an SVG with gray satisfied cells
/// and white unsatisfied cells.
pub fn export_grid<T: Real>(grid: &RegionGrid<T>, format: ExportFormat, path: &Path) -> Result<()> {
    let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
    match format {
        ExportFormat::Csv => write_csv(grid, &mut out),
        ExportFormat::Svg => write_svg(grid, &mut out),
    }
}

fn write_csv<T: Real, W: Write>(grid: &RegionGrid<T>, out: &mut W) -> Result<()> {
    out.write_all(b"sigma,t,lhs,rhs,satisfied\n")?;
    let spec = &grid.spec;
    for j in 0..spec.t_steps {
        let t = spec.t_at(j);
        for i in 0..spec.sigma_steps {
            let cell = grid.cell(i, j);
            writeln!(
                out,
                "{},{},{},{},{}",
                spec.sigma_at(i),
                t,
                cell.lhs,
                cell.rhs,
                cell.satisfied
            )?;
        }
    }
    Ok(())
}

const SVG_PLOT: f64 = 640.0;
const SVG_MARGIN_LEFT: f64 = 80.0;
const SVG_MARGIN_BOTTOM: f64 = 60.0;
const SVG_MARGIN_TOP: f64 = 20.0;
const SVG_MARGIN_RIGHT: f64 = 20.0;

fn write_svg<T: Real, W: Write>(grid: &RegionGrid<T>, out: &mut W) -> Result<()> {
    let spec = &grid.spec;
    let (ns, nt) = (spec.sigma_steps, spec.t_steps);
    let width = SVG_MARGIN_LEFT + SVG_PLOT + SVG_MARGIN_RIGHT;
    let height = SVG_MARGIN_TOP + SVG_PLOT + SVG_MARGIN_BOTTOM;
    let cw = SVG_PLOT / ns as f64;
    let ch = SVG_PLOT / nt as f64;
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )?;
    writeln!(out, r#"<rect width="{width}" height="{height}" fill="white"/>"#)?;
    for j in 0..nt {
        // t grows upward in the plot
        let y = SVG_MARGIN_TOP + SVG_PLOT - (j + 1) as f64 * ch;
        for i in 0..ns {
            let fill = if grid.cell(i, j).satisfied { "#C0C0C0" } else { "#FFFFFF" };
            let x = SVG_MARGIN_LEFT + i as f64 * cw;
            writeln!(
                out,
                r#"<rect x="{x:.3}" y="{y:.3}" width="{cw:.3}" height="{ch:.3}" fill="{fill}"/>"#
            )?;
        }
    }
    writeln!(
        out,
        r#"<rect x="{SVG_MARGIN_LEFT}" y="{SVG_MARGIN_TOP}" width="{SVG_PLOT}" height="{SVG_PLOT}" fill="none" stroke="black"/>"#
    )?;
    let y_axis = SVG_MARGIN_TOP + SVG_PLOT;
    writeln!(
        out,
        r#"<text x="{}" y="{}" text-anchor="middle" font-size="16">sigma</text>"#,
        SVG_MARGIN_LEFT + SVG_PLOT / 2.0,
        y_axis + 40.0
    )?;
    writeln!(
        out,
        r#"<text x="20" y="{}" text-anchor="middle" font-size="16" transform="rotate(-90 20 {})">t</text>"#,
        SVG_MARGIN_TOP + SVG_PLOT / 2.0,
        SVG_MARGIN_TOP + SVG_PLOT / 2.0
    )?;
    writeln!(
        out,
        r#"<text x="{SVG_MARGIN_LEFT}" y="{}" text-anchor="middle" font-size="12">{}</text>"#,
        y_axis + 18.0,
        spec.sigma_lo
    )?;
    writeln!(
        out,
        r#"<text x="{}" y="{}" text-anchor="middle" font-size="12">{}</text>"#,
        SVG_MARGIN_LEFT + SVG_PLOT,
        y_axis + 18.0,
        spec.sigma_hi
    )?;
    writeln!(
        out,
        r#"<text x="{}" y="{y_axis}" text-anchor="end" font-size="12">{}</text>"#,
        SVG_MARGIN_LEFT - 6.0,
        spec.t_lo
    )?;
    writeln!(
        out,
        r#"<text x="{}" y="{}" text-anchor="end" font-size="12">{}</text>"#,
        SVG_MARGIN_LEFT - 6.0,
        SVG_MARGIN_TOP + 12.0,
        spec.t_hi
    )?;
    writeln!(out, "</svg>")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_zero() -> HypotheticalZeroSet<f64> {
        HypotheticalZeroSet::one(0.75, 1000.0).unwrap()
    }

    #[test]
    fn constructors_enforce_invariants() {
        assert!(HypotheticalZeroSet::one(0.4, 100.0).is_err());
        assert!(HypotheticalZeroSet::one(0.75, -2.0).is_err());
        assert!(HypotheticalZeroSet::finite(vec![OffLineZero { beta: 0.75, gamma: 100.0 }]).is_err());
        assert!(HypotheticalZeroSet::finite(vec![
            OffLineZero { beta: 0.75, gamma: 100.0 },
            OffLineZero { beta: 0.8, gamma: 200.0 },
        ])
        .is_ok());
        assert!(HypotheticalZeroSet::<f64>::infinite(vec![], 10).is_err());
    }

    #[test]
    fn contribution_vanishes_on_critical_line() {
        let set = one_zero();
        for &t in &[10.0, 500.0, 1000.0, 4321.5] {
            let v = offline_contribution(0.5, t, &set).unwrap();
            assert_eq!(v, 0.0, "exact pairwise cancellation at sigma = 1/2");
        }
    }

    #[test]
    fn contribution_signs_near_the_zero() {
        let set = one_zero();
        assert!(offline_contribution(0.6, 1000.0, &set).unwrap() < 0.0);
        assert!(offline_contribution(0.9, 1000.0, &set).unwrap() > 0.0);
    }

    #[test]
    fn contribution_antisymmetry() {
        let set = HypotheticalZeroSet::finite(vec![
            OffLineZero { beta: 0.77, gamma: 850.0 },
            OffLineZero { beta: 0.61, gamma: 1422.0 },
        ])
        .unwrap();
        for &(sig, t) in &[(0.62, 900.0), (0.86, 1400.0), (0.51, 77.0)] {
            let a: f64 = offline_contribution(sig, t, &set).unwrap();
            let b = offline_contribution(1.0 - sig, t, &set).unwrap();
            assert!((a + b).abs() < 1e-12, "quadruple sum antisymmetry: {a} vs {b}");
        }
    }

    #[test]
    fn probe_satisfies_everywhere() {
        let set = HypotheticalZeroSet::<f64>::probe();
        let (lhs, rhs) = scenario_sides(0.75, 100.0, &set, 1.0).unwrap();
        assert_eq!(lhs, 0.0);
        assert!(rhs < 0.0);
    }

    #[test]
    fn scenario_sides_match_hand_arithmetic() {
        let set = HypotheticalZeroSet::one(0.75, 5000.0).unwrap();
        // deep inside the exclusion blob
        let (lhs, rhs): (f64, f64) = scenario_sides(0.6, 5000.0, &set, 1.0).unwrap();
        assert!((lhs - (-1.0 / 0.15)).abs() < 1e-12);
        assert!(lhs < rhs);
        // far from the zero in t the attraction term is negligible
        let (lhs, rhs) = scenario_sides(0.6, 500.0, &set, 1.0).unwrap();
        assert!(lhs > rhs);
        assert!(scenario_sides(0.4, 500.0, &set, 1.0).is_err());
        assert!(scenario_sides(0.6, 1.0, &set, 1.0).is_err());
        assert!(scenario_sides(0.6, 500.0, &set, 0.0).is_err());
    }

    #[test]
    fn proximity_is_an_error_for_sides_and_unsatisfied_for_grids() {
        let set = HypotheticalZeroSet::one(0.75, 5000.0).unwrap();
        assert!(matches!(
            scenario_sides(0.75, 5000.0, &set, 1.0),
            Err(Error::Proximity(_))
        ));
        let spec = GridSpec::new(0.55, 0.95, 4, 4990.0, 5010.0, 4).unwrap();
        // lattice: sigma 0.55 + 0.1 i, t = 4990 + 5 j; (0.75, 5000) is hit at i=2, j=2
        let grid: RegionGrid<f64> = compute_region(&set, 1.0, &spec, 0.0).unwrap();
        assert!(!grid.cell(2, 2).satisfied);
        assert!(grid.cell(2, 2).lhs.is_nan());
    }

    #[test]
    fn infinite_scenario_subtracts_tail_correction() {
        let seed = vec![OffLineZero { beta: 0.75, gamma: 100.0 }];
        let inf = HypotheticalZeroSet::infinite(seed.clone(), 1000).unwrap();
        assert_eq!(inf.tail_ordinates().len(), 1000);
        // synthetic ordinates ascend and start above the seed
        let tail = inf.tail_ordinates();
        assert!(tail.windows(2).all(|w| w[0] < w[1]));
        assert!(tail[0] > 100.0);
        let mut fin = seed;
        fin.push(OffLineZero { beta: 0.6, gamma: 333.0 });
        let fin = HypotheticalZeroSet::finite(fin).unwrap();
        let (lhs_fin, _) = scenario_sides(0.8, 200.0, &fin, 1.0).unwrap();
        let (lhs_inf, _) = scenario_sides(0.8, 200.0, &inf, 1.0).unwrap();
        // same leading attraction term, strictly smaller lhs with the correction
        assert!(lhs_inf < lhs_fin);
    }

    #[test]
    fn grid_spec_validation() {
        assert!(GridSpec::new(0.55, 0.95, 1, 4000.0, 6000.0, 100).is_err());
        assert!(GridSpec::new(0.45, 0.95, 10, 4000.0, 6000.0, 10).is_err());
        assert!(GridSpec::new(0.55, 0.95, 10, 2.0, 6000.0, 10).is_err());
        let spec: GridSpec<f64> = GridSpec::new(0.55, 0.95, 100, 4000.0, 6000.0, 100).unwrap();
        assert_eq!(spec.sigma_at(0), 0.55);
        assert!((spec.t_at(50) - 5000.0).abs() < 1e-9);
    }

    #[test]
    fn csv_export_is_bit_stable() {
        let set = HypotheticalZeroSet::<f64>::probe();
        let spec = GridSpec::new(0.6, 0.8, 2, 100.0, 200.0, 2).unwrap();
        let grid = compute_region(&set, 1.0, &spec, 0.0).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("grid.csv");
        export_grid(&grid, ExportFormat::Csv, &path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[0], "sigma,t,lhs,rhs,satisfied");
        assert!(lines.iter().skip(1).all(|l| l.ends_with("true")));
        // row-major, t outer: sigma cycles fastest
        assert!(lines[1].starts_with("0.6,100"));
        assert!(lines[2].starts_with("0.7,100"));
        assert!(lines[3].starts_with("0.6,150"));
        assert!(!text.contains('\r'));
    }

    #[test]
    fn svg_export_has_cell_rectangles() {
        let set = HypotheticalZeroSet::one(0.75, 5000.0).unwrap();
        let spec = GridSpec::new(0.55, 0.95, 10, 4000.0, 6000.0, 10).unwrap();
        let grid = compute_region(&set, 1.0, &spec, 0.0).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("grid.svg");
        export_grid(&grid, ExportFormat::Svg, &path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.starts_with("<svg"));
        assert_eq!(text.matches("<rect").count(), 102); // 100 cells + background + frame
        let gray = text.matches("#C0C0C0").count();
        assert_eq!(gray, grid.cells().iter().filter(|c| c.satisfied).count());
        assert!(text.contains(">sigma</text>") && text.contains(">t</text>"));
    }

    #[test]
    fn export_to_unwritable_path_errors() {
        let set = HypotheticalZeroSet::<f64>::probe();
        let spec = GridSpec::new(0.6, 0.8, 2, 100.0, 200.0, 2).unwrap();
        let grid = compute_region(&set, 1.0, &spec, 0.0).unwrap();
        let err = export_grid(&grid, ExportFormat::Csv, Path::new("/nonexistent/dir/grid.csv"));
        assert!(matches!(err, Err(Error::Io(_))));
    }

    #[test]
    fn dilution_monotonicity_on_a_small_grid() {
        let set = HypotheticalZeroSet::one(0.75, 5000.0).unwrap();
        let spec = GridSpec::new(0.55, 0.95, 40, 4900.0, 5100.0, 41).unwrap();
        let g_small = compute_region(&set, 0.4, &spec, 0.0).unwrap();
        let g_large = compute_region(&set, 1.0, &spec, 0.0).unwrap();
        for (a, b) in g_small.cells().iter().zip(g_large.cells()) {
            assert!(!a.satisfied || b.satisfied, "satisfied(0.4) must imply satisfied(1.0)");
        }
    }
}
