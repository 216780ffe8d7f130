//! Exact checks of the determinant identities, each producing a
//! [`CheckReport`].

mod report;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};
use std::time::Instant;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::{pow_rational, rat, ratio, Rational};
use crate::error::{Error, Result};
use crate::formulas::Catalog;
use crate::kks::{first_column_ones, kks_det, kks_matrix, shift_factor, KksParams};
use crate::linalg::ExactMatrix;
use crate::paths::{lgv_det, lgv_series, PathFamilyParams, PathKind};
use crate::series::{Series2D, SeriesV};
use crate::shapes::{aztec_type1, aztec_type2};
use crate::tilings::{type_histogram, weight_of_histogram, TypeHistogram, WeightTriple, DEFAULT_CELL_CAP};

pub use report::{CheckReport, CheckStatus};

type Params = BTreeMap<String, String>;

fn params(pairs: &[(&str, String)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// Run `body`, turning errors into failed (or, for caps, skipped) reports
/// and stamping the wall time.
fn timed(id: &str, p: Params, body: impl FnOnce(CheckReport) -> Result<CheckReport>) -> CheckReport {
    let start = Instant::now();
    let base = CheckReport::new(id, p);
    let mut report = match body(base.clone()) {
        Ok(r) => r,
        Err(e @ Error::CapExceeded { .. }) => base.skipped(e.to_string()),
        Err(e) => base.failed(&e),
    };
    report.millis = start.elapsed().as_millis() as u64;
    report
}

type HistogramCache = Mutex<HashMap<(u64, u64, usize, PathKind), Arc<TypeHistogram>>>;

fn histogram_cache() -> &'static HistogramCache {
    static CACHE: OnceLock<HistogramCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Domino-type histogram of the domain belonging to a path family, or
/// `None` when the domain is above `cap` cells.
fn family_histogram(p: &PathFamilyParams, cap: usize) -> Result<Option<Arc<TypeHistogram>>> {
    let key = (p.s, p.r, p.n, p.kind);
    if let Some(h) = histogram_cache().lock().expect("cache lock").get(&key) {
        return Ok(Some(h.clone()));
    }
    let lambda = p.partition();
    let domain = match p.kind {
        PathKind::Delannoy => aztec_type1(&lambda),
        PathKind::HDelannoy => aztec_type2(&lambda),
    };
    if domain.len() > cap {
        return Ok(None);
    }
    let h = Arc::new(type_histogram(&domain, cap)?);
    histogram_cache().lock().expect("cache lock").insert(key, h.clone());
    Ok(Some(h))
}

fn main_check(id: &str, kind: PathKind, m: i64, l: &Rational, a: i64, n: usize, tiling_cap: usize) -> CheckReport {
    let p = params(&[("m", m.to_string()), ("l", l.to_string()), ("a", a.to_string()), ("n", n.to_string())]);
    timed(id, p, |report| {
        if m < 1 || a < 0 {
            return Ok(report.skipped("needs m >= 1 and a >= 0"));
        }
        let family = PathFamilyParams::new(m as u64 - 1, a as u64, n, kind);
        let w = WeightTriple::shifted(l);
        let lgv = lgv_det(&family, &w);
        let rhs = match kind {
            PathKind::Delannoy => kks_det(&KksParams::delannoy_family(m, l.clone(), a, n))? / rat(2),
            PathKind::HDelannoy => kks_det(&KksParams::h_delannoy_family(m, l.clone(), a, n))?,
        };
        let mut report = report;
        if let Some(h) = family_histogram(&family, tiling_cap)? {
            let tilings = weight_of_histogram(&h, &w)?;
            let agrees = tilings == lgv;
            report = report.param("tilings", if agrees { "agree".to_string() } else { format!("differ: {tilings}") });
            if !agrees {
                return Ok(report.compare(tilings, rhs));
            }
        }
        Ok(report.compare(lgv, rhs))
    })
}

/// Delannoy families against half the binomial determinant, and against
/// the weighted tiling count when the domain has at most `DEFAULT_CELL_CAP`
/// cells.
pub fn check_main_d(m: i64, l: &Rational, a: i64, n: usize) -> CheckReport {
    main_check("main.D", PathKind::Delannoy, m, l, a, n, DEFAULT_CELL_CAP)
}

/// H-Delannoy families against the binomial determinant.
pub fn check_main_h(m: i64, l: &Rational, a: i64, n: usize) -> CheckReport {
    main_check("main.H", PathKind::HDelannoy, m, l, a, n, DEFAULT_CELL_CAP)
}

pub fn check_main_d_capped(m: i64, l: &Rational, a: i64, n: usize, tiling_cap: usize) -> CheckReport {
    main_check("main.D", PathKind::Delannoy, m, l, a, n, tiling_cap)
}

pub fn check_main_h_capped(m: i64, l: &Rational, a: i64, n: usize, tiling_cap: usize) -> CheckReport {
    main_check("main.H", PathKind::HDelannoy, m, l, a, n, tiling_cap)
}

/// Product formula against its linked determinant and path count.
pub fn check_formula(id: &str, n: usize, overrides: &BTreeMap<String, i64>) -> Vec<CheckReport> {
    let mut p = params(&[("n", n.to_string())]);
    for (k, v) in overrides {
        p.insert(k.clone(), v.to_string());
    }
    let formula = match Catalog::builtin().get(id) {
        Ok(f) => f,
        Err(e) => return vec![CheckReport::new(&format!("formula.{id}"), p).failed(&e)],
    };
    let mut out = Vec::new();
    out.push(timed(&format!("formula.{id}.det"), p.clone(), |report| {
        let value = formula.eval(n, overrides)?;
        match formula.kks_params(n, overrides)? {
            Some((kp, scale)) => Ok(report.compare(scale * kks_det(&kp)?, value)),
            None => Ok(report.skipped("no linked determinant")),
        }
    }));
    out.push(timed(&format!("formula.{id}.paths"), p, |report| {
        let value = formula.eval(n, overrides)?;
        match formula.path_params(n, overrides)? {
            Some((fp, w, scale)) => Ok(report.compare(scale * lgv_det(&fp, &w), value)),
            None => Ok(report.skipped("no linked path family")),
        }
    }));
    out
}

/// For `1 <= n <= n_max`: both conjectured determinants against their
/// products, and fraction-free elimination against the modular method.
pub fn check_conjectures(n_max: usize) -> Vec<CheckReport> {
    let mut jobs = Vec::new();
    for n in 1..=n_max {
        for id in ["WH31", "WD33"] {
            jobs.push((id, n));
        }
    }
    let mut out: Vec<CheckReport> = jobs
        .par_iter()
        .flat_map_iter(|&(id, n)| {
            let p = params(&[("n", n.to_string())]);
            let kp = if id == "WH31" { KksParams::wh31(n) } else { KksParams::wd33(n) };
            let matrix = kks_matrix(&kp);
            let det = matrix.as_ref().map(|m| m.det_bareiss()).map_err(Clone::clone);
            let product = timed(&format!("conjecture.{id}"), p.clone(), |report| {
                let value = Catalog::builtin().get(id)?.eval(n, &BTreeMap::new())?;
                Ok(report.compare(det.clone()?, value))
            });
            let crt = timed(&format!("conjecture.{id}.modular"), p, |report| {
                Ok(report.compare(matrix?.det_modular()?, det?))
            });
            [product, crt]
        })
        .collect();
    sort_reports(&mut out);
    out
}

/// Weights `(c1, (l-1) c2, c1 c2)` against `(1, l-1, 1)`: the determinant
/// picks up `c1^{|lambda|} c2^{C(n,2)}`, with `C(n+1,2)` for H-Delannoy
/// families.
pub fn check_scaling(s: u64, r: u64, n: usize, c1: &Rational, c2: &Rational, l: &Rational) -> Vec<CheckReport> {
    let p = params(&[
        ("s", s.to_string()),
        ("r", r.to_string()),
        ("n", n.to_string()),
        ("c1", c1.to_string()),
        ("c2", c2.to_string()),
        ("l", l.to_string()),
    ]);
    let lm1 = l - Rational::one();
    let scaled = WeightTriple::new(c1.clone(), &lm1 * c2, c1 * c2);
    let base = WeightTriple::shifted(l);
    let pairs = (n * n.saturating_sub(1) / 2) as i64;
    let size = s as i64 * pairs + r as i64 * n as i64;
    [(PathKind::Delannoy, "scaling.D", n as i64), (PathKind::HDelannoy, "scaling.H", n as i64 + 1)]
        .into_iter()
        .map(|(kind, id, rows)| {
            timed(id, p.clone(), |report| {
                if c1.is_zero() || c2.is_zero() {
                    return Ok(report.skipped("scalars must be nonzero"));
                }
                let family = PathFamilyParams::new(s, r, n, kind);
                let factor = pow_rational(c1, size)? * pow_rational(c2, rows * (rows - 1) / 2)?;
                Ok(report.compare(lgv_det(&family, &scaled), factor * lgv_det(&family, &base)))
            })
        })
        .collect()
}

/// The binomial (`w = (1,1,0)`) and central (`w = (1,0,1)`) specializations
/// for every size up to `n`, and the column-shift matrix identity.
pub fn check_epilogue(s: u64, r: u64, n: usize, b: i64, rho: i64) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let (si, ri) = (s as i64, r as i64);
    let binom_w = WeightTriple::from_i64(1, 1, 0);
    let central_w = WeightTriple::from_i64(1, 0, 1);
    for k in 1..=n {
        let p = params(&[
            ("s", s.to_string()),
            ("r", r.to_string()),
            ("n", k.to_string()),
            ("b", b.to_string()),
            ("rho", rho.to_string()),
        ]);
        let power = pow_rational(&rat(si + 1), (k * (k - 1) / 2) as i64).expect("positive base");
        let d = PathFamilyParams::new(s, r, k, PathKind::Delannoy);
        let h = PathFamilyParams::new(s, r, k, PathKind::HDelannoy);

        out.push(timed("epilogue.binomial.D", p.clone(), |report| {
            let det = lgv_det(&d, &binom_w);
            let kks = kks_det(&KksParams::new(1, rat(si + 2), 0, 0, ri, ri, k))? / rat(2);
            if det != kks {
                return Ok(report.compare(det, kks));
            }
            Ok(report.compare(det, power.clone()))
        }));
        out.push(timed("epilogue.binomial.H", p.clone(), |report| Ok(report.compare(lgv_det(&h, &binom_w), power.clone()))));
        out.push(timed("epilogue.central.D", p.clone(), |report| {
            let det = lgv_det(&d, &central_w);
            let shifted = kks_det(&KksParams::new(si + 1, rat(1), ri + 2 * rho, b, ri + 2 * rho, ri, k))?;
            let half = kks_det(&KksParams::new(si + 1, rat(1), ri, b, ri, ri, k))? / rat(2);
            if det != shifted {
                return Ok(report.param("against", "shifted").compare(det, shifted));
            }
            Ok(report.compare(det, half))
        }));
        out.push(timed("epilogue.central.H", p.clone(), |report| {
            if r < 1 {
                return Ok(report.skipped("needs r >= 1"));
            }
            let det = lgv_det(&h, &central_w);
            let shifted =
                kks_det(&KksParams::new(si + 1, rat(1), ri + 2 * rho - 1, b, ri + 2 * rho - 1, ri - 1, k))?;
            let half = kks_det(&KksParams::new(si + 1, rat(1), ri - 1, b, ri - 1, ri - 1, k))? / rat(2);
            if det != shifted {
                return Ok(report.param("against", "shifted").compare(det, shifted));
            }
            Ok(report.compare(det, half))
        }));
        out.push(timed("epilogue.column_shift", p, |report| {
            let base = kks_matrix(&KksParams::new(si + 1, rat(1), ri, b, ri, ri, k))?;
            let shifted = kks_matrix(&KksParams::new(si + 1, rat(1), ri + 2 * rho, b, ri + 2 * rho, ri, k))?;
            let ones = first_column_ones(k);
            let lhs = ExactMatrix::from_fn(k, |i, j| base.get(i, j) - ones.get(i, j));
            let rhs = &shifted * &shift_factor(rho, k);
            let mismatches = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).filter(|&(i, j)| lhs.get(i, j) != rhs.get(i, j)).count();
            Ok(report.param("entries", k * k).compare(rat(mismatches as i64), rat(0)))
        }));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HolonomicMatrix {
    Wh31,
    Wd33,
    Custom(KksParams),
}

impl HolonomicMatrix {
    pub fn parse(name: &str) -> Result<Self> {
        match name.to_ascii_uppercase().as_str() {
            "WH31" => Ok(HolonomicMatrix::Wh31),
            "WD33" => Ok(HolonomicMatrix::Wd33),
            other => Err(Error::InvalidParameter(format!("unknown matrix `{other}`"))),
        }
    }

    fn label(&self) -> String {
        match self {
            HolonomicMatrix::Wh31 => "WH31".into(),
            HolonomicMatrix::Wd33 => "WD33".into(),
            HolonomicMatrix::Custom(p) => format!("({},{};{},{},{},{})", p.m, p.l, p.a, p.b, p.c, p.d),
        }
    }

    /// Rows indexed by the column index of the binomial matrix.
    pub fn matrix(&self, n: usize) -> Result<ExactMatrix> {
        let p = match self {
            HolonomicMatrix::Wh31 => KksParams::wh31(n),
            HolonomicMatrix::Wd33 => KksParams::wd33(n),
            HolonomicMatrix::Custom(p) => p.with_n(n),
        };
        Ok(kks_matrix(&p)?.transpose())
    }

    fn formula_id(&self) -> Option<&'static str> {
        match self {
            HolonomicMatrix::Wh31 => Some("WH31"),
            HolonomicMatrix::Wd33 => Some("WD33"),
            HolonomicMatrix::Custom(_) => None,
        }
    }
}

/// Normalized cofactors `c_j` of the last row of `A_n`: the last one is 1,
/// earlier rows annihilate them, and the last row pairs with them to
/// `det A_n / det A_{n-1}`.
pub fn check_holonomic(matrix: &HolonomicMatrix, n: usize) -> Vec<CheckReport> {
    let p = params(&[("matrix", matrix.label()), ("n", n.to_string())]);
    let prepared = matrix.matrix(n).and_then(|a| {
        let c = a.normalized_cofactors()?;
        Ok((a, c))
    });
    let (a, c) = match prepared {
        Ok(x) => x,
        Err(e) => return vec![CheckReport::new("holonomic", p).failed(&e)],
    };
    let mut out = vec![timed("holonomic.H1", p.clone(), |report| Ok(report.compare(c[n - 1].clone(), Rational::one())))];
    if n == 1 {
        return out;
    }
    for i in 0..n - 1 {
        out.push(timed("holonomic.H2", p.clone(), |report| {
            Ok(report.param("row", i).compare(a.row_dot(i, &c), Rational::zero()))
        }));
    }
    out.push(timed("holonomic.H3", p, |report| {
        let expected = match matrix.formula_id() {
            Some(id) => Catalog::builtin().get(id)?.ratio(n, &BTreeMap::new())?,
            None => {
                let prev = a.leading(n - 1).det();
                if prev.is_zero() {
                    return Err(Error::VanishingMinor);
                }
                a.det() / prev
            }
        };
        Ok(report.compare(a.row_dot(n - 1, &c), expected))
    }));
    out
}

/// `(1 - l v^2) / ((1 - v)(1 - l v))` and `1 / ((1 - v)(1 - l v))`.
fn series_factors(l: &Rational, order: usize) -> Result<(SeriesV, SeriesV)> {
    let one = Rational::one();
    let denom = SeriesV::polynomial(&[one.clone(), -(&one + l), l.clone()], order);
    let beta = denom.recip()?;
    let alpha = SeriesV::polynomial(&[one, Rational::zero(), -l.clone()], order).mul(&beta)?;
    Ok((alpha, beta))
}

fn first_mismatch(lhs: &Series2D, rhs: &Series2D) -> Option<(usize, usize)> {
    let (nu, nv) = lhs.orders();
    (0..nu).flat_map(|i| (0..nv).map(move |j| (i, j))).find(|&(i, j)| lhs.coeff(i, j) != rhs.coeff(i, j))
}

fn series_report(report: CheckReport, lhs: &Series2D, rhs: &Series2D) -> CheckReport {
    let (nu, nv) = lhs.orders();
    let report = report.param("coefficients", nu * nv);
    match first_mismatch(lhs, rhs) {
        None => {
            let mut r = report;
            r.status = CheckStatus::Pass;
            r
        }
        Some((i, j)) => report.param("at", format!("u^{i} v^{j}")).compare(lhs.coeff(i, j).clone(), rhs.coeff(i, j).clone()),
    }
}

/// `alpha(v) P(u, v beta(v))` against the binomial generating function
/// minus `1/(1-u)`, coefficient by coefficient up to `truncation`.
pub fn check_series_relation(m: i64, l: &Rational, a: i64, truncation: usize) -> CheckReport {
    let p = params(&[("m", m.to_string()), ("l", l.to_string()), ("a", a.to_string()), ("truncation", truncation.to_string())]);
    timed("series.D", p, |report| {
        if m < 1 || a < 0 {
            return Ok(report.skipped("needs m >= 1 and a >= 0"));
        }
        let w = WeightTriple::shifted(l);
        let paths = lgv_series(m as u64 - 1, a as u64, PathKind::Delannoy, &w, truncation);
        let (alpha, beta) = series_factors(l, truncation)?;
        let lhs = paths.substitute_v(&beta)?.scale_by_v(&alpha)?;
        let kp = KksParams::delannoy_family(m, l.clone(), a, truncation);
        let mut err = None;
        let rhs = Series2D::from_fn(truncation, truncation, |i, j| {
            let e = crate::kks::kks_entry(&kp, i, j).unwrap_or_else(|e| {
                err = Some(e);
                Rational::zero()
            });
            if j == 0 {
                e - Rational::one()
            } else {
                e
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        Ok(series_report(report, &lhs, &rhs))
    })
}

/// The H-Delannoy analogue with `alpha = (1 - l v^2) / ((1-v)(1-lv))^2`.
pub fn check_series_relation_hat(m: i64, l: &Rational, a: i64, truncation: usize) -> CheckReport {
    let p = params(&[("m", m.to_string()), ("l", l.to_string()), ("a", a.to_string()), ("truncation", truncation.to_string())]);
    timed("series.H", p, |report| {
        if m < 1 || a < 0 {
            return Ok(report.skipped("needs m >= 1 and a >= 0"));
        }
        let w = WeightTriple::shifted(l);
        let paths = lgv_series(m as u64 - 1, a as u64, PathKind::HDelannoy, &w, truncation);
        let (alpha, beta) = series_factors(l, truncation)?;
        let alpha_hat = alpha.mul(&beta)?;
        let lhs = paths.substitute_v(&beta)?.scale_by_v(&alpha_hat)?;
        let kp = KksParams::h_delannoy_family(m, l.clone(), a, truncation);
        let mut err = None;
        let rhs = Series2D::from_fn(truncation, truncation, |i, j| {
            crate::kks::kks_entry(&kp, i, j).unwrap_or_else(|e| {
                err = Some(e);
                Rational::zero()
            })
        });
        if let Some(e) = err {
            return Err(e);
        }
        Ok(series_report(report, &lhs, &rhs))
    })
}

/// Determinant of the leading `n x n` coefficient block is unchanged by
/// `F -> alpha(v) F(u, v beta(v))` and by `F -> alpha(u) F(u beta(u), v)`.
pub fn check_action_invariance(f: &Series2D, alpha: &SeriesV, beta: &SeriesV, n: usize) -> Vec<CheckReport> {
    let p = params(&[("n", n.to_string())]);
    let right = timed("series.right_action", p.clone(), |report| {
        let before = f.coeff_matrix(n)?.det();
        let after = f.substitute_v(beta)?.scale_by_v(alpha)?.coeff_matrix(n)?.det();
        Ok(report.compare(after, before))
    });
    let left = timed("series.left_action", p, |report| {
        let before = f.coeff_matrix(n)?.det();
        let after = f.substitute_u(beta)?.scale_by_u(alpha)?.coeff_matrix(n)?.det();
        Ok(report.compare(after, before))
    });
    vec![right, left]
}

/// Parameter grid for [`check_all`].
#[derive(Clone, Debug)]
pub struct Grid {
    pub m: Vec<i64>,
    pub l: Vec<i64>,
    pub a: Vec<i64>,
    pub n_max: usize,
    pub tiling_cap: usize,
}

impl Default for Grid {
    fn default() -> Self {
        Grid { m: vec![1, 2, 3, 4], l: vec![0, 1, 2, 3, 4], a: vec![0, 1, 2, 3], n_max: 5, tiling_cap: DEFAULT_CELL_CAP }
    }
}

/// Both main identities over the grid, tilings included under the cap.
pub fn check_theorems(grid: &Grid) -> Vec<CheckReport> {
    let mut jobs = Vec::new();
    for &m in &grid.m {
        for &a in &grid.a {
            for n in 1..=grid.n_max {
                for &l in &grid.l {
                    jobs.push((m, l, a, n));
                }
            }
        }
    }
    jobs.par_iter()
        .flat_map_iter(|&(m, l, a, n)| {
            let l = rat(l);
            [
                check_main_d_capped(m, &l, a, n, grid.tiling_cap),
                check_main_h_capped(m, &l, a, n, grid.tiling_cap),
            ]
        })
        .collect()
}

/// Every catalog formula up to `n_max`.
pub fn check_catalog(n_max: usize) -> Vec<CheckReport> {
    let ids: Vec<String> = Catalog::builtin().ids().map(String::from).collect();
    let jobs: Vec<(String, usize)> = ids.iter().flat_map(|id| (1..=n_max).map(move |n| (id.clone(), n))).collect();
    jobs.par_iter().flat_map_iter(|(id, n)| check_formula(id, *n, &BTreeMap::new())).collect()
}

/// The whole default suite, sorted by check id.
pub fn check_all() -> Vec<CheckReport> {
    let grid = Grid::default();
    let mut out = check_theorems(&grid);
    out.extend(check_catalog(6));
    out.extend(check_conjectures(10));
    for s in 0..3 {
        for r in 0..3 {
            out.extend(check_scaling(s, r, 4, &rat(2), &ratio(-1, 3), &rat(3)));
        }
    }
    for s in 1..=3 {
        for r in 0..=3 {
            for rho in 1..=2 {
                out.extend(check_epilogue(s, r, 5, 0, rho));
            }
        }
    }
    for n in 1..=6 {
        out.extend(check_holonomic(&HolonomicMatrix::Wh31, n));
        out.extend(check_holonomic(&HolonomicMatrix::Wd33, n));
    }
    for m in 1..=3 {
        for l in 1..=3 {
            for a in 0..=2 {
                out.push(check_series_relation(m, &rat(l), a, 12));
                out.push(check_series_relation_hat(m, &rat(l), a, 12));
            }
        }
    }
    sort_reports(&mut out);
    out
}

/// Stable order: by id, then by parameters compared numerically where
/// they parse as integers.
pub fn sort_reports(reports: &mut [CheckReport]) {
    fn key(r: &CheckReport) -> Vec<(String, i64, String)> {
        r.params
            .iter()
            .map(|(k, v)| (k.clone(), v.parse::<i64>().unwrap_or(i64::MIN), v.clone()))
            .collect()
    }
    reports.sort_by(|a, b| a.id.cmp(&b.id).then_with(|| key(a).cmp(&key(b))));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_pass(reports: &[CheckReport]) {
        for r in reports {
            assert!(r.status.is_pass(), "{}", r.summary());
        }
    }

    #[test]
    fn main_examples() {
        for n in 1..=6 {
            all_pass(&[check_main_d(2, &rat(2), 1, n), check_main_d(1, &rat(2), 0, n)]);
            all_pass(&[check_main_h(2, &rat(2), 0, n), check_main_h(2, &rat(4), 0, n), check_main_h(4, &rat(2), 1, n)]);
        }
        let r = check_main_d(2, &rat(2), 1, 4);
        assert_eq!(r.params.get("tilings").map(String::as_str), Some("agree"));
        assert_eq!(r.lhs, Some(rat(3328)));
        let r = check_main_d(3, &rat(3), 2, 3);
        assert_eq!(r.lhs, Some(rat(729)));
    }

    #[test]
    fn conjectures_small() {
        let reports = check_conjectures(4);
        assert_eq!(reports.len(), 16);
        all_pass(&reports);
        let first = reports.iter().find(|r| r.id == "conjecture.WD33" && r.params["n"] == "1").unwrap();
        assert_eq!(first.lhs, Some(rat(2)));
    }

    #[test]
    fn scaling_examples() {
        all_pass(&check_scaling(1, 1, 3, &rat(2), &rat(3), &rat(2)));
        all_pass(&check_scaling(2, 0, 2, &rat(-1), &rat(1), &rat(2)));
        let same = check_scaling(1, 1, 3, &rat(1), &rat(1), &rat(2));
        all_pass(&same);
        assert!(matches!(check_scaling(1, 1, 3, &rat(0), &rat(1), &rat(2))[0].status, CheckStatus::Skipped(_)));
    }

    #[test]
    fn epilogue_examples() {
        let reports = check_epilogue(2, 3, 4, 0, 1);
        all_pass(&reports);
        let binom3 = reports.iter().find(|r| r.id == "epilogue.binomial.D" && r.params["n"] == "3").unwrap();
        assert_eq!(binom3.lhs, Some(rat(27)));
        all_pass(&check_epilogue(1, 1, 3, 5, 2));
        let r0 = check_epilogue(1, 0, 3, 0, 1);
        assert!(r0.iter().filter(|r| r.id == "epilogue.central.H").all(|r| matches!(r.status, CheckStatus::Skipped(_))));
        assert!(r0.iter().filter(|r| r.id != "epilogue.central.H").all(|r| r.status.is_pass()));
    }

    #[test]
    fn holonomic_examples() {
        all_pass(&check_holonomic(&HolonomicMatrix::Wh31, 4));
        let wd = check_holonomic(&HolonomicMatrix::Wd33, 5);
        all_pass(&wd);
        let h3 = wd.iter().find(|r| r.id == "holonomic.H3").unwrap();
        assert_eq!(h3.rhs, Some(crate::formulas::formula_ratio("WD33", 5, &BTreeMap::new()).unwrap()));
        let one = check_holonomic(&HolonomicMatrix::Wh31, 1);
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].id, "holonomic.H1");
        all_pass(&check_holonomic(&HolonomicMatrix::Custom(KksParams::new(2, rat(3), 1, 0, 1, 1, 0)), 4));
    }

    #[test]
    fn series_examples() {
        all_pass(&[check_series_relation(2, &rat(2), 1, 12), check_series_relation(1, &rat(3), 0, 12)]);
        all_pass(&[check_series_relation(3, &rat(1), 2, 10), check_series_relation_hat(2, &rat(2), 1, 10)]);
    }

    #[test]
    fn formula_checks() {
        all_pass(&check_formula("D-121-22", 4, &BTreeMap::new()));
        let k: BTreeMap<String, i64> = [("kappa".to_string(), 2)].into();
        let r = check_formula("kappa", 3, &k);
        assert!(r[0].status.is_pass());
        assert!(matches!(r[1].status, CheckStatus::Skipped(_)));
    }
}
