//! Weighted lattice paths with east, north and diagonal steps, their
//! Lindström-Gessel-Viennot matrices and a brute-force count of
//! nonintersecting families.

use std::collections::HashSet;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::series::Series2D;
use crate::shapes::Partition;
use crate::tilings::WeightTriple;

/// Largest number of single paths the brute-force counter will build.
pub const DEFAULT_PATH_CAP: usize = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PathKind {
    /// Ends on the line `y = n`.
    Delannoy,
    /// Ends on `y = n + 1` with a last step that is not east.
    HDelannoy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    East,
    North,
    NorthEast,
}

impl Step {
    pub fn delta(self) -> (i64, i64) {
        match self {
            Step::East => (1, 0),
            Step::North => (0, 1),
            Step::NorthEast => (1, 1),
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

const STEPS: [Step; 3] = [Step::East, Step::North, Step::NorthEast];

/// A family of `n` paths from `(-j, j)` to `(lambda_j - j, top)` where
/// `lambda = (s(n-1)+r, ..., r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathFamilyParams {
    pub s: u64,
    pub r: u64,
    pub n: usize,
    pub kind: PathKind,
}

impl PathFamilyParams {
    pub fn new(s: u64, r: u64, n: usize, kind: PathKind) -> Self {
        PathFamilyParams { s, r, n, kind }
    }

    pub fn partition(&self) -> Partition {
        Partition::arithmetic(self.s, self.r, self.n)
    }

    pub fn top(&self) -> i64 {
        match self.kind {
            PathKind::Delannoy => self.n as i64,
            PathKind::HDelannoy => self.n as i64 + 1,
        }
    }

    /// Start of path `j`, `1 <= j <= n`.
    pub fn start(&self, j: usize) -> (i64, i64) {
        (-(j as i64), j as i64)
    }

    pub fn end(&self, j: usize) -> (i64, i64) {
        let part = self.s * (self.n - j) as u64 + self.r;
        (part as i64 - j as i64, self.top())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    pub start: (i64, i64),
    pub steps: Vec<Step>,
}

impl LatticePath {
    pub fn vertices(&self) -> Vec<(i64, i64)> {
        let mut p = self.start;
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(p);
        for s in &self.steps {
            let (dx, dy) = s.delta();
            p = (p.0 + dx, p.1 + dy);
            out.push(p);
        }
        out
    }

    pub fn end(&self) -> (i64, i64) {
        *self.vertices().last().expect("a path has at least one vertex")
    }
}

/// Paths listed in the order of their starting points `j = 1, ..., n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathSystem {
    pub paths: Vec<LatticePath>,
}

impl PathSystem {
    /// Number of east, north and diagonal steps over all paths.
    pub fn step_counts(&self) -> [usize; 3] {
        let mut c = [0; 3];
        for p in &self.paths {
            for s in &p.steps {
                c[s.index()] += 1;
            }
        }
        c
    }

    pub fn weight(&self, w: &WeightTriple) -> Result<Rational> {
        let [e, n, d] = self.step_counts();
        w.monomial(e, n, d)
    }

    pub fn is_vertex_disjoint(&self) -> bool {
        let mut seen = HashSet::new();
        self.paths.iter().flat_map(|p| p.vertices()).all(|v| seen.insert(v))
    }
}

/// Weighted path counts from the origin, grown on demand.
pub struct DelannoyTable {
    w: WeightTriple,
    grid: Vec<Vec<Rational>>,
}

impl DelannoyTable {
    pub fn new(w: WeightTriple) -> Self {
        DelannoyTable { w, grid: Vec::new() }
    }

    fn ensure(&mut self, i: usize, j: usize) {
        let rows = self.grid.len();
        let cols = self.grid.first().map_or(0, |r| r.len());
        if i < rows && j < cols {
            return;
        }
        let (rows, cols) = ((i + 1).max(rows), (j + 1).max(cols));
        let mut grid = vec![vec![Rational::zero(); cols]; rows];
        for a in 0..rows {
            for b in 0..cols {
                grid[a][b] = if a == 0 && b == 0 {
                    Rational::from_integer(1.into())
                } else {
                    let mut v = Rational::zero();
                    if a > 0 {
                        v += &self.w.w1 * &grid[a - 1][b];
                    }
                    if b > 0 {
                        v += &self.w.w2 * &grid[a][b - 1];
                    }
                    if a > 0 && b > 0 {
                        v += &self.w.w3 * &grid[a - 1][b - 1];
                    }
                    v
                };
            }
        }
        self.grid = grid;
    }

    /// Weighted number of paths from `(0, 0)` to `(i, j)`.
    pub fn delannoy(&mut self, i: i64, j: i64) -> Rational {
        if i < 0 || j < 0 {
            return Rational::zero();
        }
        self.ensure(i as usize, j as usize);
        self.grid[i as usize][j as usize].clone()
    }

    /// Same count restricted to paths whose last step is not east.
    pub fn h_delannoy(&mut self, i: i64, j: i64) -> Rational {
        let w1 = self.w.w1.clone();
        self.delannoy(i, j + 1) - w1 * self.delannoy(i - 1, j + 1)
    }

    pub fn entry(&mut self, kind: PathKind, i: i64, j: i64) -> Rational {
        match kind {
            PathKind::Delannoy => self.delannoy(i, j),
            PathKind::HDelannoy => self.h_delannoy(i, j),
        }
    }
}

pub fn delannoy(i: i64, j: i64, w: &WeightTriple) -> Rational {
    DelannoyTable::new(w.clone()).delannoy(i, j)
}

pub fn h_delannoy(i: i64, j: i64, w: &WeightTriple) -> Rational {
    DelannoyTable::new(w.clone()).h_delannoy(i, j)
}

/// Entry `(i, j)` counts paths from the `j`-th start to the `i`-th end;
/// after reindexing, `D((s+1)i - j + r, j)`.
pub fn lgv_matrix(params: &PathFamilyParams, w: &WeightTriple) -> ExactMatrix {
    let mut table = DelannoyTable::new(w.clone());
    let s = params.s as i64;
    let r = params.r as i64;
    ExactMatrix::from_fn(params.n, |i, j| {
        let (i, j) = (i as i64, j as i64);
        table.entry(params.kind, (s + 1) * i - j + r, j)
    })
}

pub fn lgv_det(params: &PathFamilyParams, w: &WeightTriple) -> Rational {
    lgv_matrix(params, w).det()
}

/// Generating function `sum_{i,j} D((s+1)i - j + r, j) u^i v^j` (or the
/// `H` analogue) truncated to `order x order` coefficients.
pub fn lgv_series(s: u64, r: u64, kind: PathKind, w: &WeightTriple, order: usize) -> Series2D {
    let mut table = DelannoyTable::new(w.clone());
    let (s, r) = (s as i64, r as i64);
    Series2D::from_fn(order, order, |i, j| {
        let (i, j) = (i as i64, j as i64);
        table.entry(kind, (s + 1) * i - j + r, j)
    })
}

fn single_paths(
    from: (i64, i64),
    to: (i64, i64),
    kind: PathKind,
    budget: &mut usize,
    cap: usize,
) -> Result<Vec<LatticePath>> {
    fn go(
        at: (i64, i64),
        to: (i64, i64),
        kind: PathKind,
        steps: &mut Vec<Step>,
        out: &mut Vec<Vec<Step>>,
        budget: &mut usize,
        cap: usize,
    ) -> Result<()> {
        if at == to {
            if kind == PathKind::HDelannoy && steps.last() == Some(&Step::East) {
                return Ok(());
            }
            *budget += 1;
            if *budget > cap {
                return Err(Error::CapExceeded { what: "single paths", size: *budget, cap });
            }
            out.push(steps.clone());
            return Ok(());
        }
        for s in STEPS {
            let (dx, dy) = s.delta();
            let next = (at.0 + dx, at.1 + dy);
            if next.0 <= to.0 && next.1 <= to.1 {
                steps.push(s);
                go(next, to, kind, steps, out, budget, cap)?;
                steps.pop();
            }
        }
        Ok(())
    }
    let mut out = Vec::new();
    go(from, to, kind, &mut Vec::new(), &mut out, budget, cap)?;
    Ok(out.into_iter().map(|steps| LatticePath { start: from, steps }).collect())
}

/// Every vertex-disjoint family for the given parameters, found by
/// backtracking over explicit single paths.
pub fn enumerate_path_systems(params: &PathFamilyParams, cap: usize) -> Result<Vec<PathSystem>> {
    let mut budget = 0;
    let mut candidates = Vec::with_capacity(params.n);
    for j in 1..=params.n {
        candidates.push(single_paths(params.start(j), params.end(j), params.kind, &mut budget, cap)?);
    }
    let mut out = Vec::new();
    let mut chosen: Vec<&LatticePath> = Vec::new();
    let mut used: HashSet<(i64, i64)> = HashSet::new();
    choose(&candidates, 0, &mut chosen, &mut used, &mut out);
    Ok(out)
}

fn choose<'a>(
    candidates: &'a [Vec<LatticePath>],
    j: usize,
    chosen: &mut Vec<&'a LatticePath>,
    used: &mut HashSet<(i64, i64)>,
    out: &mut Vec<PathSystem>,
) {
    if j == candidates.len() {
        out.push(PathSystem { paths: chosen.iter().map(|p| (*p).clone()).collect() });
        return;
    }
    for path in &candidates[j] {
        let verts = path.vertices();
        if verts.iter().any(|v| used.contains(v)) {
            continue;
        }
        used.extend(verts.iter().copied());
        chosen.push(path);
        choose(candidates, j + 1, chosen, used, out);
        chosen.pop();
        for v in &verts {
            used.remove(v);
        }
    }
}

pub fn brute_force_path_count(params: &PathFamilyParams, w: &WeightTriple, cap: usize) -> Result<Rational> {
    let mut total = Rational::zero();
    for sys in enumerate_path_systems(params, cap)? {
        total += sys.weight(w)?;
    }
    Ok(total)
}
