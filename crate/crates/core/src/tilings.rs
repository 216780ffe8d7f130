//! Domino tilings of finite domains: exhaustive enumeration and weighted
//! counts by domino type.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{pow_rational, rat, Rational};
use crate::error::{Error, Result};
use crate::shapes::{AztecDomain, Cell, CellColor};

/// Largest domain enumerated unless a different cap is requested.
pub const DEFAULT_CELL_CAP: usize = 80;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DominoType {
    /// Vertical, gray bottom cell.
    D1,
    /// Vertical, white bottom cell.
    D2,
    /// Horizontal, gray left cell.
    D3,
    /// Horizontal, white left cell.
    D4,
}

impl DominoType {
    pub fn index(self) -> usize {
        self as usize
    }
}

/// Two adjacent cells; `first` is the bottom or left one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Domino {
    pub first: Cell,
    pub second: Cell,
}

impl Domino {
    pub fn new(a: Cell, b: Cell) -> Result<Self> {
        let (first, second) = if a <= b { (a, b) } else { (b, a) };
        let vertical = first.x == second.x && second.y == first.y + 1;
        let horizontal = first.y == second.y && second.x == first.x + 1;
        if !vertical && !horizontal {
            return Err(Error::MalformedTiling(format!("cells {a:?} and {b:?} are not adjacent")));
        }
        Ok(Domino { first, second })
    }

    pub fn is_vertical(&self) -> bool {
        self.first.x == self.second.x
    }

    pub fn kind(&self) -> DominoType {
        let gray = self.first.color() == CellColor::Gray;
        match (self.is_vertical(), gray) {
            (true, true) => DominoType::D1,
            (true, false) => DominoType::D2,
            (false, true) => DominoType::D3,
            (false, false) => DominoType::D4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tiling {
    dominoes: Vec<Domino>,
    counts: [usize; 4],
}

impl Tiling {
    pub fn new(mut dominoes: Vec<Domino>) -> Self {
        dominoes.sort();
        let mut counts = [0; 4];
        for d in &dominoes {
            counts[d.kind().index()] += 1;
        }
        Tiling { dominoes, counts }
    }

    pub fn dominoes(&self) -> &[Domino] {
        &self.dominoes
    }

    /// Number of dominoes of each type, indexed by [`DominoType::index`].
    pub fn counts(&self) -> [usize; 4] {
        self.counts
    }

    pub fn count(&self, kind: DominoType) -> usize {
        self.counts[kind.index()]
    }

    pub fn weight(&self, w: &WeightTriple) -> Result<Rational> {
        w.monomial(self.counts[0], self.counts[1], self.counts[2])
    }

    /// Does the tiling cover exactly the cells of `domain`, each once?
    pub fn covers(&self, domain: &AztecDomain) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        for d in &self.dominoes {
            for c in [d.first, d.second] {
                if !domain.contains(c) || !seen.insert(c) {
                    return false;
                }
            }
        }
        seen.len() == domain.len()
    }
}

/// Weights attached to D1, D2 and D3 dominoes (or to east, north and
/// diagonal lattice steps); D4 dominoes have weight one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightTriple {
    pub w1: Rational,
    pub w2: Rational,
    pub w3: Rational,
}

impl WeightTriple {
    pub fn new(w1: Rational, w2: Rational, w3: Rational) -> Self {
        WeightTriple { w1, w2, w3 }
    }

    pub fn from_i64(w1: i64, w2: i64, w3: i64) -> Self {
        WeightTriple::new(rat(w1), rat(w2), rat(w3))
    }

    pub fn unit() -> Self {
        WeightTriple::from_i64(1, 1, 1)
    }

    /// `(1, l - 1, 1)`.
    pub fn shifted(l: &Rational) -> Self {
        WeightTriple::new(Rational::one(), l - Rational::one(), Rational::one())
    }

    pub fn monomial(&self, e1: usize, e2: usize, e3: usize) -> Result<Rational> {
        Ok(pow_rational(&self.w1, e1 as i64)? * pow_rational(&self.w2, e2 as i64)? * pow_rational(&self.w3, e3 as i64)?)
    }
}

/// Cells indexed in their sorted order with the two neighbours that can
/// pair with a cell when all smaller cells are already covered.
struct Board {
    cells: Vec<Cell>,
    up: Vec<Option<usize>>,
    right: Vec<Option<usize>>,
}

impl Board {
    fn new(domain: &AztecDomain, cap: usize) -> Result<Self> {
        if domain.len() > cap {
            return Err(Error::CapExceeded { what: "domain cells", size: domain.len(), cap });
        }
        let cells: Vec<Cell> = domain.cells().iter().copied().collect();
        let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let up = cells.iter().map(|c| index.get(&Cell::new(c.x, c.y + 1)).copied()).collect();
        let right = cells.iter().map(|c| index.get(&Cell::new(c.x + 1, c.y)).copied()).collect();
        Ok(Board { cells, up, right })
    }

    fn partner(&self, cell: usize, option: u8) -> Option<usize> {
        match option {
            0 => self.up[cell],
            1 => self.right[cell],
            _ => None,
        }
    }
}

/// Lazy depth-first enumeration. The smallest uncovered cell is always
/// covered next, so every tiling is produced exactly once.
pub struct TilingIter {
    board: Board,
    covered: Vec<bool>,
    stack: Vec<(usize, usize, u8)>,
    started: bool,
    done: bool,
}

impl TilingIter {
    fn first_uncovered(&self) -> Option<usize> {
        let from = self.stack.last().map_or(0, |&(c, _, _)| c);
        (from..self.covered.len()).find(|&i| !self.covered[i])
    }

    /// Place a domino on `cell` using the first feasible option `>= from`.
    fn place(&mut self, cell: usize, from: u8) -> bool {
        for option in from..2 {
            if let Some(p) = self.board.partner(cell, option) {
                if !self.covered[p] {
                    self.covered[cell] = true;
                    self.covered[p] = true;
                    self.stack.push((cell, p, option));
                    return true;
                }
            }
        }
        false
    }

    /// Undo placements until one can be replaced by its next option.
    fn backtrack(&mut self) -> bool {
        while let Some((cell, p, option)) = self.stack.pop() {
            self.covered[cell] = false;
            self.covered[p] = false;
            if self.place(cell, option + 1) {
                return true;
            }
        }
        false
    }

    fn current(&self) -> Tiling {
        let dominoes = self
            .stack
            .iter()
            .map(|&(c, p, _)| Domino { first: self.board.cells[c], second: self.board.cells[p] })
            .collect();
        Tiling::new(dominoes)
    }
}

impl Iterator for TilingIter {
    type Item = Tiling;

    fn next(&mut self) -> Option<Tiling> {
        if self.done {
            return None;
        }
        if self.started && !self.backtrack() {
            self.done = true;
            return None;
        }
        self.started = true;
        loop {
            match self.first_uncovered() {
                None => return Some(self.current()),
                Some(cell) => {
                    if !self.place(cell, 0) && !self.backtrack() {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }
}

pub fn enumerate_tilings(domain: &AztecDomain) -> Result<TilingIter> {
    enumerate_tilings_capped(domain, DEFAULT_CELL_CAP)
}

pub fn enumerate_tilings_capped(domain: &AztecDomain, cap: usize) -> Result<TilingIter> {
    let board = Board::new(domain, cap)?;
    let n = board.cells.len();
    Ok(TilingIter { board, covered: vec![false; n], stack: Vec::new(), started: false, done: false })
}

/// Number of tilings with each `(#D1, #D2, #D3)` signature.
pub type TypeHistogram = BTreeMap<[usize; 3], u128>;

pub fn type_histogram(domain: &AztecDomain, cap: usize) -> Result<TypeHistogram> {
    let board = Board::new(domain, cap)?;
    let mut covered = vec![false; board.cells.len()];
    let mut counts = [0usize; 3];
    let mut hist = TypeHistogram::new();
    let kinds: Vec<[DominoType; 2]> = board
        .cells
        .iter()
        .map(|&c| {
            let gray = c.color() == CellColor::Gray;
            if gray {
                [DominoType::D1, DominoType::D3]
            } else {
                [DominoType::D2, DominoType::D4]
            }
        })
        .collect();
    histogram_dfs(&board, &kinds, &mut covered, 0, &mut counts, &mut hist);
    Ok(hist)
}

fn histogram_dfs(
    board: &Board,
    kinds: &[[DominoType; 2]],
    covered: &mut [bool],
    from: usize,
    counts: &mut [usize; 3],
    hist: &mut TypeHistogram,
) {
    let Some(cell) = (from..covered.len()).find(|&i| !covered[i]) else {
        *hist.entry(*counts).or_insert(0) += 1;
        return;
    };
    for option in 0..2u8 {
        let Some(p) = board.partner(cell, option) else { continue };
        if covered[p] {
            continue;
        }
        let kind = kinds[cell][option as usize];
        covered[cell] = true;
        covered[p] = true;
        if kind != DominoType::D4 {
            counts[kind.index()] += 1;
        }
        histogram_dfs(board, kinds, covered, cell + 1, counts, hist);
        if kind != DominoType::D4 {
            counts[kind.index()] -= 1;
        }
        covered[cell] = false;
        covered[p] = false;
    }
}

pub fn weight_of_histogram(hist: &TypeHistogram, w: &WeightTriple) -> Result<Rational> {
    let mut total = Rational::zero();
    for (&[a, b, c], &count) in hist {
        total += w.monomial(a, b, c)? * Rational::from_integer(count.into());
    }
    Ok(total)
}

/// Sum over all tilings of `w1^#D1 w2^#D2 w3^#D3`.
pub fn weighted_tiling_count(domain: &AztecDomain, w: &WeightTriple) -> Result<Rational> {
    weighted_tiling_count_capped(domain, w, DEFAULT_CELL_CAP)
}

pub fn weighted_tiling_count_capped(domain: &AztecDomain, w: &WeightTriple, cap: usize) -> Result<Rational> {
    weight_of_histogram(&type_histogram(domain, cap)?, w)
}
