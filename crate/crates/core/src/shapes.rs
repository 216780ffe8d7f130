//! Partitions, their boundary encodings, prototype domains and the two
//! families of Aztec-type domains cut out of them.
//!
//! A cell is identified by the lattice point `(x, y)` of its corner; the cell
//! occupies `[x, x+1] x [y, y+1]` with `y` pointing up. Diagonal `k` holds the
//! cells with `x - y = k`; even diagonals are white, odd ones gray.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing sequence of nonnegative parts; zero parts are kept.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// `(s(n-1)+r, s(n-2)+r, ..., r)`.
    pub fn arithmetic(s: u64, r: u64, n: usize) -> Self {
        let parts = (1..=n as u64).map(|j| s * (n as u64 - j) + r).collect();
        Partition { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of parts, zeros included.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first(&self) -> u64 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Southeast boundary of the Young diagram read from its bottom-left end:
    /// one circle per east edge, one bullet per north edge.
    pub fn boundary_encoding(&self) -> Vec<BoundarySymbol> {
        let mut out = Vec::with_capacity(self.first() as usize + self.len());
        let mut below = 0;
        for &part in self.parts.iter().rev() {
            out.extend(std::iter::repeat_n(BoundarySymbol::Circle, (part - below) as usize));
            out.push(BoundarySymbol::Bullet);
            below = part;
        }
        out
    }

    /// Inverse of [`Partition::boundary_encoding`]. Trailing circles after the
    /// last bullet are rejected since no north edge closes them.
    pub fn from_boundary_encoding(symbols: &[BoundarySymbol]) -> Result<Self> {
        let mut parts = Vec::new();
        let mut width = 0u64;
        for sym in symbols {
            match sym {
                BoundarySymbol::Circle => width += 1,
                BoundarySymbol::Bullet => parts.push(width),
            }
        }
        if symbols.last() == Some(&BoundarySymbol::Circle) {
            return Err(Error::InvalidParameter("encoding ends with an east edge".into()));
        }
        parts.reverse();
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundarySymbol {
    /// East edge.
    Circle,
    /// North edge.
    Bullet,
}

impl BoundarySymbol {
    pub fn glyph(self) -> char {
        match self {
            BoundarySymbol::Circle => '◦',
            BoundarySymbol::Bullet => '•',
        }
    }
}

pub fn encoding_string(symbols: &[BoundarySymbol]) -> String {
    symbols.iter().map(|s| s.glyph()).collect()
}

/// Unit square with corner `(x, y)`; ordered by `x`, then `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub x: i64,
    pub y: i64,
}

impl Cell {
    pub const fn new(x: i64, y: i64) -> Self {
        Cell { x, y }
    }

    pub fn diagonal(self) -> i64 {
        self.x - self.y
    }

    pub fn color(self) -> CellColor {
        if self.diagonal().rem_euclid(2) == 0 {
            CellColor::White
        } else {
            CellColor::Gray
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CellColor {
    White,
    Gray,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DomainKind {
    Prototype { m: u64, n: u64 },
    /// Bullets removed from the last diagonal.
    Type1,
    /// Circles removed from the last diagonal.
    Type2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AztecDomain {
    cells: BTreeSet<Cell>,
    kind: DomainKind,
    partition: Option<Partition>,
}

impl AztecDomain {
    pub fn from_cells(cells: impl IntoIterator<Item = Cell>, kind: DomainKind) -> Self {
        AztecDomain { cells: cells.into_iter().collect(), kind, partition: None }
    }

    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    pub fn kind(&self) -> &DomainKind {
        &self.kind
    }

    pub fn partition(&self) -> Option<&Partition> {
        self.partition.as_ref()
    }

    pub fn color_counts(&self) -> (usize, usize) {
        let white = self.cells.iter().filter(|c| c.color() == CellColor::White).count();
        (white, self.cells.len() - white)
    }
}

fn diagonal_len(m: u64, k: u64) -> u64 {
    m + k.div_ceil(2)
}

/// Cells of the `k`-th diagonal of a prototype with parameter `m`, listed
/// from bottom-left to top-right.
fn diagonal_cells(m: u64, k: u64) -> impl Iterator<Item = Cell> {
    (0..diagonal_len(m, k) as i64).map(move |i| Cell::new(i, i - k as i64))
}

/// Diagonals `0..=n`, diagonal `k` holding `m + ceil(k/2)` cells.
pub fn prototype_domain(m: u64, n: u64) -> AztecDomain {
    let cells = (0..=n).flat_map(|k| diagonal_cells(m, k));
    AztecDomain::from_cells(cells, DomainKind::Prototype { m, n })
}

fn cut_last_diagonal(lambda: &Partition, last: u64, remove: BoundarySymbol, kind: DomainKind) -> AztecDomain {
    let m = lambda.first();
    let proto = prototype_domain(m, last);
    let encoding = lambda.boundary_encoding();
    assert_eq!(
        diagonal_len(m, last) as usize,
        encoding.len(),
        "last diagonal does not match the boundary encoding"
    );
    let mut cells = proto.cells;
    for (cell, sym) in diagonal_cells(m, last).zip(encoding) {
        if sym == remove {
            cells.remove(&cell);
        }
    }
    AztecDomain { cells, kind, partition: Some(lambda.clone()) }
}

/// Prototype on `2n - 1` diagonals with the bullet cells of the last one removed.
pub fn aztec_type1(lambda: &Partition) -> AztecDomain {
    if lambda.is_empty() {
        return AztecDomain { cells: BTreeSet::new(), kind: DomainKind::Type1, partition: Some(lambda.clone()) };
    }
    let last = 2 * lambda.len() as u64 - 1;
    cut_last_diagonal(lambda, last, BoundarySymbol::Bullet, DomainKind::Type1)
}

/// Prototype on `2n` diagonals with the circle cells of the last one removed.
pub fn aztec_type2(lambda: &Partition) -> AztecDomain {
    let last = 2 * lambda.len() as u64;
    cut_last_diagonal(lambda, last, BoundarySymbol::Circle, DomainKind::Type2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn arithmetic_partitions() {
        assert_eq!(Partition::arithmetic(1, 1, 4), p(&[4, 3, 2, 1]));
        assert_eq!(Partition::arithmetic(0, 5, 3), p(&[5, 5, 5]));
        assert_eq!(Partition::arithmetic(2, 1, 4), p(&[7, 5, 3, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn boundary_encodings() {
        assert_eq!(encoding_string(&p(&[7, 5, 3, 1]).boundary_encoding()), "◦•◦◦•◦◦•◦◦•");
        assert_eq!(encoding_string(&p(&[6, 4, 2, 0]).boundary_encoding()), "•◦◦•◦◦•◦◦•");
        assert_eq!(encoding_string(&p(&[0, 0, 0]).boundary_encoding()), "•••");
    }

    #[test]
    fn encoding_round_trip_and_counts() {
        for s in 0..4 {
            for r in 0..4 {
                for n in 1..6 {
                    let lambda = Partition::arithmetic(s, r, n);
                    let enc = lambda.boundary_encoding();
                    assert_eq!(enc.len() as u64, lambda.first() + n as u64);
                    assert_eq!(enc.iter().filter(|&&b| b == BoundarySymbol::Bullet).count(), n);
                    assert_eq!(Partition::from_boundary_encoding(&enc).unwrap(), lambda);
                }
            }
        }
        assert!(Partition::from_boundary_encoding(&[BoundarySymbol::Bullet, BoundarySymbol::Circle]).is_err());
    }

    #[test]
    fn prototype_sizes() {
        let d = prototype_domain(4, 8);
        let sizes: Vec<usize> = (0..=8).map(|k| d.cells().iter().filter(|c| c.diagonal() == k).count()).collect();
        assert_eq!(sizes, vec![4, 5, 5, 6, 6, 7, 7, 8, 8]);
        assert_eq!(prototype_domain(1, 1).len(), 3);
        assert!(prototype_domain(0, 0).is_empty());
    }

    #[test]
    fn type1_and_type2_sizes() {
        for s in 0..4u64 {
            for r in 0..4u64 {
                for n in 1..6usize {
                    let lambda = Partition::arithmetic(s, r, n);
                    let m = lambda.first();
                    let t1 = aztec_type1(&lambda);
                    let t2 = aztec_type2(&lambda);
                    let full1: u64 = (0..2 * n as u64).map(|k| diagonal_len(m, k)).sum();
                    let full2: u64 = (0..=2 * n as u64).map(|k| diagonal_len(m, k)).sum();
                    assert_eq!(t1.len() as u64, full1 - n as u64);
                    assert_eq!(t2.len() as u64, full2 - m);
                    let (w1, g1) = t1.color_counts();
                    let (w2, g2) = t2.color_counts();
                    assert_eq!(w1, g1, "type 1 {lambda}");
                    assert_eq!(w2, g2, "type 2 {lambda}");
                }
            }
        }
    }

    #[test]
    fn type1_of_single_box() {
        let d = aztec_type1(&p(&[1]));
        let cells: Vec<Cell> = d.cells().iter().copied().collect();
        assert_eq!(cells, vec![Cell::new(0, -1), Cell::new(0, 0)]);
        assert_eq!(d.color_counts(), (1, 1));
    }

    #[test]
    fn removed_cells_for_seven_five_three_one() {
        let lambda = p(&[7, 5, 3, 1]);
        let t1 = aztec_type1(&lambda);
        let t2 = aztec_type2(&lambda);
        for i in 0..11i64 {
            let bullet = [1, 4, 7, 10].contains(&i);
            assert_eq!(t1.contains(Cell::new(i, i - 7)), !bullet, "type 1, i = {i}");
            assert_eq!(t2.contains(Cell::new(i, i - 8)), bullet, "type 2, i = {i}");
        }
    }

    /// Cells of the Aztec triangle of order 4 as drawn in the classic
    /// picture, whose origin sits 7 units lower.
    #[test]
    fn aztec_triangle_four_matches_reference_picture() {
        let picture: &[(i64, i64)] = &[
            (0, 7), (1, 8), (2, 9), (3, 10), (0, 6), (1, 7), (2, 8), (3, 9), (4, 10),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9), (0, 4), (1, 5), (2, 6), (3, 7),
            (4, 8), (5, 9), (0, 3), (1, 4), (2, 5), (3, 6), (4, 7), (5, 8), (0, 2),
            (1, 3), (2, 4), (3, 5), (4, 6), (5, 7), (6, 8), (0, 1), (1, 2), (2, 3),
            (3, 4), (4, 5), (5, 6), (6, 7), (0, 0), (2, 2), (4, 4), (6, 6),
        ];
        let expected: BTreeSet<Cell> = picture.iter().map(|&(x, y)| Cell::new(x, y - 7)).collect();
        let domain = aztec_type1(&Partition::arithmetic(1, 1, 4));
        assert_eq!(domain.cells(), &expected);
    }

    #[test]
    fn all_zero_partition_is_tolerated() {
        let lambda = p(&[0, 0, 0]);
        assert_eq!(aztec_type1(&lambda).len(), 6);
        assert_eq!(aztec_type2(&lambda).len(), 12);
        assert!(aztec_type1(&Partition::new(vec![]).unwrap()).is_empty());
    }
}
