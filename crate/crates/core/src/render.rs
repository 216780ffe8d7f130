//! Plain-text and SVG pictures of domains and tilings.

use std::collections::HashMap;
use std::fmt::Write;

use crate::shapes::{AztecDomain, Cell, CellColor};
use crate::tilings::{DominoType, Tiling};

const UNIT: i64 = 24;

fn bounds(domain: &AztecDomain) -> Option<(i64, i64, i64, i64)> {
    let cells = domain.cells();
    let x0 = cells.iter().map(|c| c.x).min()?;
    let x1 = cells.iter().map(|c| c.x).max()?;
    let y0 = cells.iter().map(|c| c.y).min()?;
    let y1 = cells.iter().map(|c| c.y).max()?;
    Some((x0, x1, y0, y1))
}

fn type_digit(kind: DominoType) -> char {
    match kind {
        DominoType::D1 => '1',
        DominoType::D2 => '2',
        DominoType::D3 => '3',
        DominoType::D4 => '4',
    }
}

/// One character per cell, top row first: `w`/`g` for untiled white/gray
/// cells, the domino type digit for tiled ones, `.` outside the domain.
pub fn ascii(domain: &AztecDomain, tiling: Option<&Tiling>) -> String {
    let Some((x0, x1, y0, y1)) = bounds(domain) else {
        return String::new();
    };
    let mut label: HashMap<Cell, char> = HashMap::new();
    if let Some(t) = tiling {
        for d in t.dominoes() {
            label.insert(d.first, type_digit(d.kind()));
            label.insert(d.second, type_digit(d.kind()));
        }
    }
    let mut out = String::new();
    for y in (y0..=y1).rev() {
        for x in x0..=x1 {
            let c = Cell::new(x, y);
            let ch = if !domain.contains(c) {
                '.'
            } else if let Some(&ch) = label.get(&c) {
                ch
            } else if c.color() == CellColor::White {
                'w'
            } else {
                'g'
            };
            out.push(ch);
        }
        out.push('\n');
    }
    out
}

fn stroke(kind: DominoType) -> &'static str {
    match kind {
        DominoType::D1 => "#c0392b",
        DominoType::D2 => "#2471a3",
        DominoType::D3 => "#229954",
        DominoType::D4 => "#7d3c98",
    }
}

/// Cells as shaded squares, dominoes as thick outlines coloured by type.
pub fn svg(domain: &AztecDomain, tiling: Option<&Tiling>) -> String {
    let (x0, x1, y0, y1) = bounds(domain).unwrap_or((0, 0, 0, 0));
    let width = (x1 - x0 + 1) * UNIT + 2 * UNIT;
    let height = (y1 - y0 + 1) * UNIT + 2 * UNIT;
    let sx = |x: i64| (x - x0 + 1) * UNIT;
    // Top edge of a cell whose corner is at height `y`.
    let sy = |y: i64| (y1 - y + 1) * UNIT;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    for c in domain.cells() {
        let fill = if c.color() == CellColor::White { "#ffffff" } else { "#bfbfbf" };
        let _ = writeln!(
            out,
            r##"  <rect x="{}" y="{}" width="{UNIT}" height="{UNIT}" fill="{fill}" stroke="#808080" stroke-width="1"/>"##,
            sx(c.x),
            sy(c.y)
        );
    }
    if let Some(t) = tiling {
        for d in t.dominoes() {
            let (w, h) = if d.is_vertical() { (UNIT, 2 * UNIT) } else { (2 * UNIT, UNIT) };
            let top = if d.is_vertical() { d.second.y } else { d.first.y };
            let _ = writeln!(
                out,
                r##"  <rect x="{}" y="{}" width="{w}" height="{h}" fill="none" stroke="{}" stroke-width="3"/>"##,
                sx(d.first.x),
                sy(top),
                stroke(d.kind())
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{aztec_type1, Partition};
    use crate::tilings::enumerate_tilings;

    #[test]
    fn ascii_of_single_box() {
        let d = aztec_type1(&Partition::arithmetic(1, 1, 1));
        assert_eq!(ascii(&d, None), "w\ng\n");
        let t = enumerate_tilings(&d).unwrap().next().unwrap();
        assert_eq!(ascii(&d, Some(&t)), "1\n1\n");
    }

    #[test]
    fn svg_has_one_rect_per_cell_and_domino() {
        let d = aztec_type1(&Partition::arithmetic(1, 1, 3));
        let t = enumerate_tilings(&d).unwrap().next().unwrap();
        let s = svg(&d, Some(&t));
        assert_eq!(s.matches("<rect").count(), d.len() + d.len() / 2);
        assert!(s.starts_with("<svg"));
        assert!(s.trim_end().ends_with("</svg>"));
    }
}
