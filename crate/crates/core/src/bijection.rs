//! From domino tilings of the two domain types to nonintersecting path
//! families. Every D1, D2 and D3 domino contributes one step (east, north
//! and diagonal respectively); D4 dominoes contribute nothing.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::paths::{LatticePath, PathFamilyParams, PathKind, PathSystem, Step};
use crate::shapes::{aztec_type1, aztec_type2};
use crate::tilings::{DominoType, Tiling};

/// Start point and step of a domino, in the rotated coordinates
/// `X = p + q`, `Y = p - q + 1` of the lattice point `(p, q)`.
fn domino_step(kind: DominoType, x: i64, y: i64) -> Option<((i64, i64), Step)> {
    match kind {
        DominoType::D1 => Some(((x, y), Step::East)),
        DominoType::D2 => Some(((x, y + 1), Step::North)),
        DominoType::D3 => Some(((x, y), Step::NorthEast)),
        DominoType::D4 => None,
    }
}

fn lattice_point(big_x: i64, big_y: i64) -> Result<(i64, i64)> {
    if (big_x + big_y).rem_euclid(2) != 1 {
        return Err(Error::MalformedTiling(format!("step anchor ({big_x}, {big_y}) is off the lattice")));
    }
    Ok(((big_x + big_y - 1) / 2, (big_x - big_y + 1) / 2))
}

/// The path family of a tiling of the type 1 domain (Delannoy families)
/// or the type 2 domain (H-Delannoy families), chosen by `params.kind`.
pub fn phi(tiling: &Tiling, params: &PathFamilyParams) -> Result<PathSystem> {
    let lambda = params.partition();
    let domain = match params.kind {
        PathKind::Delannoy => aztec_type1(&lambda),
        PathKind::HDelannoy => aztec_type2(&lambda),
    };
    if !tiling.covers(&domain) {
        return Err(Error::MalformedTiling(format!("not a tiling of the domain for {lambda}")));
    }

    let mut outgoing: HashMap<(i64, i64), Step> = HashMap::new();
    for d in tiling.dominoes() {
        if let Some(((bx, by), step)) = domino_step(d.kind(), d.first.x, d.first.y) {
            let at = lattice_point(bx, by)?;
            if outgoing.insert(at, step).is_some() {
                return Err(Error::MalformedTiling(format!("two steps leave {at:?}")));
            }
        }
    }

    let mut paths = Vec::with_capacity(params.n);
    for j in 1..=params.n {
        let start = params.start(j);
        let mut at = start;
        let mut steps = Vec::new();
        while let Some(step) = outgoing.remove(&at) {
            let (dx, dy) = step.delta();
            at = (at.0 + dx, at.1 + dy);
            steps.push(step);
        }
        if at != params.end(j) {
            return Err(Error::MalformedTiling(format!("path {j} ends at {at:?}, expected {:?}", params.end(j))));
        }
        if params.kind == PathKind::HDelannoy && steps.last() == Some(&Step::East) {
            return Err(Error::MalformedTiling(format!("path {j} ends with an east step")));
        }
        paths.push(LatticePath { start, steps });
    }
    if !outgoing.is_empty() {
        return Err(Error::MalformedTiling(format!("{} steps belong to no path", outgoing.len())));
    }
    Ok(PathSystem { paths })
}

/// [`phi`] for the type 2 domain.
pub fn phi_hat(tiling: &Tiling, s: u64, r: u64, n: usize) -> Result<PathSystem> {
    phi(tiling, &PathFamilyParams::new(s, r, n, PathKind::HDelannoy))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{enumerate_path_systems, DEFAULT_PATH_CAP};
    use crate::shapes::{Cell, Partition};
    use crate::tilings::{enumerate_tilings, Domino};
    use std::collections::HashSet;

    fn build(vertical: &[(i64, i64)], horizontal: &[(i64, i64)]) -> Tiling {
        let mut ds = Vec::new();
        for &(x, y) in vertical {
            ds.push(Domino::new(Cell::new(x, y), Cell::new(x, y + 1)).unwrap());
        }
        for &(x, y) in horizontal {
            ds.push(Domino::new(Cell::new(x, y), Cell::new(x + 1, y)).unwrap());
        }
        Tiling::new(ds)
    }

    /// Ends of the paths drawn over a tiling, as points `(X, Y + 1/2)`
    /// doubled to stay integral.
    fn drawn_ends(sys: &PathSystem) -> HashSet<(i64, i64)> {
        let mut out = HashSet::new();
        for p in &sys.paths {
            for (a, b) in [p.start, p.end()] {
                out.insert((2 * (a + b), 2 * (a - b + 1) + 1));
            }
        }
        out
    }

    fn doubled(points: &[(f64, f64)]) -> HashSet<(i64, i64)> {
        points.iter().map(|&(x, y)| ((2.0 * x) as i64, (2.0 * y) as i64)).collect()
    }

    #[test]
    fn type1_example() {
        let t = build(
            &[
                (0, -7), (0, -5), (0, -1), (1, 0), (2, -3), (3, -4), (3, -2), (3, 0), (4, 1), (5, -2), (6, -1),
                (7, 2), (2, 0), (4, -2),
            ],
            &[
                (0, -3), (1, -4), (5, 2), (8, 3), (0, -2), (1, -5), (1, -1), (2, 2), (3, 3), (4, 0), (4, 4),
                (5, 1), (5, 3), (5, 5), (6, 4), (6, 6), (7, 1), (7, 5), (8, 2), (8, 4),
            ],
        );
        assert_eq!(t.counts(), [12, 2, 4, 16]);
        let params = PathFamilyParams::new(2, 1, 4, PathKind::Delannoy);
        let sys = phi(&t, &params).unwrap();
        assert_eq!(sys.step_counts(), [12, 2, 4]);
        assert!(sys.is_vertex_disjoint());
        let ends = doubled(&[(0., -6.5), (0., -4.5), (0., -2.5), (0., -0.5), (1., -5.5), (4., -2.5), (7., 0.5), (10., 3.5)]);
        assert_eq!(drawn_ends(&sys), ends);
    }

    #[test]
    fn type2_example() {
        let t = build(
            &[
                (0, -7), (0, -5), (0, -1), (2, -3), (2, -1), (3, -2), (3, 0), (4, -1), (8, 1), (1, -7), (1, -1),
                (7, -1),
            ],
            &[
                (0, -3), (1, -4), (3, -4), (4, 1), (5, 0), (6, 1), (9, 2), (0, -2), (1, -5), (1, 1), (2, 2),
                (3, -3), (3, 3), (4, -2), (4, 2), (4, 4), (5, -1), (5, 3), (5, 5), (6, 2), (6, 4), (6, 6), (7, 3),
                (7, 5), (8, 4), (9, 3),
            ],
        );
        assert_eq!(t.counts(), [9, 3, 7, 19]);
        let sys = phi_hat(&t, 2, 1, 4).unwrap();
        assert_eq!(sys.step_counts(), [9, 3, 7]);
        let ends = doubled(&[(0., -6.5), (0., -4.5), (0., -2.5), (0., -0.5), (2., -6.5), (5., -3.5), (8., -0.5), (11., 2.5)]);
        assert_eq!(drawn_ends(&sys), ends);
    }

    #[test]
    fn wrong_domain_is_rejected() {
        let lambda = Partition::arithmetic(1, 1, 2);
        let t = enumerate_tilings(&aztec_type1(&lambda)).unwrap().next().unwrap();
        assert!(matches!(
            phi(&t, &PathFamilyParams::new(1, 1, 2, PathKind::HDelannoy)),
            Err(Error::MalformedTiling(_))
        ));
    }

    #[test]
    fn bijective_on_small_families() {
        for kind in [PathKind::Delannoy, PathKind::HDelannoy] {
            for s in 0..3 {
                for r in 0..3 {
                    for n in 1..=3 {
                        let params = PathFamilyParams::new(s, r, n, kind);
                        let lambda = params.partition();
                        let domain = match kind {
                            PathKind::Delannoy => aztec_type1(&lambda),
                            PathKind::HDelannoy => aztec_type2(&lambda),
                        };
                        let mut images = HashSet::new();
                        for t in enumerate_tilings(&domain).unwrap() {
                            let sys = phi(&t, &params).unwrap();
                            let c = t.counts();
                            assert_eq!(sys.step_counts(), [c[0], c[1], c[2]]);
                            assert!(images.insert(sys), "not injective for {params:?}");
                        }
                        let all: HashSet<PathSystem> =
                            enumerate_path_systems(&params, DEFAULT_PATH_CAP).unwrap().into_iter().collect();
                        assert_eq!(images, all, "{params:?}");
                    }
                }
            }
        }
    }
}
