//! Cycles of every length `L ∈ [2m+1, n(2m+1)]` in the cylinder `C_{2m+1} × P_n`,
//! and their transport into `G₁ × G₂` along a Hamiltonian cycle of `G₁` and a
//! Hamiltonian path of `G₂`.
//!
//! Coordinates are `(c, p)`: `c` runs around the odd cycle (horizontal axis) and
//! `p` along the path (vertical axis). Every construction is an explicit vertex
//! sequence starting at `(0, 0)`; the closing edge back to `(0, 0)` is implicit.

use thiserror::Error;

use crate::graph::{GraphDescriptor, HostGraph};
use crate::verify::CycleCertificate;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProductError {
    #[error("cycle factor needs m >= 1 and path factor n >= 1 (got m={m}, n={n})")]
    BadShape { m: usize, n: usize },
    #[error("{what} = {value} is outside {min}..={max}")]
    OutOfRange { what: &'static str, value: usize, min: usize, max: usize },
    #[error("remainder {0} has the wrong parity for this construction")]
    WrongParity(usize),
    #[error("Hamiltonian cycle has length {got}, expected an odd length {expected}")]
    CycleLength { got: usize, expected: usize },
    #[error("Hamiltonian path has length {got}, expected {expected}")]
    PathLength { got: usize, expected: usize },
    #[error("{structure} repeats vertex {vertex}")]
    Repeated { structure: &'static str, vertex: u64 },
    #[error("{structure} uses the non-edge ({0}, {1})", .edge.0, .edge.1)]
    NonEdge { structure: &'static str, edge: (u64, u64) },
    #[error("first factor must have odd order at least 3, got {0}")]
    EvenFirstFactor(u64),
    #[error("first factor needs a certificate for every length 3..={0}")]
    MissingCycles(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductCoordinate {
    pub c: usize,
    pub p: usize,
}

const fn at(c: usize, p: usize) -> ProductCoordinate {
    ProductCoordinate { c, p }
}

/// `C_{2m+1} × P_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cylinder {
    pub m: usize,
    pub n: usize,
}

impl Cylinder {
    pub fn new(m: usize, n: usize) -> Result<Self, ProductError> {
        if m == 0 || n == 0 {
            return Err(ProductError::BadShape { m, n });
        }
        Ok(Self { m, n })
    }

    pub fn width(&self) -> usize {
        2 * self.m + 1
    }

    pub fn order(&self) -> usize {
        self.width() * self.n
    }

    pub fn contains(&self, a: ProductCoordinate) -> bool {
        a.c < self.width() && a.p < self.n
    }

    pub fn adjacent(&self, a: ProductCoordinate, b: ProductCoordinate) -> bool {
        let w = self.width();
        self.contains(a)
            && self.contains(b)
            && ((a.c == b.c && a.p.abs_diff(b.p) == 1) || (a.p == b.p && ((a.c + 1) % w == b.c || (b.c + 1) % w == a.c)))
    }

    /// True when `cycle` is a closed walk on distinct vertices of this cylinder.
    pub fn is_cycle(&self, cycle: &[ProductCoordinate]) -> bool {
        let mut seen = vec![false; self.order()];
        cycle.len() >= 3
            && cycle.iter().all(|&a| self.contains(a) && !std::mem::replace(&mut seen[a.p * self.width() + a.c], true))
            && cycle.windows(2).all(|e| self.adjacent(e[0], e[1]))
            && self.adjacent(cycle[cycle.len() - 1], cycle[0])
    }
}

/// `L = k(2m+1) + x` with `0 <= x <= 2m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LengthDecomposition {
    pub k: usize,
    pub x: usize,
}

impl LengthDecomposition {
    pub fn of(m: usize, n: usize, len: usize) -> Result<Self, ProductError> {
        let cyl = Cylinder::new(m, n)?;
        let w = cyl.width();
        if len < w || len > cyl.order() {
            return Err(ProductError::OutOfRange { what: "cycle length", value: len, min: w, max: cyl.order() });
        }
        Ok(Self { k: len / w, x: len % w })
    }
}

fn check_range(what: &'static str, value: usize, min: usize, max: usize) -> Result<(), ProductError> {
    if value < min || value > max {
        return Err(ProductError::OutOfRange { what, value, min, max });
    }
    Ok(())
}

/// Appends rows `top, top-1, ..., 0` as a boustrophedon over columns `1..=2m`,
/// starting leftward from column `2m` on row `top`.
fn snake_down(out: &mut Vec<ProductCoordinate>, m: usize, top: usize) {
    for (i, row) in (0..=top).rev().enumerate() {
        if i % 2 == 0 {
            out.extend((1..=2 * m).rev().map(|c| at(c, row)));
        } else {
            out.extend((1..=2 * m).map(|c| at(c, row)));
        }
    }
}

/// Cycle of length `k(2m+1)` on rows `0..k`: column 0 up, the top row across,
/// then the lower rows in alternating directions within columns `1..=2m`.
pub fn snake_cycle(m: usize, n: usize, k: usize) -> Result<Vec<ProductCoordinate>, ProductError> {
    Cylinder::new(m, n)?;
    check_range("k", k, 1, n)?;
    let mut out: Vec<ProductCoordinate> = (0..k).map(|p| at(0, p)).collect();
    out.extend((1..=2 * m).map(|c| at(c, k - 1)));
    if k >= 2 {
        snake_down(&mut out, m, k - 2);
    }
    Ok(out)
}

/// How the odd-remainder cycle returns to `(0, 0)` along row 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OddExit {
    /// Row 1 is walked rightward up to `α`; row 0 is walked leftward from `α` to `0`.
    /// Length `(k+1)(2m+1) - 2(2m - α)`.
    Leftward,
    /// Row 1 is walked leftward down to `α`; row 0 runs rightward from `α` to `2m`
    /// and wraps to `0`. Length `(k+1)(2m+1) - 2(α - 1)`.
    Wrapping,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddRemainderCycle {
    pub coords: Vec<ProductCoordinate>,
    /// Column where the walk leaves row 1 for row 0.
    pub alpha: usize,
    pub exit: OddExit,
}

/// Cycle of length `k(2m+1) + x` for odd `x`, on rows `0..=k`.
///
/// Rows `k, k-1, ..., 2` are snaked fully and row 1 is cut at the column `α`. The
/// direction row 1 is walked in depends on the parity of `k`, which fixes the exit:
/// odd `k` walks row 1 rightward and exits leftward with `α = m + i`; even `k` walks
/// it leftward and wraps with `α = m + 1 - i`, where `x = 2i + 1`.
pub fn cycle_odd_remainder(m: usize, n: usize, k: usize, x: usize) -> Result<OddRemainderCycle, ProductError> {
    Cylinder::new(m, n)?;
    check_range("k", k, 1, n - 1)?;
    check_range("x", x, 1, 2 * m - 1)?;
    if x % 2 == 0 {
        return Err(ProductError::WrongParity(x));
    }
    let i = (x - 1) / 2;
    // rows k, k-1, ... alternate right, left, ...; row 1 is k-1 rows below the top
    let row1_rightward = (k - 1) % 2 == 0;
    let (alpha, exit) = if row1_rightward { (m + i, OddExit::Leftward) } else { (m + 1 - i, OddExit::Wrapping) };

    let mut out: Vec<ProductCoordinate> = (0..=k).map(|p| at(0, p)).collect();
    for (j, row) in (1..=k).rev().enumerate() {
        let rightward = j % 2 == 0;
        let cols: Vec<usize> = match (rightward, row == 1) {
            (true, false) => (1..=2 * m).collect(),
            (false, false) => (1..=2 * m).rev().collect(),
            (true, true) => (1..=alpha).collect(),
            (false, true) => (alpha..=2 * m).rev().collect(),
        };
        out.extend(cols.into_iter().map(|c| at(c, row)));
    }
    match exit {
        OddExit::Leftward => out.extend((1..=alpha).rev().map(|c| at(c, 0))),
        OddExit::Wrapping => out.extend((alpha..=2 * m).map(|c| at(c, 0))),
    }
    Ok(OddRemainderCycle { coords: out, alpha, exit })
}

/// Cycle of length `k(2m+1) + x` for even `x = 2α`, on rows `0..=k`.
///
/// From `(0, k)` the walk zigzags between rows `k` and `k-1` through `α` teeth over
/// columns `1..=2α-1`, runs along row `k-1` to column `2m`, then snakes rows `k-2..0`.
pub fn cycle_even_remainder(m: usize, n: usize, k: usize, x: usize) -> Result<Vec<ProductCoordinate>, ProductError> {
    Cylinder::new(m, n)?;
    check_range("k", k, 1, n - 1)?;
    check_range("x", x, 2, 2 * m)?;
    if x % 2 == 1 {
        return Err(ProductError::WrongParity(x));
    }
    let alpha = x / 2;
    let mut out: Vec<ProductCoordinate> = (0..=k).map(|p| at(0, p)).collect();
    for tooth in 1..alpha {
        let (odd, even) = (2 * tooth - 1, 2 * tooth);
        out.extend([at(odd, k), at(odd, k - 1), at(even, k - 1), at(even, k)]);
    }
    out.extend([at(2 * alpha - 1, k), at(2 * alpha - 1, k - 1)]);
    out.extend((2 * alpha..=2 * m).map(|c| at(c, k - 1)));
    if k >= 2 {
        snake_down(&mut out, m, k - 2);
    }
    Ok(out)
}

/// An `L`-cycle in `C_{2m+1} × P_n` for any `2m+1 <= L <= n(2m+1)`.
pub fn product_cycle(m: usize, n: usize, len: usize) -> Result<Vec<ProductCoordinate>, ProductError> {
    let LengthDecomposition { k, x } = LengthDecomposition::of(m, n, len)?;
    match x {
        0 => snake_cycle(m, n, k),
        x if x % 2 == 1 => cycle_odd_remainder(m, n, k, x).map(|c| c.coords),
        x => cycle_even_remainder(m, n, k, x),
    }
}

fn check_structure(
    g: &dyn HostGraph,
    vertices: &[u64],
    structure: &'static str,
    closed: bool,
) -> Result<(), ProductError> {
    let mut seen = std::collections::HashSet::new();
    if let Some(&vertex) = vertices.iter().find(|&&v| !seen.insert(v)) {
        return Err(ProductError::Repeated { structure, vertex });
    }
    let closing = closed.then(|| (vertices[vertices.len() - 1], vertices[0]));
    vertices
        .windows(2)
        .map(|e| (e[0], e[1]))
        .chain(closing)
        .find(|&(u, v)| !g.adjacent(u, v))
        .map_or(Ok(()), |edge| Err(ProductError::NonEdge { structure, edge }))
}

/// Relabels a cylinder cycle as pairs `(ham_cycle[c], ham_path[p])` of `G₁ × G₂`
/// after checking both Hamiltonian structures.
pub fn lift_pairs(
    cycle: &[ProductCoordinate],
    g1: &dyn HostGraph,
    ham_cycle: &[u64],
    g2: &dyn HostGraph,
    ham_path: &[u64],
) -> Result<Vec<(u64, u64)>, ProductError> {
    let w = ham_cycle.len();
    if w < 3 || w % 2 == 0 || w as u64 != g1.order() {
        return Err(ProductError::CycleLength { got: w, expected: g1.order() as usize });
    }
    if ham_path.is_empty() || ham_path.len() as u64 != g2.order() {
        return Err(ProductError::PathLength { got: ham_path.len(), expected: g2.order() as usize });
    }
    check_structure(g1, ham_cycle, "Hamiltonian cycle", true)?;
    check_structure(g2, ham_path, "Hamiltonian path", false)?;
    cycle
        .iter()
        .map(|a| {
            if a.c >= w || a.p >= ham_path.len() {
                let (value, max) = if a.c >= w { (a.c, w - 1) } else { (a.p, ham_path.len() - 1) };
                return Err(ProductError::OutOfRange { what: "coordinate", value, min: 0, max });
            }
            Ok((ham_cycle[a.c], ham_path[a.p]))
        })
        .collect()
}

pub fn product_descriptor(g1: &dyn HostGraph, g2: &dyn HostGraph) -> GraphDescriptor {
    GraphDescriptor::Product { left: Box::new(g1.descriptor()), right: Box::new(g2.descriptor()) }
}

/// [`lift_pairs`] packaged as a certificate on `G₁ × G₂`.
pub fn lift(
    cycle: &[ProductCoordinate],
    g1: &dyn HostGraph,
    ham_cycle: &[u64],
    g2: &dyn HostGraph,
    ham_path: &[u64],
) -> Result<CycleCertificate, ProductError> {
    let w = g2.order();
    let vertices = lift_pairs(cycle, g1, ham_cycle, g2, ham_path)?
        .into_iter()
        .map(|(a, b)| a * w + b)
        .collect();
    Ok(CycleCertificate::new(product_descriptor(g1, g2), vertices, "product/lifted-cylinder"))
}

/// All cycle lengths of `G₁ × G₂` for odd `|G₁|`.
#[derive(Debug, Clone)]
pub struct ProductCertificates {
    /// One certificate per length `3..=|G₁||G₂|`; lengths up to `|G₁|` come from `G₁`.
    pub certificates: Vec<CycleCertificate>,
    /// The length `|G₁|` realized through the cylinder instead.
    pub overlap: CycleCertificate,
}

/// Certificates for every length of `G₁ × G₂`.
///
/// `g1_cycles[i]` must be a cycle of length `i + 3` in `G₁`; the last one serves as
/// the Hamiltonian cycle. Short cycles are placed in the copy of `G₁` at `ham_path[0]`.
pub fn product_pancyclic(
    g1: &dyn HostGraph,
    g1_cycles: &[Vec<u64>],
    g2: &dyn HostGraph,
    ham_path: &[u64],
) -> Result<ProductCertificates, ProductError> {
    let order1 = g1.order();
    if order1 < 3 || order1 % 2 == 0 {
        return Err(ProductError::EvenFirstFactor(order1));
    }
    if g1_cycles.len() as u64 != order1 - 2 || g1_cycles.iter().zip(3..).any(|(c, k)| c.len() != k) {
        return Err(ProductError::MissingCycles(order1));
    }
    let ham_cycle = g1_cycles.last().expect("order >= 3");
    let m = (order1 as usize - 1) / 2;
    let n = ham_path.len();
    let w = g2.order();
    let desc = product_descriptor(g1, g2);

    let mut certificates = Vec::with_capacity((order1 * w) as usize);
    for cycle in g1_cycles {
        check_structure(g1, cycle, "first-factor cycle", true)?;
        let vertices = cycle.iter().map(|&a| a * w + ham_path.first().copied().unwrap_or(0)).collect();
        certificates.push(CycleCertificate::new(desc.clone(), vertices, "product/first-factor"));
    }
    let overlap = lift(&product_cycle(m, n, order1 as usize)?, g1, ham_cycle, g2, ham_path)?;
    for len in order1 as usize + 1..=(order1 * w) as usize {
        certificates.push(lift(&product_cycle(m, n, len)?, g1, ham_cycle, g2, ham_path)?);
    }
    Ok(ProductCertificates { certificates, overlap })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use crate::graph::{CayleyGraph, CycleGraph, PathGraph};
    use crate::verify::check_cycle;

    fn verified(m: usize, n: usize, coords: &[ProductCoordinate]) -> bool {
        Cylinder::new(m, n).unwrap().is_cycle(coords)
    }

    #[test]
    fn snake_examples() {
        assert_eq!(snake_cycle(1, 1, 1).unwrap(), vec![at(0, 0), at(1, 0), at(2, 0)]);
        let ham = snake_cycle(2, 3, 3).unwrap();
        assert_eq!(ham.len(), 15);
        assert!(verified(2, 3, &ham));
        assert!(snake_cycle(2, 3, 4).is_err());
        assert!(snake_cycle(0, 3, 1).is_err());
    }

    #[test]
    fn snake_closing_edge_depends_on_parity() {
        assert_eq!(*snake_cycle(3, 4, 4).unwrap().last().unwrap(), at(1, 0));
        assert_eq!(*snake_cycle(3, 4, 3).unwrap().last().unwrap(), at(6, 0));
    }

    #[test]
    fn snake_is_hamiltonian() {
        for m in 1..=5 {
            for n in 1..=6 {
                let c = snake_cycle(m, n, n).unwrap();
                assert_eq!(c.len(), n * (2 * m + 1));
                assert!(verified(m, n, &c));
            }
        }
    }

    #[test]
    fn odd_remainder_examples() {
        let c = cycle_odd_remainder(2, 3, 1, 1).unwrap();
        assert_eq!(c.coords.len(), 6);
        assert!(verified(2, 3, &c.coords));
        assert!(matches!(cycle_odd_remainder(2, 3, 1, 2), Err(ProductError::WrongParity(2))));
        assert!(cycle_odd_remainder(2, 3, 3, 1).is_err());
    }

    #[test]
    fn odd_remainder_length_formulas() {
        for m in 1..=5 {
            for n in 2..=6 {
                for k in 1..n {
                    for x in (1..2 * m).step_by(2) {
                        let c = cycle_odd_remainder(m, n, k, x).unwrap();
                        let (w, a) = (2 * m + 1, c.alpha);
                        let expected = match c.exit {
                            OddExit::Leftward => (k + 1) * w - 2 * (2 * m - a),
                            OddExit::Wrapping => (k + 1) * w - 2 * (a - 1),
                        };
                        assert_eq!(c.coords.len(), expected);
                        assert_eq!(c.coords.len(), k * w + x);
                        assert_eq!(c.exit == OddExit::Leftward, k % 2 == 1);
                        assert!(verified(m, n, &c.coords), "m={m} n={n} k={k} x={x}");
                    }
                }
            }
        }
    }

    #[test]
    fn even_remainder_examples() {
        let c = cycle_even_remainder(2, 3, 1, 2).unwrap();
        assert_eq!(c.len(), 7);
        assert!(verified(2, 3, &c));
        for x in [2, 4, 6] {
            for k in 1..=3 {
                let c = cycle_even_remainder(3, 4, k, x).unwrap();
                assert_eq!(c.len(), k * 7 + x);
                assert!(verified(3, 4, &c));
            }
        }
        assert!(matches!(cycle_even_remainder(3, 4, 1, 3), Err(ProductError::WrongParity(3))));
    }

    #[test]
    fn even_remainder_full_teeth_boundary() {
        // α = m: the teeth reach column 2m-1 and row k-1 ends after a single step
        for m in 1..=5 {
            for k in 1..=4 {
                let c = cycle_even_remainder(m, 5, k, 2 * m).unwrap();
                assert_eq!(c.len(), k * (2 * m + 1) + 2 * m);
                assert!(verified(m, 5, &c));
            }
        }
    }

    #[test]
    fn product_cycle_examples() {
        let c = product_cycle(1, 4, 12).unwrap();
        assert_eq!(c.len(), 12);
        assert!(verified(1, 4, &c));
        assert_eq!(product_cycle(2, 2, 5).unwrap(), (0..5).map(|c| at(c, 0)).collect::<Vec<_>>());
        assert_eq!(LengthDecomposition::of(6, 5, 38).unwrap(), LengthDecomposition { k: 2, x: 12 });
        assert!(verified(6, 5, &product_cycle(6, 5, 38).unwrap()));
        assert!(product_cycle(2, 2, 4).is_err());
        assert!(product_cycle(2, 2, 11).is_err());
    }

    #[test]
    fn every_length_in_small_cylinders() {
        for m in 1..=5 {
            for n in 1..=6 {
                for len in 2 * m + 1..=n * (2 * m + 1) {
                    let c = product_cycle(m, n, len).unwrap();
                    assert_eq!(c.len(), len);
                    assert!(verified(m, n, &c), "m={m} n={n} L={len}");
                }
            }
        }
    }

    #[test]
    fn identity_lift_keeps_coordinates() {
        let (m, n) = (2, 3);
        let coords = product_cycle(m, n, 11).unwrap();
        let ham_cycle: Vec<u64> = (0..5).collect();
        let ham_path: Vec<u64> = (0..3).collect();
        let pairs = lift_pairs(&coords, &CycleGraph(5), &ham_cycle, &PathGraph(3), &ham_path).unwrap();
        let expected: Vec<(u64, u64)> = coords.iter().map(|a| (a.c as u64, a.p as u64)).collect();
        assert_eq!(pairs, expected);
    }

    #[test]
    fn lift_into_paley_five_times_path() {
        let p5 = CayleyGraph::cyclic(5, [1, 4]).unwrap();
        let ham_cycle = [0, 1, 2, 3, 4];
        let ham_path = [0, 1, 2];
        for len in 5..=15 {
            let coords = product_cycle(2, 3, len).unwrap();
            let cert = lift(&coords, &p5, &ham_cycle, &PathGraph(3), &ham_path).unwrap();
            assert_eq!(cert.k, len);
            assert!(check_cycle(&cert).unwrap().is_ok(), "L={len}");
        }
    }

    #[test]
    fn lift_rejects_broken_structures() {
        let coords = product_cycle(2, 3, 6).unwrap();
        let p5 = CayleyGraph::cyclic(5, [1, 4]).unwrap();
        assert_eq!(
            lift(&coords, &p5, &[0, 2, 4, 1, 3], &PathGraph(3), &[0, 1, 2]).unwrap_err(),
            ProductError::NonEdge { structure: "Hamiltonian cycle", edge: (0, 2) }
        );
        assert_eq!(
            lift(&coords, &p5, &[0, 1, 2, 3, 4], &PathGraph(3), &[0, 2, 1]).unwrap_err(),
            ProductError::NonEdge { structure: "Hamiltonian path", edge: (0, 2) }
        );
        assert!(matches!(
            lift(&coords, &p5, &[0, 1, 2, 3], &PathGraph(3), &[0, 1, 2]),
            Err(ProductError::CycleLength { .. })
        ));
        assert!(matches!(
            lift(&coords, &p5, &[0, 1, 2, 3, 4], &PathGraph(3), &[0, 1, 1]),
            Err(ProductError::Repeated { .. })
        ));
    }

    #[test]
    fn triangular_prism_is_pancyclic() {
        let c3 = CycleGraph(3);
        let out = product_pancyclic(&c3, &[vec![0, 1, 2]], &PathGraph(2), &[0, 1]).unwrap();
        let lengths: Vec<usize> = out.certificates.iter().map(|c| c.k).collect();
        assert_eq!(lengths, vec![3, 4, 5, 6]);
        assert!(out.certificates.iter().all(|c| check_cycle(c).unwrap().is_ok()));
        assert_eq!(out.overlap.k, 3);
        assert!(check_cycle(&out.overlap).unwrap().is_ok());
    }

    #[test]
    fn product_pancyclic_prerequisites() {
        let k4 = CayleyGraph::cyclic(4, [1, 2, 3]).unwrap();
        assert_eq!(
            product_pancyclic(&k4, &[vec![0, 1, 2], vec![0, 1, 2, 3]], &PathGraph(2), &[0, 1]).unwrap_err(),
            ProductError::EvenFirstFactor(4)
        );
        let c5 = CycleGraph(5);
        assert_eq!(
            product_pancyclic(&c5, &[vec![0, 1, 2, 3, 4]], &PathGraph(2), &[0, 1]).unwrap_err(),
            ProductError::MissingCycles(5)
        );
    }

    proptest! {
        #[test]
        fn every_length_is_a_cycle(m in 1usize..9, n in 1usize..9, t in 0.0f64..1.0) {
            let w = 2 * m + 1;
            let len = w + ((n * w - w) as f64 * t) as usize;
            let c = product_cycle(m, n, len).unwrap();
            prop_assert_eq!(c.len(), len);
            prop_assert!(verified(m, n, &c));
        }

        #[test]
        fn lift_keeps_length(m in 1usize..5, n in 1usize..5, t in 0.0f64..1.0, rot in 0usize..9) {
            let w = 2 * m + 1;
            let len = w + ((n * w - w) as f64 * t) as usize;
            let mut ham_cycle: Vec<u64> = (0..w as u64).collect();
            ham_cycle.rotate_left(rot % w);
            let ham_path: Vec<u64> = (0..n as u64).rev().collect();
            let cert = lift(&product_cycle(m, n, len).unwrap(), &CycleGraph(w as u64), &ham_cycle, &PathGraph(n as u64), &ham_path).unwrap();
            prop_assert_eq!(cert.k, len);
            prop_assert!(check_cycle(&cert).unwrap().is_ok());
        }
    }
}
