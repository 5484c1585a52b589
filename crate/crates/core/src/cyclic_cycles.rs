//! Cycles of every length in `Cay(Z/m, S)` when `S` contains a generator, every pair
//! of vertices has a common neighbour and some pair has two.
//!
//! After relabelling so that `1 ∈ S`, the path `0, 1, ..., n-2` is closed into an
//! `n`-cycle through a common neighbour `α` of `0` and `n-2` (the α-splice).

use thiserror::Error;

use crate::ff::gcd;
use crate::graph::{CayleyGraph, GraphDescriptor, GraphError, HostGraph};
use crate::verify::CycleCertificate;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("graph is not a Cayley graph of a cyclic group")]
    NotCyclic,
    #[error("connection set contains no generator of Z/{0}")]
    NoGenerator(u64),
    #[error("vertices {0} and {1} have no common neighbour")]
    NoCommonNeighbor(u64, u64),
    #[error("no pair of vertices has two common neighbours")]
    NoDoubleCommonNeighbor,
    #[error("cycle length {k} is outside {min}..={max}")]
    LengthOutOfRange { k: u64, min: u64, max: u64 },
    #[error("{alpha} is not a common neighbour of 0 and {target}")]
    NotCommonNeighbor { alpha: u64, target: u64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `Cay(Z/m, S')` with `1 ∈ S'`, isomorphic to the input through `v ↦ v·x⁻¹`.
#[derive(Debug, Clone)]
pub struct NormalizedCyclicCayley {
    m: u64,
    s: Vec<u64>,
    member: Vec<bool>,
    /// The generator `x ∈ S` that was scaled to 1.
    sigma_inverse: u64,
}

impl NormalizedCyclicCayley {
    pub fn order(&self) -> u64 {
        self.m
    }

    pub fn connection_set(&self) -> &[u64] {
        &self.s
    }

    pub fn generator(&self) -> u64 {
        self.sigma_inverse
    }

    pub fn adjacent(&self, u: u64, v: u64) -> bool {
        u != v && self.member[((u + self.m - v) % self.m) as usize]
    }

    /// Common neighbours of `u != v`, ascending.
    pub fn common_neighbors(&self, u: u64, v: u64) -> Vec<u64> {
        let mut out: Vec<u64> = self
            .s
            .iter()
            .map(|&s| (u + s) % self.m)
            .filter(|&w| self.adjacent(v, w))
            .collect();
        out.sort_unstable();
        out
    }

    /// Label in the original graph of a normalized vertex.
    pub fn to_original(&self, v: u64) -> u64 {
        v * self.sigma_inverse % self.m
    }

    pub fn descriptor(&self) -> GraphDescriptor {
        GraphDescriptor::CyclicCayley { m: self.m, connection_set: self.s.clone() }
    }
}

pub fn normalize(g: &CayleyGraph) -> Result<NormalizedCyclicCayley, CycleError> {
    let m = g.group().cyclic_order().ok_or(CycleError::NotCyclic)?;
    let x = g
        .connection_set()
        .iter()
        .copied()
        .find(|&s| gcd(s, m) == 1)
        .ok_or(CycleError::NoGenerator(m))?;
    let x_inv = unit_inverse(x, m);
    let mut s: Vec<u64> = g.connection_set().iter().map(|&v| v * x_inv % m).collect();
    s.sort_unstable();
    let mut member = vec![false; m as usize];
    for &v in &s {
        member[v as usize] = true;
    }
    Ok(NormalizedCyclicCayley { m, s, member, sigma_inverse: x })
}

fn unit_inverse(x: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    // extended Euclid; m may be composite so Fermat does not apply
    let (mut r0, mut r1) = (m as i64, x as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    t0.rem_euclid(m as i64) as u64
}

/// `C_3` as `[0, 1, β]` and `C_4` as `[u, β₁, v, β₂]` from common neighbours.
pub fn cycle_small(g: &NormalizedCyclicCayley, k: u64) -> Result<CycleCertificate, CycleError> {
    let vertices = match k {
        3 => {
            let beta = *g.common_neighbors(0, 1).first().ok_or(CycleError::NoCommonNeighbor(0, 1))?;
            vec![0, 1, beta]
        }
        4 => {
            let (u, v, c) = (0..g.m)
                .flat_map(|u| (u + 1..g.m).map(move |v| (u, v)))
                .map(|(u, v)| (u, v, g.common_neighbors(u, v)))
                .find(|(_, _, c)| c.len() >= 2)
                .ok_or(CycleError::NoDoubleCommonNeighbor)?;
            vec![u, c[0], v, c[1]]
        }
        _ => return Err(CycleError::LengthOutOfRange { k, min: 3, max: 4 }),
    };
    let tag = if k == 3 { "cyclic/triangle" } else { "cyclic/double-common-neighbor" };
    Ok(CycleCertificate::new(g.descriptor(), vertices, tag))
}

/// `n`-cycle through the smallest common neighbour `α` of `0` and `n-2`,
/// replacing `α = 1` by `n-3`.
pub fn cycle_alpha_splice(g: &NormalizedCyclicCayley, n: u64) -> Result<CycleCertificate, CycleError> {
    check_splice_length(g, n)?;
    let alpha = *g.common_neighbors(0, n - 2).first().ok_or(CycleError::NoCommonNeighbor(0, n - 2))?;
    cycle_alpha_splice_with(g, n, alpha)
}

fn check_splice_length(g: &NormalizedCyclicCayley, n: u64) -> Result<(), CycleError> {
    if n < 5 || n > g.m {
        return Err(CycleError::LengthOutOfRange { k: n, min: 5, max: g.m });
    }
    Ok(())
}

/// α-splice with a caller-chosen common neighbour `alpha` of `0` and `n-2`.
pub fn cycle_alpha_splice_with(g: &NormalizedCyclicCayley, n: u64, alpha: u64) -> Result<CycleCertificate, CycleError> {
    check_splice_length(g, n)?;
    let top = n - 2;
    if alpha >= g.m || !g.adjacent(0, alpha) || !g.adjacent(top, alpha) {
        return Err(CycleError::NotCommonNeighbor { alpha, target: top });
    }
    let (alpha, tag) = if alpha == 1 {
        // 1 - (n-2) ∈ S, so n-3 = -(1 - (n-2)) is adjacent to 0, and to n-2 via 1 ∈ S
        (n - 3, "cyclic/alpha-interior-substituted")
    } else if alpha > top {
        let mut vertices: Vec<u64> = (0..=top).collect();
        vertices.push(alpha);
        return Ok(CycleCertificate::new(g.descriptor(), vertices, "cyclic/alpha-outer"));
    } else {
        (alpha, "cyclic/alpha-interior")
    };
    // 0, α, α-1, ..., 2, α+2, ..., n-1, α+1, 1
    let mut vertices = Vec::with_capacity(n as usize);
    vertices.push(0);
    vertices.extend((2..=alpha).rev());
    vertices.extend(alpha + 2..n);
    vertices.push(alpha + 1);
    vertices.push(1);
    Ok(CycleCertificate::new(g.descriptor(), vertices, tag))
}

/// Checks that every pair has a common neighbour and some pair has two.
///
/// Common-neighbour counts of a Cayley graph depend only on the difference of the pair.
pub fn check_hypotheses(g: &NormalizedCyclicCayley) -> Result<(), CycleError> {
    let mut some_double = false;
    for d in 1..g.m {
        let count = g.common_neighbors(0, d).len();
        if count == 0 {
            return Err(CycleError::NoCommonNeighbor(0, d));
        }
        some_double |= count >= 2;
    }
    if some_double {
        Ok(())
    } else {
        Err(CycleError::NoDoubleCommonNeighbor)
    }
}

/// Certificate for `C_k` in the normalized graph.
pub fn normalized_cycle(g: &NormalizedCyclicCayley, k: u64) -> Result<CycleCertificate, CycleError> {
    match k {
        3 | 4 => cycle_small(g, k),
        _ => cycle_alpha_splice(g, k),
    }
}

/// Maps a certificate on the normalized graph back to the labels of `g`.
pub fn denormalize(norm: &NormalizedCyclicCayley, g: &CayleyGraph, cert: &CycleCertificate) -> CycleCertificate {
    let vertices = cert.vertices.iter().map(|&v| norm.to_original(v)).collect();
    CycleCertificate::new(g.descriptor(), vertices, cert.construction.clone())
}

/// One certificate per length `3..=m`, in the labels of `g`.
pub fn pancyclic_certificates(g: &CayleyGraph) -> Result<Vec<CycleCertificate>, CycleError> {
    let norm = normalize(g)?;
    check_hypotheses(&norm)?;
    (3..=norm.m)
        .map(|k| normalized_cycle(&norm, k).map(|c| denormalize(&norm, g, &c)))
        .collect()
}
