//! Cayley graphs over additive groups, stored as (group, connection set).
//!
//! Vertices are canonical integers: residues for `Z/m`, base-`p` encodings for
//! `GF(p^n)` and for the elementary abelian group `(Z/p)^d`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ff::{gcd, Field, FieldError, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("connection set contains the identity")]
    ContainsIdentity,
    #[error("connection set is not closed under negation: {element} is present but {negation} is not")]
    NotSymmetric { element: u64, negation: u64 },
    #[error("connection set does not generate the group")]
    NotGenerating,
    #[error("element {0} is outside the group")]
    OutOfRange(u64),
    #[error("common neighbours of a vertex with itself are undefined")]
    SameVertex,
}

/// Additive group underlying a Cayley graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Group {
    Cyclic { m: u64 },
    Field(FieldSpec),
    /// `(Z/p)^d`, the additive group of a `d`-dimensional subspace.
    Elementary { p: u64, d: u32 },
}

impl Group {
    pub fn order(&self) -> u64 {
        match self {
            Group::Cyclic { m } => *m,
            Group::Field(spec) => spec.order(),
            Group::Elementary { p, d } => p.pow(*d),
        }
    }

    /// `(p, digits)` when the group is elementary abelian.
    fn digits(&self) -> Option<(u64, u32)> {
        match self {
            Group::Cyclic { .. } => None,
            Group::Field(spec) => Some((spec.p, spec.n)),
            Group::Elementary { p, d } => Some((*p, *d)),
        }
    }

    /// Order of the group when it is cyclic (including prime fields).
    pub fn cyclic_order(&self) -> Option<u64> {
        match self.digits() {
            None => Some(self.order()),
            Some((p, 1)) => Some(p),
            Some(_) => None,
        }
    }

    fn digitwise(&self, a: u64, b: u64, op: impl Fn(u64, u64, u64) -> u64) -> u64 {
        match self.digits() {
            None => op(a, b, self.order()),
            Some((p, d)) => {
                let (mut a, mut b) = (a, b);
                let mut out = 0;
                let mut place = 1;
                for _ in 0..d {
                    out += op(a % p, b % p, p) * place;
                    a /= p;
                    b /= p;
                    place *= p;
                }
                out
            }
        }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        self.digitwise(a, b, |x, y, m| (x + y) % m)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.digitwise(a, b, |x, y, m| (x + m - y) % m)
    }

    pub fn neg(&self, a: u64) -> u64 {
        self.sub(0, a)
    }

    fn is_generated_by(&self, set: &[u64]) -> bool {
        match self.digits() {
            None => set.iter().fold(self.order(), |g, &s| gcd(g, s)) == 1,
            Some((p, d)) => {
                let vectors: Vec<Vec<u64>> = set
                    .iter()
                    .map(|&s| {
                        let mut s = s;
                        (0..d)
                            .map(|_| {
                                let r = s % p;
                                s /= p;
                                r
                            })
                            .collect()
                    })
                    .collect();
                rank_mod_p(vectors, p) == d as usize
            }
        }
    }
}

/// Rank of a list of vectors over GF(p), by Gaussian elimination.
pub(crate) fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = mod_pow(rows[rank][col], p - 2, p);
        for c in 0..width {
            rows[rank][c] = rows[rank][c] * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in 0..width {
                    rows[r][c] = (rows[r][c] + p * p - factor * rows[rank][c]) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub(crate) fn mod_pow(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

/// Self-describing graph reference carried by certificates.
///
/// A verifier rebuilds adjacency from this value alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GraphDescriptor {
    Paley { p: u64, n: u32, modulus: Vec<u64> },
    GeneralizedPaley { p: u64, n: u32, modulus: Vec<u64>, power: u64 },
    CyclicCayley { m: u64, connection_set: Vec<u64> },
    FieldCayley { p: u64, n: u32, modulus: Vec<u64>, connection_set: Vec<u64> },
    ElementaryCayley { p: u64, d: u32, connection_set: Vec<u64> },
    Cycle { order: u64 },
    Path { order: u64 },
    Complete { order: u64 },
    /// Cartesian product; vertex `(a, b)` is encoded as `a * |right| + b`.
    Product { left: Box<GraphDescriptor>, right: Box<GraphDescriptor> },
}

/// Minimal adjacency oracle shared by the constructions.
pub trait HostGraph {
    fn order(&self) -> u64;
    fn adjacent(&self, u: u64, v: u64) -> bool;
    fn descriptor(&self) -> GraphDescriptor;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleGraph(pub u64);

impl HostGraph for CycleGraph {
    fn order(&self) -> u64 {
        self.0
    }
    fn adjacent(&self, u: u64, v: u64) -> bool {
        let n = self.0;
        u < n && v < n && u != v && ((u + 1) % n == v || (v + 1) % n == u)
    }
    fn descriptor(&self) -> GraphDescriptor {
        GraphDescriptor::Cycle { order: self.0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathGraph(pub u64);

impl HostGraph for PathGraph {
    fn order(&self) -> u64 {
        self.0
    }
    fn adjacent(&self, u: u64, v: u64) -> bool {
        u < self.0 && v < self.0 && u.abs_diff(v) == 1
    }
    fn descriptor(&self) -> GraphDescriptor {
        GraphDescriptor::Path { order: self.0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompleteGraph(pub u64);

impl HostGraph for CompleteGraph {
    fn order(&self) -> u64 {
        self.0
    }
    fn adjacent(&self, u: u64, v: u64) -> bool {
        u < self.0 && v < self.0 && u != v
    }
    fn descriptor(&self) -> GraphDescriptor {
        GraphDescriptor::Complete { order: self.0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Paley,
    GeneralizedPaley(u64),
    Plain,
}

/// `Cay(H, S)` with `u ~ v` iff `u - v` is in `S`.
#[derive(Debug, Clone)]
pub struct CayleyGraph {
    group: Group,
    connection_set: Vec<u64>,
    member: Vec<bool>,
    label: String,
    kind: Kind,
}

/// Strongly regular parameters `(v, k, lambda, mu)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SrgParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgParams {
    /// Parameters of the Paley graph of order `q`.
    pub fn paley(q: u64) -> Self {
        Self { v: q, k: (q - 1) / 2, lambda: (q - 5) / 4, mu: (q - 1) / 4 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SrgFailure {
    NotRegular { vertex: u64, degree: u64, expected: u64 },
    /// Two pairs in the same adjacency class disagree on their common-neighbour count.
    Inconsistent { adjacent: bool, pair: (u64, u64), count: u64, expected: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TripleCondition {
    /// Every independent triple satisfies `|N(x) ∪ N(y)| + d(z) >= n`.
    Holds,
    Violated { x: u64, y: u64, z: u64, union: u64, degree: u64 },
}

impl TripleCondition {
    pub fn holds(&self) -> bool {
        matches!(self, TripleCondition::Holds)
    }
}

#[derive(Serialize)]
struct JsonDescriptor<'a> {
    group: &'a Group,
    connection_set: &'a [u64],
    label: &'a str,
}

impl CayleyGraph {
    pub fn new(group: Group, connection_set: impl IntoIterator<Item = u64>, label: impl Into<String>) -> Result<Self, GraphError> {
        Self::with_kind(group, connection_set, label.into(), Kind::Plain)
    }

    /// `Cay(Z/m, S)`.
    pub fn cyclic(m: u64, connection_set: impl IntoIterator<Item = u64>) -> Result<Self, GraphError> {
        if m < 2 {
            return Err(GraphError::InvalidParameter(format!("group order {m} is too small")));
        }
        let set: BTreeSet<u64> = connection_set.into_iter().collect();
        let label = format!("Cay(Z/{m}, {:?})", set);
        Self::new(Group::Cyclic { m }, set, label)
    }

    fn with_kind(group: Group, connection_set: impl IntoIterator<Item = u64>, label: String, kind: Kind) -> Result<Self, GraphError> {
        let order = group.order();
        let set: BTreeSet<u64> = connection_set.into_iter().collect();
        let mut member = vec![false; order as usize];
        for &s in &set {
            if s >= order {
                return Err(GraphError::OutOfRange(s));
            }
            member[s as usize] = true;
        }
        if member[0] {
            return Err(GraphError::ContainsIdentity);
        }
        for &s in &set {
            let negation = group.neg(s);
            if !member[negation as usize] {
                return Err(GraphError::NotSymmetric { element: s, negation });
            }
        }
        let connection_set: Vec<u64> = set.into_iter().collect();
        if !group.is_generated_by(&connection_set) {
            return Err(GraphError::NotGenerating);
        }
        Ok(Self { group, connection_set, member, label, kind })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn connection_set(&self) -> &[u64] {
        &self.connection_set
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn degree(&self) -> u64 {
        self.connection_set.len() as u64
    }

    pub fn contains_difference(&self, d: u64) -> bool {
        self.member.get(d as usize).copied().unwrap_or(false)
    }

    /// Neighbours of `u`, sorted.
    pub fn neighbors(&self, u: u64) -> Vec<u64> {
        let mut out: Vec<u64> = self.connection_set.iter().map(|&s| self.group.add(u, s)).collect();
        out.sort_unstable();
        out
    }

    pub fn common_neighbors(&self, u: u64, v: u64) -> Result<Vec<u64>, GraphError> {
        let order = self.group.order();
        if u >= order {
            return Err(GraphError::OutOfRange(u));
        }
        if v >= order {
            return Err(GraphError::OutOfRange(v));
        }
        if u == v {
            return Err(GraphError::SameVertex);
        }
        Ok(self.neighbors(u).into_iter().filter(|&w| self.adjacent(v, w)).collect())
    }

    pub fn verify_srg(&self) -> Result<SrgParams, SrgFailure> {
        let v = self.group.order();
        let mut degree = None;
        for u in 0..v {
            let d = (0..v).filter(|&w| self.adjacent(u, w)).count() as u64;
            match degree {
                None => degree = Some(d),
                Some(expected) if expected != d => {
                    return Err(SrgFailure::NotRegular { vertex: u, degree: d, expected });
                }
                _ => {}
            }
        }
        let k = degree.unwrap_or(0);
        let mut lambda = None;
        let mut mu = None;
        for u in 0..v {
            let nu: Vec<u64> = (0..v).filter(|&w| self.adjacent(u, w)).collect();
            for w in u + 1..v {
                let count = nu.iter().filter(|&&x| self.adjacent(w, x)).count() as u64;
                let adjacent = self.adjacent(u, w);
                let slot = if adjacent { &mut lambda } else { &mut mu };
                match *slot {
                    None => *slot = Some(count),
                    Some(expected) if expected != count => {
                        return Err(SrgFailure::Inconsistent { adjacent, pair: (u, w), count, expected });
                    }
                    _ => {}
                }
            }
        }
        Ok(SrgParams { v, k, lambda: lambda.unwrap_or(0), mu: mu.unwrap_or(0) })
    }

    /// Checks `|N(x) ∪ N(y)| + d(z) >= n` over every independent triple and every
    /// assignment of the roles `x, y, z`.
    pub fn check_triple_condition(&self) -> TripleCondition {
        let n = self.group.order();
        let neighborhoods: Vec<Vec<u64>> = (0..n).map(|u| self.neighbors(u)).collect();
        let union = |x: u64, y: u64| {
            let common = neighborhoods[x as usize].iter().filter(|&&w| self.adjacent(y, w)).count();
            (neighborhoods[x as usize].len() + neighborhoods[y as usize].len() - common) as u64
        };
        for a in 0..n {
            for b in a + 1..n {
                if self.adjacent(a, b) {
                    continue;
                }
                for c in b + 1..n {
                    if self.adjacent(a, c) || self.adjacent(b, c) {
                        continue;
                    }
                    for (x, y, z) in [(a, b, c), (a, c, b), (b, c, a)] {
                        let u = union(x, y);
                        let d = neighborhoods[z as usize].len() as u64;
                        if u + d < n {
                            return TripleCondition::Violated { x, y, z, union: u, degree: d };
                        }
                    }
                }
            }
        }
        TripleCondition::Holds
    }

    /// One `u v` line per edge with `u < v`, in lexicographic order.
    pub fn edge_list(&self) -> String {
        let mut out = String::new();
        for u in 0..self.group.order() {
            for v in self.neighbors(u) {
                if u < v {
                    writeln!(out, "{u} {v}").expect("write to string");
                }
            }
        }
        out
    }

    /// `{group, connection_set, label}` as JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&JsonDescriptor {
            group: &self.group,
            connection_set: &self.connection_set,
            label: &self.label,
        })
        .expect("serializable")
    }
}

impl HostGraph for CayleyGraph {
    fn order(&self) -> u64 {
        self.group.order()
    }

    fn adjacent(&self, u: u64, v: u64) -> bool {
        let order = self.group.order();
        u < order && v < order && self.member[self.group.sub(u, v) as usize]
    }

    fn descriptor(&self) -> GraphDescriptor {
        match (&self.group, self.kind) {
            (Group::Field(spec), Kind::Paley) => GraphDescriptor::Paley {
                p: spec.p,
                n: spec.n,
                modulus: spec.modulus.clone(),
            },
            (Group::Field(spec), Kind::GeneralizedPaley(power)) => GraphDescriptor::GeneralizedPaley {
                p: spec.p,
                n: spec.n,
                modulus: spec.modulus.clone(),
                power,
            },
            (Group::Field(spec), _) => GraphDescriptor::FieldCayley {
                p: spec.p,
                n: spec.n,
                modulus: spec.modulus.clone(),
                connection_set: self.connection_set.clone(),
            },
            (Group::Cyclic { m }, _) => GraphDescriptor::CyclicCayley {
                m: *m,
                connection_set: self.connection_set.clone(),
            },
            (Group::Elementary { p, d }, _) => GraphDescriptor::ElementaryCayley {
                p: *p,
                d: *d,
                connection_set: self.connection_set.clone(),
            },
        }
    }
}

/// The Paley graph `P(q) = Cay(GF(q), squares)`; requires `q ≡ 1 (mod 4)`.
pub fn paley(spec: &FieldSpec) -> Result<CayleyGraph, GraphError> {
    let q = spec.order();
    if q % 4 != 1 {
        return Err(GraphError::InvalidParameter(format!(
            "P({q}) needs q ≡ 1 (mod 4); the squares of GF({q}) are not closed under negation"
        )));
    }
    let field = Field::new(spec.clone());
    let squares = field.squares().iter().map(|x| field.encode(x)).collect::<Vec<_>>();
    CayleyGraph::with_kind(Group::Field(spec.clone()), squares, format!("P({q})"), Kind::Paley)
}

/// `Cay(GF(q), k-th powers)`, when that set is symmetric and generating.
pub fn generalized_paley(spec: &FieldSpec, k: u64) -> Result<CayleyGraph, GraphError> {
    let q = spec.order();
    if k < 2 {
        return Err(GraphError::InvalidParameter(format!("power index {k} must be at least 2")));
    }
    let field = Field::new(spec.clone());
    let powers = field.kth_powers(k).iter().map(|x| field.encode(x)).collect::<Vec<_>>();
    let kind = if k == 2 { Kind::Paley } else { Kind::GeneralizedPaley(k) };
    let label = if k == 2 { format!("P({q})") } else { format!("GP({q},{k})") };
    CayleyGraph::with_kind(Group::Field(spec.clone()), powers, label, kind)
}
